#!/usr/bin/env python3
"""Reference values of the entropy function Phi and the relative entropy
H(x, y) = Phi(x) - Phi(y) - Phi'(y) (x - y) for the three statistics, at 40
digits. Phi' is the inverse of the statistics function; Phi for F_{1/2} is
normalized by Phi(F(0)) = 0 and computed as int_0^eta t F'(t) dt.

Prints Rust tuples `(kind, x, y, H)` for freezing into tests.
"""

import mpmath as mp

mp.mp.dps = 40


def fd_half(eta):
    return mp.re(-mp.polylog(mp.mpf(3) / 2, -mp.exp(eta)))


def fd_half_prime(eta):
    return mp.re(-mp.polylog(mp.mpf(1) / 2, -mp.exp(eta)))


def inverse(f, y):
    return mp.findroot(lambda e: f(e) - y, mp.log(y) if y < 1 else mp.mpf(1))


def phi(kind, x):
    x = mp.mpf(x)
    if kind == "Boltzmann":
        return x * mp.log(x) - x + 1
    if kind == "FermiDiracMinusOne":
        return x * mp.log(x) + (1 - x) * mp.log(1 - x) + mp.log(2)
    eta = inverse(fd_half, x)
    return mp.quad(lambda t: t * fd_half_prime(t), [0, eta])


def dphi(kind, y):
    y = mp.mpf(y)
    if kind == "Boltzmann":
        return mp.log(y)
    if kind == "FermiDiracMinusOne":
        return mp.log(y / (1 - y))
    return inverse(fd_half, y)


def rel(kind, x, y):
    return phi(kind, x) - phi(kind, y) - dphi(kind, y) * (mp.mpf(x) - mp.mpf(y))


CASES = [
    ("Boltzmann", "0.25", "1.5"),
    ("Boltzmann", "3.0", "0.125"),
    ("FermiDiracMinusOne", "0.125", "0.75"),
    ("FermiDiracMinusOne", "0.96875", "0.5"),
    ("FermiDiracOneHalf", "0.0625", "0.5"),
    ("FermiDiracOneHalf", "2.5", "0.75"),
    ("FermiDiracOneHalf", "40.0", "12.0"),
]

for kind, x, y in CASES:
    print(f"(StatisticsKind::{kind}, {x}, {y}, {mp.nstr(rel(kind, x, y), 25, min_fixed=0, max_fixed=0)}),")
