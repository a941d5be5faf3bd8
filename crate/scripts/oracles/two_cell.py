#!/usr/bin/env python3
"""Independent two-cell oracle for the coupled residual and Jacobian.

The residual is written out by hand as sympy expressions, the Jacobian is
obtained by symbolic differentiation (implicit differentiation for the
thermionic contact traces) and everything is evaluated with mpmath at 50
digits. All inputs are dyadic rationals, so the f64 values used by the Rust
side are exact.

Writes crates/core/tests/data/two_cell_oracle.rs.
"""

import pathlib

import mpmath as mp
import sympy as sp

mp.mp.dps = 50

# ---------------------------------------------------------------------------
# statistics


def fd_half(eta):
    return mp.re(-mp.polylog(mp.mpf(3) / 2, -mp.exp(eta)))


def fd_minus_half(eta):
    return mp.re(-mp.polylog(mp.mpf(1) / 2, -mp.exp(eta)))


def fd_minus_three_halves(eta):
    return mp.re(-mp.polylog(-mp.mpf(1) / 2, -mp.exp(eta)))


class F12(sp.Function):
    def fdiff(self, argindex=1):
        return F12p(self.args[0])


class F12p(sp.Function):
    def fdiff(self, argindex=1):
        return F12pp(self.args[0])


class F12pp(sp.Function):
    pass


MODULES = [{"F12": fd_half, "F12p": fd_minus_half, "F12pp": fd_minus_three_halves}, "mpmath"]


def stat(kind, eta):
    if kind == "fd12":
        return F12(eta)
    if kind == "fdm1":
        return 1 / (1 + sp.exp(-eta))
    raise ValueError(kind)


def bern(x):
    return x / (sp.exp(x) - 1)


# ---------------------------------------------------------------------------
# device; must match the Rust side of tests/common/two_cell.rs

R = sp.Rational
CARRIERS = [
    # charge, statistics, prefactor, shift, mobility
    (-1, "fd12", R(5, 4), R(1, 2), R(1)),
    (1, "fd12", R(3, 4), R(-3, 4), R(5, 8)),
    (1, "fdm1", R(2), R(1, 4), R(1)),
]
LAMBDA = R(3, 4)
NU = R(1, 2)
DELTA_N = R(1, 2)
DELTA_P = R(1, 4)
DOPING_SIGN = 1
DOPING = R(3, 8)
PSI_D = R(1, 8)
PHI_D = R(0)
PSI_GRAD = R(1, 4)
PHI_GRAD = R(-1, 8)
VELOCITIES = [R(3, 2), R(1, 2)]
APPLIED = [R(0), R(3, 4)]
TAU = R(1, 8)
VALUES = [R(5, 16), R(-3, 16), R(1, 16), R(7, 16), R(9, 16), R(1, 8), R(-1, 4), R(11, 16)]
PREV = [R(1, 4), R(-1, 8), R(0), R(3, 8), R(1, 2), R(1, 16), R(-3, 16), R(5, 8)]

# 2 cells of width 1/2 on [0, 1]
VOL = R(1, 2)
TAU_INTERIOR = R(2)
TAU_CONTACT = R(4)
MEASURE_CONTACT = R(1)
CONTACT_X = [R(0), R(1)]
CONTACT_CELL = [0, 1]

FIELDS = 4
PSI = 3


def dof(k, f):
    return FIELDS * k + f


u = sp.symbols("u0:8")


def eta(a, phi, psi):
    z, _, _, shift, _ = CARRIERS[a]
    return z * (phi - psi) + shift


def density(a, e):
    _, kind, pref, _, _ = CARRIERS[a]
    return pref * stat(kind, e)


def log_excess(a, e):
    _, kind, _, _, _ = CARRIERS[a]
    return sp.log(stat(kind, e)) - e


def flux(a, dpsi, ek, el):
    """Flux from K to L for chemical potentials ek, el."""
    z, _, _, _, mob = CARRIERS[a]
    q = z * dpsi - (log_excess(a, el) - log_excess(a, ek))
    return -z * mob * (bern(-q) * density(a, el) - bern(q) * density(a, ek))


def prev_density(k, a):
    e = eta(a, PREV[dof(k, a)], PREV[dof(k, PSI)])
    return density(a, e)


def build(model):
    """Residual expressions, plus Schottky trace unknowns and equations."""
    res = [sp.Integer(0)] * 8
    lam2 = LAMBDA**2
    cw = [DELTA_N, DELTA_N * DELTA_P, 1]
    tw = [NU, NU, 1]
    for k in range(2):
        psi = u[dof(k, PSI)]
        rho = 0
        for a in range(3):
            z = CARRIERS[a][0]
            n = density(a, eta(a, u[dof(k, a)], psi))
            res[dof(k, a)] += tw[a] * VOL / TAU * z * (n - prev_density(k, a))
            rho += cw[a] * z * n
        rho += cw[1] * DOPING_SIGN * DOPING
        res[dof(k, PSI)] -= VOL * rho
    # interior face
    k, l = 0, 1
    dpsi = u[dof(l, PSI)] - u[dof(k, PSI)]
    res[dof(k, PSI)] -= lam2 * TAU_INTERIOR * dpsi
    res[dof(l, PSI)] += lam2 * TAU_INTERIOR * dpsi
    for a in range(3):
        j = TAU_INTERIOR * flux(a, dpsi, eta(a, u[dof(k, a)], u[dof(k, PSI)]), eta(a, u[dof(l, a)], u[dof(l, PSI)]))
        res[dof(k, a)] += j
        res[dof(l, a)] -= j
    traces = []
    for c in range(2):
        k = CONTACT_CELL[c]
        x = CONTACT_X[c]
        psi_d = PSI_D + PSI_GRAD * x
        phi_d = PHI_D + PHI_GRAD * x
        psi_s = psi_d + APPLIED[c]
        dpsi = psi_s - u[dof(k, PSI)]
        res[dof(k, PSI)] -= lam2 * TAU_CONTACT * dpsi
        for a in range(2):
            ek = eta(a, u[dof(k, a)], u[dof(k, PSI)])
            ed = eta(a, phi_d, psi_d)
            if model == "ohmic":
                res[dof(k, a)] += TAU_CONTACT * flux(a, dpsi, ek, ed)
            else:
                s = sp.Symbol(f"s{c}{a}")
                z = CARRIERS[a][0]
                w = TAU_CONTACT * flux(a, dpsi, ek, s) * z  # z * W with W the Bernoulli part
                zeq = w - VELOCITIES[a] * MEASURE_CONTACT * (density(a, s) - density(a, ed))
                traces.append((c, a, s, zeq, ed))
                res[dof(k, a)] += z * w
    return res, traces


def evaluate(model):
    res, traces = build(model)
    roots = {}
    for c, a, s, zeq, ed in traces:
        zf = sp.lambdify([s] + list(u), zeq, modules=MODULES)
        vals = [mp.mpf(v.p) / v.q for v in VALUES]
        f = lambda e: mp.re(zf(e, *vals))
        # bracket then refine
        lo, hi = mp.mpf(-40), mp.mpf(40)
        assert f(lo) > 0 > f(hi)
        for _ in range(60):
            mid = (lo + hi) / 2
            if f(mid) > 0:
                lo = mid
            else:
                hi = mid
        roots[s] = mp.findroot(f, (lo + hi) / 2, tol=mp.mpf(10) ** (-45))
    point = {**{s: mp.mpf(v.p) / v.q for s, v in zip(u, VALUES)}, **roots}
    syms = list(u) + [t[2] for t in traces]

    def ev(expr):
        f = sp.lambdify(syms, expr, modules=MODULES)
        return mp.re(f(*[point[s] for s in syms]))

    residual = [ev(r) for r in res]
    jac = [[mp.mpf(0)] * 8 for _ in range(8)]
    # ds/du for each trace by implicit differentiation
    ds = {}
    for c, a, s, zeq, ed in traces:
        dzds = ev(sp.diff(zeq, s))
        ds[s] = [-ev(sp.diff(zeq, uj)) / dzds for uj in u]
    for i, r in enumerate(res):
        for j, uj in enumerate(u):
            v = ev(sp.diff(r, uj))
            for s in ds:
                if r.has(s):
                    v += ev(sp.diff(r, s)) * ds[s][j]
            jac[i][j] = v
    trace_density = [[mp.mpf(0)] * 2 for _ in range(2)]
    for c, a, s, zeq, ed in traces:
        trace_density[c][a] = ev(density(a, s))
    return residual, jac, trace_density


def fmt(x):
    return mp.nstr(x, 25, min_fixed=0, max_fixed=0, strip_zeros=False)


def rust_vec(xs):
    return "[" + ", ".join(fmt(x) for x in xs) + "]"


def main():
    out = ["// Generated by scripts/oracles/two_cell.py; do not edit.", ""]
    for model in ["ohmic", "schottky"]:
        residual, jac, trace = evaluate(model)
        up = model.upper()
        out.append(f"pub const {up}_RESIDUAL: [f64; 8] = {rust_vec(residual)};")
        out.append(f"pub const {up}_JACOBIAN: [[f64; 8]; 8] = [")
        for row in jac:
            out.append(f"    {rust_vec(row)},")
        out.append("];")
        if model == "schottky":
            out.append(f"pub const SCHOTTKY_TRACE_DENSITY: [[f64; 2]; 2] = [{rust_vec(trace[0])}, {rust_vec(trace[1])}];")
        out.append("")
    path = pathlib.Path(__file__).resolve().parents[2] / "crates/core/tests/data/two_cell_oracle.rs"
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join(out))
    print(f"wrote {path}")


if __name__ == "__main__":
    main()
