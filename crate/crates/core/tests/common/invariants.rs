//! Independent reference formulas for the structural checks.

use memdd::physics::{bernoulli, ScaledCarrier};

/// Scharfetter-Gummel flux for Boltzmann statistics, and the sum of the
/// magnitudes of its two terms.
pub fn scharfetter_gummel(c: &ScaledCarrier, tau: f64, k: (f64, f64), l: (f64, f64)) -> (f64, f64) {
    let z = c.charge;
    let n = |(phi, psi): (f64, f64)| c.prefactor * (z * (phi - psi) + c.shift).exp();
    let x = z * (l.1 - k.1);
    let (a, b) = (bernoulli(-x) * n(l), bernoulli(x) * n(k));
    (-z * c.mobility * tau * (a - b), c.mobility * tau * (a.abs() + b.abs()))
}

/// Thermionic trace density by plain bisection on its chemical potential,
/// for a face of unit measure.
pub fn bisect_trace(c: &ScaledCarrier, tau: f64, v: f64, n_k: f64, n_d: f64, dpsi: f64) -> f64 {
    let eta_k = c.eta_of_density(n_k).unwrap();
    let g_k = c.statistics.log_excess(eta_k);
    let z_of = |eta: f64| {
        let s = c.density_at(eta);
        let q = c.charge * dpsi - (c.statistics.log_excess(eta) - g_k);
        -tau * c.mobility * (bernoulli(-q) * s - bernoulli(q) * n_k) - v * (s - n_d)
    };
    let (mut lo, mut hi) = (-200.0, 200.0);
    if c.statistics.saturation().is_some() {
        hi = 60.0;
    }
    assert!(z_of(lo) > 0.0 && z_of(hi) < 0.0, "no bracket");
    for _ in 0..400 {
        let mid = 0.5 * (lo + hi);
        if z_of(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    c.density_at(0.5 * (lo + hi))
}
