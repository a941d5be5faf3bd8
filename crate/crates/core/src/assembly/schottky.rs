//! Boundary density of a thermionic-emission contact face.
//!
//! The trace `s = n_sigma` balances the half-cell excess-chemical-potential
//! flux against the emission flux:
//!
//! `Z(s) = -tau m (B(-Q) s - B(Q) n_K) - v |sigma| (s - n^D) = 0`,
//! `Q = z (psi_sigma - psi_K) - (g(eta_sigma) - g(eta_K))`.
//!
//! `Z` is strictly decreasing, positive as `s -> 0` and unbounded below, so we
//! bracket in `eta` and run Newton with bisection safeguards.

use crate::physics::{bernoulli_pair, ScaledCarrier};

use super::AssemblyError;

/// Inputs of one contact-face trace problem.
#[derive(Debug, Clone, Copy)]
pub struct SchottkyFace {
    pub carrier: ScaledCarrier,
    /// Face transmissibility.
    pub transmissibility: f64,
    /// Face measure.
    pub measure: f64,
    /// Scaled recombination velocity.
    pub velocity: f64,
    /// `n^D` and its chemical potential.
    pub n_d: f64,
    pub eta_d: f64,
    /// `psi_sigma - psi_K`.
    pub dpsi: f64,
    /// Cell chemical potential and derived quantities.
    pub eta_k: f64,
    pub n_k: f64,
    pub dn_k: f64,
    pub g_k: f64,
    pub dg_k: f64,
}

/// Solution of a trace problem with its sensitivities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchottkyRoot {
    pub eta: f64,
    pub n: f64,
    /// `dn_sigma / d eta_sigma`.
    pub dn: f64,
    /// `d eta_sigma / d eta_K` at fixed `psi_K`.
    pub deta_deta_k: f64,
    /// `d eta_sigma / d psi_K` at fixed `eta_K`.
    pub deta_dpsi_k: f64,
    /// Outward flux `J_{K,sigma}`.
    pub flux: f64,
    /// `Z` at the returned root, relative to `gross`.
    pub residual: f64,
    /// Sum of the magnitudes of the terms of `Z`.
    pub gross: f64,
    pub iterations: usize,
}

impl SchottkyFace {
    /// `(Z, dZ/deta, dW/dQ, B(Q))` at `eta`, where `W` is the Bernoulli part.
    fn eval(&self, eta: f64) -> ZEval {
        let c = &self.carrier;
        let st = c.statistics.evaluate(eta);
        let s = c.prefactor * st.value;
        let ds = c.prefactor * st.derivative;
        let q = c.charge * self.dpsi - (st.log_excess - self.g_k);
        let a = self.transmissibility * c.mobility;
        let (bp, dbp) = bernoulli_pair(q);
        let (bm, dbm) = bernoulli_pair(-q);
        let w = -a * (bm * s - bp * self.n_k);
        let dw_dq = a * (dbm * s + dbp * self.n_k);
        let vm = self.velocity * self.measure;
        let z = w - vm * (s - self.n_d);
        let dz = dw_dq * (-st.log_excess_derivative) - a * bm * ds - vm * ds;
        ZEval { z, dz, w, dw_dq, bp, s, ds, scale: a * (bm * s + bp * self.n_k) + vm * (s + self.n_d) }
    }

    /// Find the trace density and its derivatives.
    pub fn solve(&self) -> Result<SchottkyRoot, AssemblyError> {
        const WIDEN: f64 = 18.420_680_743_952_367; // log 1e8
        let mut lo = self.eta_k.min(self.eta_d) - WIDEN;
        let mut hi = self.eta_k.max(self.eta_d) + WIDEN;
        let mut step = WIDEN;
        let mut expansions = 0;
        let mut z_lo = self.eval(lo).z;
        while !(z_lo > 0.0) {
            if z_lo == 0.0 {
                return Ok(self.finish(lo, 0));
            }
            step *= 2.0;
            lo -= step;
            z_lo = self.eval(lo).z;
            expansions += 1;
            if expansions > 200 {
                return Err(AssemblyError::BracketFailure { lower: true });
            }
        }
        step = WIDEN;
        let mut z_hi = self.eval(hi).z;
        // Overflow of the density reads as "far above the root".
        while z_hi >= 0.0 && z_hi.is_finite() {
            if z_hi == 0.0 {
                return Ok(self.finish(hi, 0));
            }
            step *= 2.0;
            hi += step;
            z_hi = self.eval(hi).z;
            expansions += 1;
            if expansions > 400 {
                return Err(AssemblyError::BracketFailure { lower: false });
            }
        }

        let mut eta = if self.velocity == 0.0 { self.eta_k } else { 0.5 * (self.eta_k + self.eta_d) };
        if !(eta > lo && eta < hi) {
            eta = 0.5 * (lo + hi);
        }
        let mut iterations = 0;
        for _ in 0..300 {
            iterations += 1;
            let e = self.eval(eta);
            if !e.z.is_finite() {
                hi = eta;
                eta = 0.5 * (lo + hi);
                continue;
            }
            if e.z == 0.0 {
                break;
            }
            if e.z > 0.0 {
                lo = eta;
            } else {
                hi = eta;
            }
            let mut next = eta - e.z / e.dz;
            if !(next > lo && next < hi) || !next.is_finite() {
                next = 0.5 * (lo + hi);
            }
            let moved = (next - eta).abs();
            eta = next;
            let tiny = 2.0 * f64::EPSILON * eta.abs().max(1.0);
            if moved <= tiny || hi - lo <= tiny {
                break;
            }
        }
        Ok(self.finish(eta, iterations))
    }

    fn finish(&self, eta: f64, iterations: usize) -> SchottkyRoot {
        let e = self.eval(eta);
        let a = self.transmissibility * self.carrier.mobility;
        let z = self.carrier.charge;
        // Partials of Z at fixed eta_sigma.
        let dz_deta_k = a * e.bp * self.dn_k + e.dw_dq * self.dg_k;
        let dz_dpsi_k = e.dw_dq * (-z);
        SchottkyRoot {
            eta,
            n: e.s,
            dn: e.ds,
            deta_deta_k: -dz_deta_k / e.dz,
            deta_dpsi_k: -dz_dpsi_k / e.dz,
            flux: z * e.w,
            residual: e.z / e.scale.max(f64::MIN_POSITIVE),
            gross: e.scale,
            iterations,
        }
    }
}

struct ZEval {
    z: f64,
    dz: f64,
    w: f64,
    dw_dq: f64,
    bp: f64,
    s: f64,
    ds: f64,
    scale: f64,
}

/// Trace density on a Schottky face for cell density `n_k` and potential drop
/// `dpsi = psi_sigma - psi_K`.
pub fn solve_schottky_boundary_density(
    carrier: &ScaledCarrier,
    transmissibility: f64,
    measure: f64,
    velocity: f64,
    n_k: f64,
    n_d: f64,
    dpsi: f64,
) -> Result<f64, AssemblyError> {
    let eta_k = carrier.eta_of_density(n_k)?;
    let eta_d = carrier.eta_of_density(n_d)?;
    let st = carrier.statistics.evaluate(eta_k);
    let face = SchottkyFace {
        carrier: *carrier,
        transmissibility,
        measure,
        velocity,
        n_d,
        eta_d,
        dpsi,
        eta_k,
        n_k,
        dn_k: carrier.prefactor * st.derivative,
        g_k: st.log_excess,
        dg_k: st.log_excess_derivative,
    };
    Ok(face.solve()?.n)
}

/// `Z(s)` evaluated directly from a density, for tests and diagnostics.
pub fn schottky_balance(
    carrier: &ScaledCarrier,
    transmissibility: f64,
    measure: f64,
    velocity: f64,
    n_k: f64,
    n_d: f64,
    dpsi: f64,
    s: f64,
) -> Result<f64, AssemblyError> {
    let eta_k = carrier.eta_of_density(n_k)?;
    let eta_s = carrier.eta_of_density(s)?;
    let g_k = carrier.statistics.log_excess(eta_k);
    let g_s = carrier.statistics.log_excess(eta_s);
    let q = carrier.charge * dpsi - (g_s - g_k);
    let a = transmissibility * carrier.mobility;
    Ok(-a * (crate::physics::bernoulli(-q) * s - crate::physics::bernoulli(q) * n_k) - velocity * measure * (s - n_d))
}
