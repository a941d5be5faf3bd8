use serde::{Deserialize, Serialize};

use super::fd_table::{HALF, MINUS_HALF, TABLE_DEGREE, TABLE_HI, TABLE_LO, TABLE_WIDTH};

const _: () = assert!(HALF[0].len() == TABLE_DEGREE + 1 && MINUS_HALF[0].len() == TABLE_DEGREE + 1);
use super::PhysicsError;

/// Statistics function mapping a dimensionless chemical potential to a
/// normalized density.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StatisticsKind {
    /// `exp(eta)`.
    Boltzmann,
    /// Fermi-Dirac integral of order 1/2.
    FermiDiracOneHalf,
    /// Fermi-Dirac integral of order -1, `1 / (exp(-eta) + 1)`.
    FermiDiracMinusOne,
}

impl StatisticsKind {
    pub const ALL: [StatisticsKind; 3] = [
        StatisticsKind::Boltzmann,
        StatisticsKind::FermiDiracOneHalf,
        StatisticsKind::FermiDiracMinusOne,
    ];

    /// `F(eta)`, rejecting non-finite arguments.
    pub fn eval(self, eta: f64) -> Result<f64, PhysicsError> {
        if !eta.is_finite() {
            return Err(PhysicsError::NonFinite { what: "eta", value: eta });
        }
        Ok(self.value(eta))
    }

    /// `F(eta)` without argument checks.
    #[inline]
    pub fn value(self, eta: f64) -> f64 {
        match self {
            StatisticsKind::Boltzmann => eta.exp(),
            StatisticsKind::FermiDiracOneHalf => fd_half(eta).0,
            StatisticsKind::FermiDiracMinusOne => logistic(eta),
        }
    }

    /// `F'(eta)`.
    #[inline]
    pub fn derivative(self, eta: f64) -> f64 {
        match self {
            StatisticsKind::Boltzmann => eta.exp(),
            StatisticsKind::FermiDiracOneHalf => fd_half(eta).1,
            StatisticsKind::FermiDiracMinusOne => {
                let e = (-eta.abs()).exp();
                e / ((1.0 + e) * (1.0 + e))
            }
        }
    }

    /// Value, derivative, `g = log F - eta` and `g'` in one pass.
    #[inline]
    pub fn evaluate(self, eta: f64) -> Evaluated {
        match self {
            StatisticsKind::Boltzmann => {
                let f = eta.exp();
                Evaluated { value: f, derivative: f, log_excess: 0.0, log_excess_derivative: 0.0 }
            }
            StatisticsKind::FermiDiracMinusOne => {
                let f = logistic(eta);
                let e = (-eta.abs()).exp();
                Evaluated {
                    value: f,
                    derivative: e / ((1.0 + e) * (1.0 + e)),
                    log_excess: -softplus(eta),
                    log_excess_derivative: -f,
                }
            }
            StatisticsKind::FermiDiracOneHalf => {
                if eta < TABLE_LO {
                    // F = e^eta * S(e^eta); keep S separate so log F - eta has no cancellation.
                    let (s, ds) = half_series_scaled(eta);
                    let x = eta.exp();
                    Evaluated {
                        value: x * s,
                        derivative: x * ds,
                        log_excess: s.ln(),
                        log_excess_derivative: ds / s - 1.0,
                    }
                } else {
                    let (f, df) = fd_half(eta);
                    Evaluated {
                        value: f,
                        derivative: df,
                        log_excess: f.ln() - eta,
                        log_excess_derivative: df / f - 1.0,
                    }
                }
            }
        }
    }

    /// `log F(eta) - eta`, the excess chemical potential (zero for Boltzmann).
    #[inline]
    pub fn log_excess(self, eta: f64) -> f64 {
        self.evaluate(eta).log_excess
    }

    /// Whether `y` lies in the open range of `F`.
    pub fn in_range(self, y: f64) -> bool {
        match self {
            StatisticsKind::FermiDiracMinusOne => y > 0.0 && y < 1.0,
            _ => y > 0.0 && y.is_finite(),
        }
    }

    /// `F^{-1}(y)`.
    pub fn inverse(self, y: f64) -> Result<f64, PhysicsError> {
        if !self.in_range(y) {
            return Err(PhysicsError::OutOfRange { kind: self, value: y });
        }
        Ok(match self {
            StatisticsKind::Boltzmann => y.ln(),
            StatisticsKind::FermiDiracMinusOne => y.ln() - (-y).ln_1p(),
            StatisticsKind::FermiDiracOneHalf => fd_half_inverse(y),
        })
    }

    /// Upper end of the range of `F`, if bounded.
    pub fn saturation(self) -> Option<f64> {
        match self {
            StatisticsKind::FermiDiracMinusOne => Some(1.0),
            _ => None,
        }
    }
}

/// Output of [`StatisticsKind::evaluate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluated {
    pub value: f64,
    pub derivative: f64,
    /// `log F(eta) - eta`.
    pub log_excess: f64,
    pub log_excess_derivative: f64,
}

#[inline]
fn logistic(eta: f64) -> f64 {
    if eta >= 0.0 {
        1.0 / (1.0 + (-eta).exp())
    } else {
        let e = eta.exp();
        e / (1.0 + e)
    }
}

#[inline]
fn softplus(eta: f64) -> f64 {
    if eta > 0.0 {
        eta + (-eta).exp().ln_1p()
    } else {
        eta.exp().ln_1p()
    }
}

/// `(F_{1/2}(eta), F_{-1/2}(eta))`, both normalized so that `F ~ exp(eta)` as
/// `eta -> -inf`.
pub(crate) fn fd_half(eta: f64) -> (f64, f64) {
    if eta < TABLE_LO {
        let (s, ds) = half_series_scaled(eta);
        let x = eta.exp();
        (x * s, x * ds)
    } else if eta < TABLE_HI {
        let piece = (((eta - TABLE_LO) / TABLE_WIDTH) as usize).min(HALF.len() - 1);
        let a = TABLE_LO + TABLE_WIDTH * piece as f64;
        let t = 2.0 * (eta - a) / TABLE_WIDTH - 1.0;
        (clenshaw(&HALF[piece], t), clenshaw(&MINUS_HALF[piece], t))
    } else {
        half_asymptotic(eta)
    }
}

fn clenshaw(c: &[f64], t: f64) -> f64 {
    let (mut b1, mut b2) = (0.0, 0.0);
    for &ck in c[1..].iter().rev() {
        let b0 = 2.0 * t * b1 - b2 + ck;
        b2 = b1;
        b1 = b0;
    }
    t * b1 - b2 + 0.5 * c[0]
}

/// `F_{1/2}(eta) e^{-eta}` and `F_{-1/2}(eta) e^{-eta}` from the alternating
/// polylog series; converges quickly for `eta < -2`.
fn half_series_scaled(eta: f64) -> (f64, f64) {
    let x = eta.exp();
    let (mut s, mut ds) = (0.0, 0.0);
    let mut xp = 1.0;
    for k in 1..200 {
        let kf = k as f64;
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        let ts = sign * xp / (kf * kf.sqrt());
        s += ts;
        ds += sign * xp / kf.sqrt();
        if ts.abs() < 1e-18 * s.abs() {
            break;
        }
        xp *= x;
    }
    (s, ds)
}

// zeta(2k) for k = 1..8.
const ZETA_EVEN: [f64; 8] = [
    1.6449340668482264,
    1.0823232337111382,
    1.017_343_061_984_449,
    1.0040773561979443,
    1.0009945751278181,
    1.000_246_086_553_308,
    1.0000612481350587,
    1.0000152822594087,
];

/// Sommerfeld expansion of `F_j(eta) = eta^{j+1}/Gamma(j+2) * (1 + sum_k
/// t_k eta^{-2k})`; for `j = 1/2` and `j = -1/2` the oscillating
/// `cos(pi j)` term vanishes or is below `e^{-eta}`.
fn half_asymptotic(eta: f64) -> (f64, f64) {
    const GAMMA_5_2: f64 = 1.329_340_388_179_137;
    const GAMMA_3_2: f64 = 0.886_226_925_452_758;
    let sum = |j: f64| {
        let inv2 = 1.0 / (eta * eta);
        let mut acc = 1.0;
        let mut pochhammer = 1.0;
        let mut pw = 1.0;
        for (k, z) in ZETA_EVEN.iter().enumerate() {
            let k = k + 1;
            // (j+1) j (j-1) ... (j+2-2k)
            let i0 = 2 * (k - 1);
            pochhammer *= (j + 1.0 - i0 as f64) * (j - i0 as f64);
            pw *= inv2;
            let eta_k = 2.0 * (1.0 - 2f64.powi(1 - 2 * k as i32)) * z;
            acc += eta_k * pochhammer * pw;
        }
        acc
    };
    let f = eta.powf(1.5) / GAMMA_5_2 * sum(0.5);
    let df = eta.sqrt() / GAMMA_3_2 * sum(-0.5);
    (f, df)
}

/// Safeguarded Newton on `log F(eta) - log y`, which is increasing and concave.
fn fd_half_inverse(y: f64) -> f64 {
    let target = y.ln();
    // F(eta) <= e^eta gives the lower bound. For the upper bound use
    // F >= 0.64 e^eta (eta <= 0) and F >= 4/(3 sqrt(pi)) eta^{3/2} (eta >= 0).
    let mut lo = target;
    let mut hi = (target - 0.64f64.ln()).max((0.75 * std::f64::consts::PI.sqrt() * y).powf(2.0 / 3.0)) + 1.0;
    let h = |eta: f64| {
        let e = StatisticsKind::FermiDiracOneHalf.evaluate(eta);
        (e.log_excess + eta - target, e.derivative / e.value)
    };
    let mut eta = if y < 1.0 { target } else { 0.5 * (lo + hi) };
    for _ in 0..200 {
        let (r, dr) = h(eta);
        if r == 0.0 {
            return eta;
        }
        if r > 0.0 {
            hi = eta;
        } else {
            lo = eta;
        }
        let mut next = eta - r / dr;
        if !(next > lo && next < hi) {
            next = 0.5 * (lo + hi);
        }
        let step = (next - eta).abs();
        eta = next;
        if step <= 4.0 * f64::EPSILON * eta.abs().max(1.0) || hi - lo <= 4.0 * f64::EPSILON * eta.abs().max(1.0) {
            break;
        }
    }
    eta
}

#[cfg(test)]
mod tests {
    use super::*;

    // Reference values from mpmath at 40 digits: -polylog(3/2, -e^eta).
    const REFERENCE: [(f64, f64); 4] = [
        (-3.0, 0.048_933_705_696_495_78),
        (0.0, 0.765_147_024_625_408),
        (1.7, 2.4034781210765327),
        (10.0, 24.084656964637654),
    ];

    #[test]
    fn fermi_dirac_half_reference_values() {
        for (eta, want) in REFERENCE {
            let got = StatisticsKind::FermiDiracOneHalf.value(eta);
            assert!(((got - want) / want).abs() < 1e-14, "eta={eta}: {got} vs {want}");
        }
    }

    #[test]
    fn branches_join_continuously() {
        for edge in [TABLE_LO, TABLE_HI] {
            let below = fd_half(edge - 1e-12);
            let above = fd_half(edge + 1e-12);
            assert!(((below.0 - above.0) / above.0).abs() < 1e-11);
            assert!(((below.1 - above.1) / above.1).abs() < 1e-11);
        }
    }

    #[test]
    fn closed_forms() {
        assert_eq!(StatisticsKind::FermiDiracMinusOne.value(0.0), 0.5);
        assert_eq!(StatisticsKind::Boltzmann.value(0.0), 1.0);
        assert_eq!(StatisticsKind::Boltzmann.inverse(1.0).unwrap(), 0.0);
        let eta = StatisticsKind::FermiDiracMinusOne.inverse(0.25).unwrap();
        assert!((eta + 3f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn domain_errors() {
        assert!(StatisticsKind::Boltzmann.eval(f64::NAN).is_err());
        assert!(StatisticsKind::FermiDiracOneHalf.eval(f64::INFINITY).is_err());
        assert!(StatisticsKind::FermiDiracMinusOne.inverse(1.0).is_err());
        assert!(StatisticsKind::FermiDiracMinusOne.inverse(1.5).is_err());
        assert!(StatisticsKind::Boltzmann.inverse(0.0).is_err());
        assert!(StatisticsKind::FermiDiracOneHalf.inverse(-1.0).is_err());
    }

    #[test]
    fn log_excess_matches_direct_formula() {
        for kind in StatisticsKind::ALL {
            for eta in [-30.0, -5.0, -1.0, 0.0, 2.5, 20.0, 80.0] {
                let e = kind.evaluate(eta);
                let direct = e.value.ln() - eta;
                assert!((e.log_excess - direct).abs() < 1e-13 * (1.0 + direct.abs()), "{kind:?} {eta}");
            }
        }
    }
}
