use super::{PhysicsError, StatisticsKind};

/// `x log x` continuously extended to 0.
#[inline]
fn xlogx(x: f64) -> f64 {
    if x < 1e-300 {
        0.0
    } else {
        x * x.ln()
    }
}

/// Entropy function `Phi`, an antiderivative of `F^{-1}`.
///
/// Boltzmann and `F_{-1}` use the closed forms `x log x - x + 1` and
/// `x log x + (1-x) log(1-x) + log 2`. For `F_{1/2}` the constant is fixed by
/// `Phi(F(0)) = 0`.
pub fn entropy_phi(kind: StatisticsKind, x: f64) -> Result<f64, PhysicsError> {
    check_closure(kind, x)?;
    Ok(match kind {
        StatisticsKind::Boltzmann => xlogx(x) - x + 1.0,
        StatisticsKind::FermiDiracMinusOne => xlogx(x) + xlogx(1.0 - x) + std::f64::consts::LN_2,
        StatisticsKind::FermiDiracOneHalf => {
            let eta = if x == 0.0 { f64::NEG_INFINITY } else { kind.inverse(x)? };
            // Phi(F(eta)) = int_0^eta t F'(t) dt
            integrate_weighted(eta, 0.0, 0.0)
        }
    })
}

/// Relative entropy `H(x, y) = Phi(x) - Phi(y) - Phi'(y) (x - y)`.
pub fn relative_entropy(kind: StatisticsKind, x: f64, y: f64) -> Result<f64, PhysicsError> {
    check_closure(kind, x)?;
    let eta_y = kind.inverse(y)?;
    let eta_x = if x == 0.0 {
        f64::NEG_INFINITY
    } else if kind == StatisticsKind::FermiDiracMinusOne && x == 1.0 {
        f64::INFINITY
    } else {
        kind.inverse(x)?
    };
    Ok(relative_entropy_eta(kind, eta_x, eta_y))
}

fn check_closure(kind: StatisticsKind, x: f64) -> Result<(), PhysicsError> {
    let ok = match kind {
        StatisticsKind::FermiDiracMinusOne => (0.0..=1.0).contains(&x),
        _ => x >= 0.0 && x.is_finite(),
    };
    if ok {
        Ok(())
    } else {
        Err(PhysicsError::OutOfRange { kind, value: x })
    }
}

/// `H(F(eta_x), F(eta_y))` evaluated from the chemical potentials directly.
pub(crate) fn relative_entropy_eta(kind: StatisticsKind, eta_x: f64, eta_y: f64) -> f64 {
    match kind {
        StatisticsKind::Boltzmann => {
            // y * (e^d (d - 1) + 1) with d = eta_x - eta_y
            let d = eta_x - eta_y;
            let y = eta_y.exp();
            if d == f64::NEG_INFINITY {
                return y;
            }
            let core = if d.abs() < 1e-2 {
                // sum_{k>=2} d^k (k-1)/k!
                let mut term = d * d / 2.0;
                let mut acc = term;
                for k in 3..12 {
                    term *= d / k as f64;
                    acc += term * (k - 1) as f64;
                }
                acc
            } else {
                d * d.exp() - d.exp_m1()
            };
            y * core
        }
        StatisticsKind::FermiDiracMinusOne => {
            let sp = |e: f64| if e > 0.0 { e + (-e).exp().ln_1p() } else { e.exp().ln_1p() };
            let x = kind.value(eta_x);
            // log F = eta - softplus(eta), log(1 - F) = -softplus(eta)
            let lx = |e: f64| if e.is_infinite() { 0.0 } else { e - sp(e) };
            let l1x = |e: f64| if e.is_infinite() { 0.0 } else { -sp(e) };
            let a = if x == 0.0 { 0.0 } else { x * (lx(eta_x) - lx(eta_y)) };
            let b = if x == 1.0 { 0.0 } else { (1.0 - x) * (l1x(eta_x) - l1x(eta_y)) };
            (a + b).max(0.0)
        }
        StatisticsKind::FermiDiracOneHalf => integrate_weighted(eta_x, eta_y, eta_y).max(0.0),
    }
}

// 8-point Gauss-Legendre rule on [-1, 1].
const GL_NODES: [f64; 4] = [0.183_434_642_495_649_8, 0.525_532_409_916_329, 0.796_666_477_413_626_7, 0.960_289_856_497_536_3];
const GL_WEIGHTS: [f64; 4] = [0.362_683_783_378_362, 0.313_706_645_877_887_3, 0.222_381_034_453_374_5, 0.101_228_536_290_376_3];

// Below this the integrand t F'(t) of F_{1/2} is under 1e-24.
const LOWER_CUTOFF: f64 = -60.0;

/// `int_a^b (t - shift) F_{1/2}'(t) dt` by composite Gauss-Legendre with
/// panels no wider than 1.
fn integrate_weighted(b: f64, a: f64, shift: f64) -> f64 {
    let (lo, hi, sign) = if b >= a { (a, b, 1.0) } else { (b, a, -1.0) };
    let lo = lo.max(LOWER_CUTOFF);
    if hi <= lo {
        return 0.0;
    }
    let panels = ((hi - lo).ceil() as usize).max(1);
    let width = (hi - lo) / panels as f64;
    let mut acc = 0.0;
    for p in 0..panels {
        let mid = lo + (p as f64 + 0.5) * width;
        let half = 0.5 * width;
        for (node, weight) in GL_NODES.iter().zip(GL_WEIGHTS) {
            for t in [mid - half * node, mid + half * node] {
                acc += weight * half * (t - shift) * super::statistics::fd_half(t).1;
            }
        }
    }
    sign * acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_anchors() {
        assert_eq!(entropy_phi(StatisticsKind::Boltzmann, 1.0).unwrap(), 0.0);
        assert!(entropy_phi(StatisticsKind::FermiDiracMinusOne, 0.5).unwrap().abs() < 1e-16);
        let want = 2.0 * 2f64.ln() - 1.0;
        assert!((entropy_phi(StatisticsKind::Boltzmann, 2.0).unwrap() - want).abs() < 1e-15);
        assert!((relative_entropy(StatisticsKind::Boltzmann, 2.0, 1.0).unwrap() - want).abs() < 1e-15);
        let f0 = StatisticsKind::FermiDiracOneHalf.value(0.0);
        assert!(entropy_phi(StatisticsKind::FermiDiracOneHalf, f0).unwrap().abs() < 1e-15);
    }

    #[test]
    fn endpoints_use_continuous_extension() {
        assert_eq!(entropy_phi(StatisticsKind::Boltzmann, 0.0).unwrap(), 1.0);
        let ln2 = std::f64::consts::LN_2;
        assert_eq!(entropy_phi(StatisticsKind::FermiDiracMinusOne, 0.0).unwrap(), ln2);
        assert_eq!(entropy_phi(StatisticsKind::FermiDiracMinusOne, 1.0).unwrap(), ln2);
        assert!(entropy_phi(StatisticsKind::FermiDiracMinusOne, 1.1).is_err());
        assert!(entropy_phi(StatisticsKind::FermiDiracOneHalf, 0.0).unwrap() > 0.0);
    }

    #[test]
    fn relative_entropy_matches_definition_for_half_order() {
        let kind = StatisticsKind::FermiDiracOneHalf;
        for (x, y) in [(0.3, 2.0), (5.0, 0.01), (1.2, 1.1)] {
            let h = relative_entropy(kind, x, y).unwrap();
            let direct = entropy_phi(kind, x).unwrap()
                - entropy_phi(kind, y).unwrap()
                - kind.inverse(y).unwrap() * (x - y);
            assert!((h - direct).abs() < 1e-12 * (1.0 + h), "{x} {y}: {h} vs {direct}");
        }
    }
}
