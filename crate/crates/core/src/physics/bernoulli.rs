/// Bernoulli function `B(x) = x / (exp(x) - 1)`, `B(0) = 1`.
#[inline]
pub fn bernoulli(x: f64) -> f64 {
    let ax = x.abs();
    if ax < 0.1 {
        let x2 = x * x;
        1.0 - 0.5 * x + x2 * (1.0 / 12.0 + x2 * (-1.0 / 720.0 + x2 * (1.0 / 30240.0 - x2 / 1_209_600.0)))
    } else if x < 0.0 {
        // B(x) = B(-x) - x keeps the large negative branch accurate.
        -x * (1.0 + 1.0 / (-x).exp_m1())
    } else if x < 700.0 {
        x / x.exp_m1()
    } else {
        let e = (-x).exp();
        x * e / (1.0 - e)
    }
}

/// `B'(x)`.
#[inline]
pub fn bernoulli_derivative(x: f64) -> f64 {
    let ax = x.abs();
    if ax < 0.1 {
        let x2 = x * x;
        -0.5 + x * (1.0 / 6.0 + x2 * (-1.0 / 180.0 + x2 * (1.0 / 5040.0 - x2 / 151_200.0)))
    } else {
        let b = bernoulli(x);
        b * (1.0 - x - b) / x
    }
}

/// `(B(x), B'(x))`.
#[inline]
pub fn bernoulli_pair(x: f64) -> (f64, f64) {
    if x.abs() < 0.1 {
        (bernoulli(x), bernoulli_derivative(x))
    } else {
        let b = bernoulli(x);
        (b, b * (1.0 - x - b) / x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn anchors() {
        assert_eq!(bernoulli(0.0), 1.0);
        assert!((bernoulli(-2.0) - bernoulli(2.0) - 2.0).abs() < 1e-15);
        // 1/(e - 1), 40-digit reference
        let want = 0.581_976_706_869_326_5;
        assert!(((bernoulli(1.0) - want) / want).abs() < 1e-15);
    }

    #[test]
    fn branch_edges_agree() {
        for x in [0.1f64, -0.1] {
            let a = bernoulli(x * (1.0 - 1e-12));
            let b = bernoulli(x * (1.0 + 1e-12));
            assert!((a - b).abs() < 1e-12);
            let a = bernoulli_derivative(x * (1.0 - 1e-12));
            let b = bernoulli_derivative(x * (1.0 + 1e-12));
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn extreme_arguments() {
        assert!(bernoulli(700.0) > 0.0);
        assert!(bernoulli(800.0) >= 0.0 && bernoulli(800.0).is_finite());
        assert!(bernoulli(1e4) == 0.0);
        assert!((bernoulli(-700.0) - 700.0).abs() < 1e-12);
        assert!(bernoulli_derivative(-700.0).is_finite());
        assert!(bernoulli_derivative(700.0).is_finite());
    }
}
