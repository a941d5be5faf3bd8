mod common;

use common::invariants::{bisect_trace, scharfetter_gummel};

use memdd::assembly::{excess_flux, solve_schottky_boundary_density, Assembler, DeviceState};
use memdd::device::ContactModel;
use memdd::observables::{discrete_dissipation, FaceMean};
use memdd::physics::{bernoulli, relative_entropy, ScaledCarrier, Species, StatisticsKind};
use proptest::prelude::*;

fn statistics() -> impl Strategy<Value = StatisticsKind> {
    prop::sample::select(StatisticsKind::ALL.to_vec())
}

fn carrier() -> impl Strategy<Value = ScaledCarrier> {
    (statistics(), prop::bool::ANY, 0.01f64..100.0, -3.0f64..3.0, 0.01f64..10.0).prop_map(
        |(statistics, negative, prefactor, shift, mobility)| ScaledCarrier {
            species: Species::Electron,
            charge: if negative { -1.0 } else { 1.0 },
            statistics,
            prefactor,
            shift,
            mobility,
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn flux_is_antisymmetric(c in carrier(), tau in 0.01f64..100.0, k in (-5.0f64..5.0, -5.0f64..5.0), l in (-5.0f64..5.0, -5.0f64..5.0)) {
        let kl = excess_flux(&c, tau, k, l);
        let lk = excess_flux(&c, tau, l, k);
        prop_assert_eq!(kl.to_bits(), (-lk).to_bits());
    }

    #[test]
    fn bernoulli_reflection(x in -50.0f64..50.0) {
        prop_assert!((bernoulli(x) - bernoulli(-x) + x).abs() < 1e-13);
        prop_assert!(bernoulli(x) > 0.0);
    }

    #[test]
    fn boltzmann_flux_is_scharfetter_gummel(mut c in carrier(), tau in 0.01f64..100.0, k in (-5.0f64..5.0, -5.0f64..5.0), l in (-5.0f64..5.0, -5.0f64..5.0)) {
        c.statistics = StatisticsKind::Boltzmann;
        let (sg, gross) = scharfetter_gummel(&c, tau, k, l);
        prop_assert!((excess_flux(&c, tau, k, l) - sg).abs() <= 1e-14 * gross);
    }

    #[test]
    fn densities_are_positive(c in carrier(), phi in -40.0f64..40.0, psi in -40.0f64..40.0) {
        let n = c.density(phi, psi);
        prop_assert!(n > 0.0 && n.is_finite());
        if let Some(s) = c.saturation() {
            prop_assert!(n <= s);
        }
    }

    #[test]
    fn schottky_trace_matches_bisection(
        c in carrier(),
        tau in 0.1f64..10.0,
        v in 0.0f64..100.0,
        eta_k in -5.0f64..5.0,
        eta_d in -5.0f64..5.0,
        dpsi in -10.0f64..10.0,
    ) {
        let (n_k, n_d) = (c.density_at(eta_k), c.density_at(eta_d));
        let s = solve_schottky_boundary_density(&c, tau, 1.0, v, n_k, n_d, dpsi).unwrap();
        let b = bisect_trace(&c, tau, v, n_k, n_d, dpsi);
        prop_assert!(s > 0.0);
        prop_assert!(((s - b) / b).abs() < 1e-10, "{} vs {}", s, b);
    }

    #[test]
    fn relative_entropy_is_nonnegative(kind in statistics(), x in 0.001f64..0.999, y in 0.001f64..0.999) {
        prop_assert!(relative_entropy(kind, x, y).unwrap() >= 0.0);
    }

    #[test]
    fn dissipation_is_nonnegative(values in prop::collection::vec(-1.0f64..1.0, 8), v in -2.0f64..2.0, schottky in prop::bool::ANY) {
        let mesh = common::two_cell::mesh();
        let model = if schottky { ContactModel::Schottky } else { ContactModel::Ohmic };
        let device = common::two_cell::device(model, &mesh);
        let asm = Assembler::new(&device, &mesh);
        let state = DeviceState { values, time: 0.0, applied: vec![0.0, v] };
        for mean in [FaceMean::Logarithmic, FaceMean::FluxConsistent] {
            prop_assert!(discrete_dissipation(&asm, &state, mean).unwrap() >= 0.0);
        }
    }
}

/// `(kind, x, y, H(x, y))` from `scripts/oracles/entropy.py`.
#[allow(clippy::excessive_precision)]
const RELATIVE_ENTROPY: [(StatisticsKind, f64, f64, f64); 7] = [
    (StatisticsKind::Boltzmann, 0.25, 1.5, 8.020601326929862497968807e-1),
    (StatisticsKind::Boltzmann, 3.0, 0.125, 6.659161491043836858940825),
    (StatisticsKind::FermiDiracMinusOne, 0.125, 0.75, 8.721976637799401211255459e-1),
    (StatisticsKind::FermiDiracMinusOne, 0.96875, 0.5, 5.540863821052041880749495e-1),
    (StatisticsKind::FermiDiracOneHalf, 0.0625, 0.5, 3.410412074566330429553568e-1),
    (StatisticsKind::FermiDiracOneHalf, 2.5, 0.75, 1.782345781773636857928965),
    (StatisticsKind::FermiDiracOneHalf, 40.0, 12.0, 1.177601119329712512657832e+2),
];

#[test]
fn relative_entropy_matches_oracle() {
    for (kind, x, y, want) in RELATIVE_ENTROPY {
        let got = relative_entropy(kind, x, y).unwrap();
        assert!(((got - want) / want).abs() < 1e-12, "{kind:?} H({x}, {y}) = {got}, expected {want}");
    }
}
