//! Analytic against central-difference Jacobians on random admissible states
//! of small MoS2 devices.

use memdd::assembly::{dof, finite_difference_jacobian, TimeStep, PSI};
use memdd::config::ExperimentConfig;
use memdd::experiment::Experiment;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn small_experiments() -> Vec<(String, Experiment)> {
    let mut out = Vec::new();
    for (preset, overrides) in [
        ("fig4_schottky_1d", vec![("geometry.cells_x", "12")]),
        ("fig4_ohmic_1d", vec![("geometry.cells_x", "12")]),
        ("fig9_study", vec![("geometry.cells_x", "6"), ("geometry.cells_z", "3"), ("geometry.contact_config", "\"mixed\"")]),
        ("fig9_study", vec![("geometry.cells_x", "6"), ("geometry.cells_z", "3"), ("geometry.contact_config", "\"top\"")]),
    ] {
        let mut cfg = ExperimentConfig::preset(preset).unwrap().with_overrides(overrides.clone()).unwrap();
        cfg.study = None;
        let label = format!("{preset} {overrides:?}");
        out.push((label, Experiment::new(cfg).unwrap()));
    }
    out
}

/// Largest `|J - J_fd|` over the row maximum of `|J|`, on `states` random
/// states spread over the small devices. Returns the error and the label of
/// the worst case.
pub fn worst_jacobian_error(states: usize, seed: u64) -> (f64, String) {
    let experiments = small_experiments();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = (0.0, String::new());
    let mut done = 0;
    while done < states {
        let (label, exp) = &experiments[done % experiments.len()];
        let asm = exp.assembler();
        let eq = exp.initial_state().unwrap();
        let ut = exp.device.scaling.thermal_voltage;
        let perturb = |rng: &mut ChaCha8Rng| {
            let mut x = eq.values.clone();
            for k in 0..eq.cells() {
                for a in 0..3 {
                    x[dof(k, a)] += rng.gen_range(-0.5..0.5);
                }
                x[dof(k, PSI)] += rng.gen_range(-2.0..2.0);
            }
            x
        };
        let x = perturb(&mut rng);
        let prev = perturb(&mut rng);
        if !asm.admissible(&x) || !asm.admissible(&prev) {
            continue;
        }
        let applied = [0.0, rng.gen_range(-13.0..13.0) / ut];
        let step = TimeStep { prev: &prev, tau: 10f64.powf(rng.gen_range(-6.0..-2.0)) };
        let j = asm.assemble(&x, &applied, &step, true).unwrap().jacobian.unwrap();
        let fd = finite_difference_jacobian(&asm, &x, &applied, &step).unwrap();
        let n = asm.size();
        for i in 0..n {
            let lo = i.saturating_sub(asm.band());
            let hi = (i + asm.band()).min(n - 1);
            let row_max = (lo..=hi).map(|c| j.get(i, c).abs()).fold(0.0, f64::max);
            for c in lo..=hi {
                let e = (j.get(i, c) - fd.get(i, c)).abs() / row_max;
                if e > worst.0 {
                    worst = (e, format!("{label}, state {done}, entry ({i}, {c})"));
                }
            }
        }
        done += 1;
    }
    worst
}
