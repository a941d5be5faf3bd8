//! Acceptance suite: one PASS/FAIL line per criterion at its stated
//! tolerance. Run with `cargo test -p memdd --test acceptance`.
//!
//! The process fails if any criterion fails, except for those listed in
//! `KNOWN_DEVIATIONS`, which are still reported as FAIL.

mod common;

use std::time::Instant;

use common::invariants::{bisect_trace, scharfetter_gummel};
use memdd::assembly::{dof, excess_flux, solve_schottky_boundary_density};
use memdd::config::ExperimentConfig;
use memdd::device::{ContactModel, InitialState, VoltageProtocol};
use memdd::experiment::{Experiment, RunResult};
use memdd::mesh::ContactConfig;
use memdd::observables::{
    loop_area, loop_orientation, magnitude_loop_orientation, relative_current_difference, relative_density_difference, Branch,
    Orientation, SweepRow,
};
use memdd::physics::{bernoulli, ScaledCarrier, Species, StatisticsKind};
use memdd::solver::{initial_state, run_sweep, GridPolicy};
use memdd::study::run_study;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Criteria that fail for reasons recorded with the project decisions.
const KNOWN_DEVIATIONS: [&str; 1] = ["8a"];

struct Report {
    lines: Vec<(String, bool)>,
}

impl Report {
    fn check(&mut self, id: &str, name: &str, pass: bool, detail: impl AsRef<str>) {
        let tag = match (pass, KNOWN_DEVIATIONS.contains(&id)) {
            (true, _) => "PASS",
            (false, false) => "FAIL",
            (false, true) => "FAIL (known deviation)",
        };
        println!("{tag} [{id}] {name}: {}", detail.as_ref());
        self.lines.push((id.to_string(), pass));
    }

    fn timed(&mut self, id: &str, start: Instant, limit: f64) {
        let t = start.elapsed().as_secs_f64();
        self.check(id, "runtime", t < limit, format!("{t:.1} s (limit {limit} s)"));
    }
}

fn random_carrier(rng: &mut ChaCha8Rng) -> ScaledCarrier {
    ScaledCarrier {
        species: Species::Electron,
        charge: if rng.gen_bool(0.5) { -1.0 } else { 1.0 },
        statistics: StatisticsKind::ALL[rng.gen_range(0..3)],
        prefactor: 10f64.powf(rng.gen_range(-2.0..2.0)),
        shift: rng.gen_range(-3.0..3.0),
        mobility: 10f64.powf(rng.gen_range(-2.0..1.0)),
    }
}

fn potentials(rng: &mut ChaCha8Rng) -> (f64, f64) {
    (rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0))
}

fn criterion_1(r: &mut Report) {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);

    let mut broken = 0;
    for _ in 0..1000 {
        let c = random_carrier(&mut rng);
        let tau = 10f64.powf(rng.gen_range(-2.0..2.0));
        let (k, l) = (potentials(&mut rng), potentials(&mut rng));
        if excess_flux(&c, tau, k, l).to_bits() != (-excess_flux(&c, tau, l, k)).to_bits() {
            broken += 1;
        }
    }
    r.check("1", "flux antisymmetry, bitwise, 1e3 states", broken == 0, format!("{broken} violations"));

    let mut bad = 0;
    for _ in 0..1000 {
        let c = random_carrier(&mut rng);
        let n = c.density(rng.gen_range(-40.0..40.0), rng.gen_range(-40.0..40.0));
        if !(n > 0.0 && n.is_finite() && c.saturation().is_none_or(|s| n <= s)) {
            bad += 1;
        }
        let (ek, ed) = (rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
        let s = solve_schottky_boundary_density(&c, 1.0, 1.0, rng.gen_range(0.0..100.0), c.density_at(ek), c.density_at(ed), rng.gen_range(-10.0..10.0));
        if !matches!(s, Ok(s) if s > 0.0) {
            bad += 1;
        }
    }
    r.check("1", "positivity of densities and contact traces, 1e3 states", bad == 0, format!("{bad} violations"));

    let mut worst = 0.0f64;
    let mut xs: Vec<f64> = (0..10_000).map(|_| rng.gen_range(-50.0..50.0)).collect();
    xs.extend([0.0, 0.1, -0.1, 0.1 - 1e-16, 50.0, -50.0, 1e-300]);
    for x in xs {
        worst = worst.max((bernoulli(x) - bernoulli(-x) + x).abs());
    }
    r.check("1", "B(x) - B(-x) = -x for |x| <= 50", worst < 1e-13, format!("max error {worst:e} (tol 1e-13)"));

    let mut worst = 0.0f64;
    for _ in 0..10_000 {
        let mut c = random_carrier(&mut rng);
        c.statistics = StatisticsKind::Boltzmann;
        let tau = 10f64.powf(rng.gen_range(-2.0..2.0));
        let (k, l) = (potentials(&mut rng), potentials(&mut rng));
        let (sg, gross) = scharfetter_gummel(&c, tau, k, l);
        worst = worst.max((excess_flux(&c, tau, k, l) - sg).abs() / gross);
    }
    r.check("1", "Boltzmann flux equals Scharfetter-Gummel, 1e4 faces", worst <= 1e-14, format!("max relative error {worst:e} (tol 1e-14)"));

    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let c = random_carrier(&mut rng);
        let tau = 10f64.powf(rng.gen_range(-1.0..1.0));
        let v = rng.gen_range(0.0..100.0);
        let (nk, nd) = (c.density_at(rng.gen_range(-5.0..5.0)), c.density_at(rng.gen_range(-5.0..5.0)));
        let dpsi = rng.gen_range(-10.0..10.0);
        let s = solve_schottky_boundary_density(&c, tau, 1.0, v, nk, nd, dpsi).unwrap();
        let b = bisect_trace(&c, tau, v, nk, nd, dpsi);
        worst = worst.max(((s - b) / b).abs());
    }
    r.check("1", "contact-trace root against bisection, 1e3 tuples", worst < 1e-10, format!("max relative error {worst:e} (tol 1e-10)"));
    r.timed("1", start, 30.0);
}

fn run(cfg: ExperimentConfig) -> RunResult {
    Experiment::new(cfg).unwrap().run().unwrap()
}

fn currents(rows: &[SweepRow]) -> (Vec<f64>, Vec<f64>) {
    (rows.iter().map(|r| r.voltage).collect(), rows.iter().map(|r| r.current).collect())
}

fn criterion_2(r: &mut Report, runs: &[(&str, &RunResult)]) {
    for (name, res) in runs {
        let tr = &res.trajectory;
        let m0 = tr.rows[0].ion_mass;
        let drift = tr.rows.iter().map(|row| ((row.ion_mass - m0) / m0).abs()).fold(0.0, f64::max);
        r.check("2", &format!("{name}: ion mass drift"), drift < 1e-10, format!("{drift:e} (tol 1e-10)"));
        let balance = tr
            .rows
            .iter()
            .zip(&tr.steps)
            .skip(1)
            .map(|(row, d)| {
                let floor = 1e-5 * d.exchange_current;
                (row.current + row.current_left).abs() / row.current.abs().max(row.current_left.abs()).max(floor)
            })
            .fold(0.0, f64::max);
        r.check(
            "2",
            &format!("{name}: |I_L + I_R| / max(|I_L|, |I_R|, 1e-5 I_exchange)"),
            balance <= 1e-8,
            format!("{balance:e} (tol 1e-8)"),
        );
    }
}

fn criterion_3(r: &mut Report) {
    let start = Instant::now();
    for model in [ContactModel::Schottky, ContactModel::Ohmic] {
        let mut cfg = ExperimentConfig::preset("fig4_schottky_1d").unwrap();
        cfg.contacts.model = model;
        cfg.protocol = VoltageProtocol::Constant { value: 0.0, duration: Some(10.0) };
        cfg.outputs.snapshot_times.clear();
        cfg.solver.grid = GridPolicy::Uniform { steps_per_cycle: 200 };
        let exp = Experiment::new(cfg.clone()).unwrap();
        let asm = exp.assembler();
        let eq = exp.initial_state().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let field = |a: usize| (0..eq.cells()).map(|k| eq.values[dof(k, a)]).collect::<Vec<_>>();
        let phi_a = field(2).iter().map(|p| p + rng.gen_range(-1.0..1.0)).collect();
        let init = initial_state(&asm, &InitialState::Explicit { phi_n: field(0), phi_p: field(1), phi_a }, &cfg.solver.newton).unwrap();
        let tr = run_sweep(&asm, init, &cfg.sweep_options()).unwrap();
        let mut increase = f64::NEG_INFINITY;
        let mut d_min = f64::INFINITY;
        for w in tr.rows.windows(2) {
            increase = increase.max((w[1].entropy - w[0].entropy) / w[0].entropy.max(1.0));
            d_min = d_min.min(w[1].dissipation);
        }
        let steps = tr.rows.len() - 1;
        r.check(
            "3",
            &format!("{model:?} relaxation, {} cells, {steps} steps: entropy increase", eq.cells()),
            increase <= 1e-8 && steps == 200 && eq.cells() == 200,
            format!("max (E_m - E_m-1) / max(1, E) = {increase:e} (tol 1e-8), E {:e} -> {:e}", tr.rows[0].entropy, tr.rows[steps].entropy),
        );
        r.check("3", &format!("{model:?} relaxation: dissipation"), d_min >= 0.0, format!("min D = {d_min:e}"));
    }
    r.timed("3", start, 60.0);
}

fn criterion_4(r: &mut Report) {
    let start = Instant::now();
    let (err, at) = common::jacobian::worst_jacobian_error(20, 4);
    r.check("4", "analytic vs finite-difference Jacobian, 20 states", err < 1e-5, format!("max row-relative error {err:e} at {at} (tol 1e-5)"));
    r.timed("4", start, 120.0);
}

fn criterion_5(r: &mut Report, mobile: &RunResult, start: Instant) {
    let rows = mobile.trajectory.cycle_rows(1);
    let (v, i) = currents(&rows);
    let i_max = i.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let pinch = rows.iter().filter(|row| row.voltage.abs() < 0.1).map(|row| row.current.abs()).fold(0.0, f64::max);
    r.check("5", "pinched at the origin", pinch < 1e-3 * i_max, format!("max |I| for |V| < 0.1 V is {:e} of I_max", pinch / i_max));
    let right = magnitude_loop_orientation(&v, &i, Branch::Positive);
    let left = magnitude_loop_orientation(&v, &i, Branch::Negative);
    r.check("5", "right branch clockwise in (V, |I|)", right == Orientation::Clockwise, format!("{right:?}"));
    r.check("5", "left branch counterclockwise in (V, |I|)", left == Orientation::Counterclockwise, format!("{left:?}"));

    let frozen = run(ExperimentConfig::preset("immobile_ions_control").unwrap());
    let rows_f = frozen.trajectory.cycle_rows(1);
    let (vf, i_f) = currents(&rows_f);
    for branch in [Branch::Positive, Branch::Negative] {
        let o = loop_orientation(&vf, &i_f, branch);
        let ratio = (loop_area(&vf, &i_f, branch) / loop_area(&v, &i, branch)).abs();
        r.check(
            "5",
            &format!("immobile-ion control, {branch:?} branch"),
            o == Orientation::Degenerate && ratio < 1e-3,
            format!("{o:?}, area ratio to mobile run {ratio:e} (tol 1e-3)"),
        );
    }
    r.timed("5", start, 300.0);
}

fn criterion_6(r: &mut Report) {
    let start = Instant::now();
    let overrides = [("solver.grid.steps_per_cycle", "1600")];
    let sc = run(ExperimentConfig::preset("fig4_schottky_1d").unwrap().with_overrides(overrides).unwrap());
    let oc = run(ExperimentConfig::preset("fig4_ohmic_1d").unwrap().with_overrides(overrides).unwrap());
    let (_, i_sc) = currents(&sc.trajectory.cycle_rows(1));
    let (_, i_oc) = currents(&oc.trajectory.cycle_rows(1));
    let diff = relative_current_difference(&i_sc, &i_oc).unwrap();
    let masked = diff.iter().filter(|d| d.is_none()).count();
    let worst = diff.iter().flatten().fold(0.0f64, |m, d| m.max(*d));
    r.check("6", "second-cycle current, Schottky vs ohmic", worst < 1e-2, format!("max {worst:e} over {} samples, {masked} masked (tol 1e-2)", diff.len()));
    for (a, name, tol) in [(0, "electron", 1e-2), (1, "hole", 5e-1)] {
        let mut worst = (0.0f64, 0.0, 0.0);
        for (s, o) in sc.snapshots.iter().zip(&oc.snapshots) {
            let d = relative_density_difference(s.density(a), o.density(a)).unwrap();
            for (k, e) in d.iter().enumerate() {
                if *e > worst.0 {
                    worst = (*e, s.t, s.x[k]);
                }
            }
        }
        r.check(
            "6",
            &format!("{name} density, Schottky vs ohmic"),
            worst.0 < tol,
            format!("max {:e} at t = {} s, x = {:.3e} m (tol {tol:e})", worst.0, worst.1, worst.2),
        );
    }
    r.timed("6", start, 600.0);
}

fn criterion_7_8b(r: &mut Report) {
    let start = Instant::now();
    let base = ExperimentConfig::preset("fig9_study").unwrap();
    let report = run_study(&base).unwrap();
    let failed: Vec<String> = report.outcomes.iter().filter_map(|o| o.data.as_ref().err().map(|e| format!("{}: {e}", o.job.label()))).collect();
    r.check("7", "all study runs finish", failed.is_empty(), if failed.is_empty() { format!("{} runs", report.outcomes.len()) } else { failed.join("; ") });
    let mut by_thickness: Vec<f64> = report.cells.iter().map(|c| c.thickness).collect();
    by_thickness.dedup();
    for t in by_thickness {
        let mut cells: Vec<_> = report.cells.iter().filter(|c| c.thickness == t).collect();
        cells.sort_by(|a, b| a.electrode_ratio.total_cmp(&b.electrode_ratio));
        for c in &cells {
            let (sc, tc) = (c.e_mc_sc.unwrap_or(f64::NAN), c.e_mc_tc.unwrap_or(f64::NAN));
            println!("       h_T = {:.1e} m, h_E/h_C = {}: e_MC,SC = {sc:.4e}, e_MC,TC = {tc:.4e}", t, c.electrode_ratio);
            if c.electrode_ratio <= 0.1 {
                r.check(
                    "7",
                    &format!("h_T = {t:e} m, ratio {}: side and top close to mixed", c.electrode_ratio),
                    sc < 0.1 && tc < 0.1,
                    format!("e_MC,SC = {sc:.3e}, e_MC,TC = {tc:.3e} (tol 0.1)"),
                );
            }
        }
        let errs: Vec<f64> = cells.iter().map(|c| c.e_mc_sc.unwrap_or(f64::NAN)).collect();
        r.check(
            "7",
            &format!("h_T = {t:e} m: e_MC,SC nondecreasing in electrode ratio"),
            errs.windows(2).all(|w| w[1] >= w[0]),
            errs.iter().map(|e| format!("{e:.3e}")).collect::<Vec<_>>().join(", "),
        );
        if let Some(c) = cells.iter().find(|c| c.electrode_ratio == 0.3) {
            let (sc, tc) = (c.e_mc_sc.unwrap_or(f64::NAN), c.e_mc_tc.unwrap_or(f64::NAN));
            r.check("7", &format!("h_T = {t:e} m, ratio 0.3: e_MC,TC <= e_MC,SC"), tc <= sc, format!("{tc:.3e} vs {sc:.3e}"));
        }
    }
    r.timed("7", start, 2700.0);

    for o in report.outcomes.iter().filter(|o| o.job.contact_config == ContactConfig::Top && o.job.thickness == 1.5e-9) {
        let Ok(data) = &o.data else { continue };
        let Some(snap) = data.snapshots.iter().find(|s| (s.t - 18.2).abs() < 1e-9) else {
            r.check("8b", &o.job.label(), false, "no snapshot at 18.2 s");
            continue;
        };
        let cols = snap.column_charges().unwrap();
        let h_e = o.job.electrode_ratio * base.geometry.channel_length;
        let under = cols.iter().filter(|c| c.0 < h_e).map(|c| c.1.abs()).fold(0.0, f64::max);
        let mid = 0.5 * (cols[0].0 + cols[cols.len() - 1].0);
        let center = cols.iter().min_by(|a, b| (a.0 - mid).abs().total_cmp(&(b.0 - mid).abs())).unwrap().1.abs();
        r.check(
            "8b",
            &format!("{}: column charge under the electrode exceeds the center column", o.job.label()),
            under > center,
            format!("{under:.3e} vs {center:.3e} C/m^2"),
        );
    }
}

fn criterion_8a(r: &mut Report, sc: &RunResult) {
    let Some(snap) = sc.snapshots.iter().find(|s| (s.t - 18.2).abs() < 1e-9) else {
        r.check("8a", "snapshot at 18.2 s", false, "missing");
        return;
    };
    let length = snap.x[snap.x.len() - 1] + snap.x[0];
    let bulk: Vec<f64> = snap.x.iter().zip(&snap.space_charge).filter(|(x, _)| (**x / length - 0.5).abs() < 0.1).map(|(_, q)| q.abs()).collect();
    let bulk = bulk.iter().sum::<f64>() / bulk.len() as f64;
    let near = snap.space_charge[0];
    r.check(
        "8a",
        "space charge at x = 0, t = 18.2 s, positive and >= 10x bulk",
        near > 0.0 && near >= 10.0 * bulk,
        format!("rho = {near:.3e} C/m^3, bulk mean |rho| = {bulk:.3e} C/m^3; n_n = {:.2e}, n_a = {:.2e} m^-3", snap.n_n[0], snap.n_a[0]),
    );
}

fn criterion_9(r: &mut Report) {
    use common::two_cell::{deviation, trace_deviation};
    for model in [ContactModel::Ohmic, ContactModel::Schottky] {
        let d = deviation(model);
        r.check(
            "9",
            &format!("two-cell {model:?} residual and Jacobian vs extended-precision oracle"),
            d.residual <= 1e-14 && d.jacobian <= 1e-14,
            format!("residual {:e}, Jacobian {:e} (tol 1e-14)", d.residual, d.jacobian),
        );
    }
    let t = trace_deviation();
    r.check("9", "two-cell contact traces vs oracle", t <= 1e-14, format!("{t:e} (tol 1e-14)"));
}

fn main() {
    let mut r = Report { lines: Vec::new() };
    criterion_9(&mut r);
    criterion_1(&mut r);
    criterion_4(&mut r);
    criterion_3(&mut r);

    let start = Instant::now();
    let sc = run(ExperimentConfig::preset("fig4_schottky_1d").unwrap());
    let oc = run(ExperimentConfig::preset("fig4_ohmic_1d").unwrap());
    criterion_2(&mut r, &[("Schottky", &sc), ("ohmic", &oc)]);
    criterion_5(&mut r, &sc, start);
    criterion_8a(&mut r, &sc);
    criterion_6(&mut r);
    criterion_7_8b(&mut r);

    let failed: Vec<&str> = r.lines.iter().filter(|l| !l.1).map(|l| l.0.as_str()).collect();
    let unexpected: Vec<&&str> = failed.iter().filter(|id| !KNOWN_DEVIATIONS.contains(id)).collect();
    println!("\n{} checks, {} failed ({} known deviations)", r.lines.len(), failed.len(), failed.len() - unexpected.len());
    if !unexpected.is_empty() {
        std::process::exit(1);
    }
}
