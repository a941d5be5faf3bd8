//! Damped Newton iteration, thermal-equilibrium solve and the time-stepping
//! driver for voltage sweeps.

use serde::{Deserialize, Serialize};

use crate::assembly::{dof, finite_difference_jacobian, Assembled, Assembler, AssemblyError, DeviceState, TimeStep, FIELDS, PSI};
use crate::device::{DeviceError, InitialState};
use crate::linalg::{BandMatrix, LinalgError};
use crate::observables::{
    contact_currents, discrete_dissipation, discrete_entropy, exchange_current, ion_mass, FaceMean, SweepRow,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum JacobianMode {
    #[default]
    Analytic,
    FiniteDifference,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct NewtonSettings {
    /// Bound on `max_i |R_i|`.
    pub abs_tol: f64,
    /// Bound on `max_i |R_i| / s_i`, with `s_i` the sum of the magnitudes of
    /// the terms of row `i`.
    pub rel_tol: f64,
    pub max_iterations: usize,
    /// Damping of the first iteration.
    pub initial_damping: f64,
    /// Damping growth after an accepted step.
    pub damping_growth: f64,
    /// Damping reduction on a rejected trial.
    pub damping_shrink: f64,
    pub min_damping: f64,
    /// Require a decrease of the scaled residual for a trial to be accepted.
    pub line_search: bool,
    /// Largest change of any scaled potential in one iteration.
    pub max_update: f64,
    pub jacobian: JacobianMode,
}

impl Default for NewtonSettings {
    fn default() -> Self {
        NewtonSettings {
            abs_tol: 1e-30,
            rel_tol: 1e-12,
            max_iterations: 30,
            initial_damping: 1.0,
            damping_growth: 2.0,
            damping_shrink: 0.5,
            min_damping: 1e-6,
            line_search: true,
            max_update: 20.0,
            jacobian: JacobianMode::Analytic,
        }
    }
}

impl NewtonSettings {
    pub fn violations(&self, prefix: &str) -> Vec<(String, String)> {
        let mut out = Vec::new();
        let mut positive = |name: &str, v: f64| {
            if !(v > 0.0 && v.is_finite()) {
                out.push((format!("{prefix}.{name}"), format!("must be positive, got {v}")));
            }
        };
        positive("abs_tol", self.abs_tol);
        positive("rel_tol", self.rel_tol);
        positive("initial_damping", self.initial_damping);
        positive("min_damping", self.min_damping);
        positive("max_update", self.max_update);
        if self.max_iterations == 0 {
            out.push((format!("{prefix}.max_iterations"), "must be at least 1".into()));
        }
        if !(self.damping_growth >= 1.0) {
            out.push((format!("{prefix}.damping_growth"), format!("must be >= 1, got {}", self.damping_growth)));
        }
        if !(self.damping_shrink > 0.0 && self.damping_shrink < 1.0) {
            out.push((format!("{prefix}.damping_shrink"), format!("must lie in (0, 1), got {}", self.damping_shrink)));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SolverError {
    #[error("newton did not converge in {iterations} iterations; scaled residuals {history:?}")]
    NonConvergence { iterations: usize, history: Vec<f64> },
    #[error("line search failed after {iterations} iterations; scaled residuals {history:?}")]
    Damping { iterations: usize, history: Vec<f64> },
    #[error(transparent)]
    Assembly(#[from] AssemblyError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Device(#[from] DeviceError),
    #[error("time step fell below {tau_min:e} s at t = {t} s: {cause}")]
    StepUnderflow { t: f64, tau_min: f64, cause: Box<SolverError> },
    #[error("initial state has {got} cells, mesh has {expected}")]
    InitialSize { got: usize, expected: usize },
    #[error("could not find a charge-neutral potential in cell {0}")]
    Neutrality(usize),
}

/// Outcome of a converged Newton solve.
#[derive(Debug, Clone, PartialEq)]
pub struct NewtonReport {
    pub iterations: usize,
    /// Scaled residual norm before each iteration and at the end.
    pub history: Vec<f64>,
}

impl NewtonReport {
    pub fn final_residual(&self) -> f64 {
        *self.history.last().unwrap_or(&0.0)
    }
}

fn merit(a: &Assembled, scale: &[f64]) -> f64 {
    a.residual
        .iter()
        .zip(scale)
        .map(|(r, s)| if *s > 0.0 { (r / s).powi(2) } else { r * r })
        .sum::<f64>()
        .sqrt()
}

fn acceptable(a: &Assembled) -> bool {
    a.residual.iter().all(|r| r.is_finite())
}

/// Damped Newton iteration on `eval`, which returns the residual and, when
/// asked, the Jacobian. Trial points at which `eval` fails (inadmissible
/// densities) shorten the step.
pub fn damped_newton<F>(x0: &[f64], settings: &NewtonSettings, mut eval: F) -> Result<(Vec<f64>, NewtonReport), SolverError>
where
    F: FnMut(&[f64], bool) -> Result<Assembled, AssemblyError>,
{
    let converged = |a: &Assembled| a.scaled_norm() <= settings.rel_tol || a.max_abs() <= settings.abs_tol;
    let mut x = x0.to_vec();
    let mut a = eval(&x, true)?;
    let mut history = vec![a.scaled_norm()];
    let mut damping = settings.initial_damping.min(1.0);
    for it in 0..settings.max_iterations {
        if converged(&a) {
            return Ok((x, NewtonReport { iterations: it, history }));
        }
        let jac: BandMatrix = a.jacobian.take().expect("jacobian requested");
        let mut delta: Vec<f64> = a.residual.iter().map(|r| -r).collect();
        jac.factorize()?.solve_in_place(&mut delta);
        if delta.iter().any(|d| !d.is_finite()) {
            return Err(SolverError::Linalg(LinalgError::Singular(0)));
        }
        let big = delta.iter().fold(0.0f64, |m, d| m.max(d.abs()));
        let mut lam = damping.min(settings.max_update / big).min(1.0);
        let m0 = merit(&a, &a.scale);
        // Close to round-off the merit stops decreasing reliably.
        let near = a.scaled_norm() <= 1e3 * settings.rel_tol;
        let mut trial = vec![0.0; x.len()];
        let accepted = loop {
            for ((t, xi), di) in trial.iter_mut().zip(&x).zip(&delta) {
                *t = xi + lam * di;
            }
            if let Ok(b) = eval(&trial, true) {
                if acceptable(&b) && (!settings.line_search || near || merit(&b, &a.scale) <= (1.0 - 1e-4 * lam) * m0) {
                    break Some(b);
                }
            }
            lam *= settings.damping_shrink;
            if lam < settings.min_damping {
                break None;
            }
        };
        let Some(b) = accepted else {
            return Err(SolverError::Damping { iterations: it, history });
        };
        let step = delta.iter().zip(&x).map(|(d, xi)| (lam * d).abs() / (1.0 + xi.abs())).fold(0.0, f64::max);
        std::mem::swap(&mut x, &mut trial);
        a = b;
        history.push(a.scaled_norm());
        damping = (lam * settings.damping_growth).min(1.0);
        // A full step that no longer moves the iterate: round-off floor.
        if lam == 1.0 && step <= 4.0 * f64::EPSILON && a.scaled_norm() <= 1e3 * settings.rel_tol {
            return Ok((x, NewtonReport { iterations: it + 1, history }));
        }
    }
    if converged(&a) {
        return Ok((x, NewtonReport { iterations: settings.max_iterations, history }));
    }
    Err(SolverError::NonConvergence { iterations: settings.max_iterations, history })
}

/// One implicit Euler step from `prev` to scaled voltages `applied` with
/// scaled step `tau`, starting Newton at `guess`.
pub fn newton_step(
    asm: &Assembler<'_>,
    guess: &[f64],
    prev: &[f64],
    tau: f64,
    applied: &[f64],
    settings: &NewtonSettings,
) -> Result<(Vec<f64>, NewtonReport), SolverError> {
    let step = TimeStep { prev, tau };
    damped_newton(guess, settings, |x, jac| {
        let mut a = asm.assemble(x, applied, &step, jac && settings.jacobian == JacobianMode::Analytic)?;
        if jac && settings.jacobian == JacobianMode::FiniteDifference {
            a.jacobian = Some(finite_difference_jacobian(asm, x, applied, &step)?);
        }
        Ok(a)
    })
}

/// Net charge of cell `k` as a function of `psi` with fixed quasi Fermi
/// potentials; strictly decreasing in `psi`.
fn cell_charge(asm: &Assembler<'_>, phi: [f64; 3], k: usize, psi: f64) -> f64 {
    let d = asm.device;
    let p = &d.params;
    let n = [0, 1, 2].map(|a| d.carriers[a].density(phi[a], psi));
    let z = d.carriers.map(|c| c.charge);
    p.delta_n * (z[0] * n[0] + p.delta_p * (z[1] * n[1] + d.doping.sign * d.doping.density[k])) + z[2] * n[2]
}

/// `psi` making cell `k` charge neutral, by bisection.
fn neutral_potential(asm: &Assembler<'_>, phi: [f64; 3], k: usize, start: f64) -> Result<f64, SolverError> {
    let admissible = |psi: f64| asm.device.carriers.iter().enumerate().all(|(a, c)| {
        let n = c.density(phi[a], psi);
        n > 0.0 && n.is_finite() && c.saturation().is_none_or(|s| n < s)
    });
    let f = |psi: f64| if admissible(psi) { cell_charge(asm, phi, k, psi) } else { f64::NAN };
    let (mut lo, mut hi) = (start - 1.0, start + 1.0);
    let mut w = 1.0;
    // f > 0 (or saturated defects) at lo, f < 0 at hi.
    while !(f(lo) > 0.0) {
        w *= 2.0;
        lo = start - w;
        if w > 1e4 {
            return Err(SolverError::Neutrality(k));
        }
    }
    w = 1.0;
    while !(f(hi) < 0.0) {
        w *= 2.0;
        hi = start + w;
        if w > 1e4 {
            return Err(SolverError::Neutrality(k));
        }
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Solve the Poisson equation for `psi` with the quasi Fermi potentials of
/// `values` held fixed; `psi` starts from local charge neutrality.
pub fn solve_poisson(
    asm: &Assembler<'_>,
    values: &[f64],
    applied: &[f64],
    settings: &NewtonSettings,
) -> Result<(Vec<f64>, NewtonReport), SolverError> {
    let nc = asm.mesh.cell_count();
    let mut full = values.to_vec();
    for k in 0..nc {
        let phi = [values[dof(k, 0)], values[dof(k, 1)], values[dof(k, 2)]];
        full[dof(k, PSI)] = neutral_potential(asm, phi, k, asm.device.dirichlet.psi)?;
    }
    let psi0: Vec<f64> = (0..nc).map(|k| full[dof(k, PSI)]).collect();
    let mut work = full.clone();
    let (psi, report) = damped_newton(&psi0, settings, |psi, jac| {
        for (k, p) in psi.iter().enumerate() {
            work[dof(k, PSI)] = *p;
        }
        asm.assemble_poisson(&work, applied, jac)
    })?;
    for (k, p) in psi.into_iter().enumerate() {
        full[dof(k, PSI)] = p;
    }
    Ok((full, report))
}

/// Thermal equilibrium: every quasi Fermi potential equals the equilibrium
/// contact potential and no voltage is applied.
pub fn solve_equilibrium(asm: &Assembler<'_>, settings: &NewtonSettings) -> Result<DeviceState, SolverError> {
    let nc = asm.mesh.cell_count();
    let contacts = asm.mesh.contact_count;
    let mut state = DeviceState::zeros(nc, contacts);
    let phi = asm.device.dirichlet.phi;
    for k in 0..nc {
        for a in 0..3 {
            state.values[dof(k, a)] = phi;
        }
    }
    let (values, _) = solve_poisson(asm, &state.values, &state.applied, settings)?;
    state.values = values;
    Ok(state)
}

/// Initial state of a transient at `t = 0`.
pub fn initial_state(asm: &Assembler<'_>, init: &InitialState, settings: &NewtonSettings) -> Result<DeviceState, SolverError> {
    match init {
        InitialState::ThermalEquilibrium => solve_equilibrium(asm, settings),
        InitialState::Explicit { phi_n, phi_p, phi_a } => {
            let nc = asm.mesh.cell_count();
            for v in [phi_n, phi_p, phi_a] {
                if v.len() != nc {
                    return Err(SolverError::InitialSize { got: v.len(), expected: nc });
                }
            }
            let applied = asm.device.applied_voltages(0.0)?;
            let mut values = vec![0.0; FIELDS * nc];
            for k in 0..nc {
                values[dof(k, 0)] = phi_n[k];
                values[dof(k, 1)] = phi_p[k];
                values[dof(k, 2)] = phi_a[k];
            }
            let (values, _) = solve_poisson(asm, &values, &applied, settings)?;
            Ok(DeviceState { values, time: 0.0, applied })
        }
    }
}

/// Choice of time levels.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "policy", rename_all = "kebab-case", deny_unknown_fields)]
pub enum GridPolicy {
    /// `steps_per_cycle` equal steps per protocol cycle (per run for constant
    /// protocols); failed steps are split internally.
    Uniform { steps_per_cycle: usize },
    /// Steps in s, grown by `grow` after each success and halved on failure.
    Adaptive { tau_init: f64, tau_min: f64, tau_max: f64, grow: f64 },
}

impl Default for GridPolicy {
    fn default() -> Self {
        GridPolicy::Uniform { steps_per_cycle: 400 }
    }
}

impl GridPolicy {
    pub fn violations(&self, prefix: &str) -> Vec<(String, String)> {
        let mut out = Vec::new();
        match *self {
            GridPolicy::Uniform { steps_per_cycle } => {
                if steps_per_cycle == 0 {
                    out.push((format!("{prefix}.steps_per_cycle"), "must be at least 1".into()));
                }
            }
            GridPolicy::Adaptive { tau_init, tau_min, tau_max, grow } => {
                for (name, v) in [("tau_init", tau_init), ("tau_min", tau_min), ("tau_max", tau_max)] {
                    if !(v > 0.0 && v.is_finite()) {
                        out.push((format!("{prefix}.{name}"), format!("must be positive, got {v}")));
                    }
                }
                if !(tau_min <= tau_init && tau_init <= tau_max) {
                    out.push((format!("{prefix}.tau_init"), "need tau_min <= tau_init <= tau_max".into()));
                }
                if !(grow >= 1.0) {
                    out.push((format!("{prefix}.grow"), format!("must be >= 1, got {grow}")));
                }
            }
        }
        out
    }
}

/// Time levels `t^1 < ... < t^M` (s) of a uniform policy, with the requested
/// snapshot times inserted.
pub fn uniform_grid(horizon: f64, steps: usize, extra: &[f64]) -> Vec<f64> {
    let dt = horizon / steps as f64;
    let mut t: Vec<f64> = (1..=steps).map(|m| if m == steps { horizon } else { m as f64 * dt }).collect();
    let tol = 1e-9 * dt;
    for &s in extra {
        if !(s > 0.0 && s < horizon) {
            continue;
        }
        match t.iter_mut().find(|x| (**x - s).abs() <= tol) {
            Some(x) => *x = s,
            None => t.push(s),
        }
    }
    t.sort_by(f64::total_cmp);
    t
}

/// Options of [`run_sweep`].
#[derive(Debug, Clone, PartialEq)]
pub struct SweepOptions {
    pub newton: NewtonSettings,
    pub grid: GridPolicy,
    /// Times (s) at which the full state is kept.
    pub snapshot_times: Vec<f64>,
    pub face_mean: FaceMean,
    /// Number of halvings allowed below the nominal uniform step.
    pub max_halvings: u32,
    /// Final time (s); defaults to the protocol horizon.
    pub horizon: Option<f64>,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            newton: NewtonSettings::default(),
            grid: GridPolicy::default(),
            snapshot_times: Vec::new(),
            face_mean: FaceMean::default(),
            max_halvings: 12,
            horizon: None,
        }
    }
}

/// Solver statistics of one recorded step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepDiagnostics {
    pub t: f64,
    pub newton_iterations: usize,
    pub residual: f64,
    pub substeps: usize,
    /// Largest one-way carrier current through a contact, A. Sets the
    /// round-off level of the contact currents.
    pub exchange_current: f64,
}

/// Recorded observables, solver statistics and kept states of a sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub rows: Vec<SweepRow>,
    pub steps: Vec<StepDiagnostics>,
    pub snapshots: Vec<DeviceState>,
    pub final_state: DeviceState,
    pub cycle_period: Option<f64>,
}

impl Trajectory {
    /// Zero-based cycle index of a time; the end point of a cycle belongs to it.
    pub fn cycle_of(&self, t: f64) -> usize {
        match self.cycle_period {
            Some(p) => ((t / p) - 1e-9).ceil().max(1.0) as usize - 1,
            None => 0,
        }
    }

    /// Rows of one cycle, including the point where it starts.
    pub fn cycle_rows(&self, cycle: usize) -> Vec<SweepRow> {
        let Some(p) = self.cycle_period else { return self.rows.clone() };
        let (a, b) = (cycle as f64 * p, (cycle + 1) as f64 * p);
        let tol = 1e-9 * p;
        self.rows.iter().filter(|r| r.t >= a - tol && r.t <= b + tol).copied().collect()
    }

    pub fn snapshot_at(&self, t: f64) -> Option<&DeviceState> {
        self.snapshots.iter().find(|s| (s.time - t).abs() <= 1e-9 * t.abs().max(1.0))
    }
}

/// A sweep that stopped early, with everything recorded so far.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("sweep failed at t = {t} s: {error}")]
pub struct SweepFailure {
    pub t: f64,
    pub error: SolverError,
    pub partial: Box<Trajectory>,
}

struct Recorder<'a, 'b> {
    asm: &'a Assembler<'b>,
    options: &'a SweepOptions,
    traj: Trajectory,
}

impl Recorder<'_, '_> {
    fn record(&mut self, state: &DeviceState, prev: &DeviceState, tau: f64, diag: StepDiagnostics) -> Result<(), SolverError> {
        let asm = self.asm;
        let currents = if tau > 0.0 { contact_currents(asm, state, prev, tau)? } else { vec![0.0; asm.mesh.contact_count] };
        let diag = StepDiagnostics { exchange_current: exchange_current(asm, state)?, ..diag };
        let ut = asm.device.scaling.thermal_voltage;
        let row = SweepRow {
            t: state.time,
            voltage: state.applied.get(1).copied().unwrap_or(0.0) * ut,
            current: currents.get(1).copied().unwrap_or(0.0),
            current_left: currents[0],
            entropy: discrete_entropy(asm, state)?,
            dissipation: discrete_dissipation(asm, state, self.options.face_mean)?,
            ion_mass: ion_mass(asm, state),
        };
        log::info!(
            "step={} t={:.9e} V={:.9e} I={:.9e} newton={} residual={:.3e} substeps={}",
            self.traj.rows.len(),
            row.t,
            row.voltage,
            row.current,
            diag.newton_iterations,
            diag.residual,
            diag.substeps
        );
        self.traj.rows.push(row);
        self.traj.steps.push(diag);
        let tol = 1e-9 * state.time.abs().max(1.0);
        if self.options.snapshot_times.iter().any(|s| (s - state.time).abs() <= tol) {
            self.traj.snapshots.push(state.clone());
        }
        Ok(())
    }
}

/// Advance from `state` to `target` (s), splitting the step on Newton
/// failure. Returns the new state, the state before the last substep, the
/// last scaled substep, and statistics.
fn advance(
    asm: &Assembler<'_>,
    state: &DeviceState,
    target: f64,
    tau_min: f64,
    settings: &NewtonSettings,
) -> Result<(DeviceState, DeviceState, f64, StepDiagnostics), SolverError> {
    let time_scale = asm.device.scaling.time;
    let mut cur = state.clone();
    let mut before = state.clone();
    let mut h = target - cur.time;
    let mut last_tau = 0.0;
    let mut iterations = 0;
    let mut residual = 0.0;
    let mut substeps = 0;
    while cur.time < target {
        let remaining = target - cur.time;
        let step = if h >= remaining * (1.0 - 1e-12) { remaining } else { h };
        let t_new = if step == remaining { target } else { cur.time + step };
        let applied = asm.device.applied_voltages(t_new)?;
        let tau = step / time_scale;
        match newton_step(asm, &cur.values, &cur.values, tau, &applied, settings) {
            Ok((values, report)) => {
                before = std::mem::replace(&mut cur, DeviceState { values, time: t_new, applied });
                last_tau = tau;
                iterations += report.iterations;
                residual = report.final_residual();
                substeps += 1;
                // Recover the nominal step after a split.
                h = (2.0 * step).min(target - state.time);
            }
            Err(e) => {
                h = 0.5 * step;
                if h < tau_min {
                    return Err(SolverError::StepUnderflow { t: cur.time, tau_min, cause: Box::new(e) });
                }
                log::debug!("split t={:.9e} h={:.3e} cause={}", cur.time, h, e);
            }
        }
    }
    Ok((cur, before, last_tau, StepDiagnostics { t: target, newton_iterations: iterations, residual, substeps, exchange_current: 0.0 }))
}

/// Run the device protocol from `initial` and record observables at every
/// time level.
pub fn run_sweep(asm: &Assembler<'_>, initial: DeviceState, options: &SweepOptions) -> Result<Trajectory, SweepFailure> {
    let protocol = &asm.device.signals[1];
    let horizon = options.horizon.or_else(|| protocol.horizon()).unwrap_or(0.0);
    let period = protocol.cycle_period();
    let mut rec = Recorder {
        asm,
        options,
        traj: Trajectory { rows: Vec::new(), steps: Vec::new(), snapshots: Vec::new(), final_state: initial.clone(), cycle_period: period },
    };
    let fail = |rec: Recorder<'_, '_>, t: f64, error: SolverError| SweepFailure { t, error, partial: Box::new(rec.traj) };
    let zero = StepDiagnostics { t: initial.time, newton_iterations: 0, residual: 0.0, substeps: 0, exchange_current: 0.0 };
    if let Err(e) = rec.record(&initial, &initial, 0.0, zero) {
        return Err(fail(rec, initial.time, e));
    }
    let mut state = initial;
    match options.grid {
        GridPolicy::Uniform { steps_per_cycle } => {
            let cycles = match (period, protocol.horizon()) {
                (Some(p), Some(_)) => (horizon / p).round().max(1.0) as usize,
                _ => 1,
            };
            let steps = steps_per_cycle * cycles;
            let tau_min = horizon / steps as f64 / 2f64.powi(options.max_halvings as i32);
            for t in uniform_grid(horizon, steps, &options.snapshot_times) {
                match advance(asm, &state, t, tau_min, &options.newton) {
                    Ok((next, before, tau, diag)) => {
                        if let Err(e) = rec.record(&next, &before, tau, diag) {
                            return Err(fail(rec, t, e));
                        }
                        state = next;
                    }
                    Err(e) => {
                        rec.traj.final_state = state;
                        return Err(fail(rec, t, e));
                    }
                }
            }
        }
        GridPolicy::Adaptive { tau_init, tau_min, tau_max, grow } => {
            let mut stops: Vec<f64> = options.snapshot_times.iter().copied().filter(|s| *s > 0.0 && *s < horizon).collect();
            stops.push(horizon);
            stops.sort_by(f64::total_cmp);
            let mut dt = tau_init;
            for stop in stops {
                while state.time < stop * (1.0 - 1e-12) {
                    let target = (state.time + dt).min(stop);
                    match advance(asm, &state, target, tau_min, &options.newton) {
                        Ok((next, before, tau, diag)) => {
                            if diag.substeps > 1 {
                                dt = (target - state.time) / diag.substeps as f64;
                            } else {
                                dt = (dt * grow).min(tau_max);
                            }
                            if let Err(e) = rec.record(&next, &before, tau, diag) {
                                return Err(fail(rec, target, e));
                            }
                            state = next;
                        }
                        Err(e) => {
                            rec.traj.final_state = state;
                            return Err(fail(rec, target, e));
                        }
                    }
                }
            }
        }
    }
    rec.traj.final_state = state;
    Ok(rec.traj)
}
