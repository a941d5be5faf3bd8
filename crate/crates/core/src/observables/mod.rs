//! Contact currents, discrete entropy and dissipation, ion mass, space
//! charge, run-comparison metrics and tabular output.

mod io;

pub use io::{read_snapshot, read_sweep_csv, write_snapshot, write_sweep_csv, Snapshot, SweepRow};

use serde::{Deserialize, Serialize};

use crate::assembly::{dof, AssemblyError, Assembler, DeviceState};
use crate::device::ContactModel;
use crate::physics::{bernoulli, relative_entropy_eta, Species};

/// Average density on a face entering the dissipation.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FaceMean {
    /// `(a - b) / (log a - log b)`.
    #[default]
    Logarithmic,
    /// The mean for which the face flux equals `-z^2 tau m nbar D phi`,
    /// `nbar = n_K B(Q) / B(z D phi)`.
    FluxConsistent,
}

impl FaceMean {
    fn mean(self, z: f64, dphi: f64, q: f64, n_k: f64, n_l: f64) -> f64 {
        match self {
            FaceMean::Logarithmic => log_mean(n_k, n_l),
            FaceMean::FluxConsistent => n_k * bernoulli(q) / bernoulli(z * dphi),
        }
    }
}

/// Logarithmic mean, continuous at `a = b`.
pub fn log_mean(a: f64, b: f64) -> f64 {
    let r = b / a;
    if (r - 1.0).abs() < 1e-4 {
        // a * (1 + e/2 - e^2/12 + e^3/24), e = r - 1
        let e = r - 1.0;
        a * (1.0 + e * (0.5 + e * (-1.0 / 12.0 + e / 24.0)))
    } else {
        (b - a) / r.ln()
    }
}

/// Current in A flowing into the device through each contact, including the
/// displacement term from the change of the Poisson boundary flux over the step.
/// `tau` is the scaled step between `prev` and `state`.
pub fn contact_currents(
    asm: &Assembler<'_>,
    state: &DeviceState,
    prev: &DeviceState,
    tau: f64,
) -> Result<Vec<f64>, AssemblyError> {
    let device = asm.device;
    let p = &device.params;
    let lam2 = p.lambda_sq();
    let weights = [p.delta_n / p.nu, p.delta_n * p.delta_p / p.nu, 1.0];
    let now = asm.boundary_traces(&state.values, &state.applied)?;
    let before = asm.boundary_traces(&prev.values, &prev.applied)?;
    let mut out = vec![0.0; asm.mesh.contact_count];
    for (t, b) in now.iter().zip(&before) {
        let conduction: f64 = (0..3).map(|a| weights[a] * t.flux[a]).sum();
        let displacement = lam2 * t.transmissibility * ((t.psi - t.psi_cell) - (b.psi - b.psi_cell)) / tau;
        out[t.contact] -= conduction - displacement;
    }
    let scale = device.current_scale();
    Ok(out.into_iter().map(|i| i * scale).collect())
}

/// Largest charge-weighted one-way carrier current through any contact, A.
/// Contact currents carry round-off of order `1e-16` times this value.
pub fn exchange_current(asm: &Assembler<'_>, state: &DeviceState) -> Result<f64, AssemblyError> {
    let p = &asm.device.params;
    let weights = [p.delta_n / p.nu, p.delta_n * p.delta_p / p.nu, 1.0];
    let mut per_contact = vec![0.0; asm.mesh.contact_count];
    for t in asm.boundary_traces(&state.values, &state.applied)? {
        per_contact[t.contact] += (0..3).map(|a| weights[a] * t.gross[a]).sum::<f64>();
    }
    Ok(per_contact.into_iter().fold(0.0, f64::max) * asm.device.current_scale())
}

/// Current into the device through one contact.
pub fn total_current(
    asm: &Assembler<'_>,
    state: &DeviceState,
    prev: &DeviceState,
    tau: f64,
    contact: usize,
) -> Result<f64, ObservableError> {
    if contact >= asm.mesh.contact_count {
        return Err(ObservableError::UnknownContact(contact));
    }
    Ok(contact_currents(asm, state, prev, tau)?[contact])
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ObservableError {
    #[error("unknown contact {0}")]
    UnknownContact(usize),
    #[error(transparent)]
    Assembly(#[from] AssemblyError),
    #[error("series lengths differ: {0} vs {1}")]
    Length(usize, usize),
}

/// Reference potential `psi^D(x_K) + Vhat_K` of every cell, with `Vhat` the
/// linear interpolation of the contact voltages.
pub fn reference_potential(asm: &Assembler<'_>, applied: &[f64]) -> Vec<f64> {
    let ext = asm.device.voltage_extension(asm.mesh, applied);
    asm.mesh.cells.iter().zip(ext).map(|(c, v)| asm.device.dirichlet.psi_at(c.center) + v).collect()
}

/// Discrete relative entropy of `state` (dimensionless, non-negative).
pub fn discrete_entropy(asm: &Assembler<'_>, state: &DeviceState) -> Result<f64, AssemblyError> {
    let device = asm.device;
    let mesh = asm.mesh;
    let p = &device.params;
    let reference = reference_potential(asm, &state.applied);
    let u: Vec<f64> = (0..mesh.cell_count()).map(|k| state.psi(k) - reference[k]).collect();
    let mut field = 0.0;
    for (k, l, tau) in asm.interior_faces() {
        field += tau * (u[l] - u[k]).powi(2);
    }
    // On contact faces psi_sigma and its reference coincide.
    for t in asm.boundary_traces(&state.values, &state.applied)? {
        field += t.transmissibility * u[t.cell].powi(2);
    }
    let weights = [p.delta_n, p.delta_n * p.delta_p];
    let mut chem = 0.0;
    for (k, cell) in mesh.cells.iter().enumerate() {
        let [n_d, p_d] = device.equilibrium_densities_at(cell.center);
        for (a, n_ref) in [(0, n_d), (1, p_d)] {
            let c = &device.carriers[a];
            let eta = c.eta(state.values[dof(k, a)], state.psi(k));
            let eta_ref = c.eta_of_density(n_ref)?;
            chem += cell.measure * weights[a] * c.prefactor * relative_entropy_eta(c.statistics, eta, eta_ref);
        }
        let c = &device.carriers[2];
        let eta = c.eta(state.phi(Species::Defect, k), state.psi(k));
        // Phi_a normalized so that its minimum, at eta = shift, is zero.
        chem += cell.measure * c.prefactor * relative_entropy_eta(c.statistics, eta, c.shift);
    }
    Ok(0.5 * p.lambda_sq() * field + chem)
}

/// Discrete dissipation rate of `state` (dimensionless, non-negative).
pub fn discrete_dissipation(asm: &Assembler<'_>, state: &DeviceState, mean: FaceMean) -> Result<f64, AssemblyError> {
    let device = asm.device;
    let p = &device.params;
    let weights = [p.delta_n / p.nu, p.delta_n * p.delta_p / p.nu, 1.0];
    let cells = asm.evaluate_cells(&state.values)?;
    let mut total = 0.0;
    for (k, l, tau) in asm.interior_faces() {
        for a in 0..3 {
            let c = &device.carriers[a];
            if c.mobility == 0.0 {
                continue;
            }
            let z = c.charge;
            let (sk, sl) = (&cells[k].s[a], &cells[l].s[a]);
            let dphi = state.values[dof(l, a)] - state.values[dof(k, a)];
            let q = z * (cells[l].psi - cells[k].psi) - (sl.g - sk.g);
            let nbar = mean.mean(z, dphi, q, sk.n, sl.n);
            total += 0.5 * weights[a] * z * z * c.mobility * tau * nbar * dphi * dphi;
        }
    }
    for t in asm.boundary_traces(&state.values, &state.applied)? {
        for a in 0..2 {
            let c = &device.carriers[a];
            if c.mobility == 0.0 {
                continue;
            }
            let z = c.charge;
            let sk = &cells[t.cell].s[a];
            // phi on the face from its chemical potential.
            let phi_s = (t.eta[a] - c.shift) / z + t.psi;
            let dphi = phi_s - state.values[dof(t.cell, a)];
            let q = z * (t.psi - t.psi_cell) - (c.statistics.log_excess(t.eta[a]) - sk.g);
            let nbar = mean.mean(z, dphi, q, sk.n, t.density[a]);
            total += 0.5 * weights[a] * z * z * c.mobility * t.transmissibility * nbar * dphi * dphi;
            if device.model == ContactModel::Schottky {
                let v = device.velocities[a];
                total += weights[a] * v * t.measure * (t.eta[a] - t.eta_d[a]) * (t.density[a] - t.density_d[a]);
            }
        }
    }
    Ok(total)
}

/// `(E^m - E^{m-1}) / tau + D^m`.
pub fn entropy_dissipation_residual(entropy_prev: f64, entropy: f64, dissipation: f64, tau: f64) -> f64 {
    (entropy - entropy_prev) / tau + dissipation
}

/// Mean ion density `(1/|Omega|) sum_K |K| n_{a,K}`.
pub fn ion_mass(asm: &Assembler<'_>, state: &DeviceState) -> f64 {
    let c = &asm.device.carriers[2];
    let total: f64 = asm
        .mesh
        .cells
        .iter()
        .enumerate()
        .map(|(k, cell)| cell.measure * c.density(state.phi(Species::Defect, k), state.psi(k)))
        .sum();
    total / asm.mesh.domain_measure
}

/// Right-hand side of the Poisson equation per cell (dimensionless).
pub fn space_charge(asm: &Assembler<'_>, state: &DeviceState) -> Vec<f64> {
    let device = asm.device;
    let p = &device.params;
    let z = device.carriers.map(|c| c.charge);
    state
        .densities(device)
        .iter()
        .enumerate()
        .map(|(k, n)| {
            let doping = device.doping.sign * device.doping.density[k];
            p.delta_n * (z[0] * n[0] + p.delta_p * (z[1] * n[1] + doping)) + z[2] * n[2]
        })
        .collect()
}

/// Conversion of dimensionless space charge to C/m^3.
pub fn space_charge_scale(asm: &Assembler<'_>) -> f64 {
    crate::physics::ELEMENTARY_CHARGE * asm.device.scaling.defect_density
}

/// `|a - b| / |a|` pointwise.
pub fn relative_density_difference(a: &[f64], b: &[f64]) -> Result<Vec<f64>, ObservableError> {
    if a.len() != b.len() {
        return Err(ObservableError::Length(a.len(), b.len()));
    }
    Ok(a.iter().zip(b).map(|(x, y)| ((x - y) / x).abs()).collect())
}

/// `|I_a - I_b| / |I_a|`, with samples where `|I_a|` falls below
/// `1e-15 max |I_a|` masked as `None`.
pub fn relative_current_difference(a: &[f64], b: &[f64]) -> Result<Vec<Option<f64>>, ObservableError> {
    relative_current_difference_with_floor(a, b, 1e-15)
}

/// As [`relative_current_difference`] with a custom relative masking floor.
pub fn relative_current_difference_with_floor(a: &[f64], b: &[f64], floor: f64) -> Result<Vec<Option<f64>>, ObservableError> {
    if a.len() != b.len() {
        return Err(ObservableError::Length(a.len(), b.len()));
    }
    let max = a.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    Ok(a.iter()
        .zip(b)
        .map(|(x, y)| if x.abs() <= floor * max { None } else { Some(((x - y) / x).abs()) })
        .collect())
}

/// Relative l2 distance of the current magnitudes, normalized by run `i`.
pub fn l2_current_error(i: &[f64], j: &[f64]) -> Result<f64, ObservableError> {
    if i.len() != j.len() {
        return Err(ObservableError::Length(i.len(), j.len()));
    }
    let num: f64 = i.iter().zip(j).map(|(a, b)| (a.abs() - b.abs()).powi(2)).sum();
    let den: f64 = i.iter().map(|a| a * a).sum();
    Ok((num / den).sqrt())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Orientation {
    Clockwise,
    Counterclockwise,
    Degenerate,
}

/// Half-plane of an I-V branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Positive,
    Negative,
}

/// Signed shoelace area of the closed `(V, I)` polygon of the samples with
/// `V` in the branch half-plane (`V = 0` belongs to both). Positive means
/// counterclockwise.
pub fn loop_area(v: &[f64], i: &[f64], branch: Branch) -> f64 {
    let pts: Vec<(f64, f64)> = v
        .iter()
        .zip(i)
        .filter(|(v, _)| match branch {
            Branch::Positive => **v >= 0.0,
            Branch::Negative => **v <= 0.0,
        })
        .map(|(a, b)| (*a, *b))
        .collect();
    if pts.len() < 3 {
        return 0.0;
    }
    let mut twice = 0.0;
    for w in 0..pts.len() {
        let (x0, y0) = pts[w];
        let (x1, y1) = pts[(w + 1) % pts.len()];
        twice += x0 * y1 - x1 * y0;
    }
    0.5 * twice
}

/// Orientation of one branch; loops with `|area| < 1e-6 max|V| max|I|` are
/// degenerate.
pub fn loop_orientation(v: &[f64], i: &[f64], branch: Branch) -> Orientation {
    let area = loop_area(v, i, branch);
    let vmax = v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let imax = i.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    if area.abs() < 1e-6 * vmax * imax || area == 0.0 {
        Orientation::Degenerate
    } else if area > 0.0 {
        Orientation::Counterclockwise
    } else {
        Orientation::Clockwise
    }
}

/// Orientation of one branch on the `(V, |I|)` plane, the view of the usual
/// semilogarithmic I-V plot. On a branch with `I >= 0` this equals
/// [`loop_orientation`]; on a branch with `I <= 0` it is mirrored.
pub fn magnitude_loop_orientation(v: &[f64], i: &[f64], branch: Branch) -> Orientation {
    let mag: Vec<f64> = i.iter().map(|x| x.abs()).collect();
    loop_orientation(v, &mag, branch)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle_orientation() {
        let n = 64;
        let t: Vec<f64> = (0..n).map(|k| std::f64::consts::TAU * k as f64 / n as f64).collect();
        let v: Vec<f64> = t.iter().map(|t| 1.0 + t.cos()).collect();
        let i: Vec<f64> = t.iter().map(|t| -t.sin()).collect();
        assert_eq!(loop_orientation(&v, &i, Branch::Positive), Orientation::Clockwise);
        let i2: Vec<f64> = i.iter().map(|x| -x).collect();
        assert_eq!(loop_orientation(&v, &i2, Branch::Positive), Orientation::Counterclockwise);
    }

    #[test]
    fn magnitude_view_mirrors_negative_currents() {
        let n = 64;
        let t: Vec<f64> = (0..n).map(|k| std::f64::consts::TAU * k as f64 / n as f64).collect();
        // A clockwise loop at V < 0 and I < 0 ...
        let v: Vec<f64> = t.iter().map(|t| -2.0 + t.cos()).collect();
        let i: Vec<f64> = t.iter().map(|t| -2.0 - t.sin()).collect();
        assert_eq!(loop_orientation(&v, &i, Branch::Negative), Orientation::Clockwise);
        // ... is counterclockwise once the current axis is folded.
        assert_eq!(magnitude_loop_orientation(&v, &i, Branch::Negative), Orientation::Counterclockwise);
    }

    #[test]
    fn retraced_line_is_degenerate() {
        let v = [0.0, 1.0, 2.0, 1.0, 0.0];
        let i = [0.0, 0.5, 1.0, 0.5, 0.0];
        assert_eq!(loop_orientation(&v, &i, Branch::Positive), Orientation::Degenerate);
    }

    #[test]
    fn log_mean_is_smooth() {
        assert_eq!(log_mean(2.0, 2.0), 2.0);
        let y = 1.0 + 1e-5;
        let a = log_mean(1.0, y);
        let b = (y - 1.0) / y.ln();
        assert!((a - b).abs() < 1e-12);
        assert!((log_mean(1.0, std::f64::consts::E) - (std::f64::consts::E - 1.0)).abs() < 1e-15);
    }

    #[test]
    fn l2_error_normalization() {
        let a = [1.0, -2.0, 3.0];
        assert_eq!(l2_current_error(&a, &a).unwrap(), 0.0);
        assert_eq!(l2_current_error(&a, &[0.0; 3]).unwrap(), 1.0);
        let b = [2.0, -2.0, 3.0];
        assert_ne!(l2_current_error(&a, &b).unwrap(), l2_current_error(&b, &a).unwrap());
    }

    #[test]
    fn masked_samples() {
        let a = [1.0, 0.0, -2.0];
        let b = [1.01, 5.0, -2.0];
        let d = relative_current_difference(&a, &b).unwrap();
        assert!(d[1].is_none());
        assert!((d[0].unwrap() - 0.01).abs() < 1e-12);
        assert_eq!(d[2], Some(0.0));
    }
}
