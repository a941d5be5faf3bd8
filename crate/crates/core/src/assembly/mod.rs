//! Implicit Euler two-point-flux residual of the coupled system and its
//! Jacobian.
//!
//! Unknowns are interleaved per cell as `[phi_n, phi_p, phi_a, psi]`, so a
//! mesh with cell bandwidth `b` gives a matrix with `4 b + 3` sub- and
//! superdiagonals.
//!
//! Row `(alpha, K)` is the mass balance
//! `t_alpha z |K| (n^m - n^{m-1}) / tau + sum_sigma J_{K,sigma}`, with
//! `t = nu` for electrons and holes and `t = 1` for defects. Row `(psi, K)`
//! is `-lambda^2 sum_sigma tau_sigma (psi_L - psi_K) - |K| rho_K`.

mod fd;
mod schottky;

pub use fd::finite_difference_jacobian;
pub use schottky::{schottky_balance, solve_schottky_boundary_density, SchottkyFace, SchottkyRoot};

use crate::device::{ContactModel, Device};
use crate::linalg::BandMatrix;
use crate::mesh::{AdmissibleMesh, BoundaryTag, FaceKind};
use crate::physics::{bernoulli_pair, PhysicsError, ScaledCarrier, Species};

/// Fields per cell.
pub const FIELDS: usize = 4;
/// Offset of `psi` inside a cell block.
pub const PSI: usize = 3;

/// Global index of `field` in `cell`.
#[inline]
pub fn dof(cell: usize, field: usize) -> usize {
    FIELDS * cell + field
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum AssemblyError {
    #[error("inadmissible {species:?} density in cell {cell}: {value}")]
    Inadmissible { cell: usize, species: Species, value: f64 },
    #[error("could not bracket the contact trace ({} end)", if *.lower { "lower" } else { "upper" })]
    BracketFailure { lower: bool },
    #[error(transparent)]
    Physics(#[from] PhysicsError),
    #[error("state has {got} entries, expected {expected}")]
    Size { got: usize, expected: usize },
}

/// Scaled potentials of every cell together with the time (s) and the scaled
/// contact voltages they belong to.
#[derive(Debug, Clone, PartialEq)]
pub struct DeviceState {
    pub values: Vec<f64>,
    pub time: f64,
    pub applied: Vec<f64>,
}

impl DeviceState {
    pub fn zeros(cells: usize, contacts: usize) -> Self {
        DeviceState { values: vec![0.0; FIELDS * cells], time: 0.0, applied: vec![0.0; contacts] }
    }

    pub fn cells(&self) -> usize {
        self.values.len() / FIELDS
    }

    #[inline]
    pub fn phi(&self, s: Species, cell: usize) -> f64 {
        self.values[dof(cell, s.index())]
    }

    #[inline]
    pub fn psi(&self, cell: usize) -> f64 {
        self.values[dof(cell, PSI)]
    }

    /// Scaled densities `[n, p, a]` per cell.
    pub fn densities(&self, device: &Device) -> Vec<[f64; 3]> {
        (0..self.cells())
            .map(|k| Species::ALL.map(|s| device.carrier(s).density(self.phi(s, k), self.psi(k))))
            .collect()
    }

    /// One field over all cells.
    pub fn field(&self, field: usize) -> Vec<f64> {
        self.values.iter().skip(field).step_by(FIELDS).copied().collect()
    }
}

/// Previous time level and step size (scaled time).
#[derive(Debug, Clone, Copy)]
pub struct TimeStep<'a> {
    pub prev: &'a [f64],
    pub tau: f64,
}

/// Residual, per-row magnitude of its terms, and optionally the Jacobian.
#[derive(Debug, Clone)]
pub struct Assembled {
    pub residual: Vec<f64>,
    /// Sum of the absolute values of the terms entering each row.
    pub scale: Vec<f64>,
    pub jacobian: Option<BandMatrix>,
}

impl Assembled {
    /// `max_i |R_i| / scale_i`, with zero rows counting as converged.
    pub fn scaled_norm(&self) -> f64 {
        self.residual
            .iter()
            .zip(&self.scale)
            .map(|(r, s)| if *s > 0.0 { r.abs() / s } else { r.abs() })
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.residual.iter().fold(0.0, |m, r| m.max(r.abs()))
    }
}

/// Statistics of one species in one cell.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub(crate) struct SpeciesEval {
    pub eta: f64,
    pub n: f64,
    /// `dn / d eta`.
    pub dn: f64,
    /// `g = log F - eta`.
    pub g: f64,
    pub dg: f64,
}

#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct CellEval {
    pub s: [SpeciesEval; 3],
    pub psi: f64,
}

/// Face flux with derivatives with respect to the chemical potentials and `Q`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Flux {
    pub j: f64,
    pub d_eta_k: f64,
    pub d_eta_l: f64,
    pub d_q: f64,
    /// `A (B(-Q) n_L + B(Q) n_K)`.
    pub gross: f64,
}

/// `J = -z A (B(-Q) n_L - B(Q) n_K)`, `Q = z (psi_L - psi_K) - (g_L - g_K)`.
#[inline]
pub(crate) fn face_flux(z: f64, a: f64, dpsi: f64, k: &SpeciesEval, l: &SpeciesEval) -> Flux {
    let q = z * dpsi - (l.g - k.g);
    let (bp, dbp) = bernoulli_pair(q);
    let (bm, dbm) = bernoulli_pair(-q);
    let j = -z * a * (bm * l.n - bp * k.n);
    let d_q = z * a * (dbm * l.n + dbp * k.n);
    let j_nk = z * a * bp;
    let j_nl = -z * a * bm;
    Flux {
        j,
        d_eta_k: d_q * k.dg + j_nk * k.dn,
        d_eta_l: -d_q * l.dg + j_nl * l.dn,
        d_q,
        gross: a * (bm * l.n + bp * k.n),
    }
}

/// Scaled flux of `carrier` from cell K to cell L across a face of
/// transmissibility `tau`, for cell potentials `(phi, psi)`.
pub fn excess_flux(carrier: &ScaledCarrier, tau: f64, k: (f64, f64), l: (f64, f64)) -> f64 {
    let eval = |(phi, psi): (f64, f64)| {
        let eta = carrier.eta(phi, psi);
        let st = carrier.statistics.evaluate(eta);
        SpeciesEval { eta, n: carrier.prefactor * st.value, dn: 0.0, g: st.log_excess, dg: 0.0 }
    };
    face_flux(carrier.charge, tau * carrier.mobility, l.1 - k.1, &eval(k), &eval(l)).j
}

#[derive(Debug, Clone, Copy)]
enum FaceData {
    Interior { k: usize, l: usize, tau: f64 },
    Insulating,
    Contact { k: usize, contact: usize, tau: f64, measure: f64, psi_d: f64, trace: [SpeciesEval; 2] },
}

/// Trace quantities on one contact face.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryTrace {
    pub face: usize,
    pub contact: usize,
    pub cell: usize,
    pub transmissibility: f64,
    pub measure: f64,
    /// `psi_sigma`, including the applied voltage.
    pub psi: f64,
    pub psi_cell: f64,
    /// Outward fluxes `[J_n, J_p, J_a]`.
    pub flux: [f64; 3],
    /// Sum of the magnitudes of the two one-way fluxes whose difference is `flux`.
    pub gross: [f64; 3],
    /// Trace chemical potentials and densities of n and p.
    pub eta: [f64; 2],
    pub density: [f64; 2],
    /// Voltage-free Dirichlet values `eta^D`, `n^D`.
    pub eta_d: [f64; 2],
    pub density_d: [f64; 2],
}

/// Residual and Jacobian assembly for one device on one mesh.
#[derive(Debug, Clone)]
pub struct Assembler<'a> {
    pub device: &'a Device,
    pub mesh: &'a AdmissibleMesh,
    faces: Vec<FaceData>,
    band: usize,
}

impl<'a> Assembler<'a> {
    pub fn new(device: &'a Device, mesh: &'a AdmissibleMesh) -> Self {
        let faces = mesh
            .faces
            .iter()
            .map(|f| match f.kind {
                FaceKind::Interior { k, l } => FaceData::Interior { k, l, tau: f.transmissibility },
                FaceKind::Boundary { tag: BoundaryTag::Insulating, .. } => FaceData::Insulating,
                FaceKind::Boundary { k, tag: BoundaryTag::Contact(contact) } => {
                    let psi_d = device.dirichlet.psi_at(f.center);
                    let phi_d = device.dirichlet.phi_at(f.center);
                    let trace = [0, 1].map(|a| {
                        let c = &device.carriers[a];
                        let st = c.statistics.evaluate(c.eta(phi_d, psi_d));
                        SpeciesEval {
                            eta: c.eta(phi_d, psi_d),
                            n: c.prefactor * st.value,
                            dn: 0.0,
                            g: st.log_excess,
                            dg: 0.0,
                        }
                    });
                    FaceData::Contact { k, contact, tau: f.transmissibility, measure: f.measure, psi_d, trace }
                }
            })
            .collect();
        Assembler { device, mesh, faces, band: FIELDS * mesh.bandwidth() + FIELDS - 1 }
    }

    /// Number of unknowns.
    pub fn size(&self) -> usize {
        FIELDS * self.mesh.cell_count()
    }

    /// Sub- and superdiagonals of the coupled Jacobian.
    pub fn band(&self) -> usize {
        self.band
    }

    fn check_size(&self, values: &[f64]) -> Result<(), AssemblyError> {
        if values.len() != self.size() {
            return Err(AssemblyError::Size { got: values.len(), expected: self.size() });
        }
        Ok(())
    }

    /// Charge weights `[delta_n, delta_n delta_p, 1]`.
    fn charge_weights(&self) -> [f64; 3] {
        let p = &self.device.params;
        [p.delta_n, p.delta_n * p.delta_p, 1.0]
    }

    /// Time weights `[nu, nu, 1]`.
    fn time_weights(&self) -> [f64; 3] {
        let nu = self.device.params.nu;
        [nu, nu, 1.0]
    }

    pub(crate) fn evaluate_cells(&self, values: &[f64]) -> Result<Vec<CellEval>, AssemblyError> {
        self.check_size(values)?;
        let mut out = Vec::with_capacity(self.mesh.cell_count());
        for k in 0..self.mesh.cell_count() {
            let psi = values[dof(k, PSI)];
            let mut e = CellEval { psi, ..Default::default() };
            for (a, c) in self.device.carriers.iter().enumerate() {
                let eta = c.eta(values[dof(k, a)], psi);
                let st = c.statistics.evaluate(eta);
                let n = c.prefactor * st.value;
                let admissible = n > 0.0 && n.is_finite() && c.saturation().is_none_or(|s| n < s);
                if !admissible || !st.derivative.is_finite() {
                    return Err(AssemblyError::Inadmissible { cell: k, species: c.species, value: n });
                }
                e.s[a] = SpeciesEval {
                    eta,
                    n,
                    dn: c.prefactor * st.derivative,
                    g: st.log_excess,
                    dg: st.log_excess_derivative,
                };
            }
            out.push(e);
        }
        Ok(out)
    }

    /// Whether every density of `values` is admissible.
    pub fn admissible(&self, values: &[f64]) -> bool {
        self.evaluate_cells(values).is_ok()
    }

    fn schottky(&self, a: usize, k: &SpeciesEval, tau: f64, measure: f64, dpsi: f64, trace: &SpeciesEval) -> Result<SchottkyRoot, AssemblyError> {
        SchottkyFace {
            carrier: self.device.carriers[a],
            transmissibility: tau,
            measure,
            velocity: self.device.velocities[a],
            n_d: trace.n,
            eta_d: trace.eta,
            dpsi,
            eta_k: k.eta,
            n_k: k.n,
            dn_k: k.dn,
            g_k: k.g,
            dg_k: k.dg,
        }
        .solve()
    }

    /// Coupled residual at scaled contact voltages `applied`.
    pub fn assemble(
        &self,
        values: &[f64],
        applied: &[f64],
        step: &TimeStep<'_>,
        with_jacobian: bool,
    ) -> Result<Assembled, AssemblyError> {
        let cells = self.evaluate_cells(values)?;
        self.check_size(step.prev)?;
        let prev: Vec<[f64; 3]> = (0..cells.len())
            .map(|k| {
                let psi = step.prev[dof(k, PSI)];
                [0, 1, 2].map(|a| self.device.carriers[a].density(step.prev[dof(k, a)], psi))
            })
            .collect();
        let n = self.size();
        let lam2 = self.device.params.lambda_sq();
        let cw = self.charge_weights();
        let tw = self.time_weights();
        let tau_t = step.tau;
        let mut r = vec![0.0; n];
        let mut sc = vec![0.0; n];
        let mut jac = with_jacobian.then(|| BandMatrix::zeros(n, self.band, self.band));

        for (k, e) in cells.iter().enumerate() {
            let vol = self.mesh.cells[k].measure;
            let mut rho = 0.0;
            let mut gross = 0.0;
            let p = dof(k, PSI);
            for a in 0..3 {
                let z = self.device.carriers[a].charge;
                let s = &e.s[a];
                let w = tw[a] * vol / tau_t;
                r[dof(k, a)] += w * z * (s.n - prev[k][a]);
                sc[dof(k, a)] += w * z.abs() * (s.n + prev[k][a]);
                rho += cw[a] * z * s.n;
                gross += cw[a] * z.abs() * s.n;
                if let Some(m) = jac.as_mut() {
                    let d = w * z * z * s.dn;
                    m.add(dof(k, a), dof(k, a), d);
                    m.add(dof(k, a), p, -d);
                    let c = vol * cw[a] * z * z * s.dn;
                    m.add(p, dof(k, a), -c);
                    m.add(p, p, c);
                }
            }
            let doping = self.device.doping.sign * self.device.doping.density[k];
            rho += cw[1] * doping;
            gross += cw[1] * doping.abs();
            r[p] -= vol * rho;
            sc[p] += vol * gross;
        }

        for face in &self.faces {
            match *face {
                FaceData::Insulating => {}
                FaceData::Interior { k, l, tau } => {
                    let (ek, el) = (&cells[k], &cells[l]);
                    let dpsi = el.psi - ek.psi;
                    let (pk, pl) = (dof(k, PSI), dof(l, PSI));
                    let t = lam2 * tau;
                    r[pk] -= t * dpsi;
                    r[pl] += t * dpsi;
                    let g = t * (ek.psi.abs() + el.psi.abs());
                    sc[pk] += g;
                    sc[pl] += g;
                    if let Some(m) = jac.as_mut() {
                        m.add(pk, pk, t);
                        m.add(pk, pl, -t);
                        m.add(pl, pl, t);
                        m.add(pl, pk, -t);
                    }
                    for a in 0..3 {
                        let c = &self.device.carriers[a];
                        let amob = tau * c.mobility;
                        if amob == 0.0 {
                            continue;
                        }
                        let z = c.charge;
                        let f = face_flux(z, amob, dpsi, &ek.s[a], &el.s[a]);
                        let (rk, rl) = (dof(k, a), dof(l, a));
                        r[rk] += f.j;
                        r[rl] -= f.j;
                        sc[rk] += f.gross;
                        sc[rl] += f.gross;
                        if let Some(m) = jac.as_mut() {
                            let dphi_k = z * f.d_eta_k;
                            let dpsi_k = -z * f.d_eta_k - z * f.d_q;
                            let dphi_l = z * f.d_eta_l;
                            let dpsi_l = -z * f.d_eta_l + z * f.d_q;
                            for (row, sign) in [(rk, 1.0), (rl, -1.0)] {
                                m.add(row, rk, sign * dphi_k);
                                m.add(row, pk, sign * dpsi_k);
                                m.add(row, rl, sign * dphi_l);
                                m.add(row, pl, sign * dpsi_l);
                            }
                        }
                    }
                }
                FaceData::Contact { k, contact, tau, measure, psi_d, trace } => {
                    let ek = &cells[k];
                    let psi_s = psi_d + applied[contact];
                    let dpsi = psi_s - ek.psi;
                    let pk = dof(k, PSI);
                    let t = lam2 * tau;
                    r[pk] -= t * dpsi;
                    sc[pk] += t * (psi_s.abs() + ek.psi.abs());
                    if let Some(m) = jac.as_mut() {
                        m.add(pk, pk, t);
                    }
                    for a in 0..2 {
                        let c = &self.device.carriers[a];
                        let z = c.charge;
                        let rk = dof(k, a);
                        match self.device.model {
                            ContactModel::Ohmic => {
                                let amob = tau * c.mobility;
                                if amob == 0.0 {
                                    continue;
                                }
                                let f = face_flux(z, amob, dpsi, &ek.s[a], &trace[a]);
                                r[rk] += f.j;
                                sc[rk] += f.gross;
                                if let Some(m) = jac.as_mut() {
                                    m.add(rk, rk, z * f.d_eta_k);
                                    m.add(rk, pk, -z * f.d_eta_k - z * f.d_q);
                                }
                            }
                            ContactModel::Schottky => {
                                let root = self.schottky(a, &ek.s[a], tau, measure, dpsi, &trace[a])?;
                                r[rk] += root.flux;
                                sc[rk] += root.gross;
                                if let Some(m) = jac.as_mut() {
                                    let vm = self.device.velocities[a] * measure;
                                    let d_eta = z * vm * root.dn * root.deta_deta_k;
                                    let d_psi = z * vm * root.dn * root.deta_dpsi_k;
                                    m.add(rk, rk, z * d_eta);
                                    m.add(rk, pk, -z * d_eta + d_psi);
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(Assembled { residual: r, scale: sc, jacobian: jac })
    }

    /// Poisson rows only, as a function of `psi` with the quasi Fermi
    /// potentials of `values` held fixed. The returned system has one unknown
    /// per cell and `mesh.bandwidth()` off-diagonals.
    pub fn assemble_poisson(&self, values: &[f64], applied: &[f64], with_jacobian: bool) -> Result<Assembled, AssemblyError> {
        let cells = self.evaluate_cells(values)?;
        let nc = cells.len();
        let bw = self.mesh.bandwidth();
        let lam2 = self.device.params.lambda_sq();
        let cw = self.charge_weights();
        let mut r = vec![0.0; nc];
        let mut sc = vec![0.0; nc];
        let mut jac = with_jacobian.then(|| BandMatrix::zeros(nc, bw, bw));
        for (k, e) in cells.iter().enumerate() {
            let vol = self.mesh.cells[k].measure;
            let doping = self.device.doping.sign * self.device.doping.density[k];
            let mut rho = cw[1] * doping;
            let mut gross = cw[1] * doping.abs();
            let mut d = 0.0;
            for a in 0..3 {
                let z = self.device.carriers[a].charge;
                rho += cw[a] * z * e.s[a].n;
                gross += cw[a] * z.abs() * e.s[a].n;
                d += cw[a] * z * z * e.s[a].dn;
            }
            r[k] -= vol * rho;
            sc[k] += vol * gross;
            if let Some(m) = jac.as_mut() {
                m.add(k, k, vol * d);
            }
        }
        for face in &self.faces {
            match *face {
                FaceData::Insulating => {}
                FaceData::Interior { k, l, tau } => {
                    let dpsi = cells[l].psi - cells[k].psi;
                    let t = lam2 * tau;
                    r[k] -= t * dpsi;
                    r[l] += t * dpsi;
                    let g = t * (cells[k].psi.abs() + cells[l].psi.abs());
                    sc[k] += g;
                    sc[l] += g;
                    if let Some(m) = jac.as_mut() {
                        m.add(k, k, t);
                        m.add(k, l, -t);
                        m.add(l, l, t);
                        m.add(l, k, -t);
                    }
                }
                FaceData::Contact { k, contact, tau, psi_d, .. } => {
                    let psi_s = psi_d + applied[contact];
                    let t = lam2 * tau;
                    r[k] -= t * (psi_s - cells[k].psi);
                    sc[k] += t * (psi_s.abs() + cells[k].psi.abs());
                    if let Some(m) = jac.as_mut() {
                        m.add(k, k, t);
                    }
                }
            }
        }
        Ok(Assembled { residual: r, scale: sc, jacobian: jac })
    }

    /// Trace data on every contact face.
    pub fn boundary_traces(&self, values: &[f64], applied: &[f64]) -> Result<Vec<BoundaryTrace>, AssemblyError> {
        let cells = self.evaluate_cells(values)?;
        let mut out = Vec::new();
        for (id, face) in self.faces.iter().enumerate() {
            let FaceData::Contact { k, contact, tau, measure, psi_d, trace } = *face else { continue };
            let ek = &cells[k];
            let psi_s = psi_d + applied[contact];
            let dpsi = psi_s - ek.psi;
            let mut t = BoundaryTrace {
                face: id,
                contact,
                cell: k,
                transmissibility: tau,
                measure,
                psi: psi_s,
                psi_cell: ek.psi,
                flux: [0.0; 3],
                gross: [0.0; 3],
                eta: [trace[0].eta, trace[1].eta],
                density: [trace[0].n, trace[1].n],
                eta_d: [trace[0].eta, trace[1].eta],
                density_d: [trace[0].n, trace[1].n],
            };
            for a in 0..2 {
                let c = &self.device.carriers[a];
                match self.device.model {
                    ContactModel::Ohmic => {
                        let f = face_flux(c.charge, tau * c.mobility, dpsi, &ek.s[a], &trace[a]);
                        t.flux[a] = f.j;
                        t.gross[a] = f.gross;
                    }
                    ContactModel::Schottky => {
                        let root = self.schottky(a, &ek.s[a], tau, measure, dpsi, &trace[a])?;
                        t.flux[a] = root.flux;
                        t.gross[a] = root.gross;
                        t.eta[a] = root.eta;
                        t.density[a] = root.n;
                    }
                }
            }
            out.push(t);
        }
        Ok(out)
    }

    /// Interior faces as `(k, l, transmissibility)`.
    pub(crate) fn interior_faces(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        self.faces.iter().filter_map(|f| match *f {
            FaceData::Interior { k, l, tau } => Some((k, l, tau)),
            _ => None,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::device::{ContactSpec, VoltageProtocol};
    use crate::mesh::{build_device_mesh, ContactConfig, GeometrySpec};
    use crate::physics::PhysicalParameters;

    fn small_device(model: ContactModel, dimension: usize) -> (Device, AdmissibleMesh) {
        let phys = PhysicalParameters::mos2();
        let geom = GeometrySpec {
            dimension,
            contact_config: if dimension == 1 { ContactConfig::Side } else { ContactConfig::Top },
            channel_length: 1e-6,
            thickness: 15e-9,
            width: 10e-6,
            electrode_length: if dimension == 1 { 0.0 } else { 0.3e-6 },
            cells_x: 6,
            cells_z: if dimension == 1 { 1 } else { 2 },
            grading: 1.0,
        };
        let contact = match model {
            ContactModel::Ohmic => ContactSpec::ohmic(0.001),
            ContactModel::Schottky => ContactSpec::schottky(0.001),
        };
        let nd = crate::physics::nondimensionalize(&phys).unwrap();
        let mesh = build_device_mesh(&geom, &nd.scaling).unwrap();
        let proto = VoltageProtocol::Cycles { amplitude: 13.0, rate: 5.0, cycles: 1 };
        (Device::new(&phys, &geom, &contact, proto, &mesh).unwrap(), mesh)
    }

    /// A perturbed state around the contact potentials.
    fn state(device: &Device, mesh: &AdmissibleMesh, seed: u64) -> Vec<f64> {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut v = vec![0.0; FIELDS * mesh.cell_count()];
        for k in 0..mesh.cell_count() {
            v[dof(k, 0)] = rng.gen_range(-0.5..0.5);
            v[dof(k, 1)] = rng.gen_range(-0.5..0.5);
            v[dof(k, 2)] = rng.gen_range(-0.5..0.5);
            v[dof(k, PSI)] = device.dirichlet.psi + rng.gen_range(-3.0..3.0);
        }
        v
    }

    #[test]
    fn analytic_jacobian_matches_finite_differences() {
        for model in [ContactModel::Ohmic, ContactModel::Schottky] {
            for dim in [1, 2] {
                let (device, mesh) = small_device(model, dim);
                let asm = Assembler::new(&device, &mesh);
                let x = state(&device, &mesh, 3);
                let prev = state(&device, &mesh, 4);
                let applied = [0.0, 40.0];
                let step = TimeStep { prev: &prev, tau: 1e-3 };
                let a = asm.assemble(&x, &applied, &step, true).unwrap();
                let fd = finite_difference_jacobian(&asm, &x, &applied, &step).unwrap();
                let j = a.jacobian.unwrap();
                for i in 0..asm.size() {
                    let row_max = (0..asm.size()).map(|c| j.get(i, c).abs()).fold(0.0, f64::max);
                    for c in 0..asm.size() {
                        let (an, nu) = (j.get(i, c), fd.get(i, c));
                        assert!(
                            (an - nu).abs() <= 1e-6 * row_max + 1e-300,
                            "{model:?} {dim}D entry ({i}, {c}): analytic {an:e}, fd {nu:e}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn interior_fluxes_cancel_in_the_column_sum() {
        let (device, mesh) = small_device(ContactModel::Schottky, 2);
        let asm = Assembler::new(&device, &mesh);
        let x = state(&device, &mesh, 9);
        let step = TimeStep { prev: &x, tau: 1.0 };
        let a = asm.assemble(&x, &[0.0, 0.0], &step, false).unwrap();
        // With prev = x the defect rows hold only fluxes; boundary defect flux is zero.
        let total: f64 = (0..mesh.cell_count()).map(|k| a.residual[dof(k, 2)]).sum();
        let gross: f64 = (0..mesh.cell_count()).map(|k| a.scale[dof(k, 2)]).sum();
        assert!(total.abs() <= 1e-15 * gross, "{total:e} vs {gross:e}");
    }

    #[test]
    fn saturated_defects_are_rejected() {
        let (device, mesh) = small_device(ContactModel::Ohmic, 1);
        let asm = Assembler::new(&device, &mesh);
        let mut x = state(&device, &mesh, 1);
        x[dof(2, 2)] = 1e3;
        assert!(matches!(
            asm.evaluate_cells(&x),
            Err(AssemblyError::Inadmissible { cell: 2, species: Species::Defect, .. })
        ));
    }
}
