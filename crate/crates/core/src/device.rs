//! Doping, contact data, applied voltage and initial conditions of a scaled
//! device.

use serde::{Deserialize, Serialize};

use crate::mesh::{AdmissibleMesh, BoundaryTag, FaceKind, GeometrySpec};
use crate::physics::{
    nondimensionalize, DimensionlessParams, PhysicalParameters, PhysicsError, ScaledCarrier, ScalingSet, Species,
};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DeviceError {
    #[error("time {t} s lies outside the protocol horizon [0, {horizon}] s")]
    OutOfRange { t: f64, horizon: f64 },
    #[error("unknown contact {0}")]
    UnknownContact(usize),
    #[error(transparent)]
    Physics(#[from] PhysicsError),
    #[error("{field}: {message}")]
    Invalid { field: String, message: String },
}

/// How carriers cross the metal-semiconductor interface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ContactModel {
    /// Dirichlet data for `psi` and the electronic quasi Fermi potentials.
    Ohmic,
    /// Dirichlet `psi`, thermionic-emission flux for electrons and holes.
    Schottky,
}

/// Contact description in physical units.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ContactSpec {
    pub model: ContactModel,
    /// Schottky barrier `phi_0` in eV; the built-in potential is `E_n - phi_0`.
    pub barrier: f64,
    /// Equilibrium quasi Fermi potential in V.
    #[serde(default)]
    pub equilibrium_potential: f64,
    /// Gradient of the Dirichlet `psi` data in V/m (zero for flat data).
    #[serde(default)]
    pub psi_gradient: [f64; 2],
    /// Gradient of the Dirichlet quasi Fermi data in V/m.
    #[serde(default)]
    pub phi_gradient: [f64; 2],
}

impl ContactSpec {
    pub fn schottky(barrier: f64) -> Self {
        ContactSpec {
            model: ContactModel::Schottky,
            barrier,
            equilibrium_potential: 0.0,
            psi_gradient: [0.0; 2],
            phi_gradient: [0.0; 2],
        }
    }

    pub fn ohmic(barrier: f64) -> Self {
        ContactSpec { model: ContactModel::Ohmic, ..ContactSpec::schottky(barrier) }
    }
}

/// Voltage signal `t -> V(t)` in V, t in s.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum VoltageProtocol {
    Constant {
        value: f64,
        /// End time in s; unbounded when absent.
        #[serde(default)]
        duration: Option<f64>,
    },
    /// Triangle cycles 0 -> +amplitude -> -amplitude -> 0.
    Cycles { amplitude: f64, rate: f64, cycles: usize },
}

impl VoltageProtocol {
    pub fn cycle_period(&self) -> Option<f64> {
        match *self {
            VoltageProtocol::Cycles { amplitude, rate, .. } => Some(4.0 * amplitude / rate),
            VoltageProtocol::Constant { .. } => None,
        }
    }

    /// Final time, if bounded.
    pub fn horizon(&self) -> Option<f64> {
        match *self {
            VoltageProtocol::Cycles { cycles, .. } => self.cycle_period().map(|p| p * cycles as f64),
            VoltageProtocol::Constant { duration, .. } => duration,
        }
    }

    pub fn max_abs(&self) -> f64 {
        match *self {
            VoltageProtocol::Cycles { amplitude, .. } => amplitude.abs(),
            VoltageProtocol::Constant { value, .. } => value.abs(),
        }
    }

    pub fn voltage_at(&self, t: f64) -> Result<f64, DeviceError> {
        if let Some(h) = self.horizon() {
            if !(t >= 0.0 && t <= h * (1.0 + 1e-12)) {
                return Err(DeviceError::OutOfRange { t, horizon: h });
            }
        } else if !(t >= 0.0) {
            return Err(DeviceError::OutOfRange { t, horizon: f64::INFINITY });
        }
        Ok(match *self {
            VoltageProtocol::Constant { value, .. } => value,
            VoltageProtocol::Cycles { amplitude, rate, .. } => {
                let period = 4.0 * amplitude / rate;
                let quarter = amplitude / rate;
                let s = t.rem_euclid(period);
                let v = if s <= quarter {
                    rate * s
                } else if s <= 3.0 * quarter {
                    amplitude - rate * (s - quarter)
                } else {
                    -amplitude + rate * (s - 3.0 * quarter)
                };
                v.clamp(-amplitude, amplitude)
            }
        })
    }

    pub fn violations(&self, prefix: &str) -> Vec<(String, String)> {
        let mut out = Vec::new();
        match *self {
            VoltageProtocol::Constant { value, duration } => {
                if !value.is_finite() {
                    out.push((format!("{prefix}.value"), "must be finite".into()));
                }
                if let Some(d) = duration {
                    if !(d > 0.0 && d.is_finite()) {
                        out.push((format!("{prefix}.duration"), format!("must be positive, got {d}")));
                    }
                }
            }
            VoltageProtocol::Cycles { amplitude, rate, cycles } => {
                if !(amplitude > 0.0 && amplitude.is_finite()) {
                    out.push((format!("{prefix}.amplitude"), format!("must be positive, got {amplitude}")));
                }
                if !(rate > 0.0 && rate.is_finite()) {
                    out.push((format!("{prefix}.rate"), format!("must be positive, got {rate}")));
                }
                if cycles == 0 {
                    out.push((format!("{prefix}.cycles"), "need at least one cycle".into()));
                }
            }
        }
        out
    }
}

/// Starting point of a transient.
#[derive(Debug, Clone, PartialEq)]
pub enum InitialState {
    /// Solve the Poisson equation with constant quasi Fermi potentials at `V = 0`.
    ThermalEquilibrium,
    /// Scaled quasi Fermi potentials per cell; `psi` follows from Poisson.
    Explicit { phi_n: Vec<f64>, phi_p: Vec<f64>, phi_a: Vec<f64> },
}

/// Background charge `z_C C`, piecewise constant per cell (scaled).
#[derive(Debug, Clone, PartialEq)]
pub struct Doping {
    pub sign: f64,
    pub density: Vec<f64>,
}

impl Doping {
    pub fn uniform(sign: f64, density: f64, cells: usize) -> Self {
        Doping { sign, density: vec![density; cells] }
    }
}

/// Affine Dirichlet data `psi^D(x) = psi + g_psi . x`, `phi^D(x) = phi + g_phi . x`
/// in scaled units. Applied voltages are added separately.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DirichletData {
    pub psi: f64,
    pub phi: f64,
    pub psi_gradient: [f64; 2],
    pub phi_gradient: [f64; 2],
}

impl DirichletData {
    #[inline]
    pub fn psi_at(&self, x: [f64; 2]) -> f64 {
        self.psi + self.psi_gradient[0] * x[0] + self.psi_gradient[1] * x[1]
    }

    #[inline]
    pub fn phi_at(&self, x: [f64; 2]) -> f64 {
        self.phi + self.phi_gradient[0] * x[0] + self.phi_gradient[1] * x[1]
    }

    pub fn is_flat(&self) -> bool {
        self.psi_gradient == [0.0; 2] && self.phi_gradient == [0.0; 2]
    }
}

/// Everything the discrete scheme needs about the device, in scaled units.
#[derive(Debug, Clone, PartialEq)]
pub struct Device {
    pub params: DimensionlessParams,
    pub scaling: ScalingSet,
    pub carriers: [ScaledCarrier; 3],
    pub doping: Doping,
    pub model: ContactModel,
    pub dirichlet: DirichletData,
    /// Scaled recombination velocities of n and p (unused for ohmic contacts).
    pub velocities: [f64; 2],
    /// Voltage signal per contact id; contact 0 is grounded by default.
    pub signals: Vec<VoltageProtocol>,
    /// Converts a scaled contact flux summed over face measures into A.
    pub area_factor: f64,
    /// Domain measure in scaled units.
    pub domain_measure: f64,
}

impl Device {
    /// Scale the physical description onto `mesh`. The right contact (id 1)
    /// carries `protocol`, the left one is grounded.
    pub fn new(
        physical: &PhysicalParameters,
        geometry: &GeometrySpec,
        contacts: &ContactSpec,
        protocol: VoltageProtocol,
        mesh: &AdmissibleMesh,
    ) -> Result<Device, DeviceError> {
        let nd = nondimensionalize(physical)?;
        let ut = nd.scaling.thermal_voltage;
        let l = nd.scaling.length;
        let velocities = match contacts.model {
            ContactModel::Schottky => {
                let mut v = [0.0; 2];
                for (i, (name, value)) in [("electron_velocity", nd.velocities[0]), ("hole_velocity", nd.velocities[1])]
                    .into_iter()
                    .enumerate()
                {
                    v[i] = value.ok_or_else(|| DeviceError::Invalid {
                        field: format!("physics.{name}"),
                        message: "schottky contacts need a recombination velocity".into(),
                    })?;
                }
                v
            }
            ContactModel::Ohmic => [0.0; 2],
        };
        let builtin = physical.carriers.n.energy - contacts.barrier;
        let dirichlet = DirichletData {
            psi: builtin / ut,
            phi: contacts.equilibrium_potential / ut,
            psi_gradient: contacts.psi_gradient.map(|g| g * l / ut),
            phi_gradient: contacts.phi_gradient.map(|g| g * l / ut),
        };
        let area_factor = match mesh.dimension {
            1 => geometry.width * geometry.thickness,
            _ => geometry.width * l,
        };
        Ok(Device {
            params: nd.params,
            carriers: nd.carriers,
            doping: Doping::uniform(nd.doping_sign, nd.doping, mesh.cell_count()),
            model: contacts.model,
            dirichlet,
            velocities,
            signals: vec![VoltageProtocol::Constant { value: 0.0, duration: None }, protocol],
            area_factor,
            domain_measure: mesh.domain_measure,
            scaling: nd.scaling,
        })
    }

    pub fn carrier(&self, s: Species) -> &ScaledCarrier {
        &self.carriers[s.index()]
    }

    /// Scaled applied voltage of every contact at time `t` (s).
    pub fn applied_voltages(&self, t: f64) -> Result<Vec<f64>, DeviceError> {
        let ut = self.scaling.thermal_voltage;
        self.signals.iter().map(|s| s.voltage_at(t).map(|v| v / ut)).collect()
    }

    /// `n^D` of electrons and holes from the voltage-free Dirichlet data at `x`.
    pub fn equilibrium_densities_at(&self, x: [f64; 2]) -> [f64; 2] {
        let (psi, phi) = (self.dirichlet.psi_at(x), self.dirichlet.phi_at(x));
        [self.carriers[0].density(phi, psi), self.carriers[1].density(phi, psi)]
    }

    /// Boundary `psi` on a contact face with scaled applied voltage `v`.
    #[inline]
    pub fn contact_psi(&self, x: [f64; 2], v: f64) -> f64 {
        self.dirichlet.psi_at(x) + v
    }

    /// Boundary quasi Fermi potential of an ohmic contact.
    #[inline]
    pub fn contact_phi(&self, x: [f64; 2], v: f64) -> f64 {
        self.dirichlet.phi_at(x) + v
    }

    /// Cell-wise extension of the applied voltage: linear in `x` between the
    /// grounded left and the swept right contact.
    pub fn voltage_extension(&self, mesh: &AdmissibleMesh, applied: &[f64]) -> Vec<f64> {
        let x0 = mesh.x_nodes[0];
        let x1 = *mesh.x_nodes.last().unwrap();
        mesh.cells
            .iter()
            .map(|c| {
                let s = (c.center[0] - x0) / (x1 - x0);
                (1.0 - s) * applied[0] + s * applied[1]
            })
            .collect()
    }

    /// Physical current in A of a scaled ion-unit contact flux.
    pub fn current_scale(&self) -> f64 {
        self.scaling.current_density[2] * self.area_factor
    }
}

/// Equilibrium electron and hole densities `n^D` (scaled) at the first face of
/// each contact.
pub fn equilibrium_boundary_densities(device: &Device, mesh: &AdmissibleMesh) -> Result<Vec<[f64; 2]>, DeviceError> {
    (0..mesh.contact_count)
        .map(|c| {
            let face = mesh
                .faces
                .iter()
                .find(|f| matches!(f.kind, FaceKind::Boundary { tag: BoundaryTag::Contact(id), .. } if id == c))
                .ok_or(DeviceError::UnknownContact(c))?;
            Ok(device.equilibrium_densities_at(face.center))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_cycle() {
        let p = VoltageProtocol::Cycles { amplitude: 13.0, rate: 5.0, cycles: 2 };
        assert_eq!(p.voltage_at(0.0).unwrap(), 0.0);
        assert!((p.voltage_at(2.6).unwrap() - 13.0).abs() < 1e-12);
        assert!((p.voltage_at(7.8).unwrap() + 13.0).abs() < 1e-12);
        assert!(p.voltage_at(10.4).unwrap().abs() < 1e-12);
        assert!((p.cycle_period().unwrap() - 10.4).abs() < 1e-15);
        assert!(p.voltage_at(20.9).is_err());
        assert!(p.voltage_at(-0.1).is_err());
    }
}
