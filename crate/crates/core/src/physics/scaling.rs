use serde::{Deserialize, Serialize};

use super::{PhysicsError, StatisticsKind};

pub const BOLTZMANN: f64 = 1.380_649e-23;
pub const ELEMENTARY_CHARGE: f64 = 1.602_176_634e-19;
pub const VACUUM_PERMITTIVITY: f64 = 8.854_187_812_8e-12;

/// Carrier species, in unknown order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Species {
    #[serde(rename = "n")]
    Electron,
    #[serde(rename = "p")]
    Hole,
    #[serde(rename = "a")]
    Defect,
}

impl Species {
    pub const ALL: [Species; 3] = [Species::Electron, Species::Hole, Species::Defect];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Species::Electron => "n",
            Species::Hole => "p",
            Species::Defect => "a",
        }
    }
}

/// Physical description of one carrier species.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CarrierSpec {
    /// Charge number `z`.
    pub charge: i32,
    /// Mobility in m^2/(V s).
    pub mobility: f64,
    /// Effective density of states (or saturation density) in m^-3.
    pub density: f64,
    /// Intrinsic energy level in eV.
    pub energy: f64,
    pub statistics: StatisticsKind,
}

/// Reference magnitudes used to scale the equations. Unset entries default
/// to the corresponding material parameters.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScalingOverrides {
    pub length: Option<f64>,
    pub electron_density: Option<f64>,
    pub doping_density: Option<f64>,
    pub defect_density: Option<f64>,
    pub mobility: Option<f64>,
    pub defect_mobility: Option<f64>,
}

/// Electron, hole and defect descriptions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CarrierSet {
    pub n: CarrierSpec,
    pub p: CarrierSpec,
    pub a: CarrierSpec,
}

/// Full physical parameter set of the semiconductor layer.
///
/// Missing fields in a configuration take the [`PhysicalParameters::mos2`]
/// values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PhysicalParameters {
    /// Kelvin.
    pub temperature: f64,
    pub relative_permittivity: f64,
    /// Channel length in m; the default length scale.
    pub channel_length: f64,
    pub carriers: CarrierSet,
    /// Sign of the background charge, +1 for donors.
    pub doping_sign: i32,
    /// Background density in m^-3.
    pub doping_density: f64,
    /// Thermionic recombination velocities in m/s, needed by Schottky contacts.
    pub electron_velocity: Option<f64>,
    pub hole_velocity: Option<f64>,
    /// Freeze the defects in place by zeroing their fluxes.
    pub frozen_defects: bool,
    pub scaling: ScalingOverrides,
}

impl Default for PhysicalParameters {
    fn default() -> Self {
        PhysicalParameters::mos2()
    }
}

impl Default for CarrierSet {
    fn default() -> Self {
        PhysicalParameters::mos2().carriers
    }
}

impl PhysicalParameters {
    /// MoS2 layer parameters used throughout the reference experiments.
    pub fn mos2() -> Self {
        PhysicalParameters {
            temperature: 300.0,
            relative_permittivity: 10.0,
            channel_length: 1e-6,
            carriers: CarrierSet {
            n: CarrierSpec {
                charge: -1,
                mobility: 2.5e-4,
                density: 1e25,
                energy: -4.0,
                statistics: StatisticsKind::FermiDiracOneHalf,
            },
            p: CarrierSpec {
                charge: 1,
                mobility: 2.5e-4,
                density: 1.5e25,
                energy: -5.3,
                statistics: StatisticsKind::FermiDiracOneHalf,
            },
            a: CarrierSpec {
                charge: 1,
                mobility: 5e-14,
                density: 1e28,
                energy: -4.32,
                statistics: StatisticsKind::FermiDiracMinusOne,
            },
            },
            doping_sign: 1,
            doping_density: 1e21,
            electron_velocity: Some(3.6e4),
            hole_velocity: Some(3.2e4),
            frozen_defects: false,
            scaling: ScalingOverrides::default(),
        }
    }

    pub fn carrier(&self, species: Species) -> &CarrierSpec {
        match species {
            Species::Electron => &self.carriers.n,
            Species::Hole => &self.carriers.p,
            Species::Defect => &self.carriers.a,
        }
    }

    pub fn carrier_mut(&mut self, species: Species) -> &mut CarrierSpec {
        match species {
            Species::Electron => &mut self.carriers.n,
            Species::Hole => &mut self.carriers.p,
            Species::Defect => &mut self.carriers.a,
        }
    }

    pub fn thermal_voltage(&self) -> f64 {
        BOLTZMANN * self.temperature / ELEMENTARY_CHARGE
    }

    /// Every violated constraint, as `(field path, message)`.
    pub fn violations(&self, prefix: &str) -> Vec<(String, String)> {
        let mut out = Vec::new();
        let mut positive = |name: &str, v: f64| {
            if !(v > 0.0 && v.is_finite()) {
                out.push((format!("{prefix}.{name}"), format!("must be positive and finite, got {v}")));
            }
        };
        positive("temperature", self.temperature);
        positive("relative_permittivity", self.relative_permittivity);
        positive("channel_length", self.channel_length);
        for s in Species::ALL {
            let c = self.carrier(s);
            positive(&format!("carriers.{}.mobility", s.symbol()), c.mobility);
            positive(&format!("carriers.{}.density", s.symbol()), c.density);
        }
        let o = &self.scaling;
        for (name, v) in [
            ("length", o.length),
            ("electron_density", o.electron_density),
            ("doping_density", o.doping_density),
            ("defect_density", o.defect_density),
            ("mobility", o.mobility),
            ("defect_mobility", o.defect_mobility),
        ] {
            if let Some(v) = v {
                positive(&format!("scaling.{name}"), v);
            }
        }
        let mut push = |name: &str, msg: String| out.push((format!("{prefix}.{name}"), msg));
        if self.doping_density < 0.0 || !self.doping_density.is_finite() {
            push("doping_density", format!("must be non-negative, got {}", self.doping_density));
        }
        if self.doping_sign.abs() != 1 {
            push("doping_sign", format!("must be +1 or -1, got {}", self.doping_sign));
        }
        if self.carriers.n.charge != -1 {
            push("carriers.n.charge", format!("electrons carry charge -1, got {}", self.carriers.n.charge));
        }
        if self.carriers.p.charge != 1 {
            push("carriers.p.charge", format!("holes carry charge +1, got {}", self.carriers.p.charge));
        }
        if self.carriers.a.charge == 0 {
            push("carriers.a.charge", "must be nonzero".into());
        }
        for s in Species::ALL {
            let c = self.carrier(s);
            if !c.energy.is_finite() {
                push(&format!("carriers.{}.energy", s.symbol()), "must be finite".into());
            }
        }
        for (name, v) in [("electron_velocity", self.electron_velocity), ("hole_velocity", self.hole_velocity)] {
            let Some(v) = v else { continue };
            if !(v >= 0.0 && v.is_finite()) {
                push(name, format!("must be non-negative, got {v}"));
            }
        }
        out
    }
}

/// Reference magnitudes. All derived scales are recomputed from the
/// primitives by [`ScalingSet::new`].
#[derive(Debug, Clone, PartialEq)]
pub struct ScalingSet {
    pub length: f64,
    pub thermal_voltage: f64,
    pub electron_density: f64,
    pub doping_density: f64,
    pub defect_density: f64,
    pub mobility: f64,
    pub defect_mobility: f64,
    /// `l^2 / (mu_a U_T)` in s.
    pub time: f64,
    /// Current-density scales in A/m^2 for n, p, a.
    pub current_density: [f64; 3],
    /// `mu U_T / l` in m/s.
    pub velocity: f64,
}

impl ScalingSet {
    pub fn new(
        length: f64,
        thermal_voltage: f64,
        electron_density: f64,
        doping_density: f64,
        defect_density: f64,
        mobility: f64,
        defect_mobility: f64,
    ) -> Self {
        let q = ELEMENTARY_CHARGE;
        ScalingSet {
            length,
            thermal_voltage,
            electron_density,
            doping_density,
            defect_density,
            mobility,
            defect_mobility,
            time: length * length / (defect_mobility * thermal_voltage),
            current_density: [
                q * thermal_voltage * electron_density * mobility / length,
                q * thermal_voltage * doping_density * mobility / length,
                q * thermal_voltage * defect_density * defect_mobility / length,
            ],
            velocity: mobility * thermal_voltage / length,
        }
    }

    /// Density scale of a species.
    pub fn density(&self, species: Species) -> f64 {
        match species {
            Species::Electron => self.electron_density,
            Species::Hole => self.doping_density,
            Species::Defect => self.defect_density,
        }
    }

    pub fn species_mobility(&self, species: Species) -> f64 {
        match species {
            Species::Defect => self.defect_mobility,
            _ => self.mobility,
        }
    }

    /// Largest relative mismatch between stored and recomputed derived scales.
    pub fn consistency_error(&self) -> f64 {
        let fresh = ScalingSet::new(
            self.length,
            self.thermal_voltage,
            self.electron_density,
            self.doping_density,
            self.defect_density,
            self.mobility,
            self.defect_mobility,
        );
        let rel = |a: f64, b: f64| ((a - b) / b).abs();
        let mut err = rel(self.time, fresh.time).max(rel(self.velocity, fresh.velocity));
        for i in 0..3 {
            err = err.max(rel(self.current_density[i], fresh.current_density[i]));
        }
        err
    }
}

/// Dimensionless numbers of the scaled system.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DimensionlessParams {
    /// Rescaled Debye length.
    pub lambda: f64,
    /// Ratio of defect to electronic mobility scales.
    pub nu: f64,
    /// Electron to defect density scale.
    pub delta_n: f64,
    /// Doping to electron density scale.
    pub delta_p: f64,
}

impl DimensionlessParams {
    pub fn lambda_sq(&self) -> f64 {
        self.lambda * self.lambda
    }
}

/// A carrier in scaled form: `n = prefactor * F(charge * (phi - psi) + shift)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaledCarrier {
    pub species: Species,
    pub charge: f64,
    pub statistics: StatisticsKind,
    /// `N / Ntilde`.
    pub prefactor: f64,
    /// `z E / U_T`.
    pub shift: f64,
    /// `mu / mutilde`, multiplies every flux of the species.
    pub mobility: f64,
}

impl ScaledCarrier {
    #[inline]
    pub fn eta(&self, phi: f64, psi: f64) -> f64 {
        self.charge * (phi - psi) + self.shift
    }

    #[inline]
    pub fn density_at(&self, eta: f64) -> f64 {
        self.prefactor * self.statistics.value(eta)
    }

    /// Scaled density for potentials `phi`, `psi`.
    #[inline]
    pub fn density(&self, phi: f64, psi: f64) -> f64 {
        self.density_at(self.eta(phi, psi))
    }

    /// Chemical potential `eta` with `prefactor * F(eta) = n`.
    pub fn eta_of_density(&self, n: f64) -> Result<f64, PhysicsError> {
        self.statistics.inverse(n / self.prefactor)
    }

    /// Upper bound of the density range, if any.
    pub fn saturation(&self) -> Option<f64> {
        self.statistics.saturation().map(|s| s * self.prefactor)
    }
}

/// Output of [`nondimensionalize`].
#[derive(Debug, Clone, PartialEq)]
pub struct Nondimensional {
    pub params: DimensionlessParams,
    pub scaling: ScalingSet,
    pub carriers: [ScaledCarrier; 3],
    /// `z_C`.
    pub doping_sign: f64,
    /// `C / Ctilde`.
    pub doping: f64,
    /// Recombination velocities of n and p over `mu U_T / l`, when given.
    pub velocities: [Option<f64>; 2],
}

/// Scale a physical parameter set.
pub fn nondimensionalize(physical: &PhysicalParameters) -> Result<Nondimensional, PhysicsError> {
    let violations = physical.violations("physics");
    if !violations.is_empty() {
        return Err(PhysicsError::Invalid(violations));
    }
    let ut = physical.thermal_voltage();
    let o = &physical.scaling;
    let scaling = ScalingSet::new(
        o.length.unwrap_or(physical.channel_length),
        ut,
        o.electron_density.unwrap_or(physical.carriers.n.density),
        o.doping_density.unwrap_or(if physical.doping_density > 0.0 { physical.doping_density } else { physical.carriers.n.density }),
        o.defect_density.unwrap_or(physical.carriers.a.density),
        o.mobility.unwrap_or(physical.carriers.n.mobility),
        o.defect_mobility.unwrap_or(physical.carriers.a.mobility),
    );
    let eps = physical.relative_permittivity * VACUUM_PERMITTIVITY;
    let params = DimensionlessParams {
        lambda: (eps * ut / (scaling.length * scaling.length * ELEMENTARY_CHARGE * scaling.defect_density)).sqrt(),
        nu: scaling.defect_mobility / scaling.mobility,
        delta_n: scaling.electron_density / scaling.defect_density,
        delta_p: scaling.doping_density / scaling.electron_density,
    };
    let carriers = Species::ALL.map(|s| {
        let c = physical.carrier(s);
        ScaledCarrier {
            species: s,
            charge: c.charge as f64,
            statistics: c.statistics,
            prefactor: c.density / scaling.density(s),
            shift: c.charge as f64 * c.energy / ut,
            mobility: if s == Species::Defect && physical.frozen_defects {
                0.0
            } else {
                c.mobility / scaling.species_mobility(s)
            },
        }
    });
    Ok(Nondimensional {
        params,
        doping_sign: physical.doping_sign as f64,
        doping: physical.doping_density / scaling.doping_density,
        velocities: [
            physical.electron_velocity.map(|v| v / scaling.velocity),
            physical.hole_velocity.map(|v| v / scaling.velocity),
        ],
        scaling,
        carriers,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_dimensionless_numbers() {
        let mut p = PhysicalParameters::mos2();
        p.scaling.mobility = Some(1e-4);
        p.scaling.defect_mobility = Some(1e-14);
        let nd = nondimensionalize(&p).unwrap();
        assert!((nd.params.delta_n - 1e-3).abs() < 1e-18);
        assert!((nd.params.delta_p - 1e-4).abs() < 1e-19);
        assert!((nd.params.nu - 1e-10).abs() < 1e-25);
        assert!(nd.scaling.consistency_error() < 1e-14);
    }

    #[test]
    fn invalid_fields_are_named() {
        let mut p = PhysicalParameters::mos2();
        p.carriers.n.mobility = -1.0;
        p.temperature = 0.0;
        match nondimensionalize(&p) {
            Err(PhysicsError::Invalid(v)) => {
                let names: Vec<_> = v.iter().map(|(n, _)| n.as_str()).collect();
                assert!(names.contains(&"physics.carriers.n.mobility"));
                assert!(names.contains(&"physics.temperature"));
            }
            other => panic!("expected validation error, got {other:?}"),
        }
    }
}
