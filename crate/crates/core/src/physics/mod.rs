//! Statistics functions, the Bernoulli function, entropy functions and the
//! scaling of physical parameters.

mod bernoulli;
mod entropy;
#[allow(clippy::excessive_precision)]
mod fd_table;
mod scaling;
mod statistics;

pub use bernoulli::{bernoulli, bernoulli_derivative, bernoulli_pair};
pub(crate) use entropy::relative_entropy_eta;
pub use entropy::{entropy_phi, relative_entropy};
pub use scaling::{
    nondimensionalize, CarrierSet, CarrierSpec, DimensionlessParams, Nondimensional, PhysicalParameters, ScaledCarrier,
    ScalingOverrides, ScalingSet, Species, BOLTZMANN, ELEMENTARY_CHARGE, VACUUM_PERMITTIVITY,
};
pub use statistics::{Evaluated, StatisticsKind};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum PhysicsError {
    #[error("{what} must be finite, got {value}")]
    NonFinite { what: &'static str, value: f64 },
    #[error("{value} is outside the range of {kind:?} statistics")]
    OutOfRange { kind: StatisticsKind, value: f64 },
    #[error("invalid physical parameters: {}", format_violations(.0))]
    Invalid(Vec<(String, String)>),
}

pub(crate) fn format_violations(v: &[(String, String)]) -> String {
    v.iter().map(|(k, m)| format!("{k}: {m}")).collect::<Vec<_>>().join("; ")
}
