//! TOML experiment configuration.
//!
//! ```toml
//! name = "example"
//!
//! [geometry]
//! dimension = 1
//! contact_config = "side"
//! channel_length = 1e-6
//! thickness = 15e-9
//! width = 10e-6
//! cells_x = 200
//!
//! [physics]              # every field optional, MoS2 values otherwise
//! frozen_defects = false
//!
//! [contacts]
//! model = "schottky"     # or "ohmic"
//! barrier = 0.001        # eV
//!
//! [protocol]
//! kind = "cycles"        # or "constant" with `value` and `duration`
//! amplitude = 13.0
//! rate = 5.0
//! cycles = 2
//!
//! [solver]               # optional
//! face_mean = "logarithmic"
//! grid = { policy = "uniform", steps_per_cycle = 400 }
//! newton = { rel_tol = 1e-12 }
//!
//! [outputs]              # optional
//! snapshot_times = [10.4, 13.0, 18.2]
//!
//! [study]                # only read by studies
//! electrode_ratios = [0.02, 0.1, 0.3]
//! thicknesses = [1.5e-9, 15e-9]
//! ```

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::device::{ContactModel, ContactSpec, VoltageProtocol};
use crate::mesh::GeometrySpec;
use crate::observables::FaceMean;
use crate::physics::{format_violations, PhysicalParameters};
use crate::solver::{GridPolicy, NewtonSettings, SweepOptions};

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("malformed configuration: {0}")]
    Parse(String),
    #[error("invalid configuration: {}", format_violations(.0))]
    Invalid(Vec<(String, String)>),
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
}

impl ConfigError {
    /// Names of the offending fields, for validation errors.
    pub fn fields(&self) -> Vec<&str> {
        match self {
            ConfigError::Invalid(v) => v.iter().map(|(k, _)| k.as_str()).collect(),
            _ => Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SolverConfig {
    pub newton: NewtonSettings,
    pub grid: GridPolicy,
    pub face_mean: FaceMean,
    /// Halvings of a uniform step allowed on Newton failure.
    pub max_halvings: u32,
}

impl Default for SolverConfig {
    fn default() -> Self {
        let o = SweepOptions::default();
        SolverConfig { newton: o.newton, grid: o.grid, face_mean: o.face_mean, max_halvings: o.max_halvings }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct OutputConfig {
    /// Times in s at which cell fields are written.
    pub snapshot_times: Vec<f64>,
    /// Output directory; the CLI `--out` flag takes precedence.
    pub directory: Option<PathBuf>,
}

/// Parameter grid of a contact-geometry study. Every point is run with side,
/// mixed and top contacts.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StudyGrid {
    /// `h_E / h_C`.
    pub electrode_ratios: Vec<f64>,
    /// `h_T` in m.
    pub thicknesses: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    #[serde(default)]
    pub name: Option<String>,
    pub geometry: GeometrySpec,
    #[serde(default)]
    pub physics: PhysicalParameters,
    pub contacts: ContactSpec,
    pub protocol: VoltageProtocol,
    #[serde(default)]
    pub solver: SolverConfig,
    #[serde(default)]
    pub outputs: OutputConfig,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub study: Option<StudyGrid>,
    /// Present in configurations echoed by a run; ignored on input.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub manifest: Option<crate::experiment::RunManifest>,
}

const PRESETS: [(&str, &str); 4] = [
    ("fig4_schottky_1d", include_str!("../../../presets/fig4_schottky_1d.toml")),
    ("fig4_ohmic_1d", include_str!("../../../presets/fig4_ohmic_1d.toml")),
    ("fig9_study", include_str!("../../../presets/fig9_study.toml")),
    ("immobile_ions_control", include_str!("../../../presets/immobile_ions_control.toml")),
];

impl ExperimentConfig {
    /// Parse without validating.
    pub fn from_toml(text: &str) -> Result<Self, ConfigError> {
        toml::from_str(text).map_err(|e| ConfigError::Parse(e.to_string()))
    }

    /// Parse and validate.
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let cfg = Self::from_toml(text)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io { path: path.to_owned(), source })?;
        Self::parse(&text)
    }

    pub fn preset_names() -> impl Iterator<Item = &'static str> {
        PRESETS.iter().map(|(n, _)| *n)
    }

    pub fn preset_text(name: &str) -> Option<&'static str> {
        PRESETS.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
    }

    pub fn preset(name: &str) -> Result<Self, ConfigError> {
        Self::parse(Self::preset_text(name).ok_or_else(|| ConfigError::UnknownPreset(name.into()))?)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("configuration serializes")
    }

    /// Every violated constraint, named by its field path.
    pub fn violations(&self) -> Vec<(String, String)> {
        let mut out = self.geometry.violations("geometry");
        out.extend(self.physics.violations("physics"));
        out.extend(self.protocol.violations("protocol"));
        out.extend(self.solver.newton.violations("solver.newton"));
        out.extend(self.solver.grid.violations("solver.grid"));
        if !self.contacts.barrier.is_finite() {
            out.push(("contacts.barrier".into(), "must be finite".into()));
        }
        if !self.contacts.equilibrium_potential.is_finite() {
            out.push(("contacts.equilibrium_potential".into(), "must be finite".into()));
        }
        if self.contacts.model == ContactModel::Schottky {
            for (name, v) in [("electron_velocity", self.physics.electron_velocity), ("hole_velocity", self.physics.hole_velocity)] {
                if v.is_none() {
                    out.push((format!("physics.{name}"), "schottky contacts need a recombination velocity".into()));
                }
            }
        }
        if self.protocol.horizon().is_none() {
            out.push(("protocol.duration".into(), "constant protocols need a duration".into()));
        }
        if let Some(h) = self.protocol.horizon() {
            for (i, t) in self.outputs.snapshot_times.iter().enumerate() {
                if !(*t >= 0.0 && *t <= h) {
                    out.push((format!("outputs.snapshot_times[{i}]"), format!("{t} s lies outside [0, {h}] s")));
                }
            }
        }
        if let Some(study) = &self.study {
            if study.electrode_ratios.is_empty() {
                out.push(("study.electrode_ratios".into(), "must not be empty".into()));
            }
            if study.thicknesses.is_empty() {
                out.push(("study.thicknesses".into(), "must not be empty".into()));
            }
            for (i, r) in study.electrode_ratios.iter().enumerate() {
                if !(*r > 0.0 && r.is_finite()) {
                    out.push((format!("study.electrode_ratios[{i}]"), format!("must be positive, got {r}")));
                }
            }
            for (i, t) in study.thicknesses.iter().enumerate() {
                if !(*t > 0.0 && t.is_finite()) {
                    out.push((format!("study.thicknesses[{i}]"), format!("must be positive, got {t}")));
                }
            }
            if self.geometry.dimension != 2 {
                out.push(("geometry.dimension".into(), "studies need a 2D geometry".into()));
            }
        }
        out
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let v = self.violations();
        if v.is_empty() {
            Ok(())
        } else {
            Err(ConfigError::Invalid(v))
        }
    }

    pub fn sweep_options(&self) -> SweepOptions {
        SweepOptions {
            newton: self.solver.newton,
            grid: self.solver.grid,
            snapshot_times: self.outputs.snapshot_times.clone(),
            face_mean: self.solver.face_mean,
            max_halvings: self.solver.max_halvings,
            horizon: None,
        }
    }

    /// Apply `key=value` overrides with dotted paths, e.g.
    /// `geometry.cells_x=100`, and validate. Values are parsed as TOML.
    pub fn with_overrides<'a>(&self, overrides: impl IntoIterator<Item = (&'a str, &'a str)>) -> Result<Self, ConfigError> {
        let cfg = self.overridden(overrides)?;
        cfg.validate()?;
        Ok(cfg)
    }

    /// As [`Self::with_overrides`], without validating the result.
    pub fn overridden<'a>(&self, overrides: impl IntoIterator<Item = (&'a str, &'a str)>) -> Result<Self, ConfigError> {
        let mut doc: toml::Table = toml::from_str(&self.to_toml()).map_err(|e| ConfigError::Parse(e.to_string()))?;
        for (key, raw) in overrides {
            let value: toml::Value = toml::from_str::<toml::Table>(&format!("v = {raw}"))
                .map(|mut t| t.remove("v").unwrap())
                .unwrap_or_else(|_| toml::Value::String(raw.to_string()));
            let mut parts: Vec<&str> = key.split('.').collect();
            let last = parts.pop().ok_or_else(|| ConfigError::Parse(format!("empty override key in `{key}`")))?;
            let mut table = &mut doc;
            for p in parts {
                table = table
                    .entry(p.to_string())
                    .or_insert_with(|| toml::Value::Table(toml::Table::new()))
                    .as_table_mut()
                    .ok_or_else(|| ConfigError::Parse(format!("`{p}` in `{key}` is not a table")))?;
            }
            table.insert(last.to_string(), value);
        }
        let text = toml::to_string(&doc).map_err(|e| ConfigError::Parse(e.to_string()))?;
        Self::from_toml(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_parse_and_validate() {
        for name in ExperimentConfig::preset_names() {
            ExperimentConfig::preset(name).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }

    #[test]
    fn round_trip_through_toml() {
        let cfg = ExperimentConfig::preset("fig4_schottky_1d").unwrap();
        assert_eq!(ExperimentConfig::parse(&cfg.to_toml()).unwrap(), cfg);
    }

    #[test]
    fn every_violation_is_listed() {
        let mut cfg = ExperimentConfig::preset("fig4_schottky_1d").unwrap();
        cfg.physics.carriers.n.mobility = -1.0;
        cfg.geometry.cells_x = 1;
        cfg.physics.hole_velocity = None;
        let err = cfg.validate().unwrap_err();
        let fields = err.fields();
        for f in ["physics.carriers.n.mobility", "geometry.cells_x", "physics.hole_velocity"] {
            assert!(fields.contains(&f), "{f} missing from {fields:?}");
        }
    }

    #[test]
    fn overrides_use_dotted_paths() {
        let cfg = ExperimentConfig::preset("fig4_ohmic_1d").unwrap();
        let o = cfg.with_overrides([("geometry.cells_x", "50"), ("physics.frozen_defects", "true")]).unwrap();
        assert_eq!(o.geometry.cells_x, 50);
        assert!(o.physics.frozen_defects);
        assert!(cfg.with_overrides([("physics.carriers.n.mobility", "-2.0")]).is_err());
    }
}
