//! Building and running a configured experiment, and writing its outputs.

use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::assembly::{Assembler, DeviceState};
use crate::config::{ConfigError, ExperimentConfig};
use crate::device::{Device, DeviceError, InitialState};
use crate::mesh::{build_device_mesh, AdmissibleMesh, MeshError};
use crate::observables::{write_snapshot, write_sweep_csv, Snapshot};
use crate::physics::{nondimensionalize, PhysicsError};
use crate::solver::{initial_state, run_sweep, SolverError, Trajectory};

#[derive(Debug, thiserror::Error)]
pub enum ExperimentError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Physics(#[from] PhysicsError),
    #[error(transparent)]
    Mesh(#[from] MeshError),
    #[error(transparent)]
    Device(#[from] DeviceError),
    #[error("initial state: {0}")]
    Initial(SolverError),
    #[error("sweep stopped at t = {t} s: {error}")]
    Sweep { t: f64, error: SolverError, partial: Box<RunResult> },
    #[error("writing {path}: {message}")]
    Output { path: PathBuf, message: String },
}

/// A validated configuration with its mesh and scaled device.
#[derive(Debug, Clone)]
pub struct Experiment {
    pub config: ExperimentConfig,
    pub mesh: AdmissibleMesh,
    pub device: Device,
}

#[derive(Debug, Clone)]
pub struct RunResult {
    pub trajectory: Trajectory,
    pub snapshots: Vec<Snapshot>,
    /// Seconds spent in the sweep, excluding setup.
    pub wall_time: f64,
}

impl Experiment {
    pub fn new(config: ExperimentConfig) -> Result<Self, ExperimentError> {
        config.validate()?;
        let nd = nondimensionalize(&config.physics)?;
        let mesh = build_device_mesh(&config.geometry, &nd.scaling)?;
        let device = Device::new(&config.physics, &config.geometry, &config.contacts, config.protocol.clone(), &mesh)?;
        Ok(Experiment { config, mesh, device })
    }

    pub fn assembler(&self) -> Assembler<'_> {
        Assembler::new(&self.device, &self.mesh)
    }

    pub fn initial_state(&self) -> Result<DeviceState, ExperimentError> {
        initial_state(&self.assembler(), &InitialState::ThermalEquilibrium, &self.config.solver.newton)
            .map_err(ExperimentError::Initial)
    }

    /// Thermal equilibrium followed by the configured sweep.
    pub fn run(&self) -> Result<RunResult, ExperimentError> {
        let asm = self.assembler();
        let init = self.initial_state()?;
        let start = Instant::now();
        let sweep = run_sweep(&asm, init, &self.config.sweep_options());
        let wall_time = start.elapsed().as_secs_f64();
        let finish = |trajectory: Trajectory| {
            let snapshots = trajectory.snapshots.iter().map(|s| Snapshot::capture(&asm, s)).collect();
            RunResult { trajectory, snapshots, wall_time }
        };
        match sweep {
            Ok(t) => Ok(finish(t)),
            Err(f) => Err(ExperimentError::Sweep { t: f.t, error: f.error, partial: Box::new(finish(*f.partial)) }),
        }
    }
}

/// Provenance written next to the results. A manifest is itself a valid
/// configuration: feeding it back to `run` repeats the experiment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunManifest {
    pub software: String,
    pub version: String,
    /// `"ok"` or the failure diagnostic.
    pub status: String,
    pub wall_time_s: f64,
    pub threads: usize,
    pub steps: usize,
    pub newton_iterations: usize,
    pub files: Vec<String>,
}

pub const SWEEP_FILE: &str = "sweep.csv";
pub const MANIFEST_FILE: &str = "manifest.toml";

pub fn snapshot_file_name(t: f64) -> String {
    format!("snapshot_{t}s.csv")
}

fn output_error(path: &Path, e: impl std::fmt::Display) -> ExperimentError {
    ExperimentError::Output { path: path.to_owned(), message: e.to_string() }
}

/// Write the sweep CSV, one CSV per snapshot and the manifest into `dir`.
pub fn write_run(
    dir: &Path,
    config: &ExperimentConfig,
    result: &RunResult,
    status: &str,
    threads: usize,
) -> Result<RunManifest, ExperimentError> {
    std::fs::create_dir_all(dir).map_err(|e| output_error(dir, e))?;
    let mut files = vec![SWEEP_FILE.to_string()];
    let path = dir.join(SWEEP_FILE);
    let f = std::fs::File::create(&path).map_err(|e| output_error(&path, e))?;
    write_sweep_csv(std::io::BufWriter::new(f), &result.trajectory.rows).map_err(|e| output_error(&path, e))?;
    for snap in &result.snapshots {
        let name = snapshot_file_name(snap.t);
        let path = dir.join(&name);
        let f = std::fs::File::create(&path).map_err(|e| output_error(&path, e))?;
        write_snapshot(std::io::BufWriter::new(f), snap).map_err(|e| output_error(&path, e))?;
        files.push(name);
    }
    let manifest = RunManifest {
        software: env!("CARGO_PKG_NAME").into(),
        version: env!("CARGO_PKG_VERSION").into(),
        status: status.into(),
        wall_time_s: result.wall_time,
        threads,
        steps: result.trajectory.steps.len(),
        newton_iterations: result.trajectory.steps.iter().map(|s| s.newton_iterations).sum(),
        files,
    };
    let mut echo = config.clone();
    echo.manifest = Some(manifest.clone());
    let path = dir.join(MANIFEST_FILE);
    std::fs::write(&path, echo.to_toml()).map_err(|e| output_error(&path, e))?;
    Ok(manifest)
}
