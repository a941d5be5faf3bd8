//! Contact-geometry study: side, mixed and top contacts over a grid of
//! electrode lengths and layer thicknesses, compared through the relative l2
//! distance of their second-cycle currents.

use std::io::Write;

use rayon::prelude::*;

use crate::config::{ExperimentConfig, StudyGrid};
use crate::experiment::{Experiment, ExperimentError};
use crate::mesh::ContactConfig;
use crate::observables::{l2_current_error, Snapshot, SweepRow};

/// One simulation of a study. Side contacts ignore the electrode ratio.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StudyJob {
    pub contact_config: ContactConfig,
    pub electrode_ratio: f64,
    pub thickness: f64,
}

impl StudyJob {
    pub fn label(&self) -> String {
        match self.contact_config {
            ContactConfig::Side => format!("side_hT{:e}", self.thickness),
            c => format!("{}_hE{}_hT{:e}", c.label(), self.electrode_ratio, self.thickness),
        }
    }

    /// The base configuration specialized to this job.
    pub fn config(&self, base: &ExperimentConfig) -> ExperimentConfig {
        let mut cfg = base.clone();
        cfg.study = None;
        cfg.manifest = None;
        cfg.name = Some(self.label());
        cfg.geometry.contact_config = self.contact_config;
        cfg.geometry.thickness = self.thickness;
        cfg.geometry.electrode_length = match self.contact_config {
            ContactConfig::Side => 0.0,
            _ => self.electrode_ratio * cfg.geometry.channel_length,
        };
        cfg
    }
}

/// Every distinct job of a grid: one side-contact run per thickness, and one
/// mixed and one top run per grid point.
pub fn study_jobs(grid: &StudyGrid) -> Vec<StudyJob> {
    let mut jobs = Vec::new();
    for &thickness in &grid.thicknesses {
        jobs.push(StudyJob { contact_config: ContactConfig::Side, electrode_ratio: 0.0, thickness });
        for &electrode_ratio in &grid.electrode_ratios {
            for contact_config in [ContactConfig::Mixed, ContactConfig::Top] {
                jobs.push(StudyJob { contact_config, electrode_ratio, thickness });
            }
        }
    }
    jobs
}

#[derive(Debug)]
pub struct JobData {
    /// Rows of the last cycle.
    pub rows: Vec<SweepRow>,
    /// Snapshots at the configured output times.
    pub snapshots: Vec<Snapshot>,
}

#[derive(Debug)]
pub struct JobOutcome {
    pub job: StudyJob,
    /// Results, or the failure diagnostic.
    pub data: Result<JobData, String>,
    pub wall_time: f64,
}

/// Errors of one grid point; `None` where a run failed.
#[derive(Debug, Clone, PartialEq)]
pub struct StudyCell {
    pub electrode_ratio: f64,
    pub thickness: f64,
    pub e_mc_sc: Option<f64>,
    pub e_mc_tc: Option<f64>,
    pub note: String,
}

#[derive(Debug)]
pub struct StudyReport {
    pub outcomes: Vec<JobOutcome>,
    pub cells: Vec<StudyCell>,
}

fn run_job(base: &ExperimentConfig, job: StudyJob) -> JobOutcome {
    let start = std::time::Instant::now();
    let data = Experiment::new(job.config(base))
        .and_then(|e| e.run())
        .map(|r| {
            let last = r.trajectory.cycle_of(r.trajectory.final_state.time);
            JobData { rows: r.trajectory.cycle_rows(last), snapshots: r.snapshots }
        })
        .map_err(|e: ExperimentError| e.to_string());
    match &data {
        Ok(_) => log::info!("job={} status=ok", job.label()),
        Err(e) => log::warn!("job={} status=failed cause={e}", job.label()),
    }
    JobOutcome { job, data, wall_time: start.elapsed().as_secs_f64() }
}

fn currents(rows: &[SweepRow]) -> Vec<f64> {
    rows.iter().map(|r| r.current).collect()
}

/// Run every job of `base.study` on the current rayon pool and assemble the
/// error matrix. Failed runs leave their cells empty.
pub fn run_study(base: &ExperimentConfig) -> Result<StudyReport, ExperimentError> {
    base.validate()?;
    let grid = base.study.clone().ok_or_else(|| {
        crate::config::ConfigError::Invalid(vec![("study".into(), "the configuration has no study grid".into())])
    })?;
    let outcomes: Vec<JobOutcome> = study_jobs(&grid).into_par_iter().map(|job| run_job(base, job)).collect();
    let find = |c: ContactConfig, r: f64, t: f64| {
        outcomes.iter().find(|o| {
            o.job.contact_config == c && o.job.thickness == t && (c == ContactConfig::Side || o.job.electrode_ratio == r)
        })
    };
    let mut cells = Vec::new();
    for &thickness in &grid.thicknesses {
        for &electrode_ratio in &grid.electrode_ratios {
            let mc = find(ContactConfig::Mixed, electrode_ratio, thickness).unwrap();
            let sc = find(ContactConfig::Side, electrode_ratio, thickness).unwrap();
            let tc = find(ContactConfig::Top, electrode_ratio, thickness).unwrap();
            let mut notes = Vec::new();
            let mut error = |other: &JobOutcome| match (&mc.data, &other.data) {
                (Ok(a), Ok(b)) => match l2_current_error(&currents(&a.rows), &currents(&b.rows)) {
                    Ok(e) => Some(e),
                    Err(e) => {
                        notes.push(e.to_string());
                        None
                    }
                },
                (a, b) => {
                    for r in [a, b] {
                        if let Err(e) = r {
                            notes.push(e.clone());
                        }
                    }
                    None
                }
            };
            let e_mc_sc = error(sc);
            let e_mc_tc = error(tc);
            notes.dedup();
            cells.push(StudyCell { electrode_ratio, thickness, e_mc_sc, e_mc_tc, note: notes.join("; ") });
        }
    }
    Ok(StudyReport { outcomes, cells })
}

/// Error matrix with one row per grid point; failed entries are empty.
pub fn write_study_csv<W: Write>(out: W, cells: &[StudyCell]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["thickness_m", "electrode_ratio", "e_mc_sc", "e_mc_tc", "note"])?;
    let opt = |x: Option<f64>| x.map(|v| format!("{v:.16e}")).unwrap_or_default();
    for c in cells {
        w.write_record([
            format!("{:.16e}", c.thickness),
            format!("{:.16e}", c.electrode_ratio),
            opt(c.e_mc_sc),
            opt(c.e_mc_tc),
            c.note.clone(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jobs_share_side_runs() {
        let grid = StudyGrid { electrode_ratios: vec![0.02, 0.1, 0.3], thicknesses: vec![1.5e-9, 15e-9] };
        let jobs = study_jobs(&grid);
        assert_eq!(jobs.len(), 2 * (1 + 3 * 2));
        assert_eq!(jobs.iter().filter(|j| j.contact_config == ContactConfig::Side).count(), 2);
    }

    #[test]
    fn job_configs_are_valid() {
        let base = ExperimentConfig::preset("fig9_study").unwrap();
        for job in study_jobs(base.study.as_ref().unwrap()) {
            let cfg = job.config(&base);
            assert!(cfg.validate().is_ok(), "{}: {:?}", job.label(), cfg.violations());
            let cols = cfg.geometry.cells_x + 2 * cfg.geometry.electrode_columns();
            assert!(cols <= 80 && cfg.geometry.cells_z <= 12, "{} has {cols} columns", job.label());
        }
    }
}
