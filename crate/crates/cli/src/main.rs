//! `memdd` command-line driver.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use memdd::config::{ConfigError, ExperimentConfig};
use memdd::experiment::{snapshot_file_name, write_run, Experiment, ExperimentError, RunManifest, MANIFEST_FILE, SWEEP_FILE};
use memdd::observables::{
    l2_current_error, read_snapshot, read_sweep_csv, relative_current_difference, relative_density_difference, write_snapshot,
    write_sweep_csv, SweepRow,
};
use memdd::study::{run_study, write_study_csv};

#[derive(Parser, Debug)]
#[command(name = "memdd", version, about = "Drift-diffusion simulation of vacancy-assisted memristive devices")]
struct Cli {
    /// Worker threads for studies (0 = all cores).
    #[arg(long, global = true, env = "MEMDD_THREADS", default_value_t = 0)]
    threads: usize,

    /// Output directory. Defaults to `outputs.directory` of the configuration,
    /// then to `runs/<name>`.
    #[arg(long, global = true, env = "MEMDD_OUT")]
    out: Option<PathBuf>,

    /// Comma-separated snapshot times in s, replacing those of the configuration.
    #[arg(long, global = true, env = "MEMDD_SNAPSHOT_TIMES", value_delimiter = ',')]
    snapshot_times: Option<Vec<f64>>,

    /// Configuration override `dotted.key=value` (TOML value); repeatable.
    #[arg(long = "set", global = true, value_name = "KEY=VALUE")]
    overrides: Vec<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run one sweep and write its CSVs and manifest.
    Run {
        /// Configuration file, a manifest of an earlier run, or a preset name.
        config: String,
    },
    /// Run a contact-geometry study and write the error matrix.
    Study { config: String },
    /// Compare two run directories.
    Compare {
        run_a: PathBuf,
        run_b: PathBuf,
        #[arg(long, value_enum)]
        metric: Metric,
    },
    /// Check a configuration and list every invalid field.
    Validate { config: String },
    /// List the built-in presets, or print one.
    Presets { name: Option<String> },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Metric {
    /// Pointwise `|n_A - n_B| / |n_A|` on every common snapshot.
    Density,
    /// Pointwise `|I_A - I_B| / |I_A|` over the sweep.
    Current,
    /// Relative l2 distance of the last-cycle current magnitudes.
    L2,
}

/// Failures that map to a distinct exit status.
#[derive(Debug)]
enum Failure {
    Invalid(ConfigError),
    Run(anyhow::Error),
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Invalid(e) => write!(f, "{e}"),
            Failure::Run(e) => write!(f, "{e:#}"),
        }
    }
}

impl std::error::Error for Failure {}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Run(e)
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("MEMDD_LOG", "warn")).init();
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invalid(e)) => {
            eprintln!("error: invalid configuration");
            match &e {
                ConfigError::Invalid(v) => {
                    for (field, message) in v {
                        eprintln!("  {field}: {message}");
                    }
                }
                other => eprintln!("  {other}"),
            }
            ExitCode::from(2)
        }
        Err(Failure::Run(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn dispatch(cli: &Cli) -> Result<(), Failure> {
    if cli.threads > 0 {
        rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global().context("configuring the thread pool")?;
    }
    match &cli.command {
        Command::Run { config } => run(cli, &load(cli, config)?),
        Command::Study { config } => study(cli, &load(cli, config)?),
        Command::Compare { run_a, run_b, metric } => Ok(compare(run_a, run_b, *metric)?),
        Command::Validate { config } => {
            let cfg = load(cli, config)?;
            println!("{}: ok", cfg.name.as_deref().unwrap_or(config));
            Ok(())
        }
        Command::Presets { name: None } => {
            for n in ExperimentConfig::preset_names() {
                println!("{n}");
            }
            Ok(())
        }
        Command::Presets { name: Some(n) } => {
            let text = ExperimentConfig::preset_text(n).ok_or_else(|| Failure::Invalid(ConfigError::UnknownPreset(n.clone())))?;
            print!("{text}");
            Ok(())
        }
    }
}

/// Read a configuration from a file or preset name and apply the command-line
/// overrides. Every constraint violation is reported at once.
fn load(cli: &Cli, source: &str) -> Result<ExperimentConfig, Failure> {
    let path = Path::new(source);
    let text = if path.exists() {
        std::fs::read_to_string(path).map_err(|e| Failure::Run(anyhow::Error::new(e).context(format!("reading {source}"))))?
    } else if let Some(t) = ExperimentConfig::preset_text(source) {
        t.to_string()
    } else {
        return Err(Failure::Run(anyhow::anyhow!("`{source}` is neither a file nor a preset ({})", preset_list())));
    };
    let mut cfg = ExperimentConfig::from_toml(&text).map_err(Failure::Invalid)?;
    cfg.manifest = None;
    if let Some(times) = &cli.snapshot_times {
        cfg.outputs.snapshot_times = times.clone();
    }
    let mut pairs = Vec::new();
    for o in &cli.overrides {
        let (k, v) = o.split_once('=').ok_or_else(|| Failure::Run(anyhow::anyhow!("override `{o}` is not of the form key=value")))?;
        pairs.push((k.trim(), v.trim()));
    }
    if !pairs.is_empty() {
        cfg = cfg.overridden(pairs).map_err(Failure::Invalid)?;
    }
    cfg.validate().map_err(Failure::Invalid)?;
    Ok(cfg)
}

fn preset_list() -> String {
    ExperimentConfig::preset_names().collect::<Vec<_>>().join(", ")
}

fn out_dir(cli: &Cli, cfg: &ExperimentConfig) -> PathBuf {
    cli.out
        .clone()
        .or_else(|| cfg.outputs.directory.clone())
        .unwrap_or_else(|| Path::new("runs").join(cfg.name.as_deref().unwrap_or("run")))
}

fn threads() -> usize {
    rayon::current_num_threads()
}

fn run(cli: &Cli, cfg: &ExperimentConfig) -> Result<(), Failure> {
    let dir = out_dir(cli, cfg);
    let exp = Experiment::new(cfg.clone()).map_err(|e| match e {
        ExperimentError::Config(c) => Failure::Invalid(c),
        other => Failure::Run(other.into()),
    })?;
    match exp.run() {
        Ok(result) => {
            let m = write_run(&dir, cfg, &result, "ok", threads()).context("writing results")?;
            println!(
                "{} steps, {} Newton iterations, {:.2} s; results in {}",
                m.steps,
                m.newton_iterations,
                m.wall_time_s,
                dir.display()
            );
            Ok(())
        }
        Err(ExperimentError::Sweep { t, error, partial }) => {
            let status = format!("failed at t = {t} s: {error}");
            write_run(&dir, cfg, &partial, &status, threads()).context("writing partial results")?;
            Err(Failure::Run(anyhow::anyhow!("sweep {status}; partial results in {}", dir.display())))
        }
        Err(e) => Err(Failure::Run(e.into())),
    }
}

fn study(cli: &Cli, cfg: &ExperimentConfig) -> Result<(), Failure> {
    if cfg.study.is_none() {
        return Err(Failure::Invalid(ConfigError::Invalid(vec![("study".into(), "the configuration has no [study] grid".into())])));
    }
    let dir = out_dir(cli, cfg);
    let start = std::time::Instant::now();
    let report = run_study(cfg).map_err(|e| Failure::Run(e.into()))?;
    let jobs_dir = dir.join("jobs");
    std::fs::create_dir_all(&jobs_dir).with_context(|| format!("creating {}", jobs_dir.display()))?;
    let mut files = vec!["study.csv".to_string(), "jobs.csv".to_string()];
    let mut jobs = csv::Writer::from_path(dir.join("jobs.csv")).context("writing jobs.csv")?;
    jobs.write_record(["job", "status", "wall_time_s"]).map_err(anyhow::Error::from)?;
    let mut failed = 0;
    for o in &report.outcomes {
        let label = o.job.label();
        let status = match &o.data {
            Ok(data) => {
                let name = format!("jobs/{label}_last_cycle.csv");
                write_sweep_csv(std::fs::File::create(dir.join(&name)).context("creating job output")?, &data.rows)
                    .map_err(anyhow::Error::from)?;
                files.push(name);
                for s in &data.snapshots {
                    let name = format!("jobs/{label}_{}", snapshot_file_name(s.t));
                    write_snapshot(std::fs::File::create(dir.join(&name)).context("creating job output")?, s)
                        .map_err(anyhow::Error::from)?;
                    files.push(name);
                }
                "ok".to_string()
            }
            Err(e) => {
                failed += 1;
                format!("failed: {e}")
            }
        };
        jobs.write_record([label, status, format!("{:.3}", o.wall_time)]).map_err(anyhow::Error::from)?;
    }
    jobs.flush().context("writing jobs.csv")?;
    write_study_csv(std::fs::File::create(dir.join("study.csv")).context("creating study.csv")?, &report.cells)
        .map_err(anyhow::Error::from)?;
    let status = if failed == 0 { "ok".to_string() } else { format!("{failed} of {} jobs failed", report.outcomes.len()) };
    let mut echo = cfg.clone();
    echo.manifest = Some(RunManifest {
        software: "memdd".into(),
        version: env!("CARGO_PKG_VERSION").into(),
        status: status.clone(),
        wall_time_s: start.elapsed().as_secs_f64(),
        threads: threads(),
        steps: 0,
        newton_iterations: 0,
        files,
    });
    std::fs::write(dir.join(MANIFEST_FILE), echo.to_toml()).context("writing the manifest")?;
    println!("thickness_m,electrode_ratio,e_mc_sc,e_mc_tc");
    for c in &report.cells {
        let f = |x: Option<f64>| x.map_or("-".to_string(), |v| format!("{v:.4e}"));
        println!("{:e},{},{},{}", c.thickness, c.electrode_ratio, f(c.e_mc_sc), f(c.e_mc_tc));
    }
    println!("results in {}", dir.display());
    if failed > 0 {
        return Err(Failure::Run(anyhow::anyhow!("{status}; see jobs.csv")));
    }
    Ok(())
}

fn read_rows(dir: &Path) -> Result<Vec<SweepRow>> {
    let path = dir.join(SWEEP_FILE);
    let f = std::fs::File::open(&path).with_context(|| format!("opening {}", path.display()))?;
    read_sweep_csv(f).with_context(|| format!("reading {}", path.display()))
}

fn read_config(dir: &Path) -> Option<ExperimentConfig> {
    ExperimentConfig::from_toml(&std::fs::read_to_string(dir.join(MANIFEST_FILE)).ok()?).ok()
}

fn compare(a: &Path, b: &Path, metric: Metric) -> Result<()> {
    match metric {
        Metric::Current => {
            let (ra, rb) = (read_rows(a)?, read_rows(b)?);
            let ia: Vec<f64> = ra.iter().map(|r| r.current).collect();
            let ib: Vec<f64> = rb.iter().map(|r| r.current).collect();
            let d = relative_current_difference(&ia, &ib)?;
            let masked = d.iter().filter(|x| x.is_none()).count();
            let (k, max) = d
                .iter()
                .enumerate()
                .filter_map(|(k, x)| x.map(|x| (k, x)))
                .fold((0, 0.0), |acc, (k, x)| if x > acc.1 { (k, x) } else { acc });
            println!("metric=current samples={} masked={masked} max={max:.6e} at_t={}", d.len(), ra[k].t);
        }
        Metric::L2 => {
            let (ra, rb) = (read_rows(a)?, read_rows(b)?);
            let last = |rows: &[SweepRow], dir: &Path| -> Vec<f64> {
                let period = read_config(dir).and_then(|c| c.protocol.cycle_period());
                let end = rows.last().map_or(0.0, |r| r.t);
                rows.iter()
                    .filter(|r| period.is_none_or(|p| r.t >= end - p - 1e-9 * end.max(1.0)))
                    .map(|r| r.current)
                    .collect()
            };
            let e = l2_current_error(&last(&ra, a), &last(&rb, b))?;
            println!("metric=l2 error={e:.6e}");
        }
        Metric::Density => {
            let mut names: Vec<String> = std::fs::read_dir(a)
                .with_context(|| format!("listing {}", a.display()))?
                .filter_map(|e| e.ok()?.file_name().into_string().ok())
                .filter(|n| n.starts_with("snapshot_") && n.ends_with("s.csv") && b.join(n).exists())
                .collect();
            names.sort();
            if names.is_empty() {
                bail!("{} and {} have no snapshot in common", a.display(), b.display());
            }
            for name in names {
                let t: f64 = name.trim_start_matches("snapshot_").trim_end_matches("s.csv").parse().unwrap_or(f64::NAN);
                let open = |dir: &Path| -> Result<_> {
                    let path = dir.join(&name);
                    read_snapshot(std::fs::File::open(&path)?, t).with_context(|| format!("reading {}", path.display()))
                };
                let (sa, sb) = (open(a)?, open(b)?);
                for (s, species) in ["n", "p", "a"].iter().enumerate() {
                    let d = relative_density_difference(sa.density(s), sb.density(s))?;
                    let (k, max) = d.iter().enumerate().fold((0, 0.0), |acc, (k, x)| if *x > acc.1 { (k, *x) } else { acc });
                    println!("metric=density t={t} species={species} max={max:.6e} at_x={:.6e}", sa.x[k]);
                }
            }
        }
    }
    Ok(())
}
