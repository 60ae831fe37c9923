use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use kdlab::experiments::{self, load_config, preset, ExperimentConfig, Scenario, WORKERS_ENV};

/// Two-photon Kapitza-Dirac laboratory.
#[derive(Debug, Parser)]
#[command(name = "kdlab", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full-mask Dirac evolution and the fitted Rabi period.
    Rabi(RunArgs),
    /// Same-sign-only and cross-sign-only coupling runs.
    Ablation(RunArgs),
    /// Diffraction probability against transverse momentum.
    ScanP3(RunArgs),
    /// Probabilities split by intermediate energy sign and final spin.
    Channels(RunArgs),
    /// Classical drift momentum against transverse momentum.
    ClassicalScan(RunArgs),
    /// Repeat a run with a wider window and finer steps.
    Convergence(RunArgs),
}

#[derive(Debug, Args)]
struct RunArgs {
    /// TOML experiment file.
    #[arg(long, short, conflicts_with = "preset")]
    config: Option<PathBuf>,
    /// Built-in parameter set (fig1a, fig1bc, fig2, fig3, classical, convergence).
    #[arg(long, short)]
    preset: Option<String>,
    /// Output directory; overrides the one in the config.
    #[arg(long, short)]
    out: Option<PathBuf>,
    /// Worker threads for scans.
    #[arg(long, short, env = WORKERS_ENV)]
    workers: Option<usize>,
}

impl Command {
    fn split(self) -> (Scenario, RunArgs) {
        match self {
            Command::Rabi(a) => (Scenario::Rabi, a),
            Command::Ablation(a) => (Scenario::Ablation, a),
            Command::ScanP3(a) => (Scenario::ScanP3, a),
            Command::Channels(a) => (Scenario::Channels, a),
            Command::ClassicalScan(a) => (Scenario::ClassicalScan, a),
            Command::Convergence(a) => (Scenario::Convergence, a),
        }
    }
}

fn resolve(scenario: Scenario, args: &RunArgs) -> kdlab::Result<ExperimentConfig> {
    let cfg = match (&args.config, &args.preset) {
        (Some(path), _) => load_config(path)?,
        (None, Some(name)) => preset(name)?,
        (None, None) => preset(scenario.default_preset())?,
    };
    if cfg.scenario != scenario {
        return Err(kdlab::KdError::InvalidConfig {
            field: "scenario".into(),
            reason: format!("config describes `{}` but `{}` was requested", cfg.scenario, scenario),
        });
    }
    Ok(cfg)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info")).init();
    let (scenario, args) = Cli::parse().command.split();
    let cfg = match resolve(scenario, &args) {
        Ok(c) => c,
        Err(e) => {
            log::error!("{e}");
            return ExitCode::from(2);
        }
    };
    let dir = args
        .out
        .clone()
        .or_else(|| cfg.output_dir.clone())
        .unwrap_or_else(|| PathBuf::from("results").join(scenario.name()));
    let workers = args.workers.unwrap_or(1).max(1);
    match experiments::run(&cfg, &dir, workers) {
        Ok(summary) => {
            for c in &summary.checks {
                log::info!("{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
            }
            for f in &summary.flags {
                log::warn!("{f}");
            }
            for f in &summary.failures {
                log::error!("p3 = {}: {}", f.p3, f.error);
            }
            log::info!("wrote {} to {}", summary.outputs.join(", "), dir.display());
            ExitCode::SUCCESS
        }
        Err(e) => {
            log::error!("{e}");
            ExitCode::FAILURE
        }
    }
}
