//! Scenario runner: configuration, the experiments and
//! their CSV/JSON outputs.

mod config;
mod output;
mod runners;

pub use config::{
    load_config, preset, scan_p3_grid, ClassicalSection, ExperimentConfig, GridSection, LaserSection, P3Section,
    SamplingSection, Scenario, PRESETS,
};
pub use output::{format_number, read_csv, read_summary, write_csv, write_summary};
pub use runners::{
    ablation_traces, channel_row, classical_drift, classical_quadratic_coefficient, dirac_trace, fit_rabi_period,
    parallel_map, run, run_ablation, run_channels, run_classical_scan, run_convergence, run_rabi, run_scan_p3,
    scan_point, workers_from_env, AblationResult, ChannelRow, PointFailure, RabiFit, RunSummary, SanityCheck, ScanRow,
    CHANNEL_HEADER, CLASSICAL_SCAN_HEADER, RABI_HEADER, SCAN_HEADER, TRAJECTORY_HEADER, WORKERS_ENV,
};
