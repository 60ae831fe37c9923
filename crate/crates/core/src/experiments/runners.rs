use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::config::{ExperimentConfig, Scenario};
use super::output::{write_csv, write_summary};
use crate::classical::{final_drift, integrate_trajectory, rel_ponderomotive_force, TrajectoryState};
use crate::dirac::{convergence_check, AmplitudeState, ChannelMask, DiracRun, DiracSystem, Observables};
use crate::error::{KdError, Result};
use crate::field::LaserConfig;
use crate::fit::{even_polynomial_fit, quadratic_vertex};
use crate::kinematics::{ModeGrid, Spin};
use crate::perturbation::{dirac_lowp3, dirac_propagator_20, rabi_parameters, spin_preserving_root};
use crate::units::time_to_cycles;

pub const RABI_HEADER: [&str; 7] = ["t_cycles", "p0_up", "p0_down", "p2_up", "p2_down", "p_negative", "norm"];
pub const SCAN_HEADER: [&str; 5] = ["p3_over_mc", "prob_numeric", "prob_perturbative", "prob_lowp3", "p1sq_classical"];
pub const CHANNEL_HEADER: [&str; 6] =
    ["p3_over_mc", "prob_total", "chan_pos_up", "chan_pos_down", "chan_neg_up", "chan_neg_down"];
pub const TRAJECTORY_HEADER: [&str; 6] = ["t_cycles", "x1", "x3", "p1", "p3", "gamma"];
pub const CLASSICAL_SCAN_HEADER: [&str; 3] = ["p3_over_mc", "p1_final", "p1sq_final"];

/// Environment variable holding the worker count for parameter scans.
pub const WORKERS_ENV: &str = "KDLAB_WORKERS";

/// Worker count from [`WORKERS_ENV`]; serial when unset.
pub fn workers_from_env() -> Result<usize> {
    match std::env::var(WORKERS_ENV) {
        Err(_) => Ok(1),
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|n| *n >= 1)
            .ok_or_else(|| KdError::config(WORKERS_ENV, format!("expected a positive integer, got `{v}`"))),
    }
}

/// Maps `f` over `items` on `workers` threads, keeping input order.
pub fn parallel_map<T, R, F>(items: &[T], workers: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    if workers <= 1 {
        return items.iter().map(f).collect();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
        Ok(pool) => pool.install(|| items.par_iter().map(&f).collect()),
        Err(e) => {
            log::warn!("could not start {workers} workers ({e}); running serially");
            items.iter().map(f).collect()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SanityCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl SanityCheck {
    fn new(name: &str, passed: bool, detail: String) -> Self {
        Self { name: name.to_string(), passed, detail }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointFailure {
    pub p3: f64,
    pub error: String,
}

/// Machine-readable record of one run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunSummary {
    pub scenario: Scenario,
    pub config: ExperimentConfig,
    pub outputs: Vec<String>,
    pub derived: BTreeMap<String, f64>,
    /// Per-point values; `null` marks a failed point.
    pub series: BTreeMap<String, Vec<Option<f64>>>,
    pub flags: Vec<String>,
    pub checks: Vec<SanityCheck>,
    pub failures: Vec<PointFailure>,
    pub notes: Vec<String>,
}

impl RunSummary {
    fn new(cfg: &ExperimentConfig) -> Self {
        Self {
            scenario: cfg.scenario,
            config: cfg.clone(),
            outputs: Vec::new(),
            derived: BTreeMap::new(),
            series: BTreeMap::new(),
            flags: Vec::new(),
            checks: Vec::new(),
            failures: Vec::new(),
            notes: cfg.notes.clone(),
        }
    }

    fn set(&mut self, key: &str, v: f64) {
        if v.is_finite() {
            self.derived.insert(key.to_string(), v);
        }
    }

    fn series(&mut self, key: &str, v: impl IntoIterator<Item = f64>) {
        self.series.insert(key.to_string(), v.into_iter().map(|x| x.is_finite().then_some(x)).collect());
    }

    pub fn all_checks_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn observables_row(o: &Observables, laser: &LaserConfig) -> Vec<f64> {
    vec![time_to_cycles(o.t, laser.wave_number()), o.p0_up, o.p0_down, o.p2_up, o.p2_down, o.negative, o.norm]
}

fn first_p3(cfg: &ExperimentConfig) -> Result<f64> {
    Ok(cfg.p3.resolve()?[0])
}

/// Populations sampled every `sampling.every_cycles` for one mask.
pub fn dirac_trace(cfg: &ExperimentConfig, p3: f64, mask: ChannelMask) -> Result<Vec<Observables>> {
    let laser = cfg.laser.build()?;
    let grid = cfg.grid_for(p3)?;
    let sys = DiracSystem::new(laser, grid, mask);
    let every = cfg.sampling.every_cycles * laser.cycle_period();
    let mut out = vec![AmplitudeState::initial(&grid).observables()];
    sys.evolve_with(AmplitudeState::initial(&grid), &cfg.integrator, every, |s| out.push(s.observables()))?;
    Ok(out)
}

/// Location of the first maximum of `|c₂^+|²` and the Rabi period implied by it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RabiFit {
    pub bracketed: bool,
    pub peak_cycles: Option<f64>,
    pub peak_probability: Option<f64>,
    /// `∫ξ² dt` up to the peak, in cycles.
    pub effective_peak_cycles: Option<f64>,
    /// Twice the effective time to the first maximum.
    pub period_cycles: Option<f64>,
    pub predicted_period_cycles: f64,
    pub relative_deviation: Option<f64>,
}

/// Finds the first maximum of the diffraction probability in `trace`.
///
/// A maximum counts as bracketed once the probability has fallen 10 % below
/// it. The peak is refined by a parabola through the samples within 5 % of
/// the maximum, in effective time `∫ξ² dt`, which removes the ramp delay.
pub fn fit_rabi_period(trace: &[Observables], laser: &LaserConfig) -> RabiFit {
    let predicted = rabi_parameters(laser).period_cycles;
    let p: Vec<f64> = trace.iter().map(|o| o.diffraction()).collect();
    let mut best = 0;
    let mut bracketed = false;
    for i in 0..p.len() {
        if p[i] > p[best] {
            best = i;
        } else if p[best] > 0.0 && p[i] < 0.9 * p[best] {
            bracketed = true;
            break;
        }
    }
    if !bracketed {
        return RabiFit {
            bracketed,
            peak_cycles: None,
            peak_probability: None,
            effective_peak_cycles: None,
            period_cycles: None,
            predicted_period_cycles: predicted,
            relative_deviation: None,
        };
    }
    let cutoff = 0.95 * p[best];
    let mut lo = best;
    while lo > 0 && p[lo - 1] >= cutoff {
        lo -= 1;
    }
    let mut hi = best;
    while hi + 1 < p.len() && p[hi + 1] >= cutoff {
        hi += 1;
    }
    let teff: Vec<f64> = trace[lo..=hi].iter().map(|o| laser.squared_envelope_integral(o.t)).collect();
    let peak_eff =
        if hi - lo >= 2 { quadratic_vertex(&teff, &p[lo..=hi]).unwrap_or(teff[best - lo]) } else { teff[best - lo] };
    let k = laser.wave_number();
    let eff_cycles = time_to_cycles(peak_eff, k);
    let period = 2.0 * eff_cycles;
    RabiFit {
        bracketed,
        peak_cycles: Some(time_to_cycles(trace[best].t, k)),
        peak_probability: Some(p[best]),
        effective_peak_cycles: Some(eff_cycles),
        period_cycles: Some(period),
        predicted_period_cycles: predicted,
        relative_deviation: Some((period - predicted) / predicted),
    }
}

fn prepare_dir(dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir).map_err(|e| KdError::io(dir, e))
}

fn finish(mut summary: RunSummary, dir: &Path, files: Vec<PathBuf>) -> Result<RunSummary> {
    summary.outputs = files.iter().filter_map(|f| f.file_name()).map(|f| f.to_string_lossy().into_owned()).collect();
    summary.outputs.push("summary.json".into());
    write_summary(&summary, &dir.join("summary.json"))?;
    Ok(summary)
}

pub fn run_rabi(cfg: &ExperimentConfig, dir: &Path) -> Result<RunSummary> {
    prepare_dir(dir)?;
    let laser = cfg.laser.build()?;
    let p3 = first_p3(cfg)?;
    let trace = dirac_trace(cfg, p3, cfg.mask)?;
    let csv = dir.join("rabi.csv");
    write_csv(&csv, &RABI_HEADER, &trace.iter().map(|o| observables_row(o, &laser)).collect::<Vec<_>>())?;

    let fit = fit_rabi_period(&trace, &laser);
    let rp = rabi_parameters(&laser);
    let mut s = RunSummary::new(cfg);
    s.set("p3", p3);
    s.set("rabi_frequency", rp.frequency);
    s.set("predicted_period", rp.period);
    s.set("predicted_period_cycles", rp.period_cycles);
    let max_norm_drift = trace.iter().map(|o| (o.norm - 1.0).abs()).fold(0.0, f64::max);
    s.set("max_norm_drift", max_norm_drift);
    match (fit.period_cycles, fit.relative_deviation) {
        (Some(period), Some(dev)) => {
            s.set("fitted_period_cycles", period);
            s.set("first_max_cycles", fit.peak_cycles.unwrap_or(f64::NAN));
            s.set("first_max_probability", fit.peak_probability.unwrap_or(f64::NAN));
            s.set("first_max_effective_cycles", fit.effective_peak_cycles.unwrap_or(f64::NAN));
            s.set("relative_deviation", dev);
            s.checks.push(SanityCheck::new(
                "rabi_period_within_2_percent",
                dev.abs() <= 0.02,
                format!("fitted {period:.2} cycles, predicted {:.2}", rp.period_cycles),
            ));
        }
        _ => s.flags.push("period not bracketed".into()),
    }
    s.checks.push(SanityCheck::new(
        "norm_drift",
        max_norm_drift <= cfg.integrator.norm_tolerance,
        format!("max |norm − 1| = {max_norm_drift:.3e}"),
    ));
    finish(s, dir, vec![csv])
}

/// Final populations of the three mask variants.
#[derive(Debug, Clone, PartialEq)]
pub struct AblationResult {
    pub full: Vec<Observables>,
    pub cross_sign: Vec<Observables>,
    pub same_sign: Vec<Observables>,
}

pub fn ablation_traces(cfg: &ExperimentConfig, workers: usize) -> Result<AblationResult> {
    let p3 = first_p3(cfg)?;
    let masks = [ChannelMask::ALL, ChannelMask::CROSS_SIGN, ChannelMask::SAME_SIGN];
    let mut runs = parallel_map(&masks, workers, |m| dirac_trace(cfg, p3, *m)).into_iter();
    let mut next = || runs.next().expect("three runs");
    Ok(AblationResult { full: next()?, cross_sign: next()?, same_sign: next()? })
}

pub fn run_ablation(cfg: &ExperimentConfig, dir: &Path, workers: usize) -> Result<RunSummary> {
    prepare_dir(dir)?;
    let laser = cfg.laser.build()?;
    let r = ablation_traces(cfg, workers)?;
    let cross = dir.join("ablation_cross_sign.csv");
    let same = dir.join("ablation_same_sign.csv");
    let rows = |t: &[Observables]| t.iter().map(|o| observables_row(o, &laser)).collect::<Vec<_>>();
    write_csv(&cross, &RABI_HEADER, &rows(&r.cross_sign))?;
    write_csv(&same, &RABI_HEADER, &rows(&r.same_sign))?;

    let last = |t: &[Observables]| t.last().expect("trace holds the final state").p2_up;
    let (full, cr, sm) = (last(&r.full), last(&r.cross_sign), last(&r.same_sign));
    let mut s = RunSummary::new(cfg);
    s.set("p2_up_full", full);
    s.set("p2_up_cross_sign", cr);
    s.set("p2_up_same_sign", sm);
    s.set("ratio_same_over_full", sm / full);
    s.set("ratio_cross_over_full", cr / full);
    s.set("ratio_cross_over_same", cr / sm);
    s.checks.push(SanityCheck::new(
        "same_sign_suppressed_4_orders",
        sm <= 1e-4 * full,
        format!("same-sign {sm:.3e} vs full {full:.3e}"),
    ));
    s.checks.push(SanityCheck::new(
        "cross_sign_matches_full_2_percent",
        ((cr - full) / full).abs() <= 0.02,
        format!("cross-sign {cr:.6e} vs full {full:.6e}"),
    ));
    finish(s, dir, vec![cross, same])
}

/// One row of the transverse-momentum scan.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScanRow {
    pub p3: f64,
    pub numeric: f64,
    pub perturbative: f64,
    /// Perturbative value over the effective time `∫ξ² dt` instead of `T`.
    pub perturbative_effective: f64,
    pub lowp3: f64,
    pub p1sq_classical: f64,
}

impl ScanRow {
    fn csv(&self) -> Vec<f64> {
        vec![self.p3, self.numeric, self.perturbative, self.lowp3, self.p1sq_classical]
    }
}

/// Final drift momentum `p₁(T)` of a point electron launched with `p₃ ê₃`.
pub fn classical_drift(cfg: &ExperimentConfig, p3: f64) -> Result<TrajectoryState> {
    let laser = cfg.classical.laser(cfg.laser.wave_number)?;
    let x0 = cfg.classical.x0_wavelengths * crate::units::wavelength(cfg.laser.wave_number);
    final_drift(TrajectoryState::new([x0, 0.0, 0.0], [0.0, 0.0, p3]), &laser, &cfg.classical.trajectory())
}

pub fn scan_point(cfg: &ExperimentConfig, p3: f64) -> Result<ScanRow> {
    let laser = cfg.laser.build()?;
    let grid = cfg.grid_for(p3)?;
    let run = DiracRun { laser, grid, mask: cfg.mask, integrator: cfg.integrator };
    let numeric = run.final_state()?.observables().diffraction();
    let t = laser.total_time();
    let perturbative = dirac_propagator_20(&grid, &laser, t)?.probability;
    let perturbative_effective = dirac_propagator_20(&grid, &laser, laser.squared_envelope_integral(t))?.probability;
    let lowp3 = dirac_lowp3(&grid, &laser, t).probability;
    let p1 = classical_drift(cfg, p3)?.p[0];
    Ok(ScanRow { p3, numeric, perturbative, perturbative_effective, lowp3, p1sq_classical: p1 * p1 })
}

fn failed_row(p3: f64, width: usize) -> Vec<f64> {
    let mut v = vec![f64::NAN; width];
    v[0] = p3;
    v
}

pub fn run_scan_p3(cfg: &ExperimentConfig, dir: &Path, workers: usize) -> Result<RunSummary> {
    prepare_dir(dir)?;
    let p3s = cfg.p3.resolve()?;
    let results = parallel_map(&p3s, workers, |&p| scan_point(cfg, p));
    let mut s = RunSummary::new(cfg);
    let mut rows = Vec::with_capacity(p3s.len());
    let mut ok = Vec::new();
    for (&p3, r) in p3s.iter().zip(results) {
        match r {
            Ok(row) => {
                rows.push(row.csv());
                ok.push(Some(row));
            }
            Err(e) => {
                log::error!("scan point p3 = {p3} failed: {e}");
                s.failures.push(PointFailure { p3, error: e.to_string() });
                rows.push(failed_row(p3, SCAN_HEADER.len()));
                ok.push(None);
            }
        }
    }
    let csv = dir.join("scan_p3.csv");
    write_csv(&csv, &SCAN_HEADER, &rows)?;
    let col = |f: fn(&ScanRow) -> f64| ok.iter().map(move |r| r.as_ref().map_or(f64::NAN, f)).collect::<Vec<f64>>();
    let numeric = col(|r| r.numeric);
    let pert = col(|r| r.perturbative);
    s.series("p3", p3s.iter().copied());
    s.series("relative_deviation_perturbative", numeric.iter().zip(&pert).map(|(n, p)| (p - n) / n));
    s.series("prob_perturbative_effective_time", col(|r| r.perturbative_effective));
    let worst =
        numeric.iter().zip(&pert).map(|(n, p)| ((p - n) / n).abs()).filter(|d| d.is_finite()).fold(0.0, f64::max);
    s.set("max_relative_deviation_perturbative", worst);
    // the ramps shorten the interaction; the same comparison over ∫ξ² dt
    let eff = col(|r| r.perturbative_effective);
    let worst_eff =
        numeric.iter().zip(&eff).map(|(n, p)| ((p - n) / n).abs()).filter(|d| d.is_finite()).fold(0.0, f64::max);
    s.set("max_relative_deviation_effective_time", worst_eff);
    s.checks.push(SanityCheck::new(
        "perturbative_within_5_percent",
        worst <= 0.05,
        format!("largest |pert − numeric|/numeric = {worst:.4}"),
    ));
    finish(s, dir, vec![csv])
}

/// One row of the channel decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChannelRow {
    pub p3: f64,
    pub total: f64,
    /// `[+↑, +↓, −↑, −↓]`: intermediate sign and final spin.
    pub channels: [f64; 4],
    /// Largest mismatch between the recombined channel amplitudes and the
    /// total propagator.
    pub recombination_error: f64,
}

pub fn channel_row(cfg: &ExperimentConfig, p3: f64) -> Result<ChannelRow> {
    let laser = cfg.laser.build()?;
    let grid = ModeGrid::minimal(p3, laser.wave_number())?;
    let r = dirac_propagator_20(&grid, &laser, laser.total_time())?;
    let cp = r.channel_probabilities;
    let recombination_error =
        Spin::BOTH.iter().map(|&sp| (r.recombined(sp) - r.propagator[sp.index()]).norm()).fold(0.0, f64::max);
    Ok(ChannelRow { p3, total: r.probability, channels: [cp[0][0], cp[0][1], cp[1][0], cp[1][1]], recombination_error })
}

pub fn run_channels(cfg: &ExperimentConfig, dir: &Path, workers: usize) -> Result<RunSummary> {
    prepare_dir(dir)?;
    let p3s = cfg.p3.resolve()?;
    let results = parallel_map(&p3s, workers, |&p| channel_row(cfg, p));
    let mut s = RunSummary::new(cfg);
    let mut rows = Vec::new();
    let mut worst: f64 = 0.0;
    for (&p3, r) in p3s.iter().zip(results) {
        match r {
            Ok(row) => {
                worst = worst.max(row.recombination_error);
                let mut v = vec![row.p3, row.total];
                v.extend(row.channels);
                rows.push(v);
            }
            Err(e) => {
                s.failures.push(PointFailure { p3, error: e.to_string() });
                rows.push(failed_row(p3, CHANNEL_HEADER.len()));
            }
        }
    }
    let csv = dir.join("channels.csv");
    write_csv(&csv, &CHANNEL_HEADER, &rows)?;

    let k = cfg.laser.wave_number;
    let at0 = channel_row(cfg, 0.0)?;
    let ratio = at0.channels[2] / at0.channels[0];
    s.set("negative_over_positive_up_at_p3_0", ratio);
    s.set("predicted_ratio", (2.0 / k).powi(4));
    s.set("max_recombination_error", worst);
    s.checks.push(SanityCheck::new(
        "channels_recombine",
        worst <= 1e-14,
        format!("largest amplitude mismatch {worst:.2e}"),
    ));
    match spin_preserving_root(k, 0.5, 1.5, 1e-6) {
        Ok(root) => {
            s.set("spin_preserving_root", root);
            s.checks.push(SanityCheck::new(
                "root_near_unit_momentum",
                (root - 1.0).abs() <= 0.02,
                format!("root at {root:.6}"),
            ));
        }
        Err(e) => s.flags.push(format!("spin-preserving root not found: {e}")),
    }
    finish(s, dir, vec![csv])
}

/// Fitted `c` in `p₁(p₃)/p₁(0) ≈ 1 + c p₃² + d p₃⁴`.
pub fn classical_quadratic_coefficient(p3: &[f64], p1: &[f64]) -> Option<f64> {
    let c = even_polynomial_fit(p3, p1, 3)?;
    Some(c[1] / c[0])
}

pub fn run_classical_scan(cfg: &ExperimentConfig, dir: &Path, workers: usize) -> Result<RunSummary> {
    prepare_dir(dir)?;
    let p3s = cfg.p3.resolve()?;
    let laser = cfg.classical.laser(cfg.laser.wave_number)?;
    let x0 = cfg.classical.x0_wavelengths * crate::units::wavelength(cfg.laser.wave_number);

    let traj = integrate_trajectory(
        TrajectoryState::new([x0, 0.0, 0.0], [0.0, 0.0, p3s[0]]),
        &laser,
        &cfg.classical.trajectory(),
        cfg.sampling.every_cycles,
    )?;
    let k = laser.wave_number();
    let traj_rows: Vec<Vec<f64>> =
        traj.iter().map(|s| vec![time_to_cycles(s.t, k), s.x[0], s.x[2], s.p[0], s.p[2], s.gamma()]).collect();
    let traj_csv = dir.join("classical_trajectory.csv");
    write_csv(&traj_csv, &TRAJECTORY_HEADER, &traj_rows)?;

    let results = parallel_map(&p3s, workers, |&p| classical_drift(cfg, p));
    let mut s = RunSummary::new(cfg);
    let mut rows = Vec::new();
    let (mut fit_p3, mut fit_p1) = (Vec::new(), Vec::new());
    let teff = laser.squared_envelope_integral(laser.total_time());
    let mut ratios = Vec::new();
    for (&p3, r) in p3s.iter().zip(results) {
        match r {
            Ok(st) => {
                rows.push(vec![p3, st.p[0], st.p[0] * st.p[0]]);
                fit_p3.push(p3);
                fit_p1.push(st.p[0]);
                ratios.push(st.p[0] / (rel_ponderomotive_force(x0, p3, &laser) * teff));
            }
            Err(e) => {
                s.failures.push(PointFailure { p3, error: e.to_string() });
                rows.push(failed_row(p3, CLASSICAL_SCAN_HEADER.len()));
                ratios.push(f64::NAN);
            }
        }
    }
    let csv = dir.join("classical_scan.csv");
    write_csv(&csv, &CLASSICAL_SCAN_HEADER, &rows)?;
    s.set("effective_time", teff);
    s.series("p3", p3s.iter().copied());
    s.series("drift_over_analytic_force", ratios);
    if let Some(c) = classical_quadratic_coefficient(&fit_p3, &fit_p1) {
        s.set("quadratic_coefficient", c);
        s.checks.push(SanityCheck::new(
            "quadratic_coefficient_minus_5_over_2",
            (c + 2.5).abs() <= 0.2,
            format!("fitted {c:.4}"),
        ));
    } else {
        s.flags.push("too few points for a quadratic fit".into());
    }
    finish(s, dir, vec![traj_csv, csv])
}

pub fn run_convergence(cfg: &ExperimentConfig, dir: &Path) -> Result<RunSummary> {
    prepare_dir(dir)?;
    let laser = cfg.laser.build()?;
    let run = DiracRun { laser, grid: cfg.grid_for(first_p3(cfg)?)?, mask: cfg.mask, integrator: cfg.integrator };
    let r = convergence_check(&run)?;
    let mut s = RunSummary::new(cfg);
    let names = ["p0_up", "p0_down", "p2_up", "p2_down", "p_negative"];
    for (i, n) in names.iter().enumerate() {
        s.set(&format!("base_{n}"), r.base[i]);
        s.set(&format!("refined_{n}"), r.refined[i]);
    }
    s.set("max_abs_change", r.max_abs_change);
    s.set("rel_change_diffraction", r.rel_change_diffraction);
    s.checks.push(SanityCheck::new(
        "converged_1e-3",
        r.rel_change_diffraction < 1e-3,
        format!("relative change of |c2+|^2: {:.3e}", r.rel_change_diffraction),
    ));
    finish(s, dir, vec![])
}

/// Runs the scenario named in `cfg`, writing outputs into `dir`.
pub fn run(cfg: &ExperimentConfig, dir: &Path, workers: usize) -> Result<RunSummary> {
    cfg.validate()?;
    log::info!("running {} into {}", cfg.scenario, dir.display());
    match cfg.scenario {
        Scenario::Rabi => run_rabi(cfg, dir),
        Scenario::Ablation => run_ablation(cfg, dir, workers),
        Scenario::ScanP3 => run_scan_p3(cfg, dir, workers),
        Scenario::Channels => run_channels(cfg, dir, workers),
        Scenario::ClassicalScan => run_classical_scan(cfg, dir, workers),
        Scenario::Convergence => run_convergence(cfg, dir),
    }
}
