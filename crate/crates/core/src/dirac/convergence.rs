use serde::{Deserialize, Serialize};

use super::solver::{DiracRun, IntegratorConfig};
use crate::error::Result;

/// Final populations of a run repeated with a wider window and a finer step.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceReport {
    /// `[|c₀^{+↑}|², |c₀^{+↓}|², |c₂^{+↑}|², |c₂^{+↓}|², Σ|c⁻|²]` of the base run.
    pub base: [f64; 5],
    pub refined: [f64; 5],
    pub max_abs_change: f64,
    /// Relative change of `|c₂^+|²`; zero when both runs give zero.
    pub rel_change_diffraction: f64,
}

/// Repeat `run` with the window widened by two modes on each side and twice
/// the steps per fast period, and compare the final populations.
pub fn convergence_check(run: &DiracRun) -> Result<ConvergenceReport> {
    let refined_run = DiracRun {
        grid: run.grid.widened(2),
        integrator: IntegratorConfig {
            steps_per_fast_period: 2 * run.integrator.steps_per_fast_period,
            ..run.integrator
        },
        ..*run
    };
    let base = populations(run)?;
    let refined = populations(&refined_run)?;
    let max_abs_change = base.iter().zip(refined.iter()).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    let (d0, d1) = (base[2] + base[3], refined[2] + refined[3]);
    let rel_change_diffraction = if d0 == d1 { 0.0 } else { (d1 - d0).abs() / d0.abs().max(d1.abs()) };
    Ok(ConvergenceReport { base, refined, max_abs_change, rel_change_diffraction })
}

fn populations(run: &DiracRun) -> Result<[f64; 5]> {
    let o = run.final_state()?.observables();
    Ok([o.p0_up, o.p0_down, o.p2_up, o.p2_down, o.negative])
}
