use serde::{Deserialize, Serialize};

use super::fields::em_fields;
use crate::error::{KdError, Result};
use crate::field::LaserConfig;
use crate::ode::{uniform_steps, Rk4};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrajectoryState {
    pub t: f64,
    pub x: [f64; 3],
    pub p: [f64; 3],
    /// `∫ eE⃗·v⃗ dt` accumulated since the start.
    pub work: f64,
}

impl TrajectoryState {
    pub fn at_rest(x: [f64; 3]) -> Self {
        Self { t: 0.0, x, p: [0.0; 3], work: 0.0 }
    }

    pub fn new(x: [f64; 3], p: [f64; 3]) -> Self {
        Self { t: 0.0, x, p, work: 0.0 }
    }

    pub fn gamma(&self) -> f64 {
        (1.0 + self.p.iter().map(|q| q * q).sum::<f64>()).sqrt()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct TrajectoryConfig {
    pub steps_per_cycle: u32,
    /// With `false`, `γ` is pinned to 1 (Newtonian mechanics with the full
    /// Lorentz force).
    pub relativistic: bool,
}

impl Default for TrajectoryConfig {
    fn default() -> Self {
        Self { steps_per_cycle: 256, relativistic: true }
    }
}

impl TrajectoryConfig {
    pub fn validate(&self) -> Result<()> {
        if self.steps_per_cycle < 16 {
            return Err(KdError::config("steps_per_cycle", format!("must be ≥ 16, got {}", self.steps_per_cycle)));
        }
        Ok(())
    }
}

const DIM: usize = 7;

fn rhs(t: f64, y: &[f64], dy: &mut [f64], laser: &LaserConfig, relativistic: bool) {
    let x = [y[0], y[1], y[2]];
    let p = [y[3], y[4], y[5]];
    let gamma = if relativistic { (1.0 + p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt() } else { 1.0 };
    let v = p.map(|q| q / gamma);
    let f = em_fields(&x, t, laser);
    let (e, b) = (f.e, f.b);
    dy[0] = v[0];
    dy[1] = v[1];
    dy[2] = v[2];
    dy[3] = e[0] + v[1] * b[2] - v[2] * b[1];
    dy[4] = e[1] + v[2] * b[0] - v[0] * b[2];
    dy[5] = e[2] + v[0] * b[1] - v[1] * b[0];
    dy[6] = e[0] * v[0] + e[1] * v[1] + e[2] * v[2];
}

/// Integrates the Lorentz-force equations over `[0, T]` with fixed RK4
/// steps, returning the initial state, one state every `sample_every` laser
/// cycles (`0` for none) and the final state at `T`.
pub fn integrate_trajectory(
    initial: TrajectoryState,
    laser: &LaserConfig,
    tcfg: &TrajectoryConfig,
    sample_every_cycles: f64,
) -> Result<Vec<TrajectoryState>> {
    tcfg.validate()?;
    let period = laser.cycle_period();
    let t_end = laser.total_time();
    let (n, h) = uniform_steps(initial.t, t_end, period / tcfg.steps_per_cycle as f64);
    let stride = if sample_every_cycles > 0.0 {
        ((sample_every_cycles * period / h).round() as usize).max(1)
    } else {
        usize::MAX
    };
    let mut y = [initial.x[0], initial.x[1], initial.x[2], initial.p[0], initial.p[1], initial.p[2], initial.work];
    let mut rk = Rk4::<f64>::new(DIM);
    let mut out = vec![initial];
    let rel = tcfg.relativistic;
    for i in 0..n {
        let t = initial.t + i as f64 * h;
        rk.step(t, h, &mut y, |t, y, dy| rhs(t, y, dy, laser, rel));
        if y.iter().any(|v| !v.is_finite()) {
            return Err(KdError::NonFinite { what: "trajectory state", t: t + h });
        }
        let done = i + 1 == n;
        if done || (i + 1) % stride == 0 {
            let t = if done { t_end } else { initial.t + (i + 1) as f64 * h };
            out.push(TrajectoryState { t, x: [y[0], y[1], y[2]], p: [y[3], y[4], y[5]], work: y[6] });
        }
    }
    Ok(out)
}

/// Final state at `T`, after the pulse has switched off.
pub fn final_drift(initial: TrajectoryState, laser: &LaserConfig, tcfg: &TrajectoryConfig) -> Result<TrajectoryState> {
    let states = integrate_trajectory(initial, laser, tcfg, 0.0)?;
    Ok(*states.last().expect("trajectory holds at least the initial state"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn free_motion_without_field() {
        let l = LaserConfig::from_cycles(0.0, 0.02, 2.0, 10.0).unwrap();
        let s0 = TrajectoryState::new([1.0, 2.0, 3.0], [0.0, 0.0, 0.4]);
        let s = final_drift(s0, &l, &TrajectoryConfig::default()).unwrap();
        let v3 = 0.4 / (1.0f64 + 0.16).sqrt();
        assert!((s.x[2] - (3.0 + v3 * l.total_time())).abs() < 1e-9);
        assert_eq!(s.p, s0.p);
        assert_eq!(s.x[0], 1.0);
    }

    #[test]
    fn samples_cover_pulse() {
        let l = LaserConfig::from_cycles(1e-3, 0.02, 1.0, 4.0).unwrap();
        let s = integrate_trajectory(TrajectoryState::at_rest([10.0, 0.0, 0.0]), &l, &TrajectoryConfig::default(), 1.0)
            .unwrap();
        assert_eq!(s.len(), 5);
        assert!((s[2].t - 2.0 * l.cycle_period()).abs() < 1e-9);
        assert_eq!(s.last().unwrap().t, l.total_time());
    }

    #[test]
    fn work_balances_kinetic_energy() {
        // the magnetic force is perpendicular to v⃗, so only eE⃗ changes γ
        let l = LaserConfig::from_cycles(0.05, 0.02, 1.0, 6.0).unwrap();
        let s0 = TrajectoryState::new([PI / 8.0 / 0.02, 0.0, 0.0], [0.0, 0.0, 0.3]);
        for s in integrate_trajectory(s0, &l, &TrajectoryConfig::default(), 0.5).unwrap() {
            assert!((s.gamma() - s0.gamma() - s.work).abs() < 1e-10, "t = {}", s.t);
        }
    }

    #[test]
    fn transverse_canonical_momentum_is_conserved() {
        let l = LaserConfig::from_cycles(0.01, 0.02, 2.0, 8.0).unwrap();
        let s0 = TrajectoryState::new([50.0, 0.0, 0.0], [0.0, 0.0, 0.2]);
        for s in integrate_trajectory(s0, &l, &TrajectoryConfig::default(), 0.25).unwrap() {
            let a3 = super::super::vector_potential(&s.x, s.t, &l);
            assert!((s.p[2] + a3 - 0.2).abs() < 1e-10, "t = {}", s.t);
        }
    }

    #[test]
    fn rejects_coarse_steps() {
        let l = LaserConfig::from_cycles(1e-3, 0.02, 1.0, 4.0).unwrap();
        let cfg = TrajectoryConfig { steps_per_cycle: 8, relativistic: true };
        assert!(integrate_trajectory(TrajectoryState::at_rest([0.0; 3]), &l, &cfg, 0.0).is_err());
    }
}
