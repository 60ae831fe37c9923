use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::mask::ChannelMask;
use super::state::AmplitudeState;
use crate::error::{KdError, Result};
use crate::field::LaserConfig;
use crate::kinematics::{EnergySign, ModeGrid, QuantumLabel};
use crate::ode::{uniform_steps, Rk4};
use crate::spinor::{spinor_matrix_element, Matrix4, SpinorTable};

/// Step-size control for the fixed-step integrator.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct IntegratorConfig {
    /// Steps per period of the fastest phase retained in the interaction
    /// picture.
    pub steps_per_fast_period: u32,
    /// Largest tolerated `|Σ|c|² − 1|` at any sample before aborting.
    pub norm_tolerance: f64,
}

impl Default for IntegratorConfig {
    fn default() -> Self {
        Self { steps_per_fast_period: 112, norm_tolerance: 1e-6 }
    }
}

impl IntegratorConfig {
    pub fn validate(&self) -> Result<()> {
        if self.steps_per_fast_period < 16 {
            return Err(KdError::config(
                "steps_per_fast_period",
                format!("must be at least 16, got {}", self.steps_per_fast_period),
            ));
        }
        if self.norm_tolerance.is_nan() || self.norm_tolerance <= 0.0 {
            return Err(KdError::config("norm_tolerance", "must be positive"));
        }
        Ok(())
    }
}

/// Schrödinger-picture interaction matrix element `V_{n,n'}^{a;b}(t)`.
pub fn interaction_element(
    n: i32,
    n_prime: i32,
    a: QuantumLabel,
    b: QuantumLabel,
    t: f64,
    laser: &LaserConfig,
    grid: &ModeGrid,
) -> Result<Complex64> {
    grid.check(n)?;
    grid.check(n_prime)?;
    if (n - n_prime).abs() != 1 {
        return Ok(Complex64::default());
    }
    let l = spinor_matrix_element(n, n_prime, a, b, grid)?;
    Ok(l * (-0.5 * laser.amplitude() * laser.carrier(t)))
}

/// Everything needed to reproduce one numeric run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiracRun {
    pub laser: LaserConfig,
    pub grid: ModeGrid,
    pub mask: ChannelMask,
    pub integrator: IntegratorConfig,
}

impl DiracRun {
    pub fn system(&self) -> DiracSystem {
        DiracSystem::new(self.laser, self.grid, self.mask)
    }

    /// Evolve the standard initial state to the end of the pulse.
    pub fn final_state(&self) -> Result<AmplitudeState> {
        let sys = self.system();
        sys.evolve_to(AmplitudeState::initial(&self.grid), self.laser.total_time(), &self.integrator)
    }
}

/// The coupled amplitude equations for one laser, window and mask.
#[derive(Debug, Clone)]
pub struct DiracSystem {
    laser: LaserConfig,
    grid: ModeGrid,
    mask: ChannelMask,
    energies: Vec<f64>,
    /// `L_{n+1,n}` for each adjacent pair, masked.
    raising: Vec<Matrix4>,
    /// `L_{n,n+1}`, masked.
    lowering: Vec<Matrix4>,
    fast_frequency: f64,
}

impl DiracSystem {
    pub fn new(laser: LaserConfig, grid: ModeGrid, mask: ChannelMask) -> Self {
        let mut sys = Self::unmasked(laser, grid);
        if mask != ChannelMask::ALL {
            for block in sys.raising.iter_mut().chain(sys.lowering.iter_mut()) {
                for a in QuantumLabel::ALL {
                    for b in QuantumLabel::ALL {
                        if !mask.allows(a.sign, b.sign) {
                            block[a.index()][b.index()] = Complex64::default();
                        }
                    }
                }
            }
            sys.mask = mask;
            sys.fast_frequency = sys.fastest_frequency();
        }
        sys
    }

    /// All interaction blocks on, without consulting a mask.
    pub fn unmasked(laser: LaserConfig, grid: ModeGrid) -> Self {
        let table = SpinorTable::new(&grid);
        let mut raising = Vec::with_capacity(grid.len() - 1);
        let mut lowering = Vec::with_capacity(grid.len() - 1);
        for n in grid.n_min()..grid.n_max() {
            raising.push(table.coupling_block(n + 1, n).expect("modes in window"));
            lowering.push(table.coupling_block(n, n + 1).expect("modes in window"));
        }
        let mut sys = Self {
            laser,
            grid,
            mask: ChannelMask::ALL,
            energies: table.energies().to_vec(),
            raising,
            lowering,
            fast_frequency: 0.0,
        };
        sys.fast_frequency = sys.fastest_frequency();
        sys
    }

    pub fn laser(&self) -> &LaserConfig {
        &self.laser
    }

    pub fn grid(&self) -> &ModeGrid {
        &self.grid
    }

    pub fn mask(&self) -> ChannelMask {
        self.mask
    }

    /// Fastest angular frequency the stepper has to resolve: the largest
    /// `|γE_n − γ'E_n'|` over enabled couplings plus the laser frequency.
    fn fastest_frequency(&self) -> f64 {
        let mut fastest: f64 = 0.0;
        for (i, w) in self.energies.windows(2).enumerate() {
            for a in QuantumLabel::ALL {
                for b in QuantumLabel::ALL {
                    let active = self.raising[i][a.index()][b.index()] != Complex64::default()
                        || self.lowering[i][b.index()][a.index()] != Complex64::default();
                    if active {
                        let f = (a.sign.factor() * w[1] - b.sign.factor() * w[0]).abs();
                        fastest = fastest.max(f);
                    }
                }
            }
        }
        fastest + self.laser.omega()
    }

    /// Largest step allowed by the integrator configuration.
    pub fn max_step(&self, icfg: &IntegratorConfig) -> f64 {
        TAU / self.fast_frequency / icfg.steps_per_fast_period as f64
    }

    /// Scalar prefactor `−eA₀ sin(ωt) ξ(t) / 2` of every coupling.
    #[inline]
    pub fn drive(&self, t: f64) -> f64 {
        -0.5 * self.laser.amplitude() * self.laser.carrier(t)
    }

    /// Interaction-picture time derivative for an arbitrary scalar drive.
    fn derivative(
        &self,
        t: f64,
        drive: f64,
        c: &[Complex64],
        dc: &mut [Complex64],
        phases: &mut [Complex64],
        u: &mut [Complex64],
    ) {
        if drive == 0.0 {
            dc.fill(Complex64::default());
            return;
        }
        for (ph, &e) in phases.iter_mut().zip(self.energies.iter()) {
            *ph = Complex64::from_polar(1.0, -e * t);
        }
        // Schrödinger-picture amplitudes
        for (m, ph) in phases.iter().enumerate() {
            let base = 4 * m;
            u[base] = c[base] * ph;
            u[base + 1] = c[base + 1] * ph;
            u[base + 2] = c[base + 2] * ph.conj();
            u[base + 3] = c[base + 3] * ph.conj();
        }
        let modes = self.energies.len();
        let factor = Complex64::new(0.0, -drive);
        for m in 0..modes {
            let mut w = [Complex64::default(); 4];
            if m + 1 < modes {
                let blk = &self.lowering[m];
                let src = &u[4 * (m + 1)..4 * (m + 2)];
                for (wi, row) in w.iter_mut().zip(blk.iter()) {
                    *wi += row[0] * src[0] + row[1] * src[1] + row[2] * src[2] + row[3] * src[3];
                }
            }
            if m > 0 {
                let blk = &self.raising[m - 1];
                let src = &u[4 * (m - 1)..4 * m];
                for (wi, row) in w.iter_mut().zip(blk.iter()) {
                    *wi += row[0] * src[0] + row[1] * src[1] + row[2] * src[2] + row[3] * src[3];
                }
            }
            let ph = phases[m];
            let base = 4 * m;
            dc[base] = factor * ph.conj() * w[0];
            dc[base + 1] = factor * ph.conj() * w[1];
            dc[base + 2] = factor * ph * w[2];
            dc[base + 3] = factor * ph * w[3];
        }
    }

    fn check_state(&self, state: &AmplitudeState, icfg: &IntegratorConfig) -> Result<()> {
        let norm = state.norm();
        if !norm.is_finite() {
            return Err(KdError::NonFinite { what: "amplitudes", t: state.t });
        }
        let drift = (norm - 1.0).abs();
        if drift > icfg.norm_tolerance {
            return Err(KdError::NormDrift { t: state.t, drift, tolerance: icfg.norm_tolerance });
        }
        Ok(())
    }

    /// Integrate `state` through the checkpoint times, calling `on_sample`
    /// after each one. `drive(t)` supplies the coupling prefactor.
    fn integrate<D, S>(
        &self,
        mut state: AmplitudeState,
        checkpoints: &[f64],
        icfg: &IntegratorConfig,
        drive: D,
        mut on_sample: S,
    ) -> Result<AmplitudeState>
    where
        D: Fn(f64) -> f64,
        S: FnMut(&AmplitudeState),
    {
        icfg.validate()?;
        if state.grid() != &self.grid {
            return Err(KdError::config("initial", "state window does not match the system window"));
        }
        let h_max = self.max_step(icfg);
        let dim = state.amplitudes().len();
        let mut rk = Rk4::new(dim);
        let mut phases = vec![Complex64::default(); self.energies.len()];
        let mut scratch = vec![Complex64::default(); dim];
        for &tc in checkpoints {
            let (n, h) = uniform_steps(state.t, tc, h_max);
            let t0 = state.t;
            for i in 0..n {
                let t = t0 + i as f64 * h;
                rk.step(t, h, state.amplitudes_mut(), |t, c, dc| {
                    self.derivative(t, drive(t), c, dc, &mut phases, &mut scratch)
                });
            }
            state.t = tc.max(state.t);
            self.check_state(&state, icfg)?;
            on_sample(&state);
        }
        Ok(state)
    }

    fn checkpoints(&self, from: f64, to: f64, sample_every: Option<f64>) -> Vec<f64> {
        let mut pts = Vec::new();
        if let Some(dt) = sample_every.filter(|dt| *dt > 0.0) {
            let mut k = (from / dt).floor() as i64 + 1;
            loop {
                let t = k as f64 * dt;
                // avoid a sliver step right before the end
                if t >= to - 1e-9 * dt {
                    break;
                }
                pts.push(t);
                k += 1;
            }
        }
        pts.push(to);
        pts
    }

    /// Evolve over `[initial.t, T]`, returning the initial state followed by
    /// samples every `sample_every` (in `ħ/mc²`) and the state at `T`.
    pub fn evolve(
        &self,
        initial: AmplitudeState,
        icfg: &IntegratorConfig,
        sample_every: f64,
    ) -> Result<Vec<AmplitudeState>> {
        let end = self.laser.total_time();
        let pts = self.checkpoints(initial.t, end, Some(sample_every));
        let mut out = Vec::with_capacity(pts.len() + 1);
        out.push(initial.clone());
        self.integrate(initial, &pts, icfg, |t| self.drive(t), |s| out.push(s.clone()))?;
        Ok(out)
    }

    /// Like [`DiracSystem::evolve`] but only invokes `on_sample`, without
    /// collecting the states.
    pub fn evolve_with<S: FnMut(&AmplitudeState)>(
        &self,
        initial: AmplitudeState,
        icfg: &IntegratorConfig,
        sample_every: f64,
        on_sample: S,
    ) -> Result<AmplitudeState> {
        let end = self.laser.total_time();
        let pts = self.checkpoints(initial.t, end, Some(sample_every));
        self.integrate(initial, &pts, icfg, |t| self.drive(t), on_sample)
    }

    pub fn evolve_to(&self, initial: AmplitudeState, t_end: f64, icfg: &IntegratorConfig) -> Result<AmplitudeState> {
        self.integrate(initial, &[t_end], icfg, |t| self.drive(t), |_| {})
    }

    /// Evolve with a caller-supplied coupling prefactor in place of the
    /// laser's `−eA₀ sin(ωt) ξ(t)/2`.
    pub fn evolve_driven<D: Fn(f64) -> f64>(
        &self,
        initial: AmplitudeState,
        t_end: f64,
        icfg: &IntegratorConfig,
        drive: D,
    ) -> Result<AmplitudeState> {
        self.integrate(initial, &[t_end], icfg, drive, |_| {})
    }

    /// Energy sign of the state at flat index `idx`.
    pub fn sign_of(idx: usize) -> EnergySign {
        QuantumLabel::ALL[idx % 4].sign
    }
}
