use num_complex::Complex64;

use super::fcoeff::{f_coefficient, FCoefficients};
use super::sign_slot;
use crate::error::{KdError, Result};
use crate::field::LaserConfig;
use crate::kinematics::{EnergySign, ModeGrid, QuantumLabel, Spin};
use crate::spinor::{spinor_matrix_element, tsrw_coefficients};

/// One term of the coherent sum: the path `0 → 1 → 2` through the
/// intermediate state `(γ', s')` into final spin `s`, starting from `+,↑`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelAmplitude {
    pub intermediate: QuantumLabel,
    pub initial_spin: Spin,
    pub final_spin: Spin,
    pub amplitude: Complex64,
    pub f: FCoefficients,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PerturbativeResult {
    /// `U₂₀^{+,s;+,↑}(T)` indexed by `s.index()`.
    pub propagator: [Complex64; 2],
    pub probability: f64,
    /// `|c₂^{+,s}|²` restricted to one intermediate sign, indexed `[γ'][s]`.
    pub channel_probabilities: [[f64; 2]; 2],
    pub channels: Vec<ChannelAmplitude>,
    /// Set when `|U|² > 0.5`, where second-order theory is no longer reliable.
    pub outside_domain: bool,
}

impl PerturbativeResult {
    /// Coherent recombination of the stored channel terms for final spin `s`.
    pub fn recombined(&self, s: Spin) -> Complex64 {
        self.channels.iter().filter(|c| c.final_spin == s).map(|c| c.amplitude).sum()
    }
}

/// Prefactor `i (eA₀/4)² T` shared by every channel.
fn prefactor(laser: &LaserConfig, time: f64) -> Complex64 {
    let a = laser.amplitude() / 4.0;
    Complex64::new(0.0, a * a * time)
}

/// All eight terms `i (eA₀/4)² T F^{γ'} L₂₁^{+,s;γ',s'} L₁₀^{γ',s';+,↑}`.
pub fn channel_amplitudes(grid: &ModeGrid, laser: &LaserConfig, time: f64) -> Result<Vec<ChannelAmplitude>> {
    let pre = prefactor(laser, time);
    let mut out = Vec::with_capacity(8);
    for sign in EnergySign::BOTH {
        let f = f_coefficient(sign, grid, laser)?;
        for s_mid in Spin::BOTH {
            let mid = QuantumLabel::new(sign, s_mid);
            let l10 = spinor_matrix_element(1, 0, mid, QuantumLabel::POS_UP, grid)?;
            for s in Spin::BOTH {
                let fin = QuantumLabel::new(EnergySign::Positive, s);
                let l21 = spinor_matrix_element(2, 1, fin, mid, grid)?;
                out.push(ChannelAmplitude {
                    intermediate: mid,
                    initial_spin: Spin::Up,
                    final_spin: s,
                    amplitude: pre * f.sum * l21 * l10,
                    f,
                });
            }
        }
    }
    Ok(out)
}

/// Second-order propagator `0 → 2` for a flat-top field of duration `time`.
pub fn dirac_propagator_20(grid: &ModeGrid, laser: &LaserConfig, time: f64) -> Result<PerturbativeResult> {
    let channels = channel_amplitudes(grid, laser, time)?;
    let mut propagator = [Complex64::new(0.0, 0.0); 2];
    let mut partial = [[Complex64::new(0.0, 0.0); 2]; 2];
    for c in &channels {
        propagator[c.final_spin.index()] += c.amplitude;
        partial[sign_slot(c.intermediate.sign)][c.final_spin.index()] += c.amplitude;
    }
    let probability = propagator.iter().map(|u| u.norm_sqr()).sum::<f64>();
    let channel_probabilities = partial.map(|row| row.map(|u| u.norm_sqr()));
    let outside_domain = probability > 0.5;
    if outside_domain {
        log::warn!("perturbative probability {probability:.3} at p3 = {} exceeds 0.5", grid.p3());
    }
    Ok(PerturbativeResult { propagator, probability, channel_probabilities, channels, outside_domain })
}

/// `|Σ_{s'} (eA₀/4)² T F^{γ'} L₂₁ L₁₀|²` for one intermediate sign and final spin.
pub fn channel_probability(sign: EnergySign, s: Spin, grid: &ModeGrid, laser: &LaserConfig, time: f64) -> Result<f64> {
    let amp: Complex64 = channel_amplitudes(grid, laser, time)?
        .iter()
        .filter(|c| c.intermediate.sign == sign && c.final_spin == s)
        .map(|c| c.amplitude)
        .sum();
    Ok(amp.norm_sqr())
}

/// Real spin-preserving sum `Σ_{γ'} F^{γ'} Σ_{s'} L₂₁^{+,↑;γ',s'} L₁₀^{γ',s';+,↑}`
/// built from the t/s/r/w contractions. Its sign change marks the point where
/// positive and negative intermediate paths cancel.
pub fn spin_preserving_amplitude(p3: f64, wave_number: f64) -> Result<f64> {
    let grid = ModeGrid::minimal(p3, wave_number)?;
    let c21 = tsrw_coefficients(2, 1, &grid)?;
    let c10 = tsrw_coefficients(1, 0, &grid)?;
    let e1 = grid.energy(1)?;
    let mut total = 0.0;
    for sign in EnergySign::BOTH {
        let mut path = 0.0;
        for s_mid in Spin::BOTH {
            let mid = QuantumLabel::new(sign, s_mid);
            path += c21.element(QuantumLabel::POS_UP, mid) * c10.element(mid, QuantumLabel::POS_UP);
        }
        total += sign.factor() / e1 * path;
    }
    Ok(total)
}

/// Bisection for the zero of [`spin_preserving_amplitude`] inside `[lo, hi]`.
pub fn spin_preserving_root(wave_number: f64, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    let (mut a, mut b) = (lo, hi);
    let mut fa = spin_preserving_amplitude(a, wave_number)?;
    let fb = spin_preserving_amplitude(b, wave_number)?;
    if fa.signum() == fb.signum() {
        return Err(KdError::config("bracket", format!("no sign change on [{lo}, {hi}]")));
    }
    while b - a > tol {
        let m = 0.5 * (a + b);
        let fm = spin_preserving_amplitude(m, wave_number)?;
        if fm == 0.0 {
            return Ok(m);
        }
        if fm.signum() == fa.signum() {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    Ok(0.5 * (a + b))
}
