use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::field::LaserConfig;
use crate::kinematics::ModeGrid;
use crate::units::time_to_cycles;

/// Leading terms of the propagator for `ħk_L ≪ p₃ ≪ mc`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LowP3Result {
    pub propagator: Complex64,
    pub probability: f64,
}

/// `U ≈ −i e²A₀²T/16 (1 − 5/2 p₃²)`, probability `(e²A₀²T/16)² (1 − 5 p₃²)`.
pub fn dirac_lowp3(grid: &ModeGrid, laser: &LaserConfig, time: f64) -> LowP3Result {
    let a2 = laser.amplitude().powi(2);
    let base = a2 * time / 16.0;
    let p2 = grid.p3() * grid.p3();
    LowP3Result {
        propagator: Complex64::new(0.0, -base * (1.0 - 2.5 * p2)),
        probability: base * base * (1.0 - 5.0 * p2),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RabiParameters {
    /// `Ω_R = e²A₀²/8` in `mc²/ħ`.
    pub frequency: f64,
    /// `T_R = 2π/Ω_R` in `ħ/mc²`.
    pub period: f64,
    pub period_cycles: f64,
}

/// Rabi frequency and period of the `0 ↔ 2` oscillation at `p₃ = 0`.
pub fn rabi_parameters(laser: &LaserConfig) -> RabiParameters {
    let frequency = laser.amplitude().powi(2) / 8.0;
    let period = std::f64::consts::TAU / frequency;
    RabiParameters { frequency, period, period_cycles: time_to_cycles(period, laser.wave_number()) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perturbation::dirac_propagator_20;

    fn laser(amp: f64) -> LaserConfig {
        LaserConfig::from_cycles(amp, 0.02, 5.0, 150.0).unwrap()
    }

    #[test]
    fn reference_rabi_values() {
        let r = rabi_parameters(&laser(0.01));
        assert!((r.frequency - 1.25e-5).abs() < 1e-18);
        assert!((r.period - 5.0265e5).abs() < 1e2);
        assert!((r.period_cycles - 1600.0).abs() < 1e-9);
        let r2 = rabi_parameters(&laser(0.02));
        assert!((r2.period * 4.0 - r.period).abs() < 1e-6);
    }

    #[test]
    fn zero_p3_probability() {
        let l = laser(0.01);
        let g = ModeGrid::minimal(0.0, 0.02).unwrap();
        let r = dirac_lowp3(&g, &l, l.total_time());
        assert!((r.probability - 0.0867).abs() < 1e-4);
        assert!((r.propagator.norm_sqr() - r.probability).abs() < 1e-15);
    }

    #[test]
    fn close_to_exact_for_small_p3() {
        let l = laser(0.01);
        for i in 0..=15 {
            let p3 = 0.01 * i as f64;
            let g = ModeGrid::minimal(p3, 0.02).unwrap();
            let approx = dirac_lowp3(&g, &l, l.total_time()).probability;
            let exact = dirac_propagator_20(&g, &l, l.total_time()).unwrap().probability;
            assert!((approx - exact).abs() / exact < 0.01, "p3 = {p3}: {approx} vs {exact}");
        }
    }

    #[test]
    fn residual_is_quartic() {
        // exact ratio (1 − 5p² + 13p⁴ + …) up to O(k_L²/p₃²) recoil terms
        let l = laser(0.01);
        let g0 = ModeGrid::minimal(0.0, 0.02).unwrap();
        let p0 = dirac_propagator_20(&g0, &l, l.total_time()).unwrap().probability;
        for p3 in [0.06, 0.08, 0.1, 0.12] {
            let g = ModeGrid::minimal(p3, 0.02).unwrap();
            let exact = dirac_propagator_20(&g, &l, l.total_time()).unwrap().probability / p0;
            let c4 = (exact - (1.0 - 5.0 * p3 * p3)) / p3.powi(4);
            assert!((c4 - 13.0).abs() < 0.5, "p3 = {p3}: {c4}");
        }
    }
}
