use num_complex::Complex64;

use crate::error::Result;
use crate::field::LaserConfig;
use crate::kinematics::ModeGrid;

/// Schrödinger-equation propagator `0 → 2`: the `A²` term at first order,
/// the `p·A` term at second order, and their sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchrodingerPropagator {
    pub first: Complex64,
    pub second: Complex64,
    pub total: Complex64,
}

impl SchrodingerPropagator {
    pub fn probability(&self) -> f64 {
        self.total.norm_sqr()
    }
}

/// Kinetic energy `ℰ_n = ((n−1)²k_L² + p₃²)/2` without the rest mass.
pub fn nonrel_energy(n: i32, grid: &ModeGrid) -> Result<f64> {
    Ok(0.5 * grid.mode_momentum(n)?.norm_sqr())
}

/// Exact sum `1/(ℰ₁ − ℰ₀ + ω) + 1/(ℰ₁ − ℰ₀ − ω) = 4/(4 − k_L²)`.
///
/// Differs from its leading value `1` only by the recoil `k_L²/4`.
pub fn nonrel_f_plus(wave_number: f64) -> f64 {
    4.0 / (4.0 - wave_number * wave_number)
}

/// Flat-top propagator with the energy-denominator sum `F⁺` at its leading
/// value `1/mc²`.
pub fn schrodinger_propagator_20(grid: &ModeGrid, laser: &LaserConfig, time: f64) -> SchrodingerPropagator {
    let a2 = laser.amplitude().powi(2);
    let base = a2 * time / 16.0;
    let p3 = grid.p3();
    // A² term: diagonal cos² coupling between modes 0 and 2.
    let first = Complex64::new(0.0, -base);
    // p·A twice through mode 1: i (eA₀/4)² T F⁺ p₃ p₃.
    let second = Complex64::new(0.0, base * p3 * p3);
    SchrodingerPropagator { first, second, total: first + second }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perturbation::dirac_lowp3;
    use proptest::prelude::*;

    #[test]
    fn energies() {
        let g = ModeGrid::minimal(0.3, 0.02).unwrap();
        assert!((nonrel_energy(1, &g).unwrap() - 0.045).abs() < 1e-15);
        assert!((nonrel_energy(0, &g).unwrap() - nonrel_energy(2, &g).unwrap()).abs() < 1e-15);
    }

    #[test]
    fn f_plus_sum_matches_closed_form() {
        let k = 0.02;
        let g = ModeGrid::minimal(0.7, k).unwrap();
        let d = nonrel_energy(1, &g).unwrap() - nonrel_energy(0, &g).unwrap();
        let sum = 1.0 / (d + k) + 1.0 / (d - k);
        assert!((sum - nonrel_f_plus(k)).abs() < 1e-12);
        assert!((nonrel_f_plus(k) - 1.0).abs() < 2e-4);
    }

    #[test]
    fn zero_p3_equals_dirac_leading_term() {
        let l = LaserConfig::from_cycles(0.01, 0.02, 5.0, 150.0).unwrap();
        let g = ModeGrid::minimal(0.0, 0.02).unwrap();
        let s = schrodinger_propagator_20(&g, &l, l.total_time());
        assert_eq!(s.total, s.first);
        assert_eq!(s.total, dirac_lowp3(&g, &l, l.total_time()).propagator);
    }

    proptest! {
        #[test]
        fn total_is_closed_form(p3 in 0.0f64..1.0, amp in 0.0f64..0.05, t in 0.0f64..1e6) {
            let l = LaserConfig::new(amp, 0.02, 0.0, t.max(1.0)).unwrap();
            let g = ModeGrid::minimal(p3, 0.02).unwrap();
            let s = schrodinger_propagator_20(&g, &l, t);
            let closed = -amp * amp * t / 16.0 * (1.0 - p3 * p3);
            prop_assert!(s.total.re == 0.0);
            prop_assert!((s.total.im - closed).abs() <= 1e-12 * closed.abs().max(1e-300));
        }
    }
}
