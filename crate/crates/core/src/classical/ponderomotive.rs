use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::field::LaserConfig;

/// Which transverse-momentum correction the cycle-averaged force carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PonderomotiveModel {
    /// `1 − p₃²`
    NonRelativistic,
    /// `1 − 5/2 p₃²`
    Relativistic,
}

impl PonderomotiveModel {
    pub fn correction_coefficient(self) -> f64 {
        match self {
            PonderomotiveModel::NonRelativistic => 1.0,
            PonderomotiveModel::Relativistic => 2.5,
        }
    }

    pub fn force(self, x: f64, p3: f64, laser: &LaserConfig) -> f64 {
        let (a, k) = (laser.amplitude(), laser.wave_number());
        let (s, c) = (k * x).sin_cos();
        0.5 * k * a * a * (1.0 - self.correction_coefficient() * p3 * p3) * s * c
    }
}

/// Cycle-averaged force along `ê₁` and the potential it derives from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ponderomotive {
    pub force: f64,
    pub potential: f64,
}

/// `F = (k_L e²A₀²/2)(1 − p₃²) sin(k_Lx) cos(k_Lx)`,
/// `V = (e²A₀²/4)(1 − p₃²) cos²(k_Lx)`.
pub fn nonrel_ponderomotive(x: f64, p3: f64, laser: &LaserConfig) -> Ponderomotive {
    let a = laser.amplitude();
    let c = (laser.wave_number() * x).cos();
    Ponderomotive {
        force: PonderomotiveModel::NonRelativistic.force(x, p3, laser),
        potential: 0.25 * a * a * (1.0 - p3 * p3) * c * c,
    }
}

/// `F = (k_L e²A₀²/2)(1 − 5/2 p₃²) sin(k_Lx) cos(k_Lx)`, valid to second order
/// in `p₃` and `eA₀`.
pub fn rel_ponderomotive_force(x: f64, p3: f64, laser: &LaserConfig) -> f64 {
    PonderomotiveModel::Relativistic.force(x, p3, laser)
}

/// Plane-wave matrix element `⟨p_n| V |p_n'⟩` of the ponderomotive potential:
/// `(e²A₀²/16)(1 − p₃²)(δ_{n,n'−2} + 2δ_{n,n'} + δ_{n,n'+2})`.
pub fn pond_matrix_element(n: i32, n_prime: i32, p3: f64, laser: &LaserConfig) -> f64 {
    let a = laser.amplitude();
    let base = a * a / 16.0 * (1.0 - p3 * p3);
    match (n - n_prime).abs() {
        0 => 2.0 * base,
        2 => base,
        _ => 0.0,
    }
}

/// First-order propagator `0 → 2` of the ponderomotive potential over a
/// flat-top time `time`: `−i V₂₀ T`.
pub fn pond_propagator(p3: f64, laser: &LaserConfig, time: f64) -> Complex64 {
    Complex64::new(0.0, -pond_matrix_element(2, 0, p3, laser) * time)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kinematics::ModeGrid;
    use crate::perturbation::schrodinger_propagator_20;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn laser(a: f64) -> LaserConfig {
        LaserConfig::new(a, 0.02, 0.0, 1e5).unwrap()
    }

    #[test]
    fn reference_force_value() {
        let l = laser(0.01);
        let x = PI / 4.0 / 0.02;
        let p = nonrel_ponderomotive(x, 0.0, &l);
        assert!((p.force - 5e-7).abs() < 1e-18);
        assert_eq!(nonrel_ponderomotive(0.0, 0.0, &l).force, 0.0);
    }

    #[test]
    fn relativistic_reduction() {
        let l = laser(0.01);
        let x = 17.0;
        assert_eq!(rel_ponderomotive_force(x, 0.0, &l), nonrel_ponderomotive(x, 0.0, &l).force);
        let ratio = rel_ponderomotive_force(x, 0.4, &l) / nonrel_ponderomotive(x, 0.4, &l).force;
        assert!((ratio - 0.6 / 0.84).abs() < 1e-12);
    }

    #[test]
    fn diagonal_is_twice_off_diagonal() {
        let l = laser(0.01);
        let off = pond_matrix_element(2, 0, 0.3, &l);
        assert_eq!(pond_matrix_element(1, 1, 0.3, &l), 2.0 * off);
        assert_eq!(pond_matrix_element(0, 2, 0.3, &l), off);
        assert_eq!(pond_matrix_element(0, 1, 0.3, &l), 0.0);
    }

    #[test]
    fn zero_p3_propagator() {
        let l = laser(0.01);
        let u = pond_propagator(0.0, &l, 4e4);
        assert_eq!(u, Complex64::new(0.0, -1e-4 * 4e4 / 16.0));
    }

    proptest! {
        #[test]
        fn force_is_minus_potential_gradient(x in -500.0f64..500.0, p3 in 0.0f64..0.5) {
            let l = laser(0.01);
            let h = 1e-3;
            let grad = (nonrel_ponderomotive(x + h, p3, &l).potential - nonrel_ponderomotive(x - h, p3, &l).potential) / (2.0 * h);
            prop_assert!((nonrel_ponderomotive(x, p3, &l).force + grad).abs() < 1e-12);
        }

        #[test]
        fn antisymmetric_about_quarter_wavelength(x in 0.0f64..400.0, p3 in 0.0f64..0.5) {
            let l = laser(0.01);
            let half = PI / 0.02;
            for model in [PonderomotiveModel::NonRelativistic, PonderomotiveModel::Relativistic] {
                let f = model.force(x, p3, &l);
                let g = model.force(half - x, p3, &l);
                prop_assert!((f + g).abs() <= 1e-12 * f.abs().max(1e-12));
            }
        }

        #[test]
        fn matches_schrodinger_total(p3 in 0.0f64..1.5, a in 0.0f64..0.05, t in 0.0f64..1e6) {
            let l = laser(a);
            let g = ModeGrid::minimal(p3, 0.02).unwrap();
            let s = schrodinger_propagator_20(&g, &l, t).total;
            let u = pond_propagator(p3, &l, t);
            prop_assert!((u - s).norm() <= 1e-12 * s.norm().max(1e-300));
        }
    }
}
