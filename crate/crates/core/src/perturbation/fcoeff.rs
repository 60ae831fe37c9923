use crate::error::{KdError, Result};
use crate::field::LaserConfig;
use crate::kinematics::{EnergySign, ModeGrid};

/// Energy denominators of the intermediate state with sign `γ` in mode 1:
/// `F_a^γ = 1/(γω₁ − ω₀ + aω)` for `a = ±` and their sum `F^γ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FCoefficients {
    pub sign: EnergySign,
    pub plus: f64,
    pub minus: f64,
    pub sum: f64,
}

pub fn f_coefficient(sign: EnergySign, grid: &ModeGrid, laser: &LaserConfig) -> Result<FCoefficients> {
    let e0 = grid.energy(0)?;
    let e1 = grid.energy(1)?;
    // E₁ − E₀ is O(k²); take it from the momenta to avoid cancellation.
    let base = match sign {
        EnergySign::Positive => {
            let (p0, p1) = (grid.mode_momentum(0)?, grid.mode_momentum(1)?);
            (p1 - p0).dot(&(p1 + p0)) / (e1 + e0)
        }
        EnergySign::Negative => -e1 - e0,
    };
    let omega = laser.omega();
    let inv = |d: f64| {
        if d.abs() <= 1e-12 * (e0 + e1) {
            Err(KdError::Resonance { sign: sign.symbol(), denominator: d })
        } else {
            Ok(1.0 / d)
        }
    };
    let plus = inv(base + omega)?;
    let minus = inv(base - omega)?;
    Ok(FCoefficients { sign, plus, minus, sum: plus + minus })
}

/// `F^γ = γħ/E₁`, valid whenever the Bragg condition `E₂ = E₀` holds.
pub fn f_closed_form(sign: EnergySign, grid: &ModeGrid) -> Result<f64> {
    Ok(sign.factor() / grid.energy(1)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn at_zero_transverse_momentum() {
        let g = ModeGrid::minimal(0.0, 0.02).unwrap();
        let l = LaserConfig::from_cycles(0.01, 0.02, 5.0, 150.0).unwrap();
        let fp = f_coefficient(EnergySign::Positive, &g, &l).unwrap();
        let fm = f_coefficient(EnergySign::Negative, &g, &l).unwrap();
        assert!((fp.sum - 1.0).abs() < 1e-12);
        assert!((fm.sum + 1.0).abs() < 1e-12);
        // positive path: nearly resonant single-photon denominators ~ ±1/ω
        assert!(fp.plus > 40.0 && fp.minus < -40.0);
    }

    proptest! {
        #[test]
        fn sum_equals_closed_form(p3 in 0.0f64..3.0, k in 1e-3f64..0.2) {
            let g = ModeGrid::minimal(p3, k).unwrap();
            let l = LaserConfig::new(0.01, k, 0.0, 1.0).unwrap();
            for s in EnergySign::BOTH {
                let f = f_coefficient(s, &g, &l).unwrap();
                let closed = f_closed_form(s, &g).unwrap();
                prop_assert!((f.sum - closed).abs() <= 1e-12, "{} vs {}", f.sum, closed);
            }
            let fp = f_coefficient(EnergySign::Positive, &g, &l).unwrap().sum;
            let fm = f_coefficient(EnergySign::Negative, &g, &l).unwrap().sum;
            prop_assert!((fp + fm).abs() <= 1e-12);
        }
    }
}
