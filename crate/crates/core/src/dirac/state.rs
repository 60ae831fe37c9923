use num_complex::Complex64;

use crate::error::Result;
use crate::kinematics::{EnergySign, ModeGrid, QuantumLabel, Spin};

/// Complex amplitudes `c_n^{γ,s}` on a mode window at time `t`.
///
/// Amplitudes are stored in the interaction picture, i.e. with the free
/// phase `e^{−iγE_n t}` removed. Moduli are picture independent.
#[derive(Debug, Clone, PartialEq)]
pub struct AmplitudeState {
    pub t: f64,
    grid: ModeGrid,
    amplitudes: Vec<Complex64>,
}

impl AmplitudeState {
    /// The electron at rest in the laser frame's mode 0, spin up, positive
    /// energy: `c₀^{+,↑}(0) = 1`.
    pub fn initial(grid: &ModeGrid) -> Self {
        let mut s = Self::zeros(grid, 0.0);
        let idx = s.index(0, QuantumLabel::POS_UP).expect("mode 0 is always in the window");
        s.amplitudes[idx] = Complex64::new(1.0, 0.0);
        s
    }

    pub fn zeros(grid: &ModeGrid, t: f64) -> Self {
        Self { t, grid: *grid, amplitudes: vec![Complex64::default(); 4 * grid.len()] }
    }

    pub fn from_amplitudes(grid: &ModeGrid, t: f64, amplitudes: Vec<Complex64>) -> Self {
        assert_eq!(amplitudes.len(), 4 * grid.len(), "amplitude vector does not match the window");
        Self { t, grid: *grid, amplitudes }
    }

    pub fn grid(&self) -> &ModeGrid {
        &self.grid
    }

    pub fn index(&self, n: i32, label: QuantumLabel) -> Result<usize> {
        Ok(4 * self.grid.offset(n)? + label.index())
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub(crate) fn amplitudes_mut(&mut self) -> &mut [Complex64] {
        &mut self.amplitudes
    }

    pub fn amplitude(&self, n: i32, label: QuantumLabel) -> Result<Complex64> {
        Ok(self.amplitudes[self.index(n, label)?])
    }

    pub fn probability(&self, n: i32, label: QuantumLabel) -> Result<f64> {
        Ok(self.amplitude(n, label)?.norm_sqr())
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|c| c.norm_sqr()).sum()
    }

    /// Total population of the negative-energy states.
    pub fn negative_population(&self) -> f64 {
        self.amplitudes
            .chunks_exact(4)
            .map(|m| m[QuantumLabel::NEG_UP.index()].norm_sqr() + m[QuantumLabel::NEG_DOWN.index()].norm_sqr())
            .sum()
    }

    /// Amplitudes with the free phases restored.
    pub fn schrodinger_amplitudes(&self) -> Vec<Complex64> {
        let mut out = self.amplitudes.clone();
        for (n, chunk) in self.grid.modes().zip(out.chunks_exact_mut(4)) {
            let e = crate::kinematics::energy(&self.grid.momentum_unchecked(n));
            let phase = Complex64::from_polar(1.0, -e * self.t);
            for label in QuantumLabel::ALL {
                let c = &mut chunk[label.index()];
                *c *= match label.sign {
                    EnergySign::Positive => phase,
                    EnergySign::Negative => phase.conj(),
                };
            }
        }
        out
    }

    pub fn observables(&self) -> Observables {
        let p = |n, l| self.probability(n, l).unwrap_or(0.0);
        Observables {
            t: self.t,
            p0_up: p(0, QuantumLabel::POS_UP),
            p0_down: p(0, QuantumLabel::POS_DOWN),
            p2_up: p(2, QuantumLabel::POS_UP),
            p2_down: p(2, QuantumLabel::POS_DOWN),
            negative: self.negative_population(),
            norm: self.norm(),
        }
    }
}

/// `Σ_s |c_n^{+,s}|²`
pub fn diffraction_probability(state: &AmplitudeState, n: i32) -> Result<f64> {
    let mut total = 0.0;
    for s in Spin::BOTH {
        total += state.probability(n, QuantumLabel::new(EnergySign::Positive, s))?;
    }
    Ok(total)
}

/// The populations reported per time sample.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Observables {
    pub t: f64,
    pub p0_up: f64,
    pub p0_down: f64,
    pub p2_up: f64,
    pub p2_down: f64,
    pub negative: f64,
    pub norm: f64,
}

impl Observables {
    pub fn diffraction(&self) -> f64 {
        self.p2_up + self.p2_down
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn initial_state() {
        let g = ModeGrid::new(-4, 6, 0.0, 0.02).unwrap();
        let s = AmplitudeState::initial(&g);
        assert_eq!(diffraction_probability(&s, 0).unwrap(), 1.0);
        assert_eq!(diffraction_probability(&s, 2).unwrap(), 0.0);
        assert_eq!(s.norm(), 1.0);
        assert_eq!(s.negative_population(), 0.0);
        assert!(diffraction_probability(&s, 9).is_err());
    }

    #[test]
    fn schrodinger_phases_preserve_moduli() {
        let g = ModeGrid::new(-1, 3, 0.4, 0.02).unwrap();
        let amps: Vec<Complex64> = (0..20).map(|i| Complex64::new(i as f64, 1.0 - i as f64)).collect();
        let s = AmplitudeState::from_amplitudes(&g, 123.4, amps.clone());
        for (a, b) in s.schrodinger_amplitudes().iter().zip(amps.iter()) {
            assert!((a.norm() - b.norm()).abs() < 1e-12);
        }
    }
}
