//! Plane-wave momentum ladder and the free-particle quantum labels.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{KdError, Result};

/// Three-momentum in units of `mc`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Momentum(pub [f64; 3]);

impl Momentum {
    pub const ZERO: Momentum = Momentum([0.0; 3]);

    pub const fn new(p1: f64, p2: f64, p3: f64) -> Self {
        Momentum([p1, p2, p3])
    }

    pub fn dot(&self, other: &Momentum) -> f64 {
        self.0.iter().zip(other.0.iter()).map(|(a, b)| a * b).sum()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.dot(self)
    }

    pub fn cross(&self, other: &Momentum) -> Momentum {
        let [a1, a2, a3] = self.0;
        let [b1, b2, b3] = other.0;
        Momentum([a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1])
    }

    #[inline]
    pub fn x(&self) -> f64 {
        self.0[0]
    }

    #[inline]
    pub fn z(&self) -> f64 {
        self.0[2]
    }
}

impl Add for Momentum {
    type Output = Momentum;
    fn add(self, rhs: Momentum) -> Momentum {
        Momentum([self.0[0] + rhs.0[0], self.0[1] + rhs.0[1], self.0[2] + rhs.0[2]])
    }
}

impl Sub for Momentum {
    type Output = Momentum;
    fn sub(self, rhs: Momentum) -> Momentum {
        Momentum([self.0[0] - rhs.0[0], self.0[1] - rhs.0[1], self.0[2] - rhs.0[2]])
    }
}

impl Mul<f64> for Momentum {
    type Output = Momentum;
    fn mul(self, rhs: f64) -> Momentum {
        Momentum([self.0[0] * rhs, self.0[1] * rhs, self.0[2] * rhs])
    }
}

/// Relativistic free-particle energy `E = √(m²c⁴ + p²c²)`.
#[inline]
pub fn energy(p: &Momentum) -> f64 {
    (1.0 + p.norm_sqr()).sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EnergySign {
    Positive,
    Negative,
}

impl EnergySign {
    pub const BOTH: [EnergySign; 2] = [EnergySign::Positive, EnergySign::Negative];

    pub fn factor(self) -> f64 {
        match self {
            EnergySign::Positive => 1.0,
            EnergySign::Negative => -1.0,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            EnergySign::Positive => '+',
            EnergySign::Negative => '-',
        }
    }
}

/// Spin along ê₃.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Spin {
    Up,
    Down,
}

impl Spin {
    pub const BOTH: [Spin; 2] = [Spin::Up, Spin::Down];

    /// Position of the nonzero entry of the Pauli spinor χ.
    pub fn index(self) -> usize {
        match self {
            Spin::Up => 0,
            Spin::Down => 1,
        }
    }
}

/// Energy sign and spin of a free Dirac eigenstate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuantumLabel {
    pub sign: EnergySign,
    pub spin: Spin,
}

impl QuantumLabel {
    pub const fn new(sign: EnergySign, spin: Spin) -> Self {
        Self { sign, spin }
    }

    pub const POS_UP: QuantumLabel = QuantumLabel::new(EnergySign::Positive, Spin::Up);
    pub const POS_DOWN: QuantumLabel = QuantumLabel::new(EnergySign::Positive, Spin::Down);
    pub const NEG_UP: QuantumLabel = QuantumLabel::new(EnergySign::Negative, Spin::Up);
    pub const NEG_DOWN: QuantumLabel = QuantumLabel::new(EnergySign::Negative, Spin::Down);

    /// All four labels, in the order used for state vectors.
    pub const ALL: [QuantumLabel; 4] =
        [QuantumLabel::POS_UP, QuantumLabel::POS_DOWN, QuantumLabel::NEG_UP, QuantumLabel::NEG_DOWN];

    pub fn index(self) -> usize {
        let s = match self.sign {
            EnergySign::Positive => 0,
            EnergySign::Negative => 2,
        };
        s + self.spin.index()
    }
}

impl fmt::Display for QuantumLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let spin = match self.spin {
            Spin::Up => '↑',
            Spin::Down => '↓',
        };
        write!(f, "{},{}", self.sign.symbol(), spin)
    }
}

/// Discrete momenta `p_n = p₀ + n ħk_L ê₁` with `p₀ = (−ħk_L, 0, p₃)`, for
/// `n_min ≤ n ≤ n_max`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModeGrid {
    n_min: i32,
    n_max: i32,
    p3: f64,
    wave_number: f64,
}

impl ModeGrid {
    pub fn new(n_min: i32, n_max: i32, p3: f64, wave_number: f64) -> Result<Self> {
        if n_min > 0 {
            return Err(KdError::config("n_min", format!("window must contain mode 0, got n_min = {n_min}")));
        }
        if n_max < 2 {
            return Err(KdError::config("n_max", format!("window must contain mode 2, got n_max = {n_max}")));
        }
        if !p3.is_finite() {
            return Err(KdError::config("p3", "must be finite"));
        }
        if !(wave_number.is_finite() && wave_number > 0.0) {
            return Err(KdError::config("wave_number", format!("must be finite and > 0, got {wave_number}")));
        }
        Ok(Self { n_min, n_max, p3, wave_number })
    }

    /// Minimal window holding the initial, intermediate and final modes.
    pub fn minimal(p3: f64, wave_number: f64) -> Result<Self> {
        Self::new(0, 2, p3, wave_number)
    }

    pub fn n_min(&self) -> i32 {
        self.n_min
    }

    pub fn n_max(&self) -> i32 {
        self.n_max
    }

    pub fn p3(&self) -> f64 {
        self.p3
    }

    pub fn wave_number(&self) -> f64 {
        self.wave_number
    }

    pub fn len(&self) -> usize {
        (self.n_max - self.n_min + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn modes(&self) -> impl Iterator<Item = i32> {
        self.n_min..=self.n_max
    }

    pub fn contains(&self, n: i32) -> bool {
        (self.n_min..=self.n_max).contains(&n)
    }

    pub fn check(&self, n: i32) -> Result<()> {
        if self.contains(n) {
            Ok(())
        } else {
            Err(KdError::OutOfWindow { n, n_min: self.n_min, n_max: self.n_max })
        }
    }

    /// Offset of mode `n` from the window start.
    pub fn offset(&self, n: i32) -> Result<usize> {
        self.check(n)?;
        Ok((n - self.n_min) as usize)
    }

    pub fn initial_momentum(&self) -> Momentum {
        Momentum::new(-self.wave_number, 0.0, self.p3)
    }

    pub fn mode_momentum(&self, n: i32) -> Result<Momentum> {
        self.check(n)?;
        Ok(self.momentum_unchecked(n))
    }

    pub(crate) fn momentum_unchecked(&self, n: i32) -> Momentum {
        Momentum::new((n - 1) as f64 * self.wave_number, 0.0, self.p3)
    }

    pub fn energy(&self, n: i32) -> Result<f64> {
        Ok(energy(&self.mode_momentum(n)?))
    }

    /// The window widened by `by` modes on each side.
    pub fn widened(&self, by: i32) -> Self {
        Self { n_min: self.n_min - by, n_max: self.n_max + by, ..*self }
    }

    pub fn with_p3(&self, p3: f64) -> Result<Self> {
        Self::new(self.n_min, self.n_max, p3, self.wave_number)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mode_momenta() {
        let g = ModeGrid::new(-4, 6, 0.0, 0.02).unwrap();
        assert_eq!(g.mode_momentum(1).unwrap(), Momentum::ZERO);
        let p0 = g.mode_momentum(0).unwrap();
        assert!((p0.x() + 0.02).abs() < 1e-15 && p0.z() == 0.0);
        assert_eq!(p0, g.initial_momentum());
        let g = g.with_p3(0.5).unwrap();
        let p2 = g.mode_momentum(2).unwrap();
        assert!((p2.x() - 0.02).abs() < 1e-15);
        assert_eq!(p2.z(), 0.5);
        assert!(matches!(g.mode_momentum(7), Err(KdError::OutOfWindow { n: 7, .. })));
        assert!(g.mode_momentum(-5).is_err());
    }

    #[test]
    fn energies() {
        assert_eq!(energy(&Momentum::ZERO), 1.0);
        assert!((energy(&Momentum::new(-0.02, 0.0, 0.0)) - 1.000_199_980_004).abs() < 1e-12);
        assert!((energy(&Momentum::new(0.0, 0.0, 1.0)) - std::f64::consts::SQRT_2).abs() < 1e-15);
        let g = ModeGrid::new(-4, 6, 0.7, 0.02).unwrap();
        // Bragg condition: modes 0 and 2 are degenerate.
        assert_eq!(g.energy(0).unwrap(), g.energy(2).unwrap());
    }

    #[test]
    fn window_must_hold_process_modes() {
        assert!(ModeGrid::new(1, 4, 0.0, 0.02).is_err());
        assert!(ModeGrid::new(-2, 1, 0.0, 0.02).is_err());
        assert!(ModeGrid::new(0, 2, 0.0, 0.02).is_ok());
    }

    #[test]
    fn label_indices_are_a_bijection() {
        let mut seen = [false; 4];
        for l in QuantumLabel::ALL {
            seen[l.index()] = true;
            assert_eq!(QuantumLabel::ALL[l.index()], l);
        }
        assert!(seen.iter().all(|&s| s));
    }
}
