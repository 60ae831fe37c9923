//! The standing-wave laser field `A(x, t) = A₀ cos(k_L x) sin(ωt) ξ(t) ê₃`.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::{Deserialize, Serialize};

use crate::error::{KdError, Result};
use crate::units;

/// Standing-wave parameters in natural units.
///
/// `amplitude` is the coupling `eA₀` in `mc²`, `wave_number` is `k_L` in
/// `mc/ħ`, `ramp_time` and `total_time` are `ΔT` and `T` in `ħ/mc²`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LaserConfig {
    amplitude: f64,
    wave_number: f64,
    ramp_time: f64,
    total_time: f64,
}

impl LaserConfig {
    pub fn new(amplitude: f64, wave_number: f64, ramp_time: f64, total_time: f64) -> Result<Self> {
        if !(amplitude.is_finite() && amplitude >= 0.0) {
            return Err(KdError::config("amplitude", format!("must be finite and >= 0, got {amplitude}")));
        }
        if !(wave_number.is_finite() && wave_number > 0.0) {
            return Err(KdError::config("wave_number", format!("must be finite and > 0, got {wave_number}")));
        }
        if !(ramp_time.is_finite() && ramp_time >= 0.0) {
            return Err(KdError::config("ramp_time", format!("must be finite and >= 0, got {ramp_time}")));
        }
        if !(total_time.is_finite() && 2.0 * ramp_time <= total_time) {
            return Err(KdError::config(
                "total_time",
                format!("must be finite and at least twice the ramp time ({ramp_time}), got {total_time}"),
            ));
        }
        Ok(Self { amplitude, wave_number, ramp_time, total_time })
    }

    /// Same as [`LaserConfig::new`] with both times given in laser cycles.
    pub fn from_cycles(amplitude: f64, wave_number: f64, ramp_cycles: f64, total_cycles: f64) -> Result<Self> {
        if !(wave_number.is_finite() && wave_number > 0.0) {
            return Err(KdError::config("wave_number", format!("must be finite and > 0, got {wave_number}")));
        }
        Self::new(
            amplitude,
            wave_number,
            units::cycles_to_time(ramp_cycles, wave_number),
            units::cycles_to_time(total_cycles, wave_number),
        )
    }

    pub fn amplitude(&self) -> f64 {
        self.amplitude
    }

    pub fn wave_number(&self) -> f64 {
        self.wave_number
    }

    pub fn ramp_time(&self) -> f64 {
        self.ramp_time
    }

    pub fn total_time(&self) -> f64 {
        self.total_time
    }

    pub fn omega(&self) -> f64 {
        units::laser_frequency(self.wave_number)
    }

    pub fn cycle_period(&self) -> f64 {
        units::cycle_period(self.wave_number)
    }

    pub fn total_cycles(&self) -> f64 {
        units::time_to_cycles(self.total_time, self.wave_number)
    }

    pub fn with_amplitude(self, amplitude: f64) -> Result<Self> {
        Self::new(amplitude, self.wave_number, self.ramp_time, self.total_time)
    }

    pub fn with_total_time(self, total_time: f64) -> Result<Self> {
        Self::new(self.amplitude, self.wave_number, self.ramp_time, total_time)
    }

    /// Temporal envelope `ξ(t)`: sin² ramps of length `ΔT` at both ends, flat
    /// top in between and zero outside `[0, T]`.
    pub fn envelope(&self, t: f64) -> f64 {
        let (dt, total) = (self.ramp_time, self.total_time);
        if !(0.0..=total).contains(&t) {
            0.0
        } else if t < dt {
            let s = (FRAC_PI_2 * t / dt).sin();
            s * s
        } else if t <= total - dt {
            1.0
        } else {
            let s = (FRAC_PI_2 * (total - t) / dt).sin();
            s * s
        }
    }

    /// Time derivative `ξ'(t)`; zero on the flat top and outside the pulse.
    pub fn envelope_derivative(&self, t: f64) -> f64 {
        let (dt, total) = (self.ramp_time, self.total_time);
        if !(0.0..=total).contains(&t) || dt == 0.0 {
            0.0
        } else if t < dt {
            // d/dt sin²(πt/2ΔT) = (π/2ΔT) sin(πt/ΔT)
            PI / (2.0 * dt) * (PI * t / dt).sin()
        } else if t <= total - dt {
            0.0
        } else {
            -PI / (2.0 * dt) * (PI * (total - t) / dt).sin()
        }
    }

    /// `∫₀ᵗ ξ²(t') dt'`, the time during which a process driven by `A²`
    /// effectively acts. Over a full ramp the integrand averages to 3/8.
    pub fn squared_envelope_integral(&self, t: f64) -> f64 {
        let (dt, total) = (self.ramp_time, self.total_time);
        let t = t.clamp(0.0, total);
        // ∫ sin⁴(a u) du = 3u/8 − sin(2au)/(4a) + sin(4au)/(32a)
        let ramp_part = |u: f64| {
            if dt == 0.0 {
                return 0.0;
            }
            let a = FRAC_PI_2 / dt;
            3.0 * u / 8.0 - (2.0 * a * u).sin() / (4.0 * a) + (4.0 * a * u).sin() / (32.0 * a)
        };
        if t <= dt {
            ramp_part(t)
        } else if t <= total - dt {
            ramp_part(dt) + (t - dt)
        } else {
            ramp_part(dt) + (total - 2.0 * dt) + ramp_part(dt) - ramp_part(total - t)
        }
    }

    /// `sin(ωt) ξ(t)`: the time dependence shared by every coupling.
    #[inline]
    pub fn carrier(&self, t: f64) -> f64 {
        (self.omega() * t).sin() * self.envelope(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> LaserConfig {
        LaserConfig::from_cycles(0.01, 0.02, 5.0, 150.0).unwrap()
    }

    #[test]
    fn envelope_values() {
        let c = cfg();
        let dt = c.ramp_time();
        assert_eq!(c.envelope(0.0), 0.0);
        assert!((c.envelope(dt) - 1.0).abs() < 1e-15);
        assert!((c.envelope(dt / 2.0) - 0.5).abs() < 1e-15);
        assert_eq!(c.envelope(0.5 * c.total_time()), 1.0);
        assert_eq!(c.envelope(-1.0), 0.0);
        assert_eq!(c.envelope(c.total_time() + 1.0), 0.0);
        assert!(c.envelope(c.total_time()).abs() < 1e-15);
    }

    #[test]
    fn envelope_is_continuous_at_joints() {
        let c = cfg();
        let eps = 1e-9;
        for t in [0.0, c.ramp_time(), c.total_time() - c.ramp_time(), c.total_time()] {
            let left = c.envelope(t - eps);
            let right = c.envelope(t + eps);
            assert!((left - right).abs() < 1e-12, "jump at t = {t}: {left} vs {right}");
        }
    }

    #[test]
    fn derivative_matches_finite_difference() {
        let c = cfg();
        let h = 1e-4;
        for frac in [0.1, 0.37, 0.5, 0.9, 0.98, 0.999] {
            let t = frac * c.total_time();
            let fd = (c.envelope(t + h) - c.envelope(t - h)) / (2.0 * h);
            assert!((fd - c.envelope_derivative(t)).abs() < 1e-9, "t = {t}");
        }
    }

    #[test]
    fn squared_integral_matches_quadrature() {
        let c = cfg();
        let n = 200_000;
        let total = c.total_time();
        let h = total / n as f64;
        // composite Simpson
        let mut acc = 0.0;
        for i in 0..=n {
            let w = if i == 0 || i == n {
                1.0
            } else if i % 2 == 1 {
                4.0
            } else {
                2.0
            };
            let x = c.envelope(i as f64 * h);
            acc += w * x * x;
        }
        let simpson = acc * h / 3.0;
        assert!((simpson - c.squared_envelope_integral(total)).abs() < 1e-6);
        let expected = total - 1.25 * c.ramp_time();
        assert!((c.squared_envelope_integral(total) - expected).abs() < 1e-9);
        assert!((c.squared_envelope_integral(0.5 * total) - (0.5 * total - 0.625 * c.ramp_time())).abs() < 1e-9);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(LaserConfig::new(-1.0, 0.02, 0.0, 1.0).is_err());
        assert!(LaserConfig::new(0.01, 0.0, 0.0, 1.0).is_err());
        assert!(LaserConfig::new(0.01, 0.02, 10.0, 15.0).is_err());
        let err = LaserConfig::new(f64::NAN, 0.02, 0.0, 1.0).unwrap_err();
        assert!(err.to_string().contains("amplitude"));
    }
}
