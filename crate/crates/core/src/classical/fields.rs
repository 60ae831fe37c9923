use crate::field::LaserConfig;

/// Charge-scaled fields `eE⃗` and `eB⃗`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EmFields {
    pub e: [f64; 3],
    pub b: [f64; 3],
}

/// Fields of `eA⃗ = eA₀ cos(k_L x₁) sin(ωt) ξ(t) ê₃`.
///
/// `E⃗ = −∂_t A⃗` keeps the envelope derivative so the ramps see the exact
/// field; on the flat top it reduces to `−eA₀k_L cos(k_L x₁) cos(ωt) ê₃`.
pub fn em_fields(x: &[f64; 3], t: f64, laser: &LaserConfig) -> EmFields {
    let (a, k, w) = (laser.amplitude(), laser.wave_number(), laser.omega());
    let (sk, ck) = (k * x[0]).sin_cos();
    let (sw, cw) = (w * t).sin_cos();
    let xi = laser.envelope(t);
    let dxi = laser.envelope_derivative(t);
    let e3 = -a * k * ck * (cw * xi + sw * dxi / w);
    let b2 = a * k * sk * sw * xi;
    EmFields { e: [0.0, 0.0, e3], b: [0.0, b2, 0.0] }
}

/// `eA₃` itself, used by the field checks.
pub fn vector_potential(x: &[f64; 3], t: f64, laser: &LaserConfig) -> f64 {
    laser.amplitude() * (laser.wave_number() * x[0]).cos() * laser.carrier(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn flat() -> LaserConfig {
        LaserConfig::new(0.01, 0.02, 0.0, 1e6).unwrap()
    }

    #[test]
    fn phase_zero_at_origin() {
        let l = flat();
        let f = em_fields(&[0.0; 3], 0.0, &l);
        assert!((f.e[2] + 0.01 * 0.02).abs() < 1e-18);
        assert_eq!(f.b, [0.0; 3]);
    }

    #[test]
    fn electric_node() {
        let l = flat();
        let x = [FRAC_PI_2 / 0.02, 0.0, 0.0];
        for i in 0..50 {
            let f = em_fields(&x, 13.7 * i as f64, &l);
            assert!(f.e[2].abs() < 1e-18);
        }
    }

    #[test]
    fn maxwell_equations_by_finite_difference() {
        // E = −∂_t A and B = ∇×A on a ramped pulse, so ∂_t B = −∇×E and ∇·B = 0
        let l = LaserConfig::from_cycles(0.01, 0.02, 5.0, 20.0).unwrap();
        let h = 1e-3;
        for &(x1, t) in &[(3.0, 400.0), (71.0, 1200.0), (150.0, 3000.0), (40.0, 5900.0)] {
            let x = [x1, 0.0, 0.0];
            let f = em_fields(&x, t, &l);
            let da_dt = (vector_potential(&x, t + h, &l) - vector_potential(&x, t - h, &l)) / (2.0 * h);
            assert!((f.e[2] + da_dt).abs() < 1e-9 * l.amplitude());
            let xp = [x1 + h, 0.0, 0.0];
            let xm = [x1 - h, 0.0, 0.0];
            let curl_a2 = -(vector_potential(&xp, t, &l) - vector_potential(&xm, t, &l)) / (2.0 * h);
            assert!((f.b[1] - curl_a2).abs() < 1e-9 * l.amplitude());
            // (∇×E)₂ = −∂₁E₃ must balance −∂_t B₂
            let de3_dx = (em_fields(&xp, t, &l).e[2] - em_fields(&xm, t, &l).e[2]) / (2.0 * h);
            let db2_dt = (em_fields(&x, t + h, &l).b[1] - em_fields(&x, t - h, &l).b[1]) / (2.0 * h);
            assert!((db2_dt - de3_dx).abs() < 1e-9 * l.amplitude() * 0.02);
            // B has only a ê₂ component depending on x₁, so ∇·B = ∂₂B₂ = 0
            assert_eq!(f.b[0], 0.0);
            assert_eq!(f.b[2], 0.0);
        }
    }
}
