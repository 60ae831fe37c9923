//! Least-squares helpers for extracting expansion coefficients and
//! convergence orders from sampled data.

use nalgebra::{DMatrix, DVector};

/// Fit `y ≈ Σ c_j x^(2j)` for `j = 0..terms` and return the coefficients.
///
/// Used for even functions of a transverse momentum, where the quadratic
/// coefficient is the quantity of interest.
pub fn even_polynomial_fit(x: &[f64], y: &[f64], terms: usize) -> Option<Vec<f64>> {
    assert_eq!(x.len(), y.len());
    if x.len() < terms || terms == 0 {
        return None;
    }
    let a = DMatrix::from_fn(x.len(), terms, |i, j| x[i].powi(2 * j as i32));
    let b = DVector::from_column_slice(y);
    let svd = a.svd(true, true);
    let sol = svd.solve(&b, 1e-14).ok()?;
    Some(sol.iter().copied().collect())
}

/// Exponent `k` of the best fit `y ≈ C x^k` in log-log space.
pub fn power_law_exponent(x: &[f64], y: &[f64]) -> Option<f64> {
    assert_eq!(x.len(), y.len());
    let pts: Vec<(f64, f64)> = x
        .iter()
        .zip(y.iter())
        .filter(|(a, b)| **a > 0.0 && b.abs() > 0.0)
        .map(|(a, b)| (a.ln(), b.abs().ln()))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// Least-squares polynomial `y ≈ Σ c_j x^j` for `j = 0..=degree`.
pub fn polynomial_fit(x: &[f64], y: &[f64], degree: usize) -> Option<Vec<f64>> {
    assert_eq!(x.len(), y.len());
    if x.len() <= degree {
        return None;
    }
    let a = DMatrix::from_fn(x.len(), degree + 1, |i, j| x[i].powi(j as i32));
    let b = DVector::from_column_slice(y);
    let sol = a.svd(true, true).solve(&b, 1e-14).ok()?;
    Some(sol.iter().copied().collect())
}

/// Abscissa of the extremum of a least-squares parabola through the samples.
pub fn quadratic_vertex(x: &[f64], y: &[f64]) -> Option<f64> {
    // centre the abscissa to keep the normal equations well conditioned
    let mid = x.iter().sum::<f64>() / x.len().max(1) as f64;
    let u: Vec<f64> = x.iter().map(|v| v - mid).collect();
    let c = polynomial_fit(&u, y, 2)?;
    (c[2] != 0.0).then(|| mid - c[1] / (2.0 * c[2]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_even_polynomial() {
        let x: Vec<f64> = (0..12).map(|i| 0.02 * i as f64).collect();
        let y: Vec<f64> = x.iter().map(|x| 1.0 - 5.0 * x * x + 6.25 * x.powi(4)).collect();
        let c = even_polynomial_fit(&x, &y, 3).unwrap();
        assert!((c[0] - 1.0).abs() < 1e-12);
        assert!((c[1] + 5.0).abs() < 1e-9);
        assert!((c[2] - 6.25).abs() < 1e-6);
    }

    #[test]
    fn power_law() {
        let x = [0.1, 0.05, 0.025, 0.0125];
        let y: Vec<f64> = x.iter().map(|x: &f64| -3.0 * x.powi(3)).collect();
        assert!((power_law_exponent(&x, &y).unwrap() - 3.0).abs() < 1e-12);
    }

    #[test]
    fn parabola_vertex() {
        let x: Vec<f64> = (0..21).map(|i| 790.0 + i as f64).collect();
        let y: Vec<f64> = x.iter().map(|x| 0.9 - 1e-4 * (x - 801.3) * (x - 801.3)).collect();
        assert!((quadratic_vertex(&x, &y).unwrap() - 801.3).abs() < 1e-8);
        assert!(quadratic_vertex(&x[..2], &y[..2]).is_none());
    }

    #[test]
    fn general_polynomial() {
        let x: Vec<f64> = (0..10).map(|i| i as f64 * 0.1).collect();
        let y: Vec<f64> = x.iter().map(|x| 2.0 - x + 0.5 * x * x * x).collect();
        let c = polynomial_fit(&x, &y, 3).unwrap();
        for (got, want) in c.iter().zip([2.0, -1.0, 0.0, 0.5]) {
            assert!((got - want).abs() < 1e-10);
        }
    }
}
