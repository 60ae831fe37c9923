//! Fixed-step classical fourth-order Runge-Kutta.

use std::ops::{Add, Mul};

/// Buffers reused across steps so the hot loop does not allocate.
#[derive(Debug, Clone)]
pub struct Rk4<T> {
    k1: Vec<T>,
    k2: Vec<T>,
    k3: Vec<T>,
    k4: Vec<T>,
    tmp: Vec<T>,
}

impl<T> Rk4<T>
where
    T: Copy + Default + Add<Output = T> + Mul<f64, Output = T>,
{
    pub fn new(dim: usize) -> Self {
        let z = vec![T::default(); dim];
        Self { k1: z.clone(), k2: z.clone(), k3: z.clone(), k4: z.clone(), tmp: z }
    }

    /// Advance `y` from `t` to `t + h` for `dy/dt = f(t, y)`. The closure
    /// writes the derivative into its last argument.
    pub fn step<F>(&mut self, t: f64, h: f64, y: &mut [T], mut f: F)
    where
        F: FnMut(f64, &[T], &mut [T]),
    {
        debug_assert_eq!(y.len(), self.k1.len());
        let half = 0.5 * h;

        f(t, y, &mut self.k1);
        for ((tmp, &y), &k) in self.tmp.iter_mut().zip(y.iter()).zip(self.k1.iter()) {
            *tmp = y + k * half;
        }
        f(t + half, &self.tmp, &mut self.k2);
        for ((tmp, &y), &k) in self.tmp.iter_mut().zip(y.iter()).zip(self.k2.iter()) {
            *tmp = y + k * half;
        }
        f(t + half, &self.tmp, &mut self.k3);
        for ((tmp, &y), &k) in self.tmp.iter_mut().zip(y.iter()).zip(self.k3.iter()) {
            *tmp = y + k * h;
        }
        f(t + h, &self.tmp, &mut self.k4);

        let w = h / 6.0;
        for (i, y) in y.iter_mut().enumerate() {
            let incr = self.k1[i] + self.k2[i] * 2.0 + self.k3[i] * 2.0 + self.k4[i];
            *y = *y + incr * w;
        }
    }
}

/// Split `[t0, t1]` into the fewest equal steps no longer than `max_step`.
pub fn uniform_steps(t0: f64, t1: f64, max_step: f64) -> (usize, f64) {
    let span = t1 - t0;
    if span <= 0.0 {
        return (0, 0.0);
    }
    let n = (span / max_step).ceil().max(1.0) as usize;
    (n, span / n as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn exponential_decay_converges_at_fourth_order() {
        let run = |n: usize| {
            let mut rk = Rk4::new(1);
            let mut y = [1.0f64];
            let h = 1.0 / n as f64;
            for i in 0..n {
                rk.step(i as f64 * h, h, &mut y, |_, y, dy| dy[0] = -y[0]);
            }
            (y[0] - (-1.0f64).exp()).abs()
        };
        let ratio = run(10) / run(20);
        assert!((ratio - 16.0).abs() < 1.5, "ratio {ratio}");
    }

    #[test]
    fn complex_rotation() {
        let mut rk = Rk4::new(1);
        let mut y = [Complex64::new(1.0, 0.0)];
        let n = 1000;
        let h = std::f64::consts::TAU / n as f64;
        for i in 0..n {
            rk.step(i as f64 * h, h, &mut y, |_, y, dy| dy[0] = Complex64::new(0.0, -1.0) * y[0]);
        }
        assert!((y[0] - Complex64::new(1.0, 0.0)).norm() < 1e-10);
    }

    #[test]
    fn step_partition() {
        assert_eq!(uniform_steps(0.0, 1.0, 0.3), (4, 0.25));
        assert_eq!(uniform_steps(1.0, 1.0, 0.3).0, 0);
    }
}
