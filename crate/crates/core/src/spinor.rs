//! Free Dirac bispinors, the `α₃` spinor-matrix elements between plane-wave
//! modes, and their expansion in the scalar contractions `t, s, r, w`.

use num_complex::Complex64;

use crate::error::Result;
use crate::kinematics::{energy, EnergySign, ModeGrid, Momentum, QuantumLabel, Spin};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

pub type Matrix4 = [[Complex64; 4]; 4];

/// Four-component spinor in the Dirac representation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bispinor(pub [Complex64; 4]);

impl Bispinor {
    /// `u† v`
    pub fn inner(&self, other: &Bispinor) -> Complex64 {
        self.0.iter().zip(other.0.iter()).map(|(a, b)| a.conj() * b).sum()
    }

    /// `u† M v`
    pub fn sandwich(&self, m: &Matrix4, other: &Bispinor) -> Complex64 {
        let mut acc = ZERO;
        for (i, row) in m.iter().enumerate() {
            let mv: Complex64 = row.iter().zip(other.0.iter()).map(|(a, b)| a * b).sum();
            acc += self.0[i].conj() * mv;
        }
        acc
    }

    pub fn apply(m: &Matrix4, v: &Bispinor) -> Bispinor {
        let mut out = [ZERO; 4];
        for (o, row) in out.iter_mut().zip(m.iter()) {
            *o = row.iter().zip(v.0.iter()).map(|(a, b)| a * b).sum();
        }
        Bispinor(out)
    }
}

/// Pauli matrices `σ₁, σ₂, σ₃`.
pub fn pauli() -> [[[Complex64; 2]; 2]; 3] {
    [[[ZERO, ONE], [ONE, ZERO]], [[ZERO, -I], [I, ZERO]], [[ONE, ZERO], [ZERO, -ONE]]]
}

/// `α_i = [[0, σ_i], [σ_i, 0]]` for `i = 1, 2, 3` (index 0..3).
pub fn alpha(i: usize) -> Matrix4 {
    let s = pauli()[i];
    let mut m = [[ZERO; 4]; 4];
    for r in 0..2 {
        for c in 0..2 {
            m[r][c + 2] = s[r][c];
            m[r + 2][c] = s[r][c];
        }
    }
    m
}

/// `β = diag(1, 1, −1, −1)`.
pub fn beta() -> Matrix4 {
    let mut m = [[ZERO; 4]; 4];
    m[0][0] = ONE;
    m[1][1] = ONE;
    m[2][2] = -ONE;
    m[3][3] = -ONE;
    m
}

/// Free Dirac Hamiltonian `H₀ = α·p + β` at momentum `p`.
pub fn free_hamiltonian(p: &Momentum) -> Matrix4 {
    let mut h = beta();
    for (i, &pi) in p.0.iter().enumerate() {
        let a = alpha(i);
        for r in 0..4 {
            for c in 0..4 {
                h[r][c] += a[r][c] * pi;
            }
        }
    }
    h
}

/// Normalized eigenspinor of `H₀(p)` with eigenvalue `γE(p)`.
///
/// Positive states carry the Pauli spinor χˢ in the upper two components and
/// `σ·p/(E+1) χˢ` below; negative states mirror this with a sign flip on the
/// `σ·p` block. The normalization factor is real and positive.
pub fn bispinor(p: &Momentum, label: QuantumLabel) -> Bispinor {
    let e = energy(p);
    let norm = ((e + 1.0) / (2.0 * e)).sqrt();
    let k = 1.0 / (e + 1.0);
    let [p1, p2, p3] = p.0;
    // σ·p χ for χ↑ = (1, 0) and χ↓ = (0, 1)
    let sp = match label.spin {
        Spin::Up => [Complex64::new(p3, 0.0), Complex64::new(p1, p2)],
        Spin::Down => [Complex64::new(p1, -p2), Complex64::new(-p3, 0.0)],
    };
    let mut chi = [ZERO; 2];
    chi[label.spin.index()] = ONE;
    let comps = match label.sign {
        EnergySign::Positive => [chi[0], chi[1], sp[0] * k, sp[1] * k],
        EnergySign::Negative => [-sp[0] * k, -sp[1] * k, chi[0], chi[1]],
    };
    Bispinor(comps.map(|c| c * norm))
}

/// `L_{n,n'}^{a;b} = u^a(p_n)† α₃ u^b(p_n')` by direct 4×4 contraction.
pub fn spinor_matrix_element(
    n: i32,
    n_prime: i32,
    a: QuantumLabel,
    b: QuantumLabel,
    grid: &ModeGrid,
) -> Result<Complex64> {
    let u = bispinor(&grid.mode_momentum(n)?, a);
    let v = bispinor(&grid.mode_momentum(n_prime)?, b);
    Ok(u.sandwich(&alpha(2), &v))
}

/// Scalar building blocks of the spinor-matrix elements between two modes.
///
/// `g_plus` and `g_minus` hold `[g_n, g_n']`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TsrwCoefficients {
    pub g_plus: [f64; 2],
    pub g_minus: [f64; 2],
    pub t: f64,
    pub s3: f64,
    pub r1: f64,
    pub w31: f64,
    pub w33: f64,
}

fn g_factors(p: &Momentum) -> (f64, f64) {
    let e = energy(p);
    let g_plus = (0.5 * (1.0 + 1.0 / e)).sqrt();
    let g_minus = (0.5 / (e * (e + 1.0))).sqrt();
    (g_plus, g_minus)
}

impl TsrwCoefficients {
    pub fn between(p: &Momentum, q: &Momentum) -> Self {
        let (gp, gm) = g_factors(p);
        let (gq, hq) = g_factors(q);
        let [p1, _, p3] = p.0;
        let [q1, _, q3] = q.0;
        Self {
            g_plus: [gp, gq],
            g_minus: [gm, hq],
            t: gp * gq + p.dot(q) * gm * hq,
            s3: p3 * gm * gq + q3 * gp * hq,
            r1: p1 * gm * gq - q1 * gp * hq,
            w31: (p3 * q1 + p1 * q3) * gm * hq,
            w33: 2.0 * p3 * q3 * gm * hq,
        }
    }

    /// The 2×2 spin block `L^{a,s;b,s'}` (rows `s`, columns `s'`) for given
    /// energy signs, assembled from the contractions.
    ///
    /// Same-sign blocks are `[[s³, −r¹], [r¹, s³]]` (negated for `−;−`),
    /// cross-sign blocks are `[[t − w³³, −w³¹], [−w³¹, −t + w³³]]`.
    pub fn spin_block(&self, a: EnergySign, b: EnergySign) -> [[f64; 2]; 2] {
        use EnergySign::*;
        match (a, b) {
            (Positive, Positive) => [[self.s3, -self.r1], [self.r1, self.s3]],
            (Negative, Negative) => [[-self.s3, self.r1], [-self.r1, -self.s3]],
            _ => {
                let d = self.t - self.w33;
                [[d, -self.w31], [-self.w31, -d]]
            }
        }
    }

    pub fn element(&self, a: QuantumLabel, b: QuantumLabel) -> f64 {
        self.spin_block(a.sign, b.sign)[a.spin.index()][b.spin.index()]
    }
}

pub fn tsrw_coefficients(n: i32, n_prime: i32, grid: &ModeGrid) -> Result<TsrwCoefficients> {
    Ok(TsrwCoefficients::between(&grid.mode_momentum(n)?, &grid.mode_momentum(n_prime)?))
}

/// Bispinors for every mode and label of a grid.
#[derive(Debug, Clone)]
pub struct SpinorTable {
    grid: ModeGrid,
    spinors: Vec<[Bispinor; 4]>,
    energies: Vec<f64>,
}

impl SpinorTable {
    pub fn new(grid: &ModeGrid) -> Self {
        let mut spinors = Vec::with_capacity(grid.len());
        let mut energies = Vec::with_capacity(grid.len());
        for n in grid.modes() {
            let p = grid.momentum_unchecked(n);
            spinors.push(QuantumLabel::ALL.map(|l| bispinor(&p, l)));
            energies.push(energy(&p));
        }
        Self { grid: *grid, spinors, energies }
    }

    pub fn grid(&self) -> &ModeGrid {
        &self.grid
    }

    pub fn spinor(&self, n: i32, label: QuantumLabel) -> Result<&Bispinor> {
        Ok(&self.spinors[self.grid.offset(n)?][label.index()])
    }

    pub fn energy(&self, n: i32) -> Result<f64> {
        Ok(self.energies[self.grid.offset(n)?])
    }

    pub fn energies(&self) -> &[f64] {
        &self.energies
    }

    /// All sixteen `L_{n,n'}^{a;b}`, indexed `[a.index()][b.index()]`.
    pub fn coupling_block(&self, n: i32, n_prime: i32) -> Result<Matrix4> {
        let row = &self.spinors[self.grid.offset(n)?];
        let col = &self.spinors[self.grid.offset(n_prime)?];
        let a3 = alpha(2);
        let mut out = [[ZERO; 4]; 4];
        for (i, u) in row.iter().enumerate() {
            for (j, v) in col.iter().enumerate() {
                out[i][j] = u.sandwich(&a3, v);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn rest_frame_spinors_are_unit_vectors() {
        let u = bispinor(&Momentum::ZERO, QuantumLabel::POS_UP);
        assert_eq!(u.0, [ONE, ZERO, ZERO, ZERO]);
        let u = bispinor(&Momentum::ZERO, QuantumLabel::NEG_DOWN);
        assert_eq!(u.0, [ZERO, ZERO, ZERO, ONE]);
    }

    #[test]
    fn moving_spinor_components() {
        // E = √1.25; norm = √((E+1)/2E); lower = p/(E+1)·norm
        let u = bispinor(&Momentum::new(0.0, 0.0, 0.5), QuantumLabel::POS_UP);
        let e = 1.25f64.sqrt();
        let norm = ((e + 1.0) / (2.0 * e)).sqrt();
        assert!((u.0[0].re - norm).abs() < 1e-15);
        assert!((u.0[0].re - 0.973_248_989_8).abs() < 1e-9);
        assert!((u.0[2].re - 0.229_752_920_8).abs() < 1e-9);
        assert_eq!(u.0[1], ZERO);
        assert_eq!(u.0[3], ZERO);
    }

    #[test]
    fn g_factors_at_rest() {
        let c = TsrwCoefficients::between(&Momentum::ZERO, &Momentum::ZERO);
        assert_eq!(c.g_plus, [1.0, 1.0]);
        assert!((c.g_minus[0] - 0.5).abs() < 1e-15);
        assert_eq!(c.t, 1.0);
    }

    #[test]
    fn s3_vanishes_without_transverse_momentum() {
        let g = ModeGrid::new(-4, 6, 0.0, 0.02).unwrap();
        for n in -4..6 {
            assert_eq!(tsrw_coefficients(n + 1, n, &g).unwrap().s3, 0.0);
        }
        let l = spinor_matrix_element(1, 0, QuantumLabel::POS_UP, QuantumLabel::POS_UP, &g).unwrap();
        assert!(l.norm() < 1e-15);
    }

    #[test]
    fn t_tends_to_one_for_soft_photons() {
        let g = ModeGrid::new(0, 2, 0.0, 1e-6).unwrap();
        assert!((tsrw_coefficients(1, 0, &g).unwrap().t - 1.0).abs() < 1e-12);
    }

    #[test]
    fn spin_flip_element_is_half_photon_recoil() {
        let g = ModeGrid::new(0, 2, 0.0, 0.02).unwrap();
        let l = spinor_matrix_element(1, 0, QuantumLabel::POS_DOWN, QuantumLabel::POS_UP, &g).unwrap();
        // r¹_{1,0} = p_{1,1} g⁻₁ g⁺₀ − p_{0,1} g⁺₁ g⁻₀ with p_{1,1} = 0
        let c = tsrw_coefficients(1, 0, &g).unwrap();
        assert!((l.re - c.r1).abs() < 1e-15 && l.im.abs() < 1e-15);
        assert!((l.re - 0.01).abs() < 1e-5, "got {}", l.re);
    }

    fn random_momentum() -> impl Strategy<Value = Momentum> {
        (-10.0f64..10.0, -10.0f64..10.0, -10.0f64..10.0)
            .prop_filter("|p| <= 10", |(a, b, c)| a * a + b * b + c * c <= 100.0)
            .prop_map(|(a, b, c)| Momentum::new(a, b, c))
    }

    proptest! {
        #[test]
        fn orthonormal(p in random_momentum()) {
            for a in QuantumLabel::ALL {
                for b in QuantumLabel::ALL {
                    let ip = bispinor(&p, a).inner(&bispinor(&p, b));
                    let expect = if a == b { ONE } else { ZERO };
                    prop_assert!(close(ip, expect, 1e-12), "{a} {b}: {ip}");
                }
            }
        }

        #[test]
        fn eigenstates_of_free_hamiltonian(p in random_momentum()) {
            let h = free_hamiltonian(&p);
            let e = energy(&p);
            for l in QuantumLabel::ALL {
                let u = bispinor(&p, l);
                let hu = Bispinor::apply(&h, &u);
                for k in 0..4 {
                    prop_assert!(close(hu.0[k], u.0[k] * (l.sign.factor() * e), 1e-12));
                }
            }
        }

        #[test]
        fn contraction_matches_tsrw_expansion(n in -6i32..6, dn in prop::sample::select(vec![-1i32, 1]),
                                              p3 in -3.0f64..3.0, k in 1e-3f64..0.5) {
            let g = ModeGrid::new(-8, 8, p3, k).unwrap();
            let m = n + dn;
            let c = tsrw_coefficients(n, m, &g).unwrap();
            for a in QuantumLabel::ALL {
                for b in QuantumLabel::ALL {
                    let direct = spinor_matrix_element(n, m, a, b, &g).unwrap();
                    prop_assert!(close(direct, Complex64::new(c.element(a, b), 0.0), 1e-12),
                        "n={n} m={m} {a};{b}: {direct} vs {}", c.element(a, b));
                }
            }
        }

        #[test]
        fn hermitian(n in -6i32..6, m in -6i32..6, p3 in -3.0f64..3.0, k in 1e-3f64..0.5) {
            let g = ModeGrid::new(-8, 8, p3, k).unwrap();
            for a in QuantumLabel::ALL {
                for b in QuantumLabel::ALL {
                    let l = spinor_matrix_element(n, m, a, b, &g).unwrap();
                    let r = spinor_matrix_element(m, n, b, a, &g).unwrap();
                    prop_assert!(close(l, r.conj(), 1e-12));
                }
            }
        }
    }

    #[test]
    fn table_matches_direct_evaluation() {
        let g = ModeGrid::new(-2, 3, 0.3, 0.05).unwrap();
        let table = SpinorTable::new(&g);
        let block = table.coupling_block(2, 1).unwrap();
        for a in QuantumLabel::ALL {
            for b in QuantumLabel::ALL {
                let direct = spinor_matrix_element(2, 1, a, b, &g).unwrap();
                assert_eq!(block[a.index()][b.index()], direct);
            }
        }
        assert!(table.coupling_block(4, 3).is_err());
    }
}
