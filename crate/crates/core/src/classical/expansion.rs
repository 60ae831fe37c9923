//! Second-order expansion of the velocity `p̃⃗/γ(p̃⃗)` along the first-order
//! momentum `p̃⃗ = (eA₀p₃ sin(k_Lx) cos(ωt), 0, p₃ − eA₀ cos(k_Lx) sin(ωt))`.
//!
//! The six terms keep every contribution up to second combined order in
//! `p₃` and `eA₀`; what is left over starts at third order.

/// A point in the small parameters and the two phases `k_Lx`, `ωt`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpansionPoint {
    pub amplitude: f64,
    pub p3: f64,
    pub kx: f64,
    pub wt: f64,
}

/// Named terms, each a vector in the `(ê₁, ê₃)` plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpansionTerms {
    /// `eA₀p₃ sin(k_Lx) cos(ωt) ê₁`
    pub a: [f64; 3],
    /// `e²A₀²p₃² sin(k_Lx)cos(k_Lx) sin(ωt)cos(ωt) ê₁`
    pub b: [f64; 3],
    /// `p₃ ê₃`
    pub c: [f64; 3],
    /// `−3/2 e²A₀²p₃ cos²(k_Lx) sin²(ωt) ê₃`
    pub d: [f64; 3],
    /// `3/2 eA₀p₃² cos(k_Lx) sin(ωt) ê₃`
    pub f: [f64; 3],
    /// `−eA₀ cos(k_Lx) sin(ωt) ê₃`
    pub g: [f64; 3],
}

impl ExpansionTerms {
    pub fn sum(&self) -> [f64; 3] {
        let mut out = [0.0; 3];
        for term in [self.a, self.b, self.c, self.d, self.f, self.g] {
            for (o, v) in out.iter_mut().zip(term) {
                *o += v;
            }
        }
        out
    }
}

pub fn first_order_momentum(pt: &ExpansionPoint) -> [f64; 3] {
    let (x, y) = pt.kx.sin_cos();
    let (s, c) = pt.wt.sin_cos();
    [pt.amplitude * pt.p3 * x * c, 0.0, pt.p3 - pt.amplitude * y * s]
}

pub fn expansion_terms(pt: &ExpansionPoint) -> ExpansionTerms {
    let (al, p) = (pt.amplitude, pt.p3);
    let (x, y) = pt.kx.sin_cos();
    let (s, c) = pt.wt.sin_cos();
    ExpansionTerms {
        a: [al * p * x * c, 0.0, 0.0],
        b: [al * al * p * p * x * y * s * c, 0.0, 0.0],
        c: [0.0, 0.0, p],
        d: [0.0, 0.0, -1.5 * al * al * p * y * y * s * s],
        f: [0.0, 0.0, 1.5 * al * p * p * y * s],
        g: [0.0, 0.0, -al * y * s],
    }
}

/// `p̃⃗/γ(p̃⃗)` evaluated without expansion.
pub fn expansion_velocity(pt: &ExpansionPoint) -> [f64; 3] {
    let p = first_order_momentum(pt);
    let gamma = (1.0 + p.iter().map(|q| q * q).sum::<f64>()).sqrt();
    p.map(|q| q / gamma)
}
