//! The complexified Pauli algebra over [`HNumber`] scalars.
//!
//! Elements are stored as four hyperbolic complex coefficients on
//! `{1, σ₁, σ₂, σ₃}`. Spacetime paravectors use the basis
//! `e₀ = 1`, `e_k = jσ_k`, so the real subalgebra spanned by
//! `{1, jσ_k, iσ_k, ij}` is a copy of the Clifford algebra of Euclidean
//! 3-space and the quadratic form `x x̄` is the Minkowski one.
//!
//! The 2×2 matrix representation (`matrix_rep`/`from_matrix`) is kept as an
//! independent route for cross-checking products and involutions.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hmatrix::HMatrix;
use crate::hypercomplex::HNumber;

/// Tolerance for the reality assertion in [`minkowski`].
pub const REALITY_TOL: f64 = 1e-12;

/// Below this `|r|` the series form of `sinh r / r` is used in [`AlgebraElement::exp`].
const SINC_SERIES_CUTOFF: f64 = 1e-6;

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AlgebraElement {
    pub c: [HNumber; 4],
}

/// Real spacetime coordinates `x^μ`; embeds as `x⁰ + Σ x^k jσ_k`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Paravector(pub [f64; 4]);

/// Grade parts of an element. The complexified algebra is `R(3,0) ⊕ i·R(3,0)`,
/// so each grade collects a real blade and its `i` multiple:
/// scalar `{1, i}`, vector `{jσ_k, ijσ_k}`, bivector `{iσ_k, σ_k}`,
/// pseudoscalar `{ij, j}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GradeParts {
    pub scalar: AlgebraElement,
    pub vector: AlgebraElement,
    pub bivector: AlgebraElement,
    pub pseudoscalar: AlgebraElement,
}

impl GradeParts {
    pub fn sum(&self) -> AlgebraElement {
        self.scalar + self.vector + self.bivector + self.pseudoscalar
    }
}

impl Paravector {
    pub fn new(x: [f64; 4]) -> Self {
        Self(x)
    }

    pub fn basis(mu: usize) -> Self {
        let mut x = [0.0; 4];
        x[mu] = 1.0;
        Self(x)
    }

    pub fn embed(self) -> AlgebraElement {
        let [x0, x1, x2, x3] = self.0;
        AlgebraElement::new([HNumber::real(x0), HNumber::J * x1, HNumber::J * x2, HNumber::J * x3])
    }

    /// Inverse of [`Paravector::embed`]; returns the coordinates together with
    /// the size of everything outside the paravector subspace.
    pub fn extract(a: &AlgebraElement) -> (Paravector, f64) {
        let p = Paravector([a.c[0].x, a.c[1].v, a.c[2].v, a.c[3].v]);
        let residue = (*a - p.embed()).norm();
        (p, residue)
    }

    /// `η_μν x^μ x^ν` with signature `(+,−,−,−)`, computed directly.
    pub fn interval(self) -> f64 {
        let [t, x, y, z] = self.0;
        t * t - x * x - y * y - z * z
    }

    pub fn euclidean_norm(self) -> f64 {
        self.0.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    pub fn is_finite(self) -> bool {
        self.0.iter().all(|c| c.is_finite())
    }
}

impl Add for Paravector {
    type Output = Paravector;

    fn add(self, o: Paravector) -> Paravector {
        Paravector(std::array::from_fn(|k| self.0[k] + o.0[k]))
    }
}

impl Mul<f64> for Paravector {
    type Output = Paravector;

    fn mul(self, s: f64) -> Paravector {
        Paravector(self.0.map(|c| c * s))
    }
}

impl AlgebraElement {
    pub const ZERO: AlgebraElement = AlgebraElement { c: [HNumber::ZERO; 4] };
    pub const ONE: AlgebraElement = AlgebraElement { c: [HNumber::ONE, HNumber::ZERO, HNumber::ZERO, HNumber::ZERO] };

    pub fn new(c: [HNumber; 4]) -> Self {
        Self { c }
    }

    pub fn scalar(z: HNumber) -> Self {
        Self::new([z, HNumber::ZERO, HNumber::ZERO, HNumber::ZERO])
    }

    /// `z₁σ₁ + z₂σ₂ + z₃σ₃`.
    pub fn vector(v: [HNumber; 3]) -> Self {
        Self::new([HNumber::ZERO, v[0], v[1], v[2]])
    }

    /// Pauli basis element `σ_k`, `k ∈ {1,2,3}`.
    pub fn sigma(k: usize) -> Self {
        assert!((1..=3).contains(&k), "sigma index must be 1, 2 or 3");
        let mut c = [HNumber::ZERO; 4];
        c[k] = HNumber::ONE;
        Self::new(c)
    }

    /// Paravector basis element `e_μ`.
    pub fn e(mu: usize) -> Self {
        Paravector::basis(mu).embed()
    }

    pub fn scale(self, z: HNumber) -> Self {
        Self::new(self.c.map(|a| z * a))
    }

    pub fn map(self, f: impl Fn(HNumber) -> HNumber) -> Self {
        Self::new(self.c.map(f))
    }

    /// Geometric product:
    /// `(a₀ + a·σ)(b₀ + b·σ) = a₀b₀ + a·b + (a₀b + b₀a + i a×b)·σ`.
    pub fn gp(self, o: AlgebraElement) -> AlgebraElement {
        let [a0, a1, a2, a3] = self.c;
        let [b0, b1, b2, b3] = o.c;
        let i = HNumber::I;
        AlgebraElement::new([
            a0 * b0 + a1 * b1 + a2 * b2 + a3 * b3,
            a0 * b1 + b0 * a1 + i * (a2 * b3 - a3 * b2),
            a0 * b2 + b0 * a2 + i * (a3 * b1 - a1 * b3),
            a0 * b3 + b0 * a3 + i * (a1 * b2 - a2 * b1),
        ])
    }

    /// Reversion `a†`: `conj_i` on every coefficient (`σ_k† = σ_k`).
    pub fn reversion(self) -> Self {
        self.map(HNumber::conj_i)
    }

    /// Conjugation `ā`: `conj_full` on every coefficient, so `ē_k = −e_k`.
    pub fn conjugation(self) -> Self {
        self.map(HNumber::conj_full)
    }

    /// Grade involution; equals `conjugation ∘ reversion`.
    pub fn grade_involution(self) -> Self {
        self.map(HNumber::conj_j)
    }

    /// Trace of the 2×2 representation, `2·c₀`.
    pub fn trace(self) -> HNumber {
        self.c[0] * 2.0
    }

    pub fn norm(self) -> f64 {
        self.c.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn distance(self, o: AlgebraElement) -> f64 {
        (self - o).norm()
    }

    pub fn is_finite(self) -> bool {
        self.c.iter().all(|z| z.is_finite())
    }

    pub fn grade_decompose(self) -> GradeParts {
        let [c0, c1, c2, c3] = self.c;
        let h = HNumber::raw;
        let vec_part = |z: HNumber| h(0.0, 0.0, z.v, z.w);
        let biv_part = |z: HNumber| h(z.x, z.y, 0.0, 0.0);
        GradeParts {
            scalar: Self::scalar(h(c0.x, c0.y, 0.0, 0.0)),
            vector: Self::vector([vec_part(c1), vec_part(c2), vec_part(c3)]),
            bivector: Self::vector([biv_part(c1), biv_part(c2), biv_part(c3)]),
            pseudoscalar: Self::scalar(h(0.0, 0.0, c0.v, c0.w)),
        }
    }

    /// Size of the component outside `span{1, jσ_k, iσ_k, ij}`.
    pub fn real_subalgebra_residue(self) -> f64 {
        let [c0, c1, c2, c3] = self.c;
        let outside = [c0.y, c0.v, c1.x, c1.w, c2.x, c2.w, c3.x, c3.w];
        outside.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    pub fn is_real_subalgebra(self, tol: f64) -> bool {
        self.real_subalgebra_residue() <= tol * (1.0 + self.norm())
    }

    /// `[[c₀ + c₃, c₁ − i c₂], [c₁ + i c₂, c₀ − c₃]]`.
    pub fn matrix_rep(self) -> HMatrix {
        let [c0, c1, c2, c3] = self.c;
        let i = HNumber::I;
        HMatrix::from_row_major(vec![c0 + c3, c1 - i * c2, c1 + i * c2, c0 - c3]).expect("2x2 by construction")
    }

    pub fn from_matrix(m: &HMatrix) -> Result<Self> {
        if m.dim() != 2 {
            return Err(Error::SizeMismatch { expected: 2, got: m.dim() });
        }
        let (m00, m01, m10, m11) = (m[(0, 0)], m[(0, 1)], m[(1, 0)], m[(1, 1)]);
        Ok(Self::new([(m00 + m11) * 0.5, (m10 + m01) * 0.5, -HNumber::I * (m10 - m01) * 0.5, (m00 - m11) * 0.5]))
    }

    /// Exponential through the idempotent split. On each half the element is
    /// `a + b·σ` with complex `a`, `b` and
    /// `exp(a + b·σ) = eᵃ (cosh r + sinh(r)/r · b·σ)`, `r² = b·b`.
    pub fn exp(self) -> AlgebraElement {
        let halves = self.c.map(|z| z.split());
        let half_exp = |pick: fn(&crate::hypercomplex::SplitPair) -> Complex64| {
            let a = pick(&halves[0]);
            let b = [pick(&halves[1]), pick(&halves[2]), pick(&halves[3])];
            let r2 = b[0] * b[0] + b[1] * b[1] + b[2] * b[2];
            let r = r2.sqrt();
            let (ch, shc) = if r.norm() < SINC_SERIES_CUTOFF {
                (1.0 + r2 / 2.0 + r2 * r2 / 24.0, 1.0 + r2 / 6.0 + r2 * r2 / 120.0)
            } else {
                (r.cosh(), r.sinh() / r)
            };
            let ea = a.exp();
            [ea * ch, ea * shc * b[0], ea * shc * b[1], ea * shc * b[2]]
        };
        let plus = half_exp(|s| s.plus);
        let minus = half_exp(|s| s.minus);
        AlgebraElement::new(std::array::from_fn(|k| {
            HNumber::join(crate::hypercomplex::SplitPair::new(plus[k], minus[k]))
        }))
    }
}

impl Add for AlgebraElement {
    type Output = AlgebraElement;

    fn add(self, o: AlgebraElement) -> AlgebraElement {
        AlgebraElement::new(std::array::from_fn(|k| self.c[k] + o.c[k]))
    }
}

impl Sub for AlgebraElement {
    type Output = AlgebraElement;

    fn sub(self, o: AlgebraElement) -> AlgebraElement {
        AlgebraElement::new(std::array::from_fn(|k| self.c[k] - o.c[k]))
    }
}

impl Neg for AlgebraElement {
    type Output = AlgebraElement;

    fn neg(self) -> AlgebraElement {
        self.map(|z| -z)
    }
}

impl Mul for AlgebraElement {
    type Output = AlgebraElement;

    fn mul(self, o: AlgebraElement) -> AlgebraElement {
        self.gp(o)
    }
}

impl Mul<f64> for AlgebraElement {
    type Output = AlgebraElement;

    fn mul(self, s: f64) -> AlgebraElement {
        self.map(|z| z * s)
    }
}

impl Mul<AlgebraElement> for HNumber {
    type Output = AlgebraElement;

    fn mul(self, a: AlgebraElement) -> AlgebraElement {
        a.scale(self)
    }
}

impl std::iter::Sum for AlgebraElement {
    fn sum<I: Iterator<Item = AlgebraElement>>(iter: I) -> AlgebraElement {
        iter.fold(AlgebraElement::ZERO, |acc, a| acc + a)
    }
}

/// `½ tr(ā b)` for arbitrary elements; HNumber-valued in general.
pub fn scalar_product_general(a: AlgebraElement, b: AlgebraElement) -> HNumber {
    a.conjugation().gp(b).trace() * 0.5
}

/// Minkowski scalar product `½ tr(x̄ y)` of two paravectors.
pub fn minkowski(x: Paravector, y: Paravector) -> Result<f64> {
    let s = scalar_product_general(x.embed(), y.embed());
    let residue = HNumber::raw(0.0, s.y, s.v, s.w).norm();
    let scale = 1.0 + x.euclidean_norm() * y.euclidean_norm();
    if residue > REALITY_TOL * scale {
        return Err(Error::NonRealResult { residue });
    }
    Ok(s.x)
}

/// Levi-Civita symbol on `{1,2,3}`.
pub fn levi_civita(k: usize, l: usize, m: usize) -> f64 {
    match (k, l, m) {
        (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1.0,
        (3, 2, 1) | (1, 3, 2) | (2, 1, 3) => -1.0,
        _ => 0.0,
    }
}
