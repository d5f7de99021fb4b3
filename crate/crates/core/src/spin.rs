//! Rotors, boosts and their action on paravectors and spinors.
//!
//! A spin transform is an algebra element `g` with `g ḡ = 1`. Paravectors
//! transform as `x ↦ g x g†`, two-component spinors as `ψ ↦ ḡ ψ`.
//! Rotations are generated by `−i n·σ/2`, boosts by `j n·σ/2`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hmatrix::CMatrix;
use crate::hypercomplex::HNumber;
use crate::pauli::{AlgebraElement, Paravector};

/// Allowed deviation of an axis from unit length.
pub const AXIS_TOL: f64 = 1e-12;
/// Relative threshold on the non-paravector residue of `g x g†`.
pub const PARAVECTOR_TOL: f64 = 1e-9;
/// Threshold on `‖g ḡ − 1‖` when wrapping a raw element.
pub const UNITARITY_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TransformKind {
    Rotor,
    Boost,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Generator {
    pub kind: TransformKind,
    pub axis: [f64; 3],
    /// Angle in radians for rotors, rapidity for boosts.
    pub param: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpinTransform {
    g: AlgebraElement,
    params: Option<Generator>,
}

/// JSON description of a transform: either generating data or a raw element.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TransformSpec {
    Generated { kind: TransformKind, axis: [f64; 3], param: f64 },
    Raw(AlgebraElement),
}

impl TransformSpec {
    pub fn build(&self) -> Result<SpinTransform> {
        match *self {
            TransformSpec::Generated { kind: TransformKind::Rotor, axis, param } => SpinTransform::rotor(axis, param),
            TransformSpec::Generated { kind: TransformKind::Boost, axis, param } => SpinTransform::boost(axis, param),
            TransformSpec::Raw(g) => SpinTransform::from_element(g),
        }
    }
}

/// Hyperbolic complex two-component spinor.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HSpinor(pub [HNumber; 2]);

impl HSpinor {
    pub const ZERO: HSpinor = HSpinor([HNumber::ZERO; 2]);

    pub fn new(a: HNumber, b: HNumber) -> Self {
        Self([a, b])
    }

    /// `(φ, ψ) = φ̄ψ = Σ conj_full(φ_k) ψ_k`.
    pub fn scalar_product(&self, other: &HSpinor) -> HNumber {
        self.0[0].conj_full() * other.0[0] + self.0[1].conj_full() * other.0[1]
    }

    pub fn scale(&self, z: HNumber) -> Self {
        Self(self.0.map(|c| z * c))
    }

    /// `P₊ψ` with `P₊ = (1 + j)/2`.
    pub fn chiral_plus(&self) -> Self {
        self.scale(HNumber::P_PLUS)
    }

    /// `P₋ψ` with `P₋ = (1 − j)/2`.
    pub fn chiral_minus(&self) -> Self {
        self.scale(HNumber::P_MINUS)
    }

    /// Left action of an algebra element through its 2×2 representation.
    pub fn left_mul(&self, a: &AlgebraElement) -> Self {
        let v = a.matrix_rep().apply(&self.0);
        Self([v[0], v[1]])
    }

    pub fn norm(&self) -> f64 {
        (self.0[0].norm_sqr() + self.0[1].norm_sqr()).sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|z| z.is_finite())
    }
}

impl std::ops::Add for HSpinor {
    type Output = HSpinor;

    fn add(self, o: HSpinor) -> HSpinor {
        HSpinor([self.0[0] + o.0[0], self.0[1] + o.0[1]])
    }
}

impl std::ops::Sub for HSpinor {
    type Output = HSpinor;

    fn sub(self, o: HSpinor) -> HSpinor {
        HSpinor([self.0[0] - o.0[0], self.0[1] - o.0[1]])
    }
}

fn unit_axis(axis: [f64; 3]) -> Result<[f64; 3]> {
    let norm = axis.iter().map(|c| c * c).sum::<f64>().sqrt();
    if !norm.is_finite() || (norm - 1.0).abs() > AXIS_TOL {
        return Err(Error::BadAxis { norm });
    }
    Ok(axis)
}

/// `n·σ` scaled by the hyperbolic complex factor `z`.
fn axis_element(axis: [f64; 3], z: HNumber) -> AlgebraElement {
    AlgebraElement::vector(axis.map(|c| z * c))
}

impl SpinTransform {
    pub fn identity() -> Self {
        Self { g: AlgebraElement::ONE, params: None }
    }

    /// `exp(−i θ n·σ / 2)`; maps `e₁` to `cos θ e₁ + sin θ e₂` for `n = ẑ`.
    pub fn rotor(axis: [f64; 3], angle: f64) -> Result<Self> {
        let n = unit_axis(axis)?;
        let g = axis_element(n, -HNumber::I * (0.5 * angle)).exp();
        Ok(Self { g, params: Some(Generator { kind: TransformKind::Rotor, axis: n, param: angle }) })
    }

    /// `exp(j ξ n·σ / 2)`; maps `e₀` to `cosh ξ e₀ + sinh ξ n`.
    pub fn boost(direction: [f64; 3], rapidity: f64) -> Result<Self> {
        let n = unit_axis(direction)?;
        let g = axis_element(n, HNumber::J * (0.5 * rapidity)).exp();
        Ok(Self { g, params: Some(Generator { kind: TransformKind::Boost, axis: n, param: rapidity }) })
    }

    /// Wraps a raw element after checking `g ḡ = 1`.
    pub fn from_element(g: AlgebraElement) -> Result<Self> {
        if !g.is_finite() {
            return Err(Error::NonFinite("SpinTransform"));
        }
        let residual = (g * g.conjugation()).distance(AlgebraElement::ONE);
        if residual > UNITARITY_TOL * (1.0 + g.norm()) {
            return Err(Error::InvalidArgument(format!(
                "element is not in the spin group: |g gbar - 1| = {residual:e}"
            )));
        }
        Ok(Self { g, params: None })
    }

    pub fn element(&self) -> AlgebraElement {
        self.g
    }

    pub fn generator(&self) -> Option<Generator> {
        self.params
    }

    /// `self ∘ other`: applies `other` first.
    pub fn compose(&self, other: &SpinTransform) -> SpinTransform {
        SpinTransform { g: self.g * other.g, params: None }
    }

    /// `‖g ḡ − 1‖`.
    pub fn unitarity_residual(&self) -> f64 {
        (self.g * self.g.conjugation()).distance(AlgebraElement::ONE)
    }

    /// `‖g† · bar(g†) − 1‖`.
    pub fn companion_residual(&self) -> f64 {
        let gd = self.g.reversion();
        (gd * gd.conjugation()).distance(AlgebraElement::ONE)
    }

    /// `g x g†` before extraction, for residue inspection.
    pub fn sandwich(&self, x: &AlgebraElement) -> AlgebraElement {
        self.g * *x * self.g.reversion()
    }

    /// `x ↦ g x g†`.
    pub fn apply(&self, x: Paravector) -> Result<Paravector> {
        let (out, residue) = Paravector::extract(&self.sandwich(&x.embed()));
        let scale = 1.0 + self.g.norm().powi(2) * x.euclidean_norm();
        if residue > PARAVECTOR_TOL * scale {
            return Err(Error::NotParavector { residue });
        }
        Ok(out)
    }

    /// `ψ ↦ ḡ ψ`.
    pub fn apply_spinor(&self, psi: &HSpinor) -> HSpinor {
        psi.left_mul(&self.g.conjugation())
    }

    /// The two complex 2×2 matrices `(g₊, g₋)` of the idempotent split.
    pub fn to_complex_pair(&self) -> (CMatrix, CMatrix) {
        self.g.matrix_rep().split()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::minkowski;
    use crate::sampling::{rand_hnumber, rand_paravector, rand_unit_vector, rng};
    use num_complex::Complex64;
    use rand::Rng;
    use std::f64::consts::{FRAC_PI_2, PI};

    const Z: [f64; 3] = [0.0, 0.0, 1.0];

    fn close(a: Paravector, b: Paravector, tol: f64) -> bool {
        a.0.iter().zip(b.0).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn rotor_examples() {
        assert_eq!(SpinTransform::rotor(Z, 0.0).unwrap().element(), AlgebraElement::ONE);
        let full = SpinTransform::rotor(Z, 2.0 * PI).unwrap().element();
        assert!(full.distance(-AlgebraElement::ONE) < 1e-15);
        let quarter = SpinTransform::rotor(Z, FRAC_PI_2).unwrap();
        let y = quarter.apply(Paravector::basis(1)).unwrap();
        assert!(close(y, Paravector::basis(2), 1e-15));
        let fixed = Paravector::new([5.0, 0.0, 0.0, 2.0]);
        let r = SpinTransform::rotor(Z, 0.7).unwrap();
        assert!(close(r.apply(fixed).unwrap(), fixed, 1e-14));
    }

    #[test]
    fn rotor_orientation_matches_matrix_oracle() {
        // g e1 g† evaluated with 2x2 matrices
        for theta in [0.3, 1.1, 2.5, -0.8] {
            let g = SpinTransform::rotor(Z, theta).unwrap().element();
            let m = &(&g.matrix_rep() * &AlgebraElement::e(1).matrix_rep()) * &g.matrix_rep().rev_transpose();
            let out = AlgebraElement::from_matrix(&m).unwrap();
            let want = AlgebraElement::e(1) * theta.cos() + AlgebraElement::e(2) * theta.sin();
            assert!(out.distance(want) < 1e-14);
        }
    }

    #[test]
    fn boost_examples() {
        assert_eq!(SpinTransform::boost(Z, 0.0).unwrap().element(), AlgebraElement::ONE);
        let b = SpinTransform::boost(Z, 1.0).unwrap();
        let t = b.apply(Paravector::basis(0)).unwrap();
        assert!(close(t, Paravector::new([1f64.cosh(), 0.0, 0.0, 1f64.sinh()]), 1e-15));
        let ab = SpinTransform::boost(Z, 0.4).unwrap().compose(&SpinTransform::boost(Z, 0.9).unwrap());
        let direct = SpinTransform::boost(Z, 1.3).unwrap();
        assert!(ab.element().distance(direct.element()) < 1e-14);
    }

    #[test]
    fn bad_axis() {
        assert!(matches!(SpinTransform::rotor([1.0, 1.0, 0.0], 1.0), Err(Error::BadAxis { .. })));
        assert!(matches!(SpinTransform::boost([0.0; 3], 1.0), Err(Error::BadAxis { .. })));
        assert!(SpinTransform::boost([f64::NAN, 0.0, 0.0], 1.0).is_err());
    }

    #[test]
    fn non_unitary_raw_element_rejected() {
        let g = AlgebraElement::ONE * 2.0;
        assert!(SpinTransform::from_element(g).is_err());
        let ok = SpinTransform::from_element(SpinTransform::boost(Z, 0.3).unwrap().element());
        assert!(ok.is_ok());
    }

    #[test]
    fn spinor_examples() {
        let mut r = rng(17);
        let phi = HSpinor::new(rand_hnumber(&mut r, 1.0), rand_hnumber(&mut r, 1.0));
        let psi = HSpinor::new(rand_hnumber(&mut r, 1.0), rand_hnumber(&mut r, 1.0));
        assert_eq!(SpinTransform::identity().apply_spinor(&psi), psi);

        let g = SpinTransform::rotor([0.0, 0.6, 0.8], 0.9)
            .unwrap()
            .compose(&SpinTransform::boost([1.0, 0.0, 0.0], -0.7).unwrap());
        let before = phi.scalar_product(&psi);
        let after = g.apply_spinor(&phi).scalar_product(&g.apply_spinor(&psi));
        assert!(after.approx_eq(before, 1e-13));

        let phase = SpinTransform::from_element(AlgebraElement::scalar((-HNumber::I * 0.4).exp())).unwrap();
        let p = phase.apply_spinor(&psi);
        assert!(p.scalar_product(&p).approx_eq(psi.scalar_product(&psi), 1e-14));
    }

    #[test]
    fn complex_pair_examples() {
        let (p, m) = SpinTransform::identity().to_complex_pair();
        assert_eq!(p, CMatrix::identity(2, 2));
        assert_eq!(m, CMatrix::identity(2, 2));
        let xi = 0.8;
        let (p, m) = SpinTransform::boost(Z, xi).unwrap().to_complex_pair();
        let d = |s: f64| {
            CMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![
                Complex64::from((s * xi / 2.0).exp()),
                Complex64::from((-s * xi / 2.0).exp()),
            ]))
        };
        assert!((p - d(1.0)).norm() < 1e-15);
        assert!((m - d(-1.0)).norm() < 1e-15);
    }

    #[test]
    fn random_transforms_preserve_structure() {
        let mut r = rng(99);
        for _ in 0..200 {
            let g = SpinTransform::rotor(rand_unit_vector(&mut r), r.gen_range(-PI..PI))
                .unwrap()
                .compose(&SpinTransform::boost(rand_unit_vector(&mut r), r.gen_range(-2.0..2.0)).unwrap());
            assert!(g.unitarity_residual() < 1e-12);
            assert!(g.companion_residual() < 1e-12);
            let (gp, gm) = g.to_complex_pair();
            assert!((gp.determinant() - Complex64::from(1.0)).norm() < 1e-12);
            assert!((gm.determinant() - Complex64::from(1.0)).norm() < 1e-12);
            let x = rand_paravector(&mut r, 2.0);
            let y = g.apply(x).unwrap();
            let drift = (minkowski(y, y).unwrap() - minkowski(x, x).unwrap()).abs();
            assert!(drift <= 1e-10 * (1.0 + x.euclidean_norm().powi(2)));
        }
    }

    #[test]
    fn chirality_projectors_split_the_action() {
        let mut r = rng(4);
        let g = SpinTransform::boost(rand_unit_vector(&mut r), 0.7)
            .unwrap()
            .compose(&SpinTransform::rotor(rand_unit_vector(&mut r), 1.2).unwrap());
        let psi = HSpinor::new(rand_hnumber(&mut r, 1.0), rand_hnumber(&mut r, 1.0));
        let lhs = g.apply_spinor(&psi).chiral_plus();
        let rhs = g.apply_spinor(&psi.chiral_plus());
        assert!((lhs - rhs).norm() < 1e-14);
        // the P+ part only sees the plus half of ḡ
        let gbar_plus = g.element().conjugation().matrix_rep().split().0;
        let u = nalgebra::DVector::from_vec(psi.0.iter().map(|z| z.split().plus).collect());
        let want = gbar_plus * u;
        for k in 0..2 {
            assert!((lhs.0[k].split().plus - want[k]).norm() < 1e-14);
            assert!(lhs.0[k].split().minus.norm() < 1e-15);
        }
        let p = AlgebraElement::scalar(HNumber::P_PLUS);
        assert!((p * g.element()).distance(g.element() * p) < 1e-15);
    }

    #[test]
    fn transform_spec_json() {
        let spec: TransformSpec = serde_json::from_str(r#"{"kind":"boost","axis":[0,0,1],"param":1.0}"#).unwrap();
        let g = spec.build().unwrap();
        assert_eq!(g.generator().unwrap().kind, TransformKind::Boost);
        let raw = serde_json::to_string(&TransformSpec::Raw(g.element())).unwrap();
        let back: TransformSpec = serde_json::from_str(&raw).unwrap();
        assert!(back.build().unwrap().element().distance(g.element()) == 0.0);
    }
}
