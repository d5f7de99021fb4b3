//! Hyperbolic unitary groups `U(n,H) = {g : g ḡᵀ = 1}` and their special
//! subgroups, generated as `g = exp(−iΦ + jΞ)` with Hermitian `Φ, Ξ`.
//!
//! Under the idempotent split a group element becomes the pair
//! `(g₊, g₋) = (exp(−iΦ + Ξ), exp(−iΦ − Ξ))` with `g₋ = (g₊ᴴ)⁻¹`, so
//! `g ↦ g₊` identifies `U(n,H)` with `GL(n,C)` and `SU(n,H)` with `SL(n,C)`.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hmatrix::{CMatrix, HMatrix};
use crate::hypercomplex::HNumber;
use crate::sampling::trial_rng;

pub const HERMITIAN_TOL: f64 = 1e-12;
/// Singular values above this fraction of the largest count toward the rank.
pub const RANK_TOL: f64 = 1e-9;

/// Generalized Gell-Mann matrices divided by two: `n² − 1` traceless
/// Hermitian generators with `tr(τ_a τ_b) = δ_ab / 2`.
pub fn su_basis(n: usize) -> Vec<CMatrix> {
    assert!(n >= 1, "dimension must be positive");
    let c = |re: f64, im: f64| Complex64::new(re, im);
    let mut basis = Vec::with_capacity(n * n - 1);
    for k in 0..n {
        for l in k + 1..n {
            let mut sym = CMatrix::zeros(n, n);
            sym[(k, l)] = c(0.5, 0.0);
            sym[(l, k)] = c(0.5, 0.0);
            basis.push(sym);
            let mut asym = CMatrix::zeros(n, n);
            asym[(k, l)] = c(0.0, -0.5);
            asym[(l, k)] = c(0.0, 0.5);
            basis.push(asym);
        }
    }
    for d in 1..n {
        let norm = 0.5 * (2.0 / (d * (d + 1)) as f64).sqrt();
        let mut diag = CMatrix::zeros(n, n);
        for k in 0..d {
            diag[(k, k)] = c(norm, 0.0);
        }
        diag[(d, d)] = c(-(d as f64) * norm, 0.0);
        basis.push(diag);
    }
    basis
}

/// `su_basis(n)` plus the identity.
pub fn u_basis(n: usize) -> Vec<CMatrix> {
    let mut basis = su_basis(n);
    basis.push(CMatrix::identity(n, n));
    basis
}

pub fn basis(n: usize, special: bool) -> Vec<CMatrix> {
    if special {
        su_basis(n)
    } else {
        u_basis(n)
    }
}

pub fn is_unitary_h(m: &HMatrix, tol: f64) -> bool {
    m.unitarity_residual() <= tol
}

pub fn det_h(m: &HMatrix) -> HNumber {
    m.det()
}

fn combine(basis: &[CMatrix], coeffs: &[f64], n: usize) -> CMatrix {
    basis.iter().zip(coeffs).fold(CMatrix::zeros(n, n), |acc, (t, &c)| acc + t * Complex64::from(c))
}

fn check_basis(basis: &[CMatrix], phi: &[f64], xi: &[f64]) -> Result<usize> {
    if phi.len() != basis.len() {
        return Err(Error::SizeMismatch { expected: basis.len(), got: phi.len() });
    }
    if xi.len() != basis.len() {
        return Err(Error::SizeMismatch { expected: basis.len(), got: xi.len() });
    }
    let n = basis.first().map_or(0, |t| t.nrows());
    if n == 0 {
        return Err(Error::InvalidArgument("empty generator basis".into()));
    }
    for (index, t) in basis.iter().enumerate() {
        if t.shape() != (n, n) {
            return Err(Error::SizeMismatch { expected: n, got: t.nrows() });
        }
        let residual = (t - t.adjoint()).norm();
        if residual > HERMITIAN_TOL * (1.0 + t.norm()) {
            return Err(Error::NotHermitian { index, residual });
        }
    }
    Ok(n)
}

/// `exp(−i Σ φ^a τ_a + j Σ ξ^a τ_a)`.
pub fn generate(basis: &[CMatrix], phi: &[f64], xi: &[f64]) -> Result<HMatrix> {
    let n = check_basis(basis, phi, xi)?;
    let rot = combine(basis, phi, n);
    let hyp = combine(basis, xi, n);
    let minus_i = Complex64::new(0.0, -1.0);
    let plus = (&rot * minus_i + &hyp).exp();
    let minus = (&rot * minus_i - &hyp).exp();
    Ok(HMatrix::join(&plus, &minus))
}

/// Random group element with parameters uniform in `[-scale, scale)`.
pub fn random_element<R: Rng>(rng: &mut R, basis: &[CMatrix], scale: f64) -> HMatrix {
    let mut draw = || -> Vec<f64> { basis.iter().map(|_| rng.gen_range(-scale..scale)).collect() };
    let phi = draw();
    let xi = draw();
    generate(basis, &phi, &xi).expect("library bases are Hermitian")
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DimensionAudit {
    pub n: usize,
    pub special: bool,
    /// `n² − 1` for `SU(n,H)`, `n²` for `U(n,H)`.
    pub generator_count: usize,
    /// Real dimension of the tangent space, `2·generator_count`.
    pub real_dim: usize,
    /// Numerical rank of `{−iτ_a, jτ_a}` as real vectors.
    pub numeric_rank: usize,
    /// Largest `‖X + bar(X)ᵀ‖` over the tangent vectors.
    pub anti_hermitian_residual: f64,
}

impl DimensionAudit {
    pub fn consistent(&self) -> bool {
        self.numeric_rank == self.real_dim && self.anti_hermitian_residual <= 1e-14
    }
}

fn flatten(m: &HMatrix) -> Vec<f64> {
    m.entries().iter().flat_map(|z| z.to_array()).collect()
}

pub fn lie_dimension_audit(n: usize, special: bool) -> Result<DimensionAudit> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let gens = basis(n, special);
    let generator_count = gens.len();
    let tangents: Vec<HMatrix> = gens
        .iter()
        .flat_map(|t| {
            let t = HMatrix::from_complex(t);
            [t.scale(-HNumber::I), t.scale(HNumber::J)]
        })
        .collect();
    let anti_hermitian_residual = tangents.iter().map(|x| (x + &x.bar_transpose()).norm()).fold(0.0, f64::max);
    let cols = 4 * n * n;
    let rows: Vec<f64> = tangents.iter().flat_map(flatten).collect();
    let m = DMatrix::from_row_slice(tangents.len(), cols, &rows);
    let sv = m.singular_values();
    let largest = sv.max();
    let numeric_rank = sv.iter().filter(|&&s| s > RANK_TOL * largest).count();
    Ok(DimensionAudit {
        n,
        special,
        generator_count,
        real_dim: 2 * generator_count,
        numeric_rank,
        anti_hermitian_residual,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GroupAudit {
    pub trials: usize,
    /// Largest `‖gh·bar(gh)ᵀ − 1‖` over random pairs.
    pub closure_residual: f64,
    /// Largest `|det(gh) − det(g)det(h)|`, and for special groups also `|det(g) − 1|`.
    pub det_residual: f64,
}

/// Closure and determinant checks on seeded random pairs; trial `k` draws
/// from its own stream, so results do not depend on evaluation order.
pub fn group_audit(n: usize, special: bool, trials: usize, seed: u64) -> Result<GroupAudit> {
    if n == 0 || trials == 0 {
        return Err(Error::InvalidArgument("n and trials must be at least 1".into()));
    }
    let gens = basis(n, special);
    let mut closure_residual = 0.0f64;
    let mut det_residual = 0.0f64;
    for k in 0..trials {
        let mut rng = trial_rng(seed, k as u64);
        let g = random_element(&mut rng, &gens, 1.0);
        let h = random_element(&mut rng, &gens, 1.0);
        let gh = &g * &h;
        closure_residual = closure_residual.max(gh.unitarity_residual());
        let (dg, dh, dgh) = (g.det(), h.det(), gh.det());
        det_residual = det_residual.max((dgh - dg * dh).norm());
        if special {
            det_residual = det_residual.max((dg - HNumber::ONE).norm()).max((dgh - HNumber::ONE).norm());
        }
    }
    Ok(GroupAudit { trials, closure_residual, det_residual })
}

/// A half-integer stored as twice its value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct HalfInt(i32);

impl HalfInt {
    pub const fn from_twice(twice: i32) -> Self {
        Self(twice)
    }

    pub fn twice(self) -> i32 {
        self.0
    }

    pub fn value(self) -> f64 {
        self.0 as f64 / 2.0
    }

    pub fn from_f64(x: f64) -> Result<Self> {
        let t = 2.0 * x;
        if !t.is_finite() || (t - t.round()).abs() > 1e-12 {
            return Err(Error::InvalidArgument(format!("{x} is not a half-integer")));
        }
        Ok(Self(t.round() as i32))
    }

    /// `-self, -self + 1, …, self`.
    pub fn weights(self) -> impl Iterator<Item = HalfInt> {
        let top = self.0;
        (-top..=top).step_by(2).map(HalfInt)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RepState {
    pub sigma: HalfInt,
    pub rho: HalfInt,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RepEigen {
    pub state: RepState,
    pub j3: HNumber,
    pub k3: HNumber,
}

/// Diagonal action of `J₃ = ρ + σ` and `K₃ = ij(ρ − σ)` on the
/// `(2s+1)(2r+1)` states `|σ ρ⟩`.
pub fn rep_j3_k3(s: HalfInt, r: HalfInt) -> Result<Vec<RepEigen>> {
    if s.twice() < 0 || r.twice() < 0 {
        return Err(Error::InvalidArgument("spins must be non-negative".into()));
    }
    let mut out = Vec::new();
    for sigma in s.weights() {
        for rho in r.weights() {
            out.push(RepEigen {
                state: RepState { sigma, rho },
                j3: HNumber::real(rho.value() + sigma.value()),
                k3: HNumber::IJ * (rho.value() - sigma.value()),
            });
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SectorGenerators {
    /// Diagonal of the complex `J₃` on this sector.
    pub j3: Vec<Complex64>,
    /// Diagonal of the complex `K₃` on this sector.
    pub k3: Vec<Complex64>,
    /// Largest off-diagonal entry of either generator.
    pub off_diagonal: f64,
    /// Which fundamental representation, `"(1/2,0)"` or `"(0,1/2)"`, this sector reproduces.
    pub label: Option<&'static str>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RepConsistency {
    pub plus: SectorGenerators,
    pub minus: SectorGenerators,
    /// `J₃` is identical on both sectors.
    pub rotation_shared: bool,
    /// `K₃` has opposite sign on the two sectors.
    pub boost_opposite: bool,
    pub consistent: bool,
}

const FD_STEP: f64 = 1e-5;
const FD_TOL: f64 = 1e-8;

fn derivative(f: impl Fn(f64) -> HMatrix) -> HMatrix {
    let d = &f(FD_STEP) - &f(-FD_STEP);
    d.scale(HNumber::real(0.5 / FD_STEP))
}

/// Differentiates `generate()` for `SU(2,H)` at the identity along the third
/// rotation and boost directions (`J₃ = i ∂_φ g`, `K₃ = i ∂_ξ g`), splits the
/// generators into the `P±` sectors and matches each sector against the
/// fundamental eigenvalue tables of [`rep_j3_k3`]. The table entries are read
/// as complex numbers by sending `ij ↦ i` (the `P₊` component).
pub fn verify_rep_consistency() -> Result<RepConsistency> {
    let taus = su_basis(2);
    let third =
        taus.iter().position(|t| t[(0, 0)].re > 0.0 && t[(0, 1)].norm() == 0.0).expect("diagonal generator present");
    let coords = |t: f64| -> Vec<f64> {
        let mut v = vec![0.0; taus.len()];
        v[third] = t;
        v
    };
    let zero = vec![0.0; taus.len()];
    let j3 = derivative(|t| generate(&taus, &coords(t), &zero).unwrap()).scale(HNumber::I);
    let k3 = derivative(|t| generate(&taus, &zero, &coords(t)).unwrap()).scale(HNumber::I);
    let (j3p, j3m) = j3.split();
    let (k3p, k3m) = k3.split();

    let half = HalfInt::from_twice(1);
    let none = HalfInt::from_twice(0);
    let tables = [("(1/2,0)", rep_j3_k3(half, none)?), ("(0,1/2)", rep_j3_k3(none, half)?)];

    let sector = |j: &CMatrix, k: &CMatrix| -> SectorGenerators {
        let off = |m: &CMatrix| m[(0, 1)].norm().max(m[(1, 0)].norm());
        let j3: Vec<Complex64> = (0..2).map(|a| j[(a, a)]).collect();
        let k3: Vec<Complex64> = (0..2).map(|a| k[(a, a)]).collect();
        let label = tables.iter().find_map(|(name, table)| {
            let matches = (0..2).all(|a| {
                table
                    .iter()
                    .any(|e| (e.j3.split().plus - j3[a]).norm() < FD_TOL && (e.k3.split().plus - k3[a]).norm() < FD_TOL)
            });
            matches.then_some(*name)
        });
        SectorGenerators { j3, k3, off_diagonal: off(j).max(off(k)), label }
    };
    let plus = sector(&j3p, &k3p);
    let minus = sector(&j3m, &k3m);

    let rotation_shared = plus.j3.iter().zip(&minus.j3).all(|(a, b)| (a - b).norm() < FD_TOL) && {
        let mut spec: Vec<f64> = plus.j3.iter().map(|z| z.re).collect();
        spec.sort_by(f64::total_cmp);
        (spec[0] + 0.5).abs() < FD_TOL && (spec[1] - 0.5).abs() < FD_TOL
    };
    let boost_opposite = plus.k3.iter().zip(&minus.k3).all(|(a, b)| (a + b).norm() < FD_TOL)
        && plus.k3.iter().all(|z| (z.norm() - 0.5).abs() < FD_TOL);
    let consistent = rotation_shared
        && boost_opposite
        && plus.off_diagonal < FD_TOL
        && minus.off_diagonal < FD_TOL
        && plus.label.is_some()
        && minus.label.is_some()
        && plus.label != minus.label;
    Ok(RepConsistency { plus, minus, rotation_shared, boost_opposite, consistent })
}

/// Split halves of `g`, `(g₊, g₋)`, together with the inverse-adjoint defect
/// `‖g₋ − (g₊ᴴ)⁻¹‖` that characterizes membership.
pub fn split_membership_defect(g: &HMatrix) -> Option<f64> {
    let (p, m) = g.split();
    let inv = p.adjoint().try_inverse()?;
    Some((m - inv).norm())
}
