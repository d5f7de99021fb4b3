//! Matrix-valued gauge fields `A = G^a τ_a + H^a (ij τ_a)` with paravector
//! components, and the corresponding interacting mass operator.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hmatrix::{CMatrix, HMatrix};
use crate::hypercomplex::HNumber;
use crate::pauli::{AlgebraElement, Paravector};
use crate::spin::HSpinor;

/// Square matrix of algebra elements (gauge indices × Clifford structure).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AlgebraMatrix {
    n: usize,
    entries: Vec<AlgebraElement>,
}

impl AlgebraMatrix {
    pub fn zeros(n: usize) -> Self {
        Self { n, entries: vec![AlgebraElement::ZERO; n * n] }
    }

    /// `a` times the identity in gauge space.
    pub fn diagonal(n: usize, a: AlgebraElement) -> Self {
        let mut m = Self::zeros(n);
        for k in 0..n {
            m.entries[k * n + k] = a;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> AlgebraElement {
        self.entries[r * self.n + c]
    }

    fn set(&mut self, r: usize, c: usize, a: AlgebraElement) {
        self.entries[r * self.n + c] = a;
    }

    pub fn add(&self, o: &AlgebraMatrix) -> AlgebraMatrix {
        assert_eq!(self.n, o.n, "dimension mismatch");
        AlgebraMatrix { n: self.n, entries: self.entries.iter().zip(&o.entries).map(|(&a, &b)| a + b).collect() }
    }

    pub fn mul(&self, o: &AlgebraMatrix) -> AlgebraMatrix {
        assert_eq!(self.n, o.n, "dimension mismatch");
        let n = self.n;
        let mut out = Self::zeros(n);
        for r in 0..n {
            for c in 0..n {
                out.set(r, c, (0..n).map(|k| self.get(r, k) * o.get(k, c)).sum());
            }
        }
        out
    }

    /// Transpose in gauge indices with conjugation on every entry.
    pub fn bar(&self) -> AlgebraMatrix {
        let n = self.n;
        let mut out = Self::zeros(n);
        for r in 0..n {
            for c in 0..n {
                out.set(c, r, self.get(r, c).conjugation());
            }
        }
        out
    }

    /// `L·self·R` for scalar matrices `L`, `R`.
    pub fn sandwich(&self, left: &HMatrix, right: &HMatrix) -> AlgebraMatrix {
        assert_eq!(left.dim(), self.n, "dimension mismatch");
        assert_eq!(right.dim(), self.n, "dimension mismatch");
        let n = self.n;
        let mut out = Self::zeros(n);
        for r in 0..n {
            for c in 0..n {
                let mut acc = AlgebraElement::ZERO;
                for k in 0..n {
                    for l in 0..n {
                        acc = acc + self.get(k, l).scale(left[(r, k)] * right[(l, c)]);
                    }
                }
                out.set(r, c, acc);
            }
        }
        out
    }

    /// `(Mψ)_r = Σ_c M_rc ψ_c`, entries acting through the 2×2 representation.
    pub fn apply(&self, psi: &[HSpinor]) -> Vec<HSpinor> {
        assert_eq!(psi.len(), self.n, "multiplet size");
        (0..self.n).map(|r| (0..self.n).fold(HSpinor::ZERO, |acc, c| acc + psi[c].left_mul(&self.get(r, c)))).collect()
    }

    pub fn norm(&self) -> f64 {
        self.entries.iter().map(|a| a.norm().powi(2)).sum::<f64>().sqrt()
    }

    pub fn entries(&self) -> &[AlgebraElement] {
        &self.entries
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct YangMillsField {
    pub g: Vec<Paravector>,
    pub h: Vec<Paravector>,
    pub taus: Vec<CMatrix>,
}

impl YangMillsField {
    pub fn dim(&self) -> usize {
        self.taus[0].nrows()
    }

    /// `A_rc = Σ_a (τ_a)_rc (G^a + ij H^a)`.
    pub fn matrix(&self) -> AlgebraMatrix {
        let n = self.dim();
        let mut out = AlgebraMatrix::zeros(n);
        for ((tau, g), h) in self.taus.iter().zip(&self.g).zip(&self.h) {
            let coeff = g.embed() + h.embed().scale(HNumber::IJ);
            for r in 0..n {
                for c in 0..n {
                    let entry = out.get(r, c) + coeff.scale(HNumber::complex(tau[(r, c)]));
                    out.set(r, c, entry);
                }
            }
        }
        out
    }
}

pub fn assemble_ym(g: Vec<Paravector>, h: Vec<Paravector>, taus: Vec<CMatrix>) -> Result<YangMillsField> {
    if taus.is_empty() {
        return Err(Error::InvalidArgument("empty generator basis".into()));
    }
    for comps in [&g, &h] {
        if comps.len() != taus.len() {
            return Err(Error::SizeMismatch { expected: taus.len(), got: comps.len() });
        }
    }
    let n = taus[0].nrows();
    if let Some(t) = taus.iter().find(|t| t.shape() != (n, n)) {
        return Err(Error::SizeMismatch { expected: n, got: t.nrows() });
    }
    if !g.iter().chain(&h).all(|p| p.is_finite()) {
        return Err(Error::NonFinite("YangMillsField"));
    }
    Ok(YangMillsField { g, h, taus })
}

/// `(p + A)·bar(p + A)` with `p` on the gauge diagonal.
pub fn ym_mass_operator(p: Paravector, a: &AlgebraMatrix) -> AlgebraMatrix {
    let shifted = AlgebraMatrix::diagonal(a.dim(), p.embed()).add(a);
    shifted.mul(&shifted.bar())
}

/// `ψ̄ (M² − m²) ψ` for a gauge multiplet of spinors.
pub fn ym_bilinear(psi: &[HSpinor], mass_op: &AlgebraMatrix, m: f64) -> Result<HNumber> {
    if psi.len() != mass_op.dim() {
        return Err(Error::SizeMismatch { expected: mass_op.dim(), got: psi.len() });
    }
    let shifted = mass_op.add(&AlgebraMatrix::diagonal(mass_op.dim(), AlgebraElement::ONE * -(m * m)));
    let chi = shifted.apply(psi);
    Ok(psi.iter().zip(&chi).map(|(a, b)| a.scalar_product(b)).sum())
}

/// Global gauge transform by `U` with `U·bar(U)ᵀ = 1`: `A ↦ ŪAU`, `ψ ↦ Ūψ`
/// where `Ū = bar(U)ᵀ`.
pub fn gauge_transform(a: &AlgebraMatrix, psi: &[HSpinor], u: &HMatrix) -> (AlgebraMatrix, Vec<HSpinor>) {
    let ubar = u.bar_transpose();
    let a2 = a.sandwich(&ubar, u);
    let psi2 =
        (0..psi.len()).map(|r| (0..psi.len()).fold(HSpinor::ZERO, |acc, c| acc + psi[c].scale(ubar[(r, c)]))).collect();
    (a2, psi2)
}
