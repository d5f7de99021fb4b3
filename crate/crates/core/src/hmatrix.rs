//! Square matrices with hyperbolic complex entries.
//!
//! Determinants and inverses go through the idempotent split: an `HMatrix`
//! is the pair of complex matrices `(M₊, M₋)` and everything multiplicative
//! acts on the two halves independently.

use std::ops::{Add, Mul, Sub};

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hypercomplex::{HNumber, SplitPair};

pub type CMatrix = DMatrix<Complex64>;

#[derive(Clone, Debug, PartialEq)]
pub struct HMatrix {
    n: usize,
    entries: Vec<HNumber>,
}

impl HMatrix {
    pub fn zeros(n: usize) -> Self {
        Self { n, entries: vec![HNumber::ZERO; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for k in 0..n {
            m[(k, k)] = HNumber::ONE;
        }
        m
    }

    pub fn diag(values: &[HNumber]) -> Self {
        let mut m = Self::zeros(values.len());
        for (k, &z) in values.iter().enumerate() {
            m[(k, k)] = z;
        }
        m
    }

    /// Builds from row-major entries; `entries.len()` must be a perfect square.
    pub fn from_row_major(entries: Vec<HNumber>) -> Result<Self> {
        let n = (entries.len() as f64).sqrt().round() as usize;
        if n * n != entries.len() {
            return Err(Error::SizeMismatch { expected: n * n, got: entries.len() });
        }
        if !entries.iter().all(|z| z.is_finite()) {
            return Err(Error::NonFinite("HMatrix"));
        }
        Ok(Self { n, entries })
    }

    pub fn from_rows(rows: &[Vec<HNumber>]) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::SizeMismatch { expected: n, got: bad.len() });
        }
        Self::from_row_major(rows.concat())
    }

    /// Embeds a complex matrix (unit `i`) entrywise.
    pub fn from_complex(m: &CMatrix) -> Self {
        assert!(m.is_square(), "complex matrix must be square");
        let n = m.nrows();
        let mut out = Self::zeros(n);
        for r in 0..n {
            for c in 0..n {
                out[(r, c)] = HNumber::complex(m[(r, c)]);
            }
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[HNumber] {
        &self.entries
    }

    pub fn map(&self, f: impl Fn(HNumber) -> HNumber) -> Self {
        Self { n: self.n, entries: self.entries.iter().map(|&z| f(z)).collect() }
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.n);
        for r in 0..self.n {
            for c in 0..self.n {
                out[(c, r)] = self[(r, c)];
            }
        }
        out
    }

    /// Transpose with `conj_full` on every entry; the conjugation anti-involution.
    pub fn bar_transpose(&self) -> Self {
        self.transpose().map(HNumber::conj_full)
    }

    /// Transpose with `conj_i` on every entry; reversion (Hermitian adjoint).
    pub fn rev_transpose(&self) -> Self {
        self.transpose().map(HNumber::conj_i)
    }

    pub fn scale(&self, z: HNumber) -> Self {
        self.map(|e| z * e)
    }

    pub fn trace(&self) -> HNumber {
        (0..self.n).map(|k| self[(k, k)]).sum()
    }

    pub fn split(&self) -> (CMatrix, CMatrix) {
        let n = self.n;
        let plus = CMatrix::from_fn(n, n, |r, c| self[(r, c)].split().plus);
        let minus = CMatrix::from_fn(n, n, |r, c| self[(r, c)].split().minus);
        (plus, minus)
    }

    pub fn join(plus: &CMatrix, minus: &CMatrix) -> Self {
        assert_eq!(plus.shape(), minus.shape(), "split halves differ in shape");
        let n = plus.nrows();
        let mut out = Self::zeros(n);
        for r in 0..n {
            for c in 0..n {
                out[(r, c)] = HNumber::join(SplitPair::new(plus[(r, c)], minus[(r, c)]));
            }
        }
        out
    }

    pub fn det(&self) -> HNumber {
        let (p, m) = self.split();
        HNumber::join(SplitPair::new(p.determinant(), m.determinant()))
    }

    pub fn is_invertible(&self) -> bool {
        self.det().is_invertible()
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_invertible() {
            return Err(Error::NotInvertible);
        }
        let (p, m) = self.split();
        match (p.try_inverse(), m.try_inverse()) {
            (Some(p), Some(m)) => Ok(Self::join(&p, &m)),
            _ => Err(Error::NotInvertible),
        }
    }

    /// Matrix exponential through the split.
    pub fn exp(&self) -> Self {
        let (p, m) = self.split();
        Self::join(&p.exp(), &m.exp())
    }

    pub fn apply(&self, v: &[HNumber]) -> Vec<HNumber> {
        assert_eq!(v.len(), self.n, "vector length");
        (0..self.n).map(|r| (0..self.n).map(|c| self[(r, c)] * v[c]).sum()).collect()
    }

    /// Frobenius norm over all real components.
    pub fn norm(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn distance(&self, other: &HMatrix) -> f64 {
        (self - other).norm()
    }

    /// `‖M·bar(M)ᵀ − 1‖`.
    pub fn unitarity_residual(&self) -> f64 {
        (self * &self.bar_transpose()).distance(&Self::identity(self.n))
    }
}

impl std::ops::Index<(usize, usize)> for HMatrix {
    type Output = HNumber;

    fn index(&self, (r, c): (usize, usize)) -> &HNumber {
        &self.entries[r * self.n + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for HMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut HNumber {
        &mut self.entries[r * self.n + c]
    }
}

impl Mul for &HMatrix {
    type Output = HMatrix;

    fn mul(self, rhs: &HMatrix) -> HMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let n = self.n;
        let mut out = HMatrix::zeros(n);
        for r in 0..n {
            for c in 0..n {
                out[(r, c)] = (0..n).map(|k| self[(r, k)] * rhs[(k, c)]).sum();
            }
        }
        out
    }
}

impl Add for &HMatrix {
    type Output = HMatrix;

    fn add(self, rhs: &HMatrix) -> HMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        HMatrix { n: self.n, entries: self.entries.iter().zip(&rhs.entries).map(|(&a, &b)| a + b).collect() }
    }
}

impl Sub for &HMatrix {
    type Output = HMatrix;

    fn sub(self, rhs: &HMatrix) -> HMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        HMatrix { n: self.n, entries: self.entries.iter().zip(&rhs.entries).map(|(&a, &b)| a - b).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::{rand_hmatrix, rng};

    #[test]
    fn bar_transpose_examples() {
        assert_eq!(HMatrix::identity(3).bar_transpose(), HMatrix::identity(3));
        let m = HMatrix::diag(&[HNumber::I + HNumber::J]);
        assert_eq!(m.bar_transpose(), HMatrix::diag(&[-HNumber::I - HNumber::J]));
    }

    #[test]
    fn bar_transpose_is_anti_homomorphism() {
        let mut rng = rng(7);
        for _ in 0..50 {
            let a = rand_hmatrix(&mut rng, 3, 1.0);
            let b = rand_hmatrix(&mut rng, 3, 1.0);
            let lhs = (&a * &b).bar_transpose();
            let rhs = &b.bar_transpose() * &a.bar_transpose();
            assert!(lhs.distance(&rhs) <= 1e-13 * (1.0 + lhs.norm()));
            assert_eq!(a.bar_transpose().bar_transpose(), a);
        }
    }

    #[test]
    fn det_examples() {
        assert_eq!(HMatrix::identity(4).det(), HNumber::ONE);
        assert!(HMatrix::diag(&[HNumber::J, HNumber::J]).det().approx_eq(HNumber::ONE, 1e-15));
        let zd = HMatrix::diag(&[HNumber::ONE + HNumber::J, HNumber::ONE - HNumber::J]);
        assert!(zd.det().approx_eq(HNumber::ZERO, 1e-15));
        assert!(zd.inverse().is_err());
    }

    #[test]
    fn det_multiplicative_and_inverse() {
        let mut rng = rng(11);
        for n in 1..=4 {
            for _ in 0..25 {
                let a = rand_hmatrix(&mut rng, n, 1.0);
                let b = rand_hmatrix(&mut rng, n, 1.0);
                let lhs = (&a * &b).det();
                let rhs = a.det() * b.det();
                assert!(lhs.approx_eq(rhs, 1e-11), "n={n}: {lhs} vs {rhs}");
                if let Ok(inv) = a.inverse() {
                    let r = (&a * &inv).distance(&HMatrix::identity(n));
                    assert!(r < 1e-8, "inverse residual {r}");
                }
            }
        }
    }

    #[test]
    fn split_join_round_trip() {
        let mut rng = rng(3);
        let a = rand_hmatrix(&mut rng, 3, 2.0);
        let (p, m) = a.split();
        assert!(HMatrix::join(&p, &m).distance(&a) < 1e-15);
        let b = rand_hmatrix(&mut rng, 3, 2.0);
        let (bp, bm) = b.split();
        let (abp, abm) = (&a * &b).split();
        assert!((abp - p * bp).norm() < 1e-12);
        assert!((abm - m * bm).norm() < 1e-12);
    }

    #[test]
    fn from_rows_rejects_ragged() {
        let rows = vec![vec![HNumber::ONE, HNumber::ZERO], vec![HNumber::ONE]];
        assert!(matches!(HMatrix::from_rows(&rows), Err(Error::SizeMismatch { .. })));
    }
}
