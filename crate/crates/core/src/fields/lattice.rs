//! Periodic rectangular lattices and the central-difference d'Alembertian.
//!
//! Axis 0 is time; a 2-axis lattice spans `(t, z)` and a 4-axis lattice
//! `(t, x, y, z)`. Sites are stored row-major with axis 0 slowest. Site
//! updates run in parallel, while every reduction goes through
//! [`pairwise_sum`] over site order, so results do not depend on the number
//! of threads.

use std::f64::consts::PI;
use std::ops::{Add, Sub};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypercomplex::HNumber;
use crate::pauli::{AlgebraElement, Paravector};
use crate::spin::HSpinor;

use super::{PlaneWaveGauge, PlaneWaveSpinor};

const MIN_AXIS: usize = 4;
const MAX_BOX_MULTIPLE: u32 = 10_000;
const COMMENSURATE_TOL: f64 = 1e-9;

/// Values a lattice can carry.
pub trait FieldValue: Copy + Send + Sync + Add<Output = Self> + Sub<Output = Self> {
    fn zero() -> Self;
    fn scaled(self, k: f64) -> Self;
    fn norm_sqr(self) -> f64;
}

impl FieldValue for HSpinor {
    fn zero() -> Self {
        HSpinor::ZERO
    }
    fn scaled(self, k: f64) -> Self {
        self.scale(HNumber::real(k))
    }
    fn norm_sqr(self) -> f64 {
        self.0[0].norm_sqr() + self.0[1].norm_sqr()
    }
}

impl FieldValue for AlgebraElement {
    fn zero() -> Self {
        AlgebraElement::ZERO
    }
    fn scaled(self, k: f64) -> Self {
        self * k
    }
    fn norm_sqr(self) -> f64 {
        self.c.iter().map(|z| z.norm_sqr()).sum()
    }
}

impl FieldValue for HNumber {
    fn zero() -> Self {
        HNumber::ZERO
    }
    fn scaled(self, k: f64) -> Self {
        self.scale(k)
    }
    fn norm_sqr(self) -> f64 {
        HNumber::norm_sqr(self)
    }
}

impl FieldValue for f64 {
    fn zero() -> Self {
        0.0
    }
    fn scaled(self, k: f64) -> Self {
        self * k
    }
    fn norm_sqr(self) -> f64 {
        self * self
    }
}

/// Sum by recursive halving; the tree depends only on `values.len()`.
pub fn pairwise_sum<T: FieldValue>(values: &[T]) -> T {
    const BLOCK: usize = 8;
    if values.len() <= BLOCK {
        return values.iter().fold(T::zero(), |acc, &v| acc + v);
    }
    let mid = values.len() / 2;
    pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LatticeGeometry {
    dims: Vec<usize>,
    h: f64,
}

impl LatticeGeometry {
    pub fn new(dims: Vec<usize>, h: f64) -> Result<Self> {
        if dims.len() != 2 && dims.len() != 4 {
            return Err(Error::BadLattice(format!("expected 2 or 4 axes, got {}", dims.len())));
        }
        if let Some(&n) = dims.iter().find(|&&n| n < MIN_AXIS) {
            return Err(Error::BadLattice(format!("axis size {n} is below {MIN_AXIS}")));
        }
        if !(h.is_finite() && h > 0.0) {
            return Err(Error::BadLattice(format!("spacing must be positive, got {h}")));
        }
        Ok(Self { dims, h })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn spacing(&self) -> f64 {
        self.h
    }

    pub fn sites(&self) -> usize {
        self.dims.iter().product()
    }

    /// Spacetime index `μ` of lattice axis `axis`.
    pub fn axis_mu(&self, axis: usize) -> usize {
        if self.dims.len() == 2 {
            [0, 3][axis]
        } else {
            axis
        }
    }

    /// `h^D`.
    pub fn cell_volume(&self) -> f64 {
        self.h.powi(self.dims.len() as i32)
    }

    /// Spacetime volume of the periodic box.
    pub fn box_volume(&self) -> f64 {
        self.cell_volume() * self.sites() as f64
    }

    fn strides(&self) -> Vec<usize> {
        let mut strides = vec![1; self.dims.len()];
        for a in (0..self.dims.len() - 1).rev() {
            strides[a] = strides[a + 1] * self.dims[a + 1];
        }
        strides
    }

    pub fn point(&self, index: usize) -> [f64; 4] {
        let mut x = [0.0; 4];
        let mut rest = index;
        for a in (0..self.dims.len()).rev() {
            let i = rest % self.dims[a];
            rest /= self.dims[a];
            x[self.axis_mu(a)] = i as f64 * self.h;
        }
        x
    }

    /// Checks that `exp(−i p·x)` is periodic on the box.
    pub fn check_commensurate(&self, p: Paravector) -> Result<()> {
        for (axis, &n) in self.dims.iter().enumerate() {
            let wave_number = p.0[self.axis_mu(axis)] * n as f64 * self.h / (2.0 * PI);
            if (wave_number - wave_number.round()).abs() > COMMENSURATE_TOL * (1.0 + wave_number.abs()) {
                return Err(Error::IncommensurateWave { axis, wave_number });
            }
        }
        // momentum components along axes the lattice does not resolve must vanish
        let resolved: Vec<usize> = (0..self.dims.len()).map(|a| self.axis_mu(a)).collect();
        for mu in 0..4 {
            if !resolved.contains(&mu) && p.0[mu] != 0.0 {
                return Err(Error::IncommensurateWave { axis: mu, wave_number: p.0[mu] });
            }
        }
        Ok(())
    }
}

/// Smallest box length `L = 2πq` (integer `q`) on which every listed
/// momentum component has an integer wave number.
pub fn commensurate_box(components: &[f64]) -> Option<f64> {
    (1..=MAX_BOX_MULTIPLE).find_map(|q| {
        let fits = components.iter().all(|&p| {
            let w = p * q as f64;
            (w - w.round()).abs() <= COMMENSURATE_TOL * (1.0 + w.abs())
        });
        fits.then_some(2.0 * PI * q as f64)
    })
}

/// Eigenvalue of the lattice operator `−□_h` on `exp(−i p·x)`:
/// `Σ_axes ±(4/h²) sin²(p_μ h/2)` with `+` for time and `−` for space.
pub fn lattice_mass_squared(p: Paravector, geometry: &LatticeGeometry) -> f64 {
    let h = geometry.spacing();
    (0..geometry.dims().len())
        .map(|a| {
            let mu = geometry.axis_mu(a);
            let s = 4.0 / (h * h) * (0.5 * p.0[mu] * h).sin().powi(2);
            if mu == 0 {
                s
            } else {
                -s
            }
        })
        .sum()
}

#[derive(Clone, Debug, PartialEq)]
pub struct LatticeField<T> {
    geometry: LatticeGeometry,
    values: Vec<T>,
}

impl<T: FieldValue> LatticeField<T> {
    pub fn from_fn(geometry: LatticeGeometry, f: impl Fn([f64; 4]) -> T + Sync) -> Self {
        let values = (0..geometry.sites()).into_par_iter().map(|i| f(geometry.point(i))).collect();
        Self { geometry, values }
    }

    pub fn from_values(geometry: LatticeGeometry, values: Vec<T>) -> Result<Self> {
        if values.len() != geometry.sites() {
            return Err(Error::SizeMismatch { expected: geometry.sites(), got: values.len() });
        }
        Ok(Self { geometry, values })
    }

    pub fn zeros(geometry: LatticeGeometry) -> Self {
        let values = vec![T::zero(); geometry.sites()];
        Self { geometry, values }
    }

    pub fn geometry(&self) -> &LatticeGeometry {
        &self.geometry
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn map<U: FieldValue>(&self, f: impl Fn(T) -> U + Sync) -> LatticeField<U> {
        LatticeField { geometry: self.geometry.clone(), values: self.values.par_iter().map(|&v| f(v)).collect() }
    }

    /// `□_h = ∂²_t − Σ_k ∂²_k` with periodic central second differences.
    pub fn dalembertian(&self) -> LatticeField<T> {
        let dims = self.geometry.dims();
        let strides = self.geometry.strides();
        let inv_h2 = 1.0 / (self.geometry.h * self.geometry.h);
        let values = (0..self.values.len())
            .into_par_iter()
            .map(|i| {
                let centre = self.values[i];
                let mut acc = T::zero();
                for (a, (&n, &stride)) in dims.iter().zip(&strides).enumerate() {
                    let coord = (i / stride) % n;
                    let up = if coord + 1 == n { i + stride - n * stride } else { i + stride };
                    let down = if coord == 0 { i + (n - 1) * stride } else { i - stride };
                    let second = (self.values[up] + self.values[down] - centre.scaled(2.0)).scaled(inv_h2);
                    acc = if self.geometry.axis_mu(a) == 0 { acc + second } else { acc - second };
                }
                acc
            })
            .collect();
        LatticeField { geometry: self.geometry.clone(), values }
    }

    /// `M²_h = −□_h`.
    pub fn mass_operator(&self) -> LatticeField<T> {
        self.dalembertian().map(|v| v.scaled(-1.0))
    }

    pub fn norm(&self) -> f64 {
        let squares: Vec<f64> = self.values.par_iter().map(|v| v.norm_sqr()).collect();
        pairwise_sum(&squares).sqrt()
    }

    pub fn distance(&self, other: &LatticeField<T>) -> Result<f64> {
        self.check_same_grid(other)?;
        let squares: Vec<f64> = self.values.par_iter().zip(&other.values).map(|(&a, &b)| (a - b).norm_sqr()).collect();
        Ok(pairwise_sum(&squares).sqrt())
    }

    pub fn check_same_grid<U>(&self, other: &LatticeField<U>) -> Result<()> {
        if self.geometry != other.geometry {
            return Err(Error::GridMismatch(format!(
                "{:?} h={} vs {:?} h={}",
                self.geometry.dims, self.geometry.h, other.geometry.dims, other.geometry.h
            )));
        }
        Ok(())
    }
}

impl LatticeField<HSpinor> {
    pub fn sample_spinor_wave(geometry: LatticeGeometry, wave: &PlaneWaveSpinor) -> Result<Self> {
        geometry.check_commensurate(wave.p)?;
        Ok(Self::from_fn(geometry, |x| wave.value_at(x)))
    }
}

impl LatticeField<AlgebraElement> {
    pub fn sample_gauge_wave(geometry: LatticeGeometry, wave: &PlaneWaveGauge) -> Result<Self> {
        geometry.check_commensurate(wave.k)?;
        Ok(Self::from_fn(geometry, |x| wave.value_at(x)))
    }
}

/// `‖(M²_h − m²)ψ‖ / ‖ψ‖`.
pub fn kg_residual_lattice(field: &LatticeField<HSpinor>, m: f64) -> Result<f64> {
    let norm = field.norm();
    if norm == 0.0 {
        return Err(Error::InvalidArgument("field is identically zero".into()));
    }
    let m2 = m * m;
    let mass = field.mass_operator();
    let squares: Vec<f64> =
        mass.values.par_iter().zip(&field.values).map(|(&mpsi, &psi)| (mpsi - psi.scaled(m2)).norm_sqr()).collect();
    Ok(pairwise_sum(&squares).sqrt() / norm)
}

/// `J = −M²_h A = □_h A` on the lattice.
pub fn current_from_lattice(field: &LatticeField<AlgebraElement>) -> LatticeField<AlgebraElement> {
    field.dalembertian()
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ConvergenceRow {
    pub n: usize,
    pub h: f64,
    pub residual: f64,
    /// `log₂(residual(2h) / residual(h))`; absent on the coarsest grid.
    pub order: Option<f64>,
}

/// Residuals of a plane wave on `refinements` successively halved grids.
/// The box stays fixed; without an explicit `h` the smallest commensurate
/// box for `p` is used.
pub fn kg_convergence(
    wave: &PlaneWaveSpinor,
    m: f64,
    base_dims: &[usize],
    h: Option<f64>,
    refinements: usize,
) -> Result<Vec<ConvergenceRow>> {
    if refinements == 0 {
        return Err(Error::InvalidArgument("need at least one grid".into()));
    }
    let base = LatticeGeometry::new(base_dims.to_vec(), h.unwrap_or(1.0))?;
    if base_dims.windows(2).any(|w| w[0] != w[1]) && h.is_none() {
        return Err(Error::InvalidArgument("automatic spacing needs equal axis sizes".into()));
    }
    let h0 = match h {
        Some(h) => h,
        None => {
            let comps: Vec<f64> = (0..base_dims.len()).map(|a| wave.p.0[base.axis_mu(a)]).collect();
            let length =
                commensurate_box(&comps).ok_or(Error::IncommensurateWave { axis: 0, wave_number: f64::NAN })?;
            length / base_dims[0] as f64
        }
    };
    let mut rows: Vec<ConvergenceRow> = Vec::with_capacity(refinements);
    for level in 0..refinements {
        let scale = 1usize << level;
        let dims: Vec<usize> = base_dims.iter().map(|&n| n * scale).collect();
        let geometry = LatticeGeometry::new(dims.clone(), h0 / scale as f64)?;
        let field = LatticeField::sample_spinor_wave(geometry.clone(), wave)?;
        let residual = kg_residual_lattice(&field, m)?;
        let order = rows.last().map(|prev| (prev.residual / residual).log2());
        rows.push(ConvergenceRow { n: dims[0], h: geometry.spacing(), residual, order });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::current_from_field;

    fn wave(p: [f64; 4]) -> PlaneWaveSpinor {
        PlaneWaveSpinor { u: HSpinor::new(HNumber::ONE, HNumber::I + HNumber::J * 0.5), p: Paravector::new(p) }
    }

    #[test]
    fn geometry_validation() {
        assert!(LatticeGeometry::new(vec![8, 8, 8], 0.1).is_err());
        assert!(LatticeGeometry::new(vec![8, 3], 0.1).is_err());
        assert!(LatticeGeometry::new(vec![8, 8], 0.0).is_err());
        let g = LatticeGeometry::new(vec![4, 6], 0.5).unwrap();
        assert_eq!(g.sites(), 24);
        assert_eq!(g.point(7), [0.5, 0.0, 0.0, 0.5]);
        assert_eq!(g.box_volume(), 24.0 * 0.25);
    }

    #[test]
    fn incommensurate_wave_rejected() {
        let g = LatticeGeometry::new(vec![64, 64], 0.1).unwrap();
        let err = LatticeField::sample_spinor_wave(g.clone(), &wave([1.0, 0.0, 0.0, 0.6]));
        assert!(matches!(err, Err(Error::IncommensurateWave { .. })));
        let err = LatticeField::sample_spinor_wave(g, &wave([0.0, 1.0, 0.0, 0.0]));
        assert!(matches!(err, Err(Error::IncommensurateWave { .. })));
    }

    #[test]
    fn commensurate_box_examples() {
        assert_eq!(commensurate_box(&[1.0, 0.6]), Some(10.0 * PI));
        assert_eq!(commensurate_box(&[0.0, 0.0]), Some(2.0 * PI));
        assert_eq!(commensurate_box(&[std::f64::consts::SQRT_2]), None);
    }

    #[test]
    fn constant_field_has_zero_residual() {
        let g = LatticeGeometry::new(vec![8, 8], 0.3).unwrap();
        let f = LatticeField::sample_spinor_wave(g, &wave([0.0; 4])).unwrap();
        assert_eq!(kg_residual_lattice(&f, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn stencil_matches_lattice_dispersion() {
        let p = Paravector::new([1.0, 0.0, 0.0, 0.6]);
        let g = LatticeGeometry::new(vec![32, 32], 10.0 * PI / 32.0).unwrap();
        let f = LatticeField::sample_spinor_wave(g.clone(), &wave(p.0)).unwrap();
        let lm2 = lattice_mass_squared(p, &g);
        assert!(kg_residual_lattice(&f, lm2.sqrt()).unwrap() < 1e-12);
    }

    #[test]
    fn four_axis_lattice() {
        let p = Paravector::new([1.0, 0.5, 0.0, 0.5]);
        let l = commensurate_box(&[1.0, 0.5, 0.0, 0.5]).unwrap();
        let g = LatticeGeometry::new(vec![8, 8, 8, 8], l / 8.0).unwrap();
        let f = LatticeField::sample_spinor_wave(g.clone(), &wave(p.0)).unwrap();
        let lm2 = lattice_mass_squared(p, &g);
        assert!(kg_residual_lattice(&f, lm2.sqrt()).unwrap() < 1e-12);
    }

    #[test]
    fn second_order_convergence_with_taylor_coefficient() {
        // leading error of (4/h²)sin²(ph/2) is -p⁴h²/12 per axis
        let (p0, p3, m) = (1.0, 0.6, 0.8);
        let rows = kg_convergence(&wave([p0, 0.0, 0.0, p3]), m, &[32, 32], None, 3).unwrap();
        for row in &rows {
            let leading = row.h * row.h * (p0.powi(4) - p3.powi(4)) / 12.0;
            assert!((row.residual - leading).abs() / leading < 0.1, "{row:?}");
        }
        for row in &rows[1..] {
            let order = row.order.unwrap();
            assert!((3.4f64.log2()..=4.6f64.log2()).contains(&order));
        }
    }

    #[test]
    fn off_shell_residual_tends_to_mass_defect() {
        let rows = kg_convergence(&wave([1.0, 0.0, 0.0, 0.0]), 0.5, &[16, 16], None, 5).unwrap();
        let last = rows.last().unwrap();
        assert!((last.residual - 0.75).abs() < 1e-3);
    }

    #[test]
    fn lattice_current_converges_to_analytic() {
        let a = PlaneWaveGauge {
            epsilon: Paravector::new([0.0, 1.0, 0.5, 0.0]),
            k: Paravector::new([2.0, 0.0, 0.0, 1.0]),
            real_part: false,
        };
        let analytic = current_from_field(&a);
        let mut errs = Vec::new();
        for n in [16usize, 32, 64] {
            let g = LatticeGeometry::new(vec![n, n], 2.0 * PI / n as f64).unwrap();
            let field = LatticeField::sample_gauge_wave(g.clone(), &a).unwrap();
            let j = current_from_lattice(&field);
            let exact = LatticeField::from_fn(g, |x| analytic.value_at(x));
            errs.push(j.distance(&exact).unwrap() / exact.norm());
        }
        for w in errs.windows(2) {
            let order = (w[0] / w[1]).log2();
            assert!((1.8..=2.2).contains(&order), "order {order}");
        }
    }

    #[test]
    fn null_gauge_wave_is_annihilated() {
        let a = PlaneWaveGauge {
            epsilon: Paravector::new([1.0, 0.0, 1.0, 0.0]),
            k: Paravector::new([1.0, 0.0, 0.0, 1.0]),
            real_part: true,
        };
        let g = LatticeGeometry::new(vec![16, 16], 2.0 * PI / 16.0).unwrap();
        let field = LatticeField::sample_gauge_wave(g, &a).unwrap();
        assert!(current_from_lattice(&field).norm() / field.norm() < 1e-13);
    }

    #[test]
    fn pairwise_sum_is_thread_count_independent() {
        let g = LatticeGeometry::new(vec![32, 32], 10.0 * PI / 32.0).unwrap();
        let f = LatticeField::sample_spinor_wave(g, &wave([1.0, 0.0, 0.0, 0.6])).unwrap();
        let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let four = rayon::ThreadPoolBuilder::new().num_threads(4).build().unwrap();
        let a = one.install(|| kg_residual_lattice(&f, 0.8).unwrap());
        let b = four.install(|| kg_residual_lattice(&f, 0.8).unwrap());
        assert_eq!(a.to_bits(), b.to_bits());
    }
}
