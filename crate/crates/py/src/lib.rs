//! Python bindings for the hyperpauli engine.

use hyperpauli_core as core;
use hyperpauli_core::fields::{self, PlaneWaveGauge, PlaneWaveSpinor};
use hyperpauli_core::unitary;
use hyperpauli_core::{AlgebraElement, CMatrix, HNumber, HSpinor, Paravector, SpinTransform};
use num_complex::Complex64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn rows(m: &CMatrix) -> Vec<Vec<Complex64>> {
    (0..m.nrows()).map(|r| (0..m.ncols()).map(|c| m[(r, c)]).collect()).collect()
}

#[pyclass(name = "HNumber", module = "hyperpauli", from_py_object)]
#[derive(Clone, Copy)]
struct PyHNumber(HNumber);

#[pymethods]
impl PyHNumber {
    #[new]
    #[pyo3(signature = (x=0.0, y=0.0, v=0.0, w=0.0))]
    fn new(x: f64, y: f64, v: f64, w: f64) -> PyResult<Self> {
        HNumber::new(x, y, v, w).map(Self).map_err(err)
    }

    #[getter]
    fn x(&self) -> f64 {
        self.0.x
    }

    #[getter]
    fn y(&self) -> f64 {
        self.0.y
    }

    #[getter]
    fn v(&self) -> f64 {
        self.0.v
    }

    #[getter]
    fn w(&self) -> f64 {
        self.0.w
    }

    fn components(&self) -> (f64, f64, f64, f64) {
        let [x, y, v, w] = self.0.to_array();
        (x, y, v, w)
    }

    /// The `(P₊, P₋)` complex components.
    fn split(&self) -> (Complex64, Complex64) {
        let s = self.0.split();
        (s.plus, s.minus)
    }

    #[staticmethod]
    fn join(plus: Complex64, minus: Complex64) -> Self {
        Self(core::SplitPair { plus, minus }.join())
    }

    fn conj_full(&self) -> Self {
        Self(self.0.conj_full())
    }

    fn conj_i(&self) -> Self {
        Self(self.0.conj_i())
    }

    fn conj_j(&self) -> Self {
        Self(self.0.conj_j())
    }

    fn exp(&self) -> Self {
        Self(self.0.exp())
    }

    fn invert(&self) -> PyResult<Self> {
        self.0.invert().map(Self).map_err(err)
    }

    fn is_invertible(&self) -> bool {
        self.0.is_invertible()
    }

    fn norm(&self) -> f64 {
        self.0.norm()
    }

    fn scale(&self, s: f64) -> Self {
        Self(self.0 * s)
    }

    fn __add__(&self, o: PyRef<'_, Self>) -> Self {
        Self(self.0 + o.0)
    }

    fn __sub__(&self, o: PyRef<'_, Self>) -> Self {
        Self(self.0 - o.0)
    }

    fn __mul__(&self, o: PyRef<'_, Self>) -> Self {
        Self(self.0 * o.0)
    }

    fn __neg__(&self) -> Self {
        Self(-self.0)
    }

    fn __eq__(&self, o: PyRef<'_, Self>) -> bool {
        self.0 == o.0
    }

    fn __repr__(&self) -> String {
        let [x, y, v, w] = self.0.to_array();
        format!("HNumber({x}, {y}, {v}, {w})")
    }
}

#[pyclass(name = "AlgebraElement", module = "hyperpauli", from_py_object)]
#[derive(Clone, Copy)]
struct PyAlgebraElement(AlgebraElement);

#[pymethods]
impl PyAlgebraElement {
    /// Coefficients on `{1, σ1, σ2, σ3}`.
    #[new]
    fn new(c: [PyRef<'_, PyHNumber>; 4]) -> Self {
        Self(AlgebraElement::new(std::array::from_fn(|k| c[k].0)))
    }

    #[staticmethod]
    fn one() -> Self {
        Self(AlgebraElement::ONE)
    }

    #[staticmethod]
    fn sigma(k: usize) -> PyResult<Self> {
        if !(1..=3).contains(&k) {
            return Err(PyValueError::new_err("sigma index must be 1, 2 or 3"));
        }
        Ok(Self(AlgebraElement::sigma(k)))
    }

    /// `e₀ = 1`, `e_k = jσ_k`.
    #[staticmethod]
    fn e(mu: usize) -> PyResult<Self> {
        if mu > 3 {
            return Err(PyValueError::new_err("basis index must be 0..=3"));
        }
        Ok(Self(AlgebraElement::e(mu)))
    }

    #[staticmethod]
    fn paravector(x: [f64; 4]) -> Self {
        Self(Paravector::new(x).embed())
    }

    fn coefficients(&self) -> Vec<PyHNumber> {
        self.0.c.iter().map(|&z| PyHNumber(z)).collect()
    }

    fn gp(&self, o: PyRef<'_, Self>) -> Self {
        Self(self.0.gp(o.0))
    }

    fn reversion(&self) -> Self {
        Self(self.0.reversion())
    }

    fn conjugation(&self) -> Self {
        Self(self.0.conjugation())
    }

    fn grade_involution(&self) -> Self {
        Self(self.0.grade_involution())
    }

    fn exp(&self) -> Self {
        Self(self.0.exp())
    }

    fn trace(&self) -> PyHNumber {
        PyHNumber(self.0.trace())
    }

    fn norm(&self) -> f64 {
        self.0.norm()
    }

    /// `(scalar, vector, bivector, pseudoscalar)`.
    fn grades(&self) -> (Self, Self, Self, Self) {
        let g = self.0.grade_decompose();
        (Self(g.scalar), Self(g.vector), Self(g.bivector), Self(g.pseudoscalar))
    }

    /// Paravector coordinates and the size of the non-paravector remainder.
    fn paravector_part(&self) -> ([f64; 4], f64) {
        let (p, residue) = Paravector::extract(&self.0);
        (p.0, residue)
    }

    /// The 2×2 representation, row-major.
    fn matrix(&self) -> Vec<Vec<PyHNumber>> {
        let m = self.0.matrix_rep();
        (0..2).map(|r| (0..2).map(|c| PyHNumber(m[(r, c)])).collect()).collect()
    }

    fn __add__(&self, o: PyRef<'_, Self>) -> Self {
        Self(self.0 + o.0)
    }

    fn __sub__(&self, o: PyRef<'_, Self>) -> Self {
        Self(self.0 - o.0)
    }

    fn __mul__(&self, o: PyRef<'_, Self>) -> Self {
        Self(self.0 * o.0)
    }

    fn __neg__(&self) -> Self {
        Self(-self.0)
    }

    fn __repr__(&self) -> String {
        let c: Vec<String> = self.0.c.iter().map(|z| z.to_string()).collect();
        format!("AlgebraElement([{}])", c.join(", "))
    }
}

#[pyclass(name = "HSpinor", module = "hyperpauli", from_py_object)]
#[derive(Clone, Copy)]
struct PyHSpinor(HSpinor);

#[pymethods]
impl PyHSpinor {
    #[new]
    fn new(a: PyRef<'_, PyHNumber>, b: PyRef<'_, PyHNumber>) -> Self {
        Self(HSpinor::new(a.0, b.0))
    }

    fn components(&self) -> (PyHNumber, PyHNumber) {
        (PyHNumber(self.0 .0[0]), PyHNumber(self.0 .0[1]))
    }

    fn scalar_product(&self, o: PyRef<'_, Self>) -> PyHNumber {
        PyHNumber(self.0.scalar_product(&o.0))
    }

    fn chiral_plus(&self) -> Self {
        Self(self.0.chiral_plus())
    }

    fn chiral_minus(&self) -> Self {
        Self(self.0.chiral_minus())
    }

    fn norm(&self) -> f64 {
        self.0.norm()
    }
}

#[pyclass(name = "SpinTransform", module = "hyperpauli", from_py_object)]
#[derive(Clone)]
struct PySpinTransform(SpinTransform);

#[pymethods]
impl PySpinTransform {
    #[staticmethod]
    fn identity() -> Self {
        Self(SpinTransform::identity())
    }

    #[staticmethod]
    fn rotor(axis: [f64; 3], angle: f64) -> PyResult<Self> {
        SpinTransform::rotor(axis, angle).map(Self).map_err(err)
    }

    #[staticmethod]
    fn boost(direction: [f64; 3], rapidity: f64) -> PyResult<Self> {
        SpinTransform::boost(direction, rapidity).map(Self).map_err(err)
    }

    #[staticmethod]
    fn from_element(g: PyRef<'_, PyAlgebraElement>) -> PyResult<Self> {
        SpinTransform::from_element(g.0).map(Self).map_err(err)
    }

    fn element(&self) -> PyAlgebraElement {
        PyAlgebraElement(self.0.element())
    }

    /// `self ∘ other`: `other` acts first.
    fn compose(&self, other: PyRef<'_, Self>) -> Self {
        Self(self.0.compose(&other.0))
    }

    fn apply(&self, x: [f64; 4]) -> PyResult<[f64; 4]> {
        self.0.apply(Paravector::new(x)).map(|p| p.0).map_err(err)
    }

    fn apply_spinor(&self, psi: PyRef<'_, PyHSpinor>) -> PyHSpinor {
        PyHSpinor(self.0.apply_spinor(&psi.0))
    }

    fn unitarity_residual(&self) -> f64 {
        self.0.unitarity_residual()
    }

    /// The two complex 2×2 matrices of the `P±` sectors.
    fn to_complex_pair(&self) -> (Vec<Vec<Complex64>>, Vec<Vec<Complex64>>) {
        let (p, m) = self.0.to_complex_pair();
        (rows(&p), rows(&m))
    }
}

#[pyfunction]
fn minkowski(x: [f64; 4], y: [f64; 4]) -> PyResult<f64> {
    core::minkowski(Paravector::new(x), Paravector::new(y)).map_err(err)
}

/// `(generator_count, real_dim, numeric_rank)` of `SU(n,H)` or `U(n,H)`.
#[pyfunction]
#[pyo3(signature = (n, special=true))]
fn lie_dimension_audit(n: usize, special: bool) -> PyResult<(usize, usize, usize)> {
    let a = unitary::lie_dimension_audit(n, special).map_err(err)?;
    Ok((a.generator_count, a.real_dim, a.numeric_rank))
}

/// `(closure_residual, det_residual)` over random group elements.
#[pyfunction]
#[pyo3(signature = (n, special=true, trials=100, seed=42))]
fn group_audit(n: usize, special: bool, trials: usize, seed: u64) -> PyResult<(f64, f64)> {
    let a = unitary::group_audit(n, special, trials, seed).map_err(err)?;
    Ok((a.closure_residual, a.det_residual))
}

type KgRow = (usize, f64, f64, Option<f64>);

/// Rows of `(n, h, residual, order)` for a plane wave with unit amplitude.
#[pyfunction]
#[pyo3(signature = (p, m, grid=vec![32, 32], refinements=3, h=None))]
fn kg_convergence(p: [f64; 4], m: f64, grid: Vec<usize>, refinements: usize, h: Option<f64>) -> PyResult<Vec<KgRow>> {
    let wave = PlaneWaveSpinor { u: HSpinor::new(HNumber::ONE, HNumber::ZERO), p: Paravector::new(p) };
    let rows = fields::kg_convergence(&wave, m, &grid, h, refinements).map_err(err)?;
    Ok(rows.into_iter().map(|r| (r.n, r.h, r.residual, r.order)).collect())
}

#[pyfunction]
fn maxwell_residual(k: [f64; 4], epsilon: [f64; 4]) -> f64 {
    fields::maxwell_residual(&PlaneWaveGauge {
        epsilon: Paravector::new(epsilon),
        k: Paravector::new(k),
        real_part: false,
    })
}

#[pymodule]
fn hyperpauli(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyHNumber>()?;
    m.add_class::<PyAlgebraElement>()?;
    m.add_class::<PyHSpinor>()?;
    m.add_class::<PySpinTransform>()?;
    m.add_function(wrap_pyfunction!(minkowski, m)?)?;
    m.add_function(wrap_pyfunction!(lie_dimension_audit, m)?)?;
    m.add_function(wrap_pyfunction!(group_audit, m)?)?;
    m.add_function(wrap_pyfunction!(kg_convergence, m)?)?;
    m.add_function(wrap_pyfunction!(maxwell_residual, m)?)?;
    Ok(())
}
