//! Transformation calculator, group audit, Klein-Gordon convergence study
//! and Maxwell null check.

use anyhow::{bail, Result};
use hyperpauli::fields::{
    commensurate_box, kg_convergence, kg_residual_planewave, maxwell_residual, ConvergenceRow, LatticeGeometry,
    PlaneWaveGauge, PlaneWaveSpinor,
};
use hyperpauli::unitary::{group_audit, lie_dimension_audit};
use hyperpauli::{minkowski, HNumber, HSpinor, Paravector, TransformSpec};
use serde::Serialize;

pub const NORM_DRIFT_TOL: f64 = 1e-10;
pub const CLOSURE_TOL: f64 = 1e-11;
pub const DET_TOL: f64 = 1e-11;
pub const ORDER_RANGE: (f64, f64) = (1.8, 2.2);
pub const ANALYTIC_TOL: f64 = 1e-12;
pub const MAXWELL_TOL: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TransformOutput {
    pub transform: TransformSpec,
    pub input: Paravector,
    pub output: Paravector,
    pub norm_in: f64,
    pub norm_out: f64,
    pub norm_drift: f64,
    pub pass: bool,
}

pub fn transform(spec: TransformSpec, x: Paravector) -> Result<TransformOutput> {
    let g = spec.build()?;
    let output = g.apply(x)?;
    let norm_in = minkowski(x, x)?;
    let norm_out = minkowski(output, output)?;
    let norm_drift = (norm_out - norm_in).abs();
    let pass = norm_drift <= NORM_DRIFT_TOL * (1.0 + x.euclidean_norm().powi(2));
    Ok(TransformOutput { transform: spec, input: x, output, norm_in, norm_out, norm_drift, pass })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GroupInfo {
    pub n: usize,
    pub special: bool,
    pub seed: u64,
    pub trials: usize,
    pub generator_count: usize,
    pub real_dim: usize,
    pub numeric_rank: usize,
    pub closure_residual: f64,
    pub det_residual: f64,
    pub pass: bool,
}

pub fn group_info(n: usize, special: bool, seed: u64, trials: usize) -> Result<GroupInfo> {
    if n == 0 {
        bail!("--n must be at least 1");
    }
    if special && n == 1 {
        bail!("SU(1,H) is trivial; use --n >= 2 with --special");
    }
    let dims = lie_dimension_audit(n, special)?;
    let audit = group_audit(n, special, trials, seed)?;
    let pass = dims.consistent() && audit.closure_residual <= CLOSURE_TOL && audit.det_residual <= DET_TOL;
    Ok(GroupInfo {
        n,
        special,
        seed,
        trials,
        generator_count: dims.generator_count,
        real_dim: dims.real_dim,
        numeric_rank: dims.numeric_rank,
        closure_residual: audit.closure_residual,
        det_residual: audit.det_residual,
        pass,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KgVerify {
    pub grid: Vec<usize>,
    pub box_length: f64,
    pub p: Paravector,
    pub m: f64,
    /// `‖(p·p − m²)u‖` for the continuum plane wave.
    pub analytic_residual: f64,
    pub rows: Vec<ConvergenceRow>,
    pub pass: bool,
}

impl KgVerify {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("h,residual,order\n");
        for r in &self.rows {
            let order = r.order.map(|o| o.to_string()).unwrap_or_default();
            out.push_str(&format!("{},{},{}\n", r.h, r.residual, order));
        }
        out
    }
}

pub fn kg_verify(grid: &[usize], h: Option<f64>, p: Paravector, m: f64, refinements: usize) -> Result<KgVerify> {
    if refinements == 0 {
        bail!("--refinements must be at least 1");
    }
    // validates axis count and sizes before any box search
    LatticeGeometry::new(grid.to_vec(), h.unwrap_or(1.0))?;
    let wave = PlaneWaveSpinor { u: HSpinor::new(HNumber::ONE, HNumber::ZERO), p };
    let rows = kg_convergence(&wave, m, grid, h, refinements)?;
    let box_length = match h {
        Some(h) => h * grid[0] as f64,
        None => {
            let geometry = LatticeGeometry::new(grid.to_vec(), 1.0)?;
            let comps: Vec<f64> = (0..grid.len()).map(|a| p.0[geometry.axis_mu(a)]).collect();
            commensurate_box(&comps).unwrap_or(f64::NAN)
        }
    };
    let analytic_residual = kg_residual_planewave(&wave, m).norm();
    let orders_ok = rows.iter().filter_map(|r| r.order).all(|o| (ORDER_RANGE.0..=ORDER_RANGE.1).contains(&o));
    let pass = orders_ok && analytic_residual <= ANALYTIC_TOL;
    Ok(KgVerify { grid: grid.to_vec(), box_length, p, m, analytic_residual, rows, pass })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MaxwellOutput {
    pub k: Paravector,
    pub epsilon: Paravector,
    pub k_squared: f64,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// Passes when the plane wave solves `M²A = 0`.
pub fn maxwell(k: Paravector, epsilon: Paravector) -> Result<MaxwellOutput> {
    let wave = PlaneWaveGauge { epsilon, k, real_part: false };
    let residual = maxwell_residual(&wave);
    let k_squared = minkowski(k, k)?;
    Ok(MaxwellOutput { k, epsilon, k_squared, residual, tolerance: MAXWELL_TOL, pass: residual <= MAXWELL_TOL })
}
