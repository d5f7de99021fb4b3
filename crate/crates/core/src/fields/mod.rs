//! Mass-operator formulation of the free and interacting wave equations.
//!
//! With `p = i∂^μ e_μ` the mass operator `M² = p p̄` is the scalar `−□`
//! (signature `+,−,−,−`). On a plane wave `u·exp(−i p·x)` it acts as the
//! algebra element `p p̄ = (p·p)·1`; with minimal substitution `p → p + A`
//! it becomes `(p + A)(p̄ + Ā)`, which is no longer scalar in general.

mod action;
mod lattice;
mod yang_mills;

pub use action::{action, ActionValue};
pub use lattice::{
    commensurate_box, current_from_lattice, kg_convergence, kg_residual_lattice, lattice_mass_squared, pairwise_sum,
    ConvergenceRow, FieldValue, LatticeField, LatticeGeometry,
};
pub use yang_mills::{assemble_ym, gauge_transform, ym_bilinear, ym_mass_operator, AlgebraMatrix, YangMillsField};

use serde::{Deserialize, Serialize};

use crate::hypercomplex::HNumber;
use crate::pauli::{AlgebraElement, Paravector};
use crate::spin::HSpinor;

/// `ψ(x) = u·exp(−i p·x)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PlaneWaveSpinor {
    pub u: HSpinor,
    pub p: Paravector,
}

/// `A(x) = ε·exp(−i k·x)`, or `ε·exp(−i k·x) + ε·exp(+i k·x)` when `real_part` is set.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PlaneWaveGauge {
    pub epsilon: Paravector,
    pub k: Paravector,
    #[serde(default)]
    pub real_part: bool,
}

/// Amplitude of the source current of a plane-wave gauge field.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PlaneWaveCurrent {
    pub amplitude: AlgebraElement,
    pub k: Paravector,
    pub real_part: bool,
}

/// `η_μν p^μ x^ν`.
pub fn phase(p: Paravector, x: [f64; 4]) -> f64 {
    p.0[0] * x[0] - p.0[1] * x[1] - p.0[2] * x[2] - p.0[3] * x[3]
}

/// `exp(−i θ)` as a hyperbolic complex number.
pub fn wave_factor(theta: f64) -> HNumber {
    HNumber::complex(num_complex::Complex64::from_polar(1.0, -theta))
}

impl PlaneWaveSpinor {
    pub fn value_at(&self, x: [f64; 4]) -> HSpinor {
        self.u.scale(wave_factor(phase(self.p, x)))
    }
}

impl PlaneWaveGauge {
    pub fn value_at(&self, x: [f64; 4]) -> AlgebraElement {
        let theta = phase(self.k, x);
        let eps = self.epsilon.embed();
        if self.real_part {
            eps.scale(wave_factor(theta) + wave_factor(-theta))
        } else {
            eps.scale(wave_factor(theta))
        }
    }
}

/// `(p + A)·bar(p + A)` for a momentum paravector `p` and a constant
/// potential `A` (pass `AlgebraElement::ZERO` for the free operator).
pub fn mass_operator_on_planewave(p: Paravector, a: AlgebraElement) -> AlgebraElement {
    let shifted = p.embed() + a;
    shifted * shifted.conjugation()
}

/// `(M² − m²)ψ` amplitude for a free plane wave.
pub fn kg_residual_planewave(psi: &PlaneWaveSpinor, m: f64) -> HSpinor {
    minimal_substitution(psi, AlgebraElement::ZERO, m)
}

/// `((p + A)·bar(p + A) − m²) u` for constant `A`.
pub fn minimal_substitution(psi: &PlaneWaveSpinor, a: AlgebraElement, m: f64) -> HSpinor {
    let op = mass_operator_on_planewave(psi.p, a) - AlgebraElement::ONE * (m * m);
    psi.u.left_mul(&op)
}

/// `‖M²A‖` at amplitude level, `|k·k|·‖ε‖`, evaluated through the
/// Clifford product `(k k̄) ε`.
pub fn maxwell_residual(a: &PlaneWaveGauge) -> f64 {
    let m2 = mass_operator_on_planewave(a.k, AlgebraElement::ZERO);
    (m2 * a.epsilon.embed()).norm()
}

/// `J = −M²A` for a plane wave.
pub fn current_from_field(a: &PlaneWaveGauge) -> PlaneWaveCurrent {
    let m2 = mass_operator_on_planewave(a.k, AlgebraElement::ZERO);
    PlaneWaveCurrent { amplitude: -(m2 * a.epsilon.embed()), k: a.k, real_part: a.real_part }
}

impl PlaneWaveCurrent {
    pub fn value_at(&self, x: [f64; 4]) -> AlgebraElement {
        let theta = phase(self.k, x);
        if self.real_part {
            self.amplitude.scale(wave_factor(theta) + wave_factor(-theta))
        } else {
            self.amplitude.scale(wave_factor(theta))
        }
    }
}
