//! Hyperbolic complex numbers, the hyperbolic Pauli paravector algebra,
//! spin transforms, hyperbolic unitary groups and mass-operator checks of
//! the Klein-Gordon and Maxwell equations.

pub mod error;
pub mod fields;
pub mod hmatrix;
pub mod hypercomplex;
pub mod pauli;
pub mod sampling;
pub mod spin;
pub mod unitary;

pub use error::{Error, Result};
pub use hmatrix::{CMatrix, HMatrix};
pub use hypercomplex::{HNumber, SplitPair};
pub use pauli::{minkowski, scalar_product_general, AlgebraElement, GradeParts, Paravector};
pub use spin::{HSpinor, SpinTransform, TransformKind, TransformSpec};
