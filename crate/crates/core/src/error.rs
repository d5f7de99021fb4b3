use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite component in {0}")]
    NonFinite(&'static str),
    #[error("element is a zero divisor and has no inverse")]
    NotInvertible,
    #[error("scalar product has a non-real part of size {residue:e}")]
    NonRealResult { residue: f64 },
    #[error("axis must be a unit vector, got norm {norm}")]
    BadAxis { norm: f64 },
    #[error("transformed element is not a paravector (residue {residue:e})")]
    NotParavector { residue: f64 },
    #[error("generator {index} is not Hermitian (residual {residual:e})")]
    NotHermitian { index: usize, residual: f64 },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("grids do not match: {0}")]
    GridMismatch(String),
    #[error("plane wave does not fit the periodic box on axis {axis} (wave number {wave_number})")]
    IncommensurateWave { axis: usize, wave_number: f64 },
    #[error("invalid lattice: {0}")]
    BadLattice(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
