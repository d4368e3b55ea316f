use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("ambient dimension {0} not supported (must be 1..={max})", max = crate::MAX_DIM)]
    DimensionUnsupported(usize),

    #[error("grade {grade} out of range for dimension {dim}")]
    GradeOutOfRange { grade: usize, dim: usize },

    #[error("variable index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("expected a pure 1-vector")]
    NotAVector,

    #[error("polynomial is not homogeneous of the required degree")]
    NotHomogeneous,

    #[error("polynomial is not of pure grade {0}")]
    NotPureGrade(usize),

    #[error("polynomial depends on the last variable")]
    DependsOnLastVariable,

    #[error("compatibility condition violated: {0}")]
    Compatibility(String),

    #[error("nonzero imaginary part in real mode")]
    ImaginaryInRealMode,

    #[error("problem size {size} exceeds cap {cap}")]
    SizeCap { size: usize, cap: usize },

    #[error("cannot realify: {0}")]
    Realify(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
