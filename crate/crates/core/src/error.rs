use thiserror::Error;

/// Errors raised by the library. Verification failures are never errors;
/// they are reported in the returned report structures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("variable a{index} out of range for arity {arity}")]
    VariableOutOfRange { index: usize, arity: usize },

    #[error("sequence must be non-empty")]
    EmptySequence,

    #[error("Pfaffian requires an even dimension, got {0}")]
    OddDimension(usize),

    #[error("matrix is not skew-symmetric at entry ({row}, {col})")]
    NotSkewSymmetric { row: usize, col: usize },

    #[error("matrix dimension {dim} is below the minimum {min}")]
    DimensionTooSmall { dim: usize, min: usize },

    #[error("{what} = {value} exceeds the practical bound {bound}")]
    TooLarge {
        what: &'static str,
        value: usize,
        bound: usize,
    },

    #[error("invalid triangulation: {0}")]
    InvalidTriangulation(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("not enough sequence entries: need {need}, got {got}")]
    InsufficientSequence { need: usize, got: usize },

    #[error("cannot determine C_{index}: cofactor continuant K_{k} of the leading entries vanishes")]
    VanishingCofactor { index: usize, k: usize },

    #[error("malformed JSON: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
