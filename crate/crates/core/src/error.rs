use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("index ({row}, {col}) out of range for dimension {n}")]
    IndexOutOfRange { row: usize, col: usize, n: usize },

    #[error("non-finite value at ({row}, {col})")]
    NonFiniteInput { row: usize, col: usize },

    #[error("malformed CSR structure: {0}")]
    MalformedCsr(String),

    #[error("row capacity arithmetic overflowed")]
    CapacityOverflow,

    #[error("row {row} needs {needed} slots but only {capacity} are allocated")]
    CapacityViolation {
        row: usize,
        needed: usize,
        capacity: usize,
    },

    #[error("accumulator must be empty before loading a row")]
    AccumulatorNotEmpty,

    #[error("accumulator is empty")]
    AccumulatorEmpty,

    #[error("non-finite value produced while eliminating row {row}")]
    NonFiniteValue { row: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("non-finite matrix norm")]
    NonFiniteNorm,

    #[error("ordinal range [{lo}, {hi}] invalid for dimension {n}")]
    OrdinalOutOfRange { lo: usize, hi: usize, n: usize },

    #[error("Jacobi iteration did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("integer overflow in exact determinant")]
    IntegerOverflow,

    #[error("matrix is not symmetric: {0}")]
    NotSymmetric(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unsupported Matrix Market variant: {0}")]
    Unsupported(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("{path}: {msg}")]
    Io { path: String, msg: String },
}
