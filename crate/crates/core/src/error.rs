use thiserror::Error;

use crate::exact::Rat;
use crate::oracle::OracleError;

/// Errors raised anywhere in the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),

    #[error("zero polynomial")]
    ZeroPolynomial,

    #[error("polynomial is not squarefree")]
    NotSquarefree,

    #[error("matrix is invertible, no kernel")]
    Invertible,

    #[error("kernel has dimension {0}, expected 1")]
    KernelTooLarge(usize),

    #[error("division by a quantity that may vanish")]
    DivisionByZero,

    #[error("square root of a negative quantity")]
    NegativeSqrt,

    /// A sign or nonzero test could not be decided at the current working
    /// precision. Callers retry at a higher precision.
    #[error("undecided at {0} bits")]
    Uncertain(u32),

    #[error("precision cap of {0} bits exhausted")]
    PrecisionExhausted(u32),

    #[error("hypothesis H violated: {0}")]
    Hypothesis(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("no real common zero: {witness} Q0 + Q1 is definite")]
    RealInsolvable { witness: Rat },

    #[error(transparent)]
    Oracle(#[from] OracleError),

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
