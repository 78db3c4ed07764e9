use thiserror::Error;

use crate::module::Violation;

/// Errors raised by the algebra routines and the text-form parsers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("evaluation at t = 0 is undefined for Laurent polynomials")]
    ZeroPoint,
    #[error("operation requires a nonzero input")]
    ZeroInput,
    #[error("division by zero polynomial")]
    ZeroDivisor,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("zero modulus")]
    ZeroModulus,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix is not hermitian")]
    NotHermitian,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("no dual element exists: {0}")]
    NoSolution(String),
    #[error("invalid order: {0}")]
    InvalidOrder(String),
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("parity obstruction: {0}")]
    ParityObstruction(String),
    #[error("polynomials are not coprime")]
    NotCoprime,
    #[error("order vanishes at t = 1")]
    SingularAtOne,
    #[error("module is not realizable: {0:?}")]
    NotRealizable(Vec<Violation>),
    #[error("element is not a unit modulo the given ideal")]
    NotUnit,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("integer {0} has no factor below the trial-division bound and cannot be classified")]
    FactorBoundExceeded(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
