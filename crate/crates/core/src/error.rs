use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("operands belong to different fields: GF({0}) and GF({1})")]
    MixedFields(u64, u64),

    #[error("division by zero")]
    DivisionByZero,

    #[error("usage error: {0}")]
    Usage(String),

    /// The period does not factor as q^n p^m.
    #[error("shape error: {0}")]
    Shape(String),

    /// A standing assumption of the fast algorithms does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Violated internal invariant; indicates a bug.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
