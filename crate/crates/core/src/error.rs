use thiserror::Error;

use crate::closed_form::ConstraintViolation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("an omega sequence needs at least 2 entries, got {0}")]
    TooShort(usize),
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("indices must satisfy {lo} < {hi} (got {lo} >= {hi})")]
    Unordered { lo: usize, hi: usize },
    #[error("omega-product indices must satisfy a <= b, got a={a}, b={b}")]
    ReversedProduct { a: usize, b: usize },
    #[error("generator pair belongs to N={found}, expected N={expected}")]
    MismatchedN { expected: usize, found: usize },
    #[error("sequence is not standardized (entries must be -1, 0 or 1)")]
    NotStandardized,
    #[error("omega_{0} is nonzero; no semidirect split at that position")]
    NoSplit(usize),
    #[error("structure table violates the Jacobi identity on {0} triple(s)")]
    NotALieAlgebra(usize),
    #[error("coefficient {0} does not exist for this N")]
    UnknownCoefficient(String),
    #[error("extension constraints violated: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Constraints(Vec<ConstraintViolation>),
    #[error("N={n} exceeds the supported maximum {limit}")]
    DisplayLimit { n: usize, limit: usize },
}
