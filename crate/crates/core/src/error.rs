use thiserror::Error;

/// Errors raised by the library. Each variant names the precondition that
/// was violated so that callers can surface it verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not a prime")]
    NotPrime(u64),
    #[error("operation requires an odd characteristic, got p = 2")]
    CharacteristicTwo,
    #[error("operation requires the binary field, got p = {0}")]
    NotBinary(u32),
    #[error("field mismatch: GF({0}) vs GF({1})")]
    FieldMismatch(u32, u32),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("code is not LCD")]
    NotLcd,
    #[error("dimension k = {k} is degenerate for length n = {n} (need 0 < k < n)")]
    DegenerateDimension { n: usize, k: usize },
    #[error("LCD codes of different types: {0} vs {1}")]
    TypeMismatch(String, String),
    #[error("type {ty} does not exist for n = {n}, k = {k}: {reason}")]
    TypeUnavailable {
        ty: String,
        n: usize,
        k: usize,
        reason: &'static str,
    },
    #[error("enumeration budget exceeded: {needed} items requested, budget is {budget}")]
    BudgetExceeded { needed: String, budget: u64 },
    #[error("coordinate {coord} out of range for length {n}")]
    CoordinateOutOfRange { coord: usize, n: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("transform does not preserve the Gram matrix of the {0}")]
    FormNotPreserved(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
