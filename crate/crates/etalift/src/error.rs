use thiserror::Error;

/// Errors reported by fallible constructors and operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("extension degree must be at least 1")]
    ZeroExtension,
    #[error("field size {p}^{e} exceeds the supported maximum 2^20")]
    FieldTooLarge { p: u32, e: u32 },
    #[error("degree {d} out of range for field size {q}")]
    DegreeOutOfRange { d: i64, q: u32 },
    #[error("expected length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("index {index} out of range (dimension {dim})")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
