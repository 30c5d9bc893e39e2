use thiserror::Error;

/// Errors raised by field construction, polynomial arithmetic and the decoders.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("extension degree {0} is outside the supported range 2..=16")]
    UnsupportedDegree(u32),
    #[error("defining polynomial {poly:#x} does not have degree {m} with constant term 1")]
    DegreeMismatch { m: u32, poly: u32 },
    #[error("defining polynomial {0:#x} is not primitive")]
    NonPrimitivePolynomial(u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial division leaves a nonzero remainder")]
    InexactDivision,
    #[error("duplicate abscissa {0} in interpolation data")]
    DuplicateAbscissa(u16),
    #[error("expected {expected} points, got {got}")]
    WrongCount { expected: usize, got: usize },
    #[error("message degree {degree} is not below k = {k}")]
    DegreeTooHigh { degree: usize, k: usize },
    #[error("fewer than k = {k} eligible distinct x-coordinates ({available} available)")]
    TooManyErasures { k: usize, available: usize },
    #[error("instance too large for the brute-force oracle ({0} constraints)")]
    InstanceTooLarge(usize),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
