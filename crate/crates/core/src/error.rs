use thiserror::Error;

/// Errors raised by the exact engine.
///
/// Verification failures are never reported through this type; they are
/// entries in a suite report. An `Error` means the inputs violated a
/// precondition, or an internal exactness check tripped.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero rational function")]
    DivisionByZero,
    #[error("pole at n = {0}")]
    Pole(i64),
    #[error("duplicate abscissa n = {0}")]
    DuplicateAbscissa(i64),
    #[error("interpolating polynomial has degree {degree}, above the cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },
    #[error("empty input: {0}")]
    Empty(&'static str),
    #[error("zero polynomial passed to {0}")]
    ZeroPolynomial(&'static str),
    #[error("polynomial degree {degree} is below the required minimum {min}")]
    DegreeTooSmall { degree: usize, min: usize },
    #[error("inexact division in {0}")]
    InexactDivision(&'static str),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("insufficient samples: {0}")]
    InsufficientSamples(String),
    #[error("certificate rejected: {0}")]
    InvalidCertificate(String),
    #[error("internal exactness check failed: {0}")]
    Internal(&'static str),
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
