use thiserror::Error;

/// Errors raised by the library. Every variant is a domain error: the input
/// was well-typed but violates a precondition of the requested operation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("basis mismatch: {0}")]
    BasisMismatch(String),

    #[error("element is not in the peak algebra: nonzero residual at M[{0}]")]
    NotInPeakAlgebra(String),

    #[error("element is not symmetric: coefficients differ across the class of {0}")]
    NotSymmetric(String),

    #[error("element is not in the span of the requested basis")]
    NotInSpan,

    #[error("oracle size {size} exceeds the configured cap {cap}")]
    OracleTooLarge { size: u128, cap: u128 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Invalid(msg.into()))
}
