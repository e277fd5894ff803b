use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    InvalidPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field of {size} elements exceeds the enumeration cap of {cap}")]
    FieldTooLarge { size: String, cap: u64 },
    #[error("no irreducible polynomial of degree {degree} over F_{p} found")]
    NoIrreducible { p: u64, degree: usize },
    #[error("operation undefined for the zero element")]
    ZeroElement,
    #[error("elements belong to different fields or curves")]
    ContextMismatch,
    #[error("point does not lie on the curve")]
    NotOnCurve,
    #[error("denominator vanishes at the evaluation point")]
    PoleAtPoint,
    #[error("matrix is not invertible")]
    Singular,
    #[error("component {0} of a syzygy is not homogeneous")]
    NonHomogeneous(String),
    #[error("requested {requested} curve points, only {available} exist")]
    InsufficientPoints { requested: usize, available: usize },
    #[error("unknown check group {0:?}")]
    InvalidSelection(String),
    #[error("unknown report format {0:?}")]
    InvalidFormat(String),
    #[error("malformed report: {0}")]
    Parse(String),
    #[error("cannot write report: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
