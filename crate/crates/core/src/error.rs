use thiserror::Error;

use crate::exactmath::UniPoly;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityError { expected: usize, got: usize },

    #[error("zero polynomial has no well-defined roots")]
    ZeroPolynomial,

    #[error("shape error: {0}")]
    ShapeError(String),

    #[error("characteristic polynomial does not split over Q; unfactored part: {unfactored}")]
    NonSplitSpectrum { unfactored: UniPoly },

    #[error("map is not a Leibniz-derivation of order {order}")]
    NotADerivation { order: usize },

    #[error("algebra is not nilpotent")]
    NotNilpotent,

    #[error("subspace is not an ideal")]
    NotAnIdeal,

    #[error("Leibniz identity fails at basis triple ({0}, {1}, {2})")]
    IdentityViolation(usize, usize, usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
