use thiserror::Error;

use crate::form::AltForm;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("unknown form `{0}`")]
    UnknownForm(String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("invalid rational `{0}`")]
    InvalidRational(String),
    #[error("expected a 1-form, found {0}")]
    NotOneForm(String),
    #[error("matrix is not skew-symmetric")]
    NotSkew,
    #[error("input is not in the fiber span(e0, e1, e2, e3)")]
    NonFiber,
    #[error("characteristic connection requires cocalibration")]
    NotCocalibrated,
    #[error("Λ³₇ component present: {0}")]
    Lambda7Component(AltForm),
    #[error("coefficients contain Riemann symbols; only constant-coefficient forms can be differentiated")]
    NonConstantCoefficients,
    #[error("requires {0}")]
    Precondition(String),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("l out of range: {0} (supported 4..=9)")]
    OutOfRange(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
