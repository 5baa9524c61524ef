use thiserror::Error;

/// Errors surfaced by constructors and operations.
#[derive(Debug, Error)]
pub enum SchurError {
    #[error("invalid Cartan datum: {0}")]
    InvalidCartan(String),
    #[error("invalid root datum: {0}")]
    InvalidRootDatum(String),
    #[error("unsupported preset: {0}")]
    UnsupportedPreset(String),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("weight is not dominant: {0:?}")]
    NotDominant(Vec<i64>),
    #[error("weight not in the orbit set: {0:?}")]
    NotInOrbitSet(Vec<i64>),
    #[error("inexact division in Laurent arithmetic")]
    InexactDivision,
    #[error("half-integral pairing value on the quantized path")]
    HalfIntegralExponent,
    #[error("basis choice not available: {0}")]
    BadBasis(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("matrix oracle: {0}")]
    Oracle(String),
    #[error("empty saturated set")]
    EmptyPi,
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, SchurError>;
