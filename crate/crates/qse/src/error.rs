use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum QseError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("matrix is not Hermitian: deviation {deviation:.3e} exceeds tolerance {tolerance:.3e}")]
    NotHermitian { deviation: f64, tolerance: f64 },

    #[error("validation failed: {0}")]
    Validation(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("file format error: {0}")]
    Format(String),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, QseError>;
