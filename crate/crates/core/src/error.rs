use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported field: {0}")]
    UnsupportedField(String),
    #[error("not positive definite: {0}")]
    NotPositiveDefinite(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("not closed: {0}")]
    NotClosed(String),
    #[error("spectrum incomplete: {0}")]
    SpectrumIncomplete(String),
    #[error("not an isometry: {0}")]
    NotIsometry(String),
    #[error("search cap exceeded: {0}")]
    CapExceeded(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
