use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FramoidError {
    #[error("generator {symbol} out of range for n={n}")]
    IndexOutOfRange { symbol: String, n: usize },

    #[error("operands disagree: {0}")]
    Mismatch(String),

    #[error("closure exceeded cap of {cap} elements")]
    CapExceeded { cap: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("diagram is not a planar matching")]
    NotPlanar,

    #[error("diagram does not fit the requested normal form: {0}")]
    VariantMismatch(String),
}

pub type Result<T> = std::result::Result<T, FramoidError>;
