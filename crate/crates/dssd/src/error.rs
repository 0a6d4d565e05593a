use thiserror::Error;

/// Error taxonomy shared by every module in the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Tensor or box dimensions do not admit the requested operation.
    #[error("shape error: {0}")]
    Shape(String),
    /// A NaN or infinity appeared where only finite values are allowed.
    #[error("numeric error: {0}")]
    Numeric(String),
    /// A configuration or spec is internally inconsistent.
    #[error("spec error: {0}")]
    Spec(String),
    /// An on-disk artifact is malformed (bad magic, version, CRC, truncation).
    #[error("format error: {0}")]
    Format(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }
    pub fn numeric(msg: impl Into<String>) -> Self {
        Error::Numeric(msg.into())
    }
    pub fn spec(msg: impl Into<String>) -> Self {
        Error::Spec(msg.into())
    }
    pub fn format(msg: impl Into<String>) -> Self {
        Error::Format(msg.into())
    }
}
