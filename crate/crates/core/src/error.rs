use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported size: {0}")]
    Size(String),

    /// `position` is a 1-based character column in the input text.
    #[error("parse error at column {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("profile does not match the domain: {0}")]
    Mismatch(String),

    #[error("index {index} out of range for a domain of {total} profiles")]
    OutOfRange { index: u64, total: u64 },

    #[error("configuration error: {0}")]
    Config(String),

    #[error("diagnostic precondition failed: {0}")]
    Diagnostic(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}
