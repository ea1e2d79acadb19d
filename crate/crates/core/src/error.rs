use crate::field::ScalarError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Structure data with inconsistent sizes or out-of-range indices.
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    /// A precondition on the input failed.
    #[error("invalid input: {0}")]
    Input(String),
    /// A consistency check that holds on every valid input failed.
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error("format error: {0}")]
    Format(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

pub type Result<T> = std::result::Result<T, Error>;
