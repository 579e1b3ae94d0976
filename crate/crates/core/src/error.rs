use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Operands belong to different rings, or an element does not fit its ring.
    #[error("descriptor mismatch: {0}")]
    DescriptorMismatch(String),

    #[error("invalid ring descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// A documented precondition of an operation does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// A configured search or work budget was exhausted.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// An invariant that the library guarantees was violated. Always a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }
}
