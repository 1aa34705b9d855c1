use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A polytope offered as a norm body fails the body invariants
    /// (origin symmetry, origin interior within its span).
    #[error("invalid norm body: {0}")]
    InvalidBody(String),

    /// Input admits no meaningful answer (all points equal, zero diameter).
    #[error("degenerate configuration: {0}")]
    DegenerateConfiguration(String),

    /// A verifier instance violates its structural preconditions
    /// (e.g. a packing piece sticking out of the container).
    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    /// Constructor parameters outside the documented domain.
    #[error("invalid construction parameters: {0}")]
    InvalidSpec(String),

    #[error("index {index} out of range for {len} points")]
    IndexOutOfRange { index: usize, len: usize },

    /// Input exceeds the documented desk-scale limits of an operation.
    #[error("input too large: {0}")]
    TooLarge(String),

    /// An internal cross-check failed. This is a bug, never a user error.
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
