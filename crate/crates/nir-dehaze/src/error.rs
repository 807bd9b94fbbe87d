use thiserror::Error;

/// Errors produced by the dehazing library.
#[derive(Debug, Error)]
pub enum Error {
    /// Two buffers that must share dimensions do not.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// An argument violates an operation's precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A configuration value violates its documented invariant.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// The regularized regression system has no unique solution.
    #[error("degenerate regression system: {0}")]
    DegenerateSystem(String),

    /// The quadratic subproblem has a singular normal matrix.
    #[error("singular linear system: {0}")]
    SingularSystem(String),
}

pub type Result<T> = std::result::Result<T, Error>;
