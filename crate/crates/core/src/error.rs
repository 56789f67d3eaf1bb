use thiserror::Error;

/// Errors surfaced by the exact and numeric computation layers.
#[derive(Debug, Error)]
pub enum Error {
    /// Two operands live in symmetric groups of different degrees.
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    /// A request exceeds a documented capacity guard.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// An argument violates a precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A matrix that must be inverted is singular; the message carries the
    /// pole explanation where one is known.
    #[error("singular matrix: {0}")]
    Singular(String),

    /// Analytic continuation failed: the phase step stayed too large after
    /// the maximum number of path subdivisions, so a zero is suspected on
    /// the integration path.
    #[error("zero suspected on path near z = {0}")]
    ZeroOnPath(num_complex::Complex64),
}

pub type Result<T> = std::result::Result<T, Error>;
