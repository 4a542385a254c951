use thiserror::Error;

/// Errors for frame construction and certified operations.
#[derive(Debug, Error)]
pub enum FrameError {
    /// Structurally malformed input (dimensions, weights, non-finite values,
    /// field mismatches).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The vectors do not span, or the lower frame bound sits at or below the
    /// working tolerance, so operations requiring invertibility are refused.
    #[error("not a frame: lower bound {lower:.6e} at or below tolerance {tolerance:.6e}")]
    NotAFrame { lower: f64, tolerance: f64 },

    /// A numeric post-condition that should hold mathematically failed beyond
    /// tolerance (eigensolver breakdown, conditioning).
    #[error("numerical failure: {0}")]
    NumericalFailure(String),
}
