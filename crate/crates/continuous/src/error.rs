use frameforge_core::{CMatrix, FrameError};
use frameforge_sampler::SamplerError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ContinuousError {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Dyadic refinement hit the per-box cell cap before successive operator
    /// estimates agreed. Carries the last two estimates for inspection.
    #[error(
        "quadrature did not converge within {cells} cells per box: \
         successive estimates still differ by {diff:.3e}"
    )]
    QuadratureFailure {
        cells: usize,
        diff: f64,
        estimates: Box<(CMatrix, CMatrix)>,
    },

    /// A discretization-side certificate failed on the constructed data.
    #[error("discretization failure: {0}")]
    DiscretizationFailure(String),

    #[error("not a continuous frame: operator lower bound {lower:.3e} (tolerance {tolerance:.1e})")]
    NotAContinuousFrame { lower: f64, tolerance: f64 },

    #[error(transparent)]
    Frame(#[from] FrameError),

    #[error(transparent)]
    Sampler(#[from] SamplerError),
}

pub type Result<T> = std::result::Result<T, ContinuousError>;
