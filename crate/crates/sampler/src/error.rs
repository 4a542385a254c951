use frameforge_core::FrameError;
use frameforge_partition::PartitionError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SamplerError {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    /// A block-decomposition inequality failed on the constructed data.
    #[error("decomposition failure at block {block}: {inequality}")]
    DecompositionFailure { block: usize, inequality: String },

    /// A sampling-pipeline certificate failed for one of the blocks.
    #[error("sampling failure at block {block}: {inequality}")]
    SamplingFailure { block: usize, inequality: String },

    #[error("numerical check failed: {0}")]
    Numerical(String),

    #[error(transparent)]
    Frame(#[from] FrameError),

    #[error(transparent)]
    Partition(#[from] PartitionError),
}
