//! Error type for partition operations. A failed certificate is a reported
//! outcome, not a panic: the search machinery is existential in theory but
//! must verify everything it claims in practice.

use crate::reduce::PartitionStep;
use frameforge_core::FrameError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PartitionError {
    #[error(transparent)]
    Frame(#[from] FrameError),

    #[error("{0}")]
    InvalidInput(String),

    #[error("exhaustive search is limited to {limit} vectors, got {len}; use the heuristic")]
    UseHeuristic { len: usize, limit: usize },

    #[error(
        "partition failed at level {level}: best achieved Bessel {achieved:.6} exceeds target {target:.6}"
    )]
    PartitionFailure {
        level: usize,
        target: f64,
        achieved: f64,
        trail: Vec<PartitionStep>,
    },

    #[error("certified quantity escaped its envelope: {0}")]
    Numerical(String),
}
