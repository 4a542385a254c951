//! Partitioning a non-tight frame with lower bound at least 1.
//!
//! The frame is mapped through sqrt(A_0) T^{-1/2}, which produces a tight
//! frame with bound A_0 and vectors still in the unit ball. The tight
//! reduction partitions that frame; the same index partition applied to the
//! original vectors has parts with lower bound at least 1 and upper bound at
//! most B* B_0 / A_0.

use crate::consts::global_upper_bound;
use crate::error::PartitionError;
use crate::reduce::{reduce_tight_frame_with, PartitionResult, ReduceConfig};
use frameforge_core::{frame_bounds, frame_operator, Frame};

pub fn partition_general_frame(frame: &Frame) -> Result<PartitionResult, PartitionError> {
    partition_general_frame_with(frame, &ReduceConfig::default())
}

pub fn partition_general_frame_with(
    frame: &Frame,
    cfg: &ReduceConfig,
) -> Result<PartitionResult, PartitionError> {
    let b = frame_bounds(frame);
    let (a0, b0) = (b.lower, b.upper);
    if a0 < 1.0 - cfg.tolerance {
        return Err(PartitionError::InvalidInput(format!(
            "lower frame bound must be at least 1, got {a0:.9}"
        )));
    }
    let max_sq = (0..frame.len()).map(|j| frame.weighted_sq_norm(j)).fold(0.0, f64::max);
    if max_sq > 1.0 + cfg.tolerance {
        return Err(PartitionError::InvalidInput(format!(
            "vectors must lie in the unit ball, largest weighted squared norm is {max_sq:.9}"
        )));
    }

    // A lower bound this close to 1 leaves no room to split: the transformed
    // tight bound would not exceed 1. The frame is already one valid part.
    if a0 <= 1.0 + cfg.tolerance {
        let result = PartitionResult {
            parts: vec![(0..frame.len()).collect()],
            per_part_bounds: vec![b],
            certificate: Vec::new(),
        };
        return Ok(result);
    }

    let t = frame_operator(frame);
    let w = t.inv_sqrt(cfg.tolerance).map_err(PartitionError::Frame)?
        * frameforge_core::C64::new(a0.sqrt(), 0.0);
    let transformed = frame.apply_matrix(&w).map_err(PartitionError::Frame)?;
    let reduced = reduce_tight_frame_with(&transformed, cfg)?;

    // same index partition, bounds re-verified on the original vectors
    let mut per_part_bounds = Vec::with_capacity(reduced.parts.len());
    let upper_cap = global_upper_bound() * b0 / a0;
    for part in &reduced.parts {
        let pb = frame_bounds(&frame.subframe(part).map_err(PartitionError::Frame)?);
        if pb.lower < 1.0 - cfg.tolerance {
            return Err(PartitionError::Numerical(format!(
                "part {part:?} has lower bound {:.9} < 1 in original coordinates",
                pb.lower
            )));
        }
        if pb.upper > upper_cap * (1.0 + cfg.tolerance) {
            return Err(PartitionError::Numerical(format!(
                "part {part:?} has upper bound {:.9} above B* B_0/A_0 = {upper_cap:.6}",
                pb.upper
            )));
        }
        per_part_bounds.push(pb);
    }

    Ok(PartitionResult { parts: reduced.parts, per_part_bounds, certificate: reduced.certificate })
}
