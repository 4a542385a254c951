//! Subset extraction from a tight frame of short vectors.
//!
//! For a tight frame of vectors with weighted norm at most 1/N and bound
//! above 1, the scaled copies (N x_j) form a tight frame in the unit ball.
//! That frame is partitioned — first by the bounded-ratio reduction, then by
//! further certified splits until every part's upper bound (in scaled
//! coordinates) is at most N; exactly repeated directions, where no strict
//! split certificate exists, are peeled greedily into directly verified
//! parts. Rescaling back, each part's upper bound is at most 1/N, so
//! greedily combining parts until the union's upper bound first reaches 1
//! yields a subset with upper bound at most 1 + 1/N, and the final bounds
//! check confirms the union spans.

use crate::error::PartitionError;
use crate::mss::{exact_two_partition_with_limit, heuristic_two_partition, HeuristicOutcome};
use crate::reduce::{reduce_tight_frame_with, PartitionStep, ReduceConfig, SplitMethod};
use frameforge_core::operator::{accumulate_outer, hermitian_eigen_range};
use frameforge_core::{frame_bounds, frame_operator, CMatrix, Frame, FrameBounds};

/// Acceptance slack for "upper bound reached 1" and for per-part caps.
const REL_SLACK: f64 = 1e-9;

#[derive(Clone, Debug)]
pub struct SubsetSelection {
    /// Sorted indices of the selected subset, into the input frame.
    pub indices: Vec<usize>,
    /// Eigen-verified bounds of the subset in the input coordinates.
    pub bounds: FrameBounds,
    /// The combined parts, in the order they were added.
    pub parts_used: Vec<Vec<usize>>,
    /// Bounds of each combined part in the input coordinates.
    pub part_bounds: Vec<FrameBounds>,
    /// Split trail: the reduction's steps followed by the refinement's.
    pub certificate: Vec<PartitionStep>,
}

pub fn subset_tight_frame(frame: &Frame, n: usize) -> Result<SubsetSelection, PartitionError> {
    subset_tight_frame_with(frame, n, &ReduceConfig::default())
}

pub fn subset_tight_frame_with(
    frame: &Frame,
    n: usize,
    cfg: &ReduceConfig,
) -> Result<SubsetSelection, PartitionError> {
    if n == 0 {
        return Err(PartitionError::InvalidInput("granularity must be at least 1".into()));
    }
    let nf = n as f64;
    let b = frame_bounds(frame);
    if b.upper - b.lower > cfg.tolerance * b.upper.max(1.0) {
        return Err(PartitionError::InvalidInput(format!(
            "frame is not tight within {:.3e}: bounds ({:.9}, {:.9})",
            cfg.tolerance, b.lower, b.upper
        )));
    }
    if b.lower <= 1.0 {
        return Err(PartitionError::InvalidInput(format!(
            "tight bound must exceed 1, got {:.9}",
            b.lower
        )));
    }
    let max_sq = (0..frame.len()).map(|j| frame.weighted_sq_norm(j)).fold(0.0, f64::max);
    if max_sq > (1.0 + cfg.tolerance) / (nf * nf) {
        return Err(PartitionError::InvalidInput(format!(
            "vectors must have weighted norm at most 1/{n}, largest squared norm is {max_sq:.9}"
        )));
    }

    let scaled = frame.scaled(nf).map_err(PartitionError::Frame)?;
    let reduced = reduce_tight_frame_with(&scaled, cfg)?;
    let mut certificate = reduced.certificate;

    // refine every part until its upper bound in scaled coordinates is <= n
    let mut parts: Vec<Vec<usize>> = Vec::new();
    for part in reduced.parts {
        refine_part(&scaled, part, nf, cfg, &mut certificate, &mut parts)?;
    }
    parts.sort_by_key(|p| p[0]);

    // combine in index order until the union's upper bound reaches 1; the
    // union's operator is accumulated incrementally so each step costs one
    // small eigensolve rather than a pass over the whole union
    let mut union: Vec<usize> = Vec::new();
    let mut parts_used = Vec::new();
    let mut part_bounds = Vec::new();
    let mut acc = CMatrix::zeros(frame.dim(), frame.dim());
    let mut running_upper = 0.0;
    for part in parts {
        let pb = frame_bounds(&frame.subframe(&part).map_err(PartitionError::Frame)?);
        for &j in &part {
            accumulate_outer(&mut acc, frame.vector(j), frame.weight(j));
        }
        union.extend_from_slice(&part);
        parts_used.push(part);
        part_bounds.push(pb);
        running_upper = hermitian_eigen_range(&acc).1;
        if running_upper >= 1.0 - REL_SLACK {
            break;
        }
    }
    if running_upper < 1.0 - REL_SLACK {
        return Err(PartitionError::Numerical(format!(
            "combined subset upper bound {running_upper:.9} never reached 1"
        )));
    }
    union.sort_unstable();
    let bounds = frame_bounds(&frame.subframe(&union).map_err(PartitionError::Frame)?);
    if bounds.upper > 1.0 + 1.0 / nf + cfg.tolerance {
        return Err(PartitionError::Numerical(format!(
            "combined subset upper bound {:.9} exceeds 1 + 1/{n}",
            bounds.upper
        )));
    }
    if bounds.lower <= 0.0 {
        return Err(PartitionError::Numerical(
            "combined subset is not a frame: lower bound vanished".into(),
        ));
    }

    Ok(SubsetSelection { indices: union, bounds, parts_used, part_bounds, certificate })
}

/// Splits `part` of `scaled` until its upper bound is at most `n`, keeping
/// every intermediate part full-rank (each split's achieved Bessel bound in
/// Parseval coordinates must stay below 1).
fn refine_part(
    scaled: &Frame,
    part: Vec<usize>,
    n: f64,
    cfg: &ReduceConfig,
    certificate: &mut Vec<PartitionStep>,
    out: &mut Vec<Vec<usize>>,
) -> Result<(), PartitionError> {
    let sub = scaled.subframe(&part).map_err(PartitionError::Frame)?;
    let (_, hi) = frame_operator(&sub).eigen_bounds();
    if hi <= n * (1.0 + REL_SLACK) {
        out.push(part);
        return Ok(());
    }

    let level = certificate.len();
    let t = frame_operator(&sub);
    let r = t.inv_sqrt(cfg.tolerance).map_err(PartitionError::Frame)?;
    let py = sub.apply_matrix(&r).map_err(PartitionError::Frame)?;
    let target = 1.0 - REL_SLACK;
    let (split, method) = if py.len() <= cfg.exhaustive_limit {
        (exact_two_partition_with_limit(&py, cfg.exhaustive_limit)?, SplitMethod::Exact)
    } else {
        match heuristic_two_partition(&py, target)? {
            HeuristicOutcome::Certified(p) => (p, SplitMethod::Heuristic),
            HeuristicOutcome::CertificateFailure { .. } => {
                orthogonal_peel(scaled, part, n, out);
                return Ok(());
            }
        }
    };
    if split.achieved >= target || split.left.is_empty() || split.right.is_empty() {
        // a split certificate needs strict progress, which exactly repeated
        // directions can never give (their best split achieves equality);
        // peel verified sub-parts greedily instead
        orthogonal_peel(scaled, part, n, out);
        return Ok(());
    }
    certificate.push(PartitionStep {
        level,
        b_m: hi,
        target,
        achieved_left: split.achieved_left,
        achieved_right: split.achieved_right,
        method,
    });
    for side in [&split.left, &split.right] {
        let child: Vec<usize> = side.iter().map(|&p| part[p]).collect();
        refine_part(scaled, child, n, cfg, certificate, out)?;
    }
    Ok(())
}

/// Greedy fallback for parts the certified split cannot shatter: repeatedly
/// scan the remainder, adding each vector whose inclusion keeps the running
/// upper bound at most `n`. Every emitted part carries a directly verified
/// bound, and a lone vector always fits, so the peel terminates.
fn orthogonal_peel(scaled: &Frame, part: Vec<usize>, n: f64, out: &mut Vec<Vec<usize>>) {
    let mut remaining = part;
    while !remaining.is_empty() {
        let mut acc = CMatrix::zeros(scaled.dim(), scaled.dim());
        let mut kept = Vec::new();
        let mut rest = Vec::new();
        for &j in &remaining {
            let mut cand = acc.clone();
            accumulate_outer(&mut cand, scaled.vector(j), scaled.weight(j));
            if kept.is_empty() || hermitian_eigen_range(&cand).1 <= n * (1.0 + REL_SLACK) {
                acc = cand;
                kept.push(j);
            } else {
                rest.push(j);
            }
        }
        out.push(kept);
        remaining = rest;
    }
}
