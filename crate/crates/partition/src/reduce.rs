//! Recursive reduction of a tight frame into parts with uniformly bounded
//! frame-bound ratio.
//!
//! A tight frame with bound B >= 200 is Parseval-normalized and split in
//! two against the level target 1/2 + sqrt(2)/sqrt(B) + 1/B. Each side then
//! has (in the normalized coordinates) an upper bound at most the target and
//! a lower bound at least 1 minus the target, so in the original coordinates
//! its bounds shrink by those factors. The nominal bound follows
//! B' = B/2 - sqrt(2 B) - 1 and the recursion continues on both sides until
//! the nominal bound lands in [79, 200). Three inequalities are re-verified
//! numerically at every step:
//!  (1) the composite normalizing transform S satisfies ||S||^2 <= 1/B',
//!  (2) each side's normalized upper bound is at most the level target,
//!  (3) each side's normalized lower bound is at least 1 minus the target.

use crate::consts::{global_upper_bound, level_target, next_level_bound, ratio_limit, STOP_HIGH};
use crate::error::PartitionError;
use crate::mss::{exact_two_partition_with_limit, heuristic_two_partition};
use frameforge_core::json::fmt_f64;
use frameforge_core::tol::DEFAULT_CERT_TOL;
use frameforge_core::{frame_bounds, frame_operator, CMatrix, Frame, FrameBounds};
use std::fmt::Write as _;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitMethod {
    Exact,
    Heuristic,
}

impl SplitMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            SplitMethod::Exact => "exact",
            SplitMethod::Heuristic => "heuristic",
        }
    }
}

/// One recorded split. `b_m` is the nominal bound of the level being split,
/// `target` its Bessel target in normalized coordinates, and the achieved
/// values are the verified upper bounds of the two sides there.
#[derive(Clone, Debug)]
pub struct PartitionStep {
    pub level: usize,
    pub b_m: f64,
    pub target: f64,
    pub achieved_left: f64,
    pub achieved_right: f64,
    pub method: SplitMethod,
}

#[derive(Clone, Debug)]
pub struct PartitionResult {
    pub parts: Vec<Vec<usize>>,
    pub per_part_bounds: Vec<FrameBounds>,
    pub certificate: Vec<PartitionStep>,
}

#[derive(Clone, Copy, Debug)]
pub struct ReduceConfig {
    pub exhaustive_limit: usize,
    pub tolerance: f64,
}

impl Default for ReduceConfig {
    fn default() -> Self {
        ReduceConfig { exhaustive_limit: crate::mss::DEFAULT_EXHAUSTIVE_LIMIT, tolerance: DEFAULT_CERT_TOL }
    }
}

pub fn reduce_tight_frame(frame: &Frame) -> Result<PartitionResult, PartitionError> {
    reduce_tight_frame_with(frame, &ReduceConfig::default())
}

pub fn reduce_tight_frame_with(
    frame: &Frame,
    cfg: &ReduceConfig,
) -> Result<PartitionResult, PartitionError> {
    let b = frame_bounds(frame);
    if b.upper - b.lower > cfg.tolerance * b.upper.max(1.0) {
        return Err(PartitionError::InvalidInput(format!(
            "frame is not tight within {:.3e}: bounds ({:.9}, {:.9})",
            cfg.tolerance, b.lower, b.upper
        )));
    }
    let max_sq = (0..frame.len()).map(|j| frame.weighted_sq_norm(j)).fold(0.0, f64::max);
    if max_sq > 1.0 + cfg.tolerance {
        return Err(PartitionError::InvalidInput(format!(
            "vectors must lie in the unit ball, largest weighted squared norm is {max_sq:.9}"
        )));
    }
    let b0 = b.lower;
    if b0 <= 1.0 {
        return Err(PartitionError::InvalidInput(format!(
            "tight bound must exceed 1, got {b0:.9}"
        )));
    }

    let mut result = PartitionResult {
        parts: Vec::new(),
        per_part_bounds: Vec::new(),
        certificate: Vec::new(),
    };

    if b0 < STOP_HIGH {
        // already in or below the stop band: a single part
        result.parts.push((0..frame.len()).collect());
        result.per_part_bounds.push(b);
    } else {
        let t = frame_operator(frame);
        let r = t.inv_sqrt(cfg.tolerance).map_err(PartitionError::Frame)?;
        let y = frame.apply_matrix(&r).map_err(PartitionError::Frame)?;
        let indices: Vec<usize> = (0..frame.len()).collect();
        split_recursive(frame, &indices, &y, &r, 0, b0, cfg, &mut result)?;
    }

    verify_leaves(frame, &result, b0, cfg)?;
    Ok(result)
}

/// Splits one node of the recursion tree and descends into both sides.
#[allow(clippy::too_many_arguments)]
fn split_recursive(
    original: &Frame,
    indices: &[usize],
    y: &Frame,
    s_composite: &CMatrix,
    level: usize,
    b_m: f64,
    cfg: &ReduceConfig,
    out: &mut PartitionResult,
) -> Result<(), PartitionError> {
    let target = level_target(b_m);
    let slack = cfg.tolerance * target.max(1.0);

    let (split, method) = if y.len() <= cfg.exhaustive_limit {
        let p = exact_two_partition_with_limit(y, cfg.exhaustive_limit)?;
        (p, SplitMethod::Exact)
    } else {
        match heuristic_two_partition(y, target + slack)? {
            crate::mss::HeuristicOutcome::Certified(p) => (p, SplitMethod::Heuristic),
            crate::mss::HeuristicOutcome::CertificateFailure { best, target } => {
                return Err(PartitionError::PartitionFailure {
                    level,
                    target,
                    achieved: best.achieved,
                    trail: out.certificate.clone(),
                })
            }
        }
    };
    if split.achieved > target + slack {
        return Err(PartitionError::PartitionFailure {
            level,
            target,
            achieved: split.achieved,
            trail: out.certificate.clone(),
        });
    }
    if split.left.is_empty() || split.right.is_empty() {
        return Err(PartitionError::PartitionFailure {
            level,
            target,
            achieved: split.achieved,
            trail: out.certificate.clone(),
        });
    }
    out.certificate.push(PartitionStep {
        level,
        b_m,
        target,
        achieved_left: split.achieved_left,
        achieved_right: split.achieved_right,
        method,
    });

    let b_next = next_level_bound(b_m);
    for side in [&split.left, &split.right] {
        descend(original, indices, y, s_composite, side, level, b_m, b_next, cfg, out)?;
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn descend(
    original: &Frame,
    indices: &[usize],
    y: &Frame,
    s_composite: &CMatrix,
    side: &[usize],
    level: usize,
    b_m: f64,
    b_next: f64,
    cfg: &ReduceConfig,
    out: &mut PartitionResult,
) -> Result<(), PartitionError> {
    let target = level_target(b_m);
    let tol = cfg.tolerance;
    let child_global: Vec<usize> = side.iter().map(|&p| indices[p]).collect();
    let child_y = y.subframe(side).map_err(PartitionError::Frame)?;
    let t_child = frame_operator(&child_y);
    let (lo, hi) = t_child.eigen_bounds();

    // (2): normalized upper bound within the level target
    if hi > target * (1.0 + tol) + tol {
        return Err(PartitionError::Numerical(format!(
            "level {level}: side upper bound {hi:.9} exceeds target {target:.9}"
        )));
    }
    // (3): normalized lower bound at least 1 - target
    let floor = 1.0 - target;
    if lo < floor * (1.0 - tol) - tol {
        return Err(PartitionError::Numerical(format!(
            "level {level}: side lower bound {lo:.9} fell below {floor:.9}"
        )));
    }

    let r = t_child.inv_sqrt(tol).map_err(PartitionError::Frame)?;
    let s_child = &r * s_composite;
    // (1): composite transform norm within the next nominal bound
    let smax = s_child.clone().singular_values().max();
    if smax * smax > (1.0 / b_next) * (1.0 + tol) + tol * tol {
        return Err(PartitionError::Numerical(format!(
            "level {level}: squared transform norm {:.3e} exceeds 1/B' = {:.3e}",
            smax * smax,
            1.0 / b_next
        )));
    }

    if b_next >= STOP_HIGH {
        let next_y = child_y.apply_matrix(&r).map_err(PartitionError::Frame)?;
        split_recursive(original, &child_global, &next_y, &s_child, level + 1, b_next, cfg, out)?;
    } else {
        let sub = original.subframe(&child_global).map_err(PartitionError::Frame)?;
        out.parts.push(child_global);
        out.per_part_bounds.push(frame_bounds(&sub));
    }
    Ok(())
}

/// Every part of a certified result is re-verified in original coordinates:
/// lower bound at least 1, upper bound at most the global constant, ratio at
/// most the series limit.
fn verify_leaves(
    _frame: &Frame,
    result: &PartitionResult,
    b0: f64,
    cfg: &ReduceConfig,
) -> Result<(), PartitionError> {
    let tol = cfg.tolerance;
    let upper_cap = global_upper_bound();
    let ratio_cap = ratio_limit();
    for (part, b) in result.parts.iter().zip(&result.per_part_bounds) {
        if b.lower < 1.0 - tol {
            return Err(PartitionError::Numerical(format!(
                "part {part:?} has lower bound {:.9} < 1",
                b.lower
            )));
        }
        if b.upper > upper_cap * (1.0 + tol) {
            return Err(PartitionError::Numerical(format!(
                "part {part:?} has upper bound {:.9} above the global constant {upper_cap:.6}",
                b.upper
            )));
        }
        if b0 >= crate::consts::STOP_LOW && b.ratio() > ratio_cap * (1.0 + tol) {
            return Err(PartitionError::Numerical(format!(
                "part {part:?} has bound ratio {:.9} above the series limit {ratio_cap:.6}",
                b.ratio()
            )));
        }
    }
    Ok(())
}

/// Deterministic JSON for a partition result:
/// `{"parts":[[..]],"bounds":[[A,B],..],"certificate":[{..}]}`.
pub fn partition_result_to_json(result: &PartitionResult) -> String {
    let mut s = String::from("{\"parts\":[");
    for (i, part) in result.parts.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        s.push('[');
        for (k, j) in part.iter().enumerate() {
            if k > 0 {
                s.push(',');
            }
            let _ = write!(s, "{j}");
        }
        s.push(']');
    }
    s.push_str("],\"bounds\":[");
    for (i, b) in result.per_part_bounds.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        let _ = write!(s, "[{},{}]", fmt_f64(b.lower), fmt_f64(b.upper));
    }
    s.push_str("],\"certificate\":[");
    for (i, st) in result.certificate.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        let _ = write!(
            s,
            "{{\"level\":{},\"B_m\":{},\"target\":{},\"achieved_left\":{},\"achieved_right\":{},\"method\":\"{}\"}}",
            st.level,
            fmt_f64(st.b_m),
            fmt_f64(st.target),
            fmt_f64(st.achieved_left),
            fmt_f64(st.achieved_right),
            st.method.as_str()
        );
    }
    s.push_str("]}");
    s
}
