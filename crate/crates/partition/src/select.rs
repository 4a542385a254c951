//! Part selection by weighted trace. The trace of a part's operator equals
//! its vectors' weighted squared norms, and the parts with the smallest
//! traces inherit a Bessel bound of C N/(M+1-K) from the whole frame's
//! bound C. Selecting by trace at several levels at once (halving the
//! candidate set per level) gives the 4^p C_p N_p / M guarantee.

use crate::error::PartitionError;
use crate::scratch::{lambda_max, RealEmbedding};
use frameforge_core::{frame_bounds, Frame};

#[derive(Clone, Debug)]
pub struct SelectedParts {
    /// chosen part indices, ascending
    pub chosen: Vec<usize>,
    /// weighted trace of every part
    pub traces: Vec<f64>,
    /// the certified Bessel bound C N/(M+1-K) for the chosen parts
    pub bessel_bound: f64,
}

fn validate_parts(len: usize, parts: &[Vec<usize>]) -> Result<(), PartitionError> {
    let mut seen = vec![false; len];
    for (p, part) in parts.iter().enumerate() {
        for &j in part {
            if j >= len {
                return Err(PartitionError::InvalidInput(format!(
                    "part {p} refers to index {j}, frame has {len} vectors"
                )));
            }
            if seen[j] {
                return Err(PartitionError::InvalidInput(format!(
                    "index {j} appears in more than one part"
                )));
            }
            seen[j] = true;
        }
    }
    if let Some(j) = seen.iter().position(|s| !s) {
        return Err(PartitionError::InvalidInput(format!(
            "index {j} is not covered by any part"
        )));
    }
    Ok(())
}

fn part_traces(frame: &Frame, parts: &[Vec<usize>]) -> Vec<f64> {
    parts
        .iter()
        .map(|part| part.iter().map(|&j| frame.weighted_sq_norm(j)).sum())
        .collect()
}

/// Indices of the `k` smallest values, ties to the lowest index; result
/// ascending.
fn k_smallest(values: &[f64], candidates: &[usize], k: usize) -> Vec<usize> {
    let mut order: Vec<usize> = candidates.to_vec();
    order.sort_by(|&a, &b| values[a].partial_cmp(&values[b]).unwrap().then(a.cmp(&b)));
    let mut chosen = order[..k].to_vec();
    chosen.sort_unstable();
    chosen
}

pub fn select_low_trace_parts(
    frame: &Frame,
    parts: &[Vec<usize>],
    k: usize,
) -> Result<SelectedParts, PartitionError> {
    let m = parts.len();
    if k == 0 || k >= m {
        return Err(PartitionError::InvalidInput(format!(
            "need 1 <= K < M, got K={k} with M={m} parts"
        )));
    }
    validate_parts(frame.len(), parts)?;

    let traces = part_traces(frame, parts);
    let all: Vec<usize> = (0..m).collect();
    let chosen = k_smallest(&traces, &all, k);

    let c = frame_bounds(frame).upper;
    let bound = c * frame.dim() as f64 / (m + 1 - k) as f64;
    let emb = RealEmbedding::from_frame(frame);
    for &p in &chosen {
        let bessel = lambda_max(&emb.operator_of(parts[p].iter().copied()));
        if bessel > bound * (1.0 + 1e-9) + 1e-12 {
            return Err(PartitionError::Numerical(format!(
                "part {p} has Bessel {bessel:.9}, above the trace bound {bound:.9}"
            )));
        }
    }
    Ok(SelectedParts { chosen, traces, bessel_bound: bound })
}

#[derive(Clone, Debug)]
pub struct MultiLevelSelection {
    /// the selected part
    pub part: usize,
    /// per frame: (verified Bessel of the part, allowed 4^p C_p N_p / M)
    pub certificates: Vec<(f64, f64)>,
}

/// Halves the candidate part set once per frame, keeping the parts with the
/// smallest traces for that frame, then returns the lowest-index survivor.
/// Every frame p (1-based) certifies its part against 4^p C_p N_p / M.
pub fn multi_level_select(
    frames: &[Frame],
    parts: &[Vec<usize>],
) -> Result<MultiLevelSelection, PartitionError> {
    if frames.is_empty() {
        return Err(PartitionError::InvalidInput("need at least one frame".into()));
    }
    let len = frames[0].len();
    for (p, f) in frames.iter().enumerate() {
        if f.len() != len {
            return Err(PartitionError::InvalidInput(format!(
                "frame {p} has {} vectors, expected {len} (index ranges must align)",
                f.len()
            )));
        }
    }
    if parts.is_empty() {
        return Err(PartitionError::InvalidInput("need at least one part".into()));
    }
    validate_parts(len, parts)?;

    let m = parts.len();
    let mut remaining: Vec<usize> = (0..m).collect();
    for frame in frames {
        let r = remaining.len();
        if r < 2 {
            break;
        }
        let even = if r % 2 == 0 { r } else { r - 1 };
        let traces = part_traces(frame, parts);
        remaining = k_smallest(&traces, &remaining, even / 2);
    }
    let part = remaining[0];

    let mut certificates = Vec::with_capacity(frames.len());
    for (p, frame) in frames.iter().enumerate() {
        let c = frame_bounds(frame).upper;
        let allowed = 4f64.powi(p as i32 + 1) * c * frame.dim() as f64 / m as f64;
        let emb = RealEmbedding::from_frame(frame);
        let bessel = lambda_max(&emb.operator_of(parts[part].iter().copied()));
        if bessel > allowed * (1.0 + 1e-9) + 1e-12 {
            return Err(PartitionError::Numerical(format!(
                "frame {p}: part {part} has Bessel {bessel:.9}, above 4^p C N/M = {allowed:.9}"
            )));
        }
        certificates.push((bessel, allowed));
    }
    Ok(MultiLevelSelection { part, certificates })
}
