//! Complement duality for subsets of a Parseval frame. The subset and its
//! complement share one frame operator identity (they sum to the identity),
//! which makes three superficially different statements about their bounds
//! stand or fall together. This check evaluates each statement numerically
//! and reports whether they agree.

use crate::error::PartitionError;
use frameforge_core::operator::hermitian_eigen_range;
use frameforge_core::{frame_bounds_with_tol, frame_operator, Frame};

#[derive(Clone, Copy, Debug)]
pub struct DualityReport {
    /// subset bounds lie in [delta, 1-delta]
    pub subset_in_band: bool,
    /// complement bounds lie in [delta, 1-delta]
    pub complement_in_band: bool,
    /// both sides are Bessel with bound 1-delta
    pub both_bessel: bool,
    /// the three statements agree
    pub equivalent: bool,
    pub subset_bounds: (f64, f64),
    pub complement_bounds: (f64, f64),
    pub delta: f64,
    pub tolerance: f64,
}

pub fn complement_duality_check(
    frame: &Frame,
    subset: &[usize],
    delta: f64,
    tolerance: f64,
) -> Result<DualityReport, PartitionError> {
    if delta <= 0.0 || !delta.is_finite() {
        return Err(PartitionError::InvalidInput(format!(
            "delta must be positive and finite, got {delta}"
        )));
    }
    let parseval = frame_bounds_with_tol(frame, tolerance);
    if (parseval.lower - 1.0).abs() > tolerance || (parseval.upper - 1.0).abs() > tolerance {
        return Err(PartitionError::InvalidInput(format!(
            "frame is not Parseval within {tolerance:.3e}: bounds ({:.6}, {:.6})",
            parseval.lower, parseval.upper
        )));
    }
    let mut seen = vec![false; frame.len()];
    for &j in subset {
        if j >= frame.len() {
            return Err(PartitionError::InvalidInput(format!(
                "subset index {j} out of range for {} vectors",
                frame.len()
            )));
        }
        if seen[j] {
            return Err(PartitionError::InvalidInput(format!("subset repeats index {j}")));
        }
        seen[j] = true;
    }
    let complement: Vec<usize> = (0..frame.len()).filter(|&j| !seen[j]).collect();

    let sb = side_bounds(frame, subset)?;
    let cb = side_bounds(frame, &complement)?;

    let in_band = |b: (f64, f64)| b.0 >= delta - tolerance && b.1 <= 1.0 - delta + tolerance;
    let subset_in_band = in_band(sb);
    let complement_in_band = in_band(cb);
    let both_bessel = sb.1 <= 1.0 - delta + tolerance && cb.1 <= 1.0 - delta + tolerance;
    Ok(DualityReport {
        subset_in_band,
        complement_in_band,
        both_bessel,
        equivalent: subset_in_band == complement_in_band && complement_in_band == both_bessel,
        subset_bounds: sb,
        complement_bounds: cb,
        delta,
        tolerance,
    })
}

fn side_bounds(frame: &Frame, indices: &[usize]) -> Result<(f64, f64), PartitionError> {
    if indices.is_empty() {
        return Ok((0.0, 0.0));
    }
    let sub = frame.subframe(indices)?;
    Ok(hermitian_eigen_range(frame_operator(&sub).entries()))
}
