use crate::bounds::{frame_bounds_with_tol, FrameBounds};
use crate::error::FrameError;
use crate::frame::Frame;
use crate::operator::frame_operator;
use crate::tol;
use crate::CMatrix;

/// Result of Parseval normalization: the transformed frame, the transform
/// `T^{-1/2}` that produced it, and the bounds of the original frame.
#[derive(Clone, Debug)]
pub struct ParsevalNormalization {
    pub frame: Frame,
    pub transform: CMatrix,
    pub original_bounds: FrameBounds,
}

/// Applies `T^{-1/2}` to every vector, producing a Parseval frame. The
/// re-computed operator of the result is verified against the identity with a
/// condition-number-scaled tolerance before returning.
pub fn parseval_normalize(frame: &Frame, tolerance: f64) -> Result<ParsevalNormalization, FrameError> {
    let original = frame_operator(frame);
    let original_bounds = frame_bounds_with_tol(frame, tolerance);
    let transform = original.inv_sqrt(tolerance)?;
    let normalized = frame.apply_matrix(&transform)?;

    let cond = if original_bounds.lower > 0.0 {
        original_bounds.upper / original_bounds.lower
    } else {
        f64::INFINITY
    };
    let defect = frame_operator(&normalized).identity_defect();
    let allowed = tol::DEFAULT_CERT_TOL * cond.max(1.0);
    if defect > allowed {
        return Err(FrameError::NumericalFailure(format!(
            "normalized operator deviates from identity by {defect:.3e} (allowed {allowed:.3e})"
        )));
    }
    Ok(ParsevalNormalization { frame: normalized, transform, original_bounds })
}
