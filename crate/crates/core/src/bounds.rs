use crate::error::FrameError;
use crate::frame::Frame;
use crate::operator::{frame_operator, FrameOperatorMatrix};
use crate::tol;

/// How a bounds certificate was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundsMethod {
    /// Extreme eigenvalues of the exactly assembled frame operator.
    Eigen,
    /// Extremes of Rayleigh quotients over random probe vectors.
    RayleighProbe,
    /// Extreme eigenvalues of a quadrature approximation of a continuous
    /// frame operator.
    Quadrature,
}

impl BoundsMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundsMethod::Eigen => "eigen",
            BoundsMethod::RayleighProbe => "rayleigh-probe",
            BoundsMethod::Quadrature => "quadrature",
        }
    }
}

/// A certified pair of frame bounds. `lower <= upper`, both nonnegative, and
/// the tolerance the certificate was checked at is part of the value.
#[derive(Clone, Copy, Debug)]
pub struct FrameBounds {
    pub lower: f64,
    pub upper: f64,
    pub tolerance: f64,
    pub method: BoundsMethod,
}

impl FrameBounds {
    pub fn new(lower: f64, upper: f64, tolerance: f64, method: BoundsMethod) -> Self {
        FrameBounds { lower, upper, tolerance, method }
    }

    /// Upper over lower; infinite when the lower bound is zero.
    pub fn ratio(&self) -> f64 {
        if self.lower <= 0.0 {
            f64::INFINITY
        } else {
            self.upper / self.lower
        }
    }

    /// Tight within a relative slack: `upper - lower <= rel * upper`.
    pub fn is_tight_within(&self, rel: f64) -> bool {
        self.upper - self.lower <= rel * self.upper.max(f64::MIN_POSITIVE)
    }

    /// True when the frame can be treated as spanning at this tolerance.
    pub fn is_frame(&self) -> bool {
        self.lower > self.tolerance * self.upper.max(1.0)
    }
}

/// Frame bounds as the extreme eigenvalues of the frame operator, at the
/// default certificate tolerance. Non-spanning input is not an error: the
/// lower bound simply comes out at numerical zero.
pub fn frame_bounds(frame: &Frame) -> FrameBounds {
    frame_bounds_with_tol(frame, tol::DEFAULT_CERT_TOL)
}

pub fn frame_bounds_with_tol(frame: &Frame, tolerance: f64) -> FrameBounds {
    let (lo, hi) = frame_operator(frame).eigen_bounds();
    FrameBounds::new(lo, hi, tolerance, BoundsMethod::Eigen)
}

/// Bounds for the transformed frame `(S x_j)` of a Parseval frame `(x_j)`
/// under a positive self-adjoint invertible operator `S`: the claim is
/// `(||S^{-1}||^{-2}, ||S||^2)`, i.e. the squared extreme eigenvalues of `S`.
///
/// The claim is verified to dominate the eigen-computed bounds of the
/// transformed frame before it is returned.
pub fn transformed_bounds(
    frame: &Frame,
    operator: &FrameOperatorMatrix,
    tolerance: f64,
) -> Result<FrameBounds, FrameError> {
    if operator.dim() != frame.dim() {
        return Err(FrameError::InvalidInput(format!(
            "operator dim {} does not match frame dim {}",
            operator.dim(),
            frame.dim()
        )));
    }
    let original = frame_bounds_with_tol(frame, tolerance);
    if (original.lower - 1.0).abs() > tolerance || (original.upper - 1.0).abs() > tolerance {
        return Err(FrameError::InvalidInput(format!(
            "frame is not Parseval within {tolerance:.3e}: bounds ({:.6}, {:.6})",
            original.lower, original.upper
        )));
    }
    let (s_lo, s_hi) = operator.eigen_bounds();
    if s_lo <= tolerance * s_hi.max(1.0) {
        return Err(FrameError::InvalidInput(format!(
            "operator is not invertible within tolerance: min eigenvalue {s_lo:.3e}"
        )));
    }
    let claim = FrameBounds::new(s_lo * s_lo, s_hi * s_hi, tolerance, BoundsMethod::Eigen);

    let transformed = frame.apply_matrix(operator.entries())?;
    let actual = frame_bounds_with_tol(&transformed, tolerance);
    let slack = tolerance * claim.upper.max(1.0);
    if actual.lower < claim.lower - slack || actual.upper > claim.upper + slack {
        return Err(FrameError::NumericalFailure(format!(
            "transformed bounds ({:.6e}, {:.6e}) escape the claimed envelope ({:.6e}, {:.6e})",
            actual.lower, actual.upper, claim.lower, claim.upper
        )));
    }
    Ok(claim)
}
