//! Completing a nearly-tight family with vectors supported away from a
//! distinguished subspace.
//!
//! A `(1+eps)`-Bessel frame whose projections onto a window subspace keep a
//! `(1-eps)` lower bound can be extended to a `(1+eps)`-tight frame using the
//! eigendecomposition of the deficit operator `(1+eps)Id - T`. Rejecting the
//! added vectors from the window subspace leaves a patch supported entirely on
//! the orthogonal side; the union of the original family and the patch keeps
//! bounds within `eps_one = 3 eps + 2 sqrt(2 eps) sqrt(1 + eps)` of Parseval.

use crate::error::SamplerError;
use frameforge_core::operator::{hermitian_eigen, hermitian_eigen_range};
use frameforge_core::subspace::{compress_hermitian, orthonormality_defect, project};
use frameforge_core::{frame_bounds, frame_operator, C64, CMatrix, CVector, Field, Frame, FrameBounds};

/// Bound defect of the patched union as a function of the input defect.
pub fn patch_defect(epsilon: f64) -> f64 {
    3.0 * epsilon + 2.0 * (2.0 * epsilon).sqrt() * (1.0 + epsilon).sqrt()
}

#[derive(Clone, Debug)]
pub struct OrthogonalPatch {
    /// patch vectors, all orthogonal to the window subspace
    pub patch: Vec<CVector>,
    /// input family together with the patch
    pub union: Frame,
    pub union_bounds: FrameBounds,
    /// verified defect bound of the union
    pub epsilon_one: f64,
    /// measured Bessel bound of the input
    pub bessel: f64,
    /// measured lower eigen bound of the input compressed to the window
    pub window_lower: f64,
}

/// Rotates a computed vector onto the real axis and zeroes the imaginary
/// parts, failing if any residual exceeds `tol` relative to the norm scale.
pub(crate) fn realign_to_real(v: &mut CVector, tol: f64) -> Result<(), SamplerError> {
    let mut best = 0usize;
    let mut best_mod = 0.0;
    for (i, z) in v.iter().enumerate() {
        let m = z.norm();
        if m > best_mod {
            best_mod = m;
            best = i;
        }
    }
    if best_mod > 0.0 {
        let phase = v[best] / C64::new(best_mod, 0.0);
        let rot = phase.conj();
        for z in v.iter_mut() {
            *z *= rot;
        }
    }
    let scale = v.norm().max(1.0);
    for z in v.iter_mut() {
        if z.im.abs() > tol * scale {
            return Err(SamplerError::Numerical(format!(
                "imaginary residue {} on a vector expected to be real",
                z.im
            )));
        }
        z.im = 0.0;
    }
    Ok(())
}

pub fn orthogonal_patch(
    frame: &Frame,
    window: &CMatrix,
    epsilon: f64,
    tolerance: f64,
) -> Result<OrthogonalPatch, SamplerError> {
    if !epsilon.is_finite() || !(0.0..1.0).contains(&epsilon) {
        return Err(SamplerError::InvalidInput(format!(
            "epsilon must lie in [0, 1), got {epsilon}"
        )));
    }
    if !tolerance.is_finite() || tolerance < 0.0 {
        return Err(SamplerError::InvalidInput(format!(
            "tolerance must be nonnegative, got {tolerance}"
        )));
    }
    if window.nrows() != frame.dim() {
        return Err(SamplerError::InvalidInput(format!(
            "window basis has {} rows, frame dimension is {}",
            window.nrows(),
            frame.dim()
        )));
    }
    if window.ncols() > 0 {
        let defect = orthonormality_defect(window);
        if defect > 1e-10 {
            return Err(SamplerError::InvalidInput(format!(
                "window basis is not orthonormal, defect {defect:.3e}"
            )));
        }
    }

    let t = frame_operator(frame);
    let scale = 1.0 + epsilon;
    let (_, bessel) = t.eigen_bounds();
    if bessel > scale * (1.0 + tolerance) + tolerance {
        return Err(SamplerError::InvalidInput(format!(
            "family has Bessel bound {bessel:.9}, above 1 + {epsilon}"
        )));
    }
    // empty window asks nothing of the lower bound
    let window_lower = if window.ncols() == 0 {
        1.0
    } else {
        hermitian_eigen_range(&compress_hermitian(t.entries(), window)).0
    };
    if window_lower < (1.0 - epsilon) * (1.0 - tolerance) - tolerance {
        return Err(SamplerError::InvalidInput(format!(
            "window projections have lower bound {window_lower:.9}, below 1 - {epsilon}"
        )));
    }

    let dim = frame.dim();
    let mut deficit = -t.entries().clone();
    for i in 0..dim {
        deficit[(i, i)] += C64::new(scale, 0.0);
    }
    let eig = hermitian_eigen(&deficit);
    // the Bessel check leaves lambda_min >= -(2+eps) * tolerance
    if eig.values[0] < -2.0 * tolerance * scale - f64::EPSILON {
        return Err(SamplerError::InvalidInput(format!(
            "deficit operator has eigenvalue {:.3e}; family is not (1+eps)-Bessel within tolerance",
            eig.values[0]
        )));
    }

    let mut patch: Vec<CVector> = Vec::new();
    for k in 0..dim {
        let lam = eig.values[k].max(0.0);
        if lam <= 1e-24 * scale {
            continue;
        }
        let h: CVector = eig.vectors.column(k) * C64::new(lam.sqrt(), 0.0);
        let mut g = if window.ncols() == 0 { h } else { &h - project(window, &h) };
        if g.norm() <= 1e-12 * scale.sqrt() {
            continue;
        }
        if frame.field() == Field::Real {
            realign_to_real(&mut g, 1e-10)?;
        }
        patch.push(g);
    }

    let union = if patch.is_empty() {
        frame.clone()
    } else {
        frame.concat(&Frame::new(frame.field(), dim, patch.clone(), None)?)?
    };
    let union_bounds = frame_bounds(&union);
    let epsilon_one = patch_defect(epsilon);
    if union_bounds.lower < 1.0 - epsilon_one - tolerance
        || union_bounds.upper > 1.0 + epsilon_one + tolerance
    {
        return Err(SamplerError::Numerical(format!(
            "patched union has bounds ({:.9}, {:.9}), outside 1 +- {epsilon_one:.9}",
            union_bounds.lower, union_bounds.upper
        )));
    }

    Ok(OrthogonalPatch { patch, union, union_bounds, epsilon_one, bessel, window_lower })
}
