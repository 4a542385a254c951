//! Pigeonhole windows: among enough orthogonal subspaces, some block (or some
//! adjacent pair of blocks) carries at most an `epsilon` share of any fixed
//! vector, because the squared projections sum to at most the squared norm.

use crate::error::SamplerError;
use frameforge_core::subspace::project;
use frameforge_core::{CMatrix, CVector};

fn projection_norm(basis: &CMatrix, x: &CVector) -> f64 {
    if basis.ncols() == 0 {
        0.0
    } else {
        project(basis, x).norm()
    }
}

/// First block index `n` (1-based) with `||P_{H_n} x|| <= epsilon ||x||`.
/// Requires at least `epsilon^{-2}` subspaces, which guarantees existence.
pub fn find_low_energy_window(
    subspaces: &[CMatrix],
    x: &CVector,
    epsilon: f64,
) -> Result<usize, SamplerError> {
    if !epsilon.is_finite() || epsilon <= 0.0 {
        return Err(SamplerError::InvalidInput(format!(
            "epsilon must be positive, got {epsilon}"
        )));
    }
    let n = subspaces.len();
    if (n as f64) * epsilon * epsilon < 1.0 - 1e-12 {
        return Err(SamplerError::InvalidInput(format!(
            "need at least epsilon^-2 = {:.3} subspaces, got {n}",
            epsilon.powi(-2)
        )));
    }
    let cap = epsilon * x.norm() * (1.0 + 1e-12) + 1e-300;
    for (i, basis) in subspaces.iter().enumerate() {
        if projection_norm(basis, x) <= cap {
            return Ok(i + 1);
        }
    }
    Err(SamplerError::Numerical(
        "no window met the projection cap; subspaces are likely not orthogonal".into(),
    ))
}

/// First odd block index `n` with `||P_{H_n + H_{n+1}} x|| <= epsilon ||x||`,
/// scanning disjoint adjacent pairs. Requires an even count of at least
/// `2 epsilon^{-2}` subspaces.
pub fn find_low_energy_pair(
    subspaces: &[CMatrix],
    x: &CVector,
    epsilon: f64,
) -> Result<usize, SamplerError> {
    if !epsilon.is_finite() || epsilon <= 0.0 {
        return Err(SamplerError::InvalidInput(format!(
            "epsilon must be positive, got {epsilon}"
        )));
    }
    let n = subspaces.len();
    if n % 2 != 0 {
        return Err(SamplerError::InvalidInput(format!(
            "pair variant needs an even subspace count, got {n}"
        )));
    }
    if (n as f64) * epsilon * epsilon < 2.0 - 1e-12 {
        return Err(SamplerError::InvalidInput(format!(
            "need at least 2 epsilon^-2 = {:.3} subspaces, got {n}",
            2.0 * epsilon.powi(-2)
        )));
    }
    let cap_sq = (epsilon * x.norm()).powi(2) * (1.0 + 1e-12) + 1e-300;
    for i in (0..n).step_by(2) {
        let p = projection_norm(&subspaces[i], x).powi(2)
            + projection_norm(&subspaces[i + 1], x).powi(2);
        if p <= cap_sq {
            return Ok(i + 1);
        }
    }
    Err(SamplerError::Numerical(
        "no adjacent pair met the projection cap; subspaces are likely not orthogonal".into(),
    ))
}
