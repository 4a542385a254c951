//! Frame-operator quadrature: midpoint rule with dyadic refinement.
//!
//! Boxes are integrated on tensor midpoint grids, doubling the per-axis cell
//! count until two successive operator estimates agree entrywise, then the
//! pair is Richardson-extrapolated. Atoms are summed exactly. Summation is
//! pairwise over a deterministic cell order, so results are reproducible
//! bit-for-bit across runs and thread counts.

use crate::error::{ContinuousError, Result};
use crate::model::{ContinuousFrameModel, DomainRegion};
use frameforge_core::operator::accumulate_outer;
use frameforge_core::{BoundsMethod, C64, CMatrix, FrameBounds, FrameOperatorMatrix};

/// Hard cap on midpoint cells per box.
pub const MAX_CELLS_PER_BOX: usize = 1 << 20;

#[derive(Debug, Clone)]
pub struct QuadratureConfig {
    /// Refinement stops once successive estimates agree entrywise within this.
    pub tolerance: f64,
    /// Per-box cell cap; refinement past this aborts with the last two estimates.
    pub max_cells: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig { tolerance: 1e-8, max_cells: MAX_CELLS_PER_BOX }
    }
}

fn max_entry_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    a.iter().zip(b.iter()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// Midpoint sum over one box at a fixed per-axis cell count. Returns the
/// estimate and the largest sample norm seen.
fn midpoint_level(
    model: &ContinuousFrameModel,
    bounds: &[(f64, f64)],
    density: f64,
    per_axis: usize,
) -> (CMatrix, f64) {
    let dim = model.dim();
    let axes = bounds.len();
    let widths: Vec<f64> = bounds.iter().map(|(lo, hi)| (hi - lo) / per_axis as f64).collect();
    let cell_mass = density * widths.iter().product::<f64>();
    let total = if axes == 1 { per_axis } else { per_axis * per_axis };

    // Pairwise reduction over the flattened cell index for deterministic,
    // accuracy-stable accumulation.
    const CHUNK: usize = 64;
    fn sum_range(
        model: &ContinuousFrameModel,
        bounds: &[(f64, f64)],
        widths: &[f64],
        per_axis: usize,
        cell_mass: f64,
        dim: usize,
        lo: usize,
        hi: usize,
        max_norm: &mut f64,
    ) -> CMatrix {
        if hi - lo <= CHUNK {
            let mut acc = CMatrix::zeros(dim, dim);
            for idx in lo..hi {
                let (i, j) = (idx % per_axis, idx / per_axis);
                let t = [
                    bounds[0].0 + widths[0] * (i as f64 + 0.5),
                    if bounds.len() == 2 { bounds[1].0 + widths[1] * (j as f64 + 0.5) } else { 0.0 },
                ];
                let v = model.eval(t);
                let n = v.norm();
                if n > *max_norm {
                    *max_norm = n;
                }
                accumulate_outer(&mut acc, &v, cell_mass);
            }
            acc
        } else {
            let mid = lo + (hi - lo) / 2;
            let mut left =
                sum_range(model, bounds, widths, per_axis, cell_mass, dim, lo, mid, max_norm);
            let right =
                sum_range(model, bounds, widths, per_axis, cell_mass, dim, mid, hi, max_norm);
            left += right;
            left
        }
    }

    let mut max_norm = 0.0;
    let acc =
        sum_range(model, bounds, &widths, per_axis, cell_mass, dim, 0, total, &mut max_norm);
    (acc, max_norm)
}

/// Integrate one box to the requested agreement. Returns the last two
/// (coarse, fine) estimates; the caller extrapolates.
fn integrate_box(
    model: &ContinuousFrameModel,
    bounds: &[(f64, f64)],
    density: f64,
    resolution: usize,
    config: &QuadratureConfig,
    max_norm: &mut f64,
) -> Result<(CMatrix, CMatrix)> {
    let axes = bounds.len();
    let cells_of = |per_axis: usize| if axes == 1 { per_axis } else { per_axis * per_axis };
    let mut per_axis = resolution.max(1);
    if cells_of(per_axis) > config.max_cells {
        return Err(ContinuousError::InvalidInput(format!(
            "starting resolution {per_axis} already exceeds the {} cell cap",
            config.max_cells
        )));
    }
    let (mut prev, mut norm_seen) = midpoint_level(model, bounds, density, per_axis);
    let mut last_diff = f64::INFINITY;
    while cells_of(per_axis * 2) <= config.max_cells {
        per_axis *= 2;
        let (cur, cur_norm) = midpoint_level(model, bounds, density, per_axis);
        norm_seen = norm_seen.max(cur_norm);
        last_diff = max_entry_diff(&prev, &cur);
        if last_diff < config.tolerance {
            *max_norm = max_norm.max(norm_seen);
            return Ok((prev, cur));
        }
        prev = cur;
    }
    let coarse = midpoint_level(model, bounds, density, per_axis / 2).0;
    Err(ContinuousError::QuadratureFailure {
        cells: cells_of(per_axis),
        diff: last_diff,
        estimates: Box::new((coarse, prev)),
    })
}

/// Approximate `T = integral Psi Psi^* dmu` on the model's domain, starting
/// boxes at `resolution` cells per axis.
pub fn quadrature_frame_operator_with(
    model: &ContinuousFrameModel,
    resolution: usize,
    config: &QuadratureConfig,
) -> Result<FrameOperatorMatrix> {
    if !(config.tolerance.is_finite() && config.tolerance > 0.0) {
        return Err(ContinuousError::InvalidInput(format!(
            "quadrature tolerance must be positive, got {}",
            config.tolerance
        )));
    }
    let dim = model.dim();
    let mut extrapolated = CMatrix::zeros(dim, dim);
    let mut raw = CMatrix::zeros(dim, dim);
    let mut max_norm: f64 = 0.0;
    for region in &model.domain {
        match region {
            DomainRegion::Atoms { atoms } => {
                let mut acc = CMatrix::zeros(dim, dim);
                for (t, mass) in atoms {
                    let v = model.eval(*t);
                    max_norm = max_norm.max(v.norm());
                    accumulate_outer(&mut acc, &v, *mass);
                }
                extrapolated += &acc;
                raw += acc;
            }
            DomainRegion::Box { bounds, density } => {
                let (coarse, fine) =
                    integrate_box(model, bounds, *density, resolution, config, &mut max_norm)?;
                // Midpoint error is O(h^2); one extrapolation step cancels it.
                extrapolated +=
                    (fine.clone() * C64::new(4.0, 0.0) - coarse) * C64::new(1.0 / 3.0, 0.0);
                raw += fine;
            }
        }
    }
    if let Some(nb) = model.norm_bound {
        let slack = 1e-9 * nb.max(1.0);
        if max_norm > nb + slack {
            return Err(ContinuousError::InvalidInput(format!(
                "sample norm {max_norm:.12e} exceeds the declared bound {nb:.12e}"
            )));
        }
    }
    // Extrapolation can push a zero eigenvalue slightly negative; the plain
    // midpoint sums are genuine positive combinations, so fall back to the
    // finest un-extrapolated estimate in that case.
    match FrameOperatorMatrix::from_entries(extrapolated) {
        Ok(op) => Ok(op),
        Err(_) => Ok(FrameOperatorMatrix::from_entries(raw)?),
    }
}

pub fn quadrature_frame_operator(
    model: &ContinuousFrameModel,
    resolution: usize,
) -> Result<FrameOperatorMatrix> {
    quadrature_frame_operator_with(model, resolution, &QuadratureConfig::default())
}

/// Frame bounds of the quadrature operator, tagged with the quadrature method
/// and its stopping tolerance.
pub fn check_continuous_bounds_with(
    model: &ContinuousFrameModel,
    resolution: usize,
    config: &QuadratureConfig,
) -> Result<FrameBounds> {
    let op = quadrature_frame_operator_with(model, resolution, config)?;
    let (lower, upper) = op.eigen_bounds();
    Ok(FrameBounds::new(lower, upper, config.tolerance, BoundsMethod::Quadrature))
}

pub fn check_continuous_bounds(
    model: &ContinuousFrameModel,
    resolution: usize,
) -> Result<FrameBounds> {
    check_continuous_bounds_with(model, resolution, &QuadratureConfig::default())
}
