//! Domain types for sampling scalable frames: the scalable frame itself
//! (unit-ball vectors plus nonnegative scalars with exact rational squares),
//! the orthogonal block decomposition of its span, the duplication map that
//! turns rational masses into integer vector counts, and the inequality
//! certificates every pipeline stage records.

use crate::error::SamplerError;
use crate::rational::approx_ratio;
use frameforge_core::tol::DEFAULT_CERT_TOL;
use frameforge_core::{frame_bounds, CMatrix, Frame, FrameBounds};
use num_rational::Ratio;

/// Default denominator cap when rationalizing squared scalars.
pub const DEFAULT_DENOMINATOR_CAP: u64 = 10_000;

/// A family of unit-ball vectors together with scalars that make it a frame
/// with bounds within `epsilon` of Parseval.
#[derive(Clone, Debug)]
pub struct ScalableFrame {
    base: Frame,
    scaled: Frame,
    scalars: Vec<f64>,
    scalars_sq: Vec<Ratio<u64>>,
    epsilon: f64,
    bounds: FrameBounds,
}

impl ScalableFrame {
    pub fn new(base: Frame, scalars: &[f64], epsilon: f64) -> Result<Self, SamplerError> {
        Self::with_denominator_cap(base, scalars, epsilon, DEFAULT_DENOMINATOR_CAP)
    }

    /// Builds a scalable frame, snapping each squared scalar to the best
    /// rational with denominator at most `cap` and re-verifying the bounds of
    /// the snapped scaling against `[1 - epsilon, 1 + epsilon]`.
    pub fn with_denominator_cap(
        base: Frame,
        scalars: &[f64],
        epsilon: f64,
        cap: u64,
    ) -> Result<Self, SamplerError> {
        if base.weights().is_some() {
            return Err(SamplerError::InvalidInput(
                "base frame must be unweighted; encode masses in the scalars".into(),
            ));
        }
        if scalars.len() != base.len() {
            return Err(SamplerError::InvalidInput(format!(
                "{} scalars for {} vectors",
                scalars.len(),
                base.len()
            )));
        }
        if !(0.0..1.0).contains(&epsilon) {
            return Err(SamplerError::InvalidInput(format!(
                "epsilon must lie in [0, 1), got {epsilon}"
            )));
        }
        let max_sq = base.max_weighted_sq_norm();
        if max_sq > 1.0 + DEFAULT_CERT_TOL {
            return Err(SamplerError::InvalidInput(format!(
                "vectors must lie in the unit ball, largest squared norm is {max_sq:.9}"
            )));
        }

        let mut scalars_sq = Vec::with_capacity(scalars.len());
        let mut snapped = Vec::with_capacity(scalars.len());
        for (j, &a) in scalars.iter().enumerate() {
            if !a.is_finite() || a < 0.0 {
                return Err(SamplerError::InvalidInput(format!(
                    "scalar {j} must be nonnegative and finite, got {a}"
                )));
            }
            let sq = approx_ratio(a * a, cap).ok_or_else(|| {
                SamplerError::ResourceLimit(format!(
                    "squared scalar {j} = {} has no rational form under denominator cap {cap}",
                    a * a
                ))
            })?;
            scalars_sq.push(sq);
            snapped.push((*sq.numer() as f64 / *sq.denom() as f64).sqrt());
        }

        let scaled = base.with_amplitudes(&snapped)?;
        let bounds = frame_bounds(&scaled);
        if bounds.lower < 1.0 - epsilon - DEFAULT_CERT_TOL
            || bounds.upper > 1.0 + epsilon + DEFAULT_CERT_TOL
        {
            return Err(SamplerError::InvalidInput(format!(
                "scaled bounds ({:.9}, {:.9}) fall outside [1 - {epsilon}, 1 + {epsilon}]",
                bounds.lower, bounds.upper
            )));
        }

        Ok(ScalableFrame { base, scaled, scalars: snapped, scalars_sq, epsilon, bounds })
    }

    pub fn base(&self) -> &Frame {
        &self.base
    }

    /// The frame `(a_j x_j)` with the snapped scalars applied.
    pub fn scaled(&self) -> &Frame {
        &self.scaled
    }

    pub fn scalars(&self) -> &[f64] {
        &self.scalars
    }

    /// Exact rational square of scalar `j`.
    pub fn scalar_sq(&self, j: usize) -> Ratio<u64> {
        self.scalars_sq[j]
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn bounds(&self) -> &FrameBounds {
        &self.bounds
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_empty()
    }
}

/// Pairwise-orthogonal subspaces `H_1, H_2, ...` covering the span of the
/// frame, together with vector-count cuts `K_n` and leakage budgets `eps_n`.
///
/// Blocks are numbered from 1. `cuts[n-1]` is the count `K_n` of leading
/// vectors attached to the first `n` blocks; `leakages[n-1]` bounds the mass
/// any unit vector of the first `n` blocks leaks outside a window of indices.
#[derive(Clone, Debug)]
pub struct BlockDecomposition {
    pub subspaces: Vec<CMatrix>,
    pub cuts: Vec<usize>,
    pub leakages: Vec<f64>,
    pub epsilon_prime: f64,
}

impl BlockDecomposition {
    pub fn blocks(&self) -> usize {
        self.subspaces.len()
    }

    /// Orthonormal basis of block `n` (1-based).
    pub fn basis(&self, n: usize) -> &CMatrix {
        &self.subspaces[n - 1]
    }

    /// Cut `K_n` as a signed count; `K_{-1} = -1`, `K_0 = 0`, and indices past
    /// the last block saturate at the final cut.
    pub fn cut(&self, n: i64) -> i64 {
        if n <= -1 {
            return -1;
        }
        if n == 0 || self.cuts.is_empty() {
            return 0;
        }
        let idx = (n as usize).min(self.cuts.len());
        self.cuts[idx - 1] as i64
    }

    /// Concatenated orthonormal basis of blocks `lo..=hi` (1-based, clamped);
    /// empty when the range is.
    pub fn span_basis(&self, lo: usize, hi: usize) -> CMatrix {
        let dim = self.subspaces.first().map_or(0, CMatrix::nrows);
        let hi = hi.min(self.blocks());
        let lo = lo.max(1);
        if lo > hi {
            return CMatrix::zeros(dim, 0);
        }
        let total: usize = (lo..=hi).map(|n| self.basis(n).ncols()).sum();
        let mut out = CMatrix::zeros(dim, total);
        let mut col = 0;
        for n in lo..=hi {
            let b = self.basis(n);
            out.view_mut((0, col), (dim, b.ncols())).copy_from(b);
            col += b.ncols();
        }
        out
    }

    /// Total dimension covered by the blocks.
    pub fn total_dim(&self) -> usize {
        self.subspaces.iter().map(CMatrix::ncols).sum()
    }
}

/// Integer duplication of a window of vectors: `assignments[n]` is the
/// original index of duplicate `n`, and each original index `j` appears
/// exactly `d * a_j^2` times (an integer because `d` is a multiple of the
/// common denominator of the squared scalars).
#[derive(Clone, Debug)]
pub struct DuplicationMap {
    pub d: u128,
    pub assignments: Vec<usize>,
}

impl DuplicationMap {
    pub fn len(&self) -> usize {
        self.assignments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignments.is_empty()
    }
}

/// One recorded inequality: `lhs <= rhs + tolerance`. Slack is measured
/// against the tolerance-padded right side so honest floating-point noise on
/// an equality case still records as nonnegative.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub name: String,
    pub block: usize,
    pub lhs: f64,
    pub rhs: f64,
    pub tolerance: f64,
}

impl Certificate {
    /// Global certificate (not tied to a pipeline block).
    pub fn global(name: impl Into<String>, lhs: f64, rhs: f64, tolerance: f64) -> Self {
        Certificate { name: name.into(), block: 0, lhs, rhs, tolerance }
    }

    pub fn for_block(
        name: impl Into<String>,
        block: usize,
        lhs: f64,
        rhs: f64,
        tolerance: f64,
    ) -> Self {
        Certificate { name: name.into(), block, lhs, rhs, tolerance }
    }

    pub fn holds(&self) -> bool {
        self.lhs <= self.rhs + self.tolerance
    }

    pub fn slack(&self) -> f64 {
        self.rhs + self.tolerance - self.lhs
    }
}
