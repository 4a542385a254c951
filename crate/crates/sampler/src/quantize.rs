//! Quantizing Parseval scalings onto the grid `{sqrt(m)/N : m integer}`.
//!
//! Rational scalars `d_i = P_i/M` expand into `N^2 P_i^2` copies of `x_i/N`,
//! a tight frame of small vectors. The subset engine keeps `m_i` copies per
//! index, and `c_i = sqrt(m_i)/N` reproduces the kept sub-multiset's frame
//! operator exactly, so both scalings share their eigen bounds.

use crate::error::SamplerError;
use crate::rational::{approx_ratio, lcm_capped};
use crate::types::ScalableFrame;
use frameforge_core::{frame_bounds, C64, Frame, FrameBounds};
use frameforge_partition::{subset_tight_frame_with, ReduceConfig};

#[derive(Clone, Debug)]
pub struct QuantizeConfig {
    /// denominator cap when snapping each scalar to a rational
    pub denominator_cap: u64,
    /// abort when the duplicate multiset would exceed this size
    pub duplicate_cap: usize,
    pub partition: ReduceConfig,
}

impl Default for QuantizeConfig {
    fn default() -> Self {
        QuantizeConfig {
            denominator_cap: 128,
            duplicate_cap: 200_000,
            partition: ReduceConfig { exhaustive_limit: 12, ..ReduceConfig::default() },
        }
    }
}

#[derive(Clone, Debug)]
pub struct QuantizedScaling {
    /// quantized scalars `sqrt(m_i)/N`
    pub scalars: Vec<f64>,
    /// kept copies `m_i` per original index
    pub counts: Vec<usize>,
    /// common denominator `M` of the snapped scalars
    pub common_denominator: u128,
    /// total duplicates built before selection
    pub duplicates: usize,
    /// eigen bounds of the quantized scaling `(c_i x_i)`
    pub bounds: FrameBounds,
    /// eigen bounds of the kept duplicate sub-multiset
    pub subset_bounds: FrameBounds,
    /// true when the duplicate family was already within the Bessel target
    /// and every copy was kept
    pub kept_all: bool,
}

pub fn quantize_scaling(
    scalable: &ScalableFrame,
    n: u32,
    cfg: &QuantizeConfig,
) -> Result<QuantizedScaling, SamplerError> {
    if n == 0 {
        return Err(SamplerError::InvalidInput("copy denominator N must be positive".into()));
    }
    let base = scalable.base();
    let len = base.len();

    let mut rats = Vec::with_capacity(len);
    for (i, &d) in scalable.scalars().iter().enumerate() {
        let r = approx_ratio(d, cfg.denominator_cap).ok_or_else(|| {
            SamplerError::ResourceLimit(format!(
                "scalar {i} = {d} has no rational form under denominator cap {}",
                cfg.denominator_cap
            ))
        })?;
        rats.push(r);
    }
    let mut m_den: u128 = 1;
    for r in &rats {
        m_den = lcm_capped(m_den, *r.denom() as u128, 1_000_000_000).ok_or_else(|| {
            SamplerError::ResourceLimit(
                "common denominator of the snapped scalars exceeds 1e9".into(),
            )
        })?;
    }

    let mut dup_counts = Vec::with_capacity(len);
    let mut total: u128 = 0;
    for (i, r) in rats.iter().enumerate() {
        let p = *r.numer() as u128 * (m_den / *r.denom() as u128);
        let np = (n as u128)
            .checked_mul(p)
            .and_then(|v| v.checked_mul(v))
            .ok_or_else(|| {
                SamplerError::ResourceLimit(format!("duplicate count for index {i} overflows"))
            })?;
        total += np;
        if total > cfg.duplicate_cap as u128 {
            return Err(SamplerError::ResourceLimit(format!(
                "duplicate multiset exceeds the cap of {} vectors",
                cfg.duplicate_cap
            )));
        }
        dup_counts.push(np as usize);
    }
    if total == 0 {
        return Err(SamplerError::InvalidInput("every scalar snapped to zero".into()));
    }

    let nf = n as f64;
    let inv = C64::new(1.0 / nf, 0.0);
    let mut vecs = Vec::with_capacity(total as usize);
    let mut dup_to_orig = Vec::with_capacity(total as usize);
    for (i, &c) in dup_counts.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let v = base.vector(i) * inv;
        for _ in 0..c {
            vecs.push(v.clone());
            dup_to_orig.push(i);
        }
    }
    let dup = Frame::new(base.field(), base.dim(), vecs, None)?;
    let dup_bounds = frame_bounds(&dup);

    let (counts, subset_bounds, kept_all) = if dup_bounds.upper <= 1.0 + cfg.partition.tolerance {
        (dup_counts, dup_bounds, true)
    } else {
        let sel = subset_tight_frame_with(&dup, n as usize, &cfg.partition)?;
        let mut kept = vec![0usize; len];
        for &j in &sel.indices {
            kept[dup_to_orig[j]] += 1;
        }
        (kept, sel.bounds, false)
    };

    let scalars: Vec<f64> = counts.iter().map(|&m| (m as f64).sqrt() / nf).collect();
    let scaled = base.with_amplitudes(&scalars)?;
    let bounds = frame_bounds(&scaled);
    // identical frame operators on both sides
    let scale = bounds.upper.abs().max(subset_bounds.upper.abs()).max(1.0);
    if (bounds.lower - subset_bounds.lower).abs() > 1e-10 * scale
        || (bounds.upper - subset_bounds.upper).abs() > 1e-10 * scale
    {
        return Err(SamplerError::Numerical(format!(
            "quantized bounds ({:.12}, {:.12}) disagree with the subset's ({:.12}, {:.12})",
            bounds.lower, bounds.upper, subset_bounds.lower, subset_bounds.upper
        )));
    }

    Ok(QuantizedScaling {
        scalars,
        counts,
        common_denominator: m_den,
        duplicates: total as usize,
        bounds,
        subset_bounds,
        kept_all,
    })
}
