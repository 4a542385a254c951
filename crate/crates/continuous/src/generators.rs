//! Ready-made continuous frame models.
//!
//! Each constructor returns a [`ContinuousFrameModel`] with its norm bound
//! filled in and, where a rigorous closed form exists, a truncation defect.
//! Exponential models carry exact bounds (projection onto the span of the
//! chosen exponentials can only shrink norms); Gabor models carry probed
//! bounds with a stated safety margin, and the discretizer's spot checks
//! reject a model whose declared modulus turns out to be violated.

use crate::error::{ContinuousError, Result};
use crate::model::{
    set_moment, ContinuousFrameModel, DomainRegion, Evaluator, GaborWindow,
};
use frameforge_core::tol::DEFAULT_CERT_TOL;
use frameforge_core::{frame_bounds, CMatrix, CVector, Field, Frame, FrameOperatorMatrix};
use std::f64::consts::PI;

fn validated_intervals(intervals: &[(f64, f64)]) -> Result<Vec<(f64, f64)>> {
    if intervals.is_empty() {
        return Err(ContinuousError::InvalidInput("need at least one interval".into()));
    }
    let mut sorted = intervals.to_vec();
    for &(a, b) in &sorted {
        if !(a.is_finite() && b.is_finite() && a < b) {
            return Err(ContinuousError::InvalidInput(format!(
                "interval ({a}, {b}) is not a finite nondegenerate interval"
            )));
        }
    }
    sorted.sort_by(|x, y| x.0.total_cmp(&y.0));
    if sorted.windows(2).any(|w| w[0].1 > w[1].0) {
        return Err(ContinuousError::InvalidInput("intervals must be disjoint".into()));
    }
    Ok(sorted)
}

fn validated_freqs(freqs: &[f64]) -> Result<Vec<f64>> {
    if freqs.is_empty() {
        return Err(ContinuousError::InvalidInput("need at least one frequency".into()));
    }
    if freqs.iter().any(|f| !f.is_finite()) {
        return Err(ContinuousError::InvalidInput("frequencies must be finite".into()));
    }
    let mut sorted = freqs.to_vec();
    sorted.sort_by(f64::total_cmp);
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(ContinuousError::InvalidInput("frequencies must be distinct".into()));
    }
    Ok(freqs.to_vec())
}

/// Inverse square root of the Gram matrix of `exp(2 pi i f t)` over the set.
pub(crate) fn whitening(intervals: &[(f64, f64)], freqs: &[f64]) -> Result<CMatrix> {
    let n = freqs.len();
    let mut gram = CMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            gram[(i, j)] = set_moment(intervals, freqs[j] - freqs[i]);
        }
    }
    Ok(FrameOperatorMatrix::from_entries(gram)?.inv_sqrt(DEFAULT_CERT_TOL)?)
}

fn exponential_constants(intervals: &[(f64, f64)]) -> (f64, f64) {
    // ||Psi(x)|| is the norm of a projection of exp(2 pi i x t) restricted to
    // J, so sqrt(|J|) bounds it; the x-derivative projects 2 pi i t times the
    // same function, giving the second moment of J as a modulus.
    let measure: f64 = intervals.iter().map(|(a, b)| b - a).sum();
    let second: f64 = intervals.iter().map(|(a, b)| (b * b * b - a * a * a) / 3.0).sum();
    (measure.sqrt(), 2.0 * PI * second.sqrt())
}

/// Orthonormalized exponentials with frequencies `freqs` on the union of
/// `intervals`, sampled on the lattice `n / rate` (`|n| <= half_count`) with
/// mass `1 / rate` per atom.
///
/// When `rate` is at least the spread of the union, the infinite lattice sum
/// reproduces the continuum operator exactly (the integrand's spectrum fits
/// inside one alias period), so the only error is the truncation to
/// `half_count`; its measured deviation from the identity is recorded on the
/// model.
pub fn exponential_on_set(
    intervals: &[(f64, f64)],
    freqs: &[f64],
    rate: f64,
    half_count: usize,
) -> Result<ContinuousFrameModel> {
    let intervals = validated_intervals(intervals)?;
    let freqs = validated_freqs(freqs)?;
    if !(rate.is_finite() && rate > 0.0) {
        return Err(ContinuousError::InvalidInput(format!(
            "sampling rate must be positive, got {rate}"
        )));
    }
    let spread = intervals.last().unwrap().1 - intervals[0].0;
    if spread > rate {
        return Err(ContinuousError::InvalidInput(format!(
            "sampling rate {rate} is below the spread {spread} of the set; \
             lattice sums would alias"
        )));
    }
    if half_count == 0 {
        return Err(ContinuousError::InvalidInput("need a positive lattice radius".into()));
    }
    let whiten = whitening(&intervals, &freqs)?;
    let (norm_bound, lipschitz) = exponential_constants(&intervals);
    let evaluator = Evaluator::Exponential { intervals, freqs, whiten };

    let n = half_count as i64;
    let atoms: Vec<([f64; 2], f64)> =
        (-n..=n).map(|k| ([k as f64 / rate, 0.0], 1.0 / rate)).collect();
    let vectors: Vec<CVector> = atoms.iter().map(|(t, _)| evaluator.eval(*t)).collect();
    let masses: Vec<f64> = atoms.iter().map(|(_, m)| *m).collect();
    let lattice = Frame::new(Field::Complex, evaluator.dim(), vectors, Some(masses))?;
    let bounds = frame_bounds(&lattice);
    let defect = (1.0 - bounds.lower).max(bounds.upper - 1.0).max(0.0);

    Ok(ContinuousFrameModel::new(vec![DomainRegion::Atoms { atoms }], evaluator)?
        .with_norm_bound(norm_bound)?
        .with_lipschitz(lipschitz)?
        .with_truncation_defect(defect))
}

/// The same orthonormalized exponentials over the box `[-x_half, x_half]`
/// with Lebesgue measure.
///
/// When the box clears every frequency, the operator mass lost to the two
/// tails is at most the recorded truncation defect (a closed-form bound via
/// `|moment(w)| <= intervals / (pi |w|)`).
pub fn exponential_on_box(
    intervals: &[(f64, f64)],
    freqs: &[f64],
    x_half: f64,
) -> Result<ContinuousFrameModel> {
    let intervals = validated_intervals(intervals)?;
    let freqs = validated_freqs(freqs)?;
    if !(x_half.is_finite() && x_half > 0.0) {
        return Err(ContinuousError::InvalidInput(format!(
            "box half-width must be positive, got {x_half}"
        )));
    }
    let mut gram = CMatrix::zeros(freqs.len(), freqs.len());
    for i in 0..freqs.len() {
        for j in 0..freqs.len() {
            gram[(i, j)] = set_moment(&intervals, freqs[j] - freqs[i]);
        }
    }
    let gram_op = FrameOperatorMatrix::from_entries(gram)?;
    let (gram_lo, _) = gram_op.eigen_bounds();
    let whiten = gram_op.inv_sqrt(DEFAULT_CERT_TOL)?;
    let (norm_bound, lipschitz) = exponential_constants(&intervals);

    let fmax = freqs.iter().fold(0.0f64, |m, f| m.max(f.abs()));
    let defect = if x_half > fmax && gram_lo > 0.0 {
        let pieces = intervals.len() as f64;
        let tails: f64 = freqs
            .iter()
            .map(|f| 1.0 / (x_half - f) + 1.0 / (x_half + f))
            .sum();
        Some(pieces * pieces / (PI * PI * gram_lo) * tails)
    } else {
        None
    };

    let model = ContinuousFrameModel::new(
        vec![DomainRegion::Box { bounds: vec![(-x_half, x_half)], density: 1.0 }],
        Evaluator::Exponential { intervals, freqs, whiten },
    )?
    .with_norm_bound(norm_bound)?
    .with_lipschitz(lipschitz)?;
    Ok(match defect {
        Some(d) => model.with_truncation_defect(d),
        None => model,
    })
}

/// Short-time transform of `window` against a centered grid of `grid` points
/// on `[-x_half, x_half]`, with shifts ranging over `[-a_half, a_half]` and
/// modulations over one full alias period of the grid.
///
/// Over a full modulation period the off-diagonal phases integrate to zero
/// exactly, so the continuum operator is diagonal with entries
/// `int_{-a_half}^{a_half} g(x_k - a)^2 da`. Norm and modulus constants are
/// probed on a sixteen-fold refinement of the grid with a one-per-mille
/// safety margin; a Gaussian window additionally gets a rigorous tail bound
/// for the shift truncation.
pub fn gabor_stft(
    window: GaborWindow,
    a_half: f64,
    grid: usize,
    x_half: f64,
) -> Result<ContinuousFrameModel> {
    if !(a_half.is_finite() && a_half > 0.0) || !(x_half.is_finite() && x_half > 0.0) {
        return Err(ContinuousError::InvalidInput(
            "shift and grid half-widths must be positive".into(),
        ));
    }
    if grid == 0 {
        return Err(ContinuousError::InvalidInput("need a nonempty grid".into()));
    }
    let dx = 2.0 * x_half / grid as f64;
    let b_half = 1.0 / (2.0 * dx);
    let xs: Vec<f64> = (0..grid).map(|k| -x_half + dx * (k as f64 + 0.5)).collect();
    let deriv = window.derivative();

    // max_a of dx sum g(x_k - a)^2 and of the same sum for g'.
    let probes = 16 * ((2.0 * a_half / dx).ceil() as usize).max(1) + 1;
    let step = 2.0 * a_half / (probes - 1) as f64;
    let (mut max_g, mut max_d) = (0.0f64, 0.0f64);
    for p in 0..probes {
        let a = -a_half + step * p as f64;
        let (mut sg, mut sd) = (0.0, 0.0);
        for &x in &xs {
            sg += window.eval(x - a).powi(2);
            sd += deriv.eval(x - a).powi(2);
        }
        max_g = max_g.max(dx * sg);
        max_d = max_d.max(dx * sd);
    }
    let norm_bound = (max_g * (1.0 + 1e-3) + 1e-9).sqrt();
    let xm = x_half - dx / 2.0;
    let two_pi_xm = 2.0 * PI * xm;
    let lipschitz =
        ((max_d + two_pi_xm * two_pi_xm * max_g) * (1.0 + 1e-3) + 1e-9).sqrt();

    // Shift-truncation tail for a pure Gaussian: the missing diagonal mass is
    // two Gaussian tail integrals, each at most s^2 exp(-(z/s)^2) / (2z).
    let defect = if window.coeffs().len() == 1 && a_half > xm {
        let s = window.sigma();
        let c2 = window.coeffs()[0].powi(2);
        let tail = |z: f64| s * s * (-(z / s).powi(2)).exp() / (2.0 * z);
        Some(c2 * (tail(a_half - xm) + tail(a_half + xm)))
    } else {
        None
    };

    let model = ContinuousFrameModel::new(
        vec![DomainRegion::Box {
            bounds: vec![(-a_half, a_half), (-b_half, b_half)],
            density: 1.0,
        }],
        Evaluator::Gabor { window, grid, x_half },
    )?
    .with_norm_bound(norm_bound)?
    .with_lipschitz(lipschitz)?;
    Ok(match defect {
        Some(d) => model.with_truncation_defect(d),
        None => model,
    })
}

/// Any finite frame as an atomic model: atom `k` sits at `t = k` with the
/// frame weight as its mass. Exact, so the truncation defect is zero.
pub fn atomic_from_frame(frame: &Frame) -> Result<ContinuousFrameModel> {
    if frame.is_empty() {
        return Err(ContinuousError::InvalidInput("frame has no vectors".into()));
    }
    let atoms: Vec<([f64; 2], f64)> =
        (0..frame.len()).map(|k| ([k as f64, 0.0], frame.weight(k))).collect();
    let max_norm = frame.vectors().iter().map(|v| v.norm()).fold(0.0, f64::max);
    Ok(ContinuousFrameModel::new(
        vec![DomainRegion::Atoms { atoms }],
        Evaluator::Atomic { vectors: frame.vectors().to_vec() },
    )?
    .with_norm_bound(max_norm.max(f64::MIN_POSITIVE))?
    .with_truncation_defect(0.0))
}

/// The classical witness that bounded norms are necessary for sampling:
/// `Psi(n) = sqrt(n) e_n` with mass `1/n` at `n = 1..=dim`. Parseval for
/// every truncation, but any sampling must include vectors of norm
/// `sqrt(dim)`.
pub fn unbounded_counterexample(dim: usize) -> Result<ContinuousFrameModel> {
    if dim == 0 {
        return Err(ContinuousError::InvalidInput("dimension must be positive".into()));
    }
    let atoms: Vec<([f64; 2], f64)> =
        (1..=dim).map(|n| ([n as f64, 0.0], 1.0 / n as f64)).collect();
    Ok(ContinuousFrameModel::new(
        vec![DomainRegion::Atoms { atoms }],
        Evaluator::Unbounded { dim },
    )?
    .with_norm_bound((dim as f64).sqrt())?
    .with_truncation_defect(0.0))
}
