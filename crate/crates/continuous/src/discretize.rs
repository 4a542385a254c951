//! Discretization pipelines for continuous frame models.
//!
//! [`discretize_to_weighted_frame`] realizes a partition as a weighted atomic
//! frame and certifies its bounds against the requested envelope.
//! [`discretize_parseval`] composes partition -> weighted frame -> scalable
//! sampling for near-Parseval models on the unit ball and returns sample
//! points with integer multiplicities, eigen-verified: the lower bound must
//! clear `(1 - eps)` times the model's verified lower bound and the upper
//! bound must stay inside the sampler's selection envelope.
//! [`discretize_general`] reduces any bounded continuous frame to that case
//! by applying the inverse square root of its operator and rescaling the
//! measure, then maps the samples back to the original evaluator.
//! [`reverse_direction_measure`] packages a sampled multiset as a
//! counting-measure model, the opposite direction of the equivalence.

use crate::error::{ContinuousError, Result};
use crate::model::{ContinuousFrameModel, DomainRegion, Evaluator, Point};
use crate::net::{epsilon_net_discretize, net_l1_defect, DomainPartitionCell};
use crate::quadrature::{quadrature_frame_operator_with, QuadratureConfig};
use frameforge_core::tol::DEFAULT_CERT_TOL;
use frameforge_core::{frame_bounds, C64, CVector, Frame, FrameBounds};
use frameforge_sampler::{sample_scalable, Certificate, SampleConfig, SampleReport, ScalableFrame};

/// The scalable sampler rejects deviations at or above this gate.
const SCALABLE_GATE: f64 = 1.0 / 256.0;
/// Floor for the deviation handed to the sampler; keeps its internal
/// sequence arithmetic in well-tested territory on exactly-Parseval inputs.
const DEVIATION_FLOOR: f64 = 1e-6;

#[derive(Debug, Clone)]
pub struct DiscretizeConfig {
    /// Starting per-axis resolution for model verification quadrature.
    pub resolution: usize,
    pub quadrature: QuadratureConfig,
    pub sample: SampleConfig,
    /// Cap on the internal oscillation target; the partition never chases a
    /// tighter envelope than this.
    pub epsilon_zero_cap: f64,
    /// Denominator cap when snapping cell masses to rationals.
    pub denominator_cap: u64,
    /// Accuracy handed to the Parseval pipeline by the bounded reduction.
    pub general_epsilon: f64,
}

impl Default for DiscretizeConfig {
    fn default() -> Self {
        DiscretizeConfig {
            resolution: 64,
            quadrature: QuadratureConfig::default(),
            sample: SampleConfig::default(),
            epsilon_zero_cap: 1.0 / 512.0,
            denominator_cap: 1 << 21,
            general_epsilon: 0.5,
        }
    }
}

/// A partition realized as a weighted atomic frame.
#[derive(Debug, Clone)]
pub struct WeightedDiscretization {
    pub frame: Frame,
    pub bounds: FrameBounds,
    /// Weighted L1 oscillation of the generating partition.
    pub oscillation: f64,
    /// True when every cell radius was modulus-backed.
    pub rigorous: bool,
}

/// Weighted frame `(Psi(t_i), mass_i)` over the partition's sample points,
/// with eigen bounds certified inside `1 +/- epsilon_zero`.
pub fn discretize_to_weighted_frame(
    model: &ContinuousFrameModel,
    cells: &[DomainPartitionCell],
    epsilon_zero: f64,
) -> Result<WeightedDiscretization> {
    if !(epsilon_zero.is_finite() && epsilon_zero > 0.0) {
        return Err(ContinuousError::InvalidInput(format!(
            "bound envelope must be positive and finite, got {epsilon_zero}"
        )));
    }
    if cells.is_empty() {
        return Err(ContinuousError::InvalidInput("no cells to discretize".into()));
    }
    let vectors: Vec<CVector> = cells.iter().map(|c| model.eval(c.sample)).collect();
    let weights: Vec<f64> = cells.iter().map(|c| c.mass).collect();
    let frame = Frame::new(model.field(), model.dim(), vectors, Some(weights))?;
    let bounds = frame_bounds(&frame);
    let deviation = (1.0 - bounds.lower).max(bounds.upper - 1.0);
    if deviation > epsilon_zero + DEFAULT_CERT_TOL {
        return Err(ContinuousError::DiscretizationFailure(format!(
            "weighted frame bounds ({:.12e}, {:.12e}) leave the 1 +/- {:.3e} envelope",
            bounds.lower, bounds.upper, epsilon_zero
        )));
    }
    Ok(WeightedDiscretization {
        frame,
        bounds,
        oscillation: net_l1_defect(cells),
        rigorous: cells.iter().all(|c| c.rigorous),
    })
}

/// A certified sampling of a continuous frame model: points with integer
/// multiplicities whose weighted family is eigen-verified against the model.
#[derive(Debug, Clone)]
pub struct SampledContinuousFrame {
    pub points: Vec<Point>,
    pub multiplicities: Vec<usize>,
    /// Eigen bounds of `sum_k mult_k Psi(t_k) Psi(t_k)^*` for the model's
    /// own evaluator.
    pub bounds: FrameBounds,
    /// Requested accuracy.
    pub epsilon: f64,
    /// Oscillation target the partition was built for.
    pub epsilon_zero: f64,
    /// Measured deviation of the weighted partition frame from Parseval.
    pub parseval_deviation: f64,
    /// Largest sampled vector norm (of the original evaluator).
    pub max_sample_norm: f64,
    /// Rescale constant applied by the bounded reduction; one on the
    /// Parseval path.
    pub rescale: f64,
    /// Every inequality checked along the way, sampler stages included.
    pub certificates: Vec<Certificate>,
    /// True when all partition radii were modulus-backed.
    pub rigorous: bool,
    pub report: SampleReport,
}

/// Eigen bounds and largest norm of the multiset `(Psi(p_k), mult_k)`.
fn verify_sample(
    model: &ContinuousFrameModel,
    points: &[Point],
    multiplicities: &[usize],
) -> Result<(FrameBounds, f64)> {
    let vectors: Vec<CVector> = points.iter().map(|p| model.eval(*p)).collect();
    let max_norm = vectors.iter().map(|v| v.norm()).fold(0.0, f64::max);
    let weights: Vec<f64> = multiplicities.iter().map(|&m| m as f64).collect();
    let frame = Frame::new(model.field(), model.dim(), vectors, Some(weights))?;
    Ok((frame_bounds(&frame), max_norm))
}

pub fn discretize_parseval_with(
    model: &ContinuousFrameModel,
    epsilon: f64,
    cfg: &DiscretizeConfig,
) -> Result<SampledContinuousFrame> {
    if !(epsilon.is_finite() && epsilon > 0.0 && epsilon < 1.0) {
        return Err(ContinuousError::InvalidInput(format!(
            "target accuracy must lie in (0, 1), got {epsilon}"
        )));
    }
    let nb = model.norm_bound.ok_or_else(|| {
        ContinuousError::InvalidInput(
            "model must declare a norm bound; the sampling theorem needs samples on the unit ball"
                .into(),
        )
    })?;
    if nb > 1.0 + 1e-9 {
        return Err(ContinuousError::InvalidInput(format!(
            "norm bound {nb} exceeds one; reduce through the bounded pipeline first"
        )));
    }

    // Verify the model is a near-Parseval continuous frame.
    let op = quadrature_frame_operator_with(model, cfg.resolution, &cfg.quadrature)?;
    let (model_lo, model_hi) = op.eigen_bounds();
    if model_lo <= DEFAULT_CERT_TOL * model_hi.max(1.0) {
        return Err(ContinuousError::NotAContinuousFrame {
            lower: model_lo,
            tolerance: DEFAULT_CERT_TOL,
        });
    }
    let eta = (1.0 - model_lo).max(model_hi - 1.0).max(0.0);

    // Partition tight enough that the weighted frame deviation stays within
    // the model deviation plus the oscillation budget.
    let eps0 = (epsilon / 2.0).min(cfg.epsilon_zero_cap);
    let cells: Vec<DomainPartitionCell> = epsilon_net_discretize(model, eps0 / 3.0)?
        .into_iter()
        .filter(|c| c.mass > 0.0)
        .collect();
    let weighted = discretize_to_weighted_frame(model, &cells, eps0 + eta)?;
    let deviation =
        (1.0 - weighted.bounds.lower).max(weighted.bounds.upper - 1.0).max(0.0);
    let eps_s = (deviation * (1.0 + 1e-6) + 1e-9).max(DEVIATION_FLOOR);
    if eps_s >= SCALABLE_GATE {
        return Err(ContinuousError::DiscretizationFailure(format!(
            "weighted family deviates {deviation:.6e} from Parseval; \
             the sampling pipeline needs deviation below 1/256"
        )));
    }

    // Hand the unweighted vectors with square-root-mass scalars to the
    // certified sampler.
    let base = Frame::new(
        model.field(),
        model.dim(),
        cells.iter().map(|c| model.eval(c.sample)).collect(),
        None,
    )?;
    let scalars: Vec<f64> = cells.iter().map(|c| c.mass.sqrt()).collect();
    let scalable = ScalableFrame::with_denominator_cap(base, &scalars, eps_s, cfg.denominator_cap)?;
    let report = sample_scalable(&scalable, &cfg.sample)?;

    // Map selected indices back to domain points and re-verify against the
    // model's own evaluator.
    let points: Vec<Point> = report.indices.iter().map(|&i| cells[i].sample).collect();
    let multiplicities = report.multiplicities.clone();
    let (bounds, max_norm) = verify_sample(model, &points, &multiplicities)?;

    let mut certificates = report.certificates.clone();
    let floor = (1.0 - epsilon) * model_lo;
    certificates.push(Certificate::global(
        "sampled lower bound clears (1 - eps) x model lower",
        floor,
        bounds.lower,
        DEFAULT_CERT_TOL * model_hi.max(1.0),
    ));
    certificates.push(Certificate::global(
        "sampled upper bound inside the selection envelope",
        bounds.upper,
        report.upper_envelope,
        DEFAULT_CERT_TOL * report.upper_envelope,
    ));
    for cert in &certificates[certificates.len() - 2..] {
        if !cert.holds() {
            return Err(ContinuousError::DiscretizationFailure(format!(
                "certificate failed: {} ({:.6e} vs {:.6e})",
                cert.name, cert.lhs, cert.rhs
            )));
        }
    }

    Ok(SampledContinuousFrame {
        points,
        multiplicities,
        bounds,
        epsilon,
        epsilon_zero: eps0,
        parseval_deviation: deviation,
        max_sample_norm: max_norm,
        rescale: 1.0,
        certificates,
        rigorous: weighted.rigorous,
        report,
    })
}

pub fn discretize_parseval(
    model: &ContinuousFrameModel,
    epsilon: f64,
) -> Result<SampledContinuousFrame> {
    discretize_parseval_with(model, epsilon, &DiscretizeConfig::default())
}

fn scale_measure(domain: &[DomainRegion], factor: f64) -> Vec<DomainRegion> {
    domain
        .iter()
        .map(|region| match region {
            DomainRegion::Box { bounds, density } => DomainRegion::Box {
                bounds: bounds.clone(),
                density: density * factor,
            },
            DomainRegion::Atoms { atoms } => DomainRegion::Atoms {
                atoms: atoms.iter().map(|(t, m)| (*t, m * factor)).collect(),
            },
        })
        .collect()
}

/// Sample any bounded continuous frame: normalize by the inverse square root
/// of its operator, rescale the measure so the normalized samples sit on the
/// unit ball, run the Parseval pipeline, and map the points back.
pub fn discretize_general_with(
    model: &ContinuousFrameModel,
    cfg: &DiscretizeConfig,
) -> Result<SampledContinuousFrame> {
    let nb = model.norm_bound.ok_or_else(|| {
        ContinuousError::InvalidInput(
            "bounded continuous frame required: declare a norm bound".into(),
        )
    })?;
    let op = quadrature_frame_operator_with(model, cfg.resolution, &cfg.quadrature)?;
    let (model_lo, model_hi) = op.eigen_bounds();
    if model_lo <= DEFAULT_CERT_TOL * model_hi.max(1.0) {
        return Err(ContinuousError::NotAContinuousFrame {
            lower: model_lo,
            tolerance: DEFAULT_CERT_TOL,
        });
    }
    let inv_root = op.inv_sqrt(DEFAULT_CERT_TOL)?;

    // The normalized samples have norm at most nb / sqrt(model_lo). Snap the
    // squared rescale upward onto a 1/64 grid so the transformed masses stay
    // rational-friendly; the guard tolerates representation noise without
    // giving up the upper-bound property.
    let c_sq_raw = nb * nb / model_lo;
    let c_sq = ((c_sq_raw * 64.0) * (1.0 - 1e-12) - 1e-12).ceil() / 64.0;
    let c = c_sq.sqrt();
    let matrix = inv_root.map(|z| z / C64::new(c, 0.0));
    let transformed = ContinuousFrameModel {
        domain: scale_measure(&model.domain, c_sq),
        evaluator: Evaluator::Transformed {
            matrix,
            inner: Box::new(model.evaluator.clone()),
        },
        norm_bound: Some(1.0),
        // Operator norm of the inverse root is 1 / sqrt(model_lo).
        lipschitz: model.lipschitz.map(|l| l / (c * model_lo.sqrt())),
        truncation_defect: model.truncation_defect,
    };

    let inner = discretize_parseval_with(&transformed, cfg.general_epsilon, cfg)?;

    // The measure rescale leaves the domain geometry alone, so inner points
    // are original points; verify the original evaluator's family.
    let (bounds, max_norm) = verify_sample(model, &inner.points, &inner.multiplicities)?;
    let mut certificates = inner.certificates.clone();
    let cert = Certificate::global(
        "mapped-back sampling stays a frame",
        DEFAULT_CERT_TOL * bounds.upper.max(1.0),
        bounds.lower,
        0.0,
    );
    let ok = cert.holds();
    certificates.push(cert);
    if !ok {
        return Err(ContinuousError::DiscretizationFailure(format!(
            "mapped-back sampling lost the frame property: lower bound {:.6e}",
            bounds.lower
        )));
    }

    Ok(SampledContinuousFrame {
        points: inner.points,
        multiplicities: inner.multiplicities,
        bounds,
        epsilon: cfg.general_epsilon,
        epsilon_zero: inner.epsilon_zero,
        parseval_deviation: inner.parseval_deviation,
        max_sample_norm: max_norm,
        rescale: c,
        certificates,
        rigorous: inner.rigorous,
        report: inner.report,
    })
}

pub fn discretize_general(model: &ContinuousFrameModel) -> Result<SampledContinuousFrame> {
    discretize_general_with(model, &DiscretizeConfig::default())
}

/// Wrap a sampled multiset as an atomic model under the counting-with-
/// multiplicity measure; its quadrature operator reproduces the discrete
/// frame operator exactly.
pub fn reverse_direction_measure(
    model: &ContinuousFrameModel,
    points: &[Point],
    multiplicities: &[usize],
) -> Result<ContinuousFrameModel> {
    if points.is_empty() || points.len() != multiplicities.len() {
        return Err(ContinuousError::InvalidInput(
            "need one multiplicity per sample point".into(),
        ));
    }
    if multiplicities.iter().any(|&m| m == 0) {
        return Err(ContinuousError::InvalidInput(
            "counting measures need multiplicities of at least one".into(),
        ));
    }
    let (bounds, max_norm) = verify_sample(model, points, multiplicities)?;
    if !bounds.is_frame() {
        return Err(ContinuousError::InvalidInput(format!(
            "sampled family is not a frame: lower bound {:.6e}",
            bounds.lower
        )));
    }
    // Merge repeats of the same point into one atom of total multiplicity.
    let mut atoms: Vec<(Point, f64)> = Vec::new();
    for (p, &m) in points.iter().zip(multiplicities) {
        match atoms.iter_mut().find(|(q, _)| {
            q[0].to_bits() == p[0].to_bits() && q[1].to_bits() == p[1].to_bits()
        }) {
            Some((_, mass)) => *mass += m as f64,
            None => atoms.push((*p, m as f64)),
        }
    }
    let mut wrapped = ContinuousFrameModel::new(
        vec![DomainRegion::Atoms { atoms }],
        model.evaluator.clone(),
    )?
    .with_norm_bound(max_norm.max(f64::MIN_POSITIVE))?;
    wrapped.lipschitz = model.lipschitz;
    wrapped.truncation_defect = model.truncation_defect;
    Ok(wrapped)
}
