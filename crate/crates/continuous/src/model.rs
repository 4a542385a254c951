//! Continuous frame models over 1- and 2-dimensional domains.
//!
//! A model is a measure space (union of constant-density boxes and a list of
//! atoms) together with an evaluator `t -> Psi(t)` into a finite-dimensional
//! representation space. Frame statements are about the operator
//! `T = integral Psi(t) Psi(t)^* dmu(t)`; everything downstream (quadrature,
//! nets, discretization) consumes this type.

use crate::error::{ContinuousError, Result};
use frameforge_core::{C64, CMatrix, CVector, Field};
use std::f64::consts::PI;

/// Domain point; 1-d models keep the second coordinate at zero.
pub type Point = [f64; 2];

/// One piece of the underlying measure.
#[derive(Debug, Clone)]
pub enum DomainRegion {
    /// Axis-aligned box (1 or 2 axes) carrying a constant density.
    Box { bounds: Vec<(f64, f64)>, density: f64 },
    /// Atomic part: points with point masses.
    Atoms { atoms: Vec<(Point, f64)> },
}

impl DomainRegion {
    pub fn mass(&self) -> f64 {
        match self {
            DomainRegion::Box { bounds, density } => {
                density * bounds.iter().map(|(lo, hi)| hi - lo).product::<f64>()
            }
            DomainRegion::Atoms { atoms } => atoms.iter().map(|(_, m)| m).sum(),
        }
    }
}

/// Polynomial-times-Gaussian window `p(x) exp(-x^2 / (2 sigma^2))`.
///
/// The class is closed under differentiation, so window derivatives (needed
/// for rigorous translation moduli) stay in closed form.
#[derive(Debug, Clone)]
pub struct GaborWindow {
    coeffs: Vec<f64>,
    sigma: f64,
}

impl GaborWindow {
    pub fn new(coeffs: Vec<f64>, sigma: f64) -> Result<Self> {
        if !(sigma.is_finite() && sigma > 0.0) {
            return Err(ContinuousError::InvalidInput(format!(
                "window width must be positive and finite, got {sigma}"
            )));
        }
        if coeffs.is_empty() || coeffs.iter().any(|c| !c.is_finite()) {
            return Err(ContinuousError::InvalidInput(
                "window polynomial coefficients must be finite and non-empty".into(),
            ));
        }
        if coeffs.iter().all(|&c| c == 0.0) {
            return Err(ContinuousError::InvalidInput(
                "window must not be identically zero".into(),
            ));
        }
        Ok(GaborWindow { coeffs, sigma })
    }

    pub fn gaussian(sigma: f64) -> Result<Self> {
        GaborWindow::new(vec![1.0], sigma)
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn eval(&self, x: f64) -> f64 {
        let mut p = 0.0;
        for &c in self.coeffs.iter().rev() {
            p = p * x + c;
        }
        p * (-x * x / (2.0 * self.sigma * self.sigma)).exp()
    }

    /// d/dx of the window: `p -> p' - x p / sigma^2`, same Gaussian factor.
    pub fn derivative(&self) -> GaborWindow {
        let n = self.coeffs.len();
        let s2 = self.sigma * self.sigma;
        let mut d = vec![0.0; n + 1];
        for k in 1..n {
            d[k - 1] += k as f64 * self.coeffs[k];
        }
        for k in 0..n {
            d[k + 1] -= self.coeffs[k] / s2;
        }
        while d.len() > 1 && *d.last().unwrap() == 0.0 {
            d.pop();
        }
        GaborWindow { coeffs: d, sigma: self.sigma }
    }
}

/// Closed-form `integral_a^b exp(2 pi i w t) dt`.
pub fn interval_moment(a: f64, b: f64, w: f64) -> C64 {
    if w.abs() < 1e-300 {
        return C64::new(b - a, 0.0);
    }
    let tw = 2.0 * PI * w;
    let num = C64::new(0.0, tw * b).exp() - C64::new(0.0, tw * a).exp();
    num / C64::new(0.0, tw)
}

/// Same moment over a finite union of intervals.
pub fn set_moment(intervals: &[(f64, f64)], w: f64) -> C64 {
    intervals.iter().map(|&(a, b)| interval_moment(a, b, w)).sum()
}

/// The map `t -> Psi(t)` into the declared representation space.
#[derive(Debug, Clone)]
pub enum Evaluator {
    /// `Psi(t) = v` everywhere.
    Constant { vector: CVector },
    /// Vectors indexed by the nearest integer to `t`; made for atom lists
    /// sitting on `0, 1, 2, ...`.
    Atomic { vectors: Vec<CVector> },
    /// Piecewise constant in the first coordinate: `vectors[i]` on
    /// `[breakpoints[i], breakpoints[i+1])`.
    Piecewise { breakpoints: Vec<f64>, vectors: Vec<CVector> },
    /// Orthonormalized exponentials on a union of intervals `J`:
    /// `Psi(x) = W m(x)` with `m_f(x) = integral_J exp(2 pi i (x - f) t) dt`
    /// and `W` the inverse square root of the Gram of the chosen frequencies.
    Exponential { intervals: Vec<(f64, f64)>, freqs: Vec<f64>, whiten: CMatrix },
    /// Short-time transform coefficients of a window against a sample grid:
    /// `v_k(a, b) = sqrt(dx) exp(2 pi i b x_k) g(x_k - a)`.
    Gabor { window: GaborWindow, grid: usize, x_half: f64 },
    /// `Psi(n) = sqrt(n) e_n` truncated to the first `dim` coordinates.
    Unbounded { dim: usize },
    /// A fixed matrix applied to an inner evaluator.
    Transformed { matrix: CMatrix, inner: Box<Evaluator> },
}

impl Evaluator {
    pub fn dim(&self) -> usize {
        match self {
            Evaluator::Constant { vector } => vector.len(),
            Evaluator::Atomic { vectors } => vectors[0].len(),
            Evaluator::Piecewise { vectors, .. } => vectors[0].len(),
            Evaluator::Exponential { freqs, .. } => freqs.len(),
            Evaluator::Gabor { grid, .. } => *grid,
            Evaluator::Unbounded { dim } => *dim,
            Evaluator::Transformed { matrix, .. } => matrix.nrows(),
        }
    }

    pub fn field(&self) -> Field {
        fn all_real(vs: &[CVector]) -> bool {
            vs.iter().all(|v| v.iter().all(|z| z.im == 0.0))
        }
        match self {
            Evaluator::Constant { vector } => {
                if vector.iter().all(|z| z.im == 0.0) { Field::Real } else { Field::Complex }
            }
            Evaluator::Atomic { vectors } | Evaluator::Piecewise { vectors, .. } => {
                if all_real(vectors) { Field::Real } else { Field::Complex }
            }
            Evaluator::Unbounded { .. } => Field::Real,
            Evaluator::Exponential { .. } | Evaluator::Gabor { .. } => Field::Complex,
            Evaluator::Transformed { matrix, inner } => {
                if matrix.iter().all(|z| z.im == 0.0) && inner.field() == Field::Real {
                    Field::Real
                } else {
                    Field::Complex
                }
            }
        }
    }

    pub fn eval(&self, t: Point) -> CVector {
        match self {
            Evaluator::Constant { vector } => vector.clone(),
            Evaluator::Atomic { vectors } => {
                let idx = t[0].round().max(0.0) as usize;
                vectors[idx.min(vectors.len() - 1)].clone()
            }
            Evaluator::Piecewise { breakpoints, vectors } => {
                let idx = breakpoints.partition_point(|&b| b <= t[0]);
                vectors[idx.saturating_sub(1).min(vectors.len() - 1)].clone()
            }
            Evaluator::Exponential { intervals, freqs, whiten } => {
                let m = CVector::from_iterator(
                    freqs.len(),
                    freqs.iter().map(|&f| set_moment(intervals, t[0] - f)),
                );
                whiten * m
            }
            Evaluator::Gabor { window, grid, x_half } => {
                let (a, b) = (t[0], t[1]);
                let dx = 2.0 * x_half / *grid as f64;
                let root = dx.sqrt();
                CVector::from_iterator(
                    *grid,
                    (0..*grid).map(|k| {
                        let xk = -x_half + dx * (k as f64 + 0.5);
                        C64::new(0.0, 2.0 * PI * b * xk).exp() * root * window.eval(xk - a)
                    }),
                )
            }
            Evaluator::Unbounded { dim } => {
                let n = t[0].round() as i64;
                let mut v = CVector::zeros(*dim);
                if n >= 1 && (n as usize) <= *dim {
                    v[(n - 1) as usize] = C64::new((n as f64).sqrt(), 0.0);
                }
                v
            }
            Evaluator::Transformed { matrix, inner } => matrix * inner.eval(t),
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(ContinuousError::InvalidInput(msg));
        match self {
            Evaluator::Constant { vector } => {
                if vector.is_empty() {
                    return bad("constant evaluator needs a non-empty vector".into());
                }
            }
            Evaluator::Atomic { vectors } => {
                if vectors.is_empty() {
                    return bad("atomic evaluator needs at least one vector".into());
                }
                let d = vectors[0].len();
                if d == 0 || vectors.iter().any(|v| v.len() != d) {
                    return bad("atomic evaluator vectors must share a positive dimension".into());
                }
            }
            Evaluator::Piecewise { breakpoints, vectors } => {
                if vectors.is_empty() || breakpoints.len() != vectors.len() {
                    return bad("piecewise evaluator needs one breakpoint per vector".into());
                }
                let d = vectors[0].len();
                if d == 0 || vectors.iter().any(|v| v.len() != d) {
                    return bad("piecewise evaluator vectors must share a positive dimension".into());
                }
                if breakpoints.windows(2).any(|w| !(w[0] < w[1]))
                    || breakpoints.iter().any(|b| !b.is_finite())
                {
                    return bad("piecewise breakpoints must be finite and strictly increasing".into());
                }
            }
            Evaluator::Exponential { intervals, freqs, whiten } => {
                if intervals.is_empty() || intervals.iter().any(|&(a, b)| !(a.is_finite() && b.is_finite() && a < b)) {
                    return bad("exponential evaluator needs finite intervals with positive length".into());
                }
                if freqs.is_empty() || freqs.iter().any(|f| !f.is_finite()) {
                    return bad("exponential evaluator needs finite frequencies".into());
                }
                if whiten.nrows() != freqs.len() || whiten.ncols() != freqs.len() {
                    return bad("whitening matrix must be square with one row per frequency".into());
                }
            }
            Evaluator::Gabor { grid, x_half, .. } => {
                if *grid == 0 {
                    return bad("transform grid must have at least one sample".into());
                }
                if !(x_half.is_finite() && *x_half > 0.0) {
                    return bad("grid half-width must be positive and finite".into());
                }
            }
            Evaluator::Unbounded { dim } => {
                if *dim == 0 {
                    return bad("truncation dimension must be positive".into());
                }
            }
            Evaluator::Transformed { matrix, inner } => {
                inner.validate()?;
                if matrix.ncols() != inner.dim() || matrix.nrows() == 0 {
                    return bad("transform matrix must act on the inner representation".into());
                }
            }
        }
        Ok(())
    }
}

/// A continuous frame candidate: measure, evaluator, and declared metadata.
#[derive(Debug, Clone)]
pub struct ContinuousFrameModel {
    pub domain: Vec<DomainRegion>,
    pub evaluator: Evaluator,
    /// Declared bound on `sup_t ||Psi(t)||`; quadrature verifies samples
    /// never exceed it beyond tolerance.
    pub norm_bound: Option<f64>,
    /// Declared modulus of continuity `||Psi(s) - Psi(t)|| <= L |s - t|`.
    pub lipschitz: Option<f64>,
    /// Reported defect of the finite-dimensional representation relative to
    /// the ideal model it stands in for (exact models report zero).
    pub truncation_defect: Option<f64>,
}

impl ContinuousFrameModel {
    pub fn new(domain: Vec<DomainRegion>, evaluator: Evaluator) -> Result<Self> {
        if domain.is_empty() {
            return Err(ContinuousError::InvalidInput("domain must be non-empty".into()));
        }
        let mut dims = None;
        for region in &domain {
            match region {
                DomainRegion::Box { bounds, density } => {
                    if bounds.is_empty() || bounds.len() > 2 {
                        return Err(ContinuousError::InvalidInput(
                            "boxes must have one or two axes".into(),
                        ));
                    }
                    if bounds.iter().any(|&(lo, hi)| !(lo.is_finite() && hi.is_finite() && lo < hi)) {
                        return Err(ContinuousError::InvalidInput(
                            "box bounds must be finite with positive width".into(),
                        ));
                    }
                    if !(density.is_finite() && *density >= 0.0) {
                        return Err(ContinuousError::InvalidInput(format!(
                            "density must be finite and nonnegative, got {density}"
                        )));
                    }
                    match dims {
                        None => dims = Some(bounds.len()),
                        Some(d) if d != bounds.len() => {
                            return Err(ContinuousError::InvalidInput(
                                "all boxes must share the same number of axes".into(),
                            ));
                        }
                        _ => {}
                    }
                }
                DomainRegion::Atoms { atoms } => {
                    if atoms.is_empty() {
                        return Err(ContinuousError::InvalidInput(
                            "atom lists must be non-empty".into(),
                        ));
                    }
                    for (t, m) in atoms {
                        if !(t[0].is_finite() && t[1].is_finite() && m.is_finite() && *m >= 0.0) {
                            return Err(ContinuousError::InvalidInput(
                                "atoms need finite locations and nonnegative masses".into(),
                            ));
                        }
                    }
                }
            }
        }
        evaluator.validate()?;
        let model = ContinuousFrameModel {
            domain,
            evaluator,
            norm_bound: None,
            lipschitz: None,
            truncation_defect: None,
        };
        Ok(model)
    }

    pub fn with_norm_bound(mut self, bound: f64) -> Result<Self> {
        if !(bound.is_finite() && bound > 0.0) {
            return Err(ContinuousError::InvalidInput(format!(
                "norm bound must be positive and finite, got {bound}"
            )));
        }
        self.norm_bound = Some(bound);
        Ok(self)
    }

    pub fn with_lipschitz(mut self, modulus: f64) -> Result<Self> {
        if !(modulus.is_finite() && modulus >= 0.0) {
            return Err(ContinuousError::InvalidInput(format!(
                "continuity modulus must be finite and nonnegative, got {modulus}"
            )));
        }
        self.lipschitz = Some(modulus);
        Ok(self)
    }

    pub fn with_truncation_defect(mut self, defect: f64) -> Self {
        self.truncation_defect = Some(defect);
        self
    }

    /// Number of domain coordinates actually in use (1 or 2).
    pub fn domain_dim(&self) -> usize {
        for region in &self.domain {
            match region {
                DomainRegion::Box { bounds, .. } => return bounds.len(),
                DomainRegion::Atoms { atoms } => {
                    if atoms.iter().any(|(t, _)| t[1] != 0.0) {
                        return 2;
                    }
                }
            }
        }
        1
    }

    /// Representation-space dimension.
    pub fn dim(&self) -> usize {
        self.evaluator.dim()
    }

    pub fn field(&self) -> Field {
        self.evaluator.field()
    }

    pub fn eval(&self, t: Point) -> CVector {
        self.evaluator.eval(t)
    }

    pub fn total_mass(&self) -> f64 {
        self.domain.iter().map(|r| r.mass()).sum()
    }

    /// True when the measure is purely atomic.
    pub fn is_atomic(&self) -> bool {
        self.domain.iter().all(|r| matches!(r, DomainRegion::Atoms { .. }))
    }
}
