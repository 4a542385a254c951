use crate::bounds::{BoundsMethod, FrameBounds};
use crate::error::FrameError;
use crate::frame::{Field, Frame};
use crate::tol;
use crate::{C64, CVector};
use rand::Rng;

/// Rayleigh-quotient probe: evaluates `sum_j w_j |<v, x_j>|^2` on random unit
/// vectors and reports the observed extremes. The result brackets nothing by
/// itself; it always lies inside the eigen bounds, which makes it a cheap
/// cross-check of the exact certificate.
pub fn rayleigh_probe<R: Rng + ?Sized>(
    frame: &Frame,
    trials: usize,
    rng: &mut R,
) -> Result<FrameBounds, FrameError> {
    if trials == 0 {
        return Err(FrameError::InvalidInput("probe needs at least one trial".into()));
    }
    let d = frame.dim();
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for _ in 0..trials {
        let v = random_unit(frame.field(), d, rng);
        let q = quadratic_form(frame, &v);
        lo = lo.min(q);
        hi = hi.max(q);
    }
    Ok(FrameBounds::new(lo, hi, tol::DEFAULT_CERT_TOL, BoundsMethod::RayleighProbe))
}

/// `sum_j w_j |<v, x_j>|^2` for a single probe vector.
pub fn quadratic_form(frame: &Frame, v: &CVector) -> f64 {
    (0..frame.len())
        .map(|j| {
            let ip = frame.vector(j).dotc(v);
            frame.weight(j) * ip.norm_sqr()
        })
        .sum()
}

fn random_unit<R: Rng + ?Sized>(field: Field, dim: usize, rng: &mut R) -> CVector {
    loop {
        let v = CVector::from_fn(dim, |_, _| match field {
            Field::Real => C64::new(gaussian(rng), 0.0),
            Field::Complex => C64::new(gaussian(rng), gaussian(rng)),
        });
        let n = v.norm();
        if n > 1e-6 {
            return v / C64::new(n, 0.0);
        }
    }
}

/// Standard normal via Box-Muller; avoids a rand_distr dependency.
fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    let u1: f64 = rng.random::<f64>().max(f64::MIN_POSITIVE);
    let u2: f64 = rng.random();
    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
}
