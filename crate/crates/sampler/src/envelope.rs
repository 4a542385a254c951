//! Quadratic envelopes for a frame split across two orthogonal subspaces.
//!
//! If the projections onto one side have eigen bounds `(k_lower, k_upper)`
//! and the projections onto the other side are `c`-Bessel, then the frame's
//! quadratic form at `x` is controlled by the two projection norms alone:
//! cross terms contribute at most `2 sqrt(k_upper c) p1 p0` in either
//! direction (Cauchy-Schwarz over the two sides).

/// Envelope coefficients; `p1` is the norm of the projection onto the framed
/// side, `p0` the norm on the Bessel side.
#[derive(Clone, Copy, Debug)]
pub struct CrossTermEnvelope {
    pub k_upper: f64,
    pub k_lower: f64,
    pub c: f64,
}

impl CrossTermEnvelope {
    pub fn upper(&self, p1: f64, p0: f64) -> f64 {
        self.k_upper * p1 * p1
            + self.c * p0 * p0
            + 2.0 * (self.k_upper * self.c).sqrt() * p1 * p0
    }

    pub fn lower(&self, p1: f64, p0: f64) -> f64 {
        self.k_lower * p1 * p1 - 2.0 * (self.k_upper * self.c).sqrt() * p1 * p0
    }
}

pub fn cross_term_envelope(k_upper: f64, k_lower: f64, c: f64) -> CrossTermEnvelope {
    CrossTermEnvelope { k_upper, k_lower, c }
}
