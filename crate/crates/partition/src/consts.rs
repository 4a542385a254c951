//! Closed-form constants for the tight-frame reduction recursion.
//!
//! The recursion lowers a nominal tight bound `B` by
//! `B' = B/2 - sqrt(2 B) - 1` per level and stops once the bound lands in
//! [79, 200). Starting from 200 the next bound is exactly 79, so the stop
//! band is always reached. The per-level split target and the global upper
//! constant are derived from the same formulas.

/// Nominal bound of the next level: `B/2 - sqrt(2 B) - 1`.
pub fn next_level_bound(b: f64) -> f64 {
    0.5 * b - (2.0 * b).sqrt() - 1.0
}

/// Per-level Bessel target in Parseval coordinates:
/// `1/2 + sqrt(2)/sqrt(B) + 1/B`.
pub fn level_target(b: f64) -> f64 {
    0.5 + 2.0f64.sqrt() / b.sqrt() + 1.0 / b
}

/// Two-way split bound `(1/sqrt(2) + sqrt(delta))^2` for a Parseval frame
/// whose weighted squared norms are at most `delta`.
pub fn two_split_bound(delta: f64) -> f64 {
    let s = 0.5f64.sqrt() + delta.sqrt();
    s * s
}

/// Stop band for the recursion: levels end once the nominal bound is in
/// `[STOP_LOW, STOP_HIGH)`.
pub const STOP_LOW: f64 = 79.0;
pub const STOP_HIGH: f64 = 200.0;

/// Sum of the geometric envelope `sum_m 10 (79/200)^{m/2} / sqrt(79)` that
/// controls the accumulated ratio of per-part bounds.
pub fn ratio_series_sum() -> f64 {
    (10.0 / STOP_LOW.sqrt()) / (1.0 - (STOP_LOW / STOP_HIGH).sqrt())
}

/// Upper limit on the ratio upper/lower of any certified part.
pub fn ratio_limit() -> f64 {
    ratio_series_sum().exp()
}

/// Global upper bound on any certified part's upper frame bound when the
/// input is tight with bound at least 1: `200 * exp(series)`.
pub fn global_upper_bound() -> f64 {
    STOP_HIGH * ratio_limit()
}
