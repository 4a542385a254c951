//! Rational bookkeeping for scalars: best rational approximation under a
//! denominator cap (continued fractions) and checked lcm folding.

use num_rational::Ratio;

/// Best rational approximation of `x` with denominator at most `cap`, via the
/// continued-fraction convergents. Exact rationals with denominator within the
/// cap are recovered exactly. Returns `None` if `x` is not a finite
/// nonnegative number, `cap` is zero, or the numerator overflows `u64`.
pub fn approx_ratio(x: f64, cap: u64) -> Option<Ratio<u64>> {
    if !x.is_finite() || x < 0.0 || cap == 0 {
        return None;
    }
    if x > u64::MAX as f64 / 2.0 {
        return None;
    }

    // convergents h_k / k_k of the continued fraction of x
    let (mut h0, mut k0): (u128, u128) = (1, 0);
    let (mut h1, mut k1): (u128, u128) = (x.floor() as u128, 1);
    let mut frac = x - x.floor();
    for _ in 0..64 {
        // stop once the convergent reproduces x to f64 resolution
        let approx = h1 as f64 / k1 as f64;
        if (approx - x).abs() <= f64::EPSILON * x.max(1.0) || frac <= f64::EPSILON {
            break;
        }
        let inv = 1.0 / frac;
        let a = inv.floor();
        if a >= u128::MAX as f64 {
            break;
        }
        frac = inv - a;
        let a = a as u128;
        let h2 = a.checked_mul(h1)?.checked_add(h0)?;
        let k2 = a.checked_mul(k1)?.checked_add(k0)?;
        if k2 > cap as u128 {
            break;
        }
        (h0, k0) = (h1, k1);
        (h1, k1) = (h2, k2);
    }
    if h1 > u64::MAX as u128 {
        return None;
    }
    Some(Ratio::new(h1 as u64, k1 as u64))
}

pub fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// lcm with an explicit cap so runaway denominators surface as errors.
pub fn lcm_capped(a: u128, b: u128, cap: u128) -> Option<u128> {
    if a == 0 || b == 0 {
        return Some(a.max(b).max(1));
    }
    let l = (a / gcd_u128(a, b)).checked_mul(b)?;
    if l > cap {
        None
    } else {
        Some(l)
    }
}
