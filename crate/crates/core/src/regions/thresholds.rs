//! Integer thresholds deciding whether the `D_{v0} + D_{v1}` polynomials have
//! a positive root.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{binomial, pow_u64, Rational};
use crate::error::{Error, Result};

/// Decides `s > ln(1 + a2 - a1) / (ln a2 - ln a1)` without logarithms: the
/// inequality is equivalent to `a2^s > a1^s (1 + a2 - a1)`.
pub fn threshold_s_exceeds_delta(a1: u64, a2: u64, s: u64) -> Result<bool> {
    if a1 == 0 || a1 >= a2 {
        return Err(Error::BadOrder);
    }
    Ok(pow_u64(a2, s) > pow_u64(a1, s) * BigInt::from(1 + a2 - a1))
}

/// `alpha_p = sum_{j<p} ((j+1)/(r-2) - b) C(j+r-2, j+1) b^j a^{p-1-j} - a^p`.
pub fn alpha(a: u64, b: u64, r: u64, p: u64) -> Rational {
    debug_assert!(r >= 3);
    let r2 = Rational::from_integer(BigInt::from(r - 2));
    let bq = Rational::from_integer(BigInt::from(b));
    let mut total = Rational::zero();
    for j in 0..p {
        let factor = Rational::from_integer(BigInt::from(j + 1)) / &r2 - &bq;
        let term = Rational::from_integer(
            binomial(j + r - 2, j + 1) * pow_u64(b, j) * pow_u64(a, p - 1 - j),
        );
        total += factor * term;
    }
    total - Rational::from_integer(pow_u64(a, p))
}

/// The bracket `[m + 1, floor(3.2 m) + 1]` with `m = b (r - 2)`.
pub fn delta_r_bracket(b: u64, r: u64) -> (u64, u64) {
    let m = b * (r - 2);
    (m + 1, 16 * m / 5 + 1)
}

/// Index of the single sign flip of `alpha_1, alpha_2, ...` (the largest `p`
/// with `alpha_p <= 0`), searched up to `limit + 1`.
fn flip_index(a: u64, b: u64, r: u64, limit: u64) -> Option<u64> {
    let signs: Vec<bool> = (1..=limit + 1)
        .map(|p| alpha(a, b, r, p) > Rational::zero())
        .collect();
    let first = signs.iter().position(|&pos| pos)?;
    signs[first..]
        .iter()
        .all(|&pos| pos)
        .then_some(first as u64)
}

/// The largest `p` with `alpha_p <= 0`, required to lie in
/// `[m + 1, floor(3.2 m) + 1]`. The scan also checks that `alpha` flips sign
/// exactly once.
pub fn threshold_delta_r(a: u64, b: u64, r: u64) -> Result<u64> {
    if a == 0 || a >= b || r < 3 {
        return Err(Error::BadOrder);
    }
    let (lo, hi) = delta_r_bracket(b, r);
    match flip_index(a, b, r, hi) {
        Some(found) if lo <= found && found <= hi => Ok(found),
        Some(found) => Err(Error::BoundViolated { found, lo, hi }),
        None => Err(Error::BoundViolated {
            found: hi + 1,
            lo,
            hi,
        }),
    }
}

/// The same flip index, checked only against the bracket that negativity of
/// `alpha_p` for `p <= m` actually guarantees: `[m, floor(3.2 m) + 1]`. The
/// flip can sit at `m` itself (e.g. `a = 1, b = 2, r = 3`).
pub fn delta_r(a: u64, b: u64, r: u64) -> Result<u64> {
    if a == 0 || a >= b || r < 3 {
        return Err(Error::BadOrder);
    }
    let (lo, hi) = delta_r_bracket(b, r);
    match flip_index(a, b, r, hi) {
        Some(found) if lo - 1 <= found && found <= hi => Ok(found),
        Some(found) => Err(Error::BoundViolated {
            found,
            lo: lo - 1,
            hi,
        }),
        None => Err(Error::BoundViolated {
            found: hi + 1,
            lo: lo - 1,
            hi,
        }),
    }
}
