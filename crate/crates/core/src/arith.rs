//! Small helpers around exact integers and rationals.

use alloc::string::String;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number.
pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn binomial_q(n: u64, k: u64) -> Rational {
    Rational::from_integer(binomial(n, k))
}

pub fn pow_u64(base: u64, exp: u64) -> BigInt {
    num_traits::pow(BigInt::from(base), exp as usize)
}

pub fn gcd_all(values: &[u64]) -> u64 {
    values.iter().fold(0u64, |g, &v| g.gcd(&v))
}

/// Parses `p/q` or `p` into a rational.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    if text.is_empty() {
        return None;
    }
    let value = Rational::from_str(text).ok()?;
    Some(value)
}

/// Sign of a rational as -1, 0 or 1.
pub fn sign(x: &Rational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Decimal rendering with `digits` fractional digits, truncated toward zero.
pub fn to_decimal(x: &Rational, digits: usize) -> String {
    use alloc::format;
    let neg = x.is_negative();
    let x = x.abs();
    let scale = num_traits::pow(BigInt::from(10u32), digits);
    let scaled = (x.numer() * &scale) / x.denom();
    let int_part = &scaled / &scale;
    let frac_part = &scaled % &scale;
    let mut out = String::new();
    if neg && !scaled.is_zero() {
        out.push('-');
    }
    if digits == 0 {
        out.push_str(&format!("{int_part}"));
    } else {
        out.push_str(&format!("{int_part}.{frac_part:0>digits$}"));
    }
    out
}
