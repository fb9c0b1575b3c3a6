//! Descartes' rule of signs and real algebraic numbers given by a polynomial
//! with exactly one positive root.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{sign, Rational};
use crate::error::{Error, Result};
use crate::poly::RatPoly;

/// Number of sign changes in the sequence of non-zero coefficients.
pub fn descartes_sign_changes(p: &RatPoly) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPoly);
    }
    let signs = p.sign_sequence();
    Ok(signs.windows(2).filter(|w| w[0] != w[1]).count())
}

/// The unique positive root of an integer polynomial with one sign change,
/// isolated in the half-open interval `(lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraicNumber {
    poly: RatPoly,
    lo: Rational,
    hi: Rational,
}

/// Rational-root search is skipped above this coefficient size.
const RATIONAL_ROOT_LIMIT: u64 = 10_000_000_000;

impl AlgebraicNumber {
    /// Integer-coefficient defining polynomial (positive content-free multiple).
    pub fn poly(&self) -> &RatPoly {
        &self.poly
    }

    pub fn interval(&self) -> (&Rational, &Rational) {
        (&self.lo, &self.hi)
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    fn leading_sign(&self) -> i8 {
        sign(self.poly.leading().expect("non-zero"))
    }

    /// Where the root lies relative to a rational `x > 0`. One sign evaluation
    /// suffices: below the root `p` has the sign opposite to its leading
    /// coefficient, above it the same sign.
    pub fn cmp_rational(&self, x: &Rational) -> Ordering {
        if !x.is_positive() {
            return Ordering::Greater;
        }
        let s = sign(&self.poly.eval(x));
        if s == 0 {
            Ordering::Equal
        } else if s == self.leading_sign() {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    /// Bisects until the interval is at most `width` wide. Returns a new value.
    pub fn refine(&self, width: &Rational) -> AlgebraicNumber {
        let mut out = self.clone();
        let two = Rational::from_integer(BigInt::from(2));
        while out.width() > *width {
            let mid = (&out.lo + &out.hi) / &two;
            if out.cmp_rational(&mid) == Ordering::Greater {
                out.lo = mid;
            } else {
                out.hi = mid;
            }
        }
        out
    }

    /// The root itself when it is rational.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.cmp_rational(&self.hi) == Ordering::Equal {
            return Some(self.hi.clone());
        }
        let coeffs = self.poly.primitive_integer_coeffs();
        let low = coeffs.iter().find(|c| !c.is_zero())?.abs().to_u64()?;
        let high = coeffs.last()?.abs().to_u64()?;
        if low > RATIONAL_ROOT_LIMIT || high > RATIONAL_ROOT_LIMIT {
            return None;
        }
        let highs = divisors(high);
        for p in divisors(low) {
            for &q in &highs {
                let cand = Rational::new(BigInt::from(p), BigInt::from(q));
                if cand > self.lo && cand <= self.hi && self.cmp_rational(&cand) == Ordering::Equal
                {
                    return Some(cand);
                }
            }
        }
        None
    }

    /// Exact comparison of two roots.
    pub fn compare(&self, other: &AlgebraicNumber) -> Ordering {
        // Both roots are simple, so a common root shows up as a sign change of
        // the gcd across either isolating interval.
        let g = self.poly.gcd(&other.poly);
        if g.degree().unwrap_or(0) > 0 {
            let at_hi = sign(&g.eval(&self.hi));
            let at_lo = sign(&g.eval(&self.lo));
            if at_hi == 0 || at_hi * at_lo < 0 {
                return Ordering::Equal;
            }
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        loop {
            if a.hi <= b.lo {
                return Ordering::Less;
            }
            if b.hi <= a.lo {
                return Ordering::Greater;
            }
            let wa = a.width() / Rational::from_integer(BigInt::from(2));
            let wb = b.width() / Rational::from_integer(BigInt::from(2));
            a = a.refine(&wa);
            b = b.refine(&wb);
        }
    }
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Isolates the unique positive root of `p`. The interval is found by doubling
/// (or halving) from 1 and is then left coarse; call `refine` as needed.
pub fn unique_positive_root(p: &RatPoly) -> Result<AlgebraicNumber> {
    let changes = descartes_sign_changes(p)?;
    if changes != 1 {
        return Err(Error::NotOneSignChange(changes));
    }
    let ints = p.primitive_integer_coeffs();
    let poly = RatPoly::from_coeffs(ints.into_iter().map(Rational::from_integer).collect());
    let two = Rational::from_integer(BigInt::from(2));
    let mut out = AlgebraicNumber {
        poly,
        lo: Rational::zero(),
        hi: Rational::one(),
    };
    while out.cmp_rational(&out.hi) == Ordering::Greater {
        out.lo = out.hi.clone();
        out.hi = &out.hi * &two;
    }
    if out.lo.is_zero() {
        let mut lo = Rational::one() / &two;
        while out.cmp_rational(&lo) != Ordering::Greater {
            out.hi = lo.clone();
            lo /= &two;
        }
        out.lo = lo;
    }
    Ok(out)
}
