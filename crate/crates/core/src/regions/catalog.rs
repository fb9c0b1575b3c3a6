//! The case polynomials whose positive roots bound the stability regions,
//! each checked against a direct reconstruction from the facet degrees.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::arith::{binomial, pow_u64, Rational};
use crate::error::{Error, Result};
use crate::klyachko::logtangent_filtrations;
use crate::lattice_fan::{Rank2Variety, RayName, Variety};
use crate::poly::RatPoly;
use crate::stability::{slope, Nu, SlopeValue};
use crate::volume_degree::{degree_system, facet_degree_polys, FacetPolys};

use super::thresholds::alpha;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PolyName {
    /// `mu - V_0` for `D_{v_r}`.
    P0,
    /// `mu - V_1` for `D_{v_0}`.
    P1,
    /// `mu - V_2`; exposed, no region rule uses it.
    P2,
    /// `V_1 - W` or `mu - W` when `r = 1`; `W - V_2` for `D_{v0} + D_{v1}`
    /// with unequal twists.
    Q,
    /// `mu - W` for `D_{v_0}` when `r >= 2`.
    QV0,
    /// `V_1 - W` for `D_{v_0}` plus one more divisor, equal twists.
    QPair,
}

impl PolyName {
    pub fn as_str(self) -> &'static str {
        match self {
            PolyName::P0 => "P0",
            PolyName::P1 => "P1",
            PolyName::P2 => "P2",
            PolyName::Q => "Q",
            PolyName::QV0 => "Q_v0",
            PolyName::QPair => "Q_pair",
        }
    }
}

impl fmt::Display for PolyName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// What a displayed polynomial is a positive multiple of.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reconstruction {
    MuMinusV(usize),
    MuMinusW,
    VMinusW(usize),
}

impl fmt::Display for Reconstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reconstruction::MuMinusV(i) => write!(f, "mu - V{i}"),
            Reconstruction::MuMinusW => f.write_str("mu - W"),
            Reconstruction::VMinusW(i) => write!(f, "V{i} - W"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CasePolynomial {
    pub name: PolyName,
    /// The closed form (for `P2`, which has none, the scaled reconstruction).
    pub displayed: RatPoly,
    pub direct: RatPoly,
    pub reconstruction: Reconstruction,
    /// `displayed = factor * direct`, always positive.
    pub factor: Rational,
    pub closed_form: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PolynomialCatalog {
    entries: Vec<CasePolynomial>,
}

impl PolynomialCatalog {
    pub fn get(&self, name: PolyName) -> Option<&CasePolynomial> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn iter(&self) -> impl Iterator<Item = &CasePolynomial> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn q(n: u64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn qi(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

fn binom_q(n: usize, k: usize) -> Rational {
    qi(binomial(n as u64, k as u64))
}

/// `sum_{k<s} f(k) x^k + top x^s`.
fn assemble(s: usize, f: impl Fn(usize) -> Rational, top: Rational) -> RatPoly {
    let mut coeffs: Vec<Rational> = (0..s).map(f).collect();
    coeffs.push(top);
    RatPoly::from_coeffs(coeffs)
}

/// `P0(x) = sum_{k<s} C(s+r-1, k) x^k - s C(s+r-1, s) x^s`.
pub fn p0_displayed(r: usize, s: usize) -> RatPoly {
    let n = s + r - 1;
    assemble(s, |k| binom_q(n, k), -(q(s as u64) * binom_q(n, s)))
}

/// `P1(x) = (s+1) sum_{k<s} C(s, k) a^{s-k-1} x^k - s x^s`, for `r = 1`.
pub fn p1_displayed_r1(s: usize, a: u64) -> RatPoly {
    let s1 = q(s as u64 + 1);
    assemble(
        s,
        |k| &s1 * binom_q(s, k) * qi(pow_u64(a, (s - k - 1) as u64)),
        -q(s as u64),
    )
}

/// `Q(x) = x^s - sum_{k<s} C(s, k) a^{s-k-1} x^k`, for `r = 1`.
pub fn q_displayed_r1(s: usize, a: u64) -> RatPoly {
    assemble(
        s,
        |k| -(binom_q(s, k) * qi(pow_u64(a, (s - k - 1) as u64))),
        q(1),
    )
}

/// `V_{1k} = C(s-k+r-2, s-k) a^{s-k}` when all twists equal `a`.
fn v1k(r: usize, s: usize, a: u64, k: usize) -> Rational {
    binom_q(s - k + r - 2, s - k) * qi(pow_u64(a, (s - k) as u64))
}

/// `P1` for `r >= 2` and equal twists `a`.
pub fn p1_displayed(r: usize, s: usize, a: u64) -> RatPoly {
    let n = s + r - 1;
    let ar1 = q(a) * q(r as u64 - 1);
    let (sq, s1) = (q(s as u64), q(s as u64 + 1));
    assemble(
        s,
        |k| {
            let c = -&sq + q((s - k) as u64) * &s1 / &ar1;
            c * binom_q(n, k) * v1k(r, s, a, k)
        },
        -(sq.clone() * binom_q(n, s)),
    )
}

/// `Q` of `D_{v_0}` for `r >= 2` and equal twists `a`.
pub fn q_v0_displayed(r: usize, s: usize, a: u64) -> RatPoly {
    let n = s + r - 1;
    let rq = q(r as u64);
    assemble(
        s,
        |k| (&rq - q((s - k) as u64) / q(a)) * binom_q(n, k) * v1k(r, s, a, k),
        rq.clone() * binom_q(n, s),
    )
}

/// `Q` of `D_{v_0} + D` for `r >= 2` and equal twists `a`.
pub fn q_pair_displayed(r: usize, s: usize, a: u64) -> RatPoly {
    let n = s + r - 1;
    let ar1 = q(a) * q(r as u64 - 1);
    assemble(
        s,
        |k| (q(1) - q((s - k) as u64) / &ar1) * binom_q(n, k) * v1k(r, s, a, k),
        binom_q(n, s),
    )
}

/// `Q` of `D_{v_0} + D_{v_1}` for `r = 2` and `0 < a1 < a2`.
pub fn q_delta_displayed(s: usize, a1: u64, a2: u64) -> RatPoly {
    let (a1q, a2q) = (q(a1), q(a2));
    let ratio = &a2q / &a1q;
    let diff = &a2q - &a1q;
    assemble(
        s,
        |k| {
            let p = (s - k) as u64;
            let bracket = num_traits::pow(ratio.clone(), p as usize) - q(1) - &a2q + &a1q;
            qi(pow_u64(a1, p)) / &diff * bracket * binom_q(s + 1, k)
        },
        -q(s as u64 + 1),
    )
}

/// `Q_s` of `D_{v_0} + D_{v_1}` for `r >= 3` and `0 < a < b = a_2 = ... = a_r`.
pub fn q_delta_r_displayed(r: usize, s: usize, a: u64, b: u64) -> RatPoly {
    let n = s + r - 1;
    assemble(
        s,
        |k| binom_q(n, k) * alpha(a, b, r as u64, (s - k) as u64),
        -binom_q(n, s),
    )
}

/// `mu_L(T_X(-log D))` as a polynomial in `nu`, from the filtrations.
pub fn mu_poly(x: &Variety, delta: &[RayName]) -> Result<RatPoly> {
    let family = logtangent_filtrations(x, delta)?;
    match slope(&family, &degree_system(x), &Nu::Symbolic)? {
        SlopeValue::Poly(p) => Ok(p),
        SlopeValue::Exact(c) => Ok(RatPoly::constant(c)),
    }
}

struct Builder<'a> {
    x: &'a Rank2Variety,
    polys: FacetPolys,
    mu: RatPoly,
    entries: Vec<CasePolynomial>,
}

impl Builder<'_> {
    fn direct(&self, rec: Reconstruction) -> RatPoly {
        let polys = &self.polys;
        match rec {
            Reconstruction::MuMinusV(i) => &self.mu - &polys.v[i],
            Reconstruction::MuMinusW => &self.mu - &polys.w,
            Reconstruction::VMinusW(i) => &polys.v[i] - &polys.w,
        }
    }

    fn push(&mut self, name: PolyName, displayed: RatPoly, rec: Reconstruction) -> Result<()> {
        let direct = self.direct(rec);
        match displayed.ratio_to(&direct) {
            Some(c) if c.is_positive() => {
                self.entries.push(CasePolynomial {
                    name,
                    displayed,
                    direct,
                    reconstruction: rec,
                    factor: c,
                    closed_form: true,
                });
                Ok(())
            }
            _ => {
                let mut msg = String::from(name.as_str());
                msg.push_str(" vs ");
                msg.push_str(&alloc::format!("{rec}"));
                Err(Error::DisagreesWithDirect(msg))
            }
        }
    }

    fn push_p2(&mut self) {
        let rec = Reconstruction::MuMinusV(2);
        let direct = self.direct(rec);
        let factor = q((self.x.r() + self.x.s()) as u64);
        self.entries.push(CasePolynomial {
            name: PolyName::P2,
            displayed: direct.scale(&factor),
            direct,
            reconstruction: rec,
            factor,
            closed_form: false,
        });
    }
}

/// The polynomials attached to `(X, D)` when `a_r >= 1`. Cases with no
/// polynomial yield an empty catalog apart from `P2` when `r >= 2`.
pub fn case_polynomials(x: &Variety, delta: &[RayName]) -> Result<PolynomialCatalog> {
    let Variety::Rank2(v) = x else {
        return Err(Error::NotACoveredCase);
    };
    let delta = x.validate_delta(delta)?;
    if v.is_product() || delta.is_empty() {
        return Err(Error::NotACoveredCase);
    }
    let (r, s) = (v.r(), v.s());
    let mut b = Builder {
        x: v,
        polys: facet_degree_polys(v),
        mu: mu_poly(x, &delta)?,
        entries: Vec::new(),
    };
    let equal = v.a_at(1) == v.a_at(r);
    let a = v.a_at(1);
    use RayName::{V, W};
    match delta.as_slice() {
        [V(i)] if *i == r && r >= 1 && v.a_at(r) == 1 && v.a_at(r - 1) == 0 => {
            b.push(
                PolyName::P0,
                p0_displayed(r, s),
                Reconstruction::MuMinusV(0),
            )?;
        }
        [V(0)] if r == 1 => {
            b.push(
                PolyName::P1,
                p1_displayed_r1(s, a),
                Reconstruction::MuMinusV(1),
            )?;
            b.push(
                PolyName::Q,
                q_displayed_r1(s, a),
                Reconstruction::VMinusW(1),
            )?;
        }
        [V(0)] if equal => {
            b.push(
                PolyName::P1,
                p1_displayed(r, s, a),
                Reconstruction::MuMinusV(1),
            )?;
            b.push(
                PolyName::QV0,
                q_v0_displayed(r, s, a),
                Reconstruction::MuMinusW,
            )?;
        }
        [V(0), W(_)] if r == 1 => {
            b.push(PolyName::Q, q_displayed_r1(s, a), Reconstruction::MuMinusW)?;
        }
        [V(0), W(_)] | [V(0), V(_)] if r >= 2 && equal => {
            b.push(
                PolyName::QPair,
                q_pair_displayed(r, s, a),
                Reconstruction::MuMinusW,
            )?;
        }
        [V(0), V(1)] if r == 2 && 0 < v.a_at(1) && v.a_at(1) < v.a_at(2) => {
            let q = q_delta_displayed(s, v.a_at(1), v.a_at(2));
            b.push(PolyName::Q, q, Reconstruction::MuMinusV(2))?;
        }
        [V(0), V(1)]
            if r >= 3 && 0 < v.a_at(1) && v.a_at(1) < v.a_at(2) && v.a_at(2) == v.a_at(r) =>
        {
            let q = q_delta_r_displayed(r, s, v.a_at(1), v.a_at(2));
            b.push(PolyName::Q, q, Reconstruction::MuMinusV(2))?;
        }
        _ => {}
    }
    if r >= 2 {
        b.push_p2();
    }
    Ok(PolynomialCatalog { entries: b.entries })
}
