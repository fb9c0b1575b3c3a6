//! Closed-form stability regions in `nu` for rank-two varieties, and the
//! all-or-nothing regions of rank one.
//!
//! A region is a pair of interval lists over `(0, inf)`: where the sheaf is
//! stable and where it is semistable. Endpoints are rationals, positive roots
//! of the case polynomials, or infinity.

mod algebraic;
mod catalog;
mod thresholds;

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::{One, Zero};

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::lattice_fan::{Rank2Variety, RayName, Variety};
use crate::stability::{check_at, StabilityKind};

pub use algebraic::{descartes_sign_changes, unique_positive_root, AlgebraicNumber};
pub use catalog::{
    case_polynomials, mu_poly, p0_displayed, p1_displayed, p1_displayed_r1, q_delta_displayed,
    q_delta_r_displayed, q_displayed_r1, q_pair_displayed, q_v0_displayed, CasePolynomial,
    PolyName, PolynomialCatalog, Reconstruction,
};
pub use thresholds::{
    alpha, delta_r, delta_r_bracket, threshold_delta_r, threshold_s_exceeds_delta,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EndpointValue {
    Rational(Rational),
    Algebraic(AlgebraicNumber),
    Infinity,
}

impl EndpointValue {
    /// Rational roots are stored as rationals.
    fn from_root(root: AlgebraicNumber) -> Self {
        match root.as_rational() {
            Some(q) => EndpointValue::Rational(q),
            None => EndpointValue::Algebraic(root),
        }
    }

    /// Position of this endpoint relative to `x`.
    pub fn cmp_rational(&self, x: &Rational) -> Ordering {
        match self {
            EndpointValue::Rational(q) => q.cmp(x),
            EndpointValue::Algebraic(a) => a.cmp_rational(x),
            EndpointValue::Infinity => Ordering::Greater,
        }
    }

    pub fn compare(&self, other: &EndpointValue) -> Ordering {
        use EndpointValue as E;
        match (self, other) {
            (E::Infinity, E::Infinity) => Ordering::Equal,
            (E::Infinity, _) => Ordering::Greater,
            (_, E::Infinity) => Ordering::Less,
            (E::Rational(a), E::Rational(b)) => a.cmp(b),
            (E::Algebraic(a), E::Rational(b)) => a.cmp_rational(b),
            (E::Rational(a), E::Algebraic(b)) => b.cmp_rational(a).reverse(),
            (E::Algebraic(a), E::Algebraic(b)) => a.compare(b),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Endpoint {
    pub value: EndpointValue,
    pub closed: bool,
}

impl Endpoint {
    fn open(value: EndpointValue) -> Self {
        Endpoint {
            value,
            closed: false,
        }
    }

    fn closed(value: EndpointValue) -> Self {
        Endpoint {
            value,
            closed: true,
        }
    }

    fn zero() -> Self {
        Endpoint::open(EndpointValue::Rational(Rational::zero()))
    }
}

/// An interval of `nu` values; a single point has equal closed endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Endpoint,
    pub hi: Endpoint,
}

impl Interval {
    pub fn contains(&self, x: &Rational) -> bool {
        let above_lo = match self.lo.value.cmp_rational(x) {
            Ordering::Less => true,
            Ordering::Equal => self.lo.closed,
            Ordering::Greater => false,
        };
        let below_hi = match self.hi.value.cmp_rational(x) {
            Ordering::Greater => true,
            Ordering::Equal => self.hi.closed,
            Ordering::Less => false,
        };
        above_lo && below_hi
    }

    pub fn is_point(&self) -> bool {
        self.lo.closed && self.hi.closed && self.lo.value == self.hi.value
    }

    fn whole() -> Self {
        Interval {
            lo: Endpoint::zero(),
            hi: Endpoint::open(EndpointValue::Infinity),
        }
    }

    fn point(v: EndpointValue) -> Self {
        Interval {
            lo: Endpoint::closed(v.clone()),
            hi: Endpoint::closed(v),
        }
    }
}

/// Which closed-form statement produced a region.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegionCase {
    /// Rank one, decided by comparing with the coordinate lines.
    Rank1,
    /// `X` is a projective line: the sheaf is a line bundle.
    Curve,
    /// `D` is the whole boundary: `T_X(-log D)` is trivial.
    WholeBoundary,
    /// `p + 1 <= |D| <= n + p - 1`.
    ManyComponents,
    ProductSingleV,
    ProductSingleW,
    ProductMixedPair,
    ProductSameKindPair,
    SingleW,
    MiddleV,
    LastV,
    FirstV,
    FirstVPlusOne,
    FirstVPlusSecond,
    PairWithoutFirstV,
}

impl RegionCase {
    pub fn as_str(self) -> &'static str {
        match self {
            RegionCase::Rank1 => "rank one",
            RegionCase::Curve => "projective line",
            RegionCase::WholeBoundary => "D is the whole boundary",
            RegionCase::ManyComponents => "p+1 <= |D| <= n+p-1",
            RegionCase::ProductSingleV => "product, D = D_vi",
            RegionCase::ProductSingleW => "product, D = D_wj",
            RegionCase::ProductMixedPair => "product, D = D_vi + D_wj",
            RegionCase::ProductSameKindPair => "product, two v or two w",
            RegionCase::SingleW => "D = D_wj",
            RegionCase::MiddleV => "D = D_vi, 1 <= i <= r-1",
            RegionCase::LastV => "D = D_vr",
            RegionCase::FirstV => "D = D_v0",
            RegionCase::FirstVPlusOne => "D = D_v0 + D_wj or D_v0 + D_vi, i >= 2",
            RegionCase::FirstVPlusSecond => "D = D_v0 + D_v1",
            RegionCase::PairWithoutFirstV => "two components, neither is D_v0",
        }
    }
}

/// Stable and semistable sets, each a sorted list of disjoint intervals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityRegion {
    pub stable: Vec<Interval>,
    pub semistable: Vec<Interval>,
    pub case: RegionCase,
}

impl StabilityRegion {
    fn empty(case: RegionCase) -> Self {
        StabilityRegion {
            stable: Vec::new(),
            semistable: Vec::new(),
            case,
        }
    }

    fn whole(case: RegionCase, stable: bool) -> Self {
        StabilityRegion {
            stable: if stable {
                vec![Interval::whole()]
            } else {
                Vec::new()
            },
            semistable: vec![Interval::whole()],
            case,
        }
    }

    fn point(case: RegionCase, v: EndpointValue) -> Self {
        StabilityRegion {
            stable: Vec::new(),
            semistable: vec![Interval::point(v)],
            case,
        }
    }

    /// Stable on `(0, hi)`, semistable on `(0, hi]`.
    fn below(case: RegionCase, hi: EndpointValue) -> Self {
        StabilityRegion {
            stable: vec![Interval {
                lo: Endpoint::zero(),
                hi: Endpoint::open(hi.clone()),
            }],
            semistable: vec![Interval {
                lo: Endpoint::zero(),
                hi: Endpoint::closed(hi),
            }],
            case,
        }
    }

    /// Stable on `(lo, hi)`, semistable on `[lo, hi]`.
    fn between(case: RegionCase, lo: EndpointValue, hi: EndpointValue) -> Self {
        StabilityRegion {
            stable: vec![Interval {
                lo: Endpoint::open(lo.clone()),
                hi: Endpoint::open(hi.clone()),
            }],
            semistable: vec![Interval {
                lo: Endpoint::closed(lo),
                hi: Endpoint::closed(hi),
            }],
            case,
        }
    }

    pub fn is_stable_at(&self, nu: &Rational) -> bool {
        self.stable.iter().any(|i| i.contains(nu))
    }

    pub fn is_semistable_at(&self, nu: &Rational) -> bool {
        self.semistable.iter().any(|i| i.contains(nu))
    }

    pub fn kind_at(&self, nu: &Rational) -> StabilityKind {
        if self.is_stable_at(nu) {
            StabilityKind::Stable
        } else if self.is_semistable_at(nu) {
            StabilityKind::StrictlySemistable
        } else {
            StabilityKind::Unstable
        }
    }

    /// Every finite positive endpoint, in order of appearance.
    pub fn endpoints(&self) -> Vec<&EndpointValue> {
        let mut out: Vec<&EndpointValue> = Vec::new();
        for i in self.stable.iter().chain(&self.semistable) {
            for e in [&i.lo.value, &i.hi.value] {
                let finite_positive = match e {
                    EndpointValue::Infinity => false,
                    EndpointValue::Rational(q) => !q.is_zero(),
                    EndpointValue::Algebraic(_) => true,
                };
                if finite_positive && !out.contains(&e) {
                    out.push(e);
                }
            }
        }
        out
    }
}

fn root(cat: &PolynomialCatalog, name: PolyName) -> Result<EndpointValue> {
    let entry = cat.get(name).ok_or(Error::NotACoveredCase)?;
    Ok(EndpointValue::from_root(unique_positive_root(
        &entry.displayed,
    )?))
}

/// The exact stability and semistability sets of `T_X(-log D)` as `nu`
/// ranges over the ample cone.
pub fn stability_region(x: &Variety, delta: &[RayName]) -> Result<StabilityRegion> {
    let delta = x.validate_delta(delta)?;
    if x.dim() == 1 {
        return Ok(StabilityRegion::whole(RegionCase::Curve, true));
    }
    if delta.is_empty() {
        return Err(Error::NotCovered);
    }
    let p = x.picard_rank();
    let n = x.dim();
    if delta.len() == x.rays().len() {
        return Ok(StabilityRegion::whole(RegionCase::WholeBoundary, false));
    }
    if p < delta.len() && delta.len() < n + p {
        return Ok(StabilityRegion::empty(RegionCase::ManyComponents));
    }
    match x {
        Variety::Rank1(_) => {
            // The polarization is unique up to scale: one verdict covers all.
            let kind = check_at(x, &delta, &Rational::one())?.kind;
            Ok(match kind {
                StabilityKind::Unstable => StabilityRegion::empty(RegionCase::Rank1),
                k => StabilityRegion::whole(RegionCase::Rank1, k == StabilityKind::Stable),
            })
        }
        Variety::Rank2(v) if v.is_product() => Ok(product_region(v, &delta)),
        Variety::Rank2(v) => twisted_region(x, v, &delta),
    }
}

fn ratio(num: usize, den: usize) -> EndpointValue {
    EndpointValue::Rational(Rational::new(num.into(), den.into()))
}

fn product_region(v: &Rank2Variety, delta: &[RayName]) -> StabilityRegion {
    use RayName::{V, W};
    let (r, s) = (v.r(), v.s());
    match delta {
        [V(_)] => StabilityRegion::point(RegionCase::ProductSingleV, ratio(s + 1, r)),
        [W(_)] => StabilityRegion::point(RegionCase::ProductSingleW, ratio(s, r + 1)),
        [V(_), W(_)] => StabilityRegion::point(RegionCase::ProductMixedPair, ratio(s, r)),
        _ => StabilityRegion::empty(RegionCase::ProductSameKindPair),
    }
}

fn twisted_region(x: &Variety, v: &Rank2Variety, delta: &[RayName]) -> Result<StabilityRegion> {
    use RayName::{V, W};
    use RegionCase as C;
    let (r, s) = (v.r(), v.s());
    let a1 = v.a_at(1);
    let ar = v.a_at(r);
    let equal = a1 == ar;
    let cat = case_polynomials(x, delta)?;
    let region = match *delta {
        [W(_)] => StabilityRegion::empty(C::SingleW),
        [V(i)] if 1 <= i && i < r => StabilityRegion::empty(C::MiddleV),
        [V(i)] if i == r => {
            if ar == 1 && v.a_at(r - 1) == 0 {
                StabilityRegion::below(C::LastV, root(&cat, PolyName::P0)?)
            } else {
                StabilityRegion::empty(C::LastV)
            }
        }
        [V(_)] => {
            let a = a1 as usize;
            if r == 1 {
                StabilityRegion::below(C::FirstV, root(&cat, PolyName::P1)?)
            } else if !equal || a * (r - 1) > s {
                StabilityRegion::empty(C::FirstV)
            } else if s <= a * r {
                StabilityRegion::below(C::FirstV, root(&cat, PolyName::P1)?)
            } else {
                let nu1 = root(&cat, PolyName::P1)?;
                let nu3 = root(&cat, PolyName::QV0)?;
                debug_assert_eq!(nu3.compare(&nu1), Ordering::Less);
                StabilityRegion::between(C::FirstV, nu3, nu1)
            }
        }
        [V(0), V(1)] => first_two_v(v, &cat)?,
        [V(0), W(_)] | [V(0), V(_)] => {
            if r == 1 {
                StabilityRegion::point(C::FirstVPlusOne, root(&cat, PolyName::Q)?)
            } else if !equal || s <= a1 as usize * (r - 1) {
                StabilityRegion::empty(C::FirstVPlusOne)
            } else {
                StabilityRegion::point(C::FirstVPlusOne, root(&cat, PolyName::QPair)?)
            }
        }
        _ => StabilityRegion::empty(C::PairWithoutFirstV),
    };
    Ok(region)
}

fn first_two_v(v: &Rank2Variety, cat: &PolynomialCatalog) -> Result<StabilityRegion> {
    use RegionCase::FirstVPlusSecond as C;
    let (r, s) = (v.r(), v.s());
    let (a1, a2, ar) = (v.a_at(1), v.a_at(2.min(r)), v.a_at(r));
    if r == 1 {
        return Ok(StabilityRegion::whole(C, false));
    }
    if a1 == 0 {
        return Ok(StabilityRegion::empty(C));
    }
    let has_root = if a1 == ar {
        if s <= a1 as usize * (r - 1) {
            return Ok(StabilityRegion::empty(C));
        }
        return Ok(StabilityRegion::point(C, root(cat, PolyName::QPair)?));
    } else if r == 2 {
        threshold_s_exceeds_delta(a1, a2, s as u64)?
    } else if a2 < ar {
        false
    } else {
        s as u64 > delta_r(a1, a2, r as u64)?
    };
    if has_root {
        Ok(StabilityRegion::point(C, root(cat, PolyName::Q)?))
    } else {
        Ok(StabilityRegion::empty(C))
    }
}
