//! Slopes, the finite-candidate stability criterion, a brute-force subspace
//! oracle and poly-stability.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::klyachko::{decompose, FiltrationFamily};
use crate::lattice_fan::{Rank2Variety, RayName, Variety};
use crate::poly::RatPoly;
use crate::subspace::Subspace;
use crate::volume_degree::{degree_system, facet_degree_polys, DegreeSystem};

/// Default ray-count limit of the brute-force oracle.
pub const DEFAULT_BRUTE_FORCE_BOUND: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StabilityKind {
    Unstable,
    StrictlySemistable,
    Stable,
}

impl StabilityKind {
    pub fn is_semistable(self) -> bool {
        self != StabilityKind::Unstable
    }

    pub fn as_str(self) -> &'static str {
        match self {
            StabilityKind::Unstable => "unstable",
            StabilityKind::StrictlySemistable => "strictly-semistable",
            StabilityKind::Stable => "stable",
        }
    }
}

impl fmt::Display for StabilityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Polystability {
    Yes,
    No,
    Undetermined,
}

impl Polystability {
    pub fn as_str(self) -> &'static str {
        match self {
            Polystability::Yes => "yes",
            Polystability::No => "no",
            Polystability::Undetermined => "undetermined",
        }
    }
}

impl fmt::Display for Polystability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Where a candidate slope comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    /// `Span(v_{min I})`.
    FirstV,
    /// `Span(v_i : i in I)`.
    AllV,
    /// `Span(w_j : j in J)`.
    AllW,
    /// A single line `Span(w_j)`, used when `Span(w_J)` is the whole space.
    OneW,
    /// `Span(v_I', w_0..w_s)` where `I'` contains `{z+1..r}`.
    WithAllWFirst,
    /// `Span(v_I', w_0..w_s)` where `I'` contains `{0..z}` and the missing
    /// indices share one twist.
    WithAllWSecond,
    /// The span of the rays outside the divisor.
    ComplementSpan,
    /// A line `Span(u_j)` of a rank-one variety.
    Line,
    /// A line through no ray generator; its slope is zero.
    GenericLine,
    /// A subspace found by exhaustive enumeration.
    Enumerated,
}

impl Rule {
    pub fn as_str(self) -> &'static str {
        match self {
            Rule::FirstV => "first-v",
            Rule::AllV => "all-v",
            Rule::AllW => "all-w",
            Rule::OneW => "one-w",
            Rule::WithAllWFirst => "v-subset-with-all-w-i",
            Rule::WithAllWSecond => "v-subset-with-all-w-ii",
            Rule::ComplementSpan => "complement-span",
            Rule::Line => "line",
            Rule::GenericLine => "generic-line",
            Rule::Enumerated => "enumerated",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A sub-sheaf `E_G` with `G` spanned by the generators of `rays` (or a
/// generic line when `rays` is empty), together with its slope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub rule: Rule,
    pub rays: Vec<RayName>,
    pub dim: usize,
    pub slope: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub kind: StabilityKind,
    pub polystable: Polystability,
    pub mu: Rational,
    /// Every candidate slope that was compared against `mu`.
    pub candidates: Vec<Witness>,
    /// The candidates attaining the maximum, when the sheaf is not stable.
    pub witnesses: Vec<Witness>,
}

/// A slope, either at a fixed `nu` or as a polynomial in `nu`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SlopeValue {
    Exact(Rational),
    Poly(RatPoly),
}

/// The polarization at which a slope is evaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Nu {
    Value(Rational),
    Symbolic,
}

fn check_nu(nu: &Rational) -> Result<()> {
    if nu.is_positive() {
        Ok(())
    } else {
        Err(Error::NonPositiveNu)
    }
}

/// `(1/rank) sum_rho (sum_i i e^rho(i)) deg(D_rho)`.
pub fn slope(family: &FiltrationFamily, degrees: &DegreeSystem, nu: &Nu) -> Result<SlopeValue> {
    let rank = Rational::from_integer(BigInt::from(family.rank()));
    let mut total = RatPoly::zero();
    for (&ray, filt) in family.iter() {
        let w = filt.chern_weight();
        if w != 0 {
            let c = Rational::from_integer(BigInt::from(w));
            total = &total + &degrees.degree(ray).scale(&c);
        }
    }
    let total = total.scale(&rank.recip());
    match nu {
        Nu::Symbolic => Ok(SlopeValue::Poly(total)),
        Nu::Value(v) => {
            check_nu(v)?;
            Ok(SlopeValue::Exact(total.eval(v)))
        }
    }
}

fn q(n: usize) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Compares `mu` with the maximum candidate and fills in the verdict.
fn decide(mu: Rational, candidates: Vec<Witness>) -> Verdict {
    let max = candidates.iter().map(|c| &c.slope).max().cloned();
    let kind = match &max {
        None => StabilityKind::Stable,
        Some(m) if mu > *m => StabilityKind::Stable,
        Some(m) if mu == *m => StabilityKind::StrictlySemistable,
        Some(_) => StabilityKind::Unstable,
    };
    let witnesses = match (&max, kind) {
        (Some(m), StabilityKind::StrictlySemistable | StabilityKind::Unstable) => candidates
            .iter()
            .filter(|c| c.slope == *m)
            .cloned()
            .collect(),
        _ => Vec::new(),
    };
    let polystable = match kind {
        StabilityKind::Stable => Polystability::Yes,
        StabilityKind::Unstable => Polystability::No,
        StabilityKind::StrictlySemistable => Polystability::Undetermined,
    };
    Verdict {
        kind,
        polystable,
        mu,
        candidates,
        witnesses,
    }
}

fn generic_line() -> Witness {
    Witness {
        rule: Rule::GenericLine,
        rays: Vec::new(),
        dim: 1,
        slope: Rational::zero(),
    }
}

/// Slope of `E_G` for `G = Span(rays)`: the degrees of the rays outside
/// `delta` whose generators lie in `G`, divided by `dim G`.
fn span_slope(
    x: &Variety,
    delta: &[RayName],
    degrees: &[(RayName, Rational)],
    rays: &[RayName],
) -> (usize, Rational) {
    let g = x.span_of(rays).expect("valid rays");
    let mut total = Rational::zero();
    for (ray, d) in degrees {
        if !delta.contains(ray) && g.contains_vector(&x.generator_vector(*ray).unwrap()) {
            total += d;
        }
    }
    let dim = g.dim();
    (dim, total / q(dim))
}

/// Shortcuts shared by both families: the trivial bundle and the range of
/// divisor sizes forcing instability.
fn shortcut(
    x: &Variety,
    delta: &[RayName],
    degrees: &[(RayName, Rational)],
    mu: &Rational,
) -> Option<Verdict> {
    let n = x.dim();
    let p = x.picard_rank();
    if delta.len() == n + p {
        let mut v = decide(mu.clone(), vec![generic_line()]);
        v.polystable = Polystability::Yes;
        return Some(v);
    }
    if (p + 1..=n + p - 1).contains(&delta.len()) {
        let rest = x.complement(delta);
        let (dim, slope) = span_slope(x, delta, degrees, &rest);
        let w = Witness {
            rule: Rule::ComplementSpan,
            rays: rest,
            dim,
            slope,
        };
        let v = decide(mu.clone(), vec![w]);
        debug_assert_eq!(v.kind, StabilityKind::Unstable);
        return Some(v);
    }
    None
}

fn degrees_at(x: &Variety, nu: &Rational) -> Vec<(RayName, Rational)> {
    degree_system(x).at(nu).into_iter().collect()
}

fn mu_of(x: &Variety, delta: &[RayName], degrees: &[(RayName, Rational)]) -> Rational {
    let total: Rational = degrees
        .iter()
        .filter(|(r, _)| !delta.contains(r))
        .map(|(_, d)| d.clone())
        .sum();
    total / q(x.dim())
}

/// The candidate slopes of the rank-two criterion at a fixed `nu`.
pub fn rank2_candidates(x: &Rank2Variety, delta: &[RayName], nu: &Rational) -> Vec<Witness> {
    let (r, s) = (x.r(), x.s());
    let n = r + s;
    let polys = facet_degree_polys(x);
    let w = polys.w.eval(nu);
    let v: Vec<Rational> = polys.v.iter().map(|p| p.eval(nu)).collect();
    let var = Variety::Rank2(x.clone());
    let dim_of = |rays: &[RayName]| var.span_of(rays).expect("valid").dim();

    let i_set: Vec<usize> = (0..=r)
        .filter(|i| !delta.contains(&RayName::V(*i)))
        .collect();
    let j_set: Vec<usize> = (0..=s)
        .filter(|j| !delta.contains(&RayName::W(*j)))
        .collect();
    let v_rays = |idx: &[usize]| idx.iter().map(|&i| RayName::V(i)).collect::<Vec<_>>();
    let w_rays: Vec<RayName> = j_set.iter().map(|&j| RayName::W(j)).collect();

    let mut out = Vec::new();
    if let Some(&i0) = i_set.first() {
        out.push(Witness {
            rule: Rule::FirstV,
            rays: vec![RayName::V(i0)],
            dim: 1,
            slope: v[i0].clone(),
        });
    }
    let r_prime = dim_of(&v_rays(&i_set));
    if r_prime != 0 {
        let total: Rational = i_set.iter().map(|&i| v[i].clone()).sum();
        out.push(Witness {
            rule: Rule::AllV,
            rays: v_rays(&i_set),
            dim: r_prime,
            slope: total / q(r_prime),
        });
    }
    let s_prime = dim_of(&w_rays);
    if s_prime != 0 && s_prime < n {
        out.push(Witness {
            rule: Rule::AllW,
            rays: w_rays.clone(),
            dim: s_prime,
            slope: &w * q(j_set.len()) / q(s_prime),
        });
    } else if s_prime == n {
        // Span(w_J) is everything (only possible for r = 1), yet each single
        // Span(w_j) is still a proper sub-sheaf of slope W.
        out.push(Witness {
            rule: Rule::OneW,
            rays: vec![w_rays[0]],
            dim: 1,
            slope: w.clone(),
        });
    }

    let z = x.z();
    if x.a_at(r) > 0 && j_set.len() == s + 1 {
        // Subsets I' of I with |I'| < r, as bit masks over I.
        for mask in 0u32..(1 << i_set.len()) {
            let sub: Vec<usize> = i_set
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &i)| i)
                .collect();
            let k = sub.len();
            if k >= r {
                continue;
            }
            let first = (z + 1..=r).all(|i| sub.contains(&i));
            let missing: Vec<usize> = (z + 1..=r).filter(|i| !sub.contains(i)).collect();
            let second = (0..=z).all(|i| sub.contains(&i))
                && !missing.is_empty()
                && missing.iter().all(|&i| x.a_at(i) == x.a_at(missing[0]));
            let total: Rational =
                sub.iter().map(|&i| v[i].clone()).sum::<Rational>() + &w * q(s + 1);
            let mut rays = v_rays(&sub);
            rays.extend(w_rays.iter().copied());
            for (holds, rule) in [(first, Rule::WithAllWFirst), (second, Rule::WithAllWSecond)] {
                if holds {
                    out.push(Witness {
                        rule,
                        rays: rays.clone(),
                        dim: s + k,
                        slope: &total / q(s + k),
                    });
                }
            }
        }
    }
    out
}

fn rank1_check(x: &Variety, q_weights: &[u64], delta: &[RayName], mu: Rational) -> Result<Verdict> {
    let n = x.dim();
    if delta.is_empty() {
        return brute_force_at(x, delta, &Rational::from_integer(BigInt::from(1)));
    }
    debug_assert_eq!(delta.len(), 1);
    let RayName::U(i) = delta[0] else {
        unreachable!()
    };
    let candidates: Vec<Witness> = (0..=n)
        .filter(|&j| j != i)
        .map(|j| Witness {
            rule: Rule::Line,
            rays: vec![RayName::U(j)],
            dim: 1,
            slope: Rational::from_integer(BigInt::from(q_weights[j])),
        })
        .collect();
    let mut v = decide(mu, candidates);
    debug_assert_ne!(v.kind, StabilityKind::Stable);
    if v.kind == StabilityKind::StrictlySemistable {
        v.polystable = Polystability::Yes;
    }
    Ok(v)
}

/// Decides (semi)stability of `T_X(-log D)` at polarization ratio `nu`. For
/// rank one the polarization is unique up to scaling and `nu` is only
/// checked for positivity.
pub fn check_at(x: &Variety, delta: &[RayName], nu: &Rational) -> Result<Verdict> {
    check_nu(nu)?;
    let delta = x.validate_delta(delta)?;
    let degrees = degrees_at(x, nu);
    let mu = mu_of(x, &delta, &degrees);
    if x.dim() == 1 {
        // A rank-one sheaf has no sub-sheaf of intermediate rank.
        return Ok(decide(mu, Vec::new()));
    }
    if let Some(v) = shortcut(x, &delta, &degrees, &mu) {
        return Ok(v);
    }
    match x {
        Variety::Rank1(v) => rank1_check(x, v.q(), &delta, mu),
        Variety::Rank2(v) => {
            let mut verdict = decide(mu, rank2_candidates(v, &delta, nu));
            if verdict.kind == StabilityKind::StrictlySemistable {
                verdict.polystable = polystable_from_decomposition(x, &delta, nu, &verdict.mu)?;
            }
            Ok(verdict)
        }
    }
}

/// For each subset of rays (as a bit mask over `rays`): the dimension of
/// their span and the mask of all rays whose generators lie in that span.
#[derive(Clone, Debug)]
pub struct SpanTable {
    rays: Vec<RayName>,
    dims: Vec<usize>,
    closure: Vec<u32>,
}

impl SpanTable {
    pub fn new(x: &Variety, bound: usize) -> Result<Self> {
        let rays = x.rays();
        if rays.len() > bound {
            return Err(Error::TooLarge {
                rays: rays.len(),
                limit: bound,
            });
        }
        let gens: Vec<_> = rays
            .iter()
            .map(|&r| x.generator_vector(r).expect("own ray"))
            .collect();
        let size = 1usize << rays.len();
        let mut dims = vec![0; size];
        let mut closure = vec![0u32; size];
        for mask in 0..size {
            let chosen: Vec<RayName> = (0..rays.len())
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| rays[b])
                .collect();
            let g = x.span_of(&chosen)?;
            dims[mask] = g.dim();
            closure[mask] = gens
                .iter()
                .enumerate()
                .filter(|(_, u)| g.contains_vector(u))
                .fold(0u32, |acc, (b, _)| acc | 1 << b);
        }
        Ok(Self {
            rays,
            dims,
            closure,
        })
    }

    pub fn rays(&self) -> &[RayName] {
        &self.rays
    }

    fn mask_of(&self, rays: &[RayName]) -> u32 {
        self.rays
            .iter()
            .enumerate()
            .filter(|(_, r)| rays.contains(r))
            .fold(0, |acc, (b, _)| acc | 1 << b)
    }

    fn rays_of(&self, mask: u32) -> Vec<RayName> {
        (0..self.rays.len())
            .filter(|b| mask >> b & 1 == 1)
            .map(|b| self.rays[b])
            .collect()
    }

    /// Every sub-sheaf slope that matters for `E_G`, `G = Span(within)`:
    /// spans of closed ray sets of intermediate dimension, plus a generic
    /// line when `dim G >= 2`.
    fn candidates(&self, delta: &[RayName], within: u32, deg: &[Rational]) -> Vec<Witness> {
        let allowed = within & !self.mask_of(delta);
        let top = self.dims[within as usize];
        let mut out = Vec::new();
        let mut sub = allowed;
        loop {
            if sub != 0 {
                let closed = self.closure[sub as usize] & allowed;
                let dim = self.dims[sub as usize];
                if closed == sub && dim < top {
                    let total: Rational = (0..self.rays.len())
                        .filter(|b| sub >> b & 1 == 1)
                        .map(|b| deg[b].clone())
                        .sum();
                    out.push(Witness {
                        rule: Rule::Enumerated,
                        rays: self.rays_of(sub),
                        dim,
                        slope: total / q(dim),
                    });
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & allowed;
        }
        if top >= 2 {
            out.push(generic_line());
        }
        out
    }
}

/// Exhaustive oracle using a precomputed span table; `degrees` are the
/// degrees at `nu` in the table's ray order.
pub fn brute_force_with(table: &SpanTable, delta: &[RayName], degrees: &[Rational]) -> Verdict {
    let full = (1u32 << table.rays.len()) - 1;
    let mu_total: Rational = table
        .rays
        .iter()
        .zip(degrees)
        .filter(|(r, _)| !delta.contains(r))
        .map(|(_, d)| d.clone())
        .sum();
    let mu = mu_total / q(table.dims[full as usize]);
    let mut candidates = table.candidates(delta, full, degrees);
    candidates.reverse();
    decide(mu, candidates)
}

/// Decides (semi)stability by enumerating every subspace spanned by ray
/// generators outside the divisor. Poly-stability is reported only where the
/// kind settles it.
pub fn brute_force_at(x: &Variety, delta: &[RayName], nu: &Rational) -> Result<Verdict> {
    brute_force_bounded(x, delta, nu, DEFAULT_BRUTE_FORCE_BOUND)
}

pub fn brute_force_bounded(
    x: &Variety,
    delta: &[RayName],
    nu: &Rational,
    bound: usize,
) -> Result<Verdict> {
    check_nu(nu)?;
    let delta = x.validate_delta(delta)?;
    let table = SpanTable::new(x, bound)?;
    let deg_map = degree_system(x).at(nu);
    let degrees: Vec<Rational> = table.rays.iter().map(|r| deg_map[r].clone()).collect();
    Ok(brute_force_with(&table, &delta, &degrees))
}

/// Whether `E_G` is stable, by enumerating sub-spaces of `G` spanned by ray
/// generators. Returns the slope of `E_G` too.
fn summand_is_stable(
    x: &Variety,
    table: &SpanTable,
    delta: &[RayName],
    degrees: &[Rational],
    g: &Subspace,
) -> (bool, Rational) {
    let inside = table
        .rays
        .iter()
        .enumerate()
        .filter(|(_, r)| g.contains_vector(&x.generator_vector(**r).unwrap()))
        .fold(0u32, |acc, (b, _)| acc | 1 << b);
    let allowed = inside & !table.mask_of(delta);
    let total: Rational = (0..table.rays.len())
        .filter(|b| allowed >> b & 1 == 1)
        .map(|b| degrees[b].clone())
        .sum();
    let mu = &total / q(g.dim());
    // Sub-spaces of G spanned by generators never exceed the span of the
    // generators G contains, and that span may be smaller than G itself.
    let mut cands = table.candidates(delta, inside, degrees);
    if table.dims[inside as usize] < g.dim() {
        if allowed != 0 {
            let dim = table.dims[inside as usize];
            let sub_total: Rational = total.clone();
            cands.push(Witness {
                rule: Rule::Enumerated,
                rays: table.rays_of(allowed),
                dim,
                slope: sub_total / q(dim),
            });
        }
        if g.dim() >= 2 {
            cands.push(generic_line());
        }
    }
    (cands.iter().all(|c| c.slope < mu), mu)
}

/// Poly-stability of a strictly semistable sheaf through a verified
/// decomposition into stable summands of equal slope.
fn polystable_from_decomposition(
    x: &Variety,
    delta: &[RayName],
    nu: &Rational,
    mu: &Rational,
) -> Result<Polystability> {
    let Some(dec) = decompose(x, delta)? else {
        return Ok(Polystability::Undetermined);
    };
    let table = SpanTable::new(x, usize::BITS as usize - 1)?;
    let deg_map = degree_system(x).at(nu);
    let degrees: Vec<Rational> = table.rays.iter().map(|r| deg_map[r].clone()).collect();
    let all_stable = dec.summands.iter().all(|g| {
        let (stable, slope) = summand_is_stable(x, &table, delta, &degrees, g);
        stable && slope == *mu
    });
    Ok(if all_stable {
        Polystability::Yes
    } else {
        Polystability::Undetermined
    })
}

/// Poly-stability at `nu`: settled by stability or instability, by the
/// rank-one and trivial-bundle statements, or by a decomposition into
/// stable summands of equal slope. Otherwise undetermined.
pub fn polystable_at(x: &Variety, delta: &[RayName], nu: &Rational) -> Result<Polystability> {
    Ok(check_at(x, delta, nu)?.polystable)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::klyachko::{logtangent_filtrations, subsheaf_filtrations};
    use RayName::{U, V, W};

    fn r2(r: usize, s: usize, a: &[u64]) -> Variety {
        Variety::rank2(r, s, a).unwrap()
    }

    #[test]
    fn symbolic_slopes() {
        let x = r2(1, 1, &[0]);
        let deg = degree_system(&x);
        let fam = logtangent_filtrations(&x, &[V(0)]).unwrap();
        assert_eq!(
            slope(&fam, &deg, &Nu::Symbolic).unwrap(),
            SlopeValue::Poly(RatPoly::from_coeffs(vec![int(1), rat(1, 2)]))
        );
        let all = logtangent_filtrations(&x, &x.rays()).unwrap();
        assert_eq!(
            slope(&all, &deg, &Nu::Value(int(3))).unwrap(),
            SlopeValue::Exact(int(0))
        );
        let two = logtangent_filtrations(&x, &[V(0), V(1)]).unwrap();
        let g = x.span_of(&[W(0), W(1)]).unwrap();
        let sub = subsheaf_filtrations(&two, &g).unwrap();
        assert_eq!(
            slope(&sub, &deg, &Nu::Value(int(5))).unwrap(),
            SlopeValue::Exact(int(2))
        );
        assert_eq!(
            slope(&sub, &deg, &Nu::Value(int(0))),
            Err(Error::NonPositiveNu)
        );
    }

    #[test]
    fn product_point_checks() {
        let x = r2(1, 1, &[0]);
        let kind = |d: &[RayName], nu: Rational| check_at(&x, d, &nu).unwrap().kind;
        assert_eq!(kind(&[V(0)], int(2)), StabilityKind::StrictlySemistable);
        assert_eq!(kind(&[V(0)], int(1)), StabilityKind::Unstable);
        assert_eq!(kind(&[V(0), V(1), W(0)], int(1)), StabilityKind::Unstable);
    }

    #[test]
    fn hirzebruch_vr() {
        let x = r2(1, 1, &[1]);
        let kind = |nu: Rational| check_at(&x, &[V(1)], &nu).unwrap().kind;
        assert_eq!(kind(rat(1, 2)), StabilityKind::Stable);
        assert_eq!(kind(int(1)), StabilityKind::StrictlySemistable);
        assert_eq!(kind(int(2)), StabilityKind::Unstable);
        assert_eq!(
            brute_force_at(&x, &[V(1)], &int(1)).unwrap().kind,
            StabilityKind::StrictlySemistable
        );
    }

    #[test]
    fn rank_one_closed_forms() {
        let x = Variety::rank1(&[1, 2, 2]).unwrap();
        let v = check_at(&x, &[U(0)], &int(1)).unwrap();
        assert_eq!(v.kind, StabilityKind::StrictlySemistable);
        assert_eq!(v.polystable, Polystability::Yes);
        let y = Variety::rank1(&[1, 2, 3]).unwrap();
        assert_eq!(
            check_at(&y, &[U(0)], &int(1)).unwrap().kind,
            StabilityKind::Unstable
        );
        let p1 = Variety::rank1(&[1, 1]).unwrap();
        assert_eq!(
            check_at(&p1, &[U(0)], &int(1)).unwrap().kind,
            StabilityKind::Stable
        );
    }

    #[test]
    fn trivial_bundle() {
        let x = r2(2, 1, &[0, 1]);
        let v = brute_force_at(&x, &x.rays(), &int(2)).unwrap();
        assert_eq!(v.kind, StabilityKind::StrictlySemistable);
        assert!(v.witnesses.iter().any(|w| w.rule == Rule::GenericLine));
        let c = check_at(&x, &x.rays(), &int(2)).unwrap();
        assert_eq!(c.kind, StabilityKind::StrictlySemistable);
        assert_eq!(c.polystable, Polystability::Yes);
    }

    #[test]
    fn polystability_examples() {
        let x = r2(1, 1, &[0]);
        assert_eq!(
            polystable_at(&x, &[V(1), W(1)], &int(1)).unwrap(),
            Polystability::Yes
        );
        assert_eq!(
            polystable_at(&x, &[V(0), V(1)], &int(1)).unwrap(),
            Polystability::No
        );
        let p2 = Variety::rank1(&[1, 1, 1]).unwrap();
        assert_eq!(
            polystable_at(&p2, &[U(0)], &int(1)).unwrap(),
            Polystability::Yes
        );
    }

    #[test]
    fn brute_force_bound() {
        let x = r2(3, 3, &[0, 0, 0]);
        assert!(brute_force_at(&x, &[], &int(1)).is_ok());
        let y = r2(3, 4, &[0, 0, 0]);
        assert_eq!(
            brute_force_at(&y, &[], &int(1)),
            Err(Error::TooLarge { rays: 9, limit: 8 })
        );
    }
}
