//! The two parametric fan families: smooth toric varieties of Picard rank two
//! (data `r, s, a`) and fake weighted projective spaces of Picard rank one
//! (weights `q`).

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::arith::{gcd_all, Rational};
use crate::error::{Error, Result};
use crate::subspace::{Subspace, Vector};

/// Name of a ray. Rank-two varieties use `v0..vr` and `w0..ws`, rank-one
/// varieties `u0..un`. The derived order lists every `v` before every `w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RayName {
    V(usize),
    W(usize),
    U(usize),
}

impl fmt::Display for RayName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RayName::V(i) => write!(f, "v{i}"),
            RayName::W(j) => write!(f, "w{j}"),
            RayName::U(i) => write!(f, "u{i}"),
        }
    }
}

impl FromStr for RayName {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let bad = || Error::BadRayName(text.to_string());
        let mut chars = text.chars();
        let tag = chars.next().ok_or_else(bad)?;
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let index: usize = digits.parse().map_err(|_| bad())?;
        match tag.to_ascii_lowercase() {
            'v' => Ok(RayName::V(index)),
            'w' => Ok(RayName::W(index)),
            'u' => Ok(RayName::U(index)),
            _ => Err(bad()),
        }
    }
}

/// Smooth projective toric variety of Picard rank two,
/// `P(O ⊕ O(a1) ⊕ ... ⊕ O(ar))` over `P^s`, of dimension `r + s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rank2Variety {
    r: usize,
    s: usize,
    a: Vec<u64>,
}

impl Rank2Variety {
    /// Builds the variety. `a` must already be sorted; it is never permuted
    /// because divisor indices refer to specific entries.
    pub fn build(r: usize, s: usize, a: &[u64]) -> Result<Self> {
        if r == 0 || s == 0 {
            return Err(Error::ZeroDimension);
        }
        if a.len() != r {
            return Err(Error::BadLength {
                expected: r,
                got: a.len(),
            });
        }
        if a.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::UnsortedA);
        }
        Ok(Self {
            r,
            s,
            a: a.to_vec(),
        })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn a(&self) -> &[u64] {
        &self.a
    }

    /// `a_i` with the convention `a_0 = 0`.
    pub fn a_at(&self, i: usize) -> u64 {
        if i == 0 {
            0
        } else {
            self.a[i - 1]
        }
    }

    pub fn dim(&self) -> usize {
        self.r + self.s
    }

    /// Largest index `z` in `0..=r` with `a_z = 0`.
    pub fn z(&self) -> usize {
        (0..=self.r).rev().find(|&i| self.a_at(i) == 0).unwrap_or(0)
    }

    pub fn is_product(&self) -> bool {
        self.a.iter().all(|&x| x == 0)
    }

    /// Rays in the order `v0..vr, w0..ws`.
    pub fn rays(&self) -> Vec<RayName> {
        (0..=self.r)
            .map(RayName::V)
            .chain((0..=self.s).map(RayName::W))
            .collect()
    }

    pub fn has_ray(&self, ray: RayName) -> bool {
        match ray {
            RayName::V(i) => i <= self.r,
            RayName::W(j) => j <= self.s,
            RayName::U(_) => false,
        }
    }

    /// Integer generator in `Z^(r+s)`: the first `s` coordinates carry the
    /// `w` basis, the last `r` the `v` basis.
    pub fn generator(&self, ray: RayName) -> Result<Vec<i64>> {
        if !self.has_ray(ray) {
            return Err(Error::UnknownRay(ray));
        }
        let (r, s) = (self.r, self.s);
        let mut u = vec![0i64; r + s];
        match ray {
            RayName::W(0) => {
                for x in &mut u[..s] {
                    *x = -1;
                }
                for (x, &ai) in u[s..].iter_mut().zip(&self.a) {
                    *x = ai as i64;
                }
            }
            RayName::W(j) => u[j - 1] = 1,
            RayName::V(0) => {
                for x in &mut u[s..] {
                    *x = -1;
                }
            }
            RayName::V(i) => u[s + i - 1] = 1,
            RayName::U(_) => unreachable!(),
        }
        Ok(u)
    }
}

/// Fake weighted projective space `N_R / Z q` of Picard rank one, modelled
/// on `Q^(n+1)` modulo the relation vector `q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rank1Variety {
    q: Vec<u64>,
}

impl Rank1Variety {
    pub fn build(q: &[u64]) -> Result<Self> {
        if q.len() < 2 || q.contains(&0) {
            return Err(Error::BadWeights);
        }
        let g = gcd_all(q);
        if g != 1 {
            return Err(Error::BadGcd { gcd: g });
        }
        Ok(Self { q: q.to_vec() })
    }

    pub fn q(&self) -> &[u64] {
        &self.q
    }

    pub fn dim(&self) -> usize {
        self.q.len() - 1
    }

    pub fn rays(&self) -> Vec<RayName> {
        (0..self.q.len()).map(RayName::U).collect()
    }

    pub fn has_ray(&self, ray: RayName) -> bool {
        matches!(ray, RayName::U(i) if i < self.q.len())
    }

    /// Lift of the generator: a standard basis vector of `Z^(n+1)`.
    pub fn generator(&self, ray: RayName) -> Result<Vec<i64>> {
        match ray {
            RayName::U(i) if i < self.q.len() => {
                let mut u = vec![0i64; self.q.len()];
                u[i] = 1;
                Ok(u)
            }
            _ => Err(Error::UnknownRay(ray)),
        }
    }

    pub fn relation(&self) -> Vec<i64> {
        self.q.iter().map(|&x| x as i64).collect()
    }
}

/// Either family, with the operations shared by the stability machinery.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Variety {
    Rank2(Rank2Variety),
    Rank1(Rank1Variety),
}

impl From<Rank2Variety> for Variety {
    fn from(v: Rank2Variety) -> Self {
        Variety::Rank2(v)
    }
}

impl From<Rank1Variety> for Variety {
    fn from(v: Rank1Variety) -> Self {
        Variety::Rank1(v)
    }
}

fn to_vector(coords: &[i64]) -> Vector {
    coords
        .iter()
        .map(|&c| Rational::from_integer(BigInt::from(c)))
        .collect()
}

impl Variety {
    pub fn rank2(r: usize, s: usize, a: &[u64]) -> Result<Self> {
        Rank2Variety::build(r, s, a).map(Variety::Rank2)
    }

    pub fn rank1(q: &[u64]) -> Result<Self> {
        Rank1Variety::build(q).map(Variety::Rank1)
    }

    pub fn picard_rank(&self) -> usize {
        match self {
            Variety::Rank2(_) => 2,
            Variety::Rank1(_) => 1,
        }
    }

    /// Dimension `n` of the variety, which is also the rank of its tangent
    /// sheaf.
    pub fn dim(&self) -> usize {
        match self {
            Variety::Rank2(v) => v.dim(),
            Variety::Rank1(v) => v.dim(),
        }
    }

    pub fn rays(&self) -> Vec<RayName> {
        match self {
            Variety::Rank2(v) => v.rays(),
            Variety::Rank1(v) => v.rays(),
        }
    }

    pub fn has_ray(&self, ray: RayName) -> bool {
        match self {
            Variety::Rank2(v) => v.has_ray(ray),
            Variety::Rank1(v) => v.has_ray(ray),
        }
    }

    /// Dimension of the model space in which generators live.
    pub fn model_dim(&self) -> usize {
        match self {
            Variety::Rank2(v) => v.dim(),
            Variety::Rank1(v) => v.dim() + 1,
        }
    }

    /// Relation vectors that are quotiented out of the model space.
    pub fn relations(&self) -> Vec<Vector> {
        match self {
            Variety::Rank2(_) => Vec::new(),
            Variety::Rank1(v) => vec![to_vector(&v.relation())],
        }
    }

    pub fn generator(&self, ray: RayName) -> Result<Vec<i64>> {
        match self {
            Variety::Rank2(v) => v.generator(ray),
            Variety::Rank1(v) => v.generator(ray),
        }
    }

    pub fn generator_vector(&self, ray: RayName) -> Result<Vector> {
        self.generator(ray).map(|u| to_vector(&u))
    }

    /// Rational span of the given ray generators.
    pub fn span_of(&self, rays: &[RayName]) -> Result<Subspace> {
        let vectors = rays
            .iter()
            .map(|&ray| self.generator_vector(ray))
            .collect::<Result<Vec<_>>>()?;
        Ok(Subspace::span(
            &vectors,
            &self.relations(),
            self.model_dim(),
        ))
    }

    /// The whole space `N_Q`.
    pub fn full_space(&self) -> Subspace {
        self.span_of(&self.rays()).expect("own rays are valid")
    }

    pub fn zero_space(&self) -> Subspace {
        Subspace::span(&[], &self.relations(), self.model_dim())
    }

    /// Checks that every ray exists and none repeats; returns them sorted.
    pub fn validate_delta(&self, delta: &[RayName]) -> Result<Vec<RayName>> {
        let mut seen = BTreeSet::new();
        for &ray in delta {
            if !self.has_ray(ray) {
                return Err(Error::UnknownRay(ray));
            }
            if !seen.insert(ray) {
                return Err(Error::DuplicateRay(ray));
            }
        }
        Ok(seen.into_iter().collect())
    }

    /// Rays outside `delta`, in ray order.
    pub fn complement(&self, delta: &[RayName]) -> Vec<RayName> {
        self.rays()
            .into_iter()
            .filter(|r| !delta.contains(r))
            .collect()
    }

    /// Short human-readable description such as `rank2(r=1,s=1,a=[1])`.
    pub fn describe(&self) -> String {
        use alloc::format;
        match self {
            Variety::Rank2(v) => format!("rank2(r={},s={},a={:?})", v.r, v.s, v.a),
            Variety::Rank1(v) => format!("rank1(q={:?})", v.q),
        }
    }
}

/// Class of a divisor up to linear equivalence. Rank two: coefficients
/// `(mu, lambda)` on the basis `(D_w0, D_v0)`. Rank one: coefficient on
/// `D_u0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum DivisorClass {
    Rank2 { mu: Rational, lambda: Rational },
    Rank1(Rational),
}

impl DivisorClass {
    pub fn is_ample(&self) -> bool {
        match self {
            DivisorClass::Rank2 { mu, lambda } => mu.is_positive() && lambda.is_positive(),
            DivisorClass::Rank1(c) => c.is_positive(),
        }
    }

    /// The polarization ratio `nu = mu / lambda` of an ample rank-two class.
    pub fn nu(&self) -> Option<Rational> {
        match self {
            DivisorClass::Rank2 { mu, lambda } if !lambda.is_zero() => Some(mu / lambda),
            _ => None,
        }
    }
}

pub fn is_ample(c: &DivisorClass) -> bool {
    c.is_ample()
}

/// Reduces `sum coeff * D_ray` to its class.
pub fn class_of(variety: &Variety, coeffs: &[(RayName, i64)]) -> Result<DivisorClass> {
    match variety {
        Variety::Rank2(v) => {
            let (mut mu, mut lambda) = (Rational::zero(), Rational::zero());
            for &(ray, c) in coeffs {
                if !v.has_ray(ray) {
                    return Err(Error::UnknownRay(ray));
                }
                let c = Rational::from_integer(BigInt::from(c));
                match ray {
                    RayName::W(_) => mu += c,
                    RayName::V(i) => {
                        mu -= &c * Rational::from_integer(BigInt::from(v.a_at(i)));
                        lambda += c;
                    }
                    RayName::U(_) => unreachable!(),
                }
            }
            Ok(DivisorClass::Rank2 { mu, lambda })
        }
        Variety::Rank1(v) => {
            let mut total = Rational::zero();
            for &(ray, c) in coeffs {
                let RayName::U(j) = ray else {
                    return Err(Error::UnknownRay(ray));
                };
                if j >= v.q.len() {
                    return Err(Error::UnknownRay(ray));
                }
                total +=
                    Rational::new(BigInt::from(c) * BigInt::from(v.q[j]), BigInt::from(v.q[0]));
            }
            Ok(DivisorClass::Rank1(total))
        }
    }
}

/// Class of `-(K_X + D)`, the sum of the divisors of rays outside `delta`.
pub fn log_anticanonical_class(variety: &Variety, delta: &[RayName]) -> Result<DivisorClass> {
    let delta = variety.validate_delta(delta)?;
    let coeffs: Vec<(RayName, i64)> = variety
        .complement(&delta)
        .into_iter()
        .map(|ray| (ray, 1))
        .collect();
    class_of(variety, &coeffs)
}
