//! Log smooth toric del Pezzo pairs `(X, D)` on surfaces of Picard rank at
//! most two, and stability of `T_X(-log D)` with respect to `-(K_X + D)`.
//!
//! A smooth toric surface of Picard rank three or more admits no reduced
//! invariant `D` making `(X, D)` log del Pezzo; that fact is recorded here and
//! not computed.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::One;

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::lattice_fan::{log_anticanonical_class, RayName, Variety};
use crate::stability::{check_at, Polystability, StabilityKind, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SurfaceKind {
    P2,
    /// `P(O ⊕ O(r))` over the projective line.
    Hirzebruch(u64),
}

impl fmt::Display for SurfaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceKind::P2 => f.write_str("P2"),
            SurfaceKind::Hirzebruch(r) => write!(f, "F{r}"),
        }
    }
}

impl SurfaceKind {
    pub fn variety(self) -> Variety {
        match self {
            SurfaceKind::P2 => Variety::rank1(&[1, 1, 1]).expect("valid weights"),
            SurfaceKind::Hirzebruch(r) => Variety::rank2(1, 1, &[r]).expect("valid twist"),
        }
    }

    /// The ray of the surface divisor `D_i`. For Hirzebruch surfaces
    /// `D0 = D_v0, D1 = D_w1, D2 = D_v1, D3 = D_w0`.
    pub fn ray(self, i: usize) -> Option<RayName> {
        match (self, i) {
            (SurfaceKind::P2, 0..=2) => Some(RayName::U(i)),
            (SurfaceKind::Hirzebruch(_), 0) => Some(RayName::V(0)),
            (SurfaceKind::Hirzebruch(_), 1) => Some(RayName::W(1)),
            (SurfaceKind::Hirzebruch(_), 2) => Some(RayName::V(1)),
            (SurfaceKind::Hirzebruch(_), 3) => Some(RayName::W(0)),
            _ => None,
        }
    }

    /// Inverse of [`SurfaceKind::ray`].
    pub fn index_of(self, ray: RayName) -> Option<usize> {
        (0..4).find(|&i| self.ray(i) == Some(ray))
    }

    fn rays_of(self, indices: &[usize]) -> Vec<RayName> {
        let mut out: Vec<RayName> = indices.iter().map(|&i| self.ray(i).unwrap()).collect();
        out.sort();
        out
    }

    /// `D0 + D2` style label for a divisor (empty divisor: `0`).
    pub fn label(self, delta: &[RayName]) -> String {
        let mut idx: Vec<usize> = delta.iter().filter_map(|&r| self.index_of(r)).collect();
        idx.sort();
        if idx.is_empty() {
            return String::from("0");
        }
        let parts: Vec<String> = idx.iter().map(|i| format!("D{i}")).collect();
        parts.join("+")
    }
}

/// The divisors the classification quantifies over: reduced with at most two
/// components on Hirzebruch surfaces (the empty divisor included), non-empty
/// on the projective plane.
pub fn candidate_divisors(kind: SurfaceKind) -> Vec<Vec<RayName>> {
    let n = match kind {
        SurfaceKind::P2 => 3,
        SurfaceKind::Hirzebruch(_) => 4,
    };
    let mut out = Vec::new();
    if let SurfaceKind::Hirzebruch(_) = kind {
        out.push(Vec::new());
    }
    for i in 0..n {
        out.push(kind.rays_of(&[i]));
    }
    for i in 0..n {
        for j in i + 1..n {
            out.push(kind.rays_of(&[i, j]));
        }
    }
    if let SurfaceKind::P2 = kind {
        out.push(kind.rays_of(&[0, 1, 2]));
    }
    out
}

/// Ampleness of `-(K_X + D)` as stated by the classification, clause by
/// clause. `None` for divisors the statement does not cover.
pub fn published_ampleness(kind: SurfaceKind, delta: &[RayName]) -> Option<bool> {
    let mut idx: Vec<usize> = delta
        .iter()
        .map(|&r| kind.index_of(r))
        .collect::<Option<_>>()?;
    idx.sort();
    match kind {
        SurfaceKind::P2 => match idx.len() {
            1 | 2 => Some(true),
            3 => Some(false),
            _ => None,
        },
        SurfaceKind::Hirzebruch(r) => match idx.as_slice() {
            [] | [0] => Some(r <= 1),
            [1] | [3] | [0, 1] | [0, 3] => Some(r == 0),
            [2] | [1, 2] | [2, 3] => Some(true),
            [0, 2] | [1, 3] => Some(false),
            _ => None,
        },
    }
}

/// Divisors with `-(K_X + D)` computed from classes, each paired with its
/// ampleness. Panics if a result contradicts the published classification.
pub fn enumerate_pairs(kind: SurfaceKind) -> Vec<(Vec<RayName>, bool)> {
    let x = kind.variety();
    candidate_divisors(kind)
        .into_iter()
        .map(|delta| {
            let ample = log_anticanonical_class(&x, &delta)
                .expect("divisor built from the surface's rays")
                .is_ample();
            assert_eq!(
                Some(ample),
                published_ampleness(kind, &delta),
                "ampleness of -(K+D) for {kind}, D = {}",
                kind.label(&delta)
            );
            (delta, ample)
        })
        .collect()
}

/// A published stability statement for a log del Pezzo pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PublishedVerdict {
    PolystableNotStable,
    Polystable,
    Stable,
    Unstable,
}

pub fn published_verdict(kind: SurfaceKind, delta: &[RayName]) -> Option<PublishedVerdict> {
    let mut idx: Vec<usize> = delta
        .iter()
        .map(|&r| kind.index_of(r))
        .collect::<Option<_>>()?;
    idx.sort();
    use PublishedVerdict as P;
    match (kind, idx.as_slice()) {
        (SurfaceKind::P2, [_]) => Some(P::PolystableNotStable),
        (SurfaceKind::P2, [_, _]) => Some(P::Unstable),
        (SurfaceKind::Hirzebruch(0), [_] | [0, 1] | [0, 3] | [1, 2] | [2, 3]) => {
            Some(P::Polystable)
        }
        (SurfaceKind::Hirzebruch(1), [0]) => Some(P::Stable),
        (SurfaceKind::Hirzebruch(r), [2] | [1, 2] | [2, 3]) if r >= 1 => Some(P::Unstable),
        _ => None,
    }
}

fn matches_published(p: PublishedVerdict, v: &Verdict) -> bool {
    match p {
        PublishedVerdict::PolystableNotStable => {
            v.kind == StabilityKind::StrictlySemistable && v.polystable == Polystability::Yes
        }
        PublishedVerdict::Polystable => v.polystable == Polystability::Yes,
        PublishedVerdict::Stable => v.kind == StabilityKind::Stable,
        PublishedVerdict::Unstable => v.kind == StabilityKind::Unstable,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairReport {
    pub kind: SurfaceKind,
    pub divisor: Vec<RayName>,
    pub ample: bool,
    /// `mu / lambda` of `-(K_X + D)`; on the projective plane the polarization
    /// is unique up to scale and `nu = 1` is used.
    pub nu: Option<Rational>,
    pub verdict: Option<Verdict>,
    pub published: Option<PublishedVerdict>,
}

/// Stability of `T_X(-log D)` with respect to `-(K_X + D)` when that class is
/// ample. Disagreement with a published verdict is an error.
pub fn delpezzo_report(kind: SurfaceKind, delta: &[RayName]) -> Result<PairReport> {
    let x = kind.variety();
    let delta = x.validate_delta(delta)?;
    let class = log_anticanonical_class(&x, &delta)?;
    let ample = class.is_ample();
    let published = published_verdict(kind, &delta);
    let (nu, verdict) = if ample {
        let nu = class.nu().unwrap_or_else(Rational::one);
        let verdict = check_at(&x, &delta, &nu)?;
        if let Some(p) = published {
            if !matches_published(p, &verdict) {
                return Err(Error::PublishedMismatch(format!(
                    "{kind}, D = {}",
                    kind.label(&delta)
                )));
            }
        }
        (Some(nu), Some(verdict))
    } else {
        (None, None)
    };
    Ok(PairReport {
        kind,
        divisor: delta,
        ample,
        nu,
        verdict,
        published,
    })
}

/// Reports for every pair enumerated on `kind`, ample or not.
pub fn survey(kind: SurfaceKind) -> Result<Vec<PairReport>> {
    enumerate_pairs(kind)
        .into_iter()
        .map(|(delta, _)| delpezzo_report(kind, &delta))
        .collect()
}

/// The eight divisor families on the quadric surface that are published as
/// poly-stable.
pub fn quadric_families() -> Vec<Vec<RayName>> {
    let k = SurfaceKind::Hirzebruch(0);
    let mut out: Vec<Vec<RayName>> = (0..4).map(|i| k.rays_of(&[i])).collect();
    for pair in [[0, 1], [0, 3], [1, 2], [2, 3]] {
        out.push(k.rays_of(&pair));
    }
    out
}
