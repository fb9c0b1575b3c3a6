//! Klyachko filtration families of `T_X(-log D)`, of its equivariant
//! sub-sheaves `E_G`, their direct sums, and the known decompositions.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::lattice_fan::{RayName, Variety};
use crate::subspace::Subspace;

/// An increasing filtration `E(j)` of a vector space, stored as its jumps:
/// `E(j)` is the subspace of the last jump with threshold `<= j`, or zero
/// before the first jump. Jumps are kept strictly increasing in both the
/// threshold and the subspace, which makes the representation canonical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RayFiltration {
    zero: Subspace,
    jumps: Vec<(i64, Subspace)>,
}

impl RayFiltration {
    /// Builds a filtration from `(threshold, subspace)` pairs sorted by
    /// threshold. Repeated values are dropped.
    pub fn new(zero: Subspace, steps: Vec<(i64, Subspace)>) -> Self {
        let mut jumps: Vec<(i64, Subspace)> = Vec::with_capacity(steps.len());
        for (j, space) in steps {
            debug_assert!(jumps.last().is_none_or(|(t, _)| *t < j));
            let prev = jumps.last().map_or(&zero, |(_, s)| s);
            debug_assert!(space.contains(prev), "filtration must increase");
            if space != *prev {
                jumps.push((j, space));
            }
        }
        Self { zero, jumps }
    }

    pub fn jumps(&self) -> &[(i64, Subspace)] {
        &self.jumps
    }

    pub fn at(&self, j: i64) -> &Subspace {
        self.jumps
            .iter()
            .rev()
            .find(|(t, _)| *t <= j)
            .map_or(&self.zero, |(_, s)| s)
    }

    pub fn top(&self) -> &Subspace {
        self.jumps.last().map_or(&self.zero, |(_, s)| s)
    }

    /// `sum_i i * (dim E(i-1) - dim E(i))`, the coefficient of `D_rho` in the
    /// first Chern class.
    pub fn chern_weight(&self) -> i64 {
        let mut prev = 0i64;
        let mut total = 0i64;
        for (t, space) in &self.jumps {
            let d = space.dim() as i64;
            total += t * (prev - d);
            prev = d;
        }
        total
    }
}

/// The Klyachko data of an equivariant reflexive sheaf: a space `E` and one
/// filtration of `E` per ray.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiltrationFamily {
    ambient: Subspace,
    per_ray: BTreeMap<RayName, RayFiltration>,
}

impl FiltrationFamily {
    pub fn new(ambient: Subspace, per_ray: BTreeMap<RayName, RayFiltration>) -> Self {
        debug_assert!(per_ray.values().all(|f| *f.top() == ambient));
        Self { ambient, per_ray }
    }

    pub fn ambient(&self) -> &Subspace {
        &self.ambient
    }

    pub fn rank(&self) -> usize {
        self.ambient.dim()
    }

    pub fn filtration(&self, ray: RayName) -> &RayFiltration {
        &self.per_ray[&ray]
    }

    pub fn iter(&self) -> impl Iterator<Item = (&RayName, &RayFiltration)> {
        self.per_ray.iter()
    }
}

/// Filtrations of `T_X(-log D)`: rays in `delta` jump straight from zero to
/// the whole space at 0; every other ray passes through `Span(u_rho)` at -1.
pub fn logtangent_filtrations(x: &Variety, delta: &[RayName]) -> Result<FiltrationFamily> {
    let delta = x.validate_delta(delta)?;
    let full = x.full_space();
    let zero = x.zero_space();
    let per_ray = x
        .rays()
        .into_iter()
        .map(|ray| {
            let mut steps = Vec::new();
            if !delta.contains(&ray) {
                steps.push((-1, x.span_of(&[ray])?));
            }
            steps.push((0, full.clone()));
            Ok((ray, RayFiltration::new(zero.clone(), steps)))
        })
        .collect::<Result<BTreeMap<_, _>>>()?;
    Ok(FiltrationFamily::new(full, per_ray))
}

/// Filtrations of the sub-sheaf `E_G`: `G(j) = E(j) ∩ G` ray by ray.
pub fn subsheaf_filtrations(family: &FiltrationFamily, g: &Subspace) -> Result<FiltrationFamily> {
    if g.is_zero() || !family.ambient.contains(g) {
        return Err(Error::NotASubspace);
    }
    let per_ray = family
        .per_ray
        .iter()
        .map(|(&ray, filt)| {
            let steps = filt
                .jumps
                .iter()
                .map(|(t, space)| (*t, space.intersection(g)))
                .collect();
            (ray, RayFiltration::new(filt.zero.clone(), steps))
        })
        .collect();
    Ok(FiltrationFamily::new(g.clone(), per_ray))
}

/// Direct sum of families whose ambient spaces are independent.
pub fn direct_sum(families: &[FiltrationFamily]) -> Result<FiltrationFamily> {
    let (first, rest) = families.split_first().ok_or(Error::EmptySum)?;
    let ambient = rest
        .iter()
        .fold(first.ambient.clone(), |acc, f| acc.sum(&f.ambient));
    let total: usize = families.iter().map(FiltrationFamily::rank).sum();
    if ambient.dim() != total {
        return Err(Error::OverlappingAmbients);
    }
    let rays: BTreeSet<RayName> = families
        .iter()
        .flat_map(|f| f.per_ray.keys().copied())
        .collect();
    let per_ray = rays
        .into_iter()
        .map(|ray| {
            let parts: Vec<&RayFiltration> = families
                .iter()
                .filter_map(|f| f.per_ray.get(&ray))
                .collect();
            let thresholds: BTreeSet<i64> = parts
                .iter()
                .flat_map(|p| p.jumps.iter().map(|(t, _)| *t))
                .collect();
            let zero = first.ambient.zero_like();
            let steps = thresholds
                .into_iter()
                .map(|t| {
                    let space = parts.iter().fold(zero.clone(), |acc, p| acc.sum(p.at(t)));
                    (t, space)
                })
                .collect();
            (ray, RayFiltration::new(zero, steps))
        })
        .collect();
    Ok(FiltrationFamily::new(ambient, per_ray))
}

/// Which decomposition statement produced a splitting.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DecompositionCase {
    /// `|Δ| = p` and the remaining generators span: one line per generator.
    SpanningComplement,
    /// `p + 1 <= |Δ| <= n + p - 1`: the span of the remaining generators plus
    /// a complement.
    SpanPlusComplement,
    /// Product variety, `Δ = {v_i}`: lines `Span(v_k)` and `Span(w_0..w_s)`.
    ProductSingleV,
    /// `Δ = {w_j}`: lines `Span(w_k)` and `Span(v_0..v_r)`.
    SingleW,
    /// `Δ = {w_i, w_j}`: lines `Span(w_k)`, `k != i`, and `Span(v_0..v_r)`.
    PairW,
    /// Product variety, `Δ = {v_i, v_j}`: `Span(w's)` and `Span(v's)`.
    ProductPairV,
    /// `Δ = {v_i, v_j}` with `a_i = a_j`: the span of the rest and `Span(v_i)`.
    PairVEqualTwist,
    /// `Δ = {v_0}`, `r >= 2`, `a_1 = 0`: `Span(w's, v_2..v_r)` and `Span(v_1)`.
    V0WithZeroTwist,
}

/// A verified splitting of `T_X(-log D)` into sub-sheaves `E_G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub case: DecompositionCase,
    pub summands: Vec<Subspace>,
}

fn lines(x: &Variety, rays: &[RayName]) -> Vec<Subspace> {
    rays.iter()
        .map(|&r| x.span_of(&[r]).expect("valid ray"))
        .collect()
}

/// Completes `g` to the whole space with standard basis directions of the
/// model space, chosen greedily.
fn coordinate_complement(x: &Variety, g: &Subspace) -> Subspace {
    let m = x.model_dim();
    let rel = x.relations();
    let mut f = x.zero_space();
    let mut acc = g.clone();
    for k in 0..m {
        let mut e = vec![0i64; m];
        e[k] = 1;
        let line = Subspace::span(&[crate::subspace::ivec(&e)], &rel, m);
        let grown = acc.sum(&line);
        if grown.dim() > acc.dim() {
            acc = grown;
            f = f.sum(&line);
        }
    }
    f
}

fn candidate_splittings(x: &Variety, delta: &[RayName]) -> Vec<(DecompositionCase, Vec<Subspace>)> {
    use DecompositionCase::*;
    let n = x.dim();
    let p = x.picard_rank();
    let rest = x.complement(delta);
    let mut out = Vec::new();

    if delta.len() == p && x.span_of(&rest).expect("valid").dim() == n {
        out.push((SpanningComplement, lines(x, &rest)));
    }
    if (p + 1..=n + p - 1).contains(&delta.len()) {
        let g = x.span_of(&rest).expect("valid");
        let f = coordinate_complement(x, &g);
        out.push((SpanPlusComplement, vec![g, f]));
    }

    let Variety::Rank2(v) = x else {
        return out;
    };
    let (r, s) = (v.r(), v.s());
    let ws: Vec<RayName> = (0..=s).map(RayName::W).collect();
    let vs: Vec<RayName> = (0..=r).map(RayName::V).collect();
    let span = |rays: &[RayName]| x.span_of(rays).expect("valid");
    let others = |all: &[RayName], skip: &[RayName]| -> Vec<RayName> {
        all.iter().copied().filter(|q| !skip.contains(q)).collect()
    };

    match *delta {
        [RayName::V(i)] => {
            if v.is_product() {
                let mut parts = lines(x, &others(&vs, &[RayName::V(i)]));
                parts.push(span(&ws));
                out.push((ProductSingleV, parts));
            }
            if i == 0 && r >= 2 && v.a_at(1) == 0 {
                let mut g_rays = ws.clone();
                g_rays.extend((2..=r).map(RayName::V));
                out.push((V0WithZeroTwist, vec![span(&g_rays), span(&[RayName::V(1)])]));
            }
        }
        [RayName::W(j)] => {
            let mut parts = lines(x, &others(&ws, &[RayName::W(j)]));
            parts.push(span(&vs));
            out.push((SingleW, parts));
        }
        [RayName::W(i), RayName::W(_)] => {
            let mut parts = lines(x, &others(&ws, &[RayName::W(i)]));
            parts.push(span(&vs));
            out.push((PairW, parts));
        }
        [RayName::V(i), RayName::V(j)] => {
            if v.is_product() {
                out.push((ProductPairV, vec![span(&ws), span(&vs)]));
            }
            if v.a_at(i) == v.a_at(j) {
                out.push((PairVEqualTwist, vec![span(&rest), span(&[RayName::V(i)])]));
            }
        }
        _ => {}
    }
    out
}

/// Returns a splitting of `T_X(-log D)` from the known decomposition
/// statements, each verified by re-summing the sub-sheaf filtrations. When
/// several apply, the finest is returned. `None` means no covered case
/// applies; it does not certify indecomposability.
pub fn decompose(x: &Variety, delta: &[RayName]) -> Result<Option<Decomposition>> {
    let delta = x.validate_delta(delta)?;
    let family = logtangent_filtrations(x, &delta)?;
    let mut best: Option<Decomposition> = None;
    for (case, summands) in candidate_splittings(x, &delta) {
        if summands.iter().any(Subspace::is_zero) {
            continue;
        }
        let parts: Result<Vec<_>> = summands
            .iter()
            .map(|g| subsheaf_filtrations(&family, g))
            .collect();
        let Ok(parts) = parts else { continue };
        let verified = direct_sum(&parts).is_ok_and(|sum| sum == family);
        let finer = best
            .as_ref()
            .is_none_or(|b| summands.len() > b.summands.len());
        if verified && finer {
            best = Some(Decomposition { case, summands });
        }
    }
    Ok(best)
}
