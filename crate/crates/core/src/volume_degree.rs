//! Degrees of invariant divisors with respect to `L = pi^*O(nu) ⊗ O(1)`,
//! computed as normalized facet volumes of the moment polytope. Every degree
//! is a polynomial in `nu` with exact rational coefficients.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{binomial, Rational};
use crate::error::{Error, Result};
use crate::lattice_fan::{Rank1Variety, Rank2Variety, RayName, Variety};
use crate::poly::RatPoly;

/// Complete homogeneous symmetric polynomial `h_d(vars)` by dynamic
/// programming over the variables.
fn complete_homogeneous(vars: &[u64], d: usize) -> BigInt {
    // table[k] = h_k over the variables processed so far.
    let mut table = vec![BigInt::zero(); d + 1];
    table[0] = BigInt::one();
    for &x in vars {
        let x = BigInt::from(x);
        for k in 1..=d {
            let prev = table[k - 1].clone();
            table[k] += prev * &x;
        }
    }
    table[d].clone()
}

/// `h_d(vars)` by listing every exponent vector `d_1 + ... + d_m = d`.
fn composition_sum(vars: &[u64], d: usize) -> BigInt {
    fn go(vars: &[u64], left: usize, acc: BigInt) -> BigInt {
        match vars.split_first() {
            None if left == 0 => acc,
            None => BigInt::zero(),
            Some((&x, rest)) => {
                let mut total = BigInt::zero();
                let mut power = BigInt::one();
                for e in 0..=left {
                    total += go(rest, left - e, &acc * &power);
                    power *= x;
                }
                total
            }
        }
    }
    go(vars, d, BigInt::one())
}

/// Normalized volume of `Conv((c_0 + nu) P_s × {0} ∪ ... ∪ (c_r + nu) P_s × {v_r})`
/// with `s = s_eff` and `r + 1 = c.len()`, as a polynomial in `nu`.
pub fn volume_poly(s_eff: usize, c: &[u64]) -> Result<RatPoly> {
    if c.is_empty() {
        return Err(Error::EmptyC);
    }
    let r_eff = c.len() - 1;
    let coeffs = (0..=s_eff)
        .map(|k| {
            Rational::from_integer(
                binomial((s_eff + r_eff) as u64, k as u64) * complete_homogeneous(c, s_eff - k),
            )
        })
        .collect();
    Ok(RatPoly::from_coeffs(coeffs))
}

/// The facet degrees of a rank-two variety: one polynomial `W` shared by all
/// `D_wj`, and `V_0..V_r` for the `D_vi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetPolys {
    pub w: RatPoly,
    pub v: Vec<RatPoly>,
}

impl FacetPolys {
    pub fn degree(&self, ray: RayName) -> &RatPoly {
        match ray {
            RayName::W(_) => &self.w,
            RayName::V(i) => &self.v[i],
            RayName::U(_) => panic!("rank-one ray on a rank-two variety"),
        }
    }
}

/// The closed forms built from the blocks `W_k`, `V_0k`, `V_ik`, which only
/// involve the non-zero twists `a_{z+1}..a_r`.
pub fn facet_degree_polys(x: &Rank2Variety) -> FacetPolys {
    let (r, s) = (x.r(), x.s());
    let z = x.z();
    let nonzero: Vec<u64> = x.a()[z..].to_vec();
    let binom = |k: usize| Rational::from_integer(binomial((s + r - 1) as u64, k as u64));

    let w_k = |k: usize| {
        if k >= s {
            BigInt::zero()
        } else {
            composition_sum(&nonzero, s - 1 - k)
        }
    };
    let v0_k = |k: usize| composition_sum(&nonzero, s - k);
    let vi_k = |i: usize, k: usize| {
        if r == 1 {
            // With a single v ray the sum runs over no variables at all.
            return if k == s {
                BigInt::one()
            } else {
                BigInt::zero()
            };
        }
        if i <= z {
            return v0_k(k);
        }
        let mut rest = nonzero.clone();
        rest.remove(i - z - 1);
        composition_sum(&rest, s - k)
    };

    let w = RatPoly::from_coeffs(
        (0..s)
            .map(|k| binom(k) * Rational::from_integer(w_k(k)))
            .collect(),
    );
    let v = (0..=r)
        .map(|i| {
            RatPoly::from_coeffs(
                (0..=s)
                    .map(|k| {
                        let block = if i == 0 { v0_k(k) } else { vi_k(i, k) };
                        binom(k) * Rational::from_integer(block)
                    })
                    .collect(),
            )
        })
        .collect();
    let out = FacetPolys { w, v };
    debug_assert_eq!(out, facet_polys_by_volume(x), "facet formulas disagree");
    out
}

/// The same polynomials obtained by substituting into [`volume_poly`].
pub fn facet_polys_by_volume(x: &Rank2Variety) -> FacetPolys {
    let s = x.s();
    let mut zero_a = vec![0u64];
    zero_a.extend_from_slice(x.a());
    let w = volume_poly(s - 1, &zero_a).expect("non-empty");
    let mut v = vec![volume_poly(s, x.a()).expect("non-empty")];
    for i in 0..x.r() {
        let mut c = vec![0u64];
        c.extend(
            x.a()
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .map(|(_, &ak)| ak),
        );
        v.push(volume_poly(s, &c).expect("non-empty"));
    }
    FacetPolys { w, v }
}

/// Degree of every ray divisor, as a polynomial in `nu`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSystem {
    per_ray: BTreeMap<RayName, RatPoly>,
}

impl DegreeSystem {
    pub fn degree(&self, ray: RayName) -> &RatPoly {
        &self.per_ray[&ray]
    }

    pub fn iter(&self) -> impl Iterator<Item = (&RayName, &RatPoly)> {
        self.per_ray.iter()
    }

    /// All degrees at a fixed polarization ratio.
    pub fn at(&self, nu: &Rational) -> BTreeMap<RayName, Rational> {
        self.per_ray
            .iter()
            .map(|(&ray, p)| (ray, p.eval(nu)))
            .collect()
    }
}

/// Rank one: `deg(D_j) = q_j t` with the normalization `t = 1`. Slopes are
/// only ever compared with each other, so the scale drops out.
pub fn rank1_degrees(x: &Rank1Variety) -> DegreeSystem {
    DegreeSystem {
        per_ray: x
            .q()
            .iter()
            .enumerate()
            .map(|(j, &qj)| {
                (
                    RayName::U(j),
                    RatPoly::constant(Rational::from_integer(BigInt::from(qj))),
                )
            })
            .collect(),
    }
}

pub fn degree_system(x: &Variety) -> DegreeSystem {
    match x {
        Variety::Rank1(v) => rank1_degrees(v),
        Variety::Rank2(v) => {
            let polys = facet_degree_polys(v);
            DegreeSystem {
                per_ray: v
                    .rays()
                    .into_iter()
                    .map(|ray| (ray, polys.degree(ray).clone()))
                    .collect(),
            }
        }
    }
}
