//! Exact rational subspaces of a model space `Q^m`, optionally taken modulo a
//! fixed relation subspace `R`.
//!
//! A subspace `G` of the quotient `Q^m / R` is stored through its lift, the
//! preimage `G + R`, in reduced row echelon form. Lifts commute with sums and
//! intersections, so every operation works directly on the lifts and the
//! quotient only shows up in [`Subspace::dim`].

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::arith::Rational;

pub type Vector = Vec<Rational>;

/// Canonical reduced row echelon form of the span of `vectors` in `Q^m`.
pub fn rref(vectors: &[Vector], m: usize) -> Vec<Vector> {
    let mut rows: Vec<Vector> = vectors
        .iter()
        .map(|v| {
            debug_assert_eq!(v.len(), m);
            v.clone()
        })
        .collect();
    let mut pivot_row = 0;
    for col in 0..m {
        let Some(found) = (pivot_row..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, found);
        let inv = rows[pivot_row][col].recip();
        for x in rows[pivot_row].iter_mut() {
            *x *= &inv;
        }
        let pivot = rows[pivot_row].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == pivot_row || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot) {
                *x -= &factor * p;
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    rows.truncate(pivot_row);
    rows
}

/// Rank of a list of vectors in `Q^m`.
pub fn rank(vectors: &[Vector], m: usize) -> usize {
    rref(vectors, m).len()
}

/// Basis of `{x : <row, x> = 0 for every row}` given rows in RREF.
fn nullspace(rows: &[Vector], m: usize) -> Vec<Vector> {
    let pivots: Vec<usize> = rows
        .iter()
        .map(|r| r.iter().position(|x| !x.is_zero()).unwrap())
        .collect();
    (0..m)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); m];
            v[free] = Rational::one();
            for (row, &p) in rows.iter().zip(&pivots) {
                v[p] = -row[free].clone();
            }
            v
        })
        .collect()
}

/// A subspace of `Q^m / R`, where `R` is the relation span.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    m: usize,
    rel: Vec<Vector>,
    lift: Vec<Vector>,
}

impl Subspace {
    /// The span of `vectors` modulo the span of `relations`.
    pub fn span(vectors: &[Vector], relations: &[Vector], m: usize) -> Self {
        let rel = rref(relations, m);
        let all: Vec<Vector> = rel.iter().chain(vectors).cloned().collect();
        Self {
            m,
            lift: rref(&all, m),
            rel,
        }
    }

    /// The zero subspace in the same quotient as `self`.
    pub fn zero_like(&self) -> Self {
        Self {
            m: self.m,
            rel: self.rel.clone(),
            lift: self.rel.clone(),
        }
    }

    fn with_lift(&self, lift: Vec<Vector>) -> Self {
        Self {
            m: self.m,
            rel: self.rel.clone(),
            lift,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.m
    }

    /// Dimension in the quotient.
    pub fn dim(&self) -> usize {
        self.lift.len() - self.rel.len()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// RREF rows of the lift (including the relation directions).
    pub fn lift_rows(&self) -> &[Vector] {
        &self.lift
    }

    pub fn contains_vector(&self, v: &Vector) -> bool {
        let mut rows = self.lift.clone();
        rows.push(v.clone());
        rank(&rows, self.m) == self.lift.len()
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        debug_assert_eq!(self.m, other.m);
        other.lift.iter().all(|v| self.contains_vector(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        debug_assert_eq!(self.m, other.m);
        let all: Vec<Vector> = self.lift.iter().chain(&other.lift).cloned().collect();
        self.with_lift(rref(&all, self.m))
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        debug_assert_eq!(self.m, other.m);
        // Lifts are canonical, so the whole space and zero show up by length.
        if self.lift.len() == self.m || other.lift.len() == other.rel.len() {
            return other.clone();
        }
        if other.lift.len() == other.m || self.lift.len() == self.rel.len() {
            return self.clone();
        }
        let mut ann = nullspace(&self.lift, self.m);
        ann.extend(nullspace(&other.lift, self.m));
        let ann = rref(&ann, self.m);
        self.with_lift(rref(&nullspace(&ann, self.m), self.m))
    }
}

/// Integer vector as a rational vector.
pub fn ivec(coords: &[i64]) -> Vector {
    coords.iter().map(|&c| crate::arith::int(c)).collect()
}
