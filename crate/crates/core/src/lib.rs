//! Exact slope-stability decisions for equivariant logarithmic tangent
//! sheaves `T_X(-log D)` on toric varieties of Picard rank one and two.
//!
//! The crate is `no_std` (it needs `alloc`). All arithmetic is exact: degrees
//! are rational polynomials in the polarization ratio `nu = mu / lambda`,
//! slopes are compared as rationals, and irrational region endpoints are kept
//! as algebraic numbers with isolating intervals.
//!
//! Module map:
//!
//! * [`lattice_fan`]: the two parametric fan families, divisor classes and
//!   ampleness.
//! * [`klyachko`]: filtration families of `T_X(-log D)`, of its sub-sheaves,
//!   direct sums and the known decompositions.
//! * [`volume_degree`]: divisor degrees as facet-volume polynomials.
//! * [`stability`]: slopes, the finite-candidate stability criterion, the
//!   brute-force subspace oracle and poly-stability.
//! * [`regions`]: closed-form stability regions in `nu`, case polynomials,
//!   Descartes' rule and root isolation.
//! * [`delpezzo`]: log del Pezzo pairs on surfaces of Picard rank at most two.
#![no_std]

extern crate alloc;

pub mod arith;
pub mod delpezzo;
pub mod error;
pub mod klyachko;
pub mod lattice_fan;
pub mod poly;
pub mod regions;
pub mod stability;
pub mod subspace;
pub mod volume_degree;

pub use arith::Rational;
pub use error::Error;
pub use lattice_fan::{DivisorClass, Rank1Variety, Rank2Variety, RayName, Variety};
pub use poly::RatPoly;
pub use stability::{Polystability, StabilityKind, Verdict};
