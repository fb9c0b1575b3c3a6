use alloc::string::String;

use crate::lattice_fan::RayName;

/// Every failure the library reports. Each variant names the violated
/// precondition so front ends can surface it verbatim.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("the twist vector a must be sorted non-decreasingly")]
    UnsortedA,
    #[error("expected {expected} twist values, got {got}")]
    BadLength { expected: usize, got: usize },
    #[error("r and s must both be positive")]
    ZeroDimension,
    #[error("weights must be positive with gcd 1 (gcd is {gcd})")]
    BadGcd { gcd: u64 },
    #[error("weights must be positive and at least two of them are needed")]
    BadWeights,
    #[error("ray {0} is not a ray of this variety")]
    UnknownRay(RayName),
    #[error("ray {0} listed twice in the divisor")]
    DuplicateRay(RayName),
    #[error("cannot parse ray name {0:?}")]
    BadRayName(String),
    #[error("the coefficient list c must not be empty")]
    EmptyC,
    #[error("subspace is not contained in the ambient space, or is zero")]
    NotASubspace,
    #[error("ambient spaces of the summands are not independent")]
    OverlappingAmbients,
    #[error("direct sum of an empty list of families")]
    EmptySum,
    #[error("the polarization ratio nu must be positive")]
    NonPositiveNu,
    #[error("brute force limited to {limit} rays, variety has {rays}")]
    TooLarge { rays: usize, limit: usize },
    #[error("the zero polynomial has no sign sequence")]
    ZeroPoly,
    #[error("polynomial has {0} sign changes, exactly one is required")]
    NotOneSignChange(usize),
    #[error("no closed-form case covers this variety and divisor")]
    NotACoveredCase,
    #[error("displayed polynomial {0} disagrees with its direct reconstruction")]
    DisagreesWithDirect(String),
    #[error("thresholds require a1 < a2")]
    BadOrder,
    #[error("threshold bracket violated: delta_r = {found} outside [{lo}, {hi}]")]
    BoundViolated { found: u64, lo: u64, hi: u64 },
    #[error("the tangent sheaf (empty divisor) has no closed-form region here")]
    NotCovered,
    #[error("computed verdict for {0} disagrees with the published one")]
    PublishedMismatch(String),
}

pub type Result<T> = core::result::Result<T, Error>;
