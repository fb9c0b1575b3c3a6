//! Turning flag values into validated library inputs.

use std::str::FromStr;

use logtan_core::arith::{parse_rational, sign};
use logtan_core::{Rational, RayName, Variety};
use serde_json::{json, Value};

use crate::{CliError, VarietyArgs};

/// Largest `r + s` (or `n` on rank one) the CLI accepts; the candidate
/// enumeration is exponential in it.
pub const MAX_RS: usize = 10;

/// A parsed variety flag set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VarietySpec {
    Rank2 { r: usize, s: usize, a: Vec<u64> },
    Rank1 { q: Vec<u64> },
}

impl VarietySpec {
    pub fn from_args(args: &VarietyArgs) -> Result<Self, CliError> {
        match (&args.rank2, &args.rank1) {
            (Some(rs), None) => {
                let [r, s] = rs[..] else {
                    return Err(CliError::Parse(format!(
                        "--rank2 takes exactly two values r,s; got {}",
                        rs.len()
                    )));
                };
                let a = args
                    .a
                    .clone()
                    .ok_or_else(|| CliError::Parse("--rank2 needs --a a1,...,ar".into()))?;
                Ok(VarietySpec::Rank2 { r, s, a })
            }
            (None, Some(q)) => Ok(VarietySpec::Rank1 { q: q.clone() }),
            _ => Err(CliError::Parse(
                "give exactly one of --rank2 r,s or --rank1 q0,...,qn".into(),
            )),
        }
    }

    /// Builds the variety, enforcing the size cap before the library's own
    /// checks.
    pub fn build(&self) -> Result<Variety, CliError> {
        let size = match self {
            VarietySpec::Rank2 { r, s, .. } => r + s,
            VarietySpec::Rank1 { q } => q.len().saturating_sub(1),
        };
        if size > MAX_RS {
            return Err(CliError::Precondition(format!(
                "dimension {size} exceeds the cap of {MAX_RS}"
            )));
        }
        Ok(match self {
            VarietySpec::Rank2 { r, s, a } => Variety::rank2(*r, *s, a)?,
            VarietySpec::Rank1 { q } => Variety::rank1(q)?,
        })
    }
}

pub fn variety_json(x: &Variety) -> Value {
    match x {
        Variety::Rank2(v) => json!({"rank": 2, "r": v.r(), "s": v.s(), "a": v.a()}),
        Variety::Rank1(v) => json!({"rank": 1, "q": v.q()}),
    }
}

/// A comma list of ray names; the empty string is the empty divisor.
pub fn parse_delta(text: &str) -> Result<Vec<RayName>, CliError> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| RayName::from_str(t).map_err(|e| CliError::Parse(e.to_string())))
        .collect()
}

/// `p/q` or `p` with positive integers.
pub fn parse_nu(text: &str) -> Result<Rational, CliError> {
    let bad = || {
        CliError::Parse(format!(
            "nu must be p/q with positive integers, got {text:?}"
        ))
    };
    let ok_syntax = text
        .trim()
        .split('/')
        .all(|part| !part.is_empty() && part.bytes().all(|b| b.is_ascii_digit()));
    if !ok_syntax || text.matches('/').count() > 1 {
        return Err(bad());
    }
    let nu = parse_rational(text).ok_or_else(bad)?;
    if sign(&nu) <= 0 {
        return Err(bad());
    }
    Ok(nu)
}

pub fn delta_json(delta: &[RayName]) -> Value {
    Value::from(delta.iter().map(|r| r.to_string()).collect::<Vec<_>>())
}
