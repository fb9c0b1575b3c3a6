//! JSON values and fixed-width text for library results.

use std::fmt::Write;
use std::str::FromStr;

use logtan_core::arith::{rat, to_decimal};
use logtan_core::regions::{EndpointValue, Interval, PolynomialCatalog, StabilityRegion};
use logtan_core::stability::Witness;
use logtan_core::{RatPoly, Rational, RayName, Verdict};
use serde_json::{json, Number, Value};

/// Display width of refined isolating intervals.
pub fn display_width() -> Rational {
    rat(1, 1_000_000)
}

pub fn rays_text(rays: &[RayName]) -> String {
    if rays.is_empty() {
        return "-".into();
    }
    rays.iter()
        .map(|r| r.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn witness_json(w: &Witness) -> Value {
    json!({
        "rule": w.rule.as_str(),
        "rays": w.rays.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        "dim": w.dim,
        "slope": w.slope.to_string(),
    })
}

pub fn verdict_json(v: &Verdict) -> Value {
    json!({
        "verdict": v.kind.as_str(),
        "polystable": v.polystable.as_str(),
        "mu": v.mu.to_string(),
        "candidates": v.candidates.iter().map(witness_json).collect::<Vec<_>>(),
        "witnesses": v.witnesses.iter().map(witness_json).collect::<Vec<_>>(),
    })
}

pub fn verdict_text(out: &mut String, v: &Verdict) {
    let _ = writeln!(out, "{:<12}{}", "verdict", v.kind);
    let _ = writeln!(out, "{:<12}{}", "polystable", v.polystable);
    let _ = writeln!(out, "{:<12}{}", "mu", v.mu);
    let _ = writeln!(out, "candidates");
    let _ = writeln!(
        out,
        "  {:<24} {:<20} {:>3}  {:<16} witness",
        "rule", "rays", "dim", "slope"
    );
    for c in &v.candidates {
        let attains = v.witnesses.contains(c);
        let line = format!(
            "  {:<24} {:<20} {:>3}  {:<16} {}",
            c.rule.as_str(),
            rays_text(&c.rays),
            c.dim,
            c.slope.to_string(),
            if attains { "*" } else { "" }
        );
        out.push_str(line.trim_end());
        out.push('\n');
    }
}

/// A big integer as a JSON number without loss of digits.
fn int_json(text: String) -> Value {
    Value::Number(Number::from_str(&text).expect("integer literal"))
}

pub fn poly_ints_json(p: &RatPoly) -> Value {
    Value::from(
        p.primitive_integer_coeffs()
            .into_iter()
            .map(|c| int_json(c.to_string()))
            .collect::<Vec<_>>(),
    )
}

pub fn endpoint_json(e: &EndpointValue) -> Value {
    match e {
        EndpointValue::Rational(q) => json!({"kind": "rational", "value": q.to_string()}),
        EndpointValue::Infinity => json!({"kind": "infinity"}),
        EndpointValue::Algebraic(a) => {
            let fine = a.refine(&display_width());
            let (lo, hi) = fine.interval();
            json!({
                "kind": "algebraic",
                "poly": poly_ints_json(a.poly()),
                "isolating_interval": [lo.to_string(), hi.to_string()],
                "approx": to_decimal(hi, 6),
            })
        }
    }
}

fn interval_json(i: &Interval) -> Value {
    json!({
        "lo": endpoint_json(&i.lo.value),
        "lo_closed": i.lo.closed,
        "hi": endpoint_json(&i.hi.value),
        "hi_closed": i.hi.closed,
    })
}

pub fn region_json(reg: &StabilityRegion) -> Value {
    json!({
        "case": reg.case.as_str(),
        "stable": reg.stable.iter().map(interval_json).collect::<Vec<_>>(),
        "semistable": reg.semistable.iter().map(interval_json).collect::<Vec<_>>(),
    })
}

pub fn catalog_json(cat: &PolynomialCatalog) -> Value {
    Value::from(
        cat.iter()
            .map(|p| {
                json!({
                    "name": p.name.as_str(),
                    "coefficients": p.displayed.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    "text": p.displayed.display_with("x"),
                    "closed_form": p.closed_form,
                })
            })
            .collect::<Vec<_>>(),
    )
}

fn endpoint_text(e: &EndpointValue) -> String {
    match e {
        EndpointValue::Rational(q) => q.to_string(),
        EndpointValue::Infinity => "inf".into(),
        EndpointValue::Algebraic(a) => {
            let fine = a.refine(&display_width());
            let (_, hi) = fine.interval();
            format!("~{}", to_decimal(hi, 6))
        }
    }
}

fn interval_text(i: &Interval) -> String {
    if i.is_point() {
        return format!("{{{}}}", endpoint_text(&i.lo.value));
    }
    format!(
        "{}{}, {}{}",
        if i.lo.closed { '[' } else { '(' },
        endpoint_text(&i.lo.value),
        endpoint_text(&i.hi.value),
        if i.hi.closed { ']' } else { ')' },
    )
}

pub fn intervals_text(list: &[Interval]) -> String {
    if list.is_empty() {
        return "empty".into();
    }
    list.iter()
        .map(interval_text)
        .collect::<Vec<_>>()
        .join(" u ")
}

/// Algebraic endpoints with their defining polynomials, one per line.
pub fn roots_text(out: &mut String, reg: &StabilityRegion) {
    let mut seen: Vec<&EndpointValue> = Vec::new();
    for e in reg.endpoints() {
        if let EndpointValue::Algebraic(a) = e {
            if seen.contains(&e) {
                continue;
            }
            seen.push(e);
            let fine = a.refine(&display_width());
            let (lo, hi) = fine.interval();
            let _ = writeln!(
                out,
                "  ~{} is the root of {} in ({lo}, {hi}]",
                to_decimal(hi, 6),
                a.poly().display_with("x")
            );
        }
    }
}
