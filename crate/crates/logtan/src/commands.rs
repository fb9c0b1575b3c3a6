//! One function per subcommand. Each returns a [`Report`] or an error that
//! the caller maps to exit code 2.

use std::fmt::Write;

use logtan_core::arith::int;
use logtan_core::delpezzo::{survey, PublishedVerdict, SurfaceKind};
use logtan_core::regions::{case_polynomials, stability_region};
use logtan_core::stability::{
    brute_force_at, brute_force_with, check_at, SpanTable, DEFAULT_BRUTE_FORCE_BOUND,
};
use logtan_core::volume_degree::degree_system;
use logtan_core::{Rational, RayName, Variety};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::input::{delta_json, parse_delta, parse_nu, variety_json, VarietySpec, MAX_RS};
use crate::render::{
    catalog_json, intervals_text, rays_text, region_json, roots_text, verdict_json, verdict_text,
};
use crate::{CliError, PointArgs, Report, VarietyArgs};

type Result<T> = std::result::Result<T, CliError>;

fn variety_and_delta(args: &VarietyArgs, delta: &str) -> Result<(Variety, Vec<RayName>)> {
    let x = VarietySpec::from_args(args)?.build()?;
    let delta = x.validate_delta(&parse_delta(delta)?)?;
    Ok((x, delta))
}

pub fn check(p: &PointArgs, oracle: bool) -> Result<Report> {
    let (x, delta) = variety_and_delta(&p.variety, &p.delta)?;
    let nu = match (&p.nu, &x) {
        (Some(text), _) => parse_nu(text)?,
        (None, Variety::Rank1(_)) => int(1),
        (None, Variety::Rank2(_)) => return Err(CliError::Parse("rank two needs --nu p/q".into())),
    };
    let verdict = if oracle {
        brute_force_at(&x, &delta, &nu)?
    } else {
        check_at(&x, &delta, &nu)?
    };
    let mut result = verdict_json(&verdict);
    let mut text = String::new();
    let _ = writeln!(text, "{:<12}{}", "variety", x.describe());
    let _ = writeln!(text, "{:<12}{}", "divisor", rays_text(&delta));
    let _ = writeln!(text, "{:<12}{}", "nu", nu);
    verdict_text(&mut text, &verdict);
    if oracle {
        let fast = check_at(&x, &delta, &nu)?;
        let agrees = fast.kind == verdict.kind;
        result["agrees_with_check"] = Value::Bool(agrees);
        let _ = writeln!(
            text,
            "{:<12}{}",
            "check",
            if agrees { "agrees" } else { "DISAGREES" }
        );
    }
    Ok(Report {
        input: json!({"variety": variety_json(&x), "delta": delta_json(&delta), "nu": nu.to_string()}),
        result,
        text,
        mismatch: false,
    })
}

pub fn region(args: &VarietyArgs, delta: &str) -> Result<Report> {
    let (x, delta) = variety_and_delta(args, delta)?;
    let reg = stability_region(&x, &delta)?;
    let mut result = region_json(&reg);
    let mut text = String::new();
    let _ = writeln!(text, "{:<12}{}", "variety", x.describe());
    let _ = writeln!(text, "{:<12}{}", "divisor", rays_text(&delta));
    let _ = writeln!(text, "{:<12}{}", "case", reg.case.as_str());
    let _ = writeln!(text, "{:<12}{}", "stable", intervals_text(&reg.stable));
    let _ = writeln!(
        text,
        "{:<12}{}",
        "semistable",
        intervals_text(&reg.semistable)
    );
    roots_text(&mut text, &reg);
    if let Ok(cat) = case_polynomials(&x, &delta) {
        result["polynomials"] = catalog_json(&cat);
        let _ = writeln!(text, "polynomials");
        for p in cat.iter() {
            let _ = writeln!(
                text,
                "  {:<8} {}",
                p.name.as_str(),
                p.displayed.display_with("x")
            );
        }
    }
    Ok(Report {
        input: json!({"variety": variety_json(&x), "delta": delta_json(&delta)}),
        result,
        text,
        mismatch: false,
    })
}

fn sorted_twists(r: usize, max: u64) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..r {
        out = out
            .into_iter()
            .flat_map(|a: Vec<u64>| {
                let lo = a.last().copied().unwrap_or(0);
                (lo..=max).map(move |t| [a.clone(), vec![t]].concat())
            })
            .collect();
    }
    out
}

fn rank2_grid(max_n: usize, max_a: u64) -> Vec<(usize, usize, Vec<u64>)> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for r in 1..n {
            for a in sorted_twists(r, max_a) {
                out.push((r, n - r, a));
            }
        }
    }
    out.sort();
    out
}

/// The divisor families of one table, each with every member.
fn table_families(table: u8, r: usize, s: usize) -> Vec<(&'static str, Vec<Vec<RayName>>)> {
    let v = RayName::V;
    let w = RayName::W;
    let pairs = |xs: Vec<RayName>| -> Vec<Vec<RayName>> {
        let mut out = Vec::new();
        for (i, &p) in xs.iter().enumerate() {
            for &q in &xs[i + 1..] {
                out.push(vec![p, q]);
            }
        }
        out
    };
    let all_v: Vec<RayName> = (0..=r).map(v).collect();
    let all_w: Vec<RayName> = (0..=s).map(w).collect();
    let singles = |xs: &[RayName]| xs.iter().map(|&x| vec![x]).collect::<Vec<_>>();
    let mixed = |is: &[usize]| {
        is.iter()
            .flat_map(|&i| (0..=s).map(move |j| vec![v(i), w(j)]))
            .collect::<Vec<_>>()
    };
    let middle: Vec<usize> = (1..r).collect();
    match table {
        1 => vec![
            ("D_vi", singles(&all_v)),
            ("D_wj", singles(&all_w)),
            ("D_vi + D_wj", mixed(&(0..=r).collect::<Vec<_>>())),
            ("D_vi + D_vj", pairs(all_v.clone())),
            ("D_wi + D_wj", pairs(all_w.clone())),
        ],
        2 => vec![
            ("D_wj", singles(&all_w)),
            (
                "D_vi, 1 <= i <= r-1",
                middle.iter().map(|&i| vec![v(i)]).collect(),
            ),
            ("D_vr", vec![vec![v(r)]]),
            ("D_v0", vec![vec![v(0)]]),
        ],
        3 => vec![
            ("D_wi + D_wj", pairs(all_w.clone())),
            (
                "D_vi + D_vj, 1 <= i < j <= r",
                pairs((1..=r).map(v).collect()),
            ),
            ("D_vi + D_wj, 1 <= i <= r-1", mixed(&middle)),
            ("D_vr + D_wj", mixed(&[r])),
            ("D_v0 + D_wj", mixed(&[0])),
            (
                "D_v0 + D_vi, 2 <= i <= r",
                (2..=r).map(|i| vec![v(0), v(i)]).collect(),
            ),
        ],
        _ => vec![("D_v0 + D_v1", vec![vec![v(0), v(1)]])],
    }
}

/// `(r, s, a, family, divisor)`.
type TableCell = (usize, usize, Vec<u64>, &'static str, Vec<RayName>);

pub fn table(table: u8, max_n: usize, max_a: u64) -> Result<Report> {
    if max_n > MAX_RS {
        return Err(CliError::Precondition(format!(
            "--max-n {max_n} exceeds the cap of {MAX_RS}"
        )));
    }
    let cells: Vec<TableCell> = rank2_grid(max_n, max_a)
        .into_iter()
        .filter(|(_, _, a)| {
            let product = a.iter().all(|&t| t == 0);
            if table == 1 {
                product
            } else {
                !product
            }
        })
        .flat_map(|(r, s, a)| {
            table_families(table, r, s)
                .into_iter()
                .flat_map(move |(family, divisors)| {
                    let a = a.clone();
                    divisors
                        .into_iter()
                        .map(move |d| (r, s, a.clone(), family, d))
                })
        })
        .collect();
    let rows: Vec<Result<(Value, String)>> = cells
        .par_iter()
        .map(|(r, s, a, family, d)| {
            let x = Variety::rank2(*r, *s, a)?;
            let reg = stability_region(&x, d)?;
            let mut row = region_json(&reg);
            row["r"] = json!(r);
            row["s"] = json!(s);
            row["a"] = json!(a);
            row["family"] = json!(family);
            row["delta"] = delta_json(d);
            let line = format!(
                "{:>2} {:>2} {:<12} {:<10} {:<32} {:<34} {}",
                r,
                s,
                format!("{a:?}"),
                rays_text(d),
                family,
                intervals_text(&reg.stable),
                intervals_text(&reg.semistable)
            );
            Ok((row, line))
        })
        .collect();
    let mut text = format!(
        "{:>2} {:>2} {:<12} {:<10} {:<32} {:<34} {}\n",
        "r", "s", "a", "divisor", "family", "stable", "semistable"
    );
    let mut json_rows = Vec::with_capacity(rows.len());
    for row in rows {
        let (value, line) = row?;
        json_rows.push(value);
        text.push_str(&line);
        text.push('\n');
    }
    Ok(Report {
        input: json!({"table": table, "max_n": max_n, "max_a": max_a}),
        result: json!({"rows": json_rows}),
        text,
        mismatch: false,
    })
}

fn parse_surface(text: &str) -> Result<SurfaceKind> {
    let t = text.trim().to_ascii_lowercase();
    if t == "p2" {
        return Ok(SurfaceKind::P2);
    }
    t.strip_prefix('f')
        .and_then(|r| r.parse::<u64>().ok())
        .map(SurfaceKind::Hirzebruch)
        .ok_or_else(|| CliError::Parse(format!("surface must be p2 or f<r>, got {text:?}")))
}

fn published_str(p: Option<PublishedVerdict>) -> &'static str {
    match p {
        None => "-",
        Some(PublishedVerdict::PolystableNotStable) => "polystable, not stable",
        Some(PublishedVerdict::Polystable) => "polystable",
        Some(PublishedVerdict::Stable) => "stable",
        Some(PublishedVerdict::Unstable) => "unstable",
    }
}

pub fn delpezzo(surface: &str) -> Result<Report> {
    let kind = parse_surface(surface)?;
    let reports = survey(kind)?;
    let mut text = format!(
        "{:<10} {:<10} {:<6} {:<6} {:<20} {:<13} {}\n",
        "divisor", "rays", "ample", "nu", "verdict", "polystable", "published"
    );
    let mut pairs = Vec::new();
    for rep in &reports {
        let label = kind.label(&rep.divisor);
        let nu = rep.nu.as_ref().map(Rational::to_string);
        let (verdict, poly) = rep
            .verdict
            .as_ref()
            .map_or(("-", "-"), |v| (v.kind.as_str(), v.polystable.as_str()));
        let _ = writeln!(
            text,
            "{:<10} {:<10} {:<6} {:<6} {:<20} {:<13} {}",
            label,
            rays_text(&rep.divisor),
            rep.ample,
            nu.as_deref().unwrap_or("-"),
            verdict,
            poly,
            published_str(rep.published)
        );
        pairs.push(json!({
            "divisor": label,
            "rays": delta_json(&rep.divisor),
            "ample": rep.ample,
            "nu": nu,
            "verdict": rep.verdict.as_ref().map(verdict_json),
            "published": rep.published.map(|p| published_str(Some(p))),
        }));
    }
    let ample = reports.iter().filter(|r| r.ample).count();
    let _ = writeln!(text, "{ample} log del Pezzo pairs");
    Ok(Report {
        input: json!({"surface": kind.to_string()}),
        result: json!({"ample_pairs": ample, "pairs": pairs}),
        text,
        mismatch: false,
    })
}

fn subsets(rays: &[RayName]) -> Vec<Vec<RayName>> {
    (0..1u32 << rays.len())
        .map(|m| {
            (0..rays.len())
                .filter(|b| m >> b & 1 == 1)
                .map(|b| rays[b])
                .collect()
        })
        .collect()
}

fn rank1_grid(max_n: usize, max_q: u64) -> Vec<Variety> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let mut qs: Vec<Vec<u64>> = vec![Vec::new()];
        for _ in 0..=n {
            qs = qs
                .into_iter()
                .flat_map(|q| (1..=max_q).map(move |t| [q.clone(), vec![t]].concat()))
                .collect();
        }
        // Weight vectors with a common factor are not varieties of this form.
        out.extend(qs.iter().filter_map(|q| Variety::rank1(q).ok()));
    }
    out
}

pub fn sweep(
    max_n: usize,
    max_a: u64,
    max_rank1_n: usize,
    max_q: u64,
    nus: &[String],
) -> Result<Report> {
    let limit = DEFAULT_BRUTE_FORCE_BOUND - 2;
    if max_n > limit || max_rank1_n > DEFAULT_BRUTE_FORCE_BOUND - 1 {
        return Err(CliError::Precondition(format!(
            "the exhaustive oracle handles at most {DEFAULT_BRUTE_FORCE_BOUND} rays (r+s <= {limit})"
        )));
    }
    let nus = nus
        .iter()
        .map(|t| parse_nu(t))
        .collect::<Result<Vec<_>>>()?;
    let mut varieties: Vec<Variety> = rank2_grid(max_n, max_a)
        .into_iter()
        .map(|(r, s, a)| Variety::rank2(r, s, &a))
        .collect::<std::result::Result<_, _>>()?;
    varieties.extend(rank1_grid(max_rank1_n, max_q));

    let per_variety: Vec<Result<(usize, Vec<Value>)>> = varieties
        .par_iter()
        .map(|x| {
            let table = SpanTable::new(x, DEFAULT_BRUTE_FORCE_BOUND)?;
            let deg = degree_system(x);
            let mut cells = 0;
            let mut bad = Vec::new();
            for nu in &nus {
                let at = deg.at(nu);
                let degrees: Vec<Rational> = table.rays().iter().map(|r| at[r].clone()).collect();
                for delta in subsets(&x.rays()) {
                    let oracle = brute_force_with(&table, &delta, &degrees);
                    let fast = check_at(x, &delta, nu)?;
                    cells += 1;
                    if oracle.kind != fast.kind {
                        bad.push(json!({
                            "variety": variety_json(x),
                            "delta": delta_json(&delta),
                            "nu": nu.to_string(),
                            "check": fast.kind.as_str(),
                            "oracle": oracle.kind.as_str(),
                        }));
                    }
                }
            }
            Ok((cells, bad))
        })
        .collect();
    let mut cells = 0;
    let mut mismatches = Vec::new();
    for entry in per_variety {
        let (n, bad) = entry?;
        cells += n;
        mismatches.extend(bad);
    }
    let mut text = format!(
        "{} varieties, {} cells, {} mismatches\n",
        varieties.len(),
        cells,
        mismatches.len()
    );
    for m in &mismatches {
        let _ = writeln!(text, "  {m}");
    }
    Ok(Report {
        input: json!({
            "max_n": max_n,
            "max_a": max_a,
            "max_rank1_n": max_rank1_n,
            "max_q": max_q,
            "nus": nus.iter().map(Rational::to_string).collect::<Vec<_>>(),
        }),
        mismatch: !mismatches.is_empty(),
        result: json!({"varieties": varieties.len(), "cells": cells, "mismatches": mismatches}),
        text,
    })
}
