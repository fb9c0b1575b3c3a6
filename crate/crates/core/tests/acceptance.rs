//! Acceptance suite. Prints one PASS/FAIL line per criterion with its runtime
//! and limit. Runs without the libtest harness so the lines always show.
//!
//! Two criteria conflict with facts established by exact computation; they
//! are expected to fail with exactly the cells listed in `KNOWN_FAILURES`.
//! Any other failure, a runtime over its limit, or an unexpected pass makes
//! the process exit non-zero.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use logtan_core::arith::{binomial, int, rat, sign};
use logtan_core::delpezzo::{
    delpezzo_report, enumerate_pairs, published_ampleness, quadric_families, SurfaceKind,
};
use logtan_core::klyachko::{logtangent_filtrations, subsheaf_filtrations};
use logtan_core::regions::{
    case_polynomials, descartes_sign_changes, stability_region, threshold_delta_r,
    threshold_s_exceeds_delta, EndpointValue, PolyName, StabilityRegion,
};
use logtan_core::stability::{brute_force_with, check_at, slope, Nu, SlopeValue, SpanTable};
use logtan_core::volume_degree::{degree_system, facet_degree_polys, DegreeSystem};
use logtan_core::{Polystability, RatPoly, Rational, RayName, StabilityKind, Variety};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Criteria expected to fail, with the exact failing cells.
const KNOWN_FAILURES: &[(u32, &[&str])] = &[
    (
        4,
        &[
            "P^1 D=[u0]: kind stable, polystable yes",
            "P^1 D=[u1]: kind stable, polystable yes",
        ],
    ),
    (
        7,
        &[
            "delta_r(1,2,3): BoundViolated { found: 2, lo: 3, hi: 7 }",
            "delta_r(1,2,4): BoundViolated { found: 4, lo: 5, hi: 13 }",
        ],
    ),
];

type Failures = Vec<String>;

fn v(i: usize) -> RayName {
    RayName::V(i)
}
fn w(j: usize) -> RayName {
    RayName::W(j)
}
fn u(j: usize) -> RayName {
    RayName::U(j)
}

fn rank2(r: usize, s: usize, a: &[u64]) -> Variety {
    Variety::rank2(r, s, a).unwrap()
}

fn names(delta: &[RayName]) -> String {
    format!(
        "{:?}",
        delta.iter().map(|r| r.to_string()).collect::<Vec<_>>()
    )
    .replace('"', "")
}

fn sorted_twists(r: usize, max: u64) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..r {
        out = out
            .into_iter()
            .flat_map(|a: Vec<u64>| {
                let lo = a.last().copied().unwrap_or(0);
                (lo..=max).map(move |x| {
                    let mut b = a.clone();
                    b.push(x);
                    b
                })
            })
            .collect();
    }
    out
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

/// The criterion-5 grid: rank two with r+s <= 4 and a_i <= 2; rank one with
/// n <= 3 and q_i <= 3.
fn sweep_grid() -> Vec<Variety> {
    let mut out = Vec::new();
    for n in 2..=4 {
        for r in 1..n {
            for a in sorted_twists(r, 2) {
                out.push(rank2(r, n - r, &a));
            }
        }
    }
    for n in 1..=3usize {
        let mut qs: Vec<Vec<u64>> = vec![Vec::new()];
        for _ in 0..=n {
            qs = qs
                .into_iter()
                .flat_map(|q| (1..=3).map(move |x| [q.clone(), vec![x]].concat()))
                .collect();
        }
        out.extend(qs.iter().filter_map(|q| Variety::rank1(q).ok()));
    }
    out
}

/// `mu = (1/n) sum_{rho not in D} deg D_rho`, the closed form.
fn mu_closed(x: &Variety, deg: &DegreeSystem, delta: &[RayName]) -> RatPoly {
    let total: RatPoly = x
        .rays()
        .into_iter()
        .filter(|r| !delta.contains(r))
        .map(|r| deg.degree(r).clone())
        .fold(RatPoly::zero(), |acc, p| &acc + &p);
    total.scale(&Rational::new(BigInt::one(), BigInt::from(x.dim())))
}

fn binq(n: usize, k: usize) -> Rational {
    Rational::from_integer(binomial(n as u64, k as u64))
}

fn kind_at(x: &Variety, delta: &[RayName], nu: &Rational) -> StabilityKind {
    check_at(x, delta, nu).unwrap().kind
}

/// Rationals just below and at-or-above an endpoint.
fn around(e: &EndpointValue) -> (Rational, Rational) {
    match e {
        EndpointValue::Rational(q) => (q - rat(1, 1000), q + rat(1, 1000)),
        EndpointValue::Algebraic(a) => {
            let fine = a.refine(&rat(1, 1_000_000));
            let (lo, hi) = fine.interval();
            (lo.clone(), hi.clone())
        }
        EndpointValue::Infinity => unreachable!(),
    }
}

// ---------------------------------------------------------------- criterion 1

fn criterion_1() -> (usize, Failures) {
    let mut fails = Vec::new();
    let mut checks = 0;
    for r in 1..=3usize {
        for s in 1..=3usize {
            let x = rank2(r, s, &vec![0; r]);
            let points = [
                (vec![v(0)], rat((s + 1) as i64, r as i64)),
                (vec![w(0)], rat(s as i64, (r + 1) as i64)),
                (vec![v(0), w(0)], rat(s as i64, r as i64)),
            ];
            let mut all_probes = Vec::new();
            for (delta, star) in &points {
                let probes = [star * rat(1, 2), star.clone(), star * rat(3, 2)];
                all_probes.extend(probes.iter().cloned());
                for nu in &probes {
                    let got = kind_at(&x, delta, nu);
                    let want = if nu == star {
                        StabilityKind::StrictlySemistable
                    } else {
                        StabilityKind::Unstable
                    };
                    checks += 1;
                    if got != want {
                        fails.push(format!("(r,s)=({r},{s}) D={} nu={nu}: {got}", names(delta)));
                    }
                }
                let reg = stability_region(&x, delta).unwrap();
                checks += 1;
                let point_ok = reg.stable.is_empty()
                    && reg.semistable.len() == 1
                    && reg.semistable[0].is_point()
                    && reg.semistable[0].lo.value == EndpointValue::Rational(star.clone());
                if !point_ok {
                    fails.push(format!(
                        "(r,s)=({r},{s}) D={}: region {reg:?}",
                        names(delta)
                    ));
                }
            }
            let mut same_kind = vec![vec![w(0), w(1)]];
            same_kind.push(vec![v(0), v(1)]);
            for delta in &same_kind {
                for nu in &all_probes {
                    checks += 1;
                    let got = kind_at(&x, delta, nu);
                    if got != StabilityKind::Unstable {
                        fails.push(format!("(r,s)=({r},{s}) D={} nu={nu}: {got}", names(delta)));
                    }
                }
            }
        }
    }
    (checks, fails)
}

// ---------------------------------------------------------------- criterion 2

/// `sum_{k<s} C(s+r-1, k) x^k - s C(s+r-1, s) x^s`, as quoted.
fn quoted_p0(r: usize, s: usize) -> RatPoly {
    let mut c: Vec<Rational> = (0..s).map(|k| binq(s + r - 1, k)).collect();
    c.push(-(int(s as i64) * binq(s + r - 1, s)));
    RatPoly::from_coeffs(c)
}

fn criterion_2(polys: &mut Vec<(String, RatPoly, bool)>) -> (usize, Failures) {
    let mut fails = Vec::new();
    let mut checks = 0;
    for r in 1..=4usize {
        for s in 1..=(5 - r) {
            let mut a = vec![0u64; r];
            a[r - 1] = 1;
            let x = rank2(r, s, &a);
            let delta = [v(r)];
            let tag = format!("(r,s,a)=({r},{s},{a:?})");
            let p0 = quoted_p0(r, s);
            // Independent oracle: (r+s)(mu - V_0) from the degree polynomials.
            let deg = degree_system(&x);
            let oracle =
                (&mu_closed(&x, &deg, &delta) - deg.degree(v(0))).scale(&int((r + s) as i64));
            checks += 1;
            if oracle != p0 {
                fails.push(format!("{tag}: (r+s)(mu-V0) = {oracle}, quoted P0 = {p0}"));
            }
            let cat = case_polynomials(&x, &delta).unwrap();
            let shown = &cat.get(PolyName::P0).unwrap().displayed;
            checks += 1;
            if *shown != p0 {
                fails.push(format!("{tag}: catalog P0 {shown}"));
            }
            polys.push((format!("P0 {tag}"), p0.clone(), true));
            let reg = stability_region(&x, &delta).unwrap();
            let shape_ok = reg.stable.len() == 1
                && reg.semistable.len() == 1
                && !reg.stable[0].hi.closed
                && reg.semistable[0].hi.closed
                && reg.stable[0].lo.value == EndpointValue::Rational(Rational::zero())
                && reg.stable[0].hi.value == reg.semistable[0].hi.value;
            checks += 1;
            if !shape_ok {
                fails.push(format!("{tag}: region shape {reg:?}"));
                continue;
            }
            let nu0 = &reg.stable[0].hi.value;
            let (below, above) = around(nu0);
            checks += 3;
            if !(sign(&p0.eval(&below)) > 0 && sign(&p0.eval(&above)) <= 0) {
                fails.push(format!("{tag}: endpoint is not the root of P0"));
            }
            if kind_at(&x, &delta, &below) != StabilityKind::Stable {
                fails.push(format!("{tag}: not stable just below nu0"));
            }
            let want_above = if p0.eval(&above).is_zero() {
                StabilityKind::StrictlySemistable
            } else {
                StabilityKind::Unstable
            };
            if kind_at(&x, &delta, &above) != want_above {
                fails.push(format!("{tag}: wrong verdict at/above nu0"));
            }
            if r == 1 && s == 1 {
                checks += 1;
                if *nu0 != EndpointValue::Rational(int(1)) {
                    fails.push(format!("{tag}: nu0 = {nu0:?}, expected 1"));
                }
            }
        }
    }
    // Empty cases: a_r >= 2 or a_{r-1} >= 1.
    let probes: Vec<Rational> = [(1, 3), (1, 2), (1, 1), (2, 1), (3, 1)]
        .iter()
        .map(|&(p, q)| rat(p, q))
        .collect();
    for r in 1..=4usize {
        for s in 1..=(5 - r) {
            for a in sorted_twists(r, 3) {
                let prev = if r >= 2 { a[r - 2] } else { 0 };
                if !(a[r - 1] >= 2 || (a[r - 1] >= 1 && prev >= 1)) {
                    continue;
                }
                let x = rank2(r, s, &a);
                let delta = [v(r)];
                let reg = stability_region(&x, &delta).unwrap();
                checks += 1;
                if !(reg.stable.is_empty() && reg.semistable.is_empty()) {
                    fails.push(format!("(r,s,a)=({r},{s},{a:?}): region not empty"));
                }
                for nu in &probes {
                    checks += 1;
                    if kind_at(&x, &delta, nu) != StabilityKind::Unstable {
                        fails.push(format!("(r,s,a)=({r},{s},{a:?}) nu={nu}: not unstable"));
                    }
                }
            }
        }
    }
    (checks, fails)
}

// ---------------------------------------------------------------- criterion 3

fn criterion_3(polys: &mut Vec<(String, RatPoly, bool)>) -> (usize, Failures) {
    let mut fails = Vec::new();
    let mut checks = 0;
    let d = [v(0)];

    // Hirzebruch one: P1 = 2 - x and region (0, 2).
    let f1 = rank2(1, 1, &[1]);
    let cat = case_polynomials(&f1, &d).unwrap();
    let p1 = cat.get(PolyName::P1).unwrap().displayed.clone();
    polys.push(("P1 F1".into(), p1.clone(), true));
    polys.push((
        "Q F1".into(),
        cat.get(PolyName::Q).unwrap().displayed.clone(),
        false,
    ));
    checks += 1;
    if p1 != RatPoly::from_ints(&[2, -1]) {
        fails.push(format!("F1: P1 = {p1}"));
    }
    let reg = stability_region(&f1, &d).unwrap();
    checks += 1;
    if !below_region(&reg, &int(2)) {
        fails.push(format!("F1: region {reg:?}"));
    }
    for (nu, want) in [
        (int(1), StabilityKind::Stable),
        (int(2), StabilityKind::StrictlySemistable),
        (int(3), StabilityKind::Unstable),
    ] {
        checks += 1;
        if kind_at(&f1, &d, &nu) != want {
            fails.push(format!("F1 nu={nu}: expected {want}"));
        }
    }

    // (2,1,(1,1)): P1 = 1 - 2x, oracle (r+s)(mu - V1) from degrees.
    let x = rank2(2, 1, &[1, 1]);
    let cat = case_polynomials(&x, &d).unwrap();
    let p1 = cat.get(PolyName::P1).unwrap().displayed.clone();
    polys.push(("P1 (2,1,(1,1))".into(), p1.clone(), true));
    let deg = degree_system(&x);
    let oracle = (&mu_closed(&x, &deg, &d) - deg.degree(v(1))).scale(&int(3));
    checks += 2;
    if p1 != RatPoly::from_ints(&[1, -2]) {
        fails.push(format!("(2,1,(1,1)): P1 = {p1}"));
    }
    if !p1.ratio_to(&oracle).is_some_and(|c| c.is_positive()) {
        fails.push(format!(
            "(2,1,(1,1)): P1 not a positive multiple of mu - V1 = {oracle}"
        ));
    }
    let reg = stability_region(&x, &d).unwrap();
    checks += 1;
    if !below_region(&reg, &rat(1, 2)) {
        fails.push(format!("(2,1,(1,1)): region {reg:?}"));
    }

    // (2,3,(1,1)): region (nu3, nu1) with nu3 < nu1 by a sign evaluation.
    let x = rank2(2, 3, &[1, 1]);
    let cat = case_polynomials(&x, &d).unwrap();
    let p1 = cat.get(PolyName::P1).unwrap().displayed.clone();
    let qv0 = cat.get(PolyName::QV0).unwrap().displayed.clone();
    polys.push(("P1 (2,3,(1,1))".into(), p1.clone(), true));
    polys.push(("Q_v0 (2,3,(1,1))".into(), qv0.clone(), true));
    let reg = stability_region(&x, &d).unwrap();
    checks += 1;
    let shape_ok = reg.stable.len() == 1
        && !reg.stable[0].lo.closed
        && !reg.stable[0].hi.closed
        && reg.semistable.len() == 1
        && reg.semistable[0].lo.closed
        && reg.semistable[0].hi.closed;
    if !shape_ok {
        fails.push(format!("(2,3,(1,1)): region shape {reg:?}"));
        return (checks, fails);
    }
    let (nu3, nu1) = (&reg.stable[0].lo.value, &reg.stable[0].hi.value);
    let (below3, t) = around(nu3);
    let (below1, above1) = around(nu1);
    checks += 5;
    // Q_v0 changes sign across nu3 and P1 across nu1.
    if !(sign(&qv0.eval(&below3)) < 0 && sign(&qv0.eval(&t)) >= 0) {
        fails.push("(2,3,(1,1)): nu3 is not the root of Q_v0".into());
    }
    if !(sign(&p1.eval(&below1)) > 0 && sign(&p1.eval(&above1)) <= 0) {
        fails.push("(2,3,(1,1)): nu1 is not the root of P1".into());
    }
    // t >= nu3 and P1(t) > 0 give nu3 <= t < nu1.
    if sign(&p1.eval(&t)) <= 0 {
        fails.push("(2,3,(1,1)): ordering nu3 < nu1 not shown by P1 sign".into());
    }
    let mid = (&t + &below1) / int(2);
    if kind_at(&x, &d, &mid) != StabilityKind::Stable {
        fails.push(format!("(2,3,(1,1)) nu={mid}: not stable"));
    }
    if kind_at(&x, &d, &below3) != StabilityKind::Unstable
        || kind_at(&x, &d, &above1) != StabilityKind::Unstable
    {
        fails.push("(2,3,(1,1)): not unstable outside [nu3, nu1]".into());
    }
    (checks, fails)
}

fn below_region(reg: &StabilityRegion, hi: &Rational) -> bool {
    reg.stable.len() == 1
        && reg.semistable.len() == 1
        && reg.stable[0].lo.value == EndpointValue::Rational(Rational::zero())
        && reg.stable[0].hi.value == EndpointValue::Rational(hi.clone())
        && !reg.stable[0].hi.closed
        && reg.semistable[0].hi.closed
}

// ---------------------------------------------------------------- criterion 4

fn criterion_4() -> (usize, Failures) {
    let mut fails = Vec::new();
    let mut checks = 0;
    let nus = [rat(1, 2), int(1), int(3)];
    for n in 1..=4usize {
        let x = Variety::rank1(&vec![1; n + 1]).unwrap();
        for i in 0..=n {
            for nu in &nus {
                let verdict = check_at(&x, &[u(i)], nu).unwrap();
                checks += 1;
                if !(verdict.kind == StabilityKind::StrictlySemistable
                    && verdict.polystable == Polystability::Yes)
                {
                    let cell = format!(
                        "P^{n} D=[u{i}]: kind {}, polystable {}",
                        verdict.kind,
                        verdict.polystable.as_str()
                    );
                    if !fails.contains(&cell) {
                        fails.push(cell);
                    }
                }
            }
        }
        // 2 <= |D| <= n is never semistable.
        for delta in subsets(&x.rays()) {
            if (2..=n).contains(&delta.len()) {
                checks += 1;
                if kind_at(&x, &delta, &int(1)) != StabilityKind::Unstable {
                    fails.push(format!("P^{n} D={}: not unstable", names(&delta)));
                }
            }
        }
    }
    let x = Variety::rank1(&[1, 2, 2]).unwrap();
    checks += 1;
    if check_at(&x, &[u(0)], &int(1)).unwrap().polystable != Polystability::Yes {
        fails.push("q=(1,2,2) D=[u0]: not polystable".into());
    }
    let x = Variety::rank1(&[1, 2, 3]).unwrap();
    checks += 1;
    if kind_at(&x, &[u(0)], &int(1)) != StabilityKind::Unstable {
        fails.push("q=(1,2,3) D=[u0]: not unstable".into());
    }
    for q in [
        vec![1, 2, 2],
        vec![1, 2, 3],
        vec![1, 1, 2, 3],
        vec![2, 3, 3, 5],
    ] {
        let x = Variety::rank1(&q).unwrap();
        for delta in subsets(&x.rays()) {
            if (2..=x.dim()).contains(&delta.len()) {
                checks += 1;
                if kind_at(&x, &delta, &int(1)) != StabilityKind::Unstable {
                    fails.push(format!("q={q:?} D={}: not unstable", names(&delta)));
                }
            }
        }
    }
    (checks, fails)
}

// ---------------------------------------------------------------- criterion 5

fn criterion_5() -> (usize, Failures) {
    let nus: Vec<Rational> = [(1, 3), (1, 2), (1, 1), (3, 2), (2, 1), (3, 1)]
        .iter()
        .map(|&(p, q)| rat(p, q))
        .collect();
    let mut fails = Vec::new();
    let mut cells = 0;
    for x in sweep_grid() {
        let table = SpanTable::new(&x, 8).unwrap();
        let deg = degree_system(&x);
        for delta in subsets(&x.rays()) {
            for nu in &nus {
                let at = deg.at(nu);
                let degrees: Vec<Rational> = table.rays().iter().map(|r| at[r].clone()).collect();
                let oracle = brute_force_with(&table, &delta, &degrees);
                let fast = check_at(&x, &delta, nu).unwrap();
                cells += 1;
                if oracle.kind != fast.kind {
                    fails.push(format!(
                        "{} D={} nu={nu}: check {} oracle {}",
                        x.describe(),
                        names(&delta),
                        fast.kind,
                        oracle.kind
                    ));
                }
            }
        }
    }
    (cells, fails)
}

// ---------------------------------------------------------------- criterion 6

fn criterion_6() -> (usize, Failures) {
    let mut fails = Vec::new();
    let mut checks = 0;
    for x in sweep_grid() {
        let deg = degree_system(&x);
        if let Variety::Rank2(v2) = &x {
            let polys = facet_degree_polys(v2);
            for i in 1..=v2.r() {
                let rhs = &polys.w.scale(&int(v2.a_at(i) as i64)) + &polys.v[i];
                checks += 1;
                if polys.v[0] != rhs {
                    fails.push(format!("{}: V0 != a_{i} W + V_{i}", x.describe()));
                }
            }
        }
        let rays = x.rays();
        // Sub-sheaves spanned by one or two generators, proper ones only,
        // each with the rays whose generator it contains.
        let mut gens: Vec<Vec<RayName>> = rays.iter().map(|&r| vec![r]).collect();
        for (i, &p) in rays.iter().enumerate() {
            for &q in &rays[i + 1..] {
                gens.push(vec![p, q]);
            }
        }
        let spans: Vec<_> = gens
            .iter()
            .filter_map(|g_rays| {
                let g = x.span_of(g_rays).unwrap();
                (g.dim() < x.dim()).then(|| {
                    let inside: Vec<RayName> = rays
                        .iter()
                        .copied()
                        .filter(|r| g.contains_vector(&x.generator_vector(*r).unwrap()))
                        .collect();
                    (g_rays, g, inside)
                })
            })
            .collect();
        for delta in subsets(&rays) {
            let family = logtangent_filtrations(&x, &delta).unwrap();
            let SlopeValue::Poly(mu) = slope(&family, &deg, &Nu::Symbolic).unwrap() else {
                unreachable!()
            };
            checks += 1;
            if mu != mu_closed(&x, &deg, &delta) {
                fails.push(format!("{} D={}: mu differs", x.describe(), names(&delta)));
            }
            for (g_rays, g, inside) in &spans {
                let sub = subsheaf_filtrations(&family, g).unwrap();
                let SlopeValue::Poly(got) = slope(&sub, &deg, &Nu::Symbolic).unwrap() else {
                    unreachable!()
                };
                // (1/dim G) sum of deg D_rho over rho outside D with u_rho in G.
                let total = inside
                    .iter()
                    .filter(|r| !delta.contains(r))
                    .fold(RatPoly::zero(), |acc, r| &acc + deg.degree(*r));
                let want = total.scale(&Rational::new(BigInt::one(), BigInt::from(g.dim())));
                checks += 1;
                if got != want {
                    fails.push(format!(
                        "{} D={} G={}: slope {got} vs closed form {want}",
                        x.describe(),
                        names(&delta),
                        names(g_rays)
                    ));
                }
            }
        }
    }
    (checks, fails)
}

// ---------------------------------------------------------------- criterion 7

/// Rigorous enclosure of `ln(x)` for rational `x >= 1`:
/// `ln x = 2 atanh(y)`, `y = (x-1)/(x+1)`, truncated after `terms` terms with
/// remainder at most `y^(2N+1) / ((2N+1)(1-y^2))`.
fn ln_enclosure(x: &Rational, terms: usize) -> (Rational, Rational) {
    assert!(*x >= Rational::one());
    let y = (x - Rational::one()) / (x + Rational::one());
    let y2 = &y * &y;
    let mut sum = Rational::zero();
    let mut pow = y.clone();
    for k in 0..terms {
        sum += &pow / int(2 * k as i64 + 1);
        pow = &pow * &y2;
    }
    let tail = &pow / (int(2 * terms as i64 + 1) * (Rational::one() - &y2));
    (&sum * int(2), (&sum + tail) * int(2))
}

fn criterion_7() -> (usize, Failures) {
    let mut fails = Vec::new();
    let mut checks = 0;
    let tie = rat(1, 1) / Rational::from_integer(num_traits::pow(BigInt::from(10), 30));
    for a1 in 1..=3u64 {
        for a2 in (a1 + 1)..=3 {
            let (l2, u2) = ln_enclosure(&int(a2 as i64), 80);
            let (l1, u1) = ln_enclosure(&int(a1 as i64), 80);
            let (lc, uc) = ln_enclosure(&int((1 + a2 - a1) as i64), 80);
            for s in 1..=6u64 {
                let sq = int(s as i64);
                let lo = &sq * (&l2 - &u1) - &uc;
                let hi = &sq * (&u2 - &l1) - &lc;
                // Positive, negative, or a tie within 1e-30 (s = delta).
                let expected = if lo.is_positive() {
                    true
                } else if hi.is_negative() || (lo.abs() < tie && hi.abs() < tie) {
                    false
                } else {
                    fails.push(format!("({a1},{a2},{s}): enclosure [{lo}, {hi}] undecided"));
                    continue;
                };
                checks += 1;
                let got = threshold_s_exceeds_delta(a1, a2, s).unwrap();
                if got != expected {
                    fails.push(format!("({a1},{a2},{s}): got {got}, logs say {expected}"));
                }
            }
        }
    }
    for (a, b, r) in [(1u64, 2u64, 3u64), (1, 2, 4), (2, 3, 3)] {
        let m = b * (r - 2);
        let (lo, hi) = (m + 1, 16 * m / 5 + 1);
        // Independent alpha: W_{s-p} - V_{2,s-p} from binomial sums.
        let alpha = |p: u64| -> BigInt {
            let wsum: BigInt = (0..p)
                .map(|j| {
                    binomial(j + r - 2, j)
                        * BigInt::from(b).pow(j as u32)
                        * BigInt::from(a).pow((p - 1 - j) as u32)
                })
                .sum();
            let vsum: BigInt = (0..=p)
                .map(|j| {
                    binomial(j + r - 3, j)
                        * BigInt::from(b).pow(j as u32)
                        * BigInt::from(a).pow((p - j) as u32)
                })
                .sum();
            wsum - vsum
        };
        let signs: Vec<bool> = (1..=hi + 1).map(|p| alpha(p).is_positive()).collect();
        let first = signs.iter().position(|&x| x);
        checks += 2;
        let single_flip = first.is_some_and(|i| signs[i..].iter().all(|&x| x));
        if !single_flip {
            fails.push(format!(
                "alpha for ({a},{b},{r}) does not flip exactly once"
            ));
        }
        match threshold_delta_r(a, b, r) {
            Ok(d) => {
                if !(lo..=hi).contains(&d) || Some(d as usize) != first {
                    fails.push(format!("delta_r({a},{b},{r}) = {d}, oracle {first:?}"));
                }
            }
            Err(e) => fails.push(format!("delta_r({a},{b},{r}): {e:?}")),
        }
    }
    (checks, fails)
}

// ---------------------------------------------------------------- criterion 8

fn criterion_8() -> (usize, Failures) {
    let mut fails = Vec::new();
    let mut checks = 0;
    let p2 = SurfaceKind::P2;
    let pairs = enumerate_pairs(p2);
    checks += 1;
    let ample: Vec<_> = pairs
        .iter()
        .filter(|(_, a)| *a)
        .map(|(d, _)| d.clone())
        .collect();
    let mut six: Vec<Vec<RayName>> = (0..3).map(|i| vec![u(i)]).collect();
    six.extend([vec![u(0), u(1)], vec![u(0), u(2)], vec![u(1), u(2)]]);
    if ample.len() != 6 || !six.iter().all(|d| ample.contains(d)) {
        fails.push(format!("P2 ample pairs: {ample:?}"));
    }
    for r in 0..=5u64 {
        let k = SurfaceKind::Hirzebruch(r);
        for (delta, ample) in enumerate_pairs(k) {
            checks += 1;
            if published_ampleness(k, &delta) != Some(ample) {
                fails.push(format!("{k} D={}: ample {ample}", k.label(&delta)));
            }
        }
    }
    let expect = |k: SurfaceKind,
                  delta: &[RayName],
                  ok: &dyn Fn(StabilityKind, Polystability) -> bool,
                  what: &str,
                  fails: &mut Failures| {
        match delpezzo_report(k, delta) {
            Ok(rep) => match rep.verdict {
                Some(v) if ok(v.kind, v.polystable) => {}
                other => fails.push(format!(
                    "{k} D={}: expected {what}, got {other:?}",
                    k.label(delta)
                )),
            },
            Err(e) => fails.push(format!("{k} D={}: {e}", k.label(delta))),
        }
    };
    for i in 0..3 {
        checks += 1;
        expect(
            p2,
            &[u(i)],
            &|k, p| k == StabilityKind::StrictlySemistable && p == Polystability::Yes,
            "polystable, not stable",
            &mut fails,
        );
    }
    for delta in quadric_families() {
        checks += 1;
        expect(
            SurfaceKind::Hirzebruch(0),
            &delta,
            &|_, p| p == Polystability::Yes,
            "polystable",
            &mut fails,
        );
    }
    checks += 1;
    expect(
        SurfaceKind::Hirzebruch(1),
        &[v(0)],
        &|k, _| k == StabilityKind::Stable,
        "stable",
        &mut fails,
    );
    for r in 1..=5 {
        let k = SurfaceKind::Hirzebruch(r);
        // D2 = D_v1, D1 = D_w1, D3 = D_w0.
        for delta in [vec![v(1)], vec![v(1), w(1)], vec![v(1), w(0)]] {
            checks += 1;
            expect(
                k,
                &delta,
                &|k, _| k == StabilityKind::Unstable,
                "unstable",
                &mut fails,
            );
        }
    }
    (checks, fails)
}

// ---------------------------------------------------------------- criterion 9

fn derivative(p: &RatPoly) -> RatPoly {
    RatPoly::from_coeffs(
        p.coeffs()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * int(k as i64))
            .collect(),
    )
}

fn sign_variations(seq: &[RatPoly], x: &Rational) -> usize {
    let signs: Vec<i8> = seq
        .iter()
        .map(|p| sign(&p.eval(x)))
        .filter(|&s| s != 0)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Distinct positive real roots by a Sturm sequence, after removing the
/// factor `x^k`. Also reports whether every root is simple.
fn positive_roots(p: &RatPoly) -> (usize, bool) {
    let lowest = p.coeffs().iter().position(|c| !c.is_zero()).unwrap();
    let p = RatPoly::from_coeffs(p.coeffs()[lowest..].to_vec());
    let dp = derivative(&p);
    let simple = p.gcd(&dp).degree() == Some(0);
    let mut seq = vec![p.clone(), dp];
    while !seq.last().unwrap().is_zero() {
        let n = seq.len();
        let r = -&seq[n - 2].rem(&seq[n - 1]);
        seq.push(r);
    }
    seq.pop();
    let lead = p.leading().unwrap().abs();
    let bound = p
        .coeffs()
        .iter()
        .map(|c| c.abs() / &lead)
        .fold(Rational::zero(), |m, c| if c > m { c } else { m })
        + Rational::one();
    (
        sign_variations(&seq, &Rational::zero()) - sign_variations(&seq, &bound),
        simple,
    )
}

fn criterion_9(polys: &[(String, RatPoly, bool)]) -> (usize, Failures) {
    let mut fails = Vec::new();
    let mut checks = 0;
    for (tag, p, endpoint) in polys {
        let changes = descartes_sign_changes(p).unwrap();
        let (roots, simple) = positive_roots(p);
        checks += 1;
        if !simple || roots > changes || !(changes - roots).is_multiple_of(2) {
            fails.push(format!(
                "{tag}: {roots} roots (simple {simple}), {changes} sign changes"
            ));
        }
        if *endpoint && (changes != 1 || roots != 1) {
            fails.push(format!(
                "{tag}: endpoint polynomial without a unique positive root"
            ));
        }
    }
    (checks, fails)
}

// ---------------------------------------------------------------------- main

struct Line {
    id: u32,
    title: &'static str,
    limit: Duration,
    elapsed: Duration,
    checks: usize,
    fails: Failures,
}

fn timed<F: FnOnce() -> (usize, Failures)>(
    id: u32,
    title: &'static str,
    limit_s: u64,
    f: F,
) -> Line {
    let start = Instant::now();
    let (checks, fails) = f();
    Line {
        id,
        title,
        limit: Duration::from_secs(limit_s),
        elapsed: start.elapsed(),
        checks,
        fails,
    }
}

fn main() -> ExitCode {
    let mut polys = Vec::new();
    let mut lines = vec![timed(
        1,
        "product case, single-point semistability",
        5,
        criterion_1,
    )];
    lines.push(timed(2, "D_vr case, region (0, nu0)", 5, || {
        criterion_2(&mut polys)
    }));
    lines.push(timed(3, "D_v0 cases, P1 and (nu3, nu1)", 5, || {
        criterion_3(&mut polys)
    }));
    lines.push(timed(4, "rank one", 2, criterion_4));
    lines.push(timed(5, "oracle-equivalence sweep", 120, criterion_5));
    lines.push(timed(
        6,
        "polynomial identities and slopes",
        10,
        criterion_6,
    ));
    lines.push(timed(7, "delta and delta_r thresholds", 5, criterion_7));
    lines.push(timed(8, "del Pezzo pairs", 5, criterion_8));
    lines.push(timed(9, "Descartes properties", 5, || criterion_9(&polys)));

    let mut unexpected = false;
    for line in &lines {
        let in_time = line.elapsed <= line.limit;
        let pass = line.fails.is_empty() && in_time;
        println!(
            "criterion {} {}  {:>7.2}s (limit {}s)  {} checks  {}",
            line.id,
            if pass { "PASS" } else { "FAIL" },
            line.elapsed.as_secs_f64(),
            line.limit.as_secs(),
            line.checks,
            line.title
        );
        if !in_time {
            println!("    runtime over limit");
            unexpected = true;
        }
        for f in &line.fails {
            println!("    {f}");
        }
        let known: Option<&[&str]> = KNOWN_FAILURES
            .iter()
            .find(|(id, _)| *id == line.id)
            .map(|(_, c)| *c);
        match known {
            Some(cells) => {
                let matches = line.fails.len() == cells.len()
                    && cells.iter().all(|c| line.fails.iter().any(|f| f == c));
                if matches {
                    println!("    (documented conflict: failure matches the recorded cells)");
                } else {
                    println!("    failure set differs from the recorded cells");
                    unexpected = true;
                }
            }
            None if !line.fails.is_empty() => unexpected = true,
            None => {}
        }
    }
    if unexpected {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
