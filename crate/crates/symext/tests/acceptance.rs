//! Criteria 1–9, one line each on standard output.

use std::io::Write;
use std::time::{Duration, Instant};

use symext::suites::{run_suite, Suite};
use symext_core::catalog::{real_form_asserted, real_form_reported};
use symext_core::{Check, Status};

struct Outcome {
    ok: bool,
    detail: String,
}

fn counts(checks: &[Check]) -> (usize, usize, usize) {
    checks.iter().fold((0, 0, 0), |(p, f, n), c| match c.status {
        Status::Pass => (p + 1, f, n),
        Status::Fail => (p, f + 1, n),
        Status::Finding => (p, f, n + 1),
    })
}

fn first_fail(checks: &[Check]) -> String {
    checks
        .iter()
        .find(|c| c.is_fail())
        .map(|c| format!("; first failure {}: {}", c.id, c.witness.clone().unwrap_or_default()))
        .unwrap_or_default()
}

fn suite(s: Suite, budget: Duration, no_findings: bool) -> Outcome {
    let t = Instant::now();
    let checks = run_suite(s);
    let took = t.elapsed();
    let (p, f, n) = counts(&checks);
    Outcome {
        ok: f == 0 && p > 0 && took <= budget && (!no_findings || n == 0),
        detail: format!("{p} pass, {f} fail, {n} finding in {took:.2?} (budget {budget:?}){}", first_fail(&checks)),
    }
}

fn c1() -> Outcome {
    suite(Suite::Cominuscule, Duration::from_secs(1), true)
}

fn c2() -> Outcome {
    let mut o = suite(Suite::Bijection, Duration::from_secs(30), true);
    let checks = run_suite(Suite::Bijection);
    let hit = checks.iter().filter(|c| c.id.starts_with("row ") && c.id.ends_with(" is hit")).count();
    let families = ["sym2", "wedge2", "standard", "halfspin", "e6-27", "tensor"];
    let all_families = families.iter().all(|f| checks.iter().any(|c| c.id.starts_with(&format!("row {f}"))));
    o.ok &= hit > 0 && all_families;
    o.detail.push_str(&format!("; {hit} rows hit, all six families: {all_families}"));
    o
}

fn c3() -> Outcome {
    let mut o = suite(Suite::E6, Duration::from_secs(5), true);
    let checks = run_suite(Suite::E6);
    let entries = checks.iter().filter(|c| c.id.contains(" entry ")).count();
    o.ok &= entries == 26;
    o.detail.push_str(&format!("; {entries} list entries checked"));
    o
}

fn c4() -> Outcome {
    let mut o = suite(Suite::Counts, Duration::from_secs(10), true);
    let n = run_suite(Suite::Counts).iter().filter(|c| c.id.contains("|S1|")).count();
    o.ok &= n == 7;
    o
}

fn c5() -> Outcome {
    suite(Suite::Halfspin, Duration::from_secs(5), true)
}

fn c6() -> Outcome {
    let t = Instant::now();
    let checks = run_suite(Suite::Gauss);
    let took = t.elapsed();
    let (p, f, n) = counts(&checks);
    let needed = [
        "Serre relations",
        "dim ρ(g̃) = dim g̃",
        "[λx,y] = [λy,x]",
        "λ([W,z]) = [W,λz]",
        "generator parities",
        "[p̃,p̃] ⊆ h",
        "[[p̃,p̃],p̃] ⊆ p̃",
        "ω skew on p",
        "ω ad_h-invariant",
        "ω nondegenerate on p",
        "ω(h,·) = 0",
        "λ ≠ 0",
    ];
    let families = symext::suites::gauss_families();
    let missing: Vec<String> = families
        .iter()
        .flat_map(|fam| needed.iter().map(move |k| (fam, k)))
        .filter(|(fam, k)| {
            !checks.iter().any(|c| c.id.starts_with(&format!("{fam}: ")) && c.id.contains(**k) && c.status == Status::Pass)
        })
        .map(|(fam, k)| format!("{fam}: {k}"))
        .collect();
    Outcome {
        ok: f == 0 && missing.is_empty() && took <= Duration::from_secs(120),
        detail: format!(
            "{} families, {p} pass, {f} fail, {n} finding in {took:.2?}{}{}",
            families.len(),
            if missing.is_empty() { String::new() } else { format!("; missing {missing:?}") },
            first_fail(&checks)
        ),
    }
}

fn c7() -> Outcome {
    let checks = real_form_asserted();
    let (p, f, n) = counts(&checks);
    let sym2 = checks.iter().filter(|c| c.id.starts_with("sym2")).count();
    let wedge2 = checks.iter().filter(|c| c.id.starts_with("wedge2 compact")).count();
    let tensor = checks.iter().filter(|c| c.id.ends_with("R+S+1")).count();
    // 0 ≤ q ≤ n ≤ 8; 0 ≤ p ≤ n−1 ≤ 7; a ≤ 8.
    let shape = sym2 == 44 && wedge2 == 36 && tensor == 8;
    Outcome {
        ok: f == 0 && n == 0 && shape,
        detail: format!("{p} pass, {f} fail, {n} finding; sym2 {sym2}, wedge2 compact {wedge2}, R+S+1 {tensor}{}", first_fail(&checks)),
    }
}

fn c8() -> Outcome {
    let checks = real_form_reported();
    let (p, f, n) = counts(&checks);
    let findings: Vec<&Check> = checks.iter().filter(|c| c.status == Status::Finding).collect();
    let has = |prefix: &str, needle: &str| findings.iter().any(|c| c.id.starts_with(prefix) && c.id.contains(needle));
    let kinds = has("wedge2 non-compact", ": Q") && has("tensor", "(P+1, Q)") && has("wedge2 non-compact", "p/q variant");
    let both_values = findings.iter().all(|c| c.witness.as_deref().is_some_and(|w| w.contains("printed") || w.contains("no signature oracle") || w.contains("variant")));

    let run = || {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = symext::cli::run(["symext", "verify", "all", "--json"], &mut out, &mut err);
        (code, out)
    };
    let (code1, out1) = run();
    let (code2, out2) = run();
    let deterministic = out1 == out2;
    Outcome {
        ok: f == 0 && kinds && both_values && code1 == 0 && code2 == 0 && deterministic,
        detail: format!(
            "{p} pass, {f} fail, {n} finding; verify all exit {code1}; byte-identical reruns: {deterministic}"
        ),
    }
}

fn c9() -> Outcome {
    let checks = run_suite(Suite::Pairing);
    let (p, f, n) = counts(&checks);
    let bijection = run_suite(Suite::Bijection);
    let single = bijection
        .iter()
        .filter(|c| c.id.starts_with("surgery ") && !c.id.contains("tensor") && !c.id.starts_with("surgery A1 "))
        .count();
    Outcome {
        ok: f == 0 && p + n == single,
        detail: format!("{p} agree, {n} finding, {f} fail over {} single-component instances ({single} expected)", p + n),
    }
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("cominuscule detection", c1),
        ("surgery/catalog bijection", c2),
        ("E6 reference lists", c3),
        ("wedge2 count formulas", c4),
        ("halfspin structure", c5),
        ("Gauss equations and symplectic form", c6),
        ("real-form signatures, asserted rows", c7),
        ("real-form signatures, reported rows", c8),
        ("pairing versus coefficient grading", c9),
    ];
    let mut stdout = std::io::stdout().lock();
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let o = f();
        let tag = if o.ok { "PASS" } else { "FAIL" };
        writeln!(stdout, "criterion {}: {tag} {name}: {}", i + 1, o.detail).unwrap();
        if !o.ok {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "criteria failed: {failed:?}");
}
