use std::time::{Duration, Instant};

use cli::acceptance::*;
use cli::commands::verify_all_report;
use cli::{Format, DEFAULT_SEED};

mod common;

/// Failures of criterion 6 that follow from the lemma's sign at odd `g`
/// with `n / g` even: the unsigned lemma on the sub-basis and the dual
/// commutator relation, in `L` and the Verma module (`M` alone at n = 0).
fn expected_criterion_6_failures() -> Vec<String> {
    let mut out = Vec::new();
    for (g, n) in liq_cases() {
        let q = n / g as i64;
        if g % 2 == 0 || q % 2 == 1 {
            continue;
        }
        let modules: &[&str] = if n == 0 { &["M"] } else { &["L", "M"] };
        for m in modules {
            out.push(format!("g = {}, n = {}: {}: lem_fond on m_{{g'j}} at h'^2", g, n, m));
            out.push(format!("g = {}, n = {}: {}: [LX+, LX-] = [LH]_{{T^g}} at h'^0", g, n, m));
        }
    }
    out
}

#[test]
fn acceptance_criteria() {
    type Run = Box<dyn Fn() -> Criterion>;
    let runs: Vec<(Run, Option<Duration>)> = vec![
        (Box::new(|| criterion_1().unwrap()), Some(Duration::from_secs(1))),
        (Box::new(|| criterion_2().unwrap()), Some(Duration::from_secs(30))),
        (Box::new(|| criterion_3().unwrap()), None),
        (Box::new(|| criterion_4().unwrap()), None),
        (Box::new(|| criterion_5().unwrap()), None),
        (Box::new(|| criterion_6().unwrap()), Some(Duration::from_secs(60))),
        (Box::new(|| criterion_7().unwrap()), Some(Duration::from_secs(30))),
        (Box::new(|| criterion_8().unwrap()), Some(Duration::from_secs(10))),
        (Box::new(|| criterion_9(DEFAULT_SEED).unwrap()), None),
    ];
    let mut criteria = Vec::new();
    let mut slow = Vec::new();
    for (run, bound) in runs {
        let start = Instant::now();
        let c = run();
        let took = start.elapsed();
        let verdict = if c.passed() { "PASS" } else { "FAIL" };
        let limit = bound.map(|b| format!(" (limit {:.0} s)", b.as_secs_f64())).unwrap_or_default();
        println!("criterion {} {}: {} in {:.2} s{}", c.id, verdict, c.title, took.as_secs_f64(), limit);
        for f in &c.failures {
            println!("    {}", f);
        }
        if bound.is_some_and(|b| took > b) {
            slow.push(format!("criterion {} took {:.2} s", c.id, took.as_secs_f64()));
        }
        criteria.push(c);
    }
    for c in &criteria {
        if c.id == 6 {
            assert_eq!(c.failures, expected_criterion_6_failures(), "criterion 6 deviates from the recorded outcome");
        } else {
            assert!(c.passed(), "criterion {}: {:?}", c.id, c.failures);
        }
    }
    assert!(slow.is_empty(), "{:?}", slow);
    let report = verify_all_report(&criteria, DEFAULT_SEED);
    assert_eq!(report.exit_code(), 1);
    common::golden("verify_all.txt", &report.render(Format::Text));
}
