//! One line per acceptance criterion, at full size and with the time budget
//! of each criterion enforced.

use std::time::{Duration, Instant};

use coxart_core::verify::{run, Suite, VerifyConfig};

const SEED: u64 = 1;

struct Criterion {
    id: u32,
    title: &'static str,
    suites: &'static [Suite],
    budget: Duration,
}

const CRITERIA: &[Criterion] = &[
    Criterion { id: 1, title: "worked example", suites: &[Suite::WorkedExample], budget: Duration::from_secs(1) },
    Criterion { id: 2, title: "oracle equivalence", suites: &[Suite::Oracle], budget: Duration::from_secs(60) },
    Criterion { id: 3, title: "reflection sets", suites: &[Suite::NSet], budget: Duration::from_secs(60) },
    Criterion { id: 4, title: "retraction properties", suites: &[Suite::Retraction], budget: Duration::from_secs(300) },
    Criterion { id: 5, title: "one-move stability", suites: &[Suite::Stability], budget: Duration::from_secs(60) },
    Criterion { id: 6, title: "Coxeter intersections", suites: &[Suite::Intersection], budget: Duration::from_secs(60) },
    Criterion { id: 7, title: "Artin certificates", suites: &[Suite::Certificates], budget: Duration::from_secs(60) },
    Criterion { id: 8, title: "conjecture reduction", suites: &[Suite::ConjReduce], budget: Duration::from_secs(60) },
];

fn main() {
    let config = VerifyConfig { seed: SEED, ..VerifyConfig::default() };
    let mut all_ok = true;
    let mut rendered = Vec::new();
    for c in CRITERIA {
        let start = Instant::now();
        let report = run(c.suites, &config).expect("suite setup");
        let elapsed = start.elapsed();
        let cases: usize = report.suites.iter().map(|s| s.cases).sum();
        let ok = report.passed() && elapsed <= c.budget;
        all_ok &= ok;
        println!(
            "criterion {} {:<24} {} ({} cases, {} failures, {:.2}s of {}s)",
            c.id,
            c.title,
            if ok { "PASS" } else { "FAIL" },
            cases,
            report.failure_count(),
            elapsed.as_secs_f64(),
            c.budget.as_secs()
        );
        if !report.passed() {
            println!("{report}");
        }
        rendered.push(report.to_string());
    }

    // Determinism: a second run with the same seed renders identically.
    let again: Vec<String> = CRITERIA
        .iter()
        .map(|c| run(c.suites, &config).expect("suite setup").to_string())
        .collect();
    let same = again == rendered;
    all_ok &= same;
    println!(
        "criterion 9 {:<24} {} (seed {SEED}, two runs compared)",
        "determinism",
        if same { "PASS" } else { "FAIL" }
    );
    if !all_ok {
        std::process::exit(1);
    }
}
