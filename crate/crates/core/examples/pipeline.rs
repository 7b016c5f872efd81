//! Runs the exclusion pipeline for a range of genera and prints the verdict counts.
//!
//!     cargo run --example pipeline -- 3 10

use std::collections::BTreeMap;
use std::time::Instant;

use sp2g::filter::{run_pipeline, Subject, Verdict};

fn main() {
    let args: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (lo, hi) = match args[..] {
        [a, b] => (a, b),
        [a] => (a, a),
        _ => (3, 10),
    };
    for g in lo..=hi {
        let t = Instant::now();
        let report = run_pipeline(g).expect("pipeline");
        let mut counts: BTreeMap<String, usize> = BTreeMap::new();
        for e in &report.entries {
            let key = match (&e.verdict, &e.subject) {
                (Verdict::Survivor { .. }, _) => "SURVIVOR".to_string(),
                (Verdict::Unresolved(x), _) => format!("UNRESOLVED({})", x.rule),
                (Verdict::Excluded(x), Subject::Group(_)) => x.rule.to_string(),
                (Verdict::Excluded(x), _) => format!("{} [family]", x.rule),
            };
            *counts.entry(key).or_default() += 1;
        }
        let survivors: Vec<String> = report.survivors.iter().map(ToString::to_string).collect();
        println!(
            "g = {g:2}  entries {:5}  survivors {:?}  ({:.2?})",
            report.entries.len(),
            survivors,
            t.elapsed()
        );
        for (k, n) in counts {
            println!("    {k:32} {n}");
        }
        for e in report.unresolved() {
            if let Some(f) = e.verdict.failed_fact() {
                println!("    unresolved {}: {f}", e.subject.label());
            }
        }
    }
}
