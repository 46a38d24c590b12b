//! Verifies every roster claim over an exhaustive universe.
//!
//! cargo run --release --example verify_roster -- [n] [full|presets]

use idealtop::theorems::{run_all, Verdict};
use idealtop::{Bounds, GammaMode};
use std::time::Instant;

fn main() {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(3, |s| s.parse().expect("n"));
    let mode: GammaMode = args
        .next()
        .map_or(GammaMode::Full, |s| s.parse().expect("gamma mode"));
    let started = Instant::now();
    let reports = run_all(Bounds::new(n, mode)).expect("scan within budget");
    let mut failures = 0;
    for r in &reports {
        let verdict = match r.verdict {
            Verdict::NoCounterexample => "clean",
            Verdict::Counterexample => {
                failures += 1;
                "COUNTEREXAMPLE"
            }
        };
        println!(
            "{:<64} {:>9} in scope  {verdict}",
            r.id, r.contexts_in_scope
        );
    }
    println!(
        "{} claims, {} contexts, {} counterexamples, {:.2?}",
        reports.len(),
        reports[0].contexts_total,
        failures,
        started.elapsed()
    );
}
