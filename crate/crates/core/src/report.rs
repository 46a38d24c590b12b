//! The verification report: fixture checks plus roster verdicts, in JSON or
//! as a plain-text table.

use crate::fixtures::{check_fixtures, FixtureCheck};
use crate::spacefile::{export_space_spec, NamedSpace};
use crate::theorems::{verify_many, TheoremSpec, Verdict, VerificationReport, VerifyError};
use crate::universe::Bounds;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::time::Instant;

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub claims: usize,
    pub clean: usize,
    pub counterexamples: usize,
    pub fixture_checks: usize,
    pub fixture_mismatches: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub schema_version: u32,
    pub bounds: Bounds,
    pub fixtures: Vec<FixtureCheck>,
    pub theorems: Vec<VerificationReport>,
    pub summary: Summary,
    /// Wall time in milliseconds; present only when requested.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u128>,
}

impl SuiteReport {
    /// True when every fixture matched and no claim was refuted.
    pub fn is_clean(&self) -> bool {
        self.summary.counterexamples == 0 && self.summary.fixture_mismatches == 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let b = &self.bounds;
        let _ = writeln!(out, "bounds: n = {}, gamma mode = {}", b.n, b.gamma_mode);
        for f in &self.fixtures {
            let mark = if f.passed { "ok" } else { "MISMATCH" };
            let _ = writeln!(
                out,
                "fixture {:<40} {:<44} {mark} (observed {})",
                f.fixture.name(),
                f.assertion,
                f.observed
            );
        }
        let width = self.theorems.iter().map(|t| t.id.len()).max().unwrap_or(0);
        for t in &self.theorems {
            let verdict = match t.verdict {
                Verdict::NoCounterexample => "clean",
                Verdict::Counterexample => "COUNTEREXAMPLE",
            };
            let _ = writeln!(
                out,
                "{:<width$}  {:>8}/{:<8}  {verdict}",
                t.id, t.contexts_in_scope, t.contexts_total
            );
            if let Some(w) = &t.witness {
                let named = NamedSpace::with_default_names(w.context.clone());
                let subjects: Vec<String> = w.subjects.iter().map(|&s| named.render(s)).collect();
                let spec =
                    serde_json::to_string(&export_space_spec(&w.context)).expect("spec serializes");
                let _ = writeln!(out, "    at {} in {spec}", subjects.join(", "));
            }
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "{} claims: {} clean, {} with counterexamples; {}/{} fixture checks passed",
            s.claims,
            s.clean,
            s.counterexamples,
            s.fixture_checks - s.fixture_mismatches,
            s.fixture_checks
        );
        if let Some(ms) = self.runtime_ms {
            let _ = writeln!(out, "runtime: {ms} ms");
        }
        out
    }
}

/// Checks the fixtures and verifies `specs` over `bounds`.
pub fn build_report(
    specs: &[TheoremSpec],
    bounds: Bounds,
    timings: bool,
) -> Result<SuiteReport, VerifyError> {
    let started = Instant::now();
    let fixtures = check_fixtures();
    let theorems = verify_many(specs, bounds)?;
    let counterexamples = theorems
        .iter()
        .filter(|t| t.verdict == Verdict::Counterexample)
        .count();
    let summary = Summary {
        claims: theorems.len(),
        clean: theorems.len() - counterexamples,
        counterexamples,
        fixture_checks: fixtures.len(),
        fixture_mismatches: fixtures.iter().filter(|f| !f.passed).count(),
    };
    Ok(SuiteReport {
        schema_version: REPORT_SCHEMA_VERSION,
        bounds,
        fixtures,
        theorems,
        summary,
        runtime_ms: timings.then(|| started.elapsed().as_millis()),
    })
}
