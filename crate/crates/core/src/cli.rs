//! Command-line front end.
//!
//! Exit codes: 0 success, 1 counterexample or fixture mismatch (`verify`),
//! 2 usage error, 3 budget exceeded, 4 unreadable or invalid input,
//! 5 engine defect.

use crate::atlas::{build_atlas, export_atlas};
use crate::classes::{classify, SetClass};
use crate::gamma::{count_gammas, enumerate_gammas, GammaMode, DEFAULT_GAMMA_BUDGET};
use crate::hunt::{hunt, HuntBounds, HuntError, Query};
use crate::ideal::enumerate_ideals;
use crate::mask::SubsetMask;
use crate::report::build_report;
use crate::spacefile::{parse_named_space_spec, render_subset, NamedSpace};
use crate::theorems::{builtin_theorems, find_theorem, VerifyError};
use crate::topology::{enumerate_topologies, Topology};
use crate::universe::{Bounds, SpaceProperty, DEFAULT_CONTEXT_BUDGET};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_INPUT: i32 = 4;
pub const EXIT_DEFECT: i32 = 5;

#[derive(Parser, Debug)]
#[command(
    name = "idealtop",
    about = "Finite-model lab for ideal spaces with an operation γ"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Table,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum AtlasFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Topologies,
    Ideals,
    Gammas,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the fixtures and verify claims over every space on n points.
    Verify {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = GammaMode::Full)]
        gamma_mode: GammaMode,
        /// Verify only this claim.
        #[arg(long)]
        spec: Option<String>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Table)]
        format: ReportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Include wall time in the report.
        #[arg(long)]
        timings: bool,
        #[arg(long, default_value_t = DEFAULT_CONTEXT_BUDGET)]
        budget: u64,
    },
    /// Print the class memberships of subsets of a space.
    Classify {
        #[arg(long)]
        space: PathBuf,
        /// Comma-separated point names; all subsets when omitted.
        #[arg(long)]
        subset: Option<String>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Table)]
        format: ReportFormat,
    },
    /// Search for a set in every `--from` class but outside some `--to` class.
    Hunt {
        #[arg(long, value_delimiter = ',', required = true)]
        from: Vec<SetClass>,
        #[arg(long, value_delimiter = ',', required = true)]
        to: Vec<SetClass>,
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        require: Vec<SpaceProperty>,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = GammaMode::Full)]
        gamma_mode: GammaMode,
        #[arg(long, value_enum, default_value_t = ReportFormat::Table)]
        format: ReportFormat,
    },
    /// Build the implication matrix over all set classes.
    Atlas {
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        require: Vec<SpaceProperty>,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = GammaMode::Full)]
        gamma_mode: GammaMode,
        #[arg(long, value_enum, default_value_t = AtlasFormat::Dot)]
        format: AtlasFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List or count topologies, ideals or γ operations.
    Enumerate {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        count_only: bool,
        /// Take the topology for `--kind gammas` from this space.
        #[arg(long)]
        space: Option<PathBuf>,
        #[arg(long, default_value_t = GammaMode::Full)]
        gamma_mode: GammaMode,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Scan(_) => Failure::new(EXIT_BUDGET, e.to_string()),
            VerifyError::EngineDefect { .. } => Failure::new(EXIT_DEFECT, e.to_string()),
        }
    }
}

impl From<HuntError> for Failure {
    fn from(e: HuntError) -> Self {
        match e {
            HuntError::Query(_) => Failure::new(EXIT_USAGE, e.to_string()),
            HuntError::BudgetExhausted(_) => Failure::new(EXIT_BUDGET, e.to_string()),
            HuntError::EngineDefect(_) => Failure::new(EXIT_DEFECT, e.to_string()),
        }
    }
}

fn io_failure(e: std::io::Error) -> Failure {
    Failure::new(EXIT_INPUT, e.to_string())
}

fn read_space(path: &PathBuf) -> Result<NamedSpace, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::new(EXIT_INPUT, format!("{}: {e}", path.display())))?;
    parse_named_space_spec(&text).map_err(|e| {
        Failure::new(
            EXIT_INPUT,
            format!("{}: [{}] {e}", path.display(), e.code()),
        )
    })
}

fn emit(out: &mut dyn Write, path: Option<&PathBuf>, bytes: &[u8]) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, bytes).map_err(io_failure),
        None => out.write_all(bytes).map_err(io_failure),
    }
}

fn json_line(value: &serde_json::Value) -> Vec<u8> {
    let mut s = serde_json::to_string_pretty(value).expect("json value serializes");
    s.push('\n');
    s.into_bytes()
}

/// Parses `argv` (program name first), runs the subcommand and returns the
/// exit code. Output goes to the process's stdout and stderr.
pub fn run_cli<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_cli_with(
        argv,
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    )
}

/// [`run_cli`] with explicit output streams.
pub fn run_cli_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
                EXIT_USAGE
            } else {
                let _ = out.write_all(text.as_bytes());
                EXIT_OK
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Verify {
            n,
            gamma_mode,
            spec,
            format,
            out: path,
            timings,
            budget,
        } => {
            let specs = match spec {
                Some(id) => vec![find_theorem(&id)
                    .ok_or_else(|| Failure::new(EXIT_USAGE, format!("unknown claim `{id}`")))?],
                None => builtin_theorems(),
            };
            let mut bounds = Bounds::new(n, gamma_mode);
            bounds.budget = budget;
            let report = build_report(&specs, bounds, timings)?;
            let text = match format {
                ReportFormat::Table => report.to_table(),
                ReportFormat::Json => report.to_json(),
            };
            emit(out, path.as_ref(), text.as_bytes())?;
            Ok(if report.is_clean() {
                EXIT_OK
            } else {
                EXIT_REFUTED
            })
        }
        Command::Classify {
            space,
            subset,
            format,
        } => {
            let named = read_space(&space)?;
            let n = named.context.n();
            let subsets: Vec<SubsetMask> = match subset {
                Some(text) => vec![named
                    .parse_subset(&text)
                    .map_err(|e| Failure::new(EXIT_USAGE, e))?],
                None => SubsetMask::all(n).collect(),
            };
            let bytes = match format {
                ReportFormat::Table => {
                    let mut text = String::new();
                    for &a in &subsets {
                        let flags = classify(&named.context, a).flags;
                        if subsets.len() > 1 {
                            text.push_str(&format!("{}\n", named.render(a)));
                        }
                        for c in SetClass::ALL {
                            let indent = if subsets.len() > 1 { "  " } else { "" };
                            text.push_str(&format!("{indent}{}: {}\n", c.tag(), flags.contains(c)));
                        }
                    }
                    text.into_bytes()
                }
                ReportFormat::Json => {
                    let rows: Vec<_> = subsets
                        .iter()
                        .map(|&a| {
                            let flags = classify(&named.context, a).flags;
                            let classes: BTreeMap<SetClass, bool> = SetClass::ALL
                                .into_iter()
                                .map(|c| (c, flags.contains(c)))
                                .collect();
                            json!({ "subset": named.names_of(a), "classes": classes })
                        })
                        .collect();
                    json_line(
                        &json!({ "schema_version": 1, "points": named.names, "subsets": rows }),
                    )
                }
            };
            emit(out, None, &bytes)?;
            Ok(EXIT_OK)
        }
        Command::Hunt {
            from,
            to,
            require,
            n,
            gamma_mode,
            format,
        } => {
            let query = Query::new(&from, &to, &require, HuntBounds::new(n, gamma_mode))
                .map_err(HuntError::from)?;
            let found = hunt(&query)?;
            let bytes = match format {
                ReportFormat::Json => json_line(&json!({
                    "schema_version": 1,
                    "query": query,
                    "witness": found,
                })),
                ReportFormat::Table => match &found {
                    None => format!("no witness up to n = {n}\n").into_bytes(),
                    Some(w) => {
                        let named = NamedSpace::with_default_names(w.context.clone());
                        let mut text = format!(
                            "witness at n = {}: A = {}\n",
                            w.position.n,
                            named.render(w.subset)
                        );
                        for (c, v) in w.source_flags.iter().chain(&w.target_flags) {
                            text.push_str(&format!("{}: {v}\n", c.tag()));
                        }
                        let spec = crate::spacefile::SpaceSpecFile::from(&named);
                        text.push_str(
                            &serde_json::to_string_pretty(&spec).expect("spec serializes"),
                        );
                        text.push('\n');
                        text.into_bytes()
                    }
                },
            };
            emit(out, None, &bytes)?;
            Ok(EXIT_OK)
        }
        Command::Atlas {
            require,
            n,
            gamma_mode,
            format,
            out: path,
        } => {
            let matrix = build_atlas(&require, HuntBounds::new(n, gamma_mode))
                .map_err(|e| Failure::new(EXIT_DEFECT, e.to_string()))?;
            let name = match format {
                AtlasFormat::Dot => "dot",
                AtlasFormat::Json => "json",
            };
            let bytes =
                export_atlas(&matrix, name).map_err(|e| Failure::new(EXIT_USAGE, e.to_string()))?;
            emit(out, path.as_ref(), &bytes)?;
            Ok(EXIT_OK)
        }
        Command::Enumerate {
            kind,
            n,
            count_only,
            space,
            gamma_mode,
        } => enumerate(kind, n, count_only, space, gamma_mode, out),
    }
}

fn enumerate(
    kind: Kind,
    n: Option<usize>,
    count_only: bool,
    space: Option<PathBuf>,
    gamma_mode: GammaMode,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let names = |n: usize| NamedSpace::default_names(n);
    let topologies_on = |n: usize| -> Result<Vec<Topology>, Failure> {
        enumerate_topologies(n).map_err(|e| Failure::new(EXIT_BUDGET, e.to_string()))
    };
    let mut text = String::new();
    match kind {
        Kind::Topologies => {
            let n = n.ok_or_else(|| Failure::new(EXIT_USAGE, "--n is required"))?;
            let all = topologies_on(n)?;
            if count_only {
                text = format!("{}\n", all.len());
            } else {
                for t in &all {
                    let opens: Vec<String> = t
                        .opens()
                        .iter()
                        .map(|&v| render_subset(&names(n), v))
                        .collect();
                    text.push_str(&opens.join(" "));
                    text.push('\n');
                }
            }
        }
        Kind::Ideals => {
            let n = n.ok_or_else(|| Failure::new(EXIT_USAGE, "--n is required"))?;
            if n > crate::mask::MAX_POINTS {
                return Err(Failure::new(
                    EXIT_USAGE,
                    format!("at most {} points", crate::mask::MAX_POINTS),
                ));
            }
            let all = enumerate_ideals(n);
            if count_only {
                text = format!("{}\n", all.len());
            } else {
                for i in &all {
                    text.push_str(&format!("P({})\n", render_subset(&names(n), i.maximal())));
                }
            }
        }
        Kind::Gammas => {
            let (point_names, topologies) = match (&space, n) {
                (Some(path), _) => {
                    let named = read_space(path)?;
                    (named.names.clone(), vec![named.context.topology().clone()])
                }
                (None, Some(n)) => (names(n), topologies_on(n)?),
                (None, None) => return Err(Failure::new(EXIT_USAGE, "--n or --space is required")),
            };
            if count_only {
                let total = topologies.iter().fold(0u64, |acc, t| {
                    acc.saturating_add(match gamma_mode {
                        GammaMode::Full => count_gammas(t),
                        GammaMode::Presets => crate::gamma::GammaPreset::ALL.len() as u64,
                    })
                });
                text = format!("{total}\n");
            } else {
                for t in &topologies {
                    let gammas = enumerate_gammas(t, gamma_mode, DEFAULT_GAMMA_BUDGET)
                        .map_err(|e| Failure::new(EXIT_BUDGET, e.to_string()))?;
                    for g in &gammas {
                        let pairs: Vec<String> = g
                            .pairs(t)
                            .map(|(v, img)| {
                                format!(
                                    "{}->{}",
                                    render_subset(&point_names, v),
                                    render_subset(&point_names, img)
                                )
                            })
                            .collect();
                        text.push_str(&pairs.join(" "));
                        text.push('\n');
                    }
                }
            }
        }
    }
    emit(out, None, text.as_bytes())?;
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("idealtop").chain(args.iter().copied());
        let code = run_cli_with(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(
            run(&["enumerate", "--kind", "shapes", "--n", "2"]).0,
            EXIT_USAGE
        );
        assert_eq!(
            run(&["hunt", "--from", "OPEN", "--to", "OPEN"]).0,
            EXIT_USAGE
        );
        assert_eq!(
            run(&["verify", "--spec", "no-such-claim", "--n", "1"]).0,
            EXIT_USAGE
        );
        assert_eq!(run(&["atlas", "--format", "svg"]).0, EXIT_USAGE);
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("verify"));
    }

    #[test]
    fn enumerate_counts() {
        assert_eq!(
            run(&[
                "enumerate",
                "--kind",
                "topologies",
                "--n",
                "3",
                "--count-only"
            ])
            .1,
            "29\n"
        );
        assert_eq!(
            run(&["enumerate", "--kind", "ideals", "--n", "3", "--count-only"]).1,
            "8\n"
        );
        assert_eq!(
            run(&["enumerate", "--kind", "topologies", "--n", "2"])
                .1
                .lines()
                .count(),
            4
        );
        assert_eq!(
            run(&[
                "enumerate",
                "--kind",
                "topologies",
                "--n",
                "6",
                "--count-only"
            ])
            .0,
            EXIT_BUDGET
        );
    }

    #[test]
    fn verify_exit_codes() {
        assert_eq!(run(&["verify", "--n", "2"]).0, EXIT_OK);
        let (code, out, _) = run(&[
            "verify",
            "--n",
            "3",
            "--spec",
            "pre-gamma-i-open-meet-closed",
        ]);
        assert_eq!(code, EXIT_REFUTED);
        assert!(out.contains("COUNTEREXAMPLE"));
        assert_eq!(
            run(&["verify", "--n", "4", "--gamma-mode", "full"]).0,
            EXIT_BUDGET
        );
    }

    #[test]
    fn hunt_reports_witness_and_absence() {
        let (code, out, _) = run(&["hunt", "--from", "PRE_I_OPEN", "--to", "PRE_GAMMA_I_OPEN"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.starts_with("witness at n = 2"));
        let (_, out, _) = run(&["hunt", "--from", "gamma-open", "--to", "open"]);
        assert_eq!(out, "no witness up to n = 3\n");
    }
}
