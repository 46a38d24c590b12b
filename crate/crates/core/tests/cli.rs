//! End-to-end runs of the `idealtop` binary and the bundled space files.

use idealtop::atlas::parse_atlas;
use idealtop::hunt::Witness;
use idealtop::{parse_space_spec, Fixture};
use std::path::PathBuf;
use std::process::{Command, Output};

fn idealtop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_idealtop"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn space(name: &str) -> String {
    let path: PathBuf = [
        env!("CARGO_MANIFEST_DIR"),
        "spaces",
        &format!("{name}.json"),
    ]
    .iter()
    .collect();
    path.to_str().unwrap().to_string()
}

#[test]
fn bundled_space_files_are_the_fixtures() {
    for fixture in Fixture::ALL {
        let file = space(&fixture.name().replace('-', "_"));
        let text = std::fs::read_to_string(&file).unwrap();
        assert_eq!(
            parse_space_spec(&text).unwrap(),
            fixture.context(),
            "{file}"
        );
    }
}

#[test]
fn classify_single_subset() {
    let out = idealtop(&[
        "classify",
        "--space",
        &space("pre_gamma_i_open_not_meet_closed"),
        "--subset",
        "b",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("PRE_GAMMA_I_OPEN: false"), "{text}");
    assert_eq!(text.lines().count(), 20);
}

#[test]
fn classify_json_lists_every_subset() {
    let out = idealtop(&[
        "classify",
        "--space",
        &space("pre_gamma_i_open_not_gamma_open"),
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    let rows = v["subsets"].as_array().unwrap();
    assert_eq!(rows.len(), 8);
    let ab = rows
        .iter()
        .find(|r| r["subset"] == serde_json::json!(["a", "b"]))
        .unwrap();
    assert_eq!(ab["classes"]["PRE_GAMMA_I_OPEN"], true);
    assert_eq!(ab["classes"]["GAMMA_OPEN"], false);
}

#[test]
fn enumerate_counts() {
    assert_eq!(
        stdout(&idealtop(&[
            "enumerate",
            "--kind",
            "topologies",
            "--n",
            "4",
            "--count-only"
        ])),
        "355\n"
    );
    assert_eq!(
        stdout(&idealtop(&[
            "enumerate",
            "--kind",
            "ideals",
            "--n",
            "4",
            "--count-only"
        ])),
        "16\n"
    );
    let fixture = space("pre_gamma_i_open_not_gamma_open");
    assert_eq!(
        stdout(&idealtop(&[
            "enumerate",
            "--kind",
            "gammas",
            "--space",
            &fixture,
            "--count-only"
        ])),
        "16\n"
    );
    assert_eq!(
        stdout(&idealtop(&[
            "enumerate",
            "--kind",
            "gammas",
            "--space",
            &fixture
        ]))
        .lines()
        .count(),
        16
    );
}

#[test]
fn verify_lists_every_claim_as_clean() {
    let out = idealtop(&["verify", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for spec in idealtop::builtin_theorems() {
        let line = text
            .lines()
            .find(|l| l.starts_with(&format!("{} ", spec.id)))
            .unwrap();
        assert!(line.ends_with("clean"), "{line}");
    }
}

#[test]
fn verify_refuted_claim_exits_one() {
    let out = idealtop(&[
        "verify",
        "--n",
        "3",
        "--spec",
        "converse-pre-i-open-is-pre-gamma-i-open",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["theorems"][0]["verdict"], "counterexample");
    assert!(v["theorems"][0]["witness"]["space"]["points"].is_array());
}

#[test]
fn verify_writes_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = idealtop(&[
        "verify",
        "--n",
        "2",
        "--format",
        "json",
        "--timings",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(v["runtime_ms"].is_u64());
}

#[test]
fn bad_space_files_name_the_axiom() {
    let dir = tempfile::tempdir().unwrap();
    let missing_x = dir.path().join("missing_x.json");
    std::fs::write(
        &missing_x,
        "{\n  \"points\": [\"a\", \"b\"],\n  \"opens\": [[], [\"a\"]],\n  \"ideal\": {\"max\": []},\n  \"gamma\": \"identity\"\n}\n",
    )
    .unwrap();
    let out = idealtop(&["classify", "--space", missing_x.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("not a topology: missing X"), "{err}");

    let shrinking = dir.path().join("shrinking.json");
    std::fs::write(
        &shrinking,
        r#"{"points": ["a", "b", "c"], "opens": [[], ["a", "c"], ["a", "b", "c"]], "ideal": {"max": ["b"]},
            "gamma": [{"open": ["a", "c"], "image": ["a"]}, {"open": ["a", "b", "c"], "image": ["a", "b", "c"]}]}"#,
    )
    .unwrap();
    let out = idealtop(&["classify", "--space", shrinking.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .contains("gamma not expansive"));
}

#[test]
fn hunt_json_witness_reverifies() {
    let out = idealtop(&[
        "hunt",
        "--from",
        "GAMMA_P_OPEN",
        "--to",
        "PRE_GAMMA_I_OPEN",
        "--n",
        "4",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let w: Witness = serde_json::from_value(v["witness"].clone()).unwrap();
    assert!(w.recheck());
}

#[test]
fn hunt_under_constraints() {
    let out = idealtop(&[
        "hunt",
        "--from",
        "OPEN",
        "--to",
        "PRE_GAMMA_I_OPEN",
        "--require",
        "gamma-regular",
    ]);
    assert_eq!(stdout(&out), "no witness up to n = 3\n");
    let out = idealtop(&["hunt", "--from", "OPEN", "--to", "PRE_GAMMA_I_OPEN"]);
    assert!(stdout(&out).starts_with("witness at n = "));
}

#[test]
fn atlas_exports() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("atlas.json");
    let out = idealtop(&[
        "atlas",
        "--n",
        "2",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let m = parse_atlas(&std::fs::read(&path).unwrap()).unwrap();
    assert_eq!(m.schema_version, 1);
    let dot = stdout(&idealtop(&["atlas", "--n", "2"]));
    assert!(dot.starts_with("digraph atlas {"));
    assert_eq!(
        dot.lines()
            .filter(|l| l.contains("[label=") && !l.contains("->"))
            .count(),
        20
    );
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(idealtop(&[]).status.code(), Some(2));
    assert_eq!(
        idealtop(&["verify", "--gamma-mode", "some"]).status.code(),
        Some(2)
    );
    assert_eq!(
        idealtop(&["hunt", "--from", "NOT_A_CLASS", "--to", "OPEN"])
            .status
            .code(),
        Some(2)
    );
}
