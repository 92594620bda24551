use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str], data: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_weyl-strata"));
    cmd.args(args).env_remove("WEYL_STRATA_DATA");
    if let Some(d) = data {
        cmd.env("WEYL_STRATA_DATA", d);
    }
    cmd.output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn b_column(doc: &Value) -> Vec<u64> {
    doc["characters"].as_array().unwrap().iter().map(|c| c["b"].as_u64().unwrap()).collect()
}

#[test]
fn chartab_examples() {
    let out = run(&["chartab", "--type", "B2"], None);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(b_column(&json(&out)), [0, 1, 2, 2, 4]);
    let a1 = json(&run(&["chartab", "--type", "A1"], None));
    assert_eq!(a1["characters"].as_array().unwrap().len(), 2);
    let a2 = json(&run(&["chartab", "--type", "A2"], None));
    assert_eq!(b_column(&a2), [0, 1, 3]);
    assert_eq!(a2["schema_version"], 1);
}

#[test]
fn compute_examples() {
    for (p, strata, sheets) in [("0", 2, 3), ("2", 2, 2)] {
        let out = run(&["compute", "--type", "A1", "--char", p], None);
        assert_eq!(out.status.code(), Some(0));
        let doc = json(&out);
        assert_eq!(doc["summary"]["strata"], strata);
        assert_eq!(doc["summary"]["sheets"], sheets);
        assert_eq!(doc["strata"].as_array().unwrap().len(), strata);
    }
}

#[test]
fn report_carries_schema_and_provenance() {
    let doc = json(&run(&["compute", "--type", "C2"], None));
    assert_eq!(doc["schema_version"], 1);
    let files = doc["data_files"].as_array().unwrap();
    let c2 = files.iter().find(|f| f["type"] == "C2").unwrap();
    assert_eq!(c2["origin"], "embedded:C2.json");
    assert_eq!(c2["validation_suite"], 1);
    assert!(c2["method"].as_str().unwrap().contains("symbol"));
}

#[test]
fn invalid_configurations_exit_2() {
    for args in [
        &["compute", "--type", "Z9"][..],
        &["compute", "--type", "A6"],
        &["compute", "--type", "A2", "--char", "4"],
        &["compute", "--type", "B2", "--total-rank", "1"],
        &["compute", "--type", "B3", "--order-cap", "10"],
        &["compute", "--type", "B2", "--order-cap", "0"],
        &["compute", "--type", "B2", "--format", "yaml"],
        &["verify", "--type", "Q1"],
        &["chartab", "--type", "E6"],
        &["compute"],
    ] {
        let out = run(args, None);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
    let out = run(&["compute", "--type", "Z9"], None);
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "config");
}

#[test]
fn verify_examples_pass() {
    for args in
        [&["verify", "--type", "C2"][..], &["verify", "--type", "G2"], &["verify", "--type", "A2", "--char", "5"]]
    {
        let out = run(args, None);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let doc = json(&out);
        assert_eq!(doc["all_passed"], true);
        let names: Vec<&str> = doc["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
        for want in ["phi-constancy", "strata-are-unions-of-sheets", "components-are-sheets", "induction-consistency"] {
            assert!(names.contains(&want), "{want}");
        }
        assert!(names.iter().any(|n| n.starts_with("character-table")));
        assert!(names.iter().any(|n| n.starts_with("b-invariants")));
    }
}

/// A G2 table with the Springer labels of two classes exchanged: valid
/// JSON, wrong mathematics.
fn broken_g2(dir: &Path) {
    let text = include_str!("../../core/data/G2.json")
        .replace("\"phi2_1\"", "\"TMP\"")
        .replace("\"phi2_2\"", "\"phi2_1\"")
        .replace("\"TMP\"", "\"phi2_2\"");
    std::fs::write(dir.join("G2.json"), text).unwrap();
}

#[test]
fn corrupted_data_is_an_integrity_error() {
    let dir = tempfile::tempdir().unwrap();
    broken_g2(dir.path());
    let out = run(&["compute", "--type", "A1"], Some(dir.path()));
    assert_eq!(out.status.code(), Some(3));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "integrity");
    assert!(err["message"].as_str().unwrap().contains("G2"));

    let out = run(&["verify", "--type", "G2"], Some(dir.path()));
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["all_passed"], false);

    std::fs::write(dir.path().join("G2.json"), "{\"cartan_type\": \"G2\"}").unwrap();
    assert_eq!(run(&["compute", "--type", "G2"], Some(dir.path())).status.code(), Some(3));
}

#[test]
fn data_directory_override() {
    let dir = tempfile::tempdir().unwrap();
    let g2 = include_str!("../../core/data/G2.json");
    std::fs::write(dir.path().join("G2.json"), g2).unwrap();
    let out = run(&["compute", "--type", "G2"], Some(dir.path()));
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    let file = doc["data_files"].as_array().unwrap().iter().find(|f| f["type"] == "G2").unwrap().clone();
    assert!(file["origin"].as_str().unwrap().ends_with("G2.json"));
    assert!(!file["origin"].as_str().unwrap().starts_with("embedded"));

    let missing = dir.path().join("nope");
    assert_eq!(run(&["compute", "--type", "G2"], Some(&missing)).status.code(), Some(2));
}

#[test]
fn out_and_markdown() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g2.md");
    let out = run(&["compute", "--type", "G2", "--format", "markdown", "--out", path.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let md = std::fs::read_to_string(&path).unwrap();
    assert!(md.contains("| stratum | dim | Jordan classes | sheets | components |"));

    let bad = dir.path().join("no/such/dir/out.json");
    assert_eq!(run(&["compute", "--type", "A1", "--out", bad.to_str().unwrap()], None).status.code(), Some(2));

    let out = run(&["verify", "--type", "A1", "--format", "markdown"], None);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains(": pass"));
}

#[test]
fn compute_is_deterministic() {
    let a = run(&["compute", "--type", "B2xA1", "--char", "3"], None);
    let b = run(&["compute", "--type", "B2xA1", "--char", "3"], None);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
