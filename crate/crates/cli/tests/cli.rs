use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tortkara"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn tortkara_identity_on_t6_19() {
    let o = run(&["check", "--identity", "tortkara", "catalog:T6_19"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "holds\n");
}

#[test]
fn failed_identity_exits_one_with_witness() {
    let o = run(&["check", "--identity", "metabelian", "catalog:T6_19"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "fails at (e1,e2,e1,e3): e6 != 0\n");
}

#[test]
fn cohomology_of_t5_08() {
    let o = run(&["cohomology", "catalog:T5_08"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "H2_TM dim 2, H2_T dim 4\n");
}

#[test]
fn cohomology_of_non_malcev_marks_tm_undefined() {
    let o = run(&["cohomology", "catalog:T5_10"]);
    assert_eq!(stdout(&o), "H2_TM dim undefined, H2_T dim 3\n");
    let o = run(&["cohomology", "--flavor", "malcev-compatible", "catalog:T5_10"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn inconsistent_file_is_a_validation_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(
        &path,
        r#"{"dim":3,"products":[{"i":1,"j":2,"value":["1","0","0"]},{"i":2,"j":1,"value":["1","0","0"]}]}"#,
    )
    .unwrap();
    let o = run(&["check", "--identity", "tortkara", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("i < j"), "{}", stderr(&o));
}

#[test]
fn malformed_json_reports_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    fs::write(&path, "{\"dim\": 3,\n \"products\": [}").unwrap();
    let o = run(&["fingerprint", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2 column 15"), "{}", stderr(&o));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["cohomology", "catalog:NOPE"]).status.code(), Some(2));
    assert_eq!(run(&["check", "catalog:T6_09"]).status.code(), Some(2));
    assert_eq!(run(&["check", "--bogus", "catalog:T6_19"]).status.code(), Some(2));
    assert_eq!(run(&["check", "/nonexistent/file.json"]).status.code(), Some(2));
    assert_eq!(run(&[]).status.code(), Some(2));
}

#[test]
fn export_then_load_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.json");
    let o = run(&["catalog", "export", "T6_09?alpha=1/2"]);
    assert_eq!(o.status.code(), Some(0));
    fs::write(&path, o.stdout).unwrap();
    let from_file = run(&["fingerprint", path.to_str().unwrap()]);
    let from_catalog = run(&["fingerprint", "--alpha", "1/2", "catalog:T6_09"]);
    assert_eq!(from_file.status.code(), Some(0));
    assert_eq!(stdout(&from_file), stdout(&from_catalog));
}

#[test]
fn extension_from_cocycle_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("theta.json");
    fs::write(&path, r#"{"dim":4,"coeffs":[{"i":2,"j":4,"c":"1"}]}"#).unwrap();
    let a = run(&["extend", "catalog:T4_02", "--theta", path.to_str().unwrap()]);
    let b = run(&["extend", "catalog:T4_02", "--theta", "Δ24"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(stdout(&a), "dim 5: e1e2=e3, e1e3=e4, e2e4=e5\n");
    let not_cocycle = run(&["extend", "catalog:T4_02", "--theta", "D34"]);
    assert_eq!(not_cocycle.status.code(), Some(1));
}

#[test]
fn iso_exception_pair() {
    let o = run(&["iso", "catalog:T6_09?alpha=1", "catalog:T6_09?alpha=-2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("isomorphic\nwitness ["));
    let o = run(&["iso", "catalog:T6_19", "catalog:T6_18?alpha=0"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn json_outputs_carry_schema_version() {
    for args in [
        vec!["--format", "json", "check", "catalog:T6_19"],
        vec!["--format", "json", "cohomology", "catalog:T5_08"],
        vec!["--format", "json", "fingerprint", "catalog:T5_08"],
        vec!["--format", "json", "decompose", "catalog:T6_19"],
        vec!["--format", "json", "catalog", "list"],
        vec!["--format", "json", "iso", "catalog:T5_08", "catalog:T5_09", "catalog:T5_01"],
    ] {
        let o = run(&args);
        let v: Value = serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}"));
        assert_eq!(v["schema_version"], 1, "{args:?}");
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["iso", "catalog:T6_09?alpha=0", "catalog:T6_09?alpha=-1", "catalog:T6_02", "catalog:T6_04"];
    let first = run(&args);
    assert_eq!(first.status.code(), Some(0));
    for threads in ["1", "3"] {
        let again = Command::new(env!("CARGO_BIN_EXE_tortkara"))
            .args(args)
            .env("TORTKARA_THREADS", threads)
            .output()
            .unwrap();
        assert_eq!(again.stdout, first.stdout);
    }
}

#[test]
fn bad_thread_count() {
    let o = Command::new(env!("CARGO_BIN_EXE_tortkara"))
        .args(["catalog", "list"])
        .env("TORTKARA_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}
