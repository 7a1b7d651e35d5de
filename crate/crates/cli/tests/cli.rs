//! End-to-end tests of the `foamlab` binary: external interfaces, exit
//! codes and output determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn foamlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_foamlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 output")
}

#[test]
fn web_info_dodecahedron_counts() {
    let out = foamlab(&["web-info", "--builtin", "dodecahedron"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("vertices: 20"));
    assert!(text.contains("edges: 30"));
    assert!(text.contains("tait colorings: 60"));
    assert!(text.contains("kempe classes: 10"));
}

#[test]
fn web_info_json_is_machine_readable() {
    let out = foamlab(&["web-info", "--builtin", "cube", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["taitColorings"], 24);
    assert_eq!(v["weaklyHomogeneous"], false);
    assert_eq!(v["kempeSmall"], false);
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        vec!["theta-table"],
        vec!["kempe", "--builtin", "k4", "--json"],
        vec!["state-space", "--builtin", "theta", "--phi", "E", "--json"],
    ] {
        let a = foamlab(&args);
        let b = foamlab(&args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "non-deterministic output for {args:?}");
    }
}

#[test]
fn theta_table_has_27_rows_and_one_nonzero_per_permutation() {
    let out = foamlab(&["theta-table", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 27);
    let ones = rows.iter().filter(|r| r["value"] == "1").count();
    assert_eq!(ones, 6);
}

#[test]
fn foam_eval_sphere_is_zero() {
    let out = foamlab(&["foam-eval", "--builtin", "sphere"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("value: 0"));
}

#[test]
fn foam_eval_square_foam_requires_raw_mode() {
    let out = foamlab(&["foam-eval", "--builtin", "square-foam"]);
    assert_eq!(
        out.status.code(),
        Some(12),
        "integrity failures exit with 12"
    );
    let raw = foamlab(&[
        "foam-eval",
        "--builtin",
        "square-foam",
        "--raw-eval",
        "--json",
    ]);
    assert!(raw.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&raw)).unwrap();
    assert_eq!(
        v["rawFraction"],
        "(X1^2 + X1*X2 + X1*X3 + X2^2 + X2*X3 + X3^2 + 1) / (X1+X2)*(X1+X3)*(X2+X3)"
    );
}

#[test]
fn state_space_reports_match_under_base_changes() {
    for phi in ["id", "E", "0"] {
        let out = foamlab(&["state-space", "--builtin", "theta", "--phi", phi, "--json"]);
        assert!(out.status.success());
        let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(v["rank"], 6);
        assert_eq!(v["gradedRankCentered"], "q^3 + 2*q + 2*q^-1 + q^-3");
        assert_eq!(v["pairingIsIdentity"], true);
    }
}

#[test]
fn missing_input_file_exit_code() {
    let out = foamlab(&["web-info", "--input", "/nonexistent/web.json"]);
    assert_eq!(out.status.code(), Some(10));
}

#[test]
fn schema_violation_exit_code() {
    let dir = std::env::temp_dir();
    let path: PathBuf = dir.join("foamlab-bad-web.json");
    std::fs::write(&path, r#"{"vertices": ["a"], "edges": []}"#).unwrap();
    let out = foamlab(&["web-info", "--input", path.to_str().unwrap()]);
    assert_eq!(
        out.status.code(),
        Some(11),
        "trivalence violation is a schema error"
    );
    std::fs::remove_file(&path).ok();
}

#[test]
fn unknown_builtin_exit_code() {
    let out = foamlab(&["web-info", "--builtin", "icosahedron"]);
    assert_eq!(out.status.code(), Some(13));
}

#[test]
fn web_round_trip_through_files() {
    let dir = std::env::temp_dir();
    let path: PathBuf = dir.join("foamlab-roundtrip-web.json");
    // write a small web by hand in the documented schema
    let doc = r#"{
  "name": "pair-of-circles",
  "vertices": [],
  "edges": [
    { "id": "c0", "ends": [] },
    { "id": "c1", "ends": [] }
  ]
}"#;
    std::fs::write(&path, doc).unwrap();
    let out = foamlab(&["web-info", "--input", path.to_str().unwrap(), "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["taitColorings"], 9);
    assert_eq!(v["freeCircles"], 2);
    std::fs::remove_file(&path).ok();
}

#[test]
fn out_flag_writes_the_report_to_a_file() {
    let dir = std::env::temp_dir();
    let path: PathBuf = dir.join("foamlab-out-report.json");
    let out = foamlab(&[
        "web-info",
        "--builtin",
        "theta",
        "--json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["taitColorings"], 6);
    std::fs::remove_file(&path).ok();
}

#[test]
fn foam_eval_reads_foam_documents() {
    let dir = std::env::temp_dir();
    let path: PathBuf = dir.join("foamlab-theta-foam.json");
    std::fs::write(&path, foamlab_core::foam::theta_foam(0, 1, 2).to_json()).unwrap();
    let out = foamlab(&["foam-eval", "--input", path.to_str().unwrap(), "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["value"], "1");
    assert_eq!(v["degree"], 0);
    std::fs::remove_file(&path).ok();
}

#[test]
fn selftest_reports_every_check_green() {
    let out = foamlab(&["selftest", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["passed"], v["total"]);
    assert!(v["total"].as_u64().unwrap() >= 30);
}

#[test]
fn reproduce_dodecahedron_passes_with_thread_cap() {
    let out = Command::new(env!("CARGO_BIN_EXE_foamlab"))
        .args(["reproduce-dodecahedron", "--json"])
        .env("FOAMLAB_THREADS", "2")
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["passed"], v["total"]);
    assert_eq!(v["total"], 10);
}
