use std::process::{Command, Output};

use serde_json::Value;

fn nsgp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nsgp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = nsgp(&full);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    let value: Value = serde_json::from_str(&text).unwrap();
    // canonical: re-serializing reproduces the bytes
    assert_eq!(serde_json::to_string_pretty(&value).unwrap() + "\n", text);
    value
}

fn text(args: &[&str]) -> String {
    let out = nsgp(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn analyze_reports_invariants() {
    let v = json(&["analyze", "5,7,9"]);
    assert_eq!(v["invariants"]["conductor"], 14);
    assert_eq!(v["invariants"]["genus"], 8);
    assert_eq!(v["gaps"], serde_json::json!([1, 2, 3, 4, 6, 8, 11, 13]));
}

#[test]
fn ci_text_and_json() {
    let t = text(&["ci", "15,16,24,28"]);
    assert!(t.contains("x2^3 - x3^2  (deg 48)"));
    assert!(t.contains("x1^4 - x2^2*x4  (deg 60)"));
    let v = json(&["ci", "6,8,10,17,19"]);
    assert_eq!(v["is_ci"], false);
}

#[test]
fn t1_json_shape() {
    let v = json(&["t1", "2,3"]);
    assert_eq!(v["dims"], serde_json::json!({"-4": 1, "-6": 1}));
    assert_eq!(v["tau"], 2);
    let v = json(&["t1", "5,7,9", "--weight", "0"]);
    assert_eq!(v, serde_json::json!({"dim": 0, "weight": 0}));
}

#[test]
fn pretzel_formal_semigroup() {
    let v = json(&["formal-semigroup", "--alexander", "1-t+t^3-t^4+t^5-t^6+t^7-t^9+t^10"]);
    assert_eq!(v["sporadic"], serde_json::json!([0, 3, 5, 7, 8]));
    assert_eq!(v["tail_from"], 10);
    assert_eq!(v["closed"], false);
    assert_eq!(v["witness"], serde_json::json!([3, 3]));
}

#[test]
fn other_subcommands_emit_json() {
    for args in [
        &["betti", "5,7,9"][..],
        &["hk", "5,7,9", "--dedekind", "5"],
        &["glue", "2,3", "1", "3", "5"],
        &["hilbert", "5,7,9", "--truncate", "30"],
        &["alexander", "3,5"],
        &["alexander", "--torus", "2,5"],
        &["family", "a", "3"],
        &["family", "b", "2"],
        &["family", "torus", "3,4"],
        &["complex", "5,7,9", "--degree", "21"],
    ] {
        json(args);
    }
}

#[test]
fn dot_export_writes_one_file_per_degree() {
    let dir = tempfile::tempdir().unwrap();
    let out = nsgp(&[
        "--format",
        "dot",
        "complex",
        "5,7,9",
        "--all",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let dot = std::fs::read_to_string(dir.path().join("delta_32.dot")).unwrap();
    assert!(dot.starts_with("graph"));
    assert!(dir.path().join("delta_14.dot").exists());
    assert!(!dir.path().join("delta_13.dot").exists());
}

#[test]
fn errors_exit_one_with_json_body() {
    let out = nsgp(&["--format", "json", "analyze", "4,6"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"]["kind"], "GcdNotOne");

    let out = nsgp(&["analyze", "5,x"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(nsgp(&["analyze"]).status.code(), Some(2));
    assert_eq!(nsgp(&["--format", "dot", "analyze", "5,7,9"]).status.code(), Some(2));
    assert_eq!(nsgp(&["complex", "5,7,9"]).status.code(), Some(2));
}

#[test]
fn truncation_is_capped_by_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_nsgp"))
        .args(["hilbert", "5,7,9", "--truncate", "500"])
        .env("NSGP_MAX_DEGREE", "100")
        .output()
        .unwrap();
    assert!(out.status.success());
    let t = String::from_utf8(out.stdout).unwrap();
    assert!(t.contains("to degree 100:"));
    assert!(t.trim_end().ends_with("t^100"));
}
