use std::path::PathBuf;
use std::process::{Command, Output};

use plateaued::report::ANALYSIS_REPORT_SCHEMA;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_plateaued")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/data").join(name).display().to_string()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("plateaued-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn analysis_reports_match_schema() {
    let schema: Value = serde_json::from_str(ANALYSIS_REPORT_SCHEMA).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    for f in ["anf:x1*x3+x2*x4+x1*x2*x5", "anf:x1*x3+x2*x4", "anf:4:0", "tt:3:96", "anf:x1*x3+x1*x2*x5+x2*x4+x2*x6"] {
        let report = json(&["--json", "analyze", f]);
        assert!(validator.is_valid(&report), "{f}: {report}");
    }
    let mut bad = json(&["--json", "analyze", "anf:x1*x2"]);
    bad["classification"] = "sometimes".into();
    assert!(!validator.is_valid(&bad));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["analyze", "anf:x1*y"]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "anf:x25"]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "tt:3:zz"]).status.code(), Some(2));
    // dual of inadmissible weight
    let code = run(&["construct", "spectral", "--support", &data("x3x4.support"), "--dual", "anf:4:x1"]).status.code();
    assert_eq!(code, Some(3));
    // dual breaking the profile
    let code = run(&["construct", "spectral", "--support", &data("x3x4.support"), "--dual", "anf:4:x1*x2+x3*x4"]).status.code();
    assert_eq!(code, Some(3));
    let code = run(&["equiv", "anf:x1*x3+x2*x4+x5", "anf:x1*x3+x2*x4+x2*x5+x3*x5+x4*x5+x1+x4", "--budget", "1"])
        .status
        .code();
    assert_eq!(code, Some(4));
    assert_eq!(run(&["transform", "hou-langevin", "anf:x1*x2*x3*x4*x5+x1*x3"]).status.code(), Some(3));
}

#[test]
fn construct_spectral_and_analyze() {
    let v = json(&["--json", "construct", "spectral", "--support", &data("x3x4.support"), "--dual", "anf:4:x1*x3+x2*x4"]);
    assert_eq!(v["anf"], "anf:5:x1*x3+x2*x4+x1*x2*x5");
    assert_eq!(v["s"], 1);
    assert_eq!(v["analysis"]["classification"], "nontrivial");
    let text = String::from_utf8(run(&["analyze", "anf:x1*x3+x2*x4+x1*x2*x5"]).stdout).unwrap();
    assert!(text.contains("1-plateaued"));
}

#[test]
fn equiv_certifies_and_rejects() {
    let v = json(&["--json", "equiv", "anf:x1*x3+x2*x4+x5", "anf:x1*x3+x2*x4+x2*x5+x3*x5+x4*x5+x1+x4"]);
    assert_eq!(v["status"], "equivalent");
    assert!(v["witness"]["A"].is_string());
    let v = json(&["--json", "equiv", "anf:x1*x2*x5+x1*x3+x2*x4+x5", "anf:x1*x2*x5+x3*x4*x5+x1*x3+x1*x4+x2*x4+x2*x5+x3*x4+x4*x5+x3+x4+x5"]);
    assert_eq!(v["status"], "inequivalent");
}

#[test]
fn transform_reports_both_functions() {
    let v = json(&["--json", "transform", "hou-langevin", "anf:x1*x2*x5+x1*x3+x2*x4+x5"]);
    let big = plateaued::parse_function(v["anf"].as_str().unwrap()).unwrap();
    let expected = plateaued::parse_function("anf:x1*x2*x5+x3*x4*x5+x1*x3+x1*x4+x2*x4+x2*x5+x3*x4+x4*x5+x3+x4+x5").unwrap();
    assert_eq!(big, expected);
    assert_eq!(v["walsh"].as_array().map(Vec::len), Some(32));
    assert!(v["fingerprints_differ_in"].is_string());
}

#[test]
fn family_then_concat() {
    let dir = scratch("family");
    let duals = dir.join("duals.txt");
    std::fs::write(&duals, "anf:4:x1*x3+x2*x4\nanf:4:x1*x4+x2*x3\n").unwrap();
    let out = dir.join("members");
    let v = json(&[
        "--json",
        "family",
        "--base",
        &data("x3x4.support"),
        "--duals",
        duals.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(v["members"].as_array().map(Vec::len), Some(2));
    let v = json(&["--json", "concat", "--family", out.to_str().unwrap()]);
    assert_eq!(v["analysis"]["bent"], true);
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn search_duals_counts() {
    let v = json(&["--json", "search-duals", "--support", &data("x3x4.support")]);
    assert!(v["count"].as_u64().unwrap() > 0);
    assert_eq!(v["exhaustive"], true);
}

#[test]
fn seeded_constructions_repeat() {
    let a = json(&["--json", "--seed", "42", "construct", "thm41", "--random", "2,1"]);
    let b = json(&["--json", "--seed", "42", "construct", "thm41", "--random", "2,1"]);
    assert_eq!(a, b);
    assert_eq!(a["analysis"]["plateaued"]["s"], 1);
}
