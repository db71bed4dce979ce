use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).display().to_string()
}

fn wlim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wlim")).args(args).env_remove("WLIM_MAX_CELLS").output().unwrap()
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stderr)))
}

fn scratch(name: &str, text: &str) -> String {
    let path = std::env::temp_dir().join(format!("wlim-{}-{name}", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path.display().to_string()
}

#[test]
fn mapspace_of_the_two_simplex_is_an_interval() {
    let out = wlim(&["mapspace", "--sset", &fixture("delta2.json"), "--from", "0", "--to", "2", "--max", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["cube"], 1);
    assert_eq!(r["f_vector"], serde_json::json!([2, 1]));
}

#[test]
fn two_leg_weight_finds_the_product_vertex() {
    let out = wlim(&["wlimit", "--weight", &fixture("two-leg-weight.json"), "--diagram", &fixture("lattice-cospan.json")]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["apexes"], serde_json::json!(["∅"]));
    assert_eq!(r["category_limit"], "∅");
    assert_eq!(r["unique"]["holds"], true);
}

#[test]
fn product_and_pullback_differ_in_the_split_cospan() {
    let two = report(&wlim(&["wlimit", "--weight", &fixture("two-leg-weight.json"), "--diagram", &fixture("split-cospan.json")]));
    let term = report(&wlim(&["wlimit", "--weight", &fixture("terminal-weight.json"), "--diagram", &fixture("split-cospan.json")]));
    assert_eq!(two["apexes"], serde_json::json!(["p"]));
    assert_eq!(term["apexes"], serde_json::json!(["q"]));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let args = ["join", "--left", &fixture("spine2.json"), "--weighted", "--weight", &fixture("collapsed-wedge.json")];
    let a = wlim(&args);
    let b = wlim(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn out_writes_a_loadable_document() {
    let path = std::env::temp_dir().join(format!("wlim-{}-nerve.json", std::process::id())).display().to_string();
    let out = wlim(&["nerve", "--category", &fixture("lattice.json"), "--out", &path]);
    assert_eq!(out.status.code(), Some(0));
    let again = wlim(&["build", &path]);
    assert_eq!(again.status.code(), Some(0));
    assert_eq!(report(&again)["f_vector"], serde_json::json!([4, 5, 2]));
}

#[test]
fn absence_exits_with_one() {
    let out = wlim(&["terminal", "--sset", &fixture("delta2.json"), "--vertex", "0"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(report(&out)["terminal"], false);
    let out = wlim(&["ho", "--sset", &fixture("spine2.json")]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn schema_errors_exit_with_two_and_a_pointer() {
    let text = std::fs::read_to_string(fixture("delta2.json")).unwrap().replacen("\"base\": \"0\"", "\"base\": \"nowhere\"", 1);
    let out = wlim(&["build", &scratch("bad-ref.json", &text)]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("/simplices/1/") && err.contains("nowhere"), "{err}");
}

#[test]
fn identity_failures_name_the_generator() {
    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(fixture("delta2.json")).unwrap()).unwrap();
    let edges = doc["simplices"]["1"].as_array_mut().unwrap();
    let e12 = edges.iter_mut().find(|e| e["name"] == "12").unwrap();
    e12["faces"].as_array_mut().unwrap().swap(0, 1);
    let out = wlim(&["build", &scratch("bad-identity.json", &doc.to_string())]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("`012`"), "{err}");
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(wlim(&["join", "--left", &fixture("delta2.json")]).status.code(), Some(2));
    assert_eq!(wlim(&["check", "--suite", "nonsense"]).status.code(), Some(2));
}

#[test]
fn the_enumeration_cap_exits_with_three() {
    let out = Command::new(env!("CARGO_BIN_EXE_wlim"))
        .args(["end", "--weight", &fixture("interval-weight.json"), "--diagram", &fixture("delta2-functor.json")])
        .env("WLIM_MAX_CELLS", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn suite_groups_hold() {
    for group in ["documents", "joins", "enriched"] {
        let out = wlim(&["check", "--suite", group]);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    }
}
