use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

const B2: &str = "n 5\n1 2 5 5 5\n5 5 1 2 5\n3 4 5 5 5\n5 5 3 4 5\n5 5 5 5 5\nzero 5\ninvolution 1 3 2 4 5\n";

fn table(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(".sgt").tempfile().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn semirep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semirep")).args(args).output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = semirep(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn is_inverse_on_b2() {
    let f = table(B2);
    let v = json(&["is-inverse", f.path().to_str().unwrap(), "--json"]);
    assert_eq!(v["command"], "is-inverse");
    assert_eq!(v["verdict"]["is_inverse"], true);
    assert_eq!(v["verdict"]["oracle_agrees"], true);
    assert_eq!(v["verdict"]["jclasses"][0]["semiunitary"], true);
    assert_eq!(v["input_digest"].as_str().unwrap().len(), 64);
}

#[test]
fn involutions_on_b2() {
    let f = table(B2);
    let v = json(&["involutions", f.path().to_str().unwrap(), "--json"]);
    assert_eq!(v["verdict"]["count"], 2);
    assert_eq!(v["verdict"]["inverse_inducing"], serde_json::json!([1, 3, 2, 4, 5]));
    assert_eq!(v["verdict"]["declared"]["valid"], true);
}

#[test]
fn analyze_trivial() {
    let f = table("n 1\n1\n");
    let v = json(&["analyze", f.path().to_str().unwrap(), "--json"]);
    assert_eq!(v["verdict"]["jclasses"].as_array().unwrap().len(), 1);
    assert_eq!(v["verdict"]["inverse"], true);
    assert_eq!(v["verdict"]["semisimple"], true);
}

#[test]
fn star_check_and_rees() {
    let f = table(B2);
    let path = f.path().to_str().unwrap();
    let v = json(&["star-check", path, "--json"]);
    assert_eq!(v["verdict"]["representable"], true);
    let v = json(&["star-check", path, "--json", "--involution", "4,2,3,1,5"]);
    assert_eq!(v["verdict"]["semisimple"], true);
    let v = json(&["rees", path, "--json"]);
    assert_eq!(v["verdict"]["jclasses"][0]["sandwich_normalized"], true);
    let v = json(&["reps", path, "--json"]);
    assert_eq!(v["verdict"]["jclasses"][0]["semiunitary"], true);
}

#[test]
fn reports_are_deterministic() {
    let f = table(B2);
    let path = f.path().to_str().unwrap();
    let a = semirep(&["star-check", path, "--json", "--seed", "11"]);
    let b = semirep(&["star-check", path, "--json", "--seed", "11"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn non_regular_input_is_not_inverse() {
    let f = table("n 2\n2 2\n2 2\nzero 2\n");
    let v = json(&["is-inverse", f.path().to_str().unwrap(), "--json"]);
    assert_eq!(v["verdict"]["is_inverse"], false);
    assert_eq!(v["verdict"]["regular"], false);
}

#[test]
fn input_errors_exit_with_one() {
    let bad = table("n 2\n1 2\n");
    assert_eq!(
        semirep(&["analyze", bad.path().to_str().unwrap()]).status.code(),
        Some(1)
    );
    let nonassoc = table("n 2\n2 1\n1 1\n");
    assert_eq!(
        semirep(&["analyze", nonassoc.path().to_str().unwrap()]).status.code(),
        Some(1)
    );
    let f = table("n 2\n1 1\n2 2\n");
    assert_eq!(
        semirep(&["star-check", f.path().to_str().unwrap()]).status.code(),
        Some(1)
    );
    let f = table(B2);
    let out = semirep(&["star-check", f.path().to_str().unwrap(), "--involution", "2,1,3,4,5"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(semirep(&["corpus", "--max-order", "9"]).status.code(), Some(1));
}

#[test]
fn corpus_summary() {
    let v = json(&["corpus", "--max-order", "3", "--json"]);
    let orders = v["verdict"]["small_semigroups"].as_array().unwrap();
    let counts: Vec<u64> = orders.iter().map(|o| o["semigroups"].as_u64().unwrap()).collect();
    assert_eq!(counts, vec![1, 5, 24]);
    assert_eq!(v["verdict"]["all_agree"], true);
    assert_eq!(v["input_digest"], Value::Null);
}
