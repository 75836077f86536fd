use std::process::{Command, Output};

use serde_json::Value;

fn quintuple(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quintuple")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn expand_euler_product() {
    let o = quintuple(&["expand", "[q;q]", "--order", "7", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "q_exp,x_exp,coeff\n0,0,1/1\n1,0,-1/1\n2,0,-1/1\n5,0,1/1\n7,0,1/1\n");
}

#[test]
fn expand_triple_product_text() {
    let o = quintuple(&["expand", "[q,x,q/x;q]", "--order", "2"]);
    assert_eq!(stdout(&o).trim(), "1 - x - q*x^-1 + q*x^2 + O(q^3)");
}

#[test]
fn coeff_lookup() {
    let o = quintuple(&["coeff", "[q;q]", "--q", "5", "--x", "0", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["coeff"], "1/1");
}

#[test]
fn qdixon_lists_every_sample() {
    let o = quintuple(&["verify", "qdixon", "--m-max", "10", "--trials", "50", "--seed", "42", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let reports: Vec<Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(reports.len(), 11);
    for r in &reports {
        assert_eq!(r["status"], "pass");
        assert!(r["witness"].is_null());
        assert_eq!(r["samples"].as_array().unwrap().len(), 50);
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.ndjson");
    let o = quintuple(&["verify", "finite", "--m", "4", "--format", "json", "--no-timing", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let written = std::fs::read_to_string(&path).unwrap();
    let v: Value = serde_json::from_str(written.trim()).unwrap();
    assert_eq!(v["identity"], "finite-quintuple");
    assert_eq!(v["metrics"]["elapsed_ms"], 0.0);
}

#[test]
fn seeded_output_is_reproducible() {
    let args = ["verify", "qdixon", "--m-max", "3", "--trials", "10", "--seed", "7", "--format", "json", "--no-timing"];
    assert_eq!(quintuple(&args).stdout, quintuple(&args).stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(quintuple(&["verify", "quintuple", "--order", "10"]).status.code(), Some(0));
    assert_eq!(quintuple(&["verify", "quintuple", "--order", "10", "--mutate", "alter-exponent"]).status.code(), Some(1));
    assert_eq!(quintuple(&["expand", "[q;q"]).status.code(), Some(2));
    assert_eq!(quintuple(&["verify"]).status.code(), Some(2));
}
