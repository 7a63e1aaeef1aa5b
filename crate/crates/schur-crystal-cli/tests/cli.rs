//! End-to-end checks of the command surface: flag handling, exit codes,
//! output shape, and determinism across thread counts.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schur-crystal"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 output")
}

#[test]
fn count_reports_class_sizes() {
    let out = run(&["count", "--class", "dp", "--p", "3", "--max-n", "6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let last = text.lines().last().unwrap();
    let v: serde_json::Value = serde_json::from_str(last).unwrap();
    assert_eq!(v["n"], 6);
    assert_eq!(v["count"], "2");
    assert_eq!(text.lines().count(), 7);
}

#[test]
fn member_exit_codes() {
    let no = run(&["member", "--class", "sp", "--p", "7", "--partition", "8,6"]);
    assert_eq!(no.status.code(), Some(1));
    let yes = run(&["member", "--class", "sp", "--p", "7", "--partition", "7,7,7"]);
    assert_eq!(yes.status.code(), Some(0));
    let usage = run(&["member", "--class", "sp", "--p", "7", "--partition", "3,7"]);
    assert_eq!(usage.status.code(), Some(2));
    let unknown = run(&["member", "--class", "wat", "--p", "7", "--partition", "7"]);
    assert_eq!(unknown.status.code(), Some(2));
    let missing_p = run(&["member", "--class", "sp", "--partition", "7"]);
    assert_eq!(missing_p.status.code(), Some(2));
}

#[test]
fn empty_partition_parses() {
    let yes = run(&["member", "--class", "sp", "--p", "5", "--partition", ""]);
    assert_eq!(yes.status.code(), Some(0));
}

#[test]
fn patterns_expand_counts_39() {
    let out = run(&["patterns", "--p", "7", "--expand"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let last: serde_json::Value = serde_json::from_str(text.lines().last().unwrap()).unwrap();
    assert_eq!(last["count"], 39);
    assert_eq!(text.lines().count(), 40);
}

#[test]
fn verify_commands_pass() {
    for args in [
        vec!["verify", "equinumerosity", "--a", "dp", "--b", "sp", "--p", "5", "--max-n", "25"],
        vec!["verify", "equinumerosity", "--a", "sp", "--b", "b433", "--p", "5", "--max-n", "20", "--sets"],
        vec!["verify", "crystal", "--p", "3", "--max-n", "10"],
        vec!["verify", "zigzag", "--p", "5", "--j", "1", "--max-window", "25"],
        vec!["verify", "psi", "--p", "5", "--j", "2"],
        vec!["verify", "kyoto", "--p", "5", "--s", "1", "--depth", "10"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(0), "args {args:?}: {}", stdout(&out));
    }
}

#[test]
fn verify_reports_failure_with_nonzero_exit() {
    // R and T_{2,5} are not equinumerous (that is R')
    let out = run(&["verify", "equinumerosity", "--a", "r", "--b", "t", "--params-b", "2,5", "--max-n", "12"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    let last: serde_json::Value = serde_json::from_str(text.lines().last().unwrap()).unwrap();
    assert_eq!(last["verdict"], "fail");
    assert!(last["first_mismatch"].is_number());
    assert!(!last["witness_a"].as_array().unwrap().is_empty());
}

#[test]
fn graph_dot_output_is_stable() {
    let out = run(&["graph", "--structure", "sp", "--p", "3", "--depth", "4", "--format", "dot"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("digraph sp_crystal {"));
    assert!(text.contains("label=\"∅\""));
    assert!(text.trim_end().ends_with('}'));
    let again = run(&["graph", "--structure", "sp", "--p", "3", "--depth", "4", "--format", "dot"]);
    assert_eq!(text, stdout(&again));
    let kn = run(&["graph", "--structure", "kn", "--p", "5", "--s", "1", "--depth", "1", "--format", "dot"]);
    assert!(stdout(&kn).contains("->"));
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let single = run(&["--threads", "1", "verify", "crystal", "--p", "5", "--max-n", "12"]);
    let multi = run(&["--threads", "4", "verify", "crystal", "--p", "5", "--max-n", "12"]);
    assert_eq!(stdout(&single), stdout(&multi));
    assert_eq!(single.status.code(), multi.status.code());
}

#[test]
fn series_product_and_class_routes_agree() {
    let product = run(&["series", "--p", "5", "--product", "--terms", "24"]);
    let class = run(&["series", "--p", "5", "--class", "dp", "--terms", "24"]);
    assert_eq!(stdout(&product), stdout(&class));
    let usage = run(&["series", "--p", "5", "--terms", "4"]);
    assert_eq!(usage.status.code(), Some(2));
}

#[test]
fn tsv_format() {
    let out = run(&["count", "--class", "dp", "--p", "5", "--max-n", "3", "--format", "tsv"]);
    assert_eq!(stdout(&out), "0\t1\n1\t1\n2\t1\n3\t2\n");
    let bad = run(&["count", "--class", "dp", "--p", "5", "--max-n", "3", "--format", "dot"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn list_is_lexicographically_decreasing() {
    let out = run(&["list", "--class", "sp", "--p", "3", "--n", "6"]);
    let text = stdout(&out);
    let got: Vec<serde_json::Value> = text
        .lines()
        .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap()["partition"].clone())
        .collect();
    // partitions serialize as arrays of integers
    assert_eq!(got, vec![serde_json::json!([6]), serde_json::json!([5, 1])]);
}
