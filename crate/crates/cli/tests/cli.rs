use std::fs;
use std::process::{Command, Output};

fn spexlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spexlab")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn construct_emits_graph6() {
    let out = spexlab(&["construct", "odd-wheel", "--k", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "D|s");
}

#[test]
fn construct_edgelist_and_json() {
    let out = spexlab(&["construct", "path", "--m", "3", "--format", "edgelist"]);
    assert!(stdout(&out).contains("0 1"));
    let out = spexlab(&["construct", "complete", "--m", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["order"], 3);
    assert_eq!(v["edges"].as_array().unwrap().len(), 3);
}

#[test]
fn spectral_reads_graph_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("k4.g6");
    fs::write(&file, "C~\n").unwrap();
    let out = spexlab(&["spectral", file.to_str().unwrap()]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!((v["radius"].as_f64().unwrap() - 3.0).abs() < 1e-9);
}

#[test]
fn walks_csv_has_header_and_levels() {
    let out = spexlab(&["walks", "C~", "--csv", "--max-walk", "3"]);
    assert_eq!(stdout(&out), "level,count\n1,12\n2,36\n3,108\n");
}

#[test]
fn compare_prints_relation() {
    // K3 ∪ K1 against P4: equal edge counts, K3 ∪ K1 has more 2-walks.
    let out = spexlab(&["compare", "Cw", "Ch"]);
    assert_eq!(stdout(&out).trim(), "SUCC");
    let out = spexlab(&["compare", "Ch", "Cw", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["relation"], "PREC");
    assert_eq!(v["witness_level"], 2);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("w.g6");
    let out = spexlab(&["construct", "core", "--k", "4", "--out", file.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(fs::read_to_string(file).unwrap().lines().count(), 1);
}

#[test]
fn enumerate_streams_one_graph_per_line() {
    let out = spexlab(&["enumerate", "--family", "g", "--k", "3", "--order", "15"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 2);
}

#[test]
fn verify_pass_exits_zero() {
    let out = spexlab(&["verify", "lemma-3.3", "--delta", "3", "--n", "13"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["claim_id"], "lemma-3.3");
    assert_eq!(v["outcome"], "PASS");
}

#[test]
fn verify_fail_exits_one() {
    let out = spexlab(&["verify", "claim-1-thm-1.4", "--k", "4", "--n-min", "22", "--n-max", "26"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["outcome"], "FAIL");
    assert!(v["evidence"]["counterexample"].is_object() || v["evidence"]["counterexample"].is_array());
}

#[test]
fn unknown_claim_is_a_usage_error() {
    let out = spexlab(&["verify", "no-such-claim"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("lemma-3.2"));
}

#[test]
fn infeasible_parameters_exit_two() {
    let out = spexlab(&["construct", "odd-wheel", "--k", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exhausted_budget_exits_three() {
    let out = spexlab(&["check", "D~{", "--odd-wheel", "2", "--budget", "1"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn check_reports_requested_properties() {
    let out = spexlab(&["check", "D~{", "--odd-wheel", "2", "--path", "--star", "5", "--cycle", "5"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["odd_wheel"], true);
    assert_eq!(v["longest_path_order"], 5);
    assert_eq!(v["star_free"], true);
    assert_eq!(v["cycle"], true);
}
