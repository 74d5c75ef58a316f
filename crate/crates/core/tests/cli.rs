use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stable-koszul"))
        .args(args)
        .env_remove("KOSZUL_DEGREE_BOUND")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn enum_lists_one_graph_per_class() {
    let out = run(&["enum", "--n", "4"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 11);
    let out = run(&["--format", "json", "enum", "--n", "5", "--connected"]);
    let v = json(&out);
    assert_eq!(v["count"], 21);
    assert_eq!(v["graphs"].as_array().unwrap().len(), 21);
}

#[test]
fn classify_reads_graph6_inline_and_from_a_file() {
    let out = run(&["--format", "json", "classify", "--graph6", "A_"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v[0]["graph6"], "A_");
    assert_eq!(v[0]["flags"]["threshold"], true);

    let file = scratch("classify.g6", "A_\n\nCr\n");
    let out = run(&["classify", "--in", file.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 3, "{text}");
    assert!(text.lines().next().unwrap().starts_with("graph6"));
}

#[test]
fn table_reports_counts() {
    let out = run(&["--format", "json", "--jobs", "1", "table", "--n", "5"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["counts"]["total"], 21);
    assert_eq!(v["records"].as_array().unwrap().len(), 21);
    let text = stdout(&run(&["table", "--n", "4"]));
    assert!(text.contains("total"), "{text}");
}

#[test]
fn verify_exit_status_reflects_the_checks() {
    let out = run(&["verify", "--n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("12 checks, 0 failed"));
    let out = run(&["--format", "json", "verify", "--n", "4", "--inject-fault", "flip-c4-p4-free"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["fault"], "FlipC4P4Free");
    assert!(v["checks"].as_array().unwrap().iter().any(|c| c["passed"] == false));
    let out = run(&["verify", "--n", "4", "--inject-fault", "negate-koszul"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn koszul_reports_witnesses() {
    // C4 in graph6.
    let out = run(&["--format", "json", "koszul", "--graph6", "Cr"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["strongly_koszul"], false);
    assert_eq!(v["degree_bound"], 4);
    assert_eq!(v["witness"]["degree"], 3);

    let chain = scratch("chain.json", r#"{"n":3,"relations":[[0,1],[1,2]]}"#);
    let out = run(&["koszul", "--poset", chain.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "strongly Koszul up to degree 4");

    let n_poset = scratch("n.json", r#"{"n":4,"relations":[[0,2],[1,2],[1,3]]}"#);
    let out = run(&["koszul", "--poset", n_poset.to_str().unwrap()]);
    assert!(stdout(&out).starts_with("not strongly Koszul"));
}

#[test]
fn degree_bound_comes_from_flag_or_environment() {
    let out = run(&["--format", "json", "--degree-bound", "3", "koszul", "--graph6", "Cr"]);
    assert_eq!(json(&out)["degree_bound"], 3);
    let out = Command::new(env!("CARGO_BIN_EXE_stable-koszul"))
        .args(["--format", "json", "koszul", "--graph6", "Cr"])
        .env("KOSZUL_DEGREE_BOUND", "5")
        .output()
        .unwrap();
    assert_eq!(json(&out)["degree_bound"], 5);
}

#[test]
fn bad_input_exits_with_status_two() {
    let cases: &[&[&str]] = &[
        &["enum", "--n", "9"],
        &["classify", "--graph6", "A"],
        &["classify", "--graph6", "A_", "--in", "x"],
        &["classify"],
        &["koszul", "--graph6", "Cr", "--degree-bound", "9"],
        &["koszul", "--poset", "/nonexistent/poset.json"],
        &["table", "--n", "7"],
        &["verify", "--n", "4", "--inject-fault", "bogus"],
        &["frobnicate"],
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
    let cyclic = scratch("cyclic.json", r#"{"n":2,"relations":[[0,1],[1,0]]}"#);
    let out = run(&["koszul", "--poset", cyclic.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}
