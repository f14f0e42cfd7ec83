//! End-to-end tests of the `recolor` binary: every subcommand, every exit
//! code, driven through real files in a temp directory.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn recolor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_recolor"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn recolor_with_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_recolor"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn write_file(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).expect("write test file");
    path
}

/// A single edge whose endpoints must trade colors; the smallest instance
/// that needs a third, junk color.
const K2_SWAP: &str = r#"{
  "graph": {"n": 2, "edges": [[0, 1]]},
  "lists": [[1, 2, 3], [1, 2, 3]],
  "alpha": [1, 2],
  "beta": [2, 1]
}"#;

/// A four-vertex path: subcubic but not complete multipartite.
const P4_SWAP: &str = r#"{
  "graph": {"n": 4, "edges": [[0, 1], [1, 2], [2, 3]]},
  "lists": [[1, 2, 3, 4], [1, 2, 3, 4], [1, 2, 3, 4], [1, 2, 3, 4]],
  "alpha": [1, 2, 1, 2],
  "beta": [2, 1, 2, 1]
}"#;

#[test]
fn generated_instances_roundtrip_through_plan_and_verify() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("inst.json");
    let plan = dir.path().join("plan.json");

    let out = recolor(&[
        "gen",
        "multipartite",
        "--parts",
        "3,2",
        "--seed",
        "7",
        "--output",
        inst.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "gen failed: {}", stderr(&out));

    let out = recolor(&["check", inst.to_str().unwrap()]);
    assert!(out.status.success(), "check failed: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("vertices: 5"), "{text}");
    assert!(text.contains("complete multipartite: yes, parts [3, 2]"), "{text}");

    let out = recolor(&[
        "plan",
        inst.to_str().unwrap(),
        "--output",
        plan.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "plan failed: {}", stderr(&out));
    assert!(stderr(&out).contains("steps within bound"), "{}", stderr(&out));

    let out = recolor(&[
        "verify",
        inst.to_str().unwrap(),
        plan.to_str().unwrap(),
        "--require-bound",
    ]);
    assert!(out.status.success(), "verify failed: {}", stderr(&out));
    assert!(stdout(&out).contains("plan verifies"), "{}", stdout(&out));
    assert!(stdout(&out).contains("met"), "{}", stdout(&out));
}

#[test]
fn same_seed_generates_identical_bytes() {
    let a = recolor(&["gen", "subcubic", "--n", "6", "--seed", "42"]);
    let b = recolor(&["gen", "subcubic", "--n", "6", "--seed", "42"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn inapplicable_planner_exits_with_unsupported() {
    let dir = tempfile::tempdir().unwrap();
    let inst = write_file(dir.path(), "p4.json", P4_SWAP);

    let out = recolor(&[
        "plan",
        inst.to_str().unwrap(),
        "--planner",
        "multipartite",
    ]);
    assert_eq!(out.status.code(), Some(3), "{}", stderr(&out));
    assert!(stderr(&out).contains("not complete multipartite"), "{}", stderr(&out));

    // The same instance is fine for the subcubic planner.
    let out = recolor(&["plan", inst.to_str().unwrap(), "--planner", "subcubic"]);
    assert!(out.status.success(), "{}", stderr(&out));
}

#[test]
fn malformed_json_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let inst = write_file(dir.path(), "broken.json", "{ this is not json");
    let out = recolor(&["plan", inst.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2), "{}", stderr(&out));
}

#[test]
fn undersized_lists_are_rejected_at_load() {
    let dir = tempfile::tempdir().unwrap();
    let inst = write_file(
        dir.path(),
        "tight.json",
        r#"{"graph": {"n": 2, "edges": [[0, 1]]},
            "lists": [[1, 2], [1, 2]],
            "alpha": [1, 2], "beta": [2, 1]}"#,
    );
    let out = recolor(&["check", inst.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2), "{}", stderr(&out));
    assert!(stderr(&out).contains("degree + 2"), "{}", stderr(&out));
}

#[test]
fn oracle_distance_counts_the_swap() {
    let dir = tempfile::tempdir().unwrap();
    let inst = write_file(dir.path(), "k2.json", K2_SWAP);
    let out = recolor(&["oracle", "distance", inst.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert_eq!(stdout(&out).trim(), "3");
}

#[test]
fn state_budget_env_variable_limits_the_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let inst = write_file(dir.path(), "k2.json", K2_SWAP);

    // The swap instance has six proper colorings; a budget of five is too few.
    let out = recolor_with_env(
        &["oracle", "distance", inst.to_str().unwrap()],
        "RECOLOR_STATE_BUDGET",
        "5",
    );
    assert_eq!(out.status.code(), Some(3), "{}", stderr(&out));
    assert!(stderr(&out).contains("budget"), "{}", stderr(&out));

    let out = recolor_with_env(
        &["oracle", "distance", inst.to_str().unwrap()],
        "RECOLOR_STATE_BUDGET",
        "not-a-number",
    );
    assert_eq!(out.status.code(), Some(2), "{}", stderr(&out));
}

#[test]
fn tampered_plans_fail_verification() {
    let dir = tempfile::tempdir().unwrap();
    let inst = write_file(dir.path(), "k2.json", K2_SWAP);
    let plan = write_file(
        dir.path(),
        "bad_plan.json",
        r#"{"forward": [{"v": 0, "to": 9}], "backward": []}"#,
    );
    let out = recolor(&["verify", inst.to_str().unwrap(), plan.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1), "{}", stderr(&out));
    assert!(stderr(&out).contains("does not verify"), "{}", stderr(&out));
}

#[test]
fn oracle_planner_emits_a_shortest_plan() {
    let dir = tempfile::tempdir().unwrap();
    let inst = write_file(dir.path(), "k2.json", K2_SWAP);
    let plan = dir.path().join("plan.json");

    let out = recolor(&[
        "plan",
        inst.to_str().unwrap(),
        "--planner",
        "oracle",
        "--output",
        plan.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stderr(&out).contains("3 steps"), "{}", stderr(&out));

    let out = recolor(&[
        "verify",
        inst.to_str().unwrap(),
        plan.to_str().unwrap(),
        "--require-bound",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
}

#[test]
fn diameter_reports_the_whole_state_space() {
    let dir = tempfile::tempdir().unwrap();
    let inst = write_file(dir.path(), "k2.json", K2_SWAP);
    let out = recolor(&["oracle", "diameter", inst.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("states: 6"), "{text}");
    assert!(text.contains("connected: yes"), "{text}");
    assert!(text.contains("diameter: 3"), "{text}");
    assert!(text.contains("witness:"), "{text}");
}

#[test]
fn exports_emit_dot_for_both_diagnostic_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let inst = write_file(dir.path(), "k2.json", K2_SWAP);

    let out = recolor(&["export", "shift", inst.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.starts_with("digraph"), "{text}");
    assert!(text.contains("->"), "{text}");

    let out = recolor(&["export", "color", inst.to_str().unwrap(), "--color", "1"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.starts_with("graph"), "{text}");
    assert!(text.contains("--"), "{text}");
}

#[test]
fn zero_part_sizes_are_rejected() {
    let out = recolor(&["gen", "multipartite", "--parts", "3,0,2"]);
    assert_eq!(out.status.code(), Some(2), "{}", stderr(&out));
    assert!(stderr(&out).contains("positive"), "{}", stderr(&out));
}
