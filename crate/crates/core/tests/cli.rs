use std::path::Path;
use std::process::{Command, Output};

use hapcone::bfactor::antiprism::antiprism_hap;
use hapcone::format;
use hapcone::graphs::{antiprism, prism};

fn hapcone(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hapcone"))
        .args(args)
        .output()
        .expect("run hapcone")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn path_str(p: &Path) -> &str {
    p.to_str().expect("utf-8 temp path")
}

#[test]
fn counts_generators() {
    let o = hapcone(&["pm", "--n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "partitions 10\ngenerators 60\n");
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(hapcone(&["pm"]).status.code(), Some(64));
    assert_eq!(hapcone(&["no-such-command"]).status.code(), Some(64));
    assert_eq!(hapcone(&["hilbert", "--n", "4", "--graph", "x"]).status.code(), Some(64));
}

#[test]
fn invalid_input_exits_1() {
    let o = hapcone(&["pm", "--n", "5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
}

#[test]
fn antiprism_instance_has_no_schedule() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("anti8.graph");
    let hap = dir.path().join("anti8.hap");
    std::fs::write(&graph, format::write_graph(&antiprism(8).unwrap())).unwrap();
    std::fs::write(&hap, format::write_hap(&antiprism_hap(8).unwrap().0)).unwrap();

    let o = hapcone(&["schedule", "--graph", path_str(&graph), "--hap", path_str(&hap)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("no schedule"));

    let o = hapcone(&["feasible", "--graph", path_str(&graph), "--hap", path_str(&hap)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("feasible\n"), "the point is fractional");
}

#[test]
fn bfactor_verdict_written_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("cube.graph");
    let out = dir.path().join("verdict.txt");
    std::fs::write(&graph, format::write_graph(&prism(4).unwrap())).unwrap();
    let o = hapcone(&["bfactor", "--graph", path_str(&graph), "--output", path_str(&out)]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("verdict BFactorizable\n"), "{text}");
}

#[test]
fn exhausted_budget_exits_2() {
    let o = hapcone(&["--budget", "0", "hilbert", "--n", "6"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).starts_with("UNDECIDED"));
}

#[test]
fn verify_paper_single_scenario() {
    let o = hapcone(&["verify-paper", "--scenario", "counts"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("RESULT counts PASS\n"));
    assert_eq!(hapcone(&["verify-paper", "--scenario", "nope"]).status.code(), Some(1));
}
