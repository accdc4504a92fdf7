use std::io::Write;
use std::process::{Command, Output, Stdio};

fn eod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eod")).args(args).output().expect("run eod")
}

fn eod_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_eod"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn eod");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn temp_file(name: &str, contents: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("eod-cli-test-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn find_eod_exit_codes() {
    let yes = eod(&["find-eod", "@C8"]);
    assert_eq!(code(&yes), 0);
    assert!(stdout(&yes).starts_with("EOD n=8 D="));
    let no = eod(&["find-eod", "@C6"]);
    assert_eq!(code(&no), 1);
    assert!(stdout(&no).starts_with("NO-EOD"));
}

#[test]
fn check_eod_yes_and_no() {
    assert_eq!(code(&eod(&["check-eod", "@C8", "0 1 4 5"])), 0);
    let no = eod(&["check-eod", "@C8", "0 1"]);
    assert_eq!(code(&no), 1);
    assert_eq!(stdout(&no).trim(), "no");
}

#[test]
fn reads_edge_list_from_stdin() {
    let out = eod_stdin(&["find-eod", "-"], "3 2\n0 1\n1 2\n");
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "EOD n=3 D={1,2}");
}

#[test]
fn malformed_input_is_exit_2() {
    let out = eod_stdin(&["find-eod", "--format", "edge-list", "-"], "garbage");
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("parse error"));
}

#[test]
fn missing_file_is_exit_2() {
    assert_eq!(code(&eod(&["find-eod", "/nonexistent/graph.txt"])), 2);
}

#[test]
fn product_sizes() {
    let out = eod(&["product", "@P2", "@K3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).lines().next(), Some("6 9"));
}

#[test]
fn enum_count() {
    let out = eod(&["enum-eod", "@C4", "--count"]);
    assert_eq!(stdout(&out).trim(), "count=4");
}

#[test]
fn partition_round_trip_through_files() {
    let found = eod(&["find-amenable", "@P5", "--flavor", "k2"]);
    assert_eq!(code(&found), 0);
    let part = temp_file("p5.part", &stdout(&found));
    let part = part.to_str().unwrap();

    assert_eq!(code(&eod(&["check-amenable", "--flavor", "k2", "@P5", part])), 0);
    let to = eod(&["to-eod", "--flavor", "k2", "@P5", part]);
    assert_eq!(code(&to), 0);
    let cert = stdout(&to);
    assert!(cert.starts_with("EOD n=10 "));

    let back = eod(&["from-eod", "--flavor", "k2", "@P5", cert.trim()]);
    assert_eq!(code(&back), 0);
    assert_eq!(stdout(&back), stdout(&found));
}

#[test]
fn failing_partition_is_exit_1() {
    let part = temp_file("p3.part", "0: 2\n1: 0 1\n");
    let out = eod(&["check-amenable", "--flavor", "k2", "@P3", part.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    let conv = eod(&["to-eod", "--flavor", "k2", "@P3", part.to_str().unwrap()]);
    assert_eq!(code(&conv), 1);
}

#[test]
fn zigzag_commands() {
    let found = eod(&["zigzag", "find", "@C6"]);
    assert_eq!(code(&found), 0);
    assert_eq!(stdout(&found).trim(), "0-1 3-4");
    assert_eq!(code(&eod(&["zigzag", "check", "@C6", "0-1 3-4"])), 0);
    assert_eq!(code(&eod(&["zigzag", "find", "@C5"])), 1);
}

#[test]
fn tree_commands() {
    let rec = eod(&["trees", "recognize", "@spider3", "--r", "3"]);
    assert_eq!(code(&rec), 0);
    assert_eq!(stdout(&rec).trim(), "(leaf 3)");
    assert_eq!(code(&eod(&["trees", "recognize", "@P4", "--r", "3"])), 1);

    let gen = eod(&["trees", "gen", "--r", "3", "--max-order", "12"]);
    assert_eq!(code(&gen), 0);
    assert_eq!(stdout(&gen).lines().count(), 3);

    let trees = eod(&["trees", "enum", "6"]);
    assert_eq!(stdout(&trees).lines().count(), 6);
}

#[test]
fn oracle_commands() {
    let grid = eod(&["oracle", "grid", "4", "9"]);
    assert_eq!(code(&grid), 0);
    assert!(stdout(&grid).starts_with("true"));
    assert_eq!(code(&eod(&["oracle", "grid", "2", "5"])), 2);
    assert_eq!(code(&eod(&["oracle", "cycle", "2"])), 2);
}

#[test]
fn suites_and_fixtures() {
    let list = eod(&["suite", "list"]);
    assert_eq!(stdout(&list).lines().count(), 9);
    let run = eod(&["suite", "ZZ_EQUIV", "--kv"]);
    assert_eq!(code(&run), 0);
    assert!(stdout(&run).contains("status=pass"));
    assert_eq!(code(&eod(&["suite", "NOPE"])), 2);

    assert_eq!(code(&eod(&["fixture", "fig1", "--verify"])), 0);
    assert_eq!(code(&eod(&["fixture", "fig2", "--verify"])), 0);
    assert_eq!(code(&eod(&["fixture", "nope"])), 2);
}

#[test]
fn bad_usage_is_exit_2() {
    assert_eq!(code(&eod(&["find-eod"])), 2);
    assert_eq!(code(&eod(&["no-such-command"])), 2);
}
