//! End-to-end tests of the geoprod binary: argument handling, exit codes,
//! output formats, and reproducibility.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_geoprod"));
    c.env_remove("GEOPROD_VERTEX_CAP");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is utf8")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is utf8")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn json_line(out: &Output) -> serde_json::Value {
    let text = stdout_of(out);
    let mut lines = text.lines();
    let first = lines.next().expect("at least one record");
    assert_eq!(lines.next(), None, "expected exactly one record");
    serde_json::from_str(first).expect("record is valid json")
}

#[test]
fn param_emits_one_schema_tagged_record() {
    let out = run(&["param", "K3 x C4"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr_of(&out));
    let rec = json_line(&out);
    assert_eq!(rec["schema_version"], 1);
    assert_eq!(rec["instance"], "K3 x C4");
    assert_eq!(rec["order"], 12);
    assert_eq!(rec["g"], 4);
    assert_eq!(rec["h"], 2);
}

#[test]
fn parse_errors_exit_2_with_a_position() {
    let out = run(&["param", "K3 \u{22a0} C4"]);
    assert_eq!(code(&out), 2);
    assert!(
        stderr_of(&out).contains("parse error at byte 2"),
        "stderr: {}",
        stderr_of(&out)
    );

    let out = run(&["param", "Q5"]);
    assert_eq!(code(&out), 2);
    assert!(stderr_of(&out).contains("at byte 0"));
}

#[test]
fn usage_errors_exit_2() {
    let out = run(&["table", "t9"]);
    assert_eq!(code(&out), 2);

    let out = run(&["check", "nonsense"]);
    assert_eq!(code(&out), 2);
    assert!(stderr_of(&out).contains("unknown suite"));

    let out = run(&["param", "P4", "--workers", "0"]);
    assert_eq!(code(&out), 2);

    let out = run(&["param", "K0"]);
    assert_eq!(code(&out), 2);
    assert!(stderr_of(&out).contains("bad parameters"));
}

#[test]
fn repeated_runs_are_byte_identical() {
    let a = run(&["table", "t7"]);
    let b = run(&["table", "t7", "--workers", "3"]);
    assert_eq!(code(&a), 0);
    assert_eq!(code(&b), 0);
    assert_eq!(a.stdout, b.stdout, "worker count changed the output bytes");

    let c = run(&["check", "conditions", "--seed", "11", "--trials", "3"]);
    let d = run(&["check", "conditions", "--seed", "11", "--trials", "3"]);
    assert_eq!(code(&c), 0, "stderr: {}", stderr_of(&c));
    assert_eq!(c.stdout, d.stdout, "same seed produced different bytes");
}

#[test]
fn csv_format_prints_the_flat_subset() {
    let out = run(&["param", "P4", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = stdout_of(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("instance,g,h,ms"));
    assert_eq!(lines.next(), Some("\"P4\",2,2,"));
    assert_eq!(lines.next(), None);
}

#[test]
fn timing_is_off_unless_requested() {
    let plain = run(&["param", "P4"]);
    assert!(!stdout_of(&plain).contains("\"ms\":"));
    let timed = run(&["param", "P4", "--timing"]);
    assert!(stdout_of(&timed).contains("\"ms\":"));
}

#[test]
fn vertex_cap_env_is_enforced() {
    let out = bin()
        .env("GEOPROD_VERTEX_CAP", "10")
        .args(["param", "K4 x C4"])
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
    assert!(stderr_of(&out).contains("vertex cap 10"), "{}", stderr_of(&out));

    let out = bin()
        .env("GEOPROD_VERTEX_CAP", "banana")
        .args(["param", "P2"])
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);

    let out = bin()
        .env("GEOPROD_VERTEX_CAP", "20")
        .args(["param", "K4 x C4"])
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
}

#[test]
fn expired_budget_exits_3_and_marks_the_record() {
    let out = run(&["param", "C5 x C5", "--time-limit", "0"]);
    assert_eq!(code(&out), 3);
    let rec = json_line(&out);
    assert_eq!(rec["g"], "timeout");
    assert!(rec["witness_g"].as_array().is_some_and(|w| !w.is_empty()));
}

#[test]
fn solve_raw_reads_stdin_and_files() {
    let mut child = bin()
        .args(["solve-raw"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"4 3\n0 1\n1 2\n2 3\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(code(&out), 0, "stderr: {}", stderr_of(&out));
    let rec = json_line(&out);
    assert_eq!(rec["instance"], "stdin");
    assert_eq!(rec["g"], 2);

    let path = std::env::temp_dir().join(format!("geoprod-cli-{}.edges", std::process::id()));
    std::fs::write(&path, "3 2\n0 1\n1 2\n").unwrap();
    let arg = path.to_str().unwrap().to_string();
    let out = run(&["solve-raw", &arg]);
    assert_eq!(code(&out), 0);
    let rec = json_line(&out);
    assert_eq!(rec["instance"], format!("file:{arg}"));
    assert_eq!(rec["g"], 2);
    std::fs::remove_file(&path).ok();
}

#[test]
fn malformed_raw_input_exits_2() {
    let mut child = bin()
        .args(["solve-raw"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"0 1\n1 2\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(code(&out), 2);
}

#[test]
fn file_atoms_compose_into_products() {
    let path = std::env::temp_dir().join(format!("geoprod-atom-{}.edges", std::process::id()));
    std::fs::write(&path, "3 2\n0 1\n1 2\n").unwrap();
    let expr = format!("file:{} x P3", path.to_str().unwrap());
    let out = run(&["param", &expr]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr_of(&out));
    let rec = json_line(&out);
    assert_eq!(rec["order"], 9);
    assert_eq!(rec["g"], 4);
    assert_eq!(rec["h"], 4);
    std::fs::remove_file(&path).ok();
}

#[test]
fn boundary_verifies_identities_when_orientable() {
    let out = run(&["boundary", "P3", "C5"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr_of(&out));
    let rec = json_line(&out);
    assert_eq!(rec["holds"], true);
    let checks = rec["checks"].as_object().unwrap();
    for name in ["boundary", "contour", "eccentricity", "periphery", "containments"] {
        assert!(checks.contains_key(name), "missing check {name}");
    }
}

#[test]
fn boundary_flags_pairs_with_no_valid_orientation() {
    // A nine-cycle with a pendant vertex has the larger radius but the
    // smaller diameter against a seven-path, whichever side goes first.
    let path = std::env::temp_dir().join(format!("geoprod-orient-{}.edges", std::process::id()));
    std::fs::write(
        &path,
        "10 10\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 8\n8 0\n0 9\n",
    )
    .unwrap();
    let expr = format!("file:{}", path.to_str().unwrap());
    let out = run(&["boundary", &expr, "P7"]);
    assert_eq!(code(&out), 1, "stderr: {}", stderr_of(&out));
    let rec = json_line(&out);
    assert_eq!(rec["holds"], false);
    assert!(rec["checks"]["orientation"]["failures"][0]
        .as_str()
        .unwrap()
        .contains("no factor ordering"));
    std::fs::remove_file(&path).ok();
}
