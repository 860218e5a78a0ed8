//! End-to-end checks of the installed binary: output determinism, JSON
//! round-trips, file output, and exit codes.

use std::process::{Command, Output};

fn divsum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_divsum"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn sum_all_is_byte_deterministic() {
    let args = ["sum", "--p", "1", "--q", "1", "--format", "json"];
    let first = divsum(&args);
    let second = divsum(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    assert!(first.stderr.is_empty());
}

#[test]
fn json_report_parses_and_round_trips() {
    let out = divsum(&[
        "sum", "--p", "1", "--q", "2", "--levels", "10", "--format", "json",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let report: divsum::report::Report = serde_json::from_str(&text).unwrap();
    assert_eq!(report.schema_version, divsum::report::SCHEMA_VERSION);
    let reserialized = report.render(divsum::report::OutputFormat::Json);
    let reparsed: divsum::report::Report = serde_json::from_str(&reserialized).unwrap();
    assert_eq!(reparsed, report);
    // The odd-factorial closure value rides along.
    let cf = report.methods.iter().find(|m| m.method == "cf").unwrap();
    assert!((cf.value - 0.65568).abs() < 1e-4);
}

#[test]
fn repro_mismatches_do_not_fail_the_command() {
    // s19 compares against a reference table with a known slip: the command
    // must flag the mismatch in the report yet exit zero.
    let out = divsum(&["repro", "s19", "--format", "json"]);
    assert!(out.status.success());
    let report: divsum::report::Report = serde_json::from_slice(&out.stdout).unwrap();
    assert!(report.mismatch);
    assert!(report.comparisons.iter().any(|c| !c.matched));
}

#[test]
fn repro_text_output_carries_verdict_lines() {
    let out = divsum(&["repro", "s22"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("[match   ] convergent 9: 300/501 vs 300/501"));
    assert!(text.contains("MISMATCH"));
}

#[test]
fn report_writes_to_a_file() {
    let dir = std::env::temp_dir().join("divsum-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.csv");
    let out = divsum(&[
        "table",
        "convergents",
        "--p",
        "1",
        "--q",
        "1",
        "--levels",
        "10",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.starts_with("record,label,value,extra"));
    assert!(written.contains("300/501"));
    std::fs::remove_file(&path).ok();
}

#[test]
fn errors_exit_nonzero_with_one_line_diagnostics() {
    let out = divsum(&["sum", "--method", "cf"]);
    assert!(!out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.lines().count(), 1);
    assert!(err.starts_with("divsum: "));

    let out = divsum(&["sum", "--p", "0", "--q", "1"]);
    assert!(!out.status.success());
    assert!(String::from_utf8(out.stderr).unwrap().contains("series"));

    let out = divsum(&["repro", "s99"]);
    assert!(!out.status.success());
}
