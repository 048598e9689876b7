//! Behavior of the qschur binary: caching, exit codes, verify output.

use std::process::{Command, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_qschur"))
}

#[test]
fn table_cache_hit_on_second_run() {
    let dir = tempfile::tempdir().unwrap();
    let run = || {
        bin()
            .args(["table", "--n", "2", "--r", "1"])
            .env("QSCHUR_CACHE", dir.path())
            .output()
            .unwrap()
    };
    let first = run();
    assert!(first.status.success());
    let path = dir.path().join("table-n2-r1.json");
    let bytes = std::fs::read(&path).unwrap();
    let second = run();
    assert!(second.status.success());
    assert!(String::from_utf8_lossy(&second.stdout).contains("cache hit"));
    assert_eq!(std::fs::read(&path).unwrap(), bytes);
}

#[test]
fn table_budget_error_is_nonzero_exit() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin()
        .args(["table", "--n", "2", "--r", "40"])
        .env("QSCHUR_CACHE", dir.path())
        .stderr(Stdio::piped())
        .output()
        .unwrap();
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}

#[test]
fn verify_unknown_suite_fails() {
    let out = bin().args(["verify", "nope"]).output().unwrap();
    assert!(!out.status.success());
}

#[test]
fn verify_binomials_passes() {
    let out = bin()
        .args(["verify", "binomials", "--ell", "3"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.lines().all(|l| l.starts_with("ok")));
}

#[test]
fn map_output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let run = || {
        bin()
            .args(["map", "c", "--n", "2", "--r", "1", "--ell", "2"])
            .env("QSCHUR_CACHE", dir.path())
            .output()
            .unwrap()
    };
    let a = run();
    let b = run();
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(String::from_utf8_lossy(&a.stdout).contains("c_certificates"));
}
