//! Acceptance suite: one test per criterion, each with its time limit.

use std::process::Command;
use std::time::{Duration, Instant};

use smt_cli::suite;

const SEED: u64 = 1;

fn limit(id: u8) -> Duration {
    Duration::from_secs(match id {
        1 | 2 | 3 | 6 | 9 => 60,
        4 | 5 | 10 | 11 => 120,
        7 | 8 => 180,
        _ => 300,
    })
}

fn criterion(id: u8) {
    let start = Instant::now();
    let outcome = suite::run(id, SEED);
    let elapsed = start.elapsed();
    let in_time = elapsed < limit(id);
    let status = if outcome.passed && in_time { "PASS" } else { "FAIL" };
    println!("criterion {id:>2} {status} {} ({:.2}s): {}", outcome.title, elapsed.as_secs_f64(), outcome.detail);
    assert!(outcome.passed, "{}", outcome.line());
    assert!(in_time, "criterion {id} took {elapsed:?}, limit {:?}", limit(id));
}

#[test]
fn criterion_01() {
    criterion(1);
}

#[test]
fn criterion_02() {
    criterion(2);
}

#[test]
fn criterion_03() {
    criterion(3);
}

#[test]
fn criterion_04() {
    criterion(4);
}

#[test]
fn criterion_05() {
    criterion(5);
}

#[test]
fn criterion_06() {
    criterion(6);
}

#[test]
fn criterion_07() {
    criterion(7);
}

#[test]
fn criterion_08() {
    criterion(8);
}

#[test]
fn criterion_09() {
    criterion(9);
}

#[test]
fn criterion_10() {
    criterion(10);
}

#[test]
fn criterion_11() {
    criterion(11);
}

/// Two separate processes running the whole suite print identical reports.
#[test]
fn criterion_12() {
    let start = Instant::now();
    let report = || {
        let out = Command::new(env!("CARGO_BIN_EXE_smt"))
            .args(["check", "--suite", "all", "--seed", &SEED.to_string(), "--format", "text"])
            .output()
            .expect("smt runs");
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
        out.stdout
    };
    let (a, b) = (report(), report());
    let passed = a == b;
    println!(
        "criterion 12 {} determinism ({:.2}s): two runs of check --suite all, {} bytes",
        if passed { "PASS" } else { "FAIL" },
        start.elapsed().as_secs_f64(),
        a.len()
    );
    assert!(passed, "reports differ");
}
