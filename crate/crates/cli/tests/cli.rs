//! End-to-end CLI checks: determinism, golden dumps, exit codes, caching.

use assert_cmd::Command;
use predicates::prelude::*;

fn atlas() -> Command {
    Command::cargo_bin("atlas").expect("binary builds")
}

#[test]
fn dump_matrix_is_the_reference_layout() {
    atlas()
        .args(["dump", "matrix", "--m", "6"])
        .assert()
        .success()
        .stdout(predicate::str::contains("[a1, a3, a5,  0,  0]"))
        .stdout(predicate::str::contains("[a0, a2, a4, a6,  0]"))
        .stdout(predicate::str::contains("[ 0,  0, a1, a3, a5]"));
}

#[test]
fn dump_dsystem_smallest_case() {
    atlas()
        .args(["dump", "dsystem", "--m", "2"])
        .assert()
        .success()
        .stdout("D(2,0) = a1\n");
}

#[test]
fn dump_dsystem_shows_the_cofactor_polynomial() {
    atlas()
        .args(["dump", "dsystem", "--m", "4"])
        .assert()
        .success()
        .stdout(predicate::str::contains("D(4,0) = a1*a2*a3 - a1^2*a4 - a0*a3^2"));
}

#[test]
fn dump_odd_matrix() {
    atlas()
        .args(["dump", "odd", "--alpha", "4"])
        .assert()
        .success()
        .stdout(predicate::str::contains("mu"))
        .stdout(predicate::str::contains("-lambda"));
}

#[test]
fn unknown_dump_object_is_a_usage_error() {
    atlas().args(["dump", "nonsense"]).assert().code(2);
}

#[test]
fn node_cap_is_enforced() {
    atlas().args(["enum", "--i", "9"]).assert().code(2);
}

#[test]
fn enum_is_byte_deterministic() {
    let run = || {
        atlas()
            .args(["enum", "--i", "4", "--format", "json", "--seed", "42", "--no-cache"])
            .output()
            .expect("runs")
    };
    let a = run();
    let b = run();
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_all_small_is_green_and_deterministic() {
    let run = || {
        atlas()
            .args(["verify", "--suite", "identity28", "--i-max", "4", "--format", "json", "--seed", "7"])
            .output()
            .expect("runs")
    };
    let a = run();
    assert!(a.status.success());
    let b = run();
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn series_below_minimal_level_vanishes() {
    atlas()
        .args(["series", "--label", "C221", "--m", "3"])
        .assert()
        .success()
        .stdout(predicate::str::contains("\"vanishes\": true"));
}

#[test]
fn series_degree_formula() {
    // Coefficient 4, minimal level 6: degree 4 * binom(2, 1) = 8 at m = 7.
    atlas()
        .args(["series", "--label", "C515", "--m", "7"])
        .assert()
        .success()
        .stdout(predicate::str::contains("\"degree\": \"8\""))
        .stdout(predicate::str::contains("-c1^4"));
}

#[test]
fn galois_pair_labels_resolve() {
    let a = atlas()
        .args(["series", "--label", "C618a", "--m", "7"])
        .output()
        .expect("runs");
    let b = atlas()
        .args(["series", "--label", "C618b", "--m", "7"])
        .output()
        .expect("runs");
    assert!(a.status.success() && b.status.success());
    assert_ne!(a.stdout, b.stdout, "the conjugate pair has distinct weights");
}

#[test]
fn cache_roundtrip_preserves_output() {
    let dir = tempdir();
    let args = |cache: &str| {
        vec![
            "enum".to_string(),
            "--i".into(),
            "5".into(),
            "--format".into(),
            "json".into(),
            "--cache-dir".into(),
            cache.to_string(),
        ]
    };
    let first = atlas().args(args(dir.to_str().unwrap())).output().expect("runs");
    assert!(first.status.success());
    let entries: Vec<_> = std::fs::read_dir(&dir).unwrap().collect();
    assert!(!entries.is_empty(), "cache files were written");
    let second = atlas().args(args(dir.to_str().unwrap())).output().expect("runs");
    assert_eq!(first.stdout, second.stdout);
    std::fs::remove_dir_all(&dir).ok();
}

fn tempdir() -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("atlas-cache-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn enum_full_level_marks_records_verified() {
    atlas()
        .args(["enum", "--i", "3", "--format", "json", "--no-cache", "--level", "full"])
        .assert()
        .success()
        .stdout(predicate::str::contains("membership:verified"))
        .stdout(predicate::str::contains("jordan:verified"));
}

#[test]
fn enum_renders_series_degrees_at_m() {
    atlas()
        .args(["enum", "--i", "5", "--j", "1", "--m", "7", "--no-cache", "--format", "csv"])
        .assert()
        .success()
        .stdout(predicate::str::contains("degree_at_7"))
        .stdout(predicate::str::contains("5=3+2,\"((())(()))\",\"(0,1)\",Q,1,degree:conjectural|multiplicity:conjectural,8"));
}

#[test]
fn enum_over_budget_is_partial_and_marked() {
    atlas()
        .args(["enum", "--i", "5", "--max-records", "3", "--no-cache"])
        .assert()
        .code(1)
        .stdout(predicate::str::contains("TRUNCATED"));
}
