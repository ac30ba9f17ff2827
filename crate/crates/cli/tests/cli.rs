use std::path::PathBuf;
use std::process::{Command, Output};

fn recdet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_recdet")).args(args).output().expect("binary runs")
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn pinned_sweep_matches_golden_report() {
    let conf = golden("pinned.conf");
    let args = ["verify", "--config", conf.to_str().unwrap(), "--format", "json"];
    let first = recdet(&args);
    let second = recdet(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let expected = std::fs::read_to_string(golden("pinned.json")).unwrap();
    assert_eq!(stdout(&first), expected);
}

#[test]
fn report_schema() {
    let conf = golden("pinned.conf");
    let out = recdet(&["verify", "--config", conf.to_str().unwrap(), "--format", "json"]);
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["header"]["seed"], 7);
    for key in ["total", "equal", "unequal", "errors", "thm4_variant_supported", "corollary5_constant_supported"] {
        assert!(!report["summary"][key].is_null(), "{key}");
    }
    let verdict = &report["verdicts"][0];
    for key in ["theorem", "family", "params", "engine", "equal", "lhs", "rhs", "difference", "fallback_used"] {
        assert!(verdict.get(key).is_some(), "{key}");
    }
    for key in ["s", "k", "n", "m", "d", "d_seq", "e_seq", "x"] {
        assert!(verdict["params"].get(key).is_some(), "{key}");
    }
}

#[test]
fn different_seed_changes_random_profiles() {
    let conf = golden("pinned.conf");
    let a = recdet(&["verify", "--config", conf.to_str().unwrap(), "--format", "json"]);
    let b = recdet(&["verify", "--config", conf.to_str().unwrap(), "--format", "json", "--seed", "8"]);
    assert_ne!(a.stdout, b.stdout);
}

#[test]
fn exit_codes() {
    let conf = golden("pinned.conf");
    let conf = conf.to_str().unwrap();
    assert_eq!(recdet(&["verify", "--config", conf]).status.code(), Some(0));
    let corrupted = recdet(&["verify", "--config", conf, "--corrupt-rhs"]);
    assert_eq!(corrupted.status.code(), Some(1));
    assert!(stdout(&corrupted).contains("unequal"));
    assert_eq!(recdet(&["verify", "--m", "0"]).status.code(), Some(2));
    assert_eq!(recdet(&["verify", "--bogus"]).status.code(), Some(2));
    assert_eq!(recdet(&["verify", "--config", "/nonexistent.conf"]).status.code(), Some(2));
    assert_eq!(recdet(&["seq", "nope", "0..3"]).status.code(), Some(2));
}

#[test]
fn seq_command() {
    let out = recdet(&["seq", "fib", "-2..4"]);
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<String> = stdout(&out).lines().map(str::to_string).collect();
    assert_eq!(lines.first().map(String::as_str), Some("-2: -x"));
    assert_eq!(lines.len(), 7);
    assert_eq!(stdout(&recdet(&["seq", "2,1,0;1,0,1", "0..2"])), "0: 2\n1: x\n2: x^2 + 2\n");
    assert_eq!(stdout(&recdet(&["seq", "fib", "0..0"])), "0: 0\n");
}

#[test]
fn det_command() {
    let dir = std::env::temp_dir().join(format!("recdet-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("m.txt");
    std::fs::write(&file, "0 | 1\n1 | x\n").unwrap();
    let out = recdet(&["det", "--matrix-file", file.to_str().unwrap()]);
    assert_eq!(stdout(&out), "-1\n");
    std::fs::write(&file, "1 | 0 | 0\n0 | 1 | 0\n0 | 0 | 1\n").unwrap();
    assert_eq!(stdout(&recdet(&["det", "--matrix-file", file.to_str().unwrap(), "--engine", "gauss"])), "1\n");
    std::fs::write(&file, "1 | x\n").unwrap();
    assert_eq!(recdet(&["det", "--matrix-file", file.to_str().unwrap()]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();

    let out = stdout(&recdet(&["det", "--theorem", "2", "--family", "fib", "--s", "0", "--k", "1", "--n", "0", "--m", "1", "--engine", "all"]));
    assert_eq!(out.lines().filter(|l| l.ends_with(": -1")).count(), 4);
    assert!(out.contains("consistent: true"));
    let out = stdout(&recdet(&["det", "--theorem", "3.5", "--family", "fib", "--n", "1", "--m", "1", "--x", "1"]));
    assert_eq!(out, "-1/2\n");
}

#[test]
fn degenerate_window_is_reported_not_fatal() {
    let out = recdet(&["verify", "--theorem", "3.5", "--family", "fib", "--n", "0", "--s", "0", "--k", "1", "--m", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["verdicts"][0]["status"], "error");
    assert_eq!(report["summary"]["errors"], 1);
}
