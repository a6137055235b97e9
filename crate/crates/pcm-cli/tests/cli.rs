use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use pcm_core::parse_alist;

fn pcm() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pcm"))
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

/// Summary text with the only timing-dependent line removed.
fn without_timings(summary: &str) -> String {
    summary
        .lines()
        .filter(|l| !l.starts_with("wall_time_s="))
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn stats_reports_the_worked_example() {
    let out = pcm()
        .args(["stats", "--input"])
        .arg(fixture("bch_15_7.alist"))
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out), "m=8 n=15 ones=34 rank=8\n");
}

#[test]
fn oracle_reports_the_small_bch_minimum() {
    let out = pcm()
        .args(["oracle", "--input"])
        .arg(fixture("bch_63_57.alist"))
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out), "min_ones=192 m=6 n=63\n");
}

#[test]
fn oracle_writes_a_valid_witness() {
    let dir = tempfile::tempdir().unwrap();
    let witness_path = dir.path().join("witness.alist");
    let out = pcm()
        .args(["oracle", "--input"])
        .arg(fixture("bch_63_51.alist"))
        .arg("--output")
        .arg(&witness_path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let witness = parse_alist(&std::fs::read(&witness_path).unwrap())
        .unwrap()
        .to_matrix();
    let input = parse_alist(&std::fs::read(fixture("bch_63_51.alist")).unwrap())
        .unwrap()
        .to_matrix();
    assert_eq!(witness.ones(), 288);
    assert!(input.same_code(&witness).unwrap());
}

#[test]
fn greedy_sparsify_reaches_the_known_optimum() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("out.alist");
    let out = pcm()
        .args(["sparsify", "--mode", "greedy", "--seed", "11", "--input"])
        .arg(fixture("bch_15_7.alist"))
        .arg("--output")
        .arg(&out_path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let summary = stdout(&out);
    assert!(summary.contains("best_ones=32\n"), "summary:\n{summary}");
    assert!(summary.contains("percent_of_initial=94.1%\n"));
    let result = parse_alist(&std::fs::read(&out_path).unwrap())
        .unwrap()
        .to_matrix();
    let input = parse_alist(&std::fs::read(fixture("bch_15_7.alist")).unwrap())
        .unwrap()
        .to_matrix();
    assert_eq!(result.ones(), 32);
    assert!(input.same_code(&result).unwrap());
}

#[test]
fn replay_with_fixed_seed_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let run = || {
        let out_path = dir.path().join("out.alist");
        let out = pcm()
            .args([
                "sparsify", "--mode", "anneal", "--f0", "0.05", "--p0", "0.01", "--f1", "0.01",
                "--p1", "0.01", "--steps", "150", "--replicas", "3", "--seed", "99", "--input",
            ])
            .arg(fixture("bch_15_7.alist"))
            .arg("--output")
            .arg(&out_path)
            .output()
            .unwrap();
        assert!(out.status.success());
        (std::fs::read(&out_path).unwrap(), without_timings(&stdout(&out)))
    };
    let (alist_a, summary_a) = run();
    let (alist_b, summary_b) = run();
    assert_eq!(alist_a, alist_b);
    assert_eq!(summary_a, summary_b);
}

#[test]
fn traces_are_written_per_replica() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("out.alist");
    let trace_path = dir.path().join("trace.csv");
    let out = pcm()
        .args([
            "sparsify", "--mode", "anneal", "--f0", "0.05", "--p0", "0.01", "--f1", "0.01",
            "--p1", "0.01", "--steps", "50", "--replicas", "2", "--seed", "5", "--input",
        ])
        .arg(fixture("bch_15_7.alist"))
        .arg("--output")
        .arg(&out_path)
        .arg("--trace")
        .arg(&trace_path)
        .output()
        .unwrap();
    assert!(out.status.success());
    for i in 0..2 {
        let path = dir.path().join(format!("trace.r{i}.csv"));
        let text = std::fs::read_to_string(&path).unwrap();
        assert!(pcm_search::trace_from_csv(&text).is_some(), "bad csv: {text}");
    }
}

#[test]
fn check_classifies_words() {
    let dir = tempfile::tempdir().unwrap();
    let words = dir.path().join("words.txt");
    std::fs::write(&words, "000000000000000\n000000100010111\n100000000000000\n").unwrap();
    let out = pcm()
        .args(["check", "--input"])
        .arg(fixture("bch_15_7.alist"))
        .arg("--words")
        .arg(&words)
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("word 0: ok"));
    assert!(text.contains("word 2: fail"));
    assert!(text.contains("checked=3 codewords=2 xor_ops_per_batch=34"));
}

#[test]
fn bench_emits_the_csv_schema() {
    let out = pcm()
        .args(["bench", "--words", "640", "--seed", "3", "--input"])
        .arg(fixture("bch_15_7.alist"))
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("ones,mean_ns_per_word,words"));
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(row[0], "34");
    assert!(row[1].parse::<f64>().unwrap() > 0.0);
    assert_eq!(row[2], "640");
}

#[test]
fn exit_codes_distinguish_failure_classes() {
    // 2: unreadable input
    let out = pcm()
        .args(["stats", "--input", "/nonexistent.alist"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    // 2: malformed alist
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.alist");
    std::fs::write(&bad, "this is not an alist\n").unwrap();
    let out = pcm().args(["stats", "--input"]).arg(&bad).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    // 3: anneal without a temperature configuration
    let out = pcm()
        .args(["sparsify", "--mode", "anneal", "--steps", "10", "--input"])
        .arg(fixture("bch_15_7.alist"))
        .arg("--output")
        .arg(dir.path().join("x.alist"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));

    // 3: heating schedule
    let out = pcm()
        .args([
            "sparsify", "--mode", "anneal", "--t0", "0.5", "--t-final", "2.0", "--steps", "10",
            "--input",
        ])
        .arg(fixture("bch_15_7.alist"))
        .arg("--output")
        .arg(dir.path().join("y.alist"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));

    // 4: oracle beyond its budget (m = 33)
    let out = pcm()
        .args(["oracle", "--input"])
        .arg(fixture("bch_63_30.alist"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
}
