//! End-to-end tests of the `diag2trid` binary: output schemas, exit-code
//! taxonomy, and flag determinism.

use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_diag2trid"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

/// An equispaced spectrum written to a file, one value per line.
fn spectrum_file(dir: &Path, n: usize) -> std::path::PathBuf {
    let path = dir.join(format!("lambdas_{n}.txt"));
    let text: String = (0..n)
        .map(|i| format!("{}\n", -10.0 + 20.0 * i as f64 / (n - 1) as f64))
        .collect();
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn construct_json_matches_the_known_n3_matrix() {
    let out = run(&["construct", "--algo", "diag2trid", "--lambdas", "-1,0,1"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["n"], 3);
    assert_eq!(v["algo"], "diag2trid");
    let diag: Vec<f64> = serde_json::from_value(v["diag"].clone()).unwrap();
    let offdiag: Vec<f64> = serde_json::from_value(v["offdiag"].clone()).unwrap();
    for a in diag {
        assert!(a.abs() <= 1e-10);
    }
    assert!((offdiag[0].abs() - 0.816_496_580_927_726).abs() <= 1e-10);
    assert!((offdiag[1].abs() - 0.577_350_269_189_625_7).abs() <= 1e-10);
    assert!(v["lambdas_hash"].as_str().unwrap().len() == 16);
}

#[test]
fn construct_naive_scalar() {
    let out = run(&["construct", "--algo", "naive", "--lambdas", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["n"], 1);
    assert_eq!(v["diag"][0], 5.0);
    assert_eq!(v["offdiag"].as_array().unwrap().len(), 0);
}

#[test]
fn construct_rejects_non_increasing_input() {
    let out = run(&["construct", "--algo", "naive", "--lambdas", "1,1"]);
    assert_eq!(out.status.code(), Some(2));
    let msg = stderr(&out);
    assert!(msg.contains("strictly increasing"), "{msg}");
    assert!(msg.contains("index 1"), "{msg}");
}

#[test]
fn construct_reports_breakdown_with_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let lambdas = spectrum_file(dir.path(), 48);
    let out = run(&[
        "construct",
        "--algo",
        "naive",
        "--lambdas",
        lambdas.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(3), "stderr: {}", stderr(&out));
    assert!(stderr(&out).contains("ν ="), "message names the step: {}", stderr(&out));
}

#[test]
fn construct_csv_format_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let dest = dir.path().join("t.csv");
    let out = run(&[
        "construct",
        "--algo",
        "naive",
        "--lambdas",
        "-1, 0, 1",
        "--format",
        "csv",
        "--out",
        dest.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = std::fs::read_to_string(&dest).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("i,diag,offdiag"));
    assert_eq!(lines.clone().count(), 3);
    let row2: Vec<&str> = lines.nth(1).unwrap().split(',').collect();
    assert_eq!(row2[0], "2");
    let b2: f64 = row2[2].parse().unwrap();
    assert!((b2 - (2.0_f64 / 3.0).sqrt()).abs() <= 1e-12);
}

#[test]
fn construct_reads_lambdas_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let lambdas = spectrum_file(dir.path(), 5);
    let out = run(&[
        "construct",
        "--algo",
        "diag2trid",
        "--lambdas",
        lambdas.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["n"], 5);
}

#[test]
fn verify_passes_on_small_spectra() {
    for lambdas in ["-1,0,1", "5"] {
        let out = run(&["verify", "--lambdas", lambdas]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "λ = {lambdas}: {}\n{}",
            stdout(&out),
            stderr(&out)
        );
        assert!(stdout(&out).contains("RESULT: ok"));
    }
}

#[test]
fn verify_reports_divergence_at_n40_with_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let lambdas = spectrum_file(dir.path(), 40);
    let out = run(&["verify", "--lambdas", lambdas.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3), "stdout: {}", stdout(&out));
    let text = stdout(&out);
    // The diag2trid-side checks still print; the comparator shows the
    // naive route drifting.
    assert!(text.contains("first_row_uniform_residual"), "{text}");
    assert!(
        text.contains("NOT equal") || text.contains("broke down"),
        "{text}"
    );
}

#[test]
fn bench_produces_expected_row_count_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let out_a = dir.path().join("a.csv");
    let out_b = dir.path().join("b.csv");
    for (dest, _) in [(&out_a, 0), (&out_b, 1)] {
        let out = run(&[
            "bench",
            "--n-min",
            "3",
            "--n-max",
            "3",
            "--realizations",
            "1",
            "--seed",
            "7",
            "--out",
            dest.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    }
    let a = std::fs::read_to_string(&out_a).unwrap();
    let b = std::fs::read_to_string(&out_b).unwrap();
    assert_eq!(a, b);
    let lines: Vec<&str> = a.lines().collect();
    assert_eq!(lines.len(), 3, "header + one row per algorithm:\n{a}");
    assert_eq!(
        lines[0],
        "n,algorithm,mean_worst_error,max_worst_error,failures,realizations,seed"
    );
    assert!(lines[1].starts_with("3,naive,"));
    assert!(lines[2].starts_with("3,diag2trid,"));
}

#[test]
fn bench_rejects_bad_flags_with_exit_2() {
    let out = run(&["bench", "--n-min", "10", "--n-max", "5"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["bench", "--algos", "qr"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unknown algorithm"));
}

#[test]
fn bench_echoes_config_next_to_the_csv() {
    let dir = tempfile::tempdir().unwrap();
    let dest = dir.path().join("run.csv");
    let out = run(&[
        "bench",
        "--n-min",
        "2",
        "--n-max",
        "4",
        "--step",
        "2",
        "--realizations",
        "2",
        "--seed",
        "5",
        "--algos",
        "diag2trid",
        "--out",
        dest.to_str().unwrap(),
        "--echo-config",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let cfg_path = dir.path().join("run.config.json");
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(cfg_path).unwrap()).unwrap();
    assert_eq!(v["seed"], 5);
    assert_eq!(v["realizations"], 2);
    assert_eq!(v["n_values"], serde_json::json!([2, 4]));
    assert_eq!(v["algorithms"], serde_json::json!(["diag2trid"]));
}

#[test]
fn help_exits_zero() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("construct"));
}

#[test]
fn missing_subcommand_exits_two() {
    let out = run(&[]);
    assert_eq!(out.status.code(), Some(2));
}
