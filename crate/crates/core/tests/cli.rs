//! End-to-end tests of the `sinc-expdecay` binary: exit codes, output
//! files, and stream formats for every subcommand.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sinc-expdecay"))
}

fn temp_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("sinc-cli-{}-{}", tag, std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr_str(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn help_exits_zero() {
    let out = bin().arg("--help").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_str(&out);
    for sub in ["run", "domain", "verify", "plotscript"] {
        assert!(text.contains(sub), "help should list `{sub}`");
    }
}

#[test]
fn usage_errors_exit_two() {
    let cases: Vec<Vec<&str>> = vec![
        vec!["run", "--example", "f1", "--n-min", "0", "--out", "-"],
        vec![
            "run",
            "--example",
            "f1",
            "--n-min",
            "50",
            "--n-max",
            "10",
            "--out",
            "-",
        ],
        vec!["run", "--example", "f9", "--out", "-"],
        vec!["domain", "--map", "psi", "--d", "2.0", "--out", "-"],
        vec!["domain", "--map", "psi", "--d", "0.0", "--out", "-"],
        vec![
            "domain", "--map", "psi", "--x-min", "5", "--x-max", "-5", "--out", "-",
        ],
        vec!["run"],
    ];
    for args in cases {
        let out = bin().args(&args).output().unwrap();
        assert_eq!(
            out.status.code(),
            Some(2),
            "expected usage error for {:?}, stderr: {}",
            args,
            stderr_str(&out)
        );
    }
}

#[test]
fn domain_rejects_map_both() {
    // The boundary trace is a single curve; "both" is not a valid choice here.
    let out = bin()
        .args(["domain", "--map", "both", "--d", "1.0", "--out", "-"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn run_both_maps_writes_two_files() {
    let dir = temp_dir("run-both");
    let base = dir.join("sweep");
    let out = bin()
        .args([
            "run",
            "--example",
            "f3",
            "--n-min",
            "2",
            "--n-max",
            "8",
            "--n-step",
            "2",
            "--out",
        ])
        .arg(&base)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_str(&out));

    for tag in ["psi", "phi"] {
        let path = dir.join(format!("sweep_{tag}.csv"));
        let text = fs::read_to_string(&path).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("n,h,M,N,observed_error,bound"));
        assert_eq!(lines.count(), 4, "n = 2,4,6,8 for {tag}");
    }
    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn run_single_map_writes_one_file() {
    let dir = temp_dir("run-single");
    let base = dir.join("only");
    let out = bin()
        .args([
            "run",
            "--example",
            "f1",
            "--map",
            "phi",
            "--n-min",
            "4",
            "--n-max",
            "4",
            "--out",
        ])
        .arg(&base)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(dir.join("only_phi.csv").exists());
    assert!(!dir.join("only_psi.csv").exists());
    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn run_stdout_streams_csv_and_keeps_summary_on_stderr() {
    let out = bin()
        .args([
            "run",
            "--example",
            "f2",
            "--map",
            "psi",
            "--n-min",
            "2",
            "--n-max",
            "6",
            "--n-step",
            "2",
            "--out",
            "-",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));

    let text = stdout_str(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,h,M,N,observed_error,bound"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 3);
    for row in &rows {
        let fields: Vec<&str> = row.split(',').collect();
        assert_eq!(fields.len(), 6);
        let observed: f64 = fields[4].parse().unwrap();
        let bound: f64 = fields[5].parse().unwrap();
        assert!(observed.is_finite() && bound.is_finite());
        assert!(observed <= bound);
    }
    // Human-readable summary must not contaminate the CSV stream.
    assert!(!stderr_str(&out).is_empty());
}

#[test]
fn domain_csv_is_conjugate_symmetric() {
    let out = bin()
        .args([
            "domain",
            "--map",
            "phi",
            "--d",
            "1.25",
            "--x-min",
            "-4",
            "--x-max",
            "4",
            "--samples",
            "9",
            "--out",
            "-",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));

    let text = stdout_str(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("x_strip,re_upper,im_upper,re_lower,im_lower")
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 9);

    let first: Vec<f64> = rows[0].split(',').map(|s| s.parse().unwrap()).collect();
    let last: Vec<f64> = rows[8].split(',').map(|s| s.parse().unwrap()).collect();
    assert_eq!(first[0], -4.0);
    assert_eq!(last[0], 4.0);
    for row in &rows {
        let v: Vec<f64> = row.split(',').map(|s| s.parse().unwrap()).collect();
        assert_eq!(v[3], v[1], "lower curve mirrors the upper curve");
        assert_eq!(v[4], -v[2]);
    }
}

#[test]
fn verify_reports_five_passing_checks() {
    let out = bin()
        .args(["verify", "--samples", "500", "--seed", "7"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_str(&out));

    let text = stdout_str(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("check_name,samples,worst_margin,worst_point,passed")
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 5);
    let mut names: Vec<&str> = Vec::new();
    for row in &rows {
        assert!(row.ends_with(",true"), "failing check in: {row}");
        names.push(row.split(',').next().unwrap());
    }
    names.sort_unstable();
    assert_eq!(
        names,
        vec![
            "decay_condition",
            "derivative_numerator",
            "essential_bound",
            "exp_modulus_bound",
            "real_line_bound",
        ]
    );
}

#[test]
fn plotscript_requires_existing_csv() {
    let dir = temp_dir("plot-missing");
    let prefix = dir.join("absent");
    let out = bin()
        .args(["plotscript", "--example", "f1", "--prefix"])
        .arg(&prefix)
        .args(["--out", "-"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(
        stderr_str(&out).contains("absent_psi.csv"),
        "error should name the missing file, got: {}",
        stderr_str(&out)
    );
    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn plotscript_emits_gnuplot_for_generated_data() {
    let dir = temp_dir("plot-ok");
    let prefix = dir.join("data");
    let run = bin()
        .args([
            "run",
            "--example",
            "f1",
            "--n-min",
            "2",
            "--n-max",
            "6",
            "--n-step",
            "2",
            "--out",
        ])
        .arg(&prefix)
        .output()
        .unwrap();
    assert_eq!(run.status.code(), Some(0));

    let out = bin()
        .args(["plotscript", "--example", "f1", "--prefix"])
        .arg(&prefix)
        .args(["--out", "-"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));

    let script = stdout_str(&out);
    assert!(script.contains("set logscale y"));
    assert!(script.contains("data_psi.csv"));
    assert!(script.contains("data_phi.csv"));
    assert!(script.contains("dt 3"), "bound curves should be dotted");
    fs::remove_dir_all(&dir).unwrap();
}
