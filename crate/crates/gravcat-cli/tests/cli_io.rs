//! End-to-end tests of the `gravcat` binary: flag parsing, output formats,
//! exit codes, and byte-level determinism of emitted files.

// Frozen fixtures keep all 17 digits exactly as emitted.
#![allow(clippy::excessive_precision)]

use std::path::PathBuf;
use std::process::{Command, Output};

fn gravcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gravcat"))
        .args(args)
        .output()
        .expect("binary must spawn")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout must be UTF-8")
}

fn scratch_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("gravcat-cli-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn value_of<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|line| line.strip_prefix(&format!("{key} = ")))
        .unwrap_or_else(|| panic!("missing `{key}` in:\n{text}"))
}

#[test]
fn point_prints_the_reference_values() {
    let out = gravcat(&[
        "point", "--omega", "0.05", "--delta", "0.05", "--B", "0.5", "--b", "0.5", "--T", "0.5",
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);

    let z: f64 = value_of(&text, "Z").parse().unwrap();
    assert!((z - 6.4471112281657978).abs() < 1e-14);
    let lqu: f64 = value_of(&text, "lqu_exact").parse().unwrap();
    assert!((lqu - 0.0012451219820958093).abs() < 1e-14);
    let paper: f64 = value_of(&text, "lqu_paper").parse().unwrap();
    assert!((paper - 0.59747715059922113).abs() < 1e-14);
    assert_eq!(value_of(&text, "branch_exact"), "W1");
    let conc: f64 = value_of(&text, "concurrence").parse().unwrap();
    assert_eq!(conc, 0.0);
    assert!(!text.contains("oracle_min"));
}

#[test]
fn point_supports_zero_temperature_and_the_oracle() {
    let out = gravcat(&["point", "--T", "0", "--oracle"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert_eq!(value_of(&text, "Z"), "inf");
    let lqu: f64 = value_of(&text, "lqu_exact").parse().unwrap();
    let oracle: f64 = value_of(&text, "oracle_min").parse().unwrap();
    assert!((lqu - oracle).abs() < 2e-6);
    let purity: f64 = value_of(&text, "purity").parse().unwrap();
    assert!((purity - 1.0).abs() < 1e-12);
}

#[test]
fn point_mode_selects_the_printed_variant() {
    let exact = stdout_of(&gravcat(&["point", "--mode", "exact"]));
    assert!(exact.contains("lqu_exact = "));
    assert!(!exact.contains("lqu_paper"));

    let paper = stdout_of(&gravcat(&["point", "--mode", "paper"]));
    assert!(paper.contains("lqu_paper = "));
    assert!(!paper.contains("lqu_exact"));
    assert!(!paper.contains("w1"));

    let both = stdout_of(&gravcat(&["point"]));
    assert!(both.contains("lqu_exact = "));
    assert!(both.contains("lqu_paper = "));
}

#[test]
fn sweep_csv_is_identical_across_worker_counts() {
    let dir = scratch_dir("sweep");
    let serial = dir.join("serial.csv");
    let parallel = dir.join("parallel.csv");
    let common = [
        "sweep", "--var", "b", "--from", "-2", "--to", "2", "--steps", "11", "--B", "0.5",
        "--T", "0.5", "--omega", "0.05", "--delta", "0.05",
    ];

    let mut args: Vec<&str> = common.to_vec();
    let serial_str = serial.to_str().unwrap();
    args.extend(["--out", serial_str, "--workers", "1"]);
    assert!(gravcat(&args).status.success());

    let mut args: Vec<&str> = common.to_vec();
    let parallel_str = parallel.to_str().unwrap();
    args.extend(["--out", parallel_str, "--workers", "4"]);
    assert!(gravcat(&args).status.success());

    let serial_bytes = std::fs::read(&serial).unwrap();
    let parallel_bytes = std::fs::read(&parallel).unwrap();
    assert_eq!(serial_bytes, parallel_bytes);

    let text = String::from_utf8(serial_bytes).unwrap();
    assert!(!text.contains('\r'));
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "omega,delta,B,b,T,Z,lqu_exact,lqu_paper,branch_exact,w1,w3,concurrence,oracle_min,purity"
    );
    assert_eq!(lines.count(), 11);

    // Without --oracle the oracle cell is empty; every float round-trips.
    let first = text.lines().nth(1).unwrap();
    let cells: Vec<&str> = first.split(',').collect();
    assert_eq!(cells.len(), 14);
    assert_eq!(cells[12], "");
    let b: f64 = cells[3].parse().unwrap();
    assert_eq!(b, -2.0);

    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn sweep_without_out_writes_csv_to_stdout() {
    let out = gravcat(&[
        "sweep", "--var", "T", "--from", "0.1", "--to", "1", "--steps", "3",
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.starts_with("omega,delta,B,b,T,Z,"));
    assert_eq!(text.lines().count(), 4);
}

#[test]
fn sweep_with_oracle_fills_the_column() {
    let out = gravcat(&[
        "sweep", "--var", "T", "--from", "0.2", "--to", "1", "--steps", "3", "--oracle",
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    for line in text.lines().skip(1) {
        let cells: Vec<&str> = line.split(',').collect();
        let lqu: f64 = cells[6].parse().unwrap();
        let oracle: f64 = cells[12].parse().unwrap();
        assert!((lqu - oracle).abs() < 2e-6);
    }
}

#[test]
fn usage_errors_exit_with_code_2() {
    let cases: Vec<Vec<&str>> = vec![
        vec!["frobnicate"],
        vec!["sweep", "--var", "q", "--from", "0", "--to", "1", "--steps", "5"],
        vec!["sweep", "--var", "b", "--from", "0", "--to", "1", "--steps", "1"],
        vec!["sweep", "--var", "b", "--from", "2", "--to", "-2", "--steps", "5"],
        vec!["sweep", "--var", "T", "--from", "-1", "--to", "1", "--steps", "5"],
        vec!["figure", "--name", "fig9z"],
        vec!["point", "--omega", "not-a-number"],
    ];
    for args in cases {
        let out = gravcat(&args);
        assert_eq!(
            out.status.code(),
            Some(2),
            "args {args:?} should be a usage error, stderr: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
}

#[test]
fn variable_names_are_case_sensitive() {
    // Sweeping B over a range that would be invalid for T proves the
    // uppercase flag routed to the uniform field.
    let out = gravcat(&[
        "sweep", "--var", "B", "--from", "-1", "--to", "1", "--steps", "3",
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let cells: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    let uniform: f64 = cells[2].parse().unwrap();
    let imbalance: f64 = cells[3].parse().unwrap();
    assert_eq!(uniform, -1.0);
    assert_eq!(imbalance, 0.5);
}

#[test]
fn figure_writes_curve_csvs_and_a_plot_script() {
    let dir = scratch_dir("figure");
    let dir_str = dir.to_str().unwrap();
    let args = [
        "figure", "--name", "fig3a", "--out-dir", dir_str, "--steps", "9", "--curves", "0.5,1",
    ];
    let out = gravcat(&args);
    assert!(out.status.success());
    let stdout = stdout_of(&out);
    let listed: Vec<&str> = stdout
        .lines()
        .map(|line| line.trim().rsplit('/').next().unwrap())
        .collect();
    assert_eq!(listed, vec!["fig3a_B_0.5.csv", "fig3a_B_1.csv", "fig3a.plt"]);

    let script = std::fs::read_to_string(dir.join("fig3a.plt")).unwrap();
    assert!(script.contains("fig3a_B_0.5.csv"));
    assert!(script.contains("fig3a_B_1.csv"));
    assert!(script.contains("using 4:7"));
    assert!(script.contains("using 4:8"));

    let before = std::fs::read(dir.join("fig3a_B_1.csv")).unwrap();
    assert!(gravcat(&args).status.success());
    let after = std::fs::read(dir.join("fig3a_B_1.csv")).unwrap();
    assert_eq!(before, after);

    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn selfcheck_exits_zero_and_repeats_byte_identically() {
    let first = gravcat(&["selfcheck", "--workers", "2"]);
    assert!(
        first.status.success(),
        "selfcheck failed:\n{}",
        stdout_of(&first)
    );
    let second = gravcat(&["selfcheck", "--workers", "2"]);
    assert!(second.status.success());
    assert_eq!(first.stdout, second.stdout);

    let text = stdout_of(&first);
    assert!(text.contains("8/8 blocking checks passed"));
    assert_eq!(text.lines().count(), 10);
}
