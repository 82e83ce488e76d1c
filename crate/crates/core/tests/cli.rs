#![allow(clippy::excessive_precision)]

use std::f64::consts::PI;
use std::process::{Command, Output};

use diracxp::spectrum::phase_asymptotic;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_diracxp"))
        .args(args)
        .env_remove("DIRACXP_ZEROS")
        .env("SOURCE_DATE_EPOCH", "0")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

#[test]
fn eigenvalue_table_has_one_row_per_level() {
    let out = run(&["eigenvalues", "--u0", "1e-3", "--e-max", "30"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("index,energy,residual,variant"));
    let rows: Vec<&str> = lines.collect();
    let expected = (phase_asymptotic(30.0, 1e-3).unwrap() / PI + 0.5).floor() as usize;
    assert_eq!(rows.len(), expected);
    assert!(rows.iter().all(|r| r.ends_with(",asymptotic")));
    let first: f64 = rows[0].split(',').nth(1).unwrap().parse().unwrap();
    assert!((first - 0.24254012407077571).abs() < 1e-8, "{}", rows[0]);
}

#[test]
fn exact_variant_json() {
    let out = run(&[
        "eigenvalues",
        "--u0",
        "1e-3",
        "--e-max",
        "2",
        "--variant",
        "exact",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let doc = json(&out);
    let records = doc["records"].as_array().unwrap();
    assert_eq!(records.len(), 5);
    let first = records[0]["energy"].as_f64().unwrap();
    assert!((first - 0.24256928116460140).abs() < 1e-8, "{first}");
    assert!(records.iter().all(|r| r["variant"] == "exact"));
}

#[test]
fn cutoff_above_bound_is_a_usage_error() {
    let out = run(&["eigenvalues", "--u0", "9", "--e-max", "30"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("u0 < 8"), "{}", stderr(&out));
}

#[test]
fn unknown_flag_is_a_usage_error() {
    assert_eq!(run(&["eigenvalues", "--bogus"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn output_is_byte_identical_across_runs_and_threads() {
    let args = ["eigenvalues", "--u0", "1e-3", "--e-max", "40"];
    let first = run(&args).stdout;
    assert!(!first.is_empty());
    assert_eq!(run(&args).stdout, first);
    for threads in ["1", "4"] {
        let mut with = vec!["--threads", threads];
        with.extend_from_slice(&args);
        assert_eq!(run(&with).stdout, first, "--threads {threads}");
    }
}

#[test]
fn file_output_writes_a_manifest_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("levels.csv");
    let out = run(&[
        "eigenvalues",
        "--u0",
        "1e-3",
        "--e-max",
        "10",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(std::fs::read_to_string(&path)
        .unwrap()
        .starts_with("index,energy"));
    let sidecar = dir.path().join("levels.csv.manifest.json");
    let manifest: Value = serde_json::from_str(&std::fs::read_to_string(sidecar).unwrap()).unwrap();
    assert_eq!(manifest["command"], "eigenvalues");
    assert_eq!(manifest["schema_version"], "1");
    assert_eq!(manifest["parameters"]["u0"], "0.001");
    assert_eq!(manifest["timestamp"], "1970-01-01T00:00:00Z");
}

#[test]
fn compare_default_grid() {
    let out = run(&["compare"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("energy,n_model,n_smooth,s_fluct,n_table")
    );
    assert_eq!(lines.count(), 10);
}

#[test]
fn compare_with_calibration_reports_rms() {
    let out = run(&["compare", "--calibrate", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let doc = json(&out);
    let derived = &doc["manifest"]["derived"];
    for key in [
        "calibrated_u0",
        "calibration_rms_residual",
        "rms_model_minus_table",
        "rms_formula_minus_table",
    ] {
        assert!(derived[key].is_string(), "missing {key}");
    }
    assert_eq!(doc["summary"]["formula_mismatches"], 0);
    assert!(doc["calibration"]["rms_residual"].is_number());
    assert!(stderr(&out).contains("edge"), "{}", stderr(&out));
}

#[test]
fn compare_missing_table_names_the_path() {
    let out = run(&["compare", "--zeros", "/no/such/zeros.txt"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(
        stderr(&out).contains("/no/such/zeros.txt"),
        "{}",
        stderr(&out)
    );
}

#[test]
fn compare_reads_a_table_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("zeros.txt");
    std::fs::write(
        &path,
        "14.134725141734693\n21.022039638771555\n25.010857580145688\n",
    )
    .unwrap();
    let out = run(&[
        "compare",
        "--zeros",
        path.to_str().unwrap(),
        "--e-grid",
        "10:30:5",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let rows: Vec<String> = stdout(&out).lines().skip(1).map(String::from).collect();
    assert_eq!(rows.len(), 5);
    let n_table: Vec<&str> = rows.iter().map(|r| r.rsplit(',').next().unwrap()).collect();
    assert_eq!(n_table, ["0", "1", "1", "2", "3"]);
}

#[test]
fn malformed_grid_is_a_usage_error() {
    assert_eq!(
        run(&["compare", "--e-grid", "10:5:1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["compare", "--e-grid", "nonsense"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_passes_by_default() {
    let out = run(&["verify"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(
        text.lines()
            .filter(|l| !l.trim().is_empty())
            .all(|l| !l.starts_with("[FAIL]")),
        "{text}"
    );
    assert!(text.contains("[PASS] gamma_reflection"));
}

#[test]
fn verify_fails_under_impossible_tolerance() {
    let out = run(&["verify", "--tolerance", "1e-30"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("[FAIL]"));
}

#[test]
fn verify_json_has_numeric_checks() {
    let out = run(&["verify", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let doc = json(&out);
    assert_eq!(doc["passed"], true);
    let checks = doc["report"]["checks"].as_array().unwrap();
    assert!(checks.len() >= 8);
    for c in checks {
        assert!(c["value"].is_number() && c["threshold"].is_number(), "{c}");
        assert_eq!(c["passed"], true, "{c}");
    }
}

#[test]
fn specfun_examples() {
    let out = run(&["specfun", "loggamma", "--re", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "0+0i");

    let out = run(&["specfun", "theta", "--e", "14.134725141734693"]);
    let theta: f64 = stdout(&out).trim().parse().unwrap();
    assert!((theta + 1.7286702466758382).abs() < 1e-12);

    let out = run(&[
        "specfun",
        "whittaker",
        "--m-im",
        "5",
        "--u",
        "1e-6",
        "--format",
        "json",
    ]);
    let doc = json(&out);
    assert!((doc["abs"].as_f64().unwrap() - 1e-3).abs() < 1e-11);

    let out = run(&["specfun", "loggamma", "--re", "-2"]);
    assert_eq!(out.status.code(), Some(2));
}
