//! End-to-end tests of the varreg binary: formats, determinism, exit codes.

use std::path::PathBuf;
use std::process::{Command, Output};

fn varreg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_varreg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn tmpdir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("varreg-cli-tests").join(name);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn boundary_csv_first_row() {
    let out = varreg(&["boundary", "U", "0.5", "--grid", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("param,re,im"));
    let row: Vec<f64> = lines
        .next()
        .unwrap()
        .split(',')
        .map(|v| v.parse().unwrap())
        .collect();
    assert_eq!(row[0], 0.0);
    assert!((row[1] - 2.25).abs() < 1e-14);
    assert_eq!(row[2], 0.0);
}

#[test]
fn boundary_json_round_trip_and_lv_value() {
    let dir = tmpdir("json");
    let path = dir.join("lv.json");
    let out = varreg(&[
        "boundary", "LV", "0.5", "--format", "json", "--grid", "256",
        "--out", path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let parsed: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(parsed["family"], "LV");
    assert_eq!(parsed["r"], 0.5);
    assert_eq!(parsed["approximate"], false);
    let points = parsed["points"].as_array().unwrap();
    assert_eq!(points.len(), 256);
    // param 0 (index n/2) carries Re = log 12
    let row = points[128].as_array().unwrap();
    assert!(row[0].as_f64().unwrap().abs() < 1e-12);
    assert!((row[1].as_f64().unwrap() - 12.0f64.ln()).abs() < 1e-12);

    // full-precision round trip against a fresh in-memory curve
    let spec = varreg::RegionSpec::new(varreg::regions::Family::LV, 0.5).unwrap();
    let curve = varreg::regions::boundary_curve(spec, 256).unwrap();
    for (row, (t, p)) in points
        .iter()
        .zip(curve.polyline.params().iter().zip(curve.polyline.points()))
    {
        let row = row.as_array().unwrap();
        assert_eq!(row[0].as_f64().unwrap(), *t);
        assert_eq!(row[1].as_f64().unwrap(), p.re);
        assert_eq!(row[2].as_f64().unwrap(), p.im);
    }
}

#[test]
fn boundary_v_is_flagged_approximate() {
    let out = varreg(&["boundary", "V", "0.5", "--format", "json", "--grid", "64"]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["approximate"], true);
}

#[test]
fn boundary_svg_shape() {
    let out = varreg(&["boundary", "U", "0.3", "--format", "svg", "--grid", "128"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("viewBox=\"0 0 1 1\""));
    assert_eq!(text.matches("<path").count(), 1);
}

#[test]
fn deterministic_outputs() {
    let a = varreg(&["boundary", "LU", "0.7", "--format", "csv", "--grid", "256"]);
    let b = varreg(&["boundary", "LU", "0.7", "--format", "csv", "--grid", "256"]);
    assert_eq!(a.stdout, b.stdout);

    let a = varreg(&["witness", "lw", "1.0", "2.0", "--seed", "9"]);
    let b = varreg(&["witness", "lw", "1.0", "2.0", "--seed", "9"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn witness_lw_and_exit_codes() {
    let out = varreg(&["witness", "lw", "0", "0"]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(parsed["residual"].as_f64().unwrap() <= 1e-9);
    assert!(parsed["extremal"]["rho"].as_f64().unwrap() < 1.0);

    // 4.8 > 3 pi / 2: outside the strip
    let out = varreg(&["witness", "lw", "0", "4.8"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("strip"), "stderr: {err}");
}

#[test]
fn witness_lv() {
    let out = varreg(&["witness", "lv", "0", "6.0"]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(parsed["residual"].as_f64().unwrap() <= 1e-10);

    let out = varreg(&["witness", "lv", "0", "6.5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(varreg(&["boundary", "Q", "0.5"]).status.code(), Some(2));
    assert_eq!(varreg(&["boundary", "U", "1.5"]).status.code(), Some(2));
    assert_eq!(varreg(&["verify", "bogus"]).status.code(), Some(2));
    assert_eq!(varreg(&["witness", "xx", "0", "0"]).status.code(), Some(2));
}

#[test]
fn io_errors_exit_3() {
    let out = varreg(&[
        "boundary", "U", "0.5", "--grid", "64",
        "--out", "/nonexistent-dir/curve.csv",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_lemmas_report() {
    let dir = tmpdir("verify");
    let path = dir.join("report.json");
    let out = varreg(&["verify", "lemmas", "--out", path.to_str().unwrap()]);
    assert!(out.status.success(), "exit {:?}", out.status.code());
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["provenance"]["suite"], "lemmas");
    let checks = report["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    for c in checks {
        assert_eq!(c["status"], "PASS", "{}", c["id"]);
    }
    let ids: Vec<&str> = checks.iter().map(|c| c["id"].as_str().unwrap()).collect();
    for expected in [
        "lemma_jacobian_positive",
        "lemma_ReG_decreasing",
        "lemma_ImG_positive",
        "lemma_g_prime_positive",
    ] {
        assert!(ids.contains(&expected), "missing {expected}");
    }
}
