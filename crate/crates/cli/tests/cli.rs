//! End-to-end tests of the binary: exit codes, output formats, demo
//! tables, and verification-report determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_invmetrics"))
}

fn write_spec(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("invmetrics-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn eval_green_closed_form() {
    let spec = write_spec(
        "d122.json",
        r#"{"type":"reinhardt","alpha":[1,2,2],"class":"integers"}"#,
    );
    let out = bin()
        .args([
            "eval",
            spec.to_str().unwrap(),
            "--metric",
            "green",
            "--base",
            "0:0,0:0,0:0",
            "--target",
            "0.5:0,0.5:0,0.5:0",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["status"], "Exact");
    assert!((v["lower"].as_f64().unwrap() - 0.5).abs() < 1e-14);
}

#[test]
fn eval_exit_codes() {
    let spec = write_spec(
        "d11.json",
        r#"{"type":"reinhardt","alpha":[1,1],"class":"integers"}"#,
    );
    // unknown bounds: exit 3 without --allow-bounds, 0 with it
    let args = [
        "eval",
        spec.to_str().unwrap(),
        "--metric",
        "sibony-metric",
        "--order",
        "6",
        "--base",
        "0:0,0:0",
        "--dir",
        "1:0,1:0",
    ];
    let out = bin().args(args).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
    let out = bin().args(args).arg("--allow-bounds").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    // domain violation: exit 4
    let out = bin()
        .args([
            "eval",
            spec.to_str().unwrap(),
            "--metric",
            "green",
            "--base",
            "0:0,0:0",
            "--target",
            "2:0,3:0",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
    // schema errors: exit 2
    let bad = write_spec("bad.json", r#"{"type":"reinhardt","alpha":[1,1]}"#);
    let out = bin()
        .args([
            "eval",
            bad.to_str().unwrap(),
            "--metric",
            "green",
            "--base",
            "0:0,0:0",
            "--target",
            "0.1:0,0.1:0",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn eval_hartogs_proven_value_with_citation() {
    let spec = write_spec("exam1.json", r#"{"type":"hartogs","variant":"exam1"}"#);
    let out = bin()
        .args([
            "eval",
            spec.to_str().unwrap(),
            "--metric",
            "caratheodory",
            "--base",
            "0:0,0:0,0:0",
            "--dir",
            "1:0,0:0,0:0",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["status"], "ProvenExact");
    assert_eq!(v["lower"].as_f64(), Some(0.0));
    assert!(v["citation"].as_str().unwrap().len() > 10);
}

#[test]
fn eval_balanced_spec() {
    let spec = write_spec(
        "balanced.json",
        r#"{"type":"balanced","h":{"kind":"monomial","exponents":[0.5,0.5]}}"#,
    );
    let out = bin()
        .args([
            "eval",
            spec.to_str().unwrap(),
            "--metric",
            "azukawa",
            "--base",
            "0:0,0:0",
            "--dir",
            "1:0,1:0",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["lower"].as_f64(), Some(1.0));
    // the sibony metric at the same direction is the envelope gauge: 0
    let out = bin()
        .args([
            "eval",
            spec.to_str().unwrap(),
            "--metric",
            "sibony",
            "--base",
            "0:0,0:0",
            "--dir",
            "1:0,1:0",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(v["upper"].as_f64().unwrap() <= 1e-9);
}

#[test]
fn csv_format_is_stable() {
    let spec = write_spec(
        "d23.json",
        r#"{"type":"reinhardt","alpha":[2,3],"class":"integers"}"#,
    );
    let out = bin()
        .args([
            "eval",
            spec.to_str().unwrap(),
            "--metric",
            "sibony",
            "--base",
            "0:0,0:0",
            "--target",
            "0.5:0,0.5:0",
            "--format",
            "csv",
        ])
        .output()
        .unwrap();
    let text = stdout(&out);
    assert!(text.starts_with("lower,upper,status,citation\n"));
    assert!(!text.contains('\r'));
    let row = text.lines().nth(1).unwrap();
    let cols: Vec<&str> = row.split(',').collect();
    // 17 significant digits in scientific notation
    assert_eq!(cols[0].split('e').next().unwrap().len(), "1.7677669529663692".len());
    let lower: f64 = cols[0].parse().unwrap();
    assert!((lower - (1.0f64 / 32.0).sqrt()).abs() < 1e-14);
    assert_eq!(cols[2], "Exact");
}

#[test]
fn demos_reproduce_phenomena() {
    for demo in [
        "nonusc",
        "regularization",
        "increasing",
        "chain",
        "hartogs-gap",
    ] {
        let dir = std::env::temp_dir().join("invmetrics-cli-tests");
        std::fs::create_dir_all(&dir).unwrap();
        let out_path = dir.join(format!("{demo}.csv"));
        let out = bin()
            .args(["demo", demo, "--out", out_path.to_str().unwrap()])
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0), "demo {demo}: {out:?}");
        let csv = std::fs::read_to_string(&out_path).unwrap();
        assert!(csv.lines().count() >= 3, "demo {demo} table too small");
        assert!(!csv.contains('\r'));
    }
    let out = bin().args(["demo", "nosuch"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn increasing_demo_shows_the_gap() {
    let out = bin().args(["demo", "increasing"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "k,phi_k_0,lower_bound,limit_value,proven_G_value"
    );
    for line in lines {
        let cols: Vec<&str> = line.split(',').collect();
        let lower: f64 = cols[2].parse().unwrap();
        let proven: f64 = cols[4].parse().unwrap();
        assert!(lower >= 0.039); // 0.39 * |z2| with z2 = 0.1
        assert_eq!(proven, 0.0);
    }
}

#[test]
fn verify_deterministic_reports_and_exit_codes() {
    let dir = std::env::temp_dir().join("invmetrics-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let r1 = dir.join("report1.json");
    let r2 = dir.join("report2.json");
    for path in [&r1, &r2] {
        let out = bin()
            .args([
                "verify",
                "--suite",
                "chain",
                "--seed",
                "42",
                "--samples",
                "200",
                "--report",
                path.to_str().unwrap(),
            ])
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0), "{out:?}");
    }
    let a = std::fs::read(&r1).unwrap();
    let b = std::fs::read(&r2).unwrap();
    assert_eq!(a, b, "same seed must give byte-identical reports");

    let out = bin()
        .args(["verify", "--suite", "nosuch"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_seed_env_default() {
    let out = bin()
        .args(["verify", "--suite", "normalization"])
        .env("INVMETRICS_SEED", "99")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("seed 99"));
}
