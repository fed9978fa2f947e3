use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spherical-bodies"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn construct_then_measure() {
    let dir = tempfile::tempdir().unwrap();
    let body = dir.path().join("u.json");
    let out = bin(&[
        "construct",
        "reuleaux",
        "--r",
        "0.8",
        "--center",
        "0.1,0.2,1",
        "--out",
        path(&body),
    ]);
    assert!(out.status.success());
    let summary: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(summary["arcs"], 3);

    let out = bin(&["measure", path(&body)]);
    assert_eq!(out.status.code(), Some(0));
    let m: Value = serde_json::from_slice(&out.stdout).unwrap();
    let width = m["width"].as_f64().unwrap();
    assert!((width - 0.8).abs() < 1e-9);
    assert!(m["constant_width_spread"].as_f64().unwrap() < 1e-9);
    // Barbier: perimeter = (2π − area)·tan(w/2)
    let (a, p) = (
        m["area"].as_f64().unwrap(),
        m["perimeter"].as_f64().unwrap(),
    );
    assert!((p - (std::f64::consts::TAU - a) * (0.4f64).tan()).abs() < 1e-9);
}

#[test]
fn construct_is_byte_stable() {
    let args = [
        "construct",
        "polar-reuleaux",
        "--w",
        "2.2",
        "--azimuth",
        "0.3",
    ];
    let a = bin(&args);
    let b = bin(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);

    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("k.json");
    std::fs::write(&f, &a.stdout).unwrap();
    let again = bin(&["construct", "random", "--w", "1.0", "--seed", "5"]);
    let twice = bin(&["construct", "random", "--w", "1.0", "--seed", "5"]);
    assert_eq!(again.stdout, twice.stdout);
    assert_eq!(bin(&["measure", path(&f)]).status.code(), Some(0));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(
        bin(&["construct", "disk", "--r", "2.0"]).status.code(),
        Some(2)
    );
    assert_eq!(bin(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(
        bin(&["stability", "--family", "large", "--w", "1.0"])
            .status
            .code(),
        Some(2)
    );

    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("bad.json");
    std::fs::write(&f, "{\"arcs\": []}").unwrap();
    assert_eq!(bin(&["measure", path(&f)]).status.code(), Some(2));
    std::fs::write(&f, "not json").unwrap();
    assert_eq!(bin(&["measure", path(&f)]).status.code(), Some(2));
}

#[test]
fn invalid_body_exits_3() {
    let out = bin(&["construct", "regular-triangle", "--w", "1.0"]);
    let mut body: Value = serde_json::from_slice(&out.stdout).unwrap();
    body["arcs"][0]["radius"] = Value::from(0.7);
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("broken.json");
    std::fs::write(&f, body.to_string()).unwrap();
    let out = bin(&["measure", path(&f)]);
    assert_eq!(out.status.code(), Some(3));
    assert!(!out.stderr.is_empty());
}

#[test]
fn verify_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("barbier.csv");
    let out = bin(&[
        "verify",
        "barbier",
        "--seed",
        "3",
        "--n",
        "6",
        "--out",
        path(&csv),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "family,w,eps,area_gap,hausdorff,slack,passed");
    assert_eq!(lines.len(), 7);
    assert!(lines[1..]
        .iter()
        .all(|l| l.starts_with("barbier,") && l.ends_with(",true")));
}

#[test]
fn stability_small_family() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("rows.csv");
    let out = bin(&[
        "stability",
        "--family",
        "small",
        "--w",
        "1.2",
        "--points",
        "6",
        "--csv",
        path(&csv),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    let e = report["fitted_exponent"].as_f64().unwrap();
    assert!((0.95..=1.05).contains(&e));
    assert_eq!(report["in_band"], true);
    assert_eq!(std::fs::read_to_string(&csv).unwrap().lines().count(), 7);
}
