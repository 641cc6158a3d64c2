use std::process::{Command, Output};

fn umbratrig(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_umbratrig"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

#[test]
fn eval_prints_one_value() {
    let out = umbratrig(&["eval", "--family", "lexp", "--x", "0"]);
    assert!(out.status.success());
    let v: f64 = stdout(&out).trim().parse().unwrap();
    assert_eq!(v, 1.0);
}

#[test]
fn eval_with_parameters() {
    let out = umbratrig(&[
        "eval", "--family", "humbert", "--alpha", "0.5", "--beta", "1.5", "--x", "0.7",
    ]);
    assert!(out.status.success());
    let v: f64 = stdout(&out).trim().parse().unwrap();
    assert!(v > 0.0 && v.is_finite());
    // Missing parameter is a flag/domain error: exit 2.
    let out = umbratrig(&["eval", "--family", "humbert", "--alpha", "0.5", "--x", "0.7"]);
    assert_eq!(out.status.code(), Some(2));
    let out = umbratrig(&["eval", "--family", "nosuch", "--x", "0.7"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn lissajous_endpoints_and_determinism() {
    let args = ["lissajous", "--xmax", "1", "--steps", "2", "--format", "csv"];
    let a = umbratrig(&args);
    assert!(a.status.success());
    let text = stdout(&a);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "x,lc,ls");
    assert_eq!(lines.len(), 3);
    let first: Vec<f64> = lines[1].split(',').map(|s| s.parse().unwrap()).collect();
    assert_eq!(first, vec![0.0, 1.0, 0.0]);
    let last: Vec<f64> = lines[2].split(',').map(|s| s.parse().unwrap()).collect();
    assert!((last[1] - 0.7517341827138082).abs() < 1e-12);
    assert!((last[2] - 0.9722916273066612).abs() < 1e-12);
    // Bit-deterministic output.
    let b = umbratrig(&args);
    assert_eq!(a.stdout, b.stdout);
    // Unix line endings only.
    assert!(!text.contains('\r'));
}

#[test]
fn lissajous_svg_shape() {
    let out = umbratrig(&["lissajous", "--xmax", "5", "--steps", "60", "--format", "svg"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""));
    assert!(text.trim_end().ends_with("</svg>"));
    assert_eq!(text.matches("<svg").count(), 1);
    assert_eq!(text.matches("<polyline").count(), 1);
}

#[test]
fn table_writes_csv_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.csv");
    let out = umbratrig(&[
        "table", "--family", "lcos", "--min", "0", "--max", "2", "--steps", "5", "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "x,value");
    assert_eq!(lines.len(), 6);
    let row: Vec<f64> = lines[1].split(',').map(|s| s.parse().unwrap()).collect();
    assert_eq!(row, vec![0.0, 1.0]);
}

#[test]
fn verify_exit_codes_follow_tolerance() {
    let ok = umbratrig(&["verify", "--tol", "1e-10", "--grid", "0:2:5"]);
    assert_eq!(ok.status.code(), Some(0));
    let text = stdout(&ok);
    assert!(text.contains("PASS"));
    assert!(!text.contains("FAIL"));
    // An absurdly tight tolerance cannot hold: exit 1.
    let bad = umbratrig(&["verify", "--tol", "1e-18", "--grid", "0:2:5"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("FAIL"));
    // Malformed grid: exit 2.
    let err = umbratrig(&["verify", "--grid", "2:0:5"]);
    assert_eq!(err.status.code(), Some(2));
}

#[test]
fn transform_values() {
    let out = umbratrig(&["transform", "--family", "lcos", "--x", "1"]);
    assert!(out.status.success());
    let v: f64 = stdout(&out).trim().parse().unwrap();
    assert!((v - 1f64.cos()).abs() < 1e-8);
    let out = umbratrig(&["transform", "--family", "galpha", "--alpha", "1", "--x", "1"]);
    assert!(out.status.success());
    let v: f64 = stdout(&out).trim().parse().unwrap();
    assert!((v - 1.067_014_390_229_386).abs() < 1e-6);
}

#[test]
fn diffuse_solvers() {
    let out = umbratrig(&["diffuse", "--solver", "closed", "--x", "1", "--tau", "0.5"]);
    assert!(out.status.success());
    let v: f64 = stdout(&out).trim().parse().unwrap();
    assert!((v - 14.778_112_197_861_3).abs() < 1e-10);

    let out = umbratrig(&["diffuse", "--solver", "spectral", "--x", "1", "--tau", "0.5"]);
    let v: f64 = stdout(&out).trim().parse().unwrap();
    assert!((v - 14.778_112_197_861_3).abs() < 1e-5);

    // tau past the blow-up is a domain error.
    let out = umbratrig(&["diffuse", "--solver", "closed", "--x", "1", "--tau", "1.5"]);
    assert_eq!(out.status.code(), Some(2));

    let out = umbratrig(&[
        "diffuse", "--solver", "umbral", "--x", "1", "--tau", "1", "--degree", "2",
    ]);
    let v: f64 = stdout(&out).trim().parse().unwrap();
    assert!((v - 6.0).abs() < 1e-10, "lambda_2(1,1) = 6, got {v}");

    let out = umbratrig(&[
        "diffuse", "--solver", "airy", "--alpha", "1", "--x", "0.8", "--tau", "0", "--atom",
        "1:1",
    ]);
    assert!(out.status.success());
    let v: f64 = stdout(&out).trim().parse().unwrap();
    assert!(v > 1.0 && v.is_finite());
}

#[test]
fn limits_tables() {
    let out = umbratrig(&["limits", "--kind", "j0", "--x", "1", "--ns", "100,400"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,term,abs_error_vs_limit");
    assert_eq!(lines.len(), 3);
    let last: Vec<f64> = lines[2].split(',').map(|s| s.parse().unwrap()).collect();
    assert_eq!(last[0], 400.0);
    assert!(last[2] < 5e-3);
    let err = umbratrig(&["limits", "--kind", "nope", "--x", "1"]);
    assert_eq!(err.status.code(), Some(2));
}

#[test]
fn max_terms_env_override() {
    let out = Command::new(env!("CARGO_BIN_EXE_umbratrig"))
        .args(["eval", "--family", "lexp", "--x", "9"])
        .env("UMBRATRIG_MAX_TERMS", "2")
        .output()
        .unwrap();
    // Two terms cannot satisfy the stopping rule at x = 9.
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_umbratrig"))
        .args(["eval", "--family", "lexp", "--x", "9"])
        .env("UMBRATRIG_MAX_TERMS", "200")
        .output()
        .unwrap();
    assert!(out.status.success());
}
