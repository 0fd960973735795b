//! CLI behavior: exit codes, worked values, config precedence, and JSON
//! conformance against the shipped schema.

// frozen oracle constants keep their 20-digit provenance; the 3.14 lhs below
// is 4 * 0.9 * 0.9 - 0.1, not a circle constant
#![allow(clippy::excessive_precision, clippy::approx_constant)]

use std::process::{Command, Output};

use jsonschema::JSONSchema;
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_qbessel"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

fn schema() -> JSONSchema {
    let path = concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../../docs/cli-json-schema.json"
    );
    let text = std::fs::read_to_string(path).expect("schema shipped in docs/");
    let value: Value = serde_json::from_str(&text).expect("schema parses");
    JSONSchema::compile(&value).expect("schema compiles")
}

fn assert_valid_json(output: &Output) -> Value {
    let value: Value = serde_json::from_str(stdout(output).trim()).expect("JSON output");
    let schema = schema();
    if let Err(errors) = schema.validate(&value) {
        let messages: Vec<String> = errors.map(|e| e.to_string()).collect();
        panic!("schema violations: {messages:?}\nin: {value}");
    }
    value
}

#[test]
fn eval_normalized_worked_value() {
    let out = run(&[
        "eval", "--kind", "second", "--q", "0.5", "--nu", "0", "--z", "1",
        "--which", "normalized",
    ]);
    assert_eq!(exit_code(&out), 0);
    // frozen from 50-digit summation: 0.52749496061966123658
    assert!(stdout(&out).contains("5.27494960620e-1"), "{}", stdout(&out));
}

#[test]
fn eval_zero_is_zero() {
    let out = run(&[
        "eval", "--kind", "second", "--q", "0.5", "--nu", "0", "--z", "0",
        "--which", "normalized",
    ]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("value = 0.00000000000e0 + 0.00000000000e0i"));
}

#[test]
fn eval_validation_exit_codes() {
    let out = run(&["eval", "--kind", "second", "--q", "1.5", "--nu", "0", "--z", "1"]);
    assert_eq!(exit_code(&out), 2);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("q must lie in (0,1)"), "{err}");

    let out = run(&["eval", "--kind", "second", "--q", "0.5", "--nu", "-2", "--z", "1"]);
    assert_eq!(exit_code(&out), 2);

    // |z| > 1 rejected for the normalized series
    let out = run(&[
        "eval", "--kind", "second", "--q", "0.5", "--nu", "0", "--z", "1.5",
        "--which", "normalized",
    ]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn eval_non_convergence_exit_code() {
    let out = run(&[
        "eval", "--kind", "second", "--q", "0.5", "--nu", "0", "--z", "1",
        "--max-terms", "4",
    ]);
    assert_eq!(exit_code(&out), 3);
}

#[test]
fn eval_raw_matches_normalized_identity_case() {
    // at nu = 0: h(z) = z J(sqrt z) with c_0 = 1, so raw(1) = normalized(1)
    let raw = run(&[
        "eval", "--kind", "second", "--q", "0.5", "--nu", "0", "--z", "1",
        "--which", "raw", "--json",
    ]);
    assert_eq!(exit_code(&raw), 0);
    let v = assert_valid_json(&raw);
    let re = v["value"][0].as_f64().unwrap();
    assert!((re - 0.52749496061966123658).abs() < 1e-12, "{re}");
}

#[test]
fn check_worked_row_and_schema() {
    let out = run(&[
        "check", "--kind", "second", "--q", "0.1", "--nu", "1", "--alpha", "0",
        "--json",
    ]);
    assert_eq!(exit_code(&out), 0);
    let v = assert_valid_json(&out);
    let conditions = v["conditions"].as_array().unwrap();
    assert_eq!(conditions.len(), 12);
    assert_eq!(conditions[0]["id"], "Positivity2");
    assert!((conditions[0]["lhs"].as_f64().unwrap() - 3.14).abs() < 1e-12);
    assert_eq!(conditions[0]["holds"], true);
    let p0 = v["p0_bound"].as_f64().unwrap();
    assert!((p0 - 0.96815286624203821656).abs() < 1e-12);
    let star = v["alpha_star_starlike"]["value"].as_f64().unwrap();
    assert!((star - 0.96605766007375125712).abs() < 1e-12);
    // verdicts are data: exit 0 even when everything fails
    let out = run(&[
        "check", "--kind", "third", "--q", "0.5", "--nu", "1", "--alpha", "0",
        "--json",
    ]);
    assert_eq!(exit_code(&out), 0);
    let v = assert_valid_json(&out);
    assert_eq!(v["hardy"]["kind"], "unclassified");
    assert_eq!(v["p0_bound"], Value::Null);
}

#[test]
fn check_alpha_validation() {
    let out = run(&["check", "--kind", "second", "--q", "0.1", "--nu", "1", "--alpha", "1.0"]);
    assert_eq!(exit_code(&out), 2);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("alpha must lie in [0,1)"), "{err}");
}

#[test]
fn scan_worked_grid_point_and_io_error() {
    let path = std::env::temp_dir().join(format!("qbessel-cli-{}.csv", std::process::id()));
    let out = run(&[
        "scan", "--kind", "second", "--q", "0.1:0.2", "--nu", "1:2", "--steps", "2",
        "--out", path.to_str().unwrap(), "--json",
    ]);
    assert_eq!(exit_code(&out), 0);
    assert_valid_json(&out);
    let csv = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 5); // header + 2x2 grid
    assert!(lines[0].starts_with("q,nu,Positivity2,"));
    // the (q, nu) = (0.1, 1) row carries the worked starlike threshold
    let row = lines[1];
    assert!(row.starts_with("1.00000000000e-1,1.00000000000e0,"), "{row}");
    assert!(row.contains("9.66057660074e-1"), "{row}");

    let out = run(&[
        "scan", "--kind", "second", "--q", "0.1:0.2", "--nu", "1:2", "--steps", "2",
        "--out", "/nonexistent-qbessel-dir/out.csv",
    ]);
    assert_eq!(exit_code(&out), 4);
}

#[test]
fn scan_validation() {
    let out = run(&[
        "scan", "--kind", "second", "--q", "0:0.9", "--nu", "1:2", "--steps", "2",
        "--out", "/tmp/unused.csv",
    ]);
    assert_eq!(exit_code(&out), 2);
    let out = run(&[
        "scan", "--kind", "second", "--q", "0.1:0.9", "--nu", "1:2", "--steps", "1",
        "--out", "/tmp/unused.csv",
    ]);
    assert_eq!(exit_code(&out), 2);
    let out = run(&[
        "scan", "--kind", "second", "--q", "0.9:0.1", "--nu", "1:2", "--steps", "2",
        "--out", "/tmp/unused.csv",
    ]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn verify_small_run_and_schema() {
    let out = run(&["verify", "--seed", "42", "--samples", "2", "--json"]);
    assert_eq!(exit_code(&out), 0);
    let v = assert_valid_json(&out);
    assert_eq!(v["all_passed"], true);
    assert!(v["families"].as_array().unwrap().len() >= 20);

    let out = run(&["verify", "--samples", "0"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn verify_deterministic_output() {
    let a = run(&["verify", "--seed", "7", "--samples", "3", "--json"]);
    let b = run(&["verify", "--seed", "7", "--samples", "3", "--json"]);
    assert_eq!(exit_code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    // a different seed reshuffles the draws but still passes
    let c = run(&["verify", "--seed", "8", "--samples", "3", "--json"]);
    assert_eq!(exit_code(&c), 0);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn config_file_overrides_and_flag_precedence() {
    let path = std::env::temp_dir().join(format!("qbessel-cfg-{}.cfg", std::process::id()));
    std::fs::write(&path, "# truncation policy\nmax_terms = 4\nterm_cutoff = 1e-16\n").unwrap();
    // config alone: 4 terms cannot converge -> exit 3
    let out = run(&[
        "eval", "--kind", "second", "--q", "0.5", "--nu", "0", "--z", "1",
        "--config", path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 3);
    // flag beats config
    let out = run(&[
        "eval", "--kind", "second", "--q", "0.5", "--nu", "0", "--z", "1",
        "--config", path.to_str().unwrap(), "--max-terms", "512",
    ]);
    assert_eq!(exit_code(&out), 0);
    std::fs::remove_file(&path).ok();

    // unknown keys are validation errors
    let bad = std::env::temp_dir().join(format!("qbessel-bad-{}.cfg", std::process::id()));
    std::fs::write(&bad, "no_such_key = 1\n").unwrap();
    let out = run(&[
        "eval", "--kind", "second", "--q", "0.5", "--nu", "0", "--z", "1",
        "--config", bad.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 2);
    std::fs::remove_file(&bad).ok();

    // missing config file is an I/O failure
    let out = run(&[
        "eval", "--kind", "second", "--q", "0.5", "--nu", "0", "--z", "1",
        "--config", "/nonexistent-qbessel.cfg",
    ]);
    assert_eq!(exit_code(&out), 4);
}

#[test]
fn eval_json_matches_schema() {
    let out = run(&[
        "eval", "--kind", "third", "--q", "0.25", "--nu", "0.5", "--z", "0.5",
        "--which", "raw", "--json",
    ]);
    assert_eq!(exit_code(&out), 0);
    let v = assert_valid_json(&out);
    // frozen from 50-digit evaluation
    let re = v["value"][0].as_f64().unwrap();
    assert!((re - 0.78082911147855801364).abs() < 1e-12, "{re}");
}
