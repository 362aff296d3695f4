//! End-to-end runs of the `hypseries` binary.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hypseries")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).expect("valid JSON")
}

// ---- Exit codes ----

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["--prec", "8", "poly", "calB", "--m", "1"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "no-such-relation"]).status.code(), Some(2));
}

#[test]
fn domain_errors_exit_two() {
    let o = run(&["eval", "S", "--m", "1", "--phi", "0,1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
}

// ---- poly / coeffs / bernoulli ----

#[test]
fn poly_text_matches_known_table() {
    let o = run(&["poly", "calB", "--m", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim_end(), "\u{2212}11/90·phi^4 \u{2212} 4/9·pi^2·phi^2 + 8/45·pi^4");
}

#[test]
fn poly_formats_agree() {
    let v = json(&["--format", "json", "poly", "calB", "--m", "2"]);
    assert!(v.is_object() || v.is_array());
    let csv = stdout(&run(&["--format", "csv", "poly", "calB", "--m", "2"]));
    // header plus one row per term
    assert_eq!(csv.lines().count(), 5);
}

#[test]
fn coefficient_routes_agree() {
    let o = run(&["coeffs", "c", "--m", "6", "--route", "all"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn bernoulli_numbers() {
    let o = run(&["bernoulli", "numbers", "--n", "12"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("-691/2730"));
}

// ---- eval ----

#[test]
fn eval_is_deterministic() {
    let args = ["--format", "json", "eval", "S", "--m", "2", "--phi", "2,1"];
    assert_eq!(stdout(&run(&args)), stdout(&run(&args)));
}

#[test]
fn eval_precision_is_honoured() {
    let lo = json(&["--format", "json", "--prec", "64", "eval", "zeta", "--s", "3"]);
    let hi = json(&["--format", "json", "--prec", "256", "eval", "zeta", "--s", "3"]);
    let text = |v: &serde_json::Value| v.to_string();
    assert!(text(&hi).contains("1.2020569031595942853997381615114499907649862923404988817922"));
    assert!(text(&lo).len() < text(&hi).len());
}

// ---- verify ----

#[test]
fn verify_funcrel_json_shape() {
    let v = json(&["--format", "json", "verify", "funcrel-S", "--m", "2"]);
    assert_eq!(v["pass"], true);
    let rel = v["relations"].as_array().unwrap();
    assert!(!rel.is_empty());
    for r in rel {
        assert_eq!(r["relation_id"], "funcrel-S");
        assert_eq!(r["status"], "PASS");
        assert!(r["lhs"].is_array() && r["rhs"].is_array());
    }
}

#[test]
fn verify_all_passes() {
    let o = run(&["verify", "all", "--m-max", "6"]);
    let text = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{text}");
    let summary = text.lines().last().unwrap();
    assert!(summary.starts_with("summary:") && summary.ends_with("0 failed"), "{summary}");
}

#[test]
fn verify_csv_header() {
    let csv = stdout(&run(&["--format", "csv", "verify", "linearity", "--m", "1"]));
    assert_eq!(csv.lines().next(), Some("kind,name,m,phi_re,phi_im,prec,residual,status"));
}

// ---- zeros ----

#[test]
fn zeros_csv_rows() {
    let o = run(&["--format", "csv", "zeros", "--m-max", "8"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("m,re,im,residual"));
    let expected: usize = (0..=8).map(|m| 2 * m + 2).sum();
    assert_eq!(lines.count(), expected);
}

#[test]
fn zeros_out_file() {
    let dir = std::env::temp_dir().join(format!("hypseries-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("zeros.csv");
    let o = run(&["--format", "csv", "--out", path.to_str().unwrap(), "zeros", "--m", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written.lines().count(), 1 + 8);
    std::fs::remove_dir_all(&dir).unwrap();
}
