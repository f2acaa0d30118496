//! End-to-end tests of the command-line binary: wire formats, exit codes,
//! and JSON round-trips.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ultraheun"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).trim().to_string()
}

#[test]
fn seq_sylv_json_wire_format() {
    let out = run(&[
        "seq", "--family", "Sylv", "--k", "2", "--y", "2", "--format", "json",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), r#"{"poly":["0","-4","0","1"]}"#);
}

#[test]
fn seq_evaluation_mode() {
    let out = run(&[
        "seq", "--family", "P", "--k", "2", "--y", "4", "--x", "7/3", "--format", "json",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), r#"{"value":"24"}"#);
}

#[test]
fn sol_json_output() {
    let out = run(&["sol", "--model", "II", "--s", "0", "--n", "1", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["dim"], 2);
    assert_eq!(v["mrep"], "H");
    assert_eq!(v["expected"], 2);
    assert_eq!(v["match"], true);
}

#[test]
fn verify_small_suite_passes_and_is_deterministic() {
    let a = run(&["verify", "--suite", "appendix", "--max-n", "4", "--format", "json"]);
    let b = run(&["verify", "--suite", "appendix", "--max-n", "4", "--format", "json"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout, "verification output must be byte-identical");
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["status"], "pass");
}

#[test]
fn verify_all_is_deterministic_at_max_n_16() {
    let a = run(&["verify", "--suite", "all", "--max-n", "16", "--format", "json"]);
    let b = run(&["verify", "--suite", "all", "--max-n", "16", "--format", "json"]);
    assert!(a.status.success(), "suite must pass");
    assert_eq!(a.stdout, b.stdout, "verification output must be byte-identical");
}

#[test]
fn json_rationals_round_trip() {
    let out = run(&[
        "heun", "--kind", "u", "--s", "-7/3", "--n", "6", "--terms", "6", "--format", "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    for c in v["coeffs"].as_array().unwrap() {
        let s = c.as_str().unwrap();
        let r = ultraheun_core::scalar::parse_rat(s).unwrap();
        assert_eq!(r.to_string(), s, "wire value re-parses identically");
    }
}

#[test]
fn usage_errors_exit_2() {
    // malformed rational
    let out = run(&["sol", "--model", "II", "--s", "1.5", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));
    // unknown subcommand
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    // out-of-domain series parameters
    let out = run(&["heun", "--kind", "a", "--s", "1", "--n", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
}

#[test]
fn csv_and_out_file() {
    let dir = std::env::temp_dir().join("ultraheun-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("seq.csv");
    let out = run(&[
        "seq", "--family", "Cay", "--k", "2", "--y", "2", "--format", "csv", "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("exponent,coefficient"));
    assert!(text.contains("0,-2"));
}

#[test]
fn ktype_degree_list() {
    let out = run(&[
        "ktype", "--sigma", "pm", "--s", "-1", "--max-n", "14", "--format", "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["degrees"], serde_json::json!([2, 6, 10, 14]));
    assert_eq!(v["agree"], true);
}
