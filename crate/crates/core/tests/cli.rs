use std::path::Path;
use std::process::{Command, Output};

use qroot::identities::VerificationReport;
use serde_json::Value;

fn qroot(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qroot")).args(args).output().expect("binary runs")
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn list_prints_eleven_ids() {
    let o = qroot(&["list"]);
    assert!(o.status.success());
    assert_eq!(String::from_utf8(o.stdout).unwrap().lines().count(), 11);
    let o = qroot(&["list", "--json"]);
    assert_eq!(stdout_json(&o).as_array().unwrap().len(), 11);
}

#[test]
fn verify_terminating_file_exactly() {
    let dir = tempfile::tempdir().unwrap();
    let params = write(
        dir.path(),
        "n0.json",
        r#"{"id": "n0_terminating", "q": "1/3", "n": 1, "z": ["2"], "m": [1], "a": ["1/5"], "b": "1/7"}"#,
    );
    let o = qroot(&["verify", "--id", "n0_terminating", "--params", &params, "--mode", "exact"]);
    assert!(o.status.success());
    let r: VerificationReport = serde_json::from_slice(&o.stdout).unwrap();
    assert!(r.pass);
    assert_eq!(r.abs_discrepancy.as_deref(), Some("0"));
}

#[test]
fn inline_parameters_and_eval() {
    let inline = r#"{"q": ["0.4", "0"], "n": 1,
        "a": [["1.5","0"],["1.2","0.3"],["-1.1","0"],["1.7","0"]], "z": [["0.6","0.2"]]}"#;
    let o = qroot(&["eval", "--id", "gi_cn_6psi6", "--side", "left", "--inline", inline, "--digits", "30"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v = stdout_json(&o);
    assert!(v["radius_used"].as_u64().unwrap() >= 2);
    assert!(v["tail_estimate"].as_f64().unwrap() <= 1e-30);
}

#[test]
fn suite_writes_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let config = concat!(env!("CARGO_MANIFEST_DIR"), "/configs/default.json");
    let o = qroot(&["suite", "--config", config, "--out", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let reports: Vec<VerificationReport> = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert!(!reports.is_empty());
    assert!(reports.iter().all(|r| r.pass && r.wall_time_ms.is_none()));
}

#[test]
fn suite_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let config = write(
        dir.path(),
        "cfg.json",
        r#"{"cases": [{"id": "te_reduction", "digits": 20, "seed": 3, "count": 4, "max_shell": 300,
                       "bounds": {"modulus_max": 0.6}}]}"#,
    );
    let a = qroot(&["suite", "--config", &config]);
    let b = qroot(&["suite", "--config", &config]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn sample_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("p.json");
    let file = file.to_str().unwrap();
    let o = qroot(&["sample", "--id", "ak_finite", "--mode", "exact", "--q", "1/3", "--seed", "9", "--out", file]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let o = qroot(&["verify", "--params", file, "--mode", "exact"]);
    assert!(o.status.success());
}

#[test]
fn failures_set_exit_status() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(
        dir.path(),
        "bad.json",
        r#"{"id": "ak_finite", "q": "1/3", "z": ["2"], "c": ["1/2"], "m": [1], "l": [1], "b": "3/5", "d": "2/7"}"#,
    );
    let o = qroot(&["verify", "--params", &bad, "--mode", "exact"]);
    assert_eq!(o.status.code(), Some(1));
    let r = stdout_json(&o);
    assert_eq!(r["failure"]["kind"], "singular_parameter");

    assert_eq!(qroot(&["verify"]).status.code(), Some(2));
    assert_eq!(qroot(&["eval", "--id", "gi_cn_6psi6", "--side", "up", "--inline", "{}"]).status.code(), Some(2));
    let broken = write(dir.path(), "cfg.json", "{\"cases\": [\n  {\"id\": 3}\n]}");
    let o = qroot(&["suite", "--config", &broken]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}
