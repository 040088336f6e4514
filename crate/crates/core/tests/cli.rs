use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weak-contraction"))
        .args(args)
        .output()
        .unwrap()
}

fn run_in(dir: &Path, cmd: &str, config: &str, extra: &[&str]) -> i32 {
    let cfg = fixture(config);
    let mut args = vec![cmd, cfg.to_str().unwrap(), "--out", dir.to_str().unwrap()];
    args.extend_from_slice(extra);
    bin(&args).status.code().unwrap()
}

fn json(path: &Path) -> serde_json::Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn certify_exit_codes_and_report() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run_in(dir.path(), "certify", "example1.json", &[]), 0);
    let report = json(&dir.path().join("certify-report.json"));
    assert_eq!(report["verdict"], "certified");
    assert_eq!(report["n_points"], 201 * 201);
    assert_eq!(report["argmin"], serde_json::json!([0.0, 0.0]));

    assert_eq!(run_in(dir.path(), "certify", "example2.json", &[]), 2);
    let report = json(&dir.path().join("certify-report.json"));
    assert_eq!(report["verdict"], "violated");
    let hit = report["violations"]
        .as_array()
        .unwrap()
        .iter()
        .find(|v| v["x"] == 0.9 && v["y"] == 1.0);
    assert!((hit.unwrap()["residual"].as_f64().unwrap() + 0.2).abs() < 1e-9);
}

#[test]
fn tolerance_flag_overrides_config() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run_in(dir.path(), "certify", "example2.json", &["--tol", "1"]), 0);
}

#[test]
fn solve_writes_traces_and_result() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run_in(dir.path(), "solve", "example1.json", &[]), 0);
    let trace = std::fs::read_to_string(dir.path().join("trace.csv")).unwrap();
    let mut lines = trace.lines();
    assert_eq!(lines.next(), Some("step,x,set_lo,set_hi,delta_gap,step_dist"));
    assert!(lines.next().unwrap().starts_with("0,1,0.25,0.5,"));
    let result = json(&dir.path().join("solve-result.json"));
    assert_eq!(result["unique"], true);

    assert_eq!(run_in(dir.path(), "solve", "example2.json", &[]), 0);
    assert!(dir.path().join("trace-0.csv").exists() && dir.path().join("trace-1.csv").exists());
    let result = json(&dir.path().join("solve-result.json"));
    assert_eq!(result["endpoints"].as_array().unwrap().len(), 2);
    assert_eq!(result["unique"], false);
}

#[test]
fn solve_reports_non_convergence() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run_in(dir.path(), "solve", "example1.json", &["--max-iter", "3"]), 3);
    let result = json(&dir.path().join("solve-result.json"));
    assert_eq!(result["failed_starts"], serde_json::json!([1.0]));
    assert_eq!(result["runs"][0]["converged"], false);
}

#[test]
fn bad_invocations_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(
        run_in(dir.path(), "solve", "example1.json", &["--strategy", "greedy"]),
        1
    );
    assert_eq!(run_in(dir.path(), "certify", "missing.json", &[]), 1);
    assert_eq!(bin(&["certify"]).status.code(), Some(1));
    assert_eq!(bin(&[]).status.code(), Some(1));
}

#[test]
fn gauge_check_prints_report() {
    let out = bin(&["gauge-check", r#"{"kind":"power","p":2}"#, "--class", "phi"]);
    assert_eq!(out.status.code(), Some(2));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["verdict"], "fail");
    assert_eq!(report["failed_condition"], "iii");

    let out = bin(&["gauge-check", r#"{"kind":"log1p"}"#, "--class", "omega"]);
    assert_eq!(out.status.code(), Some(0));
    let out = bin(&["gauge-check", r#"{"kind":"cosh"}"#, "--class", "psi"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    for dir in [a.path(), b.path()] {
        assert_eq!(run_in(dir, "certify", "random-sampler.json", &[]), 0);
        assert_eq!(run_in(dir, "solve", "random-sampler.json", &[]), 0);
    }
    for name in [
        "certify-report.json",
        "solve-result.json",
        "trace-0.csv",
        "trace-1.csv",
        "trace-2.csv",
    ] {
        let read = |d: &Path| std::fs::read(d.join(name)).unwrap();
        assert_eq!(read(a.path()), read(b.path()), "{name} differs");
    }
}
