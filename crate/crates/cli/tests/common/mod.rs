use std::process::{Command, Output};
use std::time::{Duration, Instant};

/// Run the binary with the given args; return (stdout, stderr, exit code,
/// wall time).
pub fn tqm(args: &[&str]) -> (String, String, i32, Duration) {
    tqm_env(args, &[])
}

pub fn tqm_env(args: &[&str], env: &[(&str, &str)]) -> (String, String, i32, Duration) {
    let start = Instant::now();
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_tqm"));
    cmd.args(args);
    for (k, v) in env {
        cmd.env(k, v);
    }
    let Output { stdout, stderr, status } = cmd.output().expect("binary runs");
    (
        String::from_utf8(stdout).expect("utf-8 stdout"),
        String::from_utf8(stderr).expect("utf-8 stderr"),
        status.code().unwrap_or(-1),
        start.elapsed(),
    )
}

/// Parse stdout as JSON, panicking with the text on failure.
pub fn as_json(stdout: &str) -> serde_json::Value {
    serde_json::from_str(stdout).unwrap_or_else(|e| panic!("bad JSON ({e}):\n{stdout}"))
}

pub fn rel_err(x: f64, reference: f64) -> f64 {
    (x - reference).abs() / reference.abs()
}
