//! End-to-end checks of the qmono binary: exit codes, CSV shape, and
//! determinism across runs and thread counts.

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output};

fn qmono(args: &[&str], envs: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_qmono"));
    cmd.args(args);
    for (k, v) in envs {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn write_state_file(dir: &Path, name: &str, body: &str) -> std::path::PathBuf {
    let path = dir.join(name);
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(body.as_bytes()).unwrap();
    path
}

#[test]
fn figure1_csv_contract() {
    let out = qmono(&["figure1"], &[]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "alpha,Z1,Z2,Z3,Z4,Z5,Z6");
    assert_eq!(text.lines().count(), 1 + 57);
    assert!(!text.contains('\r'));
    // locale-independent decimal points, 17 significant digits
    assert!(text.contains("6.0000000000000000e0"));

    // row ordering Z1 >= ... >= Z6
    for line in text.lines().skip(1) {
        let vals: Vec<f64> = line.split(',').map(|v| v.parse().unwrap()).collect();
        for w in vals[1..].windows(2) {
            assert!(w[1] <= w[0] + 1e-12);
        }
    }
}

#[test]
fn figure_outputs_are_stable_across_runs_and_threads() {
    let a = qmono(&["figure2"], &[("MONOGAMY_THREADS", "1")]);
    let b = qmono(&["figure2"], &[("MONOGAMY_THREADS", "8")]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fig3.csv");
    let c = qmono(&["figure3", "--output", path.to_str().unwrap()], &[]);
    assert!(c.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("alpha,T1,T2,T3,T4\n"));
}

#[test]
fn config_errors_exit_2() {
    let out = qmono(&["figure1", "--alpha-start", "4.0"], &[]);
    assert_eq!(out.status.code(), Some(2));
    let out = qmono(&["figure3", "--alpha-step", "0"], &[]);
    assert_eq!(out.status.code(), Some(2));
    let out = qmono(&["measure"], &[]);
    assert_eq!(out.status.code(), Some(2));
    let out = qmono(&["verify", "--samples", "0"], &[]);
    assert_eq!(out.status.code(), Some(2));
    // clap usage errors share the config exit code
    let out = qmono(&["no-such-command"], &[]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn parse_errors_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_state_file(dir.path(), "bad.json", "{ this is not json");
    let out = qmono(&["measure", "--input", bad.to_str().unwrap()], &[]);
    assert_eq!(out.status.code(), Some(3));
    let out = qmono(&["measure", "--input", "/nonexistent/x.json"], &[]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn measure_reports_ghz_values() {
    let dir = tempfile::tempdir().unwrap();
    let h = 1.0 / 2f64.sqrt();
    let ghz = format!(
        r#"{{"dims":[2,2,2],"amps":[[{h},0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[{h},0]]}}"#
    );
    let path = write_state_file(dir.path(), "ghz.json", &ghz);
    let out = qmono(&["measure", "--input", path.to_str().unwrap()], &[]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("key,value\n"));
    let c_line = text.lines().find(|l| l.starts_with("C_A|BC,")).unwrap();
    let c: f64 = c_line.split(',').nth(1).unwrap().parse().unwrap();
    assert!((c - 1.0).abs() < 1e-9);
    assert!(text.contains("bound_pair_k1_C,skipped"));
}

#[test]
fn verify_is_deterministic_and_passes() {
    let a = qmono(&["verify", "--seed", "5"], &[("MONOGAMY_THREADS", "2")]);
    let b = qmono(&["verify", "--seed", "5"], &[("MONOGAMY_THREADS", "7")]);
    assert_eq!(
        a.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&a.stdout)
    );
    assert_eq!(b.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(text.contains("suite,samples,max_violation,tolerance,status"));
    assert!(text.contains("result,pass"));
}

#[test]
fn compare_emits_truth_and_bounds() {
    let dir = tempfile::tempdir().unwrap();
    // example-i amplitudes
    let r = 2f64.sqrt() / 4.0;
    let body = format!(
        r#"{{"dims":[2,2,2],"amps":[[0.5,0],[0,0],[0,0],[0,0],[0.5,0],[{r},0],[0.5,0],[{r},0]]}}"#
    );
    let path = write_state_file(dir.path(), "ex1.json", &body);
    let out = qmono(
        &[
            "compare",
            "--input",
            path.to_str().unwrap(),
            "--alpha-end",
            "8.0",
        ],
        &[],
    );
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text
        .lines()
        .next()
        .unwrap()
        .starts_with("alpha,C_truth,C_full"));
    assert!(text.lines().count() > 2);
}
