use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn mthull(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mthull")).args(args).output().expect("binary runs")
}

fn run_on(sub: &str, path: &Path, extra: &[&str]) -> Output {
    let mut args = vec![sub, path.to_str().unwrap()];
    args.extend_from_slice(extra);
    mthull(&args)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn spec_file(dir: &tempfile::TempDir, body: &str) -> PathBuf {
    let path = dir.path().join("code.spec");
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn classify_binary_qc() {
    let o = run_on("classify", &fixture("qc_binary.spec"), &[]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "SELF-ORTHOGONAL\ndim_code = 18\ndim_hull = 18\n");
}

#[test]
fn classify_mds_structured() {
    let o = run_on("classify", &fixture("mds_f4.spec"), &["--kappa", "1", "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["classification"], "Intermediate");
    assert_eq!(v["dim_code"], 7);
    assert_eq!(v["dim_qg"], 6);
    assert_eq!(v["dim_hull"], 1);
}

#[test]
fn hull_report_structured_fields() {
    let o = run_on("hull", &fixture("mt_f9.spec"), &["--kappa", "1", "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["N"], 12);
    assert_eq!(v["qg_gpm"][2][2], "x^12 + 2");
    assert_eq!(v["hull_gpm"][1][1], "x^4 + 2");
    assert_eq!(v["hull_gpm"][2][2], "x^6 + 1");
    assert_eq!(v["classification"], "Intermediate");
}

#[test]
fn output_is_deterministic() {
    let a = run_on("hull", &fixture("mds_f4.spec"), &["--kappa", "1"]);
    let b = run_on("hull", &fixture("mds_f4.spec"), &["--kappa", "1"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("hull_gpm:\n  x^2 + t^2*x + t | t*x^4 + x^3 + t^2*x^2 + t*x + 1\n  0 | x^5 + t\n"));
}

#[test]
fn element_styles() {
    let power = stdout(&run_on("dual", &fixture("gqc_f16.spec"), &["--kappa", "3"]));
    assert!(power.contains("t^10*x"), "{power}");
    let basis = stdout(&run_on("dual", &fixture("gqc_f16.spec"), &["--kappa", "3", "--elements", "basis"]));
    assert!(basis.contains("(t^2 + t + 1)*x"), "{basis}");
}

#[test]
fn reduce_identical_expand() {
    let o = run_on("reduce", &fixture("qt_f7.spec"), &[]);
    assert_eq!(stdout(&o), "1 | 0\n0 | x^2 + 2\n");
    let o = run_on("identical", &fixture("gqc_f16.spec"), &[]);
    assert_eq!(stdout(&o), "x + 1 | 1 | 0\n0 | x + 1 | t^5\n0 | 0 | x + 1\n");
    let o = run_on("expand", &fixture("mds_f4.spec"), &["--basis", "--format", "structured"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["rows"], 7);
    assert_eq!(v["cols"], 8);
}

#[test]
fn mindist_and_budget() {
    let o = run_on("mindist", &fixture("mds_f4.spec"), &[]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "n = 8\nk = 7\nd_min = 2\n");
    let o = run_on("mindist", &fixture("mds_f4.spec"), &["--budget", "100"]);
    assert_eq!(o.status.code(), Some(5));
}

#[test]
fn oracle_check_passes() {
    for (name, kappa) in [("gqc_f16.spec", "3"), ("mds_f4.spec", "1"), ("qc_binary.spec", "0")] {
        let o = run_on("oracle-check", &fixture(name), &["--kappa", kappa]);
        assert_eq!(o.status.code(), Some(0), "{name}: {}", stdout(&o));
        assert!(!stdout(&o).contains("FAIL"));
    }
    let o = run_on("oracle-check", &fixture("qt_f7.spec"), &["--allow-override"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn assumption_violation_exit_code() {
    let o = run_on("hull", &fixture("qt_f7.spec"), &[]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
}

#[test]
fn parse_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = spec_file(&dir, "p = 2\nblocks = 3\nlambdas = 1\ngpm = [ x + ) ]\n");
    assert_eq!(run_on("reduce", &path, &[]).status.code(), Some(2));
    let path = spec_file(&dir, "p = 2\nblocks = 3\nlambdas = 1\ncolour = red\ngpm = [ 1 ]\n");
    assert_eq!(run_on("reduce", &path, &[]).status.code(), Some(2));
    assert_eq!(run_on("reduce", &dir.path().join("missing.spec"), &[]).status.code(), Some(2));
    assert_eq!(mthull(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run_on("reduce", &fixture("mds_f4.spec"), &["--budget", "0"]).status.code(), Some(2));
}

#[test]
fn invalid_specs_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let reducible = spec_file(&dir, "p = 2\ne = 2\nmodulus = t^2 + 1\nblocks = 3\nlambdas = 1\ngpm = [ 1 ]\n");
    assert_eq!(run_on("reduce", &reducible, &[]).status.code(), Some(3));
    let zero_lambda = spec_file(&dir, "p = 3\nblocks = 3\nlambdas = 0\ngpm = [ 1 ]\n");
    assert_eq!(run_on("reduce", &zero_lambda, &[]).status.code(), Some(3));
    let not_a_gpm = spec_file(&dir, "p = 2\nblocks = 3\nlambdas = 1\ngpm = [ x ]\n");
    assert_eq!(run_on("reduce", &not_a_gpm, &[]).status.code(), Some(3));
    assert_eq!(run_on("hull", &fixture("mds_f4.spec"), &["--kappa", "2"]).status.code(), Some(3));
}
