use std::fs;
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_fs-lab");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).env("FS_LAB_THREADS", "2").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn bound_json_at_lambda_zero() {
    let o = run(&["bound", "--alpha", "2", "--lambda", "0", "--format", "json"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["bound"], 3.0);
    assert_eq!(v["regime"], "Branch1");
    assert_eq!(v["extremal"]["kind"], "OuterExtremal");
    assert_eq!(v["thresholds"]["t3"], 0.666666667);
}

#[test]
fn bound_text_branch_three() {
    let o = run(&["bound", "--alpha", "2", "--lambda", "0.7"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("bound: 0.602515734"), "{text}");
    assert!(text.contains("regime: Branch3_k1"));
}

#[test]
fn bound_at_case_e_point() {
    let o = run(&["bound", "--alpha", "1.5", "--lambda", "0.6666666666666666", "--format", "json"]);
    let v = json(&o);
    assert_eq!(v["bound"], 0.5);
    assert_eq!(v["extremal"]["kind"], "CaseEFree");
}

#[test]
fn invalid_alpha_is_a_usage_error() {
    for a in ["2.5", "1", "0.3", "nan"] {
        let o = run(&["bound", "--alpha", a, "--lambda", "0"]);
        assert_eq!(o.status.code(), Some(2), "alpha {a}");
        assert!(String::from_utf8_lossy(&o.stderr).contains("alpha must lie in (1,2]"), "alpha {a}");
    }
}

#[test]
fn output_is_byte_stable() {
    let args = ["bound", "--alpha", "1.37", "--lambda", "0.52", "--format", "json"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

fn parse_curve(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut lines = text.lines();
    let header = lines.next().unwrap().split(',').map(str::to_owned).collect();
    let rows = lines.map(|l| l.split(',').map(str::to_owned).collect()).collect();
    (header, rows)
}

#[test]
fn curve_rows_are_continuous_and_agree_with_the_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("curve.csv");
    let o = run(&[
        "curve", "--alpha", "2", "--lambda-min", "-1", "--lambda-max", "1.2", "--steps", "45", "--out",
        out.to_str().unwrap(), "--compare", "oracle,classical,koepf",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let (header, rows) = parse_curve(&fs::read_to_string(&out).unwrap());
    assert_eq!(header, ["lambda", "bound", "regime", "oracle", "classical_s", "koepf_starlike"]);
    assert_eq!(rows.len(), 45);

    let num = |s: &str| s.parse::<f64>().unwrap();
    let dl = 2.2 / 44.0;
    for w in rows.windows(2) {
        assert!((num(&w[1][1]) - num(&w[0][1])).abs() < 4.0 * dl + 1e-6);
    }
    for r in &rows {
        assert!((num(&r[1]) - num(&r[3])).abs() < 1e-4, "row {r:?}");
        let lambda = num(&r[0]);
        assert_eq!(r[4].is_empty(), !(0.0..=1.0).contains(&lambda), "row {r:?}");
    }
}

#[test]
fn curve_passes_through_case_e_value() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("c.csv");
    let o = run(&[
        "curve", "--alpha", "1.8", "--lambda-min", "0", "--lambda-max", "1", "--steps", "4", "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let (header, rows) = parse_curve(&fs::read_to_string(&out).unwrap());
    assert_eq!(header, ["lambda", "bound", "regime"]);
    assert_eq!(rows[2][0], "0.666666667");
    assert_eq!(rows[2][1], "0.6");
}

#[test]
fn curve_to_unwritable_path_fails() {
    let o = run(&[
        "curve", "--alpha", "2", "--lambda-min", "0", "--lambda-max", "1", "--steps", "3", "--out",
        "/nonexistent-dir/x/curve.csv",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn curve_rejects_reversed_interval() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("c.csv");
    let o = run(&[
        "curve", "--alpha", "2", "--lambda-min", "1", "--lambda-max", "0", "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_passes_and_catches_perturbation() {
    let o = run(&["verify", "--alpha", "1.5,2", "--steps", "11"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = run(&["verify", "--alpha", "1.5,2", "--steps", "11", "--perturb-bound", "1e-3"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn extremal_outer_coefficients() {
    let o = run(&["extremal", "--alpha", "2", "--lambda", "0", "--order", "4"]);
    assert!(o.status.success());
    let v = json(&o);
    let re: Vec<f64> = v["coefficients"].as_array().unwrap().iter().map(|c| c["re"].as_f64().unwrap()).collect();
    assert_eq!(re, [1.0, 2.0, 3.0, 4.0]);
    assert_eq!(v["achieved"], 3.0);
}

#[test]
fn extremal_case_f_achieves_bound() {
    let o = run(&["extremal", "--alpha", "2", "--lambda", "0.7"]);
    let v = json(&o);
    assert_eq!(v["extremal"]["kind"], "CaseFTheta");
    assert_eq!(v["achieved"], v["bound"]);
}

#[test]
fn extremal_csv() {
    let o = run(&["extremal", "--alpha", "1.5", "--lambda", "0.5", "--order", "3", "--format", "csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,re,im,achieved,bound"));
    assert_eq!(lines.count(), 3);
}

fn write_coeffs(dir: &tempfile::TempDir, body: &str) -> String {
    let p = dir.path().join("f.txt");
    fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_owned()
}

#[test]
fn check_concave_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    // f = z + z^2 + ... + z^6, the start of z/(1-z), which has alpha=2 concavity at small radius
    let f = write_coeffs(&dir, "0,0\n1,0\n1,0\n1,0\n1,0\n1,0\n1,0\n");
    let o = run(&["check-concave", &f, "--alpha", "2", "--max-radius", "0.3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("verdict: PASS"));

    let f = write_coeffs(&dir, "0,0\n1,0\n5,0\n");
    let o = run(&["check-concave", &f, "--alpha", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("verdict: FAIL"));
}

#[test]
fn check_concave_reports_bad_line() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_coeffs(&dir, "0,0\n1,0\n\n0.5\n");
    let o = run(&["check-concave", &f, "--alpha", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 4"));

    let o = run(&["check-concave", "/nonexistent/file.txt", "--alpha", "2"]);
    assert_eq!(o.status.code(), Some(2));
}
