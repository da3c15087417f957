use std::process::Command;

use ncgeom::report::Report;

fn ncgeom(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_ncgeom")).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn verify_matrix_passes() {
    let (code, out, _) = ncgeom(&["verify", "matrix", "--n", "2"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("PASS matrix/eq13-theta-squared [n=2]"));
}

#[test]
fn failing_suite_exits_one() {
    let (code, out, _) = ncgeom(&["verify", "quantum"]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL quantum/rtt-sl"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(ncgeom(&["verify", "bogus"]).0, 2);
    assert_eq!(ncgeom(&["verify", "matrix", "--n", "1"]).0, 2);
    assert_eq!(ncgeom(&["verify", "quantum", "--q-eval", "0"]).0, 2);
    assert_eq!(ncgeom(&["verify", "gauge", "--vacuum", "other"]).0, 2);
    let (code, _, err) = ncgeom(&["nf", "glpq", "az"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown generator"));
}

#[test]
fn normal_forms() {
    assert_eq!(ncgeom(&["nf", "glpq", "da"]).1.trim(), "ad + (q^-1 - p)·bc");
    assert_eq!(ncgeom(&["nf", "manin", "yx"]).1.trim(), "q^-1·xy");
    assert_eq!(ncgeom(&["nf", "glpq", "a"]).1.trim(), "a");
    assert_eq!(ncgeom(&["nf", "manin", "yx", "--q-eval", "2"]).1.trim(), "1/2·xy");
}

#[test]
fn quantum_at_i_reports_zero_prefactor() {
    let (_, out, _) = ncgeom(&["verify", "quantum", "--q-eval", "i"]);
    assert!(out.contains("PASS quantum/curvature-prefactor [q=i]: value = 0"), "{out}");
}

#[test]
fn spectrum_has_three_higgs_levels() {
    let (code, out, _) = ncgeom(&["spectrum", "--n", "2", "--vacuum", "delta"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let b: Vec<f64> = v["families"]["B"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect();
    let scale = v["scale"].as_f64().unwrap();
    let mut levels: Vec<f64> = Vec::new();
    for x in b {
        let x = if x.abs() < 1e-9 * scale { 0.0 } else { x };
        if !levels.iter().any(|l| (l - x).abs() <= 1e-9 * scale) {
            levels.push(x);
        }
    }
    assert_eq!(levels.len(), 3, "{levels:?}");
}

#[test]
fn json_report_written_atomically() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let p = path.to_str().unwrap();
    let (code, out, _) = ncgeom(&["verify", "gauge", "--vacuum", "zero", "--metric", "trace", "--out", p, "--json"]);
    assert_eq!(code, 0);
    let file: Report = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let printed: Report = serde_json::from_str(&out).unwrap();
    assert_eq!(file, printed);
    assert_eq!(file.summary.fail, 0);
    assert!(file.invocation.contains(&"gauge".to_string()));
    assert!(file.checks.iter().all(|c| c.params.get("vacuum").is_none_or(|v| v == "zero")));
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}

#[test]
fn custom_basis_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("basis.json");
    // Pauli matrices, rows of [re, im] pairs
    let json = r#"{"n": 2, "basis": [
        [[[0,0],[1,0]],[[1,0],[0,0]]],
        [[[0,0],[0,-1]],[[0,1],[0,0]]],
        [[[1,0],[0,0]],[[0,0],[-1,0]]]
    ]}"#;
    std::fs::write(&path, json).unwrap();
    let (code, out, err) = ncgeom(&["verify", "matrix", "--basis", path.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}{err}");
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"n": 2, "basis": [[[[1,0],[0,0]],[[0,0],[1,0]]]]}"#).unwrap();
    assert_eq!(ncgeom(&["verify", "matrix", "--basis", bad.to_str().unwrap()]).0, 2);
}
