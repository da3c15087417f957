use std::collections::BTreeSet;
use std::sync::OnceLock;

use ncgeom::report::{CheckReport, Report, Status};
use ncgeom::scalar::GaussRat;
use ncgeom::suites::{run_suite, Suite, SuiteOptions, OPERATIONS};

fn default_all() -> &'static [CheckReport] {
    static ALL: OnceLock<Vec<CheckReport>> = OnceLock::new();
    ALL.get_or_init(|| run_suite(Suite::All, &SuiteOptions::default()).unwrap())
}

#[test]
fn every_operation_is_exercised() {
    let reports = default_all();
    let seen: BTreeSet<&str> = reports.iter().flat_map(|r| r.ops.iter().map(String::as_str)).collect();
    let missing: Vec<&str> = OPERATIONS.iter().copied().filter(|op| !seen.contains(op)).collect();
    assert!(missing.is_empty(), "operations without a check: {missing:?}");
    let unknown: Vec<&str> = seen.iter().copied().filter(|op| !OPERATIONS.contains(op)).collect();
    assert!(unknown.is_empty(), "undeclared operations: {unknown:?}");
}

#[test]
fn ids_unique_and_report_complete() {
    let reports = default_all();
    let last = reports.last().unwrap();
    assert_eq!(last.id, "report-complete");
    assert_eq!(last.status, Status::Pass);
    for suite in ["matrix", "gauge", "deformation", "quantum"] {
        assert!(reports.iter().any(|r| r.suite == suite), "{suite} missing");
    }
}

fn strip_times(mut r: Report) -> String {
    for c in &mut r.checks {
        c.wall_time_ms = 0.0;
    }
    r.to_json()
}

#[test]
fn reports_are_deterministic_apart_from_wall_time() {
    let opts = SuiteOptions { seed: 7, samples: 20, ..Default::default() };
    let run = || strip_times(Report::new(vec!["verify".into()], run_suite(Suite::All, &opts).unwrap()));
    assert_eq!(run(), run());
}

#[test]
fn seed_changes_random_witnesses_only_through_params() {
    let a = run_suite(Suite::Matrix, &SuiteOptions { n: Some(2), seed: 1, samples: 10, ..Default::default() }).unwrap();
    let b = run_suite(Suite::Matrix, &SuiteOptions { n: Some(2), seed: 2, samples: 10, ..Default::default() }).unwrap();
    let ids = |v: &[CheckReport]| v.iter().map(|r| r.id.clone()).collect::<Vec<_>>();
    assert_eq!(ids(&a), ids(&b));
    assert!(a.iter().chain(&b).all(|r| r.status != Status::Fail));
}

#[test]
fn expected_failures_are_exactly_the_literal_statements() {
    let reports = default_all();
    let fails: BTreeSet<&str> = reports.iter().filter(|r| r.status == Status::Fail).map(|r| r.id.as_str()).collect();
    let want: BTreeSet<&str> = ["casimir-c4-central", "rtt-sl", "theta-xi-commutation-printed"].into();
    assert_eq!(fails, want);
    // corrected counterparts pass
    for id in ["casimir-c4-corrected-central", "rtt-diagonal", "theta-xi-commutation"] {
        assert!(reports.iter().filter(|r| r.id == id).all(|r| r.status == Status::Pass), "{id}");
    }
}

#[test]
fn evaluated_parameters() {
    let opts = SuiteOptions { q_eval: Some(GaussRat::i()), ..Default::default() };
    let r = run_suite(Suite::Quantum, &opts).unwrap();
    let pre = r.iter().find(|c| c.id == "curvature-prefactor").unwrap();
    assert_eq!(pre.witness.as_deref(), Some("value = 0"));
    assert_eq!(pre.params["q"], "i");

    let opts = SuiteOptions { kappa_eval: Some(GaussRat::ratio(1, 2)), ..Default::default() };
    let r = run_suite(Suite::Deformation, &opts).unwrap();
    let jac = r.iter().find(|c| c.id == "jacobi" && c.params.get("kappa").map(String::as_str) == Some("1/2")).unwrap();
    assert_eq!(jac.status, Status::Pass);
    let c4 = r.iter().find(|c| c.id == "casimir-c4-corrected-central" && c.params["kappa"] == "1/2").unwrap();
    assert_eq!(c4.status, Status::Pass);
}

#[test]
fn invalid_options_are_rejected() {
    assert!(run_suite(Suite::Matrix, &SuiteOptions { n: Some(1), ..Default::default() }).is_err());
    assert!(run_suite(Suite::Quantum, &SuiteOptions { p_eval: Some(GaussRat::zero()), ..Default::default() }).is_err());
}
