//! Verification suites: named collections of checks run concurrently and
//! collected into `CheckReport`s in a stable order.

mod deformation;
mod gauge;
mod matrix;
mod quantum;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gauge_kk::{Metric, Vacuum};
use crate::matrix_geometry::MatrixAlgebra;
use crate::quantum::{presentation_by_name, QParams};
use crate::report::{Check, CheckReport};
use crate::scalar::{GaussRat, Scalar};

/// Every library operation a suite can exercise; each must appear in the
/// `ops` of at least one check of the `all` suite.
pub const OPERATIONS: [&str; 37] = [
    "scalar_arith",
    "evaluate_at",
    "solve_linear",
    "eigen_numeric",
    "levi_civita",
    "build_algebra",
    "differential",
    "canonical_theta",
    "wedge",
    "interior_and_lie",
    "symplectic",
    "hodge_integrate",
    "split_derivation",
    "hybrid_d",
    "field_strength",
    "vacuum_check",
    "mass_spectrum",
    "linear_connection",
    "build_kappa_algebra",
    "jacobi_check",
    "uea_normal_order",
    "casimir_centrality",
    "center_diff_check",
    "invariant_antisym_solver",
    "cocycle_first_order_check",
    "orbit_invariants",
    "poincare_action",
    "normal_order",
    "confluence_check",
    "covariance_check",
    "qdet_ops",
    "hopf_ops",
    "rtt_check",
    "sigma_ops",
    "quantum_connection",
    "run_suite",
    "normal_form",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Matrix,
    Gauge,
    Deformation,
    Quantum,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 5] = ["matrix", "gauge", "deformation", "quantum", "all"];

    fn parts(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![Suite::Matrix, Suite::Gauge, Suite::Deformation, Suite::Quantum],
            s => vec![s],
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "matrix" => Ok(Suite::Matrix),
            "gauge" => Ok(Suite::Gauge),
            "deformation" => Ok(Suite::Deformation),
            "quantum" => Ok(Suite::Quantum),
            "all" => Ok(Suite::All),
            _ => Err(Error::Config(format!("unknown suite `{s}` ({})", Suite::NAMES.join("|")))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = [Suite::Matrix, Suite::Gauge, Suite::Deformation, Suite::Quantum, Suite::All]
            .iter()
            .position(|s| s == self)
            .unwrap();
        f.write_str(Suite::NAMES[i])
    }
}

/// Parameters shared by all suites. `None` means the suite default:
/// symbolic `q`, `p`, `κ`; sizes `{2, 3, 4}` for matrix checks, `{2, 3}`
/// for connections and `2` for the gauge model; both vacua and metrics.
#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub n: Option<usize>,
    pub q_eval: Option<GaussRat>,
    pub p_eval: Option<GaussRat>,
    pub kappa_eval: Option<GaussRat>,
    pub vacuum: Option<Vacuum>,
    pub metric: Option<Metric>,
    pub seed: u64,
    /// Randomized samples per size for `d² = 0` and Leibniz.
    pub samples: usize,
    /// A user-supplied basis replaces the default Gell-Mann algebras.
    pub basis: Option<MatrixAlgebra>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            n: None,
            q_eval: None,
            p_eval: None,
            kappa_eval: None,
            vacuum: None,
            metric: None,
            seed: 0,
            samples: 200,
            basis: None,
        }
    }
}

impl SuiteOptions {
    pub fn validate(&self) -> Result<()> {
        if let Some(n) = self.n {
            if n < 2 {
                return Err(Error::SizeTooSmall(n));
            }
        }
        for (name, v) in [("q", &self.q_eval), ("p", &self.p_eval)] {
            if v.as_ref().is_some_and(GaussRat::is_zero) {
                return Err(Error::DivisionByZero(format!("{name} must be nonzero")));
            }
        }
        Ok(())
    }

    pub fn q(&self) -> Scalar {
        self.q_eval.clone().map_or_else(|| Scalar::param("q"), Scalar::constant)
    }

    pub fn p(&self) -> Scalar {
        self.p_eval.clone().map_or_else(|| Scalar::param("p"), Scalar::constant)
    }

    pub fn kappa(&self) -> Scalar {
        self.kappa_eval.clone().map_or_else(|| Scalar::param("kappa"), Scalar::constant)
    }

    pub fn qparams(&self) -> Result<QParams> {
        QParams::new(self.q(), self.p())
    }

    fn algebras(&self, default: &[usize]) -> Result<Vec<MatrixAlgebra>> {
        if let Some(b) = &self.basis {
            return Ok(vec![b.clone()]);
        }
        match self.n {
            Some(n) => Ok(vec![MatrixAlgebra::build(n)?]),
            None => default.iter().map(|&n| MatrixAlgebra::build(n)).collect(),
        }
    }
}

type Job = Box<dyn Fn() -> Result<Vec<Check>> + Send + Sync>;

/// A unit of work producing one or more checks under fixed parameters.
pub(crate) struct Task {
    name: String,
    params: BTreeMap<String, String>,
    job: Job,
}

impl Task {
    pub(crate) fn new(name: &str, params: &[(&str, String)], job: impl Fn() -> Result<Vec<Check>> + Send + Sync + 'static) -> Self {
        Task {
            name: name.to_string(),
            params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            job: Box::new(job),
        }
    }

    fn run(&self, suite: &str) -> Vec<CheckReport> {
        let start = Instant::now();
        let checks = match (self.job)() {
            Ok(c) => c,
            Err(e) => vec![Check::fail(&format!("{}-error", self.name), "task completes without error", e.to_string())],
        };
        let ms = start.elapsed().as_secs_f64() * 1e3 / checks.len().max(1) as f64;
        checks
            .into_iter()
            .map(|c| CheckReport::from_check(suite, &self.params, c, ms))
            .collect()
    }
}

fn tasks_for(suite: Suite, opts: &SuiteOptions) -> Result<Vec<Task>> {
    match suite {
        Suite::Matrix => matrix::tasks(opts),
        Suite::Gauge => gauge::tasks(opts),
        Suite::Deformation => deformation::tasks(opts),
        Suite::Quantum => quantum::tasks(opts),
        Suite::All => unreachable!("expanded by parts()"),
    }
}

/// Runs every check of `suite` concurrently; the result order is the task
/// order, independent of scheduling. A task that errors becomes a failed
/// check, so nothing is skipped silently.
pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Result<Vec<CheckReport>> {
    opts.validate()?;
    let mut jobs: Vec<(String, Task)> = Vec::new();
    for part in suite.parts() {
        for t in tasks_for(part, opts)? {
            jobs.push((part.to_string(), t));
        }
    }
    let mut out: Vec<CheckReport> = jobs.par_iter().map(|(s, t)| t.run(s)).flatten().collect();
    out.push(completeness(&suite.to_string(), &out));
    Ok(out)
}

fn completeness(suite: &str, reports: &[CheckReport]) -> CheckReport {
    let mut seen = std::collections::BTreeSet::new();
    let dup = reports
        .iter()
        .find(|r| !seen.insert((r.suite.clone(), r.id.clone(), r.params.clone())))
        .map(|r| format!("duplicate check id `{}`", r.id));
    let c = Check::from_witness("report-complete", "check ids are unique per parameter point", dup)
        .with_ops(&["run_suite"]);
    CheckReport::from_check(suite, &BTreeMap::new(), c, 0.0)
}

/// Normal form of a word in a shipped presentation, as printed by the CLI.
pub fn normal_form(presentation: &str, word: &str, params: &QParams) -> Result<String> {
    let p = presentation_by_name(presentation, params)?;
    let w = p.parse_word(word)?;
    Ok(p.display(&p.normal_order(&crate::ncpoly::NCPoly::word(w))))
}

pub(crate) fn fmt_n(a: &MatrixAlgebra) -> (&'static str, String) {
    ("n", a.n().to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_roundtrip() {
        for name in Suite::NAMES {
            assert_eq!(name.parse::<Suite>().unwrap().to_string(), name);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn options_validation() {
        let o = SuiteOptions { n: Some(1), ..Default::default() };
        assert_eq!(o.validate(), Err(Error::SizeTooSmall(1)));
        let o = SuiteOptions { q_eval: Some(GaussRat::zero()), ..Default::default() };
        assert!(o.validate().is_err());
    }

    #[test]
    fn normal_form_examples() {
        let p = QParams::symbolic();
        assert_eq!(normal_form("glpq", "da", &p).unwrap(), "ad + (q^-1 - p)·bc");
        assert_eq!(normal_form("manin", "yx", &p).unwrap(), "q^-1·xy");
        assert_eq!(normal_form("glpq", "a", &p).unwrap(), "a");
        assert!(matches!(normal_form("glpq", "az", &p), Err(Error::UnknownGenerator(_))));
    }
}
