//! Acceptance criteria 1-8: one PASS/FAIL line per criterion.
//! Each criterion requires its named checks to be present and passing,
//! plus direct recomputations that do not go through the suite layer.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use ncgeom::deformation::{build_kappa_algebra, invariant_antisym_solver, Casimir, SymmetryGroup};
use ncgeom::gauge_kk::{linear_connection, mass_spectrum, vacuum_check, Metric, Vacuum};
use ncgeom::matrix_geometry::MatrixAlgebra;
use ncgeom::quantum::plane::curvature_prefactor;
use ncgeom::quantum::{QParams, SHIPPED};
use ncgeom::report::{CheckReport, Status};
use ncgeom::scalar::{GaussRat, Scalar};
use ncgeom::suites::{run_suite, Suite, SuiteOptions};

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    ok: bool,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { ok: true, notes: Vec::new() }
    }

    fn require(&mut self, cond: bool, what: impl Into<String>) {
        if !cond {
            self.ok = false;
            self.notes.push(what.into());
        }
    }
}

/// Every report with this id whose params include `filter` must pass,
/// and there must be exactly `count` of them.
fn expect(o: &mut Outcome, reports: &[CheckReport], id: &str, filter: &[(&str, &str)], count: usize) {
    let hits: Vec<&CheckReport> = reports
        .iter()
        .filter(|r| r.id == id && filter.iter().all(|(k, v)| r.params.get(*k).map(String::as_str) == Some(*v)))
        .collect();
    o.require(hits.len() == count, format!("{id}: expected {count} reports, found {}", hits.len()));
    for r in hits {
        let p: BTreeMap<_, _> = r.params.iter().collect();
        o.require(
            r.status == Status::Pass,
            format!("{id} {p:?} is {:?}: {}", r.status, short(r.witness.as_deref().unwrap_or_default())),
        );
    }
}

fn short(w: &str) -> String {
    let mut s: String = w.chars().take(120).collect();
    if s.len() < w.len() {
        s.push('…');
    }
    s
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let v = f();
    (v, t.elapsed())
}

fn criterion1() -> Outcome {
    let mut o = Outcome::new();
    let (r, t) = timed(|| run_suite(Suite::Matrix, &SuiteOptions::default()).expect("matrix suite"));
    for n in ["2", "3", "4"] {
        for id in ["eq13-theta-squared", "eq12-dtheta", "eq16-lie-omega", "eq20-poisson"] {
            expect(&mut o, &r, id, &[("n", n)], 1);
        }
    }
    o.require(t < Duration::from_secs(60), format!("runtime {t:?} ≥ 60 s"));
    o.notes.push(format!("runtime {:.1} s", t.as_secs_f64()));
    o
}

fn criterion2() -> Outcome {
    let mut o = Outcome::new();
    let opts = SuiteOptions { samples: 200, ..Default::default() };
    let r = run_suite(Suite::Matrix, &opts).expect("matrix suite");
    for n in ["2", "3"] {
        expect(&mut o, &r, "d-squared-random", &[("n", n), ("samples", "200")], 1);
        expect(&mut o, &r, "leibniz-random", &[("n", n), ("samples", "200")], 1);
    }
    o
}

fn criterion3() -> Outcome {
    let mut o = Outcome::new();
    let r = run_suite(Suite::Gauge, &SuiteOptions::default()).expect("gauge suite");
    expect(&mut o, &r, "vacuum-zero", &[("n", "2")], 1);
    expect(&mut o, &r, "vacuum-delta", &[("n", "2")], 1);
    expect(&mut o, &r, "mass-higgs-levels", &[("n", "2")], 2);
    expect(&mut o, &r, "mass-u1-massless", &[("n", "2")], 4);
    expect(&mut o, &r, "mass-b-equal", &[("n", "2")], 2);

    // direct recomputation
    let a = MatrixAlgebra::build(2).unwrap();
    for v in [Vacuum::Zero, Vacuum::Delta] {
        let c = vacuum_check(&a, &v.tensor(a.dim()));
        o.require(c.is_vacuum && c.residual.is_empty(), format!("{v}: residual {:?}", c.residual));
    }
    for m in [Metric::Trace, Metric::Killing] {
        let s = mass_spectrum(&a, Vacuum::Delta, m).unwrap();
        let lv = s.levels("B", 1e-9);
        let ratio = lv.get(2).zip(lv.get(1)).map(|(x, y)| x / y);
        o.require(
            lv.len() == 3 && lv[0] == 0.0 && ratio.is_some_and(|r| (r - 4.0).abs() < 4e-9),
            format!("{m}: Higgs levels {lv:?}"),
        );
        o.notes.push(format!("{m}: Higgs mass² {lv:?}"));
        for v in [Vacuum::Zero, Vacuum::Delta] {
            let s = mass_spectrum(&a, v, m).unwrap();
            let u1 = s.families["A0"].iter().all(|x| x.abs() < 1e-12 * s.scale);
            o.require(u1, format!("{m}/{v}: U(1) mass² {:?}", s.families["A0"]));
        }
        let s = mass_spectrum(&a, Vacuum::Zero, m).unwrap();
        let b = &s.families["B-family"];
        o.require(b.iter().all(|x| (x - b[0]).abs() <= 1e-9 * b[0].abs()), format!("{m}: B=0 masses {b:?}"));
    }
    o
}

fn criterion4() -> Outcome {
    let mut o = Outcome::new();
    for n in [2, 3] {
        let a = MatrixAlgebra::build(n).unwrap();
        let c = linear_connection(&a);
        let d = a.dim();
        for k in 0..d {
            for l in 0..d {
                for m in 0..d {
                    for nn in 0..d {
                        let mut v = GaussRat::zero();
                        for r in 0..d {
                            v += &(a.c(l, r, k) * a.c(m, nn, r)) * &GaussRat::ratio(1, 8);
                        }
                        o.require(c.curvature[k][l][m][nn] == v, format!("n={n}: Ω^{k}_{l}{m}{nn}"));
                    }
                }
            }
        }
    }
    let r = run_suite(Suite::Gauge, &SuiteOptions::default()).expect("gauge suite");
    for n in ["2", "3"] {
        expect(&mut o, &r, "connection-curvature", &[("n", n)], 1);
    }
    o
}

fn criterion5() -> Outcome {
    let mut o = Outcome::new();
    let (r, t) = timed(|| {
        let alg = build_kappa_algebra(Scalar::param("kappa"));
        vec![
            alg.jacobi_check(),
            alg.casimir_centrality(Casimir::C2),
            alg.casimir_centrality(Casimir::C4),
            alg.center_diff_check(),
        ]
    });
    for c in &r {
        o.require(c.passed(), format!("{} (direct): {}", c.id, short(c.witness.as_deref().unwrap_or_default())));
    }
    let s = run_suite(Suite::Deformation, &SuiteOptions::default()).expect("deformation suite");
    let sym = [("kappa", "symbolic")];
    for id in ["jacobi", "casimir-c2-central", "casimir-c4-central", "center-x-minus-l"] {
        expect(&mut o, &s, id, &sym, 1);
    }
    o.require(t < Duration::from_secs(120), format!("runtime {t:?} ≥ 120 s"));
    o.notes.push(format!("runtime {:.1} s", t.as_secs_f64()));
    o
}

fn criterion6() -> Outcome {
    let mut o = Outcome::new();
    for (g, want) in [(SymmetryGroup::Rotations, 0), (SymmetryGroup::Lorentz, 0), (SymmetryGroup::Trivial, 6)] {
        let (dim, _) = invariant_antisym_solver(g).unwrap();
        o.require(dim == want, format!("{g:?}: dim {dim}, want {want}"));
    }
    let r = run_suite(Suite::Deformation, &SuiteOptions::default()).expect("deformation suite");
    for id in ["no-go-rotations", "no-go-lorentz", "no-go-trivial"] {
        expect(&mut o, &r, id, &[], 1);
    }
    o
}

fn criterion7() -> Outcome {
    let mut o = Outcome::new();
    let r = run_suite(Suite::Quantum, &SuiteOptions::default()).expect("quantum suite");
    let sym = [("q", "symbolic"), ("p", "symbolic")];
    for name in SHIPPED {
        expect(&mut o, &r, &format!("confluence-{name}"), &sym, 1);
    }
    expect(&mut o, &r, "rtt-sl", &[("q", "symbolic")], 1);
    for id in ["hopf-antipode-inverse", "hopf-coproduct-hom", "hopf-counit-hom", "cov-area"] {
        expect(&mut o, &r, id, &sym, 1);
    }
    // direct: R̂-relation residuals at p = q⁻¹
    let comps = ncgeom::quantum::rtt_components(&QParams::sl_symbolic()).unwrap();
    let bad = comps.iter().filter(|(_, e)| !e.is_zero()).count();
    o.require(bad == 0, format!("{bad} of 16 RTT components nonzero at p = q⁻¹ (all vanish at p = q)"));
    o
}

fn criterion8() -> Outcome {
    let mut o = Outcome::new();
    let r = run_suite(Suite::Quantum, &SuiteOptions::default()).expect("quantum suite");
    let q = [("q", "symbolic")];
    for id in [
        "theta-squared",
        "theta-x-commutation",
        "theta-xi-commutation-printed",
        "sigma-inverse-qrhat",
        "sigma-eigen",
        "curvature-prefactor-zeros",
        "curvature-prefactor-q1",
    ] {
        expect(&mut o, &r, id, &q, 1);
    }
    // exact evaluation: (1+q⁻²)(1+q⁻⁴) at q = i and q = 1
    let at_i = curvature_prefactor(&Scalar::constant(GaussRat::i())).unwrap();
    let at_1 = curvature_prefactor(&Scalar::one()).unwrap();
    o.require(at_i.is_zero(), format!("prefactor at q = i is {at_i}"));
    o.require(at_1 == Scalar::int(4), format!("prefactor at q = 1 is {at_1}"));
    let opts = SuiteOptions { q_eval: Some(GaussRat::i()), ..Default::default() };
    let ev = run_suite(Suite::Quantum, &opts).expect("quantum suite at q = i");
    let pre = ev.iter().find(|c| c.id == "curvature-prefactor");
    o.require(
        pre.is_some_and(|c| c.witness.as_deref() == Some("value = 0")),
        "--q-eval i: curvature-prefactor does not report 0",
    );
    o
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("matrix geometry exactness", criterion1),
        ("d² = 0 and graded Leibniz on random forms", criterion2),
        ("gauge vacua and mass spectrum", criterion3),
        ("linear connection curvature", criterion4),
        ("deformation algebra: Jacobi, Casimirs, center", criterion5),
        ("no-go for invariant antisymmetric tensors", criterion6),
        ("quantum group: confluence, RTT at p = q⁻¹, Hopf", criterion7),
        ("quantum-plane geometry", criterion8),
    ];
    let mut passed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let o = f();
        passed += o.ok as usize;
        let tag = if o.ok { "PASS" } else { "FAIL" };
        let notes = if o.notes.is_empty() { String::new() } else { format!(" ({})", o.notes.join("; ")) };
        println!("criterion {}: {tag} {name}{notes}", i + 1);
    }
    println!("{passed}/8 criteria pass");
}
