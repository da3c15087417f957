//! Matrix-geometry checks, plus the scalar-kernel examples.

use std::collections::HashMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{fmt_n, SuiteOptions, Task};
use crate::error::{Error, Result};
use crate::forms::Form;
use crate::matrix_geometry::{bracket_residual, Derivation, MatrixAlgebra};
use crate::report::Check;
use crate::scalar::{levi_civita, point, symmetric_eigenvalues, GaussRat, Mat, Scalar};

pub(super) fn tasks(opts: &SuiteOptions) -> Result<Vec<Task>> {
    let mut out = vec![Task::new("scalar", &[], || Ok(scalar_examples()))];
    for a in opts.algebras(&[2, 3, 4])? {
        let a = Arc::new(a);
        let custom = opts.basis.is_some();
        let p = [fmt_n(&a)];
        let x = a.clone();
        out.push(Task::new("structure", &p, move || structure(&x, custom)));
        let x = a.clone();
        out.push(Task::new("differential", &p, move || differential(&x)));
        let x = a.clone();
        out.push(Task::new("symplectic", &p, move || symplectic(&x)));
        let x = a.clone();
        out.push(Task::new("hodge", &p, move || hodge(&x)));
    }
    // randomized checks: n ∈ {2, 3} by default
    let (seed, samples) = (opts.seed, opts.samples);
    for a in opts.algebras(&[2, 3])? {
        let a = Arc::new(a);
        let p = [fmt_n(&a), ("seed", seed.to_string()), ("samples", samples.to_string())];
        out.push(Task::new("random", &p, move || randomized(&a, seed, samples)));
    }
    Ok(out)
}

fn c(v: GaussRat) -> Scalar {
    Scalar::constant(v)
}

fn ok_or(id: &str, anchor: &str, ops: &[&str], w: Option<String>) -> Check {
    Check::from_witness(id, anchor, w).with_ops(ops)
}

// ---- scalar kernel ----

fn scalar_examples() -> Vec<Check> {
    let q = Scalar::param("q");
    let qi = Scalar::param_pow("q", -1);
    let one = Scalar::one();
    let mut out = Vec::new();

    let ring = [
        (&(&q + &one) * &(&q - &one), &q.pow(2) - &one, "(q+1)(q−1) = q² − 1"),
        (&q * &qi, one.clone(), "q·q⁻¹ = 1"),
        (&(&q - &qi) + &qi, q.clone(), "(q − q⁻¹) + q⁻¹ = q"),
    ];
    let w = ring.iter().find(|(l, r, _)| l != r).map(|(l, _, s)| format!("{s}: got {l}"));
    out.push(ok_or("scalar-ring-examples", "Laurent ring identities", &["scalar_arith"], w));

    let eval = || -> Result<Option<String>> {
        let at = |s: &Scalar, name: &str, v: GaussRat| s.evaluate_at(&point(&[(name, v)]));
        let f = &one + &Scalar::param_pow("q", -2);
        if !at(&f, "q", GaussRat::i())?.is_zero() {
            return Ok(Some("1 + q⁻² at q = i".into()));
        }
        // 1 + q⁻⁴ = (1 + t⁻²) with t = q²
        let g = &one + &Scalar::param_pow("t", -2);
        let subs: HashMap<String, Scalar> = [("t".to_string(), q.pow(2))].into();
        if g.substitute(&subs)? != &one + &Scalar::param_pow("q", -4) {
            return Ok(Some("(1 + t⁻²)|t=q² ≠ 1 + q⁻⁴".into()));
        }
        if !at(&g, "t", GaussRat::i())?.is_zero() {
            return Ok(Some("1 + t⁻² at t = i".into()));
        }
        if !at(&Scalar::param("kappa"), "kappa", GaussRat::zero())?.is_zero() {
            return Ok(Some("κ at κ = 0".into()));
        }
        if !matches!(at(&qi, "q", GaussRat::zero()), Err(Error::DivisionByZero(_))) {
            return Ok(Some("q⁻¹ at q = 0 must be a division by zero".into()));
        }
        if !matches!(qi.evaluate_at(&point(&[])), Err(Error::MissingParameter(_))) {
            return Ok(Some("missing parameter not reported".into()));
        }
        Ok(None)
    };
    out.push(match eval() {
        Ok(w) => ok_or("scalar-evaluate-examples", "1 + q⁻² = 0 at q = i; 1 + t⁻² = 0 at t = q² = i", &["evaluate_at"], w),
        Err(e) => Check::fail("scalar-evaluate-examples", "evaluation", e.to_string()),
    });

    let solve = || -> Result<Option<String>> {
        if !Mat::identity(3).kernel()?.is_empty() {
            return Ok(Some("identity 3×3 has a kernel".into()));
        }
        if Mat::zeros(2, 2).kernel()?.len() != 2 {
            return Ok(Some("zero 2×2 kernel dimension ≠ 2".into()));
        }
        let a = Mat::from_rows(vec![
            vec![Scalar::int(2), Scalar::int(1), Scalar::int(-1)],
            vec![Scalar::int(-3), Scalar::int(-1), Scalar::int(2)],
            vec![Scalar::int(-2), Scalar::int(1), Scalar::int(2)],
        ])?;
        let b = [Scalar::int(8), Scalar::int(-11), Scalar::int(-3)];
        let x = a.solve(&b)?.ok_or_else(|| Error::Dimension("no solution".into()))?;
        if a.mul_vec(&x) != b {
            return Ok(Some("solution does not satisfy the system".into()));
        }
        Ok(None)
    };
    out.push(match solve() {
        Ok(w) => ok_or("solve-linear-examples", "kernel dimensions; A x = b re-substituted", &["solve_linear"], w),
        Err(e) => Check::fail("solve-linear-examples", "linear solve", e.to_string()),
    });

    let eig = || -> Result<Option<String>> {
        let close = |a: &[f64], b: &[f64]| a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-9);
        let d = symmetric_eigenvalues(&[2.0, 0.0, 0.0, 8.0], 2)?;
        if !close(&d, &[2.0, 8.0]) {
            return Ok(Some(format!("diag(2,8) → {d:?}")));
        }
        let s = symmetric_eigenvalues(&[0.0, 1.0, 1.0, 0.0], 2)?;
        if !close(&s, &[-1.0, 1.0]) {
            return Ok(Some(format!("[[0,1],[1,0]] → {s:?}")));
        }
        if !matches!(symmetric_eigenvalues(&[0.0, 1.0, 0.0, 0.0], 2), Err(Error::NotSymmetric(_))) {
            return Ok(Some("non-symmetric input accepted".into()));
        }
        Ok(None)
    };
    out.push(match eig() {
        Ok(w) => ok_or("eigen-examples", "diag(2,8) → {2,8}; flip → {−1,1}", &["eigen_numeric"], w),
        Err(e) => Check::fail("eigen-examples", "eigenvalues", e.to_string()),
    });

    let lc = [([0, 1, 2, 3], 1), ([1, 0, 2, 3], -1), ([0, 0, 2, 3], 0)];
    let w = lc
        .iter()
        .find(|(idx, v)| levi_civita(idx) != *v)
        .map(|(idx, v)| format!("ε{idx:?} ≠ {v}"));
    out.push(ok_or("levi-civita-examples", "ε_0123 = 1", &["levi_civita"], w));
    out
}

// ---- structure data ----

fn structure(a: &MatrixAlgebra, custom: bool) -> Result<Vec<Check>> {
    let d = a.dim();
    let ops = ["build_algebra", "scalar_arith"];
    let mut out = Vec::new();

    let w = (0..d).find(|&k| a.e(k).adjoint() != *a.e(k) || !a.e(k).trace().is_zero());
    out.push(ok_or("basis-hermitian-traceless", "E_k† = E_k, tr E_k = 0", &ops, w.map(|k| format!("E_{}", k + 1))));

    let mut w = None;
    'c: for k in 0..d {
        for m in 0..d {
            for l in 0..d {
                if a.c(k, m, l) != &-a.c(m, k, l).clone() || a.s(k, m, l) != a.s(m, k, l) {
                    w = Some(format!("(k, m, l) = ({}, {}, {})", k + 1, m + 1, l + 1));
                    break 'c;
                }
            }
            let tc = (0..d).fold(GaussRat::zero(), |acc, j| &acc + a.c(j, m, j));
            let ts = (0..d).fold(GaussRat::zero(), |acc, j| &acc + a.s(j, m, j));
            if !tc.is_zero() || !ts.is_zero() {
                w = Some(format!("Σ_k C_km^k or Σ_k S_km^k nonzero at m = {}", m + 1));
                break 'c;
            }
        }
    }
    out.push(ok_or("structure-constants", "C antisymmetric, S symmetric, both trace-free", &ops, w));

    let w = (0..d)
        .flat_map(|k| (0..d).map(move |m| (k, m)))
        .find(|&(k, m)| !a.product_residual(k, m).is_zero())
        .map(|(k, m)| format!("E_{}E_{}", k + 1, m + 1));
    out.push(ok_or("product-decomposition", "E_kE_m = (1/n)t_km + S_km^j E_j − (i/2)C_km^j E_j", &ops, w));

    let sym = |m: &[Vec<GaussRat>]| (0..d).all(|k| (0..d).all(|l| m[k][l] == m[l][k]));
    out.push(Check::new("metrics-symmetric", "t and g symmetric", sym(a.t()) && sym(a.g())).with_ops(&ops));

    let ratio = a.killing_trace_ratio();
    let w = match &ratio {
        Some(r) => format!("g = {r}·t"),
        None => "g is not proportional to t".into(),
    };
    out.push(Check::pass("killing-trace-ratio", "g_km = r·t_km recorded").with_witness(w).with_ops(&ops));

    if a.n() == 2 && !custom {
        // oracle: raw matrix commutator, no structure-constant tables
        let comm = a.e(0).commutator(a.e(1)).scale(&Scalar::i());
        let ok = comm == a.e(2).scale(&Scalar::int(-2)) && a.c(0, 1, 2) == &GaussRat::int(-2);
        out.push(Check::new("pauli-c123", "i[E_1, E_2] = −2E_3, so C_12^3 = −2", ok).with_ops(&ops));
        // oracle: g_km = −tr(ad_k ad_m), with ad read off by traces
        let ad = |k: usize| {
            Mat::from_fn(d, d, |l, j| {
                let x = a.e(k).commutator(a.e(j)).scale(&Scalar::i());
                (a.e(l) * &x).trace().scale(&GaussRat::ratio(1, 2))
            })
        };
        let g_ok = (0..d).all(|k| {
            (0..d).all(|m| {
                let v = -(&ad(k) * &ad(m)).trace();
                v == Scalar::int(if k == m { 8 } else { 0 }) && c(a.g()[k][m].clone()) == v
            })
        });
        out.push(Check::new("pauli-killing", "g = 8·1₃", g_ok).with_ops(&ops));
    }
    Ok(out)
}

// ---- differential calculus ----

fn differential(a: &MatrixAlgebra) -> Result<Vec<Check>> {
    let d = a.dim();
    let n = a.n();
    let ops = ["differential"];
    let mut out = Vec::new();

    let one = a.function(a.identity());
    out.push(Check::new("d-one", "d1 = 0", a.differential(&one)?.is_zero()).with_ops(&ops));

    // oracle: dE_k(∂_m) = i[E_m, E_k] straight from matrix products
    let mut w = None;
    for k in 0..d {
        let mut expect = Form::zero(n, d);
        for m in 0..d {
            expect.add_term(vec![m], a.e(m).commutator(a.e(k)).scale(&Scalar::i()));
        }
        if a.differential(&a.function(a.e(k).clone()))? != expect {
            w = Some(format!("k = {}", k + 1));
            break;
        }
    }
    out.push(ok_or("eq10-dE", "dE_k = C_mk^l E_l θ^m", &ops, w));

    let mut w = None;
    for k in 0..d {
        let de = a.differential(&a.function(a.e(k).clone()))?;
        if !a.differential(&de)?.is_zero() || !a.differential(&a.differential(&a.theta(k))?)?.is_zero() {
            w = Some(format!("k = {}", k + 1));
            break;
        }
    }
    out.push(ok_or("d-squared-basis", "d(dE_k) = 0, d(dθ^k) = 0", &ops, w));

    let mut w = None;
    for k in 0..d {
        let mut half_c = Form::zero(n, d);
        for m in 0..d {
            for l in 0..d {
                if !a.c(m, l, k).is_zero() {
                    let t = a.theta(m).wedge(&a.theta(l)).scale_c(&(&GaussRat::ratio(1, 2) * a.c(m, l, k)));
                    half_c.add_assign(&t);
                }
            }
        }
        let r = a.differential(&a.theta(k))?.add(&half_c);
        if !r.is_zero() {
            w = Some(format!("k = {}: {r}", k + 1));
            break;
        }
    }
    out.push(ok_or("eq12-dtheta", "dθ^k + ½C_ml^k θ^mθ^l = 0", &["differential", "wedge"], w));

    let th = a.canonical_theta();
    let r = a.differential(&th)?.add(&th.wedge(&th));
    let w = (!r.is_zero()).then(|| r.to_string());
    out.push(ok_or("eq13-theta-squared", "dθ + θ∧θ = 0", &["canonical_theta", "differential", "wedge"], w));

    let mut w = None;
    'b: for k in 0..d {
        for m in 0..d {
            for f in 0..d {
                if !bracket_residual(a, k, m, a.e(f)).is_zero() {
                    w = Some(format!("[∂_{}, ∂_{}] on E_{}", k + 1, m + 1, f + 1));
                    break 'b;
                }
            }
        }
    }
    out.push(ok_or("eq5-derivation-bracket", "[∂_k, ∂_m] = C_km^l ∂_l", &["build_algebra"], w));

    let t = |k| a.theta(k);
    let e1t1 = Form::monomial(d, vec![0], a.e(0).clone());
    let e2t2 = Form::monomial(d, vec![1], a.e(1).clone());
    let lhs = e1t1.wedge(&e2t2).add(&e2t2.wedge(&e1t1));
    let rhs = Form::monomial(d, vec![0, 1], a.e(0).commutator(a.e(1)));
    let ok = t(0).wedge(&t(0)).is_zero() && t(0).wedge(&t(1)) == t(1).wedge(&t(0)).neg() && lhs == rhs;
    out.push(Check::new("wedge-examples", "θ¹θ¹ = 0, θ¹θ² = −θ²θ¹, (E₁θ¹)(E₂θ²) + (E₂θ²)(E₁θ¹) = [E₁,E₂]θ¹θ²", ok).with_ops(&["wedge"]));

    if d >= 3 {
        let x = Derivation::basis(a, 0).left_mul(a.e(0));
        let defect = !x.leibniz_defect(a, a.e(1), a.e(2)).is_zero();
        let honest = Derivation::basis(a, 0).leibniz_defect(a, a.e(1), a.e(2)).is_zero();
        out.push(
            Check::new("derivations-not-left-module", "E₁·∂₁ violates Leibniz on E₂E₃; ∂₁ does not", defect && honest)
                .with_ops(&["interior_and_lie"]),
        );
    }
    Ok(out)
}

// ---- interior product, Lie derivative, symplectic structure ----

fn symplectic(a: &MatrixAlgebra) -> Result<Vec<Check>> {
    let d = a.dim();
    let n = a.n();
    let ops = ["interior_and_lie"];
    let sops = ["symplectic", "interior_and_lie"];
    let mut out = Vec::new();

    let mut ok = true;
    for m in 0..d {
        let dm = Derivation::basis(a, m);
        for k in 0..d {
            let v = a.theta(k).interior(dm.comps())?;
            let expect = if k == m { a.function(a.identity()) } else { Form::zero(n, d) };
            ok &= v == expect;
        }
    }
    out.push(Check::new("eq6-interior", "θ^k(∂_m) = δ^k_m", ok).with_ops(&ops));

    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let w2 = random_form(a, 2, &mut rng);
    let x = Derivation::from_scalars(a, &(0..d).map(|_| Scalar::int(rng.gen_range(-3..=3))).collect::<Vec<_>>());
    let ii = w2.interior(x.comps())?.interior(x.comps())?;
    let err = matches!(a.function(a.identity()).interior(x.comps()), Err(Error::InteriorOfFunction));
    out.push(Check::new("interior-nilpotent", "i_X i_X ω = 0; i_X of a function is an error", ii.is_zero() && err).with_ops(&ops));

    let omega = a.symplectic_form();
    let w = (0..d)
        .find(|&k| !a.lie(&Derivation::basis(a, k), &omega).map(|f| f.is_zero()).unwrap_or(false))
        .map(|k| format!("k = {}", k + 1));
    out.push(ok_or("eq16-lie-omega", "L_{∂_k} Ω = 0", &sops, w));

    let closed = d < 3 || a.differential(&omega)?.is_zero();
    out.push(Check::new("eq17-omega-closed", "dΩ = d²θ = 0", closed).with_ops(&sops));

    let nondeg = a.check_nondegenerate(&omega);
    out.push(match &nondeg {
        Ok(_) => Check::pass("omega-nondegenerate", "Ω(∂_a, ∂_b) has full rank").with_ops(&sops),
        Err(e) => Check::fail("omega-nondegenerate", "Ω(∂_a, ∂_b) has full rank", e.to_string()).with_ops(&sops),
    });
    if nondeg.is_err() {
        return Ok(out);
    }

    let mut fs: Vec<Mat> = a.basis().to_vec();
    fs.push(a.identity());
    let table = a.poisson_table(&omega, &fs)?;
    let mut w = None;
    'p: for k in 0..d {
        for m in 0..d {
            if table[k][m] != a.e(k).commutator(a.e(m)).scale(&Scalar::i()) {
                w = Some(format!("{{E_{}, E_{}}}", k + 1, m + 1));
                break 'p;
            }
        }
        if !table[k][d].is_zero() {
            w = Some(format!("{{E_{}, 1}} ≠ 0", k + 1));
            break;
        }
    }
    out.push(ok_or("eq20-poisson", "{E_k, E_m} = Ω(∂_k, ∂_m) = i[E_k, E_m]; {E_k, 1} = 0", &sops, w));

    let (e1, e2, e3) = (a.e(0), a.e(1), a.e(2));
    let pb = |f: &Mat, g: &Mat| a.poisson(&omega, f, g);
    let jac = &(&pb(e1, &table[1][2])? + &pb(e2, &table[2][0])?) + &pb(e3, &table[0][1])?;
    out.push(Check::new("poisson-jacobi", "{E₁,{E₂,E₃}} + cyclic = 0", jac.is_zero()).with_ops(&sops));
    Ok(out)
}

// ---- Hodge star and integration ----

fn hodge(a: &MatrixAlgebra) -> Result<Vec<Check>> {
    let ops = ["hodge_integrate"];
    let d = a.dim();
    let n = a.n();
    if !a.metric_is_diagonal() {
        return Ok(vec![Check::fail("hodge-metric-diagonal", "default Hodge star needs a diagonal trace Gram", Error::NonDiagonalMetric.to_string())
            .warn()
            .with_ops(&ops)]);
    }
    let mut out = Vec::new();
    let unit = a.hodge(&a.function(a.identity()))? == a.volume() && a.integrate(&a.volume()) == Scalar::int(n as i64);
    out.push(Check::new("hodge-unit", "⋆1 = η, ∫η = tr 1 = n", unit).with_ops(&ops));

    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut w = None;
    for p in 0..=d {
        let f = random_form(a, p, &mut rng);
        let twice = a.hodge(&a.hodge(&f)?)?;
        if twice != f.scale_c(&a.hodge_square_factor(p)) {
            w = Some(format!("degree {p}"));
            break;
        }
    }
    out.push(ok_or("hodge-square", "⋆⋆ = (−1)^{p(N−p)} Π t^kk on p-forms", &ops, w));

    // oracle: θ¹ ∧ ⋆θ¹ = t^11 η, so (θ¹, θ¹) = n / t_11
    let v = a.inner(&a.theta(0), &a.theta(0))?;
    let expect = c(&GaussRat::int(n as i64) / &a.t()[0][0]);
    out.push(Check::new("hodge-inner-theta", "(θ¹, θ¹) = n·t^11", v == expect).with_witness(format!("(θ¹, θ¹) = {v}")).with_ops(&ops));

    let mut ok = true;
    for p in [1, 2.min(d)] {
        let x = hermitian_form(a, p, &mut rng);
        let y = hermitian_form(a, p, &mut rng);
        ok &= a.inner(&x, &y)? == a.inner(&y, &x)?;
    }
    out.push(Check::new("hodge-inner-symmetric", "(α, β) = (β, α) for hermitian coefficients", ok).with_ops(&ops));
    Ok(out)
}

// ---- randomized d² = 0 and graded Leibniz ----

fn randomized(a: &MatrixAlgebra, seed: u64, samples: usize) -> Result<Vec<Check>> {
    let d = a.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (a.n() as u64) << 32);
    let mut w_sq = None;
    let mut w_lb = None;
    for s in 0..samples {
        let p = rng.gen_range(0..=d - 2);
        let f = random_form(a, p, &mut rng);
        if w_sq.is_none() && !a.differential(&a.differential(&f)?)?.is_zero() {
            w_sq = Some(format!("sample {s}: {f}"));
        }
        let p = rng.gen_range(0..=d - 1);
        let r = rng.gen_range(0..=d - 1 - p);
        let x = random_form(a, p, &mut rng);
        let y = random_form(a, r, &mut rng);
        let lhs = a.differential(&x.wedge(&y))?;
        let mut rhs = a.differential(&x)?.wedge(&y);
        let t = x.wedge(&a.differential(&y)?);
        if p % 2 == 0 {
            rhs.add_assign(&t);
        } else {
            rhs.sub_assign(&t);
        }
        if w_lb.is_none() && lhs != rhs {
            w_lb = Some(format!("sample {s}: degrees ({p}, {r})"));
        }
    }
    Ok(vec![
        ok_or("d-squared-random", "d∘d = 0 on random forms", &["differential"], w_sq),
        ok_or("leibniz-random", "d(αβ) = (dα)β + (−1)^|α| α dβ", &["differential", "wedge"], w_lb),
    ])
}

fn random_entry(rng: &mut impl Rng) -> Scalar {
    c(GaussRat::complex((rng.gen_range(-2..=2), 1), (rng.gen_range(-1..=1), 1)))
}

fn random_blade(d: usize, p: usize, rng: &mut impl Rng) -> Vec<usize> {
    let mut b = rand::seq::index::sample(rng, d, p).into_vec();
    b.sort_unstable();
    b
}

/// Homogeneous p-form with one to three random terms.
pub(crate) fn random_form(a: &MatrixAlgebra, p: usize, rng: &mut impl Rng) -> Form {
    let n = a.n();
    let mut f = Form::zero(n, a.dim());
    for _ in 0..rng.gen_range(1..=3) {
        let m = Mat::from_fn(n, n, |_, _| random_entry(rng));
        f.add_term(random_blade(a.dim(), p, rng), m);
    }
    f
}

fn hermitian_form(a: &MatrixAlgebra, p: usize, rng: &mut impl Rng) -> Form {
    let n = a.n();
    let mut f = Form::zero(n, a.dim());
    for _ in 0..rng.gen_range(1..=3) {
        let m = Mat::from_fn(n, n, |_, _| random_entry(rng));
        let h = &m + &m.adjoint();
        f.add_term(random_blade(a.dim(), p, rng), h);
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n2_suite_passes_and_is_tagged() {
        let opts = SuiteOptions { n: Some(2), samples: 5, ..Default::default() };
        let checks: Vec<Check> = tasks(&opts).unwrap().iter().flat_map(|t| (t.job)().unwrap()).collect();
        assert!(checks.iter().all(Check::passed), "{:?}", checks.iter().find(|c| !c.passed()));
        assert!(checks.iter().any(|c| c.id == "eq13-theta-squared"));
        assert!(checks.iter().all(|c| !c.ops.is_empty()), "untagged check");
    }

    #[test]
    fn random_forms_have_requested_degree() {
        let a = MatrixAlgebra::build(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for p in 0..=3 {
            let f = random_form(&a, p, &mut rng);
            assert!(f.is_zero() || f.degree() == Some(p));
        }
    }
}
