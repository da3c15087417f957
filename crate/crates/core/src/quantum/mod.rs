//! The Manin plane and the two-parameter quantum group `GL_{p,q}(2)`:
//! rewriting presentations, localization by the q-determinant, Hopf
//! structure, covariance of the coaction and the R-matrix relations.
//!
//! Normal forms keep coefficients on the left, with generators ordered
//! `a < b < c < d < D⁻¹` and `x < y < ξ < η`.

pub mod plane;

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::ncpoly::{NCPoly, Presentation};
use crate::report::Check;
use crate::scalar::{GaussRat, Mat, Scalar};

pub const DINV: &str = "D⁻¹";

/// Deformation parameters, symbolic by default.
#[derive(Clone, Debug, PartialEq)]
pub struct QParams {
    pub q: Scalar,
    pub p: Scalar,
    qi: Scalar,
    pi: Scalar,
}

impl QParams {
    pub fn new(q: Scalar, p: Scalar) -> Result<Self> {
        let inv = |s: &Scalar, name: &str| {
            s.inv_unit()
                .ok_or_else(|| Error::DivisionByZero(format!("{name} = {s} is not invertible")))
        };
        Ok(QParams {
            qi: inv(&q, "q")?,
            pi: inv(&p, "p")?,
            q,
            p,
        })
    }

    pub fn symbolic() -> Self {
        QParams::new(Scalar::param("q"), Scalar::param("p")).expect("monomials are units")
    }

    /// `p = q⁻¹`, the one-parameter case.
    pub fn sl(q: Scalar) -> Result<Self> {
        let p = q
            .inv_unit()
            .ok_or_else(|| Error::DivisionByZero(format!("q = {q} is not invertible")))?;
        QParams::new(q, p)
    }

    /// `p = q`, the case where the R-matrix relations hold.
    pub fn diagonal(q: Scalar) -> Result<Self> {
        QParams::new(q.clone(), q)
    }

    pub fn sl_symbolic() -> Self {
        QParams::sl(Scalar::param("q")).expect("monomial")
    }

    pub fn evaluated(q: &GaussRat, p: &GaussRat) -> Result<Self> {
        QParams::new(Scalar::constant(q.clone()), Scalar::constant(p.clone()))
    }

    pub fn q_inv(&self) -> &Scalar {
        &self.qi
    }

    pub fn p_inv(&self) -> &Scalar {
        &self.pi
    }
}

fn one() -> Scalar {
    Scalar::one()
}

/// `yx → q⁻¹ xy`.
pub fn manin(params: &QParams) -> Presentation {
    Presentation::from_rules("manin", &["x", "y"], &[("yx", vec![(params.qi.clone(), "xy")])]).expect("valid")
}

fn glpq_rules(params: &QParams) -> Vec<(&'static str, Vec<(Scalar, &'static str)>)> {
    let QParams { p, qi, pi, .. } = params;
    vec![
        ("ba", vec![(pi.clone(), "ab")]),
        ("ca", vec![(qi.clone(), "ac")]),
        ("cb", vec![(p * qi, "bc")]),
        ("da", vec![(one(), "ad"), (qi - p, "bc")]),
        ("db", vec![(qi.clone(), "bd")]),
        ("dc", vec![(pi.clone(), "cd")]),
    ]
}

pub fn glpq(params: &QParams) -> Presentation {
    Presentation::from_rules("glpq", &["a", "b", "c", "d"], &glpq_rules(params)).expect("valid")
}

/// `ξξ → 0, ηη → 0, ηξ → −p ξη`.
pub fn exterior_plane(params: &QParams) -> Presentation {
    Presentation::from_rules(
        "exterior",
        &["ξ", "η"],
        &[("ξξ", vec![]), ("ηη", vec![]), ("ηξ", vec![(-&params.p, "ξη")])],
    )
    .expect("valid")
}

fn dinv_rules(params: &QParams) -> Vec<(&'static str, Vec<(Scalar, &'static str)>)> {
    vec![
        ("D⁻¹a", vec![(one(), "aD⁻¹")]),
        ("D⁻¹b", vec![(&params.q * &params.pi, "bD⁻¹")]),
        ("D⁻¹c", vec![(&params.p * &params.qi, "cD⁻¹")]),
        ("D⁻¹d", vec![(one(), "dD⁻¹")]),
    ]
}

/// Which shipped presentation, by CLI name.
pub fn presentation_by_name(name: &str, params: &QParams) -> Result<Presentation> {
    match name {
        "manin" => Ok(manin(params)),
        "glpq" => Ok(glpq(params)),
        "exterior" => Ok(exterior_plane(params)),
        "forms" | "plane" => Ok(plane::forms(&params.q)?.clone_presentation()),
        "localized" => Ok(Localized::new(params).pres),
        _ => Err(Error::Config(format!("unknown presentation `{name}`"))),
    }
}

pub const SHIPPED: [&str; 5] = ["manin", "glpq", "exterior", "forms", "localized"];

/// A localized copy inside a larger presentation: the index of its `D⁻¹`
/// generator, the generators it owns, and `D` as a polynomial.
#[derive(Clone, Debug)]
struct LocCopy {
    dinv: u8,
    gens: std::ops::Range<u8>,
    det: NCPoly,
}

/// Clears every trailing `D⁻¹` power by right-multiplying each copy with
/// `D^K`; two elements are equal iff their cleared forms agree.
fn clear(pres: &Presentation, e: &NCPoly, copies: &[LocCopy]) -> Result<NCPoly> {
    let nf = pres.normal_order(e);
    let mut maxk = vec![0usize; copies.len()];
    let mut split = Vec::new();
    for (w, c) in nf.terms() {
        let mut segs = Vec::new();
        for (j, cp) in copies.iter().enumerate() {
            let seg: Vec<u8> = w.iter().copied().filter(|g| cp.gens.contains(g)).collect();
            let k = seg.iter().rev().take_while(|&&g| g == cp.dinv).count();
            if seg[..seg.len() - k].contains(&cp.dinv) {
                return Err(Error::NotRepresentable(pres.word_name(w)));
            }
            maxk[j] = maxk[j].max(k);
            segs.push((seg[..seg.len() - k].to_vec(), k));
        }
        split.push((segs, c.clone()));
    }
    let mut out = NCPoly::zero();
    let mut red = pres.reducer();
    for (segs, c) in split {
        let mut t = NCPoly::scalar(c);
        for (j, (seg, k)) in segs.into_iter().enumerate() {
            t = t.mul(&NCPoly::word(seg));
            for _ in 0..maxk[j] - k {
                t = red.reduce(&t.mul(&copies[j].det));
            }
        }
        out.add_assign(&red.reduce(&t));
    }
    Ok(out)
}

/// `GL_{p,q}(2)` with the inverse determinant adjoined.
#[derive(Clone, Debug)]
pub struct Localized {
    pub params: QParams,
    pres: Presentation,
}

impl Localized {
    pub fn new(params: &QParams) -> Self {
        let mut rules = glpq_rules(params);
        rules.extend(dinv_rules(params));
        let pres = Presentation::from_rules("localized", &["a", "b", "c", "d", DINV], &rules).expect("valid");
        Localized { params: params.clone(), pres }
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn g(&self, name: &str) -> NCPoly {
        self.pres.g(name)
    }

    /// `D = ad − p bc`.
    pub fn det(&self) -> NCPoly {
        self.pres.w("ad").sub(&self.pres.w("bc").scale(&self.params.p))
    }

    pub fn det_inv(&self) -> NCPoly {
        self.pres.g(DINV)
    }

    /// The matrix `[[a, b], [c, d]]`.
    pub fn matrix(&self) -> [[NCPoly; 2]; 2] {
        [[self.g("a"), self.g("b")], [self.g("c"), self.g("d")]]
    }

    pub fn nf(&self, e: &NCPoly) -> NCPoly {
        self.pres.normal_order(e)
    }

    fn copies(&self) -> [LocCopy; 1] {
        [LocCopy { dinv: 4, gens: 0..5, det: self.det() }]
    }

    pub fn clear(&self, e: &NCPoly) -> Result<NCPoly> {
        clear(&self.pres, e, &self.copies())
    }

    pub fn equal(&self, x: &NCPoly, y: &NCPoly) -> Result<bool> {
        Ok(self.clear(&x.sub(y))?.is_zero())
    }

    pub fn display(&self, e: &NCPoly) -> String {
        self.pres.display(e)
    }

    /// The antipode on generators.
    pub fn antipode_images(&self) -> Vec<NCPoly> {
        let QParams { p, pi, .. } = &self.params;
        let w = |s: &str| self.pres.w(s);
        vec![
            w("dD⁻¹"),
            w("bD⁻¹").scale(&-pi),
            w("cD⁻¹").scale(&-p),
            w("aD⁻¹"),
            self.det(),
        ]
    }

    /// The inverse antipode on generators.
    pub fn antipode_inv_images(&self) -> Vec<NCPoly> {
        let QParams { q, qi, .. } = &self.params;
        let w = |s: &str| self.pres.w(s);
        vec![
            w("dD⁻¹"),
            w("bD⁻¹").scale(&-q),
            w("cD⁻¹").scale(&-qi),
            w("aD⁻¹"),
            self.det(),
        ]
    }

    /// Anti-multiplicative extension of generator images.
    pub fn anti_apply(&self, e: &NCPoly, images: &[NCPoly]) -> NCPoly {
        let mut red = self.pres.reducer();
        let mut out = NCPoly::zero();
        for (w, c) in e.terms() {
            let mut t = NCPoly::scalar(c.clone());
            for &g in w.iter().rev() {
                t = red.reduce(&t.mul(&images[g as usize]));
            }
            out.add_assign(&t);
        }
        out
    }

    pub fn antipode(&self, e: &NCPoly) -> NCPoly {
        self.anti_apply(e, &self.antipode_images())
    }

    pub fn antipode_inv(&self, e: &NCPoly) -> NCPoly {
        self.anti_apply(e, &self.antipode_inv_images())
    }

    /// `ε(a) = ε(d) = ε(D⁻¹) = 1`, `ε(b) = ε(c) = 0`.
    pub fn counit(&self, e: &NCPoly) -> Scalar {
        let vals = [1, 0, 0, 1, 1];
        let mut s = Scalar::zero();
        for (w, c) in e.terms() {
            if w.iter().all(|&g| vals[g as usize] == 1) {
                s += c;
            }
        }
        s
    }

    /// Defining relations `lhs − rhs` of the localized presentation.
    pub fn relations(&self) -> Vec<(String, NCPoly)> {
        self.pres
            .rules()
            .map(|(l, r)| (self.pres.word_name(&l), NCPoly::word(l.to_vec()).sub(r)))
            .collect()
    }
}

/// `A ⊗ A` for the localized algebra: two commuting copies, the second
/// with primed generator names.
#[derive(Clone, Debug)]
pub struct Tensor {
    pub base: Localized,
    pres: Presentation,
}

impl Tensor {
    pub fn new(base: &Localized) -> Self {
        let params = &base.params;
        let names = ["a", "b", "c", "d", DINV, "a'", "b'", "c'", "d'", "D⁻¹'"];
        let prime = |s: &str| -> String {
            let mut out = String::new();
            let mut rest = s;
            while !rest.is_empty() {
                let g = ["D⁻¹", "a", "b", "c", "d"].iter().find(|g| rest.starts_with(*g)).expect("generator");
                out.push_str(g);
                out.push('\'');
                rest = &rest[g.len()..];
            }
            out
        };
        let mut base_rules = glpq_rules(params);
        base_rules.extend(dinv_rules(params));
        let mut owned: Vec<(String, Vec<(Scalar, String)>)> = Vec::new();
        for (l, r) in &base_rules {
            owned.push((l.to_string(), r.iter().map(|(c, w)| (c.clone(), w.to_string())).collect()));
            owned.push((prime(l), r.iter().map(|(c, w)| (c.clone(), prime(w))).collect()));
        }
        for x in &names[5..] {
            for y in &names[..5] {
                owned.push((format!("{x}{y}"), vec![(one(), format!("{y}{x}"))]));
            }
        }
        let rules: Vec<(&str, Vec<(Scalar, &str)>)> = owned
            .iter()
            .map(|(l, r)| (l.as_str(), r.iter().map(|(c, w)| (c.clone(), w.as_str())).collect()))
            .collect();
        let pres = Presentation::from_rules("tensor", &names, &rules).expect("valid");
        Tensor { base: base.clone(), pres }
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn left(&self, e: &NCPoly) -> NCPoly {
        e.clone()
    }

    pub fn right(&self, e: &NCPoly) -> NCPoly {
        let images: Vec<NCPoly> = (5..10u8).map(NCPoly::gen).collect();
        e.substitute(&images)
    }

    pub fn tensor(&self, x: &NCPoly, y: &NCPoly) -> NCPoly {
        self.pres.normal_order(&self.left(x).mul(&self.right(y)))
    }

    fn copies(&self) -> [LocCopy; 2] {
        let d = self.base.det();
        [
            LocCopy { dinv: 4, gens: 0..5, det: d.clone() },
            LocCopy { dinv: 9, gens: 5..10, det: self.right(&d) },
        ]
    }

    pub fn equal(&self, x: &NCPoly, y: &NCPoly) -> Result<bool> {
        Ok(clear(&self.pres, &x.sub(y), &self.copies())?.is_zero())
    }

    /// Renders words as `u⊗v`.
    pub fn display(&self, e: &NCPoly) -> String {
        if e.is_zero() {
            return "0".into();
        }
        let names = self.pres.generators();
        let mut parts = Vec::new();
        for (w, c) in e.terms() {
            let l: String = w.iter().filter(|&&g| g < 5).map(|&g| names[g as usize].as_str()).collect();
            let r: String = w
                .iter()
                .filter(|&&g| g >= 5)
                .map(|&g| names[g as usize].trim_end_matches('\''))
                .collect();
            let l = if l.is_empty() { "1".to_string() } else { l };
            let r = if r.is_empty() { "1".to_string() } else { r };
            let cs = if c.is_one() { String::new() } else { format!("({c})·") };
            parts.push(format!("{cs}{l}⊗{r}"));
        }
        parts.join(" + ")
    }

    pub fn coproduct_images(&self) -> Vec<NCPoly> {
        let w = |s: &str| self.pres.w(s);
        vec![
            w("aa'").add(&w("bc'")),
            w("ab'").add(&w("bd'")),
            w("ca'").add(&w("dc'")),
            w("cb'").add(&w("dd'")),
            w("D⁻¹D⁻¹'"),
        ]
    }

    pub fn coproduct(&self, e: &NCPoly) -> NCPoly {
        let images = self.coproduct_images();
        let mut red = self.pres.reducer();
        let mut out = NCPoly::zero();
        for (w, c) in e.terms() {
            let mut t = NCPoly::scalar(c.clone());
            for &g in w {
                t = red.reduce(&t.mul(&images[g as usize]));
            }
            out.add_assign(&t);
        }
        out
    }

    /// `(ε ⊗ id)` when `left` is true, else `(id ⊗ ε)`, landing in the base.
    pub fn counit_leg(&self, e: &NCPoly, left: bool) -> NCPoly {
        let vals = [1, 0, 0, 1, 1];
        let mut out = NCPoly::zero();
        for (w, c) in e.terms() {
            let (eps, keep): (Vec<u8>, Vec<u8>) = if left {
                (w.iter().copied().filter(|&g| g < 5).collect(), w.iter().copied().filter(|&g| g >= 5).map(|g| g - 5).collect())
            } else {
                (w.iter().copied().filter(|&g| g >= 5).map(|g| g - 5).collect(), w.iter().copied().filter(|&g| g < 5).collect())
            };
            if eps.iter().all(|&g| vals[g as usize] == 1) {
                out.add_term(keep, c.clone());
            }
        }
        self.base.nf(&out)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HopfOp {
    Coproduct,
    Counit,
    Antipode,
    AntipodeInv,
}

#[derive(Clone, Debug, PartialEq)]
pub enum HopfValue {
    Tensor(NCPoly),
    Scalar(Scalar),
    Element(NCPoly),
}

pub fn hopf_ops(t: &Tensor, e: &NCPoly, which: HopfOp) -> HopfValue {
    match which {
        HopfOp::Coproduct => HopfValue::Tensor(t.coproduct(e)),
        HopfOp::Counit => HopfValue::Scalar(t.base.counit(e)),
        HopfOp::Antipode => HopfValue::Element(t.base.antipode(e)),
        HopfOp::AntipodeInv => HopfValue::Element(t.base.antipode_inv(e)),
    }
}

fn first_failure<T>(items: impl IntoIterator<Item = T>, mut f: impl FnMut(&T) -> Result<Option<String>>) -> Result<Option<String>> {
    for it in items {
        if let Some(w) = f(&it)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// All Hopf-structure checks on the localized algebra.
pub fn hopf_checks(params: &QParams) -> Result<Vec<Check>> {
    let loc = Localized::new(params);
    let t = Tensor::new(&loc);
    let mut out = Vec::new();
    let ops = ["hopf_ops"];

    let w = first_failure(loc.relations(), |(name, rel)| {
        let r = t.coproduct(rel);
        Ok((!t.equal(&r, &NCPoly::zero())?).then(|| format!("Δ({name} − …) = {}", t.display(&r))))
    })?;
    out.push(Check::from_witness("hopf-coproduct-hom", "Δ(r) = 0 for every relation r", w).with_ops(&ops));

    let w = first_failure(loc.relations(), |(name, rel)| {
        let s = loc.counit(rel);
        Ok((!s.is_zero()).then(|| format!("ε({name} − …) = {s}")))
    })?;
    out.push(Check::from_witness("hopf-counit-hom", "ε(r) = 0 for every relation r", w).with_ops(&ops));

    let w = first_failure(0..5u8, |&g| {
        let d = t.coproduct(&NCPoly::gen(g));
        let l = t.counit_leg(&d, true);
        let r = t.counit_leg(&d, false);
        let x = NCPoly::gen(g);
        Ok((l != x || r != x).then(|| format!("{}: {} / {}", loc.display(&x), loc.display(&l), loc.display(&r))))
    })?;
    out.push(Check::from_witness("hopf-counit-axiom", "(ε⊗id)Δ = id = (id⊗ε)Δ", w).with_ops(&ops));

    let det = loc.det();
    let dd = t.coproduct(&det);
    let ok_d = t.equal(&dd, &t.tensor(&det, &det))?;
    let prod = t.pres.normal_order(&dd.mul(&t.coproduct(&loc.det_inv())));
    let ok_inv = t.equal(&prod, &NCPoly::one())?;
    out.push(
        Check::new("hopf-coproduct-det", "Δ(D) = D⊗D, Δ(D)Δ(D⁻¹) = 1⊗1", ok_d && ok_inv)
            .with_witness(t.display(&dd))
            .with_ops(&ops),
    );
    if out.last().map(Check::passed).unwrap_or(false) {
        out.last_mut().expect("pushed").witness = None;
    }

    // S(M)M = 1 = M S(M)
    let m = loc.matrix();
    let s: Vec<Vec<NCPoly>> = m.iter().map(|row| row.iter().map(|x| loc.antipode(x)).collect()).collect();
    let mut w = None;
    'anti: for i in 0..2 {
        for j in 0..2 {
            let delta = if i == j { NCPoly::one() } else { NCPoly::zero() };
            let sm = s[i][0].mul(&m[0][j]).add(&s[i][1].mul(&m[1][j]));
            let ms = m[i][0].mul(&s[0][j]).add(&m[i][1].mul(&s[1][j]));
            if !loc.equal(&sm, &delta)? || !loc.equal(&ms, &delta)? {
                w = Some(format!("({}, {}): S(M)M = {}", i + 1, j + 1, loc.display(&loc.nf(&sm))));
                break 'anti;
            }
        }
    }
    out.push(Check::from_witness("hopf-antipode-inverse", "S(M)M = 1 = M S(M)", w).with_ops(&ops));

    let sd = loc.antipode(&det);
    let ok = loc.equal(&sd, &loc.det_inv())? && loc.equal(&loc.antipode(&loc.det_inv()), &det)?;
    out.push(Check::new("hopf-antipode-det", "S(D) = D⁻¹, S(D⁻¹) = D", ok).with_ops(&ops));

    // the printed variant S(D⁻¹) = S(D)
    let ok = loc.equal(&loc.antipode(&loc.det_inv()), &sd)?;
    let c = Check::new("hopf-antipode-dinv-literal", "S(D⁻¹) = S(D) as printed", ok);
    out.push(if ok { c } else { c.with_witness("S(D⁻¹) = D while S(D) = D⁻¹").warn() }.with_ops(&ops));

    // D⁻¹(d, −q⁻¹b; −qc, a) against the right-hand display with +(1/p)b
    let dinv = loc.det_inv();
    let left_form = [
        dinv.mul(&m[1][1]),
        dinv.mul(&m[0][1]).scale(&-&params.qi),
        dinv.mul(&m[1][0]).scale(&-&params.q),
        dinv.mul(&m[0][0]),
    ];
    let printed_b = loc.pres.w("bD⁻¹").scale(&params.pi);
    let agree_ours = (0..4).try_fold(true, |acc, k| -> Result<bool> {
        let img = &loc.antipode_images()[k];
        Ok(acc && loc.equal(&left_form[k], img)?)
    })?;
    out.push(Check::new("hopf-antipode-two-forms", "D⁻¹(d, −q⁻¹b; −qc, a) = (d, −p⁻¹b; −pc, a)D⁻¹", agree_ours).with_ops(&ops));
    let lit = loc.equal(&left_form[1], &printed_b)?;
    let c = Check::new("hopf-antipode-printed-b", "−q⁻¹D⁻¹b = (1/p) bD⁻¹ as printed", lit);
    out.push(
        if lit { c } else { c.with_witness(format!("−q⁻¹D⁻¹b = {}", loc.display(&loc.nf(&left_form[1])))).warn() }
            .with_ops(&ops),
    );

    let w = first_failure(0..5u8, |&g| {
        let x = NCPoly::gen(g);
        let a = loc.antipode(&loc.antipode_inv(&x));
        let b = loc.antipode_inv(&loc.antipode(&x));
        Ok((!loc.equal(&a, &x)? || !loc.equal(&b, &x)?).then(|| loc.display(&x)))
    })?;
    out.push(Check::from_witness("hopf-antipode-inv", "S∘S⁻¹ = id = S⁻¹∘S", w).with_ops(&ops));

    // printed candidate: D(a, pq b; (pq)⁻¹ c, d)
    let pq = &params.p * &params.q;
    let pqi = &params.pi * &params.qi;
    let cand = [
        det.mul(&m[0][0]),
        det.mul(&m[0][1]).scale(&pq),
        det.mul(&m[1][0]).scale(&pqi),
        det.mul(&m[1][1]),
    ];
    let w = first_failure(0..4usize, |&k| {
        let x = NCPoly::gen(k as u8);
        let back = loc.antipode(&cand[k]);
        Ok((!loc.equal(&back, &x)?).then(|| format!("S(candidate({})) = {}", loc.display(&x), loc.display(&back))))
    })?;
    let c = Check::from_witness("hopf-antipode-inv-candidate", "S(D(a, pqb; c/pq, d)) = (a, b; c, d)", w);
    out.push(c.warn().with_ops(&ops));
    Ok(out)
}

/// q-determinant identities and the localization.
pub fn qdet_ops(params: &QParams) -> Result<Vec<Check>> {
    let loc = Localized::new(params);
    let pres = glpq(params);
    let w = |s: &str| pres.w(s);
    let det = loc.det();
    let ops = ["qdet_ops"];
    let mut out = Vec::new();

    let alt = w("da").sub(&w("bc").scale(&params.qi));
    let r = pres.normal_order(&det.sub(&alt));
    out.push(Check::from_witness("qdet-two-forms", "ad − p bc = da − q⁻¹ bc", (!r.is_zero()).then(|| pres.display(&r))).with_ops(&ops));

    let mut wit = None;
    for (name, coef) in [("a", one()), ("d", one()), ("b", &params.p * &params.qi), ("c", &params.q * &params.pi)] {
        let g = pres.g(name);
        let r = pres.normal_order(&det.mul(&g).sub(&g.mul(&det).scale(&coef)));
        if !r.is_zero() {
            wit = Some(format!("D{name}: {}", pres.display(&r)));
            break;
        }
    }
    out.push(Check::from_witness("qdet-commutation", "Da = aD, Dd = dD, Db = (p/q)bD, Dc = (q/p)cD", wit).with_ops(&ops));

    let dinv = loc.det_inv();
    let ok = loc.equal(&dinv.mul(&det), &NCPoly::one())? && loc.equal(&det.mul(&dinv), &NCPoly::one())?;
    out.push(Check::new("qdet-inverse", "D⁻¹D = 1 = DD⁻¹", ok).with_ops(&ops));

    let mut wit = None;
    for (name, coef) in [("a", one()), ("d", one()), ("b", &params.p * &params.qi), ("c", &params.q * &params.pi)] {
        let g = loc.g(name);
        if !loc.equal(&g.mul(&dinv), &dinv.mul(&g).scale(&coef))? {
            wit = Some(format!("{name}D⁻¹"));
            break;
        }
        // D⁻¹(D g) = g ties the twist to the polynomial commutation of D
        if !loc.equal(&dinv.mul(&det).mul(&g), &g)? {
            wit = Some(format!("D⁻¹D{name}"));
            break;
        }
    }
    out.push(Check::from_witness("qdet-localization", "bD⁻¹ = (p/q)D⁻¹b, cD⁻¹ = (q/p)D⁻¹c, D⁻¹(Dg) = g", wit).with_ops(&ops));

    let e = loc.counit(&det);
    out.push(Check::new("qdet-counit", "ε(D) = 1", e.is_one()).with_ops(&ops));
    Ok(out)
}

/// `GL_{p,q}` together with coordinates that commute with `a, b, c, d`.
fn combined(params: &QParams, name: &str, coords: &[&str], coord_rules: Vec<(String, Vec<(Scalar, String)>)>) -> Presentation {
    let mut gens = vec!["a", "b", "c", "d"];
    gens.extend_from_slice(coords);
    let mut owned: Vec<(String, Vec<(Scalar, String)>)> = glpq_rules(params)
        .into_iter()
        .map(|(l, r)| (l.to_string(), r.into_iter().map(|(c, w)| (c, w.to_string())).collect()))
        .collect();
    for x in coords {
        for m in ["a", "b", "c", "d"] {
            owned.push((format!("{x}{m}"), vec![(one(), format!("{m}{x}"))]));
        }
    }
    owned.extend(coord_rules);
    let rules: Vec<(&str, Vec<(Scalar, &str)>)> = owned
        .iter()
        .map(|(l, r)| (l.as_str(), r.iter().map(|(c, w)| (c.clone(), w.as_str())).collect()))
        .collect();
    Presentation::from_rules(name, &gens, &rules).expect("valid")
}

fn rules_of(p: &Presentation) -> Vec<(String, Vec<(Scalar, String)>)> {
    p.rules()
        .map(|(l, r)| (p.word_name(&l), r.terms().map(|(w, c)| (c.clone(), p.word_name(w))).collect()))
        .collect()
}

/// `x' = ax + by, y' = cx + dy` and `ξ' = aξ + bη, η' = cξ + dη`.
pub fn covariance_check(params: &QParams) -> Vec<Check> {
    let mut coord = rules_of(&manin(params));
    coord.extend(rules_of(&exterior_plane(params)));
    let pres = combined(params, "manin-covariance", &["x", "y", "ξ", "η"], coord);
    let w = |s: &str| pres.w(s);
    let xp = w("ax").add(&w("by"));
    let yp = w("cx").add(&w("dy"));
    let xip = w("aξ").add(&w("bη"));
    let etap = w("cξ").add(&w("dη"));
    let nf = |e: &NCPoly| pres.normal_order(e);
    let ops = ["covariance_check"];
    let mut out = Vec::new();
    let chk = |id: &str, anchor: &str, e: NCPoly| {
        let r = nf(&e);
        Check::from_witness(id, anchor, (!r.is_zero()).then(|| pres.display(&r))).with_ops(&ops)
    };
    out.push(chk("cov-manin", "x'y' = q y'x'", xp.mul(&yp).sub(&yp.mul(&xp).scale(&params.q))));
    out.push(chk("cov-exterior", "ξ'η' + p⁻¹ η'ξ' = 0", xip.mul(&etap).add(&etap.mul(&xip).scale(&params.pi))));
    out.push(chk("cov-nilpotent", "ξ'² = 0 = η'²", xip.mul(&xip).add(&etap.mul(&etap))));
    let det = w("ad").sub(&w("bc").scale(&params.p));
    out.push(chk("cov-area", "ξ'η' = D_q ξη", xip.mul(&etap).sub(&det.mul(&w("ξη")))));
    // counit point a = d = 1, b = c = 0
    let point = [pres.gen("a").unwrap(), pres.gen("d").unwrap()];
    let at_counit = |e: &NCPoly| {
        let mut out = NCPoly::zero();
        for (wd, c) in e.terms() {
            if wd.iter().all(|g| *g >= 4 || point.contains(g)) {
                out.add_term(wd.iter().copied().filter(|g| *g >= 4).collect(), c.clone());
            }
        }
        out
    };
    let ok = at_counit(&xp) == w("x") && at_counit(&yp) == w("y");
    out.push(Check::new("cov-identity", "x' = x, y' = y at b = c = 0, a = d = 1", ok).with_ops(&ops));
    out
}

/// The coacted `x̃ = a⊗x`, `ξ̃ = a⊗ξ` satisfy every relation of the
/// quantum-plane forms, and `θ̃ = D θ`.
pub fn coaction_covariance_check(params: &QParams) -> Result<Vec<Check>> {
    let forms = plane::forms(&params.q)?;
    let pres = combined(params, "coaction", &["x", "y", "ξ", "η"], rules_of(forms.algebra()));
    let w = |s: &str| pres.w(s);
    // images of x, y, ξ, η
    let images = vec![
        w("ax").add(&w("by")),
        w("cx").add(&w("dy")),
        w("aξ").add(&w("bη")),
        w("cξ").add(&w("dη")),
    ];
    let shift: Vec<NCPoly> = (0..4u8).map(|k| NCPoly::gen(k + 4)).collect();
    let mut wit = None;
    for (l, r) in forms.algebra().rules() {
        let rel = NCPoly::word(l.to_vec()).sub(r);
        let e = pres.normal_order(&rel.substitute(&images));
        if !e.is_zero() {
            wit = Some(format!("{}: {}", forms.algebra().word_name(&l), pres.display(&e)));
            break;
        }
    }
    let ops = ["covariance_check"];
    let mut out = vec![Check::from_witness("coaction-covariance", "x̃ = a⊗x, ξ̃ = a⊗ξ keep every relation", wit).with_ops(&ops)];
    let theta = forms.theta().substitute(&shift);
    let theta_t = forms.theta().substitute(&images);
    let det = w("ad").sub(&w("bc").scale(&params.p));
    let r = pres.normal_order(&theta_t.sub(&det.mul(&theta)));
    out.push(Check::from_witness("coaction-theta", "θ̃ = D_q θ", (!r.is_zero()).then(|| pres.display(&r))).with_ops(&ops));
    Ok(out)
}

/// `R̂` in the basis `11, 12, 21, 22`.
pub fn r_hat(q: &Scalar) -> Result<Mat> {
    let qi = q
        .inv_unit()
        .ok_or_else(|| Error::DivisionByZero(format!("q = {q}")))?;
    let z = Scalar::zero;
    Mat::from_rows(vec![
        vec![q.clone(), z(), z(), z()],
        vec![z(), q - &qi, one(), z()],
        vec![z(), one(), z(), z()],
        vec![z(), z(), z(), q.clone()],
    ])
}

/// Residuals of `R̂^{ij}_{kl} a^k_m a^l_n − a^i_k a^j_l R̂^{kl}_{mn}` for
/// all 16 `(i, j, m, n)`, reduced in `GL_{p,q}`.
pub fn rtt_components(params: &QParams) -> Result<Vec<([usize; 4], NCPoly)>> {
    let pres = glpq(params);
    let r = r_hat(&params.q)?;
    let a = [["a", "b"], ["c", "d"]];
    let ix = |i: usize, j: usize| 2 * i + j;
    let mut out = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            for m in 0..2 {
                for n in 0..2 {
                    let mut e = NCPoly::zero();
                    for k in 0..2 {
                        for l in 0..2 {
                            let c1 = r.get(ix(i, j), ix(k, l));
                            if !c1.is_zero() {
                                e.add_assign(&pres.w(&format!("{}{}", a[k][m], a[l][n])).scale(c1));
                            }
                            let c2 = r.get(ix(k, l), ix(m, n));
                            if !c2.is_zero() {
                                e = e.sub(&pres.w(&format!("{}{}", a[i][k], a[j][l])).scale(c2));
                            }
                        }
                    }
                    out.push(([i + 1, j + 1, m + 1, n + 1], pres.normal_order(&e)));
                }
            }
        }
    }
    Ok(out)
}

pub fn rtt_check(params: &QParams, id: &str) -> Result<Check> {
    let comps = rtt_components(params)?;
    let pres = glpq(params);
    let bad: Vec<String> = comps
        .iter()
        .filter(|(_, r)| !r.is_zero())
        .map(|(ix, r)| format!("{ix:?}: {}", pres.display(r)))
        .collect();
    let w = (!bad.is_empty()).then(|| format!("{} of 16 components nonzero; first {}", bad.len(), bad[0]));
    Ok(Check::from_witness(id, "R̂ a a = a a R̂", w).with_ops(&["rtt_check"]))
}

pub fn confluence_check(p: &Presentation) -> Check {
    let fails = p.confluence();
    let w = (!fails.is_empty()).then(|| {
        fails
            .iter()
            .map(|f| format!("{}: {} ≠ {}", f.overlap, f.left, f.right))
            .collect::<Vec<_>>()
            .join("; ")
    });
    Check::from_witness(&format!("confluence-{}", p.name()), "all overlaps resolve", w).with_ops(&["confluence_check", "normal_order"])
}

/// Engine self-test: dropping the factor of `db → q⁻¹bd` breaks
/// confluence at `dba`, and the order-increasing `ad → da` is rejected.
/// (Dropping the `bc` term of `da` keeps the system confluent: that
/// coefficient is fixed by covariance, not by the overlaps.)
pub fn corrupted_rule_selftest(params: &QParams) -> Check {
    let pres = glpq(params);
    let g = |s: &str| pres.gen(s).expect("generator");
    let broken = pres
        .with_rule(crate::ncpoly::Rule { lhs: [g("d"), g("b")], rhs: pres.w("bd") })
        .expect("still decreasing");
    let fails = broken.confluence();
    let has_dba = fails.iter().any(|f| f.overlap == "dba");
    let rejected = matches!(
        pres.with_rule(crate::ncpoly::Rule { lhs: [g("a"), g("d")], rhs: pres.w("da") }),
        Err(Error::NonTerminating(_))
    );
    let dropped = pres
        .with_rule(crate::ncpoly::Rule { lhs: [g("d"), g("a")], rhs: pres.w("ad") })
        .expect("decreasing");
    let overlaps: Vec<String> = fails.iter().map(|f| format!("{}: {} ≠ {}", f.overlap, f.left, f.right)).collect();
    Check::new(
        "confluence-corrupted-selftest",
        "db → bd fails at dba; ad → da rejected",
        has_dba && rejected && dropped.confluence().is_empty(),
    )
    .with_witness(overlaps.join("; "))
    .with_ops(&["confluence_check"])
}

/// At `q = p = 1` every rule is a swap; anticommuting pairs of forms
/// swap with a sign and squares of forms vanish.
pub fn classical_limit_check() -> Result<Check> {
    let params = QParams::new(Scalar::one(), Scalar::one())?;
    let odd = ["ξ", "η"];
    let mut wit = None;
    for name in SHIPPED {
        let pres = presentation_by_name(name, &params)?;
        for (l, r) in pres.rules() {
            let both_odd = l.iter().all(|&g| odd.contains(&pres.generators()[g as usize].as_str()));
            let swap = NCPoly::word(vec![l[1], l[0]]);
            let ok = if both_odd {
                if l[0] == l[1] {
                    r.is_zero()
                } else {
                    *r == swap.neg()
                }
            } else {
                *r == swap
            };
            if !ok {
                wit = Some(format!("{name}: {} → {}", pres.word_name(&l), pres.display(r)));
            }
        }
    }
    Ok(Check::from_witness("classical-limit", "q = p = 1 gives (graded) commutative algebras", wit).with_ops(&["normal_order"]))
}

/// Helper for evaluated parameters.
pub fn point_q(q: &GaussRat) -> HashMap<String, GaussRat> {
    [("q".to_string(), q.clone())].into()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_forms() {
        let s = QParams::symbolic();
        let m = manin(&s);
        assert_eq!(m.display(&m.normal_order(&m.w("yx"))), "q^-1·xy");
        let g = glpq(&s);
        assert_eq!(g.display(&g.normal_order(&g.w("ba"))), "p^-1·ab");
        assert_eq!(g.display(&g.normal_order(&g.w("da"))), "ad + (q^-1 - p)·bc");
        assert_eq!(g.display(&g.normal_order(&g.w("a"))), "a");
    }

    #[test]
    fn confluence_and_selftest() {
        let s = QParams::symbolic();
        for name in SHIPPED {
            let p = presentation_by_name(name, &s).unwrap();
            assert!(confluence_check(&p).passed(), "{name}: {:?}", confluence_check(&p).witness);
        }
        let t = Tensor::new(&Localized::new(&s));
        assert!(t.presentation().confluence().is_empty());
        let st = corrupted_rule_selftest(&s);
        assert!(st.passed(), "{:?}", st.witness);
        assert!(classical_limit_check().unwrap().passed());
    }

    #[test]
    fn hopf() {
        let s = QParams::symbolic();
        for c in hopf_checks(&s).unwrap() {
            match c.id.as_str() {
                "hopf-antipode-dinv-literal" | "hopf-antipode-printed-b" | "hopf-antipode-inv-candidate" => {
                    assert_eq!(c.status, crate::report::Status::Warn, "{}", c.id)
                }
                _ => assert!(c.passed(), "{}: {:?}", c.id, c.witness),
            }
        }
        let t = Tensor::new(&Localized::new(&s));
        let d = t.coproduct(&t.base.det());
        assert_eq!(hopf_ops(&t, &t.base.det(), HopfOp::Coproduct), HopfValue::Tensor(d));
        assert_eq!(hopf_ops(&t, &t.base.det(), HopfOp::Counit), HopfValue::Scalar(Scalar::one()));
    }

    #[test]
    fn qdet_and_covariance() {
        let s = QParams::symbolic();
        for c in qdet_ops(&s).unwrap().into_iter().chain(covariance_check(&s)) {
            assert!(c.passed(), "{}: {:?}", c.id, c.witness);
        }
        for c in coaction_covariance_check(&QParams::diagonal(Scalar::param("q")).unwrap()).unwrap() {
            assert!(c.passed(), "{}: {:?}", c.id, c.witness);
        }
        let sl = coaction_covariance_check(&QParams::sl_symbolic()).unwrap();
        assert!(!sl[0].passed());
    }

    #[test]
    fn rtt() {
        let q = Scalar::param("q");
        assert!(!rtt_check(&QParams::sl(q.clone()).unwrap(), "rtt").unwrap().passed());
        assert!(rtt_check(&QParams::new(q.clone(), q).unwrap(), "rtt").unwrap().passed());
        let comps = rtt_components(&QParams::sl_symbolic()).unwrap();
        assert_eq!(comps.iter().filter(|(_, r)| !r.is_zero()).count(), 8);
    }
}
