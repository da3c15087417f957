//! The κ-deformed Poincaré family: a 14-dimensional Lie algebra on
//! `x^μ, L^μ, M^{μν}`, its enveloping algebra, Casimirs, the Lorentz
//! no-go for invariant brackets, first-order cocycle identities and the
//! Poincaré action.
//!
//! `M^{μν}` is the single antisymmetric rotation generator (elsewhere
//! written `I^{μν}`). Metric `g = diag(−1, 1, 1, 1)`, `ε_{0123} = 1`.

use std::collections::HashMap;

use rand::Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ncpoly::{NCPoly, Presentation, Rule};
use crate::report::Check;
use crate::scalar::{levi_civita, GaussRat, Mat, Scalar};

pub const METRIC: [i64; 4] = [-1, 1, 1, 1];
pub const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
pub const NUM_GENERATORS: usize = 14;

fn g(a: usize, b: usize) -> i64 {
    if a == b {
        METRIC[a]
    } else {
        0
    }
}

pub fn x_index(mu: usize) -> u8 {
    mu as u8
}

pub fn l_index(mu: usize) -> u8 {
    4 + mu as u8
}

/// Index of `M^{ab}` for `a < b`.
pub fn m_index(a: usize, b: usize) -> u8 {
    8 + PAIRS.iter().position(|&p| p == (a, b)).expect("a < b") as u8
}

/// `M^{ab}` as a polynomial, with `M^{aa} = 0` and `M^{ba} = −M^{ab}`.
pub fn m_poly(a: usize, b: usize) -> NCPoly {
    use std::cmp::Ordering::*;
    match a.cmp(&b) {
        Equal => NCPoly::zero(),
        Less => NCPoly::gen(m_index(a, b)),
        Greater => NCPoly::gen(m_index(b, a)).neg(),
    }
}

fn x_poly(mu: usize) -> NCPoly {
    NCPoly::gen(x_index(mu))
}

fn l_poly(mu: usize) -> NCPoly {
    NCPoly::gen(l_index(mu))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Gen {
    X(usize),
    L(usize),
    M(usize, usize),
}

fn classify(k: usize) -> Gen {
    match k {
        0..=3 => Gen::X(k),
        4..=7 => Gen::L(k - 4),
        _ => {
            let (a, b) = PAIRS[k - 8];
            Gen::M(a, b)
        }
    }
}

/// Generator names in PBW order.
pub fn generator_names() -> Vec<String> {
    let mut v: Vec<String> = (0..4).map(|m| format!("x{m}")).collect();
    v.extend((0..4).map(|m| format!("L{m}")));
    v.extend(PAIRS.iter().map(|(a, b)| format!("M{a}{b}")));
    v
}

/// Lie algebra with structure constants in `Scalar`, plus its PBW
/// rewriting system `ba → ab − [a, b]` for `a < b`.
#[derive(Clone, Debug)]
pub struct LiePresentation {
    kappa: Scalar,
    names: Vec<String>,
    table: Vec<Vec<NCPoly>>,
    uea: Presentation,
}

pub fn build_kappa_algebra(kappa: Scalar) -> LiePresentation {
    let ik = Scalar::i() * kappa.clone();
    let i = Scalar::i();
    let raw = |a: Gen, b: Gen| -> Option<NCPoly> {
        Some(match (a, b) {
            (Gen::X(m), Gen::X(n)) | (Gen::X(m), Gen::L(n)) | (Gen::L(m), Gen::L(n)) => m_poly(m, n).scale(&ik),
            (Gen::L(m), Gen::X(n)) => m_poly(n, m).scale(&-&ik),
            (Gen::X(l), Gen::M(m, n)) | (Gen::L(l), Gen::M(m, n)) => l_poly(m)
                .scale(&Scalar::int(g(l, n)))
                .sub(&l_poly(n).scale(&Scalar::int(g(l, m))))
                .scale(&i),
            (Gen::M(l, r), Gen::M(m, n)) => {
                let mut p = m_poly(m, r).scale(&Scalar::int(g(l, n)));
                p.add_assign(&m_poly(m, l).scale(&Scalar::int(-g(r, n))));
                p.add_assign(&m_poly(n, l).scale(&Scalar::int(g(r, m))));
                p.add_assign(&m_poly(n, r).scale(&Scalar::int(-g(l, m))));
                p.scale(&i)
            }
            _ => return None,
        })
    };
    let mut table = vec![vec![NCPoly::zero(); NUM_GENERATORS]; NUM_GENERATORS];
    for a in 0..NUM_GENERATORS {
        for b in 0..NUM_GENERATORS {
            let (ga, gb) = (classify(a), classify(b));
            table[a][b] = match raw(ga, gb) {
                Some(p) => p,
                None => raw(gb, ga).expect("one ordering is tabulated").neg(),
            };
        }
    }
    LiePresentation::from_table("kappa-poincare", kappa, generator_names(), table).expect("PBW rules are deg-lex decreasing")
}

impl LiePresentation {
    pub fn from_table(name: &str, kappa: Scalar, names: Vec<String>, table: Vec<Vec<NCPoly>>) -> Result<Self> {
        let d = names.len();
        let mut rules = Vec::new();
        for a in 0..d {
            for b in 0..a {
                // ab → ba + [a, b] for a > b
                let rhs = NCPoly::word(vec![b as u8, a as u8]).add(&table[a][b]);
                rules.push(Rule { lhs: [a as u8, b as u8], rhs });
            }
        }
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let uea = Presentation::new(name, &refs, rules)?;
        Ok(LiePresentation { kappa, names, table, uea })
    }

    pub fn kappa(&self) -> &Scalar {
        &self.kappa
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn bracket(&self, a: usize, b: usize) -> &NCPoly {
        &self.table[a][b]
    }

    /// Bilinear extension of the table to linear combinations of generators.
    pub fn bracket_lin(&self, x: &NCPoly, y: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (wa, ca) in x.terms() {
            for (wb, cb) in y.terms() {
                if let ([a], [b]) = (wa.as_slice(), wb.as_slice()) {
                    out.add_assign(&self.table[*a as usize][*b as usize].scale(&(ca * cb)));
                }
            }
        }
        out
    }

    /// The enveloping algebra as a rewriting system.
    pub fn uea(&self) -> &Presentation {
        &self.uea
    }

    pub fn display(&self, p: &NCPoly) -> String {
        self.uea.display(p)
    }

    pub fn uea_normal_order(&self, e: &NCPoly) -> NCPoly {
        self.uea.normal_order(e)
    }

    pub fn antisymmetry_check(&self) -> Check {
        let d = self.dim();
        let mut witness = None;
        'outer: for a in 0..d {
            for b in 0..d {
                let s = self.table[a][b].add(&self.table[b][a]);
                let closed = self.table[a][b].terms().all(|(w, _)| w.len() == 1);
                if !s.is_zero() || !closed {
                    witness = Some(format!("[{}, {}] = {}", self.names[a], self.names[b], self.display(&self.table[a][b])));
                    break 'outer;
                }
            }
        }
        Check::from_witness("lie-antisymmetry", "[a,b] = −[b,a], [a,b] ∈ span", witness).with_ops(&["build_kappa_algebra"])
    }

    pub fn specialize_kappa(&self, k: &GaussRat) -> Result<LiePresentation> {
        let pt: HashMap<String, GaussRat> = [("kappa".to_string(), k.clone())].into();
        let mut table = self.table.clone();
        for row in &mut table {
            for p in row.iter_mut() {
                *p = p.specialize(&pt)?;
            }
        }
        LiePresentation::from_table(self.uea.name(), self.kappa.specialize(&pt)?, self.names.clone(), table)
    }

    /// `[a,[b,c]] + [b,[c,a]] + [c,[a,b]] = 0` on every unordered triple.
    pub fn jacobi_check(&self) -> Check {
        let d = self.dim();
        let triples: Vec<(usize, usize, usize)> = (0..d)
            .flat_map(|a| (a + 1..d).flat_map(move |b| (b + 1..d).map(move |c| (a, b, c))))
            .collect();
        let bad = triples
            .par_iter()
            .find_first(|&&(a, b, c)| !self.jacobiator(a, b, c).is_zero())
            .map(|&(a, b, c)| {
                format!(
                    "({}, {}, {}): {}",
                    self.names[a],
                    self.names[b],
                    self.names[c],
                    self.display(&self.jacobiator(a, b, c))
                )
            });
        Check::from_witness("jacobi", "[a,[b,c]] + cyclic = 0", bad).with_ops(&["jacobi_check", "build_kappa_algebra"])
    }

    pub fn jacobiator(&self, a: usize, b: usize, c: usize) -> NCPoly {
        let ga = |k: usize| NCPoly::gen(k as u8);
        let mut s = self.bracket_lin(&ga(a), &self.table[b][c]);
        s.add_assign(&self.bracket_lin(&ga(b), &self.table[c][a]));
        s.add_assign(&self.bracket_lin(&ga(c), &self.table[a][b]));
        s
    }

    /// Every length-3 overlap of the PBW rules resolves.
    pub fn pbw_confluence_check(&self) -> Check {
        let fails = self.uea.confluence();
        let w = fails.first().map(|f| format!("{}: {} ≠ {}", f.overlap, f.left, f.right));
        Check::from_witness("uea-confluence", "PBW overlaps cba resolve", w).with_ops(&["uea_normal_order"])
    }

    pub fn casimir(&self, which: Casimir) -> NCPoly {
        casimir_element(&self.kappa, which)
    }

    /// `[C, X]` normal-ordered to zero for every generator `X`.
    pub fn casimir_centrality(&self, which: Casimir) -> Check {
        let c = self.casimir(which);
        let witness = self.first_noncommuting(&c);
        let (id, anchor) = match which {
            Casimir::C2 => ("casimir-c2-central", "[C₂, X] = 0"),
            Casimir::C4 => ("casimir-c4-central", "[C₄, X] = 0"),
            Casimir::C4Corrected => ("casimir-c4-corrected-central", "[C₄ + (κ/16)P², X] = 0"),
        };
        Check::from_witness(id, anchor, witness).with_ops(&["casimir_centrality", "uea_normal_order"])
    }

    fn first_noncommuting(&self, c: &NCPoly) -> Option<String> {
        (0..self.dim()).into_par_iter().find_first(|&k| !self.commutator_nf(c, &NCPoly::gen(k as u8)).is_zero()).map(|k| {
            format!("X = {}: {}", self.names[k], self.display(&self.commutator_nf(c, &NCPoly::gen(k as u8))))
        })
    }

    pub fn commutator_nf(&self, a: &NCPoly, b: &NCPoly) -> NCPoly {
        self.uea.normal_order(&a.commutator(b))
    }

    /// `x^μ − L^μ` commutes with every generator.
    pub fn center_diff_check(&self) -> Check {
        let mut witness = None;
        for mu in 0..4 {
            let z = x_poly(mu).sub(&l_poly(mu));
            if let Some(w) = self.first_noncommuting(&z) {
                witness = Some(format!("μ = {mu}, {w}"));
                break;
            }
        }
        Check::from_witness("center-x-minus-l", "[x^μ − L^μ, X] = 0", witness).with_ops(&["center_diff_check"])
    }

    /// Images of the generators under `(Λ, a)`.
    pub fn poincare_images(&self, lambda: &[Vec<GaussRat>], a: &[GaussRat]) -> Result<Vec<NCPoly>> {
        let inv = lorentz_inverse(lambda)?;
        if a.len() != 4 {
            return Err(Error::Dimension(format!("translation has {} components", a.len())));
        }
        let c = |v: &GaussRat| Scalar::constant(v.clone());
        let mut images = Vec::with_capacity(NUM_GENERATORS);
        for mu in 0..4 {
            let mut p = NCPoly::zero();
            for nu in 0..4 {
                p.add_assign(&x_poly(nu).scale(&c(&inv[mu][nu])));
                p.add_term(Vec::new(), -(c(&inv[mu][nu]) * c(&a[nu])));
            }
            images.push(p);
        }
        for mu in 0..4 {
            let mut p = NCPoly::zero();
            for nu in 0..4 {
                p.add_assign(&l_poly(nu).scale(&c(&inv[mu][nu])));
            }
            images.push(p);
        }
        for &(m, n) in &PAIRS {
            let mut p = NCPoly::zero();
            for r in 0..4 {
                for s in 0..4 {
                    p.add_assign(&m_poly(r, s).scale(&c(&(&inv[m][r] * &inv[n][s]))));
                }
            }
            images.push(p);
        }
        Ok(images)
    }

    pub fn poincare_action(&self, e: &NCPoly, lambda: &[Vec<GaussRat>], a: &[GaussRat]) -> Result<NCPoly> {
        let images = self.poincare_images(lambda, a)?;
        Ok(self.uea.normal_order(&e.substitute(&images)))
    }

    /// The action respects every defining relation and, for random words,
    /// `α(uv) = α(u)α(v)` after normal ordering.
    pub fn poincare_homomorphism_check(&self, lambda: &[Vec<GaussRat>], a: &[GaussRat], seed: u64, samples: usize) -> Result<Check> {
        let images = self.poincare_images(lambda, a)?;
        let mut red = self.uea.reducer();
        let mut witness = None;
        'rel: for x in 0..self.dim() {
            for y in 0..self.dim() {
                let rel = NCPoly::word(vec![x as u8, y as u8])
                    .sub(&NCPoly::word(vec![y as u8, x as u8]))
                    .sub(&self.table[x][y]);
                let r = red.reduce(&rel.substitute(&images));
                if !r.is_zero() {
                    witness = Some(format!("relation [{}, {}]: {}", self.names[x], self.names[y], self.display(&r)));
                    break 'rel;
                }
            }
        }
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            if witness.is_some() {
                break;
            }
            let u = random_word(&mut rng, self.dim(), 3);
            let v = random_word(&mut rng, self.dim(), 3);
            let uv = red.reduce(&u.mul(&v));
            let lhs = red.reduce(&uv.substitute(&images));
            let au = red.reduce(&u.substitute(&images));
            let av = red.reduce(&v.substitute(&images));
            let rhs = red.reduce(&au.mul(&av));
            if lhs != rhs {
                witness = Some(format!("u = {}, v = {}", self.display(&u), self.display(&v)));
            }
        }
        Ok(Check::from_witness("poincare-homomorphism", "α(uv) = α(u)α(v)", witness).with_ops(&["poincare_action"]))
    }
}

use rand::SeedableRng;

fn random_word(rng: &mut impl Rng, d: usize, max_len: usize) -> NCPoly {
    let len = rng.gen_range(1..=max_len);
    NCPoly::word((0..len).map(|_| rng.gen_range(0..d) as u8).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Casimir {
    C2,
    /// The literal double-ε contraction `g^{ρρ} W_ρ W_ρ`.
    C4,
    /// `C4 + (κ/16) P²` with `P = ε_{μνρσ} M^{μν} M^{ρσ}`.
    C4Corrected,
}

/// `W_ρ = ε_{ρλμν} L^λ M^{μν}`.
pub fn pauli_lubanski(rho: usize) -> NCPoly {
    let mut w = NCPoly::zero();
    for l in 0..4 {
        for m in 0..4 {
            for n in 0..4 {
                let e = levi_civita(&[rho, l, m, n]);
                if e != 0 {
                    w.add_assign(&l_poly(l).mul(&m_poly(m, n)).scale(&Scalar::int(e as i64)));
                }
            }
        }
    }
    w
}

/// `P = ε_{μνρσ} M^{μν} M^{ρσ}`.
pub fn pseudoscalar() -> NCPoly {
    let mut p = NCPoly::zero();
    for idx in permutations4() {
        let e = levi_civita(&idx);
        p.add_assign(&m_poly(idx[0], idx[1]).mul(&m_poly(idx[2], idx[3])).scale(&Scalar::int(e as i64)));
    }
    p
}

fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let v = [a, b, c, d];
                    if levi_civita(&v) != 0 {
                        out.push(v);
                    }
                }
            }
        }
    }
    out
}

pub fn casimir_element(kappa: &Scalar, which: Casimir) -> NCPoly {
    match which {
        Casimir::C2 => {
            let mut c = NCPoly::zero();
            for m in 0..4 {
                for r in 0..4 {
                    let mm = m_poly(m, r);
                    c.add_assign(&mm.mul(&mm).scale(&(kappa * &Scalar::int(METRIC[m] * METRIC[r]))));
                }
                c.add_assign(&l_poly(m).mul(&l_poly(m)).scale(&Scalar::int(2 * METRIC[m])));
            }
            c
        }
        Casimir::C4 => {
            let mut c = NCPoly::zero();
            for r in 0..4 {
                let w = pauli_lubanski(r);
                c.add_assign(&w.mul(&w).scale(&Scalar::int(METRIC[r])));
            }
            c
        }
        Casimir::C4Corrected => {
            let p = pseudoscalar();
            casimir_element(kappa, Casimir::C4).add(&p.mul(&p).scale(&(kappa * &Scalar::ratio(1, 16))))
        }
    }
}

/// Jacobi over the standard κ values: 0, 1, −1 and symbolic.
pub fn jacobi_over_kappas() -> Vec<(String, Check)> {
    let sym = build_kappa_algebra(Scalar::param("kappa"));
    let mut out = vec![("kappa".to_string(), sym.jacobi_check())];
    for k in [0, 1, -1] {
        let alg = build_kappa_algebra(Scalar::int(k));
        out.push((k.to_string(), alg.jacobi_check()));
    }
    out
}

fn metric_mat() -> Vec<Vec<GaussRat>> {
    (0..4).map(|a| (0..4).map(|b| GaussRat::int(g(a, b))).collect()).collect()
}

fn mat4(m: &[Vec<GaussRat>]) -> Result<Mat> {
    if m.len() != 4 || m.iter().any(|r| r.len() != 4) {
        return Err(Error::Dimension("expected a 4×4 matrix".into()));
    }
    Ok(Mat::from_fn(4, 4, |i, j| Scalar::constant(m[i][j].clone())))
}

/// `Λ⁻¹ = g Λᵀ g`, after checking `Λᵀ g Λ = g`.
pub fn lorentz_inverse(lambda: &[Vec<GaussRat>]) -> Result<Vec<Vec<GaussRat>>> {
    let l = mat4(lambda)?;
    let gm = mat4(&metric_mat())?;
    if &(&l.transpose() * &gm) * &l != gm {
        return Err(Error::NotLorentz("ΛᵀgΛ ≠ g".into()));
    }
    let inv = &(&gm * &l.transpose()) * &gm;
    Ok((0..4)
        .map(|i| (0..4).map(|j| inv.get(i, j).as_constant().expect("constant")).collect())
        .collect())
}

/// Boost along x¹ with `cosh = c`, `sinh = s` (needs `c² − s² = 1`).
pub fn boost_x(c: GaussRat, s: GaussRat) -> Vec<Vec<GaussRat>> {
    let mut m: Vec<Vec<GaussRat>> = (0..4).map(|i| (0..4).map(|j| GaussRat::int((i == j) as i64)).collect()).collect();
    m[0][0] = c.clone();
    m[1][1] = c;
    m[0][1] = s.clone();
    m[1][0] = s;
    m
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymmetryGroup {
    Trivial,
    Rotations,
    Lorentz,
}

impl std::str::FromStr for SymmetryGroup {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "trivial" => Ok(SymmetryGroup::Trivial),
            "rotations" => Ok(SymmetryGroup::Rotations),
            "lorentz" => Ok(SymmetryGroup::Lorentz),
            _ => Err(Error::Config(format!("unknown group `{s}`"))),
        }
    }
}

/// Rotation generator in the `(i, j)` spatial plane, `m^i_j = 1, m^j_i = −1`.
pub fn rotation_generator(i: usize, j: usize) -> Mat {
    let mut m = Mat::zeros(4, 4);
    m.set(i, j, Scalar::one());
    m.set(j, i, Scalar::int(-1));
    m
}

pub fn boost_generator(i: usize) -> Mat {
    let mut m = Mat::zeros(4, 4);
    m.set(0, i, Scalar::one());
    m.set(i, 0, Scalar::one());
    m
}

impl SymmetryGroup {
    pub fn generators(self) -> Vec<Mat> {
        let rot = vec![rotation_generator(2, 3), rotation_generator(3, 1), rotation_generator(1, 2)];
        match self {
            SymmetryGroup::Trivial => vec![],
            SymmetryGroup::Rotations => rot,
            SymmetryGroup::Lorentz => {
                let mut v = rot;
                v.extend((1..4).map(boost_generator));
                v
            }
        }
    }
}

/// Constant antisymmetric `Ω` with `m^μ_ρ Ω^{ρν} + m^ν_ρ Ω^{μρ} = 0` for
/// each generator. Returns the stacked system (6 rows per generator) and
/// a kernel basis in the `PAIRS` coordinates.
pub fn invariant_antisym_system(generators: &[Mat]) -> Mat {
    let omega_coeff = |r: usize, s: usize, k: usize| -> i64 {
        let (a, b) = PAIRS[k];
        if (r, s) == (a, b) {
            1
        } else if (s, r) == (a, b) {
            -1
        } else {
            0
        }
    };
    let mut rows = Vec::new();
    for m in generators {
        for &(mu, nu) in &PAIRS {
            let row: Vec<Scalar> = (0..6)
                .map(|k| {
                    let mut acc = Scalar::zero();
                    for rho in 0..4 {
                        acc += m.get(mu, rho) * &Scalar::int(omega_coeff(rho, nu, k));
                        acc += m.get(nu, rho) * &Scalar::int(omega_coeff(mu, rho, k));
                    }
                    acc
                })
                .collect();
            rows.push(row);
        }
    }
    if rows.is_empty() {
        return Mat::zeros(0, 6);
    }
    Mat::from_rows(rows).expect("rectangular")
}

pub fn invariant_antisym_solver_with(generators: &[Mat]) -> Result<Vec<Vec<Scalar>>> {
    let sys = invariant_antisym_system(generators);
    if sys.rows() == 0 {
        return Ok((0..6).map(|k| (0..6).map(|j| Scalar::int((j == k) as i64)).collect()).collect());
    }
    sys.kernel()
}

pub fn invariant_antisym_solver(group: SymmetryGroup) -> Result<(usize, Vec<Vec<Scalar>>)> {
    let basis = invariant_antisym_solver_with(&group.generators())?;
    Ok((basis.len(), basis))
}

/// `α = g_{μν} g_{ρλ} Ω^{μρ} Ω^{νλ}`, `β = ε_{μνρσ} Ω^{μν} Ω^{ρσ}`.
pub fn orbit_invariants(omega: &[Vec<GaussRat>]) -> Result<(GaussRat, GaussRat)> {
    if omega.len() != 4 || omega.iter().any(|r| r.len() != 4) {
        return Err(Error::Dimension("expected a 4×4 matrix".into()));
    }
    for a in 0..4 {
        for b in 0..4 {
            if omega[a][b] != -omega[b][a].clone() {
                return Err(Error::NotAntisymmetric);
            }
        }
    }
    let mut alpha = GaussRat::zero();
    for m in 0..4 {
        for r in 0..4 {
            alpha += &(&omega[m][r] * &omega[m][r]) * &GaussRat::int(METRIC[m] * METRIC[r]);
        }
    }
    let mut beta = GaussRat::zero();
    for idx in permutations4() {
        let e = GaussRat::int(levi_civita(&idx) as i64);
        beta += &(&omega[idx[0]][idx[1]] * &omega[idx[2]][idx[3]]) * &e;
    }
    Ok((alpha, beta))
}

/// Conjugation by the parity flip `x¹ → −x¹`.
pub fn parity_flip(omega: &[Vec<GaussRat>]) -> Vec<Vec<GaussRat>> {
    let s = |k: usize| if k == 1 { -1 } else { 1 };
    (0..4)
        .map(|a| (0..4).map(|b| &omega[a][b] * &GaussRat::int(s(a) * s(b))).collect())
        .collect()
}

/// Finite-dimensional associative algebra given by structure constants
/// `e_a e_b = Σ mult[a][b][c] e_c`, with an optional antilinear involution
/// `e_a* = Σ star[a][c] e_c`.
#[derive(Clone, Debug)]
pub struct FiniteAlgebra {
    pub dim: usize,
    pub mult: Vec<Vec<Vec<Scalar>>>,
    pub star: Option<Vec<Vec<Scalar>>>,
}

pub type Elem = Vec<Scalar>;

impl FiniteAlgebra {
    /// `M_n(C)` in the matrix-unit basis `e_{ij}` at index `i·n + j`.
    pub fn matrices(n: usize) -> Self {
        let dim = n * n;
        let mut mult = vec![vec![vec![Scalar::zero(); dim]; dim]; dim];
        let mut star = vec![vec![Scalar::zero(); dim]; dim];
        for i in 0..n {
            for j in 0..n {
                star[i * n + j][j * n + i] = Scalar::one();
                for l in 0..n {
                    mult[i * n + j][j * n + l][i * n + l] = Scalar::one();
                }
            }
        }
        FiniteAlgebra { dim, mult, star: Some(star) }
    }

    pub fn without_involution(mut self) -> Self {
        self.star = None;
        self
    }

    pub fn basis(&self, a: usize) -> Elem {
        (0..self.dim).map(|k| Scalar::int((k == a) as i64)).collect()
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Elem {
        let mut out = vec![Scalar::zero(); self.dim];
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                let f = xa * yb;
                for (c, m) in self.mult[a][b].iter().enumerate() {
                    if !m.is_zero() {
                        out[c] += &f * m;
                    }
                }
            }
        }
        out
    }

    pub fn commutator(&self, x: &[Scalar], y: &[Scalar]) -> Elem {
        sub(&self.mul(x, y), &self.mul(y, x))
    }

    pub fn star(&self, x: &[Scalar]) -> Option<Elem> {
        let st = self.star.as_ref()?;
        let mut out = vec![Scalar::zero(); self.dim];
        for (a, xa) in x.iter().enumerate() {
            let c = xa.conj();
            for (k, s) in st[a].iter().enumerate() {
                out[k] += &c * s;
            }
        }
        Some(out)
    }

    /// Basis of the center, from the kernel of `x ↦ ([x, e_a])_a`.
    pub fn center(&self) -> Result<Vec<Elem>> {
        let mut rows = Vec::new();
        for a in 0..self.dim {
            let cols: Vec<Elem> = (0..self.dim).map(|x| self.commutator(&self.basis(x), &self.basis(a))).collect();
            for c in 0..self.dim {
                rows.push((0..self.dim).map(|x| cols[x][c].clone()).collect());
            }
        }
        Mat::from_rows(rows)?.kernel()
    }
}

fn sub(x: &[Scalar], y: &[Scalar]) -> Elem {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

fn add(x: &[Scalar], y: &[Scalar]) -> Elem {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

fn scale(x: &[Scalar], s: &Scalar) -> Elem {
    x.iter().map(|a| a * s).collect()
}

fn is_zero(x: &[Scalar]) -> bool {
    x.iter().all(Scalar::is_zero)
}

/// First-order term `c` of a deformed product `f ⋆ g = fg + κ c(f, g) + …`,
/// tabulated on basis pairs.
#[derive(Clone, Debug)]
pub struct BilinearCocycle {
    pub alg: FiniteAlgebra,
    pub table: Vec<Vec<Elem>>,
}

impl BilinearCocycle {
    pub fn from_fn(alg: FiniteAlgebra, f: impl Fn(&FiniteAlgebra, &[Scalar], &[Scalar]) -> Elem) -> Self {
        let table = (0..alg.dim)
            .map(|a| (0..alg.dim).map(|b| f(&alg, &alg.basis(a), &alg.basis(b))).collect())
            .collect();
        BilinearCocycle { alg, table }
    }

    pub fn product(alg: FiniteAlgebra) -> Self {
        BilinearCocycle::from_fn(alg, |al, f, g| al.mul(f, g))
    }

    pub fn zero(alg: FiniteAlgebra) -> Self {
        BilinearCocycle::from_fn(alg, |al, _, _| vec![Scalar::zero(); al.dim])
    }

    /// `c(f, g) = ½ i [f, g]`.
    pub fn half_i_commutator(alg: FiniteAlgebra) -> Self {
        let s = Scalar::i() * Scalar::ratio(1, 2);
        BilinearCocycle::from_fn(alg, move |al, f, g| scale(&al.commutator(f, g), &s))
    }

    pub fn c(&self, x: &[Scalar], y: &[Scalar]) -> Elem {
        let mut out = vec![Scalar::zero(); self.alg.dim];
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                out = add(&out, &scale(&self.table[a][b], &(xa * yb)));
            }
        }
        out
    }

    /// `{f, g} = i (c(f, g) − c(g, f))`.
    pub fn poisson(&self, x: &[Scalar], y: &[Scalar]) -> Elem {
        scale(&sub(&self.c(x, y), &self.c(y, x)), &Scalar::i())
    }
}

/// The first-order associativity identity
/// `i([h, c(f,g)] − c([h,f], g) − c(f, [h,g])) = f{h,g} − {h,fg} + {h,f}g`
/// on basis triples, the derivation property of `{h, ·}` for central `h`,
/// and `c(f,g)* = c(g*, f*)` when the algebra has an involution.
pub fn cocycle_first_order_check(b: &BilinearCocycle) -> Result<Vec<Check>> {
    let al = &b.alg;
    let d = al.dim;
    let i = Scalar::i();
    let mut w_ident = None;
    'ident: for h in 0..d {
        for f in 0..d {
            for g in 0..d {
                let (eh, ef, eg) = (al.basis(h), al.basis(f), al.basis(g));
                let lhs = scale(
                    &sub(
                        &sub(&al.commutator(&eh, &b.c(&ef, &eg)), &b.c(&al.commutator(&eh, &ef), &eg)),
                        &b.c(&ef, &al.commutator(&eh, &eg)),
                    ),
                    &i,
                );
                let rhs = add(
                    &sub(&al.mul(&ef, &b.poisson(&eh, &eg)), &b.poisson(&eh, &al.mul(&ef, &eg))),
                    &al.mul(&b.poisson(&eh, &ef), &eg),
                );
                if sub(&lhs, &rhs).iter().any(|s| !s.is_zero()) {
                    w_ident = Some(format!("basis triple (h, f, g) = ({h}, {f}, {g})"));
                    break 'ident;
                }
            }
        }
    }
    let mut out = vec![Check::from_witness("cocycle-first-order", "i([h,c(f,g)] − c([h,f],g) − c(f,[h,g])) = f{h,g} − {h,fg} + {h,f}g", w_ident)];

    let mut w_der = None;
    'der: for h in al.center()? {
        for f in 0..d {
            for g in 0..d {
                let (ef, eg) = (al.basis(f), al.basis(g));
                let lhs = b.poisson(&h, &al.mul(&ef, &eg));
                let rhs = add(&al.mul(&b.poisson(&h, &ef), &eg), &al.mul(&ef, &b.poisson(&h, &eg)));
                if !is_zero(&sub(&lhs, &rhs)) {
                    w_der = Some(format!("central h, (f, g) = ({f}, {g})"));
                    break 'der;
                }
            }
        }
    }
    out.push(Check::from_witness("cocycle-central-derivation", "{h, fg} = {h,f}g + f{h,g} for central h", w_der));

    if al.star.is_some() {
        let mut w_real = None;
        'real: for f in 0..d {
            for g in 0..d {
                let (ef, eg) = (al.basis(f), al.basis(g));
                let lhs = al.star(&b.c(&ef, &eg)).expect("involution");
                let rhs = b.c(&al.star(&eg).expect("involution"), &al.star(&ef).expect("involution"));
                if !is_zero(&sub(&lhs, &rhs)) {
                    w_real = Some(format!("(f, g) = ({f}, {g})"));
                    break 'real;
                }
            }
        }
        out.push(Check::from_witness("cocycle-reality", "c(f,g)* = c(g*, f*)", w_real));
    }
    Ok(out.into_iter().map(|c| c.with_ops(&["cocycle_first_order_check"])).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym() -> LiePresentation {
        build_kappa_algebra(Scalar::param("kappa"))
    }

    fn word(p: &LiePresentation, s: &str) -> NCPoly {
        NCPoly::word(p.uea().parse_word(s).unwrap())
    }

    #[test]
    fn table_entries() {
        let p = sym();
        let ik = Scalar::i() * Scalar::param("kappa");
        assert_eq!(p.bracket(0, 1), &NCPoly::term(vec![m_index(0, 1)], ik));
        assert!(p.bracket(0, 4).is_zero());
        // [M01, M12] = i(g^{02}M^{11} − g^{12}M^{10} + g^{11}M^{20} − g^{01}M^{21}) = −i M^{02}
        assert_eq!(p.display(p.bracket(8, 11)), "-i·M02");
        assert!(p.antisymmetry_check().passed());
    }

    #[test]
    fn jacobi_all_kappas() {
        for (k, c) in jacobi_over_kappas() {
            assert!(c.passed(), "kappa = {k}: {:?}", c.witness);
        }
    }

    #[test]
    fn normal_order_examples() {
        let p = sym();
        let nf = p.uea_normal_order(&word(&p, "x1x0"));
        assert_eq!(p.display(&nf), "-i*kappa·M01 + x0x1");
        let w = word(&p, "x0x1");
        assert_eq!(p.uea_normal_order(&w), w);
        let a = p.uea_normal_order(&p.uea_normal_order(&word(&p, "L0x0")).mul(&word(&p, "x0")));
        let b = p.uea_normal_order(&word(&p, "L0").mul(&p.uea_normal_order(&word(&p, "x0x0"))));
        assert_eq!(a, b);
        assert!(p.pbw_confluence_check().passed());
    }

    #[test]
    fn casimirs() {
        let p = sym();
        assert!(p.casimir_centrality(Casimir::C2).passed());
        assert!(p.casimir_centrality(Casimir::C4Corrected).passed());
        // the bare double-ε contraction is central only at κ = 0
        assert!(!p.casimir_centrality(Casimir::C4).passed());
        let p0 = build_kappa_algebra(Scalar::zero());
        assert!(p0.casimir_centrality(Casimir::C4).passed());
        let c2 = p0.casimir(Casimir::C2);
        assert_eq!(c2.max_degree(), 2);
        assert!(c2.terms().all(|(w, _)| w.iter().all(|&g| (4..8).contains(&g))));
        assert!(p.center_diff_check().passed());
        assert!(p0.center_diff_check().passed());
    }

    #[test]
    fn no_go() {
        assert_eq!(invariant_antisym_solver(SymmetryGroup::Trivial).unwrap().0, 6);
        assert_eq!(invariant_antisym_system(&SymmetryGroup::Rotations.generators()).rows(), 18);
        assert_eq!(invariant_antisym_solver(SymmetryGroup::Rotations).unwrap().0, 0);
        assert_eq!(invariant_antisym_solver(SymmetryGroup::Lorentz).unwrap().0, 0);
        // two rotations generate the third, so only a single one leaves room
        let gens = SymmetryGroup::Rotations.generators();
        assert_eq!(invariant_antisym_solver_with(&gens[..2]).unwrap().len(), 0);
        assert_eq!(invariant_antisym_solver_with(&gens[2..]).unwrap().len(), 2);
    }

    #[test]
    fn orbit() {
        let z = vec![vec![GaussRat::zero(); 4]; 4];
        assert_eq!(orbit_invariants(&z).unwrap(), (GaussRat::zero(), GaussRat::zero()));
        let mut o = z.clone();
        o[0][1] = GaussRat::one();
        o[1][0] = GaussRat::int(-1);
        assert_eq!(orbit_invariants(&o).unwrap(), (GaussRat::int(-2), GaussRat::zero()));
        o[2][3] = GaussRat::one();
        o[3][2] = GaussRat::int(-1);
        let (_, b) = orbit_invariants(&o).unwrap();
        assert_eq!(b, GaussRat::int(8));
        assert_eq!(orbit_invariants(&parity_flip(&o)).unwrap().1, GaussRat::int(-8));
        o[3][2] = GaussRat::one();
        assert_eq!(orbit_invariants(&o), Err(Error::NotAntisymmetric));
    }

    #[test]
    fn poincare() {
        let p = sym();
        let id = boost_x(GaussRat::one(), GaussRat::zero());
        let zero = vec![GaussRat::zero(); 4];
        let e = word(&p, "x1L0M23");
        assert_eq!(p.poincare_action(&e, &id, &zero).unwrap(), p.uea_normal_order(&e));
        let a = vec![GaussRat::int(3), GaussRat::zero(), GaussRat::zero(), GaussRat::zero()];
        let t = p.poincare_action(&word(&p, "x0"), &id, &a).unwrap();
        assert_eq!(p.display(&t), "-3 + x0");
        let boost = boost_x(GaussRat::ratio(5, 4), GaussRat::ratio(3, 4));
        let br = p.poincare_action(&word(&p, "x0x1").sub(&word(&p, "x1x0")), &boost, &zero).unwrap();
        let ik = Scalar::i() * Scalar::param("kappa");
        let m = p.poincare_action(&word(&p, "M01"), &boost, &zero).unwrap().scale(&ik);
        assert_eq!(br, m);
        assert!(p.poincare_homomorphism_check(&boost, &a, 11, 20).unwrap().passed());
        let bad = boost_x(GaussRat::int(2), GaussRat::one());
        assert_eq!(p.poincare_action(&e, &bad, &zero), Err(Error::NotLorentz("ΛᵀgΛ ≠ g".into())));
    }

    #[test]
    fn cocycles() {
        let m2 = || FiniteAlgebra::matrices(2);
        for c in cocycle_first_order_check(&BilinearCocycle::product(m2())).unwrap() {
            assert!(c.passed(), "{}", c.id);
        }
        for c in cocycle_first_order_check(&BilinearCocycle::zero(m2())).unwrap() {
            assert!(c.passed(), "{}", c.id);
        }
        let half = BilinearCocycle::half_i_commutator(m2());
        let checks = cocycle_first_order_check(&half).unwrap();
        assert!(checks[0].passed() && checks[1].passed());
        // c(f,g) = ½i[f,g] is not real for the matrix adjoint
        assert!(!checks[2].passed());
        // {f,g} = −[f,g], antisymmetric
        let (f, g) = (half.alg.basis(1), half.alg.basis(2));
        assert_eq!(half.poisson(&f, &g), scale(&half.alg.commutator(&f, &g), &Scalar::int(-1)));
        assert_eq!(m2().center().unwrap().len(), 1);
    }
}
