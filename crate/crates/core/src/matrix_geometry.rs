//! Differential calculus over the matrix algebra M_n(C): inner derivations,
//! their dual 1-forms θ^k, the exterior differential, the canonical 1-form,
//! the symplectic structure and a Hodge star.
//!
//! Conventions: `i[E_k, E_m] = C_km^l E_l`, `∂_k f = i[E_k, f]`,
//! `df = Σ_m (∂_m f) θ^m`, hence `dθ^k = -½ C_ml^k θ^m θ^l`.

use std::path::Path;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::forms::{Calculus, Form};
use crate::scalar::{levi_civita, GaussRat, Mat, Scalar};

#[derive(Clone, Debug)]
pub struct MatrixAlgebra {
    n: usize,
    basis: Vec<Mat>,
    /// `c[k][m][l]` = coefficient of `E_l` in `i[E_k, E_m]`.
    c: Vec<Vec<Vec<GaussRat>>>,
    /// `s[k][m][j]` = coefficient of `E_j` in `½{E_k, E_m}`.
    s: Vec<Vec<Vec<GaussRat>>>,
    t: Vec<Vec<GaussRat>>,
    t_inv: Vec<Vec<GaussRat>>,
    g: Vec<Vec<GaussRat>>,
}

/// Unnormalized generalized Gell-Mann matrices: symmetric and antisymmetric
/// pairs column by column, each column closed by a diagonal element.
pub fn gell_mann_basis(n: usize) -> Vec<Mat> {
    let mut out = Vec::new();
    let i = Scalar::i();
    for k in 1..n {
        for j in 0..k {
            out.push(&Mat::unit(n, j, k) + &Mat::unit(n, k, j));
            out.push(&Mat::unit(n, j, k).scale(&-&i) + &Mat::unit(n, k, j).scale(&i));
        }
        out.push(Mat::from_fn(n, n, |a, b| {
            if a != b {
                Scalar::zero()
            } else if a < k {
                Scalar::one()
            } else if a == k {
                Scalar::int(-(k as i64))
            } else {
                Scalar::zero()
            }
        }));
    }
    out
}

fn constant(m: &Mat) -> Result<Vec<GaussRat>> {
    m.as_constant()
        .ok_or_else(|| Error::InvalidBasis("basis entries must be numbers".into()))
}

fn invert_numeric(t: &[Vec<GaussRat>]) -> Result<Vec<Vec<GaussRat>>> {
    let m = Mat::from_fn(t.len(), t.len(), |i, j| Scalar::constant(t[i][j].clone()));
    let inv = m
        .inverse()
        .map_err(|_| Error::InvalidBasis("basis elements are linearly dependent".into()))?;
    Ok((0..t.len())
        .map(|i| (0..t.len()).map(|j| inv.get(i, j).as_constant().unwrap()).collect())
        .collect())
}

impl MatrixAlgebra {
    pub fn build(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::SizeTooSmall(n));
        }
        Self::from_basis(n, gell_mann_basis(n))
    }

    /// Accepts any hermitian traceless basis; every invariant is re-verified.
    pub fn from_basis(n: usize, basis: Vec<Mat>) -> Result<Self> {
        if n < 2 {
            return Err(Error::SizeTooSmall(n));
        }
        let dim = n * n - 1;
        if basis.len() != dim {
            return Err(Error::InvalidBasis(format!(
                "expected {dim} matrices, got {}",
                basis.len()
            )));
        }
        for (k, e) in basis.iter().enumerate() {
            if e.rows() != n || e.cols() != n {
                return Err(Error::InvalidBasis(format!("E{} is not {n}x{n}", k + 1)));
            }
            constant(e)?;
            if e.adjoint() != *e {
                return Err(Error::InvalidBasis(format!("E{} is not hermitian", k + 1)));
            }
            if !e.trace().is_zero() {
                return Err(Error::InvalidBasis(format!("E{} is not traceless", k + 1)));
            }
        }
        let t: Vec<Vec<GaussRat>> = (0..dim)
            .map(|k| {
                (0..dim)
                    .map(|m| (&basis[k] * &basis[m]).trace().as_constant().unwrap())
                    .collect()
            })
            .collect();
        let t_inv = invert_numeric(&t)?;
        let mut alg = MatrixAlgebra {
            n,
            basis,
            c: Vec::new(),
            s: Vec::new(),
            t,
            t_inv,
            g: Vec::new(),
        };
        let i = Scalar::i();
        let half = Scalar::ratio(1, 2);
        let mut c = vec![vec![Vec::new(); dim]; dim];
        let mut s = vec![vec![Vec::new(); dim]; dim];
        for k in 0..dim {
            for m in 0..dim {
                let comm = alg.basis[k].commutator(&alg.basis[m]).scale(&i);
                let (_, ck) = alg.decompose(&comm);
                c[k][m] = ck.iter().map(|x| x.as_constant().unwrap()).collect();
                let anti = (&(&alg.basis[k] * &alg.basis[m]) + &(&alg.basis[m] * &alg.basis[k])).scale(&half);
                let (_, sk) = alg.decompose(&anti);
                s[k][m] = sk.iter().map(|x| x.as_constant().unwrap()).collect();
            }
        }
        alg.c = c;
        alg.s = s;
        let mut g = vec![vec![GaussRat::zero(); dim]; dim];
        for k in 0..dim {
            for m in 0..dim {
                let mut acc = GaussRat::zero();
                for l in 0..dim {
                    for p in 0..dim {
                        acc += &alg.c[k][l][p] * &alg.c[p][m][l];
                    }
                }
                g[k][m] = acc;
            }
        }
        alg.g = g;
        Ok(alg)
    }

    /// Parses `{"n": int, "basis": [...]}`; each matrix is either a flat
    /// list of `n²` entries or `n` rows, each entry `[re, im]` with
    /// rationals as strings or integers.
    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::Config(m.to_string());
        let n = v.get("n").and_then(Value::as_u64).ok_or_else(|| bad("missing integer `n`"))? as usize;
        let basis = v
            .get("basis")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing array `basis`"))?;
        let num = |x: &Value| -> Result<GaussRat> {
            match x {
                Value::String(s) => GaussRat::parse(s),
                Value::Number(k) => k
                    .as_i64()
                    .map(GaussRat::int)
                    .ok_or_else(|| bad("non-integer JSON number; use a \"p/q\" string")),
                _ => Err(bad("entry must be a string or integer")),
            }
        };
        let entry = |x: &Value| -> Result<Scalar> {
            let pair = x.as_array().filter(|a| a.len() == 2).ok_or_else(|| bad("entry must be [re, im]"))?;
            let re = num(&pair[0])?;
            let im = num(&pair[1])?;
            Ok(Scalar::constant(&re + &(&im * &GaussRat::i())))
        };
        let mut mats = Vec::new();
        for m in basis {
            let arr = m.as_array().ok_or_else(|| bad("basis element must be an array"))?;
            let flat: Vec<&Value> = if arr.len() == n && arr.iter().all(|r| r.as_array().is_some_and(|r| r.len() == n && r.iter().all(|e| e.is_array()))) {
                arr.iter().flat_map(|r| r.as_array().unwrap().iter()).collect()
            } else {
                arr.iter().collect()
            };
            if flat.len() != n * n {
                return Err(bad(&format!("basis element has {} entries, expected {}", flat.len(), n * n)));
            }
            let vals: Vec<Scalar> = flat.into_iter().map(entry).collect::<Result<_>>()?;
            mats.push(Mat::from_fn(n, n, |i, j| vals[i * n + j].clone()));
        }
        Self::from_basis(n, mats)
    }

    pub fn from_json_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        let v: Value = serde_json::from_str(&text).map_err(|e| Error::Config(e.to_string()))?;
        Self::from_json(&v)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Mat] {
        &self.basis
    }

    pub fn e(&self, k: usize) -> &Mat {
        &self.basis[k]
    }

    pub fn c(&self, k: usize, m: usize, l: usize) -> &GaussRat {
        &self.c[k][m][l]
    }

    pub fn s(&self, k: usize, m: usize, j: usize) -> &GaussRat {
        &self.s[k][m][j]
    }

    pub fn t(&self) -> &[Vec<GaussRat>] {
        &self.t
    }

    pub fn t_inv(&self) -> &[Vec<GaussRat>] {
        &self.t_inv
    }

    pub fn g(&self) -> &[Vec<GaussRat>] {
        &self.g
    }

    pub fn identity(&self) -> Mat {
        Mat::identity(self.n)
    }

    /// `X = β·1 + Σ α^k E_k`.
    pub fn decompose(&self, x: &Mat) -> (Scalar, Vec<Scalar>) {
        let beta = x.trace().scale(&GaussRat::ratio(1, self.n as i64));
        let traces: Vec<Scalar> = self.basis.iter().map(|e| (e * x).trace()).collect();
        let alpha = (0..self.dim())
            .map(|m| {
                (0..self.dim())
                    .map(|k| traces[k].scale(&self.t_inv[m][k]))
                    .sum()
            })
            .collect();
        (beta, alpha)
    }

    pub fn compose(&self, beta: &Scalar, alpha: &[Scalar]) -> Mat {
        let mut out = self.identity().scale(beta);
        for (k, a) in alpha.iter().enumerate() {
            if !a.is_zero() {
                out = &out + &self.basis[k].scale(a);
            }
        }
        out
    }

    /// `g = r·t` if the Killing matrix is a constant multiple of the trace Gram.
    pub fn killing_trace_ratio(&self) -> Option<GaussRat> {
        let r = &self.g[0][0] / &self.t[0][0];
        let ok = (0..self.dim()).all(|k| {
            (0..self.dim()).all(|m| self.g[k][m] == &r * &self.t[k][m])
        });
        ok.then_some(r)
    }

    pub fn metric_is_diagonal(&self) -> bool {
        (0..self.dim()).all(|k| (0..self.dim()).all(|m| k == m || self.t[k][m].is_zero()))
    }

    /// Basis-element identity `E_k E_m = (1/n) t_km + S_km^j E_j − (i/2) C_km^j E_j`.
    pub fn product_residual(&self, k: usize, m: usize) -> Mat {
        let beta = Scalar::constant(&self.t[k][m] * &GaussRat::ratio(1, self.n as i64));
        let alpha: Vec<Scalar> = (0..self.dim())
            .map(|j| {
                Scalar::constant(&self.s[k][m][j] - &(&GaussRat::complex((0, 1), (1, 2)) * &self.c[k][m][j]))
            })
            .collect();
        &(&self.basis[k] * &self.basis[m]) - &self.compose(&beta, &alpha)
    }

    // ---- forms ----

    pub fn theta(&self, k: usize) -> Form {
        Form::leg(self.n, self.dim(), k)
    }

    pub fn function(&self, a: Mat) -> Form {
        Form::function(self.dim(), a)
    }

    pub fn one_form(&self, coeffs: &[Mat]) -> Form {
        let mut f = Form::zero(self.n, self.dim());
        for (k, a) in coeffs.iter().enumerate() {
            f.add_term(vec![k], a.clone());
        }
        f
    }

    pub fn differential(&self, w: &Form) -> Result<Form> {
        self.d(w)
    }

    /// The Maurer–Cartan form `θ = -i Σ E_k θ^k`: `df = [f, θ]`, `dθ + θ∧θ = 0`.
    pub fn canonical_theta(&self) -> Form {
        let mi = -Scalar::i();
        let coeffs: Vec<Mat> = self.basis.iter().map(|e| e.scale(&mi)).collect();
        self.one_form(&coeffs)
    }

    /// `Σ E_k θ^k`, the canonical form without the `-i`.
    pub fn real_theta(&self) -> Form {
        self.one_form(&self.basis.clone())
    }

    /// `Ω = i·dθ = d(Σ E_k θ^k)`, so `Ω(∂_k, ∂_m) = i[E_k, E_m]`.
    pub fn symplectic_form(&self) -> Form {
        self.d(&self.real_theta()).expect("1-form below top degree")
    }

    /// `ω(X, Y) = i_Y i_X ω` for a 2-form.
    pub fn evaluate2(&self, w: &Form, x: &Derivation, y: &Derivation) -> Result<Mat> {
        let r = w.interior(&x.comps)?.interior(&y.comps)?;
        Ok(r.coefficient(&[]))
    }

    /// The pairing `ω_ab = Ω(∂_a, ∂_b)` and its rank over numbers.
    pub fn omega_pairing(&self, omega: &Form) -> Result<(Vec<Vec<Mat>>, usize)> {
        let d = self.dim();
        let pair: Vec<Vec<Mat>> = (0..d)
            .map(|a| {
                (0..d)
                    .map(|b| self.evaluate2(omega, &Derivation::basis(self, a), &Derivation::basis(self, b)))
                    .collect::<Result<_>>()
            })
            .collect::<Result<_>>()?;
        let rank = self.pairing_system(&pair).rank()?;
        Ok((pair, rank))
    }

    // rows: (b, i, j) entry of Σ_a h^a ω_ab; columns: a
    fn pairing_system(&self, pair: &[Vec<Mat>]) -> Mat {
        let d = self.dim();
        let n = self.n;
        Mat::from_fn(d * n * n, d, |row, a| {
            let b = row / (n * n);
            let r = row % (n * n);
            pair[a][b].get(r / n, r % n).clone()
        })
    }

    pub fn check_nondegenerate(&self, omega: &Form) -> Result<Vec<Vec<Mat>>> {
        let (pair, rank) = self.omega_pairing(omega)?;
        if rank < self.dim() {
            return Err(Error::DegenerateOmega { rank, dim: self.dim() });
        }
        Ok(pair)
    }

    /// The vector field with `Ω(Ham_f, X) = X f` for all `X`, with numeric
    /// components.
    pub fn hamiltonian(&self, omega: &Form, f: &Mat) -> Result<Derivation> {
        let pair = self.check_nondegenerate(omega)?;
        self.hamiltonian_with(&pair, f)
    }

    fn hamiltonian_with(&self, pair: &[Vec<Mat>], f: &Mat) -> Result<Derivation> {
        let d = self.dim();
        let n = self.n;
        let sys = self.pairing_system(pair);
        let rhs: Vec<Scalar> = (0..d * n * n)
            .map(|row| {
                let b = row / (n * n);
                let r = row % (n * n);
                Derivation::basis(self, b).apply(self, f).get(r / n, r % n).clone()
            })
            .collect();
        let h = sys.solve(&rhs)?.ok_or(Error::NotHamiltonian)?;
        Ok(Derivation::from_scalars(self, &h))
    }

    /// `{f, g} = Ω(Ham_f, Ham_g)`.
    pub fn poisson(&self, omega: &Form, f: &Mat, g: &Mat) -> Result<Mat> {
        let pair = self.check_nondegenerate(omega)?;
        let hf = self.hamiltonian_with(&pair, f)?;
        let hg = self.hamiltonian_with(&pair, g)?;
        self.evaluate2(omega, &hf, &hg)
    }

    /// `{f_a, f_b}` for every pair, sharing one pairing computation.
    pub fn poisson_table(&self, omega: &Form, fs: &[Mat]) -> Result<Vec<Vec<Mat>>> {
        let pair = self.check_nondegenerate(omega)?;
        let hams: Vec<Derivation> = fs.iter().map(|f| self.hamiltonian_with(&pair, f)).collect::<Result<_>>()?;
        hams.iter()
            .map(|x| hams.iter().map(|y| self.evaluate2(omega, x, y)).collect())
            .collect()
    }

    /// Lie derivative by Cartan's formula `L_X = i_X d + d i_X`.
    pub fn lie(&self, x: &Derivation, w: &Form) -> Result<Form> {
        let dw = self.d(w)?;
        let mut out = if dw.is_zero() {
            Form::zero(self.n, self.dim())
        } else {
            dw.interior(&x.comps)?
        };
        let positive = w.sub(&w.homogeneous_part(0));
        if !positive.is_zero() {
            out.add_assign(&self.d(&positive.interior(&x.comps)?)?);
        }
        Ok(out)
    }

    // ---- Hodge ----

    fn require_diagonal(&self) -> Result<()> {
        if self.metric_is_diagonal() {
            Ok(())
        } else {
            Err(Error::NonDiagonalMetric)
        }
    }

    /// The volume form `η = θ^1 ∧ … ∧ θ^N` (unit coefficient).
    pub fn volume(&self) -> Form {
        Form::monomial(self.dim(), (0..self.dim()).collect(), self.identity())
    }

    /// `⋆θ^I = (Π_{i∈I} t^{ii}) ε(I, J) θ^J`, `J` the sorted complement.
    pub fn hodge(&self, w: &Form) -> Result<Form> {
        self.require_diagonal()?;
        let d = self.dim();
        let mut out = Form::zero(self.n, d);
        for (blade, a) in w.terms() {
            let comp: Vec<usize> = (0..d).filter(|k| !blade.contains(k)).collect();
            let mut idx = blade.clone();
            idx.extend(&comp);
            let eps = levi_civita(&idx);
            let mut f = GaussRat::int(eps as i64);
            for &k in blade {
                f = &f * &self.t_inv[k][k];
            }
            out.add_term(comp, a.scale_c(&f));
        }
        Ok(out)
    }

    /// `⋆⋆ = (−1)^{p(N−p)} Π_k t^{kk}` on p-forms.
    pub fn hodge_square_factor(&self, p: usize) -> GaussRat {
        let d = self.dim();
        let mut f = GaussRat::int(if (p * (d - p)) % 2 == 1 { -1 } else { 1 });
        for k in 0..d {
            f = &f * &self.t_inv[k][k];
        }
        f
    }

    /// Trace of the top-degree coefficient.
    pub fn integrate(&self, w: &Form) -> Scalar {
        let top: Vec<usize> = (0..self.dim()).collect();
        w.coefficient(&top).trace()
    }

    /// `(α, β) = ∫ α ∧ ⋆β`.
    pub fn inner(&self, a: &Form, b: &Form) -> Result<Scalar> {
        Ok(self.integrate(&a.wedge(&self.hodge(b)?)))
    }
}

impl Calculus for MatrixAlgebra {
    fn n(&self) -> usize {
        self.n
    }

    fn legs(&self) -> usize {
        self.dim()
    }

    fn partial(&self, k: usize, a: &Mat) -> Mat {
        self.basis[k].commutator(a).scale(&Scalar::i())
    }

    fn d_leg(&self, k: usize) -> Form {
        let d = self.dim();
        let mut out = Form::zero(self.n, d);
        for m in 0..d {
            for l in (m + 1)..d {
                // −½(C_ml^k − C_lm^k) θ^m θ^l over m<l
                let c = &self.c[m][l][k];
                if !c.is_zero() {
                    out.add_term(vec![m, l], self.identity().scale_c(&-c));
                }
            }
        }
        out
    }
}

/// A vector field `Σ f^k ∂_k` acting by `Σ f^k · i[E_k, ·]`.
#[derive(Clone, PartialEq, Debug)]
pub struct Derivation {
    comps: Vec<Mat>,
}

impl Derivation {
    pub fn new(comps: Vec<Mat>) -> Self {
        Derivation { comps }
    }

    pub fn basis(a: &MatrixAlgebra, k: usize) -> Self {
        Derivation {
            comps: (0..a.dim())
                .map(|m| if m == k { a.identity() } else { Mat::zeros(a.n(), a.n()) })
                .collect(),
        }
    }

    pub fn from_scalars(a: &MatrixAlgebra, h: &[Scalar]) -> Self {
        Derivation {
            comps: h.iter().map(|x| a.identity().scale(x)).collect(),
        }
    }

    pub fn comps(&self) -> &[Mat] {
        &self.comps
    }

    /// Numeric components when every `f^k` is a multiple of the identity.
    pub fn scalar_components(&self) -> Option<Vec<Scalar>> {
        self.comps
            .iter()
            .map(|c| {
                let d = c.get(0, 0).clone();
                (*c == Mat::identity(c.rows()).scale(&d)).then_some(d)
            })
            .collect()
    }

    pub fn apply(&self, a: &MatrixAlgebra, f: &Mat) -> Mat {
        let mut out = Mat::zeros(a.n(), a.n());
        for (k, c) in self.comps.iter().enumerate() {
            if !c.is_zero() {
                out = &out + &(c * &a.partial(k, f));
            }
        }
        out
    }

    pub fn left_mul(&self, f: &Mat) -> Self {
        Derivation {
            comps: self.comps.iter().map(|c| f * c).collect(),
        }
    }

    /// `X(fg) − X(f)g − fX(g)`; zero for honest derivations.
    pub fn leibniz_defect(&self, a: &MatrixAlgebra, f: &Mat, g: &Mat) -> Mat {
        let lhs = self.apply(a, &(f * g));
        &(&lhs - &(&self.apply(a, f) * g)) - &(f * &self.apply(a, g))
    }
}

/// `[∂_k, ∂_m] − C_km^l ∂_l` applied to `f`.
pub fn bracket_residual(a: &MatrixAlgebra, k: usize, m: usize, f: &Mat) -> Mat {
    let dk = Derivation::basis(a, k);
    let dm = Derivation::basis(a, m);
    let lhs = &dk.apply(a, &dm.apply(a, f)) - &dm.apply(a, &dk.apply(a, f));
    let mut rhs = Mat::zeros(a.n(), a.n());
    for l in 0..a.dim() {
        if !a.c(k, m, l).is_zero() {
            rhs = &rhs + &a.partial(l, f).scale_c(a.c(k, m, l));
        }
    }
    &lhs - &rhs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(n: usize) -> MatrixAlgebra {
        MatrixAlgebra::build(n).unwrap()
    }

    #[test]
    fn pauli_structure() {
        let a = alg(2);
        // i[σ1, σ2] = i·2iσ3 = −2σ3
        assert_eq!(a.c(0, 1, 2), &GaussRat::int(-2));
        assert_eq!(a.killing_trace_ratio(), Some(GaussRat::int(4)));
        for k in 0..3 {
            assert_eq!(a.g()[k][k], GaussRat::int(8));
            assert_eq!(a.t()[k][k], GaussRat::int(2));
        }
    }

    #[test]
    fn size_checks() {
        assert_eq!(MatrixAlgebra::build(1).unwrap_err(), Error::SizeTooSmall(1));
        let mut b = gell_mann_basis(2);
        b[2] = b[0].clone();
        assert!(matches!(MatrixAlgebra::from_basis(2, b), Err(Error::InvalidBasis(_))));
    }

    #[test]
    fn d_squared_on_basis() {
        let a = alg(2);
        for k in 0..3 {
            let de = a.differential(&a.function(a.e(k).clone())).unwrap();
            assert!(a.differential(&de).unwrap().is_zero());
            assert!(a.differential(&a.differential(&a.theta(k)).unwrap()).unwrap().is_zero());
        }
    }

    #[test]
    fn maurer_cartan() {
        for n in [2, 3] {
            let a = alg(n);
            let th = a.canonical_theta();
            let r = a.differential(&th).unwrap().add(&th.wedge(&th));
            assert!(r.is_zero(), "n={n}");
        }
    }

    #[test]
    fn poisson_matches_commutator() {
        let a = alg(2);
        let om = a.symplectic_form();
        for k in 0..3 {
            for m in 0..3 {
                let p = a.poisson(&om, a.e(k), a.e(m)).unwrap();
                assert_eq!(p, a.e(k).commutator(a.e(m)).scale(&Scalar::i()));
            }
            assert!(a.poisson(&om, a.e(k), &a.identity()).unwrap().is_zero());
        }
    }

    #[test]
    fn hodge_basics() {
        let a = alg(2);
        assert_eq!(a.hodge(&a.function(a.identity())).unwrap(), a.volume());
        assert_eq!(a.integrate(&a.volume()), Scalar::int(2));
        assert_eq!(a.inner(&a.theta(0), &a.theta(0)).unwrap(), Scalar::int(1));
    }

    #[test]
    fn derivations_not_a_left_module() {
        let a = alg(2);
        let x = Derivation::basis(&a, 0).left_mul(a.e(0));
        assert!(!x.leibniz_defect(&a, a.e(1), a.e(2)).is_zero());
        assert!(Derivation::basis(&a, 0).leibniz_defect(&a, a.e(1), a.e(2)).is_zero());
    }

    #[test]
    fn json_basis_roundtrip() {
        let v = serde_json::json!({
            "n": 2,
            "basis": [
                [[["0","0"],["1","0"]],[["1","0"],["0","0"]]],
                [["0","0"],["0","-1"],["0","1"],["0","0"]],
                [[1,0],[0,0],[0,0],[-1,0]]
            ]
        });
        let a = MatrixAlgebra::from_json(&v).unwrap();
        assert_eq!(a.basis(), alg(2).basis());
        let bad = serde_json::json!({"n": 2, "basis": [[[1,0],[0,0],[0,0],[1,0]]]});
        assert!(MatrixAlgebra::from_json(&bad).is_err());
    }
}
