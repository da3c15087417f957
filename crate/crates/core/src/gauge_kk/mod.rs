//! Kaluza–Klein type gauge model on (polynomial functions of x⁰..x³) ⊗ M_n(C).
//!
//! Legs `0..4` are `dx^μ`, legs `4..4+N` are `θ^k`. The connection is
//! parametrized as
//! `A = A⁰_μ dx^μ + i A^k_μ E_k dx^μ + B⁰_l θ^l + i (B^k_l − δ^k_l) E_k θ^l`,
//! so `B = δ` is `A = 0` and `B = 0` is the Maurer–Cartan form; both are flat.
//! Field-strength components are reported against `θ̂ = m θ`, with the mass
//! scale carried by the parameter `minv = 1/m`.

mod connection;
mod mass;

pub use connection::{linear_connection, ConnectionOnMatrixAlgebra};
pub use mass::{mass_spectrum, MassSpectrum, Metric};

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::forms::{Calculus, Form};
use crate::matrix_geometry::MatrixAlgebra;
use crate::scalar::{GaussRat, Mat, Param, Scalar};

pub const SPACETIME: usize = 4;
pub const SCALE: &str = "minv";

pub fn coordinate(mu: usize) -> Param {
    Param::new(&format!("x{mu}"))
}

fn minv_pow(e: i32) -> Scalar {
    Scalar::param_pow(SCALE, e)
}

/// The hybrid calculus; `d = d_spacetime + d_internal`.
#[derive(Clone, Debug)]
pub struct GaugeModel {
    alg: MatrixAlgebra,
}

impl GaugeModel {
    pub fn new(alg: MatrixAlgebra) -> Self {
        GaugeModel { alg }
    }

    pub fn algebra(&self) -> &MatrixAlgebra {
        &self.alg
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn dx(&self, mu: usize) -> Form {
        Form::leg(self.alg.n(), self.legs(), mu)
    }

    pub fn theta(&self, k: usize) -> Form {
        Form::leg(self.alg.n(), self.legs(), SPACETIME + k)
    }

    pub fn function(&self, a: Mat) -> Form {
        Form::function(self.legs(), a)
    }

    pub fn hybrid_d(&self, w: &Form) -> Result<Form> {
        self.d(w)
    }

    /// `F = dA + A∧A`.
    pub fn curvature(&self, a: &Form) -> Result<Form> {
        Ok(self.d(a)?.add(&a.wedge(a)))
    }

    /// `−i Σ E_k θ^k` on the internal legs.
    pub fn maurer_cartan(&self) -> Form {
        let mut f = Form::zero(self.alg.n(), self.legs());
        for k in 0..self.dim() {
            f.add_term(vec![SPACETIME + k], self.alg.e(k).scale(&-Scalar::i()));
        }
        f
    }
}

impl Calculus for GaugeModel {
    fn n(&self) -> usize {
        self.alg.n()
    }

    fn legs(&self) -> usize {
        SPACETIME + self.alg.dim()
    }

    fn partial(&self, k: usize, a: &Mat) -> Mat {
        if k < SPACETIME {
            let p = coordinate(k);
            a.map(|x| x.derivative(p))
        } else {
            self.alg.partial(k - SPACETIME, a)
        }
    }

    fn d_leg(&self, k: usize) -> Form {
        let mut out = Form::zero(self.alg.n(), self.legs());
        if k >= SPACETIME {
            for (b, c) in self.alg.d_leg(k - SPACETIME).terms() {
                out.add_term(b.iter().map(|i| i + SPACETIME).collect(), c.clone());
            }
        }
        out
    }
}

/// A hybrid vector field `X^μ ∂_μ + ξ^k ∂_k` (components multiply on the left).
#[derive(Clone, Debug, PartialEq)]
pub struct HybridVector {
    pub spacetime: Vec<Mat>,
    pub internal: Vec<Mat>,
}

impl HybridVector {
    pub fn from_components(model: &GaugeModel, comps: Vec<Mat>) -> Result<Self> {
        if comps.len() != model.legs() {
            return Err(Error::Dimension(format!(
                "{} components for {} legs",
                comps.len(),
                model.legs()
            )));
        }
        let internal = comps[SPACETIME..].to_vec();
        let spacetime = comps[..SPACETIME].to_vec();
        Ok(HybridVector { spacetime, internal })
    }

    pub fn basis(model: &GaugeModel, leg: usize) -> Self {
        let n = model.algebra().n();
        let comps = (0..model.legs())
            .map(|a| if a == leg { Mat::identity(n) } else { Mat::zeros(n, n) })
            .collect();
        HybridVector::from_components(model, comps).unwrap()
    }

    pub fn apply(&self, model: &GaugeModel, f: &Mat) -> Mat {
        let n = model.algebra().n();
        let mut out = Mat::zeros(n, n);
        for (a, c) in self.spacetime.iter().chain(&self.internal).enumerate() {
            if !c.is_zero() {
                out = &out + &(c * &model.partial(a, f));
            }
        }
        out
    }
}

/// `X = X^μ ∂_μ + ξ^k ∂_k` split into its two parts.
pub fn split_derivation(model: &GaugeModel, x: &HybridVector) -> (HybridVector, HybridVector) {
    let n = model.algebra().n();
    let z = || Mat::zeros(n, n);
    let st = HybridVector {
        spacetime: x.spacetime.clone(),
        internal: vec![z(); x.internal.len()],
    };
    let int = HybridVector {
        spacetime: vec![z(); SPACETIME],
        internal: x.internal.clone(),
    };
    (st, int)
}

/// `[X, Y] f = X(Y f) − Y(X f)`.
pub fn bracket_apply(model: &GaugeModel, x: &HybridVector, y: &HybridVector, f: &Mat) -> Mat {
    &x.apply(model, &y.apply(model, f)) - &y.apply(model, &x.apply(model, f))
}

/// Component fields of a connection; `b[m][l]` is `B^m_l`, `a[k][μ]` is `A^k_μ`.
#[derive(Clone, Debug, PartialEq)]
pub struct GaugeFields {
    pub a0: Vec<Scalar>,
    pub a: Vec<Vec<Scalar>>,
    pub b0: Vec<Scalar>,
    pub b: Vec<Vec<Scalar>>,
}

impl GaugeFields {
    pub fn zero(dim: usize) -> Self {
        GaugeFields {
            a0: vec![Scalar::zero(); SPACETIME],
            a: vec![vec![Scalar::zero(); SPACETIME]; dim],
            b0: vec![Scalar::zero(); dim],
            b: vec![vec![Scalar::zero(); dim]; dim],
        }
    }

    pub fn vacuum(dim: usize, v: Vacuum) -> Self {
        let mut f = GaugeFields::zero(dim);
        f.b = v.tensor(dim).iter().map(|r| r.iter().cloned().map(Scalar::from).collect()).collect();
        f
    }

    /// Random polynomial fields of degree ≤ `deg` in x⁰..x³, small integer coefficients.
    pub fn random(dim: usize, deg: u32, rng: &mut impl Rng) -> Self {
        let mut poly = || {
            let mut s = Scalar::zero();
            for _ in 0..rng.gen_range(0..3) {
                let mut t = Scalar::int(rng.gen_range(-2..=2));
                for _ in 0..rng.gen_range(0..=deg) {
                    t = &t * &Scalar::param(&format!("x{}", rng.gen_range(0..SPACETIME)));
                }
                s += t;
            }
            s
        };
        let mut f = GaugeFields::zero(dim);
        for v in f.a0.iter_mut().chain(f.b0.iter_mut()) {
            *v = poly();
        }
        for v in f.a.iter_mut().chain(f.b.iter_mut()).flatten() {
            *v = poly();
        }
        f
    }

    pub fn connection_form(&self, model: &GaugeModel) -> Form {
        let alg = model.algebra();
        let i = Scalar::i();
        let mut f = Form::zero(alg.n(), model.legs());
        for mu in 0..SPACETIME {
            let alpha: Vec<Scalar> = (0..alg.dim()).map(|k| &i * &self.a[k][mu]).collect();
            f.add_term(vec![mu], alg.compose(&self.a0[mu], &alpha));
        }
        for l in 0..alg.dim() {
            let alpha: Vec<Scalar> = (0..alg.dim())
                .map(|k| {
                    let shifted = if k == l { &self.b[k][l] - &Scalar::one() } else { self.b[k][l].clone() };
                    &i * &shifted
                })
                .collect();
            f.add_term(vec![SPACETIME + l], alg.compose(&self.b0[l], &alpha));
        }
        f
    }

    pub fn from_form(model: &GaugeModel, a: &Form) -> Result<Self> {
        if a.degree() != Some(1) && !a.is_zero() {
            return Err(Error::WrongDegree {
                expected: 1,
                found: a.degree().map_or("mixed".into(), |d| d.to_string()),
            });
        }
        let alg = model.algebra();
        let mi = -Scalar::i();
        let mut f = GaugeFields::zero(alg.dim());
        for mu in 0..SPACETIME {
            let (beta, alpha) = alg.decompose(&a.coefficient(&[mu]));
            f.a0[mu] = beta;
            for k in 0..alg.dim() {
                f.a[k][mu] = &mi * &alpha[k];
            }
        }
        for l in 0..alg.dim() {
            let (beta, alpha) = alg.decompose(&a.coefficient(&[SPACETIME + l]));
            f.b0[l] = beta;
            for k in 0..alg.dim() {
                let v = &mi * &alpha[k];
                f.b[k][l] = if k == l { v + Scalar::one() } else { v };
            }
        }
        Ok(f)
    }
}

/// Component families of `F = dA + A∧A`.
#[derive(Clone, Debug, PartialEq)]
pub struct FieldStrength {
    /// `F⁰_μν`
    pub f0: Vec<Vec<Scalar>>,
    /// `G^k_μν`
    pub g: Vec<Vec<Vec<Scalar>>>,
    /// `D_μ B⁰_l`
    pub db0: Vec<Vec<Scalar>>,
    /// `D_μ B^m_l`, indexed `[m][μ][l]`
    pub db: Vec<Vec<Vec<Scalar>>>,
    /// `G^m_kl`, indexed `[m][k][l]`
    pub gpot: Vec<Vec<Vec<Scalar>>>,
    /// Identity part of the θθ block, `−m⁻² C^p_kl B⁰_p`.
    pub g0: Vec<Vec<Scalar>>,
}

fn c(alg: &MatrixAlgebra, k: usize, m: usize, l: usize) -> Scalar {
    Scalar::constant(alg.c(k, m, l).clone())
}

/// `m²·G^m_kl` and `m²·G0_kl` from constant-or-polynomial `B`, `B⁰`.
pub(crate) fn potential_raw(alg: &MatrixAlgebra, b0: &[Scalar], b: &[Vec<Scalar>]) -> (Vec<Vec<Vec<Scalar>>>, Vec<Vec<Scalar>>) {
    let d = alg.dim();
    let mut gp = vec![vec![vec![Scalar::zero(); d]; d]; d];
    let mut g0 = vec![vec![Scalar::zero(); d]; d];
    for k in 0..d {
        for l in 0..d {
            let mut z = Scalar::zero();
            for p in 0..d {
                z -= &(&c(alg, k, l, p) * &b0[p]);
            }
            g0[k][l] = z;
            for m in 0..d {
                let mut v = Scalar::zero();
                for p in 0..d {
                    if !alg.c(k, l, p).is_zero() {
                        v += &c(alg, k, l, p) * &b[m][p];
                    }
                }
                for s in 0..d {
                    for r in 0..d {
                        if !alg.c(s, r, m).is_zero() {
                            v -= &(&(&c(alg, s, r, m) * &b[s][k]) * &b[r][l]);
                        }
                    }
                }
                gp[m][k][l] = v;
            }
        }
    }
    (gp, g0)
}

impl FieldStrength {
    /// Closed-form component families.
    pub fn compute(model: &GaugeModel, f: &GaugeFields) -> Self {
        let alg = model.algebra();
        let d = alg.dim();
        let dmu = |mu: usize, s: &Scalar| s.derivative(coordinate(mu));
        let f0 = (0..SPACETIME)
            .map(|mu| (0..SPACETIME).map(|nu| dmu(mu, &f.a0[nu]) - dmu(nu, &f.a0[mu])).collect())
            .collect();
        let g = (0..d)
            .map(|k| {
                (0..SPACETIME)
                    .map(|mu| {
                        (0..SPACETIME)
                            .map(|nu| {
                                let mut v = dmu(mu, &f.a[k][nu]) - dmu(nu, &f.a[k][mu]);
                                for l in 0..d {
                                    for m in 0..d {
                                        if !alg.c(l, m, k).is_zero() {
                                            v += &(&c(alg, l, m, k) * &f.a[l][mu]) * &f.a[m][nu];
                                        }
                                    }
                                }
                                v
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let m1 = minv_pow(1);
        let db0 = (0..SPACETIME)
            .map(|mu| (0..d).map(|l| &m1 * &dmu(mu, &f.b0[l])).collect())
            .collect();
        let db = (0..d)
            .map(|m| {
                (0..SPACETIME)
                    .map(|mu| {
                        (0..d)
                            .map(|l| {
                                let mut v = dmu(mu, &f.b[m][l]);
                                for s in 0..d {
                                    for r in 0..d {
                                        if !alg.c(s, r, m).is_zero() {
                                            v += &(&c(alg, s, r, m) * &f.a[s][mu]) * &f.b[r][l];
                                        }
                                    }
                                }
                                &m1 * &v
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let (gp, g0) = potential_raw(alg, &f.b0, &f.b);
        let m2 = minv_pow(2);
        let gpot = gp
            .iter()
            .map(|x| x.iter().map(|r| r.iter().map(|v| &m2 * v).collect()).collect())
            .collect();
        let g0 = g0.iter().map(|r| r.iter().map(|v| &m2 * v).collect()).collect();
        FieldStrength { f0, g, db0, db, gpot, g0 }
    }

    /// Rebuilds `F` as a form on the `θ` legs.
    pub fn reassemble(&self, model: &GaugeModel) -> Form {
        let alg = model.algebra();
        let d = alg.dim();
        let i = Scalar::i();
        let mi = -&i;
        let mut f = Form::zero(alg.n(), model.legs());
        for mu in 0..SPACETIME {
            for nu in (mu + 1)..SPACETIME {
                let alpha: Vec<Scalar> = (0..d).map(|k| &i * &self.g[k][mu][nu]).collect();
                f.add_term(vec![mu, nu], alg.compose(&self.f0[mu][nu], &alpha));
            }
        }
        let m = minv_pow(-1);
        for mu in 0..SPACETIME {
            for l in 0..d {
                let alpha: Vec<Scalar> = (0..d).map(|k| &i * &self.db[k][mu][l]).collect();
                let coef = alg.compose(&self.db0[mu][l], &alpha).scale(&m);
                f.add_term(vec![mu, SPACETIME + l], coef);
            }
        }
        let m2 = minv_pow(-2);
        for k in 0..d {
            for l in (k + 1)..d {
                let alpha: Vec<Scalar> = (0..d).map(|p| &mi * &self.gpot[p][k][l]).collect();
                let coef = alg.compose(&self.g0[k][l], &alpha).scale(&m2);
                f.add_term(vec![SPACETIME + k, SPACETIME + l], coef);
            }
        }
        f
    }
}

pub fn field_strength(model: &GaugeModel, a: &Form) -> Result<FieldStrength> {
    let f = GaugeFields::from_form(model, a)?;
    Ok(FieldStrength::compute(model, &f))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Vacuum {
    Zero,
    Delta,
}

impl Vacuum {
    pub fn tensor(self, dim: usize) -> Vec<Vec<GaussRat>> {
        (0..dim)
            .map(|m| {
                (0..dim)
                    .map(|l| if self == Vacuum::Delta && m == l { GaussRat::one() } else { GaussRat::zero() })
                    .collect()
            })
            .collect()
    }
}

impl FromStr for Vacuum {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "zero" | "0" => Ok(Vacuum::Zero),
            "delta" => Ok(Vacuum::Delta),
            _ => Err(Error::Config(format!("unknown vacuum `{s}` (zero|delta)"))),
        }
    }
}

impl fmt::Display for Vacuum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Vacuum::Zero => "zero",
            Vacuum::Delta => "delta",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VacuumCheck {
    pub is_vacuum: bool,
    /// Nonzero `G^m_kl` entries as `(m, k, l, value)`.
    pub residual: Vec<(usize, usize, usize, Scalar)>,
}

/// `G^m_kl = 0` for all indices, exactly, for a constant `B` (with `B⁰ = 0`).
pub fn vacuum_check(alg: &MatrixAlgebra, b: &[Vec<GaussRat>]) -> VacuumCheck {
    let d = alg.dim();
    let bs: Vec<Vec<Scalar>> = b.iter().map(|r| r.iter().cloned().map(Scalar::from).collect()).collect();
    let (gp, _) = potential_raw(alg, &vec![Scalar::zero(); d], &bs);
    let m2 = minv_pow(2);
    let mut residual = Vec::new();
    for (m, gm) in gp.iter().enumerate() {
        for k in 0..d {
            for l in (k + 1)..d {
                if !gm[k][l].is_zero() {
                    residual.push((m, k, l, &m2 * &gm[k][l]));
                }
            }
        }
    }
    VacuumCheck {
        is_vacuum: residual.is_empty(),
        residual,
    }
}

/// Transported tensor: `B'^s_l E_s = U⁻¹ (B^s_l E_s) U` for each `l`.
pub fn gauge_transform_b(alg: &MatrixAlgebra, b: &[Vec<GaussRat>], u: &Mat) -> Result<Vec<Vec<GaussRat>>> {
    let uinv = u.inverse()?;
    let d = alg.dim();
    let mut out = vec![vec![GaussRat::zero(); d]; d];
    for l in 0..d {
        let mut x = Mat::zeros(alg.n(), alg.n());
        for s in 0..d {
            x = &x + &alg.e(s).scale_c(&b[s][l]);
        }
        let y = &(&uinv * &x) * u;
        let (beta, alpha) = alg.decompose(&y);
        if !beta.is_zero() {
            return Err(Error::Dimension("conjugation produced an identity part".into()));
        }
        for s in 0..d {
            out[s][l] = alpha[s]
                .as_constant()
                .ok_or_else(|| Error::Dimension("non-numeric transported tensor".into()))?;
        }
    }
    Ok(out)
}

/// `A → U⁻¹ A U + U⁻¹ dU` for an invertible constant or polynomial `U`.
pub fn gauge_transform_form(model: &GaugeModel, a: &Form, u: &Mat) -> Result<Form> {
    let uinv = u.inverse()?;
    let du = model.hybrid_d(&model.function(u.clone()))?;
    Ok(a.left_mul(&uinv).right_mul(u).add(&du.left_mul(&uinv)))
}

/// A finite set of exact unitaries with Gaussian-rational entries.
pub fn exact_unitaries(n: usize) -> Vec<Mat> {
    let embed = |block: [[GaussRat; 2]; 2]| {
        Mat::from_fn(n, n, |i, j| {
            if i < 2 && j < 2 {
                Scalar::constant(block[i][j].clone())
            } else if i == j {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        })
    };
    let r = GaussRat::ratio;
    let z = GaussRat::zero;
    let o = GaussRat::one;
    let h = |a: i64, b: i64| GaussRat::complex((a, 2), (b, 2));
    vec![
        embed([[z(), o()], [o(), z()]]),
        embed([[GaussRat::i(), z()], [z(), o()]]),
        embed([[r(3, 5), r(-4, 5)], [r(4, 5), r(3, 5)]]),
        embed([[h(1, 1), h(1, -1)], [h(1, -1), h(1, 1)]]),
        Mat::from_fn(n, n, |i, j| if (i + 1) % n == j { Scalar::one() } else { Scalar::zero() }),
    ]
}

pub fn is_unitary(u: &Mat) -> bool {
    &u.adjoint() * u == Mat::identity(u.rows())
}

/// Seeded search over random tensors with entries in {−1, 0, 1} for exact
/// zeros of the potential; returns every distinct hit.
pub fn vacuum_search(alg: &MatrixAlgebra, seed: u64, trials: usize) -> Vec<Vec<Vec<GaussRat>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = alg.dim();
    let mut hits: Vec<Vec<Vec<GaussRat>>> = Vec::new();
    for _ in 0..trials {
        let b: Vec<Vec<GaussRat>> = (0..d)
            .map(|_| (0..d).map(|_| GaussRat::int(rng.gen_range(-1..=1))).collect())
            .collect();
        if !hits.contains(&b) && vacuum_check(alg, &b).is_vacuum {
            hits.push(b);
        }
    }
    hits
}

#[cfg(test)]
mod tests {
    use super::*;

    fn model() -> GaugeModel {
        GaugeModel::new(MatrixAlgebra::build(2).unwrap())
    }

    #[test]
    fn reassembly_matches_curvature() {
        let m = model();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..3 {
            let f = GaugeFields::random(m.dim(), 2, &mut rng);
            let a = f.connection_form(&m);
            assert_eq!(GaugeFields::from_form(&m, &a).unwrap(), f);
            let fs = field_strength(&m, &a).unwrap();
            assert_eq!(fs.reassemble(&m), m.curvature(&a).unwrap());
        }
    }

    #[test]
    fn vacua() {
        let alg = MatrixAlgebra::build(2).unwrap();
        assert!(vacuum_check(&alg, &Vacuum::Zero.tensor(3)).is_vacuum);
        assert!(vacuum_check(&alg, &Vacuum::Delta.tensor(3)).is_vacuum);
        let two: Vec<Vec<GaussRat>> = Vacuum::Delta
            .tensor(3)
            .iter()
            .map(|r| r.iter().map(|x| x * &GaussRat::int(2)).collect())
            .collect();
        let r = vacuum_check(&alg, &two);
        assert!(!r.is_vacuum && !r.residual.is_empty());
    }

    #[test]
    fn abelian_field() {
        let m = model();
        let mut f = GaugeFields::zero(3);
        f.a0[0] = Scalar::param("x1");
        let fs = FieldStrength::compute(&m, &f);
        assert_eq!(fs.f0[0][1], Scalar::int(-1));
        assert!(fs.g.iter().flatten().flatten().all(Scalar::is_zero));
    }

    #[test]
    fn d_squared_hybrid() {
        let m = model();
        let f = m.function(m.algebra().e(0).scale(&Scalar::param("x0")));
        assert!(m.hybrid_d(&m.hybrid_d(&f).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn covariance_under_unitaries() {
        let m = model();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = GaugeFields::random(3, 1, &mut rng).connection_form(&m);
        for u in exact_unitaries(2) {
            assert!(is_unitary(&u));
            let a2 = gauge_transform_form(&m, &a, &u).unwrap();
            let f2 = m.curvature(&a2).unwrap();
            let f1 = m.curvature(&a).unwrap().left_mul(&u.adjoint()).right_mul(&u);
            assert_eq!(f1, f2);
        }
    }
}
