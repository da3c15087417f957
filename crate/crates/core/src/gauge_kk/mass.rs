//! Quadratic expansion of `Tr ∫ F ∧ ⋆F` around a vacuum.
//!
//! Kinetic and mass bilinear forms are built exactly from the closed-form
//! field strengths (with `m = 1`), contracted with the inverse internal
//! metric, and handed to the generalized symmetric eigensolver. Mass² values
//! are in units of `m²`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{potential_raw, FieldStrength, GaugeFields, GaugeModel, Vacuum};
use crate::error::{Error, Result};
use crate::matrix_geometry::MatrixAlgebra;
use crate::scalar::{generalized_eigenvalues, point, GaussRat, Mat, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    Trace,
    Killing,
}

impl FromStr for Metric {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "trace" => Ok(Metric::Trace),
            "killing" => Ok(Metric::Killing),
            _ => Err(Error::Config(format!("unknown metric `{s}` (trace|killing)"))),
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Metric::Trace => "trace",
            Metric::Killing => "killing",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MassSpectrum {
    pub n: usize,
    pub metric: Metric,
    pub vacuum: String,
    /// Families whose mass² all vanish.
    pub massless: Vec<String>,
    /// Sorted mass² per family: `A0`, `A`, `B0`, `B`, and `B-family` (B⁰ and B together).
    pub families: BTreeMap<String, Vec<f64>>,
    /// Largest |mass²|, the scale for zero tests.
    pub scale: f64,
}

impl MassSpectrum {
    /// Distinct levels of a family, merged at relative tolerance `tol`.
    pub fn levels(&self, family: &str, tol: f64) -> Vec<f64> {
        let mut out: Vec<f64> = Vec::new();
        for &v in self.families.get(family).map(Vec::as_slice).unwrap_or(&[]) {
            let v = if v.abs() < tol * self.scale.max(1.0) { 0.0 } else { v };
            match out.last() {
                Some(&l) if (v - l).abs() <= tol * self.scale.max(1.0) => {}
                _ => out.push(v),
            }
        }
        out
    }
}

fn inverse_metric(alg: &MatrixAlgebra, metric: Metric) -> Result<Vec<Vec<GaussRat>>> {
    let src = match metric {
        Metric::Trace => alg.t(),
        Metric::Killing => alg.g(),
    };
    let d = alg.dim();
    let m = Mat::from_fn(d, d, |i, j| Scalar::constant(src[i][j].clone()));
    let inv = m.inverse()?;
    Ok((0..d)
        .map(|i| (0..d).map(|j| inv.get(i, j).as_constant().unwrap()).collect())
        .collect())
}

fn numeric(m: &Mat) -> Mat {
    m.specialize(&point(&[(super::SCALE, GaussRat::one())])).expect("m = 1")
}

/// `Re tr(X† Y)`.
fn pair(x: &Mat, y: &Mat) -> GaussRat {
    let t = (&x.adjoint() * y).trace().as_constant().expect("numeric matrices");
    GaussRat::from(t.re().clone())
}

fn to_f64(rows: &[Vec<GaussRat>]) -> Vec<f64> {
    rows.iter().flatten().map(|x| x.to_f64_pair().0).collect()
}

fn spectrum(h: &[Vec<GaussRat>], k: &[Vec<GaussRat>]) -> Result<Vec<f64>> {
    generalized_eigenvalues(&to_f64(h), &to_f64(k), h.len())
}

fn block(m: &[Vec<GaussRat>], idx: &[usize]) -> Vec<Vec<GaussRat>> {
    idx.iter().map(|&i| idx.iter().map(|&j| m[i][j].clone()).collect()).collect()
}

pub fn mass_spectrum(alg: &MatrixAlgebra, vacuum: Vacuum, metric: Metric) -> Result<MassSpectrum> {
    let check = super::vacuum_check(alg, &vacuum.tensor(alg.dim()));
    if !check.is_vacuum {
        return Err(Error::InvalidVacuum(format!("{:?}", check.residual)));
    }
    let d = alg.dim();
    let w = inverse_metric(alg, metric)?;
    let model = GaugeModel::new(alg.clone());
    let vac = GaugeFields::vacuum(d, vacuum);
    let x0 = Scalar::param("x0");
    let mut families = BTreeMap::new();

    // Gauge fields: field a = 0 is A⁰, 1..=d are A^k.
    let gauge_field = |a: usize, value: Scalar, mu: usize| {
        let mut f = vac.clone();
        if a == 0 {
            f.a0[mu] = value;
        } else {
            f.a[a - 1][mu] = value;
        }
        f
    };
    let ng = d + 1;
    let mut kin = Vec::new();
    let mut mix = Vec::new();
    for a in 0..ng {
        // kinetic: coefficient of dx⁰dx¹ from A_1 = x⁰
        let fs = FieldStrength::compute(&model, &gauge_field(a, x0.clone(), 1));
        let alpha: Vec<Scalar> = (0..d).map(|k| &Scalar::i() * &fs.g[k][0][1]).collect();
        kin.push(numeric(&alg.compose(&fs.f0[0][1], &alpha)));
        // mass: coefficient of dx⁰θ̂^l from constant A_0 = 1 at the vacuum
        let fs = FieldStrength::compute(&model, &gauge_field(a, Scalar::one(), 0));
        mix.push(
            (0..d)
                .map(|l| {
                    let alpha: Vec<Scalar> = (0..d).map(|k| &Scalar::i() * &fs.db[k][0][l]).collect();
                    numeric(&alg.compose(&fs.db0[0][l], &alpha))
                })
                .collect::<Vec<_>>(),
        );
    }
    let kg: Vec<Vec<GaussRat>> = (0..ng).map(|a| (0..ng).map(|b| pair(&kin[a], &kin[b])).collect()).collect();
    let hg: Vec<Vec<GaussRat>> = (0..ng)
        .map(|a| {
            (0..ng)
                .map(|b| {
                    let mut s = GaussRat::zero();
                    for l in 0..d {
                        for l2 in 0..d {
                            if !w[l][l2].is_zero() {
                                s += &w[l][l2] * &pair(&mix[a][l], &mix[b][l2]);
                            }
                        }
                    }
                    s
                })
                .collect()
        })
        .collect();
    families.insert("A0".to_string(), spectrum(&block(&hg, &[0]), &block(&kg, &[0]))?);
    let ak: Vec<usize> = (1..ng).collect();
    families.insert("A".to_string(), spectrum(&block(&hg, &ak), &block(&kg, &ak))?);

    // Scalar fields: 0..d are B⁰_l, then B^m_l at d + m·d + l.
    let nb = d + d * d;
    let b_vac: Vec<Vec<Scalar>> = vac.b.clone();
    let set = |f: &mut GaugeFields, a: usize, v: Scalar| {
        if a < d {
            f.b0[a] = v;
        } else {
            let (m, l) = ((a - d) / d, (a - d) % d);
            f.b[m][l] = &b_vac[m][l] + &v;
        }
    };
    let mut kin_b = Vec::new();
    let mut lin = Vec::new();
    let pairs: Vec<(usize, usize)> = (0..d).flat_map(|k| ((k + 1)..d).map(move |l| (k, l))).collect();
    let theta_block = |b0: &[Scalar], b: &[Vec<Scalar>]| -> Vec<Mat> {
        let (gp, g0) = potential_raw(alg, b0, b);
        pairs
            .iter()
            .map(|&(k, l)| {
                let alpha: Vec<Scalar> = (0..d).map(|p| &-Scalar::i() * &gp[p][k][l]).collect();
                alg.compose(&g0[k][l], &alpha)
            })
            .collect()
    };
    for a in 0..nb {
        let mut f = vac.clone();
        set(&mut f, a, x0.clone());
        let fs = FieldStrength::compute(&model, &f);
        kin_b.push(
            (0..d)
                .map(|l| {
                    let alpha: Vec<Scalar> = (0..d).map(|k| &Scalar::i() * &fs.db[k][0][l]).collect();
                    numeric(&alg.compose(&fs.db0[0][l], &alpha))
                })
                .collect::<Vec<_>>(),
        );
        let mut fp = vac.clone();
        set(&mut fp, a, Scalar::one());
        let mut fm = vac.clone();
        set(&mut fm, a, Scalar::int(-1));
        let p = theta_block(&fp.b0, &fp.b);
        let m = theta_block(&fm.b0, &fm.b);
        lin.push(
            p.iter()
                .zip(&m)
                .map(|(x, y)| (x - y).scale(&Scalar::ratio(1, 2)))
                .collect::<Vec<_>>(),
        );
    }
    let kb: Vec<Vec<GaussRat>> = (0..nb)
        .map(|a| {
            (0..nb)
                .map(|b| {
                    let mut s = GaussRat::zero();
                    for l in 0..d {
                        for l2 in 0..d {
                            if !w[l][l2].is_zero() {
                                s += &w[l][l2] * &pair(&kin_b[a][l], &kin_b[b][l2]);
                            }
                        }
                    }
                    s
                })
                .collect()
        })
        .collect();
    // antisymmetric pairing: w^{kk'}w^{ll'} − w^{kl'}w^{lk'}
    let pw: Vec<Vec<GaussRat>> = pairs
        .iter()
        .map(|&(k, l)| {
            pairs
                .iter()
                .map(|&(k2, l2)| &(&w[k][k2] * &w[l][l2]) - &(&w[k][l2] * &w[l][k2]))
                .collect()
        })
        .collect();
    let hb: Vec<Vec<GaussRat>> = (0..nb)
        .map(|a| {
            (a..nb)
                .map(|b| {
                    let mut s = GaussRat::zero();
                    for (i, _) in pairs.iter().enumerate() {
                        if lin[a][i].is_zero() {
                            continue;
                        }
                        for (j, _) in pairs.iter().enumerate() {
                            if !pw[i][j].is_zero() && !lin[b][j].is_zero() {
                                s += &pw[i][j] * &pair(&lin[a][i], &lin[b][j]);
                            }
                        }
                    }
                    s
                })
                .collect::<Vec<_>>()
        })
        .collect();
    let hb: Vec<Vec<GaussRat>> = (0..nb)
        .map(|a| (0..nb).map(|b| if b >= a { hb[a][b - a].clone() } else { hb[b][a - b].clone() }).collect())
        .collect();
    let all: Vec<usize> = (0..nb).collect();
    let b0i: Vec<usize> = (0..d).collect();
    let bi: Vec<usize> = (d..nb).collect();
    families.insert("B-family".to_string(), spectrum(&block(&hb, &all), &block(&kb, &all))?);
    families.insert("B0".to_string(), spectrum(&block(&hb, &b0i), &block(&kb, &b0i))?);
    families.insert("B".to_string(), spectrum(&block(&hb, &bi), &block(&kb, &bi))?);

    let scale = families
        .values()
        .flatten()
        .fold(0.0f64, |m, v| m.max(v.abs()))
        .max(f64::MIN_POSITIVE);
    let massless = ["A0", "A", "B0", "B"]
        .iter()
        .filter(|f| families[**f].iter().all(|v| v.abs() < 1e-12 * scale.max(1.0)))
        .map(|f| f.to_string())
        .collect();
    Ok(MassSpectrum {
        n: alg.n(),
        metric,
        vacuum: vacuum.to_string(),
        massless,
        families,
        scale,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(super) fn close(a: &[f64], b: &[f64]) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-9)
    }

    #[test]
    fn pauli_spectra_trace_metric() {
        let alg = MatrixAlgebra::build(2).unwrap();
        let s = mass_spectrum(&alg, Vacuum::Zero, Metric::Trace).unwrap();
        assert!(s.massless.contains(&"A0".to_string()) && s.massless.contains(&"A".to_string()));
        assert!(close(&s.families["B-family"], &[2.0; 12]));
        let s = mass_spectrum(&alg, Vacuum::Delta, Metric::Trace).unwrap();
        assert!(close(&s.families["A"], &[4.0; 3]));
        assert!(close(&s.families["B0"], &[2.0; 3]));
        assert!(close(&s.levels("B", 1e-9), &[0.0, 2.0, 8.0]));
        assert_eq!(s.massless, vec!["A0".to_string()]);
    }

    #[test]
    fn killing_metric_rescales_uniformly() {
        let alg = MatrixAlgebra::build(2).unwrap();
        let s = mass_spectrum(&alg, Vacuum::Delta, Metric::Killing).unwrap();
        assert!(close(&s.levels("B", 1e-9), &[0.0, 0.5, 2.0]));
    }
}
