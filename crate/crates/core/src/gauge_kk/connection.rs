//! The canonical linear connection on the matrix algebra,
//! `Dθ^r = −ω^r_s ⊗ θ^s` with `ω^r_s = −½ C^r_st θ^t`, and its curvature.
//!
//! Tensors over the θ legs carry numeric (central) coefficients. `D` is
//! extended to `Ω¹ ⊗ Ω¹` with the flip `σ(θ^k ⊗ θ^m) = θ^m ⊗ θ^k`.

use crate::matrix_geometry::MatrixAlgebra;
use crate::forms::Calculus;
use crate::scalar::{GaussRat, Mat};

type T2 = Vec<Vec<GaussRat>>;
type T3 = Vec<Vec<Vec<GaussRat>>>;
type T4 = Vec<Vec<Vec<Vec<GaussRat>>>>;

#[derive(Clone, Debug)]
pub struct ConnectionOnMatrixAlgebra {
    /// `omega[r][s][t]`: coefficient of `θ^t` in `ω^r_s`.
    pub omega: T3,
    pub torsion_free: bool,
    /// `curvature[k][l][m][n]` from expanding `D²θ^k`.
    pub curvature: T4,
    /// `(1/8) C^k_lr C^r_mn`.
    pub closed_form: T4,
    /// Every `ω^r_s` coefficient commutes with every basis element.
    pub central: bool,
}

impl ConnectionOnMatrixAlgebra {
    pub fn curvature_matches(&self) -> bool {
        self.curvature == self.closed_form
    }
}

fn zeros3(d: usize) -> T3 {
    vec![vec![vec![GaussRat::zero(); d]; d]; d]
}

/// `C^r_st`, the coefficient of `E_r` in `i[E_s, E_t]`.
fn cu(a: &MatrixAlgebra, r: usize, s: usize, t: usize) -> &GaussRat {
    a.c(s, t, r)
}

pub fn linear_connection(a: &MatrixAlgebra) -> ConnectionOnMatrixAlgebra {
    let d = a.dim();
    let half = GaussRat::ratio(1, 2);
    let mut omega = zeros3(d);
    for r in 0..d {
        for s in 0..d {
            for t in 0..d {
                omega[r][s][t] = -(&half * cu(a, r, s, t));
            }
        }
    }
    // Dθ^r[t][s] = −ω^r_s(θ^t) ⊗ θ^s
    let dtheta: Vec<T2> = (0..d)
        .map(|r| {
            (0..d)
                .map(|t| (0..d).map(|s| -omega[r][s][t].clone()).collect())
                .collect()
        })
        .collect();

    // torsion: dθ^r − π(Dθ^r), both as antisymmetric 2-tensors
    let mut torsion_free = true;
    for r in 0..d {
        let mut dt = vec![vec![GaussRat::zero(); d]; d];
        for (b, coef) in a.d_leg(r).terms() {
            let v = coef.get(0, 0).as_constant().unwrap();
            let hv = &v * &half;
            dt[b[0]][b[1]] += hv.clone();
            dt[b[1]][b[0]] -= hv;
        }
        for x in 0..d {
            for y in 0..d {
                let pi = &(&dtheta[r][x][y] - &dtheta[r][y][x]) * &half;
                if dt[x][y] != pi {
                    torsion_free = false;
                }
            }
        }
    }

    // D²θ^r = Σ −ω^r_s-coefficients · [Dθ^t ⊗ θ^s + σ₁₂(θ^t ⊗ Dθ^s)]
    let mut curvature = vec![vec![vec![vec![GaussRat::zero(); d]; d]; d]; d];
    for r in 0..d {
        let mut t3 = zeros3(d);
        for s in 0..d {
            for t in 0..d {
                let c = -omega[r][s][t].clone();
                if c.is_zero() {
                    continue;
                }
                for x in 0..d {
                    for y in 0..d {
                        let v = &c * &dtheta[t][x][y];
                        if v.is_zero() {
                            continue;
                        }
                        t3[x][y][s] += v.clone();
                    }
                }
                // θ^t ⊗ Dθ^s = θ^t ⊗ θ^x ⊗ θ^y, flipped on the first two legs
                for x in 0..d {
                    for y in 0..d {
                        let v = &c * &dtheta[s][x][y];
                        if !v.is_zero() {
                            t3[x][t][y] += v;
                        }
                    }
                }
            }
        }
        // D²θ^r = −Ω^r_l ⊗ θ^l with Ω^r_l = Σ R[r][l][m][n] θ^m∧θ^n
        for l in 0..d {
            for m in 0..d {
                for n in 0..d {
                    let p = &(&t3[m][n][l] - &t3[n][m][l]) * &half;
                    curvature[r][l][m][n] = -p;
                }
            }
        }
    }

    let eighth = GaussRat::ratio(1, 8);
    let mut closed_form = vec![vec![vec![vec![GaussRat::zero(); d]; d]; d]; d];
    for k in 0..d {
        for l in 0..d {
            for m in 0..d {
                for n in 0..d {
                    let mut acc = GaussRat::zero();
                    for r in 0..d {
                        acc += cu(a, k, l, r) * cu(a, r, m, n);
                    }
                    closed_form[k][l][m][n] = &acc * &eighth;
                }
            }
        }
    }

    let central = omega.iter().flatten().flatten().all(|w| {
        let m = Mat::identity(a.n()).scale_c(w);
        a.basis().iter().all(|e| e.commutator(&m).is_zero())
    });

    ConnectionOnMatrixAlgebra {
        omega,
        torsion_free,
        curvature,
        closed_form,
        central,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curvature_two_ways() {
        for n in [2, 3] {
            let a = MatrixAlgebra::build(n).unwrap();
            let c = linear_connection(&a);
            assert!(c.torsion_free, "n={n}");
            assert!(c.central);
            assert!(c.curvature_matches(), "n={n}");
        }
    }

    #[test]
    fn pauli_component() {
        let a = MatrixAlgebra::build(2).unwrap();
        let c = linear_connection(&a);
        // Ω^1_{212} = (1/8) C^1_{2r} C^r_{12} = (1/8)(C^1_{23})(C^3_{12}) = (1/8)(−2)(−2)
        assert_eq!(c.closed_form[0][1][0][1], GaussRat::ratio(1, 2));
    }
}
