use nalgebra::DMatrix;

use crate::error::{Error, Result};

const SYM_TOL: f64 = 1e-9;

fn square(data: &[f64], n: usize) -> Result<DMatrix<f64>> {
    if data.len() != n * n {
        return Err(Error::Dimension(format!("{} entries for {n}x{n}", data.len())));
    }
    let m = DMatrix::from_row_slice(n, n, data);
    let asym = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| (m[(i, j)] - m[(j, i)]).abs())
        .fold(0.0, f64::max);
    let scale = m.amax().max(1.0);
    if asym > SYM_TOL * scale {
        return Err(Error::NotSymmetric(asym));
    }
    Ok(m)
}

/// Ascending eigenvalues of a real symmetric matrix.
pub fn symmetric_eigenvalues(data: &[f64], n: usize) -> Result<Vec<f64>> {
    let m = square(data, n)?;
    let mut ev: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    Ok(ev)
}

/// Ascending eigenvalues of `H v = λ K v` with `K` symmetric positive definite.
pub fn generalized_eigenvalues(h: &[f64], k: &[f64], n: usize) -> Result<Vec<f64>> {
    let h = square(h, n)?;
    let k = square(k, n)?;
    let chol = k
        .cholesky()
        .ok_or_else(|| Error::Dimension("kinetic matrix is not positive definite".into()))?;
    let l = chol.l();
    let linv = l
        .clone()
        .try_inverse()
        .ok_or_else(|| Error::DivisionByZero("singular kinetic matrix".into()))?;
    let mut m = &linv * h * linv.transpose();
    // Symmetrize away rounding before the symmetric solver.
    m = (&m + m.transpose()) * 0.5;
    let mut ev: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    Ok(ev)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_asymmetric() {
        assert!(matches!(
            symmetric_eigenvalues(&[1.0, 2.0, 0.0, 1.0], 2),
            Err(Error::NotSymmetric(_))
        ));
    }

    #[test]
    fn generalized_matches_scaled() {
        let ev = generalized_eigenvalues(&[4.0, 0.0, 0.0, 9.0], &[2.0, 0.0, 0.0, 3.0], 2).unwrap();
        assert!((ev[0] - 2.0).abs() < 1e-12 && (ev[1] - 3.0).abs() < 1e-12);
    }
}
