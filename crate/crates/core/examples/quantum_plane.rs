//! Differential calculus on the Manin plane: θ, the σ operator and the
//! curvature prefactor at roots of unity.

use ncgeom::quantum::plane::{curvature_prefactor, forms, quantum_connection, sigma_ops};
use ncgeom::scalar::{GaussRat, Scalar};

fn main() -> ncgeom::error::Result<()> {
    let q = Scalar::param("q");
    let f = forms(&q)?;
    println!("θ = {}", f.display(&f.theta()));
    println!("σ =\n{}", f.sigma_matrix());
    for c in sigma_ops(&q)?.into_iter().chain(quantum_connection(&q)?) {
        println!("{:<32} {:?}", c.id, c.status);
    }
    for v in [GaussRat::one(), GaussRat::i(), GaussRat::int(2)] {
        println!("prefactor at q = {v}: {}", curvature_prefactor(&Scalar::constant(v.clone()))?);
    }
    Ok(())
}
