//! Differential calculus on M_2(C): structure constants, dθ + θ∧θ = 0 and
//! the Poisson bracket of the symplectic form.

use ncgeom::matrix_geometry::MatrixAlgebra;
use ncgeom::scalar::Scalar;

fn main() -> ncgeom::error::Result<()> {
    let a = MatrixAlgebra::build(2)?;
    println!("dim = {}, C_12^3 = {}", a.dim(), a.c(0, 1, 2));

    let theta = a.canonical_theta();
    let mc = a.differential(&theta)?.add(&theta.wedge(&theta));
    println!("dθ + θ∧θ = 0: {}", mc.is_zero());

    let omega = a.symplectic_form();
    let pb = a.poisson(&omega, a.e(0), a.e(1))?;
    let comm = a.e(0).commutator(a.e(1)).scale(&Scalar::i());
    println!("{{E_1, E_2}} = i[E_1, E_2]: {}", pb == comm);
    Ok(())
}
