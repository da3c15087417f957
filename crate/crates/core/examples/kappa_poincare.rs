//! The κ-deformed algebra of x^μ, L^μ, M^μν: PBW normal forms, Casimirs
//! and the no-go for invariant antisymmetric tensors.

use ncgeom::deformation::{build_kappa_algebra, invariant_antisym_solver, orbit_invariants, Casimir, SymmetryGroup};
use ncgeom::ncpoly::NCPoly;
use ncgeom::scalar::{GaussRat, Scalar};

fn main() -> ncgeom::error::Result<()> {
    let alg = build_kappa_algebra(Scalar::param("kappa"));
    let w = NCPoly::word(alg.uea().parse_word("x1x0")?);
    println!("x1 x0 = {}", alg.display(&alg.uea_normal_order(&w)));
    for c in [Casimir::C2, Casimir::C4, Casimir::C4Corrected] {
        let chk = alg.casimir_centrality(c);
        println!("{}: {:?}", chk.id, chk.status);
    }
    println!("{}: {:?}", alg.center_diff_check().id, alg.center_diff_check().status);
    for g in [SymmetryGroup::Trivial, SymmetryGroup::Rotations, SymmetryGroup::Lorentz] {
        println!("invariant Ω under {g:?}: dimension {}", invariant_antisym_solver(g)?.0);
    }
    let mut omega = vec![vec![GaussRat::zero(); 4]; 4];
    omega[0][1] = GaussRat::one();
    omega[1][0] = GaussRat::int(-1);
    let (alpha, beta) = orbit_invariants(&omega)?;
    println!("Ω^01 = 1: α = {alpha}, β = {beta}");
    Ok(())
}
