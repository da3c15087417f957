//! Kaluza-Klein gauge model on V_4 × M_2(C): vacua and mass spectra.

use ncgeom::gauge_kk::{linear_connection, mass_spectrum, vacuum_check, Metric, Vacuum};
use ncgeom::matrix_geometry::MatrixAlgebra;

fn main() -> ncgeom::error::Result<()> {
    let a = MatrixAlgebra::build(2)?;
    for v in [Vacuum::Zero, Vacuum::Delta] {
        println!("B = {v} is a vacuum: {}", vacuum_check(&a, &v.tensor(a.dim())).is_vacuum);
        let s = mass_spectrum(&a, v, Metric::Trace)?;
        for family in s.families.keys() {
            println!("  {family:>8}: {:?}", s.levels(family, 1e-9));
        }
        println!("  massless: {:?}", s.massless);
    }
    let c = linear_connection(&a);
    println!("connection torsion-free: {}, Ω^1_212 = {}", c.torsion_free, c.curvature[0][1][0][1]);
    Ok(())
}
