//! GL_{p,q}(2): normal forms, the quantum determinant, Hopf structure and
//! the RTT relation.

use ncgeom::quantum::{confluence_check, glpq, hopf_checks, rtt_check, Localized, QParams};
use ncgeom::scalar::Scalar;
use ncgeom::suites::normal_form;

fn main() -> ncgeom::error::Result<()> {
    let params = QParams::symbolic();
    println!("da = {}", normal_form("glpq", "da", &params)?);
    println!("{:?}", confluence_check(&glpq(&params)).status);

    let loc = Localized::new(&params);
    println!("D = {}", loc.display(&loc.det()));
    for c in hopf_checks(&params)? {
        println!("{:<32} {:?}", c.id, c.status);
    }
    let q = Scalar::param("q");
    for (label, p) in [("p = q", QParams::diagonal(q.clone())?), ("p = 1/q", QParams::sl(q)?)] {
        println!("RTT at {label}: {:?}", rtt_check(&p, "rtt")?.status);
    }
    Ok(())
}
