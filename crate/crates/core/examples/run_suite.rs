//! Running a verification suite from code and writing the JSON report.

use ncgeom::report::{Report, Status};
use ncgeom::suites::{run_suite, Suite, SuiteOptions};

fn main() -> ncgeom::error::Result<()> {
    let opts = SuiteOptions { n: Some(2), ..Default::default() };
    let checks = run_suite(Suite::Matrix, &opts)?;
    for c in checks.iter().filter(|c| c.status != Status::Pass) {
        println!("{:?} {}: {:?}", c.status, c.id, c.witness);
    }
    let report = Report::new(vec!["verify".into(), "matrix".into()], checks);
    println!("{} passed, {} failed, {} warnings", report.summary.pass, report.summary.fail, report.summary.warn);
    let path = std::env::temp_dir().join("ncgeom-matrix.json");
    report.write_atomic(&path)?;
    println!("report written to {}", path.display());
    Ok(())
}
