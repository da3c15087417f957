use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use ncgeom::error::{Error, Result};
use ncgeom::gauge_kk::{mass_spectrum, Metric, Vacuum};
use ncgeom::matrix_geometry::MatrixAlgebra;
use ncgeom::quantum::QParams;
use ncgeom::report::{Report, Status};
use ncgeom::scalar::GaussRat;
use ncgeom::suites::{normal_form, run_suite, Suite, SuiteOptions};

#[derive(Parser)]
#[command(name = "ncgeom", version, about = "Exact checks for noncommutative differential geometry")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a verification suite (matrix, gauge, deformation, quantum, all).
    Verify {
        suite: Suite,
        #[command(flatten)]
        common: Common,
        /// Deformation parameter κ evaluated at this value, in addition to the symbolic run.
        #[arg(long, value_parser = parse_gauss)]
        kappa_eval: Option<GaussRat>,
        #[arg(long)]
        vacuum: Option<Vacuum>,
        #[arg(long)]
        metric: Option<Metric>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// JSON file with a custom Hermitian traceless basis.
        #[arg(long)]
        basis: Option<PathBuf>,
        /// Write the JSON report here (atomically).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print the JSON report instead of one line per check.
        #[arg(long)]
        json: bool,
    },
    /// Print the mass spectrum of the gauge model as JSON.
    Spectrum {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value = "delta")]
        vacuum: Vacuum,
        #[arg(long, default_value = "trace")]
        metric: Metric,
        #[arg(long)]
        basis: Option<PathBuf>,
    },
    /// Normal form of a word in a shipped presentation.
    Nf {
        presentation: String,
        word: String,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    /// Matrix size.
    #[arg(long)]
    n: Option<usize>,
    /// Evaluate q at this Gaussian rational, e.g. `2`, `1/2`, `i`, `1+2i`.
    #[arg(long, value_parser = parse_gauss)]
    q_eval: Option<GaussRat>,
    #[arg(long, value_parser = parse_gauss)]
    p_eval: Option<GaussRat>,
}

fn parse_gauss(s: &str) -> std::result::Result<GaussRat, String> {
    GaussRat::parse(s).map_err(|e| e.to_string())
}

fn load_basis(path: Option<&PathBuf>) -> Result<Option<MatrixAlgebra>> {
    path.map(|p| MatrixAlgebra::from_json_file(p)).transpose()
}

fn run(cli: Cli) -> Result<bool> {
    match cli.cmd {
        Cmd::Verify { suite, common, kappa_eval, vacuum, metric, seed, basis, out, json } => {
            let opts = SuiteOptions {
                n: common.n,
                q_eval: common.q_eval,
                p_eval: common.p_eval,
                kappa_eval,
                vacuum,
                metric,
                seed,
                basis: load_basis(basis.as_ref())?,
                ..Default::default()
            };
            let checks = run_suite(suite, &opts)?;
            let report = Report::new(std::env::args().skip(1).collect(), checks);
            if let Some(p) = &out {
                report.write_atomic(p)?;
            }
            if json {
                println!("{}", report.to_json());
            } else {
                for c in &report.checks {
                    let tag = match c.status {
                        Status::Pass => "PASS",
                        Status::Fail => "FAIL",
                        Status::Warn => "WARN",
                    };
                    let params: Vec<String> = c.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    let mut line = format!("{tag} {}/{}", c.suite, c.id);
                    if !params.is_empty() {
                        line += &format!(" [{}]", params.join(", "));
                    }
                    if let Some(w) = &c.witness {
                        line += &format!(": {w}");
                    }
                    println!("{line}");
                }
                let s = &report.summary;
                println!("{} passed, {} failed, {} warnings", s.pass, s.fail, s.warn);
            }
            Ok(report.all_passed())
        }
        Cmd::Spectrum { n, vacuum, metric, basis } => {
            let alg = match load_basis(basis.as_ref())? {
                Some(a) => a,
                None => MatrixAlgebra::build(n)?,
            };
            let s = mass_spectrum(&alg, vacuum, metric)?;
            println!("{}", serde_json::to_string_pretty(&s).map_err(|e| Error::Config(e.to_string()))?);
            Ok(true)
        }
        Cmd::Nf { presentation, word, common } => {
            let opts = SuiteOptions { q_eval: common.q_eval, p_eval: common.p_eval, ..Default::default() };
            opts.validate()?;
            let params = QParams::new(opts.q(), opts.p())?;
            println!("{}", normal_form(&presentation, &word, &params)?);
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
