mod commands;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use homforge::Error;

#[derive(Parser)]
#[command(name = "homforge", version, about = "Hom-type nonassociative algebra workbench")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for identity checks.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Include wall-clock time in the report (makes output run-dependent).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand)]
pub enum Cmd {
    /// Print the Hom-type form of an identity.
    Homify {
        /// Catalog identity name.
        #[arg(long, conflicts_with_all = ["identity", "expr"])]
        builtin: Option<String>,
        /// Identity JSON file or catalog name.
        #[arg(long, conflicts_with = "expr")]
        identity: Option<String>,
        /// Multilinear expression, e.g. "(x*y)*z - x*(y*z)".
        #[arg(long)]
        expr: Option<String>,
    },
    /// Check an identity system on every basis tuple of an algebra.
    Check {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        identity: String,
        /// Endomorphism (matrix file or builtin) to Yau-twist the algebra with first.
        #[arg(long)]
        twist: Option<String>,
    },
    /// The operations q^α, symbolically or on an algebra's basis.
    Qalpha {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, conflicts_with = "algebra")]
        symbolic: bool,
        #[arg(long)]
        algebra: Option<String>,
    },
    /// Build a Hom-Sabinin family and check the four axioms.
    Sabinin {
        #[arg(long)]
        algebra: String,
        /// lie, malcev, bol, ly, or yiii (brackets from q^α, built one degree past the cutoff).
        #[arg(long, default_value = "yiii")]
        class: String,
        #[arg(long, default_value_t = 1)]
        cutoff: usize,
    },
    /// Coproduct of an element of the free Hom-bialgebra.
    Coproduct {
        #[arg(long)]
        expr: String,
    },
    /// Test whether an element of the free Hom-bialgebra is primitive.
    Primitive {
        #[arg(long)]
        expr: String,
    },
    /// Graded dimensions of the truncated universal enveloping Hom-algebra.
    Envelope {
        #[arg(long)]
        algebra: String,
        /// lie, malcev, bol, ly, or yiii.
        #[arg(long, default_value = "lie")]
        class: String,
        #[arg(long, default_value_t = 3)]
        degree: usize,
        /// Replace the twisting map by zero before building.
        #[arg(long)]
        zero_alpha: bool,
    },
    /// Check the antipode on a monomial in the free Hom-associative algebra.
    Antipode {
        #[arg(long)]
        expr: String,
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long)]
        exp_bound: Option<u32>,
    },
    /// Hom-power associativity on basis vectors and seeded samples.
    Powerassoc {
        #[arg(long)]
        algebra: String,
        #[arg(long, default_value_t = 6)]
        max: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = homforge::fdalg::DEFAULT_SEED)]
        seed: u64,
    },
}

fn error_code(e: &Error) -> u8 {
    match e {
        Error::Bounds(_) => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    let start = Instant::now();
    match commands::run(&cli.cmd, command, cli.jobs.max(1)) {
        Ok(mut report) => {
            if cli.timing {
                report.timing_ms = Some(start.elapsed().as_millis());
            }
            println!("{}", report.render(cli.json));
            ExitCode::from(report.status.exit_code())
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(error_code(&e))
        }
    }
}
