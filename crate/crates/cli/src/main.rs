mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::output::Format;

/// Sharp inequalities for quadratic forms on the pi/4 sector.
#[derive(Debug, Parser)]
#[command(name = "sectorpoly", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,

    /// Also write the output to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Grid points per axis for oracle scans.
    #[arg(long, global = true)]
    grid: Option<usize>,

    /// Golden-section iterations for the 1D norm oracle.
    #[arg(long, global = true)]
    refine_iters: Option<usize>,

    /// Acceptance tolerance for oracle comparisons.
    #[arg(long, global = true)]
    tolerance: Option<f64>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sector norm of ax^2 + by^2 + cxy.
    #[command(allow_negative_numbers = true)]
    Norm {
        a: f64,
        b: f64,
        c: f64,
        /// Compare with the numeric oracle.
        #[arg(long)]
        verify: bool,
    },
    /// Sharp Bernstein bound for the gradient at (x, y).
    #[command(allow_negative_numbers = true)]
    Phi {
        x: f64,
        y: f64,
        #[arg(long)]
        verify: bool,
        /// Print the extreme point attaining the bound.
        #[arg(long)]
        witness: bool,
    },
    /// Sharp bound for the norm of the differential at (x, y).
    #[command(allow_negative_numbers = true)]
    Psi {
        x: f64,
        y: f64,
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        witness: bool,
    },
    /// Markov, polarization and unconditional constants with oracle checks.
    Constants,
    /// Curve data for one of the figures, one column per curve.
    Figure {
        #[arg(value_parser = clap::value_parser!(u32).range(1..=13))]
        n: u32,
        /// Number of lambda samples.
        #[arg(long, default_value_t = sectorpoly::figures::DEFAULT_SAMPLES)]
        samples: usize,
    },
    /// Comparison table against other domains.
    Table {
        #[arg(value_enum)]
        which: Which,
    },
    /// Run the full closed-form versus oracle suite.
    Verify {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Size of each random corpus.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Which {
    Sectors,
    Lp,
}

/// Exit status: 0 success, 2 usage or domain error, 3 verification failure.
pub enum Failure {
    Usage(String),
    Verification(String),
}

impl From<sectorpoly::Error> for Failure {
    fn from(e: sectorpoly::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match commands::dispatch(&cli.command, &cli.common) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed:\n  {msg}");
            ExitCode::from(3)
        }
    }
}
