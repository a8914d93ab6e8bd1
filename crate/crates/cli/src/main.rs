use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod error;
mod input;
mod output;

/// Exact GIT stability computations for complete intersections.
#[derive(Debug, Parser)]
#[command(name = "cistab", version)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Global {
    /// Field descriptor such as `Q`, `F5` or `F25:x^2+x+2`.
    #[arg(long, global = true)]
    pub field: Option<String>,
    #[arg(long, global = true, env = "CISTAB_SEED", default_value_t = 0)]
    pub seed: u64,
    /// One JSON object per result line.
    #[arg(long, global = true)]
    pub machine: bool,
    /// Largest extension degree enumerated when looking for points.
    #[arg(long, global = true, default_value_t = 3)]
    pub max_extension: u32,
    /// Largest degree tried by the emptiness certificate.
    #[arg(long, global = true)]
    pub degree_bound: Option<u32>,
    /// Prime used to reduce rational input.
    #[arg(long, global = true, default_value_t = 10007)]
    pub prime: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse a system file and print it back.
    Parse { file: PathBuf },
    /// Smoothness check with a witness or certificate.
    Smooth { file: PathBuf },
    /// Whether the system cuts out a codimension-c locus.
    CiCheck { file: PathBuf },
    /// μ on the compactification, for F1 followed by F2..Fc.
    MuGrass {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        l1: i64,
        #[arg(long, allow_hyphen_values = true)]
        l2: i64,
        file: PathBuf,
    },
    /// Whether O(l1, l2) is ample
    Ample {
        #[arg(long)]
        c: u64,
        #[arg(long)]
        d1: u64,
        #[arg(long)]
        d2: u64,
        #[arg(long, allow_hyphen_values = true)]
        l1: i64,
        #[arg(long, allow_hyphen_values = true)]
        l2: i64,
    },
    /// The numerical stability condition and a linearization satisfying it.
    StabCond {
        #[arg(long = "N")]
        n: u64,
        #[arg(long)]
        c: u64,
        #[arg(long)]
        d1: u64,
        #[arg(long)]
        d2: u64,
        #[arg(long)]
        k: Option<u64>,
    },
    /// Class of the discriminant divisor for c = 2.
    DiscrC2 {
        #[arg(long = "N")]
        n: u64,
        #[arg(long)]
        d1: u64,
        #[arg(long)]
        d2: u64,
    },
    /// Search for α with μ <= 0.
    Destab {
        #[arg(long)]
        height: i64,
        #[arg(long, allow_hyphen_values = true)]
        l1: i64,
        #[arg(long, allow_hyphen_values = true)]
        l2: i64,
        /// Stop after this many μ evaluations.
        #[arg(long)]
        budget: Option<u64>,
        file: PathBuf,
    },
    /// Hilbert-point μ of the degree-l piece of the ideal.
    HilbMu {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long)]
        l: u32,
        file: PathBuf,
    },
    /// Necessary condition for Hilbert stability over all weightings.
    HilbCheck {
        #[arg(long)]
        height: i64,
        #[arg(long)]
        budget: Option<u64>,
        file: PathBuf,
    },
    /// The α-degree inequality.
    Alphadeg {
        #[command(subcommand)]
        command: AlphadegCommand,
    },
    /// The generic division identity.
    Division {
        #[arg(long = "N")]
        n: usize,
        #[arg(long)]
        d1: u32,
        #[arg(long)]
        d2: u32,
        #[arg(long)]
        j: u32,
        /// Print q_j and r_j.
        #[arg(long)]
        print: bool,
    },
    /// Membership in the locus W, for F1 followed by G2..Gc.
    WMember { file: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WitnessMode {
    Outside,
    Quadric,
}

#[derive(Debug, Subcommand)]
pub enum AlphadegCommand {
    Check {
        /// Rational coefficients, e.g. `1,3/2`.
        #[arg(long)]
        k: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        file: PathBuf,
    },
    Witness {
        #[arg(long, value_enum)]
        mode: WitnessMode,
        #[arg(long = "N")]
        n: usize,
        #[arg(long)]
        c: Option<usize>,
        #[arg(long)]
        degrees: Option<String>,
        /// 1-based index of the dominating equation.
        #[arg(long)]
        j: Option<usize>,
        /// Evaluate the inequality at these coefficients too.
        #[arg(long)]
        k: Option<String>,
    },
    Fuzz {
        #[arg(long = "N", default_value_t = 3)]
        n: usize,
        #[arg(long, default_value = "2,3")]
        degrees: String,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 3)]
        height: i64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = match commands::run(&cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    let _ = out.flush();
    ExitCode::from(code as u8)
}
