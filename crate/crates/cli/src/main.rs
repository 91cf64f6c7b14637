use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod certify;
mod io;
mod matroid;
mod periodic;
mod report;
mod thinsums;

use report::{CliError, Report};

/// Finite matroid operators, wildness certificates for the periodic
/// constructions, and thin-sums checks.
#[derive(Debug, Parser)]
#[command(name = "wildmat", version)]
struct Cli {
    /// Print machine-readable JSON reports instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0x5eed)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check (I1)-(I3) for a matroid or independence-family file.
    VerifyAxioms { path: PathBuf },
    /// M⁺: bases B + e.
    Plus(UnaryArgs),
    /// M⁻: bases B - e.
    Minus(UnaryArgs),
    /// The dual matroid.
    Dual(UnaryArgs),
    /// M₁ ∨ M₂, elements identified by label.
    Union {
        first: PathBuf,
        second: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// All circuits.
    Circuits(UnaryArgs),
    /// All cocircuits.
    Cocircuits(UnaryArgs),
    /// Circuits of M⁺ assembled from circuits of M and of its contractions.
    CircuitsLemma33(UnaryArgs),
    /// Largest circuit-cocircuit intersection, with a witness pair.
    WildScan { path: PathBuf },
    /// Build and verify a wildness certificate.
    Certify {
        construction: Construction,
        /// Number of cells covered by explicit witnesses (union-h only).
        #[arg(long, default_value_t = 50)]
        depth: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Re-verify a certificate from scratch.
    Recheck { path: PathBuf },
    /// Thin-sums dependences and matroids.
    Thinsums {
        #[command(subcommand)]
        command: thinsums::ThinCommand,
    },
    /// Decisions on an eventually periodic edge set.
    Periodic {
        #[command(subcommand)]
        command: periodic::PeriodicCommand,
    },
}

#[derive(Debug, clap::Args)]
struct UnaryArgs {
    path: PathBuf,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Construction {
    MplusG,
    UnionH,
}

fn run(cli: Cli) -> Result<Report, CliError> {
    use matroid::UnaryOp;
    match cli.command {
        Command::VerifyAxioms { path } => matroid::verify_axioms(&path),
        Command::Plus(a) => matroid::unary(UnaryOp::Plus, &a.path, a.output.as_deref()),
        Command::Minus(a) => matroid::unary(UnaryOp::Minus, &a.path, a.output.as_deref()),
        Command::Dual(a) => matroid::unary(UnaryOp::Dual, &a.path, a.output.as_deref()),
        Command::Circuits(a) => matroid::unary(UnaryOp::Circuits, &a.path, a.output.as_deref()),
        Command::Cocircuits(a) => matroid::unary(UnaryOp::Cocircuits, &a.path, a.output.as_deref()),
        Command::CircuitsLemma33(a) => matroid::unary(UnaryOp::CircuitsLemma33, &a.path, a.output.as_deref()),
        Command::Union { first, second, output } => matroid::union(&first, &second, output.as_deref()),
        Command::WildScan { path } => matroid::wild_scan(&path),
        Command::Certify {
            construction,
            depth,
            output,
        } => match construction {
            Construction::MplusG => certify::mplus(output.as_deref()),
            Construction::UnionH => certify::union(depth, output.as_deref()),
        },
        Command::Recheck { path } => certify::recheck(&path),
        Command::Thinsums { command } => thinsums::run(command, cli.seed),
        Command::Periodic { command } => periodic::run(command),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(v) = std::env::var("MATROID_MAX_GROUND") {
        match v.parse() {
            Ok(n) => wildmat::set_max_ground(n),
            Err(_) => {
                eprintln!("error: MATROID_MAX_GROUND must be a non-negative integer, got `{v}`");
                return ExitCode::from(2);
            }
        }
    }
    let json = cli.json;
    match run(cli) {
        Ok(report) => report.emit(json),
        Err(e) => e.emit(json),
    }
}
