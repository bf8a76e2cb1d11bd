use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod error;
mod theory;

use theory::TheoryArgs;

const EXIT_CODES: &str = "\
Exit codes:
  0  every check passed
  1  a check failed, or an I/O or numerical error
  2  malformed input (unreadable or invalid theory file, bad arguments)
  3  failed precondition (for example an odd anyon count)
  4  missing capability (braided mode on a theory without a braiding)

ANYONSIM_CACHE_DIR sets where solved braidings are cached.";

#[derive(Debug, Parser)]
#[command(name = "anyonsim", version, about = "Anyon theory simulator", after_help = EXIT_CODES)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Args)]
struct Output {
    /// Write the JSON report here and print a summary instead.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Tolerance for the pass/fail checks.
    #[arg(long, default_value_t = 1e-9)]
    eps: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Braided,
    BraidFree,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check pentagon, hexagon, unitarity and dimensions; report spins and indicators.
    #[command(after_help = EXIT_CODES)]
    Verify {
        #[command(flatten)]
        theory: TheoryArgs,
        /// Attach a solved braiding to a built-in theory first.
        #[arg(long)]
        braided: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Enumerate braidings of the F-data up to gauge.
    #[command(after_help = EXIT_CODES)]
    Solve {
        #[command(flatten)]
        theory: TheoryArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Teleport anyons through shared pairs.
    #[command(after_help = EXIT_CODES)]
    Teleport {
        #[command(flatten)]
        theory: TheoryArgs,
        #[arg(long, value_enum, default_value = "braided")]
        mode: ModeArg,
        /// Qubits to teleport (braided mode).
        #[arg(long, default_value_t = 1)]
        p: usize,
        /// Anyons to teleport (braid-free mode).
        #[arg(long = "N", default_value_t = 2)]
        anyons: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Run every measurement record instead of sampling one.
        #[arg(long)]
        sweep: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Superdense coding of two dits through one shared pair.
    #[command(after_help = EXIT_CODES)]
    Sdc {
        #[command(flatten)]
        theory: TheoryArgs,
        #[arg(long, value_enum, default_value = "braided")]
        mode: ModeArg,
        /// The two dits to send; drawn from the seed when absent.
        #[arg(long, num_args = 2, value_names = ["I", "J"])]
        message: Option<Vec<u16>>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Send every message.
        #[arg(long)]
        sweep: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Write a theory in the JSON format.
    #[command(after_help = EXIT_CODES)]
    Export {
        #[command(flatten)]
        theory: TheoryArgs,
        /// Include a solved braiding.
        #[arg(long)]
        braided: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Parse a theory file and check that it round-trips exactly.
    #[command(name = "import-check", after_help = EXIT_CODES)]
    ImportCheck {
        #[command(flatten)]
        theory: TheoryArgs,
        #[command(flatten)]
        output: Output,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
