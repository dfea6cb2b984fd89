use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hausmeas_cli::run::{cmd_bands, cmd_dimension, cmd_hausdorff, cmd_measure, DimensionMethod};
use hausmeas_cli::{init_threads, CliError};

#[derive(Parser)]
#[command(
    name = "hausmeas",
    version,
    about = "Measure and dimension estimates for Hausdorff limits"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hausdorff distance between two sets given as JSON.
    Hausdorff { a: PathBuf, b: PathBuf },
    /// Fattened-measure report for an approximation sequence.
    Measure {
        #[arg(long)]
        config: PathBuf,
    },
    /// Band spectrum of a periodic potential.
    Bands {
        #[arg(long)]
        config: PathBuf,
    },
    /// Dimension upper bound from a measure report CSV.
    Dimension {
        #[arg(long)]
        stats: PathBuf,
        #[arg(long, value_enum)]
        method: Method,
        /// Rows used by the fit; defaults to the last half.
        #[arg(long)]
        tail: Option<usize>,
        /// Also write the fit as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Last,
    Direct,
}

fn run(cli: Cli) -> Result<(String, i32), CliError> {
    init_threads()?;
    match cli.command {
        Command::Hausdorff { a, b } => cmd_hausdorff(&a, &b).map(|s| (s, 0)),
        Command::Measure { config } => cmd_measure(&config).map(|s| (s, 0)),
        Command::Bands { config } => cmd_bands(&config),
        Command::Dimension {
            stats,
            method,
            tail,
            json,
        } => {
            let method = match method {
                Method::Last => DimensionMethod::Last,
                Method::Direct => DimensionMethod::Direct,
            };
            cmd_dimension(&stats, method, tail, json.as_deref()).map(|s| (s, 0))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("hausmeas: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
