//! `gspkit`: verify bicircular-matroid theorems and certify GSP/coGSP
//! orientations from the command line.

mod census;
mod certify;
mod girth;
mod input;
mod report;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gspkit::{Caps, Error};

#[derive(Parser, Debug)]
#[command(
    name = "gspkit",
    version,
    about = "Bicircular matroids, double circuits and GSP certificates"
)]
struct Cli {
    /// Seed for every randomized choice (realizations, sampled reorientations).
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,

    /// Cap overrides, e.g. `certify=14,circuits=22`.
    #[arg(long, global = true, env = "GSPKIT_CAPS")]
    caps: Option<String>,

    /// Allow long-running inputs (e.g. B(dodecahedron)).
    #[arg(long, global = true)]
    slow: bool,

    /// Record wall-clock times; reports are not byte-reproducible with this on.
    #[arg(long, global = true)]
    timing: bool,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that B(G) has no positive double circuit when girth(G) >= 5.
    #[command(name = "verify-girth5")]
    VerifyGirth5(girth::Args),
    /// Realize an orientation and certify it GSP or coGSP.
    Certify(certify::Args),
    /// Per-graph statistics for a stream of graphs, as CSV or JSON lines.
    Census(census::Args),
}

/// Global settings shared by every command.
#[derive(Debug, Clone, serde::Serialize)]
pub struct Global {
    pub seed: u64,
    pub caps: Caps,
    pub slow: bool,
    pub timing: bool,
    pub format: OutputFormat,
}

/// Exit codes: 0 completed, 1 a claimed property failed, 2 bad input,
/// 3 a resource cap was hit.
pub fn exit_code(err: &Error) -> u8 {
    match err {
        Error::ResourceCap { .. } | Error::Genericity(_) => 3,
        Error::SearchExhausted(_) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let caps = match cli.caps.as_deref().map(Caps::parse_overrides).transpose() {
        Ok(c) => c.unwrap_or_default(),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    Caps::install(caps);
    let global = Global {
        seed: cli.seed,
        caps: Caps::global(),
        slow: cli.slow,
        timing: cli.timing,
        format: cli.format,
    };
    let outcome = match &cli.command {
        Command::VerifyGirth5(a) => girth::run(&global, a),
        Command::Certify(a) => certify::run(&global, a),
        Command::Census(a) => census::run(&global, a),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
