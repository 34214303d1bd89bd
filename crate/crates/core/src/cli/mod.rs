//! Command-line front end. Exit codes: 0 success, 1 usage or validation,
//! 2 I/O, 3 numerical failure.

mod commands;
pub mod csv;
pub mod params;

use std::ffi::OsString;

use clap::{Parser, Subcommand};

use crate::error::Error;
pub use commands::TABLE1;
pub use params::{Model, Params};

#[derive(Debug, Parser)]
#[command(name = "dielectric-casimir", version, about = "Photon emission from a sudden change of refractive index")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write dN/domega_out on a frequency grid as CSV
    Spectrum(Params),
    /// Print photon count and energy
    Totals(Params),
    /// Solve the closed-form count for both initial indices
    SolveNin(Params),
    /// Reproduce the five reference rows
    Table1(Params),
    /// Both initial-index branches across a range of final indices
    Sweep(Params),
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidParameter { .. } | Error::Domain { .. } => 1,
        Error::Io { .. } => 2,
        Error::Numerical(_) => 3,
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let result = match cli.command {
        Command::Spectrum(p) => p.merged().and_then(|p| commands::spectrum(&p)),
        Command::Totals(p) => p.merged().and_then(|p| commands::totals(&p)),
        Command::SolveNin(p) => p.merged().and_then(|p| commands::solve_nin(&p)),
        Command::Table1(p) => p.merged().and_then(|p| commands::table1(&p)),
        Command::Sweep(p) => p.merged().and_then(|p| commands::sweep(&p)),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
