//! Command-line front end for `antsel`: parses grids, runs the analysis and
//! writes CSV tables.

// `!(x > 0.0)` style checks are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod args;
pub mod commands;
pub mod error;
pub mod grid;
pub mod output;

use std::fs::File;
use std::io::{self, BufWriter, Write};

pub use args::{Cli, Command};
pub use commands::{Outcome, SCHEMAS};
pub use error::CliError;

/// Run a parsed command and write its table to `--out` or stdout.
pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let outcome = commands::run(&cli.command)?;
    match &cli.command.common().out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            outcome.table.write(&mut w)?;
            w.flush()?;
        }
        None => outcome.table.write(io::stdout().lock())?,
    }
    Ok(outcome)
}
