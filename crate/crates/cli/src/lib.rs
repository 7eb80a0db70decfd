//! Command-line front end for `fracpow`.
//!
//! Each subcommand is a plain function returning its output so the same
//! code serves the binary, the tests and the acceptance runner.

pub mod args;
pub mod format;
pub mod manifest;
pub mod pde;
pub mod scalar;
pub mod table;

use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};

pub use args::{Cli, Command};

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            std::io::stdout().lock().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

pub fn run(cli: &Cli) -> Result<()> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build()?;
    pool.install(|| match &cli.command {
        Command::ScalarError(a) => emit(a.out.as_deref(), &scalar::scalar_error(a)?),
        Command::ScalarCurve(a) => emit(a.out.as_deref(), &scalar::scalar_curve(a)?),
        Command::Table(a) => emit(a.out.as_deref(), &table::table(a)?),
        Command::Solve(a) => {
            let report = pde::solve(a)?;
            emit(None, &(serde_json::to_string_pretty(&report)? + "\n"))
        }
    })
}
