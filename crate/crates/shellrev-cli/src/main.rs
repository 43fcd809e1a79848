//! `shellrev`: characteristic roots, harmonic solutions, thickness sweeps, discontinuity
//! scans and residual checks for shells of revolution.

mod commands;
mod error;
mod options;
mod svg;
mod table;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::commands::Output;
use crate::error::CliError;
use crate::options::Options;

#[derive(Parser)]
#[command(
    name = "shellrev",
    version,
    about = "Linear elastic shells of revolution and thick cylindrical tubes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Roots of the characteristic equation with their reference values.
    Roots(Options),
    /// Displacement amplitudes for one thickness and harmonic.
    Solve(Options),
    /// Normal displacement over a thickness grid, optionally charted.
    Sweep(Options),
    /// Discontinuity thicknesses over an axial wavenumber grid.
    Discont(Options),
    /// Equilibrium and consistency residuals of preset fields.
    Residuals(Options),
}

fn run(cli: Cli) -> Result<(), CliError> {
    let (flags, run): (Options, fn(&Options) -> Result<Output, CliError>) = match cli.command {
        Command::Roots(o) => (o, commands::run_roots),
        Command::Solve(o) => (o, commands::run_solve),
        Command::Sweep(o) => (o, commands::run_sweep),
        Command::Discont(o) => (o, commands::run_discont),
        Command::Residuals(o) => (o, commands::run_residuals),
    };
    let opts = options::resolve(flags)?;
    let json = match opts.format.as_deref().unwrap_or("csv") {
        "csv" => false,
        "json" => true,
        other => {
            return Err(CliError::Usage(format!(
                "--format must be `csv` or `json`, got `{other}`"
            )))
        }
    };
    let mut output = std::panic::catch_unwind(|| run(&opts)).map_err(|payload| {
        let msg = payload
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "unknown panic".into());
        CliError::Compute(msg)
    })??;
    // Output paths are excluded so the same inputs give identical files wherever they are written.
    let input: Vec<String> = opts
        .to_pairs()
        .into_iter()
        .filter(|(k, _)| !matches!(*k, "out" | "svg"))
        .map(|(k, v)| format!("{k}={v}"))
        .collect();
    output.table.meta("input", input.join("; "));
    if opts.svg.is_some() && output.chart.is_none() {
        return Err(CliError::Usage(
            "--svg is available for sweep and discont only".into(),
        ));
    }
    let text = if json {
        output.table.to_json()
    } else {
        output.table.to_csv()
    };
    match &opts.out {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    if let (Some(path), Some(chart)) = (&opts.svg, &output.chart) {
        std::fs::write(path, chart)?;
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("shellrev: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
