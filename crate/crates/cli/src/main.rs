//! `hpm`: reproduction tables for the homotopy perturbation series.
//!
//! Exit codes: 0 on success, 2 for argument or configuration errors, 3 when a
//! numerical oracle fails to converge.

mod commands;
mod config;
mod table;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hpm_core::HpmError;

use config::{Flags, Format, Problem, RunConfig};

#[derive(Debug, Parser)]
#[command(name = "hpm", version, about = "Homotopy perturbation series for Blasius and coupled Burgers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Series coefficients and profile against the shooting reference.
    Blasius(Flags),
    /// Partial sums against cos(x) exp(-t).
    Burgers(Flags),
    /// Error and residual norms for every order up to --order.
    Convergence(Flags),
    /// Regenerate the golden oracle constants.
    Golden {
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Numerical(HpmError),
}

impl From<HpmError> for CliError {
    fn from(e: HpmError) -> Self {
        match e {
            HpmError::Integration { .. } | HpmError::NoBracket { .. } | HpmError::NotConverged { .. } => {
                CliError::Numerical(e)
            }
            HpmError::AtOrder { ref source, .. } if matches!(**source, HpmError::Integration { .. }) => {
                CliError::Numerical(e)
            }
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Numerical(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Numerical(e) => write!(f, "numerical failure: {e}"),
        }
    }
}

fn emit(text: &str, output: Option<&PathBuf>) -> Result<(), CliError> {
    match output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display()))),
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Usage(format!("cannot write to stdout: {e}"))),
    }
}

fn resolve(flags: Flags, fixed: Option<Problem>) -> Result<RunConfig, CliError> {
    let mut cfg = flags.resolve()?;
    if let Some(p) = fixed {
        if cfg.problem.is_some_and(|given| given != p) {
            return Err(CliError::Usage(format!("--problem conflicts with the {p:?} command")));
        }
        cfg.problem = Some(p);
    }
    Ok(cfg)
}

fn run(cli: Cli) -> Result<(), CliError> {
    let (cfg, table) = match cli.command {
        Command::Golden { output } => {
            let constants = hpm_core::golden::compute_oracle_constants()?;
            return emit(&hpm_core::golden::render_golden(&constants), output.as_ref());
        }
        Command::Blasius(flags) => {
            let cfg = resolve(flags, Some(Problem::Blasius))?;
            let t = commands::cmd_blasius(&cfg)?;
            (cfg, t)
        }
        Command::Burgers(flags) => {
            let cfg = resolve(flags, Some(Problem::Burgers))?;
            let t = commands::cmd_burgers(&cfg)?;
            (cfg, t)
        }
        Command::Convergence(flags) => {
            let cfg = resolve(flags, None)?;
            let t = commands::cmd_convergence(&cfg)?;
            (cfg, t)
        }
    };
    let text = match cfg.format {
        Format::Csv => table.to_csv(),
        Format::Json => table.to_json(),
    };
    emit(&text, cfg.output.as_ref())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("hpm: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
