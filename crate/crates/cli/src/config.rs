//! Run configuration: defaults, then an optional `key = value` file, then flags.

use std::path::PathBuf;

use clap::{Args, ValueEnum};
use hpm_core::{keyvalue, MAX_ORDER};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Problem {
    Blasius,
    Burgers,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlphaMode {
    /// f''(0) = 0.332057
    Paper,
    /// Recover f''(0) with the shooting oracle.
    Shoot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Flags shared by every table-producing command. All optional so that a
/// config file can fill the gaps.
#[derive(Debug, Clone, Default, Args)]
pub struct Flags {
    /// Problem to sweep; required by `convergence`
    #[arg(long, value_enum)]
    pub problem: Option<Problem>,
    /// Truncation order (0 to 12).
    #[arg(long)]
    pub order: Option<usize>,
    #[arg(long, value_enum)]
    pub alpha: Option<AlphaMode>,
    /// Largest eta in the profile table (at most 10)
    #[arg(long)]
    pub eta_max: Option<f64>,
    /// Spacing of the eta grid from 0
    #[arg(long)]
    pub eta_step: Option<f64>,
    /// Number of x grid points on [0, 2 pi].
    #[arg(long)]
    pub x_steps: Option<usize>,
    /// Largest t in the Burgers grid
    #[arg(long)]
    pub t_max: Option<f64>,
    /// Number of t grid points on [0, t-max].
    #[arg(long)]
    pub t_steps: Option<usize>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write to a file instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Flat `key = value` file with the same keys as the flags.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub problem: Option<Problem>,
    pub order: usize,
    pub alpha_mode: AlphaMode,
    pub eta_max: f64,
    pub eta_step: f64,
    pub x_steps: usize,
    pub t_max: f64,
    pub t_steps: usize,
    pub format: Format,
    pub output: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            problem: None,
            order: 3,
            alpha_mode: AlphaMode::Paper,
            eta_max: hpm_core::blasius::TRUSTED_ETA_MAX,
            eta_step: 0.25,
            x_steps: 65,
            t_max: 1.0,
            t_steps: 21,
            format: Format::Csv,
            output: None,
        }
    }
}

/// Largest eta the shooting reference covers.
pub const ORACLE_ETA_MAX: f64 = 10.0;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn parse_value<T: std::str::FromStr>(key: &str, value: &str) -> Result<T, CliError> {
    value.parse().map_err(|_| usage(format!("config: invalid value `{value}` for `{key}`")))
}

fn parse_enum<E: ValueEnum>(key: &str, value: &str) -> Result<E, CliError> {
    E::from_str(value, true).map_err(|_| usage(format!("config: invalid value `{value}` for `{key}`")))
}

impl Flags {
    /// Reads `--config`, if any, and fills every flag the command line left unset.
    pub fn merge_config_file(mut self) -> Result<Self, CliError> {
        let Some(path) = self.config.clone() else {
            return Ok(self);
        };
        let text = std::fs::read_to_string(&path)
            .map_err(|e| usage(format!("cannot read config {}: {e}", path.display())))?;
        let entries = keyvalue::parse(&text).map_err(|e| usage(format!("config: {e}")))?;
        for (raw_key, value) in entries {
            let key = raw_key.replace('_', "-");
            let v = value.as_str();
            match key.as_str() {
                "problem" => fill(&mut self.problem, parse_enum(&key, v)?),
                "order" => fill(&mut self.order, parse_value(&key, v)?),
                "alpha" => fill(&mut self.alpha, parse_enum(&key, v)?),
                "eta-max" => fill(&mut self.eta_max, parse_value(&key, v)?),
                "eta-step" => fill(&mut self.eta_step, parse_value(&key, v)?),
                "x-steps" => fill(&mut self.x_steps, parse_value(&key, v)?),
                "t-max" => fill(&mut self.t_max, parse_value(&key, v)?),
                "t-steps" => fill(&mut self.t_steps, parse_value(&key, v)?),
                "format" => fill(&mut self.format, parse_enum(&key, v)?),
                "output" => fill(&mut self.output, PathBuf::from(v)),
                _ => return Err(usage(format!("config: unknown key `{raw_key}`"))),
            }
        }
        Ok(self)
    }

    pub fn resolve(self) -> Result<RunConfig, CliError> {
        let flags = self.merge_config_file()?;
        let d = RunConfig::default();
        let cfg = RunConfig {
            problem: flags.problem,
            order: flags.order.unwrap_or(d.order),
            alpha_mode: flags.alpha.unwrap_or(d.alpha_mode),
            eta_max: flags.eta_max.unwrap_or(d.eta_max),
            eta_step: flags.eta_step.unwrap_or(d.eta_step),
            x_steps: flags.x_steps.unwrap_or(d.x_steps),
            t_max: flags.t_max.unwrap_or(d.t_max),
            t_steps: flags.t_steps.unwrap_or(d.t_steps),
            format: flags.format.unwrap_or(d.format),
            output: flags.output,
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

fn fill<T>(slot: &mut Option<T>, value: T) {
    if slot.is_none() {
        *slot = Some(value);
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.order > MAX_ORDER {
            return Err(usage(format!("--order must be in [0, {MAX_ORDER}], got {}", self.order)));
        }
        if !(self.eta_step.is_finite() && self.eta_step > 0.0) {
            return Err(usage(format!("--eta-step must be positive, got {}", self.eta_step)));
        }
        if !(self.eta_max.is_finite() && self.eta_max > 0.0 && self.eta_max <= ORACLE_ETA_MAX) {
            return Err(usage(format!(
                "--eta-max must be in (0, {ORACLE_ETA_MAX}], got {}",
                self.eta_max
            )));
        }
        if self.x_steps == 0 || self.t_steps == 0 {
            return Err(usage("--x-steps and --t-steps must be at least 1"));
        }
        if !(self.t_max.is_finite() && self.t_max >= 0.0) {
            return Err(usage(format!("--t-max must be finite and non-negative, got {}", self.t_max)));
        }
        if self.t_max == 0.0 && self.t_steps > 1 {
            return Err(usage("--t-max 0 needs --t-steps 1 (a degenerate range holds one point)"));
        }
        Ok(())
    }
}
