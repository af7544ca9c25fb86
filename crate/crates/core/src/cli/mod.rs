//! Command-line front end: `verify`, `spectrum`, `wigner` and `sweep`.
//!
//! Exit status is 0 on success, 1 when a check or convergence guard fails and
//! 2 on configuration errors, for every subcommand.

pub mod commands;
pub mod config;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::error::Error;

pub use config::{GridAxis, GridSpec, RunConfig};
pub use verify::{cmd_verify, CheckResult, VerifyReport};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("check failed: {0}")]
    Check(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Check(_) => 1,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::NotConverged { .. } => CliError::Check(e.to_string()),
            _ => CliError::Config(e.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "ncphase", version, about = "Noncommutative phase-space toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// `key = value` configuration file; flags override it.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub mu: Option<f64>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub nu: Option<f64>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub hbar: Option<f64>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub mass: Option<f64>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub omega: Option<f64>,
    /// Coordinate coupling in `k x y`.
    #[arg(long = "k", global = true, allow_hyphen_values = true)]
    pub k: Option<f64>,
    /// Momentum coupling in `l px py`.
    #[arg(long = "l", global = true, allow_hyphen_values = true)]
    pub l: Option<f64>,
    /// Fock cutoff `N` (occupations `0..=N` per mode).
    #[arg(long, global = true)]
    pub cutoff: Option<usize>,
    #[arg(long, global = true)]
    pub levels: Option<usize>,
    #[arg(long, global = true)]
    pub n1: Option<u32>,
    #[arg(long, global = true)]
    pub n2: Option<u32>,
    /// Comma-separated `name:lo:hi:points` and `name=value` items.
    #[arg(long, global = true, value_name = "SPEC", allow_hyphen_values = true)]
    pub grid: Option<String>,
    /// Write output here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// JSON verify report.
    #[arg(long, global = true)]
    pub json: bool,
    /// Skip the dense-diagonalization columns of `spectrum` and `sweep`.
    #[arg(long, global = true)]
    pub no_oracle: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Run the verification suite.
    Verify,
    /// Analytic (and numeric) energy levels as CSV.
    Spectrum,
    /// Oscillator Wigner function on a 2D slice as CSV.
    Wigner,
    /// `spectrum` over a parameter lattice.
    Sweep,
}

impl Cli {
    /// Defaults, then the config file, then flags.
    pub fn run_config(&self) -> Result<RunConfig, CliError> {
        let mut cfg = RunConfig::default();
        if let Some(path) = &self.config {
            cfg.apply_file(path)?;
        }
        let reals = [
            (&mut cfg.mu, self.mu),
            (&mut cfg.nu, self.nu),
            (&mut cfg.hbar, self.hbar),
            (&mut cfg.mass, self.mass),
            (&mut cfg.omega, self.omega),
            (&mut cfg.k, self.k),
            (&mut cfg.l, self.l),
        ];
        for (slot, flag) in reals {
            if let Some(v) = flag {
                *slot = v;
            }
        }
        if let Some(v) = self.cutoff {
            cfg.cutoff = v;
        }
        if let Some(v) = self.levels {
            cfg.levels = v;
        }
        if let Some(v) = self.n1 {
            cfg.n1 = v;
        }
        if let Some(v) = self.n2 {
            cfg.n2 = v;
        }
        if let Some(g) = &self.grid {
            cfg.grid = Some(GridSpec::parse(g)?);
        }
        Ok(cfg)
    }
}

/// Output of one subcommand: the text to emit and the exit status.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub text: String,
    pub status: i32,
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let cfg = cli.run_config()?;
    match cli.command {
        Command::Verify => {
            cfg.validate()?;
            let report = cmd_verify(&cfg);
            let text = if cli.json { report.to_json() } else { report.to_text() };
            Ok(Outcome { text, status: if report.pass { 0 } else { 1 } })
        }
        Command::Spectrum => Ok(Outcome { text: commands::cmd_spectrum(&cfg, !cli.no_oracle)?, status: 0 }),
        Command::Wigner => Ok(Outcome { text: commands::cmd_wigner(&cfg)?, status: 0 }),
        Command::Sweep => Ok(Outcome { text: commands::cmd_sweep(&cfg, !cli.no_oracle)?, status: 0 }),
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Config(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| CliError::Config(format!("cannot write to stdout: {e}")))
        }
    }
}

/// Parses `args` (program name first), runs the subcommand and returns the
/// exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let result = execute(&cli).and_then(|outcome| {
        emit(&outcome.text, cli.out.as_ref())?;
        Ok(outcome.status)
    });
    match result {
        Ok(status) => status,
        Err(e) => {
            eprintln!("ncphase: {e}");
            e.exit_code()
        }
    }
}
