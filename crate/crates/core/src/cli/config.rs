//! Run configuration: a flat `key = value` file overridden by flags.

use std::path::Path;

use crate::fock::FockBasis;
use crate::oscillator::{OscillatorParams, MAX_LEVELS};
use crate::params::NCParameters;

use super::CliError;

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub mu: f64,
    pub nu: f64,
    pub hbar: f64,
    pub mass: f64,
    pub omega: f64,
    pub k: f64,
    pub l: f64,
    pub cutoff: usize,
    pub levels: usize,
    pub n1: u32,
    pub n2: u32,
    pub grid: Option<GridSpec>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            mu: 0.1,
            nu: 0.1,
            hbar: 1.0,
            mass: 1.0,
            omega: 1.0,
            k: 0.2,
            l: 0.1,
            cutoff: 40,
            levels: 6,
            n1: 0,
            n2: 0,
            grid: None,
        }
    }
}

fn parse_num<T: std::str::FromStr>(key: &str, value: &str) -> Result<T, CliError> {
    value
        .trim()
        .parse()
        .map_err(|_| CliError::Config(format!("invalid value `{value}` for `{key}`")))
}

impl RunConfig {
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), CliError> {
        match key {
            "mu" => self.mu = parse_num(key, value)?,
            "nu" => self.nu = parse_num(key, value)?,
            "hbar" => self.hbar = parse_num(key, value)?,
            "mass" | "m" => self.mass = parse_num(key, value)?,
            "omega" => self.omega = parse_num(key, value)?,
            "k" => self.k = parse_num(key, value)?,
            "l" => self.l = parse_num(key, value)?,
            "cutoff" => self.cutoff = parse_num(key, value)?,
            "levels" => self.levels = parse_num(key, value)?,
            "n1" => self.n1 = parse_num(key, value)?,
            "n2" => self.n2 = parse_num(key, value)?,
            "grid" => self.grid = Some(GridSpec::parse(value)?),
            _ => return Err(CliError::Config(format!("unknown configuration key `{key}`"))),
        }
        Ok(())
    }

    /// Applies `key = value` lines; `#` starts a comment.
    pub fn apply_text(&mut self, text: &str) -> Result<(), CliError> {
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| CliError::Config(format!("line {}: expected `key = value`", n + 1)))?;
            self.set(key.trim(), value.trim())?;
        }
        Ok(())
    }

    pub fn apply_file(&mut self, path: &Path) -> Result<(), CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        self.apply_text(&text)
    }

    pub fn nc(&self) -> Result<NCParameters, CliError> {
        Ok(NCParameters::new(self.mu, self.nu, self.hbar)?)
    }

    pub fn oscillator(&self) -> Result<OscillatorParams, CliError> {
        Ok(OscillatorParams::new(self.nc()?, self.mass, self.omega, self.k, self.l)?)
    }

    pub fn basis(&self) -> Result<FockBasis, CliError> {
        Ok(FockBasis::new(self.cutoff)?)
    }

    /// Re-checks every downstream constraint.
    pub fn validate(&self) -> Result<(), CliError> {
        crate::oscillator::OscillatorSolution::solve(&self.oscillator()?)?;
        self.basis()?;
        if self.levels > MAX_LEVELS {
            return Err(CliError::Config(format!("levels = {} exceeds the maximum of {MAX_LEVELS}", self.levels)));
        }
        Ok(())
    }
}

/// One varied axis `name:lo:hi:points` of a [`GridSpec`].
#[derive(Debug, Clone, PartialEq)]
pub struct GridAxis {
    pub name: String,
    pub lo: f64,
    pub hi: f64,
    pub points: usize,
}

impl GridAxis {
    pub fn values(&self) -> Vec<f64> {
        if self.points == 1 {
            return vec![self.lo];
        }
        let step = (self.hi - self.lo) / (self.points - 1) as f64;
        (0..self.points).map(|i| self.lo + i as f64 * step).collect()
    }
}

/// Comma-separated items, each either `name:lo:hi:points` (varied) or
/// `name=value` (held fixed).
#[derive(Debug, Clone, PartialEq, Default)]
pub struct GridSpec {
    pub axes: Vec<GridAxis>,
    pub fixed: Vec<(String, f64)>,
}

impl GridSpec {
    pub fn parse(spec: &str) -> Result<Self, CliError> {
        let mut out = GridSpec::default();
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            if let Some((name, value)) = item.split_once('=') {
                out.fixed.push((name.trim().to_string(), parse_num(name, value)?));
                continue;
            }
            let parts: Vec<&str> = item.split(':').collect();
            if parts.len() != 4 {
                return Err(CliError::Config(format!(
                    "grid item `{item}` must be `name:lo:hi:points` or `name=value`"
                )));
            }
            let axis = GridAxis {
                name: parts[0].trim().to_string(),
                lo: parse_num(parts[0], parts[1])?,
                hi: parse_num(parts[0], parts[2])?,
                points: parse_num(parts[0], parts[3])?,
            };
            if axis.points == 0 || !axis.lo.is_finite() || !axis.hi.is_finite() {
                return Err(CliError::Config(format!("grid axis `{item}` needs finite bounds and at least one point")));
            }
            out.axes.push(axis);
        }
        let mut names: Vec<&str> = out.axes.iter().map(|a| a.name.as_str()).collect();
        names.extend(out.fixed.iter().map(|(n, _)| n.as_str()));
        let total = names.len();
        names.sort_unstable();
        names.dedup();
        if names.len() != total {
            return Err(CliError::Config(format!("grid `{spec}` names an axis twice")));
        }
        Ok(out)
    }

    /// Fails unless every name is in `allowed`.
    pub fn check_names(&self, allowed: &[&str]) -> Result<(), CliError> {
        for name in self.axes.iter().map(|a| &a.name).chain(self.fixed.iter().map(|(n, _)| n)) {
            if !allowed.contains(&name.as_str()) {
                return Err(CliError::Config(format!(
                    "grid axis `{name}` is not one of {}",
                    allowed.join(", ")
                )));
            }
        }
        Ok(())
    }
}

pub fn default_wigner_grid() -> GridSpec {
    GridSpec::parse("x:-3:3:25,px:-3:3:25").expect("valid default grid")
}

pub fn default_sweep_grid() -> GridSpec {
    GridSpec::parse("k:0:0.4:3").expect("valid default grid")
}
