//! CSV-producing subcommands. Numbers are written with 17 significant
//! digits so they parse back to the same doubles.

use std::fmt::Write as _;

use crate::oscillator::{numeric_spectrum, OscillatorSolution};
use crate::wigner::{wigner_oscillator, PhasePoint4};

use super::config::{default_sweep_grid, default_wigner_grid, GridSpec, RunConfig};
use super::CliError;

pub const SPECTRUM_HEADER: &str = "n1,n2,E_analytic,E_numeric,abs_diff,rel_diff";
pub const WIGNER_HEADER: &str = "x,y,px,py,W";
pub const PHASE_AXES: [&str; 4] = ["x", "y", "px", "py"];
pub const SWEEP_AXES: [&str; 8] = ["mu", "nu", "hbar", "mass", "m", "omega", "k", "l"];

/// `{:.16e}`: 17 significant digits.
pub fn fmt_real(v: f64) -> String {
    format!("{v:.16e}")
}

/// Spectrum rows (without header) for one configuration.
pub fn spectrum_rows(cfg: &RunConfig, oracle: bool) -> Result<Vec<String>, CliError> {
    cfg.validate()?;
    let params = cfg.oscillator()?;
    let sol = OscillatorSolution::solve(&params)?;
    let levels = sol.levels(cfg.levels);
    let numeric = if oracle { Some(numeric_spectrum(&params, cfg.basis()?, cfg.levels)?) } else { None };
    Ok(levels
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let tail = match &numeric {
                Some(n) => {
                    let diff = (e.energy - n.levels[i]).abs();
                    format!("{},{},{}", fmt_real(n.levels[i]), fmt_real(diff), fmt_real(diff / e.energy.abs()))
                }
                None => ",,".to_string(),
            };
            format!("{},{},{},{}", e.n1, e.n2, fmt_real(e.energy), tail)
        })
        .collect())
}

pub fn cmd_spectrum(cfg: &RunConfig, oracle: bool) -> Result<String, CliError> {
    let mut out = format!("{SPECTRUM_HEADER}\n");
    for row in spectrum_rows(cfg, oracle)? {
        out.push_str(&row);
        out.push('\n');
    }
    Ok(out)
}

/// All lattice points of the varied axes, first axis outermost.
pub fn lattice(grid: &GridSpec) -> Vec<Vec<f64>> {
    grid.axes.iter().fold(vec![Vec::new()], |acc, axis| {
        let values = axis.values();
        acc.into_iter()
            .flat_map(|prefix| {
                values.iter().map(move |&v| {
                    let mut p = prefix.clone();
                    p.push(v);
                    p
                })
            })
            .collect()
    })
}

/// `x,y,px,py,W` over a slice with exactly two varied phase-space axes; the
/// other two are held at their `name=value` entries or zero.
pub fn cmd_wigner(cfg: &RunConfig) -> Result<String, CliError> {
    let grid = cfg.grid.clone().unwrap_or_else(default_wigner_grid);
    grid.check_names(&PHASE_AXES)?;
    if grid.axes.len() != 2 {
        return Err(CliError::Config(format!(
            "a Wigner slice varies exactly two of x, y, px, py; got {}",
            grid.axes.len()
        )));
    }
    let params = cfg.oscillator()?;
    let sol = OscillatorSolution::solve(&params)?;
    let mut coords = [0.0; 4];
    for (name, value) in &grid.fixed {
        coords[PHASE_AXES.iter().position(|a| a == name).expect("checked name")] = *value;
    }
    let slots: Vec<usize> = grid
        .axes
        .iter()
        .map(|a| PHASE_AXES.iter().position(|n| *n == a.name).expect("checked name"))
        .collect();
    let mut out = format!("{WIGNER_HEADER}\n");
    for point in lattice(&grid) {
        for (slot, v) in slots.iter().zip(&point) {
            coords[*slot] = *v;
        }
        let pt = PhasePoint4::new(coords[0], coords[1], coords[2], coords[3]);
        let w = wigner_oscillator(&sol, cfg.n1, cfg.n2, &pt)?;
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            fmt_real(coords[0]),
            fmt_real(coords[1]),
            fmt_real(coords[2]),
            fmt_real(coords[3]),
            fmt_real(w)
        );
    }
    Ok(out)
}

/// `spectrum` at every point of a parameter lattice, with the varied
/// parameters prepended. Points are solved concurrently and written in
/// lattice order.
pub fn cmd_sweep(cfg: &RunConfig, oracle: bool) -> Result<String, CliError> {
    let grid = cfg.grid.clone().unwrap_or_else(default_sweep_grid);
    grid.check_names(&SWEEP_AXES)?;
    if grid.axes.is_empty() {
        return Err(CliError::Config("a sweep needs at least one varied parameter".to_string()));
    }
    let mut base = cfg.clone();
    base.grid = None;
    for (name, value) in &grid.fixed {
        base.set(name, &fmt_real(*value))?;
    }
    let points = lattice(&grid);
    let configs: Vec<RunConfig> = points
        .iter()
        .map(|p| {
            let mut c = base.clone();
            for (axis, v) in grid.axes.iter().zip(p) {
                c.set(&axis.name, &fmt_real(*v))?;
            }
            Ok(c)
        })
        .collect::<Result<_, CliError>>()?;

    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(configs.len());
    let chunk = configs.len().div_ceil(workers);
    let results: Vec<Result<Vec<String>, CliError>> = std::thread::scope(|s| {
        let handles: Vec<_> = configs
            .chunks(chunk)
            .map(|part| s.spawn(move || part.iter().map(|c| spectrum_rows(c, oracle)).collect::<Vec<_>>()))
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("sweep worker panicked")).collect()
    });

    let names: Vec<&str> = grid.axes.iter().map(|a| a.name.as_str()).collect();
    let mut out = format!("{},{SPECTRUM_HEADER}\n", names.join(","));
    for (point, rows) in points.iter().zip(results) {
        let rows = rows.map_err(|e| match e {
            CliError::Config(m) => CliError::Config(format!("at {}: {m}", describe(&names, point))),
            CliError::Check(m) => CliError::Check(format!("at {}: {m}", describe(&names, point))),
        })?;
        let prefix: Vec<String> = point.iter().map(|v| fmt_real(*v)).collect();
        for row in rows {
            let _ = writeln!(out, "{},{row}", prefix.join(","));
        }
    }
    Ok(out)
}

fn describe(names: &[&str], point: &[f64]) -> String {
    names.iter().zip(point).map(|(n, v)| format!("{n}={v}")).collect::<Vec<_>>().join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_order_is_first_axis_outermost() {
        let g = GridSpec::parse("a:0:1:2,b:5:6:2").unwrap();
        assert_eq!(lattice(&g), vec![vec![0.0, 5.0], vec![0.0, 6.0], vec![1.0, 5.0], vec![1.0, 6.0]]);
    }

    #[test]
    fn real_format_round_trips() {
        for v in [0.1, 1.0 / 3.0, -2.5e-300, 1.1784612345678901] {
            assert_eq!(fmt_real(v).parse::<f64>().unwrap(), v);
        }
    }

    #[test]
    fn no_oracle_rows_have_empty_columns() {
        let rows = spectrum_rows(&RunConfig::default(), false).unwrap();
        assert_eq!(rows.len(), 6);
        assert!(rows[0].starts_with("0,0,") && rows[0].ends_with(",,,"));
    }

    #[test]
    fn wigner_slice_must_vary_two_axes() {
        let mut c = RunConfig::default();
        c.grid = Some(GridSpec::parse("x:-1:1:3").unwrap());
        assert!(matches!(cmd_wigner(&c), Err(CliError::Config(_))));
        c.grid = Some(GridSpec::parse("x:-1:1:3,k:0:1:2").unwrap());
        assert!(matches!(cmd_wigner(&c), Err(CliError::Config(_))));
    }
}
