//! The verification suite behind `ncphase verify`.

use std::fmt::Write as _;
use std::time::Instant;

use num_complex::Complex64;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::algebra::{build_mode_operators, build_phase_operators, deformed_algebra_residual, phase_space_residual};
use crate::error::Result;
use crate::fock::FockBasis;
use crate::lambda_rep::{
    hamiltonian_lambda_form, lambda_form_coefficients, lambda_rep_operator, representation_defect, xi_rep_operator,
};
use crate::oscillator::{numeric_spectrum, reduced_coefficients, OscillatorSolution};
use crate::states::{
    coherent_overlap, coherent_state_vector, identity_resolution_residual, lambda_eigen_residual, xi_eigen_residual,
    CoherentLabel, LambdaLabel, QuadratureSpec, StateFamily, XiLabel,
};
use crate::wigner::{energy_moment, wigner_normalization};

use super::config::RunConfig;

/// Largest cutoff used for the matrix commutator checks.
pub const ALGEBRA_CUTOFF: usize = 20;
/// Cutoff for the coherent and entangled state checks.
pub const STATE_CUTOFF: usize = 24;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub residual: f64,
    pub threshold: f64,
    pub pass: bool,
    pub seconds: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub pass: bool,
    #[serde(serialize_with = "ordered_checks")]
    pub checks: Vec<(String, CheckResult)>,
}

fn ordered_checks<S: Serializer>(checks: &[(String, CheckResult)], s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut map = s.serialize_map(Some(checks.len()))?;
    for (name, check) in checks {
        map.serialize_entry(name, check)?;
    }
    map.end()
}

impl VerifyReport {
    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|(n, _)| n == name).map(|(_, c)| c)
    }

    /// `{"pass": bool, "checks": {name: {residual, threshold, pass, seconds[, error]}}}`;
    /// non-finite residuals are written as `null`.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{:<24} {:>12} {:>10} {:>6} {:>9}", "check", "residual", "threshold", "result", "seconds");
        for (name, c) in &self.checks {
            let _ = writeln!(
                out,
                "{:<24} {:>12.3e} {:>10.1e} {:>6} {:>9.3}",
                name,
                c.residual,
                c.threshold,
                if c.pass { "PASS" } else { "FAIL" },
                c.seconds
            );
            if let Some(e) = &c.error {
                let _ = writeln!(out, "  {e}");
            }
        }
        let _ = writeln!(out, "overall: {}", if self.pass { "PASS" } else { "FAIL" });
        out
    }
}

struct Suite {
    checks: Vec<(String, CheckResult)>,
}

impl Suite {
    fn run(&mut self, name: &str, threshold: f64, f: impl FnOnce() -> Result<f64>) {
        let start = Instant::now();
        let outcome = f();
        let seconds = start.elapsed().as_secs_f64();
        let check = match outcome {
            Ok(residual) => CheckResult { residual, threshold, pass: residual <= threshold, seconds, error: None },
            Err(e) => CheckResult { residual: f64::INFINITY, threshold, pass: false, seconds, error: Some(e.to_string()) },
        };
        self.checks.push((name.to_string(), check));
    }
}

fn coherent_labels() -> [CoherentLabel; 3] {
    let c = Complex64::new;
    [
        CoherentLabel::new(c(0.3, -0.2), c(0.1, 0.4)),
        CoherentLabel::new(c(-0.5, 0.1), c(0.2, 0.2)),
        CoherentLabel::new(c(0.0, 0.35), c(-0.3, 0.0)),
    ]
}

fn relative_gap(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(1.0)
}

/// Runs every check; individual failures are recorded, never propagated.
pub fn cmd_verify(cfg: &RunConfig) -> VerifyReport {
    let mut suite = Suite { checks: Vec::new() };
    let (nc, osc) = match cfg.nc().and_then(|nc| Ok((nc, cfg.oscillator()?))) {
        Ok(pair) => pair,
        Err(e) => {
            let error = Some(e.to_string());
            let check = CheckResult { residual: f64::INFINITY, threshold: 0.0, pass: false, seconds: 0.0, error };
            return VerifyReport { pass: false, checks: vec![("config".to_string(), check)] };
        }
    };

    suite.run("algebra_phase_space", 1e-9, || {
        let modes = build_mode_operators(&nc, FockBasis::new(cfg.cutoff.min(ALGEBRA_CUTOFF))?)?;
        phase_space_residual(&nc, &build_phase_operators(&nc, &modes)?, 2)
    });
    suite.run("algebra_deformed_bosons", 1e-12, || {
        let modes = build_mode_operators(&nc, FockBasis::new(cfg.cutoff.min(ALGEBRA_CUTOFF))?)?;
        deformed_algebra_residual(&modes, 1)
    });
    suite.run("symbolic_lambda_rep", 1e-12, || Ok(representation_defect(&nc, lambda_rep_operator)));
    suite.run("symbolic_xi_rep", 1e-12, || Ok(representation_defect(&nc, xi_rep_operator)));

    let state_modes = FockBasis::new(STATE_CUTOFF).and_then(|b| build_mode_operators(&nc, b));
    suite.run("coherent_overlap", 1e-8, || {
        let modes = state_modes.clone()?;
        let labels = coherent_labels();
        let vectors = labels.iter().map(|l| coherent_state_vector(l, &modes)).collect::<Result<Vec<_>>>()?;
        let mut worst: f64 = 0.0;
        for (l1, v1) in labels.iter().zip(&vectors) {
            for (l2, v2) in labels.iter().zip(&vectors) {
                let numeric = v1.inner(v2)?;
                worst = worst.max((numeric - coherent_overlap(l1, l2, nc.theta())?).norm());
            }
        }
        Ok(worst)
    });
    suite.run("entangled_eigen", 1e-3, || {
        let modes = state_modes.clone()?;
        let ops = build_phase_operators(&nc, &modes)?;
        let mut worst: f64 = 0.0;
        for (a, b) in [(0.3, -0.2), (-0.1, 0.45), (0.0, 0.0)] {
            worst = worst.max(lambda_eigen_residual(&LambdaLabel::new(a, b), &nc, &modes, &ops, 4)?);
            worst = worst.max(xi_eigen_residual(&XiLabel::new(b, a), &nc, &modes, &ops, 4)?);
        }
        Ok(worst)
    });
    suite.run("completeness", 5e-3, || {
        let modes = build_mode_operators(&nc, FockBasis::new(4)?)?;
        let mut worst: f64 = 0.0;
        for family in [StateFamily::Coherent, StateFamily::Lambda, StateFamily::Xi] {
            let spec = QuadratureSpec { nodes_per_axis: 16, family, max_occupation: 4 };
            worst = worst.max(identity_resolution_residual(&nc, &modes, &spec)?);
        }
        Ok(worst)
    });

    suite.run("coefficient_pipeline", 1e-12, || {
        let symbolic = lambda_form_coefficients(&hamiltonian_lambda_form(&osc))?;
        let closed = reduced_coefficients(&osc)?;
        Ok(symbolic
            .as_array()
            .iter()
            .zip(closed.as_array())
            .map(|(a, b)| relative_gap(*a, b))
            .fold(0.0, f64::max))
    });
    let solution = OscillatorSolution::solve(&osc);
    suite.run("normal_mode_frequencies", 1e-9, || Ok(solution.clone()?.modes.check_discrepancy()));
    suite.run("spectrum_oracle", 1e-6, || {
        let sol = solution.clone()?;
        let analytic = sol.levels(cfg.levels);
        let numeric = numeric_spectrum(&osc, FockBasis::new(cfg.cutoff)?, cfg.levels)?;
        Ok(analytic
            .iter()
            .zip(&numeric.levels)
            .map(|(a, n)| (a.energy - n).abs() / a.energy.abs())
            .fold(0.0, f64::max))
    });
    suite.run("wigner_normalization", 1e-6, || Ok((wigner_normalization(&solution.clone()?, 0, 0) - 1.0).abs()));
    suite.run("wigner_energy_moment", 1e-5, || {
        let sol = solution.clone()?;
        let mut worst: f64 = 0.0;
        for (n1, n2) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            worst = worst.max((energy_moment(&sol, n1, n2) - sol.energy(n1, n2)).abs());
        }
        Ok(worst)
    });

    let pass = suite.checks.iter().all(|(_, c)| c.pass);
    VerifyReport { pass, checks: suite.checks }
}

/// Names of the checks in report order.
pub const CHECK_NAMES: [&str; 12] = [
    "algebra_phase_space",
    "algebra_deformed_bosons",
    "symbolic_lambda_rep",
    "symbolic_xi_rep",
    "coherent_overlap",
    "entangled_eigen",
    "completeness",
    "coefficient_pipeline",
    "normal_mode_frequencies",
    "spectrum_oracle",
    "wigner_normalization",
    "wigner_energy_moment",
];
