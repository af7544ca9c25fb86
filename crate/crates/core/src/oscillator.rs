//! Coupled two-dimensional oscillator on the noncommutative phase space,
//!
//! ```text
//! H = (px² + py²)/2m + mω²(x² + y²)/2 + k(xy + yx)/2 + l(px py + py px)/2,
//! ```
//!
//! solved in the `|λ>` representation. There `H` becomes an ordinary coupled
//! oscillator `c1 η1² + c2 η2² + d1 λ1² + d2 λ2² + d3 λ1 λ2`, which a scaling
//! and a rotation by half the mixing angle split into two independent modes
//! with frequencies `Ω+ >= Ω-`.
//!
//! [`numeric_spectrum`] diagonalizes the same Hamiltonian built from
//! truncated Fock matrices and serves as an independent check.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

use crate::algebra::{build_mode_operators, build_phase_operators};
use crate::error::{Error, Result};
use crate::fock::{FockBasis, OperatorMatrix};
use crate::params::NCParameters;

pub const MAX_LEVELS: usize = 12;
pub const CONVERGENCE_TOLERANCE: f64 = 1e-6;
/// Cutoff step of the convergence comparison `E(N)` vs `E(N - 4)`.
pub const CONVERGENCE_STEP: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OscillatorParams {
    nc: NCParameters,
    m: f64,
    omega: f64,
    k: f64,
    l: f64,
}

impl OscillatorParams {
    /// Requires `m, ω > 0`, `1 - l m > 0` and `1 + k/(mω²) > 0`.
    pub fn new(nc: NCParameters, m: f64, omega: f64, k: f64, l: f64) -> Result<Self> {
        for (name, value) in [("m", m), ("omega", omega)] {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::NonPositiveParameter { name, value });
            }
        }
        if !(k.is_finite() && l.is_finite()) {
            return Err(Error::InvalidRegime("couplings k and l must be finite".into()));
        }
        if 1.0 - l * m <= 0.0 {
            return Err(Error::InvalidRegime(format!(
                "1 - l*m must be positive (l = {l}, m = {m})"
            )));
        }
        if 1.0 + k / (m * omega * omega) <= 0.0 {
            return Err(Error::InvalidRegime(format!(
                "1 + k/(m*omega^2) must be positive (k = {k}, m = {m}, omega = {omega})"
            )));
        }
        Ok(Self { nc, m, omega, k, l })
    }

    pub fn nc(&self) -> &NCParameters {
        &self.nc
    }

    pub fn m(&self) -> f64 {
        self.m
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn l(&self) -> f64 {
        self.l
    }

    /// `k/(mω²)`.
    fn k_ratio(&self) -> f64 {
        self.k / (self.m * self.omega * self.omega)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ReducedCoefficients {
    pub c1: f64,
    pub c2: f64,
    pub d1: f64,
    pub d2: f64,
    pub d3: f64,
}

impl ReducedCoefficients {
    pub fn as_array(&self) -> [f64; 5] {
        [self.c1, self.c2, self.d1, self.d2, self.d3]
    }

    /// Classical `c1 η1² + c2 η2² + d1 λ1² + d2 λ2² + d3 λ1 λ2`.
    pub fn evaluate(&self, lambda: (f64, f64), eta: (f64, f64)) -> f64 {
        self.c1 * eta.0 * eta.0
            + self.c2 * eta.1 * eta.1
            + self.d1 * lambda.0 * lambda.0
            + self.d2 * lambda.1 * lambda.1
            + self.d3 * lambda.0 * lambda.1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScaledCoefficients {
    pub c: f64,
    pub f1: f64,
    pub f2: f64,
    pub d3: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NormalModes {
    pub mass: f64,
    /// `atan2(d3, f2 - f1)`; the rotation uses `alpha / 2`.
    pub alpha: f64,
    /// Whether the rotated coordinates were exchanged so that mode 1
    /// carries `Ω+`.
    pub swapped: bool,
    pub a_plus: f64,
    pub a_minus: f64,
    pub b_plus: f64,
    pub b_minus: f64,
    pub omega_plus: f64,
    pub omega_minus: f64,
    /// `2 sqrt(c e±)` from the eigenvalues `e±` of `[[f1, d3/2], [d3/2, f2]]`.
    pub omega_plus_check: f64,
    pub omega_minus_check: f64,
    /// Cross coefficient of `x1 x2` left after the rotation.
    pub residual_cross: f64,
}

impl NormalModes {
    /// `max |Ω±(closed form) - 2 sqrt(c e±)| / Ω±`.
    pub fn check_discrepancy(&self) -> f64 {
        let plus = (self.omega_plus - self.omega_plus_check).abs() / self.omega_plus.abs();
        let minus = (self.omega_minus - self.omega_minus_check).abs() / self.omega_minus.abs();
        plus.max(minus)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectrumEntry {
    pub n1: u32,
    pub n2: u32,
    pub energy: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OscillatorSolution {
    pub params: OscillatorParams,
    pub reduced: ReducedCoefficients,
    pub scaled: ScaledCoefficients,
    pub modes: NormalModes,
}

impl OscillatorSolution {
    /// Runs the analytic pipeline; fails unless `Ω- > 0`.
    pub fn solve(params: &OscillatorParams) -> Result<Self> {
        let reduced = reduced_coefficients(params)?;
        let scaled = scaled_coefficients(&reduced)?;
        let modes = normal_modes(params)?;
        if !(modes.omega_minus > 0.0) {
            return Err(Error::InvalidRegime(format!(
                "Omega_minus = {} must be positive for a discrete spectrum",
                modes.omega_minus
            )));
        }
        Ok(Self { params: *params, reduced, scaled, modes })
    }

    pub fn energy(&self, n1: u32, n2: u32) -> f64 {
        (f64::from(n1) + 0.5) * self.modes.omega_plus + (f64::from(n2) + 0.5) * self.modes.omega_minus
    }

    /// The `count` lowest levels, ordered by energy and then by `n1`.
    pub fn levels(&self, count: usize) -> Vec<SpectrumEntry> {
        let reach = count as u32;
        let mut all: Vec<SpectrumEntry> = (0..reach)
            .flat_map(|n1| (0..reach).map(move |n2| (n1, n2)))
            .map(|(n1, n2)| SpectrumEntry { n1, n2, energy: self.energy(n1, n2) })
            .collect();
        all.sort_by(|a, b| a.energy.total_cmp(&b.energy).then(a.n1.cmp(&b.n1)));
        all.truncate(count);
        all
    }
}

pub fn reduced_coefficients(p: &OscillatorParams) -> Result<ReducedCoefficients> {
    let OscillatorParams { nc, m, omega, l, .. } = *p;
    let (mu, nu, hbar, theta) = (nc.mu(), nc.nu(), nc.hbar(), nc.theta());
    let kr = p.k_ratio();
    let kinetic = hbar / (2.0 * m) * (nu / mu).sqrt();
    let elastic = hbar * m * omega * omega / 2.0 * (mu / nu).sqrt();
    let c1 = kinetic * (1.0 - l * m);
    let c2 = elastic * (1.0 + kr);
    let d1 = theta * theta * kinetic * (1.0 + l * m) + elastic * (1.0 - kr);
    let d2 = kinetic * (1.0 + l * m) + theta * theta * elastic * (1.0 - kr);
    let d3 = -(nu / m) * (1.0 + l * m) - mu * m * omega * omega * (1.0 - kr);
    if !(c1 > 0.0 && c2 > 0.0) {
        return Err(Error::InvalidRegime(format!("kinetic coefficients c1 = {c1}, c2 = {c2} must be positive")));
    }
    Ok(ReducedCoefficients { c1, c2, d1, d2, d3 })
}

/// `λ1' = (c2/c1)^{1/4} λ1`, `λ2' = (c1/c2)^{1/4} λ2` (and inversely for
/// `η`), giving the common kinetic coefficient `c = sqrt(c1 c2)`.
pub fn scaled_coefficients(r: &ReducedCoefficients) -> Result<ScaledCoefficients> {
    if !(r.c1 > 0.0 && r.c2 > 0.0) {
        return Err(Error::NonPositiveKinetic { c1: r.c1, c2: r.c2 });
    }
    Ok(ScaledCoefficients {
        c: (r.c1 * r.c2).sqrt(),
        f1: r.d1 * (r.c1 / r.c2).sqrt(),
        f2: r.d2 * (r.c2 / r.c1).sqrt(),
        d3: r.d3,
    })
}

/// Rotation `(cos α/2, sin α/2)` together with the diagonal coefficients
/// `(g11, g22)` and twice the off-diagonal one, before any relabeling.
fn rotate(s: &ScaledCoefficients, alpha: f64) -> (f64, f64, f64) {
    let (sn, cs) = (0.5 * alpha).sin_cos();
    let g11 = cs * cs * s.f1 - cs * sn * s.d3 + sn * sn * s.f2;
    let g22 = sn * sn * s.f1 + cs * sn * s.d3 + cs * cs * s.f2;
    let cross = 2.0 * cs * sn * (s.f1 - s.f2) + (cs * cs - sn * sn) * s.d3;
    (g11, g22, cross)
}

pub fn normal_modes(p: &OscillatorParams) -> Result<NormalModes> {
    let scaled = scaled_coefficients(&reduced_coefficients(p)?)?;
    let OscillatorParams { nc, m, omega, k, l } = *p;
    let (mu, nu, hbar) = (nc.mu(), nc.nu(), nc.hbar());
    let kr = p.k_ratio();

    let alpha = scaled.d3.atan2(scaled.f2 - scaled.f1);
    let (g11, g22, cross) = rotate(&scaled, alpha);
    let swapped = g11 < g22;

    let kinetic_factor = 1.0 - l * l * m * m;
    let elastic_factor = 1.0 - kr * kr;
    if kinetic_factor < 0.0 || elastic_factor < 0.0 {
        return Err(Error::ComplexFrequency(format!(
            "1 - l^2 m^2 = {kinetic_factor} and 1 - k^2/(m^2 omega^4) = {elastic_factor} must be non-negative"
        )));
    }
    let root = (kinetic_factor * elastic_factor).sqrt();
    let a_plus = 0.5 * (1.0 + k * l / (omega * omega) + root);
    let a_minus = 0.5 * (1.0 + k * l / (omega * omega) - root);
    let first = nu * kinetic_factor.sqrt() / (2.0 * m * hbar * omega);
    let second = mu * m * omega / (2.0 * hbar) * elastic_factor.sqrt();
    let b_plus = (first + second).powi(2);
    let b_minus = (first - second).powi(2);
    let (outer, inner) = (a_plus + b_minus, a_minus + b_plus);
    if outer < 0.0 || inner < 0.0 {
        return Err(Error::ComplexFrequency(format!(
            "A+ + B- = {outer} and A- + B+ = {inner} must be non-negative"
        )));
    }
    let omega_plus = hbar * omega * (outer.sqrt() + inner.sqrt());
    let omega_minus = hbar * omega * (outer.sqrt() - inner.sqrt());
    let mass = 1.0 / (hbar * omega * ((1.0 - l * m) * (1.0 + kr)).sqrt());

    let mean = 0.5 * (scaled.f1 + scaled.f2);
    let half_gap = (0.25 * (scaled.f1 - scaled.f2).powi(2) + 0.25 * scaled.d3 * scaled.d3).sqrt();
    let (e_plus, e_minus) = (mean + half_gap, mean - half_gap);
    if e_minus < 0.0 {
        return Err(Error::ComplexFrequency(format!(
            "potential eigenvalue e- = {e_minus} is negative; the oscillator is unbounded"
        )));
    }

    Ok(NormalModes {
        mass,
        alpha,
        swapped,
        a_plus,
        a_minus,
        b_plus,
        b_minus,
        omega_plus,
        omega_minus,
        omega_plus_check: 2.0 * (scaled.c * e_plus).sqrt(),
        omega_minus_check: 2.0 * (scaled.c * e_minus).sqrt(),
        residual_cross: cross,
    })
}

/// Diagonal coefficients of the rotated potential with mode 1 carrying `Ω+`.
pub fn rotated_potential(sol: &OscillatorSolution) -> (f64, f64) {
    let (g11, g22, _) = rotate(&sol.scaled, sol.modes.alpha);
    if sol.modes.swapped {
        (g22, g11)
    } else {
        (g11, g22)
    }
}

/// `(n1 + 1/2) Ω+ + (n2 + 1/2) Ω-`.
pub fn energy(p: &OscillatorParams, n1: u32, n2: u32) -> Result<f64> {
    Ok(OscillatorSolution::solve(p)?.energy(n1, n2))
}

/// Spectrum of the commutative (`μ = ν = 0`) coupled oscillator.
pub fn commutative_limit_energy(m: f64, omega: f64, hbar: f64, k: f64, l: f64, n1: u32, n2: u32) -> Result<f64> {
    for (name, value) in [("m", m), ("omega", omega), ("hbar", hbar)] {
        if !(value.is_finite() && value > 0.0) {
            return Err(Error::NonPositiveParameter { name, value });
        }
    }
    let kinetic_factor = 1.0 - l * l * m * m;
    let elastic_factor = 1.0 - k * k / (m * m * omega.powi(4));
    if kinetic_factor < 0.0 || elastic_factor < 0.0 {
        return Err(Error::InvalidRegime(format!(
            "1 - l^2 m^2 = {kinetic_factor} and 1 - k^2/(m^2 omega^4) = {elastic_factor} must be non-negative"
        )));
    }
    let root = (kinetic_factor * elastic_factor).sqrt();
    let base = 1.0 + k * l / (omega * omega);
    let lower = base - root;
    if lower < 0.0 {
        return Err(Error::InvalidRegime(format!("1 + kl/omega^2 - sqrt(...) = {lower} is negative")));
    }
    let sum = f64::from(n1 + n2 + 1);
    let diff = f64::from(n1) - f64::from(n2);
    Ok(sum * hbar * omega * ((base + root) / 2.0).sqrt() + diff * hbar * omega * (lower / 2.0).sqrt())
}

/// Spectrum without couplings (`k = l = 0`) but with `μ, ν != 0`.
pub fn uncoupled_energy(nc: &NCParameters, m: f64, omega: f64, n1: u32, n2: u32) -> f64 {
    let (mu, nu, hbar) = (nc.mu(), nc.nu(), nc.hbar());
    let shift = (nu - mu * m * m * omega * omega).powi(2) / (4.0 * m * m * hbar * hbar * omega * omega);
    let sum = f64::from(n1 + n2 + 1);
    let diff = f64::from(n1) - f64::from(n2);
    sum * hbar * omega * (1.0 + shift).sqrt() + diff * (nu / (2.0 * m) + mu * m * omega * omega / 2.0)
}

/// The Hamiltonian as a Hermitian matrix on the truncated Fock space.
pub fn hamiltonian_matrix(p: &OscillatorParams, basis: FockBasis) -> Result<OperatorMatrix> {
    let modes = build_mode_operators(p.nc(), basis)?;
    let ops = build_phase_operators(p.nc(), &modes)?;
    let (m, w) = (p.m, p.omega);
    let mut h = OperatorMatrix::zeros(basis);
    for (c, u, v) in [
        (0.5 / m, &ops.px, &ops.px),
        (0.5 / m, &ops.py, &ops.py),
        (0.5 * m * w * w, &ops.x, &ops.x),
        (0.5 * m * w * w, &ops.y, &ops.y),
        (0.5 * p.k, &ops.x, &ops.y),
        (0.5 * p.k, &ops.y, &ops.x),
        (0.5 * p.l, &ops.px, &ops.py),
        (0.5 * p.l, &ops.py, &ops.px),
    ] {
        h.add_product(c, u, v)?;
    }
    Ok(h.symmetrized())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NumericSpectrum {
    pub cutoff: usize,
    pub levels: Vec<f64>,
    /// `max_i |E_i(N) - E_i(N-4)| / |E_i(N)|`.
    pub convergence: f64,
}

/// Lowest eigenvalues of the truncated Hamiltonian, diagonalized on the
/// states of total occupation `<= N`. The Hamiltonian is quadratic, so it
/// preserves the parity of the total occupation and the two parity sectors
/// are diagonalized separately.
fn lowest_eigenvalues(p: &OscillatorParams, basis: FockBasis, count: usize) -> Result<Vec<f64>> {
    let h = hamiltonian_matrix(p, basis)?;
    let mut all = Vec::new();
    for parity in 0..2 {
        let idx: Vec<usize> = basis
            .parity_indices(parity)
            .into_iter()
            .filter(|&i| basis.total_occupation(i) <= basis.cutoff())
            .collect();
        let block: DMatrix<Complex64> = h.submatrix(&idx);
        all.extend(block.symmetric_eigenvalues().iter().copied());
    }
    all.sort_by(f64::total_cmp);
    all.truncate(count);
    Ok(all)
}

/// Dense-diagonalization oracle with the `E(N)` vs `E(N - 4)` convergence
/// guard.
pub fn numeric_spectrum(p: &OscillatorParams, basis: FockBasis, count: usize) -> Result<NumericSpectrum> {
    if count > MAX_LEVELS {
        return Err(Error::TooManyLevels { requested: count, max: MAX_LEVELS });
    }
    let cutoff = basis.cutoff();
    if count == 0 {
        return Ok(NumericSpectrum { cutoff, levels: Vec::new(), convergence: 0.0 });
    }
    let levels = lowest_eigenvalues(p, basis, count)?;
    let coarse = match cutoff.checked_sub(CONVERGENCE_STEP).map(FockBasis::new) {
        Some(Ok(b)) => lowest_eigenvalues(p, b, count)?,
        _ => {
            return Err(Error::NotConverged { estimate: f64::INFINITY, threshold: CONVERGENCE_TOLERANCE });
        }
    };
    if coarse.len() < count || levels.len() < count {
        return Err(Error::NotConverged { estimate: f64::INFINITY, threshold: CONVERGENCE_TOLERANCE });
    }
    let mut convergence: f64 = 0.0;
    let mut worst = (0.0, 0.0);
    for (fine, rough) in levels.iter().zip(&coarse) {
        let delta = (fine - rough).abs();
        let rel = delta / fine.abs().max(f64::MIN_POSITIVE);
        if rel >= convergence {
            convergence = rel;
            worst = (delta, CONVERGENCE_TOLERANCE * fine.abs());
        }
    }
    if convergence > CONVERGENCE_TOLERANCE {
        return Err(Error::NotConverged { estimate: worst.0, threshold: worst.1 });
    }
    Ok(NumericSpectrum { cutoff, levels, convergence })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(mu: f64, nu: f64, k: f64, l: f64) -> OscillatorParams {
        OscillatorParams::new(NCParameters::new(mu, nu, 1.0).unwrap(), 1.0, 1.0, k, l).unwrap()
    }

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn worked_coefficients() {
        let r = reduced_coefficients(&params(0.25, 0.25, 0.0, 0.0)).unwrap();
        assert!(close(&r.as_array(), &[0.5, 0.5, 0.53125, 0.53125, -0.5], 1e-12));
        let r = reduced_coefficients(&params(0.1, 0.1, 0.2, 0.1)).unwrap();
        assert!(close(&r.as_array(), &[0.45, 0.6, 0.4055, 0.554, -0.19], 1e-12));
    }

    #[test]
    fn scaling_of_worked_example() {
        let r = reduced_coefficients(&params(0.1, 0.1, 0.2, 0.1)).unwrap();
        let s = scaled_coefficients(&r).unwrap();
        assert!((s.c - 0.27f64.sqrt()).abs() < 1e-15);
        assert!((s.f1 - 0.4055 * (0.45f64 / 0.6).sqrt()).abs() < 1e-12);
        assert!((s.f2 - 0.554 * (0.6f64 / 0.45).sqrt()).abs() < 1e-12);
        let r = reduced_coefficients(&params(0.25, 0.25, 0.0, 0.0)).unwrap();
        let s = scaled_coefficients(&r).unwrap();
        assert_eq!((s.f1, s.f2), (r.d1, r.d2));
    }

    #[test]
    fn degenerate_kinetic_coupling_is_rejected() {
        let nc = NCParameters::new(0.1, 0.1, 1.0).unwrap();
        let err = OscillatorParams::new(nc, 1.0, 1.0, 0.0, 1.0).unwrap_err();
        assert!(matches!(err, Error::InvalidRegime(ref s) if s.contains("1 - l*m must be positive")));
        let err = OscillatorParams::new(nc, 1.0, 1.0, -1.0, 0.0).unwrap_err();
        assert!(matches!(err, Error::InvalidRegime(_)));
    }

    #[test]
    fn non_positive_kinetic_is_rejected() {
        let r = ReducedCoefficients { c1: 0.0, c2: 1.0, d1: 0.0, d2: 0.0, d3: 0.0 };
        assert!(matches!(scaled_coefficients(&r), Err(Error::NonPositiveKinetic { .. })));
    }

    #[test]
    fn reference_point_frequencies() {
        let sol = OscillatorSolution::solve(&params(0.1, 0.1, 0.2, 0.1)).unwrap();
        assert!((sol.modes.omega_plus - 1.178_46).abs() < 1e-5);
        assert!((sol.modes.omega_minus - 0.818_98).abs() < 1e-5);
        assert!(sol.modes.check_discrepancy() < 1e-10);
        assert!(sol.modes.residual_cross.abs() < 1e-12);
        let (e1, e2) = rotated_potential(&sol);
        assert!(e1 >= e2);
        assert!((2.0 * (sol.scaled.c * e1).sqrt() - sol.modes.omega_plus).abs() < 1e-12);
        assert!((sol.modes.mass - 1.0 / (2.0 * sol.scaled.c)).abs() < 1e-14);
    }

    #[test]
    fn mixing_angle_condition() {
        let sol = OscillatorSolution::solve(&params(0.05, 0.2, -0.3, 0.2)).unwrap();
        let s = sol.scaled;
        assert!((sol.modes.alpha.tan() * (s.f2 - s.f1) - s.d3).abs() < 1e-12);
    }

    #[test]
    fn zero_coupling_special_case() {
        let p = params(0.1, 0.1, 0.0, 0.0);
        let sol = OscillatorSolution::solve(&p).unwrap();
        let e10 = sol.energy(1, 0);
        let e01 = sol.energy(0, 1);
        assert!((e10 - e01 - 0.2).abs() < 1e-12);
        for (n1, n2) in [(0, 0), (1, 0), (2, 3)] {
            let want = uncoupled_energy(p.nc(), 1.0, 1.0, n1, n2);
            assert!((sol.energy(n1, n2) - want).abs() < 1e-12);
        }
    }

    #[test]
    fn commutative_limit() {
        assert_eq!(commutative_limit_energy(1.0, 1.0, 1.0, 0.0, 0.0, 2, 1).unwrap(), 4.0);
        let tiny = 1e-10;
        let p = params(tiny, tiny, 0.3, -0.2);
        let sol = OscillatorSolution::solve(&p).unwrap();
        for (n1, n2) in [(0, 0), (1, 2), (3, 0)] {
            let want = commutative_limit_energy(1.0, 1.0, 1.0, 0.3, -0.2, n1, n2).unwrap();
            assert!((sol.energy(n1, n2) - want).abs() < 1e-8);
        }
        // k = mω²: the elastic radical vanishes
        let e = commutative_limit_energy(1.0, 1.0, 1.0, 1.0, 0.0, 0, 0).unwrap();
        assert!(e.is_finite());
    }

    #[test]
    fn levels_are_sorted() {
        let sol = OscillatorSolution::solve(&params(0.1, 0.1, 0.2, 0.1)).unwrap();
        let lv = sol.levels(6);
        let labels: Vec<_> = lv.iter().map(|e| (e.n1, e.n2)).collect();
        assert_eq!(labels, vec![(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]);
        assert!(lv.windows(2).all(|w| w[0].energy <= w[1].energy));
    }

    #[test]
    fn numeric_spectrum_edge_requests() {
        let p = params(0.1, 0.1, 0.2, 0.1);
        let basis = FockBasis::new(8).unwrap();
        assert!(numeric_spectrum(&p, basis, 0).unwrap().levels.is_empty());
        assert!(matches!(numeric_spectrum(&p, basis, 13), Err(Error::TooManyLevels { .. })));
        let tiny = FockBasis::new(4).unwrap();
        assert!(matches!(numeric_spectrum(&p, tiny, 3), Err(Error::NotConverged { .. })));
    }

    #[test]
    fn isotropic_degeneracies() {
        let p = params(1e-9, 1e-9, 0.0, 0.0);
        let s = numeric_spectrum(&p, FockBasis::new(16).unwrap(), 6).unwrap();
        assert!(close(&s.levels, &[1.0, 2.0, 2.0, 3.0, 3.0, 3.0], 1e-8));
    }
}
