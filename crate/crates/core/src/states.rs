//! Coherent and entangled states of the deformed two-mode algebra.
//!
//! Entangled states `|λ>` (eigenstates of `R, P`) and `|ξ>` (eigenstates of
//! `Q, K`) are delta-normalized, so their truncated vectors are returned
//! unnormalized. Their exponents only contain creation operators, which are
//! nilpotent on the truncated space: the power series terminates and every
//! amplitude inside the truncation box is exact.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::algebra::{build_mode_operators, ModeOperators, PhaseOperators};
use crate::error::{Error, Result};
use crate::fock::{eigen_residual, FockBasis, OperatorMatrix, StateVector};
use crate::params::NCParameters;
use crate::quadrature::GaussHermite;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherentLabel {
    pub alpha: Complex64,
    pub beta: Complex64,
}

impl CoherentLabel {
    pub fn new(alpha: Complex64, beta: Complex64) -> Self {
        Self { alpha, beta }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LambdaLabel {
    pub lambda1: f64,
    pub lambda2: f64,
}

impl LambdaLabel {
    pub fn new(lambda1: f64, lambda2: f64) -> Self {
        Self { lambda1, lambda2 }
    }

    pub fn complex(&self) -> Complex64 {
        Complex64::new(self.lambda1, self.lambda2)
    }

    /// Eigenvalues of `(R, P)` on `|λ>`:
    /// `sqrt(ħ)(μ/ν)^{1/4}(λ1 - θλ2)` and `sqrt(ħ)(ν/μ)^{1/4}(λ2 - θλ1)`.
    pub fn eigenvalues(&self, params: &NCParameters) -> (f64, f64) {
        let t = params.theta();
        let h = params.hbar().sqrt();
        (
            h * params.coordinate_ratio() * (self.lambda1 - t * self.lambda2),
            h * params.momentum_ratio() * (self.lambda2 - t * self.lambda1),
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct XiLabel {
    pub xi1: f64,
    pub xi2: f64,
}

impl XiLabel {
    pub fn new(xi1: f64, xi2: f64) -> Self {
        Self { xi1, xi2 }
    }

    pub fn complex(&self) -> Complex64 {
        Complex64::new(self.xi1, self.xi2)
    }

    /// Eigenvalues of `(Q, K)` on `|ξ>`:
    /// `sqrt(ħ)(μ/ν)^{1/4}(ξ1 + θξ2)` and `sqrt(ħ)(ν/μ)^{1/4}(ξ2 + θξ1)`.
    pub fn eigenvalues(&self, params: &NCParameters) -> (f64, f64) {
        let t = params.theta();
        let h = params.hbar().sqrt();
        (
            h * params.coordinate_ratio() * (self.xi1 + t * self.xi2),
            h * params.momentum_ratio() * (self.xi2 + t * self.xi1),
        )
    }
}

/// `exp(α a† + β b† - α* a - β* b)|00>`.
pub fn coherent_state_vector(label: &CoherentLabel, modes: &ModeOperators) -> Result<StateVector> {
    let basis = modes.basis();
    let reach = label.alpha.norm() + label.beta.norm();
    if reach * reach > basis.cutoff() as f64 / 4.0 {
        let required = (4.0 * reach * reach).ceil() as usize;
        return Err(Error::CutoffTooSmall { cutoff: basis.cutoff(), required });
    }
    let exponent = &(&modes.a_dag().scale(label.alpha) + &modes.b_dag().scale(label.beta))
        - &(&modes.a().scale(label.alpha.conj()) + &modes.b().scale(label.beta.conj()));
    Ok(exponent
        .exp_action(&StateVector::vacuum(basis))?
        .with_normalized_hint(true))
}

/// Closed-form `<α',β'|α,β>` with `l1 = (α', β')` and `l2 = (α, β)`.
pub fn coherent_overlap(l1: &CoherentLabel, l2: &CoherentLabel, theta: f64) -> Result<Complex64> {
    check_theta(theta)?;
    let (a1, b1) = (l1.alpha, l1.beta);
    let (a, b) = (l2.alpha, l2.beta);
    let i_theta = Complex64::new(0.0, theta);
    let exponent = -0.5 * (a.norm_sqr() + b.norm_sqr() + a1.norm_sqr() + b1.norm_sqr())
        + a1.conj() * a
        + b1.conj() * b
        + 0.5 * i_theta * (b.conj() * a - a.conj() * b + b1.conj() * a1 - a1.conj() * b1)
        + i_theta * (a1.conj() * b - b1.conj() * a);
    Ok(exponent.exp())
}

/// Creation-only exponent shared by `|λ>` and `|ξ>`:
/// `u a† + v b† + sign/(1-θ²) (a†b† - iθ/2 a†² + iθ/2 b†²)`.
fn entangled_exponent(modes: &ModeOperators, u: Complex64, v: Complex64, sign: f64) -> OperatorMatrix {
    let theta = modes.theta();
    let kappa = sign / (1.0 - theta * theta);
    let half_i_theta = Complex64::new(0.0, 0.5 * theta);
    let ad = modes.a_dag();
    let bd = modes.b_dag();
    let quadratic = &(&(ad * bd) - &(ad * ad).scale(half_i_theta)) + &(bd * bd).scale(half_i_theta);
    &(&ad.scale(u) + &bd.scale(v)) + &quadratic.scale_real(kappa)
}

/// Terminating series `exp(E)|00>` for a strictly raising `E`.
fn nilpotent_exp_vacuum(exponent: &OperatorMatrix) -> Result<StateVector> {
    let basis = exponent.basis();
    let mut term = StateVector::vacuum(basis);
    let mut sum = term.amplitudes().clone();
    // total occupation rises by at least one per application
    for k in 1..=(2 * basis.cutoff() + 1) {
        term = exponent.apply(&term)?.scale(Complex64::new(1.0 / k as f64, 0.0));
        if term.amplitudes().iter().all(|z| *z == Complex64::new(0.0, 0.0)) {
            break;
        }
        sum += term.amplitudes();
    }
    Ok(StateVector::from_amplitudes(basis, sum, false))
}

/// Truncated `|λ>` without its scalar prefactor `exp(-|λ|²/2 + θλ1λ2)`.
fn lambda_state_unscaled(label: &LambdaLabel, modes: &ModeOperators) -> Result<StateVector> {
    let lambda = label.complex();
    nilpotent_exp_vacuum(&entangled_exponent(modes, lambda, -lambda.conj(), 1.0))
}

fn xi_state_unscaled(label: &XiLabel, modes: &ModeOperators) -> Result<StateVector> {
    let xi = label.complex();
    nilpotent_exp_vacuum(&entangled_exponent(modes, xi, xi.conj(), -1.0))
}

/// Truncated simultaneous eigenstate of `R` and `P`.
pub fn lambda_state_vector(label: &LambdaLabel, modes: &ModeOperators) -> Result<StateVector> {
    check_theta(modes.theta())?;
    let theta = modes.theta();
    let lambda = label.complex();
    let prefactor = (-0.5 * lambda.norm_sqr() + theta * label.lambda1 * label.lambda2).exp();
    Ok(lambda_state_unscaled(label, modes)?.scale(Complex64::new(prefactor, 0.0)))
}

/// Truncated simultaneous eigenstate of `Q` and `K`.
pub fn xi_state_vector(label: &XiLabel, modes: &ModeOperators) -> Result<StateVector> {
    check_theta(modes.theta())?;
    let theta = modes.theta();
    let xi = label.complex();
    let prefactor = (-0.5 * xi.norm_sqr() - theta * label.xi1 * label.xi2).exp();
    Ok(xi_state_unscaled(label, modes)?.scale(Complex64::new(prefactor, 0.0)))
}

/// `<λ|ξ> = ½ exp(i(λ1ξ2 - λ2ξ1) + iθ(λ1ξ1 - λ2ξ2))`.
pub fn lambda_xi_overlap(l: &LambdaLabel, x: &XiLabel, theta: f64) -> Result<Complex64> {
    check_theta(theta)?;
    let phase = (l.lambda1 * x.xi2 - l.lambda2 * x.xi1) + theta * (l.lambda1 * x.xi1 - l.lambda2 * x.xi2);
    Ok(0.5 * Complex64::new(0.0, phase).exp())
}

/// Largest projected eigen-residual of `|λ>` over the ladder relations
/// `(a - b†)|λ> = (λ - iθλ*)|λ>`, `(b - a†)|λ> = -(λ* + iθλ)|λ>` and the
/// `R`, `P` eigen-relations.
pub fn lambda_eigen_residual(
    label: &LambdaLabel,
    params: &NCParameters,
    modes: &ModeOperators,
    ops: &PhaseOperators,
    margin: usize,
) -> Result<f64> {
    let v = lambda_state_vector(label, modes)?;
    let lambda = label.complex();
    let i_theta = Complex64::new(0.0, modes.theta());
    let (r, p) = label.eigenvalues(params);
    let first = modes.a() - modes.b_dag();
    let second = modes.b() - modes.a_dag();
    let relations = [
        (&first, lambda - i_theta * lambda.conj()),
        (&second, -(lambda.conj() + i_theta * lambda)),
        (&ops.r, Complex64::new(r, 0.0)),
        (&ops.p, Complex64::new(p, 0.0)),
    ];
    let mut worst: f64 = 0.0;
    for (op, e) in relations {
        worst = worst.max(eigen_residual(op, e, &v, margin)?);
    }
    Ok(worst)
}

/// Largest projected eigen-residual of `|ξ>` over the `Q`, `K` eigen-relations.
pub fn xi_eigen_residual(
    label: &XiLabel,
    params: &NCParameters,
    modes: &ModeOperators,
    ops: &PhaseOperators,
    margin: usize,
) -> Result<f64> {
    let v = xi_state_vector(label, modes)?;
    let (q, k) = label.eigenvalues(params);
    let rq = eigen_residual(&ops.q, Complex64::new(q, 0.0), &v, margin)?;
    let rk = eigen_residual(&ops.k, Complex64::new(k, 0.0), &v, margin)?;
    Ok(rq.max(rk))
}

/// Which over-complete family the identity is resolved over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum StateFamily {
    /// `(1-θ²)/π² ∫ d²α d²β |α,β><α,β|`
    Coherent,
    /// `sqrt(1-θ²)/π ∫ d²λ |λ><λ|`
    Lambda,
    /// `sqrt(1-θ²)/π ∫ d²ξ |ξ><ξ|`
    Xi,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadratureSpec {
    pub nodes_per_axis: usize,
    pub family: StateFamily,
    /// Block of total occupation `<=` this on which the identity is checked.
    pub max_occupation: usize,
}

impl QuadratureSpec {
    pub const MIN_NODES: usize = 8;

    pub fn coherent(nodes_per_axis: usize) -> Self {
        Self { nodes_per_axis, family: StateFamily::Coherent, max_occupation: 4 }
    }
}

/// `||M - I||_inf` on the low-occupation block, where `M` is the
/// Gauss–Hermite product-rule estimate of the resolution of the identity.
pub fn identity_resolution_residual(
    params: &NCParameters,
    modes: &ModeOperators,
    quad: &QuadratureSpec,
) -> Result<f64> {
    if quad.nodes_per_axis < QuadratureSpec::MIN_NODES {
        return Err(Error::QuadratureTooCoarse {
            nodes: quad.nodes_per_axis,
            required: QuadratureSpec::MIN_NODES,
        });
    }
    let rule = GaussHermite::new(quad.nodes_per_axis);
    let block = occupation_block(quad.max_occupation);
    let dim = block.len();
    let mut acc = vec![Complex64::new(0.0, 0.0); dim * dim];
    let theta = params.theta();

    let mut accumulate = |weight: f64, amps: &[Complex64]| {
        for (i, ai) in amps.iter().enumerate() {
            for (j, aj) in amps.iter().enumerate() {
                acc[i * dim + j] += weight * ai * aj.conj();
            }
        }
    };

    match quad.family {
        StateFamily::Coherent => {
            let measure = (1.0 - theta * theta) / (PI * PI);
            for (&x1, &w1) in rule.nodes.iter().zip(&rule.weights) {
                for (&x2, &w2) in rule.nodes.iter().zip(&rule.weights) {
                    for (&x3, &w3) in rule.nodes.iter().zip(&rule.weights) {
                        for (&x4, &w4) in rule.nodes.iter().zip(&rule.weights) {
                            let alpha = Complex64::new(x1, x2);
                            let beta = Complex64::new(x3, x4);
                            let (gamma, delta) = modes.to_standard_amplitudes(alpha, beta);
                            // fold the Gauss-Hermite weight into the amplitude envelope
                            let log_env = -0.5 * (gamma.norm_sqr() + delta.norm_sqr())
                                + 0.5 * (x1 * x1 + x2 * x2 + x3 * x3 + x4 * x4);
                            let env = log_env.exp();
                            let amps: Vec<Complex64> = block
                                .iter()
                                .map(|&(na, nb)| env * poisson_factor(gamma, na) * poisson_factor(delta, nb))
                                .collect();
                            accumulate(measure * w1 * w2 * w3 * w4, &amps);
                        }
                    }
                }
            }
        }
        StateFamily::Lambda | StateFamily::Xi => {
            let small = build_mode_operators(params, FockBasis::new(quad.max_occupation.max(2))?)?;
            let measure = (1.0 - theta * theta).sqrt() / PI;
            let sign = if quad.family == StateFamily::Lambda { 1.0 } else { -1.0 };
            for (&x1, &w1) in rule.nodes.iter().zip(&rule.weights) {
                for (&x2, &w2) in rule.nodes.iter().zip(&rule.weights) {
                    let v = if sign > 0.0 {
                        lambda_state_unscaled(&LambdaLabel::new(x1, x2), &small)?
                    } else {
                        xi_state_unscaled(&XiLabel::new(x1, x2), &small)?
                    };
                    // |prefactor|² exp(x1² + x2²) = exp(±2θ x1 x2)
                    let env = (sign * theta * x1 * x2).exp();
                    let amps: Vec<Complex64> = block.iter().map(|&(na, nb)| env * v.amplitude(na, nb)).collect();
                    accumulate(measure * w1 * w2, &amps);
                }
            }
        }
    }

    let mut worst: f64 = 0.0;
    for i in 0..dim {
        let row: f64 = (0..dim)
            .map(|j| {
                let target = if i == j { 1.0 } else { 0.0 };
                (acc[i * dim + j] - target).norm()
            })
            .sum();
        worst = worst.max(row);
    }
    Ok(worst)
}

fn occupation_block(max_total: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for na in 0..=max_total {
        for nb in 0..=(max_total - na) {
            out.push((na, nb));
        }
    }
    out
}

/// `z^n / sqrt(n!)`.
fn poisson_factor(z: Complex64, n: usize) -> Complex64 {
    let mut out = Complex64::new(1.0, 0.0);
    for k in 1..=n {
        out *= z / (k as f64).sqrt();
    }
    out
}

fn check_theta(theta: f64) -> Result<()> {
    if !(theta.abs() < 1.0) {
        return Err(Error::InvalidDeformation { theta });
    }
    Ok(())
}
