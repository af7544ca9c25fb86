//! Matrix realization of the deformed two-mode boson algebra
//!
//! ```text
//! [a, a†] = [b, b†] = 1,  [a, b] = 0,  [a, b†] = -[b, a†] = iθ
//! ```
//!
//! on a standard truncated Fock space, via the rotation
//! `a = cos φ A + i sin φ B`, `b = cos φ B - i sin φ A` with `sin 2φ = θ`.
//! The rotation is unitary and sends the standard vacuum to the deformed
//! vacuum, so `a|00> = b|00> = 0`.

use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fock::{commutator, projected_residual, FockBasis, OperatorMatrix, MIN_CUTOFF};
use crate::params::{NCParameters, Observable};

#[derive(Debug, Clone)]
pub struct ModeOperators {
    a: OperatorMatrix,
    b: OperatorMatrix,
    a_dag: OperatorMatrix,
    b_dag: OperatorMatrix,
    std_a: OperatorMatrix,
    std_b: OperatorMatrix,
    phi: f64,
}

impl ModeOperators {
    /// Deformed annihilator of the first mode.
    pub fn a(&self) -> &OperatorMatrix {
        &self.a
    }

    pub fn b(&self) -> &OperatorMatrix {
        &self.b
    }

    pub fn a_dag(&self) -> &OperatorMatrix {
        &self.a_dag
    }

    pub fn b_dag(&self) -> &OperatorMatrix {
        &self.b_dag
    }

    /// Underlying standard annihilator `A`.
    pub fn std_a(&self) -> &OperatorMatrix {
        &self.std_a
    }

    pub fn std_b(&self) -> &OperatorMatrix {
        &self.std_b
    }

    /// Rotation angle `φ = arcsin(θ) / 2`.
    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn theta(&self) -> f64 {
        (2.0 * self.phi).sin()
    }

    pub fn basis(&self) -> FockBasis {
        self.a.basis()
    }

    /// Maps deformed-mode amplitudes `(α, β)` of a linear combination
    /// `α a† + β b†` to the standard-mode amplitudes `(γ, δ)` of
    /// `γ A† + δ B†`.
    pub fn to_standard_amplitudes(&self, alpha: Complex64, beta: Complex64) -> (Complex64, Complex64) {
        let (s, c) = self.phi.sin_cos();
        let i = Complex64::i();
        (alpha * c + i * s * beta, beta * c - i * s * alpha)
    }
}

pub fn build_mode_operators(params: &NCParameters, basis: FockBasis) -> Result<ModeOperators> {
    let theta = params.theta();
    if !(theta > 0.0 && theta < 1.0) {
        return Err(Error::InvalidDeformation { theta });
    }
    if basis.cutoff() < MIN_CUTOFF {
        return Err(Error::CutoffTooSmall { cutoff: basis.cutoff(), required: MIN_CUTOFF });
    }
    let phi = 0.5 * theta.asin();
    let (s, c) = phi.sin_cos();
    let std_a = OperatorMatrix::ladder_first(basis);
    let std_b = OperatorMatrix::ladder_second(basis);
    let a = &std_a.scale_real(c) + &std_b.scale(Complex64::new(0.0, s));
    let b = &std_b.scale_real(c) - &std_a.scale(Complex64::new(0.0, s));
    let a_dag = a.adjoint();
    let b_dag = b.adjoint();
    Ok(ModeOperators { a, b, a_dag, b_dag, std_a, std_b, phi })
}

#[derive(Debug, Clone)]
pub struct PhaseOperators {
    pub x: OperatorMatrix,
    pub y: OperatorMatrix,
    pub px: OperatorMatrix,
    pub py: OperatorMatrix,
    /// `(x - y)/√2`
    pub r: OperatorMatrix,
    /// `(px + py)/√2`
    pub p: OperatorMatrix,
    /// `(x + y)/√2`
    pub q: OperatorMatrix,
    /// `(px - py)/√2`
    pub k: OperatorMatrix,
}

impl PhaseOperators {
    pub fn get(&self, which: Observable) -> &OperatorMatrix {
        match which {
            Observable::X => &self.x,
            Observable::Y => &self.y,
            Observable::Px => &self.px,
            Observable::Py => &self.py,
        }
    }

    pub fn all(&self) -> [(&'static str, &OperatorMatrix); 8] {
        [
            ("x", &self.x),
            ("y", &self.y),
            ("px", &self.px),
            ("py", &self.py),
            ("R", &self.r),
            ("P", &self.p),
            ("Q", &self.q),
            ("K", &self.k),
        ]
    }
}

/// Quadrature decomposition `x = sqrt(ħ/2)(μ/ν)^{1/4}(a + a†)`,
/// `px = -i sqrt(ħ/2)(ν/μ)^{1/4}(a - a†)`, likewise `y, py` with `b`.
pub fn build_phase_operators(params: &NCParameters, modes: &ModeOperators) -> Result<PhaseOperators> {
    let sx = params.coordinate_scale();
    let sp = params.momentum_scale();
    let minus_i = Complex64::new(0.0, -sp);

    let x = (&modes.a + &modes.a_dag).scale_real(sx).into_hermitian()?;
    let y = (&modes.b + &modes.b_dag).scale_real(sx).into_hermitian()?;
    let px = (&modes.a - &modes.a_dag).scale(minus_i).into_hermitian()?;
    let py = (&modes.b - &modes.b_dag).scale(minus_i).into_hermitian()?;

    let r = (&x - &y).scale_real(FRAC_1_SQRT_2).into_hermitian()?;
    let p = (&px + &py).scale_real(FRAC_1_SQRT_2).into_hermitian()?;
    let q = (&x + &y).scale_real(FRAC_1_SQRT_2).into_hermitian()?;
    let k = (&px - &py).scale_real(FRAC_1_SQRT_2).into_hermitian()?;
    Ok(PhaseOperators { x, y, px, py, r, p, q, k })
}

/// Largest projected residual over the ten relations `[u, v] = c(u, v) I`
/// with `u <= v` among `x, y, px, py`.
pub fn phase_space_residual(params: &NCParameters, ops: &PhaseOperators, margin: usize) -> Result<f64> {
    let identity = OperatorMatrix::identity(ops.x.basis());
    let mut worst: f64 = 0.0;
    for (i, &u) in Observable::ALL.iter().enumerate() {
        for &v in &Observable::ALL[i..] {
            let comm = commutator(ops.get(u), ops.get(v))?;
            let target = identity.scale(params.canonical_commutator(u, v));
            worst = worst.max(projected_residual(&comm, &target, margin)?);
        }
    }
    Ok(worst)
}

/// Largest projected residual over `[a, a†] = [b, b†] = 1`, `[a, b] = 0`,
/// `[a, b†] = iθ` and `[b, a†] = -iθ`.
pub fn deformed_algebra_residual(modes: &ModeOperators, margin: usize) -> Result<f64> {
    let identity = OperatorMatrix::identity(modes.basis());
    let i_theta = Complex64::new(0.0, modes.theta());
    let relations = [
        (modes.a(), modes.a_dag(), Complex64::new(1.0, 0.0)),
        (modes.b(), modes.b_dag(), Complex64::new(1.0, 0.0)),
        (modes.a(), modes.b(), Complex64::new(0.0, 0.0)),
        (modes.a(), modes.b_dag(), i_theta),
        (modes.b(), modes.a_dag(), -i_theta),
    ];
    let mut worst: f64 = 0.0;
    for (u, v, c) in relations {
        worst = worst.max(projected_residual(&commutator(u, v)?, &identity.scale(c), margin)?);
    }
    Ok(worst)
}
