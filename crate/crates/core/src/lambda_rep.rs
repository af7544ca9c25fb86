//! Phase-space operators as differential operators in the entangled
//! representations.
//!
//! In the `|λ>` representation, with `s = sqrt(ħ/2)(μ/ν)^{1/4}` and
//! `s' = sqrt(ħ/2)(ν/μ)^{1/4}`,
//!
//! ```text
//! x  = s (λ1 - θλ2 + i∂2)     y  = s (-λ1 + θλ2 + i∂2)
//! px = s'(λ2 - θλ1 - i∂1)     py = s'(λ2 - θλ1 + i∂1)
//! ```
//!
//! and in the `|ξ>` representation
//!
//! ```text
//! x  = s (ξ1 + θξ2 + i∂2)     y  = s (ξ1 + θξ2 - i∂2)
//! px = s'(ξ2 + θξ1 - i∂1)     py = s'(-ξ2 - θξ1 - i∂1)
//! ```
//!
//! The `|ξ>` forms reuse the `λ1, λ2` slots of [`WeylPolynomial`] for
//! `ξ1, ξ2`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::oscillator::{OscillatorParams, ReducedCoefficients};
use crate::params::{NCParameters, Observable};
use crate::weyl::{WeylMonomial, WeylPolynomial};

fn linear(c1: f64, c2: f64, d1: Complex64, d2: Complex64) -> WeylPolynomial {
    let mut p = WeylPolynomial::lambda1().scale_real(c1);
    p = &p + &WeylPolynomial::lambda2().scale_real(c2);
    p = &p + &WeylPolynomial::d1().scale(d1);
    &p + &WeylPolynomial::d2().scale(d2)
}

const I: Complex64 = Complex64::new(0.0, 1.0);
const ZERO: Complex64 = Complex64::new(0.0, 0.0);

pub fn lambda_rep_operator(which: Observable, params: &NCParameters) -> WeylPolynomial {
    let t = params.theta();
    let (s, sp) = (params.coordinate_scale(), params.momentum_scale());
    match which {
        Observable::X => linear(1.0, -t, ZERO, I).scale_real(s),
        Observable::Y => linear(-1.0, t, ZERO, I).scale_real(s),
        Observable::Px => linear(-t, 1.0, -I, ZERO).scale_real(sp),
        Observable::Py => linear(-t, 1.0, I, ZERO).scale_real(sp),
    }
}

pub fn xi_rep_operator(which: Observable, params: &NCParameters) -> WeylPolynomial {
    let t = params.theta();
    let (s, sp) = (params.coordinate_scale(), params.momentum_scale());
    match which {
        Observable::X => linear(1.0, t, ZERO, I).scale_real(s),
        Observable::Y => linear(1.0, t, ZERO, -I).scale_real(s),
        Observable::Px => linear(t, 1.0, -I, ZERO).scale_real(sp),
        Observable::Py => linear(-t, -1.0, -I, ZERO).scale_real(sp),
    }
}

/// Largest coefficient deviation of `[u, v]` from the prescribed constant
/// `i(μ, ν or ħ)` over the six pairs of observables, for a representation
/// `rep`.
pub fn representation_defect(params: &NCParameters, rep: fn(Observable, &NCParameters) -> WeylPolynomial) -> f64 {
    Observable::pairs()
        .map(|(u, v)| {
            let comm = rep(u, params).commutator(&rep(v, params));
            let target = WeylPolynomial::constant(params.canonical_commutator(u, v));
            (&comm - &target).max_coefficient()
        })
        .fold(0.0, f64::max)
}

/// The oscillator Hamiltonian with `λ`-representation operators substituted
/// and normal-ordered.
pub fn hamiltonian_lambda_form(op: &OscillatorParams) -> WeylPolynomial {
    let nc = op.nc();
    let x = lambda_rep_operator(Observable::X, nc);
    let y = lambda_rep_operator(Observable::Y, nc);
    let px = lambda_rep_operator(Observable::Px, nc);
    let py = lambda_rep_operator(Observable::Py, nc);
    let (m, w) = (op.m(), op.omega());
    let kinetic = (&(&px * &px) + &(&py * &py)).scale_real(0.5 / m);
    let potential = (&(&x * &x) + &(&y * &y)).scale_real(0.5 * m * w * w);
    let elastic = (&(&x * &y) + &(&y * &x)).scale_real(0.5 * op.k());
    let mixing = (&(&px * &py) + &(&py * &px)).scale_real(0.5 * op.l());
    &(&kinetic + &potential) + &(&elastic + &mixing)
}

const D1_SQ: WeylMonomial = WeylMonomial::new(0, 0, 2, 0);
const D2_SQ: WeylMonomial = WeylMonomial::new(0, 0, 0, 2);
const L1_SQ: WeylMonomial = WeylMonomial::new(2, 0, 0, 0);
const L2_SQ: WeylMonomial = WeylMonomial::new(0, 2, 0, 0);
const L1_L2: WeylMonomial = WeylMonomial::new(1, 1, 0, 0);

/// Reads `(c1, c2, d1, d2, d3)` off `c1 η1² + c2 η2² + d1 λ1² + d2 λ2² +
/// d3 λ1 λ2` with `η = -i∂`. Any other monomial, or an imaginary part,
/// larger than `1e-12` relative to the largest coefficient is an error.
pub fn lambda_form_coefficients(h: &WeylPolynomial) -> Result<ReducedCoefficients> {
    let tol = 1e-12 * h.max_coefficient().max(1.0);
    for (m, c) in h.terms() {
        let allowed = [D1_SQ, D2_SQ, L1_SQ, L2_SQ, L1_L2].contains(m);
        if (!allowed && c.norm() > tol) || c.im.abs() > tol {
            return Err(Error::UnexpectedMonomial(format!("({c}) {m}")));
        }
    }
    Ok(ReducedCoefficients {
        c1: -h.coefficient(&D1_SQ).re,
        c2: -h.coefficient(&D2_SQ).re,
        d1: h.coefficient(&L1_SQ).re,
        d2: h.coefficient(&L2_SQ).re,
        d3: h.coefficient(&L1_L2).re,
    })
}
