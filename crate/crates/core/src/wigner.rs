//! Wigner functions on the noncommutative phase space.
//!
//! * Entangled eigenstates have delta-supported Wigner functions; they are
//!   returned symbolically as a [`DeltaSupport`].
//! * [`wigner_transform_lambda`] evaluates the Wigner operator in the `|λ>`
//!   representation against a sampled wave function.
//! * [`wigner_oscillator`] gives the Laguerre-form Wigner functions of the
//!   coupled-oscillator eigenstates through the classical [`chain_map`].
//!
//! The decoupled variables `(x_i, p_i)` are canonical with unit action:
//! they descend from `λ_i` and `η_i = -i∂/∂λ_i`, so `[x_i, p_j] = iδ_ij`.
//! Accordingly the oscillator Wigner functions are normalized against
//! `dx1 dp1 dx2 dp2 / (2π)²` ([`DECOUPLED_ACTION`] = 1).

use std::f64::consts::{PI, SQRT_2};

use nalgebra::{Matrix4, Vector4};
use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::oscillator::OscillatorSolution;
use crate::params::NCParameters;
use crate::quadrature::GaussHermite;
use crate::states::{LambdaLabel, XiLabel};

/// Action unit of the decoupled oscillator variables.
pub const DECOUPLED_ACTION: f64 = 1.0;

pub const MIN_GRID_POINTS: usize = 8;
pub const BOUNDARY_DECAY: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct PhasePoint4 {
    pub x: f64,
    pub y: f64,
    pub px: f64,
    pub py: f64,
}

impl PhasePoint4 {
    pub fn new(x: f64, y: f64, px: f64, py: f64) -> Self {
        Self { x, y, px, py }
    }

    pub fn as_vector(&self) -> Vector4<f64> {
        Vector4::new(self.x, self.y, self.px, self.py)
    }
}

/// `ρ1, ρ2, γ1, γ2` of the `|λ>`-representation Wigner operator.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChainCoordinates {
    pub rho1: f64,
    pub rho2: f64,
    pub gamma1: f64,
    pub gamma2: f64,
}

impl ChainCoordinates {
    pub fn from_point(pt: &PhasePoint4, params: &NCParameters) -> Self {
        let t = params.theta();
        let pre = 1.0 / ((2.0 * params.hbar()).sqrt() * (1.0 - t * t));
        let (cr, mr) = (params.coordinate_ratio(), params.momentum_ratio());
        Self {
            rho1: pre * mr * (pt.x - pt.y),
            rho2: pre * cr * (pt.px + pt.py),
            gamma1: pre * mr * (pt.x + pt.y),
            gamma2: pre * cr * (pt.px - pt.py),
        }
    }

    /// Centre `(ρ1 + θρ2, ρ2 + θρ1)` of the kernel.
    pub fn centre(&self, theta: f64) -> (f64, f64) {
        (self.rho1 + theta * self.rho2, self.rho2 + theta * self.rho1)
    }
}

/// `coefficients · (x, y, px, py) = offset`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LinearConstraint {
    pub coefficients: [f64; 4],
    pub offset: f64,
}

impl LinearConstraint {
    pub fn residual(&self, pt: &PhasePoint4) -> f64 {
        let v = pt.as_vector();
        (0..4).map(|i| self.coefficients[i] * v[i]).sum::<f64>() - self.offset
    }
}

/// `prefactor · δ(c1) δ(c2)` over phase space.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DeltaSupport {
    pub prefactor: f64,
    pub constraints: [LinearConstraint; 2],
}

impl DeltaSupport {
    pub fn contains(&self, pt: &PhasePoint4, tol: f64) -> bool {
        self.constraints.iter().all(|c| c.residual(pt).abs() <= tol)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EntangledLabel {
    Lambda(LambdaLabel),
    Xi(XiLabel),
}

impl From<LambdaLabel> for EntangledLabel {
    fn from(l: LambdaLabel) -> Self {
        EntangledLabel::Lambda(l)
    }
}

impl From<XiLabel> for EntangledLabel {
    fn from(x: XiLabel) -> Self {
        EntangledLabel::Xi(x)
    }
}

/// Wigner function of `|λ>` (support `x - y`, `px + py` fixed) or `|ξ>`
/// (support `x + y`, `px - py` fixed). The offsets are `√2` times the
/// eigenvalues of `(R, P)` or `(Q, K)`.
pub fn wigner_entangled_delta(label: EntangledLabel, params: &NCParameters) -> DeltaSupport {
    let t = params.theta();
    let prefactor = 1.0 / (2.0 * PI * params.hbar() * (1.0 - t * t).sqrt());
    let (coords, momenta, (e1, e2)) = match label {
        EntangledLabel::Lambda(l) => ([1.0, -1.0, 0.0, 0.0], [0.0, 0.0, 1.0, 1.0], l.eigenvalues(params)),
        EntangledLabel::Xi(x) => ([1.0, 1.0, 0.0, 0.0], [0.0, 0.0, 1.0, -1.0], x.eigenvalues(params)),
    };
    DeltaSupport {
        prefactor,
        constraints: [
            LinearConstraint { coefficients: coords, offset: SQRT_2 * e1 },
            LinearConstraint { coefficients: momenta, offset: SQRT_2 * e2 },
        ],
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DecoupledPoint {
    pub x1: f64,
    pub p1: f64,
    pub x2: f64,
    pub p2: f64,
    pub h1: f64,
    pub h2: f64,
}

/// Linear map `(x, y, px, py) -> (x1, p1, x2, p2)` taking the classical
/// Hamiltonian to `H1 + H2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChainMap {
    pub matrix: Matrix4<f64>,
    pub jacobian: f64,
    mass: f64,
    omega_plus: f64,
    omega_minus: f64,
}

impl ChainMap {
    /// Composes: `(R, P, Q, K)`; `λ` from the `(R, P)` eigenvalue relations
    /// and `η1 = K/(√ħ (ν/μ)^{1/4})`, `η2 = -Q/(√ħ (μ/ν)^{1/4})`; the
    /// `(c2/c1)^{1/4}` scaling; the rotation by `α/2`; and the relabeling
    /// that gives mode 1 the frequency `Ω+`.
    pub fn new(sol: &OscillatorSolution) -> Result<Self> {
        let nc = sol.params.nc();
        let t = nc.theta();
        let det = 1.0 - t * t;
        if !(det > 0.0) {
            return Err(Error::SingularChain(det));
        }
        let r = std::f64::consts::FRAC_1_SQRT_2;
        // rows R, P, Q, K over (x, y, px, py)
        let rpqk = Matrix4::new(
            r, -r, 0.0, 0.0, //
            0.0, 0.0, r, r, //
            r, r, 0.0, 0.0, //
            0.0, 0.0, r, -r,
        );
        let h = nc.hbar().sqrt();
        let (cr, mr) = (nc.coordinate_ratio(), nc.momentum_ratio());
        // (R, P, Q, K) -> (λ1, λ2, η1, η2)
        let (a, b) = (1.0 / (h * cr), 1.0 / (h * mr));
        let to_lambda = Matrix4::new(
            a / det, t * b / det, 0.0, 0.0, //
            t * a / det, b / det, 0.0, 0.0, //
            0.0, 0.0, 0.0, b, //
            0.0, 0.0, -a, 0.0,
        );
        let q = (sol.reduced.c2 / sol.reduced.c1).powf(0.25);
        let scale = Matrix4::from_diagonal(&Vector4::new(q, 1.0 / q, 1.0 / q, q));
        let (sn, cs) = (0.5 * sol.modes.alpha).sin_cos();
        // (λ1', λ2', η1', η2') -> (x1, p1, x2, p2)
        let rotate = if sol.modes.swapped {
            Matrix4::new(
                sn, cs, 0.0, 0.0, //
                0.0, 0.0, sn, cs, //
                cs, -sn, 0.0, 0.0, //
                0.0, 0.0, cs, -sn,
            )
        } else {
            Matrix4::new(
                cs, -sn, 0.0, 0.0, //
                0.0, 0.0, cs, -sn, //
                sn, cs, 0.0, 0.0, //
                0.0, 0.0, sn, cs,
            )
        };
        let matrix = rotate * scale * to_lambda * rpqk;
        Ok(Self {
            matrix,
            jacobian: matrix.determinant(),
            mass: sol.modes.mass,
            omega_plus: sol.modes.omega_plus,
            omega_minus: sol.modes.omega_minus,
        })
    }

    pub fn apply(&self, pt: &PhasePoint4) -> DecoupledPoint {
        let v = self.matrix * pt.as_vector();
        let (x1, p1, x2, p2) = (v[0], v[1], v[2], v[3]);
        let m = self.mass;
        DecoupledPoint {
            x1,
            p1,
            x2,
            p2,
            h1: p1 * p1 / (2.0 * m) + m * self.omega_plus.powi(2) * x1 * x1 / 2.0,
            h2: p2 * p2 / (2.0 * m) + m * self.omega_minus.powi(2) * x2 * x2 / 2.0,
        }
    }
}

/// The intermediate entangled-representation variables `(λ1, λ2, η1, η2)`
/// of a phase point.
pub fn lambda_eta(pt: &PhasePoint4, params: &NCParameters) -> ((f64, f64), (f64, f64)) {
    let t = params.theta();
    let h = params.hbar().sqrt();
    let (cr, mr) = (params.coordinate_ratio(), params.momentum_ratio());
    let r = (pt.x - pt.y) / SQRT_2;
    let p = (pt.px + pt.py) / SQRT_2;
    let q = (pt.x + pt.y) / SQRT_2;
    let k = (pt.px - pt.py) / SQRT_2;
    let (u, w) = (r / (h * cr), p / (h * mr));
    let det = 1.0 - t * t;
    (((u + t * w) / det, (w + t * u) / det), (k / (h * mr), -q / (h * cr)))
}

/// Returns the decoupled point and the Jacobian of the linear chain.
pub fn chain_map(pt: &PhasePoint4, sol: &OscillatorSolution) -> Result<(DecoupledPoint, f64)> {
    let map = ChainMap::new(sol)?;
    Ok((map.apply(pt), map.jacobian))
}

/// Classical value of the oscillator Hamiltonian at a phase point.
pub fn classical_hamiltonian(pt: &PhasePoint4, sol: &OscillatorSolution) -> f64 {
    let p = &sol.params;
    let (m, w) = (p.m(), p.omega());
    (pt.px * pt.px + pt.py * pt.py) / (2.0 * m)
        + m * w * w * (pt.x * pt.x + pt.y * pt.y) / 2.0
        + p.k() * pt.x * pt.y
        + p.l() * pt.px * pt.py
}

/// `L_n(x)` from `(k+1) L_{k+1} = (2k+1-x) L_k - k L_{k-1}`.
pub fn laguerre(n: u32, x: f64) -> f64 {
    let (mut prev, mut cur) = (1.0, 1.0 - x);
    if n == 0 {
        return prev;
    }
    for k in 1..n {
        let kf = f64::from(k);
        let next = ((2.0 * kf + 1.0 - x) * cur - kf * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// `4 (-1)^{n1+n2} e^{-2H1/Ω+} e^{-2H2/Ω-} L_{n1}(4H1/Ω+) L_{n2}(4H2/Ω-)`.
pub fn wigner_from_energies(sol: &OscillatorSolution, n1: u32, n2: u32, h1: f64, h2: f64) -> f64 {
    let (s1, s2) = (2.0 * h1 / sol.modes.omega_plus, 2.0 * h2 / sol.modes.omega_minus);
    let sign = if (n1 + n2).is_multiple_of(2) { 1.0 } else { -1.0 };
    4.0 * sign * (-s1).exp() * (-s2).exp() * laguerre(n1, 2.0 * s1) * laguerre(n2, 2.0 * s2)
}

pub fn wigner_oscillator(sol: &OscillatorSolution, n1: u32, n2: u32, pt: &PhasePoint4) -> Result<f64> {
    let (d, _) = chain_map(pt, sol)?;
    Ok(wigner_from_energies(sol, n1, n2, d.h1, d.h2))
}

/// Gauss–Hermite evaluation of `∫ f(H1, H2) W dx1 dp1 dx2 dp2 / (2π)²`.
///
/// With `x_i = t_i / sqrt(M Ω_i)` and `p_i = s_i sqrt(M Ω_i)` the measure is
/// unchanged and `2H_i/Ω_i = s_i² + t_i²`, so the Gaussian factor of `W`
/// becomes the Gauss–Hermite weight and the remaining integrand is a
/// polynomial.
pub fn decoupled_moment(sol: &OscillatorSolution, n1: u32, n2: u32, nodes: usize, f: impl Fn(f64, f64) -> f64) -> f64 {
    let rule = GaussHermite::new(nodes);
    let (op, om) = (sol.modes.omega_plus, sol.modes.omega_minus);
    let sign = if (n1 + n2).is_multiple_of(2) { 1.0 } else { -1.0 };
    let radial: Vec<(f64, f64)> = rule
        .nodes
        .iter()
        .zip(&rule.weights)
        .flat_map(|(&s, &ws)| rule.nodes.iter().zip(&rule.weights).map(move |(&t, &wt)| (s * s + t * t, ws * wt)))
        .collect();
    let mut total = 0.0;
    for &(r1, w1) in &radial {
        let l1 = laguerre(n1, 2.0 * r1);
        for &(r2, w2) in &radial {
            let (h1, h2) = (0.5 * op * r1, 0.5 * om * r2);
            total += w1 * w2 * 4.0 * sign * l1 * laguerre(n2, 2.0 * r2) * f(h1, h2);
        }
    }
    total / (2.0 * PI * DECOUPLED_ACTION).powi(2)
}

pub fn wigner_normalization(sol: &OscillatorSolution, n1: u32, n2: u32) -> f64 {
    decoupled_moment(sol, n1, n2, quadrature_nodes(n1, n2), |_, _| 1.0)
}

/// `∫ (H1 + H2) W / ∫ W`.
pub fn energy_moment(sol: &OscillatorSolution, n1: u32, n2: u32) -> f64 {
    let nodes = quadrature_nodes(n1, n2);
    decoupled_moment(sol, n1, n2, nodes, |h1, h2| h1 + h2) / decoupled_moment(sol, n1, n2, nodes, |_, _| 1.0)
}

/// Enough nodes for the polynomial degree `2 max(n1, n2) + 2` per axis.
fn quadrature_nodes(n1: u32, n2: u32) -> usize {
    n1.max(n2) as usize + 4
}

/// Complex samples of a wave function on a uniform `(λ1, λ2)` grid.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    origin: (f64, f64),
    spacing: (f64, f64),
    nx: usize,
    ny: usize,
    values: Vec<Complex64>,
}

impl GridFunction {
    /// Samples `f` on `nx × ny` points spanning `[lo.0, hi.0] × [lo.1, hi.1]`.
    pub fn sample(lo: (f64, f64), hi: (f64, f64), nx: usize, ny: usize, f: impl Fn(f64, f64) -> Complex64) -> Result<Self> {
        if nx < MIN_GRID_POINTS || ny < MIN_GRID_POINTS {
            return Err(Error::GridTooCoarse { nx, ny, required: MIN_GRID_POINTS });
        }
        let spacing = ((hi.0 - lo.0) / (nx - 1) as f64, (hi.1 - lo.1) / (ny - 1) as f64);
        let mut values = Vec::with_capacity(nx * ny);
        for i in 0..nx {
            for j in 0..ny {
                values.push(f(lo.0 + i as f64 * spacing.0, lo.1 + j as f64 * spacing.1));
            }
        }
        Ok(Self { origin: lo, spacing, nx, ny, values })
    }

    pub fn spacing(&self) -> (f64, f64) {
        self.spacing
    }

    fn at(&self, i: usize, j: usize) -> Complex64 {
        self.values[i * self.ny + j]
    }

    /// Bilinear interpolation, zero outside the grid.
    pub fn value_at(&self, l1: f64, l2: f64) -> Complex64 {
        let fx = (l1 - self.origin.0) / self.spacing.0;
        let fy = (l2 - self.origin.1) / self.spacing.1;
        let (xmax, ymax) = ((self.nx - 1) as f64, (self.ny - 1) as f64);
        if !(fx >= 0.0 && fy >= 0.0 && fx <= xmax && fy <= ymax) {
            return Complex64::new(0.0, 0.0);
        }
        let i = (fx.floor() as usize).min(self.nx - 2);
        let j = (fy.floor() as usize).min(self.ny - 2);
        let (tx, ty) = (fx - i as f64, fy - j as f64);
        self.at(i, j) * ((1.0 - tx) * (1.0 - ty))
            + self.at(i + 1, j) * (tx * (1.0 - ty))
            + self.at(i, j + 1) * ((1.0 - tx) * ty)
            + self.at(i + 1, j + 1) * (tx * ty)
    }

    /// Largest boundary modulus relative to the largest modulus.
    pub fn boundary_ratio(&self) -> f64 {
        let peak = self.values.iter().map(|z| z.norm()).fold(0.0, f64::max);
        if peak == 0.0 {
            return 0.0;
        }
        let mut edge: f64 = 0.0;
        for i in 0..self.nx {
            for j in 0..self.ny {
                if i == 0 || j == 0 || i == self.nx - 1 || j == self.ny - 1 {
                    edge = edge.max(self.at(i, j).norm());
                }
            }
        }
        edge / peak
    }
}

/// `W = sqrt(1-θ²)/(π³ħ²) ∫ d²λ exp(2i(1-θ²)(γ1 λ2 - γ2 λ1)) ψ*(u - λ) ψ(u + λ)`
/// with `u = (ρ1 + θρ2, ρ2 + θρ1)`, i.e. `<ψ|Δ|ψ>` for the `|λ>`-form
/// Wigner operator. The integral runs over the lattice `λ = (i h1, j h2)`
/// of the grid spacing, which is symmetric under `λ -> -λ`; the sum is
/// therefore real up to rounding.
pub fn wigner_transform_lambda(psi: &GridFunction, pt: &ChainCoordinates, params: &NCParameters) -> Result<f64> {
    let ratio = psi.boundary_ratio();
    if ratio > BOUNDARY_DECAY {
        return Err(Error::BoundaryLeak { ratio });
    }
    let t = params.theta();
    let det = 1.0 - t * t;
    let (u1, u2) = pt.centre(t);
    let (h1, h2) = psi.spacing;
    let (rx, ry) = (psi.nx as i64, psi.ny as i64);
    let mut sum = Complex64::new(0.0, 0.0);
    for i in -rx..=rx {
        let l1 = i as f64 * h1;
        for j in -ry..=ry {
            let l2 = j as f64 * h2;
            let ket = psi.value_at(u1 - l1, u2 - l2);
            if ket == Complex64::new(0.0, 0.0) {
                continue;
            }
            let bra = psi.value_at(u1 + l1, u2 + l2);
            let phase = Complex64::from_polar(1.0, 2.0 * det * (pt.gamma1 * l2 - pt.gamma2 * l1));
            sum += phase * ket.conj() * bra;
        }
    }
    let w = sum * (det.sqrt() / (PI.powi(3) * params.hbar().powi(2)) * h1 * h2);
    if w.im.abs() > 1e-8 * w.re.abs() + 1e-12 {
        return Err(Error::ImaginaryLeak { re: w.re, im: w.im });
    }
    Ok(w.re)
}
