mod common;

use std::f64::consts::{PI, SQRT_2};

use ncphase::lambda_rep::{hamiltonian_lambda_form, lambda_form_coefficients};
use ncphase::oscillator::OscillatorSolution;
use ncphase::states::{LambdaLabel, XiLabel};
use ncphase::wigner::{
    chain_map, classical_hamiltonian, lambda_eta, wigner_entangled_delta, wigner_normalization, wigner_oscillator,
    wigner_transform_lambda, ChainCoordinates, GridFunction, PhasePoint4,
};
use ncphase::NCParameters;
use num_complex::Complex64;
use proptest::prelude::*;

fn gaussian_grid(centre: (f64, f64), sigma: f64, momentum: (f64, f64)) -> GridFunction {
    GridFunction::sample((-8.0, -8.0), (8.0, 8.0), 161, 161, |a, b| {
        let r2 = (a - centre.0).powi(2) + (b - centre.1).powi(2);
        Complex64::from_polar((-r2 / (2.0 * sigma * sigma)).exp(), momentum.0 * a + momentum.1 * b)
    })
    .unwrap()
}

/// Kernel coordinates whose centre is `u` and whose frequency is `γ`.
fn coordinates_with_centre(u: (f64, f64), gamma: (f64, f64), theta: f64) -> ChainCoordinates {
    let det = 1.0 - theta * theta;
    ChainCoordinates {
        rho1: (u.0 - theta * u.1) / det,
        rho2: (u.1 - theta * u.0) / det,
        gamma1: gamma.0,
        gamma2: gamma.1,
    }
}

#[test]
fn gaussian_transform_matches_closed_form() {
    let params = NCParameters::new(0.3, 0.2, 1.0).unwrap();
    let t = params.theta();
    let det = 1.0 - t * t;
    let (u0, sigma) = ((0.4, -0.3), 1.1);
    let psi = gaussian_grid(u0, sigma, (0.0, 0.0));
    for (u, gamma) in [((0.4, -0.3), (0.0, 0.0)), ((0.0, 0.5), (0.3, -0.2)), ((-1.2, 0.9), (0.7, 0.1))] {
        let w = wigner_transform_lambda(&psi, &coordinates_with_centre(u, gamma, t), &params).unwrap();
        let d2 = (u.0 - u0.0).powi(2) + (u.1 - u0.1).powi(2);
        let g2 = gamma.0 * gamma.0 + gamma.1 * gamma.1;
        let want = det.sqrt() / PI.powi(3) * PI * sigma * sigma * (-d2 / (sigma * sigma) - sigma * sigma * det * det * g2).exp();
        assert!((w - want).abs() <= 1e-9 * want.abs().max(1e-3), "{u:?} {gamma:?}: {w} vs {want}");
    }
}

#[test]
fn gamma_marginal_recovers_the_density() {
    let params = NCParameters::new(0.25, 0.25, 1.0).unwrap();
    let t = params.theta();
    let det = 1.0 - t * t;
    let psi = GridFunction::sample((-6.0, -6.0), (6.0, 6.0), 61, 61, |a, b| {
        Complex64::from_polar((-(a * a + (b - 0.2).powi(2)) / 1.6).exp(), 0.5 * a)
    })
    .unwrap();
    let u = (0.4, 0.2);
    let (n, half) = (57, 7.0);
    let h = 2.0 * half / (n - 1) as f64;
    let mut total = 0.0;
    for i in 0..n {
        for j in 0..n {
            let gamma = (-half + i as f64 * h, -half + j as f64 * h);
            total += wigner_transform_lambda(&psi, &coordinates_with_centre(u, gamma, t), &params).unwrap();
        }
    }
    total *= h * h;
    let density = psi.value_at(u.0, u.1).norm_sqr();
    let want = density / (PI * det.powf(1.5));
    assert!((total - want).abs() <= 1e-6 * want, "{total} vs {want}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn transform_is_real(
        c in (-0.5f64..0.5, -0.5f64..0.5),
        sigma in 0.6f64..1.1,
        k in (-1.5f64..1.5, -1.5f64..1.5),
        pt in (-1.5f64..1.5, -1.5f64..1.5, -1.5f64..1.5, -1.5f64..1.5),
    ) {
        let params = NCParameters::new(0.2, 0.3, 1.0).unwrap();
        let psi = GridFunction::sample((-8.0, -8.0), (8.0, 8.0), 49, 49, |a, b| {
            let r2 = (a - c.0).powi(2) + (b - c.1).powi(2);
            Complex64::from_polar((-r2 / (2.0 * sigma * sigma)).exp(), k.0 * a + k.1 * b + 0.3 * a * b)
        }).unwrap();
        let coords = ChainCoordinates::from_point(&PhasePoint4::new(pt.0, pt.1, pt.2, pt.3), &params);
        prop_assert!(wigner_transform_lambda(&psi, &coords, &params).is_ok());
    }

    #[test]
    fn chain_map_carries_the_hamiltonian(seed in any::<u64>(), pt in (-2.0f64..2.0, -2.0f64..2.0, -2.0f64..2.0, -2.0f64..2.0)) {
        let p = common::corpus(seed, 1)[0];
        let sol = OscillatorSolution::solve(&p).unwrap();
        let pt = PhasePoint4::new(pt.0, pt.1, pt.2, pt.3);
        let classical = classical_hamiltonian(&pt, &sol);
        let (lambda, eta) = lambda_eta(&pt, p.nc());
        let symbolic = lambda_form_coefficients(&hamiltonian_lambda_form(&p)).unwrap();
        let (d, jacobian) = chain_map(&pt, &sol).unwrap();
        let scale = classical.abs().max(1e-12);
        prop_assert!((sol.reduced.evaluate(lambda, eta) - classical).abs() <= 1e-10 * scale);
        prop_assert!((symbolic.evaluate(lambda, eta) - classical).abs() <= 1e-10 * scale);
        prop_assert!((d.h1 + d.h2 - classical).abs() <= 1e-10 * scale);
        let t = p.nc().theta();
        let hbar = p.nc().hbar();
        prop_assert!((jacobian.abs() - 1.0 / (hbar * hbar * (1.0 - t * t))).abs() <= 1e-10 * jacobian.abs());
    }

    #[test]
    fn delta_offsets_are_scaled_eigenvalues(a in -3.0f64..3.0, b in -3.0f64..3.0, mu in 0.01f64..0.9, nu in 0.01f64..0.9) {
        let params = NCParameters::new(mu, nu, 1.0).unwrap();
        let l = LambdaLabel::new(a, b);
        let (r, p) = l.eigenvalues(&params);
        let d = wigner_entangled_delta(l.into(), &params);
        prop_assert!((d.constraints[0].offset - SQRT_2 * r).abs() <= 1e-14 * r.abs().max(1.0));
        prop_assert!((d.constraints[1].offset - SQRT_2 * p).abs() <= 1e-14 * p.abs().max(1.0));
        let x = XiLabel::new(a, b);
        let (q, k) = x.eigenvalues(&params);
        let d = wigner_entangled_delta(x.into(), &params);
        prop_assert!((d.constraints[0].offset - SQRT_2 * q).abs() <= 1e-14 * q.abs().max(1.0));
        prop_assert!((d.constraints[1].offset - SQRT_2 * k).abs() <= 1e-14 * k.abs().max(1.0));
    }
}

#[test]
fn coarse_phase_space_grid_reproduces_the_normalization() {
    let p = common::reference_params();
    let sol = OscillatorSolution::solve(&p).unwrap();
    let (_, jacobian) = chain_map(&PhasePoint4::default(), &sol).unwrap();
    let (n, half) = (17, 4.0);
    let h = 2.0 * half / (n - 1) as f64;
    let axis: Vec<f64> = (0..n).map(|i| -half + i as f64 * h).collect();
    let mut total = 0.0;
    for &x in &axis {
        for &y in &axis {
            for &px in &axis {
                for &py in &axis {
                    total += wigner_oscillator(&sol, 0, 0, &PhasePoint4::new(x, y, px, py)).unwrap();
                }
            }
        }
    }
    let grid = total * h.powi(4) * jacobian.abs() / (2.0 * PI).powi(2);
    let quadrature = wigner_normalization(&sol, 0, 0);
    assert!((grid - quadrature).abs() <= 1e-2 * quadrature, "{grid} vs {quadrature}");
}
