use ncphase::algebra::{build_mode_operators, build_phase_operators, ModeOperators, PhaseOperators};
use ncphase::fock::FockBasis;
use ncphase::states::{
    coherent_overlap, coherent_state_vector, lambda_eigen_residual, lambda_xi_overlap, xi_eigen_residual,
    CoherentLabel, LambdaLabel, XiLabel,
};
use ncphase::NCParameters;
use num_complex::Complex64;
use proptest::prelude::*;

fn setup(theta: f64, cutoff: usize) -> (NCParameters, ModeOperators, PhaseOperators) {
    let params = NCParameters::new(theta, theta, 1.0).unwrap();
    let modes = build_mode_operators(&params, FockBasis::new(cutoff).unwrap()).unwrap();
    let ops = build_phase_operators(&params, &modes).unwrap();
    (params, modes, ops)
}

fn amplitude(bound: f64) -> impl Strategy<Value = Complex64> {
    (0.0..bound, 0.0..std::f64::consts::TAU).prop_map(|(r, phi)| Complex64::from_polar(r, phi))
}

fn coherent_label(bound: f64) -> impl Strategy<Value = CoherentLabel> {
    (amplitude(bound), amplitude(bound)).prop_map(|(a, b)| CoherentLabel::new(a, b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn overlap_is_hermitian_and_normalized(l1 in coherent_label(2.0), l2 in coherent_label(2.0), theta in 0.01f64..0.95) {
        let z12 = coherent_overlap(&l1, &l2, theta).unwrap();
        let z21 = coherent_overlap(&l2, &l1, theta).unwrap();
        prop_assert!((z12 - z21.conj()).norm() <= 1e-14);
        prop_assert!((coherent_overlap(&l1, &l1, theta).unwrap() - 1.0).norm() <= 1e-14);
        prop_assert!(z12.norm() <= 1.0 + 1e-14);
    }

    #[test]
    fn lambda_xi_overlap_has_constant_modulus(
        l in (-5.0f64..5.0, -5.0f64..5.0),
        x in (-5.0f64..5.0, -5.0f64..5.0),
        theta in 0.01f64..0.99,
    ) {
        let z = lambda_xi_overlap(&LambdaLabel::new(l.0, l.1), &XiLabel::new(x.0, x.1), theta).unwrap();
        prop_assert!((z.norm() - 0.5).abs() <= 1e-15);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn truncated_coherent_states_match_closed_overlap(l1 in coherent_label(0.7), l2 in coherent_label(0.7)) {
        let (params, modes, _) = setup(0.25, 24);
        let v1 = coherent_state_vector(&l1, &modes).unwrap();
        let v2 = coherent_state_vector(&l2, &modes).unwrap();
        let closed = coherent_overlap(&l1, &l2, params.theta()).unwrap();
        prop_assert!((v1.inner(&v2).unwrap() - closed).norm() <= 1e-8);
    }

    #[test]
    fn entangled_states_are_eigenstates(r in 0.0f64..0.5, phi in 0.0..std::f64::consts::TAU) {
        let (params, modes, ops) = setup(0.25, 24);
        let (a, b) = (r * phi.cos(), r * phi.sin());
        prop_assert!(lambda_eigen_residual(&LambdaLabel::new(a, b), &params, &modes, &ops, 4).unwrap() <= 1e-3);
        prop_assert!(xi_eigen_residual(&XiLabel::new(a, b), &params, &modes, &ops, 4).unwrap() <= 1e-3);
    }
}

#[test]
fn vacuum_overlap_modulus_keeps_the_deformation_term() {
    let theta = 0.4;
    let zero = CoherentLabel::new(Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
    let (alpha, beta) = (Complex64::new(0.3, 0.2), Complex64::new(-0.1, 0.5));
    let z = coherent_overlap(&zero, &CoherentLabel::new(alpha, beta), theta).unwrap();
    let expected = (-0.5 * (alpha.norm_sqr() + beta.norm_sqr()) - theta * (beta.conj() * alpha).im).exp();
    assert!((z.norm() - expected).abs() <= 1e-15);
    assert!((z.norm() - (-0.5 * (alpha.norm_sqr() + beta.norm_sqr())).exp()).abs() > 1e-3);
}
