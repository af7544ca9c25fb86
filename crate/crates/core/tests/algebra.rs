use ncphase::algebra::{build_mode_operators, build_phase_operators, deformed_algebra_residual, phase_space_residual};
use ncphase::fock::{commutator, projected_residual, FockBasis, OperatorMatrix};
use ncphase::lambda_rep::{lambda_rep_operator, xi_rep_operator};
use ncphase::weyl::WeylMonomial;
use ncphase::{NCParameters, Observable};
use proptest::prelude::*;

#[test]
fn symbolic_and_matrix_commutators_agree() {
    let params = NCParameters::new(0.3, 0.12, 1.0).unwrap();
    let modes = build_mode_operators(&params, FockBasis::new(18).unwrap()).unwrap();
    let ops = build_phase_operators(&params, &modes).unwrap();
    let identity = OperatorMatrix::identity(modes.basis());
    for rep in [lambda_rep_operator, xi_rep_operator] {
        for (u, v) in Observable::pairs() {
            let symbolic = rep(u, &params).commutator(&rep(v, &params));
            assert!(symbolic.len() <= 1, "{symbolic}");
            let scalar = symbolic.coefficient(&WeylMonomial::ONE);
            let matrix = commutator(ops.get(u), ops.get(v)).unwrap();
            let r = projected_residual(&matrix, &identity.scale(scalar), 2).unwrap();
            assert!(r <= 1e-9, "{}/{}: {r}", u.name(), v.name());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn algebra_holds_for_random_deformations(mu in 0.01f64..0.9, nu in 0.01f64..0.9) {
        let params = NCParameters::new(mu, nu, 1.0).unwrap();
        let modes = build_mode_operators(&params, FockBasis::new(10).unwrap()).unwrap();
        let ops = build_phase_operators(&params, &modes).unwrap();
        prop_assert!(phase_space_residual(&params, &ops, 2).unwrap() <= 1e-9);
        prop_assert!(deformed_algebra_residual(&modes, 1).unwrap() <= 1e-12);
    }
}
