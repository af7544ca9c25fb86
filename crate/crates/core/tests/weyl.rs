use ncphase::weyl::{apply_weyl, PolynomialFunction, WeylMonomial, WeylPolynomial};
use num_complex::Complex64;
use proptest::prelude::*;

fn polynomial() -> impl Strategy<Value = WeylPolynomial> {
    let term = (0u32..=3, 0u32..=3, 0u32..=3, 0u32..=3, -3i32..=3, -3i32..=3).prop_filter_map(
        "degree at most 3",
        |(l1, l2, d1, d2, re, im)| {
            let m = WeylMonomial::new(l1, l2, d1, d2);
            (m.degree() <= 3).then(|| WeylPolynomial::monomial(m, Complex64::new(f64::from(re), f64::from(im))))
        },
    );
    prop::collection::vec(term, 1..4).prop_map(|ts| ts.iter().fold(WeylPolynomial::zero(), |acc, t| &acc + t))
}

fn function() -> impl Strategy<Value = PolynomialFunction> {
    prop::collection::vec(((0u32..=4, 0u32..=4), -3i32..=3), 1..5)
        .prop_map(|ts| PolynomialFunction::from_terms(ts.into_iter().map(|(pq, c)| (pq, Complex64::new(f64::from(c), 0.0)))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_is_associative(a in polynomial(), b in polynomial(), c in polynomial()) {
        let left = &(&a * &b) * &c;
        let right = &a * &(&b * &c);
        prop_assert!((&left - &right).is_zero(), "{left} vs {right}");
    }

    #[test]
    fn product_distributes(a in polynomial(), b in polynomial(), c in polynomial()) {
        let left = &a * &(&b + &c);
        let right = &(&a * &b) + &(&a * &c);
        prop_assert!((&left - &right).is_zero());
    }

    #[test]
    fn jacobi_identity(a in polynomial(), b in polynomial(), c in polynomial()) {
        let sum = &(&a.commutator(&b.commutator(&c)) + &b.commutator(&c.commutator(&a))) + &c.commutator(&a.commutator(&b));
        prop_assert!(sum.is_zero(), "{sum}");
    }

    #[test]
    fn action_is_a_representation(a in polynomial(), b in polynomial(), f in function()) {
        let composed = apply_weyl(&a, &apply_weyl(&b, &f));
        let product = apply_weyl(&(&a * &b), &f);
        prop_assert!(composed.distance(&product) == 0.0);
    }
}

#[test]
fn canonical_commutators() {
    let one = WeylPolynomial::one();
    assert_eq!(WeylPolynomial::d1().commutator(&WeylPolynomial::lambda1()), one);
    assert!(WeylPolynomial::d1().commutator(&WeylPolynomial::lambda2()).is_zero());
    let d2_sq = &WeylPolynomial::d2() * &WeylPolynomial::d2();
    // [∂2², λ2] = 2∂2
    assert_eq!(d2_sq.commutator(&WeylPolynomial::lambda2()), WeylPolynomial::d2().scale_real(2.0));
}
