use edgedeck_core::algebra::{
    delta_polynomial, lk_polynomial, perturbed_polynomials, verify_deck_sum,
    verify_delta_polynomial, verify_inversion, verify_lk_polynomial, verify_recursion, Identity,
};
use edgedeck_core::arith::{binomial, pair_count};
use edgedeck_core::{Engine, OperatorKind, OperatorPolynomial};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

#[test]
fn named_examples_hold() {
    let mut e = Engine::new();
    let d = e.operator(OperatorKind::Delta, 3, 2, 1).unwrap();
    let p1 = e.operator(OperatorKind::Perturbed, 3, 2, 1).unwrap();
    assert_eq!(d.entries.get(0, 0), &BigInt::from(4));
    assert_eq!(p1.entries.get(0, 0), &BigInt::from(2));
    assert!(verify_deck_sum(&mut e, 3, 2, 1).unwrap().holds());
    assert!(verify_deck_sum(&mut e, 4, 3, 2).unwrap().holds());
    assert!(verify_recursion(&mut e, 3, 2, 1).unwrap().holds());
    assert!(verify_recursion(&mut e, 4, 3, 1).unwrap().holds());
    assert!(verify_recursion(&mut e, 4, 2, 2).unwrap().holds());
    assert!(verify_inversion(&mut e, 3, 3, 3).unwrap().holds());
    assert!(verify_inversion(&mut e, 4, 4, 2).unwrap().holds());
    assert!(verify_delta_polynomial(&mut e, 4, 4, 3).unwrap().holds());
    assert!(verify_lk_polynomial(&mut e, 4, 3, 2).unwrap().holds());
    for m in 0..=6 {
        let r = verify_deck_sum(&mut e, 4, m, 0).unwrap();
        assert!(r.holds());
        assert_eq!(r.lhs_digest, r.rhs_digest);
    }
}

#[test]
fn all_identities_hold_up_to_five_vertices() {
    let mut e = Engine::new();
    for n in 1..=5 {
        for m in 0..=pair_count(n) {
            for id in Identity::ALL {
                for index in 0..=m.min(4) {
                    if id.applies(n, m, index) {
                        let r = id.check(&mut e, n, m, index).unwrap();
                        assert!(
                            r.holds(),
                            "{id} failed at n = {n}, m = {m}, index = {index}: {:?}",
                            r.verdict
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn symbolic_routes_agree() {
    // Σ_k C(m-k, i-k) (L_k + (-1)^k C(m, k)) = p_i, and the constants cancel
    for big_n in 1..=21 {
        for m in 0..=big_n {
            for i in 1..=m.min(6) {
                let mut sum = OperatorPolynomial::zero();
                let mut constants = BigInt::zero();
                for k in 0..=i {
                    let w = binomial(m as i64 - k as i64, i as i64 - k as i64);
                    let sign_c = if k % 2 == 0 {
                        binomial(m as i64, k as i64)
                    } else {
                        -binomial(m as i64, k as i64)
                    };
                    let lk = lk_polynomial(big_n, m, k).unwrap();
                    assert!(lk.coeff(0).is_zero());
                    let dk = lk.add(&OperatorPolynomial::constant(BigRational::from_integer(
                        sign_c.clone(),
                    )));
                    sum = sum.add(&dk.scale(&BigRational::from_integer(w.clone())));
                    constants += w * sign_c;
                }
                assert!(constants.is_zero());
                assert_eq!(sum, delta_polynomial(big_n, m, i).unwrap());
            }
        }
    }
}

#[test]
fn perturbed_polynomial_constants_follow_the_binomial_pattern() {
    for big_n in 1..=15 {
        for m in 0..=big_n {
            let ds = perturbed_polynomials(big_n, m, m.min(8)).unwrap();
            for (k, d) in ds.iter().enumerate() {
                let want = binomial(m as i64, k as i64) * if k % 2 == 0 { 1 } else { -1 };
                assert_eq!(d.coeff(0), BigRational::from_integer(want));
            }
        }
    }
}

#[test]
fn deep_perturbed_deck_vanishes_above_half_density() {
    let mut e = Engine::new();
    for n in 2..=5 {
        let big_n = pair_count(n);
        for m in (big_n / 2 + 1)..=big_n {
            assert!(e
                .operator(OperatorKind::Perturbed, n, m, m)
                .unwrap()
                .entries
                .is_zero());
        }
    }
}
