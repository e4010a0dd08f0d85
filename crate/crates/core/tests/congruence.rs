use proptest::prelude::*;
use qcong::congruence::{congruent, coprime_certify, divisible, invert, reduce, residual};
use qcong::cyclotomic::{cyclotomic, CyclotomicModulus};
use qcong::poly::{BiPoly, LaurentPoly, RatExpr};
use qcong::Error;

fn int_laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-5i64..=12, -6i64..=6), 0..7).prop_map(LaurentPoly::from_terms)
}

fn modulus() -> impl Strategy<Value = (u64, u32)> {
    (2u64..=12, 1u32..=3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1100))]

    #[test]
    fn reduction_is_a_ring_homomorphism(a in int_laurent(), b in int_laurent(), (n, m) in modulus()) {
        let (ra, rb) = (reduce(&a, n, m).unwrap(), reduce(&b, n, m).unwrap());
        prop_assert_eq!(reduce(&(&a * &b), n, m).unwrap(), &ra * &rb);
        prop_assert_eq!(reduce(&(&a + &b), n, m).unwrap(), &ra + &rb);
        prop_assert_eq!(reduce(&(&a - &b), n, m).unwrap(), &ra - &rb);
        let bound = CyclotomicModulus::new(n, m).unwrap().degree();
        prop_assert!(ra.rep().valuation().is_none_or(|v| v >= 0));
        prop_assert!(ra.rep().degree().is_none_or(|d| d < bound));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn inverse_when_coprime(a in int_laurent(), (n, m) in modulus()) {
        prop_assume!(!a.is_zero());
        match invert(&a, n, m) {
            Ok(inv) => {
                prop_assert!(coprime_certify(&a, n).unwrap());
                prop_assert!((&reduce(&a, n, m).unwrap() * &inv).rep().is_one());
            }
            Err(Error::NotInvertible { gcd, .. }) => {
                prop_assert!(!coprime_certify(&a, n).unwrap());
                prop_assert!(!gcd.is_one());
            }
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn adding_multiples_of_the_modulus(a in int_laurent(), g in int_laurent(), (n, m) in modulus()) {
        let cm = CyclotomicModulus::new(n, m).unwrap();
        let b = &a + &(&g * &cm.modulus);
        prop_assert!(congruent(&RatExpr::from_poly(a.clone()), &RatExpr::from_poly(b.clone()), n, m).unwrap());
        prop_assert!(residual(&RatExpr::from_poly(a), &RatExpr::from_poly(b), n, m).unwrap().is_zero());
    }

    #[test]
    fn cross_multiplication_is_scale_invariant(a in int_laurent(), b in int_laurent(), u in int_laurent(), n in 2u64..=12) {
        prop_assume!(!b.is_zero() && !u.is_zero());
        prop_assume!(coprime_certify(&b, n).unwrap() && coprime_certify(&u, n).unwrap());
        let x = RatExpr::new(a.clone(), b.clone()).unwrap();
        let y = RatExpr::new(&a * &u, &b * &u).unwrap();
        prop_assert!(congruent(&x, &y, n, 2).unwrap());
    }

    #[test]
    fn ratexpr_congruence_matches_residue_arithmetic(a in int_laurent(), b in int_laurent(), c in int_laurent(), d in int_laurent(), (n, m) in modulus()) {
        prop_assume!(!b.is_zero() && !d.is_zero());
        prop_assume!(coprime_certify(&b, n).unwrap() && coprime_certify(&d, n).unwrap());
        let lhs = RatExpr::new(a.clone(), b.clone()).unwrap();
        let rhs = RatExpr::new(c.clone(), d.clone()).unwrap();
        let via_residues = &reduce(&a, n, m).unwrap() * &invert(&b, n, m).unwrap()
            == &reduce(&c, n, m).unwrap() * &invert(&d, n, m).unwrap();
        prop_assert_eq!(congruent(&lhs, &rhs, n, m).unwrap(), via_residues);
    }

    #[test]
    fn constant_offset_breaks_congruence(a in int_laurent(), c in prop::sample::select(vec![-7i64, -3, -1, 1, 2, 5]), (n, m) in modulus()) {
        let phi = cyclotomic(n).unwrap();
        let b = &a + &phi.scale(&c.into());
        // a + c Phi_n agrees with a modulo Phi_n but never modulo Phi_n^2
        prop_assert!(congruent(&RatExpr::from_poly(a.clone()), &RatExpr::from_poly(b.clone()), n, 1).unwrap());
        let expect = m == 1;
        prop_assert_eq!(congruent(&RatExpr::from_poly(a), &RatExpr::from_poly(b), n, m).unwrap(), expect);
    }
}

#[test]
fn bivariate_congruence_is_coefficientwise() {
    let phi = cyclotomic(5).unwrap();
    let sq = &phi * &phi;
    let lhs = BiPoly::from_coeffs([(0, LaurentPoly::one()), (2, LaurentPoly::q_pow(3))]);
    let good = &lhs + &BiPoly::from_coeffs([(1, sq.clone()), (2, sq.shift(-4))]);
    let bad = &lhs + &BiPoly::from_coeffs([(1, sq), (2, phi)]);
    assert!(congruent(&RatExpr::from_poly(lhs.clone()), &RatExpr::from_poly(good), 5, 2).unwrap());
    assert!(!congruent(&RatExpr::from_poly(lhs.clone()), &RatExpr::from_poly(bad.clone()), 5, 2).unwrap());
    let res = residual(&RatExpr::from_poly(lhs), &RatExpr::from_poly(bad), 5, 2).unwrap();
    assert!(res.coeff(1).is_zero() && !res.coeff(2).is_zero());
}

#[test]
fn non_coprime_denominator_rejected() {
    let phi = cyclotomic(6).unwrap();
    let x = RatExpr::new(LaurentPoly::one(), &phi * &LaurentPoly::from_i64_coeffs(&[1, 1, 1, 1])).unwrap();
    let y = RatExpr::from_poly(LaurentPoly::one());
    assert!(matches!(congruent(&x, &y, 6, 2), Err(Error::NonCoprimeDenominator { .. })));
}

#[test]
fn q_is_a_unit_of_order_n() {
    for n in 2..=20u64 {
        for m in 1..=3 {
            // q^n = 1 mod Phi_n, but only mod Phi_n^1
            let holds = divisible(&(LaurentPoly::q_pow(n as i64) - LaurentPoly::one()), n, m).unwrap();
            assert_eq!(holds, m == 1, "n={n} m={m}");
        }
        let inv = invert(&LaurentPoly::q_pow(1), n, 2).unwrap();
        assert_eq!(inv, reduce(&LaurentPoly::q_pow(-1), n, 2).unwrap());
    }
}
