//! The evaluator against oracles that do not share its code path.

mod common;

use num_bigint::BigInt;
use num_rational::BigRational;

use tvf::numeric::{Evaluator, PrecisionCtx};
use tvf::{MtvIndex, SignedComposition};

fn ev(digits: u32) -> Evaluator {
    Evaluator::new(PrecisionCtx::new(digits).unwrap()).unwrap()
}

fn euler(e: &Evaluator, text: &str) -> BigRational {
    let c: SignedComposition = text.parse().unwrap();
    e.euler(&c).unwrap().value.to_rational()
}

#[test]
fn bernoulli_numbers() {
    let b = common::bernoulli(12);
    let r = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
    assert_eq!(b[1], r(-1, 2));
    assert_eq!(b[2], r(1, 6));
    assert_eq!(b[4], r(-1, 30));
    assert_eq!(b[12], r(-691, 2730));
    assert!(b[3..].iter().step_by(2).all(|x| *x == r(0, 1)));
}

#[test]
fn single_zeta_values_match_euler_maclaurin() {
    let e = ev(50);
    for s in 2..=8 {
        let (want, bound) = common::zeta_euler_maclaurin(s, 120, 40);
        assert!(bound < common::ten_to_minus(55));
        assert!(
            common::agree(&euler(&e, &s.to_string()), &want, 50),
            "z({s})"
        );
    }
}

#[test]
fn alternating_values_match_cvz() {
    let e = ev(50);
    for s in 1..=5 {
        let (eta, bound) = common::alternating_cvz(s, 80);
        assert!(bound < common::ten_to_minus(55));
        assert!(
            common::agree(&euler(&e, &format!("{s}b")), &-eta, 50),
            "z({s}b)"
        );
    }
}

#[test]
fn depth_two_against_single_values() {
    let e = ev(40);
    let (z3, _) = common::zeta_euler_maclaurin(3, 100, 40);
    let (z4, _) = common::zeta_euler_maclaurin(4, 100, 40);
    assert!(common::agree(&euler(&e, "2,1"), &z3, 40));
    let four: BigRational = euler(&e, "3,1") * BigRational::from_integer(BigInt::from(4));
    assert!(common::agree(&four, &z4, 40));
    // ζ(s)² = 2ζ(s,s) + ζ(2s)
    let (z2, _) = common::zeta_euler_maclaurin(2, 100, 40);
    let lhs = &z2 * &z2;
    let rhs = euler(&e, "2,2") * BigRational::from_integer(BigInt::from(2)) + &z4;
    assert!(common::agree(&lhs, &rhs, 38));
}

#[test]
fn t211_matches_direct_summation() {
    let t = MtvIndex::new(vec![2, 1, 1]).unwrap();
    let got = ev(20).mtv(&t).unwrap().to_f64();
    let direct = common::t211_by_direct_summation();
    assert!((got - direct).abs() < 1e-12, "{got} vs {direct}");
}

#[test]
fn partial_sums_approach_the_value() {
    let e = ev(20);
    let c: SignedComposition = "3,1b".parse().unwrap();
    let full = e.euler(&c).unwrap().to_f64();
    let part = tvf::numeric::oracle_partial_sum(&c, 400);
    let part = num_traits::ToPrimitive::to_f64(&part).unwrap();
    // the tail is O(log M / M^2)
    assert!((full - part).abs() < 1e-4, "{full} vs {part}");
}
