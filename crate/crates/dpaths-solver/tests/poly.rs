use dpaths_solver::modular_interp::interpolate_mod;
use dpaths_solver::{interpolate, PolyCoeffs, SolveError};
use num_bigint::BigInt;
use proptest::prelude::*;

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

#[test]
fn square_is_recovered() {
    let points: Vec<(u64, BigInt)> = (0..3u64).map(|s| (s, BigInt::from(s * s))).collect();
    assert_eq!(interpolate(&points).unwrap().coeffs, big(&[0, 0, 1]));
}

#[test]
fn zero_values_give_the_zero_polynomial() {
    let points: Vec<(u64, BigInt)> = (0..5u64).map(|s| (s, BigInt::from(0))).collect();
    let p = interpolate(&points).unwrap();
    assert!(p.is_zero());
    assert_eq!(p.degree(), None);
}

#[test]
fn non_consecutive_points_are_rejected() {
    let points = vec![(0u64, BigInt::from(1)), (2, BigInt::from(3))];
    assert_eq!(interpolate(&points), Err(SolveError::InterpolationPoints));
}

#[test]
fn non_polynomial_data_is_flagged() {
    // 0, 0, 1 is s(s-1)/2, which has non-integer coefficients.
    let points = vec![
        (0u64, BigInt::from(0)),
        (1, BigInt::from(0)),
        (2, BigInt::from(1)),
    ];
    assert!(matches!(
        interpolate(&points),
        Err(SolveError::NonIntegerCoefficient { .. })
    ));
}

proptest! {
    #[test]
    fn round_trip(coeffs in proptest::collection::vec(-1000i64..1000, 1..12)) {
        let p = PolyCoeffs::trimmed(big(&coeffs));
        let points: Vec<(u64, BigInt)> = (0..coeffs.len() as u64).map(|s| (s, p.eval(s))).collect();
        prop_assert_eq!(interpolate(&points).unwrap(), p);
    }

    #[test]
    fn modular_round_trip(coeffs in proptest::collection::vec(0u64..1_000_000, 1..12)) {
        let prime = 2_147_483_647u64;
        let values: Vec<u64> = (0..coeffs.len() as u64)
            .map(|s| coeffs.iter().rev().fold(0u64, |acc, &c| (acc * s + c) % prime))
            .collect();
        prop_assert_eq!(interpolate_mod(&values, prime), coeffs);
    }

    #[test]
    fn product_evaluates_pointwise(a in proptest::collection::vec(-50i64..50, 0..6), b in proptest::collection::vec(-50i64..50, 0..6), s in 0u64..9) {
        let pa = PolyCoeffs::trimmed(big(&a));
        let pb = PolyCoeffs::trimmed(big(&b));
        prop_assert_eq!(pa.mul(&pb).eval(s), pa.eval(s) * pb.eval(s));
    }
}
