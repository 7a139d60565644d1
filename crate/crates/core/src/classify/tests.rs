use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use super::*;
use crate::arith::rat;
use crate::orbit::theta;

fn ip(cs: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64s(cs)
}

fn ra(n: i64) -> RealAlgebraic {
    RealAlgebraic::from_int(n)
}

fn sorted(mut v: Vec<IntPolynomial>) -> Vec<Vec<BigInt>> {
    let mut out: Vec<Vec<BigInt>> = v.drain(..).map(|p| p.coeffs().to_vec()).collect();
    out.sort();
    out
}

#[test]
fn totally_real_examples() {
    assert!(totally_real_test(&ip(&[2, 4, 1])));
    assert!(!totally_real_test(&ip(&[1, 0, 1])));
    assert!(!totally_real_test(&ip(&[1, -2, 1])));
}

#[test]
fn shift_examples() {
    assert_eq!(kronecker_shift(&theta(&Rational::one()).theta, &ra(0)).unwrap(), BigInt::from(-4));
    assert_eq!(kronecker_shift(&ra(-2), &RealAlgebraic::from_rational(rat(1, 4))).unwrap(), BigInt::from(-2));
    assert_eq!(kronecker_shift(&RealAlgebraic::from_rational(rat(-1, 2)), &ra(4)), Err(Error::NotKroneckerReducible));
}

#[test]
fn candidates_for_alpha_one_interval() {
    let a = theta(&Rational::one()).theta;
    let c = enumerate_candidates(&a, &ra(0), 12).unwrap();
    for p in [ip(&[0, 1]), ip(&[1, 1]), ip(&[2, 1]), ip(&[3, 1]), ip(&[2, 4, 1])] {
        assert!(c.contains(&p), "{p}");
    }
    assert!(!c.contains(&ip(&[4, 1])));
    // seven irreducible factors (n = 1, 3, 4, 6, 7, 8, 10), total degree 10
    assert!(c.contains(&ip(&[1, 3, 1])));
    assert!(c.contains(&ip(&[1, 6, 5, 1])));
    assert_eq!(c.len(), 127);
}

#[test]
fn candidates_small_intervals() {
    let half = RealAlgebraic::from_rational(rat(1, 2));
    assert_eq!(enumerate_candidates(&half.neg(), &half, 2).unwrap(), vec![ip(&[0, 1])]);
}

/// Monic integer polynomials of degree `d` with every root in `[-m, 0]`,
/// found by scanning coefficient boxes.
fn brute_force(d: usize, a: &RealAlgebraic, m: i64) -> Vec<IntPolynomial> {
    let bounds: Vec<i64> = (0..d).map(|k| binom(d, k) * m.pow((d - k) as u32)).collect();
    let mut out = Vec::new();
    let mut cs = vec![0i64; d];
    loop {
        let mut full: Vec<i64> = cs.clone();
        full.push(1);
        let p = ip(&full);
        // roots <= 0 force nonnegative coefficients (already so), roots >= -m
        // force p(X - m) to alternate in sign
        let q = p.compose(&ip(&[-m, 1]));
        let alternates = q.coeffs().iter().enumerate().all(|(k, c)| c.is_zero() || (c.is_positive() == (d - k).is_multiple_of(2)));
        if alternates && totally_real_test(&p) && count_roots_closed(&p, a, &ra(0)).unwrap() == d {
            out.push(p);
        }
        let mut i = 0;
        loop {
            if i == d {
                return out;
            }
            if cs[i] < bounds[i] {
                cs[i] += 1;
                break;
            }
            cs[i] = 0;
            i += 1;
        }
    }
}

fn binom(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

#[test]
fn enumeration_complete_up_to_cubics() {
    for a in [ra(-4), theta(&Rational::one()).theta] {
        let listed: Vec<IntPolynomial> = enumerate_candidates(&a, &ra(0), 4).unwrap();
        let mut brute = Vec::new();
        for d in 1..=3 {
            brute.extend(brute_force(d, &a, 4));
        }
        assert_eq!(sorted(listed), sorted(brute));
    }
}

#[test]
fn round_trip_for_shifted_factors() {
    let s = BigInt::from(-2);
    for n in 3..=200u32 {
        let p = shifted_chebyshev_minpoly(n).unwrap();
        if p.deg() > 11 {
            continue;
        }
        assert!(totally_real_test(&p));
        let q = kronecker_transform(&p, &s);
        assert_eq!(cyclotomic_factorization(&q), Some(vec![n]), "n={n}");
    }
}

#[test]
fn classify_alpha_one() {
    let res = classify_totally_real_prep(&Rational::one()).unwrap();
    let polys = sorted(res.parameters.iter().map(|p| p.minpoly.clone()).collect());
    assert_eq!(polys, sorted(vec![ip(&[0, 1]), ip(&[1, 1]), ip(&[2, 1]), ip(&[3, 1]), ip(&[2, 4, 1])]));
    let roots: Vec<f64> = res.accepted_roots().iter().map(|r| r.to_f64()).collect();
    let s2 = core::f64::consts::SQRT_2;
    let want = [-2.0 - s2, -3.0, -2.0, -1.0, -2.0 + s2, 0.0];
    assert_eq!(roots.len(), 6);
    for (r, w) in roots.iter().zip(want) {
        assert!((r - w).abs() < 1e-12);
    }
    assert!(res.parameters.iter().all(|p| p.cross_checked && p.m >= 1));
    assert_eq!(res.accepted.len() + res.rejected.len(), res.candidates_considered.len());
    let escaping: Vec<&IntPolynomial> = res
        .rejected
        .iter()
        .filter(|r| r.reason != RejectionReason::OutsideInterval)
        .map(|r| &r.poly)
        .filter(|p| res.candidates_considered.contains(p) && [ip(&[1, 3, 1]), ip(&[1, 6, 5, 1])].contains(p))
        .collect();
    assert_eq!(escaping.len(), 2);
    assert_eq!(res.accepted.len(), 31);
    assert!(res.rejected.iter().any(|r| r.poly == ip(&[4, 1])));
    assert!(!res.notes.is_empty());

    let neg = classify_totally_real_prep(&-Rational::one()).unwrap();
    assert!(res.same_classification(&neg));
}

#[test]
fn classify_alpha_zero() {
    let res = classify_totally_real_prep(&Rational::zero()).unwrap();
    let roots: Vec<RealAlgebraic> = res.accepted_roots();
    assert_eq!(roots, vec![ra(-2), ra(-1), ra(0)]);
    assert!(res.notes.is_empty());
}

#[test]
fn witnesses_hold_in_floating_point() {
    let res = classify_totally_real_prep(&Rational::one()).unwrap();
    for p in &res.parameters {
        for r in &p.roots {
            let c = r.to_f64();
            let mut orbit = vec![1.0f64];
            for _ in 0..p.n {
                let z = *orbit.last().unwrap();
                orbit.push(z * z + c);
            }
            assert!((orbit[p.m as usize] - orbit[p.n as usize]).abs() < 1e-9);
        }
    }
}

#[test]
fn unsupported_alpha() {
    assert_eq!(classify_totally_real_prep(&rat(1, 2)), Err(Error::UnsupportedAlpha));
    assert_eq!(classify_totally_real_prep(&rat(2, 1)), Err(Error::UnsupportedAlpha));
}
