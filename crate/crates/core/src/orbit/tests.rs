use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::arith::{rat, IntPolynomial, RatPolynomial};

fn ip(cs: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64s(cs)
}

fn rp(cs: &[(i64, i64)]) -> RatPolynomial {
    RatPolynomial::new(cs.iter().map(|&(n, d)| rat(n, d)).collect())
}

fn r(n: i64) -> Rational {
    rat(n, 1)
}

#[test]
fn psi_examples() {
    assert_eq!(psi(&r(1), 1).unwrap(), ip(&[1, 1]).to_rational());
    assert_eq!(psi(&r(1), 2).unwrap(), ip(&[1, 3, 1]).to_rational());
    assert_eq!(psi(&r(0), 3).unwrap(), ip(&[0, 1, 1, 2, 1]).to_rational());
    assert!(matches!(psi(&r(1), 15), Err(Error::DegreeOverflow { n: 15, cap: 14 })));
}

#[test]
fn psi_rational_alpha_matches_direct_recursion() {
    let a = rat(3, 2);
    let mut direct = RatPolynomial::new(vec![&a * &a, Rational::one()]);
    for n in 1..6u32 {
        assert_eq!(psi(&a, n).unwrap(), direct);
        assert!(direct.is_monic());
        assert_eq!(direct.deg(), 1 << (n - 1));
        direct = &direct.square() + &RatPolynomial::x();
    }
}

#[test]
fn prep_poly_examples() {
    assert_eq!(prep_poly(&r(0), 0, 2).unwrap(), ip(&[0, 1, 1]).to_rational());
    assert_eq!(prep_poly(&r(1), 0, 1).unwrap(), ip(&[0, 1]).to_rational());
    assert_eq!(prep_poly(&r(1), 1, 2).unwrap(), ip(&[0, 2, 1]).to_rational());
    assert!(prep_poly(&r(1), 2, 2).is_err());
}

#[test]
fn prep_poly_int_is_scaled_rational_form() {
    for a in [rat(3, 2), rat(-5, 3), r(2)] {
        for (m, n) in [(0, 1), (0, 3), (1, 3), (2, 4)] {
            let exact = prep_poly(&a, m, n).unwrap();
            let int = prep_poly_int(&a, m, n, DEFAULT_DEGREE_CAP).unwrap();
            assert_eq!(exact.to_primitive_int().normalized(), int);
        }
    }
}

#[test]
fn decide_rational_examples() {
    let rec = decide_rational(&r(1), &r(-3), 100);
    assert_eq!(rec.verdict, Verdict::Preperiodic { m: 0, n: 2 });
    assert_eq!(rec.values, vec![r(1), r(-2), r(1)]);
    assert_eq!(decide_rational(&r(1), &r(0), 100).verdict, Verdict::Preperiodic { m: 0, n: 1 });
    let rec = decide_rational(&r(1), &rat(1, 2), 100);
    assert!(rec.verdict.is_escaped());
    assert_eq!(rec.values[1], rat(3, 2));
}

#[test]
fn decide_rational_budget() {
    // 0 -> -1 -> 0 needs two steps
    assert_eq!(decide_rational(&r(0), &r(-1), 1).verdict, Verdict::BudgetExhausted);
    assert_eq!(decide_rational(&r(0), &r(-1), 2).verdict, Verdict::Preperiodic { m: 0, n: 2 });
}

#[test]
fn denominator_escape_is_detected() {
    // c = -3/4: 1 -> 1/4, whose square denominator 16 does not divide 4
    let rec = decide_rational(&r(1), &rat(-3, 4), 50);
    assert_eq!(rec.verdict, Verdict::Escaped { step: 1, kind: EscapeKind::Denominator });
    // c = -3/4 with alpha = 1/2: 1/2 -> -1/2 -> -1/2
    let rec = decide_rational(&rat(1, 2), &rat(-3, 4), 50);
    assert_eq!(rec.verdict, Verdict::Preperiodic { m: 1, n: 2 });
}

#[test]
fn repeat_horizon_is_finite_and_sufficient() {
    let h = repeat_horizon(&r(1), &rat(-3, 4));
    assert!(h > BigInt::from(4));
    let budget: usize = h.try_into().unwrap();
    for c in [rat(-3, 4), rat(-7, 4), r(-2), rat(-1, 4)] {
        assert_ne!(decide_rational(&r(1), &c, budget).verdict, Verdict::BudgetExhausted);
    }
}

#[test]
fn decide_algebraic_examples() {
    let d = decide_algebraic(&r(1), &ip(&[2, 4, 1])).unwrap();
    assert_eq!(d.roots.len(), 2);
    assert!(d.roots.iter().all(|v| v.verdict.is_preperiodic()));
    // 1 -> -1 - sqrt2 -> 1 + sqrt2 -> 1 + sqrt2 at c = -2 - sqrt2
    assert_eq!(d.factors[0].verdict, Verdict::Preperiodic { m: 2, n: 3 });

    let d = decide_algebraic(&r(1), &ip(&[3, 1])).unwrap();
    assert_eq!(d.roots[0].verdict, Verdict::Preperiodic { m: 0, n: 2 });

    let d = decide_algebraic(&r(1), &ip(&[-2, 0, 1])).unwrap();
    assert_eq!(d.roots.len(), 2);
    assert!(d.roots.iter().all(|v| v.verdict.is_escaped()));
    // the witness is the positive embedding
    match &d.roots[0].verdict {
        Verdict::Escaped { kind: EscapeKind::Archimedean { embedding, modulus_lower }, .. } => {
            assert_eq!(*embedding, 1);
            assert!(*modulus_lower > 3.41);
        }
        v => panic!("unexpected {v:?}"),
    }
}

#[test]
fn decide_algebraic_mixed_factors() {
    // X (X + 3) (X^2 - 2): two preperiodic factors, one escaping
    let p = &(&ip(&[0, 1]) * &ip(&[3, 1])) * &ip(&[-2, 0, 1]);
    let d = decide_algebraic(&r(1), &p).unwrap();
    assert_eq!(d.factors.len(), 3);
    let pre: Vec<bool> = d.roots.iter().map(|v| v.verdict.is_preperiodic()).collect();
    // roots -3, -sqrt2, 0, sqrt2
    assert_eq!(pre, vec![true, false, true, false]);
}

#[test]
fn decide_algebraic_rejects_bad_input() {
    assert!(matches!(decide_algebraic(&r(1), &ip(&[1, 0, 2])), Err(Error::NotAlgebraicInteger(_))));
    assert!(matches!(decide_algebraic(&r(1), &ip(&[1, 2, 1])), Err(Error::NotAlgebraicInteger(_))));
    assert!(matches!(decide_algebraic(&r(1), &ip(&[1, 0, 1])), Err(Error::NotTotallyReal)));
    assert!(decide_algebraic(&rat(1, 2), &ip(&[0, 1])).is_err());
}

#[test]
fn factoring() {
    let cubic = ip(&[1, -3, 0, 1]); // 2cos(2pi/9) family, irreducible
    let quad = ip(&[2, 4, 1]);
    let lin = ip(&[3, 1]);
    let p = &(&cubic * &quad) * &lin;
    let fs = factor_totally_real(&p).unwrap();
    assert_eq!(fs, vec![lin, quad, cubic.clone()]);
    assert_eq!(factor_totally_real(&cubic).unwrap(), vec![cubic]);
    // two quadratics of the same trace
    let a = ip(&[-1, 0, 1]);
    let b = ip(&[-2, 0, 1]);
    assert_eq!(factor_totally_real(&(&a * &b)).unwrap().len(), 3);
}

#[test]
fn theta_examples() {
    let t = theta(&r(0));
    assert_eq!(t.theta, RealAlgebraic::from_int(-2));
    assert_eq!(t.g, rp(&[(0, 1), (2, 1), (1, 1)]));
    assert!(t.verify());

    let t = theta(&r(1));
    assert_eq!(t.g, ip(&[2, 4, 1]).to_rational());
    assert_eq!(t.theta.minpoly(), &ip(&[2, 4, 1]));
    assert!(t.theta < RealAlgebraic::from_rational(rat(-3, 1)));
    assert!(t.verify());

    let t = theta(&rat(3, 2));
    assert_eq!(t.g, rp(&[(117, 16), (13, 2), (1, 1)]));
    assert!((t.theta.to_f64() - (-13.0 / 4.0 - libm::sqrt(13.0) / 2.0)).abs() < 1e-12);
    assert!(t.verify());
}

#[test]
fn escape_radius_examples() {
    assert_eq!(escape_radius(&r(0)), RealAlgebraic::from_int(2));
    let r1 = escape_radius(&r(1));
    assert_eq!(r1.minpoly(), &ip(&[2, -4, 1]));
    assert!((r1.to_f64() - (2.0 + core::f64::consts::SQRT_2)).abs() < 1e-14);
    assert_eq!(escape_radius(&rat(3, 4)), RealAlgebraic::from_rational(rat(45, 16)));
}

#[test]
fn real_slice_examples() {
    let s = real_slice(&r(0));
    let iv = &s.intervals()[0];
    assert_eq!(iv.left, RealAlgebraic::from_int(-2));
    assert_eq!(iv.right, RealAlgebraic::from_rational(rat(1, 4)));

    let s = real_slice(&r(1));
    let iv = &s.intervals()[0];
    assert_eq!(iv.left, theta(&r(1)).theta);
    assert_eq!(iv.right, RealAlgebraic::from_int(0));

    let s = real_slice(&rat(1, 2));
    let iv = &s.intervals()[0];
    let expect = RealAlgebraic::from_quadratic(&rat(-5, 4), &rat(-1, 2), &r(5)).unwrap();
    assert_eq!(iv.left, expect);
    assert_eq!(iv.right, RealAlgebraic::from_rational(rat(1, 4)));
    assert_eq!(real_slice_right(&rat(-3, 2)), rat(-3, 4));
}

#[test]
fn quotient_ring_arithmetic() {
    let ring = QuotientRing::new(ip(&[-2, 0, 1]).to_rational()).unwrap();
    let x = ring.generator();
    assert_eq!(ring.square(&x), ring.constant(r(2)));
    let y = ring.add(&x, &ring.constant(r(1)));
    // (1 + sqrt2)^2 = 3 + 2 sqrt2
    assert_eq!(ring.square(&y).coords(), &[r(3), r(2)]);
    assert!(QuotientRing::new(RatPolynomial::constant(r(3))).is_err());
}
