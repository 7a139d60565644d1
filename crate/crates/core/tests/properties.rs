use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use prep_atlas_core::arith::{rat, RealAlgebraic};
use prep_atlas_core::orbit::{decide_rational, escape_radius, prep_poly_int, psi, real_slice, theta, Verdict};
use prep_atlas_core::{alg_compare, IntPolynomial, Rational};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

/// First repeat `(m, n)` of the orbit, or `None` once it provably runs off
/// to infinity or the horizon passes. Escape uses `|x| > r` with
/// `r^2 = r + |c|`: then `|x^2 + c| - |x| >= x^2 - |x| - |c| > 0` and the gap
/// grows.
fn naive_orbit(alpha: &Rational, c: &Rational, horizon: usize) -> Option<(usize, usize)> {
    let mut seen: HashMap<Rational, usize> = HashMap::new();
    let mut x = alpha.clone();
    for k in 0..=horizon {
        if let Some(&m) = seen.get(&x) {
            return Some((m, k));
        }
        if &x * &x - x.abs() > c.abs() {
            return None;
        }
        if x.denom().bits() > 4096 {
            return None;
        }
        seen.insert(x.clone(), k);
        x = &x * &x + c;
    }
    None
}

#[test]
fn decide_rational_matches_naive_oracle_on_grid() {
    let alphas = [rat(0, 1), rat(1, 1), rat(-1, 1), rat(1, 2), rat(-3, 2), rat(2, 1), rat(5, 3)];
    for alpha in &alphas {
        for den in 1..=12i64 {
            for num in -12..=12i64 {
                let c = rat(num, den);
                let lib = decide_rational(alpha, &c, 100_000).verdict;
                let oracle = naive_orbit(alpha, &c, 24);
                match (&lib, oracle) {
                    (Verdict::Preperiodic { m, n }, Some((om, on))) => assert_eq!((*m, *n), (om, on), "alpha={alpha} c={c}"),
                    (Verdict::Escaped { .. }, None) => {}
                    _ => panic!("alpha={alpha} c={c}: library {lib:?}, oracle {oracle:?}"),
                }
            }
        }
    }
}

#[test]
fn prep_poly_divisibility() {
    // F_{m,n} divides F_{m+k,n+k}
    for alpha in [rat(0, 1), rat(1, 1), rat(2, 1)] {
        for n in 1..=10u32 {
            for m in 0..n {
                let f = prep_poly_int(&alpha, m, n, 10).unwrap();
                for k in 1..=10 - n {
                    let g = prep_poly_int(&alpha, m + k, n + k, 10).unwrap();
                    assert!(f.divides(&g), "alpha={alpha} ({m},{n}) by {k}");
                }
            }
        }
    }
}

#[test]
fn rational_real_parameters_follow_the_slice() {
    // outside the real slice of alpha = 1 but inside the escape disc; the
    // slice starts at -R_1, so these all lie right of it
    let r1 = escape_radius(&rat(1, 1));
    let slice = real_slice(&rat(1, 1));
    let iv = &slice.intervals()[0];
    let mut tested = 0;
    for k in 1..=400i64 {
        let c = rat(k, 117);
        let x = RealAlgebraic::from_rational(c.clone());
        if iv.contains(&x) || alg_compare(&x, &r1) != std::cmp::Ordering::Less {
            continue;
        }
        tested += 1;
        assert!(decide_rational(&rat(1, 1), &c, 10_000).verdict.is_escaped(), "c={c}");
    }
    assert!(tested >= 100);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn psi_is_even_in_alpha(alpha in small_rational(), n in 1u32..=6) {
        prop_assert_eq!(psi(&alpha, n).unwrap(), psi(&-alpha.clone(), n).unwrap());
    }

    #[test]
    fn prep_poly_is_monic_of_expected_degree(alpha in small_rational(), n in 1u32..=6, m in 0u32..6) {
        prop_assume!(m < n);
        let p = psi(&alpha, n).unwrap();
        prop_assert!(p.is_monic());
        prop_assert_eq!(p.deg(), 1usize << (n - 1));
        let f = prep_poly_int(&alpha, m, n, 14).unwrap();
        prop_assert_eq!(f.deg(), 1usize << (n - 1));
    }

    #[test]
    fn verdicts_agree_for_opposite_alpha(alpha in small_rational(), c in small_rational()) {
        let a = decide_rational(&alpha, &c, 10_000).verdict;
        let b = decide_rational(&-alpha.clone(), &c, 10_000).verdict;
        prop_assert_eq!(a.is_preperiodic(), b.is_preperiodic());
        prop_assert_eq!(a.is_escaped(), b.is_escaped());
    }

    #[test]
    fn preperiodic_witness_is_a_root(alpha in small_rational(), c in small_rational()) {
        if let Verdict::Preperiodic { m, n } = decide_rational(&alpha, &c, 10_000).verdict {
            let f = prep_poly_int(&alpha, m as u32, n as u32, 20).unwrap();
            prop_assert!(f.eval_rational(&c).is_zero());
        }
    }

    #[test]
    fn below_minus_radius_escapes(num in 1i64..400, which in 0usize..3) {
        let alpha = [rat(0, 1), rat(1, 1), rat(3, 2)][which].clone();
        let r = escape_radius(&alpha);
        let c = -(r.floor() + BigInt::one());
        let c = Rational::from_integer(c) - rat(num, 100);
        prop_assert!(decide_rational(&alpha, &c, 10_000).verdict.is_escaped());
    }

    #[test]
    fn theta_identity(num in -199i64..=199) {
        let alpha = rat(num, 100);
        prop_assert!(theta(&alpha).verify());
    }

    #[test]
    fn sturm_counts_distinct_integer_roots(roots in proptest::collection::btree_set(-20i64..=20, 1..6)) {
        let p = roots.iter().fold(IntPolynomial::one(), |acc, &r| &acc * &IntPolynomial::from_i64s(&[-r, 1]));
        let iso = prep_atlas_core::isolate_real_roots(&p);
        prop_assert_eq!(iso.len(), roots.len());
        for (x, r) in iso.iter().zip(&roots) {
            prop_assert_eq!(alg_compare(x, &RealAlgebraic::from_int(*r)), std::cmp::Ordering::Equal);
        }
    }
}
