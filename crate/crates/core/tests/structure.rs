use num_complex::Complex64;
use proptest::prelude::*;

use prep_atlas_core::arith::{rat, DyadicInterval, RealAlgebraic};
use prep_atlas_core::cantor::{cantor_levels, fixed_point_u, localize_in, preimage_v};
use prep_atlas_core::capacity::{exact_n_diameter, fekete_optimize, lemniscate_capacity, FeketeConfig, FeketeSet};
use prep_atlas_core::mandelset::{escape_count, prep_roots, verify_in_disc};
use prep_atlas_core::orbit::escape_radius_f64_up;
use prep_atlas_core::Rational;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn v_is_a_preimage_of_minus_u(num in -4000i64..=-200) {
        let c = DyadicInterval::from_rational(&rat(num, 100), 192);
        let u = fixed_point_u(&c).unwrap();
        let v = preimage_v(&c).unwrap();
        // u is fixed, v maps onto -u
        let (lo, hi) = u.square().add(&c).sub(&u).to_f64_bounds();
        prop_assert!(lo.abs() < 1e-30 && hi.abs() < 1e-30);
        let (lo, hi) = v.square().add(&c).add(&u).to_f64_bounds();
        prop_assert!(lo.abs() < 1e-30 && hi.abs() < 1e-30);
    }

    #[test]
    fn lemniscate_capacity_decreases(num in -30i64..=30, n in 1u32..12) {
        let alpha = rat(num, 7);
        let a = lemniscate_capacity(&alpha, n).unwrap();
        let b = lemniscate_capacity(&alpha, n + 1).unwrap();
        prop_assert_eq!(b.certainly_cmp(&a), Some(std::cmp::Ordering::Less));
        prop_assert!(b.gt_rational(&Rational::from_integer(1.into())));
    }

    #[test]
    fn fekete_never_beats_the_exact_diameter(lo in -5i64..=5, len in 1i64..=4, n in 2usize..=6, seed in 0u64..1000) {
        let set = FeketeSet::Intervals(vec![(lo as f64, (lo + len) as f64)]);
        let cfg = FeketeConfig { restarts: 2, seed, ..FeketeConfig::default() };
        let conf = fekete_optimize(&set, n, &cfg).unwrap();
        let exact = exact_n_diameter(&RealAlgebraic::from_int(lo), &RealAlgebraic::from_int(lo + len), n as u32).unwrap();
        prop_assert!(conf.diameter() <= exact.to_f64_bounds().1 * (1.0 + 1e-9));
        prop_assert!(conf.points.iter().all(|z| z.im == 0.0 && z.re >= lo as f64 && z.re <= (lo + len) as f64));
    }
}

#[test]
fn cantor_levels_for_random_large_alpha() {
    let eps = rat(1, 1 << 24);
    for alpha in [rat(9, 4), rat(-3, 1), rat(7, 2)] {
        let levels = cantor_levels(&alpha, 6, &eps).unwrap();
        for (n, level) in levels.iter().enumerate().skip(1) {
            assert_eq!(level.intervals.len(), 1 << (n - 1));
        }
        for m in 0..5 {
            let rep = localize_in(&levels[5], m).unwrap();
            assert_eq!(rep.real_roots, rep.degree);
        }
    }
}

#[test]
fn roots_of_prep_polys_stay_bounded() {
    for (m, n) in [(0u32, 3u32), (1, 4), (2, 5)] {
        let alpha = rat(1, 1);
        let set = prep_roots(&alpha, m, n, 1e-12).unwrap();
        let rep = verify_in_disc(&set, 1e-9).unwrap();
        assert_eq!(rep.count, 1 << (n - 1));
        // preperiodic parameters do not escape; cycles are repelling, so
        // only a short float orbit is meaningful
        let bailout = escape_radius_f64_up(&alpha);
        for r in &set.roots {
            assert_eq!(escape_count(1.0, r.value, bailout, 2 * n), 2 * n + 1, "{}", r.value);
        }
    }
    assert!(escape_count(1.0, Complex64::new(1.0, 0.0), escape_radius_f64_up(&rat(1, 1)), 60) <= 3);
}
