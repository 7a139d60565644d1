use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::orbit::theta;

fn ra(n: i64) -> RealAlgebraic {
    RealAlgebraic::from_int(n)
}

fn left_end() -> RealAlgebraic {
    theta(&Rational::one()).theta
}

fn within(x: &DyadicInterval, want: f64, tol: f64) -> bool {
    let (lo, hi) = x.to_f64_bounds();
    (lo - want).abs() < tol && (hi - want).abs() < tol
}

#[test]
fn interval_capacity_examples() {
    assert_eq!(interval_capacity(&ra(-2), &ra(2)).unwrap(), ra(1));
    assert_eq!(interval_capacity(&ra(0), &ra(1)).unwrap(), RealAlgebraic::from_rational(rat(1, 4)));
    let c = interval_capacity(&left_end(), &ra(0)).unwrap();
    assert!((c.to_f64() - (2.0 + core::f64::consts::SQRT_2) / 4.0).abs() < 1e-14);
    assert_eq!(alg_compare(&c, &ra(1)), Ordering::Less);
    assert!(interval_capacity(&ra(1), &ra(1)).is_err());
}

#[test]
fn lemniscate_examples() {
    let r1 = 2.0 + core::f64::consts::SQRT_2;
    assert!(within(&lemniscate_capacity(&Rational::one(), 1).unwrap(), r1, 1e-14));
    assert!(within(&lemniscate_capacity(&Rational::from_integer(0.into()), 2).unwrap(), core::f64::consts::SQRT_2, 1e-14));
    let mut prev = lemniscate_capacity(&Rational::one(), 1).unwrap();
    for n in 2..=20 {
        let cur = lemniscate_capacity(&Rational::one(), n).unwrap();
        assert_eq!(cur.certainly_cmp(&prev), Some(Ordering::Less));
        assert!(cur.gt_rational(&Rational::one()));
        let want = libm::exp(libm::log(r1) / libm::pow(2.0, (n - 1) as f64));
        assert!(within(&cur, want, 1e-13));
        prev = cur;
    }
    assert!(within(&prev, 1.0, 1e-4));
}

#[test]
fn d_sequence_examples() {
    assert_eq!(d_sequence(2).unwrap(), Rational::one());
    assert_eq!(d_sequence(3).unwrap(), rat(1, 16));
    assert_eq!(d_sequence(4).unwrap(), rat(1, 3125));
    assert!(d_sequence(1).is_err());
}

/// Largest squared pairwise product of `n` points on a uniform grid of
/// `[-2, 2]`, endpoints forced (optimal configurations contain both).
fn brute_force_a(n: usize, grid: usize) -> f64 {
    let xs: Vec<f64> = (0..=grid).map(|k| -2.0 + 4.0 * k as f64 / grid as f64).collect();
    let mut best = 0.0f64;
    let mut pick = vec![0usize; n - 2];
    fn rec(xs: &[f64], pick: &mut Vec<usize>, depth: usize, start: usize, best: &mut f64) {
        if depth == pick.len() {
            let mut pts: Vec<f64> = vec![xs[0], xs[xs.len() - 1]];
            pts.extend(pick.iter().map(|&i| xs[i]));
            let mut p = 1.0;
            for i in 0..pts.len() {
                for j in 0..i {
                    p *= (pts[i] - pts[j]).abs();
                }
            }
            *best = best.max(p * p);
            return;
        }
        for i in start..xs.len() - 1 {
            pick[depth] = i;
            rec(xs, pick, depth + 1, i + 1, best);
        }
    }
    rec(&xs, &mut pick, 0, 1, &mut best);
    best
}

#[test]
fn d_sequence_matches_brute_force() {
    for (n, grid) in [(2usize, 4usize), (3, 4), (4, 400)] {
        let exact = libm::pow(4.0, (n * (n - 1)) as f64) * crate::arith::rational_to_f64(&d_sequence(n as u32).unwrap());
        let brute = brute_force_a(n, grid);
        assert!((brute - exact).abs() / exact < 1e-4, "n={n}: {brute} vs {exact}");
    }
    // n = 3: points {-2, 0, 2}, product 16, squared 256 = 4^6 D_3
    assert_eq!(brute_force_a(3, 4), 256.0);
}

#[test]
fn exact_n_diameter_examples() {
    let d3 = exact_n_diameter(&ra(-2), &ra(2), 3).unwrap();
    assert!(within(&d3, libm::cbrt(16.0), 1e-14));
    assert!(within(&exact_n_diameter(&ra(0), &ra(4), 2).unwrap(), 4.0, 1e-15));
    let mut prev = exact_n_diameter(&ra(-2), &ra(2), 2).unwrap();
    for n in 3..=12 {
        let cur = exact_n_diameter(&ra(-2), &ra(2), n).unwrap();
        assert_eq!(cur.certainly_cmp(&prev), Some(Ordering::Less));
        assert!(cur.gt_rational(&Rational::one()));
        prev = cur;
    }
}

#[test]
fn degree_bound_examples() {
    assert_eq!(degree_bound(&ra(-2), &ra(2)), Err(Error::CriterionInapplicable));
    let rep = degree_bound(&ra(0), &ra(1)).unwrap();
    assert_eq!(rep.n0, Some(2));
    assert!(rep.certified);

    let rep = degree_bound(&left_end(), &ra(0)).unwrap();
    assert_eq!(rep.n0, Some(11));
    let last = rep.table.last().unwrap();
    assert!(last.a_below_b && last.ratio_below);
    assert!(rep.table[..rep.table.len() - 1].iter().all(|r| !(r.a_below_b && r.ratio_below)));
}

#[test]
fn degree_bound_matches_float_recomputation() {
    let l = 2.0 + core::f64::consts::SQRT_2;
    let rep = degree_bound(&left_end(), &ra(0)).unwrap();
    for row in &rep.table {
        let n = row.n as f64;
        let mut log_d = 0.0;
        for k in 3..=row.n {
            let k = k as f64;
            log_d += k * libm::log(k) + (k - 2.0) * libm::log(k - 2.0)
                - (2.0 * k - 2.0) * core::f64::consts::LN_2
                - (2.0 * k - 3.0) * libm::log(2.0 * k - 3.0);
        }
        let log_a = n * (n - 1.0) * libm::log(l) + log_d;
        let log_b = 2.0 * n * libm::log(n) - 2.0 * libm::lgamma(n + 1.0);
        assert_eq!(row.a_below_b, log_a < log_b, "n={n}");
    }
}

#[test]
fn fekete_three_points() {
    let set = FeketeSet::Intervals(vec![(-2.0, 2.0)]);
    let conf = fekete_optimize(&set, 3, &FeketeConfig::default()).unwrap();
    let mut xs: Vec<f64> = conf.points.iter().map(|z| z.re).collect();
    xs.sort_by(f64::total_cmp);
    for (x, want) in xs.iter().zip([-2.0, 0.0, 2.0]) {
        assert!((x - want).abs() < 1e-6);
    }
    assert!((conf.diameter() - libm::cbrt(16.0)).abs() < 1e-6);
}

#[test]
fn fekete_matches_exact_diameter() {
    let cases = [(-2, 2, 2u32), (0, 1, 4)].into_iter().chain((3..=8).map(|n| (-2, 2, n)));
    for (a, b, n) in cases {
        let set = FeketeSet::Intervals(vec![(a as f64, b as f64)]);
        let conf = fekete_optimize(&set, n as usize, &FeketeConfig::default()).unwrap();
        let exact = exact_n_diameter(&ra(a), &ra(b), n).unwrap().to_f64_bounds();
        let rel = (conf.diameter() - exact.0).abs() / exact.0;
        assert!(rel < 1e-6, "n={n}: {rel}");
        assert!(conf.diameter() <= exact.1 * (1.0 + 1e-9));
    }
}

#[test]
fn fekete_in_disc_approaches_regular_polygon() {
    // the unit circle has n-diameter n^(1/(n-1))
    let set = FeketeSet::Discs(vec![(num_complex::Complex64::new(0.0, 0.0), 1.0)]);
    let conf = fekete_optimize(&set, 4, &FeketeConfig::default()).unwrap();
    let want = libm::pow(4.0, 1.0 / 3.0);
    assert!((conf.diameter() - want).abs() < 1e-4, "{}", conf.diameter());
    assert!(conf.points.iter().all(|z| z.norm() <= 1.0 + 1e-12));
}
