//! The nested interval systems `C_n` holding the real parameters with
//! bounded orbit when `|alpha| >= 2`.
//!
//! `C_n = {c : -u(c) <= f_c^n(alpha) <= u(c)}` consists of `2^(n-1)` closed
//! intervals. On each of them `f^n` runs monotonically from `+u` to `-u`
//! (or back), so each interval of `C_n` splits into the two pieces of
//! `C_(n+1)` where `|f^n| >= v`, with `v(c) = sqrt(u^2 - 2u)` the positive
//! solution of `f_c(v) = -u(c)`.
//!
//! Every endpoint is exact. An endpoint created at level `k` solves
//! `f^k = -u`, so it is a simple root of
//! `psi_(k+1) + psi_k = (f^k + u)(f^k + beta)` with `beta` the other fixed
//! point; it is stored with that polynomial and a bracket certified by
//! interval arithmetic (sign change of `f^k + u`, nonvanishing derivative,
//! and `f^k + beta` bounded away from zero).

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed};

use crate::arith::{
    alg_compare, count_closed_with, rat, ClosedInterval, Dyadic, DyadicInterval, IntPolynomial, IntervalSet,
    Rational, RealAlgebraic, SturmSequence,
};
use crate::error::{Error, Result};
use crate::orbit::{escape_radius, prep_poly_int, psi_with_cap};
use crate::precision::{default_precision, MAX_PRECISION_BITS};

/// Default cap on the construction depth.
pub const DEFAULT_DEPTH_CAP: u32 = 12;

const START_BITS: u32 = 128;

/// `u(c) = (1 + sqrt(1 - 4c)) / 2`, the larger fixed point of `f_c`.
pub fn fixed_point_u(c: &DyadicInterval) -> Result<DyadicInterval> {
    if c.hi().cmp_rational(&rat(1, 4)) == Ordering::Greater {
        return Err(Error::ComplexFixedPoints);
    }
    Ok(u_unchecked(c))
}

fn disc_root(c: &DyadicInterval) -> DyadicInterval {
    // sqrt(1 - 4c)
    c.ldexp(2).neg().add_rational(&Rational::one()).sqrt()
}

fn u_unchecked(c: &DyadicInterval) -> DyadicInterval {
    disc_root(c).add_rational(&Rational::one()).ldexp(-1)
}

/// The smaller fixed point `(1 - sqrt(1 - 4c)) / 2`.
fn beta_unchecked(c: &DyadicInterval) -> DyadicInterval {
    disc_root(c).neg().add_rational(&Rational::one()).ldexp(-1)
}

/// `v(c) = sqrt(u^2 - 2u)`, the positive solution of `f_c(v) = -u(c)`.
/// Defined for `c <= -2`, where `u >= 2`.
pub fn preimage_v(c: &DyadicInterval) -> Result<DyadicInterval> {
    if c.hi().cmp_rational(&rat(-2, 1)) == Ordering::Greater {
        return Err(Error::PreimageUndefined);
    }
    Ok(v_unchecked(c))
}

fn v_unchecked(c: &DyadicInterval) -> DyadicInterval {
    let u = u_unchecked(c);
    u.mul(&u.sub(&DyadicInterval::from_int(2, u.precision()))).sqrt()
}

/// Which boundary equation an endpoint solves: `f^step(c) = sign * u(c)` or
/// `f^step(c) = sign * v(c)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BoundaryTag {
    pub step: u32,
    pub sign: i8,
    pub function: BoundaryFunction,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundaryFunction {
    U,
    V,
    /// The reporting clip `-R_alpha - 1` of the unbounded level 0.
    Synthetic,
}

impl BoundaryTag {
    fn u(step: u32, sign: i8) -> Self {
        BoundaryTag { step, sign, function: BoundaryFunction::U }
    }

    fn v(step: u32, sign: i8) -> Self {
        BoundaryTag { step, sign, function: BoundaryFunction::V }
    }

    /// Sign `s` with `f^depth(c) = s * u(c)` at this endpoint, for
    /// `depth >= 1` past the step where the endpoint was created.
    pub fn u_sign_at(&self, depth: u32) -> Option<i8> {
        match self.function {
            BoundaryFunction::U if depth == self.step => Some(self.sign),
            BoundaryFunction::U if depth > self.step => Some(1),
            // f^step = +-v, so f^(step+1) = -u and then u forever
            BoundaryFunction::V if depth == self.step + 1 => Some(-1),
            BoundaryFunction::V if depth > self.step + 1 => Some(1),
            _ => None,
        }
    }
}

/// One level `C_depth`, intervals left to right with the tags of their
/// left and right endpoints.
#[derive(Clone, Debug, PartialEq)]
pub struct CantorLevel {
    pub alpha: Rational,
    pub depth: u32,
    pub intervals: IntervalSet,
    pub boundary_tags: Vec<(BoundaryTag, BoundaryTag)>,
    /// Every irrational endpoint is isolated to a width below this.
    pub eps: Rational,
}

impl CantorLevel {
    /// Level 0 is unbounded below; its left end is a clip.
    pub fn is_synthetic(&self) -> bool {
        self.depth == 0
    }
}

fn check_alpha(alpha: &Rational) -> Result<Rational> {
    let a = alpha.abs();
    if a < Rational::from_integer(2.into()) {
        return Err(Error::CantorRequiresLargeAlpha);
    }
    Ok(a)
}

fn check_eps(eps: &Rational) -> Result<()> {
    if !eps.is_positive() {
        return Err(Error::InvalidArgument("eps must be positive".into()));
    }
    Ok(())
}

/// `C_n` for `|alpha| >= 2`, with the default depth cap.
pub fn cantor_level(alpha: &Rational, n: u32, eps: &Rational) -> Result<CantorLevel> {
    Ok(cantor_levels(alpha, n, eps)?.pop().unwrap())
}

/// `C_0, ..., C_n`. Endpoints are shared exactly between a level and its
/// refinement.
pub fn cantor_levels(alpha: &Rational, n: u32, eps: &Rational) -> Result<Vec<CantorLevel>> {
    cantor_levels_with_cap(alpha, n, eps, DEFAULT_DEPTH_CAP)
}

pub fn cantor_levels_with_cap(alpha: &Rational, n: u32, eps: &Rational, cap: u32) -> Result<Vec<CantorLevel>> {
    let a = check_alpha(alpha)?;
    check_eps(eps)?;
    if n > cap {
        return Err(Error::DegreeOverflow { n, cap });
    }
    let r = escape_radius(&a);
    let right = RealAlgebraic::from_rational(&a - &a * &a);
    let right_tag = BoundaryTag::u(1, 1);
    let mut levels = Vec::with_capacity(n as usize + 1);

    let clip = r.neg().add_rational(&-Rational::one());
    let clip_tag = BoundaryTag { step: 0, sign: -1, function: BoundaryFunction::Synthetic };
    levels.push(CantorLevel {
        alpha: alpha.clone(),
        depth: 0,
        intervals: IntervalSet::single(clip, right.clone())?,
        boundary_tags: vec![(clip_tag, right_tag)],
        eps: eps.clone(),
    });
    if n == 0 {
        return Ok(levels);
    }

    let left = r.neg().refined(eps);
    let mut ends: Vec<(RealAlgebraic, BoundaryTag, RealAlgebraic, BoundaryTag)> =
        vec![(left, BoundaryTag::u(1, -1), right, right_tag)];
    levels.push(make_level(alpha, 1, &ends, eps)?);
    for depth in 1..n {
        // the new inner endpoints are simple roots of psi_(k+1) + psi_k
        let k = depth + 1;
        let q = endpoint_poly(&a, k)?;
        let split = |e: &(RealAlgebraic, BoundaryTag, RealAlgebraic, BoundaryTag)| split_interval(&a, depth, e, &q, eps);
        #[cfg(feature = "parallel")]
        let parts: Vec<Result<_>> = {
            use rayon::prelude::*;
            ends.par_iter().map(split).collect()
        };
        #[cfg(not(feature = "parallel"))]
        let parts: Vec<Result<_>> = ends.iter().map(split).collect();
        let mut next = Vec::with_capacity(2 * ends.len());
        for p in parts {
            let [x, y] = p?;
            next.push(x);
            next.push(y);
        }
        ends = next;
        levels.push(make_level(alpha, depth + 1, &ends, eps)?);
    }
    Ok(levels)
}

fn make_level(
    alpha: &Rational,
    depth: u32,
    ends: &[(RealAlgebraic, BoundaryTag, RealAlgebraic, BoundaryTag)],
    eps: &Rational,
) -> Result<CantorLevel> {
    let intervals = ends
        .iter()
        .map(|(l, _, r, _)| ClosedInterval::new(l.clone(), r.clone()))
        .collect::<Result<Vec<_>>>()?;
    Ok(CantorLevel {
        alpha: alpha.clone(),
        depth,
        intervals: IntervalSet::new(intervals)?,
        boundary_tags: ends.iter().map(|e| (e.1, e.3)).collect(),
        eps: eps.clone(),
    })
}

/// `psi_(k+1) + psi_k` as a primitive integer polynomial.
fn endpoint_poly(a: &Rational, k: u32) -> Result<IntPolynomial> {
    let cap = k + 1;
    let p = &psi_with_cap(a, k + 1, cap)? + &psi_with_cap(a, k, cap)?;
    let p = p.to_primitive_int().normalized();
    Ok(if p.is_squarefree() { p } else { p.squarefree_part() })
}

type Ends = (RealAlgebraic, BoundaryTag, RealAlgebraic, BoundaryTag);

/// Splits one interval of `C_depth` into its two children in `C_(depth+1)`.
fn split_interval(a: &Rational, depth: u32, e: &Ends, q: &IntPolynomial, eps: &Rational) -> Result<[Ends; 2]> {
    let (left, lt, right, rt) = e;
    let t = lt.u_sign_at(depth).ok_or_else(|| Error::Internal("endpoint tag out of range".into()))?;
    if rt.u_sign_at(depth) != Some(-t) {
        return Err(Error::Internal("interval endpoints carry equal tags".into()));
    }
    // f^depth runs from t*u at the left end to -t*u at the right end; try the
    // isolating bounds of the endpoints first, tight enclosures if those are
    // too coarse to bracket
    let pair = |bits: Option<u32>| -> Result<(RealAlgebraic, RealAlgebraic)> {
        let lo = bracket_point(left, Side::Right, bits);
        let hi = bracket_point(right, Side::Left, bits);
        Ok((solve(a, depth, t, &lo, &hi, t, q, eps)?, solve(a, depth, -t, &lo, &hi, t, q, eps)?))
    };
    let (inner_left, inner_right) = pair(None).or_else(|_| pair(Some(START_BITS)))?;
    if alg_compare(&inner_left, &inner_right) != Ordering::Less {
        return Err(Error::Internal("inner endpoints out of order".into()));
    }
    let (nl, nr) = (BoundaryTag::v(depth, t), BoundaryTag::v(depth, -t));
    Ok([(left.clone(), *lt, inner_left, nl), (inner_right, nr, right.clone(), *rt)])
}

#[derive(Clone, Copy)]
enum Side {
    Left,
    Right,
}

/// A dyadic point just inside the interval next to an endpoint: the
/// isolating bound when it is dyadic and `bits` is `None`, else the bound of
/// an enclosure at `bits`.
fn bracket_point(x: &RealAlgebraic, side: Side, bits: Option<u32>) -> Dyadic {
    if bits.is_none() {
        let (lo, hi) = x.isolation();
        let q = match side {
            Side::Right => hi,
            Side::Left => lo,
        };
        if let Some(d) = dyadic_of(q) {
            return d;
        }
    }
    let e = x.enclosure(bits.unwrap_or(START_BITS));
    match side {
        Side::Right => e.hi().clone(),
        Side::Left => e.lo().clone(),
    }
}

fn dyadic_of(q: &Rational) -> Option<Dyadic> {
    let d = q.denom();
    let k = d.trailing_zeros().unwrap_or(0);
    (d >> k as usize == BigInt::one()).then(|| Dyadic::new(q.numer().clone(), -(k as i64)))
}

/// `f_c^k(alpha)` at an interval parameter, with its `c`-derivative.
fn orbit(a: &Rational, c: &DyadicInterval, k: u32) -> (DyadicInterval, DyadicInterval) {
    let p = c.precision();
    let mut z = DyadicInterval::from_rational(a, p);
    let mut dz = DyadicInterval::from_int(0, p);
    let one = Rational::one();
    for _ in 0..k {
        dz = z.mul(&dz).ldexp(1).add_rational(&one);
        z = z.square().add(c);
    }
    (z, dz)
}

/// Certified sign of `f^k(c) - s v(c)` at a dyadic point.
fn h_sign(a: &Rational, k: u32, s: i8, c: &Dyadic) -> Option<Sign> {
    let mut p = START_BITS.max(default_precision());
    while p <= MAX_PRECISION_BITS / 16 {
        let ci = DyadicInterval::point(c.clone(), p);
        let (z, _) = orbit(a, &ci, k);
        let v = v_unchecked(&ci);
        let h = if s > 0 { z.sub(&v) } else { z.add(&v) };
        if let Some(sg) = h.sign() {
            return Some(sg);
        }
        p *= 2;
    }
    None
}

/// The unique solution of `f^k = s v` between `lo` and `hi`, where `f^k`
/// starts at `t u` on the left.
#[allow(clippy::too_many_arguments)]
fn solve(a: &Rational, k: u32, s: i8, lo: &Dyadic, hi: &Dyadic, t: i8, q: &IntPolynomial, eps: &Rational) -> Result<RealAlgebraic> {
    let want_left = if t > 0 { Sign::Plus } else { Sign::Minus };
    let (mut l, mut r) = (lo.clone(), hi.clone());
    if h_sign(a, k, s, &l) != Some(want_left) || h_sign(a, k, s, &r) != Some(-want_left) {
        return Err(Error::Internal("boundary equation not bracketed".into()));
    }
    let eps_d = eps.clone();
    while r.sub(&l).cmp_rational(&eps_d) != Ordering::Less {
        let mut m = l.add(&r).ldexp(-1);
        let mut sm = h_sign(a, k, s, &m);
        if sm.is_none() || sm == Some(Sign::NoSign) {
            // step off the (numerically) exact zero
            m = l.add(&m).ldexp(-1);
            sm = h_sign(a, k, s, &m);
        }
        match sm {
            Some(x) if x == want_left => l = m,
            Some(x) if x == -want_left => r = m,
            _ => return Err(Error::Internal("undecidable sign during bisection".into())),
        }
    }
    certify_bracket(a, k + 1, &l, &r)?;
    Ok(RealAlgebraic::from_parts_unchecked(q.clone(), l.to_rational(), r.to_rational()))
}

/// On `[l, r]`: `f^k + u` is strictly monotone and `f^k + beta` has no zero,
/// so `(f^k + u)(f^k + beta) = psi_(k+1) + psi_k` has at most one zero there.
/// Together with the sign change from the bisection that makes `[l, r]` an
/// isolating interval.
fn certify_bracket(a: &Rational, k: u32, l: &Dyadic, r: &Dyadic) -> Result<()> {
    let mut p = START_BITS;
    while p <= MAX_PRECISION_BITS / 16 {
        let c = DyadicInterval::new(l.clone(), r.clone(), p);
        let (z, dz) = orbit(a, &c, k);
        let root = disc_root(&c);
        // d/dc u = -1 / sqrt(1 - 4c)
        let du = recip_pos(&root).neg();
        let slope = dz.add(&du);
        let other = z.add(&beta_unchecked(&c));
        if slope.sign().is_some_and(|s| s != Sign::NoSign) && other.sign().is_some_and(|s| s != Sign::NoSign) {
            return Ok(());
        }
        p *= 2;
    }
    Err(Error::Internal("could not certify an endpoint bracket".into()))
}

fn recip_pos(x: &DyadicInterval) -> DyadicInterval {
    let lo = x.hi_rational().recip();
    let hi = x.lo_rational().recip();
    DyadicInterval::from_rational_bounds(&lo, &hi, x.precision())
}

/// Root counts of `squarefree(F_{m,n})` over the intervals of `C_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalizationReport {
    pub alpha: Rational,
    pub m: u32,
    pub n: u32,
    pub degree: usize,
    pub real_roots: usize,
    pub per_interval: Vec<usize>,
    pub outside: usize,
}

/// Certifies with Sturm counts on closed intervals with exact endpoints
/// that `squarefree(F_{m,n})` is totally real, has one root in each
/// interval of `C_n`, and none outside.
pub fn localize_roots(alpha: &Rational, m: u32, n: u32, eps: &Rational) -> Result<LocalizationReport> {
    check_alpha(alpha)?;
    if n == 0 {
        return Err(Error::InvalidArgument("need n >= 1".into()));
    }
    let level = cantor_level(alpha, n, eps)?;
    localize_in(&level, m)
}

/// As [`localize_roots`] against an already built level.
pub fn localize_in(level: &CantorLevel, m: u32) -> Result<LocalizationReport> {
    let n = level.depth;
    let f = prep_poly_int(&level.alpha, m, n, n.max(crate::orbit::DEFAULT_DEGREE_CAP))?;
    let s = SturmSequence::new(&f);
    let degree = s.base().deg();
    let real_roots = s.count_real();
    let per_interval: Vec<usize> =
        level.intervals.intervals().iter().map(|iv| count_closed_with(&s, &iv.left, &iv.right)).collect();
    let inside: usize = per_interval.iter().sum();
    let report = LocalizationReport {
        alpha: level.alpha.clone(),
        m,
        n,
        degree,
        real_roots,
        per_interval: per_interval.clone(),
        outside: real_roots - inside,
    };
    if let Some(i) = per_interval.iter().position(|&c| c != 1) {
        return Err(Error::Localization { interval: Some(i), count: per_interval[i], expected: 1 });
    }
    if report.outside != 0 || real_roots != degree {
        return Err(Error::Localization { interval: None, count: degree - inside, expected: 0 });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn di(n: i64) -> DyadicInterval {
        DyadicInterval::from_int(n, 128)
    }

    fn close(x: &DyadicInterval, want: f64) -> bool {
        let (lo, hi) = x.to_f64_bounds();
        (lo - want).abs() < 1e-12 && (hi - want).abs() < 1e-12
    }

    #[test]
    fn u_and_v_examples() {
        assert!(close(&fixed_point_u(&di(-2)).unwrap(), 2.0));
        assert!(close(&preimage_v(&di(-2)).unwrap(), 0.0));
        assert!(close(&fixed_point_u(&di(-6)).unwrap(), 3.0));
        assert!(close(&preimage_v(&di(-6)).unwrap(), libm::sqrt(3.0)));
        assert!(close(&fixed_point_u(&DyadicInterval::from_rational(&rat(1, 4), 128)).unwrap(), 0.5));
        assert_eq!(fixed_point_u(&DyadicInterval::from_rational(&rat(1, 3), 64)), Err(Error::ComplexFixedPoints));
        assert_eq!(preimage_v(&di(-1)), Err(Error::PreimageUndefined));
    }

    #[test]
    fn v_maps_to_minus_u() {
        for c in [-2i64, -3, -7, -40] {
            let c = di(c);
            let v = preimage_v(&c).unwrap();
            let u = fixed_point_u(&c).unwrap();
            let d = v.square().add(&c).add(&u);
            let (lo, hi) = d.to_f64_bounds();
            assert!(lo.abs() < 1e-20 && hi.abs() < 1e-20);
        }
    }

    #[test]
    fn small_alpha_rejected() {
        let eps = rat(1, 1 << 20);
        assert_eq!(cantor_level(&rat(3, 2), 2, &eps), Err(Error::CantorRequiresLargeAlpha));
        assert!(matches!(cantor_level(&rat(2, 1), 13, &eps), Err(Error::DegreeOverflow { n: 13, cap: 12 })));
    }

    #[test]
    fn alpha_two_first_levels() {
        let eps = rat(1, 1 << 30);
        let levels = cantor_levels(&rat(2, 1), 3, &eps).unwrap();
        assert_eq!(levels.iter().map(|l| l.intervals.len()).collect::<Vec<_>>(), vec![1, 1, 2, 4]);
        let r = 5.0 + libm::sqrt(5.0);
        let c1 = &levels[1].intervals.intervals()[0];
        assert!((c1.left.to_f64() + r).abs() < 1e-12);
        assert_eq!(c1.right, RealAlgebraic::from_int(-2));
        assert!(levels[0].is_synthetic());

        // C_2: f^1 = 4 + c against +-v
        let c2 = levels[2].intervals.intervals();
        assert_eq!(c2[0].left, c1.left);
        assert_eq!(c2[1].right, c1.right);
        for (iv, tags) in c2.iter().zip(&levels[2].boundary_tags) {
            for (x, tag) in [(&iv.left, tags.0), (&iv.right, tags.1)] {
                let c = x.to_f64();
                let u = (1.0 + libm::sqrt(1.0 - 4.0 * c)) / 2.0;
                let v = libm::sqrt(u * u - 2.0 * u);
                let target = match tag.function {
                    BoundaryFunction::U => tag.sign as f64 * u,
                    BoundaryFunction::V => tag.sign as f64 * v,
                    BoundaryFunction::Synthetic => unreachable!(),
                };
                let mut z = 2.0;
                for _ in 0..tag.step {
                    z = z * z + c;
                }
                assert!((z - target).abs() < 1e-6, "{z} vs {target}");
            }
        }
    }

    #[test]
    fn levels_nest() {
        let eps = rat(1, 1 << 24);
        let levels = cantor_levels(&rat(5, 2), 5, &eps).unwrap();
        for w in levels[1..].windows(2) {
            for iv in w[1].intervals.intervals() {
                assert!(w[0].intervals.intervals().iter().any(|p| p.contains(&iv.left) && p.contains(&iv.right)));
            }
            assert_eq!(w[1].intervals.len(), 2 * w[0].intervals.len());
        }
    }

    #[test]
    fn localization_examples() {
        let eps = rat(1, 1 << 30);
        let rep = localize_roots(&rat(2, 1), 0, 2, &eps).unwrap();
        assert_eq!(rep.per_interval, vec![1, 1]);
        assert_eq!(rep.outside, 0);
        let rep = localize_roots(&rat(2, 1), 1, 2, &eps).unwrap();
        assert_eq!(rep.degree, 2);
        let rep = localize_roots(&rat(5, 2), 0, 4, &eps).unwrap();
        assert_eq!(rep.per_interval.len(), 8);
        assert_eq!(rep.real_roots, 8);
    }
}
