//! Logarithmic capacity: exact interval and lemniscate capacities, the
//! n-diameter sequence of an interval, the degree criterion built on it, and
//! a numerical Fekete-point optimizer.
//!
//! Only the Archimedean place is computed. For the adelic sets in play every
//! non-Archimedean factor of the capacity product equals 1, so the product
//! reduces to the Archimedean capacity.

mod fekete;

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Pow};

use crate::arith::{alg_compare, rat, DyadicInterval, Rational, RealAlgebraic};
use crate::error::{Error, Result};
use crate::orbit::escape_radius;
use crate::precision::{default_precision, MAX_PRECISION_BITS};

pub use fekete::{fekete_optimize, FeketeConfig, FeketeConfiguration, FeketeSet};

/// `(b - a) / 4`.
pub fn interval_capacity(a: &RealAlgebraic, b: &RealAlgebraic) -> Result<RealAlgebraic> {
    if alg_compare(a, b) != Ordering::Less {
        return Err(Error::InvalidArgument("need a < b".into()));
    }
    Ok(b.sub(a).mul_rational(&rat(1, 4)))
}

/// Enclosure of `R_alpha^(1 / 2^(n-1))`, the capacity of the lemniscate
/// `{c : |psi_n(c)| <= R_alpha}`.
pub fn lemniscate_capacity(alpha: &Rational, n: u32) -> Result<DyadicInterval> {
    if n == 0 {
        return Err(Error::InvalidArgument("need n >= 1".into()));
    }
    let prec = default_precision().max(64) + n;
    let mut x = escape_radius(alpha).enclosure(prec);
    for _ in 1..n {
        x = x.sqrt();
    }
    Ok(x)
}

/// `D_n` from `D_2 = 1` and
/// `D_n = n^n (n-2)^(n-2) / (2^(2n-2) (2n-3)^(2n-3)) D_(n-1)`.
pub fn d_sequence(n: u32) -> Result<Rational> {
    if n < 2 {
        return Err(Error::InvalidArgument("need n >= 2".into()));
    }
    let mut d = Rational::one();
    for k in 3..=n {
        let k = k as u64;
        let num = BigInt::from(k).pow(k) * BigInt::from(k - 2).pow(k - 2);
        let den = (BigInt::one() << (2 * k - 2) as usize) * BigInt::from(2 * k - 3).pow(2 * k - 3);
        d *= Rational::new(num, den);
    }
    Ok(d)
}

/// `b_n = n^(2n) / (n!)^2`.
pub fn b_sequence(n: u32) -> Rational {
    let n64 = n as u64;
    let fact: BigInt = (1..=n64).map(BigInt::from).product();
    Rational::new(BigInt::from(n64).pow(2 * n64), &fact * &fact)
}

/// Enclosure of `d_n([a, b]) = (b - a) D_n^(1 / (n(n-1)))`.
pub fn exact_n_diameter(a: &RealAlgebraic, b: &RealAlgebraic, n: u32) -> Result<DyadicInterval> {
    if alg_compare(a, b) != Ordering::Less {
        return Err(Error::InvalidArgument("need a < b".into()));
    }
    let dn = d_sequence(n)?;
    let prec = default_precision().max(64);
    let len = b.sub(a).enclosure(prec);
    let root = DyadicInterval::from_rational(&dn, prec).root(n * (n - 1));
    Ok(len.mul(&root))
}

/// One row of the degree criterion table.
#[derive(Clone, Debug, PartialEq)]
pub struct CriterionRow {
    pub n: u32,
    /// `a_n = d_n^(n(n-1)) = (b - a)^(n(n-1)) D_n`.
    pub a_n: DyadicInterval,
    pub b_n: Rational,
    /// `a_n < b_n`.
    pub a_below_b: bool,
    /// `a_(n+1) / a_n < b_(n+1) / b_n`.
    pub ratio_below: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CriterionReport {
    pub interval: (RealAlgebraic, RealAlgebraic),
    /// Smallest `n >= 2` passing both strict inequalities. A totally real
    /// algebraic integer with all conjugates in the interval then has
    /// degree below `n0`.
    pub n0: Option<u32>,
    pub table: Vec<CriterionRow>,
    /// Every comparison in the table was decided with certified bounds and
    /// `n0` was found.
    pub certified: bool,
}

pub const DEFAULT_CRITERION_CAP: u32 = 64;

pub fn degree_bound(a: &RealAlgebraic, b: &RealAlgebraic) -> Result<CriterionReport> {
    degree_bound_with_cap(a, b, DEFAULT_CRITERION_CAP)
}

pub fn degree_bound_with_cap(a: &RealAlgebraic, b: &RealAlgebraic, cap: u32) -> Result<CriterionReport> {
    if alg_compare(a, b) != Ordering::Less {
        return Err(Error::InvalidArgument("need a < b".into()));
    }
    let len = b.sub(a);
    if alg_compare(&len, &RealAlgebraic::from_int(4)) != Ordering::Less {
        return Err(Error::CriterionInapplicable);
    }
    let mut table = Vec::new();
    let mut n0 = None;
    let mut d_next = d_sequence(2)?;
    for n in 2..=cap {
        let d_n = d_next;
        d_next = d_sequence(n + 1)?;
        let b_n = b_sequence(n);
        let e = n * (n - 1);
        let a_below_b = pow_times_below(&len, e, &d_n, &b_n);
        // a_(n+1) / a_n = L^(2n) D_(n+1) / D_n
        let ratio_b = b_sequence(n + 1) / &b_n;
        let ratio_below = pow_times_below(&len, 2 * n, &(&d_next / &d_n), &ratio_b);
        let a_n = len.enclosure(default_precision().max(64)).pow(e).mul_rational(&d_n);
        table.push(CriterionRow { n, a_n, b_n, a_below_b, ratio_below });
        if a_below_b && ratio_below {
            n0 = Some(n);
            break;
        }
    }
    Ok(CriterionReport { interval: (a.clone(), b.clone()), certified: n0.is_some(), n0, table })
}

/// Decides `x^k * d < r` for a positive real algebraic `x`, exactly.
fn pow_times_below(x: &RealAlgebraic, k: u32, d: &Rational, r: &Rational) -> bool {
    let target = r / d;
    if let Some(q) = x.as_rational() {
        return q.pow(k as i32) < target;
    }
    let mut prec = 64;
    let mut checked_equal = false;
    loop {
        let v = x.enclosure(prec).pow(k);
        if v.lt_rational(&target) {
            return true;
        }
        if v.gt_rational(&target) {
            return false;
        }
        if !checked_equal && prec >= 1024 {
            if x.pow_equals_rational(k, &target) {
                return false;
            }
            checked_equal = true;
        }
        // distinct algebraic numbers separate at finite precision
        prec = (prec * 2).min(MAX_PRECISION_BITS);
    }
}

#[cfg(test)]
mod tests;
