use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::algebraic::RealAlgebraic;
use super::poly::IntPolynomial;
use super::Rational;
use crate::error::{Error, Result};

/// Sturm sequence of the squarefree part of a polynomial, built from
/// primitive pseudo-remainders with signs adjusted so that each term is a
/// positive multiple of the classical negated remainder.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    seq: Vec<IntPolynomial>,
}

impl SturmSequence {
    pub fn new(p: &IntPolynomial) -> Self {
        assert!(!p.is_zero(), "Sturm sequence of the zero polynomial");
        let s0 = p.squarefree_part();
        let mut seq = vec![s0.clone()];
        if s0.deg() == 0 {
            return SturmSequence { seq };
        }
        let s1 = s0.derivative().primitive();
        seq.push(s1);
        loop {
            let n = seq.len();
            let (a, b) = (&seq[n - 2], &seq[n - 1]);
            if b.deg() == 0 {
                break;
            }
            let r = a.pseudo_rem(b);
            if r.is_zero() {
                break;
            }
            let delta = a.deg() - b.deg();
            let lc_neg = b.lc().unwrap().is_negative();
            // prem scaled by lc(b)^(delta+1); undo its sign, then negate
            let flip = lc_neg && (delta + 1) % 2 == 1;
            let r = r.primitive();
            seq.push(if flip { r } else { -r });
        }
        SturmSequence { seq }
    }

    /// The squarefree polynomial the sequence was built from.
    pub fn base(&self) -> &IntPolynomial {
        &self.seq[0]
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    fn changes(signs: impl Iterator<Item = Sign>) -> usize {
        let mut last = Sign::NoSign;
        let mut n = 0;
        for s in signs {
            if s == Sign::NoSign {
                continue;
            }
            if last != Sign::NoSign && s != last {
                n += 1;
            }
            last = s;
        }
        n
    }

    pub fn sign_changes_at(&self, x: &Rational) -> usize {
        Self::changes(self.seq.iter().map(|p| p.sign_at(x)))
    }

    pub fn sign_changes_at_infinity(&self, positive: bool) -> usize {
        Self::changes(self.seq.iter().map(|p| {
            let s = p.lc().unwrap().sign();
            if !positive && p.deg() % 2 == 1 {
                -s
            } else {
                s
            }
        }))
    }

    /// Distinct real roots in `(a, b]`.
    pub fn count_half_open(&self, a: &Rational, b: &Rational) -> usize {
        if a >= b {
            return 0;
        }
        self.sign_changes_at(a) - self.sign_changes_at(b)
    }

    /// Distinct real roots in `[a, b]`.
    pub fn count_closed(&self, a: &Rational, b: &Rational) -> usize {
        if a > b {
            return 0;
        }
        let at_a = usize::from(self.base().sign_at(a) == Sign::NoSign);
        if a == b {
            return at_a;
        }
        self.count_half_open(a, b) + at_a
    }

    /// Distinct real roots in `(a, b)`.
    pub fn count_open(&self, a: &Rational, b: &Rational) -> usize {
        if a >= b {
            return 0;
        }
        let at_b = usize::from(self.base().sign_at(b) == Sign::NoSign);
        self.count_half_open(a, b) - at_b
    }

    /// Number of distinct real roots.
    pub fn count_real(&self) -> usize {
        self.sign_changes_at_infinity(false) - self.sign_changes_at_infinity(true)
    }
}

/// Integer `B` with every complex root of `p` strictly inside `|z| < B`.
pub fn root_bound(p: &IntPolynomial) -> BigInt {
    let lc = p.lc().expect("root bound of the zero polynomial").abs();
    let m = p.coeffs()[..p.deg()].iter().map(|a| a.abs()).max().unwrap_or_else(BigInt::zero);
    BigInt::one() + m.div_ceil(&lc) + BigInt::one()
}

/// Where an algebraic endpoint sits relative to the roots of some `p`:
/// a rational interval `[lo, hi]` containing the endpoint and no root of `p`
/// other than possibly the endpoint itself.
struct Located {
    lo: Rational,
    hi: Rational,
    is_root: bool,
}

fn locate(s: &SturmSequence, x: &RealAlgebraic) -> Located {
    if let Some(q) = x.as_rational() {
        let is_root = s.base().sign_at(q) == Sign::NoSign;
        return Located { lo: q.clone(), hi: q.clone(), is_root };
    }
    let g = s.base().gcd(x.minpoly());
    let mut x = x.clone();
    loop {
        let (lo, hi) = x.isolation();
        let c = s.count_closed(lo, hi);
        if c == 0 {
            return Located { lo: lo.clone(), hi: hi.clone(), is_root: false };
        }
        if c == 1 && g.deg() > 0 && SturmSequence::new(&g).count_open(lo, hi) == 1 {
            return Located { lo: lo.clone(), hi: hi.clone(), is_root: true };
        }
        if !x.bisect() {
            // collapsed onto a rational point
            return locate(s, &x);
        }
    }
}

/// Distinct real roots of `p` in the closed interval `[a, b]`.
pub fn count_roots_closed(p: &IntPolynomial, a: &RealAlgebraic, b: &RealAlgebraic) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::IndeterminateRootCount);
    }
    let s = SturmSequence::new(p);
    Ok(count_closed_with(&s, a, b))
}

pub(crate) fn count_closed_with(s: &SturmSequence, a: &RealAlgebraic, b: &RealAlgebraic) -> usize {
    match super::algebraic::alg_compare(a, b) {
        core::cmp::Ordering::Greater => return 0,
        core::cmp::Ordering::Equal => return usize::from(locate(s, a).is_root),
        core::cmp::Ordering::Less => {}
    }
    let la = locate(s, a);
    let lb = locate(s, b);
    let (mut la, mut lb) = (la, lb);
    if la.hi >= lb.lo {
        // isolations overlap; tighten both until they separate
        let (mut a, mut b) = (a.clone(), b.clone());
        while la.hi >= lb.lo {
            a.bisect();
            b.bisect();
            la = locate(s, &a);
            lb = locate(s, &b);
        }
    }
    // no root of p in [la.lo, la.hi] or [lb.lo, lb.hi] besides a and b
    let inner = s.count_open(&la.hi, &lb.lo);
    inner + usize::from(la.is_root) + usize::from(lb.is_root)
}

/// Number of distinct real roots of `p` in `(a, b]`.
///
/// Endpoints may be rational or algebraic; roots sitting exactly at an
/// endpoint are detected exactly, never by perturbation. Use
/// [`count_roots_closed`] for the closed interval.
pub fn sturm_count(p: &IntPolynomial, a: &RealAlgebraic, b: &RealAlgebraic) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::IndeterminateRootCount);
    }
    let s = SturmSequence::new(p);
    if super::algebraic::alg_compare(a, b) != core::cmp::Ordering::Less {
        return Ok(0);
    }
    let closed = count_closed_with(&s, a, b);
    Ok(closed - usize::from(locate(&s, a).is_root))
}

/// One isolating [`RealAlgebraic`] per distinct real root, in increasing
/// order. Rational roots hit by a bisection point come back exact.
pub fn isolate_real_roots(p: &IntPolynomial) -> Vec<RealAlgebraic> {
    assert!(!p.is_zero(), "root isolation of the zero polynomial");
    let s = SturmSequence::new(p);
    let base = s.base().clone();
    if base.deg() == 0 {
        return Vec::new();
    }
    let b = Rational::from_integer(root_bound(&base));
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b, s.count_real())];
    while let Some((l, r, k)) = stack.pop() {
        if k == 0 {
            continue;
        }
        if k == 1 {
            out.push(RealAlgebraic::from_parts_unchecked(base.clone(), l, r));
            continue;
        }
        let m = (&l + &r) / Rational::from_integer(BigInt::from(2));
        if base.sign_at(&m) == Sign::NoSign {
            out.push(RealAlgebraic::from_rational(m.clone()));
            // push a gap around m that holds no other root
            let mut d = (&r - &l) / Rational::from_integer(BigInt::from(4));
            loop {
                let (ml, mr) = (&m - &d, &m + &d);
                if s.count_closed(&ml, &mr) == 1
                    && base.sign_at(&ml) != Sign::NoSign
                    && base.sign_at(&mr) != Sign::NoSign
                {
                    let left = s.count_open(&l, &ml);
                    let right = k - 1 - left;
                    stack.push((mr, r, right));
                    stack.push((l, ml, left));
                    break;
                }
                d /= Rational::from_integer(BigInt::from(2));
            }
            continue;
        }
        let left = s.count_open(&l, &m);
        stack.push((m.clone(), r, k - left));
        stack.push((l, m, left));
    }
    out.sort_by(super::algebraic::alg_compare);
    out
}

/// Distinct real roots of `p` (zero polynomial rejected).
pub fn count_real_roots(p: &IntPolynomial) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::IndeterminateRootCount);
    }
    Ok(SturmSequence::new(p).count_real())
}
