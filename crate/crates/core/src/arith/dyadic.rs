//! Dyadic rationals `m * 2^e` and outward-rounded intervals over them.

use core::cmp::Ordering;
use core::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Round {
    Down,
    Up,
}

/// Exact dyadic rational `mant * 2^exp`.
#[derive(Clone, Debug)]
pub struct Dyadic {
    mant: BigInt,
    exp: i64,
}

fn floor_shr(m: &BigInt, k: u64) -> BigInt {
    if m.is_negative() {
        let one = BigInt::one() << k;
        -((-m + &one - 1u32) >> k)
    } else {
        m >> k
    }
}

fn shr_round(m: &BigInt, k: u64, dir: Round) -> BigInt {
    match dir {
        Round::Down => floor_shr(m, k),
        Round::Up => -floor_shr(&-m, k),
    }
}

impl Dyadic {
    pub fn new(mant: BigInt, exp: i64) -> Self {
        Dyadic { mant, exp }.normalize()
    }

    fn normalize(mut self) -> Self {
        if self.mant.is_zero() {
            self.exp = 0;
            return self;
        }
        let tz = self.mant.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            self.mant >>= tz;
            self.exp += tz as i64;
        }
        self
    }

    pub fn zero() -> Self {
        Dyadic { mant: BigInt::zero(), exp: 0 }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Dyadic::new(n.into(), 0)
    }

    /// Exact conversion; panics on non-finite input.
    pub fn from_f64(x: f64) -> Self {
        assert!(x.is_finite(), "non-finite float");
        if x == 0.0 {
            return Self::zero();
        }
        let bits = x.to_bits();
        let sign = if bits >> 63 == 1 { -1i64 } else { 1 };
        let exp_bits = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, e) = if exp_bits == 0 { (frac, -1074) } else { (frac | (1u64 << 52), exp_bits - 1075) };
        Dyadic::new(BigInt::from(m) * sign, e)
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn sign(&self) -> Sign {
        self.mant.sign()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    /// Position of the leading bit: `|self| < 2^magnitude()`.
    pub fn magnitude(&self) -> i64 {
        self.exp + self.mant.bits() as i64
    }

    pub fn to_rational(&self) -> Rational {
        if self.exp >= 0 {
            Rational::from_integer(&self.mant << self.exp as u64)
        } else {
            Rational::new(self.mant.clone(), BigInt::one() << (-self.exp) as u64)
        }
    }

    /// Rounds `q` to a dyadic with about `prec` significant bits.
    pub fn from_rational(q: &Rational, prec: u32, dir: Round) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        let (n, d) = (q.numer(), q.denom());
        let k = prec as i64 + d.bits() as i64 - n.bits() as i64 + 1;
        let (num, den) = if k >= 0 { (n << k as u64, d.clone()) } else { (n.clone(), d << (-k) as u64) };
        let m = match dir {
            Round::Down => num.div_floor(&den),
            Round::Up => -((-num).div_floor(&den)),
        };
        Dyadic::new(m, -k)
    }

    /// Rounds to at most `prec` mantissa bits.
    pub fn round(&self, prec: u32, dir: Round) -> Self {
        let bits = self.mant.bits();
        if bits <= prec as u64 {
            return self.clone();
        }
        let k = bits - prec as u64;
        Dyadic::new(shr_round(&self.mant, k, dir), self.exp + k as i64)
    }

    pub fn neg(&self) -> Self {
        Dyadic { mant: -&self.mant, exp: self.exp }
    }

    pub fn abs(&self) -> Self {
        Dyadic { mant: self.mant.abs(), exp: self.exp }
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let e = self.exp.min(o.exp);
        let a = &self.mant << (self.exp - e) as u64;
        let b = &o.mant << (o.exp - e) as u64;
        Dyadic::new(a + b, e)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        Dyadic::new(&self.mant * &o.mant, self.exp + o.exp)
    }

    /// Multiplies by `2^k`.
    pub fn ldexp(&self, k: i64) -> Self {
        Dyadic { mant: self.mant.clone(), exp: self.exp + k }
    }

    pub fn cmp_rational(&self, q: &Rational) -> Ordering {
        self.to_rational().cmp(q)
    }

    /// Directed square root of a nonnegative value.
    pub fn sqrt(&self, prec: u32, dir: Round) -> Self {
        self.root(2, prec, dir)
    }

    /// Directed `k`-th root of a nonnegative value.
    pub fn root(&self, k: u32, prec: u32, dir: Round) -> Self {
        assert!(!self.is_negative(), "root of a negative dyadic");
        assert!(k >= 1);
        if self.is_zero() || k == 1 {
            return self.round(prec, dir);
        }
        let kk = k as i64;
        let want = kk * (prec as i64 + 2);
        let mut t = (want - self.mant.bits() as i64).max(0);
        t += (self.exp - t).rem_euclid(kk);
        let m = &self.mant << t as u64;
        let s = m.nth_root(k);
        let exact = s.pow(k) == m;
        let s = if !exact && dir == Round::Up { s + 1u32 } else { s };
        Dyadic::new(s, (self.exp - t) / kk).round(prec, dir)
    }

    /// Directed power of a nonnegative value.
    pub fn pow_pos(&self, mut k: u32, prec: u32, dir: Round) -> Self {
        debug_assert!(!self.is_negative());
        let mut base = self.clone();
        let mut acc = Dyadic::from_int(1);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base).round(prec, dir);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base).round(prec, dir);
            }
        }
        acc
    }

    /// Nearest-below (`Down`) or nearest-above (`Up`) `f64`.
    pub fn to_f64(&self, dir: Round) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let r = self.round(53, dir);
        let top = r.magnitude();
        if top > 1024 {
            return match (r.is_negative(), dir) {
                (false, Round::Up) => f64::INFINITY,
                (false, Round::Down) => f64::MAX,
                (true, Round::Down) => f64::NEG_INFINITY,
                (true, Round::Up) => f64::MIN,
            };
        }
        if top < -1020 {
            let pos = !r.is_negative();
            return match (pos, dir) {
                (true, Round::Up) => f64::MIN_POSITIVE,
                (false, Round::Down) => -f64::MIN_POSITIVE,
                _ => 0.0,
            };
        }
        let m = r.mant.to_f64().unwrap();
        libm::scalbn(m, r.exp as i32)
    }

    pub fn to_f64_nearest(&self) -> f64 {
        let lo = self.to_f64(Round::Down);
        let hi = self.to_f64(Round::Up);
        if lo == hi {
            lo
        } else {
            lo + (hi - lo) / 2.0
        }
    }
}

impl PartialEq for Dyadic {
    fn eq(&self, o: &Self) -> bool {
        self.cmp(o) == Ordering::Equal
    }
}

impl Eq for Dyadic {}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, o: &Self) -> Ordering {
        self.sub(o).mant.sign().cmp(&Sign::NoSign)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_f64_nearest())
    }
}

/// Closed interval `[lo, hi]` with dyadic endpoints. Every operation rounds
/// `lo` down and `hi` up to `prec` bits, so results enclose the exact value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DyadicInterval {
    lo: Dyadic,
    hi: Dyadic,
    prec: u32,
}

impl DyadicInterval {
    pub fn new(lo: Dyadic, hi: Dyadic, prec: u32) -> Self {
        assert!(lo <= hi, "inverted interval");
        DyadicInterval { lo: lo.round(prec, Round::Down), hi: hi.round(prec, Round::Up), prec }
    }

    pub fn point(d: Dyadic, prec: u32) -> Self {
        Self::new(d.clone(), d, prec)
    }

    pub fn from_int(n: i64, prec: u32) -> Self {
        Self::point(Dyadic::from_int(n), prec)
    }

    pub fn from_rational(q: &Rational, prec: u32) -> Self {
        DyadicInterval {
            lo: Dyadic::from_rational(q, prec, Round::Down),
            hi: Dyadic::from_rational(q, prec, Round::Up),
            prec,
        }
    }

    /// Hull of two rationals.
    pub fn from_rational_bounds(lo: &Rational, hi: &Rational, prec: u32) -> Self {
        assert!(lo <= hi);
        DyadicInterval {
            lo: Dyadic::from_rational(lo, prec, Round::Down),
            hi: Dyadic::from_rational(hi, prec, Round::Up),
            prec,
        }
    }

    pub fn lo(&self) -> &Dyadic {
        &self.lo
    }

    pub fn hi(&self) -> &Dyadic {
        &self.hi
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    pub fn with_precision(&self, prec: u32) -> Self {
        Self::new(self.lo.clone(), self.hi.clone(), prec)
    }

    pub fn width(&self) -> Dyadic {
        self.hi.sub(&self.lo)
    }

    pub fn midpoint(&self) -> Dyadic {
        self.lo.add(&self.hi).ldexp(-1)
    }

    pub fn contains(&self, d: &Dyadic) -> bool {
        &self.lo <= d && d <= &self.hi
    }

    pub fn contains_rational(&self, q: &Rational) -> bool {
        self.lo.cmp_rational(q) != Ordering::Greater && self.hi.cmp_rational(q) != Ordering::Less
    }

    pub fn contains_zero(&self) -> bool {
        self.lo.sign() != Sign::Plus && self.hi.sign() != Sign::Minus
    }

    pub fn contains_interval(&self, o: &Self) -> bool {
        self.lo <= o.lo && o.hi <= self.hi
    }

    /// Every point is `> q`.
    pub fn gt_rational(&self, q: &Rational) -> bool {
        self.lo.cmp_rational(q) == Ordering::Greater
    }

    /// Every point is `< q`.
    pub fn lt_rational(&self, q: &Rational) -> bool {
        self.hi.cmp_rational(q) == Ordering::Less
    }

    /// Certified comparison with another interval; `None` when they overlap.
    pub fn certainly_cmp(&self, o: &Self) -> Option<Ordering> {
        if self.hi < o.lo {
            Some(Ordering::Less)
        } else if o.hi < self.lo {
            Some(Ordering::Greater)
        } else if self.lo == self.hi && o.lo == o.hi && self.lo == o.lo {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    /// Sign of every point, `None` if the interval contains zero in its
    /// interior or straddles it.
    pub fn sign(&self) -> Option<Sign> {
        if self.lo.sign() == Sign::Plus {
            Some(Sign::Plus)
        } else if self.hi.sign() == Sign::Minus {
            Some(Sign::Minus)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(Sign::NoSign)
        } else {
            None
        }
    }

    fn prec_of(&self, o: &Self) -> u32 {
        self.prec.max(o.prec)
    }

    pub fn neg(&self) -> Self {
        DyadicInterval { lo: self.hi.neg(), hi: self.lo.neg(), prec: self.prec }
    }

    pub fn add(&self, o: &Self) -> Self {
        let p = self.prec_of(o);
        DyadicInterval {
            lo: self.lo.add(&o.lo).round(p, Round::Down),
            hi: self.hi.add(&o.hi).round(p, Round::Up),
            prec: p,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn add_rational(&self, q: &Rational) -> Self {
        self.add(&Self::from_rational(q, self.prec))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let p = self.prec_of(o);
        let cands = [self.lo.mul(&o.lo), self.lo.mul(&o.hi), self.hi.mul(&o.lo), self.hi.mul(&o.hi)];
        let lo = cands.iter().min().unwrap();
        let hi = cands.iter().max().unwrap();
        DyadicInterval { lo: lo.round(p, Round::Down), hi: hi.round(p, Round::Up), prec: p }
    }

    pub fn mul_rational(&self, q: &Rational) -> Self {
        self.mul(&Self::from_rational(q, self.prec))
    }

    /// Multiplies by `2^k`, exactly.
    pub fn ldexp(&self, k: i64) -> Self {
        DyadicInterval { lo: self.lo.ldexp(k), hi: self.hi.ldexp(k), prec: self.prec }
    }

    pub fn abs(&self) -> Self {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_negative() && !self.hi.is_zero() {
            let m = if self.lo.abs() > self.hi { self.lo.abs() } else { self.hi.clone() };
            DyadicInterval { lo: Dyadic::zero(), hi: m, prec: self.prec }
        } else {
            self.neg()
        }
    }

    pub fn square(&self) -> Self {
        let a = self.abs();
        DyadicInterval {
            lo: a.lo.mul(&a.lo).round(self.prec, Round::Down),
            hi: a.hi.mul(&a.hi).round(self.prec, Round::Up),
            prec: self.prec,
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        if k == 0 {
            return Self::from_int(1, self.prec);
        }
        let p = self.prec;
        if !self.lo.is_negative() {
            return DyadicInterval { lo: self.lo.pow_pos(k, p, Round::Down), hi: self.hi.pow_pos(k, p, Round::Up), prec: p };
        }
        let a = self.abs();
        let top = a.hi.pow_pos(k, p, Round::Up);
        if k.is_multiple_of(2) {
            return DyadicInterval { lo: a.lo.pow_pos(k, p, Round::Down), hi: top, prec: p };
        }
        // odd powers are monotone
        let sp = |d: &Dyadic, dir: Round| -> Dyadic {
            if d.is_negative() {
                let flip = if dir == Round::Down { Round::Up } else { Round::Down };
                d.abs().pow_pos(k, p, flip).neg()
            } else {
                d.pow_pos(k, p, dir)
            }
        };
        DyadicInterval { lo: sp(&self.lo, Round::Down), hi: sp(&self.hi, Round::Up), prec: p }
    }

    /// Square root, with negative parts of the interval clamped to zero.
    pub fn sqrt(&self) -> Self {
        self.root(2)
    }

    /// `k`-th root, with negative parts of the interval clamped to zero.
    pub fn root(&self, k: u32) -> Self {
        let lo = if self.lo.is_negative() { Dyadic::zero() } else { self.lo.clone() };
        let hi = if self.hi.is_negative() { Dyadic::zero() } else { self.hi.clone() };
        DyadicInterval { lo: lo.root(k, self.prec, Round::Down), hi: hi.root(k, self.prec, Round::Up), prec: self.prec }
    }

    /// Hull of two intervals.
    pub fn hull(&self, o: &Self) -> Self {
        DyadicInterval {
            lo: if self.lo < o.lo { self.lo.clone() } else { o.lo.clone() },
            hi: if self.hi > o.hi { self.hi.clone() } else { o.hi.clone() },
            prec: self.prec_of(o),
        }
    }

    pub fn to_f64_bounds(&self) -> (f64, f64) {
        (self.lo.to_f64(Round::Down), self.hi.to_f64(Round::Up))
    }

    pub fn lo_rational(&self) -> Rational {
        self.lo.to_rational()
    }

    pub fn hi_rational(&self) -> Rational {
        self.hi.to_rational()
    }
}

impl fmt::Display for DyadicInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lo, hi) = self.to_f64_bounds();
        write!(f, "[{lo:e}, {hi:e}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn floor_shift_negative() {
        assert_eq!(floor_shr(&BigInt::from(-5), 1), BigInt::from(-3));
        assert_eq!(shr_round(&BigInt::from(-5), 1, Round::Up), BigInt::from(-2));
        assert_eq!(shr_round(&BigInt::from(5), 1, Round::Up), BigInt::from(3));
    }

    #[test]
    fn f64_round_trip() {
        for x in [1.5, -0.1, 3.0e300, 1e-300, -2.0] {
            assert_eq!(Dyadic::from_f64(x).to_f64(Round::Down), x);
        }
    }

    #[test]
    fn rational_rounding_brackets() {
        let third = q(1, 3);
        let lo = Dyadic::from_rational(&third, 40, Round::Down);
        let hi = Dyadic::from_rational(&third, 40, Round::Up);
        assert!(lo.to_rational() < third && third < hi.to_rational());
        assert!(hi.sub(&lo).magnitude() < -38);
    }

    #[test]
    fn sqrt_two_encloses() {
        let i = DyadicInterval::from_int(2, 64).sqrt();
        let two = q(2, 1);
        assert!(i.lo().to_rational().pow(2) < two);
        assert!(i.hi().to_rational().pow(2) > two);
        let (l, h) = i.to_f64_bounds();
        assert!(l <= core::f64::consts::SQRT_2 && core::f64::consts::SQRT_2 <= h);
    }

    #[test]
    fn exact_roots_stay_points() {
        let i = DyadicInterval::from_int(16, 64).root(4);
        assert_eq!(i.lo(), &Dyadic::from_int(2));
        assert_eq!(i.hi(), &Dyadic::from_int(2));
    }

    #[test]
    fn interval_ops() {
        let a = DyadicInterval::from_rational_bounds(&q(-1, 1), &q(2, 1), 32);
        let s = a.square();
        assert_eq!(s.lo(), &Dyadic::zero());
        assert_eq!(s.hi(), &Dyadic::from_int(4));
        let c = a.pow(3);
        assert_eq!(c.lo(), &Dyadic::from_int(-1));
        assert_eq!(c.hi(), &Dyadic::from_int(8));
        let m = a.mul(&a.neg());
        assert_eq!(m.lo(), &Dyadic::from_int(-4));
        assert_eq!(m.hi(), &Dyadic::from_int(2));
        assert!(a.contains_zero());
        assert_eq!(a.sign(), None);
        assert!(a.add_rational(&q(3, 2)).gt_rational(&q(1, 4)));
    }
}
