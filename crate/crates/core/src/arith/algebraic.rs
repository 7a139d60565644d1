use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::dyadic::{DyadicInterval, Round};
use super::poly::{IntPolynomial, RatPolynomial};
use super::sturm::SturmSequence;
use super::Rational;
use crate::error::{Error, Result};

/// A real algebraic number: a squarefree, primitive integer polynomial with
/// positive leading coefficient together with a rational isolating interval.
///
/// When `lo == hi` the number is that rational and the polynomial is its
/// linear minimal polynomial. Otherwise the polynomial has exactly one root
/// in the open interval `(lo, hi)` and does not vanish at either endpoint.
#[derive(Clone, Debug)]
pub struct RealAlgebraic {
    poly: IntPolynomial,
    lo: Rational,
    hi: Rational,
}

fn two() -> Rational {
    Rational::from_integer(BigInt::from(2))
}

impl RealAlgebraic {
    pub fn from_rational(q: Rational) -> Self {
        let poly = IntPolynomial::new(vec![-q.numer().clone(), q.denom().clone()]);
        RealAlgebraic { poly, lo: q.clone(), hi: q }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    /// Trusts the caller: `poly` squarefree, exactly one root in `(lo, hi)`,
    /// nonzero at both endpoints.
    pub(crate) fn from_parts_unchecked(poly: IntPolynomial, lo: Rational, hi: Rational) -> Self {
        Self::linear_as_rational(RealAlgebraic { poly: poly.normalized(), lo, hi })
    }

    /// Collapses the isolating interval of a degree one number to its root.
    fn linear_as_rational(x: Self) -> Self {
        if x.poly.deg() == 1 && x.lo != x.hi {
            let c = x.poly.coeffs();
            return Self::from_rational(Rational::new(-c[0].clone(), c[1].clone()));
        }
        x
    }

    /// The unique root of `p` in the closed interval `[lo, hi]`.
    pub fn from_root_in(p: &IntPolynomial, lo: &Rational, hi: &Rational) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::IndeterminateRootCount);
        }
        if lo > hi {
            return Err(Error::InvalidArgument("isolating interval is inverted".into()));
        }
        let s = SturmSequence::new(p);
        let base = s.base().clone();
        let c = s.count_closed(lo, hi);
        if c != 1 {
            return Err(Error::InvalidArgument(alloc::format!(
                "expected one root of {p} in [{lo}, {hi}], found {c}"
            )));
        }
        if base.sign_at(lo) == Sign::NoSign {
            return Ok(Self::from_rational(lo.clone()));
        }
        if base.sign_at(hi) == Sign::NoSign {
            return Ok(Self::from_rational(hi.clone()));
        }
        Ok(Self::linear_as_rational(RealAlgebraic { poly: base, lo: lo.clone(), hi: hi.clone() }))
    }

    /// `r + s * sqrt(n)` for rationals with `n >= 0`.
    pub fn from_quadratic(r: &Rational, s: &Rational, n: &Rational) -> Result<Self> {
        if n.is_negative() {
            return Err(Error::InvalidArgument("square root of a negative rational".into()));
        }
        if s.is_zero() || n.is_zero() {
            return Ok(Self::from_rational(r.clone()));
        }
        if let Some(root) = rational_sqrt(n) {
            return Ok(Self::from_rational(r + s * root));
        }
        // (X - r)^2 - s^2 n
        let poly = RatPolynomial::new(vec![r * r - s * s * n, -(r * two()), Rational::one()]).to_primitive_int();
        let mut prec = 64;
        loop {
            let e = DyadicInterval::from_rational(n, prec).sqrt();
            let (a, b) = (e.lo_rational() * s + r, e.hi_rational() * s + r);
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            if let Ok(x) = Self::from_root_in(&poly, &lo, &hi) {
                return Ok(x);
            }
            prec *= 2;
        }
    }

    /// `sqrt(q)` for a rational `q >= 0`.
    pub fn sqrt_of_rational(q: &Rational) -> Result<Self> {
        Self::from_quadratic(&Rational::zero(), &Rational::one(), q)
    }

    pub fn minpoly(&self) -> &IntPolynomial {
        &self.poly
    }

    pub fn isolation(&self) -> (&Rational, &Rational) {
        (&self.lo, &self.hi)
    }

    pub fn is_rational(&self) -> bool {
        self.lo == self.hi
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        if self.is_rational() {
            Some(&self.lo)
        } else {
            None
        }
    }

    /// Degree of the stored polynomial (1 for rationals).
    pub fn degree(&self) -> usize {
        self.poly.deg()
    }

    /// Halves the isolating interval. Returns `false` when the number is
    /// already an exact rational.
    pub fn bisect(&mut self) -> bool {
        if self.is_rational() {
            return false;
        }
        let s_lo = self.poly_sign(&self.lo);
        self.halve(s_lo);
        true
    }

    /// One bisection step given the (invariant) sign at `lo`.
    fn halve(&mut self, s_lo: Sign) {
        let m = (&self.lo + &self.hi) / two();
        let sm = self.poly_sign(&m);
        if sm == Sign::NoSign {
            *self = Self::from_rational(m);
        } else if sm == s_lo {
            self.lo = m;
        } else {
            self.hi = m;
        }
    }

    /// Sign of the defining polynomial at `x`: a fixed-point Horner pass when
    /// that is decisive, exact evaluation otherwise.
    fn poly_sign(&self, x: &Rational) -> Sign {
        let d = self.poly.deg() as u64;
        let bits = |v: u64| u64::from(u64::BITS - v.leading_zeros());
        // |x| <= 2^m; with S = sum |a_i| the truncation error of the pass is
        // below (d + 1) 2^(md) (S 2^(md) + 1) units of 2^-p
        let m = (x.numer().bits() as i64 - x.denom().bits() as i64 + 1).max(0) as u64;
        let err_bits = 2 * m * d + self.poly.max_coeff_bits() + 2 * bits(d + 1) + 2;
        let p = err_bits + 64 + x.denom().bits();
        if p <= 1 << 24 {
            let xf = (x.numer() << p as usize) / x.denom();
            let mut acc = BigInt::zero();
            for a in self.poly.coeffs().iter().rev() {
                acc = ((acc * &xf) >> p as usize) + (a << p as usize);
            }
            if acc.bits() > err_bits + 1 {
                return acc.sign();
            }
        }
        self.poly.sign_at(x)
    }

    /// Bisects until the isolating interval is narrower than `eps`.
    pub fn refine_in_place(&mut self, eps: &Rational) {
        assert!(eps.is_positive(), "refinement width must be positive");
        if self.is_rational() {
            return;
        }
        let s_lo = self.poly_sign(&self.lo);
        while !self.is_rational() && &(&self.hi - &self.lo) >= eps {
            self.halve(s_lo);
        }
    }

    /// An isolating interval of width `< eps` (degenerate for rationals).
    pub fn refine(&self, eps: &Rational) -> (Rational, Rational) {
        let mut x = self.clone();
        x.refine_in_place(eps);
        (x.lo, x.hi)
    }

    pub fn refined(&self, eps: &Rational) -> Self {
        let mut x = self.clone();
        x.refine_in_place(eps);
        x
    }

    /// Dyadic enclosure with relative width about `2^-prec`.
    pub fn enclosure(&self, prec: u32) -> DyadicInterval {
        if let Some(q) = self.as_rational() {
            return DyadicInterval::from_rational(q, prec);
        }
        let x = self.refined_bits(prec);
        match x.as_rational() {
            Some(q) => DyadicInterval::from_rational(q, prec),
            None => DyadicInterval::from_rational_bounds(&x.lo, &x.hi, prec + 8),
        }
    }

    /// The same number with its isolating interval shrunk to relative width
    /// `2^-prec`.
    pub fn refined_bits(&self, prec: u32) -> Self {
        let mut x = self.clone();
        if x.is_rational() {
            return x;
        }
        let scale = {
            let m = x.lo.abs().max(x.hi.abs());
            if m > Rational::one() {
                m
            } else {
                Rational::one()
            }
        };
        let eps = scale / Rational::from_integer(BigInt::one() << prec as usize);
        x.refine_in_place(&eps);
        x
    }

    /// Nearest double, independent of the isolating interval.
    pub fn to_f64(&self) -> f64 {
        if let Some(q) = self.as_rational() {
            return rational_to_f64(q);
        }
        // irrational, so never on a half-ulp boundary: refine until both
        // bounds share a 54-bit floor, then round that up to 53 bits
        let mut prec = 64;
        loop {
            let e = self.enclosure(prec);
            let a = e.lo().round(54, Round::Down);
            if a == e.hi().round(54, Round::Down) {
                return a.to_f64(Round::Up);
            }
            prec += 32;
        }
    }

    pub fn neg(&self) -> Self {
        RealAlgebraic { poly: self.poly.reflect().normalized(), lo: -&self.hi, hi: -&self.lo }
    }

    pub fn add_rational(&self, q: &Rational) -> Self {
        if let Some(r) = self.as_rational() {
            return Self::from_rational(r + q);
        }
        RealAlgebraic { poly: self.poly.shifted(&-q).normalized(), lo: &self.lo + q, hi: &self.hi + q }
    }

    pub fn mul_rational(&self, q: &Rational) -> Self {
        if let Some(r) = self.as_rational() {
            return Self::from_rational(r * q);
        }
        if q.is_zero() {
            return Self::from_int(0);
        }
        let poly = self.poly.scaled_roots(q).normalized();
        let (a, b) = (&self.lo * q, &self.hi * q);
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        RealAlgebraic { poly, lo, hi }
    }

    /// Exact sum, via the resultant `Res_y(p(y), q(X - y))` when both
    /// operands are irrational.
    pub fn add(&self, other: &Self) -> Self {
        if let Some(q) = other.as_rational() {
            return self.add_rational(q);
        }
        if let Some(q) = self.as_rational() {
            return other.add_rational(q);
        }
        let r = sum_polynomial(&self.poly, &other.poly).squarefree_part();
        let s = SturmSequence::new(&r);
        let (mut a, mut b) = (self.clone(), other.clone());
        loop {
            let lo = &a.lo + &b.lo;
            let hi = &a.hi + &b.hi;
            if s.count_closed(&lo, &hi) == 1 {
                return Self::from_root_in(&r, &lo, &hi).expect("isolated sum");
            }
            a.bisect();
            b.bisect();
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn signum(&self) -> Sign {
        match alg_compare(self, &Self::from_int(0)) {
            Ordering::Less => Sign::Minus,
            Ordering::Equal => Sign::NoSign,
            Ordering::Greater => Sign::Plus,
        }
    }

    /// Largest integer `<= self`.
    pub fn floor(&self) -> BigInt {
        if let Some(q) = self.as_rational() {
            return q.floor().to_integer();
        }
        let mut x = self.clone();
        loop {
            if let Some(q) = x.as_rational() {
                return q.floor().to_integer();
            }
            let f = x.lo.floor().to_integer();
            let c = x.hi.ceil().to_integer();
            if &c - &f == BigInt::one() {
                return f;
            }
            x.bisect();
        }
    }

    /// Exact sign of `p(self)`.
    pub fn sign_of_poly_at(&self, p: &IntPolynomial) -> Sign {
        if p.is_zero() {
            return Sign::NoSign;
        }
        if let Some(q) = self.as_rational() {
            return p.sign_at(q);
        }
        let g = p.gcd(&self.poly);
        if g.deg() > 0 && SturmSequence::new(&g).count_open(&self.lo, &self.hi) == 1 {
            return Sign::NoSign;
        }
        let s = SturmSequence::new(p);
        let mut x = self.clone();
        loop {
            if let Some(q) = x.as_rational() {
                return p.sign_at(q);
            }
            if s.count_closed(&x.lo, &x.hi) == 0 {
                return p.sign_at(&x.lo);
            }
            x.bisect();
        }
    }

    /// Whether `self^k == r` exactly.
    pub fn pow_equals_rational(&self, k: u32, r: &Rational) -> bool {
        if let Some(q) = self.as_rational() {
            return &Rational::pow(q, k as i32) == r;
        }
        let m = self.poly.to_rational();
        let mut acc = RatPolynomial::one();
        let mut base = RatPolynomial::x();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = (&acc * &base).rem(&m);
            }
            e >>= 1;
            if e > 0 {
                base = base.square().rem(&m);
            }
        }
        let t = acc - RatPolynomial::constant(r.clone());
        if t.is_zero() {
            return true;
        }
        self.sign_of_poly_at(&t.to_primitive_int()) == Sign::NoSign
    }
}

fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let (n, d) = (q.numer(), q.denom());
    let (sn, sd) = (n.sqrt(), d.sqrt());
    if &(&sn * &sn) == n && &(&sd * &sd) == d {
        Some(Rational::new(sn, sd))
    } else {
        None
    }
}

/// Resultant over the rationals by the Euclidean recursion.
pub fn resultant(a: &RatPolynomial, b: &RatPolynomial) -> Rational {
    if a.is_zero() || b.is_zero() {
        return Rational::zero();
    }
    let (m, n) = (a.deg(), b.deg());
    if n == 0 {
        return Rational::pow(b.lc().unwrap(), m as i32);
    }
    if m == 0 {
        return Rational::pow(a.lc().unwrap(), n as i32);
    }
    let r = a.rem(b);
    if r.is_zero() {
        return Rational::zero();
    }
    let s = r.deg();
    let sign = if (m * n) % 2 == 1 { -Rational::one() } else { Rational::one() };
    sign * Rational::pow(b.lc().unwrap(), (m - s) as i32) * resultant(b, &r)
}

/// Integer polynomial vanishing at every `x + y` with `p(x) = 0 = q(y)`.
pub fn sum_polynomial(p: &IntPolynomial, q: &IntPolynomial) -> IntPolynomial {
    let (pr, qr) = (p.to_rational(), q.to_rational());
    let d = p.deg() * q.deg();
    let xs: Vec<Rational> = (0..=d).map(|i| Rational::from_integer(BigInt::from(i))).collect();
    let ys: Vec<Rational> = xs
        .iter()
        .map(|x| {
            // q(x - y) as a polynomial in y
            let lin = RatPolynomial::new(vec![x.clone(), -Rational::one()]);
            resultant(&pr, &qr.compose(&lin))
        })
        .collect();
    interpolate(&xs, &ys).to_primitive_int()
}

/// Newton interpolation through `(xs[i], ys[i])`.
pub fn interpolate(xs: &[Rational], ys: &[Rational]) -> RatPolynomial {
    let n = xs.len();
    let mut coef = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            coef[i] = (&coef[i] - &coef[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut acc = RatPolynomial::constant(coef[n - 1].clone());
    for i in (0..n - 1).rev() {
        let lin = RatPolynomial::new(vec![-xs[i].clone(), Rational::one()]);
        acc = &acc * &lin + RatPolynomial::constant(coef[i].clone());
    }
    acc
}

/// Exact comparison of two real algebraic numbers.
///
/// Disjoint isolations decide immediately. Otherwise equality is decided by
/// whether the gcd of the two polynomials has a root in the overlap, and
/// unequal numbers are separated by bisection.
pub fn alg_compare(x: &RealAlgebraic, y: &RealAlgebraic) -> Ordering {
    match (x.as_rational(), y.as_rational()) {
        (Some(a), Some(b)) => return a.cmp(b),
        (Some(a), None) => return cmp_rational(y, a).reverse(),
        (None, Some(b)) => return cmp_rational(x, b),
        (None, None) => {}
    }
    let (mut x, mut y) = (x.clone(), y.clone());
    let mut tested = false;
    loop {
        if let (Some(_), _) | (_, Some(_)) = (x.as_rational(), y.as_rational()) {
            return alg_compare(&x, &y);
        }
        if x.hi <= y.lo {
            return Ordering::Less;
        }
        if y.hi <= x.lo {
            return Ordering::Greater;
        }
        if !tested {
            tested = true;
            let g = x.poly.gcd(&y.poly);
            if g.deg() > 0 {
                let lo = if x.lo > y.lo { &x.lo } else { &y.lo };
                let hi = if x.hi < y.hi { &x.hi } else { &y.hi };
                if SturmSequence::new(&g).count_open(lo, hi) >= 1 {
                    return Ordering::Equal;
                }
            }
        }
        x.bisect();
        y.bisect();
    }
}

fn cmp_rational(x: &RealAlgebraic, q: &Rational) -> Ordering {
    let mut x = x.clone();
    loop {
        if let Some(r) = x.as_rational() {
            return r.cmp(q);
        }
        if &x.hi <= q {
            return Ordering::Less;
        }
        if &x.lo >= q {
            return Ordering::Greater;
        }
        if x.poly.sign_at(q) == Sign::NoSign {
            return Ordering::Equal;
        }
        x.bisect();
    }
}

impl PartialEq for RealAlgebraic {
    fn eq(&self, other: &Self) -> bool {
        alg_compare(self, other) == Ordering::Equal
    }
}

impl Eq for RealAlgebraic {}

impl PartialOrd for RealAlgebraic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RealAlgebraic {
    fn cmp(&self, other: &Self) -> Ordering {
        alg_compare(self, other)
    }
}

impl From<Rational> for RealAlgebraic {
    fn from(q: Rational) -> Self {
        Self::from_rational(q)
    }
}

impl From<i64> for RealAlgebraic {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl fmt::Display for RealAlgebraic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(q) => write!(f, "{q}"),
            None => write!(f, "root of {} in ({}, {}) ~ {}", self.poly, self.lo, self.hi, self.to_f64()),
        }
    }
}

/// Rational approximation of an `f64`, exact.
pub fn rational_from_f64(x: f64) -> Rational {
    super::dyadic::Dyadic::from_f64(x).to_rational()
}

/// `q` as an `f64`, correctly rounded for moderate sizes.
pub fn rational_to_f64(q: &Rational) -> f64 {
    match (q.numer().to_f64(), q.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => DyadicInterval::from_rational(q, 60).to_f64_bounds().0,
    }
}
