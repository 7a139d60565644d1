use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{FromPrimitive, One, Signed, Zero};

use super::Rational;

/// Coefficient ring for [`Polynomial`].
pub trait Coeff:
    Clone
    + PartialEq
    + Zero
    + One
    + Signed
    + FromPrimitive
    + fmt::Display
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
}

impl<T> Coeff for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Signed
        + FromPrimitive
        + fmt::Display
        + for<'a> AddAssign<&'a T>
        + for<'a> SubAssign<&'a T>
        + for<'a> Mul<&'a T, Output = T>
{
}

/// Dense univariate polynomial, coefficients lowest degree first.
///
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector and `degree() == len - 1` otherwise.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

pub type IntPolynomial = Polynomial<BigInt>;
pub type RatPolynomial = Polynomial<Rational>;

impl<T: Coeff> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial { coeffs: vec![T::one()] }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `X`.
    pub fn x() -> Self {
        Polynomial { coeffs: vec![T::zero(), T::one()] }
    }

    /// `c * X^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `X - r`.
    pub fn linear_root(r: T) -> Self {
        Polynomial { coeffs: vec![-r, T::one()] }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `X^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree, with the zero polynomial reported as 0.
    pub fn deg(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn lc(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.lc().is_some_and(One::is_one)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial { coeffs: self.coeffs.iter().map(|a| a.clone() * c).collect() }
    }

    /// Multiplies by `X^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, a)| a.clone() * &T::from_usize(i).unwrap())
            .collect();
        Self::new(coeffs)
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for a in self.coeffs.iter().rev() {
            acc = acc * x;
            acc += a;
        }
        acc
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = base.square();
            }
        }
        acc
    }

    /// `self(other(X))`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut acc = Self::zero();
        for a in self.coeffs.iter().rev() {
            acc = &acc * other;
            acc = acc + Self::constant(a.clone());
        }
        acc
    }

    /// `self(-X)`.
    pub fn reflect(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| if i % 2 == 1 { -a.clone() } else { a.clone() })
            .collect();
        Polynomial { coeffs }
    }

    /// Reverses the coefficient vector, `X^d * self(1/X)`.
    pub fn reversed(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::new(coeffs)
    }

    fn add_impl(&self, rhs: &Self, negate: bool) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut a = self.coeffs.get(i).cloned().unwrap_or_else(T::zero);
            if let Some(b) = rhs.coeffs.get(i) {
                if negate {
                    a -= b;
                } else {
                    a += b;
                }
            }
            out.push(a);
        }
        Self::new(out)
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a.clone() * b);
                }
            }
        }
        Self::new(out)
    }
}

impl<'a, T: Coeff> Add<&'a Polynomial<T>> for &'a Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: &'a Polynomial<T>) -> Polynomial<T> {
        self.add_impl(rhs, false)
    }
}

impl<T: Coeff> Add for Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: Polynomial<T>) -> Polynomial<T> {
        self.add_impl(&rhs, false)
    }
}

impl<'a, T: Coeff> Sub<&'a Polynomial<T>> for &'a Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: &'a Polynomial<T>) -> Polynomial<T> {
        self.add_impl(rhs, true)
    }
}

impl<T: Coeff> Sub for Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: Polynomial<T>) -> Polynomial<T> {
        self.add_impl(&rhs, true)
    }
}

impl<'a, T: Coeff> Mul<&'a Polynomial<T>> for &'a Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: &'a Polynomial<T>) -> Polynomial<T> {
        self.mul_impl(rhs)
    }
}

impl<T: Coeff> Mul for Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: Polynomial<T>) -> Polynomial<T> {
        self.mul_impl(&rhs)
    }
}

impl<T: Coeff> Neg for Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        Polynomial { coeffs: self.coeffs.into_iter().map(|a| -a).collect() }
    }
}

impl<T: Coeff> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        Polynomial { coeffs: self.coeffs.iter().map(|a| -a.clone()).collect() }
    }
}

impl<T: Coeff> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, a) in self.coeffs.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let neg = a.is_negative();
            let mag = a.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = mag.is_one();
            match (k, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("X")?,
                (1, false) => write!(f, "{mag}*X")?,
                (_, true) => write!(f, "X^{k}")?,
                (_, false) => write!(f, "{mag}*X^{k}")?,
            }
        }
        Ok(())
    }
}

impl IntPolynomial {
    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Nonnegative gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for a in &self.coeffs {
            g = g.gcd(a);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content, keeping the sign of the leading coefficient.
    pub fn primitive(&self) -> Self {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        Polynomial { coeffs: self.coeffs.iter().map(|a| a / &g).collect() }
    }

    /// Primitive with positive leading coefficient.
    pub fn normalized(&self) -> Self {
        let p = self.primitive();
        if p.lc().is_some_and(Signed::is_negative) {
            -p
        } else {
            p
        }
    }

    pub fn to_rational(&self) -> RatPolynomial {
        Polynomial { coeffs: self.coeffs.iter().map(|a| Rational::from_integer(a.clone())).collect() }
    }

    pub fn max_coeff_bits(&self) -> u64 {
        self.coeffs.iter().map(|a| a.bits()).max().unwrap_or(0)
    }

    /// Exact value at a rational point.
    pub fn eval_rational(&self, x: &Rational) -> Rational {
        let (num, den) = (x.numer(), x.denom());
        let h = self.eval_homogeneous(num, den);
        Rational::new(h, den.pow(self.deg() as u32))
    }

    /// `sum a_i num^i den^(d-i)`: the value at `num/den` scaled by `den^d`.
    pub fn eval_homogeneous(&self, num: &BigInt, den: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        let mut dpow = BigInt::one();
        for a in self.coeffs.iter().rev() {
            acc = acc * num + a * &dpow;
            dpow *= den;
        }
        acc
    }

    /// Sign of the value at a rational point.
    pub fn sign_at(&self, x: &Rational) -> Sign {
        // den > 0, so den^d > 0 never flips the sign
        self.eval_homogeneous(x.numer(), x.denom()).sign()
    }

    /// `lc(d)^(deg self - deg d + 1) * self mod d`.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo-remainder by zero polynomial");
        let lc = d.lc().unwrap().clone();
        let mut r = self.clone();
        let mut e = (self.deg() + 1).saturating_sub(dd);
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let lr = r.lc().unwrap().clone();
            r = &r.scale(&lc) - &d.scale(&lr).shift(rd - dd);
            e -= 1;
        }
        if e > 0 {
            r = r.scale(&lc.pow(e as u32));
        }
        r
    }

    /// Exact quotient over the integers, `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let sd = self.deg();
        if sd < dd {
            return None;
        }
        let lc = d.lc().unwrap();
        let mut r: Vec<BigInt> = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let top = &r[k + dd];
            if top.is_zero() {
                continue;
            }
            let (qk, rem) = top.div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            for (j, b) in d.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    r[k + j] -= &qk * b;
                }
            }
            q[k] = qk;
        }
        if r.iter().any(|a| !a.is_zero()) {
            return None;
        }
        Some(Self::new(q))
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.div_exact(self).is_some()
    }

    /// Greatest common divisor, primitive with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        super::modular::gcd(self, other)
    }

    /// `p / gcd(p, p')`, primitive with positive leading coefficient.
    pub fn squarefree_part(&self) -> Self {
        if self.deg() == 0 {
            return self.normalized();
        }
        let g = self.gcd(&self.derivative());
        if g.deg() == 0 {
            return self.normalized();
        }
        self.normalized().div_exact(&g).expect("gcd divides its argument").normalized()
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).deg() == 0
    }

    /// `self(X + r)` for a rational shift, as a primitive integer polynomial
    /// with the same roots shifted by `-r`.
    pub fn shifted(&self, r: &Rational) -> Self {
        let lin = RatPolynomial::new(vec![r.clone(), Rational::one()]);
        self.to_rational().compose(&lin).to_primitive_int()
    }

    /// Integer polynomial whose roots are the roots of `self` multiplied by `r`.
    pub fn scaled_roots(&self, r: &Rational) -> Self {
        assert!(!r.is_zero());
        // p(X / r)
        let lin = RatPolynomial::new(vec![Rational::zero(), r.recip()]);
        self.to_rational().compose(&lin).to_primitive_int()
    }

    /// Remainder of `self` modulo a monic `m`, exact over the integers.
    pub fn rem_monic(&self, m: &Self) -> Self {
        debug_assert!(m.is_monic());
        let md = m.deg();
        let mut r = self.coeffs.clone();
        if r.len() <= md {
            return self.clone();
        }
        for k in (md..r.len()).rev() {
            let top = core::mem::take(&mut r[k]);
            if top.is_zero() {
                continue;
            }
            for (j, b) in m.coeffs.iter().take(md).enumerate() {
                if !b.is_zero() {
                    r[k - md + j] -= &top * b;
                }
            }
        }
        r.truncate(md);
        Self::new(r)
    }
}

impl RatPolynomial {
    pub fn from_int(p: &IntPolynomial) -> Self {
        p.to_rational()
    }

    /// Scales to a primitive integer polynomial with the same roots and
    /// leading-coefficient sign.
    pub fn to_primitive_int(&self) -> IntPolynomial {
        let mut l = BigInt::one();
        for a in &self.coeffs {
            l = l.lcm(a.denom());
        }
        let ints = self.coeffs.iter().map(|a| (a * Rational::from_integer(l.clone())).to_integer()).collect();
        IntPolynomial::new(ints).primitive()
    }

    /// `Some` when every coefficient is an integer.
    pub fn to_int(&self) -> Option<IntPolynomial> {
        if self.coeffs.iter().all(|a| a.is_integer()) {
            Some(IntPolynomial::new(self.coeffs.iter().map(|a| a.to_integer()).collect()))
        } else {
            None
        }
    }

    pub fn monic(&self) -> Self {
        match self.lc() {
            None => Self::zero(),
            Some(lc) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        if self.deg() < dd || self.is_zero() {
            return (Self::zero(), self.clone());
        }
        let inv = d.lc().unwrap().recip();
        let mut r = self.coeffs.clone();
        let mut q = vec![Rational::zero(); self.deg() - dd + 1];
        for k in (0..q.len()).rev() {
            let top = &r[k + dd];
            if top.is_zero() {
                continue;
            }
            let qk = top * &inv;
            for (j, b) in d.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    r[k + j] -= &qk * b;
                }
            }
            q[k] = qk;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Monic gcd over the rationals.
    pub fn gcd(&self, other: &Self) -> Self {
        let g = self.to_primitive_int().gcd(&other.to_primitive_int());
        g.to_rational().monic()
    }

    pub fn eval_at(&self, x: &Rational) -> Rational {
        self.eval(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(cs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(cs)
    }

    #[test]
    fn trims_and_degree() {
        let a = p(&[1, 2, 0, 0]);
        assert_eq!(a.degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), None);
    }

    #[test]
    fn arithmetic() {
        let a = p(&[1, 1]);
        let b = p(&[-1, 1]);
        assert_eq!(&a * &b, p(&[-1, 0, 1]));
        assert_eq!(&a + &b, p(&[0, 2]));
        assert_eq!(&a - &a, IntPolynomial::zero());
        assert_eq!(a.pow(3), p(&[1, 3, 3, 1]));
        assert_eq!(p(&[2, 0, 3]).derivative(), p(&[0, 6]));
        assert_eq!(p(&[1, 1]).compose(&p(&[0, 0, 1])), p(&[1, 0, 1]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[2, 4, 1]).to_string(), "X^2 + 4*X + 2");
        assert_eq!(p(&[-1, 0, -3]).to_string(), "-3*X^2 - 1");
        assert_eq!(p(&[0, 1]).to_string(), "X");
    }

    #[test]
    fn exact_division() {
        let a = p(&[-1, 0, 1]);
        assert_eq!(a.div_exact(&p(&[1, 1])), Some(p(&[-1, 1])));
        assert_eq!(a.div_exact(&p(&[2, 1])), None);
        assert_eq!(p(&[2, 4]).div_exact(&p(&[1, 2])), Some(p(&[2])));
        assert_eq!(p(&[1, 4]).div_exact(&p(&[1, 2])), None);
    }

    #[test]
    fn sign_and_value() {
        let q = p(&[2, 4, 1]);
        let x = Rational::new(BigInt::from(-7), BigInt::from(2));
        // 49/4 - 14 + 2 = 1/4
        assert_eq!(q.eval_rational(&x), Rational::new(BigInt::from(1), BigInt::from(4)));
        assert_eq!(q.sign_at(&x), Sign::Plus);
        assert_eq!(q.sign_at(&Rational::from_integer(BigInt::from(-1))), Sign::Minus);
    }

    #[test]
    fn squarefree() {
        let a = p(&[1, 1]).pow(3) * p(&[-2, 0, 1]);
        assert_eq!(a.squarefree_part(), p(&[-2, -2, 1, 1]));
        assert!(!a.is_squarefree());
        assert!(p(&[2, 4, 1]).is_squarefree());
    }

    #[test]
    fn monic_remainder() {
        let m = p(&[2, 4, 1]);
        let r = p(&[0, 0, 0, 1]).rem_monic(&m);
        let (_, rr) = p(&[0, 0, 0, 1]).to_rational().div_rem(&m.to_rational());
        assert_eq!(r.to_rational(), rr);
    }

    #[test]
    fn shifts() {
        // (X + 1)^2 - 2 shifted by -1 is X^2 - 2
        let a = p(&[-1, 2, 1]);
        assert_eq!(a.shifted(&Rational::from_integer(BigInt::from(-1))), p(&[-2, 0, 1]));
        // roots of X - 3 scaled by 1/3
        assert_eq!(p(&[-3, 1]).scaled_roots(&Rational::new(1.into(), 3.into())), p(&[-1, 1]));
    }
}
