//! Orbits of `alpha` under `f_c(x) = x^2 + c`, viewed as functions of `c`.
//!
//! `psi_n(X) = f_X^n(alpha)` is monic of degree `2^(n-1)` in the parameter,
//! and the preperiodic parameters with witness `(m, n)` are the roots of
//! `F_{m,n} = psi_n - psi_m`. For rational parameters [`decide_rational`]
//! always terminates; [`decide_algebraic`] does the same for totally real
//! algebraic integers by iterating in the quotient ring.

mod decide;
mod factor;
mod quotient;

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{rat, IntPolynomial, IntervalSet, RatPolynomial, Rational, RealAlgebraic};
use crate::error::{Error, Result};

pub use decide::{decide_algebraic, AlgebraicDecision, FactorDecision, RootVerdict};
pub use factor::factor_totally_real;
pub use quotient::{AlgebraicModElement, QuotientRing};

/// Default cap on `n` for `psi_n` (degree `2^13 = 8192`).
pub const DEFAULT_DEGREE_CAP: u32 = 14;

/// `alpha^2 + 1`.
fn s_of(alpha: &Rational) -> Rational {
    alpha * alpha + Rational::one()
}

/// `R_alpha = s + sqrt(s)` with `s = alpha^2 + 1`. Every parameter of larger
/// modulus sends `alpha` to infinity, and so does every orbit value of
/// larger modulus.
pub fn escape_radius(alpha: &Rational) -> RealAlgebraic {
    let s = s_of(alpha);
    RealAlgebraic::from_quadratic(&s, &Rational::one(), &s).expect("s > 0")
}

/// Right endpoint of the real slice: `1/4` when `|alpha| <= 1/2`, else
/// `|alpha| - alpha^2`.
pub fn real_slice_right(alpha: &Rational) -> Rational {
    let a = alpha.abs();
    if a <= rat(1, 2) {
        rat(1, 4)
    } else {
        &a - &a * &a
    }
}

/// Closed interval containing every real parameter whose orbit of `alpha`
/// stays bounded.
pub fn real_slice(alpha: &Rational) -> IntervalSet {
    let left = escape_radius(alpha).neg();
    IntervalSet::single(left, RealAlgebraic::from_rational(real_slice_right(alpha))).expect("-R < right endpoint")
}

fn check_cap(n: u32, cap: u32) -> Result<()> {
    if n > cap {
        Err(Error::DegreeOverflow { n, cap })
    } else {
        Ok(())
    }
}

/// `P_k(Y) = q^(2^k) psi_k(Y / q^2)` for `k = 0..=n`, where `alpha = p/q`.
/// These have integer coefficients: `P_0 = p`, `P_1 = Y + p^2` and
/// `P_(k+1) = P_k^2 + q^(2^(k+1) - 2) Y`.
fn scaled_psi(alpha: &Rational, n: u32) -> Vec<IntPolynomial> {
    let (p, q) = (alpha.numer().clone(), alpha.denom().clone());
    let mut out = vec![IntPolynomial::constant(p.clone())];
    if n == 0 {
        return out;
    }
    out.push(IntPolynomial::new(vec![&p * &p, BigInt::one()]));
    for k in 1..n {
        let last = out.last().unwrap();
        let e = (1u64 << (k + 1)) - 2;
        let y = IntPolynomial::monomial(q.pow(e as u32), 1);
        out.push(&last.square() + &y);
    }
    out
}

/// Converts `P_k(Y)` back to `psi_k(X)`.
fn unscale(pk: &IntPolynomial, q: &BigInt, k: u32) -> RatPolynomial {
    let den = q.pow(1u32 << k);
    let q2 = q * q;
    let mut qpow = BigInt::one();
    let mut coeffs = Vec::with_capacity(pk.coeffs().len());
    for c in pk.coeffs() {
        coeffs.push(Rational::new(c * &qpow, den.clone()));
        qpow *= &q2;
    }
    RatPolynomial::new(coeffs)
}

/// `psi_n(X) = f_X^n(alpha)` with the default depth cap.
pub fn psi(alpha: &Rational, n: u32) -> Result<RatPolynomial> {
    psi_with_cap(alpha, n, DEFAULT_DEGREE_CAP)
}

pub fn psi_with_cap(alpha: &Rational, n: u32, cap: u32) -> Result<RatPolynomial> {
    check_cap(n, cap)?;
    let seq = scaled_psi(alpha, n);
    Ok(unscale(&seq[n as usize], alpha.denom(), n))
}

/// `F_{m,n} = psi_n - psi_m` (with `psi_0 = alpha`) with the default cap.
pub fn prep_poly(alpha: &Rational, m: u32, n: u32) -> Result<RatPolynomial> {
    prep_poly_with_cap(alpha, m, n, DEFAULT_DEGREE_CAP)
}

pub fn prep_poly_with_cap(alpha: &Rational, m: u32, n: u32, cap: u32) -> Result<RatPolynomial> {
    if m >= n {
        return Err(Error::InvalidArgument(alloc::format!("need m < n, got m = {m}, n = {n}")));
    }
    check_cap(n, cap)?;
    let seq = scaled_psi(alpha, n);
    let q = alpha.denom();
    Ok(&unscale(&seq[n as usize], q, n) - &unscale(&seq[m as usize], q, m))
}

/// Primitive integer multiple of `F_{m,n}` with positive leading
/// coefficient; equal to `F_{m,n}` itself when `alpha` is an integer.
pub fn prep_poly_int(alpha: &Rational, m: u32, n: u32, cap: u32) -> Result<IntPolynomial> {
    if m >= n {
        return Err(Error::InvalidArgument(alloc::format!("need m < n, got m = {m}, n = {n}")));
    }
    check_cap(n, cap)?;
    let seq = scaled_psi(alpha, n);
    let q = alpha.denom();
    // q^(2^n) F_{m,n}(Y / q^2) = P_n - q^(2^n - 2^m) P_m
    let scale = q.pow(((1u64 << n) - (1u64 << m)) as u32);
    let fy = &seq[n as usize] - &seq[m as usize].scale(&scale);
    let q2 = q * q;
    let mut qpow = BigInt::one();
    let mut coeffs = Vec::with_capacity(fy.coeffs().len());
    for c in fy.coeffs() {
        coeffs.push(c * &qpow);
        qpow *= &q2;
    }
    Ok(IntPolynomial::new(coeffs).normalized())
}

/// How an orbit was shown to be unbounded.
#[derive(Clone, Debug, PartialEq)]
pub enum EscapeKind {
    /// `|value| > R_alpha` at the given real embedding; `modulus_lower` is a
    /// certified lower bound for `|value|`.
    Archimedean { embedding: usize, modulus_lower: f64 },
    /// Some prime divides the value's denominator to more than half its
    /// multiplicity in `den(c)`; the `p`-adic size then grows forever.
    Denominator,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    /// `f^n(alpha) = f^m(alpha)`, with `(m, n)` the first repeat.
    Preperiodic { m: usize, n: usize },
    Escaped { step: usize, kind: EscapeKind },
    BudgetExhausted,
}

impl Verdict {
    pub fn is_preperiodic(&self) -> bool {
        matches!(self, Verdict::Preperiodic { .. })
    }

    pub fn is_escaped(&self) -> bool {
        matches!(self, Verdict::Escaped { .. })
    }
}

/// Orbit of a rational `alpha` under `f_c` for a rational `c`.
#[derive(Clone, Debug, PartialEq)]
pub struct OrbitRecord {
    pub alpha: Rational,
    pub parameter: Rational,
    /// `alpha, f_c(alpha), ...` up to and including the deciding value.
    pub values: Vec<Rational>,
    pub verdict: Verdict,
}

/// `|x| > s + sqrt(s)`, exactly.
fn exceeds_radius(x: &Rational, s: &Rational) -> bool {
    let t = x.abs() - s;
    t.is_positive() && &(&t * &t) > s
}

/// `den(x)^2` does not divide `den(c)`.
fn denominator_escapes(x: &Rational, c: &Rational) -> bool {
    let d2 = x.denom() * x.denom();
    !(c.denom() % d2).is_zero()
}

/// Decides whether `alpha` is preperiodic under `f_c` for rational `c`.
///
/// The orbit either repeats exactly, exceeds `R_alpha` (after which it grows
/// monotonically), or acquires a denominator whose square does not divide
/// `den(c)` (after which the denominator grows forever). While none of this
/// happens the values come from a finite set of size at most
/// [`repeat_horizon`], so a budget at least that large always decides.
pub fn decide_rational(alpha: &Rational, c: &Rational, budget: usize) -> OrbitRecord {
    let s = s_of(alpha);
    let mut seen: BTreeMap<Rational, usize> = BTreeMap::new();
    let mut values = Vec::new();
    let mut x = alpha.clone();
    let mut step = 0;
    let verdict = loop {
        if let Some(&m) = seen.get(&x) {
            values.push(x);
            break Verdict::Preperiodic { m, n: step };
        }
        seen.insert(x.clone(), step);
        values.push(x.clone());
        if exceeds_radius(&x, &s) {
            let modulus_lower = crate::arith::DyadicInterval::from_rational(&x.abs(), 64).to_f64_bounds().0;
            break Verdict::Escaped { step, kind: EscapeKind::Archimedean { embedding: 0, modulus_lower } };
        }
        if denominator_escapes(&x, c) {
            break Verdict::Escaped { step, kind: EscapeKind::Denominator };
        }
        if step >= budget {
            break Verdict::BudgetExhausted;
        }
        x = &x * &x + c;
        step += 1;
    };
    OrbitRecord { alpha: alpha.clone(), parameter: c.clone(), values, verdict }
}

/// Upper bound on the number of distinct orbit values that can occur before
/// [`decide_rational`] reaches a verdict: rationals with `den^2 | den(c)`
/// and modulus at most `R_alpha`.
pub fn repeat_horizon(alpha: &Rational, c: &Rational) -> BigInt {
    let s = s_of(alpha);
    // R <= s + s for s >= 1
    let r = (&s + &s).ceil().to_integer();
    let d = c.denom().sqrt();
    (BigInt::from(2) * r * &d + 1u32) * &d + 1u32
}

/// `theta_alpha = -s - sqrt(s)` and `G(X) = X^2 + 2sX + s^2 - s`, whose roots
/// `c` satisfy `f_c^2(alpha) = f_c^3(alpha)`.
#[derive(Clone, Debug)]
pub struct Theta {
    pub alpha: Rational,
    pub theta: RealAlgebraic,
    pub g: RatPolynomial,
}

pub fn theta(alpha: &Rational) -> Theta {
    let s = s_of(alpha);
    let theta = RealAlgebraic::from_quadratic(&-&s, &-Rational::one(), &s).expect("s > 0");
    let g = RatPolynomial::new(vec![&s * &s - &s, &s + &s, Rational::one()]);
    Theta { alpha: alpha.clone(), theta, g }
}

impl Theta {
    /// Checks `f^2(alpha) = f^3(alpha)` exactly in `Q[X]/(G)` with `c = X`,
    /// and that `theta` is a root of `G`.
    pub fn verify(&self) -> bool {
        let ring = QuotientRing::new(self.g.clone()).expect("G is monic quadratic");
        let c = ring.generator();
        let mut x = ring.constant(self.alpha.clone());
        let mut orbit = Vec::new();
        for _ in 0..=3 {
            orbit.push(x.clone());
            x = ring.add(&ring.square(&x), &c);
        }
        let root_ok = self.theta.sign_of_poly_at(&self.g.to_primitive_int()) == num_bigint::Sign::NoSign;
        orbit[2] == orbit[3] && root_ok
    }
}

/// `f_c(x)` over the rationals.
pub fn iterate_rational(alpha: &Rational, c: &Rational, n: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(n + 1);
    let mut x = alpha.clone();
    out.push(x.clone());
    for _ in 0..n {
        x = &x * &x + c;
        out.push(x.clone());
    }
    out
}

/// `R_alpha` as an `f64` rounded up.
pub fn escape_radius_f64_up(alpha: &Rational) -> f64 {
    escape_radius(alpha).enclosure(64).to_f64_bounds().1
}

#[cfg(test)]
mod tests;
