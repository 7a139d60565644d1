//! Exact command-line grammar.
//!
//! ```text
//! number   := int | int "/" int | decimal
//! real     := ["+"|"-"] term (("+"|"-") term)*
//! term     := number | [number ["*"]] "sqrt" radicand
//! radicand := number | "(" number ")"
//! ```
//!
//! A `real` may mention a single square root, so `-2-sqrt2`, `1/2+3*sqrt(5)`
//! and `sqrt2 - 2` are accepted. Decimals are read exactly (`0.1` is `1/10`).

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use prep_atlas_core::{IntPolynomial, Rational, RealAlgebraic};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError(pub String);

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError(msg.into()))
}

struct Cursor<'a> {
    s: &'a [u8],
    i: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Cursor { s: s.as_bytes(), i: 0 }
    }

    fn skip_ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.i).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn eat_word(&mut self, w: &str) -> bool {
        self.skip_ws();
        if self.s[self.i..].starts_with(w.as_bytes()) {
            self.i += w.len();
            true
        } else {
            false
        }
    }

    fn done(&mut self) -> bool {
        self.peek().is_none()
    }

    fn digits(&mut self) -> &'a str {
        let start = self.i;
        while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
            self.i += 1;
        }
        std::str::from_utf8(&self.s[start..self.i]).unwrap()
    }

    /// Unsigned `int`, `int/int` or decimal.
    fn number(&mut self) -> Result<Rational, ParseError> {
        self.skip_ws();
        let int = self.digits();
        let mut frac = "";
        if self.i < self.s.len() && self.s[self.i] == b'.' {
            self.i += 1;
            frac = self.digits();
        }
        if int.is_empty() && frac.is_empty() {
            return err(format!("expected a number at offset {}", self.i));
        }
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let mant: BigInt = format!("{int}{frac}").parse().unwrap();
        let mut q = Rational::new(mant, scale);
        if frac.is_empty() && self.eat(b'/') {
            self.skip_ws();
            let d = self.digits();
            if d.is_empty() {
                return err("expected a denominator after '/'");
            }
            let d: BigInt = d.parse().unwrap();
            if d.is_zero() {
                return err("zero denominator");
            }
            q /= Rational::from_integer(d);
        }
        Ok(q)
    }
}

/// A rational number, exactly.
pub fn parse_rational(s: &str) -> Result<Rational, ParseError> {
    let mut c = Cursor::new(s);
    let neg = if c.eat(b'-') {
        true
    } else {
        c.eat(b'+');
        false
    };
    let q = c.number()?;
    if !c.done() {
        return err(format!("trailing input in rational {s:?}"));
    }
    Ok(if neg { -q } else { q })
}

/// `r + s sqrt(n)` with rational `r`, `s`, `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadraticSurd {
    pub rational: Rational,
    pub coeff: Rational,
    pub radicand: Rational,
}

impl QuadraticSurd {
    pub fn to_real(&self) -> Result<RealAlgebraic, ParseError> {
        if self.coeff.is_zero() {
            return Ok(RealAlgebraic::from_rational(self.rational.clone()));
        }
        RealAlgebraic::from_quadratic(&self.rational, &self.coeff, &self.radicand).map_err(|e| ParseError(e.to_string()))
    }
}

pub fn parse_surd(s: &str) -> Result<QuadraticSurd, ParseError> {
    let mut c = Cursor::new(s);
    let mut out = QuadraticSurd { rational: Rational::zero(), coeff: Rational::zero(), radicand: Rational::zero() };
    let mut radicand: Option<Rational> = None;
    let mut first = true;
    loop {
        let sign = if c.eat(b'-') {
            -Rational::one()
        } else if c.eat(b'+') || first {
            Rational::one()
        } else {
            return err(format!("expected '+' or '-' in {s:?}"));
        };
        first = false;
        let coef = if c.eat_word("sqrt") {
            None
        } else {
            let q = c.number()?;
            c.eat(b'*');
            if c.eat_word("sqrt") {
                Some(q)
            } else {
                out.rational += &sign * q;
                if c.done() {
                    break;
                }
                continue;
            }
        };
        let paren = c.eat(b'(');
        let n = c.number()?;
        if paren && !c.eat(b')') {
            return err("missing ')'");
        }
        match &radicand {
            Some(r) if *r != n => return err("at most one distinct square root is supported"),
            _ => radicand = Some(n),
        }
        out.coeff += sign * coef.unwrap_or_else(Rational::one);
        if c.done() {
            break;
        }
    }
    if let Some(n) = radicand {
        out.radicand = n;
    }
    Ok(out)
}

pub fn parse_real(s: &str) -> Result<RealAlgebraic, ParseError> {
    parse_surd(s)?.to_real()
}

/// `"a,b"` with exact endpoints, `a < b`.
pub fn parse_interval(s: &str) -> Result<(RealAlgebraic, RealAlgebraic), ParseError> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return err(format!("expected \"a,b\", got {s:?}"));
    }
    let a = parse_real(parts[0])?;
    let b = parse_real(parts[1])?;
    if prep_atlas_core::alg_compare(&a, &b) != std::cmp::Ordering::Less {
        return err("interval needs a < b");
    }
    Ok((a, b))
}

/// `"re_min,re_max,im_min,im_max"`.
pub fn parse_window(s: &str) -> Result<[Rational; 4], ParseError> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 4 {
        return err(format!("expected four comma-separated bounds, got {s:?}"));
    }
    let v: Vec<Rational> = parts.iter().map(|p| parse_rational(p)).collect::<Result<_, _>>()?;
    Ok([v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()])
}

/// `"WxH"`.
pub fn parse_resolution(s: &str) -> Result<(usize, usize), ParseError> {
    let (w, h) = s.split_once(['x', 'X']).ok_or_else(|| ParseError(format!("expected WxH, got {s:?}")))?;
    let w: usize = w.trim().parse().map_err(|_| ParseError(format!("bad width in {s:?}")))?;
    let h: usize = h.trim().parse().map_err(|_| ParseError(format!("bad height in {s:?}")))?;
    if w == 0 || h == 0 {
        return err("resolution must be positive");
    }
    Ok((w, h))
}

/// Integer polynomial in one variable letter, e.g. `X^2+4X+2` or
/// `c^3 - c + 1`.
pub fn parse_polynomial(s: &str) -> Result<IntPolynomial, ParseError> {
    let mut c = Cursor::new(s);
    let mut coeffs: Vec<BigInt> = Vec::new();
    let mut var: Option<u8> = None;
    let mut first = true;
    while !c.done() {
        let neg = if c.eat(b'-') {
            true
        } else if c.eat(b'+') || first {
            false
        } else {
            return err(format!("expected '+' or '-' in {s:?}"));
        };
        first = false;
        c.skip_ws();
        let d = c.digits();
        let k: BigInt = if d.is_empty() { BigInt::one() } else { d.parse().unwrap() };
        c.eat(b'*');
        let exp = match c.peek() {
            Some(ch) if ch.is_ascii_alphabetic() => {
                if var.is_some_and(|v| v != ch) {
                    return err("more than one variable");
                }
                var = Some(ch);
                c.i += 1;
                if c.eat(b'^') {
                    c.skip_ws();
                    let e = c.digits();
                    e.parse::<usize>().map_err(|_| ParseError(format!("bad exponent in {s:?}")))?
                } else {
                    1
                }
            }
            _ if d.is_empty() => return err(format!("expected a term in {s:?}")),
            _ => 0,
        };
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, BigInt::zero());
        }
        coeffs[exp] += if neg { -k } else { k };
    }
    let p = IntPolynomial::new(coeffs);
    if p.is_zero() {
        return err("zero polynomial");
    }
    if p.lc().is_some_and(|l| l.is_negative()) {
        return Ok(-p);
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use prep_atlas_core::arith::rat;

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rational("-2").unwrap(), rat(-2, 1));
        assert_eq!(parse_rational("2.5").unwrap(), rat(5, 2));
        assert_eq!(parse_rational("-0.1").unwrap(), rat(-1, 10));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1e3").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn surds() {
        let x = parse_real("-2-sqrt2").unwrap();
        assert_eq!(x.minpoly(), &IntPolynomial::from_i64s(&[2, 4, 1]));
        assert!(x.to_f64() < -3.4);
        let y = parse_real("sqrt(2) - 2").unwrap();
        assert!((y.to_f64() + 0.585_786_437_626_905).abs() < 1e-14);
        let z = parse_real("1/2+3*sqrt5").unwrap();
        assert!((z.to_f64() - (0.5 + 3.0 * 5f64.sqrt())).abs() < 1e-14);
        assert_eq!(parse_real("0").unwrap(), RealAlgebraic::from_int(0));
        assert_eq!(parse_real("sqrt4").unwrap(), RealAlgebraic::from_int(2));
        assert!(parse_real("sqrt2+sqrt3").is_err());
    }

    #[test]
    fn intervals_and_windows() {
        let (a, b) = parse_interval("-2-sqrt2,0").unwrap();
        assert!(a.to_f64() < b.to_f64());
        assert!(parse_interval("1,0").is_err());
        assert_eq!(parse_window("-2.5,1.5,-1.5,1.5").unwrap()[0], rat(-5, 2));
        assert_eq!(parse_resolution("512x256").unwrap(), (512, 256));
        assert!(parse_resolution("0x5").is_err());
    }

    #[test]
    fn polynomials() {
        assert_eq!(parse_polynomial("X^2+4X+2").unwrap(), IntPolynomial::from_i64s(&[2, 4, 1]));
        assert_eq!(parse_polynomial("c^3 - c + 1").unwrap(), IntPolynomial::from_i64s(&[1, -1, 0, 1]));
        assert_eq!(parse_polynomial("x").unwrap(), IntPolynomial::from_i64s(&[0, 1]));
        assert_eq!(parse_polynomial("-x+3").unwrap(), IntPolynomial::from_i64s(&[-3, 1]));
        assert!(parse_polynomial("x+y").is_err());
        assert!(parse_polynomial("0").is_err());
    }
}
