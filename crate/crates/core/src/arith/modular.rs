//! Integer polynomial gcd by reduction modulo 61-bit primes and Chinese
//! remaindering, with an exact trial division as the stopping test.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::IntPolynomial;

const PRIME_TOP: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for 64-bit inputs.
pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'outer: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Primes below 2^61, largest first.
pub(crate) struct Primes {
    next: u64,
}

impl Primes {
    pub(crate) fn new() -> Self {
        Primes { next: PRIME_TOP }
    }
}

impl Iterator for Primes {
    type Item = u64;
    fn next(&mut self) -> Option<u64> {
        while self.next > 2 {
            let c = self.next;
            self.next -= 2;
            if is_prime_u64(c) {
                return Some(c);
            }
        }
        None
    }
}

fn reduce(p: &IntPolynomial, m: u64) -> Vec<u64> {
    let mb = BigInt::from(m);
    let mut v: Vec<u64> = p.coeffs().iter().map(|a| a.mod_floor(&mb).to_u64().unwrap()).collect();
    trim(&mut v);
    v
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// `a mod b` in place; `b` nonzero with leading coefficient inverted in `binv`.
fn rem_mod(a: &mut Vec<u64>, b: &[u64], p: u64) {
    let db = b.len() - 1;
    let binv = inv_mod(b[db], p);
    while a.len() > db {
        let k = a.len() - 1;
        let q = mul_mod(a[k], binv, p);
        if q != 0 {
            for (j, &bj) in b.iter().enumerate() {
                let t = mul_mod(q, bj, p);
                let slot = &mut a[k - db + j];
                *slot = if *slot >= t { *slot - t } else { *slot + p - t };
            }
        }
        a.pop();
        trim(a);
    }
}

/// Monic gcd over `F_p`.
fn gcd_mod(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    while !b.is_empty() {
        rem_mod(&mut a, &b, p);
        core::mem::swap(&mut a, &mut b);
    }
    if let Some(&lc) = a.last() {
        let inv = inv_mod(lc, p);
        for c in a.iter_mut() {
            *c = mul_mod(*c, inv, p);
        }
    }
    a
}

fn symmetric_lift(v: &[BigInt], m: &BigInt) -> IntPolynomial {
    let half = m >> 1;
    IntPolynomial::new(v.iter().map(|c| if c > &half { c - m } else { c.clone() }).collect())
}

/// Gcd of two integer polynomials, primitive with positive leading
/// coefficient. The gcd of the contents is discarded.
pub fn gcd(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    if a.is_zero() {
        return b.normalized();
    }
    if b.is_zero() {
        return a.normalized();
    }
    let a = a.normalized();
    let b = b.normalized();
    if a.deg() == 0 || b.deg() == 0 {
        return IntPolynomial::one();
    }
    if a == b {
        return a;
    }
    let (la, lb) = (a.lc().unwrap().clone(), b.lc().unwrap().clone());
    let gamma = la.gcd(&lb);
    let mut best_deg = a.deg().min(b.deg()) + 1;
    let mut acc: Vec<BigInt> = Vec::new();
    let mut modulus = BigInt::one();
    let mut prev: Option<IntPolynomial> = None;
    for p in Primes::new() {
        let pb = BigInt::from(p);
        if (&la % &pb).is_zero() || (&lb % &pb).is_zero() {
            continue;
        }
        let g = gcd_mod(reduce(&a, p), reduce(&b, p), p);
        let d = g.len() - 1;
        if d == 0 {
            return IntPolynomial::one();
        }
        if d > best_deg {
            continue;
        }
        let gm = gamma.mod_floor(&pb).to_u64().unwrap();
        let g: Vec<u64> = g.into_iter().map(|c| mul_mod(c, gm, p)).collect();
        if d < best_deg {
            best_deg = d;
            acc = g.iter().map(|&c| BigInt::from(c)).collect();
            modulus = pb;
            prev = None;
        } else {
            let minv = inv_mod(modulus.mod_floor(&pb).to_u64().unwrap(), p);
            for (slot, &gc) in acc.iter_mut().zip(g.iter()) {
                let r = slot.mod_floor(&pb).to_u64().unwrap();
                let diff = if gc >= r { gc - r } else { gc + p - r };
                let t = mul_mod(diff, minv, p);
                *slot += &modulus * BigInt::from(t);
            }
            modulus *= pb;
        }
        let cand = symmetric_lift(&acc, &modulus).normalized();
        if prev.as_ref() == Some(&cand) && a.divides_by(&cand) && b.divides_by(&cand) {
            return cand;
        }
        prev = Some(cand);
    }
    unreachable!("ran out of 61-bit primes")
}

impl IntPolynomial {
    fn divides_by(&self, d: &IntPolynomial) -> bool {
        d.lc().is_some_and(|l| l.is_positive()) && self.div_exact(d).is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(cs)
    }

    #[test]
    fn primes_are_prime() {
        let ps: Vec<u64> = Primes::new().take(3).collect();
        assert_eq!(ps[0], PRIME_TOP);
        assert!(ps.iter().all(|&q| is_prime_u64(q)));
        assert!(!is_prime_u64(PRIME_TOP - 2));
        assert!(is_prime_u64(97) && !is_prime_u64(91));
    }

    #[test]
    fn gcd_small() {
        let a = p(&[-1, 0, 1]);
        let b = p(&[1, 2, 1]);
        assert_eq!(gcd(&a, &b), p(&[1, 1]));
        assert_eq!(gcd(&p(&[2, 4, 1]), &p(&[1, 1])), p(&[1]));
        assert_eq!(gcd(&a.scale(&BigInt::from(6)), &a), a);
    }

    #[test]
    fn gcd_with_large_coefficients() {
        // common factor with coefficients past a single modulus
        let big: BigInt = BigInt::from(1u64 << 62) * BigInt::from(1u64 << 62) + 7u32;
        let f = IntPolynomial::new(alloc::vec![big.clone(), BigInt::from(3), BigInt::from(1)]);
        let a = &f * &p(&[5, 0, 1]);
        let b = &f * &p(&[-2, 3]);
        assert_eq!(gcd(&a, &b), f);
    }

    #[test]
    fn gcd_non_monic() {
        let f = p(&[3, 5]);
        let a = &f * &p(&[1, 0, 2]);
        let b = &f * &p(&[7, 4]);
        assert_eq!(gcd(&a, &b), f);
        assert_eq!(gcd(&(-a.clone()), &b), f);
    }
}
