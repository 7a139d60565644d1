use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::arith::IntPolynomial;
use crate::error::{Error, Result};

pub fn euler_phi(n: u32) -> u32 {
    let (mut m, mut phi, mut p) = (n, n, 2);
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if m > 1 {
        phi -= phi / m;
    }
    phi
}

fn mobius(n: u32) -> i32 {
    let (mut m, mut mu, mut p) = (n, 1, 2);
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if m > 1 {
        mu = -mu;
    }
    mu
}

fn x_pow_minus_one(d: usize) -> IntPolynomial {
    &IntPolynomial::monomial(BigInt::from(1), d) - &IntPolynomial::one()
}

/// `Phi_n = prod_{d | n} (X^d - 1)^mu(n/d)`.
pub fn cyclotomic(n: u32) -> Result<IntPolynomial> {
    if n == 0 {
        return Err(Error::InvalidArgument("need n >= 1".into()));
    }
    let (mut num, mut den) = (IntPolynomial::one(), IntPolynomial::one());
    for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
        match mobius(n / d) {
            1 => num = &num * &x_pow_minus_one(d as usize),
            -1 => den = &den * &x_pow_minus_one(d as usize),
            _ => {}
        }
    }
    num.div_exact(&den).ok_or_else(|| Error::Internal("cyclotomic division not exact".into()))
}

/// Minimal polynomial of `zeta_n + 1/zeta_n + s`.
pub(crate) fn chebyshev_factor(n: u32, s: &BigInt) -> IntPolynomial {
    let psi = match n {
        1 => IntPolynomial::from_i64s(&[-2, 1]),
        2 => IntPolynomial::from_i64s(&[2, 1]),
        _ => {
            // z^-k Phi_n(z) = c_k + sum_j c_(k+j) (z^j + z^-j) and
            // z^j + z^-j = D_j(z + 1/z) with D_(j+1) = Y D_j - D_(j-1)
            let phi = cyclotomic(n).unwrap();
            let k = phi.deg() / 2;
            let y = IntPolynomial::x();
            let mut dj = [IntPolynomial::from_i64s(&[2]), y.clone()];
            let mut acc = IntPolynomial::constant(phi.coeff(k));
            for j in 1..=k {
                acc = &acc + &dj[1].scale(&phi.coeff(k + j));
                let next = &(&y * &dj[1]) - &dj[0];
                dj = [dj[1].clone(), next];
            }
            acc
        }
    };
    psi.compose(&IntPolynomial::new(vec![-s.clone(), BigInt::from(1)]))
}

/// Minimal polynomial of `zeta_n + 1/zeta_n - 2`, roots in `[-4, 0]`.
pub fn shifted_chebyshev_minpoly(n: u32) -> Result<IntPolynomial> {
    if n < 3 {
        return Err(Error::InvalidArgument("need n >= 3".into()));
    }
    Ok(chebyshev_factor(n, &BigInt::from(-2)))
}

/// `z^d p(z + 1/z + s)` for `p` of degree `d`.
pub fn kronecker_transform(p: &IntPolynomial, s: &BigInt) -> IntPolynomial {
    let d = p.deg();
    let w = IntPolynomial::new(vec![BigInt::from(1), s.clone(), BigInt::from(1)]);
    let mut acc = IntPolynomial::zero();
    let mut wk = IntPolynomial::one();
    for k in 0..=d {
        acc = &acc + &wk.scale(&p.coeff(k)).shift(d - k);
        wk = &wk * &w;
    }
    acc
}

/// Indices `n` (with multiplicity, increasing) such that `q = prod Phi_n`,
/// or `None` when `q` is not a product of cyclotomic polynomials.
pub fn cyclotomic_factorization(q: &IntPolynomial) -> Option<Vec<u32>> {
    if q.is_zero() || !q.is_monic() {
        return None;
    }
    let mut rest = q.clone();
    let mut out = Vec::new();
    let deg = q.deg() as u32;
    let n_max = 2 * deg * deg + 2;
    for n in 1..=n_max {
        if rest.deg() == 0 {
            break;
        }
        if euler_phi(n) as usize > rest.deg() {
            continue;
        }
        let phi = cyclotomic(n).ok()?;
        while let Some(r) = rest.div_exact(&phi) {
            rest = r;
            out.push(n);
        }
    }
    (rest == IntPolynomial::one()).then_some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(cs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(cs)
    }

    #[test]
    fn phi_and_mobius() {
        let phis: Vec<u32> = (1..=12).map(euler_phi).collect();
        assert_eq!(phis, [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]);
        let mus: Vec<i32> = (1..=10).map(mobius).collect();
        assert_eq!(mus, [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]);
    }

    #[test]
    fn cyclotomic_examples() {
        assert_eq!(cyclotomic(1).unwrap(), ip(&[-1, 1]));
        assert_eq!(cyclotomic(4).unwrap(), ip(&[1, 0, 1]));
        assert_eq!(cyclotomic(8).unwrap(), ip(&[1, 0, 0, 0, 1]));
        assert_eq!(cyclotomic(12).unwrap(), ip(&[1, 0, -1, 0, 1]));
        // X^n - 1 is the product over divisors
        for n in 1..=30u32 {
            let prod = (1..=n).filter(|d| n % d == 0).fold(IntPolynomial::one(), |acc, d| &acc * &cyclotomic(d).unwrap());
            assert_eq!(prod, x_pow_minus_one(n as usize));
            assert_eq!(cyclotomic(n).unwrap().deg(), euler_phi(n) as usize);
        }
    }

    #[test]
    fn shifted_examples() {
        assert_eq!(shifted_chebyshev_minpoly(3).unwrap(), ip(&[3, 1]));
        assert_eq!(shifted_chebyshev_minpoly(4).unwrap(), ip(&[2, 1]));
        assert_eq!(shifted_chebyshev_minpoly(8).unwrap(), ip(&[2, 4, 1]));
        assert!(shifted_chebyshev_minpoly(2).is_err());
    }

    #[test]
    fn transform_round_trip() {
        let s = BigInt::from(-2);
        assert_eq!(kronecker_transform(&ip(&[2, 1]), &s), cyclotomic(4).unwrap());
        assert_eq!(kronecker_transform(&ip(&[2, 4, 1]), &s), cyclotomic(8).unwrap());
        assert_eq!(cyclotomic_factorization(&kronecker_transform(&ip(&[0, 1]), &s)), Some(vec![1, 1]));
        assert_eq!(cyclotomic_factorization(&ip(&[1, 1, 1])), Some(vec![3]));
        assert_eq!(cyclotomic_factorization(&ip(&[2, 1])), None);
    }
}
