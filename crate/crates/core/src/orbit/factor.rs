use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, Sign};
use num_traits::One;

use crate::arith::{isolate_real_roots, DyadicInterval, IntPolynomial, Rational, RealAlgebraic};
use crate::error::{Error, Result};

/// Largest degree accepted by [`factor_totally_real`]; recombination is
/// exponential in the number of irrational roots.
pub const FACTOR_DEGREE_CAP: usize = 24;

/// Splits a monic, squarefree, totally real integer polynomial into its
/// monic irreducible factors, sorted by degree and then coefficients.
///
/// Rational roots give linear factors directly. The remaining roots are
/// recombined by increasing subset size: a subset is a factor exactly when
/// the product of `X - r` over it has integer coefficients, which is
/// confirmed by exact division.
pub fn factor_totally_real(p: &IntPolynomial) -> Result<Vec<IntPolynomial>> {
    if p.deg() == 0 {
        return Err(Error::InvalidArgument("constant polynomial".into()));
    }
    if !p.is_monic() {
        return Err(Error::NotAlgebraicInteger("polynomial is not monic"));
    }
    if !p.is_squarefree() {
        return Err(Error::NotAlgebraicInteger("polynomial is not squarefree"));
    }
    if p.deg() > FACTOR_DEGREE_CAP {
        return Err(Error::InvalidArgument(alloc::format!(
            "degree {} exceeds the factoring cap {FACTOR_DEGREE_CAP}",
            p.deg()
        )));
    }
    let roots = isolate_real_roots(p);
    if roots.len() != p.deg() {
        return Err(Error::NotTotallyReal);
    }
    let mut factors = Vec::new();
    let mut rest = p.clone();
    let mut irrational = Vec::new();
    for r in roots {
        match integer_root(p, &r) {
            Some(k) => {
                let lin = IntPolynomial::new(vec![-k, BigInt::one()]);
                rest = rest.div_exact(&lin).expect("rational root of a monic polynomial is an integer");
                factors.push(lin);
            }
            None => irrational.push(r),
        }
    }
    if !irrational.is_empty() {
        factors.extend(recombine(&rest, &irrational)?);
    }
    factors.sort_by(|a, b| a.deg().cmp(&b.deg()).then_with(|| a.cmp(b)));
    Ok(factors)
}

/// The root as an integer, if it is one. Rational roots of a monic integer
/// polynomial are integers.
fn integer_root(p: &IntPolynomial, r: &RealAlgebraic) -> Option<BigInt> {
    let r = r.refined(&Rational::one());
    let (lo, hi) = r.isolation();
    let mut k = lo.ceil().to_integer();
    while Rational::from_integer(k.clone()) <= *hi {
        if p.sign_at(&Rational::from_integer(k.clone())) == Sign::NoSign {
            return Some(k);
        }
        k += 1u32;
    }
    None
}

fn recombine(p: &IntPolynomial, roots: &[RealAlgebraic]) -> Result<Vec<IntPolynomial>> {
    // coefficients of a factor are bounded by C(k, j) B^j
    let bound = roots.iter().map(|r| r.to_f64().abs()).fold(1.0, f64::max);
    let prec = 64 + libm::ceil(roots.len() as f64 * libm::log2(bound + 1.0)) as u32 + roots.len() as u32;
    let encl: Vec<DyadicInterval> = roots.iter().map(|r| r.enclosure(prec)).collect();
    let approx: Vec<f64> = roots.iter().map(RealAlgebraic::to_f64).collect();

    let mut rest = p.clone();
    let mut alive: Vec<usize> = (0..roots.len()).collect();
    let mut out = Vec::new();
    let mut k = 2;
    while !alive.is_empty() {
        if 2 * k > alive.len() {
            out.push(rest.clone());
            break;
        }
        match find_factor(&rest, &alive, k, &encl, &approx, prec)? {
            Some((f, used)) => {
                rest = rest.div_exact(&f).expect("checked by find_factor");
                alive.retain(|i| !used.contains(i));
                out.push(f);
            }
            None => k += 1,
        }
    }
    Ok(out)
}

/// Some `k`-subset of `alive` whose monic product divides `p`.
fn find_factor(
    p: &IntPolynomial,
    alive: &[usize],
    k: usize,
    encl: &[DyadicInterval],
    approx: &[f64],
    prec: u32,
) -> Result<Option<(IntPolynomial, Vec<usize>)>> {
    let n = alive.len();
    let mut pick: Vec<usize> = (0..k).collect();
    loop {
        let subset: Vec<usize> = pick.iter().map(|&i| alive[i]).collect();
        let trace: f64 = subset.iter().map(|&i| approx[i]).sum();
        let scale: f64 = subset.iter().map(|&i| approx[i].abs()).sum::<f64>() + 1.0;
        if (trace - libm::round(trace)).abs() < 1e-9 * scale {
            if let Some(f) = integer_product(&subset, encl, prec)? {
                if p.div_exact(&f).is_some() {
                    return Ok(Some((f, subset)));
                }
            }
        }
        // next combination in lexicographic order
        let Some(i) = (0..k).rev().find(|&i| pick[i] < n - k + i) else {
            return Ok(None);
        };
        pick[i] += 1;
        for j in i + 1..k {
            pick[j] = pick[j - 1] + 1;
        }
    }
}

/// `prod (X - r)` when every coefficient enclosure pins down one integer.
fn integer_product(subset: &[usize], encl: &[DyadicInterval], prec: u32) -> Result<Option<IntPolynomial>> {
    let mut coeffs = vec![DyadicInterval::from_int(1, prec)];
    for &i in subset {
        let r = &encl[i];
        let mut next = vec![DyadicInterval::from_int(0, prec); coeffs.len() + 1];
        for (j, c) in coeffs.iter().enumerate() {
            next[j + 1] = next[j + 1].add(c);
            next[j] = next[j].sub(&c.mul(r));
        }
        coeffs = next;
    }
    let mut ints = Vec::with_capacity(coeffs.len());
    for c in &coeffs {
        let lo = c.lo_rational().ceil().to_integer();
        let hi = c.hi_rational().floor().to_integer();
        if lo > hi {
            return Ok(None);
        }
        if lo != hi {
            return Err(Error::Internal(alloc::format!(
                "root enclosures too wide to recombine ({} bits)",
                prec
            )));
        }
        ints.push(lo);
    }
    Ok(Some(IntPolynomial::new(ints)))
}
