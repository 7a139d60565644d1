use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Signed};

use super::quotient::{AlgebraicModElement, QuotientRing};
use super::{escape_radius, factor_totally_real, EscapeKind, Verdict};
use crate::arith::{alg_compare, isolate_real_roots, DyadicInterval, IntPolynomial, Rational, RealAlgebraic};
use crate::error::{Error, Result};

/// Verdict for one real root of the input polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct RootVerdict {
    pub root: RealAlgebraic,
    /// Index into [`AlgebraicDecision::factors`].
    pub factor_index: usize,
    pub verdict: Verdict,
}

/// Outcome for one irreducible factor. Conjugate parameters share their
/// verdict: `Preperiodic` carries the first exact repeat in the quotient
/// ring, `Escaped` names the conjugate (an index into
/// [`AlgebraicDecision::roots`]) whose orbit left the escape disc.
#[derive(Clone, Debug, PartialEq)]
pub struct FactorDecision {
    pub factor: IntPolynomial,
    pub verdict: Verdict,
    /// Orbit values visited, `alpha` included.
    pub orbit_len: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraicDecision {
    pub alpha: Rational,
    pub minpoly: IntPolynomial,
    pub factors: Vec<FactorDecision>,
    /// Every real root, increasing.
    pub roots: Vec<RootVerdict>,
}

/// Real roots of one factor with its verdict and escape step.
type FactorRun = (Vec<RealAlgebraic>, Result<(Verdict, usize)>);

/// Decides preperiodicity of an integer `alpha` at every root of a monic,
/// squarefree, totally real integer polynomial.
///
/// The polynomial is split into irreducible factors and each factor is run
/// exactly in `Q[X]/(factor)` with `c = X`. A coordinate repeat proves every
/// conjugate preperiodic; a certified embedding above `R_alpha` proves every
/// conjugate is not. One of the two happens within a Northcott-type bound on
/// algebraic integers of fixed degree with bounded conjugates, and reaching
/// that bound is reported as an internal error.
pub fn decide_algebraic(alpha: &Rational, minpoly: &IntPolynomial) -> Result<AlgebraicDecision> {
    if !alpha.is_integer() {
        return Err(Error::InvalidArgument("alpha must be an integer".into()));
    }
    let factors = factor_totally_real(minpoly)?;
    let radius = escape_radius(alpha);

    let per_factor: Vec<FactorRun> = {
        let run = |f: &IntPolynomial| {
            let roots = isolate_real_roots(f);
            let res = decide_irreducible(alpha, f, &roots, &radius);
            (roots, res)
        };
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            factors.par_iter().map(run).collect()
        }
        #[cfg(not(feature = "parallel"))]
        {
            factors.iter().map(run).collect()
        }
    };

    let mut tagged: Vec<(RealAlgebraic, usize, usize)> = Vec::new();
    for (fi, (roots, _)) in per_factor.iter().enumerate() {
        for (ri, r) in roots.iter().enumerate() {
            tagged.push((r.clone(), fi, ri));
        }
    }
    tagged.sort_by(|a, b| alg_compare(&a.0, &b.0));
    let global = |fi: usize, ri: usize| tagged.iter().position(|t| t.1 == fi && t.2 == ri).unwrap();

    let mut decisions = Vec::with_capacity(factors.len());
    for (fi, (f, (_, res))) in factors.into_iter().zip(per_factor).enumerate() {
        let (mut verdict, orbit_len) = res?;
        if let Verdict::Escaped { kind: EscapeKind::Archimedean { embedding, .. }, .. } = &mut verdict {
            *embedding = global(fi, *embedding);
        }
        decisions.push(FactorDecision { factor: f, verdict, orbit_len });
    }
    let roots = tagged
        .iter()
        .map(|(r, fi, _)| RootVerdict { root: r.clone(), factor_index: *fi, verdict: decisions[*fi].verdict.clone() })
        .collect();
    Ok(AlgebraicDecision { alpha: alpha.clone(), minpoly: minpoly.clone(), factors: decisions, roots })
}

/// Iteration count after which a bounded orbit must have repeated: at most
/// `d` algebraic integers share a characteristic polynomial, and each
/// coefficient of that polynomial is bounded by `C(d, k) B^k` with
/// `B = ceil(R) + 1`.
fn northcott_bound(d: usize, radius: &RealAlgebraic) -> u128 {
    let b = radius.floor() + 2u32;
    let b: u128 = b.try_into().unwrap_or(u128::MAX);
    let mut total: u128 = d as u128;
    let mut binom: u128 = 1;
    let mut bpow: u128 = 1;
    for k in 1..=d as u128 {
        binom = binom.saturating_mul(d as u128 + 1 - k) / k;
        bpow = bpow.saturating_mul(b);
        total = total.saturating_mul(binom.saturating_mul(bpow).saturating_mul(2).saturating_add(1));
    }
    total.saturating_add(1)
}

fn decide_irreducible(
    alpha: &Rational,
    f: &IntPolynomial,
    roots: &[RealAlgebraic],
    radius: &RealAlgebraic,
) -> Result<(Verdict, usize)> {
    let ring = QuotientRing::new(f.to_rational())?;
    let c = ring.generator();
    let cap = northcott_bound(f.deg(), radius);
    let r_bits = (radius.floor().bits() + 1) as u32;
    let mut embeddings: Vec<RealAlgebraic> = roots.to_vec();
    let mut seen: BTreeMap<AlgebraicModElement, usize> = BTreeMap::new();
    let mut x = ring.constant(alpha.clone());
    let mut step = 0usize;
    loop {
        if let Some(&m) = seen.get(&x) {
            return Ok((Verdict::Preperiodic { m, n: step }, step + 1));
        }
        let prec = 64 + x.max_coord_bits() as u32 + f.deg() as u32 * (r_bits + 1);
        let r_enc = radius.enclosure(prec);
        for (i, e) in embeddings.iter_mut().enumerate() {
            let v = eval_at(&x, e, prec).abs();
            if v.certainly_cmp(&r_enc) == Some(core::cmp::Ordering::Greater) {
                let modulus_lower = v.to_f64_bounds().0;
                return Ok((Verdict::Escaped { step, kind: EscapeKind::Archimedean { embedding: i, modulus_lower } }, step + 1));
            }
        }
        seen.insert(x.clone(), step);
        step += 1;
        if step as u128 > cap {
            return Err(Error::Internal(alloc::format!(
                "orbit in degree {} neither repeated nor escaped within {cap} steps",
                f.deg()
            )));
        }
        x = ring.add(&ring.square(&x), &c);
    }
}

/// Interval value of `x` at the embedding `X -> e`, refining `e` in place
/// until its enclosure is tight at `prec` bits.
fn eval_at(x: &AlgebraicModElement, e: &mut RealAlgebraic, prec: u32) -> DyadicInterval {
    let (lo, hi) = e.isolation();
    let scale = lo.abs().max(hi.abs()).max(Rational::one());
    let eps = scale / Rational::from_integer(num_bigint::BigInt::one() << prec as usize);
    e.refine_in_place(&eps);
    let t = match e.as_rational() {
        Some(q) => DyadicInterval::from_rational(q, prec),
        None => {
            let (lo, hi) = e.isolation();
            DyadicInterval::from_rational_bounds(lo, hi, prec)
        }
    };
    let mut acc = DyadicInterval::from_int(0, prec);
    for a in x.coords().iter().rev() {
        acc = acc.mul(&t).add_rational(a);
    }
    acc
}
