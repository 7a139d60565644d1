//! Totally real preperiodic parameters for integer `alpha` in `{-1, 0, 1}`.
//!
//! Pipeline: the real slice `[a, b]` of the parameter set, the degree bound
//! `n0` from the capacity criterion on it, every monic integer polynomial of
//! degree below `n0` with all roots in `[a, b]` (these are products of
//! shifted Chebyshev-cyclotomic factors by Kronecker's theorem, since
//! `[a, b]` sits inside an interval `[t, t + 4]`), and an exact decision for
//! each irreducible factor.

mod cyclotomic;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::One;

use crate::arith::{alg_compare, count_roots_closed, isolate_real_roots, IntPolynomial, Rational, RealAlgebraic, SturmSequence};
use crate::capacity::degree_bound;
use crate::error::{Error, Result};
use crate::orbit::{decide_algebraic, prep_poly_int, real_slice, EscapeKind, Verdict, DEFAULT_DEGREE_CAP};

pub use cyclotomic::{cyclotomic, cyclotomic_factorization, euler_phi, kronecker_transform, shifted_chebyshev_minpoly};

/// `p` is squarefree and all of its roots are real.
pub fn totally_real_test(p: &IntPolynomial) -> bool {
    !p.is_zero() && p.is_squarefree() && SturmSequence::new(p).count_real() == p.deg()
}

/// Integer `t` with `[a, b]` inside `[t, t + 4]`, the largest such.
pub fn kronecker_shift(a: &RealAlgebraic, b: &RealAlgebraic) -> Result<BigInt> {
    let t = a.floor();
    let top = RealAlgebraic::from_rational(Rational::from_integer(&t + 4));
    if alg_compare(b, &top) == Ordering::Greater {
        return Err(Error::NotKroneckerReducible);
    }
    Ok(t)
}

/// `zeta + 1/zeta + t + 2` over roots of unity `zeta` of order `n`,
/// i.e. every irreducible monic integer polynomial of degree `<= max_degree`
/// with roots in `[t, t + 4]`, tagged with `n`.
fn kronecker_factors(t: &BigInt, max_degree: usize) -> Vec<(u32, IntPolynomial)> {
    let shift = t + 2;
    // phi(n) >= sqrt(n / 2), so phi(n) <= 2d forces n <= 8 d^2
    let n_max = (8 * max_degree * max_degree).max(2) as u32;
    (1..=n_max)
        .filter(|&n| n <= 2 || euler_phi(n) as usize <= 2 * max_degree)
        .map(|n| (n, cyclotomic::chebyshev_factor(n, &shift)))
        .collect()
}

fn roots_inside(p: &IntPolynomial, a: &RealAlgebraic, b: &RealAlgebraic) -> bool {
    count_roots_closed(p, a, b).map(|k| k == p.deg()).unwrap_or(false)
}

/// Every monic squarefree integer polynomial of degree `<= n0 - 1` with all
/// roots in the closed interval `[a, b]`, as products of distinct
/// irreducible factors.
pub fn enumerate_candidates(a: &RealAlgebraic, b: &RealAlgebraic, n0: u32) -> Result<Vec<IntPolynomial>> {
    Ok(enumerate(a, b, n0)?.candidates)
}

struct Enumeration {
    inside: Vec<IntPolynomial>,
    outside: Vec<IntPolynomial>,
    candidates: Vec<IntPolynomial>,
    /// For each candidate, indices into `inside`.
    parts: Vec<Vec<usize>>,
}

fn enumerate(a: &RealAlgebraic, b: &RealAlgebraic, n0: u32) -> Result<Enumeration> {
    if alg_compare(a, b) != Ordering::Less {
        return Err(Error::InvalidArgument("need a < b".into()));
    }
    let t = kronecker_shift(a, b)?;
    let max_degree = n0.saturating_sub(1) as usize;
    let (mut inside, mut outside) = (Vec::new(), Vec::new());
    for (_, p) in kronecker_factors(&t, max_degree) {
        if roots_inside(&p, a, b) {
            inside.push(p);
        } else {
            outside.push(p);
        }
    }
    let mut parts = Vec::new();
    for size in 1..=inside.len() {
        let mut pick: Vec<usize> = (0..size).collect();
        loop {
            if pick.iter().map(|&i| inside[i].deg()).sum::<usize>() <= max_degree {
                parts.push(pick.clone());
            }
            let Some(i) = (0..size).rev().find(|&i| pick[i] < inside.len() - size + i) else { break };
            pick[i] += 1;
            for j in i + 1..size {
                pick[j] = pick[j - 1] + 1;
            }
        }
    }
    let candidates = parts
        .iter()
        .map(|ix| ix.iter().fold(IntPolynomial::one(), |acc, &i| &acc * &inside[i]))
        .collect();
    Ok(Enumeration { inside, outside, candidates, parts })
}

/// `f^m_c(alpha) = f^n_c(alpha)` at one root, with `m >= 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct RootWitness {
    pub root: RealAlgebraic,
    pub m: u32,
    pub n: u32,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AcceptedCandidate {
    pub poly: IntPolynomial,
    pub witnesses: Vec<RootWitness>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum RejectionReason {
    OutsideInterval,
    /// The orbit at `root` leaves the escape disc after `step` iterations.
    Escapes { root: RealAlgebraic, step: usize },
}

#[derive(Clone, Debug, PartialEq)]
pub struct RejectedCandidate {
    pub poly: IntPolynomial,
    pub reason: RejectionReason,
}

/// An accepted irreducible minimal polynomial. `cross_checked` records that
/// the witness was confirmed a second way, by exact division of `F_{m,n}`.
#[derive(Clone, Debug, PartialEq)]
pub struct AcceptedParameter {
    pub minpoly: IntPolynomial,
    pub roots: Vec<RealAlgebraic>,
    pub m: u32,
    pub n: u32,
    pub cross_checked: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClassificationResult {
    pub alpha: Rational,
    pub interval: (RealAlgebraic, RealAlgebraic),
    pub degree_bound: u32,
    pub kronecker_shift: BigInt,
    pub candidates_considered: Vec<IntPolynomial>,
    pub accepted: Vec<AcceptedCandidate>,
    pub rejected: Vec<RejectedCandidate>,
    pub parameters: Vec<AcceptedParameter>,
    pub notes: Vec<String>,
}

impl ClassificationResult {
    /// Accepted parameters, increasing.
    pub fn accepted_roots(&self) -> Vec<RealAlgebraic> {
        let mut v: Vec<RealAlgebraic> = self.parameters.iter().flat_map(|p| p.roots.iter().cloned()).collect();
        v.sort_by(alg_compare);
        v
    }

    /// Everything but `alpha`.
    pub fn same_classification(&self, other: &Self) -> bool {
        self.interval == other.interval
            && self.degree_bound == other.degree_bound
            && self.kronecker_shift == other.kronecker_shift
            && self.candidates_considered == other.candidates_considered
            && self.accepted == other.accepted
            && self.rejected == other.rejected
            && self.parameters == other.parameters
            && self.notes == other.notes
    }
}

/// Witness with `m >= 1`. These agree for `alpha` and `-alpha`, whose orbits
/// coincide from the first iterate on.
fn normalize(m: usize, n: usize) -> (u32, u32) {
    if m == 0 {
        (1, n as u32 + 1)
    } else {
        (m as u32, n as u32)
    }
}

pub fn classify_totally_real_prep(alpha: &Rational) -> Result<ClassificationResult> {
    let supported = alpha.is_integer() && alpha.numer() >= &BigInt::from(-1) && alpha.numer() <= &BigInt::one();
    if !supported {
        return Err(Error::UnsupportedAlpha);
    }
    let slice = real_slice(alpha);
    let hull = slice.hull().ok_or_else(|| Error::Internal("empty real slice".into()))?;
    let (a, b) = (hull.left, hull.right);
    let report = degree_bound(&a, &b)?;
    let n0 = report.n0.ok_or_else(|| Error::Internal("degree criterion not met within its cap".into()))?;
    let en = enumerate(&a, &b, n0)?;
    let t = kronecker_shift(&a, &b)?;

    let run = |f: &IntPolynomial| decide_factor(alpha, f);
    #[cfg(feature = "parallel")]
    let decided: Vec<Result<FactorOutcome>> = {
        use rayon::prelude::*;
        en.inside.par_iter().map(run).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let decided: Vec<Result<FactorOutcome>> = en.inside.iter().map(run).collect();
    let decided = decided.into_iter().collect::<Result<Vec<_>>>()?;

    let mut considered = en.outside.clone();
    let mut rejected: Vec<RejectedCandidate> = en
        .outside
        .iter()
        .map(|p| RejectedCandidate { poly: p.clone(), reason: RejectionReason::OutsideInterval })
        .collect();
    let mut accepted = Vec::new();
    for (poly, ix) in en.candidates.iter().zip(&en.parts) {
        considered.push(poly.clone());
        match ix.iter().find_map(|&i| decided[i].escape.clone()) {
            Some(reason) => rejected.push(RejectedCandidate { poly: poly.clone(), reason }),
            None => {
                let mut witnesses: Vec<RootWitness> = ix.iter().flat_map(|&i| decided[i].witnesses.clone()).collect();
                witnesses.sort_by(|x, y| alg_compare(&x.root, &y.root));
                accepted.push(AcceptedCandidate { poly: poly.clone(), witnesses });
            }
        }
    }
    let parameters: Vec<AcceptedParameter> = decided.into_iter().filter_map(|d| d.parameter).collect();

    let mut notes = Vec::new();
    let zero = RealAlgebraic::from_int(0);
    if (alpha.is_one() || alpha == &-Rational::one())
        && parameters.iter().any(|p| p.roots.contains(&zero)) {
            notes.push(String::from(
                "c = 0 is accepted: f_0 fixes 1 and sends -1 to the fixed point 1. A five-parameter list \
                 (-2-sqrt2, -3, -2, -1, -2+sqrt2) omits it.",
            ));
        }
    if parameters.iter().any(|p| !p.cross_checked) {
        notes.push(String::from("some witnesses failed the divisibility cross-check"));
    }
    Ok(ClassificationResult {
        alpha: alpha.clone(),
        interval: (a, b),
        degree_bound: n0,
        kronecker_shift: t,
        candidates_considered: considered,
        accepted,
        rejected,
        parameters,
        notes,
    })
}

struct FactorOutcome {
    escape: Option<RejectionReason>,
    witnesses: Vec<RootWitness>,
    parameter: Option<AcceptedParameter>,
}

fn decide_factor(alpha: &Rational, f: &IntPolynomial) -> Result<FactorOutcome> {
    let d = decide_algebraic(alpha, f)?;
    let roots: Vec<RealAlgebraic> = isolate_real_roots(f);
    match d.factors[0].verdict.clone() {
        Verdict::Preperiodic { m, n } => {
            let (m, n) = normalize(m, n);
            let cap = n.max(DEFAULT_DEGREE_CAP);
            let cross_checked = prep_poly_int(alpha, m, n, cap).map(|g| f.divides(&g)).unwrap_or(false);
            let witnesses = roots.iter().map(|r| RootWitness { root: r.clone(), m, n }).collect();
            Ok(FactorOutcome {
                escape: None,
                witnesses,
                parameter: Some(AcceptedParameter { minpoly: f.clone(), roots, m, n, cross_checked }),
            })
        }
        Verdict::Escaped { step, kind } => {
            let root = match kind {
                EscapeKind::Archimedean { embedding, .. } => d.roots[embedding].root.clone(),
                EscapeKind::Denominator => roots[0].clone(),
            };
            Ok(FactorOutcome { escape: Some(RejectionReason::Escapes { root, step }), witnesses: Vec::new(), parameter: None })
        }
        Verdict::BudgetExhausted => Err(Error::Internal(format!("no decision for factor {f}"))),
    }
}

#[cfg(test)]
mod tests;
