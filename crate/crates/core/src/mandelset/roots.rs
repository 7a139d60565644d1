//! Aberth-Ehrlich iteration for the squarefree part of `F_{m,n}`.
//!
//! Roots are carried as doubles, but `g` and `g'` are evaluated in
//! fixed point with enough fractional bits that the Newton ratio stays
//! accurate next to clustered roots. Every reported root then gets an
//! interval bound on `|F_{m,n}(root)|` computed by running the orbit
//! `alpha, f_c(alpha), ...` at the exact double `c`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{Dyadic, DyadicInterval, IntPolynomial, Rational, SturmSequence};
use crate::error::{Error, Result};
use crate::orbit::{prep_poly_with_cap, DEFAULT_DEGREE_CAP};

const RESIDUAL_BITS: u32 = 128;

#[derive(Clone, Debug, PartialEq)]
pub struct RootFinderConfig {
    pub max_iter: usize,
    /// Extra attempts with rotated and rescaled starting circles.
    pub retries: usize,
    pub seed: u64,
    pub degree_cap: u32,
}

impl Default for RootFinderConfig {
    fn default() -> Self {
        RootFinderConfig { max_iter: 400, retries: 3, seed: 0, degree_cap: DEFAULT_DEGREE_CAP }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CertifiedRoot {
    pub value: Complex64,
    /// Upper bound on `|F_{m,n}(value)|`.
    pub residual: f64,
}

/// Distinct complex roots of `F_{m,n}` for one `alpha`.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexRootSet {
    pub alpha: Rational,
    pub m: u32,
    pub n: u32,
    pub tol: f64,
    /// The squarefree part the roots were computed from.
    pub squarefree: IntPolynomial,
    /// Real roots first (increasing), then the rest by real and imaginary part.
    pub roots: Vec<CertifiedRoot>,
}

impl ComplexRootSet {
    pub fn real_count(&self) -> usize {
        self.roots.iter().filter(|r| r.value.im == 0.0).count()
    }
}

pub fn prep_roots(alpha: &Rational, m: u32, n: u32, tol: f64) -> Result<ComplexRootSet> {
    prep_roots_with(alpha, m, n, tol, &RootFinderConfig::default())
}

pub fn prep_roots_with(alpha: &Rational, m: u32, n: u32, tol: f64, cfg: &RootFinderConfig) -> Result<ComplexRootSet> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidArgument("tolerance must be positive".into()));
    }
    let f = prep_poly_with_cap(alpha, m, n, cfg.degree_cap)?;
    let g = f.to_primitive_int().squarefree_part();
    let d = g.deg();
    let real = SturmSequence::new(&g).count_real();
    let solver = Solver::new(&g);

    let mut best: Vec<CertifiedRoot> = Vec::new();
    for attempt in 0..=cfg.retries {
        let Some(mut z) = solver.aberth(cfg, attempt) else {
            continue;
        };
        polish(&solver, &mut z);
        snap_real(&solver, &mut z, real);
        let certified: Vec<CertifiedRoot> = z
            .iter()
            .map(|&value| CertifiedRoot { value, residual: certify_residual(alpha, m, n, value) })
            .collect();
        let good: Vec<CertifiedRoot> = certified.iter().copied().filter(|r| r.residual <= tol).collect();
        if good.len() == d && distinct(&z) {
            let mut roots = good;
            roots.sort_by(|a, b| {
                let ka = (a.value.im != 0.0, a.value.re, a.value.im);
                let kb = (b.value.im != 0.0, b.value.re, b.value.im);
                ka.partial_cmp(&kb).unwrap()
            });
            return Ok(ComplexRootSet { alpha: alpha.clone(), m, n, tol, squarefree: g, roots });
        }
        if good.len() > best.len() {
            best = good;
        }
    }
    Err(Error::NonConvergence { expected: d, partial: best.iter().map(|r| (r.value.re, r.value.im)).collect() })
}

/// Certified upper bound on `|f_c^n(alpha) - f_c^m(alpha)|` at the exact
/// double `c`, from 128-bit complex interval arithmetic.
pub fn certify_residual(alpha: &Rational, m: u32, n: u32, c: Complex64) -> f64 {
    let p = RESIDUAL_BITS;
    let cr = DyadicInterval::point(Dyadic::from_f64(c.re), p);
    let ci = DyadicInterval::point(Dyadic::from_f64(c.im), p);
    let mut re = DyadicInterval::from_rational(alpha, p);
    let mut im = DyadicInterval::from_int(0, p);
    let mut at_m = (re.clone(), im.clone());
    for k in 1..=n {
        let next_re = re.square().sub(&im.square()).add(&cr);
        let next_im = re.mul(&im).ldexp(1).add(&ci);
        re = next_re;
        im = next_im;
        if k == m {
            at_m = (re.clone(), im.clone());
        }
    }
    let dr = re.sub(&at_m.0).abs();
    let di = im.sub(&at_m.1).abs();
    let sq = dr.square().add(&di.square());
    sq.sqrt().to_f64_bounds().1
}

struct Solver {
    coeffs: Vec<BigInt>,
    coeffs_f64: Vec<f64>,
    /// Fixed-point fractional bits for evaluation.
    bits: u32,
    radius: f64,
}

impl Solver {
    fn new(g: &IntPolynomial) -> Self {
        let d = g.deg();
        let lc = g.lc().unwrap().to_f64().unwrap_or(f64::MAX).abs();
        let a0 = g.coeffs()[0].to_f64().unwrap_or(f64::MAX).abs();
        let radius = libm::pow(1.0 + a0 / lc, 1.0 / d as f64);
        let bits = 128 + g.max_coeff_bits() as u32 + libm::ceil(d as f64 * fujiwara_log2(g).max(1.0)) as u32;
        let coeffs_f64 = g.coeffs().iter().map(|a| a.to_f64().unwrap_or(f64::INFINITY)).collect();
        Solver { coeffs: g.coeffs().to_vec(), coeffs_f64, bits, radius }
    }

    fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `g(z) / g'(z)`, or `None` where `g'` vanishes to working precision.
    fn newton(&self, z: Complex64) -> Option<Complex64> {
        let p = self.bits;
        let (zr, zi) = (to_fixed(z.re, p), to_fixed(z.im, p));
        let (mut gr, mut gi) = (BigInt::zero(), BigInt::zero());
        let (mut dr, mut di) = (BigInt::zero(), BigInt::zero());
        for a in self.coeffs.iter().rev() {
            let (tr, ti) = cmul(&dr, &di, &zr, &zi, p);
            dr = tr + &gr;
            di = ti + &gi;
            let (tr, ti) = cmul(&gr, &gi, &zr, &zi, p);
            gr = tr + (a << p as usize);
            gi = ti;
        }
        if gr.is_zero() && gi.is_zero() {
            return Some(Complex64::new(0.0, 0.0));
        }
        if dr.is_zero() && di.is_zero() {
            return None;
        }
        let (g, eg) = scaled(&gr, &gi);
        let (dg, ed) = scaled(&dr, &di);
        let q = g / dg;
        let e = (eg - ed).clamp(-2000, 2000) as i32;
        Some(Complex64::new(libm::scalbn(q.re, e), libm::scalbn(q.im, e)))
    }

    fn aberth(&self, cfg: &RootFinderConfig, attempt: usize) -> Option<Vec<Complex64>> {
        let d = self.degree();
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(attempt as u64));
        let offset: f64 = rng.gen_range(0.0..core::f64::consts::TAU);
        let golden = core::f64::consts::PI * (3.0 - libm::sqrt(5.0));
        let rho = self.radius * (1.0 + 0.25 * attempt as f64);
        let mut z: Vec<Complex64> =
            (0..d).map(|k| Complex64::from_polar(rho, offset + golden * k as f64)).collect();
        // cheap double-precision sweeps first, then the exact-enough ratio
        let fast = |x: Complex64| self.newton_f64(x).or_else(|| self.newton(x));
        let _ = sweep(&mut z, cfg.max_iter.min(100), 1e-7, fast);
        sweep(&mut z, cfg.max_iter, 1e-15, |x| self.newton(x))?;
        Some(z)
    }

    /// `g(z) / g'(z)` by Horner in doubles; `None` on overflow.
    fn newton_f64(&self, z: Complex64) -> Option<Complex64> {
        let mut g = Complex64::new(0.0, 0.0);
        let mut dg = g;
        for a in self.coeffs_f64.iter().rev() {
            dg = dg * z + g;
            g = g * z + a;
        }
        let q = g / dg;
        (q.re.is_finite() && q.im.is_finite()).then_some(q)
    }
}

/// Gauss-Seidel Aberth sweeps until every correction is below `rel` of its
/// root; `None` on a non-finite step or when the sweep budget runs out.
fn sweep(z: &mut [Complex64], max_iter: usize, rel: f64, newton: impl Fn(Complex64) -> Option<Complex64>) -> Option<()> {
    let d = z.len();
    let mut done = vec![false; d];
    for _ in 0..max_iter {
        let mut all = true;
        for k in 0..d {
            if done[k] {
                continue;
            }
            let nk = newton(z[k])?;
            let s: Complex64 = (0..d).filter(|&j| j != k).map(|j| (z[k] - z[j]).inv()).sum();
            let w = nk / (Complex64::new(1.0, 0.0) - nk * s);
            if !w.re.is_finite() || !w.im.is_finite() {
                return None;
            }
            z[k] -= w;
            if w.norm() <= rel * z[k].norm().max(1e-6) {
                done[k] = true;
            } else {
                all = false;
            }
        }
        if all {
            return Some(());
        }
    }
    None
}

/// Two Newton steps per root; roots are independent here.
fn polish(s: &Solver, z: &mut [Complex64]) {
    let step = |x: &mut Complex64| {
        for _ in 0..2 {
            match s.newton(*x) {
                Some(w) if w.re.is_finite() && w.im.is_finite() => *x -= w,
                _ => break,
            }
        }
    };
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        z.par_iter_mut().for_each(step);
    }
    #[cfg(not(feature = "parallel"))]
    z.iter_mut().for_each(step);
}

/// The Sturm count says exactly `real` roots are real; set the imaginary
/// parts of the `real` nearest-to-axis roots to zero when they are already
/// negligible, then re-polish those on the axis.
fn snap_real(s: &Solver, z: &mut [Complex64], real: usize) {
    if real == 0 {
        return;
    }
    let mut idx: Vec<usize> = (0..z.len()).collect();
    idx.sort_by(|&a, &b| z[a].im.abs().partial_cmp(&z[b].im.abs()).unwrap());
    let tiny = |c: Complex64| c.im.abs() <= 1e-8 * c.re.abs().max(1.0);
    if !idx[..real].iter().all(|&i| tiny(z[i])) {
        return;
    }
    for &i in &idx[..real] {
        let mut x = Complex64::new(z[i].re, 0.0);
        for _ in 0..3 {
            match s.newton(x) {
                Some(w) if w.re.is_finite() => x.re -= w.re,
                _ => break,
            }
        }
        z[i] = x;
    }
}

/// `log2` of Fujiwara's bound `2 max |a_(d-k) / a_d|^(1/k)` on root moduli.
fn fujiwara_log2(g: &IntPolynomial) -> f64 {
    let log2 = |a: &BigInt| match a.to_f64() {
        Some(x) if x.is_finite() => libm::log2(x.abs()),
        _ => a.bits() as f64,
    };
    let c = g.coeffs();
    let d = g.deg();
    let top = log2(&c[d]);
    (1..=d)
        .filter(|&k| !c[d - k].is_zero())
        .map(|k| (log2(&c[d - k]) - top) / k as f64)
        .fold(f64::NEG_INFINITY, f64::max)
        + 1.0
}

fn distinct(z: &[Complex64]) -> bool {
    for i in 0..z.len() {
        for j in i + 1..z.len() {
            if (z[i] - z[j]).norm() <= 1e-13 * z[i].norm().max(1.0) {
                return false;
            }
        }
    }
    true
}

fn to_fixed(x: f64, p: u32) -> BigInt {
    let d = Dyadic::from_f64(x);
    let s = d.exponent() + p as i64;
    if s >= 0 {
        d.mantissa() << s as usize
    } else {
        d.mantissa() >> (-s) as usize
    }
}

/// `(a + bi)(c + di) / 2^p`.
fn cmul(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt, p: u32) -> (BigInt, BigInt) {
    let re = (a * c - b * d) >> p as usize;
    let im = (a * d + b * c) >> p as usize;
    (re, im)
}

/// `(x, e)` with `x * 2^e` approximating `re + i im` and `|x| < 2^60`.
fn scaled(re: &BigInt, im: &BigInt) -> (Complex64, i64) {
    let top = re.bits().max(im.bits());
    let shift = top.saturating_sub(60);
    let f = |v: &BigInt| (v >> shift as usize).to_f64().unwrap();
    (Complex64::new(f(re), f(im)), shift as i64)
}
