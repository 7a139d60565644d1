use alloc::vec::Vec;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Target compact set: a finite union of real intervals or of closed discs.
#[derive(Clone, Debug, PartialEq)]
pub enum FeketeSet {
    Intervals(Vec<(f64, f64)>),
    Discs(Vec<(Complex64, f64)>),
}

impl FeketeSet {
    fn validate(&self) -> Result<()> {
        let ok = match self {
            FeketeSet::Intervals(v) => !v.is_empty() && v.iter().all(|&(a, b)| a <= b && a.is_finite() && b.is_finite()),
            FeketeSet::Discs(v) => !v.is_empty() && v.iter().all(|&(c, r)| r >= 0.0 && r.is_finite() && c.re.is_finite() && c.im.is_finite()),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidArgument("empty or malformed Fekete target set".into()))
        }
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> Complex64 {
        match self {
            FeketeSet::Intervals(v) => {
                let (a, b) = v[rng.gen_range(0..v.len())];
                Complex64::new(a + (b - a) * rng.gen::<f64>(), 0.0)
            }
            FeketeSet::Discs(v) => {
                let (c, r) = v[rng.gen_range(0..v.len())];
                let rho = r * libm::sqrt(rng.gen::<f64>());
                c + Complex64::from_polar(rho, core::f64::consts::TAU * rng.gen::<f64>())
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FeketeConfig {
    pub restarts: u32,
    pub seed: u64,
    pub max_sweeps: u32,
}

impl Default for FeketeConfig {
    fn default() -> Self {
        FeketeConfig { restarts: 8, seed: 0, max_sweeps: 5000 }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FeketeConfiguration {
    pub points: Vec<Complex64>,
    /// `sum_{i<j} ln |x_i - x_j|`.
    pub objective: f64,
    /// Coordinate sweeps of the winning restart.
    pub iterations: u32,
}

impl FeketeConfiguration {
    /// The n-diameter estimate `exp(2 objective / (n(n-1)))`.
    pub fn diameter(&self) -> f64 {
        let n = self.points.len() as f64;
        libm::exp(2.0 * self.objective / (n * (n - 1.0)))
    }
}

/// Best local maximizer of the pairwise log-distance sum over `restarts`
/// deterministic starts, by coordinate ascent with golden-section search.
pub fn fekete_optimize(set: &FeketeSet, n: usize, config: &FeketeConfig) -> Result<FeketeConfiguration> {
    if n < 2 {
        return Err(Error::InvalidArgument("need n >= 2".into()));
    }
    set.validate()?;
    let restarts = config.restarts.max(1);
    let run = |r: u32| ascend(set, n, config.seed.wrapping_add(r as u64), config.max_sweeps);
    #[cfg(feature = "parallel")]
    let runs: Vec<FeketeConfiguration> = {
        use rayon::prelude::*;
        (0..restarts).into_par_iter().map(run).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let runs: Vec<FeketeConfiguration> = (0..restarts).map(run).collect();
    Ok(runs.into_iter().reduce(|a, b| if b.objective > a.objective { b } else { a }).unwrap())
}

fn objective(points: &[Complex64]) -> f64 {
    let mut s = 0.0;
    for i in 0..points.len() {
        for j in 0..i {
            s += libm::log((points[i] - points[j]).norm());
        }
    }
    s
}

/// Contribution of `z` as point `i`.
fn partial(points: &[Complex64], i: usize, z: Complex64) -> f64 {
    points.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, p)| libm::log((z - p).norm())).sum()
}

fn ascend(set: &FeketeSet, n: usize, seed: u64, max_sweeps: u32) -> FeketeConfiguration {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<Complex64> = (0..n).map(|_| set.sample(&mut rng)).collect();
    let mut obj = objective(&points);
    let mut sweeps = 0;
    while sweeps < max_sweeps {
        sweeps += 1;
        let before = obj;
        for i in 0..n {
            let current = partial(&points, i, points[i]);
            let (z, val) = match set {
                FeketeSet::Intervals(ivs) => best_on_line(&points, i, ivs),
                FeketeSet::Discs(ds) => best_in_discs(&points, i, ds),
            };
            if val > current {
                points[i] = z;
                obj += val - current;
            }
        }
        if obj - before <= 1e-15 * (1.0 + libm::fabs(obj)) {
            break;
        }
    }
    FeketeConfiguration { objective: objective(&points), points, iterations: sweeps }
}

const GOLDEN: f64 = 0.618_033_988_749_894_8;

fn golden<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64) -> (f64, f64) {
    let mut c = b - GOLDEN * (b - a);
    let mut d = a + GOLDEN * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..200 {
        if b - a <= 1e-15 * (1.0 + libm::fabs(a) + libm::fabs(b)) {
            break;
        }
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - GOLDEN * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + GOLDEN * (b - a);
            fd = f(d);
        }
    }
    if fc > fd {
        (c, fc)
    } else {
        (d, fd)
    }
}

/// Global maximum of the partial objective over the real intervals. Between
/// consecutive other points the function is a sum of `ln |x - p|`, which is
/// concave there, so each gap is searched by golden section.
fn best_on_line(points: &[Complex64], i: usize, ivs: &[(f64, f64)]) -> (Complex64, f64) {
    let f = |x: f64| partial(points, i, Complex64::new(x, 0.0));
    let mut best = (points[i], f64::NEG_INFINITY);
    for &(a, b) in ivs {
        let mut cuts: Vec<f64> = points
            .iter()
            .enumerate()
            .filter(|&(j, p)| j != i && p.re > a && p.re < b)
            .map(|(_, p)| p.re)
            .collect();
        cuts.push(a);
        cuts.push(b);
        cuts.sort_by(f64::total_cmp);
        for w in cuts.windows(2) {
            let (lo, hi) = (w[0], w[1]);
            for (x, v) in [(lo, f(lo)), (hi, f(hi)), golden(f, lo, hi)] {
                if v > best.1 {
                    best = (Complex64::new(x, 0.0), v);
                }
            }
        }
    }
    best
}

/// Coordinate search in polar coordinates `c + rho e^(i phi)` about each
/// disc: angle at the current radius, then radius at the best angle. Neither
/// direction is concave, so each line is sampled before golden refinement.
fn best_in_discs(points: &[Complex64], i: usize, ds: &[(Complex64, f64)]) -> (Complex64, f64) {
    let p = points[i];
    let mut best = (p, partial(points, i, p));
    for &(c, r) in ds {
        let d = p - c;
        let (rho, phi) = if d.norm() <= r { (d.norm(), libm::atan2(d.im, d.re)) } else { (r, libm::atan2(d.im, d.re)) };
        let on_circle = |t: f64| c + Complex64::from_polar(rho, t);
        let (t, v) = sampled_max(|t| partial(points, i, on_circle(t)), phi - core::f64::consts::PI, phi + core::f64::consts::PI);
        if v > best.1 {
            best = (on_circle(t), v);
        }
        let on_ray = |s: f64| c + Complex64::from_polar(s, t);
        let (s, v) = sampled_max(|s| partial(points, i, on_ray(s)), 0.0, r);
        if v > best.1 {
            best = (on_ray(s), v);
        }
    }
    best
}

fn sampled_max<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64) -> (f64, f64) {
    const SAMPLES: usize = 64;
    let step = (hi - lo) / SAMPLES as f64;
    let (mut k_best, mut v_best) = (0, f64::NEG_INFINITY);
    for k in 0..=SAMPLES {
        let v = f(lo + k as f64 * step);
        if v > v_best {
            v_best = v;
            k_best = k;
        }
    }
    let a = lo + k_best.saturating_sub(1) as f64 * step;
    let b = (lo + (k_best + 1) as f64 * step).min(hi);
    let g = golden(&f, a, b);
    if g.1 > v_best {
        g
    } else {
        (lo + k_best as f64 * step, v_best)
    }
}
