//! Floating-point views of the generalized Mandelbrot set `M(alpha)`:
//! escape-time rasters and the complex roots of `F_{m,n}`.
//!
//! Nothing here feeds an exact verdict. Grids use doubles with the escape
//! radius rounded up; root sets carry residuals certified by interval
//! arithmetic.

mod roots;

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::arith::{rational_to_f64, Rational};
use crate::error::{Error, Result};
use crate::orbit::escape_radius_f64_up;

pub use roots::{prep_roots, prep_roots_with, certify_residual, CertifiedRoot, ComplexRootSet, RootFinderConfig};

/// Axis-aligned rectangle in the parameter plane.
#[derive(Clone, Debug, PartialEq)]
pub struct Window {
    pub re_min: Rational,
    pub re_max: Rational,
    pub im_min: Rational,
    pub im_max: Rational,
}

impl Window {
    pub fn new(re_min: Rational, re_max: Rational, im_min: Rational, im_max: Rational) -> Result<Self> {
        if re_min >= re_max || im_min >= im_max {
            return Err(Error::InvalidArgument("empty window".into()));
        }
        Ok(Window { re_min, re_max, im_min, im_max })
    }

    fn bounds(&self) -> [f64; 4] {
        [&self.re_min, &self.re_max, &self.im_min, &self.im_max].map(rational_to_f64)
    }
}

/// Escape counts on a `width x height` raster. Row 0 is the top edge
/// (`im_max`); each cell is sampled at its centre.
#[derive(Clone, Debug, PartialEq)]
pub struct EscapeGrid {
    pub alpha: Rational,
    pub window: Window,
    pub width: usize,
    pub height: usize,
    pub max_iter: u32,
    /// Row-major; `max_iter + 1` marks "bounded within the budget".
    pub cells: Vec<u32>,
}

impl EscapeGrid {
    pub fn sentinel(&self) -> u32 {
        self.max_iter + 1
    }

    pub fn get(&self, col: usize, row: usize) -> u32 {
        self.cells[row * self.width + col]
    }

    /// Parameter sampled by a cell.
    pub fn cell_center(&self, col: usize, row: usize) -> Complex64 {
        let [x0, x1, y0, y1] = self.window.bounds();
        let re = x0 + (col as f64 + 0.5) * (x1 - x0) / self.width as f64;
        let im = y1 - (row as f64 + 0.5) * (y1 - y0) / self.height as f64;
        Complex64::new(re, im)
    }

    /// Cell whose closed footprint contains `c`.
    pub fn cell_of(&self, c: Complex64) -> Option<(usize, usize)> {
        let [x0, x1, y0, y1] = self.window.bounds();
        if !(x0..=x1).contains(&c.re) || !(y0..=y1).contains(&c.im) {
            return None;
        }
        let col = ((c.re - x0) / (x1 - x0) * self.width as f64) as usize;
        let row = ((y1 - c.im) / (y1 - y0) * self.height as f64) as usize;
        Some((col.min(self.width - 1), row.min(self.height - 1)))
    }
}

/// First `n >= 1` with `|f_c^n(alpha)| > bailout`, or `max_iter + 1`.
pub fn escape_count(alpha: f64, c: Complex64, bailout: f64, max_iter: u32) -> u32 {
    let mut z = Complex64::new(alpha, 0.0);
    for n in 1..=max_iter {
        z = z * z + c;
        if z.norm() > bailout {
            return n;
        }
    }
    max_iter + 1
}

pub fn escape_grid(alpha: &Rational, window: &Window, resolution: (usize, usize), max_iter: u32) -> Result<EscapeGrid> {
    let (width, height) = resolution;
    if width == 0 || height == 0 {
        return Err(Error::InvalidArgument("resolution must be at least 1x1".into()));
    }
    if max_iter == 0 {
        return Err(Error::InvalidArgument("max_iter must be positive".into()));
    }
    let mut grid = EscapeGrid {
        alpha: alpha.clone(),
        window: window.clone(),
        width,
        height,
        max_iter,
        cells: Vec::new(),
    };
    let a = rational_to_f64(alpha);
    let bailout = escape_radius_f64_up(alpha);
    let row = |r: usize| -> Vec<u32> {
        (0..width).map(|col| escape_count(a, grid.cell_center(col, r), bailout, max_iter)).collect()
    };
    #[cfg(feature = "parallel")]
    let rows: Vec<Vec<u32>> = {
        use rayon::prelude::*;
        (0..height).into_par_iter().map(row).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let rows: Vec<Vec<u32>> = (0..height).map(row).collect();
    grid.cells = rows.concat();
    Ok(grid)
}

/// Outcome of [`verify_in_disc`].
#[derive(Clone, Debug, PartialEq)]
pub struct DiscReport {
    /// `R_alpha` rounded up.
    pub radius: f64,
    pub max_modulus: f64,
    /// `radius - max_modulus`.
    pub slack: f64,
    pub count: usize,
}

/// Checks `|root| <= R_alpha + tol` for every root in the set.
pub fn verify_in_disc(set: &ComplexRootSet, tol: f64) -> Result<DiscReport> {
    let radius = escape_radius_f64_up(&set.alpha);
    let mut max_modulus = 0.0f64;
    for (index, r) in set.roots.iter().enumerate() {
        let m = r.value.norm();
        if m > radius + tol {
            return Err(Error::DiscViolation { index, re: r.value.re, im: r.value.im });
        }
        max_modulus = max_modulus.max(m);
    }
    Ok(DiscReport { radius, max_modulus, slack: radius - max_modulus, count: set.roots.len() })
}

#[cfg(test)]
mod tests;
