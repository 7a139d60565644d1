use alloc::vec::Vec;

use num_traits::Zero;

use crate::arith::{RatPolynomial, Rational};
use crate::error::{Error, Result};

/// `Q[X] / (m)` for a monic `m` of positive degree.
#[derive(Clone, Debug)]
pub struct QuotientRing {
    modulus: RatPolynomial,
}

/// Element of a [`QuotientRing`]: coordinates on `1, X, ..., X^(d-1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgebraicModElement {
    coords: Vec<Rational>,
}

impl AlgebraicModElement {
    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn to_poly(&self) -> RatPolynomial {
        RatPolynomial::new(self.coords.clone())
    }

    /// `Some` when every coordinate is an integer.
    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    pub fn max_coord_bits(&self) -> u64 {
        self.coords.iter().map(|c| c.numer().bits().max(c.denom().bits())).max().unwrap_or(0)
    }
}

impl QuotientRing {
    /// Makes `m` monic; rejects constants.
    pub fn new(m: RatPolynomial) -> Result<Self> {
        if m.deg() == 0 {
            return Err(Error::InvalidArgument("quotient by a constant".into()));
        }
        Ok(QuotientRing { modulus: m.monic() })
    }

    pub fn modulus(&self) -> &RatPolynomial {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.deg()
    }

    pub fn element(&self, p: &RatPolynomial) -> AlgebraicModElement {
        let r = if p.deg() >= self.degree() { p.rem(&self.modulus) } else { p.clone() };
        let mut coords = r.into_coeffs();
        coords.resize(self.degree(), Rational::zero());
        AlgebraicModElement { coords }
    }

    pub fn constant(&self, q: Rational) -> AlgebraicModElement {
        self.element(&RatPolynomial::constant(q))
    }

    /// The class of `X`.
    pub fn generator(&self) -> AlgebraicModElement {
        self.element(&RatPolynomial::x())
    }

    pub fn add(&self, a: &AlgebraicModElement, b: &AlgebraicModElement) -> AlgebraicModElement {
        let coords = a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect();
        AlgebraicModElement { coords }
    }

    pub fn mul(&self, a: &AlgebraicModElement, b: &AlgebraicModElement) -> AlgebraicModElement {
        self.element(&(&a.to_poly() * &b.to_poly()))
    }

    pub fn square(&self, a: &AlgebraicModElement) -> AlgebraicModElement {
        self.mul(a, a)
    }
}
