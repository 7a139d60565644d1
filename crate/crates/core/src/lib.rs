//! Exact and certified computations for the quadratic family `f_c(x) = x^2 + c`.
//!
//! The crate answers questions of the form "for which parameters `c` is the
//! rational point `alpha` preperiodic?" and provides the machinery behind the
//! answers:
//!
//! * [`arith`]: rationals, dense integer polynomials, certified dyadic
//!   intervals, Sturm sequences and real algebraic numbers.
//! * [`orbit`]: the parameter polynomials `psi_n` and `F_{m,n}`, escape radii,
//!   and terminating preperiodicity decisions.
//! * [`mandelset`]: escape-time rasters and complex root clouds of `F_{m,n}`.
//! * [`cantor`]: the nested interval systems containing the real parameter
//!   slice when `|alpha| >= 2`.
//! * [`capacity`]: interval and lemniscate capacities, n-diameters, Fekete
//!   configurations and the discriminant degree bound.
//! * [`classify`]: cyclotomic enumeration and the classification of totally
//!   real parameters for `alpha` in `{-1, 0, 1}`.
//!
//! Everything here is `no_std` + `alloc`. The `std` feature only adds
//! `std::error::Error` impls; `parallel` spreads independent work over rayon.
#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod arith;
pub mod cantor;
pub mod capacity;
pub mod classify;
mod error;
pub mod mandelset;
pub mod orbit;
pub mod precision;

pub use arith::{
    alg_compare, isolate_real_roots, sturm_count, Dyadic, DyadicInterval, IntPolynomial,
    IntervalSet, RatPolynomial, Rational, RealAlgebraic,
};
pub use error::{Error, Result};
