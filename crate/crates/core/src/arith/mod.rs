//! Exact scalars, polynomials, certified intervals and real algebraic numbers.

mod algebraic;
mod dyadic;
mod interval_set;
mod modular;
mod poly;
mod sturm;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use algebraic::{
    alg_compare, interpolate, rational_from_f64, rational_to_f64, resultant, sum_polynomial, RealAlgebraic,
};
pub use dyadic::{Dyadic, DyadicInterval, Round};
pub use interval_set::{ClosedInterval, IntervalSet};
pub use poly::{Coeff, IntPolynomial, Polynomial, RatPolynomial};
pub(crate) use sturm::count_closed_with;
pub use sturm::{count_real_roots, count_roots_closed, isolate_real_roots, root_bound, sturm_count, SturmSequence};



/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.
pub type Rational = BigRational;

/// `n / d` as a [`Rational`]; panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a [`Rational`].
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}
