use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Root counting was asked of the zero polynomial.
    IndeterminateRootCount,
    /// `n` exceeds the configured cap on parameter-polynomial depth.
    DegreeOverflow { n: u32, cap: u32 },
    /// Parameter polynomial is not monic over the integers, or not squarefree.
    NotAlgebraicInteger(&'static str),
    /// A polynomial that must have only real roots has a complex one.
    NotTotallyReal,
    /// `u(c)` needs `c <= 1/4`.
    ComplexFixedPoints,
    /// `v(c)` needs `u(c) >= 2`, i.e. `c <= -2`.
    PreimageUndefined,
    CantorRequiresLargeAlpha,
    /// The degree criterion needs an interval of length strictly below 4.
    CriterionInapplicable,
    /// No integer `t` with `[a, b] ⊆ [t, t + 4]`.
    NotKroneckerReducible,
    /// Classification is only available for `alpha` in `{-1, 0, 1}`.
    UnsupportedAlpha,
    /// Simultaneous iteration did not certify every root; `partial` holds the
    /// roots that were certified as `(re, im)` pairs.
    NonConvergence { expected: usize, partial: Vec<(f64, f64)> },
    /// A Cantor interval (or the complement of their union, `interval: None`)
    /// holds the wrong number of roots.
    Localization { interval: Option<usize>, count: usize, expected: usize },
    /// A root lies outside the closed escape disc.
    DiscViolation { index: usize, re: f64, im: f64 },
    InvalidArgument(String),
    /// A bound that should be unreachable was reached.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::IndeterminateRootCount => f.write_str("indeterminate root count"),
            Error::DegreeOverflow { n, cap } => {
                write!(f, "degree overflow: depth {n} exceeds cap {cap}")
            }
            Error::NotAlgebraicInteger(why) => {
                write!(f, "not an algebraic integer / not separable: {why}")
            }
            Error::NotTotallyReal => f.write_str("polynomial has non-real roots"),
            Error::ComplexFixedPoints => f.write_str("complex fixed points"),
            Error::PreimageUndefined => f.write_str("v undefined at this parameter"),
            Error::CantorRequiresLargeAlpha => {
                f.write_str("Cantor construction requires |alpha| >= 2")
            }
            Error::CriterionInapplicable => {
                f.write_str("criterion inapplicable: interval length must be < 4")
            }
            Error::NotKroneckerReducible => {
                f.write_str("interval not reducible to Kronecker form")
            }
            Error::UnsupportedAlpha => f.write_str(
                "classification is implemented for alpha in {-1, 0, 1}; other rational alpha \
                 give non-integral parameters and remain open",
            ),
            Error::NonConvergence { expected, partial } => write!(
                f,
                "root finder did not converge: certified {} of {} roots",
                partial.len(),
                expected
            ),
            Error::Localization { interval: Some(i), count, expected } => write!(
                f,
                "localization failed: interval {i} holds {count} roots, expected {expected}"
            ),
            Error::Localization { interval: None, count, expected } => write!(
                f,
                "localization failed: {count} roots outside the intervals, expected {expected}"
            ),
            Error::DiscViolation { index, re, im } => {
                write!(f, "root {index} ({re} + {im}i) lies outside the escape disc")
            }
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
