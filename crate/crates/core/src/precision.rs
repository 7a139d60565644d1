//! Working precision for certified interval evaluations.
//!
//! Every routine that needs an enclosure starts at the default bit count and
//! doubles it until its comparison is decisive, so the default only trades
//! speed for the number of retries.

use core::sync::atomic::{AtomicU32, Ordering};

/// Starting precision, in bits, when nothing else is configured.
pub const DEFAULT_PRECISION_BITS: u32 = 64;

/// Lowest precision accepted by [`set_default_precision`].
pub const MIN_PRECISION_BITS: u32 = 16;

/// Precision at which doubling loops give up on a numeric decision and fall
/// back to an exact argument (or report the value as undecided).
pub const MAX_PRECISION_BITS: u32 = 1 << 16;

static DEFAULT_BITS: AtomicU32 = AtomicU32::new(DEFAULT_PRECISION_BITS);

pub fn default_precision() -> u32 {
    DEFAULT_BITS.load(Ordering::Relaxed)
}

/// Overrides the starting precision; values below [`MIN_PRECISION_BITS`] are
/// raised to it.
pub fn set_default_precision(bits: u32) {
    DEFAULT_BITS.store(bits.clamp(MIN_PRECISION_BITS, MAX_PRECISION_BITS), Ordering::Relaxed);
}
