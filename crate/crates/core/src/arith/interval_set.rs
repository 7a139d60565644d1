use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use super::algebraic::{alg_compare, RealAlgebraic};
use crate::error::{Error, Result};

/// Closed interval `[left, right]` with exact endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedInterval {
    pub left: RealAlgebraic,
    pub right: RealAlgebraic,
}

impl ClosedInterval {
    pub fn new(left: RealAlgebraic, right: RealAlgebraic) -> Result<Self> {
        if alg_compare(&left, &right) == Ordering::Greater {
            return Err(Error::InvalidArgument("interval endpoints out of order".into()));
        }
        Ok(ClosedInterval { left, right })
    }

    pub fn contains(&self, x: &RealAlgebraic) -> bool {
        alg_compare(&self.left, x) != Ordering::Greater && alg_compare(x, &self.right) != Ordering::Greater
    }

    /// `right - left`, exact.
    pub fn length(&self) -> RealAlgebraic {
        self.right.sub(&self.left)
    }
}

impl fmt::Display for ClosedInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.left, self.right)
    }
}

/// Finite union of pairwise disjoint closed intervals, sorted left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalSet {
    intervals: Vec<ClosedInterval>,
}

impl IntervalSet {
    pub fn new(mut intervals: Vec<ClosedInterval>) -> Result<Self> {
        intervals.sort_by(|a, b| alg_compare(&a.left, &b.left));
        for w in intervals.windows(2) {
            if alg_compare(&w[0].right, &w[1].left) != Ordering::Less {
                return Err(Error::InvalidArgument("intervals overlap".into()));
            }
        }
        Ok(IntervalSet { intervals })
    }

    pub fn single(left: RealAlgebraic, right: RealAlgebraic) -> Result<Self> {
        Ok(IntervalSet { intervals: alloc::vec![ClosedInterval::new(left, right)?] })
    }

    pub fn intervals(&self) -> &[ClosedInterval] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn contains(&self, x: &RealAlgebraic) -> bool {
        self.intervals.iter().any(|i| i.contains(x))
    }

    /// Smallest closed interval containing the whole set.
    pub fn hull(&self) -> Option<ClosedInterval> {
        let first = self.intervals.first()?;
        let last = self.intervals.last()?;
        Some(ClosedInterval { left: first.left.clone(), right: last.right.clone() })
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, iv) in self.intervals.iter().enumerate() {
            if i > 0 {
                f.write_str(" U ")?;
            }
            write!(f, "{iv}")?;
        }
        Ok(())
    }
}
