//! Scalar intervals for ambiguity propagation.
//!
//! An [`Interval`] carries a reference value plus `[low, high]` bounds.
//! Bounds widen when a card name matches several models or when several
//! countries contribute electricity mixes; the reference tracks the
//! preferred card / first-listed country.

use serde::Serialize;
use std::ops::{Add, Mul};

use crate::error::{Error, Result};

/// Reference value with enclosing bounds, `low <= reference <= high`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Interval {
    pub low: f64,
    pub reference: f64,
    pub high: f64,
}

impl Interval {
    /// Degenerate interval: `low == reference == high`.
    pub fn point(v: f64) -> Self {
        Interval {
            low: v,
            reference: v,
            high: v,
        }
    }

    pub fn new(low: f64, reference: f64, high: f64) -> Result<Self> {
        if !(low <= reference && reference <= high) {
            return Err(Error::InvalidInput(format!(
                "interval ordering violated: low={low}, reference={reference}, high={high}"
            )));
        }
        Ok(Interval {
            low,
            reference,
            high,
        })
    }

    /// Envelope of candidate values; the reference is supplied separately
    /// and is included in the bounds.
    pub fn from_candidates<I>(reference: f64, candidates: I) -> Self
    where
        I: IntoIterator<Item = f64>,
    {
        let mut low = reference;
        let mut high = reference;
        for v in candidates {
            low = low.min(v);
            high = high.max(v);
        }
        Interval {
            low,
            reference,
            high,
        }
    }

    pub fn contains(&self, v: f64) -> bool {
        self.low <= v && v <= self.high
    }

    pub fn is_point(&self) -> bool {
        self.low == self.reference && self.reference == self.high
    }

    pub fn width(&self) -> f64 {
        self.high - self.low
    }
}

impl Add for Interval {
    type Output = Interval;

    fn add(self, rhs: Interval) -> Interval {
        Interval {
            low: self.low + rhs.low,
            reference: self.reference + rhs.reference,
            high: self.high + rhs.high,
        }
    }
}

/// Scalar scaling; requires a non-negative factor so ordering is preserved.
impl Mul<f64> for Interval {
    type Output = Interval;

    fn mul(self, k: f64) -> Interval {
        debug_assert!(k >= 0.0, "interval scaling by a negative factor");
        Interval {
            low: self.low * k,
            reference: self.reference * k,
            high: self.high * k,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn point_is_degenerate() {
        let p = Interval::point(3.5);
        assert!(p.is_point());
        assert!(p.contains(3.5));
        assert_eq!(p.width(), 0.0);
    }

    #[test]
    fn new_rejects_misordered() {
        assert!(Interval::new(2.0, 1.0, 3.0).is_err());
        assert!(Interval::new(1.0, 2.0, 1.5).is_err());
        assert!(Interval::new(1.0, 1.0, 1.0).is_ok());
    }

    #[test]
    fn candidates_envelope() {
        let iv = Interval::from_candidates(5.0, [7.0, 4.0, 5.5]);
        assert_eq!(iv.low, 4.0);
        assert_eq!(iv.reference, 5.0);
        assert_eq!(iv.high, 7.0);
    }

    proptest! {
        // Containment survives addition: any members of the inputs sum to a
        // member of the output.
        #[test]
        fn add_preserves_containment(
            (a_lo, a_ref, a_hi) in ordered_triple(),
            (b_lo, b_ref, b_hi) in ordered_triple(),
            ta in 0.0..=1.0f64,
            tb in 0.0..=1.0f64,
        ) {
            let a = Interval::new(a_lo, a_ref, a_hi).unwrap();
            let b = Interval::new(b_lo, b_ref, b_hi).unwrap();
            let sum = a + b;
            prop_assert!(sum.low <= sum.reference && sum.reference <= sum.high);
            let xa = a.low + ta * (a.high - a.low);
            let xb = b.low + tb * (b.high - b.low);
            prop_assert!(sum.contains(xa + xb));
        }

        #[test]
        fn scale_preserves_ordering(
            (lo, rf, hi) in ordered_triple(),
            k in 0.0..1e6f64,
        ) {
            let iv = Interval::new(lo, rf, hi).unwrap() * k;
            prop_assert!(iv.low <= iv.reference && iv.reference <= iv.high);
        }
    }

    fn ordered_triple() -> impl Strategy<Value = (f64, f64, f64)> {
        (-1e6..1e6f64, 0.0..1.0f64, 0.0..1.0f64).prop_map(|(base, t1, t2)| {
            let span = 1e3;
            let lo = base;
            let hi = base + span * t2.max(t1);
            let rf = lo + (hi - lo) * t1.min(t2).max(0.0);
            (lo, rf.clamp(lo, hi), hi)
        })
    }
}
