//! Validated two-sided bounds for scalar quantities.

use crate::{Error, Result};

/// A pair of real bounds guaranteed (mathematically) to bracket a value.
///
/// Bounds are evaluated in double precision without directed rounding; if
/// float noise inverts the ordering by at most 4 ulps of the larger
/// magnitude, construction collapses the pair to its midpoint. A larger
/// inversion is a hard [`Error::Collapse`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Enclosure {
    lo: f64,
    hi: f64,
}

impl Enclosure {
    pub fn new(lo: f64, hi: f64) -> Result<Enclosure> {
        if lo <= hi {
            return Ok(Enclosure { lo, hi });
        }
        let scale = lo.abs().max(hi.abs()).max(f64::MIN_POSITIVE);
        if lo - hi <= 4.0 * f64::EPSILON * scale {
            let mid = 0.5 * (lo + hi);
            Ok(Enclosure { lo: mid, hi: mid })
        } else {
            Err(Error::Collapse { lo, hi })
        }
    }

    /// Zero-width enclosure around an exactly known value.
    pub fn exact(value: f64) -> Enclosure {
        Enclosure {
            lo: value,
            hi: value,
        }
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn contains(&self, value: f64) -> bool {
        self.lo <= value && value <= self.hi
    }

    pub fn contains_with_slack(&self, value: f64, slack: f64) -> bool {
        self.lo - slack <= value && value <= self.hi + slack
    }

    /// Intersection of two enclosures of the same quantity: the tighter
    /// pointwise bounds. Fails only if rounding makes them disjoint.
    pub fn intersect(&self, other: &Enclosure) -> Result<Enclosure> {
        Enclosure::new(self.lo.max(other.lo), self.hi.min(other.hi))
    }

    /// Affine image `scale * E + offset` with `scale > 0` (order preserved).
    pub fn scale_shift(&self, scale: f64, offset: f64) -> Enclosure {
        debug_assert!(scale >= 0.0);
        Enclosure {
            lo: scale * self.lo + offset,
            hi: scale * self.hi + offset,
        }
    }

    /// Relative uncertainty `(hi - lo) / |hi + lo|`; returns infinity when
    /// the denominator is degenerate, and 0 for a zero-width pair.
    pub fn relative_uncertainty(&self) -> f64 {
        let num = self.hi - self.lo;
        if num == 0.0 {
            return 0.0;
        }
        let den = (self.hi + self.lo).abs();
        if den < 1e-300 {
            f64::INFINITY
        } else {
            num / den
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordered_pair_accepted() {
        let e = Enclosure::new(1.0, 2.0).unwrap();
        assert_eq!(e.lo(), 1.0);
        assert_eq!(e.hi(), 2.0);
        assert_eq!(e.width(), 1.0);
        assert!(e.contains(1.5));
        assert!(!e.contains(2.5));
    }

    #[test]
    fn tiny_inversion_collapses_to_midpoint() {
        let hi = 1.0;
        let lo = 1.0 + 2.0 * f64::EPSILON;
        let e = Enclosure::new(lo, hi).unwrap();
        assert_eq!(e.lo(), e.hi());
    }

    #[test]
    fn large_inversion_is_an_error() {
        assert!(matches!(
            Enclosure::new(2.0, 1.0),
            Err(Error::Collapse { .. })
        ));
    }

    #[test]
    fn relative_uncertainty_degenerate_denominator() {
        let e = Enclosure::new(-1.0, 1.0).unwrap();
        assert!(e.relative_uncertainty().is_infinite());
        assert_eq!(Enclosure::exact(0.0).relative_uncertainty(), 0.0);
    }
}
