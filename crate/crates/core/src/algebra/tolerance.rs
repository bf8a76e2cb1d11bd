use crate::error::{Error, Result};

/// Absolute comparison threshold.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Tolerance(f64);

impl Tolerance {
    /// Default for exact constructions.
    pub const DEFAULT: Tolerance = Tolerance(1e-9);
    /// Default for numerically solved data.
    pub const SOLVER: Tolerance = Tolerance(1e-7);
    /// Norm drift allowed per state operation.
    pub const NORM: Tolerance = Tolerance(1e-12);

    pub fn new(eps: f64) -> Result<Self> {
        if eps > 0.0 && eps < 1.0 {
            Ok(Self(eps))
        } else {
            Err(Error::BadTolerance(eps))
        }
    }

    pub fn eps(self) -> f64 {
        self.0
    }

    pub fn accepts(self, deviation: f64) -> bool {
        deviation <= self.0
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self::DEFAULT
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_checked() {
        assert!(Tolerance::new(0.0).is_err());
        assert!(Tolerance::new(1.0).is_err());
        assert_eq!(Tolerance::new(1e-9).unwrap(), Tolerance::DEFAULT);
    }
}
