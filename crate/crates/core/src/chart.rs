//! The level data `(n, κ)` of an affine chart around the worst point.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dimension `n` and parahoric index `κ`. Valid whenever `n ≥ 3` and
/// `2κ ≤ n`; strong non-specialness is reported separately since some
/// computations make sense for every maximal level.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChartSpec {
    pub n: usize,
    pub kappa: usize,
}

impl ChartSpec {
    pub fn new(n: usize, kappa: usize) -> Result<ChartSpec> {
        if n < 3 {
            return Err(Error::Chart(format!("n = {n} is below 3")));
        }
        if 2 * kappa > n {
            return Err(Error::Chart(format!("κ = {kappa} exceeds ⌊n/2⌋ = {}", n / 2)));
        }
        if 2 * n > 64 {
            return Err(Error::Chart(format!("n = {n} is too large for 64-bit index sets")));
        }
        Ok(ChartSpec { n, kappa })
    }

    /// `m = ⌊n/2⌋`.
    pub fn m(&self) -> usize {
        self.n / 2
    }

    /// `M = ⌊(n+1)/2⌋`.
    pub fn big_m(&self) -> usize {
        self.n.div_ceil(2)
    }

    /// Size of the middle block, `n − 2κ`.
    pub fn s(&self) -> usize {
        self.n - 2 * self.kappa
    }

    /// `κ ∉ {0, m−1, m}` for even `n`, `κ ∉ {0, m}` for odd `n`.
    pub fn is_strongly_non_special(&self) -> bool {
        let m = self.m();
        if self.kappa == 0 || self.kappa == m {
            return false;
        }
        !(self.n % 2 == 0 && self.kappa + 1 == m)
    }

    /// The π-modular level, where the worst point is absent from the model.
    pub fn is_pi_modular(&self) -> bool {
        self.n % 2 == 0 && self.kappa == self.m()
    }

    /// Human-readable description of why a level is not strongly non-special.
    pub fn admissibility_warning(&self) -> Option<String> {
        if self.is_strongly_non_special() {
            return None;
        }
        let why = if self.kappa == 0 {
            "κ = 0 is special"
        } else if self.kappa == self.m() && self.n % 2 == 1 {
            "κ = m is special for odd n"
        } else if self.kappa == self.m() {
            "κ = m is π-modular for even n"
        } else {
            "κ = m − 1 is special for even n"
        };
        Some(format!("(n, κ) = ({}, {}) is not strongly non-special: {why}", self.n, self.kappa))
    }
}

impl fmt::Display for ChartSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.n, self.kappa)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn admissibility() {
        let ok = |n, k| ChartSpec::new(n, k).unwrap().is_strongly_non_special();
        assert!(ok(5, 1));
        assert!(!ok(5, 0));
        assert!(!ok(5, 2));
        assert!(ok(6, 1));
        assert!(!ok(6, 2));
        assert!(!ok(6, 3));
        assert!(ok(7, 2));
        assert!(ok(8, 2));
        assert!(ChartSpec::new(5, 3).is_err());
        assert!(ChartSpec::new(6, 3).unwrap().is_pi_modular());
    }
}
