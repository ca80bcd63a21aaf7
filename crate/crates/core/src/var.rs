//! Structured variable identifiers.
//!
//! A variable is a family tag plus up to two 1-based indices, rendered as
//! `x_2_3`, `b_1_4`, `pi`, `T_2`, ... Structured identifiers keep entries of
//! different matrices apart even when the matrices share a letter.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::PolyError;

const NAMES: [&str; 16] = [
    "x", "a", "b", "c", "d", "y", "z", "w", "t", "u", "v", "s", "pi", "T", "S", "e",
];

/// Family tag of a variable. Only a fixed alphabet is accepted so that
/// parsing and printing round-trip.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Family(u8);

impl Family {
    pub const X: Family = Family(0);
    pub const A: Family = Family(1);
    pub const B: Family = Family(2);
    pub const Y: Family = Family(5);
    pub const Z: Family = Family(6);
    pub const W: Family = Family(7);
    /// Auxiliary elimination variable.
    pub const AUX: Family = Family(8);
    /// Inverse of a localized variable.
    pub const INV: Family = Family(9);
    pub const PI: Family = Family(12);
    pub const CHART_T: Family = Family(13);
    pub const CHART_S: Family = Family(14);

    pub fn name(self) -> &'static str {
        NAMES[self.0 as usize]
    }

    pub fn from_name(s: &str) -> Option<Family> {
        NAMES.iter().position(|n| *n == s).map(|i| Family(i as u8))
    }
}

/// A polynomial variable. An index of 0 means "absent".
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Var {
    pub family: Family,
    pub row: u16,
    pub col: u16,
}

impl Var {
    pub const fn scalar(family: Family) -> Var {
        Var { family, row: 0, col: 0 }
    }

    pub const fn vector(family: Family, i: u16) -> Var {
        Var { family, row: i, col: 0 }
    }

    pub const fn entry(family: Family, i: u16, j: u16) -> Var {
        Var { family, row: i, col: j }
    }

    pub fn x(i: usize, j: usize) -> Var {
        Var::entry(Family::X, i as u16, j as u16)
    }

    pub fn a(i: usize, j: usize) -> Var {
        Var::entry(Family::A, i as u16, j as u16)
    }

    pub fn b(i: usize, j: usize) -> Var {
        Var::entry(Family::B, i as u16, j as u16)
    }

    pub fn pi() -> Var {
        Var::scalar(Family::PI)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.family.name())?;
        if self.row > 0 {
            write!(f, "_{}", self.row)?;
        }
        if self.col > 0 {
            write!(f, "_{}", self.col)?;
        }
        Ok(())
    }
}

impl FromStr for Var {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Var, PolyError> {
        let bad = || PolyError::UnknownVariable(s.to_string());
        let mut parts = s.split('_');
        let family = Family::from_name(parts.next().ok_or_else(bad)?).ok_or_else(bad)?;
        let mut idx = [0u16; 2];
        for slot in idx.iter_mut() {
            if let Some(p) = parts.next() {
                let v: u16 = p.parse().map_err(|_| bad())?;
                if v == 0 {
                    return Err(bad());
                }
                *slot = v;
            }
        }
        if parts.next().is_some() {
            return Err(bad());
        }
        Ok(Var { family, row: idx[0], col: idx[1] })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in ["x_1_2", "b_3_1", "pi", "T_4", "t", "a_10_2"] {
            let v: Var = s.parse().unwrap();
            assert_eq!(v.to_string(), s);
        }
        assert!("q_1".parse::<Var>().is_err());
        assert!("x_0".parse::<Var>().is_err());
        assert!("x_1_2_3".parse::<Var>().is_err());
    }
}
