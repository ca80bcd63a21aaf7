//! `n`-element subsets of `{1, …, 2n}` and their sign, type and weight data.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IndexError {
    #[error("index set must have {expected} elements, got {got}")]
    WrongSize { expected: usize, got: usize },
    #[error("element {0} outside 1..=2n")]
    OutOfRange(usize),
    #[error("universe too large: 2n = {0} exceeds 64")]
    TooLarge(usize),
    #[error("set {0} is not of type (n-1,1)")]
    NotNearlyFull(String),
}

/// An `n`-element subset of `{1, …, 2n}`, stored as a bit set (bit `k−1` for
/// element `k`). Ordered lexicographically by increasing member lists.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct IndexSet {
    bits: u64,
    n: u8,
}

/// `i∨ = n + 1 − i`.
pub fn vee(n: usize, i: usize) -> usize {
    n + 1 - i
}

/// `i* = 2n + 1 − i`.
pub fn star(n: usize, i: usize) -> usize {
    2 * n + 1 - i
}

impl IndexSet {
    pub fn new(n: usize, members: impl IntoIterator<Item = usize>) -> Result<IndexSet, IndexError> {
        if 2 * n > 64 {
            return Err(IndexError::TooLarge(2 * n));
        }
        let mut bits = 0u64;
        for k in members {
            if k == 0 || k > 2 * n {
                return Err(IndexError::OutOfRange(k));
            }
            bits |= 1 << (k - 1);
        }
        let got = bits.count_ones() as usize;
        if got != n {
            return Err(IndexError::WrongSize { expected: n, got });
        }
        Ok(IndexSet { bits, n: n as u8 })
    }

    pub(crate) fn from_bits(n: usize, bits: u64) -> IndexSet {
        debug_assert_eq!(bits.count_ones() as usize, n);
        IndexSet { bits, n: n as u8 }
    }

    /// `{n+1, …, 2n}`.
    pub fn top(n: usize) -> IndexSet {
        IndexSet::from_bits(n, ((1u64 << n) - 1) << n)
    }

    /// `{1, …, n}`.
    pub fn bottom(n: usize) -> IndexSet {
        IndexSet::from_bits(n, (1u64 << n) - 1)
    }

    /// `S(i, j) = {1, …, ĵ, …, n, n+i}`, the type-`(n−1,1)` set.
    pub fn nearly_full(n: usize, i: usize, j: usize) -> IndexSet {
        assert!((1..=n).contains(&i) && (1..=n).contains(&j));
        let bits = (IndexSet::bottom(n).bits & !(1 << (j - 1))) | (1 << (n + i - 1));
        IndexSet::from_bits(n, bits)
    }

    /// `[i, \widehat{n+j}] = {i, n+1, …, \widehat{n+j}, …, 2n}`.
    pub fn bracket(n: usize, i: usize, j: usize) -> IndexSet {
        assert!((1..=n).contains(&i) && (1..=n).contains(&j));
        let bits = (IndexSet::top(n).bits & !(1 << (n + j - 1))) | (1 << (i - 1));
        IndexSet::from_bits(n, bits)
    }

    /// All `n`-subsets of `{1, …, 2n}` in increasing order.
    pub fn all(n: usize) -> Vec<IndexSet> {
        let mut out: Vec<IndexSet> = crate::matrix::subsets(2 * n, n)
            .into_iter()
            .map(|s| IndexSet::new(n, s.into_iter().map(|k| k + 1)).expect("valid subset"))
            .collect();
        out.sort();
        out
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn contains(&self, k: usize) -> bool {
        k >= 1 && k <= 2 * self.n() && self.bits & (1 << (k - 1)) != 0
    }

    pub fn members(&self) -> Vec<usize> {
        (1..=2 * self.n()).filter(|&k| self.contains(k)).collect()
    }

    /// `ΣS`.
    pub fn sum(&self) -> usize {
        self.members().iter().sum()
    }

    /// `S* = {i* : i ∈ S}`.
    pub fn star(&self) -> IndexSet {
        let n = self.n();
        let bits = self.members().iter().fold(0u64, |b, &k| b | 1 << (star(n, k) - 1));
        IndexSet::from_bits(n, bits)
    }

    /// `S⊥ = {1, …, 2n} ∖ S*`.
    pub fn perp(&self) -> IndexSet {
        let n = self.n();
        let full = if 2 * n == 64 { u64::MAX } else { (1u64 << (2 * n)) - 1 };
        IndexSet::from_bits(n, full & !self.star().bits)
    }

    /// Sign of `σ_S` from the permutation sending `1..n` onto `S` and
    /// `n+1..2n` onto the complement, both increasingly: the parity of the
    /// number of pairs `s ∈ S`, `c ∉ S` with `s > c`.
    pub fn sign_by_parity(&self) -> i8 {
        let n = self.n();
        let mut inversions = 0usize;
        let mut outside_below = 0usize;
        for k in 1..=2 * n {
            if self.contains(k) {
                inversions += outside_below;
            } else {
                outside_below += 1;
            }
        }
        if inversions % 2 == 0 { 1 } else { -1 }
    }

    /// `(−1)^{ΣS + ⌈n/2⌉}`.
    pub fn sign_by_formula(&self) -> i8 {
        let e = self.sum() + self.n().div_ceil(2);
        if e % 2 == 0 { 1 } else { -1 }
    }

    /// `sgn(σ_S)`, computed both ways.
    ///
    /// # Panics
    /// If the two computations disagree, which would be an implementation bug.
    pub fn sign(&self) -> i8 {
        let (a, b) = (self.sign_by_parity(), self.sign_by_formula());
        assert_eq!(a, b, "sign mismatch for {self}");
        a
    }

    /// `(r, s)` with `r = #(S ∩ {1..n})`.
    pub fn type_rs(&self) -> (usize, usize) {
        let n = self.n();
        let r = (self.bits & ((1u64 << n) - 1)).count_ones() as usize;
        (r, n - r)
    }

    /// Entry `i` is `#(S ∩ {i, n+i})`.
    pub fn weight(&self) -> Vec<u8> {
        let n = self.n();
        (1..=n).map(|i| self.contains(i) as u8 + self.contains(n + i) as u8).collect()
    }

    /// `(i, j)` with `S = S(i, j)`, for sets of type `(n−1, 1)`.
    pub fn nearly_full_params(&self) -> Option<(usize, usize)> {
        if self.type_rs() != (self.n() - 1, 1) {
            return None;
        }
        let n = self.n();
        let i = (n + 1..=2 * n).find(|&k| self.contains(k))? - n;
        let j = (1..=n).find(|&k| !self.contains(k))?;
        Some((i, j))
    }

    /// `i_S ≤ i_{S⊥}` for sets of type `(n−1, 1)`.
    pub fn is_balanced(&self) -> Result<bool, IndexError> {
        let (i, _) = self.nearly_full_params().ok_or_else(|| IndexError::NotNearlyFull(self.to_string()))?;
        let (ip, _) = self.perp().nearly_full_params().expect("perp preserves type");
        Ok(i <= ip)
    }

    /// Balanced type-`(n−1, 1)` sets, in increasing order.
    pub fn balanced(n: usize) -> Vec<IndexSet> {
        let mut out = Vec::new();
        for i in 1..=n {
            for j in 1..=n {
                let s = IndexSet::nearly_full(n, i, j);
                if s.is_balanced().expect("nearly full") {
                    out.push(s);
                }
            }
        }
        out.sort();
        out
    }
}

impl Ord for IndexSet {
    fn cmp(&self, other: &IndexSet) -> Ordering {
        // Lexicographic on increasing members: the set whose lowest differing
        // element is present (and absent in the other) comes first.
        self.n.cmp(&other.n).then_with(|| {
            let diff = self.bits ^ other.bits;
            if diff == 0 {
                Ordering::Equal
            } else if self.bits & (diff & diff.wrapping_neg()) != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for IndexSet {
    fn partial_cmp(&self, other: &IndexSet) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m: Vec<String> = self.members().iter().map(|k| k.to_string()).collect();
        write!(f, "{{{}}}", m.join(","))
    }
}

impl Serialize for IndexSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.members())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_and_perp_small() {
        let s = IndexSet::new(3, [1, 2, 4]).unwrap();
        assert_eq!(s.star(), IndexSet::new(3, [3, 5, 6]).unwrap());
        assert_eq!(s.perp(), s);
        assert_eq!(IndexSet::bottom(4).perp(), IndexSet::bottom(4));
    }

    #[test]
    fn nearly_full_perp_swaps_parameters() {
        let n = 7;
        for i in 1..=n {
            for j in 1..=n {
                let s = IndexSet::nearly_full(n, i, j);
                assert_eq!(s.perp(), IndexSet::nearly_full(n, vee(n, j), vee(n, i)));
                let expected = if (n + i + j) % 2 == 0 { 1 } else { -1 };
                assert_eq!(s.sign(), expected);
            }
        }
    }

    #[test]
    fn weights_and_types() {
        let n = 5;
        assert_eq!(IndexSet::top(n).type_rs(), (0, n));
        assert_eq!(IndexSet::top(n).weight(), vec![1; n]);
        let w = IndexSet::nearly_full(n, 2, 4).weight();
        assert_eq!(w, vec![1, 2, 1, 0, 1]);
        assert!(IndexSet::top(n).is_balanced().is_err());
    }

    #[test]
    fn ordering_is_lexicographic() {
        let a = IndexSet::new(3, [1, 2, 6]).unwrap();
        let b = IndexSet::new(3, [1, 3, 4]).unwrap();
        assert!(a < b);
        let all = IndexSet::all(3);
        assert_eq!(all.len(), 20);
        assert_eq!(all[0], IndexSet::bottom(3));
        assert_eq!(all[19], IndexSet::top(3));
    }

    #[test]
    fn rejects_bad_sets() {
        assert_eq!(IndexSet::new(3, [1, 2]), Err(IndexError::WrongSize { expected: 3, got: 2 }));
        assert_eq!(IndexSet::new(3, [1, 2, 7]), Err(IndexError::OutOfRange(7)));
    }
}
