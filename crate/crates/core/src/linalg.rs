//! Exact row reduction over a [`Field`] for sparse vectors with ordered keys.

use std::collections::BTreeMap;

use crate::coeff::{Coeff, Field};

/// A sparse vector: key to nonzero coefficient.
pub type SparseVec<K> = BTreeMap<K, Coeff>;

fn axpy<K: Ord + Clone>(v: &mut SparseVec<K>, c: &Coeff, w: &SparseVec<K>) {
    for (k, x) in w {
        let t = c.mul(x);
        match v.get_mut(k) {
            Some(y) => {
                *y = y.add(&t);
                if y.is_zero() {
                    v.remove(k);
                }
            }
            None => {
                if !t.is_zero() {
                    v.insert(k.clone(), t);
                }
            }
        }
    }
}

/// Incremental echelon form that remembers how each stored row was built
/// from the inserted vectors, so dependencies can be reported.
#[derive(Clone, Debug)]
pub struct Echelon<K: Ord + Clone> {
    field: Field,
    inserted: usize,
    /// (pivot, row with pivot coefficient 1, combination of inserted vectors).
    rows: Vec<(K, SparseVec<K>, Vec<Coeff>)>,
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new(field: Field) -> Echelon<K> {
        Echelon { field, inserted: 0, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Remainder of `v` after eliminating every stored pivot, with the
    /// combination of inserted vectors that was subtracted.
    fn reduce_tracked(&self, v: &SparseVec<K>) -> (SparseVec<K>, Vec<Coeff>) {
        let mut r = v.clone();
        let mut combo = vec![self.field.zero(); self.inserted];
        for (pivot, row, rc) in &self.rows {
            if let Some(c) = r.get(pivot).cloned() {
                let neg = c.neg();
                axpy(&mut r, &neg, row);
                for (slot, x) in combo.iter_mut().zip(rc) {
                    *slot = slot.add(&neg.mul(x));
                }
            }
        }
        (r, combo)
    }

    pub fn reduce(&self, v: &SparseVec<K>) -> SparseVec<K> {
        self.reduce_tracked(v).0
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Inserts `v`. Returns `None` if it was independent of the earlier
    /// vectors, otherwise coefficients `c` (one per inserted vector, the last
    /// being `1`) with `sum c_i v_i = 0`.
    pub fn insert(&mut self, v: &SparseVec<K>) -> Option<Vec<Coeff>> {
        let (r, mut combo) = self.reduce_tracked(v);
        combo.push(self.field.one());
        self.inserted += 1;
        for (_, _, rc) in self.rows.iter_mut() {
            rc.push(self.field.zero());
        }
        match r.iter().next() {
            None => Some(combo),
            Some((pivot, lead)) => {
                let inv = lead.inv();
                let pivot = pivot.clone();
                let row: SparseVec<K> = r.iter().map(|(k, x)| (k.clone(), x.mul(&inv))).collect();
                let rc = combo.iter().map(|x| x.mul(&inv)).collect();
                self.rows.push((pivot, row, rc));
                None
            }
        }
    }
}

/// Rank of a family of sparse vectors.
pub fn rank<K: Ord + Clone>(field: Field, vecs: &[SparseVec<K>]) -> usize {
    let mut e = Echelon::new(field);
    for v in vecs {
        e.insert(v);
    }
    e.rank()
}

/// A nontrivial relation `sum c_i v_i = 0`, if the family is dependent.
pub fn dependency<K: Ord + Clone>(field: Field, vecs: &[SparseVec<K>]) -> Option<Vec<Coeff>> {
    let mut e = Echelon::new(field);
    for v in vecs {
        if let Some(mut c) = e.insert(v) {
            c.resize(vecs.len(), field.zero());
            return Some(c);
        }
    }
    None
}

/// Rank of a dense matrix given by rows.
pub fn dense_rank(field: Field, rows: &[Vec<Coeff>]) -> usize {
    let sparse: Vec<SparseVec<usize>> = rows
        .iter()
        .map(|r| r.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect())
        .collect();
    rank(field, &sparse)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(field: Field, xs: &[i64]) -> SparseVec<usize> {
        xs.iter().enumerate().filter(|(_, x)| **x != 0).map(|(k, x)| (k, field.from_i64(*x))).collect()
    }

    #[test]
    fn dependency_is_a_relation() {
        let q = Field::Rationals;
        let vs = vec![v(q, &[1, 2, 0]), v(q, &[0, 1, 1]), v(q, &[2, 5, 1])];
        let c = dependency(q, &vs).unwrap();
        let mut total: SparseVec<usize> = BTreeMap::new();
        for (ci, vi) in c.iter().zip(&vs) {
            axpy(&mut total, ci, vi);
        }
        assert!(total.is_empty());
        assert_eq!(rank(q, &vs), 2);
    }

    #[test]
    fn dense_rank_over_prime_field() {
        let f = Field::prime(3).unwrap();
        let rows = vec![vec![f.from_i64(1), f.from_i64(1)], vec![f.from_i64(4), f.from_i64(1)]];
        assert_eq!(dense_rank(f, &rows), 1);
        assert_eq!(dense_rank(Field::Rationals, &[vec![Field::Rationals.from_i64(1)], vec![Field::Rationals.from_i64(4)]]), 1);
    }
}
