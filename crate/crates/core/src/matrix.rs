//! Dense matrices of polynomials.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::coeff::Coeff;
use crate::poly::Poly;
use crate::ring::Ring;
use crate::var::{Family, Var};

/// A `rows × cols` matrix of polynomials over one ring, stored row-major.
/// Zero-extent matrices are allowed and contribute no entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: Arc<Ring>,
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn from_fn(ring: &Arc<Ring>, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Poly) -> PolyMatrix {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        PolyMatrix { ring: ring.clone(), rows, cols, entries }
    }

    pub fn zeros(ring: &Arc<Ring>, rows: usize, cols: usize) -> PolyMatrix {
        PolyMatrix::from_fn(ring, rows, cols, |_, _| Poly::zero(ring))
    }

    /// `c · I_n`.
    pub fn scalar(ring: &Arc<Ring>, n: usize, c: &Poly) -> PolyMatrix {
        PolyMatrix::from_fn(ring, n, n, |i, j| if i == j { c.clone() } else { Poly::zero(ring) })
    }

    pub fn identity(ring: &Arc<Ring>, n: usize) -> PolyMatrix {
        PolyMatrix::scalar(ring, n, &Poly::from_i64(ring, 1))
    }

    /// The antidiagonal unit matrix `H_l`.
    pub fn antidiagonal(ring: &Arc<Ring>, l: usize) -> PolyMatrix {
        PolyMatrix::from_fn(ring, l, l, |i, j| Poly::from_i64(ring, (i + j + 1 == l) as i64))
    }

    /// `J_{2l} = [[0, H_l], [−H_l, 0]]`.
    pub fn symplectic(ring: &Arc<Ring>, l: usize) -> PolyMatrix {
        let h = PolyMatrix::antidiagonal(ring, l);
        let z = PolyMatrix::zeros(ring, l, l);
        PolyMatrix::from_blocks(&[vec![z.clone(), h.clone()], vec![h.neg(), z]])
    }

    /// Matrix of ring variables `family_{i+row_offset}_{j+col_offset}` (1-based).
    pub fn variables(
        ring: &Arc<Ring>,
        family: Family,
        rows: usize,
        cols: usize,
        row_offset: usize,
        col_offset: usize,
    ) -> PolyMatrix {
        PolyMatrix::from_fn(ring, rows, cols, |i, j| {
            Poly::var(ring, Var::entry(family, (i + 1 + row_offset) as u16, (j + 1 + col_offset) as u16))
        })
    }

    /// Integer matrix lifted into the ring.
    pub fn from_ints(ring: &Arc<Ring>, rows: &[Vec<i64>]) -> PolyMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        PolyMatrix::from_fn(ring, r, c, |i, j| Poly::from_i64(ring, rows[i][j]))
    }

    /// Assembles a block matrix. Blocks in one block-row share a row count and
    /// blocks in one block-column share a column count.
    pub fn from_blocks(blocks: &[Vec<PolyMatrix>]) -> PolyMatrix {
        let ring = blocks[0][0].ring.clone();
        let heights: Vec<usize> = blocks.iter().map(|r| r[0].rows).collect();
        let widths: Vec<usize> = blocks[0].iter().map(|b| b.cols).collect();
        for (bi, row) in blocks.iter().enumerate() {
            assert_eq!(row.len(), widths.len(), "ragged block row");
            for (bj, b) in row.iter().enumerate() {
                assert_eq!((b.rows, b.cols), (heights[bi], widths[bj]), "block size mismatch");
            }
        }
        let rows = heights.iter().sum();
        let cols = widths.iter().sum();
        let mut m = PolyMatrix::zeros(&ring, rows, cols);
        let mut r0 = 0;
        for (bi, row) in blocks.iter().enumerate() {
            let mut c0 = 0;
            for (bj, b) in row.iter().enumerate() {
                for i in 0..b.rows {
                    for j in 0..b.cols {
                        m.set(r0 + i, c0 + j, b.get(i, j).clone());
                    }
                }
                c0 += widths[bj];
            }
            r0 += heights[bi];
        }
        m
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Poly) {
        self.entries[i * self.cols + j] = p;
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> &[Poly] {
        &self.entries
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> PolyMatrix {
        PolyMatrix::from_fn(&self.ring, rows, cols, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    /// `[self | other]`.
    pub fn hconcat(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.rows, other.rows);
        PolyMatrix::from_fn(&self.ring, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols { self.get(i, j).clone() } else { other.get(i, j - self.cols).clone() }
        })
    }

    /// `[self; other]`.
    pub fn vconcat(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, other.cols);
        PolyMatrix::from_fn(&self.ring, self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows { self.get(i, j).clone() } else { other.get(i - self.rows, j).clone() }
        })
    }

    pub fn transpose(&self) -> PolyMatrix {
        PolyMatrix::from_fn(&self.ring, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// `M^ad = H Mᵗ H`. For an `r × c` matrix this is `c × r`, and its
    /// `(i, j)` entry is `M_{r−1−j, c−1−i}` (0-based).
    pub fn adjoint(&self) -> PolyMatrix {
        let (r, c) = (self.rows, self.cols);
        PolyMatrix::from_fn(&self.ring, c, r, |i, j| self.get(r - 1 - j, c - 1 - i).clone())
    }

    pub fn add(&self, o: &PolyMatrix) -> PolyMatrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "shape mismatch");
        PolyMatrix::from_fn(&self.ring, self.rows, self.cols, |i, j| self.get(i, j) + o.get(i, j))
    }

    pub fn sub(&self, o: &PolyMatrix) -> PolyMatrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "shape mismatch");
        PolyMatrix::from_fn(&self.ring, self.rows, self.cols, |i, j| self.get(i, j) - o.get(i, j))
    }

    pub fn neg(&self) -> PolyMatrix {
        PolyMatrix::from_fn(&self.ring, self.rows, self.cols, |i, j| -self.get(i, j))
    }

    pub fn scale(&self, c: &Coeff) -> PolyMatrix {
        PolyMatrix::from_fn(&self.ring, self.rows, self.cols, |i, j| self.get(i, j).scale(c))
    }

    pub fn mul_poly(&self, p: &Poly) -> PolyMatrix {
        PolyMatrix::from_fn(&self.ring, self.rows, self.cols, |i, j| self.get(i, j) * p)
    }

    pub fn mul(&self, o: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, o.rows, "shape mismatch");
        PolyMatrix::from_fn(&self.ring, self.rows, o.cols, |i, j| {
            let mut terms = Vec::new();
            for k in 0..self.cols {
                let (a, b) = (self.get(i, k), o.get(k, j));
                if !a.is_zero() && !b.is_zero() {
                    terms.extend((a * b).into_terms());
                }
            }
            Poly::from_terms(&self.ring, terms)
        })
    }

    pub fn trace(&self) -> Poly {
        assert_eq!(self.rows, self.cols, "trace of a non-square matrix");
        let terms = (0..self.rows).flat_map(|i| self.get(i, i).terms().to_vec()).collect();
        Poly::from_terms(&self.ring, terms)
    }

    /// Determinant of the submatrix on the given rows and columns.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Poly {
        assert_eq!(rows.len(), cols.len());
        let mut memo = HashMap::new();
        let mask: u64 = cols.iter().fold(0, |m, &c| m | (1 << c));
        self.laplace(rows, 0, mask, &mut memo)
    }

    /// Laplace expansion along rows; `mask` holds the columns still available.
    fn laplace(&self, rows: &[usize], depth: usize, mask: u64, memo: &mut HashMap<u64, Poly>) -> Poly {
        if depth == rows.len() {
            return Poly::from_i64(&self.ring, 1);
        }
        if let Some(p) = memo.get(&mask) {
            return p.clone();
        }
        let mut terms = Vec::new();
        let mut sign = 1i64;
        for c in 0..self.cols {
            if mask & (1 << c) == 0 {
                continue;
            }
            let a = self.get(rows[depth], c);
            if !a.is_zero() {
                let sub = self.laplace(rows, depth + 1, mask & !(1 << c), memo);
                if !sub.is_zero() {
                    let t = a * &sub;
                    let t = if sign < 0 { -t } else { t };
                    terms.extend(t.into_terms());
                }
            }
            sign = -sign;
        }
        let p = Poly::from_terms(&self.ring, terms);
        memo.insert(mask, p.clone());
        p
    }

    pub fn determinant(&self) -> Poly {
        assert_eq!(self.rows, self.cols);
        let idx: Vec<usize> = (0..self.rows).collect();
        self.minor(&idx, &idx)
    }

    /// All `k × k` minors, rows and columns in lexicographic subset order.
    pub fn minors(&self, k: usize) -> Vec<Poly> {
        let rs = subsets(self.rows, k);
        let cs = subsets(self.cols, k);
        let mut out = Vec::new();
        for r in &rs {
            for c in &cs {
                out.push(self.minor(r, c));
            }
        }
        out
    }

    /// Coefficients `[c_0, …, c_n]` of `det(T·I − M)`, with
    /// `c_{n−k} = (−1)^k · (sum of principal k-minors)`.
    pub fn char_poly_coeffs(&self) -> Vec<Poly> {
        let n = self.rows;
        assert_eq!(n, self.cols);
        let mut out = vec![Poly::zero(&self.ring); n + 1];
        out[n] = Poly::from_i64(&self.ring, 1);
        for k in 1..=n {
            let mut terms = Vec::new();
            for s in subsets(n, k) {
                terms.extend(self.minor(&s, &s).into_terms());
            }
            let e = Poly::from_terms(&self.ring, terms);
            out[n - k] = if k % 2 == 1 { -e } else { e };
        }
        out
    }
}

/// All `k`-element subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::MonomialOrder;

    fn ring() -> Arc<Ring> {
        let mut vars = Vec::new();
        for i in 1..=3 {
            for j in 1..=3 {
                vars.push(Var::x(i, j));
            }
        }
        Ring::rational(vars, MonomialOrder::GrevLex)
    }

    #[test]
    fn symplectic_squares_to_minus_identity() {
        let r = ring();
        for l in 1..=3 {
            let j = PolyMatrix::symplectic(&r, l);
            assert_eq!(j.mul(&j), PolyMatrix::identity(&r, 2 * l).neg());
        }
    }

    #[test]
    fn adjoint_matches_definition() {
        let r = ring();
        let x = PolyMatrix::variables(&r, Family::X, 3, 3, 0, 0);
        let h = PolyMatrix::antidiagonal(&r, 3);
        assert_eq!(x.adjoint(), h.mul(&x.transpose()).mul(&h));
        assert_eq!(x.adjoint().adjoint(), x);
        let rect = x.block(0, 0, 2, 3);
        let (h2, h3) = (PolyMatrix::antidiagonal(&r, 2), PolyMatrix::antidiagonal(&r, 3));
        assert_eq!(rect.adjoint(), h3.mul(&rect.transpose()).mul(&h2));
    }

    #[test]
    fn determinant_and_char_poly() {
        let r = ring();
        let x = PolyMatrix::variables(&r, Family::X, 3, 3, 0, 0);
        assert_eq!(x.determinant().len(), 6);
        assert_eq!(x.minors(2).len(), 9);
        let cp = x.char_poly_coeffs();
        assert_eq!(cp[2], -x.trace());
        assert_eq!(cp[0], -x.determinant());
        assert_eq!(subsets(4, 2).len(), 6);
    }
}
