//! Builders for the ideals of the affine chart at the worst point.
//!
//! The chart matrix `X` is `n × n` with rows and columns split as
//! `(2κ, n − 2κ)`; the corner `X_1` splits further into `κ × κ` blocks:
//!
//! ```text
//!       | A B | L |
//!   X = | C D | M |
//!       |-----+---|
//!       | E F | X4|
//! ```
//!
//! Entries are the variables `x_i_j`. Every generator records which relation
//! family produced it.

pub mod components;
pub mod integral;
pub mod select;
pub mod special;
pub mod structure;

use std::sync::Arc;

use crate::chart::ChartSpec;
use crate::coeff::Field;
use crate::groebner::Ideal;
use crate::matrix::PolyMatrix;
use crate::poly::Poly;
use crate::ring::{MonomialOrder, OrderKind, Ring};
use crate::var::{Family, Var};

/// A generator together with the relation family it comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub source: String,
    pub poly: Poly,
}

/// A named generator list over a fixed ring.
#[derive(Clone, Debug)]
pub struct NamedIdeal {
    pub name: String,
    pub ring: Arc<Ring>,
    pub gens: Vec<Generator>,
}

impl NamedIdeal {
    pub fn new(name: &str, ring: &Arc<Ring>) -> NamedIdeal {
        NamedIdeal { name: name.to_string(), ring: ring.clone(), gens: Vec::new() }
    }

    /// Appends the nonzero entries of `m` not already present.
    pub fn push_matrix(&mut self, source: &str, m: &PolyMatrix) -> &mut Self {
        for p in m.entries() {
            self.push(source, p.clone());
        }
        self
    }

    pub fn push(&mut self, source: &str, p: Poly) -> &mut Self {
        if !p.is_zero() && !self.gens.iter().any(|g| g.poly == p) {
            self.gens.push(Generator { source: source.to_string(), poly: p });
        }
        self
    }

    pub fn extend(&mut self, source: &str, ps: impl IntoIterator<Item = Poly>) -> &mut Self {
        for p in ps {
            self.push(source, p);
        }
        self
    }

    pub fn polys(&self) -> Vec<Poly> {
        self.gens.iter().map(|g| g.poly.clone()).collect()
    }

    pub fn ideal(&self) -> Ideal {
        Ideal::new(&self.ring, self.polys())
    }

    /// Number of generators per source, in first-appearance order.
    pub fn source_counts(&self) -> Vec<(String, usize)> {
        let mut out: Vec<(String, usize)> = Vec::new();
        for g in &self.gens {
            match out.iter_mut().find(|(s, _)| *s == g.source) {
                Some((_, c)) => *c += 1,
                None => out.push((g.source.clone(), 1)),
            }
        }
        out
    }
}

/// The chart variables in block order: entries of `X_1`, `X_2`, `X_3`, `X_4`
/// (row-major within each block).
pub fn chart_variables(chart: &ChartSpec) -> Vec<Var> {
    let (n, t) = (chart.n, 2 * chart.kappa);
    let mut out = Vec::with_capacity(n * n);
    let blocks = [(0..t, 0..t), (0..t, t..n), (t..n, 0..t), (t..n, t..n)];
    for (rows, cols) in blocks {
        for i in rows.clone() {
            for j in cols.clone() {
                out.push(Var::x(i + 1, j + 1));
            }
        }
    }
    out
}

/// Number of chart variables in `X_1` and `X_2` together.
pub fn upper_block_size(chart: &ChartSpec) -> usize {
    2 * chart.kappa * chart.n
}

/// `k[X]` under grevlex.
pub fn special_ring(chart: &ChartSpec, field: Field) -> Arc<Ring> {
    Ring::new(chart_variables(chart), MonomialOrder::GrevLex, field).expect("valid ring")
}

/// `k[X, π]` under the given order (π is the last, smallest variable).
pub fn integral_ring(chart: &ChartSpec, order: MonomialOrder, field: Field) -> Arc<Ring> {
    let mut vars = chart_variables(chart);
    vars.push(Var::pi());
    Ring::new(vars, order, field).expect("valid ring")
}

/// `k[X, π]` with `X_1, X_2` eliminated first.
pub fn integral_elimination_ring(chart: &ChartSpec, field: Field) -> Arc<Ring> {
    let k = upper_block_size(chart);
    let rest = chart.n * chart.n - k + 1;
    integral_ring(chart, MonomialOrder::elimination(k, rest, OrderKind::GrevLex), field)
}

/// The blocks of the chart matrix and the structure matrices `H`, `J`.
#[derive(Clone, Debug)]
pub struct ChartMatrices {
    pub chart: ChartSpec,
    pub ring: Arc<Ring>,
    pub x: PolyMatrix,
    pub x1: PolyMatrix,
    pub x2: PolyMatrix,
    pub x3: PolyMatrix,
    pub x4: PolyMatrix,
    pub a: PolyMatrix,
    pub b: PolyMatrix,
    pub c: PolyMatrix,
    pub d: PolyMatrix,
    pub e: PolyMatrix,
    pub f: PolyMatrix,
    pub l: PolyMatrix,
    pub m: PolyMatrix,
    /// `H_{n−2κ}`.
    pub h: PolyMatrix,
    /// `J_{2κ}`.
    pub j: PolyMatrix,
}

impl ChartMatrices {
    /// `ring` must contain every `x_i_j` with `1 ≤ i, j ≤ n`.
    pub fn new(chart: &ChartSpec, ring: &Arc<Ring>) -> ChartMatrices {
        let (n, k, s) = (chart.n, chart.kappa, chart.s());
        let x = PolyMatrix::variables(ring, Family::X, n, n, 0, 0);
        let t = 2 * k;
        ChartMatrices {
            chart: *chart,
            ring: ring.clone(),
            x1: x.block(0, 0, t, t),
            x2: x.block(0, t, t, s),
            x3: x.block(t, 0, s, t),
            x4: x.block(t, t, s, s),
            a: x.block(0, 0, k, k),
            b: x.block(0, k, k, k),
            c: x.block(k, 0, k, k),
            d: x.block(k, k, k, k),
            l: x.block(0, t, k, s),
            m: x.block(k, t, k, s),
            e: x.block(t, 0, s, k),
            f: x.block(t, k, s, k),
            h: PolyMatrix::antidiagonal(ring, s),
            j: PolyMatrix::symplectic(ring, k),
            x,
        }
    }

    pub fn zero(&self, rows: usize, cols: usize) -> PolyMatrix {
        PolyMatrix::zeros(&self.ring, rows, cols)
    }

    /// `[X_3 | X_4]`, the bottom `n − 2κ` rows.
    pub fn bottom_rows(&self) -> PolyMatrix {
        self.x3.hconcat(&self.x4)
    }

    /// `[X_1; X_3]`, the left `2κ` columns.
    pub fn left_columns(&self) -> PolyMatrix {
        self.x1.vconcat(&self.x3)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_shapes() {
        let chart = ChartSpec::new(7, 2).unwrap();
        let r = special_ring(&chart, Field::Rationals);
        let cm = ChartMatrices::new(&chart, &r);
        assert_eq!((cm.x1.rows(), cm.x1.cols()), (4, 4));
        assert_eq!((cm.x2.rows(), cm.x2.cols()), (4, 3));
        assert_eq!((cm.x3.rows(), cm.x3.cols()), (3, 4));
        assert_eq!((cm.e.rows(), cm.e.cols()), (3, 2));
        assert_eq!((cm.l.rows(), cm.l.cols()), (2, 3));
        assert_eq!(chart_variables(&chart).len(), 49);
        assert_eq!(chart_variables(&chart)[16], Var::x(1, 5));
    }
}
