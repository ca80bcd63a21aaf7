//! Transition and pairing matrices in the reordered lattice basis.
//!
//! Rows and columns of these `2n × 2n` matrices are split as
//! `(2κ, n − 2κ, 2κ, n − 2κ)`.

use std::sync::Arc;

use crate::chart::ChartSpec;
use crate::matrix::PolyMatrix;
use crate::poly::Poly;
use crate::ring::Ring;

use super::ChartMatrices;

/// The transition maps and the pairing of one chart.
#[derive(Clone, Debug)]
pub struct StructureMatrices {
    /// `Λ_κ → Λ_{n−κ}`.
    pub a_kappa: PolyMatrix,
    /// `Λ_{n−κ} → Λ_{n+κ}`.
    pub a_n_minus_kappa: PolyMatrix,
    /// The symmetric pairing `Λ_{n−κ} × Λ_κ → R`.
    pub pairing: PolyMatrix,
    pub h: PolyMatrix,
    pub j: PolyMatrix,
}

/// Builds the structure matrices with `π₀` supplied as a ring element
/// (zero on the special fiber).
pub fn build_structure_matrices(chart: &ChartSpec, ring: &Arc<Ring>, pi0: &Poly) -> StructureMatrices {
    let (t, s) = (2 * chart.kappa, chart.s());
    let z = |r: usize, c: usize| PolyMatrix::zeros(ring, r, c);
    let id = |k: usize| PolyMatrix::identity(ring, k);
    let p0 = |k: usize| PolyMatrix::scalar(ring, k, pi0);
    let h = PolyMatrix::antidiagonal(ring, s);
    let j = PolyMatrix::symplectic(ring, chart.kappa);
    let a_kappa = PolyMatrix::from_blocks(&[
        vec![id(t), z(t, s), z(t, t), z(t, s)],
        vec![z(s, t), z(s, s), z(s, t), p0(s)],
        vec![z(t, t), z(t, s), id(t), z(t, s)],
        vec![z(s, t), id(s), z(s, t), z(s, s)],
    ]);
    let a_n_minus_kappa = PolyMatrix::from_blocks(&[
        vec![z(t, t), z(t, s), p0(t), z(t, s)],
        vec![z(s, t), id(s), z(s, t), z(s, s)],
        vec![id(t), z(t, s), z(t, t), z(t, s)],
        vec![z(s, t), z(s, s), z(s, t), id(s)],
    ]);
    let pairing = PolyMatrix::from_blocks(&[
        vec![z(t, t), z(t, s), j.clone(), z(t, s)],
        vec![z(s, t), z(s, s), z(s, t), h.neg()],
        vec![j.neg(), z(t, s), z(t, t), z(t, s)],
        vec![z(s, t), h.clone(), z(s, t), z(s, s)],
    ]);
    StructureMatrices { a_kappa, a_n_minus_kappa, pairing, h, j }
}

/// `Y = diag(−J, H) Xᵗ diag(J, H)`, the chart matrix of `F_{n−κ} = F_κ^⊥`.
pub fn dual_chart_matrix(cm: &ChartMatrices) -> PolyMatrix {
    let (t, s) = (2 * cm.chart.kappa, cm.chart.s());
    let left = PolyMatrix::from_blocks(&[vec![cm.j.neg(), cm.zero(t, s)], vec![cm.zero(s, t), cm.h.clone()]]);
    let right = PolyMatrix::from_blocks(&[vec![cm.j.clone(), cm.zero(t, s)], vec![cm.zero(s, t), cm.h.clone()]]);
    left.mul(&cm.x.transpose()).mul(&right)
}

/// `Y` assembled block by block: `[[−J X_1ᵗ J, −J X_3ᵗ H], [H X_2ᵗ J, H X_4ᵗ H]]`.
pub fn dual_chart_matrix_blocks(cm: &ChartMatrices) -> PolyMatrix {
    let (j, h) = (&cm.j, &cm.h);
    PolyMatrix::from_blocks(&[
        vec![j.neg().mul(&cm.x1.transpose()).mul(j), j.neg().mul(&cm.x3.transpose()).mul(h)],
        vec![h.mul(&cm.x2.transpose()).mul(j), h.mul(&cm.x4.transpose()).mul(h)],
    ])
}
