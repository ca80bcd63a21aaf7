//! Special-fiber ideals in `k[X]` and the simplification chain.

use std::sync::Arc;

use crate::chart::ChartSpec;
use crate::coeff::Field;
use crate::matrix::PolyMatrix;
use crate::poly::Poly;
use crate::ring::{MonomialOrder, Ring};
use crate::var::Var;

use super::{ChartMatrices, NamedIdeal};

/// `1/2` as a ring constant.
fn half(ring: &Arc<Ring>) -> Poly {
    Poly::constant(ring, ring.field().from_ratio(1, 2))
}

/// 2-minors of `m`, as a matrix-free list.
pub fn wedge2(m: &PolyMatrix) -> Vec<Poly> {
    m.minors(2)
}

/// The naive-model relations with `π₀` as given: LM1, the two halves of LM2.
pub fn push_naive_relations(out: &mut NamedIdeal, cm: &ChartMatrices, pi0: &Poly) {
    let (x1, x2, x3, x4, j, h) = (&cm.x1, &cm.x2, &cm.x3, &cm.x4, &cm.j, &cm.h);
    let (t, s) = (x1.rows(), x4.rows());
    let p0 = |k: usize| PolyMatrix::scalar(&cm.ring, k, pi0);
    out.push_matrix("LM1", &x1.mul(x1).add(&x2.mul(x3)).sub(&p0(t)))
        .push_matrix("LM1", &x1.mul(x2).add(&x2.mul(x4)))
        .push_matrix("LM1", &x3.mul(x1).add(&x4.mul(x3)))
        .push_matrix("LM1", &x3.mul(x2).add(&x4.mul(x4)).sub(&p0(s)));
    out.push_matrix("LM2-1", &j.neg().mul(x1).add(&x3.transpose().mul(h).mul(x3)).add(&x1.transpose().mul(j)))
        .push_matrix("LM2-1", &j.neg().mul(x2).add(&x3.transpose().mul(h).mul(x4)))
        .push_matrix("LM2-1", &x2.transpose().mul(j).add(&x4.transpose().mul(h).mul(x3)))
        .push_matrix("LM2-1", &x4.transpose().mul(h).mul(x4).sub(&h.mul_poly(pi0)));
    out.push_matrix("LM2-2", &x1.mul(j).mul(&x1.transpose()).sub(&j.mul_poly(pi0)))
        .push_matrix("LM2-2", &x1.mul(j).mul(&x3.transpose()).sub(&x2.mul(h)))
        .push_matrix("LM2-2", &x3.mul(j).mul(&x1.transpose()).add(&h.mul(&x2.transpose())))
        .push_matrix("LM2-2", &x3.mul(j).mul(&x3.transpose()).sub(&x4.mul(h)).add(&h.mul(&x4.transpose())));
}

/// Strengthened spin relations on the special fiber.
pub fn push_spin_relations_special(out: &mut NamedIdeal, cm: &ChartMatrices) {
    out.extend("LM8-1", wedge2(&cm.x)).push_matrix("LM8-1", &cm.x2);
    out.push_matrix("LM8-2", &cm.c.sub(&cm.c.adjoint()))
        .push_matrix("LM8-2", &cm.b.sub(&cm.b.adjoint()))
        .push_matrix("LM8-2", &cm.d.add(&cm.a.adjoint()))
        .push_matrix("LM8-2", &cm.x4.sub(&cm.x4.adjoint()))
        .push("LM8-2", cm.x4.trace());
}

/// Naive special-fiber model: LM1, LM2 and the wedge condition `∧²X`.
pub fn naive_wedge(cm: &ChartMatrices) -> NamedIdeal {
    let mut out = NamedIdeal::new("naive_wedge", &cm.ring);
    push_naive_relations(&mut out, cm, &Poly::zero(&cm.ring));
    out.extend("LM6", wedge2(&cm.x));
    out
}

/// Strengthened spin relations alone.
pub fn spin_relations(cm: &ChartMatrices) -> NamedIdeal {
    let mut out = NamedIdeal::new("strengthened_spin", &cm.ring);
    push_spin_relations_special(&mut out, cm);
    out
}

/// The full special-fiber ideal `𝓘`.
pub fn full(cm: &ChartMatrices) -> NamedIdeal {
    let mut out = NamedIdeal::new("full", &cm.ring);
    push_naive_relations(&mut out, cm, &Poly::zero(&cm.ring));
    push_spin_relations_special(&mut out, cm);
    out
}

/// First simplification of `𝓘`.
pub fn step1(cm: &ChartMatrices) -> NamedIdeal {
    let (x1, x3, j, h) = (&cm.x1, &cm.x3, &cm.j, &cm.h);
    let mut out = NamedIdeal::new("step1", &cm.ring);
    out.push_matrix("step1", &j.neg().mul(x1).add(&x1.transpose().mul(j)).add(&x3.transpose().mul(h).mul(x3)))
        .push_matrix("step1", &x3.mul(x1));
    push_spin_relations_special(&mut out, cm);
    out
}

/// `X_1 + ½ J X_3ᵗ H X_3`.
pub fn x1_relation(cm: &ChartMatrices) -> PolyMatrix {
    cm.x1.add(&cm.j.mul(&cm.x3.transpose()).mul(&cm.h).mul(&cm.x3).mul_poly(&half(&cm.ring)))
}

/// Second simplification: `∧²X, X_2, X_4 − X_4^ad, tr X_4, X_1 + ½JX_3ᵗHX_3`.
pub fn step2(cm: &ChartMatrices) -> NamedIdeal {
    let mut out = NamedIdeal::new("step2", &cm.ring);
    out.extend("wedge", wedge2(&cm.x))
        .push_matrix("X2", &cm.x2)
        .push_matrix("X4-sym", &cm.x4.sub(&cm.x4.adjoint()))
        .push("trace", cm.x4.trace())
        .push_matrix("X1-solve", &x1_relation(cm));
    out
}

/// The ideal `𝓘′`: Step 2 with `∧²X` replaced by `∧²(X_3, X_4)`.
pub fn step3(cm: &ChartMatrices) -> NamedIdeal {
    let mut out = NamedIdeal::new("step3", &cm.ring);
    out.extend("wedge-bottom", wedge2(&cm.bottom_rows()))
        .push_matrix("X2", &cm.x2)
        .push_matrix("X4-sym", &cm.x4.sub(&cm.x4.adjoint()))
        .push("trace", cm.x4.trace())
        .push_matrix("X1-solve", &x1_relation(cm));
    out
}

/// Components guessed from the Step 2 presentation, in `k[X]`.
pub fn component_guesses(cm: &ChartMatrices) -> (NamedIdeal, NamedIdeal) {
    let (x3, h) = (&cm.x3, &cm.h);
    let mut i1 = NamedIdeal::new("cal_I1", &cm.ring);
    i1.push_matrix("X4", &cm.x4)
        .push_matrix("X2", &cm.x2)
        .extend("wedge-left", wedge2(&cm.left_columns()))
        .push_matrix("X1-solve", &x1_relation(cm));
    let mut i2 = NamedIdeal::new("cal_I2", &cm.ring);
    i2.push_matrix("X1", &cm.x1)
        .push_matrix("X2", &cm.x2)
        .extend("wedge-bottom", wedge2(&cm.bottom_rows()))
        .push_matrix("X4-sym", &cm.x4.sub(&cm.x4.adjoint()))
        .push("trace", cm.x4.trace())
        .push_matrix("isotropy", &x3.transpose().mul(h).mul(x3));
    (i1, i2)
}

/// Variables of `X_3` and `X_4` (the bottom rows of `X`).
pub fn bottom_variables(chart: &ChartSpec) -> Vec<Var> {
    let k = super::upper_block_size(chart);
    super::chart_variables(chart)[k..].to_vec()
}

/// `k[X_3, X_4]` under grevlex.
pub fn bottom_ring(chart: &ChartSpec, field: Field) -> Arc<Ring> {
    Ring::new(bottom_variables(chart), MonomialOrder::GrevLex, field).expect("valid ring")
}

/// `⟨∧²(X_3, X_4), X_4 − X_4^ad, tr X_4⟩` in `k[X_3, X_4]`.
pub fn final_bottom(chart: &ChartSpec, ring: &Arc<Ring>) -> NamedIdeal {
    let bm = bottom_matrices(chart, ring);
    let mut out = NamedIdeal::new("final_X", ring);
    out.extend("wedge-bottom", wedge2(&bm.0.hconcat(&bm.1)))
        .push_matrix("X4-sym", &bm.1.sub(&bm.1.adjoint()))
        .push("trace", bm.1.trace());
    out
}

/// `(X_3, X_4)` as matrices over a ring that contains only those variables.
pub fn bottom_matrices(chart: &ChartSpec, ring: &Arc<Ring>) -> (PolyMatrix, PolyMatrix) {
    let (t, s) = (2 * chart.kappa, chart.s());
    let x3 = PolyMatrix::from_fn(ring, s, t, |i, j| Poly::var(ring, Var::x(t + i + 1, j + 1)));
    let x4 = PolyMatrix::from_fn(ring, s, s, |i, j| Poly::var(ring, Var::x(t + i + 1, t + j + 1)));
    (x3, x4)
}

/// Images of the chart variables (in `chart_variables` order) under
/// `X_1 ↦ −½ J X_3ᵗ H X_3`, `X_2 ↦ 0`, identity on `X_3, X_4`.
pub fn step3_substitution(chart: &ChartSpec, target: &Arc<Ring>) -> Vec<Poly> {
    let (x3, _) = bottom_matrices(chart, target);
    let (t, s) = (2 * chart.kappa, chart.s());
    let j = PolyMatrix::symplectic(target, chart.kappa);
    let h = PolyMatrix::antidiagonal(target, s);
    let x1 = j.mul(&x3.transpose()).mul(&h).mul(&x3).mul_poly(&-half(target));
    let mut images = Vec::new();
    for i in 0..t {
        for jj in 0..t {
            images.push(x1.get(i, jj).clone());
        }
    }
    images.extend(std::iter::repeat_n(Poly::zero(target), t * s));
    for v in bottom_variables(chart) {
        images.push(Poly::var(target, v));
    }
    images
}

/// Entries of `X_4X_3`, `X_4²`, `X_1²`.
pub fn corollary_zeros(cm: &ChartMatrices) -> Vec<Poly> {
    let mut out = cm.x4.mul(&cm.x3).entries().to_vec();
    out.extend(cm.x4.mul(&cm.x4).entries().iter().cloned());
    out.extend(cm.x1.mul(&cm.x1).entries().iter().cloned());
    out
}

/// Entries of `E H_κ Fᵗ − F H_κ Eᵗ`.
pub fn ehf_relation(cm: &ChartMatrices) -> Vec<Poly> {
    let hk = PolyMatrix::antidiagonal(&cm.ring, cm.chart.kappa);
    let (e, f) = (&cm.e, &cm.f);
    e.mul(&hk).mul(&f.transpose()).sub(&f.mul(&hk).mul(&e.transpose())).entries().to_vec()
}
