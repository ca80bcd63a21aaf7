//! Integral equations over `ℚ[π]` with `π₀ = π²`.

use std::sync::Arc;

use crate::chart::ChartSpec;
use crate::coeff::Field;
use crate::matrix::PolyMatrix;
use crate::poly::Poly;
use crate::ring::{MonomialOrder, Ring};
use crate::var::Var;

use super::components::{bottom_to_ab, AbMatrices};
use super::special::{bottom_matrices, bottom_variables, push_naive_relations, wedge2};
use super::{ChartMatrices, NamedIdeal};

fn pi(ring: &Arc<Ring>) -> Poly {
    Poly::var(ring, Var::pi())
}

/// Strengthened spin relations over the integers.
pub fn push_spin_relations_integral(out: &mut NamedIdeal, cm: &ChartMatrices) {
    let p = pi(&cm.ring);
    let k = cm.chart.kappa;
    let s = cm.chart.s() as i64;
    out.push_matrix("LM8", &cm.b.sub(&cm.b.adjoint()))
        .push_matrix("LM8", &cm.c.sub(&cm.c.adjoint()))
        .push_matrix("LM8", &cm.d.add(&PolyMatrix::scalar(&cm.ring, k, &(&Poly::from_i64(&cm.ring, 2) * &p))).add(&cm.a.adjoint()))
        .push_matrix("LM8", &cm.m.sub(&cm.e.adjoint().mul_poly(&p)))
        .push_matrix("LM8", &cm.l.add(&cm.f.adjoint().mul_poly(&p)))
        .push_matrix("LM8", &cm.x4.sub(&cm.x4.adjoint()))
        .push("LM8", &cm.x4.trace() + &(&Poly::from_i64(&cm.ring, s - 2) * &p));
}

/// The wedge relations `∧²(X + π·id)` and `∧ⁿ(X − π·id)`.
pub fn wedge_relations(cm: &ChartMatrices) -> (Vec<Poly>, Poly) {
    let n = cm.chart.n;
    let p = pi(&cm.ring);
    let plus = cm.x.add(&PolyMatrix::scalar(&cm.ring, n, &p));
    let minus = cm.x.sub(&PolyMatrix::scalar(&cm.ring, n, &p));
    (wedge2(&plus), minus.determinant())
}

/// The integral ideal without the wedge relations: LM1, LM2, LM8.
pub fn without_wedge(cm: &ChartMatrices) -> NamedIdeal {
    let mut out = NamedIdeal::new("integral_no_wedge", &cm.ring);
    let p = pi(&cm.ring);
    push_naive_relations(&mut out, cm, &(&p * &p));
    push_spin_relations_integral(&mut out, cm);
    out
}

/// The full integral ideal: LM1, LM2, LM6, LM8.
pub fn full(cm: &ChartMatrices) -> NamedIdeal {
    let mut out = NamedIdeal::new("integral_full", &cm.ring);
    let p = pi(&cm.ring);
    push_naive_relations(&mut out, cm, &(&p * &p));
    let (w2, wn) = wedge_relations(cm);
    out.extend("LM6", w2).push("LM6", wn);
    push_spin_relations_integral(&mut out, cm);
    out
}

/// `k[X_3, X_4, π]` under grevlex.
pub fn bottom_pi_ring(chart: &ChartSpec, field: Field) -> Arc<Ring> {
    let mut v = bottom_variables(chart);
    v.push(Var::pi());
    Ring::new(v, MonomialOrder::GrevLex, field).expect("valid ring")
}

/// `⟨∧²(X_3, X_4 + π·id), X_4 − X_4^ad, tr X_4 + (n − 2κ − 2)π⟩`.
pub fn intermediate(chart: &ChartSpec, ring: &Arc<Ring>) -> NamedIdeal {
    let (x3, x4) = bottom_matrices(chart, ring);
    let p = pi(ring);
    let s = chart.s();
    let shifted = x4.add(&PolyMatrix::scalar(ring, s, &p));
    let mut out = NamedIdeal::new("integral_X", ring);
    out.extend("wedge-bottom", wedge2(&x3.hconcat(&shifted)))
        .push_matrix("X4-sym", &x4.sub(&x4.adjoint()))
        .push("trace", &x4.trace() + &(&Poly::from_i64(ring, s as i64 - 2) * &p));
    out
}

/// `⟨∧²(𝐀,𝐁), 𝐀 − 𝐀ᵗ, tr(𝐀H) − 2π⟩` in `k[𝐀, 𝐁, π]`.
pub fn final_ab(m: &AbMatrices) -> NamedIdeal {
    let p = pi(&m.ring);
    let mut out = NamedIdeal::new("integral_final", &m.ring);
    out.extend("wedge", m.wedge_ab())
        .push_matrix("symmetry", &m.symmetry())
        .push("trace", &m.trace_ah() - &(&Poly::from_i64(&m.ring, 2) * &p));
    out
}

/// Images of `k[X_3, X_4, π]` variables under `X_3 = 𝐁`, `X_4 = 𝐀H − π`,
/// `π = π`; the inverse of `𝐀 = (X_4 + π)H`, `𝐁 = X_3`.
pub fn bottom_pi_to_ab(chart: &ChartSpec, m: &AbMatrices) -> Vec<Poly> {
    let p = pi(&m.ring);
    let mut images = bottom_to_ab(chart, m, &p);
    images.push(p);
    images
}

/// Images under the alternative reading `𝐀 = H(X_4 + π)`, i.e. `X_4 = H𝐀 − π`.
pub fn bottom_pi_to_ab_left(chart: &ChartSpec, m: &AbMatrices) -> Vec<Poly> {
    let p = pi(&m.ring);
    let s = chart.s();
    let x4 = m.h.mul(&m.a).sub(&PolyMatrix::scalar(&m.ring, s, &p));
    let t = 2 * chart.kappa;
    let mut images: Vec<Poly> = bottom_variables(chart)
        .iter()
        .map(|v| {
            let (i, j) = (v.row as usize - t - 1, v.col as usize);
            if j <= t { m.b.get(i, j - 1).clone() } else { x4.get(i, j - t - 1).clone() }
        })
        .collect();
    images.push(p);
    images
}

/// Coefficients of `T^k` (`k = 0..n`) of `(T + επ)^{n−1}(T − επ)`, `ε = ±1`.
pub fn kottwitz_target(ring: &Arc<Ring>, n: usize, eps: i64) -> Vec<Poly> {
    let p = pi(ring);
    // Multiply out one linear factor at a time; coefficient lists indexed by T-degree.
    let mut coeffs = vec![Poly::from_i64(ring, 1)];
    let factor = |c: &Vec<Poly>, root_coeff: &Poly| {
        let mut out = vec![Poly::zero(ring); c.len() + 1];
        for (k, ck) in c.iter().enumerate() {
            out[k + 1] = &out[k + 1] + ck;
            out[k] = &out[k] + &(ck * root_coeff);
        }
        out
    };
    let plus = &Poly::from_i64(ring, eps) * &p;
    for _ in 0..n - 1 {
        coeffs = factor(&coeffs, &plus);
    }
    coeffs = factor(&coeffs, &-plus);
    coeffs
}

/// `det(T·id − X) − (T + π)^{n−1}(T − π)`, coefficient by coefficient.
pub fn kottwitz_differences(cm: &ChartMatrices, eps: i64) -> Vec<Poly> {
    let cp = cm.x.char_poly_coeffs();
    let target = kottwitz_target(&cm.ring, cm.chart.n, eps);
    cp.iter().zip(target.iter()).map(|(a, b)| a - b).collect()
}
