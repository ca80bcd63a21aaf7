//! Affine charts `D(x_pq)` of the final ideal and its components.
//!
//! On `D(x_pq)` the matrix `[𝐀 | 𝐁]` has rank one, so it factors as
//! `x·T·Sᵗ` with `T_p = S_q = 1` and `x = x_pq` invertible. Each chart is
//! compared with an explicit presentation `Q` in the variables `T, S, x, x⁻¹`
//! by checking that the two substitutions are mutually inverse ring maps.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chart::ChartSpec;
use crate::coeff::Field;
use crate::error::GbError;
use crate::groebner::Ideal;
use crate::poly::Poly;
use crate::ring::{MonomialOrder, Ring};
use crate::var::{Family, Var};

use super::components::ComponentIdeals;
use super::{run_check, Check, Outcome};

const NILPOTENT_SEED: u64 = 0x11_9075;
const NILPOTENT_SAMPLES: usize = 3;

/// Which of the four ideals a chart belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    I,
    I1,
    I2,
    I12,
}

impl Which {
    pub const ALL: [Which; 4] = [Which::I, Which::I1, Which::I2, Which::I12];

    pub fn name(self) -> &'static str {
        match self {
            Which::I => "I",
            Which::I1 => "I_1",
            Which::I2 => "I_2",
            Which::I12 => "I_12",
        }
    }

    fn ideal(self, c: &ComponentIdeals) -> &Ideal {
        match self {
            Which::I => &c.i,
            Which::I1 => &c.i1,
            Which::I2 => &c.i2,
            Which::I12 => &c.i12,
        }
    }

    /// Whether `𝐀` vanishes on the ideal.
    fn kills_a(self) -> bool {
        matches!(self, Which::I1 | Which::I12)
    }
}

fn t_var(i: usize) -> Var {
    Var::vector(Family::CHART_T, i as u16)
}

fn s_var(j: usize) -> Var {
    Var::vector(Family::CHART_S, j as u16)
}

const X: Var = Var::scalar(Family::X);
const U: Var = Var::scalar(Family::INV);

/// The chart `D(x_pq)` of one ideal together with its claimed presentation.
pub struct Chart {
    pub which: Which,
    pub p: usize,
    pub q: usize,
    /// `ideal + ⟨u·x_pq − 1⟩` in `k[𝐀, 𝐁, u]`.
    pub localized: Ideal,
    /// The presentation in `k[T, S, x, u']`; `None` when the chart is empty.
    pub presentation: Option<Ideal>,
    s: usize,
}

impl Chart {
    pub fn new(chart: &ChartSpec, which: Which, ideal: &Ideal, p: usize, q: usize) -> Chart {
        let (s, t) = (chart.s(), 2 * chart.kappa);
        let mut vars = ideal.ring().vars().to_vec();
        vars.push(U);
        let jring = Ring::new(vars, MonomialOrder::GrevLex, ideal.ring().field()).expect("valid ring");
        let mut gens: Vec<Poly> = ideal.generators().iter().map(|g| g.map_into(&jring).expect("sub-ring")).collect();
        let xpq = Poly::var(&jring, entry_var(s, p, q));
        gens.push(&(&Poly::var(&jring, U) * &xpq) - &Poly::from_i64(&jring, 1));
        let localized = Ideal::new(&jring, gens);
        let presentation = (!(which.kills_a() && q <= s)).then(|| presentation(which, s, t, p, q, jring.field()));
        Chart { which, p, q, localized, presentation, s }
    }

    pub fn label(&self) -> String {
        format!("{} on D(x_{}_{})", self.which.name(), self.p, self.q)
    }

    fn q_ring(&self) -> &Arc<Ring> {
        self.presentation.as_ref().expect("non-empty chart").ring()
    }

    /// `S_j` as an element of the presentation ring.
    fn s_image(&self, j: usize) -> Poly {
        let r = self.q_ring();
        if j == self.q && self.q > self.s {
            Poly::from_i64(r, 1)
        } else if j <= self.s {
            if self.which.kills_a() {
                Poly::zero(r)
            } else {
                &Poly::var(r, t_var(j)) * &Poly::var(r, s_var(self.p))
            }
        } else {
            Poly::var(r, s_var(j))
        }
    }

    /// `φ`: `x_ij ↦ x·T_i·S_j`, `u ↦ u'`.
    fn phi(&self) -> Vec<Poly> {
        let r = self.q_ring();
        let x = Poly::var(r, X);
        self.localized
            .ring()
            .vars()
            .iter()
            .map(|v| {
                if *v == U {
                    return Poly::var(r, Var::vector(Family::INV, 1));
                }
                let (i, j) = column_of(self.s, v);
                &(&x * &Poly::var(r, t_var(i))) * &self.s_image(j)
            })
            .collect()
    }

    /// `ψ`: `T_i ↦ x_iq·u`, `S_j ↦ x_pj·u`, `x ↦ x_pq`, `u' ↦ u`.
    fn psi(&self) -> Vec<Poly> {
        let jr = self.localized.ring();
        let u = Poly::var(jr, U);
        let e = |i: usize, j: usize| Poly::var(jr, entry_var(self.s, i, j));
        self.q_ring()
            .vars()
            .iter()
            .map(|v| match v.family {
                f if f == Family::CHART_T => &e(v.row as usize, self.q) * &u,
                f if f == Family::CHART_S => &e(self.p, v.row as usize) * &u,
                f if f == Family::X => e(self.p, self.q),
                _ => u.clone(),
            })
            .collect()
    }

    /// `None` if the presentation is correct, otherwise the first failure.
    pub fn witness(&self) -> Result<Option<String>, GbError> {
        let Some(q) = &self.presentation else {
            return Ok((!self.localized.is_unit()?).then(|| format!("{}: expected an empty chart", self.label())));
        };
        let jr = self.localized.ring();
        let qr = q.ring();
        let (phi, psi) = (self.phi(), self.psi());
        for g in self.localized.generators() {
            let img = g.substitute(qr, &phi);
            if !q.contains(&img)? {
                return Ok(Some(format!("{}: phi({g}) = {img} is not in the presentation", self.label())));
            }
        }
        for g in q.generators() {
            let img = g.substitute(jr, &psi);
            if !self.localized.contains(&img)? {
                return Ok(Some(format!("{}: psi({g}) = {img} is not in the chart ideal", self.label())));
            }
        }
        for (k, img) in phi.iter().enumerate() {
            let back = &img.substitute(jr, &psi) - &Poly::var_at(jr, k);
            if !self.localized.contains(&back)? {
                return Ok(Some(format!("{}: psi(phi({})) differs from it", self.label(), jr.vars()[k])));
            }
        }
        for (k, img) in psi.iter().enumerate() {
            let back = &img.substitute(qr, &phi) - &Poly::var_at(qr, k);
            if !q.contains(&back)? {
                return Ok(Some(format!("{}: phi(psi({})) differs from it", self.label(), qr.vars()[k])));
            }
        }
        Ok(None)
    }
}

/// The variable in column `j` of `[𝐀 | 𝐁]`, row `i`.
fn entry_var(s: usize, i: usize, j: usize) -> Var {
    if j <= s {
        Var::a(i, j)
    } else {
        Var::b(i, j - s)
    }
}

fn column_of(s: usize, v: &Var) -> (usize, usize) {
    let (i, j) = (v.row as usize, v.col as usize);
    if v.family == Family::A {
        (i, j)
    } else {
        (i, j + s)
    }
}

/// The claimed presentation of `which` on `D(x_pq)` (assumed non-empty).
pub fn presentation(which: Which, s: usize, t: usize, p: usize, q: usize, field: Field) -> Ideal {
    let mut vars: Vec<Var> = (1..=s).map(t_var).collect();
    if !which.kills_a() {
        vars.push(s_var(p));
    }
    vars.extend((s + 1..=s + t).filter(|j| *j != q).map(s_var));
    vars.push(X);
    vars.push(Var::vector(Family::INV, 1));
    let r = Ring::new(vars, MonomialOrder::GrevLex, field).expect("valid ring");
    let one = Poly::from_i64(&r, 1);
    let tv = |i: usize| Poly::var(&r, t_var(i));
    let quadric = (1..=s).fold(Poly::zero(&r), |acc, i| &acc + &(&tv(i) * &tv(s + 1 - i)));
    let unit = &(&Poly::var(&r, X) * &Poly::var(&r, Var::vector(Family::INV, 1))) - &one;
    let mut gens = vec![&tv(p) - &one, unit];
    match (which, q <= s) {
        (Which::I | Which::I2, true) => {
            gens.push(&(&Poly::var(&r, s_var(p)) * &tv(q)) - &one);
            gens.push(quadric);
        }
        (Which::I, false) => gens.push(&Poly::var(&r, s_var(p)) * &quadric),
        (Which::I2 | Which::I12, false) => gens.push(quadric),
        (Which::I1, false) => {}
        (Which::I1 | Which::I12, true) => unreachable!("empty chart"),
    }
    Ideal::new(&r, gens)
}

/// A random polynomial of degree at most two with small integer coefficients.
fn random_poly(ring: &Arc<Ring>, rng: &mut ChaCha8Rng) -> Poly {
    let n = ring.nvars();
    let mut f = Poly::from_i64(ring, rng.gen_range(-3..=3));
    for _ in 0..4 {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let c = Poly::from_i64(ring, rng.gen_range(-3..=3));
        f = &f + &(&c * &(&Poly::var_at(ring, a) * &Poly::var_at(ring, b)));
        f = &f + &(&Poly::from_i64(ring, rng.gen_range(-2..=2)) * &Poly::var_at(ring, a));
    }
    f
}

/// A random `f ∉ J` with `f² ∈ J`, if one is found among the samples.
pub fn nilpotent_witness(ideal: &Ideal, seed: u64, samples: usize) -> Result<Option<Poly>, GbError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let f = random_poly(ideal.ring(), &mut rng);
        if !ideal.contains(&f)? && ideal.contains(&(&f * &f))? {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

/// Every chart `D(x_pq)` with `p ≤ s` of the four ideals.
pub fn all_charts(chart: &ChartSpec, c: &ComponentIdeals) -> Vec<Chart> {
    let (s, t) = (chart.s(), 2 * chart.kappa);
    let mut out = Vec::new();
    for which in Which::ALL {
        for p in 1..=s {
            for q in 1..=s + t {
                out.push(Chart::new(chart, which, which.ideal(c), p, q));
            }
        }
    }
    out
}

pub fn suite(chart: &ChartSpec) -> Vec<Check> {
    let c = ComponentIdeals::new(chart);
    let charts = all_charts(chart, &c);
    let mut out = Vec::new();
    out.push(run_check(
        "components.charts",
        "on each chart D(x_pq) the ideal is isomorphic to the listed presentation in T, S, x, 1/x",
        || {
            let mut empty = 0;
            for ch in &charts {
                if let Some(w) = ch.witness()? {
                    return Ok(Outcome::fail(w));
                }
                empty += usize::from(ch.presentation.is_none());
            }
            Ok(Outcome::with_note(true, format!("{} charts, {empty} empty", charts.len())))
        },
    ));
    out.push(run_check(
        "components.reduced",
        "random elements outside each chart ideal have squares outside it",
        || {
            for (k, ch) in charts.iter().enumerate().filter(|(_, ch)| ch.presentation.is_some()) {
                if let Some(f) = nilpotent_witness(&ch.localized, NILPOTENT_SEED + k as u64, NILPOTENT_SAMPLES)? {
                    return Ok(Outcome::fail(format!("{}: {f} is nilpotent", ch.label())));
                }
            }
            Ok(Outcome::pass())
        },
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presentation_has_expected_variables() {
        let q = presentation(Which::I, 3, 2, 1, 4, Field::Rationals);
        let names: Vec<String> = q.ring().vars().iter().map(|v| v.to_string()).collect();
        assert_eq!(names, ["T_1", "T_2", "T_3", "S_1", "S_5", "x", "u_1"]);
    }
}
