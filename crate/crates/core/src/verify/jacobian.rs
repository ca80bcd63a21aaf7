//! Jacobian rank at the worst point and at points built from the chart
//! parametrization `x_ij = x·T_i·S_j` with `T` isotropic.

use crate::chart::ChartSpec;
use crate::coeff::Coeff;
use crate::error::GbError;
use crate::groebner::Ideal;
use crate::linalg::dense_rank;
use crate::var::Family;

use super::components::ComponentIdeals;
use super::{run_check, Check, Outcome};

/// A point of `𝔸(𝐀, 𝐁)` given by the two matrices.
#[derive(Clone, Debug)]
pub struct AbPoint {
    pub name: &'static str,
    pub a: Vec<Vec<i64>>,
    pub b: Vec<Vec<i64>>,
}

impl AbPoint {
    /// Coordinates in the variable order of `ideal`'s ring.
    pub fn coordinates(&self, ideal: &Ideal) -> Vec<Coeff> {
        let f = ideal.ring().field();
        ideal
            .ring()
            .vars()
            .iter()
            .map(|v| {
                let (i, j) = (v.row as usize - 1, v.col as usize - 1);
                let x = if v.family == Family::A { self.a[i][j] } else { self.b[i][j] };
                f.from_i64(x)
            })
            .collect()
    }
}

/// An isotropic `T ∈ ℤ^s` (`TᵗHT = 0`): `T_1 = 2`, `T_i = 2i` in the middle,
/// and `T_s` solving the quadric.
pub fn isotropic_vector(s: usize) -> Vec<i64> {
    assert!(s >= 2);
    let mut t: Vec<i64> = (1..=s as i64).map(|i| 2 * i).collect();
    t[0] = 2;
    let middle: i64 = (1..s - 1).map(|i| (i as i64 + 1) * (s - i) as i64).sum();
    t[s - 1] = -middle;
    t
}

fn outer(u: &[i64], v: &[i64]) -> Vec<Vec<i64>> {
    u.iter().map(|x| v.iter().map(|y| x * y).collect()).collect()
}

/// The sample points: the origin, a point of `V(I₂) ∖ V(I₁)`, a point of
/// `V(I₁₂)`, and a point of `V(I₁) ∖ V(I₂)`.
pub fn sample_points(chart: &ChartSpec) -> Vec<AbPoint> {
    let (s, t) = (chart.s(), 2 * chart.kappa);
    let iso = isotropic_vector(s);
    let mut aniso = vec![0i64; s];
    aniso[0] = 1;
    aniso[s - 1] = 1;
    let sv: Vec<i64> = (1..=t as i64).collect();
    let zero_a = vec![vec![0; s]; s];
    vec![
        AbPoint { name: "origin", a: zero_a.clone(), b: vec![vec![0; t]; s] },
        AbPoint { name: "A=TT^t,B=TS^t", a: outer(&iso, &iso), b: outer(&iso, &sv) },
        AbPoint { name: "A=0,B=TS^t", a: zero_a.clone(), b: outer(&iso, &sv) },
        AbPoint { name: "A=0,B=T'S^t", a: zero_a, b: outer(&aniso, &sv) },
    ]
}

/// Rank of the Jacobian of the generators at `p`, and the codimension of
/// the ideal. Fails with a witness if `p` is not on the variety.
pub fn jacobian_rank(ideal: &Ideal, p: &AbPoint) -> Result<Result<(usize, usize), String>, GbError> {
    let x = p.coordinates(ideal);
    if let Some(g) = ideal.generators().iter().find(|g| !g.eval(&x).is_zero()) {
        return Ok(Err(format!("{g} does not vanish at {}", p.name)));
    }
    let nv = ideal.ring().nvars();
    let rows: Vec<Vec<Coeff>> = ideal.generators().iter().map(|g| (0..nv).map(|i| g.derivative(i).eval(&x)).collect()).collect();
    let codim = nv - ideal.dimension()?;
    Ok(Ok((dense_rank(ideal.ring().field(), &rows), codim)))
}

pub fn suite(chart: &ChartSpec) -> Vec<Check> {
    let c = ComponentIdeals::new(chart);
    let pts = sample_points(chart);
    let named = [("I", &c.i), ("I_1", &c.i1), ("I_2", &c.i2), ("I_12", &c.i12)];
    let get = |name: &str| named.iter().find(|(n, _)| *n == name).map(|(_, i)| *i).expect("known ideal");
    let mut out = Vec::new();
    out.push(run_check("jacobian.origin", "the origin is a singular point of I_1, I_2 and I_12", || {
        let mut notes = Vec::new();
        for name in ["I_1", "I_2", "I_12"] {
            match jacobian_rank(get(name), &pts[0])? {
                Err(w) => return Ok(Outcome::fail(w)),
                Ok((r, cd)) if r >= cd => return Ok(Outcome::fail(format!("{name}: rank {r} equals codimension {cd}"))),
                Ok((r, cd)) => notes.push(format!("{name}: rank {r} < codim {cd}")),
            }
        }
        Ok(Outcome::with_note(true, notes.join("; ")))
    }));
    let smooth: [(&str, usize); 7] = [("I", 1), ("I_2", 1), ("I_1", 2), ("I_2", 2), ("I_12", 2), ("I_1", 3), ("I", 3)];
    out.push(run_check(
        "jacobian.smooth",
        "sampled points of rank one away from the origin are smooth on each ideal containing them",
        || {
            let mut notes = Vec::new();
            for (name, k) in smooth {
                match jacobian_rank(get(name), &pts[k])? {
                    Err(w) => return Ok(Outcome::fail(w)),
                    Ok((r, cd)) if r != cd => {
                        return Ok(Outcome::fail(format!("{name} at {}: rank {r}, codimension {cd}", pts[k].name)))
                    }
                    Ok(_) => notes.push(format!("{name} at {}", pts[k].name)),
                }
            }
            Ok(Outcome::with_note(true, format!("smooth: {}", notes.join(", "))))
        },
    ));
    out.push(run_check(
        "jacobian.crossing",
        "a point on both components is singular on I",
        || {
            Ok(match jacobian_rank(&c.i, &pts[2])? {
                Err(w) => Outcome::fail(w),
                Ok((r, cd)) => Outcome::with_note(r < cd, format!("rank {r}, codimension {cd}")),
            })
        },
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isotropic_vectors_are_isotropic() {
        for s in 2..9 {
            let t = isotropic_vector(s);
            assert_eq!((0..s).map(|i| t[i] * t[s - 1 - i]).sum::<i64>(), 0, "s = {s}");
            assert!(t.iter().any(|x| *x != 0));
        }
    }
}
