//! Named ideals selectable from the command line.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::chart::ChartSpec;
use crate::coeff::Field;
use crate::ring::MonomialOrder;

use super::components::{ab_ring, component1, component12, component2, scheme, AbMatrices};
use super::special;
use super::{integral, integral_ring, special_ring, ChartMatrices, NamedIdeal};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    Full,
    Step1,
    Step2,
    Final,
    I,
    I1,
    I2,
    I12,
    Integral,
}

impl Which {
    pub const ALL: [Which; 9] =
        [Which::Full, Which::Step1, Which::Step2, Which::Final, Which::I, Which::I1, Which::I2, Which::I12, Which::Integral];

    pub fn name(self) -> &'static str {
        match self {
            Which::Full => "full",
            Which::Step1 => "step1",
            Which::Step2 => "step2",
            Which::Final => "final",
            Which::I => "I",
            Which::I1 => "I1",
            Which::I2 => "I2",
            Which::I12 => "I12",
            Which::Integral => "integral",
        }
    }

    /// Builds the generator list. `final` is the presentation in `𝐀, 𝐁`;
    /// `I` is the same ideal, kept as an alias matching the component names.
    pub fn build(self, chart: &ChartSpec, field: Field) -> NamedIdeal {
        let special = || ChartMatrices::new(chart, &special_ring(chart, field));
        let ab = || AbMatrices::new(chart, &ab_ring(chart, MonomialOrder::GrevLex, field));
        match self {
            Which::Full => special::full(&special()),
            Which::Step1 => special::step1(&special()),
            Which::Step2 => special::step2(&special()),
            Which::Final | Which::I => {
                let mut out = scheme(&ab());
                out.name = self.name().into();
                out
            }
            Which::I1 => component1(&ab()),
            Which::I2 => component2(&ab()),
            Which::I12 => component12(&ab()),
            Which::Integral => integral::full(&ChartMatrices::new(chart, &integral_ring(chart, MonomialOrder::GrevLex, field))),
        }
    }
}

impl FromStr for Which {
    type Err = String;

    fn from_str(s: &str) -> Result<Which, String> {
        Which::ALL.iter().copied().find(|w| w.name().eq_ignore_ascii_case(s)).ok_or_else(|| format!("unknown ideal `{s}`"))
    }
}

impl fmt::Display for Which {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// JSON form of a generator list.
#[derive(Clone, Debug, Serialize)]
pub struct IdealExport {
    pub name: String,
    pub field: String,
    pub order: String,
    pub variables: Vec<String>,
    pub generators: Vec<GeneratorExport>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GeneratorExport {
    pub source: String,
    pub poly: String,
}

impl IdealExport {
    pub fn new(ideal: &NamedIdeal) -> IdealExport {
        IdealExport {
            name: ideal.name.clone(),
            field: ideal.ring.field().to_string(),
            order: ideal.ring.order().tag(),
            variables: ideal.ring.vars().iter().map(|v| v.to_string()).collect(),
            generators: ideal
                .gens
                .iter()
                .map(|g| GeneratorExport { source: g.source.clone(), poly: g.poly.to_string() })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for w in Which::ALL {
            assert_eq!(w.name().parse::<Which>(), Ok(w));
        }
    }

    #[test]
    fn final_has_wedge_symmetry_and_trace() {
        let chart = ChartSpec::new(6, 1).unwrap();
        let f = Which::Final.build(&chart, Field::Rationals);
        let sources: Vec<String> = f.source_counts().into_iter().map(|(s, _)| s).collect();
        assert_eq!(sources, ["wedge", "symmetry", "trace"]);
    }
}
