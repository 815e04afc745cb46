use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{
    is_a_group, is_abelian, is_cp, is_minimal_non_nilpotent, is_nc, is_nc_nonmaximal, is_nilpotent, is_nnc, is_pnc,
    is_quasi_nc, is_sbp, is_solvable, is_supersolvable, prime_power_verdict, Analysis, Verdict,
};
use crate::error::{GroupError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Property {
    AGroup,
    Abelian,
    Cp,
    MinimalNonNilpotent,
    Nc,
    NcNonmaximal,
    Nilpotent,
    Nnc,
    Pnc,
    PrimePowerOrder,
    QuasiNc,
    Sbp,
    Solvable,
    Supersolvable,
}

impl Property {
    pub const ALL: [Property; 14] = [
        Property::AGroup,
        Property::Abelian,
        Property::Cp,
        Property::MinimalNonNilpotent,
        Property::Nc,
        Property::NcNonmaximal,
        Property::Nilpotent,
        Property::Nnc,
        Property::Pnc,
        Property::PrimePowerOrder,
        Property::QuasiNc,
        Property::Sbp,
        Property::Solvable,
        Property::Supersolvable,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::AGroup => "a_group",
            Property::Abelian => "abelian",
            Property::Cp => "cp",
            Property::MinimalNonNilpotent => "minimal_non_nilpotent",
            Property::Nc => "nc",
            Property::NcNonmaximal => "nc_nonmaximal",
            Property::Nilpotent => "nilpotent",
            Property::Nnc => "nnc",
            Property::Pnc => "pnc",
            Property::PrimePowerOrder => "prime_power_order",
            Property::QuasiNc => "quasi_nc",
            Property::Sbp => "sbp",
            Property::Solvable => "solvable",
            Property::Supersolvable => "supersolvable",
        }
    }

    pub fn evaluate(self, a: &Analysis) -> Result<Verdict> {
        let g = a.group();
        match self {
            Property::AGroup => is_a_group(a),
            Property::Abelian => Ok(is_abelian(g)),
            Property::Cp => Ok(is_cp(g)),
            Property::MinimalNonNilpotent => is_minimal_non_nilpotent(a),
            Property::Nc => is_nc(a),
            Property::NcNonmaximal => is_nc_nonmaximal(a),
            Property::Nilpotent => is_nilpotent(g),
            Property::Nnc => is_nnc(a),
            Property::Pnc => is_pnc(a),
            Property::PrimePowerOrder => Ok(prime_power_verdict(g)),
            Property::QuasiNc => is_quasi_nc(a),
            Property::Sbp => is_sbp(a),
            Property::Solvable => is_solvable(g),
            Property::Supersolvable => is_supersolvable(a),
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| GroupError::ParameterOutOfRange(format!("unknown property {s:?}")))
    }
}

/// Verdicts for a set of properties of one group. Maps are sorted by
/// property name, so the JSON form is stable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub group: String,
    pub id: String,
    pub order: usize,
    pub properties: BTreeMap<String, Verdict>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub errors: BTreeMap<String, String>,
}

impl PropertyReport {
    /// Evaluates `properties` (all of them when empty). Properties that hit
    /// a cap are listed under `errors`.
    pub fn compute(a: &Analysis, properties: &[Property]) -> Self {
        let selected: Vec<Property> = if properties.is_empty() { Property::ALL.to_vec() } else { properties.to_vec() };
        let results = a.exec().map(&selected, |p| p.evaluate(a));
        let mut report = PropertyReport {
            group: a.group().name().unwrap_or("G").to_string(),
            id: a.group().id().to_string(),
            order: a.group().order(),
            properties: BTreeMap::new(),
            errors: BTreeMap::new(),
        };
        for (p, result) in selected.into_iter().zip(results) {
            match result {
                Ok(v) => {
                    report.properties.insert(p.name().to_string(), v);
                }
                Err(e) => {
                    report.errors.insert(p.name().to_string(), e.to_string());
                }
            }
        }
        report
    }

    pub fn value(&self, p: Property) -> Option<bool> {
        self.properties.get(p.name()).map(|v| v.value)
    }
}
