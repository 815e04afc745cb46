//! Named group constructors and the persisted catalog of test groups.

mod default;
pub mod families;

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::caps::Caps;
use crate::error::{GroupError, Result};
use crate::group::{direct_product, semidirect_product, Group, GroupMap, SemidirectSpec};
use crate::numth::{is_prime, prime_of_power};

pub use default::{default_catalog, CLASSIFICATION_TAG};
pub use families::{
    alternating, automorphism_order, cyclic, dihedral, elementary_abelian, exp_order_of, generalized_quaternion,
    sbp_type_iii, smallest_automorphism_of_order, symmetric,
};

/// How a complement acts on the kernel of a semidirect product.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Action {
    Trivial,
    /// A generator of a cyclic complement inverts an abelian kernel.
    Inversion,
    /// A generator of a cyclic complement acts by the smallest automorphism
    /// of the given order.
    Automorphism {
        order: usize,
    },
    /// The complement is a direct product whose first factor is cyclic; its
    /// generator acts by the smallest automorphism of the given order and the
    /// other factors act trivially.
    FirstFactor {
        order: usize,
    },
}

/// The conditions on the right-hand side of the minimal non-nilpotent
/// characterization, as named by family constructions that break one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyCondition {
    /// `F(G)` is a Sylow subgroup.
    FittingSylow,
    /// A cyclic complement `Q` of prime order to `F(G)` exists.
    CyclicPrimeComplement,
    /// `Q` acts nontrivially on `F(G)`.
    NontrivialAction,
    /// Every proper subgroup of non-prime-power order is abelian.
    ProperNonPAbelian,
}

impl FamilyCondition {
    pub const ALL: [FamilyCondition; 4] = [
        FamilyCondition::FittingSylow,
        FamilyCondition::CyclicPrimeComplement,
        FamilyCondition::NontrivialAction,
        FamilyCondition::ProperNonPAbelian,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyCondition::FittingSylow => "fitting-sylow",
            FamilyCondition::CyclicPrimeComplement => "cyclic-prime-complement",
            FamilyCondition::NontrivialAction => "nontrivial-action",
            FamilyCondition::ProperNonPAbelian => "proper-non-p-abelian",
        }
    }
}

/// Parameters of a `[K]Q` construction for the minimal non-nilpotent
/// family. `breaks` marks a negative control.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub p: u64,
    pub q: u64,
    pub kernel: Box<Construction>,
    pub complement: Box<Construction>,
    pub action: Action,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub breaks: Option<FamilyCondition>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Construction {
    Cyclic {
        n: usize,
    },
    /// Order `2n`.
    Dihedral {
        n: usize,
    },
    Symmetric {
        n: usize,
    },
    Alternating {
        n: usize,
    },
    Quaternion {
        order: usize,
    },
    ElementaryAbelian {
        p: usize,
        rank: u32,
    },
    DirectProduct {
        factors: Vec<Construction>,
    },
    Semidirect {
        kernel: Box<Construction>,
        complement: Box<Construction>,
        action: Action,
    },
    SbpTypeIii {
        p: u64,
        q: u64,
    },
    MinimalNonNilpotent(FamilySpec),
    Permutations {
        degree: usize,
        generators: Vec<String>,
    },
    FromTable {
        source: String,
    },
}

impl Construction {
    pub fn build(&self, caps: &Caps) -> Result<Group> {
        match self {
            Construction::Cyclic { n } => cyclic(*n),
            Construction::Dihedral { n } => dihedral(*n),
            Construction::Symmetric { n } => symmetric(*n),
            Construction::Alternating { n } => alternating(*n),
            Construction::Quaternion { order } => generalized_quaternion(*order),
            Construction::ElementaryAbelian { p, rank } => elementary_abelian(*p, *rank),
            Construction::DirectProduct { factors } => {
                let mut parts = factors.iter().map(|f| f.build(caps));
                let first = parts
                    .next()
                    .ok_or_else(|| GroupError::ParameterOutOfRange("direct product of no factors".into()))??;
                parts.try_fold(first, |acc, f| direct_product(&acc, &f?, caps))
            }
            Construction::Semidirect { kernel, complement, action } => {
                apply_action(&kernel.build(caps)?, &complement.build(caps)?, complement, action, caps)
            }
            Construction::SbpTypeIii { p, q } => sbp_type_iii(*p, *q, caps),
            Construction::MinimalNonNilpotent(spec) => minimal_non_nilpotent_family(spec, caps),
            Construction::Permutations { degree, generators } => {
                crate::group::group_from_permutations(*degree, generators, caps)
            }
            Construction::FromTable { source } => Err(GroupError::ParameterOutOfRange(format!(
                "group loaded from {source:?} has no formula to rebuild it"
            ))),
        }
    }

    /// The order the construction must produce, when there is a formula.
    pub fn expected_order(&self) -> Option<usize> {
        match self {
            Construction::Cyclic { n } => Some(*n),
            Construction::Dihedral { n } => Some(2 * n),
            Construction::Symmetric { n } => Some((1..=*n).product()),
            Construction::Alternating { n } => Some(((1..=*n).product::<usize>() / 2).max(1)),
            Construction::Quaternion { order } => Some(*order),
            Construction::ElementaryAbelian { p, rank } => p.checked_pow(*rank),
            Construction::DirectProduct { factors } => {
                factors.iter().try_fold(1usize, |acc, f| f.expected_order().map(|k| acc * k))
            }
            Construction::Semidirect { kernel, complement, .. } => {
                Some(kernel.expected_order()? * complement.expected_order()?)
            }
            Construction::SbpTypeIii { p, q } => {
                let a = exp_order_of(*p, *q).ok()?;
                Some((*p as usize).pow(a) * *q as usize)
            }
            Construction::MinimalNonNilpotent(spec) => {
                Some(spec.kernel.expected_order()? * spec.complement.expected_order()?)
            }
            Construction::Permutations { .. } | Construction::FromTable { .. } => None,
        }
    }
}

fn cyclic_generator(complement: &Group) -> Result<usize> {
    complement
        .elements()
        .find(|&x| complement.element_order(x) == complement.order())
        .ok_or_else(|| GroupError::InvalidAction("the complement is not cyclic".into()))
}

fn apply_action(
    kernel: &Group,
    complement: &Group,
    complement_construction: &Construction,
    action: &Action,
    caps: &Caps,
) -> Result<Group> {
    let spec = match action {
        Action::Trivial => SemidirectSpec::trivial(kernel.clone(), complement.clone()),
        Action::Inversion => {
            if !kernel.is_abelian() {
                return Err(GroupError::InvalidAction("inversion needs an abelian kernel".into()));
            }
            let inversion = GroupMap::new(kernel, kernel, kernel.elements().map(|k| kernel.inv(k)).collect())?;
            SemidirectSpec::cyclic(kernel.clone(), complement.clone(), cyclic_generator(complement)?, &inversion)?
        }
        Action::Automorphism { order } => {
            let auto = smallest_automorphism_of_order(kernel, *order, caps)?;
            SemidirectSpec::cyclic(kernel.clone(), complement.clone(), cyclic_generator(complement)?, &auto)?
        }
        Action::FirstFactor { order } => {
            let first = match complement_construction {
                Construction::DirectProduct { factors } => match factors.first() {
                    Some(Construction::Cyclic { n }) => *n,
                    _ => return Err(GroupError::InvalidAction("first factor must be cyclic".into())),
                },
                _ => return Err(GroupError::InvalidAction("complement must be a direct product".into())),
            };
            let auto = smallest_automorphism_of_order(kernel, *order, caps)?;
            let stride = complement.order() / first;
            let mut powers = vec![GroupMap::identity(kernel)];
            for i in 1..first {
                powers.push(powers[i - 1].compose(&auto));
            }
            let action = complement.elements().map(|x| powers[x / stride].clone()).collect();
            SemidirectSpec { kernel: kernel.clone(), complement: complement.clone(), action }
        }
    };
    semidirect_product(&spec, caps)
}

/// `[K]Q` for the minimal non-nilpotent family. The kernel must be a
/// `p`-group and the complement a `q`-group; the action is not restricted,
/// so negative controls can be built.
pub fn minimal_non_nilpotent_family(spec: &FamilySpec, caps: &Caps) -> Result<Group> {
    if !is_prime(spec.p) || !is_prime(spec.q) || spec.p == spec.q {
        return Err(GroupError::ParameterOutOfRange(format!("need distinct primes, got {} and {}", spec.p, spec.q)));
    }
    let kernel = spec.kernel.build(caps)?;
    let complement = spec.complement.build(caps)?;
    if kernel.order() > 1 && prime_of_power(kernel.order() as u64) != Some(spec.p) {
        return Err(GroupError::ParameterOutOfRange(format!(
            "kernel of order {} is not a {}-group",
            kernel.order(),
            spec.p
        )));
    }
    if prime_of_power(complement.order() as u64) != Some(spec.q) {
        return Err(GroupError::ParameterOutOfRange(format!(
            "complement of order {} is not a {}-group",
            complement.order(),
            spec.q
        )));
    }
    apply_action(&kernel, &complement, &spec.complement, &spec.action, caps)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub construction: Construction,
    #[serde(default)]
    pub tags: BTreeSet<String>,
    pub group: Group,
}

impl CatalogEntry {
    pub fn new(name: impl Into<String>, construction: Construction, tags: &[&str], caps: &Caps) -> Result<Self> {
        let name = name.into();
        let group = construction.build(caps)?.named(name.clone());
        Ok(CatalogEntry { name, construction, tags: tags.iter().map(|t| t.to_string()).collect(), group })
    }

    /// The order formula holds, when the construction has one.
    pub fn check(&self) -> std::result::Result<(), String> {
        match self.construction.expected_order() {
            Some(k) if k != self.group.order() => {
                Err(format!("construction promises order {k}, table has order {}", self.group.order()))
            }
            _ => Ok(()),
        }
    }

    pub fn family(&self) -> Option<&FamilySpec> {
        match &self.construction {
            Construction::MinimalNonNilpotent(spec) => Some(spec),
            _ => None,
        }
    }
}

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("cannot access {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed catalog: {0}")]
    Schema(#[from] serde_json::Error),
    #[error("catalog entry {name:?}: {reason}")]
    Invalid { name: String, reason: String },
}

/// Reads a catalog, validating every table, order formula and name.
pub fn load_catalog(path: &Path) -> std::result::Result<Vec<CatalogEntry>, CatalogError> {
    let text = fs::read_to_string(path).map_err(|source| CatalogError::Io { path: path.to_path_buf(), source })?;
    let entries: Vec<CatalogEntry> = serde_json::from_str(&text)?;
    let mut names = BTreeSet::new();
    for e in &entries {
        e.check().map_err(|reason| CatalogError::Invalid { name: e.name.clone(), reason })?;
        if !names.insert(e.name.as_str()) {
            return Err(CatalogError::Invalid { name: e.name.clone(), reason: "duplicate name".into() });
        }
    }
    Ok(entries)
}

pub fn save_catalog(entries: &[CatalogEntry], path: &Path) -> std::result::Result<(), CatalogError> {
    let text = serde_json::to_string_pretty(entries)?;
    fs::write(path, text + "\n").map_err(|source| CatalogError::Io { path: path.to_path_buf(), source })
}

pub fn find_entry<'a>(entries: &'a [CatalogEntry], name: &str) -> Option<&'a CatalogEntry> {
    entries.iter().find(|e| e.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::is_isomorphic;

    fn z(n: usize) -> Box<Construction> {
        Box::new(Construction::Cyclic { n })
    }

    #[test]
    fn family_examples() {
        let caps = Caps::default();
        let spec = |action, breaks| FamilySpec { p: 3, q: 2, kernel: z(3), complement: z(2), action, breaks };
        let s3 = minimal_non_nilpotent_family(&spec(Action::Inversion, None), &caps).unwrap();
        assert!(is_isomorphic(&s3, &symmetric(3).unwrap(), &caps).unwrap());
        let z6 = minimal_non_nilpotent_family(&spec(Action::Trivial, Some(FamilyCondition::NontrivialAction)), &caps)
            .unwrap();
        assert!(z6.is_abelian());
        let a4 = FamilySpec {
            p: 2,
            q: 3,
            kernel: Box::new(Construction::ElementaryAbelian { p: 2, rank: 2 }),
            complement: z(3),
            action: Action::Automorphism { order: 3 },
            breaks: None,
        };
        let g = minimal_non_nilpotent_family(&a4, &caps).unwrap();
        assert!(is_isomorphic(&g, &alternating(4).unwrap(), &caps).unwrap());
        let bad = FamilySpec { p: 2, ..spec(Action::Inversion, None) };
        assert!(minimal_non_nilpotent_family(&bad, &caps).is_err());
    }

    #[test]
    fn first_factor_action() {
        let caps = Caps::default();
        let c = Construction::Semidirect {
            kernel: Box::new(Construction::ElementaryAbelian { p: 2, rank: 2 }),
            complement: Box::new(Construction::DirectProduct { factors: vec![*z(3), *z(3)] }),
            action: Action::FirstFactor { order: 3 },
        };
        let g = c.build(&caps).unwrap();
        assert_eq!(g.order(), 36);
        let expected = direct_product(&alternating(4).unwrap(), &cyclic(3).unwrap(), &caps).unwrap();
        assert!(is_isomorphic(&g, &expected, &caps).unwrap());
    }

    #[test]
    fn expected_orders() {
        assert_eq!(Construction::Symmetric { n: 4 }.expected_order(), Some(24));
        assert_eq!(Construction::Alternating { n: 2 }.expected_order(), Some(1));
        assert_eq!(Construction::SbpTypeIii { p: 2, q: 7 }.expected_order(), Some(56));
        assert_eq!(Construction::FromTable { source: "x".into() }.expected_order(), None);
    }

    #[test]
    fn round_trip_and_validation() {
        let caps = Caps::default();
        let entries = vec![
            CatalogEntry::new("S3", Construction::Symmetric { n: 3 }, &["pnc"], &caps).unwrap(),
            CatalogEntry::new(
                "Dic12",
                Construction::Semidirect { kernel: z(3), complement: z(4), action: Action::Inversion },
                &[],
                &caps,
            )
            .unwrap(),
        ];
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("catalog.json");
        save_catalog(&entries, &path).unwrap();
        assert_eq!(load_catalog(&path).unwrap(), entries);

        let mut wrong = entries.clone();
        wrong[0].construction = Construction::Cyclic { n: 5 };
        save_catalog(&wrong, &path).unwrap();
        assert!(matches!(load_catalog(&path), Err(CatalogError::Invalid { .. })));

        fs::write(&path, "{\"not\": \"a list\"}").unwrap();
        assert!(matches!(load_catalog(&path), Err(CatalogError::Schema(_))));
        assert!(matches!(load_catalog(&dir.path().join("missing.json")), Err(CatalogError::Io { .. })));
    }
}
