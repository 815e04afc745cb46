//! Subgroups of a concrete group and the structural subgroups built from them.

mod automizer;
mod lattice;
mod structure;

use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;

use crate::error::{GroupError, Result};
use crate::group::{Group, GroupId};
use crate::numth::is_prime_power;

pub use automizer::{automizer, Automizer};
pub use lattice::{abelian_subgroups, all_subgroups, LatticeEntry, SubgroupLattice};
pub use structure::{
    derived_series, fitting_subgroup, fitting_via_p_cores, hall_p_prime_subgroups, is_nilpotent_subgroup,
    lower_central_series, maximal_normal_subgroups, p_core, sylow_subgroups,
};

/// A subgroup of a parent group, stored as a membership bitset.
///
/// Subgroups compare by parent and members; the generating set is a
/// by-product of construction and does not take part in equality.
#[derive(Clone, Debug)]
pub struct Subgroup {
    parent: GroupId,
    members: FixedBitSet,
    order: usize,
    gens: Vec<usize>,
}

impl Subgroup {
    pub fn trivial(g: &Group) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(g.order());
        members.insert(g.identity());
        Subgroup { parent: g.id(), members, order: 1, gens: Vec::new() }
    }

    pub fn whole(g: &Group) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(g.order());
        members.insert_range(..);
        Subgroup { parent: g.id(), members, order: g.order(), gens: g.generating_set() }
    }

    /// Validates that `elements` form a subgroup of `g`.
    pub fn from_members(g: &Group, elements: impl IntoIterator<Item = usize>) -> Result<Subgroup> {
        let mut members = FixedBitSet::with_capacity(g.order());
        for a in elements {
            if a >= g.order() {
                return Err(GroupError::ElementOutOfRange { index: a, order: g.order() });
            }
            members.insert(a);
        }
        if !members.contains(g.identity()) {
            return Err(GroupError::ParameterOutOfRange("subset does not contain the identity".into()));
        }
        let list: Vec<usize> = members.ones().collect();
        for &a in &list {
            if !members.contains(g.inv(a)) {
                return Err(GroupError::ParameterOutOfRange(format!("subset lacks the inverse of {a}")));
            }
            for &b in &list {
                if !members.contains(g.mul(a, b)) {
                    return Err(GroupError::ParameterOutOfRange(format!("subset not closed at ({a}, {b})")));
                }
            }
        }
        Ok(Subgroup::from_closed(g, members))
    }

    /// Wraps a set already known to be a subgroup, computing a generating set.
    pub(crate) fn from_closed(g: &Group, members: FixedBitSet) -> Subgroup {
        let order = members.count_ones(..);
        let mut gens = Vec::new();
        let mut inside = vec![false; g.order()];
        let mut reached = vec![g.identity()];
        inside[g.identity()] = true;
        while reached.len() < order {
            let x = members
                .ones()
                .filter(|&a| !inside[a])
                .max_by_key(|&a| (g.element_order(a), std::cmp::Reverse(a)))
                .expect("subgroup has an element outside the current closure");
            gens.push(x);
            reached = g.close(&reached, &mut inside, &gens);
        }
        Subgroup { parent: g.id(), members, order, gens }
    }

    pub(crate) fn from_parts(g: &Group, members: FixedBitSet, gens: Vec<usize>) -> Subgroup {
        let order = members.count_ones(..);
        Subgroup { parent: g.id(), members, order, gens }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn contains(&self, a: usize) -> bool {
        self.members.contains(a)
    }

    pub fn elements(&self) -> Vec<usize> {
        self.members.ones().collect()
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    /// Some set of elements that generates this subgroup.
    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    pub fn parent_id(&self) -> GroupId {
        self.parent
    }

    pub fn belongs_to(&self, g: &Group) -> bool {
        self.parent == g.id() && self.members.len() == g.order()
    }

    pub(crate) fn check_parent(&self, g: &Group) -> Result<()> {
        if self.belongs_to(g) {
            Ok(())
        } else {
            Err(GroupError::ParentMismatch)
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.parent == other.parent && self.members.is_subset(&other.members)
    }

    pub fn has_prime_power_order(&self) -> bool {
        is_prime_power(self.order as u64)
    }

    pub fn is_abelian(&self, g: &Group) -> bool {
        let gens = &self.gens;
        gens.iter().enumerate().all(|(i, &a)| gens[i + 1..].iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }

    /// An element of `g` that does not normalize this subgroup, if any.
    pub fn non_normalizing_element(&self, g: &Group) -> Option<usize> {
        g.elements().find(|&a| self.gens.iter().any(|&h| !self.contains(g.conj(a, h))))
    }

    pub fn is_normal(&self, g: &Group) -> bool {
        self.non_normalizing_element(g).is_none()
    }

    pub fn intersection(&self, g: &Group, other: &Subgroup) -> Result<Subgroup> {
        self.check_parent(g)?;
        other.check_parent(g)?;
        let mut members = self.members.clone();
        members.intersect_with(&other.members);
        Ok(Subgroup::from_closed(g, members))
    }

    /// The subgroup generated by both.
    pub fn join(&self, g: &Group, other: &Subgroup) -> Result<Subgroup> {
        self.check_parent(g)?;
        other.check_parent(g)?;
        let mut seed = self.gens.clone();
        seed.extend_from_slice(&other.gens);
        generated_subgroup(g, &seed)
    }

    /// The subgroup as a standalone group, plus the embedding of its
    /// elements (in increasing index order) into the parent.
    pub fn to_group(&self, g: &Group) -> Result<(Group, Vec<usize>)> {
        self.check_parent(g)?;
        let elements = self.elements();
        let mut local = vec![usize::MAX; g.order()];
        for (i, &a) in elements.iter().enumerate() {
            local[a] = i;
        }
        let k = elements.len();
        let mut table = Vec::with_capacity(k * k);
        for &a in &elements {
            for &b in &elements {
                table.push(local[g.mul(a, b)] as u32);
            }
        }
        let labels = elements.iter().map(|&a| g.label(a)).collect();
        let group = Group::from_flat(k, table, Some(labels), None, crate::exec::Exec::Sequential)?;
        Ok((group, elements))
    }

    /// Image of a subgroup of a standalone copy under its embedding.
    pub(crate) fn lift(g: &Group, local: &Subgroup, embedding: &[usize]) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(g.order());
        for a in local.members.ones() {
            members.insert(embedding[a]);
        }
        let gens = local.gens.iter().map(|&a| embedding[a]).collect();
        Subgroup::from_parts(g, members, gens)
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.parent == other.parent && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.parent.hash(state);
        self.members.as_slice().hash(state);
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subgroup {
    /// By order, then by sorted member list.
    fn cmp(&self, other: &Self) -> Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.members.ones().cmp(other.members.ones()))
            .then_with(|| self.parent.cmp(&other.parent))
    }
}

pub(crate) fn bitset(g: &Group, elements: impl IntoIterator<Item = usize>) -> FixedBitSet {
    let mut set = FixedBitSet::with_capacity(g.order());
    set.extend(elements);
    set
}

/// The smallest subgroup containing `seed`.
pub fn generated_subgroup(g: &Group, seed: &[usize]) -> Result<Subgroup> {
    if let Some(&bad) = seed.iter().find(|&&a| a >= g.order()) {
        return Err(GroupError::ElementOutOfRange { index: bad, order: g.order() });
    }
    let mut gens: Vec<usize> = Vec::new();
    let mut inside = vec![false; g.order()];
    inside[g.identity()] = true;
    let mut reached = vec![g.identity()];
    for &x in seed {
        if !inside[x] {
            gens.push(x);
            reached = g.close(&reached, &mut inside, &gens);
        }
    }
    Ok(Subgroup::from_parts(g, bitset(g, reached), gens))
}

/// `{a : a x = x a for all x in h}`
pub fn centralizer(g: &Group, h: &Subgroup) -> Result<Subgroup> {
    h.check_parent(g)?;
    let members = g.elements().filter(|&a| h.gens.iter().all(|&x| g.mul(a, x) == g.mul(x, a)));
    Ok(Subgroup::from_closed(g, bitset(g, members)))
}

/// `{a : a h a^-1 = h}`
pub fn normalizer(g: &Group, h: &Subgroup) -> Result<Subgroup> {
    h.check_parent(g)?;
    let members = g.elements().filter(|&a| h.gens.iter().all(|&x| h.contains(g.conj(a, x))));
    Ok(Subgroup::from_closed(g, bitset(g, members)))
}

pub fn center(g: &Group) -> Subgroup {
    centralizer(g, &Subgroup::whole(g)).expect("whole group belongs to g")
}

/// `[a, b]` for subgroups `a` and `b`: generated by all `x y x^-1 y^-1`.
pub fn commutator_subgroup(g: &Group, a: &Subgroup, b: &Subgroup) -> Result<Subgroup> {
    a.check_parent(g)?;
    b.check_parent(g)?;
    let mut seen = FixedBitSet::with_capacity(g.order());
    let mut seed = Vec::new();
    for x in a.members.ones() {
        for y in b.members.ones() {
            let c = g.commutator(x, y);
            if !seen.put(c) {
                seed.push(c);
            }
        }
    }
    generated_subgroup(g, &seed)
}

pub fn derived_subgroup(g: &Group) -> Subgroup {
    let whole = Subgroup::whole(g);
    commutator_subgroup(g, &whole, &whole).expect("whole group belongs to g")
}
