use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use super::{bitset, Subgroup};
use crate::caps::Caps;
use crate::error::{GroupError, Result};
use crate::group::Group;

#[derive(Debug, Clone)]
pub struct LatticeEntry {
    pub subgroup: Subgroup,
    pub normal: bool,
    pub abelian: bool,
    pub prime_power: bool,
}

/// Every subgroup of a group, deduplicated and sorted by order then members.
#[derive(Debug, Clone)]
pub struct SubgroupLattice {
    group: Group,
    entries: Vec<LatticeEntry>,
}

impl SubgroupLattice {
    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn entries(&self) -> &[LatticeEntry] {
        &self.entries
    }

    pub fn subgroups(&self) -> impl Iterator<Item = &Subgroup> {
        self.entries.iter().map(|e| &e.subgroup)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn position(&self, h: &Subgroup) -> Option<usize> {
        self.entries.binary_search_by(|e| e.subgroup.cmp(h)).ok()
    }

    pub fn normal(&self) -> impl Iterator<Item = &Subgroup> {
        self.entries.iter().filter(|e| e.normal).map(|e| &e.subgroup)
    }

    pub fn abelian(&self) -> impl Iterator<Item = &Subgroup> {
        self.entries.iter().filter(|e| e.abelian).map(|e| &e.subgroup)
    }

    pub fn proper(&self) -> impl Iterator<Item = &Subgroup> {
        let n = self.group.order();
        self.subgroups().filter(move |h| h.order() < n)
    }
}

/// Enumerates all subgroups: cyclic subgroups first, then joins of each
/// known subgroup with each cyclic subgroup until nothing new appears.
///
/// Every subgroup is a join of cyclic subgroups, so the fixpoint is complete.
pub fn all_subgroups(g: &Group, caps: &Caps) -> Result<SubgroupLattice> {
    caps.check("subgroup lattice", g.order(), caps.lattice)?;
    let subgroups = join_closure(g, caps, false)?;
    Ok(build(g, subgroups))
}

/// Every abelian subgroup, by the same fixpoint restricted to joins with
/// cyclic subgroups that centralize the current subgroup.
pub fn abelian_subgroups(g: &Group, caps: &Caps) -> Result<Vec<Subgroup>> {
    caps.check("abelian subgroup enumeration", g.order(), caps.closure)?;
    let mut subgroups = join_closure(g, caps, true)?;
    subgroups.sort();
    Ok(subgroups)
}

fn build(g: &Group, mut subgroups: Vec<Subgroup>) -> SubgroupLattice {
    subgroups.sort();
    let entries = subgroups
        .into_iter()
        .map(|h| LatticeEntry {
            normal: h.is_normal(g),
            abelian: h.is_abelian(g),
            prime_power: h.has_prime_power_order(),
            subgroup: h,
        })
        .collect();
    SubgroupLattice { group: g.clone(), entries }
}

fn join_closure(g: &Group, caps: &Caps, abelian_only: bool) -> Result<Vec<Subgroup>> {
    let n = g.order();
    let mut index: HashMap<FixedBitSet, usize> = HashMap::new();
    let mut subgroups: Vec<Subgroup> = Vec::new();
    // One generator per distinct cyclic subgroup.
    let mut cyclic_gens: Vec<usize> = Vec::new();
    for a in g.elements() {
        let mut members = vec![g.identity()];
        let mut x = a;
        while x != g.identity() {
            members.push(x);
            x = g.mul(x, a);
        }
        let set = bitset(g, members);
        if !index.contains_key(&set) {
            index.insert(set.clone(), subgroups.len());
            let gens = if a == g.identity() { Vec::new() } else { vec![a] };
            subgroups.push(Subgroup::from_parts(g, set, gens));
            if a != g.identity() {
                cyclic_gens.push(a);
            }
        }
    }
    if subgroups.len() > caps.lattice_size {
        return Err(GroupError::LatticeBlowup { cap: caps.lattice_size });
    }
    let mut inside = vec![false; n];
    let mut i = 0;
    while i < subgroups.len() {
        for &x in &cyclic_gens {
            let h = &subgroups[i];
            if h.contains(x) {
                continue;
            }
            if abelian_only && h.gens.iter().any(|&s| g.mul(s, x) != g.mul(x, s)) {
                continue;
            }
            let members = h.elements();
            let mut gens = h.gens.clone();
            gens.push(x);
            inside.fill(false);
            let reached = g.close(&members, &mut inside, &gens);
            let set = bitset(g, reached);
            if index.contains_key(&set) {
                continue;
            }
            if subgroups.len() >= caps.lattice_size {
                return Err(GroupError::LatticeBlowup { cap: caps.lattice_size });
            }
            index.insert(set.clone(), subgroups.len());
            subgroups.push(Subgroup::from_parts(g, set, gens));
        }
        i += 1;
    }
    Ok(subgroups)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exec::Exec;
    use crate::group::{cyclic_table, direct_product, group_from_permutations};

    fn z(n: usize) -> Group {
        Group::from_flat(n, cyclic_table(n), None, None, Exec::Sequential).unwrap()
    }

    #[test]
    fn prime_cyclic_has_two_subgroups() {
        for p in [2, 3, 5, 7, 11] {
            assert_eq!(all_subgroups(&z(p), &Caps::default()).unwrap().len(), 2);
        }
    }

    #[test]
    fn small_lattices() {
        let caps = Caps::default();
        let s3 = group_from_permutations(3, &["(1 2 3)", "(1 2)"], &caps).unwrap();
        let lattice = all_subgroups(&s3, &caps).unwrap();
        let orders: Vec<usize> = lattice.subgroups().map(Subgroup::order).collect();
        assert_eq!(orders, vec![1, 2, 2, 2, 3, 6]);
        let v4 = direct_product(&z(2), &z(2), &caps).unwrap();
        assert_eq!(all_subgroups(&v4, &caps).unwrap().len(), 5);
    }

    #[test]
    fn lattice_is_closed_under_intersection() {
        let caps = Caps::default();
        let s4 = group_from_permutations(4, &["(1 2 3 4)", "(1 2)"], &caps).unwrap();
        let lattice = all_subgroups(&s4, &caps).unwrap();
        assert_eq!(lattice.len(), 30);
        for a in lattice.subgroups() {
            for b in lattice.subgroups() {
                let c = a.intersection(&s4, b).unwrap();
                assert!(lattice.position(&c).is_some());
            }
        }
    }

    #[test]
    fn abelian_enumeration_matches_lattice_filter() {
        let caps = Caps::default();
        let s4 = group_from_permutations(4, &["(1 2 3 4)", "(1 2)"], &caps).unwrap();
        let lattice = all_subgroups(&s4, &caps).unwrap();
        let filtered: Vec<Subgroup> = lattice.abelian().cloned().collect();
        assert_eq!(abelian_subgroups(&s4, &caps).unwrap(), filtered);
    }

    #[test]
    fn caps_are_errors() {
        let caps = Caps { lattice: 10, ..Caps::default() };
        assert!(matches!(all_subgroups(&z(12), &caps), Err(GroupError::OrderCapExceeded { .. })));
        let caps = Caps { lattice_size: 3, ..Caps::default() };
        assert!(matches!(all_subgroups(&z(12), &caps), Err(GroupError::LatticeBlowup { cap: 3 })));
    }
}
