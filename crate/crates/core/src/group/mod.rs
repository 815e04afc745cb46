//! Finite groups as validated Cayley tables, plus constructions on them.

mod iso;
mod perm;
mod product;
mod quotient;

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{GroupError, Result};
use crate::exec::Exec;

pub use iso::{automorphism_group, automorphisms, find_isomorphism, is_isomorphic, AutomorphismGroup, GroupMap};
pub use perm::{format_cycles, group_from_permutations, parse_permutation, Permutation, PermutationGroupJson};
pub use product::{direct_product, semidirect_product, SemidirectSpec};
pub use quotient::quotient_group;

/// Full associativity is checked triple by triple up to this order; above it,
/// only products against a generating set are checked.
const FULL_ASSOCIATIVITY_LIMIT: usize = 256;

/// Content fingerprint of a Cayley table. Equal tables give equal ids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupId(u64);

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:016x}", self.0)
    }
}

/// A finite group given by its multiplication table on `0..order`.
///
/// Cloning is cheap; the table is shared.
#[derive(Clone)]
pub struct Group {
    inner: Arc<GroupData>,
}

struct GroupData {
    order: usize,
    table: Vec<u32>,
    identity: usize,
    inverses: Vec<u32>,
    element_orders: Vec<u32>,
    labels: Option<Vec<String>>,
    name: Option<String>,
    id: GroupId,
}

impl Group {
    /// Validates `table` (rows indexed by the left factor) and builds a group.
    pub fn from_table(table: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Group> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::EmptyTable);
        }
        let mut flat = Vec::with_capacity(n * n);
        for (row, entries) in table.iter().enumerate() {
            if entries.len() != n {
                return Err(GroupError::NotSquare { row, len: entries.len(), expected: n });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= n {
                    return Err(GroupError::EntryOutOfRange { row, col, value, order: n });
                }
                flat.push(value as u32);
            }
        }
        Group::from_flat(n, flat, labels, None, Exec::default())
    }

    /// Builds a group from a row-major flat table, running every validation.
    pub fn from_flat(
        order: usize,
        table: Vec<u32>,
        labels: Option<Vec<String>>,
        name: Option<String>,
        exec: Exec,
    ) -> Result<Group> {
        let n = order;
        if n == 0 {
            return Err(GroupError::EmptyTable);
        }
        if table.len() != n * n {
            return Err(GroupError::NotSquare { row: 0, len: table.len(), expected: n * n });
        }
        if let Some(bad) = table.iter().position(|&v| v as usize >= n) {
            return Err(GroupError::EntryOutOfRange {
                row: bad / n,
                col: bad % n,
                value: table[bad] as usize,
                order: n,
            });
        }
        if let Some(labels) = &labels {
            if labels.len() != n {
                return Err(GroupError::LabelCount(labels.len(), n));
            }
        }
        check_latin(n, &table)?;
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e * n + a] as usize == a && table[a * n + e] as usize == a))
            .ok_or(GroupError::NoIdentity)?;
        let mut inverses = vec![0u32; n];
        for a in 0..n {
            // Latin rows guarantee a unique right inverse; it must also be a left inverse.
            let b = (0..n).find(|&b| table[a * n + b] as usize == identity).ok_or(GroupError::NoInverse(a))?;
            if table[b * n + a] as usize != identity {
                return Err(GroupError::NoInverse(a));
            }
            inverses[a] = b as u32;
        }
        check_associative(n, &table, identity, exec)?;

        let element_orders = (0..n)
            .map(|a| {
                let mut x = a;
                let mut k = 1;
                while x != identity {
                    x = table[x * n + a] as usize;
                    k += 1;
                }
                k
            })
            .collect();
        let mut hasher = DefaultHasher::new();
        n.hash(&mut hasher);
        table.hash(&mut hasher);
        let id = GroupId(hasher.finish());
        Ok(Group {
            inner: Arc::new(GroupData { order: n, table, identity, inverses, element_orders, labels, name, id }),
        })
    }

    /// The trivial group.
    pub fn trivial() -> Group {
        Group::from_flat(1, vec![0], None, Some("1".into()), Exec::Sequential).expect("trivial table is valid")
    }

    /// Same group under a new display name.
    pub fn named(&self, name: impl Into<String>) -> Group {
        let d = &self.inner;
        Group {
            inner: Arc::new(GroupData {
                order: d.order,
                table: d.table.clone(),
                identity: d.identity,
                inverses: d.inverses.clone(),
                element_orders: d.element_orders.clone(),
                labels: d.labels.clone(),
                name: Some(name.into()),
                id: d.id,
            }),
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.inner.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.inner.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.inner.table[a * self.inner.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inner.inverses[a] as usize
    }

    /// `a * b * a^-1`
    #[inline]
    pub fn conj(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.inv(a))
    }

    /// `a * b * a^-1 * b^-1`
    #[inline]
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        let k = k % self.element_order(a);
        (0..k).fold(self.identity(), |acc, _| self.mul(acc, a))
    }

    #[inline]
    pub fn element_order(&self, a: usize) -> usize {
        self.inner.element_orders[a] as usize
    }

    pub fn element_orders(&self) -> impl Iterator<Item = usize> + '_ {
        self.inner.element_orders.iter().map(|&k| k as usize)
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn id(&self) -> GroupId {
        self.inner.id
    }

    pub fn name(&self) -> Option<&str> {
        self.inner.name.as_deref()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.inner.labels.as_deref()
    }

    /// Display label of element `a`, or its index when unlabelled.
    pub fn label(&self, a: usize) -> String {
        match &self.inner.labels {
            Some(labels) => labels[a].clone(),
            None => a.to_string(),
        }
    }

    /// Index of the element whose label is exactly `label`.
    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.inner.labels.as_ref()?.iter().position(|l| l == label)
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        self.inner.table.chunks(n).map(|row| row.iter().map(|&v| v as usize).collect()).collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.first_noncommuting_pair().is_none()
    }

    pub fn first_noncommuting_pair(&self) -> Option<(usize, usize)> {
        let n = self.order();
        (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).find(|&(a, b)| self.mul(a, b) != self.mul(b, a))
    }

    /// Greedy generating set: repeatedly adds the element of largest order
    /// outside the subgroup generated so far.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut inside = vec![false; self.order()];
        inside[self.identity()] = true;
        let mut members = vec![self.identity()];
        loop {
            let next =
                self.elements().filter(|&a| !inside[a]).max_by_key(|&a| (self.element_order(a), std::cmp::Reverse(a)));
            let Some(x) = next else { break };
            gens.push(x);
            members = self.close(&members, &mut inside, &gens);
        }
        gens
    }

    /// Extends `members` (already a subgroup, flagged in `inside`) to the
    /// subgroup generated together with `gens`.
    pub(crate) fn close(&self, members: &[usize], inside: &mut [bool], gens: &[usize]) -> Vec<usize> {
        let mut out = members.to_vec();
        for &m in members {
            inside[m] = true;
        }
        let mut i = 0;
        while i < out.len() {
            let x = out[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    out.push(y);
                }
            }
            i += 1;
        }
        out
    }
}

fn check_latin(n: usize, table: &[u32]) -> Result<()> {
    let mut seen = vec![usize::MAX; n];
    for r in 0..n {
        for c in 0..n {
            let v = table[r * n + c] as usize;
            if seen[v] == r {
                return Err(GroupError::NotLatinSquare { line: format!("row {r}"), element: v });
            }
            seen[v] = r;
        }
    }
    seen.fill(usize::MAX);
    for c in 0..n {
        for r in 0..n {
            let v = table[r * n + c] as usize;
            if seen[v] == c {
                return Err(GroupError::NotLatinSquare { line: format!("column {c}"), element: v });
            }
            seen[v] = c;
        }
    }
    Ok(())
}

fn check_associative(n: usize, table: &[u32], identity: usize, exec: Exec) -> Result<()> {
    let mul = |a: usize, b: usize| table[a * n + b] as usize;
    let middles: Vec<usize> =
        if n <= FULL_ASSOCIATIVITY_LIMIT { (0..n).collect() } else { semigroup_generators(n, table, identity) };
    let violation = exec.find_first(n, |a| {
        for &b in &middles {
            let ab = mul(a, b);
            for c in 0..n {
                if mul(ab, c) != mul(a, mul(b, c)) {
                    return Some((a, b, c));
                }
            }
        }
        None
    });
    match violation {
        Some((a, b, c)) => Err(GroupError::NotAssociative(a, b, c)),
        None => Ok(()),
    }
}

/// Elements whose right-multiplication closure from the identity covers the
/// whole table.
fn semigroup_generators(n: usize, table: &[u32], identity: usize) -> Vec<usize> {
    let mut inside = vec![false; n];
    inside[identity] = true;
    let mut reached = vec![identity];
    let mut gens = Vec::new();
    while reached.len() < n {
        let x = (0..n).find(|&a| !inside[a]).expect("some element is unreached");
        gens.push(x);
        let mut i = 0;
        while i < reached.len() {
            let r = reached[i];
            for &g in &gens {
                let y = table[r * n + g] as usize;
                if !inside[y] {
                    inside[y] = true;
                    reached.push(y);
                }
            }
            i += 1;
        }
        // Earlier members must also be multiplied by the new generator.
        let mut j = 0;
        while j < reached.len() {
            let y = table[reached[j] * n + x] as usize;
            if !inside[y] {
                inside[y] = true;
                reached.push(y);
            }
            j += 1;
        }
    }
    gens
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group").field("name", &self.name()).field("order", &self.order()).finish_non_exhaustive()
    }
}

impl PartialEq for Group {
    /// Equal as tables, not merely isomorphic.
    fn eq(&self, other: &Self) -> bool {
        self.order() == other.order() && self.inner.table == other.inner.table
    }
}

impl Eq for Group {}

/// JSON form: `{"name": str, "order": n, "table": [[...]], "labels": [...]}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct GroupJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl From<&Group> for GroupJson {
    fn from(g: &Group) -> Self {
        GroupJson {
            name: g.name().map(str::to_string),
            order: g.order(),
            table: g.rows(),
            labels: g.labels().map(<[String]>::to_vec),
        }
    }
}

impl TryFrom<GroupJson> for Group {
    type Error = GroupError;

    fn try_from(json: GroupJson) -> Result<Group> {
        if json.table.len() != json.order {
            return Err(GroupError::NotSquare { row: 0, len: json.table.len(), expected: json.order });
        }
        let g = Group::from_table(json.table, json.labels)?;
        Ok(match json.name {
            Some(name) => g.named(name),
            None => g,
        })
    }
}

impl Serialize for Group {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GroupJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Group {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Group, D::Error> {
        let json = GroupJson::deserialize(d)?;
        Group::try_from(json).map_err(serde::de::Error::custom)
    }
}

/// Table of `Z_n`, for tests that avoid the catalog module.
#[cfg(test)]
pub(crate) fn cyclic_table(n: usize) -> Vec<u32> {
    (0..n).flat_map(|a| (0..n).map(move |b| ((a + b) % n) as u32)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize) -> Group {
        Group::from_flat(n, cyclic_table(n), None, None, Exec::Sequential).unwrap()
    }

    #[test]
    fn trivial_and_z2() {
        let t = Group::from_table(vec![vec![0]], None).unwrap();
        assert_eq!(t.order(), 1);
        let z2 = Group::from_table(vec![vec![0, 1], vec![1, 0]], None).unwrap();
        assert_eq!(z2.order(), 2);
        assert_eq!(z2.element_order(1), 2);
        assert!(z2.is_abelian());
    }

    #[test]
    fn rejects_deliberate_violation() {
        let err = Group::from_table(vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 1, 0]], None).unwrap_err();
        assert!(matches!(err, GroupError::NotLatinSquare { .. } | GroupError::NotAssociative(..)), "{err}");
    }

    #[test]
    fn rejects_non_associative_latin_square() {
        // Latin square with identity 0 whose 5-element loop is not a group.
        let table = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = Group::from_table(table, None).unwrap_err();
        assert!(matches!(err, GroupError::NotAssociative(..)), "{err}");
    }

    #[test]
    fn rejects_shape_errors() {
        assert_eq!(Group::from_table(vec![], None).unwrap_err(), GroupError::EmptyTable);
        assert!(matches!(
            Group::from_table(vec![vec![0, 1], vec![1]], None).unwrap_err(),
            GroupError::NotSquare { row: 1, .. }
        ));
        assert!(matches!(
            Group::from_table(vec![vec![0, 2], vec![1, 0]], None).unwrap_err(),
            GroupError::EntryOutOfRange { .. }
        ));
        // Latin square with no identity.
        assert_eq!(
            Group::from_table(vec![vec![0, 2, 1], vec![2, 1, 0], vec![1, 0, 2]], None).unwrap_err(),
            GroupError::NoIdentity
        );
    }

    #[test]
    fn generating_set_of_cyclic_is_one_element() {
        assert_eq!(z(12).generating_set().len(), 1);
        assert!(z(1).generating_set().is_empty());
    }

    #[test]
    fn light_test_path_accepts_large_cyclic() {
        let g = z(300);
        assert_eq!(g.order(), 300);
        let mut t = cyclic_table(300);
        // Swap two rows: still Latin but breaks associativity/identity.
        for c in 0..300 {
            t.swap(300 + c, 2 * 300 + c);
        }
        assert!(Group::from_flat(300, t, None, None, Exec::Sequential).is_err());
    }

    #[test]
    fn json_round_trip() {
        let g = z(5).named("Z5");
        let text = serde_json::to_string(&g).unwrap();
        let back: Group = serde_json::from_str(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.name(), Some("Z5"));
    }
}
