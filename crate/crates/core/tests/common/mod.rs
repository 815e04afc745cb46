//! Brute-force oracles shared by the integration tests.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::OnceLock;

use automizer_core::catalog::{default_catalog, CatalogEntry};
use automizer_core::numth::{factorize, p_part};
use automizer_core::subgroup::generated_subgroup;
use automizer_core::{Caps, Group, Subgroup};

pub fn catalog() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| default_catalog(&Caps::default()).expect("default catalog builds"))
}

pub fn entry(name: &str) -> &'static CatalogEntry {
    catalog().iter().find(|e| e.name == name).unwrap_or_else(|| panic!("no entry {name}"))
}

/// Trial division, independent of the library's number theory.
pub fn is_prime_power(n: usize) -> bool {
    if n < 2 {
        return n == 1;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d)).unwrap();
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
    }
    m == 1
}

pub fn mask(h: &Subgroup) -> u32 {
    h.elements().iter().fold(0, |m, &a| m | (1 << a))
}

/// Every subset containing the identity that is closed under the product.
pub fn brute_force_subgroups(g: &Group) -> BTreeSet<u32> {
    let n = g.order();
    let e = g.identity();
    let mut found = BTreeSet::new();
    for set in 0u32..(1 << n) {
        if set & (1 << e) == 0 {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&a| set & (1 << a) != 0).collect();
        let closed = members.iter().all(|&a| members.iter().all(|&b| set & (1 << g.mul(a, b)) != 0));
        if closed {
            found.insert(set);
        }
    }
    found
}

/// O_p(G) as the intersection of all Sylow p-subgroups, found by order.
fn p_core_by_intersection(g: &Group, subgroups: &[Subgroup], p: u64) -> BTreeSet<usize> {
    let sylow_order = p_part(g.order() as u64, p) as usize;
    let mut core: BTreeSet<usize> = g.elements().collect();
    for s in subgroups.iter().filter(|s| s.order() == sylow_order) {
        let members: BTreeSet<usize> = s.elements().into_iter().collect();
        core = core.intersection(&members).copied().collect();
    }
    core
}

/// F(G) as the subgroup generated by all p-cores.
pub fn fitting_oracle(g: &Group, subgroups: &[Subgroup]) -> BTreeSet<usize> {
    let mut generators = Vec::new();
    for (p, _) in factorize(g.order() as u64) {
        generators.extend(p_core_by_intersection(g, subgroups, p));
    }
    generated_subgroup(g, &generators).unwrap().elements().into_iter().collect()
}
