use std::collections::HashMap;

use super::{Group, GroupId};
use crate::caps::Caps;
use crate::error::{GroupError, Result};
use crate::exec::Exec;

/// A function between the element index spaces of two groups.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupMap {
    source: GroupId,
    target: GroupId,
    images: Vec<usize>,
}

impl GroupMap {
    pub fn new(source: &Group, target: &Group, images: Vec<usize>) -> Result<Self> {
        if images.len() != source.order() {
            return Err(GroupError::ParameterOutOfRange(format!(
                "map has {} images for a source of order {}",
                images.len(),
                source.order()
            )));
        }
        if let Some(&bad) = images.iter().find(|&&x| x >= target.order()) {
            return Err(GroupError::ElementOutOfRange { index: bad, order: target.order() });
        }
        Ok(GroupMap { source: source.id(), target: target.id(), images })
    }

    pub fn identity(g: &Group) -> Self {
        GroupMap { source: g.id(), target: g.id(), images: g.elements().collect() }
    }

    #[inline]
    pub fn image(&self, a: usize) -> usize {
        self.images[a]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn connects(&self, source: &Group, target: &Group) -> bool {
        self.source == source.id() && self.target == target.id()
    }

    pub fn is_homomorphism(&self, source: &Group, target: &Group) -> bool {
        self.connects(source, target)
            && source.elements().all(|a| {
                source.elements().all(|b| self.images[source.mul(a, b)] == target.mul(self.images[a], self.images[b]))
            })
    }

    /// Injective with every target index hit; only meaningful between
    /// groups of equal order.
    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.images.len()];
        self.images.iter().all(|&x| x < seen.len() && !std::mem::replace(&mut seen[x], true))
    }

    pub fn is_isomorphism(&self, source: &Group, target: &Group) -> bool {
        source.order() == target.order() && self.is_bijective() && self.is_homomorphism(source, target)
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn compose(&self, inner: &GroupMap) -> GroupMap {
        GroupMap {
            source: inner.source,
            target: self.target,
            images: inner.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> GroupMap {
        let mut images = vec![0; self.images.len()];
        for (a, &b) in self.images.iter().enumerate() {
            images[b] = a;
        }
        GroupMap { source: self.target, target: self.source, images }
    }
}

/// Finds an isomorphism `g1 -> g2`, or `None` when the groups differ.
///
/// Checks orders and element-order multisets, then backtracks over images of
/// a greedy generating set of `g1`, extending each partial assignment to the
/// subgroup it generates and pruning on the first inconsistency.
pub fn find_isomorphism(g1: &Group, g2: &Group, caps: &Caps) -> Result<Option<GroupMap>> {
    if g1.order() != g2.order() {
        return Ok(None);
    }
    if g1.order() > caps.iso && g2.order() > caps.iso {
        return Err(GroupError::OrderCapExceeded {
            what: "isomorphism search".into(),
            order: g1.order(),
            cap: caps.iso,
        });
    }
    if order_profile(g1) != order_profile(g2) {
        return Ok(None);
    }
    let mut found = None;
    search_maps(g1, g2, &mut |images| {
        found = Some(images.to_vec());
        true
    });
    Ok(found.map(|images| GroupMap { source: g1.id(), target: g2.id(), images }))
}

pub fn is_isomorphic(g1: &Group, g2: &Group, caps: &Caps) -> Result<bool> {
    Ok(find_isomorphism(g1, g2, caps)?.is_some())
}

fn order_profile(g: &Group) -> Vec<usize> {
    let mut orders: Vec<usize> = g.element_orders().collect();
    orders.sort_unstable();
    orders
}

/// Calls `visit` with every isomorphism `g1 -> g2` (as an image list) until
/// it returns `true`.
fn search_maps(g1: &Group, g2: &Group, visit: &mut dyn FnMut(&[usize]) -> bool) {
    let gens = g1.generating_set();
    let n = g1.order();
    let mut state = SearchState {
        g1,
        g2,
        gens: &gens,
        map: vec![usize::MAX; n],
        used: vec![false; n],
        domain: vec![g1.identity()],
        images: Vec::with_capacity(gens.len()),
    };
    state.map[g1.identity()] = g2.identity();
    state.used[g2.identity()] = true;
    state.descend(visit);
}

struct SearchState<'a> {
    g1: &'a Group,
    g2: &'a Group,
    gens: &'a [usize],
    map: Vec<usize>,
    used: Vec<bool>,
    domain: Vec<usize>,
    images: Vec<usize>,
}

impl SearchState<'_> {
    fn descend(&mut self, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let level = self.images.len();
        if level == self.gens.len() {
            return visit(&self.map);
        }
        let target_order = self.g1.element_order(self.gens[level]);
        for c in self.g2.elements() {
            if self.used[c] || self.g2.element_order(c) != target_order {
                continue;
            }
            self.images.push(c);
            let mark = self.domain.len();
            if self.extend() && self.descend(visit) {
                return true;
            }
            for &x in &self.domain[mark..] {
                self.used[self.map[x]] = false;
                self.map[x] = usize::MAX;
            }
            self.domain.truncate(mark);
            self.images.pop();
        }
        false
    }

    /// Extends the map from `<gens[..k]>` to `<gens[..=k]>`, checking that
    /// `map(x s) = map(x) map(s)` for every mapped `x` and generator `s`.
    fn extend(&mut self) -> bool {
        let mut i = 0;
        while i < self.domain.len() {
            let x = self.domain[i];
            for (j, &s) in self.gens[..self.images.len()].iter().enumerate() {
                let y = self.g1.mul(x, s);
                let y_img = self.g2.mul(self.map[x], self.images[j]);
                if self.map[y] == usize::MAX {
                    if self.used[y_img] {
                        return false;
                    }
                    self.map[y] = y_img;
                    self.used[y_img] = true;
                    self.domain.push(y);
                } else if self.map[y] != y_img {
                    return false;
                }
            }
            i += 1;
        }
        true
    }
}

/// `Aut(g)` as a concrete group, together with the automorphism each
/// element stands for.
///
/// Automorphisms are sorted by image list, so element 0 is the identity map;
/// the product of `a` and `b` is `a ∘ b`.
#[derive(Debug, Clone)]
pub struct AutomorphismGroup {
    pub group: Group,
    pub automorphisms: Vec<GroupMap>,
}

/// Every automorphism of `g`, sorted by image list.
pub fn automorphisms(g: &Group, caps: &Caps) -> Result<Vec<GroupMap>> {
    caps.check("automorphism group input", g.order(), caps.aut)?;
    let mut out = Vec::new();
    search_maps(g, g, &mut |images| {
        out.push(GroupMap { source: g.id(), target: g.id(), images: images.to_vec() });
        false
    });
    out.sort_by(|a, b| a.images.cmp(&b.images));
    Ok(out)
}

pub fn automorphism_group(g: &Group, caps: &Caps) -> Result<AutomorphismGroup> {
    let automorphisms = automorphisms(g, caps)?;
    let m = automorphisms.len();
    caps.check("automorphism group", m, caps.closure)?;
    let index: HashMap<&[usize], usize> =
        automorphisms.iter().enumerate().map(|(i, a)| (a.images.as_slice(), i)).collect();
    let mut table = Vec::with_capacity(m * m);
    for a in &automorphisms {
        for b in &automorphisms {
            table.push(index[a.compose(b).images.as_slice()] as u32);
        }
    }
    let name = g.name().map(|n| format!("Aut({n})"));
    let group = Group::from_flat(m, table, None, name, Exec::default())?;
    Ok(AutomorphismGroup { group, automorphisms })
}
