use super::{Group, GroupMap};
use crate::caps::Caps;
use crate::error::{GroupError, Result};
use crate::exec::Exec;

fn product_name(a: &Group, b: &Group, sep: &str) -> Option<String> {
    Some(format!("{}{sep}{}", a.name()?, b.name()?))
}

/// `g1 × g2`; element `(a, b)` has index `a * |g2| + b`.
pub fn direct_product(g1: &Group, g2: &Group, caps: &Caps) -> Result<Group> {
    let (n1, n2) = (g1.order(), g2.order());
    caps.check("direct product", n1 * n2, caps.closure)?;
    let n = n1 * n2;
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        let (a1, b1) = (x / n2, x % n2);
        for y in 0..n {
            let (a2, b2) = (y / n2, y % n2);
            table.push((g1.mul(a1, a2) * n2 + g2.mul(b1, b2)) as u32);
        }
    }
    let labels = (0..n).map(|x| format!("({},{})", g1.label(x / n2), g2.label(x % n2))).collect();
    Group::from_flat(n, table, Some(labels), product_name(g1, g2, "x"), Exec::default())
}

/// Data for a split extension `[kernel] complement`.
///
/// `action[q]` is the automorphism of `kernel` by which complement element
/// `q` acts.
#[derive(Debug, Clone)]
pub struct SemidirectSpec {
    pub kernel: Group,
    pub complement: Group,
    pub action: Vec<GroupMap>,
}

impl SemidirectSpec {
    /// The action sending every complement element to the identity map.
    pub fn trivial(kernel: Group, complement: Group) -> Self {
        let id = GroupMap::identity(&kernel);
        let action = vec![id; complement.order()];
        SemidirectSpec { kernel, complement, action }
    }

    /// Action of a cyclic complement whose generator `gen` acts by `auto`.
    ///
    /// Fails unless the order of `auto` divides the order of `gen`.
    pub fn cyclic(kernel: Group, complement: Group, gen: usize, auto: &GroupMap) -> Result<Self> {
        let k = complement.order();
        let mut action = vec![GroupMap::identity(&kernel); k];
        let mut element = complement.identity();
        let mut map = GroupMap::identity(&kernel);
        let mut seen = 0;
        loop {
            action[element] = map.clone();
            seen += 1;
            element = complement.mul(element, gen);
            map = map.compose(auto);
            if element == complement.identity() {
                break;
            }
        }
        if seen != k {
            return Err(GroupError::InvalidAction(format!(
                "element {gen} does not generate the complement of order {k}"
            )));
        }
        if map != GroupMap::identity(&kernel) {
            return Err(GroupError::InvalidAction("automorphism order does not divide the generator order".into()));
        }
        Ok(SemidirectSpec { kernel, complement, action })
    }

    /// Checks both action invariants: entries are automorphisms, and the
    /// action is a homomorphism into them.
    pub fn validate(&self) -> Result<()> {
        let (kernel, complement) = (&self.kernel, &self.complement);
        if self.action.len() != complement.order() {
            return Err(GroupError::InvalidAction(format!(
                "{} action entries for a complement of order {}",
                self.action.len(),
                complement.order()
            )));
        }
        for (q, map) in self.action.iter().enumerate() {
            if map.len() != kernel.order() || !map.is_homomorphism(kernel, kernel) || !map.is_bijective() {
                return Err(GroupError::InvalidAction(format!("entry {q} is not an automorphism of the kernel")));
            }
        }
        for q1 in complement.elements() {
            for q2 in complement.elements() {
                let lhs = &self.action[complement.mul(q1, q2)];
                if *lhs != self.action[q1].compose(&self.action[q2]) {
                    return Err(GroupError::InvalidAction(format!("action is not a homomorphism at ({q1}, {q2})")));
                }
            }
        }
        Ok(())
    }
}

/// `[kernel] complement` with `(k1, q1)(k2, q2) = (k1 · q1(k2), q1 q2)`.
///
/// Element `(k, q)` has index `k * |complement| + q`, so a trivial action
/// reproduces [`direct_product`] exactly.
pub fn semidirect_product(spec: &SemidirectSpec, caps: &Caps) -> Result<Group> {
    spec.validate()?;
    let (kernel, complement) = (&spec.kernel, &spec.complement);
    let (nk, nq) = (kernel.order(), complement.order());
    caps.check("semidirect product", nk * nq, caps.closure)?;
    let n = nk * nq;
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        let (k1, q1) = (x / nq, x % nq);
        let act = &spec.action[q1];
        for y in 0..n {
            let (k2, q2) = (y / nq, y % nq);
            table.push((kernel.mul(k1, act.image(k2)) * nq + complement.mul(q1, q2)) as u32);
        }
    }
    let labels = (0..n).map(|x| format!("({},{})", kernel.label(x / nq), complement.label(x % nq))).collect();
    Group::from_flat(n, table, Some(labels), product_name(kernel, complement, ":"), Exec::default())
}
