use super::{bitset, centralizer, normalizer, Subgroup};
use crate::error::Result;
use crate::group::{quotient_group, Group};

/// `N_G(H) / C_G(H)`, the automorphisms of `H` induced by conjugation in `G`.
#[derive(Debug, Clone)]
pub struct Automizer {
    pub subject: Subgroup,
    pub normalizer: Subgroup,
    pub centralizer: Subgroup,
    pub quotient: Group,
}

impl Automizer {
    pub fn order(&self) -> usize {
        self.quotient.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.normalizer == self.centralizer
    }
}

pub fn automizer(g: &Group, h: &Subgroup) -> Result<Automizer> {
    let n = normalizer(g, h)?;
    let c = centralizer(g, h)?;
    debug_assert!(c.is_subgroup_of(&n));
    let (n_group, embedding) = n.to_group(g)?;
    let local = embedding.iter().enumerate().filter(|&(_, &a)| c.contains(a)).map(|(i, _)| i);
    let c_local = Subgroup::from_closed(&n_group, bitset(&n_group, local));
    let (quotient, _) = quotient_group(&n_group, &c_local)?;
    Ok(Automizer { subject: h.clone(), normalizer: n, centralizer: c, quotient })
}
