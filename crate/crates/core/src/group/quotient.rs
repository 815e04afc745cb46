use super::{Group, GroupMap};
use crate::error::{GroupError, Result};
use crate::exec::Exec;
use crate::subgroup::Subgroup;

/// `g / n` with cosets numbered by their smallest element, and the
/// projection `g -> g / n`.
pub fn quotient_group(g: &Group, n: &Subgroup) -> Result<(Group, GroupMap)> {
    n.check_parent(g)?;
    if let Some(witness) = n.non_normalizing_element(g) {
        return Err(GroupError::NotNormal { witness });
    }
    let mut coset = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    let kernel = n.elements();
    for a in g.elements() {
        if coset[a] == usize::MAX {
            for &k in &kernel {
                coset[g.mul(a, k)] = reps.len();
            }
            reps.push(a);
        }
    }
    let m = reps.len();
    let mut table = Vec::with_capacity(m * m);
    for &a in &reps {
        for &b in &reps {
            table.push(coset[g.mul(a, b)] as u32);
        }
    }
    let labels = reps.iter().map(|&a| format!("{}N", g.label(a))).collect();
    let name = g.name().map(|s| format!("{s}/N"));
    let q = Group::from_flat(m, table, Some(labels), name, Exec::default())?;
    let projection = GroupMap::new(g, &q, coset)?;
    Ok((q, projection))
}
