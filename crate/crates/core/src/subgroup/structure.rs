use super::{commutator_subgroup, generated_subgroup, Subgroup, SubgroupLattice};
use crate::error::Result;
use crate::group::Group;
use crate::numth::{p_part, prime_divisors};

/// `h = γ1 ≥ γ2 ≥ ...` with `γ(i+1) = [h, γi]`, ending at the first repeat.
pub fn lower_central_series(g: &Group, h: &Subgroup) -> Result<Vec<Subgroup>> {
    let mut series = vec![h.clone()];
    loop {
        let last = series.last().expect("series is nonempty");
        let next = commutator_subgroup(g, h, last)?;
        if next == *last {
            return Ok(series);
        }
        series.push(next);
    }
}

/// `h ≥ h' ≥ h'' ≥ ...`, ending at the first repeat.
pub fn derived_series(g: &Group, h: &Subgroup) -> Result<Vec<Subgroup>> {
    let mut series = vec![h.clone()];
    loop {
        let last = series.last().expect("series is nonempty");
        let next = commutator_subgroup(g, last, last)?;
        if next == *last {
            return Ok(series);
        }
        series.push(next);
    }
}

pub fn is_nilpotent_subgroup(g: &Group, h: &Subgroup) -> Result<bool> {
    Ok(lower_central_series(g, h)?.last().is_some_and(Subgroup::is_trivial))
}

/// All subgroups whose order is the full `p`-part of `|G|`; the trivial
/// subgroup alone when `p` does not divide `|G|`.
pub fn sylow_subgroups(lattice: &SubgroupLattice, p: u64) -> Vec<Subgroup> {
    let target = p_part(lattice.group().order() as u64, p) as usize;
    lattice.subgroups().filter(|h| h.order() == target).cloned().collect()
}

/// Subgroups whose order is the full `p'`-part of `|G|`.
pub fn hall_p_prime_subgroups(lattice: &SubgroupLattice, p: u64) -> Vec<Subgroup> {
    let n = lattice.group().order() as u64;
    let target = (n / p_part(n, p)) as usize;
    lattice.subgroups().filter(|h| h.order() == target).cloned().collect()
}

/// `O_p(G)`: the intersection of all Sylow `p`-subgroups.
pub fn p_core(lattice: &SubgroupLattice, p: u64) -> Result<Subgroup> {
    let g = lattice.group();
    let mut sylows = sylow_subgroups(lattice, p).into_iter();
    let first = sylows.next().expect("a Sylow subgroup always exists");
    sylows.try_fold(first, |acc, s| acc.intersection(g, &s))
}

/// Join of every normal nilpotent subgroup in the lattice.
pub fn fitting_subgroup(lattice: &SubgroupLattice) -> Result<Subgroup> {
    let g = lattice.group();
    let mut seed = Vec::new();
    for h in lattice.normal() {
        if is_nilpotent_subgroup(g, h)? {
            seed.extend_from_slice(h.generators());
        }
    }
    generated_subgroup(g, &seed)
}

/// Product of the `p`-cores over the primes dividing `|G|`.
pub fn fitting_via_p_cores(lattice: &SubgroupLattice) -> Result<Subgroup> {
    let g = lattice.group();
    let mut seed = Vec::new();
    for p in prime_divisors(g.order() as u64) {
        seed.extend_from_slice(p_core(lattice, p)?.generators());
    }
    generated_subgroup(g, &seed)
}

/// Proper normal subgroups not contained in any other proper normal subgroup.
pub fn maximal_normal_subgroups(lattice: &SubgroupLattice) -> Vec<Subgroup> {
    let n = lattice.group().order();
    let proper_normal: Vec<&Subgroup> = lattice.normal().filter(|h| h.order() < n).collect();
    proper_normal
        .iter()
        .filter(|h| !proper_normal.iter().any(|k| k.order() > h.order() && h.is_subgroup_of(k)))
        .map(|h| (*h).clone())
        .collect()
}
