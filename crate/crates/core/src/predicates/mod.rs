//! Group properties as decision procedures. Every verdict that comes out
//! false names a witness.

mod automizer;
mod report;

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::error::Result;
use crate::exec::Exec;
use crate::group::Group;
use crate::numth::{is_prime_power, prime_divisors};
use crate::subgroup::{
    abelian_subgroups, all_subgroups, center, derived_series, fitting_subgroup, generated_subgroup,
    is_nilpotent_subgroup, lower_central_series, sylow_subgroups, Subgroup, SubgroupLattice,
};

pub use automizer::{has_large_automizer, has_small_automizer, is_p_central_extension};
pub use report::{Property, PropertyReport};

/// What decided a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Subgroup { order: usize, generators: Vec<usize>, elements: Vec<usize> },
    Element { element: usize, order: usize },
    Pair { a: usize, b: usize },
    Primes { primes: Vec<u64> },
}

impl Witness {
    pub fn subgroup(h: &Subgroup) -> Self {
        Witness::Subgroup { order: h.order(), generators: h.generators().to_vec(), elements: h.elements() }
    }

    /// Rebuilds a subgroup witness inside `g`.
    pub fn to_subgroup(&self, g: &Group) -> Result<Option<Subgroup>> {
        match self {
            Witness::Subgroup { elements, .. } => Subgroup::from_members(g, elements.iter().copied()).map(Some),
            _ => Ok(None),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub value: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub detail: String,
}

impl Verdict {
    pub fn yes(detail: impl Into<String>) -> Self {
        Verdict { value: true, witness: None, detail: detail.into() }
    }

    pub fn yes_with(witness: Witness, detail: impl Into<String>) -> Self {
        Verdict { value: true, witness: Some(witness), detail: detail.into() }
    }

    pub fn no(witness: Witness, detail: impl Into<String>) -> Self {
        Verdict { value: false, witness: Some(witness), detail: detail.into() }
    }
}

/// An abelian subgroup together with its normalizer and centralizer.
#[derive(Debug, Clone)]
pub struct AbelianInfo {
    pub subgroup: Subgroup,
    pub normal: bool,
    pub normalizer: Subgroup,
    pub centralizer: Subgroup,
}

impl AbelianInfo {
    fn new(g: &Group, a: Subgroup) -> Self {
        let n = normalizer_of(g, &a);
        let c = centralizer_of(g, &a);
        AbelianInfo { normal: n.order() == g.order(), normalizer: n, centralizer: c, subgroup: a }
    }

    /// `N_G(A) = C_G(A)`, i.e. the automizer is trivial.
    pub fn trivial_automizer(&self) -> bool {
        self.normalizer.order() == self.centralizer.order()
    }

    pub fn self_centralizing(&self) -> bool {
        self.centralizer.order() == self.subgroup.order()
    }

    pub fn prime_power(&self) -> bool {
        self.subgroup.has_prime_power_order()
    }

    fn describe(&self, g: &Group) -> String {
        format!(
            "A = <{}> of order {}: |N_G(A)| = {}, |C_G(A)| = {}",
            labels(g, self.subgroup.generators()),
            self.subgroup.order(),
            self.normalizer.order(),
            self.centralizer.order()
        )
    }
}

fn normalizer_of(g: &Group, h: &Subgroup) -> Subgroup {
    crate::subgroup::normalizer(g, h).expect("subgroup belongs to g")
}

fn centralizer_of(g: &Group, h: &Subgroup) -> Subgroup {
    crate::subgroup::centralizer(g, h).expect("subgroup belongs to g")
}

pub(crate) fn labels(g: &Group, elements: &[usize]) -> String {
    elements.iter().map(|&a| g.label(a)).collect::<Vec<_>>().join(", ")
}

/// Lazily computed structure of one group, shared by all predicates.
pub struct Analysis {
    group: Group,
    caps: Caps,
    exec: Exec,
    lattice: OnceLock<Result<SubgroupLattice>>,
    abelian: OnceLock<Result<Vec<AbelianInfo>>>,
}

impl Analysis {
    pub fn new(group: Group, caps: Caps) -> Self {
        Analysis { group, caps, exec: Exec::default(), lattice: OnceLock::new(), abelian: OnceLock::new() }
    }

    pub fn with_exec(mut self, exec: Exec) -> Self {
        self.exec = exec;
        self
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn caps(&self) -> &Caps {
        &self.caps
    }

    pub fn exec(&self) -> Exec {
        self.exec
    }

    pub fn lattice(&self) -> Result<&SubgroupLattice> {
        self.lattice.get_or_init(|| all_subgroups(&self.group, &self.caps)).as_ref().map_err(Clone::clone)
    }

    /// Every abelian subgroup with its normalizer and centralizer, sorted by
    /// order then members.
    pub fn abelian(&self) -> Result<&[AbelianInfo]> {
        self.abelian
            .get_or_init(|| {
                let subgroups = abelian_subgroups(&self.group, &self.caps)?;
                Ok(self.exec.map(&subgroups, |a| AbelianInfo::new(&self.group, a.clone())))
            })
            .as_ref()
            .map(Vec::as_slice)
            .map_err(Clone::clone)
    }

    pub fn fitting(&self) -> Result<Subgroup> {
        fitting_subgroup(self.lattice()?)
    }

    pub fn center(&self) -> Subgroup {
        center(&self.group)
    }

    pub fn derived(&self) -> Subgroup {
        crate::subgroup::derived_subgroup(&self.group)
    }

    fn whole(&self) -> Subgroup {
        Subgroup::whole(&self.group)
    }
}

pub fn is_abelian(g: &Group) -> Verdict {
    match g.first_noncommuting_pair() {
        None => Verdict::yes("all pairs commute"),
        Some((a, b)) => {
            Verdict::no(Witness::Pair { a, b }, format!("{} and {} do not commute", g.label(a), g.label(b)))
        }
    }
}

/// Order 1 counts as `p^0`.
pub fn is_prime_power_order(order: usize) -> bool {
    is_prime_power(order as u64)
}

pub fn prime_power_verdict(g: &Group) -> Verdict {
    let primes = prime_divisors(g.order() as u64);
    if primes.len() <= 1 {
        Verdict::yes(format!("order {}", g.order()))
    } else {
        let detail = format!("order {} has prime divisors {primes:?}", g.order());
        Verdict::no(Witness::Primes { primes }, detail)
    }
}

pub fn is_nilpotent(g: &Group) -> Result<Verdict> {
    let series = lower_central_series(g, &Subgroup::whole(g))?;
    let last = series.last().expect("series is nonempty");
    Ok(if last.is_trivial() {
        Verdict::yes(format!("lower central series has length {}", series.len()))
    } else {
        Verdict::no(Witness::subgroup(last), format!("lower central series stops at order {}", last.order()))
    })
}

pub fn is_solvable(g: &Group) -> Result<Verdict> {
    let series = derived_series(g, &Subgroup::whole(g))?;
    let last = series.last().expect("series is nonempty");
    Ok(if last.is_trivial() {
        Verdict::yes(format!("derived length {}", series.len() - 1))
    } else {
        Verdict::no(
            Witness::subgroup(last),
            format!("derived series stops at a perfect subgroup of order {}", last.order()),
        )
    })
}

pub fn is_cp(g: &Group) -> Verdict {
    match g.elements().find(|&a| !is_prime_power(g.element_order(a) as u64)) {
        None => Verdict::yes("every element has prime-power order"),
        Some(a) => {
            let order = g.element_order(a);
            Verdict::no(Witness::Element { element: a, order }, format!("{} has order {order}", g.label(a)))
        }
    }
}

/// Searches for `1 = N0 < N1 < ... < Nk = G` with each `Ni` normal in `G`
/// and each `N(i+1)/Ni` cyclic.
pub fn is_supersolvable(a: &Analysis) -> Result<Verdict> {
    let g = a.group();
    let lattice = a.lattice()?;
    let normal: Vec<&Subgroup> = lattice.normal().collect();
    let mut dead = vec![false; normal.len()];
    let mut chain = vec![0usize];
    let mut deepest = 0usize;
    if search_chain(g, &normal, 0, &mut dead, &mut chain, &mut deepest)? {
        let orders: Vec<String> = chain.iter().map(|&i| normal[i].order().to_string()).collect();
        return Ok(Verdict::yes(format!("normal series with cyclic factors, orders {}", orders.join(" < "))));
    }
    let stuck = normal[deepest];
    Ok(Verdict::no(
        Witness::subgroup(stuck),
        format!("no cyclic normal step continues past the normal subgroup of order {}", stuck.order()),
    ))
}

fn search_chain(
    g: &Group,
    normal: &[&Subgroup],
    at: usize,
    dead: &mut [bool],
    chain: &mut Vec<usize>,
    deepest: &mut usize,
) -> Result<bool> {
    if normal[at].order() > normal[*deepest].order() {
        *deepest = at;
    }
    if normal[at].order() == g.order() {
        return Ok(true);
    }
    for next in at + 1..normal.len() {
        if dead[next] || normal[next].order() == normal[at].order() || !normal[at].is_subgroup_of(normal[next]) {
            continue;
        }
        if !cyclic_over(g, normal[at], normal[next])? {
            continue;
        }
        chain.push(next);
        if search_chain(g, normal, next, dead, chain, deepest)? {
            return Ok(true);
        }
        chain.pop();
    }
    dead[at] = true;
    Ok(false)
}

/// Whether `upper / lower` is cyclic, for `lower` normal in `upper`.
fn cyclic_over(g: &Group, lower: &Subgroup, upper: &Subgroup) -> Result<bool> {
    let mut covered = lower.members().clone();
    for x in upper.elements() {
        if covered.contains(x) {
            continue;
        }
        let mut seed = lower.generators().to_vec();
        seed.push(x);
        let h = generated_subgroup(g, &seed)?;
        if h.order() == upper.order() {
            return Ok(true);
        }
        covered.union_with(h.members());
    }
    Ok(lower.order() == upper.order())
}

pub fn is_a_group(a: &Analysis) -> Result<Verdict> {
    let g = a.group();
    let lattice = a.lattice()?;
    for p in prime_divisors(g.order() as u64) {
        let sylow = sylow_subgroups(lattice, p).into_iter().next().expect("Sylow subgroups exist");
        if !sylow.is_abelian(g) {
            return Ok(Verdict::no(
                Witness::subgroup(&sylow),
                format!("Sylow {p}-subgroup of order {} is not abelian", sylow.order()),
            ));
        }
    }
    Ok(Verdict::yes("every Sylow subgroup is abelian"))
}

pub fn is_sbp(a: &Analysis) -> Result<Verdict> {
    let g = a.group();
    match a.lattice()?.proper().find(|h| !h.has_prime_power_order()) {
        None => Ok(Verdict::yes("every proper subgroup has prime-power order")),
        Some(h) => Ok(Verdict::no(
            Witness::subgroup(h),
            format!("proper subgroup <{}> has order {}", labels(g, h.generators()), h.order()),
        )),
    }
}

fn abelian_scan(
    a: &Analysis,
    applies: impl Fn(&AbelianInfo) -> bool,
    holds: impl Fn(&AbelianInfo) -> bool,
    what: &str,
) -> Result<Verdict> {
    let g = a.group();
    let mut checked = 0;
    for info in a.abelian()? {
        if !applies(info) {
            continue;
        }
        checked += 1;
        if !holds(info) {
            return Ok(Verdict::no(Witness::subgroup(&info.subgroup), info.describe(g)));
        }
    }
    Ok(Verdict::yes(format!("{checked} {what} checked")))
}

/// `N_G(A) = C_G(A)` for every abelian subgroup `A`.
pub fn is_nc(a: &Analysis) -> Result<Verdict> {
    abelian_scan(a, |_| true, AbelianInfo::trivial_automizer, "abelian subgroups")
}

/// Every abelian subgroup that is not self-centralizing has trivial
/// automizer: for all abelian `A`, `C_G(A) = A` or `N_G(A) = C_G(A)`.
pub fn is_nc_nonmaximal(a: &Analysis) -> Result<Verdict> {
    abelian_scan(a, |_| true, |i| i.self_centralizing() || i.trivial_automizer(), "abelian subgroups")
}

/// `N_G(A) = C_G(A)` for every non-normal abelian subgroup `A`.
pub fn is_quasi_nc(a: &Analysis) -> Result<Verdict> {
    abelian_scan(a, |i| !i.normal, AbelianInfo::trivial_automizer, "non-normal abelian subgroups")
}

/// `N_G(A) = C_G(A)` or `C_G(A) = A` for every non-normal abelian subgroup.
pub fn is_nnc(a: &Analysis) -> Result<Verdict> {
    abelian_scan(a, |i| !i.normal, |i| i.trivial_automizer() || i.self_centralizing(), "non-normal abelian subgroups")
}

/// `N_G(H) = C_G(H)` for every abelian subgroup `H` whose order is not a
/// prime power.
pub fn is_pnc(a: &Analysis) -> Result<Verdict> {
    abelian_scan(a, |i| !i.prime_power(), AbelianInfo::trivial_automizer, "abelian subgroups of non-prime-power order")
}

/// Not nilpotent, while every proper subgroup is. Only maximal subgroups
/// need checking, since subgroups of nilpotent groups are nilpotent.
pub fn is_minimal_non_nilpotent(a: &Analysis) -> Result<Verdict> {
    let g = a.group();
    if is_nilpotent(g)?.value {
        return Ok(Verdict::no(Witness::subgroup(&a.whole()), "the group itself is nilpotent"));
    }
    let lattice = a.lattice()?;
    let proper: Vec<&Subgroup> = lattice.proper().collect();
    let maximal = proper
        .iter()
        .enumerate()
        .filter(|&(i, h)| !proper[i + 1..].iter().any(|k| k.order() > h.order() && h.is_subgroup_of(k)));
    for (_, h) in maximal {
        if !is_nilpotent_subgroup(g, h)? {
            return Ok(Verdict::no(
                Witness::subgroup(h),
                format!("proper subgroup <{}> of order {} is not nilpotent", labels(g, h.generators()), h.order()),
            ));
        }
    }
    Ok(Verdict::yes("not nilpotent; every maximal subgroup is nilpotent"))
}

/// Shorthand for `is_pnc` on a fresh analysis.
pub fn group_is_pnc(g: &Group, caps: &Caps) -> Result<bool> {
    Ok(is_pnc(&Analysis::new(g.clone(), *caps))?.value)
}
