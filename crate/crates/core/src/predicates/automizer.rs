use super::{Verdict, Witness};
use crate::caps::Caps;
use crate::error::{GroupError, Result};
use crate::group::{automorphism_group, automorphisms, find_isomorphism, is_isomorphic, quotient_group, Group};
use crate::numth::is_prime_power;
use crate::subgroup::{automizer, center, Subgroup};

/// `Aut_G(H) ≅ Inn(H) = H / Z(H)`. For abelian `H` this is `N_G(H) = C_G(H)`.
pub fn has_small_automizer(g: &Group, h: &Subgroup, caps: &Caps) -> Result<Verdict> {
    h.check_parent(g)?;
    if h.is_abelian(g) {
        let aut = automizer(g, h)?;
        let detail = format!("|N_G(H)| = {}, |C_G(H)| = {}", aut.normalizer.order(), aut.centralizer.order());
        return Ok(if aut.is_trivial() {
            Verdict::yes(detail)
        } else {
            Verdict::no(Witness::subgroup(&aut.normalizer), detail)
        });
    }
    caps.check("small automizer test", h.order(), caps.aut)?;
    let aut = automizer(g, h)?;
    let (local, _) = h.to_group(g)?;
    let (inn, _) = quotient_group(&local, &center(&local))?;
    let detail = format!("|Aut_G(H)| = {}, |Inn(H)| = {}", aut.order(), inn.order());
    Ok(if find_isomorphism(&aut.quotient, &inn, caps)?.is_some() {
        Verdict::yes(detail)
    } else {
        Verdict::no(Witness::subgroup(&aut.normalizer), detail)
    })
}

/// `Aut_G(H) ≅ Aut(H)`.
pub fn has_large_automizer(g: &Group, h: &Subgroup, caps: &Caps) -> Result<Verdict> {
    h.check_parent(g)?;
    caps.check("large automizer test", h.order(), caps.aut)?;
    let aut = automizer(g, h)?;
    let (local, _) = h.to_group(g)?;
    let count = automorphisms(&local, caps)?.len();
    let detail = format!("|Aut_G(H)| = {}, |Aut(H)| = {count}", aut.order());
    if count != aut.order() {
        return Ok(Verdict::no(Witness::subgroup(&aut.normalizer), detail));
    }
    let full = automorphism_group(&local, caps)?;
    Ok(if is_isomorphic(&aut.quotient, &full.group, caps)? {
        Verdict::yes(detail)
    } else {
        Verdict::no(Witness::subgroup(&aut.normalizer), detail)
    })
}

/// Whether `h` is a central extension of `g` by `a` with `Z(h)` a
/// `p`-group: `a ⊆ Z(h)`, `h / a ≅ g`, and `|Z(h)|` a prime power.
pub fn is_p_central_extension(h: &Group, a: &Subgroup, g: &Group, caps: &Caps) -> Result<bool> {
    a.check_parent(h)?;
    let z = center(h);
    if let Some(outside) = a.elements().into_iter().find(|&x| !z.contains(x)) {
        return Err(GroupError::NotCentral { witness: outside });
    }
    if !is_prime_power(z.order() as u64) {
        return Ok(false);
    }
    let (quotient, _) = quotient_group(h, a)?;
    is_isomorphic(&quotient, g, caps)
}
