//! Named constructors for the group families used by the catalog.

use crate::caps::Caps;
use crate::error::{GroupError, Result};
use crate::exec::Exec;
use crate::group::{automorphisms, group_from_permutations, semidirect_product, Group, GroupMap, SemidirectSpec};
use crate::numth::{exp_order, is_prime};

/// `Z_n`, element `k` standing for `k` mod `n`.
pub fn cyclic(n: usize) -> Result<Group> {
    if n == 0 {
        return Err(GroupError::ParameterOutOfRange("cyclic order must be positive".into()));
    }
    let table = (0..n).flat_map(|a| (0..n).map(move |b| ((a + b) % n) as u32)).collect();
    let labels = (0..n).map(|k| k.to_string()).collect();
    Group::from_flat(n, table, Some(labels), Some(format!("Z{n}")), Exec::default())
}

/// Dihedral group of order `2n` (`n >= 3`), the symmetries of an `n`-gon.
///
/// Element `i + n*j` is `r^i s^j`.
pub fn dihedral(n: usize) -> Result<Group> {
    if n < 3 {
        return Err(GroupError::ParameterOutOfRange(format!("dihedral needs n >= 3, got {n}")));
    }
    let order = 2 * n;
    let mut table = Vec::with_capacity(order * order);
    for x in 0..order {
        let (i, j) = (x % n, x / n);
        for y in 0..order {
            let (k, l) = (y % n, y / n);
            let rot = if j == 0 { (i + k) % n } else { (i + n - k) % n };
            table.push((rot + n * ((j + l) % 2)) as u32);
        }
    }
    let labels = (0..order)
        .map(|x| {
            let (i, j) = (x % n, x / n);
            let r = match i {
                0 => String::new(),
                1 => "r".to_string(),
                _ => format!("r^{i}"),
            };
            match (r.is_empty(), j) {
                (true, 0) => "e".to_string(),
                (_, 0) => r,
                _ => format!("{r}s"),
            }
        })
        .collect();
    Group::from_flat(order, table, Some(labels), Some(format!("D{order}")), Exec::default())
}

fn check_degree(n: usize, family: &str) -> Result<()> {
    if n == 0 || n > 5 {
        return Err(GroupError::ParameterOutOfRange(format!("{family} degree must be in 1..=5, got {n}")));
    }
    Ok(())
}

pub fn symmetric(n: usize) -> Result<Group> {
    check_degree(n, "symmetric")?;
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push("(1 2)".to_string());
        gens.push(format!("({})", (1..=n).map(|k| k.to_string()).collect::<Vec<_>>().join(" ")));
    }
    Ok(group_from_permutations(n, &gens, &Caps::default())?.named(format!("S{n}")))
}

pub fn alternating(n: usize) -> Result<Group> {
    check_degree(n, "alternating")?;
    let gens: Vec<String> = (3..=n).map(|k| format!("(1 2 {k})")).collect();
    Ok(group_from_permutations(n, &gens, &Caps::default())?.named(format!("A{n}")))
}

/// Generalized quaternion group of order `2^k`, `3 <= k <= 5`:
/// `<x, y | x^(2m) = 1, y^2 = x^m, y x y^-1 = x^-1>` with `2m = 2^(k-1)`.
///
/// Element `i + 2m*j` is `x^i y^j`.
pub fn generalized_quaternion(order: usize) -> Result<Group> {
    if !matches!(order, 8 | 16 | 32) {
        return Err(GroupError::ParameterOutOfRange(format!(
            "generalized quaternion order must be 8, 16 or 32, got {order}"
        )));
    }
    let two_m = order / 2;
    let m = two_m / 2;
    let mut table = Vec::with_capacity(order * order);
    for a in 0..order {
        let (i, j) = (a % two_m, a / two_m);
        for b in 0..order {
            let (k, l) = (b % two_m, b / two_m);
            let (rot, ys) = if j == 0 { (i + k, l) } else { (i + two_m - k, 1 + l) };
            let (rot, ys) = if ys == 2 { (rot + m, 0) } else { (rot, ys) };
            table.push((rot % two_m + two_m * ys) as u32);
        }
    }
    let labels = (0..order)
        .map(|a| {
            let (i, j) = (a % two_m, a / two_m);
            let x = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            match (x.is_empty(), j) {
                (true, 0) => "e".to_string(),
                (_, 0) => x,
                _ => format!("{x}y"),
            }
        })
        .collect();
    Group::from_flat(order, table, Some(labels), Some(format!("Q{order}")), Exec::default())
}

/// `(Z_p)^rank`; element index is the base-`p` digit vector.
pub fn elementary_abelian(p: usize, rank: u32) -> Result<Group> {
    if !is_prime(p as u64) {
        return Err(GroupError::ParameterOutOfRange(format!("{p} is not prime")));
    }
    let n = p.checked_pow(rank).ok_or_else(|| GroupError::ParameterOutOfRange("order overflows".into()))?;
    let caps = Caps::default();
    caps.check("elementary abelian group", n, caps.closure)?;
    let digits = |x: usize| (0..rank).map(move |t| x / p.pow(t) % p);
    let mut table = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let sum: usize =
                digits(a).zip(digits(b)).enumerate().map(|(t, (u, v))| (u + v) % p * p.pow(t as u32)).sum();
            table.push(sum as u32);
        }
    }
    let labels =
        (0..n).map(|a| format!("({})", digits(a).map(|d| d.to_string()).collect::<Vec<_>>().join(","))).collect();
    Group::from_flat(n, table, Some(labels), Some(format!("Z{p}^{rank}")), Exec::default())
}

/// Order of an automorphism under composition.
pub fn automorphism_order(map: &GroupMap, g: &Group) -> usize {
    let id = GroupMap::identity(g);
    let mut power = map.clone();
    let mut k = 1;
    while power != id {
        power = power.compose(map);
        k += 1;
    }
    k
}

/// The automorphism of `kernel` of order exactly `order` that is smallest by
/// image list.
pub fn smallest_automorphism_of_order(kernel: &Group, order: usize, caps: &Caps) -> Result<GroupMap> {
    automorphisms(kernel, caps)?
        .into_iter()
        .find(|a| automorphism_order(a, kernel) == order)
        .ok_or(GroupError::NoOrderQAutomorphism(order))
}

/// The multiplicative order of `p` modulo `q`.
pub fn exp_order_of(p: u64, q: u64) -> Result<u32> {
    if !is_prime(p) || !is_prime(q) || p == q {
        return Err(GroupError::ParameterOutOfRange(format!("need distinct primes, got {p} and {q}")));
    }
    Ok(exp_order(p, q).expect("distinct primes are coprime"))
}

/// `(Z_p)^a ⋊ Z_q` with `a` the multiplicative order of `p` mod `q`
/// (required `>= 2`); the generator of `Z_q` acts by the smallest
/// automorphism of order `q`.
pub fn sbp_type_iii(p: u64, q: u64, caps: &Caps) -> Result<Group> {
    let a = exp_order_of(p, q)?;
    if a < 2 {
        return Err(GroupError::ParameterOutOfRange(format!(
            "order of {p} mod {q} is {a}; the construction needs at least 2"
        )));
    }
    let kernel_order = (p as usize).pow(a);
    caps.check("sbp construction", kernel_order * q as usize, caps.closure)?;
    let kernel = elementary_abelian(p as usize, a)?;
    let complement = cyclic(q as usize)?;
    let auto = smallest_automorphism_of_order(&kernel, q as usize, caps)?;
    let spec = SemidirectSpec::cyclic(kernel, complement, 1, &auto)?;
    Ok(semidirect_product(&spec, caps)?.named(format!("SBP({p},{q})")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::is_isomorphic;

    #[test]
    fn family_orders() {
        assert_eq!(cyclic(1).unwrap().order(), 1);
        assert_eq!(dihedral(3).unwrap().order(), 6);
        assert_eq!(dihedral(32).unwrap().order(), 64);
        assert_eq!(symmetric(5).unwrap().order(), 120);
        assert_eq!(alternating(5).unwrap().order(), 60);
        assert_eq!(alternating(2).unwrap().order(), 1);
        assert_eq!(generalized_quaternion(32).unwrap().order(), 32);
        assert_eq!(elementary_abelian(3, 3).unwrap().order(), 27);
        assert!(cyclic(0).is_err() && dihedral(2).is_err() && symmetric(6).is_err());
        assert!(generalized_quaternion(12).is_err() && elementary_abelian(4, 2).is_err());
    }

    #[test]
    fn dihedral_3_is_s3() {
        let caps = Caps::default();
        assert!(is_isomorphic(&dihedral(3).unwrap(), &symmetric(3).unwrap(), &caps).unwrap());
    }

    #[test]
    fn quaternion_has_one_involution() {
        for order in [8, 16, 32] {
            let q = generalized_quaternion(order).unwrap();
            assert_eq!(q.element_orders().filter(|&k| k == 2).count(), 1);
            assert!(!q.is_abelian());
        }
    }

    #[test]
    fn sbp_constructions() {
        let caps = Caps::default();
        let g = sbp_type_iii(2, 3, &caps).unwrap();
        assert_eq!(g.order(), 12);
        assert!(is_isomorphic(&g, &alternating(4).unwrap(), &caps).unwrap());
        assert!(matches!(sbp_type_iii(3, 2, &caps), Err(GroupError::ParameterOutOfRange(_))));
        assert_eq!(sbp_type_iii(2, 7, &caps).unwrap().order(), 56);
    }

    #[test]
    fn exp_orders() {
        assert_eq!(exp_order_of(2, 3).unwrap(), 2);
        assert_eq!(exp_order_of(3, 2).unwrap(), 1);
        assert_eq!(exp_order_of(2, 7).unwrap(), 3);
        assert!(exp_order_of(2, 2).is_err());
    }
}
