use std::collections::BTreeMap;

use num_integer::Integer;

use super::{Context, Tally, TheoremResult};
use crate::caps::Caps;
use crate::catalog::{cyclic, generalized_quaternion, sbp_type_iii, CatalogEntry, Construction, FamilyCondition};
use crate::error::Result;
use crate::group::{direct_product, is_isomorphic, quotient_group, Group};
use crate::numth::{exp_order, factorize, is_prime, is_prime_power, p_part, prime_divisors, prime_of_power};
use crate::predicates::{
    is_a_group, is_abelian, is_cp, is_minimal_non_nilpotent, is_nc, is_nc_nonmaximal, is_nilpotent,
    is_p_central_extension, is_pnc, is_quasi_nc, is_sbp, is_solvable, is_supersolvable, labels, Analysis, Property,
    Verdict, Witness,
};
use crate::subgroup::{all_subgroups, center, derived_series, maximal_normal_subgroups, p_core, Subgroup};

type Verifier = fn(&Context) -> TheoremResult;

pub(super) const REGISTRY: &[(&str, Verifier)] = &[
    ("L1.1", verify_l1_1),
    ("ZASS", verify_zassenhaus),
    ("L2.1", verify_l2_1),
    ("P2.2", verify_p2_2),
    ("C2.3", verify_c2_3),
    ("L3.1", verify_l3_1),
    ("L3.2", verify_l3_2),
    ("L3.3", verify_l3_3),
    ("L3.4", verify_l3_4),
    ("L3.5", verify_l3_5),
    ("T3.6", verify_t3_6),
    ("T3.7", verify_t3_7),
    ("L3.8", verify_l3_8),
    ("T3.9", verify_t3_9),
    ("L3.10", verify_l3_10),
    ("T3.11", verify_t3_11),
    ("L3.12", verify_l3_12),
    ("T3.13", verify_t3_13),
    ("P3.14", verify_p3_14),
    ("C3.15", verify_c3_15),
    ("T3.16", verify_t3_16),
    ("TAGS", verify_tags),
];

fn fresh(g: Group, caps: &Caps) -> Analysis {
    Analysis::new(g, *caps)
}

fn explain(v: &Verdict) -> (String, Option<Witness>) {
    (v.detail.clone(), v.witness.clone())
}

fn plain(detail: String) -> (String, Option<Witness>) {
    (detail, None)
}

fn solvable_nonabelian_pnc(a: &Analysis) -> Result<bool> {
    let g = a.group();
    Ok(!g.is_abelian() && is_solvable(g)?.value && is_pnc(a)?.value)
}

/// `C_G(A) = A` or `C_G(A) = N_G(A)` for every abelian `A` of prime-power
/// order.
fn prime_power_nc_form(a: &Analysis) -> Result<Verdict> {
    for info in a.abelian()? {
        if info.prime_power() && !info.self_centralizing() && !info.trivial_automizer() {
            let g = a.group();
            return Ok(Verdict::no(
                Witness::subgroup(&info.subgroup),
                format!(
                    "A = <{}> of order {}: |C_G(A)| = {}, |N_G(A)| = {}",
                    labels(g, info.subgroup.generators()),
                    info.subgroup.order(),
                    info.centralizer.order(),
                    info.normalizer.order()
                ),
            ));
        }
    }
    Ok(Verdict::yes("every abelian subgroup of prime-power order is self-centralizing or has trivial automizer"))
}

fn verify_l1_1(ctx: &Context) -> TheoremResult {
    let mut r = TheoremResult::new(
        "L1.1",
        "NC (C_G(A) = A or N_G(A) = C_G(A) for all abelian A) iff the same holds for abelian A of prime-power order",
        "every catalog group",
        true,
    );
    let stricter = ctx.sweep(&mut r, |e, a, t| {
        let lhs = is_nc_nonmaximal(a)?;
        let rhs = prime_power_nc_form(a)?;
        t.check(lhs.value == rhs.value, &e.name, || {
            let v = if lhs.value { &rhs } else { &lhs };
            (format!("sides disagree ({} vs {}): {}", lhs.value, rhs.value, v.detail), v.witness.clone())
        });
        if is_nc(a)?.value != lhs.value {
            t.flag(&e.name);
        }
        Ok(())
    });
    if !stricter.is_empty() {
        r.notes.push(format!(
            "the all-abelian form N_G(A) = C_G(A) is stricter on {} groups, first {}",
            stricter.len(),
            stricter[0]
        ));
    }
    r
}

fn verify_zassenhaus(ctx: &Context) -> TheoremResult {
    let mut r = TheoremResult::new(
        "ZASS",
        "N_G(A) = C_G(A) for every abelian subgroup A iff G is abelian",
        "every catalog group",
        true,
    );
    ctx.sweep(&mut r, |e, a, t| {
        let nc = is_nc(a)?;
        let ab = is_abelian(a.group());
        t.check(nc.value == ab.value, &e.name, || explain(if nc.value { &ab } else { &nc }));
        Ok(())
    });
    r
}

fn verify_l2_1(ctx: &Context) -> TheoremResult {
    let mut r =
        TheoremResult::new("L2.1", "subgroups of PNC groups are PNC", "PNC catalog groups, every subgroup", false);
    ctx.sweep(&mut r, |e, a, t| {
        if !is_pnc(a)?.value {
            return Ok(());
        }
        let g = a.group();
        for s in a.lattice()?.subgroups() {
            let (sg, _) = s.to_group(g)?;
            let v = is_pnc(&fresh(sg, a.caps()))?;
            t.check(v.value, &e.name, || {
                (format!("subgroup <{}> of order {}: {}", labels(g, s.generators()), s.order(), v.detail), None)
            });
        }
        Ok(())
    });
    r
}

const P2_2_MAX_ORDER: usize = 96;

fn verify_p2_2(ctx: &Context) -> TheoremResult {
    let mut r = TheoremResult::new(
        "P2.2",
        "for G = G1 x G2 with coprime orders or both factors non-p-groups: G abelian iff G PNC",
        "pairs of nontrivial catalog groups with product order <= 96",
        false,
    );
    let n = ctx.catalog.len();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i..n {
            let (a, b) = (ctx.catalog[i].group.order(), ctx.catalog[j].group.order());
            if a == 1 || b == 1 || a * b > P2_2_MAX_ORDER {
                continue;
            }
            let coprime = a.gcd(&b) == 1;
            let both_non_p = !is_prime_power(a as u64) && !is_prime_power(b as u64);
            if coprime || both_non_p {
                pairs.push((i, j));
            }
        }
    }
    let outcomes = ctx.exec.map(&pairs, |&(i, j)| -> Result<(String, bool, Verdict, Verdict)> {
        let (e1, e2) = (&ctx.catalog[i], &ctx.catalog[j]);
        let g = direct_product(&e1.group, &e2.group, &ctx.caps)?;
        let a = fresh(g, &ctx.caps);
        let ab = is_abelian(a.group());
        let pnc = is_pnc(&a)?;
        Ok((format!("{}x{}", e1.name, e2.name), ab.value == pnc.value, ab, pnc))
    });
    let mut t = Tally::default();
    for outcome in outcomes {
        match outcome {
            Ok((name, ok, ab, pnc)) => t.check(ok, &name, || explain(if ab.value { &pnc } else { &ab })),
            Err(e) => t.note(format!("pair skipped: {e}")),
        }
    }
    r.absorb(t);
    r
}

fn verify_c2_3(ctx: &Context) -> TheoremResult {
    let mut r = TheoremResult::new(
        "C2.3",
        "a non-abelian G is a nilpotent PNC group iff G is a p-group",
        "non-abelian catalog groups",
        false,
    );
    ctx.sweep(&mut r, |e, a, t| {
        let g = a.group();
        if g.is_abelian() {
            return Ok(());
        }
        let nil = is_nilpotent(g)?;
        let pnc = is_pnc(a)?;
        let pp = is_prime_power(g.order() as u64);
        t.check((nil.value && pnc.value) == pp, &e.name, || {
            plain(format!("nilpotent = {}, pnc = {}, order {} ({})", nil.value, pnc.value, g.order(), pnc.detail))
        });
        Ok(())
    });
    r
}

fn verify_l3_1(ctx: &Context) -> TheoremResult {
    let mut r = TheoremResult::new("L3.1", "F(G) is a p-group", "solvable non-abelian PNC catalog groups", false);
    ctx.sweep(&mut r, |e, a, t| {
        if solvable_nonabelian_pnc(a)? {
            let f = a.fitting()?;
            t.check(f.has_prime_power_order(), &e.name, || {
                (format!("F(G) has order {}", f.order()), Some(Witness::subgroup(&f)))
            });
        }
        Ok(())
    });
    r
}

fn verify_l3_2(ctx: &Context) -> TheoremResult {
    let mut r = TheoremResult::new("L3.2", "Z(G) is a p-group", "solvable non-abelian PNC catalog groups", false);
    ctx.sweep(&mut r, |e, a, t| {
        if solvable_nonabelian_pnc(a)? {
            let z = a.center();
            t.check(z.has_prime_power_order(), &e.name, || {
                (format!("Z(G) has order {}", z.order()), Some(Witness::subgroup(&z)))
            });
        }
        Ok(())
    });
    r
}

fn verify_l3_3(ctx: &Context) -> TheoremResult {
    let mut r = TheoremResult::new(
        "L3.3",
        "G' is a p-group",
        "solvable non-abelian PNC catalog groups with nilpotent G'",
        false,
    );
    ctx.sweep(&mut r, |e, a, t| {
        if !solvable_nonabelian_pnc(a)? {
            return Ok(());
        }
        let d = a.derived();
        if crate::subgroup::is_nilpotent_subgroup(a.group(), &d)? {
            t.check(d.has_prime_power_order(), &e.name, || {
                (format!("G' has order {}", d.order()), Some(Witness::subgroup(&d)))
            });
        }
        Ok(())
    });
    r
}

/// `F(G)` has prime-power order equal to the full `p`-part of `|G|`.
fn fitting_is_sylow(a: &Analysis) -> Result<(bool, Subgroup)> {
    let f = a.fitting()?;
    let n = a.group().order() as u64;
    let sylow = match prime_of_power(f.order() as u64) {
        Some(p) if f.order() > 1 => p_part(n, p) == f.order() as u64,
        _ => false,
    };
    Ok((sylow, f))
}

fn verify_l3_4(ctx: &Context) -> TheoremResult {
    let mut r = TheoremResult::new(
        "L3.4",
        "F(G) is a Sylow subgroup",
        "non-abelian supersolvable PNC catalog groups; S4 as control",
        false,
    );
    ctx.sweep(&mut r, |e, a, t| {
        if a.group().is_abelian() || !is_supersolvable(a)?.value || !is_pnc(a)?.value {
            return Ok(());
        }
        let (sylow, f) = fitting_is_sylow(a)?;
        t.check(sylow, &e.name, || (format!("F(G) has order {}", f.order()), Some(Witness::subgroup(&f))));
        Ok(())
    });
    if let Some(a) = ctx.analysis("S4") {
        let mut t = Tally::default();
        let control = (|| -> Result<(bool, String)> {
            let pnc = is_pnc(a)?.value;
            let ss = is_supersolvable(a)?.value;
            let (sylow, f) = fitting_is_sylow(a)?;
            Ok((pnc && !ss && !sylow, format!("pnc = {pnc}, supersolvable = {ss}, |F(G)| = {}", f.order())))
        })();
        match control {
            Ok((ok, detail)) => {
                t.check(ok, "S4", || plain(format!("control: {detail}")));
                t.note(format!("control S4: {detail}"));
            }
            Err(e) => t.note(format!("control S4 skipped: {e}")),
        }
        r.absorb(t);
    }
    r
}

/// Every subgroup of the center, as subgroups of `g`.
fn central_subgroups(g: &Group, caps: &Caps) -> Result<Vec<Subgroup>> {
    let z = center(g);
    let (zg, embedding) = z.to_group(g)?;
    Ok(all_subgroups(&zg, caps)?.subgroups().map(|s| Subgroup::lift(g, s, &embedding)).collect())
}

fn verify_l3_5(ctx: &Context) -> TheoremResult {
    let mut r = TheoremResult::new(
        "L3.5",
        "G/H is PNC for H <= Z(G) with H meet G' = 1",
        "PNC catalog groups, every such H",
        false,
    );
    ctx.sweep(&mut r, |e, a, t| {
        if !is_pnc(a)?.value {
            return Ok(());
        }
        let g = a.group();
        let d = a.derived();
        for h in central_subgroups(g, a.caps())? {
            if !h.intersection(g, &d)?.is_trivial() {
                continue;
            }
            let (q, _) = quotient_group(g, &h)?;
            let v = is_pnc(&fresh(q, a.caps()))?;
            t.check(v.value, &e.name, || {
                (format!("quotient by <{}> of order {}: {}", labels(g, h.generators()), h.order(), v.detail), None)
            });
        }
        Ok(())
    });
    r
}

fn center_quotient(a: &Analysis) -> Result<Analysis> {
    let (q, _) = quotient_group(a.group(), &a.center())?;
    Ok(fresh(q, a.caps()))
}

fn non_nilpotent_quasi_nc(a: &Analysis) -> Result<bool> {
    Ok(!is_nilpotent(a.group())?.value && is_quasi_nc(a)?.value)
}

fn verify_t3_6(ctx: &Context) -> TheoremResult {
    let mut r =
        TheoremResult::new("T3.6", "all Sylow subgroups are abelian", "non-nilpotent quasi-NC catalog groups", true);
    ctx.sweep(&mut r, |e, a, t| {
        if non_nilpotent_quasi_nc(a)? {
            let v = is_a_group(a)?;
            t.check(v.value, &e.name, || explain(&v));
        }
        Ok(())
    });
    r
}

fn verify_t3_7(ctx: &Context) -> TheoremResult {
    let mut r = TheoremResult::new("T3.7", "G/Z(G) is quasi-NC", "non-nilpotent quasi-NC catalog groups", true);
    ctx.sweep(&mut r, |e, a, t| {
        if non_nilpotent_quasi_nc(a)? {
            let v = is_quasi_nc(&center_quotient(a)?)?;
            t.check(v.value, &e.name, || plain(format!("G/Z(G): {}", v.detail)));
        }
        Ok(())
    });
    r
}

fn verify_l3_8(ctx: &Context) -> TheoremResult {
    let mut r = TheoremResult::new("L3.8", "G/Z(G) is PNC", "non-nilpotent PNC A-groups in the catalog", false);
    ctx.sweep(&mut r, |e, a, t| {
        if is_nilpotent(a.group())?.value || !is_a_group(a)?.value || !is_pnc(a)?.value {
            return Ok(());
        }
        let v = is_pnc(&center_quotient(a)?)?;
        t.check(v.value, &e.name, || plain(format!("G/Z(G): {}", v.detail)));
        Ok(())
    });
    r
}

fn verify_t3_9(ctx: &Context) -> TheoremResult {
    let mut r = TheoremResult::new(
        "T3.9",
        "an SBP group is exactly one of: a p-group; of order pq; of order p^a q with a = ord_q(p) >= 2 and [Z_p^a]Z_q",
        "SBP catalog groups",
        true,
    );
    ctx.sweep(&mut r, |e, a, t| {
        if !is_sbp(a)?.value {
            return Ok(());
        }
        let g = a.group();
        let n = g.order();
        let f = factorize(n as u64);
        let case_i = f.len() <= 1;
        let case_ii = f.len() == 2 && f.iter().all(|&(_, k)| k == 1);
        let mut case_iii = false;
        if f.len() == 2 {
            for (&(p, k), &(q, l)) in [(&f[0], &f[1]), (&f[1], &f[0])] {
                if l == 1 && k >= 2 && exp_order(p, q) == Some(k) {
                    case_iii |= is_isomorphic(g, &sbp_type_iii(p, q, a.caps())?, a.caps())?;
                }
            }
        }
        let hits = [case_i, case_ii, case_iii].iter().filter(|&&c| c).count();
        t.check(hits == 1, &e.name, || {
            plain(format!("order {n}: cases (I, II, III) = ({case_i}, {case_ii}, {case_iii})"))
        });
        Ok(())
    });
    r
}

/// `G x Z_p`, `G x Z_{p^2}` and `G x Z_p x Z_p` within the lattice cap,
/// each with the added central factor.
fn direct_extensions(g: &Group, name: &str, p: usize, caps: &Caps) -> Result<Vec<(String, Group, Subgroup)>> {
    let mut out = Vec::new();
    let factors = [
        (format!("Z{p}"), cyclic(p)?),
        (format!("Z{}", p * p), cyclic(p * p)?),
        (format!("Z{p}xZ{p}"), direct_product(&cyclic(p)?, &cyclic(p)?, caps)?),
    ];
    for (label, z) in factors {
        if g.order() * z.order() > caps.lattice {
            continue;
        }
        let h = direct_product(g, &z, caps)?;
        let e = g.identity() * z.order();
        let a = Subgroup::from_members(&h, (0..z.order()).map(|b| e + b))?;
        out.push((format!("{name}x{label}"), h, a));
    }
    Ok(out)
}

/// The prime `p` for which `F(G)` is a nontrivial `p`-group.
fn fitting_prime(a: &Analysis) -> Result<Option<u64>> {
    let f = a.fitting()?;
    Ok(if f.order() > 1 { prime_of_power(f.order() as u64) } else { None })
}

fn sbp_with_fitting_prime(a: &Analysis) -> Result<Option<u64>> {
    if !is_sbp(a)?.value {
        return Ok(None);
    }
    fitting_prime(a)
}

/// Whether `|Z(h)|` is a power of `p` (including 1).
fn center_is_p_group(h: &Group, p: u64) -> bool {
    let z = center(h).order() as u64;
    z == 1 || prime_of_power(z) == Some(p)
}

/// Runs the central-extension check: over quotients `H/A` of catalog
/// groups by central `A`, and over direct extensions of catalog groups.
/// `base` returns the prime `p` when `G` meets the hypothesis.
fn extension_sweep<B>(ctx: &Context, r: &mut TheoremResult, base: B)
where
    B: Fn(&Analysis) -> Result<Option<u64>> + Sync + Send,
{
    let caps = ctx.caps;
    ctx.sweep(r, |e, a, t| {
        let h = a.group();
        if h.order() > caps.lattice {
            return Ok(());
        }
        let mut h_pnc: Option<Verdict> = None;
        for c in central_subgroups(h, &caps)? {
            let (q, _) = quotient_group(h, &c)?;
            let qa = fresh(q, &caps);
            let Some(p) = base(&qa)? else { continue };
            if !center_is_p_group(h, p) || !is_p_central_extension(h, &c, qa.group(), &caps)? {
                continue;
            }
            if h_pnc.is_none() {
                h_pnc = Some(is_pnc(a)?);
            }
            let v = h_pnc.as_ref().expect("just set");
            t.check(v.value, &e.name, || {
                (format!("extension by central subgroup of order {}: {}", c.order(), v.detail), v.witness.clone())
            });
        }
        let Some(p) = base(a)? else { return Ok(()) };
        for (name, ext, c) in direct_extensions(h, &e.name, p as usize, &caps)? {
            if !is_p_central_extension(&ext, &c, h, &caps)? {
                continue;
            }
            let v = is_pnc(&fresh(ext, &caps))?;
            t.check(v.value, &name, || explain(&v));
        }
        Ok(())
    });
}

fn verify_l3_10(ctx: &Context) -> TheoremResult {
    let mut r = TheoremResult::new(
        "L3.10",
        "a p-central extension of an SBP group G with F(G) a p-group is PNC",
        "central quotients of catalog groups and direct extensions G x Z_p^k of catalog groups",
        false,
    );
    extension_sweep(ctx, &mut r, sbp_with_fitting_prime);
    r
}

/// `(p, q)` when `|G| = p^n q` with primes `p > q`, `n >= 1`.
fn pnq_shape(order: usize) -> Option<(u64, u64)> {
    match factorize(order as u64).as_slice() {
        &[(q, 1), (p, _)] => Some((p, q)),
        _ => None,
    }
}

fn solvable_cp_pnq(a: &Analysis) -> Result<Option<u64>> {
    let g = a.group();
    let Some((p, _)) = pnq_shape(g.order()) else { return Ok(None) };
    Ok((is_cp(g).value && is_solvable(g)?.value).then_some(p))
}

fn verify_t3_13(ctx: &Context) -> TheoremResult {
    let mut r = TheoremResult::new(
        "T3.13",
        "a p-central extension of a solvable CP group of order p^n q with p > q is PNC",
        "central quotients of catalog groups and direct extensions G x Z_p^k of catalog groups; S4xZ2 over S4 as control",
        false,
    );
    extension_sweep(ctx, &mut r, solvable_cp_pnq);
    if let (Some(h), Some(g)) = (ctx.analysis("S4xZ2"), ctx.analysis("S4")) {
        let mut t = Tally::default();
        let control = (|| -> Result<(bool, String)> {
            let z = h.center();
            let ext = is_p_central_extension(h.group(), &z, g.group(), &ctx.caps)?;
            let shape = pnq_shape(g.group().order());
            let pnc = is_pnc(h)?.value;
            Ok((
                ext && shape.is_none() && !pnc,
                format!("2-central extension = {ext}, p > q shape = {}, pnc = {pnc}", shape.is_some()),
            ))
        })();
        match control {
            Ok((ok, detail)) => {
                t.check(ok, "S4xZ2", || plain(format!("control: {detail}")));
                t.note(format!("control S4xZ2 over S4: {detail}"));
            }
            Err(e) => t.note(format!("control S4xZ2 skipped: {e}")),
        }
        r.absorb(t);
    }
    r
}

fn verify_t3_11(ctx: &Context) -> TheoremResult {
    let mut r = TheoremResult::new(
        "T3.11",
        "for G soluble CP and P = O_p(G) > 1: G/P is cyclic of prime-power order prime to p, generalized quaternion with p odd, or of order p^a q^b with cyclic Sylows; at most two primes divide |G| and G/P is metabelian",
        "solvable CP catalog groups",
        true,
    );
    let congruence = ctx.sweep(&mut r, |e, a, t| {
        let g = a.group();
        if g.order() == 1 || !is_cp(g).value || !is_solvable(g)?.value {
            return Ok(());
        }
        let lattice = a.lattice()?;
        let primes = prime_divisors(g.order() as u64);
        let cores: Vec<(u64, Subgroup)> = primes
            .iter()
            .map(|&p| p_core(lattice, p).map(|c| (p, c)))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .filter(|(_, c)| !c.is_trivial())
            .collect();
        let Some((p, core)) = cores.first().cloned() else {
            t.check(false, &e.name, || plain("no nontrivial normal p-subgroup".into()));
            return Ok(());
        };
        let (q, _) = quotient_group(g, &core)?;
        let qn = q.order() as u64;
        let qf = factorize(qn);
        let cyclic_q = q.elements().any(|x| q.element_order(x) == q.order());
        let case_i = qn == 1 || (qf.len() == 1 && qf[0].0 != p && cyclic_q);
        let case_ii = p % 2 == 1
            && matches!(qn, 8 | 16 | 32)
            && is_isomorphic(&q, &generalized_quaternion(q.order())?, a.caps())?;
        let sylows_cyclic = qf.iter().all(|&(r, k)| q.element_orders().any(|o| o as u64 == r.pow(k)));
        let case_iii = qf.len() == 2 && qf.iter().any(|&(r, _)| r == p) && sylows_cyclic;
        let metabelian = derived_series(&q, &Subgroup::whole(&q))?.len() <= 3;
        let ok = primes.len() <= 2 && cores.len() == 1 && (case_i || case_ii || case_iii) && metabelian;
        t.check(ok, &e.name, || {
            plain(format!(
                "p = {p}, |G/P| = {qn}, cases (i, ii, iii) = ({case_i}, {case_ii}, {case_iii}), metabelian = {metabelian}, primes = {primes:?}"
            ))
        });
        if case_iii && !case_i {
            let a_exp = qf.iter().find(|&&(r, _)| r == p).map(|&(_, k)| k).unwrap_or(0);
            let other = qf.iter().find(|&&(r, _)| r != p).map(|&(r, _)| r).unwrap_or(0);
            if other % p.pow(a_exp) != 1 {
                t.flag(&e.name);
            }
        }
        Ok(())
    });
    r.notes.push(if congruence.is_empty() {
        "q = k p^a + 1 holds on every case (iii) instance".to_string()
    } else {
        format!("q = k p^a + 1 fails on: {}", congruence.join(", "))
    });
    r
}

fn verify_l3_12(ctx: &Context) -> TheoremResult {
    let mut r = TheoremResult::new("L3.12", "every finite CP group is PNC", "CP catalog groups", false);
    ctx.sweep(&mut r, |e, a, t| {
        if is_cp(a.group()).value {
            let v = is_pnc(a)?;
            t.check(v.value, &e.name, || explain(&v));
        }
        Ok(())
    });
    r
}

fn verify_p3_14(ctx: &Context) -> TheoremResult {
    let mut r = TheoremResult::new(
        "P3.14",
        "|G| = p^n q for primes p, q (not necessarily distinct)",
        "non-abelian solvable PNC catalog groups with an abelian maximal normal subgroup",
        false,
    );
    ctx.sweep(&mut r, |e, a, t| {
        if !solvable_nonabelian_pnc(a)? {
            return Ok(());
        }
        let g = a.group();
        let lattice = a.lattice()?;
        if !maximal_normal_subgroups(lattice).iter().any(|m| m.is_abelian(g)) {
            return Ok(());
        }
        let f = factorize(g.order() as u64);
        let ok = match f.as_slice() {
            [(_, k)] => *k >= 2,
            [(_, k), (_, l)] => *k == 1 || *l == 1,
            _ => false,
        };
        t.check(ok, &e.name, || plain(format!("order {} = {f:?}", g.order())));
        Ok(())
    });
    r
}

fn verify_c3_15(ctx: &Context) -> TheoremResult {
    let mut r = TheoremResult::new(
        "C3.15",
        "D_2n is PNC iff n is a prime power",
        "catalog dihedral groups with 3 <= n <= 32",
        false,
    );
    ctx.sweep(&mut r, |e, a, t| {
        let Construction::Dihedral { n } = e.construction else { return Ok(()) };
        if !(3..=32).contains(&n) {
            return Ok(());
        }
        let v = is_pnc(a)?;
        let pp = is_prime_power(n as u64);
        t.check(v.value == pp, &e.name, || {
            (format!("n = {n}, prime power = {pp}, pnc = {}: {}", v.value, v.detail), v.witness.clone())
        });
        Ok(())
    });
    r
}

/// The four right-hand conditions of the minimal non-nilpotent
/// characterization, evaluated on a concrete group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub conditions: BTreeMap<FamilyCondition, bool>,
    pub fitting_order: usize,
    /// Order of the complement `|G| / |F(G)|`.
    pub complement_order: usize,
}

impl Decomposition {
    pub fn holds(&self) -> bool {
        self.conditions.values().all(|&v| v)
    }

    pub fn failing(&self) -> Vec<FamilyCondition> {
        self.conditions.iter().filter(|(_, &v)| !v).map(|(&c, _)| c).collect()
    }

    fn describe(&self) -> String {
        let conds: Vec<String> = self.conditions.iter().map(|(c, v)| format!("{} = {v}", c.name())).collect();
        format!("|F(G)| = {}, |G:F(G)| = {}, {}", self.fitting_order, self.complement_order, conds.join(", "))
    }
}

/// Looks for `G = [F(G)]Q` with `F(G)` Sylow, `Q` cyclic of prime order
/// acting nontrivially, and every proper subgroup of non-prime-power order
/// abelian.
pub fn decompose(a: &Analysis) -> Result<Decomposition> {
    let g = a.group();
    let n = g.order();
    let (sylow, f) = fitting_is_sylow(a)?;
    let k = n / f.order();
    let prime_complement = is_prime(k as u64) && k.gcd(&f.order()) == 1;
    let acts = prime_complement
        && g.elements().any(|x| g.element_order(x) == k && f.generators().iter().any(|&y| g.mul(x, y) != g.mul(y, x)));
    let lattice = a.lattice()?;
    let abelian_non_p = lattice.entries().iter().all(|e| e.subgroup.order() == n || e.prime_power || e.abelian);
    let conditions = BTreeMap::from([
        (FamilyCondition::FittingSylow, sylow),
        (FamilyCondition::CyclicPrimeComplement, prime_complement),
        (FamilyCondition::NontrivialAction, acts),
        (FamilyCondition::ProperNonPAbelian, abelian_non_p),
    ]);
    Ok(Decomposition { conditions, fitting_order: f.order(), complement_order: k })
}

fn verify_t3_16(ctx: &Context) -> TheoremResult {
    let mut r = TheoremResult::new(
        "T3.16",
        "G is minimal non-nilpotent PNC iff G = [F(G)]Q with F(G) Sylow, Q cyclic of prime order acting nontrivially, and every proper non-p-subgroup abelian",
        "every catalog group; family constructions and their declared controls",
        false,
    );
    let exact = ctx.sweep(&mut r, |e, a, t| {
        let mnn = is_minimal_non_nilpotent(a)?;
        let pnc = is_pnc(a)?;
        let left = mnn.value && pnc.value;
        let d = decompose(a)?;
        if left {
            t.check(d.holds(), &e.name, || plain(format!("forward: {}", d.describe())));
        }
        if d.holds() {
            t.check(left, &e.name, || {
                plain(format!("backward: minimal non-nilpotent = {}, pnc = {} ({})", mnn.value, pnc.value, pnc.detail))
            });
        }
        if let Some(spec) = e.family() {
            match spec.breaks {
                None => {
                    t.check(d.holds(), &e.name, || plain(format!("family instance misses the form: {}", d.describe())))
                }
                Some(broken) => {
                    let fails = d.failing();
                    t.check(fails.contains(&broken) && !left, &e.name, || {
                        plain(format!("control breaking {}: {}; left side = {left}", broken.name(), d.describe()))
                    });
                    if fails == [broken] {
                        t.flag(&e.name);
                    }
                }
            }
        }
        Ok(())
    });
    r.notes.push(format!(
        "controls failing exactly their broken condition: {}",
        if exact.is_empty() { "none".to_string() } else { exact.join(", ") }
    ));
    r
}

/// Tags name expected property values: `pnc` or `!pnc`.
fn verify_tags(ctx: &Context) -> TheoremResult {
    let mut r =
        TheoremResult::new("TAGS", "catalog tags agree with computed properties", "every tagged catalog entry", false);
    ctx.sweep(&mut r, check_tags);
    r
}

fn check_tags(e: &CatalogEntry, a: &Analysis, t: &mut Tally) -> Result<()> {
    for tag in &e.tags {
        if tag == crate::catalog::CLASSIFICATION_TAG {
            continue;
        }
        let (expected, name) = match tag.strip_prefix('!') {
            Some(rest) => (false, rest),
            None => (true, tag.as_str()),
        };
        let Ok(property) = name.parse::<Property>() else {
            t.check(false, &e.name, || plain(format!("unknown tag {tag:?}")));
            continue;
        };
        let v = property.evaluate(a)?;
        t.check(v.value == expected, &e.name, || {
            (format!("tag {tag:?} but {} is {}: {}", property.name(), v.value, v.detail), v.witness.clone())
        });
    }
    Ok(())
}
