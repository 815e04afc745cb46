//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use automizer_core::catalog::{cyclic, dihedral, CatalogEntry};
use automizer_core::group::is_isomorphic;
use automizer_core::harness::{decompose, run_all, HarnessConfig, Status};
use automizer_core::predicates::{
    has_small_automizer, is_abelian, is_cp, is_minimal_non_nilpotent, is_nc, is_pnc, is_solvable, Analysis,
};
use automizer_core::subgroup::{all_subgroups, automizer, center, fitting_subgroup, fitting_via_p_cores};
use automizer_core::{Caps, Group, Subgroup};
use common::{brute_force_subgroups, catalog, entry, fitting_oracle, is_prime_power, mask};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn analysis(g: &Group) -> Analysis {
    Analysis::new(g.clone(), Caps::default())
}

fn pnc(g: &Group) -> Result<bool, String> {
    is_pnc(&analysis(g)).map(|v| v.value).map_err(|e| e.to_string())
}

fn non_prime_power_abelian(g: &Group) -> Vec<Subgroup> {
    all_subgroups(g, &Caps::default())
        .unwrap()
        .subgroups()
        .filter(|h| h.is_abelian(g) && !is_prime_power(h.order()))
        .cloned()
        .collect()
}

fn motivating_example() -> Outcome {
    let g = &entry("S3xZ3").group;
    ensure(pnc(g)?, || "S3xZ3 is not PNC".into())?;
    let subgroups = non_prime_power_abelian(g);
    ensure(subgroups.len() == 3, || format!("{} abelian non-prime-power subgroups, expected 3", subgroups.len()))?;
    for h in &subgroups {
        ensure(h.order() == 6, || format!("subgroup of order {}", h.order()))?;
        let aut = automizer(g, h).map_err(|e| e.to_string())?;
        ensure(aut.normalizer == aut.centralizer, || "N != C".into())?;
        let involutions = h.elements().into_iter().filter(|&a| g.element_order(a) == 2).count();
        ensure(involutions == 1, || "order-6 subgroup is not {1, t} x Z3".into())?;
    }
    Ok("PNC; exactly three order-6 subgroups {1,t}xZ3, each with N = C".into())
}

fn negative_control() -> Outcome {
    let g = &entry("S4xZ2").group;
    let a = analysis(g);
    let verdict = is_pnc(&a).map_err(|e| e.to_string())?;
    ensure(!verdict.value, || "S4xZ2 reported PNC".into())?;
    let h = verdict
        .witness
        .ok_or("no witness")?
        .to_subgroup(g)
        .map_err(|e| e.to_string())?
        .ok_or("witness is not a subgroup")?;
    ensure(h.order() == 6, || format!("witness of order {}", h.order()))?;
    let (hg, _) = h.to_group(g).map_err(|e| e.to_string())?;
    let z6 = cyclic(6).unwrap();
    ensure(is_isomorphic(&hg, &z6, &Caps::default()).unwrap(), || "witness not cyclic".into())?;
    let aut = automizer(g, &h).map_err(|e| e.to_string())?;
    ensure(!aut.is_trivial(), || "witness has trivial automizer".into())?;
    let small = has_small_automizer(g, &h, &Caps::default()).map_err(|e| e.to_string())?;
    ensure(!small.value, || "witness has small automizer".into())?;
    Ok(format!("not PNC; witness Z6 with |Aut_G(H)| = {}", aut.order()))
}

fn zassenhaus_sweep() -> Outcome {
    let mut n = 0;
    for e in catalog().iter().filter(|e| e.group.order() <= 48) {
        let nc = is_nc(&analysis(&e.group)).map_err(|x| x.to_string())?.value;
        ensure(nc == is_abelian(&e.group).value, || format!("mismatch on {}", e.name))?;
        n += 1;
    }
    Ok(format!("{n} groups of order <= 48, zero mismatches"))
}

fn dihedral_criterion() -> Outcome {
    let mut n_checked = 0;
    for n in 3..=32 {
        let g = dihedral(n).map_err(|e| e.to_string())?;
        ensure(pnc(&g)? == is_prime_power(n), || format!("D{} disagrees", 2 * n))?;
        n_checked += 1;
    }
    ensure(n_checked == 30, || format!("{n_checked} instances"))?;
    Ok("30 instances, exact match with the prime-power test".into())
}

fn subgroup_closure() -> Outcome {
    let mut groups = 0;
    let mut subgroups = 0;
    for e in catalog().iter().filter(|e| e.group.order() <= 48) {
        if !pnc(&e.group)? {
            continue;
        }
        groups += 1;
        for h in all_subgroups(&e.group, &Caps::default()).unwrap().subgroups() {
            let (hg, _) = h.to_group(&e.group).map_err(|x| x.to_string())?;
            ensure(pnc(&hg)?, || format!("{}: subgroup of order {} not PNC", e.name, h.order()))?;
            subgroups += 1;
        }
    }
    Ok(format!("{subgroups} subgroups of {groups} PNC groups, zero failures"))
}

fn cp_implies_pnc() -> Outcome {
    let mut cp = 0;
    for e in catalog() {
        if is_cp(&e.group).value {
            cp += 1;
            ensure(pnc(&e.group)?, || format!("{} is CP but not PNC", e.name))?;
        }
    }
    for name in ["SBP(2,3)", "SBP(2,7)"] {
        ensure(is_cp(&entry(name).group).value, || format!("{name} is not CP"))?;
    }
    Ok(format!("{cp} CP groups of {}, all PNC", catalog().len()))
}

fn mnn_pnc(g: &Group) -> Result<(bool, bool), String> {
    let a = analysis(g);
    let mnn = is_minimal_non_nilpotent(&a).map_err(|e| e.to_string())?.value;
    let pnc = is_pnc(&a).map_err(|e| e.to_string())?.value;
    Ok((mnn, pnc))
}

fn minimal_non_nilpotent() -> Outcome {
    for name in ["S3", "A4"] {
        let d = decompose(&analysis(&entry(name).group)).map_err(|e| e.to_string())?;
        ensure(d.holds(), || format!("{name} does not decompose: {:?}", d.failing()))?;
    }
    let families: Vec<&CatalogEntry> = catalog().iter().filter(|e| e.family().is_some()).collect();
    let mut positives = 0;
    let mut controls = BTreeSet::new();
    for e in families {
        let spec = e.family().unwrap();
        let d = decompose(&analysis(&e.group)).map_err(|x| x.to_string())?;
        let (mnn, pnc) = mnn_pnc(&e.group)?;
        match spec.breaks {
            None => {
                ensure(d.holds() && mnn && pnc, || format!("{} fails the backward direction", e.name))?;
                positives += 1;
            }
            Some(broken) => {
                ensure(!(mnn && pnc), || format!("control {} satisfies both predicates", e.name))?;
                if d.failing() == [broken] {
                    controls.insert(e.name.clone());
                }
            }
        }
    }
    ensure(positives >= 5, || format!("{positives} family instances"))?;
    ensure(!controls.is_empty(), || "no control fails exactly its broken condition".into())?;
    let broken: Vec<&str> = controls.iter().map(String::as_str).collect();
    Ok(format!("S3, A4 decompose; {positives} family instances; exact controls: {}", broken.join(", ")))
}

fn oracle_equivalence() -> Outcome {
    let mut small = 0;
    let mut fitting = 0;
    for e in catalog() {
        let g = &e.group;
        if g.order() > 64 {
            continue;
        }
        let lattice = all_subgroups(g, &Caps::default()).map_err(|x| x.to_string())?;
        if g.order() <= 16 {
            let found: BTreeSet<u32> = lattice.subgroups().map(mask).collect();
            ensure(found == brute_force_subgroups(g), || format!("lattice mismatch on {}", e.name))?;
            small += 1;
        }
        let subgroups: Vec<Subgroup> = lattice.subgroups().cloned().collect();
        let joined = fitting_subgroup(&lattice).map_err(|x| x.to_string())?;
        let cores = fitting_via_p_cores(&lattice).map_err(|x| x.to_string())?;
        let oracle = fitting_oracle(g, &subgroups);
        ensure(joined == cores && joined.elements().into_iter().collect::<BTreeSet<_>>() == oracle, || {
            format!("Fitting mismatch on {}", e.name)
        })?;
        fitting += 1;
    }
    Ok(format!("{small} lattices against subset enumeration, {fitting} Fitting subgroups against p-cores"))
}

fn prime_power_fitting_and_center() -> Outcome {
    let mut instances = 0;
    for e in catalog() {
        let g = &e.group;
        let solvable = is_solvable(g).map_err(|x| x.to_string())?.value;
        if is_abelian(g).value || !solvable || !pnc(g)? {
            continue;
        }
        let a = analysis(g);
        let f = a.fitting().map_err(|x| x.to_string())?;
        ensure(is_prime_power(f.order()), || format!("{}: |F(G)| = {}", e.name, f.order()))?;
        let z = center(g);
        ensure(is_prime_power(z.order()), || format!("{}: |Z(G)| = {}", e.name, z.order()))?;
        instances += 1;
    }
    let config = HarnessConfig { only: ["L3.1", "L3.2"].iter().map(|s| s.to_string()).collect(), ..Default::default() };
    let report = run_all(catalog(), &config).map_err(|x| x.to_string())?;
    for r in &report.results {
        ensure(r.status == Status::Pass && r.instances >= 5, || {
            format!("{}: {:?}, {} instances", r.id, r.status, r.instances)
        })?;
    }
    ensure(instances >= 5, || format!("{instances} instances"))?;
    Ok(format!("{instances} solvable non-abelian PNC groups, zero violations"))
}

fn full_verify() -> Outcome {
    let config = HarnessConfig::default();
    let first = run_all(catalog(), &config).map_err(|e| e.to_string())?;
    let second = run_all(catalog(), &config).map_err(|e| e.to_string())?;
    for r in &first.results {
        ensure(r.status != Status::Fail, || format!("{} failed: {:?}", r.id, r.failures))?;
    }
    let a = serde_json::to_string_pretty(&first.results).unwrap();
    let b = serde_json::to_string_pretty(&second.results).unwrap();
    ensure(a == b, || "reports differ between runs".into())?;
    let s = first.summary;
    Ok(format!("{} passed, {} failed, {} vacuous; byte-stable", s.passed, s.failed, s.vacuous))
}

struct Criterion {
    number: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion { number: 1, name: "S3xZ3 motivating example", limit: secs(1), run: motivating_example },
        Criterion { number: 2, name: "S4xZ2 negative control", limit: secs(30), run: negative_control },
        Criterion { number: 3, name: "NC iff abelian sweep", limit: secs(120), run: zassenhaus_sweep },
        Criterion { number: 4, name: "dihedral PNC criterion", limit: secs(60), run: dihedral_criterion },
        Criterion { number: 5, name: "subgroup closure of PNC", limit: secs(120), run: subgroup_closure },
        Criterion { number: 6, name: "CP implies PNC", limit: secs(120), run: cp_implies_pnc },
        Criterion { number: 7, name: "minimal non-nilpotent PNC groups", limit: secs(120), run: minimal_non_nilpotent },
        Criterion { number: 8, name: "oracle equivalence", limit: secs(120), run: oracle_equivalence },
        Criterion {
            number: 9,
            name: "F(G) and Z(G) are p-groups",
            limit: secs(120),
            run: prime_power_fitting_and_center,
        },
        Criterion { number: 10, name: "full verify run", limit: secs(300), run: full_verify },
    ];
    // Build the catalog outside the timed sections.
    let _ = catalog();
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if elapsed > c.limit => Err(format!("{msg}; took {elapsed:.2?}, limit {:?}", c.limit)),
            other => other,
        };
        match outcome {
            Ok(msg) => println!("criterion {:>2} PASS  {}: {msg} ({elapsed:.2?})", c.number, c.name),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {}: {msg} ({elapsed:.2?})", c.number, c.name);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
