//! Implications between properties, witness replay, and randomized invariants.

use std::sync::OnceLock;

use automizer_core::catalog::{cyclic, default_catalog, dihedral, symmetric, CatalogEntry};
use automizer_core::group::{direct_product, format_cycles, Permutation};
use automizer_core::numth::prime_divisors;
use automizer_core::predicates::{has_small_automizer, is_pnc, Analysis, Property, PropertyReport, Witness};
use automizer_core::subgroup::{automizer, center, centralizer, generated_subgroup, normalizer};
use automizer_core::{Caps, Group};
use proptest::prelude::*;

struct Row {
    name: String,
    group: Group,
    report: PropertyReport,
}

fn rows() -> &'static [Row] {
    static ROWS: OnceLock<Vec<Row>> = OnceLock::new();
    ROWS.get_or_init(|| {
        let caps = Caps::default();
        default_catalog(&caps)
            .unwrap()
            .into_iter()
            .map(|CatalogEntry { name, group, .. }| {
                let report = PropertyReport::compute(&Analysis::new(group.clone(), caps), &[]);
                Row { name, group, report }
            })
            .collect()
    })
}

fn holds(row: &Row, p: Property) -> bool {
    row.report.value(p).unwrap_or_else(|| panic!("{}: {} not computed", row.name, p))
}

#[test]
fn every_property_is_computed_for_the_default_catalog() {
    for row in rows() {
        assert!(row.report.errors.is_empty(), "{}: {:?}", row.name, row.report.errors);
        assert_eq!(row.report.properties.len(), Property::ALL.len());
    }
}

#[test]
fn implications_hold_across_the_catalog() {
    use Property::*;
    let implications = [
        (Abelian, Pnc),
        (Abelian, Nilpotent),
        (Nc, QuasiNc),
        (Nc, Pnc),
        (Cp, Pnc),
        (Nilpotent, Supersolvable),
        (Supersolvable, Solvable),
        (PrimePowerOrder, Nilpotent),
        (PrimePowerOrder, Pnc),
        (QuasiNc, Nnc),
        (MinimalNonNilpotent, Solvable),
    ];
    for row in rows() {
        for (a, b) in implications {
            assert!(!holds(row, a) || holds(row, b), "{}: {a} without {b}", row.name);
        }
    }
}

#[test]
fn nc_is_abelian_up_to_order_48() {
    for row in rows().iter().filter(|r| r.group.order() <= 48) {
        assert_eq!(holds(row, Property::Nc), holds(row, Property::Abelian), "{}", row.name);
    }
}

#[test]
fn sbp_without_cp_only_for_cyclic_of_order_pq() {
    for row in rows() {
        if holds(row, Property::Sbp) && !holds(row, Property::Cp) {
            let n = row.group.order() as u64;
            let primes = prime_divisors(n);
            assert!(holds(row, Property::Abelian), "{}", row.name);
            assert_eq!(primes.len(), 2, "{}", row.name);
            assert_eq!(primes[0] * primes[1], n, "{}", row.name);
        }
    }
}

/// Replays a PNC counterexample with plain subgroup operations.
fn replay_pnc_witness(g: &Group, witness: &Witness) {
    let h = witness.to_subgroup(g).unwrap().expect("subgroup witness");
    assert!(h.is_abelian(g));
    assert!(prime_divisors(h.order() as u64).len() >= 2);
    let n = normalizer(g, &h).unwrap();
    let c = centralizer(g, &h).unwrap();
    assert!(n.order() > c.order());
}

#[test]
fn false_verdicts_carry_replayable_witnesses() {
    let mut replayed = 0;
    for row in rows() {
        for (name, verdict) in &row.report.properties {
            if !verdict.value {
                assert!(verdict.witness.is_some(), "{}: {name} false without witness", row.name);
            }
        }
        let pnc = &row.report.properties["pnc"];
        if !pnc.value {
            replay_pnc_witness(&row.group, pnc.witness.as_ref().unwrap());
            replayed += 1;
        }
    }
    assert!(replayed >= 10, "only {replayed} non-PNC groups");
}

#[test]
fn abelian_subgroup_has_small_automizer_iff_trivial_automizer() {
    let caps = Caps::default();
    for row in rows().iter().filter(|r| r.group.order() <= 48) {
        let analysis = Analysis::new(row.group.clone(), caps);
        for info in analysis.abelian().unwrap() {
            let small = has_small_automizer(&row.group, &info.subgroup, &caps).unwrap().value;
            let trivial = automizer(&row.group, &info.subgroup).unwrap().is_trivial();
            assert_eq!(small, trivial, "{}", row.name);
        }
    }
}

#[test]
fn direct_products_of_abelian_groups_are_pnc() {
    let caps = Caps::default();
    for (a, b) in [(2, 3), (4, 6), (5, 6), (3, 10)] {
        let g = direct_product(&cyclic(a).unwrap(), &cyclic(b).unwrap(), &caps).unwrap();
        assert!(is_pnc(&Analysis::new(g, caps)).unwrap().value);
    }
}

fn perm_strategy(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree).collect::<Vec<_>>()).prop_shuffle().prop_map(|images| Permutation::from_images(images).unwrap())
}

fn s4_element(s4: &Group, p: &Permutation) -> usize {
    s4.find_label(&format_cycles(p)).expect("every permutation of degree 4 is in S4")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn subgroups_of_s4_are_pnc(gens in prop::collection::vec(perm_strategy(4), 1..3)) {
        let s4 = symmetric(4).unwrap();
        let seed: Vec<usize> = gens.iter().map(|p| s4_element(&s4, p)).collect();
        let h = generated_subgroup(&s4, &seed).unwrap();
        prop_assert_eq!(24 % h.order(), 0);
        let (sub, _) = h.to_group(&s4).unwrap();
        prop_assert!(is_pnc(&Analysis::new(sub, Caps::default())).unwrap().value);
    }

    #[test]
    fn automizer_is_normalizer_over_centralizer(n in 3usize..12, a in 0usize..24) {
        let g = dihedral(n).unwrap();
        let h = generated_subgroup(&g, &[a % g.order()]).unwrap();
        let aut = automizer(&g, &h).unwrap();
        prop_assert_eq!(aut.normalizer.order() % aut.centralizer.order(), 0);
        prop_assert_eq!(aut.order(), aut.normalizer.order() / aut.centralizer.order());
        prop_assert!(h.is_subgroup_of(&aut.normalizer));
        prop_assert!(center(&g).is_subgroup_of(&aut.centralizer));
    }

    #[test]
    fn direct_product_orders_multiply(a in 1usize..9, b in 3usize..7) {
        let g = direct_product(&cyclic(a).unwrap(), &dihedral(b).unwrap(), &Caps::default()).unwrap();
        prop_assert_eq!(g.order(), a * 2 * b);
        prop_assert_eq!(center(&g).order() % a, 0);
    }
}
