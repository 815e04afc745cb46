use super::{Action, CatalogEntry, Construction, FamilyCondition, FamilySpec};
use crate::caps::Caps;
use crate::error::Result;
use crate::exec::Exec;
use crate::numth::is_prime_power;

/// Marks one representative per isomorphism class of order at most 15.
pub const CLASSIFICATION_TAG: &str = "classification";

type Spec = (String, Construction, Vec<&'static str>);

fn cyc(n: usize) -> Construction {
    Construction::Cyclic { n }
}

fn elem(p: usize, rank: u32) -> Construction {
    Construction::ElementaryAbelian { p, rank }
}

fn product(factors: Vec<Construction>) -> Construction {
    Construction::DirectProduct { factors }
}

fn family(
    p: u64,
    q: u64,
    kernel: Construction,
    complement: Construction,
    action: Action,
    breaks: Option<FamilyCondition>,
) -> Construction {
    Construction::MinimalNonNilpotent(FamilySpec {
        p,
        q,
        kernel: Box::new(kernel),
        complement: Box::new(complement),
        action,
        breaks,
    })
}

fn specs() -> Vec<Spec> {
    let mut out: Vec<Spec> = Vec::new();
    let mut add = |name: &str, c: Construction, tags: &[&'static str]| out.push((name.to_string(), c, tags.to_vec()));

    for n in 1..=24 {
        let mut tags = vec!["abelian", "pnc", "nc"];
        tags.push(if is_prime_power(n as u64) { "cp" } else { "!cp" });
        if n <= 15 {
            tags.push(CLASSIFICATION_TAG);
        }
        add(&format!("Z{n}"), cyc(n), &tags);
    }
    for n in 3..=32 {
        let mut tags = vec!["!abelian", "!nc"];
        tags.push(if is_prime_power(n as u64) { "pnc" } else { "!pnc" });
        if matches!(n, 4..=7) {
            tags.push(CLASSIFICATION_TAG);
        }
        add(&format!("D{}", 2 * n), Construction::Dihedral { n }, &tags);
    }

    let s3 = [
        "!abelian",
        "!nc",
        "pnc",
        "quasi_nc",
        "nnc",
        "cp",
        "sbp",
        "supersolvable",
        "a_group",
        "minimal_non_nilpotent",
        CLASSIFICATION_TAG,
    ];
    add("S3", Construction::Symmetric { n: 3 }, &s3);
    add(
        "S4",
        Construction::Symmetric { n: 4 },
        &["pnc", "cp", "solvable", "!supersolvable", "!a_group", "!sbp", "!minimal_non_nilpotent"],
    );
    add(
        "A4",
        Construction::Alternating { n: 4 },
        &["pnc", "cp", "sbp", "minimal_non_nilpotent", "!supersolvable", CLASSIFICATION_TAG],
    );
    add("A5", Construction::Alternating { n: 5 }, &["!solvable", "cp", "pnc"]);
    add("Q8", Construction::Quaternion { order: 8 }, &["!abelian", "nilpotent", "pnc", "!nc", CLASSIFICATION_TAG]);
    add("Q16", Construction::Quaternion { order: 16 }, &["nilpotent", "pnc"]);
    add("Q32", Construction::Quaternion { order: 32 }, &["nilpotent", "pnc"]);
    add("Z2^2", elem(2, 2), &["abelian", "nc", CLASSIFICATION_TAG]);
    add("Z2^3", elem(2, 3), &["abelian", CLASSIFICATION_TAG]);
    add("Z3^2", elem(3, 2), &["abelian", CLASSIFICATION_TAG]);
    add("Z3^3", elem(3, 3), &["abelian"]);
    add("Z4xZ2", product(vec![cyc(4), cyc(2)]), &["abelian", CLASSIFICATION_TAG]);
    add("Z6xZ2", product(vec![cyc(6), cyc(2)]), &["abelian", CLASSIFICATION_TAG]);
    add(
        "Dic12",
        Construction::Semidirect { kernel: Box::new(cyc(3)), complement: Box::new(cyc(4)), action: Action::Inversion },
        &["!pnc", "minimal_non_nilpotent", CLASSIFICATION_TAG],
    );
    add("S3xZ3", product(vec![Construction::Symmetric { n: 3 }, cyc(3)]), &["pnc", "quasi_nc", "!abelian", "!cp"]);
    add("S4xZ2", product(vec![Construction::Symmetric { n: 4 }, cyc(2)]), &["!pnc", "!nnc", "!cp"]);
    add("A3xZ2", product(vec![Construction::Alternating { n: 3 }, cyc(2)]), &["abelian", "pnc"]);
    add("SBP(2,3)", Construction::SbpTypeIii { p: 2, q: 3 }, &["sbp", "cp", "pnc"]);
    add("SBP(2,7)", Construction::SbpTypeIii { p: 2, q: 7 }, &["sbp", "cp", "pnc"]);
    add("SBP(2,5)", Construction::SbpTypeIii { p: 2, q: 5 }, &["sbp", "cp", "pnc"]);

    add("S3xS3", product(vec![Construction::Symmetric { n: 3 }, Construction::Symmetric { n: 3 }]), &["!pnc"]);
    add("Z2xQ8", product(vec![cyc(2), Construction::Quaternion { order: 8 }]), &["nilpotent", "pnc"]);
    add("A4xZ2", product(vec![Construction::Alternating { n: 4 }, cyc(2)]), &["pnc"]);
    add("S3xZ5", product(vec![Construction::Symmetric { n: 3 }, cyc(5)]), &["!pnc"]);
    add("S3xZ9", product(vec![Construction::Symmetric { n: 3 }, cyc(9)]), &["pnc"]);
    add("S3xZ3xZ3", product(vec![Construction::Symmetric { n: 3 }, cyc(3), cyc(3)]), &["pnc"]);
    add("D10xZ5", product(vec![Construction::Dihedral { n: 5 }, cyc(5)]), &["pnc"]);
    add("D18xZ3", product(vec![Construction::Dihedral { n: 9 }, cyc(3)]), &["pnc"]);
    add("D14xZ7", product(vec![Construction::Dihedral { n: 7 }, cyc(7)]), &["pnc"]);
    add(
        "F20",
        Construction::Semidirect {
            kernel: Box::new(cyc(5)),
            complement: Box::new(cyc(4)),
            action: Action::Automorphism { order: 4 },
        },
        &["cp", "pnc", "supersolvable"],
    );

    let mnn = ["minimal_non_nilpotent", "pnc"];
    add("[Z3]Z2", family(3, 2, cyc(3), cyc(2), Action::Inversion, None), &mnn);
    add("[Z2^2]Z3", family(2, 3, elem(2, 2), cyc(3), Action::Automorphism { order: 3 }, None), &mnn);
    add("[Z5]Z2", family(5, 2, cyc(5), cyc(2), Action::Inversion, None), &mnn);
    add("[Z7]Z2", family(7, 2, cyc(7), cyc(2), Action::Inversion, None), &mnn);
    add("[Z7]Z3", family(7, 3, cyc(7), cyc(3), Action::Automorphism { order: 3 }, None), &mnn);
    add("[Z13]Z3", family(13, 3, cyc(13), cyc(3), Action::Automorphism { order: 3 }, None), &mnn);
    add("[Z11]Z5", family(11, 5, cyc(11), cyc(5), Action::Automorphism { order: 5 }, None), &mnn);
    add(
        "[Q8]Z3",
        family(2, 3, Construction::Quaternion { order: 8 }, cyc(3), Action::Automorphism { order: 3 }, None),
        &mnn,
    );
    add("[Z2^3]Z7", family(2, 7, elem(2, 3), cyc(7), Action::Automorphism { order: 7 }, None), &mnn);
    add("[Z5^2]Z3", family(5, 3, elem(5, 2), cyc(3), Action::Automorphism { order: 3 }, None), &mnn);
    add(
        "[Z3]Z2-trivial",
        family(3, 2, cyc(3), cyc(2), Action::Trivial, Some(FamilyCondition::NontrivialAction)),
        &["abelian", "!minimal_non_nilpotent"],
    );
    add(
        "[Z2^2](Z3xZ3)",
        family(
            2,
            3,
            elem(2, 2),
            product(vec![cyc(3), cyc(3)]),
            Action::FirstFactor { order: 3 },
            Some(FamilyCondition::CyclicPrimeComplement),
        ),
        &["!minimal_non_nilpotent"],
    );
    add(
        "[Z3^2]Z2",
        family(3, 2, elem(3, 2), cyc(2), Action::Inversion, Some(FamilyCondition::ProperNonPAbelian)),
        &["!minimal_non_nilpotent", "pnc"],
    );
    add(
        "[Z9]Z2",
        family(3, 2, cyc(9), cyc(2), Action::Inversion, Some(FamilyCondition::ProperNonPAbelian)),
        &["!minimal_non_nilpotent", "pnc"],
    );
    out
}

/// The built-in catalog, in a fixed order.
pub fn default_catalog(caps: &Caps) -> Result<Vec<CatalogEntry>> {
    let specs = specs();
    Exec::default()
        .map(&specs, |(name, c, tags)| CatalogEntry::new(name.clone(), c.clone(), tags, caps))
        .into_iter()
        .collect()
}
