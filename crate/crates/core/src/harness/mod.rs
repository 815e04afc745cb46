//! Verifiers for the structural statements, run over a catalog.
//!
//! Each verifier filters the catalog by a computed hypothesis, checks the
//! conclusion on every instance, and records failures with witnesses.
//! Results are reduced in catalog order, so reports are deterministic.

mod verifiers;

pub use verifiers::{decompose, Decomposition};

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::catalog::CatalogEntry;
use crate::error::{GroupError, Result};
use crate::exec::Exec;
use crate::predicates::{Analysis, Witness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Vacuous,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub group: String,
    pub detail: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremResult {
    pub id: String,
    pub statement: String,
    pub hypothesis: String,
    /// Quoted from elsewhere and checked as an observed fact.
    pub observed: bool,
    pub instances: usize,
    pub passed: usize,
    pub failures: Vec<Failure>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub status: Status,
}

impl TheoremResult {
    fn new(id: &str, statement: &str, hypothesis: &str, observed: bool) -> Self {
        TheoremResult {
            id: id.to_string(),
            statement: statement.to_string(),
            hypothesis: hypothesis.to_string(),
            observed,
            instances: 0,
            passed: 0,
            failures: Vec::new(),
            notes: Vec::new(),
            status: Status::Vacuous,
        }
    }

    fn finish(mut self) -> Self {
        self.status = if !self.failures.is_empty() {
            Status::Fail
        } else if self.instances == 0 {
            Status::Vacuous
        } else {
            Status::Pass
        };
        self
    }

    fn absorb(&mut self, tally: Tally) {
        self.instances += tally.instances;
        self.passed += tally.passed;
        self.failures.extend(tally.failures);
        self.notes.extend(tally.notes);
    }
}

/// Per-entry accumulator, merged into a result in catalog order.
#[derive(Debug, Default)]
struct Tally {
    instances: usize,
    passed: usize,
    failures: Vec<Failure>,
    notes: Vec<String>,
    flagged: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, group: &str, explain: impl FnOnce() -> (String, Option<Witness>)) {
        self.instances += 1;
        if ok {
            self.passed += 1;
        } else {
            let (detail, witness) = explain();
            self.failures.push(Failure { group: group.to_string(), detail, witness });
        }
    }

    fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Marks a group for a verifier-level note.
    fn flag(&mut self, group: &str) {
        self.flagged.push(group.to_string());
    }
}

#[derive(Debug, Clone, Default)]
pub struct HarnessConfig {
    pub caps: Caps,
    /// Verifier ids to run; all when empty.
    pub only: BTreeSet<String>,
    pub exec: Exec,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub vacuous: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HarnessReport {
    pub results: Vec<TheoremResult>,
    pub summary: Summary,
}

impl HarnessReport {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }
}

/// Verifier ids in run order.
pub fn verifier_ids() -> Vec<&'static str> {
    verifiers::REGISTRY.iter().map(|(id, _)| *id).collect()
}

pub fn check_ids<S: AsRef<str>>(ids: &[S]) -> Result<()> {
    let known = verifier_ids();
    match ids.iter().find(|id| !known.contains(&id.as_ref())) {
        Some(id) => Err(GroupError::ParameterOutOfRange(format!(
            "unknown verifier {:?}; known: {}",
            id.as_ref(),
            known.join(", ")
        ))),
        None => Ok(()),
    }
}

/// Shared state for one harness run: one lazily filled analysis per entry.
pub(crate) struct Context<'a> {
    catalog: &'a [CatalogEntry],
    analyses: Vec<Analysis>,
    caps: Caps,
    exec: Exec,
}

impl<'a> Context<'a> {
    fn new(catalog: &'a [CatalogEntry], config: &HarnessConfig) -> Self {
        let analyses =
            catalog.iter().map(|e| Analysis::new(e.group.clone(), config.caps).with_exec(config.exec)).collect();
        Context { catalog, analyses, caps: config.caps, exec: config.exec }
    }

    fn analysis(&self, name: &str) -> Option<&Analysis> {
        self.catalog.iter().position(|e| e.name == name).map(|i| &self.analyses[i])
    }

    /// Runs `f` on every entry and merges the tallies in catalog order,
    /// returning the flagged group names. Entries that exceed a cap are
    /// skipped with a note; other errors are failures.
    fn sweep<F>(&self, result: &mut TheoremResult, f: F) -> Vec<String>
    where
        F: Fn(&CatalogEntry, &Analysis, &mut Tally) -> Result<()> + Sync + Send,
    {
        let tallies = self.exec.map_range(self.catalog.len(), |i| {
            let mut tally = Tally::default();
            let outcome = f(&self.catalog[i], &self.analyses[i], &mut tally);
            (tally, outcome)
        });
        let mut skipped = Vec::new();
        let mut flagged = Vec::new();
        for ((mut tally, outcome), entry) in tallies.into_iter().zip(self.catalog) {
            flagged.append(&mut tally.flagged);
            result.absorb(tally);
            match outcome {
                Ok(()) => {}
                Err(e @ (GroupError::OrderCapExceeded { .. } | GroupError::LatticeBlowup { .. })) => {
                    skipped.push(format!("{} ({e})", entry.name));
                }
                Err(e) => {
                    result.failures.push(Failure { group: entry.name.clone(), detail: e.to_string(), witness: None })
                }
            }
        }
        if !skipped.is_empty() {
            result.notes.push(format!("skipped over caps: {}", skipped.join("; ")));
        }
        flagged
    }
}

/// Runs the selected verifiers over `catalog`.
pub fn run_all(catalog: &[CatalogEntry], config: &HarnessConfig) -> Result<HarnessReport> {
    config.caps.validate()?;
    let only: Vec<&String> = config.only.iter().collect();
    check_ids(&only)?;
    let ctx = Context::new(catalog, config);
    let selected: Vec<_> =
        verifiers::REGISTRY.iter().filter(|(id, _)| config.only.is_empty() || config.only.contains(*id)).collect();
    let results: Vec<TheoremResult> = config.exec.map(&selected, |(_, verify)| verify(&ctx).finish());
    let summary = Summary {
        passed: results.iter().filter(|r| r.status == Status::Pass).count(),
        failed: results.iter().filter(|r| r.status == Status::Fail).count(),
        vacuous: results.iter().filter(|r| r.status == Status::Vacuous).count(),
    };
    Ok(HarnessReport { results, summary })
}

/// Fixed-width table with one row per verifier, then failures and notes.
pub fn render_table(report: &HarnessReport) -> String {
    let mut out = String::new();
    let _ =
        writeln!(out, "{:<6} {:<8} {:>9} {:>7} {:>8}  statement", "id", "status", "instances", "passed", "failures");
    for r in &report.results {
        let status = match r.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Vacuous => "VACUOUS",
        };
        let observed = if r.observed { " (observed)" } else { "" };
        let _ = writeln!(
            out,
            "{:<6} {:<8} {:>9} {:>7} {:>8}  {}{}",
            r.id,
            status,
            r.instances,
            r.passed,
            r.failures.len(),
            r.statement,
            observed
        );
    }
    for r in &report.results {
        for f in &r.failures {
            let _ = writeln!(out, "{} failure on {}: {}", r.id, f.group, f.detail);
        }
        for n in &r.notes {
            let _ = writeln!(out, "{} note: {}", r.id, n);
        }
    }
    let s = report.summary;
    let _ = writeln!(out, "summary: {} passed, {} failed, {} vacuous", s.passed, s.failed, s.vacuous);
    out
}
