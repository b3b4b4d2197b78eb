//! Theorem registry, per-semigroup verdicts, corpus sweeps and
//! counterexample search.
//!
//! Each statement is checked literally. Hypotheses are evaluated first; a
//! statement whose hypothesis fails is `Skipped`, not `Holds`. Failures carry
//! a [`Witness`] that [`replay`] re-checks from the raw multiplication table.

mod context;
mod registry;
mod replay;
mod report;
mod theorems;

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::elemset::ElemSet;
use crate::semigroup::Semigroup;

pub use registry::TheoremId;
pub use replay::replay;
pub use report::{
    find_counterexample, run_suite, witness_detail, CorpusInfo, Erratum, ErratumEntry, SuiteReport,
    TheoremSummary, WitnessRecord, ERRATA, ERRATA_VERSION,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
    Skipped,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DegeneracyFlag {
    /// A nonzero `a` has `SaS ⊆ {0}`.
    ZeroDegenerate,
    /// The statement's quantified domain or premise was empty.
    VacuousHypothesis,
}

impl DegeneracyFlag {
    pub fn as_str(self) -> &'static str {
        match self {
            DegeneracyFlag::ZeroDegenerate => "zero-degenerate",
            DegeneracyFlag::VacuousHypothesis => "vacuous-hypothesis",
        }
    }
}

/// Concrete data behind a verdict: named sets, named elements and the truth
/// values of each clause of an equivalence.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Witness {
    pub sets: BTreeMap<&'static str, ElemSet>,
    pub elements: BTreeMap<&'static str, usize>,
    pub conditions: BTreeMap<&'static str, bool>,
}

impl Witness {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(mut self, key: &'static str, s: ElemSet) -> Self {
        self.sets.insert(key, s);
        self
    }

    pub fn elem(mut self, key: &'static str, a: usize) -> Self {
        self.elements.insert(key, a);
        self
    }

    pub fn cond(mut self, key: &'static str, v: bool) -> Self {
        self.conditions.insert(key, v);
        self
    }

    /// JSON rendering with element tokens.
    pub fn to_json(&self, s: &Semigroup) -> serde_json::Value {
        let sets: BTreeMap<&str, Vec<String>> = self
            .sets
            .iter()
            .map(|(k, v)| (*k, s.set_names(v)))
            .collect();
        let elements: BTreeMap<&str, &str> = self
            .elements
            .iter()
            .map(|(k, &a)| (*k, s.name(a)))
            .collect();
        serde_json::json!({
            "sets": sets,
            "elements": elements,
            "conditions": self.conditions,
        })
    }
}

/// Outcome of one theorem on one semigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremVerdict {
    pub theorem: TheoremId,
    pub semigroup: Semigroup,
    pub status: Verdict,
    /// Always present when `status` is `Fails`.
    pub witness: Option<Witness>,
    pub flags: BTreeSet<DegeneracyFlag>,
}

/// Checks one theorem against one semigroup.
pub fn verify(s: &Semigroup, t: TheoremId) -> TheoremVerdict {
    let analysis = context::Analysis::new(s);
    theorems::evaluate(&analysis, t)
}

/// [`verify`] keyed by the theorem's string id.
pub fn verify_id(s: &Semigroup, id: &str) -> crate::error::Result<TheoremVerdict> {
    Ok(verify(s, id.parse()?))
}

/// Checks several theorems against one semigroup, sharing the analysis.
pub fn verify_all(s: &Semigroup, ts: &[TheoremId]) -> Vec<TheoremVerdict> {
    let analysis = context::Analysis::new(s);
    ts.iter()
        .map(|&t| theorems::evaluate(&analysis, t))
        .collect()
}
