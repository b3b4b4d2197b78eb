use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::{replay, verify, verify_all, DegeneracyFlag, TheoremId, TheoremVerdict, Verdict};
use crate::enumerate::{enumerate_semigroups, Dedup, EnumerationConfig, MAX_ENUM_ORDER, MIN_ORDER};
use crate::error::{Error, Result};

/// Bumped whenever an entry is added, removed or reworded.
pub const ERRATA_VERSION: u32 = 1;

/// A documented class of failures under the literal reading of a statement.
pub struct Erratum {
    pub class: &'static str,
    pub theorems: &'static [TheoremId],
    pub justification: &'static str,
    applies: fn(&TheoremVerdict) -> bool,
}

impl Erratum {
    /// Whether this entry accounts for a failing verdict.
    pub fn covers(&self, v: &TheoremVerdict) -> bool {
        v.status == Verdict::Fails && self.theorems.contains(&v.theorem) && (self.applies)(v)
    }
}

pub static ERRATA: &[Erratum] = &[
    Erratum {
        class: "zero-degenerate",
        theorems: &[
            TheoremId::SimpleIff,
            TheoremId::MinIff,
            TheoremId::MinDisjoint,
            TheoremId::MinInab,
            TheoremId::MinIclass,
            TheoremId::MinJclass,
        ],
        justification: "Some nonzero a has SaS ⊆ {0}. Then SaS is the zero ideal rather than a \
                    nontrivial interior ideal, so the step \"SaS is an interior ideal inside I, \
                    hence SaS = I\" in the proofs breaks; the null semigroup of order 2 is \
                    interior-simple while SaS = {0} ≠ S.",
        applies: |v| v.flags.contains(&DegeneracyFlag::ZeroDegenerate),
    },
    Erratum {
        class: "principal-interior-gap",
        theorems: &[TheoremId::JSubI],
        justification:
            "I(a) contains the one-sided products Sa and aS, while IN(a) = {a, a²} ∪ SaS \
                    does not, so I(a) = I(b) does not force IN(a) = IN(b). The smallest \
                    counterexamples have order 5: with x·b = c for some x, b and c generate the \
                    same two-sided ideal {0, b, c} but IN(b) = {0, b} and IN(c) = {0, c}. No \
                    counterexample exists below order 5.",
        applies: replay,
    },
];

fn erratum_for(v: &TheoremVerdict) -> Option<&'static Erratum> {
    ERRATA.iter().find(|e| e.covers(v))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusInfo {
    /// Largest order present in the corpus (0 when empty).
    pub order: usize,
    pub count: usize,
    pub dedup: Dedup,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WitnessRecord {
    pub table: Vec<Vec<usize>>,
    pub detail: serde_json::Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremSummary {
    pub id: &'static str,
    pub holds: usize,
    pub fails: usize,
    pub skipped: usize,
    pub witnesses: Vec<WitnessRecord>,
    /// Failures not covered by any erratum.
    #[serde(skip)]
    pub unexplained: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ErratumEntry {
    pub class: &'static str,
    pub version: u32,
    pub theorems: Vec<&'static str>,
    pub justification: &'static str,
    /// Failures in this run accounted for by the entry.
    pub covered: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub schema: u32,
    pub corpus: CorpusInfo,
    pub theorems: Vec<TheoremSummary>,
    pub errata: Vec<ErratumEntry>,
}

impl SuiteReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn total_fails(&self) -> usize {
        self.theorems.iter().map(|t| t.fails).sum()
    }

    pub fn unexplained_fails(&self) -> usize {
        self.theorems.iter().map(|t| t.unexplained).sum()
    }

    pub fn summary(&self, t: TheoremId) -> Option<&TheoremSummary> {
        self.theorems.iter().find(|s| s.id == t.as_str())
    }
}

/// JSON detail of a failing verdict, with element tokens.
pub fn witness_detail(v: &TheoremVerdict) -> serde_json::Value {
    let s = &v.semigroup;
    let mut detail = match &v.witness {
        Some(w) => w.to_json(s),
        None => serde_json::json!({}),
    };
    let obj = detail.as_object_mut().expect("object");
    obj.insert("names".into(), serde_json::json!(s.names()));
    obj.insert(
        "zero".into(),
        serde_json::json!(s.zero().map(|z| s.name(z))),
    );
    let flags: Vec<&str> = v.flags.iter().map(|f| f.as_str()).collect();
    obj.insert("flags".into(), serde_json::json!(flags));
    obj.insert("replayed".into(), serde_json::json!(replay(v)));
    obj.insert(
        "erratum".into(),
        serde_json::json!(erratum_for(v).map(|e| e.class)),
    );
    detail
}

/// Verifies every theorem in `ts` on every semigroup of `corpus`.
///
/// Semigroups are checked in parallel; counts and witnesses are merged in
/// corpus order, so the report is a pure function of its inputs.
pub fn run_suite(corpus: &[crate::Semigroup], ts: &[TheoremId], dedup: Dedup) -> SuiteReport {
    let verdicts: Vec<Vec<TheoremVerdict>> = corpus.par_iter().map(|s| verify_all(s, ts)).collect();
    let mut covered: BTreeMap<&'static str, usize> = BTreeMap::new();
    let mut theorems: Vec<TheoremSummary> = ts
        .iter()
        .map(|t| TheoremSummary {
            id: t.as_str(),
            holds: 0,
            fails: 0,
            skipped: 0,
            witnesses: Vec::new(),
            unexplained: 0,
        })
        .collect();
    for row in &verdicts {
        for (summary, v) in theorems.iter_mut().zip(row) {
            match v.status {
                Verdict::Holds => summary.holds += 1,
                Verdict::Skipped => summary.skipped += 1,
                Verdict::Fails => {
                    summary.fails += 1;
                    match erratum_for(v) {
                        Some(e) => *covered.entry(e.class).or_default() += 1,
                        None => summary.unexplained += 1,
                    }
                    summary.witnesses.push(WitnessRecord {
                        table: v.semigroup.rows(),
                        detail: witness_detail(v),
                    });
                }
            }
        }
    }
    let errata = ERRATA
        .iter()
        .map(|e| ErratumEntry {
            class: e.class,
            version: ERRATA_VERSION,
            theorems: e.theorems.iter().map(|t| t.as_str()).collect(),
            justification: e.justification,
            covered: covered.get(e.class).copied().unwrap_or(0),
        })
        .collect();
    SuiteReport {
        schema: 1,
        corpus: CorpusInfo {
            order: corpus.iter().map(|s| s.order()).max().unwrap_or(0),
            count: corpus.len(),
            dedup,
        },
        theorems,
        errata,
    }
}

const CHUNK: usize = 4096;

/// First failing semigroup in labeled enumeration order, orders `1..=max_order`.
pub fn find_counterexample(t: TheoremId, max_order: usize) -> Result<Option<TheoremVerdict>> {
    if !(MIN_ORDER..=MAX_ENUM_ORDER).contains(&max_order) {
        return Err(Error::UnsupportedOrder(max_order));
    }
    for n in MIN_ORDER..=max_order {
        let mut it = enumerate_semigroups(EnumerationConfig::labeled(n))?;
        loop {
            let chunk: Vec<_> = it.by_ref().take(CHUNK).collect();
            if chunk.is_empty() {
                break;
            }
            let hit = chunk
                .par_iter()
                .map(|s| verify(s, t))
                .find_first(|v| v.status == Verdict::Fails);
            if hit.is_some() {
                return Ok(hit);
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::fixtures::*;

    #[test]
    fn empty_corpus() {
        let r = run_suite(&[], TheoremId::ALL, Dedup::Labeled);
        assert_eq!(r.corpus.count, 0);
        assert!(r
            .theorems
            .iter()
            .all(|t| t.holds + t.fails + t.skipped == 0));
    }

    #[test]
    fn single_theorem_on_example2() {
        let r = run_suite(&[s3()], &[TheoremId::MinIclass], Dedup::Labeled);
        assert_eq!((r.theorems[0].holds, r.theorems[0].fails), (1, 0));
    }

    #[test]
    fn null_semigroup_failure_is_covered() {
        let r = run_suite(&[n2()], &[TheoremId::SimpleIff], Dedup::Labeled);
        assert_eq!(r.total_fails(), 1);
        assert_eq!(r.unexplained_fails(), 0);
        assert_eq!(r.errata[0].covered, 1);
        let d = &r.theorems[0].witnesses[0].detail;
        assert_eq!(d["replayed"], true);
        assert_eq!(d["elements"]["a"], "e");
        assert_eq!(d["sets"]["SaS"], serde_json::json!(["0"]));
    }

    #[test]
    fn counterexample_search() {
        assert!(find_counterexample(TheoremId::IdealIsInterior, 3)
            .unwrap()
            .is_none());
        let v = find_counterexample(TheoremId::SimpleIff, 2)
            .unwrap()
            .unwrap();
        assert_eq!(v.semigroup.table(), &[0, 0, 0, 0]);
        assert_eq!(
            find_counterexample(TheoremId::SimpleIff, 7),
            Err(Error::UnsupportedOrder(7))
        );
    }
}
