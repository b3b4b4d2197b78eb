//! Human-readable and JSON renderings. Everything shown to users goes through
//! element tokens, never internal indices.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use semideal_core::harness::{witness_detail, SuiteReport, TheoremVerdict, Verdict};
use semideal_core::{
    ClassificationReport, ElemSet, IdealKind, IdealProfile, RelationPartition, Semigroup,
};

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct ProfileJson {
    elements: Vec<String>,
    is_proper: bool,
    semiprime: bool,
    completely_semiprime: bool,
    prime: bool,
    strongly_prime: bool,
    irreducible: bool,
    strongly_irreducible: bool,
    minimal: bool,
    idempotent: bool,
}

pub fn profile_json(s: &Semigroup, p: &IdealProfile) -> Value {
    serde_json::to_value(ProfileJson {
        elements: s.set_names(&p.elements),
        is_proper: p.is_proper,
        semiprime: p.semiprime,
        completely_semiprime: p.completely_semiprime,
        prime: p.prime,
        strongly_prime: p.strongly_prime,
        irreducible: p.irreducible,
        strongly_irreducible: p.strongly_irreducible,
        minimal: p.minimal,
        idempotent: p.idempotent,
    })
    .expect("profile serializes")
}

const FLAG_NAMES: [&str; 9] = [
    "proper",
    "semiprime",
    "completely-semiprime",
    "prime",
    "strongly-prime",
    "irreducible",
    "strongly-irreducible",
    "minimal",
    "idempotent",
];

fn profile_flags(p: &IdealProfile) -> [bool; 9] {
    [
        p.is_proper,
        p.semiprime,
        p.completely_semiprime,
        p.prime,
        p.strongly_prime,
        p.irreducible,
        p.strongly_irreducible,
        p.minimal,
        p.idempotent,
    ]
}

pub fn profile_line(s: &Semigroup, p: &IdealProfile) -> String {
    let on: Vec<&str> = FLAG_NAMES
        .iter()
        .zip(profile_flags(p))
        .filter(|(_, v)| *v)
        .map(|(k, _)| *k)
        .collect();
    let off: Vec<String> = FLAG_NAMES
        .iter()
        .zip(profile_flags(p))
        .filter(|(_, v)| !*v)
        .map(|(k, _)| format!("not {k}"))
        .collect();
    let mut all: Vec<String> = on.into_iter().map(String::from).collect();
    all.extend(off);
    format!("{}  {}", s.fmt_set(&p.elements), all.join(", "))
}

pub fn zero_json(s: &Semigroup) -> Value {
    json!(s.zero().map(|z| s.name(z)))
}

pub fn zero_text(s: &Semigroup) -> String {
    s.zero()
        .map_or_else(|| "none".to_string(), |z| s.name(z).to_string())
}

pub fn classification_json(s: &Semigroup, c: &ClassificationReport, degenerate: bool) -> Value {
    let regular: BTreeMap<&str, &str> = c
        .regular_witness
        .iter()
        .enumerate()
        .map(|(a, &x)| (s.name(a), s.name(x)))
        .collect();
    let intra: BTreeMap<&str, [&str; 2]> = c
        .intra_regular_witness
        .iter()
        .enumerate()
        .map(|(a, &(p, q))| (s.name(a), [s.name(p), s.name(q)]))
        .collect();
    json!({
        "regular": c.regular,
        "regularWitness": regular,
        "intraRegular": c.intra_regular,
        "intraRegularWitness": intra,
        "duo": c.duo,
        "interiorSimple": c.interior_simple,
        "chain": c.chain,
        "zeroDegenerate": degenerate,
    })
}

pub fn partition_json(s: &Semigroup, p: &RelationPartition) -> Value {
    json!(p.classes.iter().map(|c| s.set_names(c)).collect::<Vec<_>>())
}

pub fn partitions_json(s: &Semigroup, parts: &[RelationPartition]) -> Value {
    let m: BTreeMap<&str, Value> = parts
        .iter()
        .map(|p| (p.relation.as_str(), partition_json(s, p)))
        .collect();
    json!(m)
}

pub fn partition_line(s: &Semigroup, p: &RelationPartition) -> String {
    let classes: Vec<String> = p.classes.iter().map(|c| s.fmt_set(c)).collect();
    format!("{}: {}", p.relation, classes.join(" "))
}

pub fn table_text(s: &Semigroup) -> String {
    let width = s
        .names()
        .iter()
        .map(|n| n.chars().count())
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    let _ = write!(out, "{:>width$} |", "·");
    for n in s.names() {
        let _ = write!(out, " {n:>width$}");
    }
    out.push('\n');
    for (a, row) in s.rows().iter().enumerate() {
        let _ = write!(out, "{:>width$} |", s.name(a));
        for &v in row {
            let _ = write!(out, " {:>width$}", s.name(v));
        }
        out.push('\n');
    }
    out
}

pub fn ideals_json(
    s: &Semigroup,
    kind: IdealKind,
    fam: &[ElemSet],
    profiles: Option<&[IdealProfile]>,
) -> Value {
    let mut v = json!({
        "kind": kind.as_str(),
        "ideals": fam.iter().map(|e| s.set_names(e)).collect::<Vec<_>>(),
    });
    if let Some(ps) = profiles {
        v["interiorIdeals"] = json!(ps.iter().map(|p| profile_json(s, p)).collect::<Vec<_>>());
    }
    v
}

pub fn suite_text(r: &SuiteReport) -> String {
    let mut out = format!(
        "corpus: order {}, {} semigroup(s), {}\n",
        r.corpus.order,
        r.corpus.count,
        r.corpus.dedup.as_str()
    );
    let w = r.theorems.iter().map(|t| t.id.len()).max().unwrap_or(0);
    let _ = writeln!(
        out,
        "{:w$}  {:>7} {:>7} {:>7}",
        "theorem", "holds", "fails", "skipped"
    );
    for t in &r.theorems {
        let _ = write!(
            out,
            "{:w$}  {:>7} {:>7} {:>7}",
            t.id, t.holds, t.fails, t.skipped
        );
        if t.unexplained > 0 {
            let _ = write!(out, "  ({} unexplained)", t.unexplained);
        }
        out.push('\n');
    }
    for e in r.errata.iter().filter(|e| e.covered > 0) {
        let _ = writeln!(
            out,
            "erratum {} (v{}): {} fail(s) covered",
            e.class, e.version, e.covered
        );
    }
    let _ = writeln!(out, "unexplained fails: {}", r.unexplained_fails());
    out
}

pub fn verdict_json(v: &TheoremVerdict) -> Value {
    json!({
        "theorem": v.theorem.as_str(),
        "status": v.status,
        "table": v.semigroup.rows(),
        "detail": witness_detail(v),
    })
}

pub fn verdict_text(v: &TheoremVerdict) -> String {
    let s = &v.semigroup;
    let mut out = format!("{}: {}\n", v.theorem, status_word(v.status));
    out.push_str(&table_text(s));
    let _ = writeln!(out, "zero: {}", zero_text(s));
    if let Some(w) = &v.witness {
        for (k, e) in &w.elements {
            let _ = writeln!(out, "{k} = {}", s.name(*e));
        }
        for (k, e) in &w.sets {
            let _ = writeln!(out, "{k} = {}", s.fmt_set(e));
        }
        for (k, c) in &w.conditions {
            let _ = writeln!(out, "clause {k}: {c}");
        }
    }
    if !v.flags.is_empty() {
        let flags: Vec<&str> = v.flags.iter().map(|f| f.as_str()).collect();
        let _ = writeln!(out, "flags: {}", flags.join(", "));
    }
    out
}

fn status_word(v: Verdict) -> &'static str {
    match v {
        Verdict::Holds => "holds",
        Verdict::Fails => "fails",
        Verdict::Skipped => "skipped",
    }
}
