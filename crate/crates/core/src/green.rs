//! Green's relations 𝓛, 𝓡, 𝓙, 𝓗 and the relation 𝓘 induced by principal
//! interior ideals `IN(a)`.

use std::collections::BTreeMap;
use std::fmt;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::ideals::{holds, principal_of, IdealKind, PrincipalKind};
use crate::semigroup::Semigroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Relation {
    L,
    R,
    J,
    H,
    /// `a 𝓘 b` iff `IN(a) = IN(b)`.
    I,
}

impl Relation {
    pub const ALL: [Relation; 5] = [
        Relation::L,
        Relation::R,
        Relation::J,
        Relation::H,
        Relation::I,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Relation::L => "L",
            Relation::R => "R",
            Relation::J => "J",
            Relation::H => "H",
            Relation::I => "I",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Equivalence classes of one relation, ordered by least element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationPartition {
    pub relation: Relation,
    pub classes: Vec<ElemSet>,
}

impl RelationPartition {
    pub fn order(&self) -> usize {
        self.classes.first().map_or(0, ElemSet::width)
    }

    pub fn class_of(&self, a: usize) -> Option<&ElemSet> {
        self.classes.iter().find(|c| c.contains(a))
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.class_of(a).is_some_and(|c| c.contains(b))
    }
}

/// Groups elements by a key, keeping classes ordered by least element.
fn group_by_key<K: Ord>(n: usize, key: impl Fn(usize) -> K) -> Vec<ElemSet> {
    let mut groups: BTreeMap<K, ElemSet> = BTreeMap::new();
    for a in 0..n {
        groups
            .entry(key(a))
            .or_insert_with(|| ElemSet::empty(n))
            .insert(a);
    }
    let mut classes: Vec<ElemSet> = groups.into_values().collect();
    classes.sort_by_key(|c| c.first());
    classes
}

pub fn green_partition(s: &Semigroup, relation: Relation) -> RelationPartition {
    let n = s.order();
    let by = |k: PrincipalKind| group_by_key(n, |a| principal_of(s, a, k));
    let classes = match relation {
        Relation::L => by(PrincipalKind::L),
        Relation::R => by(PrincipalKind::R),
        Relation::J => by(PrincipalKind::I),
        Relation::I => by(PrincipalKind::IN),
        Relation::H => {
            let l = green_partition(s, Relation::L);
            let r = green_partition(s, Relation::R);
            let idx = |p: &RelationPartition, a| p.classes.iter().position(|c| c.contains(a));
            group_by_key(n, |a| (idx(&l, a), idx(&r, a)))
        }
    };
    RelationPartition { relation, classes }
}

/// Whether every class of `p` lies inside a class of `q`, i.e. `p ⊆ q` as
/// relations.
pub fn refines(p: &RelationPartition, q: &RelationPartition) -> Result<bool> {
    if p.order() != q.order() {
        return Err(Error::OrderMismatch(p.order(), q.order()));
    }
    Ok(p.classes
        .iter()
        .all(|c| q.classes.iter().any(|d| c.is_subset(d))))
}

pub(crate) fn is_class(partition: &RelationPartition, i: &ElemSet) -> bool {
    partition.classes.iter().any(|c| c == i)
}

/// Whether the interior ideal `i` is exactly one 𝓘-class.
pub fn minimal_ideal_is_class(s: &Semigroup, i: &ElemSet) -> Result<bool> {
    s.check_set(i)?;
    if i.is_empty() || !holds(s, i, IdealKind::Interior) {
        return Err(Error::NotInteriorIdeal);
    }
    Ok(is_class(&green_partition(s, Relation::I), i))
}

/// Like [`minimal_ideal_is_class`] under the zero policy: for an ideal other
/// than `{z}`, its nonzero part must be one class.
pub fn is_class_mod_zero(s: &Semigroup, partition: &RelationPartition, i: &ElemSet) -> bool {
    match s.zero() {
        Some(z) if *i != s.singleton(z) => {
            let mut rest = *i;
            rest.remove(z);
            is_class(partition, &rest)
        }
        _ => is_class(partition, i),
    }
}
