//! Ideal predicates, principal constructions and exhaustive family scans.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::elemset::{nonempty_subsets, ElemSet};
use crate::error::{Error, Result};
use crate::semigroup::Semigroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdealKind {
    /// `SA ⊆ A`
    Left,
    /// `AS ⊆ A`
    Right,
    /// Both left and right.
    TwoSided,
    /// Subsemigroup with `AS ∩ SA ⊆ A`.
    Quasi,
    /// Subsemigroup with `ASA ⊆ A`.
    Bi,
    /// Subsemigroup with `SAS ⊆ A`.
    Interior,
}

impl IdealKind {
    pub const ALL: [IdealKind; 6] = [
        IdealKind::Left,
        IdealKind::Right,
        IdealKind::TwoSided,
        IdealKind::Quasi,
        IdealKind::Bi,
        IdealKind::Interior,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdealKind::Left => "left",
            IdealKind::Right => "right",
            IdealKind::TwoSided => "two-sided",
            IdealKind::Quasi => "quasi",
            IdealKind::Bi => "bi",
            IdealKind::Interior => "interior",
        }
    }
}

impl fmt::Display for IdealKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdealKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        IdealKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| format!("unknown ideal kind `{s}`"))
    }
}

/// Principal constructions generated by a single element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PrincipalKind {
    /// `L(a) = Sa ∪ {a}`
    L,
    /// `R(a) = aS ∪ {a}`
    R,
    /// `I(a) = {a} ∪ Sa ∪ aS ∪ SaS`
    I,
    /// `IN(a) = {a} ∪ {a²} ∪ SaS`
    IN,
}

pub(crate) fn holds(s: &Semigroup, a: &ElemSet, kind: IdealKind) -> bool {
    let full = s.full();
    match kind {
        IdealKind::Left => s.product(&full, a).is_subset(a),
        IdealKind::Right => s.product(a, &full).is_subset(a),
        IdealKind::TwoSided => s.product(&full, a).is_subset(a) && s.product(a, &full).is_subset(a),
        IdealKind::Quasi => {
            s.closed(a)
                && s.product(a, &full)
                    .intersection(&s.product(&full, a))
                    .is_subset(a)
        }
        IdealKind::Bi => s.closed(a) && s.product(&s.product(a, &full), a).is_subset(a),
        IdealKind::Interior => s.closed(a) && s.sandwich_of(a).is_subset(a),
    }
}

/// Whether the nonempty set `a` is an ideal of the given kind.
pub fn is_ideal_of_kind(s: &Semigroup, a: &ElemSet, kind: IdealKind) -> Result<bool> {
    s.check_nonempty(a)?;
    Ok(holds(s, a, kind))
}

pub(crate) fn principal_of(s: &Semigroup, a: usize, kind: PrincipalKind) -> ElemSet {
    let full = s.full();
    let single = s.singleton(a);
    let sa = s.product(&full, &single);
    let as_ = s.product(&single, &full);
    let sas = s.product(&sa, &full);
    match kind {
        PrincipalKind::L => sa.union(&single),
        PrincipalKind::R => as_.union(&single),
        PrincipalKind::I => single.union(&sa).union(&as_).union(&sas),
        PrincipalKind::IN => {
            let mut out = sas.union(&single);
            out.insert(s.mul(a, a));
            out
        }
    }
}

pub fn principal(s: &Semigroup, a: usize, kind: PrincipalKind) -> Result<ElemSet> {
    s.check_element(a)?;
    Ok(principal_of(s, a, kind))
}

/// Every nonempty subset of the given kind, ascending by bit value.
///
/// This is a full `2ⁿ − 1` scan, intended for small orders.
pub fn enumerate_ideals(s: &Semigroup, kind: IdealKind) -> Vec<ElemSet> {
    nonempty_subsets(s.order())
        .filter(|a| holds(s, a, kind))
        .collect()
}

/// Every subsemigroup, ascending by bit value.
pub fn enumerate_subsemigroups(s: &Semigroup) -> Vec<ElemSet> {
    nonempty_subsets(s.order())
        .filter(|a| s.closed(a))
        .collect()
}

/// Whether `I ∩ T` is an interior ideal of the subsemigroup `T`, computed
/// inside `T`'s own table.
pub fn relative_interior_check(s: &Semigroup, i: &ElemSet, t: &ElemSet) -> Result<bool> {
    s.check_nonempty(i)?;
    s.check_nonempty(t)?;
    if !holds(s, i, IdealKind::Interior) {
        return Err(Error::NotInteriorIdeal);
    }
    let (sub, map) = s.induced(t)?;
    let meet = i.intersection(t);
    if meet.is_empty() {
        return Err(Error::EmptyIntersection);
    }
    let local = ElemSet::from_indices(
        sub.order(),
        map.iter()
            .enumerate()
            .filter(|(_, &a)| meet.contains(a))
            .map(|(k, _)| k),
    );
    Ok(holds(&sub, &local, IdealKind::Interior))
}
