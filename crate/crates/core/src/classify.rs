//! Semigroup-level classifications: regularity, intra-regularity, duo,
//! interior-simplicity and the chain condition on interior ideals.
//!
//! Where a statement quantifies over nonzero elements, the zero policy is:
//! if the semigroup has a zero `z`, quantifiers skip `z` and the ideal `{z}`
//! counts as trivial; otherwise every element is quantified and only the
//! whole semigroup is trivial.

use crate::elemset::ElemSet;
use crate::ideals::{enumerate_ideals, IdealKind};
use crate::semigroup::Semigroup;

/// Outcome of the five classifications, with equation witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub regular: bool,
    /// `regular_witness[a] = x` with `a = a·x·a`; empty unless regular.
    pub regular_witness: Vec<usize>,
    pub intra_regular: bool,
    /// `(s, t)` with `a = s·a²·t`; empty unless intra-regular.
    pub intra_regular_witness: Vec<(usize, usize)>,
    pub duo: bool,
    pub interior_simple: bool,
    /// Interior ideals are totally ordered by inclusion.
    pub chain: bool,
}

fn regular_witness(s: &Semigroup, a: usize) -> Option<usize> {
    (0..s.order()).find(|&x| s.mul(s.mul(a, x), a) == a)
}

fn intra_witness(s: &Semigroup, a: usize) -> Option<(usize, usize)> {
    let sq = s.mul(a, a);
    let n = s.order();
    (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find(|&(x, y)| s.mul(s.mul(x, sq), y) == a)
}

/// Returns the per-element witnesses `x` with `a = a·x·a` when `s` is regular.
pub fn is_regular(s: &Semigroup) -> Option<Vec<usize>> {
    (0..s.order()).map(|a| regular_witness(s, a)).collect()
}

/// Returns per-element witnesses `(s, t)` with `a = s·a²·t` when `s` is
/// intra-regular.
pub fn is_intra_regular(s: &Semigroup) -> Option<Vec<(usize, usize)>> {
    (0..s.order()).map(|a| intra_witness(s, a)).collect()
}

/// Every one-sided ideal is two-sided.
pub fn is_duo(s: &Semigroup) -> bool {
    enumerate_ideals(s, IdealKind::Left) == enumerate_ideals(s, IdealKind::Right)
}

/// Whether `i` is trivial under the zero policy: the whole semigroup, or
/// `{z}` when a zero exists.
pub fn is_trivial_ideal(s: &Semigroup, i: &ElemSet) -> bool {
    i.is_full() || s.zero().is_some_and(|z| *i == s.singleton(z))
}

/// Elements quantified by `(0≠)a` statements.
pub fn nonzero_elements(s: &Semigroup) -> ElemSet {
    let mut all = s.full();
    if let Some(z) = s.zero() {
        all.remove(z);
    }
    all
}

pub(crate) fn interior_simple_in(s: &Semigroup, interior: &[ElemSet]) -> bool {
    interior.iter().all(|i| is_trivial_ideal(s, i))
}

pub(crate) fn chain_in(family: &[ElemSet]) -> bool {
    family.iter().enumerate().all(|(k, a)| {
        family[k + 1..]
            .iter()
            .all(|b| a.is_subset(b) || b.is_subset(a))
    })
}

pub fn is_interior_simple(s: &Semigroup) -> bool {
    interior_simple_in(s, &enumerate_ideals(s, IdealKind::Interior))
}

pub fn interior_chain(s: &Semigroup) -> bool {
    chain_in(&enumerate_ideals(s, IdealKind::Interior))
}

/// Some nonzero `a` has `SaS ⊆ {0}`. Statements about nonzero elements can
/// fail under a literal reading on such semigroups.
pub fn is_zero_degenerate(s: &Semigroup) -> bool {
    let Some(z) = s.zero() else { return false };
    let zero = s.singleton(z);
    nonzero_elements(s)
        .iter()
        .any(|a| s.sandwich_of(&s.singleton(a)).is_subset(&zero))
}

pub fn classify(s: &Semigroup) -> ClassificationReport {
    let regular_witness = is_regular(s);
    let intra_regular_witness = is_intra_regular(s);
    let interior = enumerate_ideals(s, IdealKind::Interior);
    ClassificationReport {
        regular: regular_witness.is_some(),
        regular_witness: regular_witness.unwrap_or_default(),
        intra_regular: intra_regular_witness.is_some(),
        intra_regular_witness: intra_regular_witness.unwrap_or_default(),
        duo: is_duo(s),
        interior_simple: interior_simple_in(s, &interior),
        chain: chain_in(&interior),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::fixtures::*;

    #[test]
    fn regularity() {
        let w = is_regular(&s3()).unwrap();
        assert_eq!(w, vec![0, 1, 2]);
        assert!(is_regular(&l2()).is_some());
        assert!(is_regular(&n2()).is_none());
    }

    #[test]
    fn intra_regularity() {
        assert!(is_intra_regular(&s3()).is_some());
        assert!(is_intra_regular(&n2()).is_none());
        assert!(is_intra_regular(&trivial()).is_some());
    }

    #[test]
    fn witnesses_satisfy_equations() {
        for s in [s3(), l2(), trivial()] {
            let r = classify(&s);
            for (a, &x) in r.regular_witness.iter().enumerate() {
                assert_eq!(s.mul(s.mul(a, x), a), a);
            }
            for (a, &(p, q)) in r.intra_regular_witness.iter().enumerate() {
                assert_eq!(s.mul(s.mul(p, s.mul(a, a)), q), a);
            }
        }
    }

    #[test]
    fn duo() {
        assert!(is_duo(&s3()));
        assert!(!is_duo(&l2()));
        assert!(is_duo(&n2()));
    }

    #[test]
    fn interior_simple() {
        assert!(is_interior_simple(&l2()));
        assert!(!is_interior_simple(&s3()));
        assert!(is_interior_simple(&trivial()));
        assert!(is_interior_simple(&n2()));
    }

    #[test]
    fn chains() {
        assert!(!interior_chain(&s3()));
        assert!(interior_chain(&l2()));
        assert!(interior_chain(&n2()));
    }

    #[test]
    fn degeneracy() {
        assert!(is_zero_degenerate(&n2()));
        assert!(!is_zero_degenerate(&s3()));
        assert!(!is_zero_degenerate(&l2()));
        assert!(!is_zero_degenerate(&trivial()));
    }
}
