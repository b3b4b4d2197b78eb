//! Property flags on interior ideals and the finite maximal-element search
//! for irreducible interior ideals.
//!
//! Every "for any interior ideals I₁, I₂" quantifier ranges over the
//! enumerated interior-ideal family of the semigroup.

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::ideals::{enumerate_ideals, holds, IdealKind};
use crate::semigroup::Semigroup;

/// One interior ideal with all of its property flags.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdealProfile {
    pub elements: ElemSet,
    pub is_proper: bool,
    pub semiprime: bool,
    pub completely_semiprime: bool,
    pub prime: bool,
    pub strongly_prime: bool,
    pub irreducible: bool,
    pub strongly_irreducible: bool,
    pub minimal: bool,
    pub idempotent: bool,
}

/// `A² ⊆ I ⇒ A ⊆ I` for every interior ideal `A`.
pub(crate) fn semiprime_in(s: &Semigroup, family: &[ElemSet], i: &ElemSet) -> bool {
    family
        .iter()
        .all(|a| !s.product(a, a).is_subset(i) || a.is_subset(i))
}

/// `a² ∈ I ⇒ a ∈ I` for every element `a`.
pub(crate) fn completely_semiprime(s: &Semigroup, i: &ElemSet) -> bool {
    (0..s.order()).all(|a| !i.contains(s.mul(a, a)) || i.contains(a))
}

fn pairs(family: &[ElemSet]) -> impl Iterator<Item = (&ElemSet, &ElemSet)> {
    family
        .iter()
        .flat_map(move |a| family.iter().map(move |b| (a, b)))
}

pub(crate) fn prime_in(s: &Semigroup, family: &[ElemSet], i: &ElemSet) -> bool {
    pairs(family).all(|(p, q)| !s.product(p, q).is_subset(i) || p.is_subset(i) || q.is_subset(i))
}

pub(crate) fn strongly_prime_in(s: &Semigroup, family: &[ElemSet], i: &ElemSet) -> bool {
    pairs(family).all(|(p, q)| {
        let both = s.product(p, q).intersection(&s.product(q, p));
        !both.is_subset(i) || p.is_subset(i) || q.is_subset(i)
    })
}

/// `I₁ ∩ I₂ = I ⇒ I₁ = I or I₂ = I`.
pub(crate) fn irreducible_in(family: &[ElemSet], i: &ElemSet) -> bool {
    pairs(family).all(|(p, q)| p.intersection(q) != *i || p == i || q == i)
}

pub(crate) fn strongly_irreducible_in(family: &[ElemSet], i: &ElemSet) -> bool {
    pairs(family).all(|(p, q)| !p.intersection(q).is_subset(i) || p.is_subset(i) || q.is_subset(i))
}

/// No other nontrivial interior ideal lies inside `i`; `{z}` is not counted.
pub(crate) fn minimal_in(s: &Semigroup, family: &[ElemSet], i: &ElemSet) -> bool {
    let zero = s.zero().map(|z| s.singleton(z));
    family
        .iter()
        .all(|j| j == i || !j.is_subset(i) || Some(*j) == zero)
}

pub(crate) fn profile_in(s: &Semigroup, family: &[ElemSet], i: &ElemSet) -> IdealProfile {
    IdealProfile {
        elements: *i,
        is_proper: !i.is_full(),
        semiprime: semiprime_in(s, family, i),
        completely_semiprime: completely_semiprime(s, i),
        prime: prime_in(s, family, i),
        strongly_prime: strongly_prime_in(s, family, i),
        irreducible: irreducible_in(family, i),
        strongly_irreducible: strongly_irreducible_in(family, i),
        minimal: minimal_in(s, family, i),
        idempotent: s.product(i, i) == *i,
    }
}

fn require_interior(s: &Semigroup, i: &ElemSet) -> Result<()> {
    s.check_nonempty(i).map_err(|e| match e {
        Error::EmptySet => Error::NotInteriorIdeal,
        other => other,
    })?;
    if !holds(s, i, IdealKind::Interior) {
        return Err(Error::NotInteriorIdeal);
    }
    Ok(())
}

pub fn profile(s: &Semigroup, i: &ElemSet) -> Result<IdealProfile> {
    require_interior(s, i)?;
    let family = enumerate_ideals(s, IdealKind::Interior);
    Ok(profile_in(s, &family, i))
}

/// Profiles of every interior ideal, in family order.
pub fn profiles(s: &Semigroup) -> Vec<IdealProfile> {
    let family = enumerate_ideals(s, IdealKind::Interior);
    family.iter().map(|i| profile_in(s, &family, i)).collect()
}

/// Inclusion-maximal members of `sets`, ascending by bit value.
pub(crate) fn maximal_sets(sets: &[ElemSet]) -> Vec<ElemSet> {
    sets.iter()
        .filter(|a| !sets.iter().any(|b| a.is_proper_subset(b)))
        .copied()
        .collect()
}

pub(crate) fn irreducible_witness_in(family: &[ElemSet], i: &ElemSet, a: usize) -> Result<ElemSet> {
    let avoiding: Vec<ElemSet> = family
        .iter()
        .filter(|j| i.is_subset(j) && !j.contains(a))
        .copied()
        .collect();
    // `i` itself avoids `a`, so there is always at least one maximum.
    let b = *maximal_sets(&avoiding)
        .first()
        .expect("avoiding family contains i");
    if !irreducible_in(family, &b) {
        return Err(Error::WitnessNotIrreducible(b));
    }
    Ok(b)
}

/// A maximal interior ideal containing `i` and avoiding `a`, checked to be
/// irreducible. Ties go to the smallest bit-vector.
pub fn irreducible_witness(s: &Semigroup, i: &ElemSet, a: usize) -> Result<ElemSet> {
    require_interior(s, i)?;
    s.check_element(a)?;
    if i.contains(a) {
        return Err(Error::ElementInIdeal(a));
    }
    irreducible_witness_in(&enumerate_ideals(s, IdealKind::Interior), i, a)
}

/// The proper irreducible interior ideals above a proper interior ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub components: Vec<ElemSet>,
    /// Intersection of `components` (the whole carrier if there are none).
    pub intersection: ElemSet,
}

pub(crate) fn decompose_in(s: &Semigroup, family: &[ElemSet], i: &ElemSet) -> Decomposition {
    let components: Vec<ElemSet> = family
        .iter()
        .filter(|j| !j.is_full() && i.is_subset(j) && irreducible_in(family, j))
        .copied()
        .collect();
    let intersection = components
        .iter()
        .fold(s.full(), |acc, c| acc.intersection(c));
    Decomposition {
        components,
        intersection,
    }
}

pub fn decompose_into_irreducibles(s: &Semigroup, i: &ElemSet) -> Result<Decomposition> {
    require_interior(s, i)?;
    if i.is_full() {
        return Err(Error::NotProper);
    }
    Ok(decompose_in(
        s,
        &enumerate_ideals(s, IdealKind::Interior),
        i,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::fixtures::*;

    #[test]
    fn zero_ideal_of_example2() {
        let s = s3();
        let p = profile(&s, &s.singleton(0)).unwrap();
        assert!(p.semiprime && p.completely_semiprime);
        assert!(!p.prime && !p.strongly_prime);
        assert!(!p.irreducible);
        assert!(p.minimal && p.idempotent && p.is_proper);
    }

    #[test]
    fn whole_example2_is_strongly_prime() {
        let s = s3();
        let p = profile(&s, &s.full()).unwrap();
        assert!(p.strongly_prime && p.prime && p.semiprime);
        assert!(!p.minimal && !p.is_proper);
    }

    #[test]
    fn ab_in_example2() {
        let s = s3();
        let p = profile(&s, &s.set_of(&["a", "b"]).unwrap()).unwrap();
        assert!(p.irreducible && p.strongly_irreducible);
        // {a} = {0} is trivial, so nothing nontrivial sits strictly inside.
        assert!(p.minimal);
    }

    #[test]
    fn profile_rejects_non_interior() {
        let s = s3();
        assert_eq!(
            profile(&s, &s.set_of(&["b", "c"]).unwrap()),
            Err(Error::NotInteriorIdeal)
        );
        assert_eq!(profile(&s, &s.empty_set()), Err(Error::NotInteriorIdeal));
    }

    #[test]
    fn minimality_without_zero() {
        let l = l2();
        assert!(profile(&l, &l.full()).unwrap().minimal);
    }

    #[test]
    fn null_semigroup_whole_is_zero_minimal() {
        let n = n2();
        assert!(profile(&n, &n.full()).unwrap().minimal);
    }

    #[test]
    fn witnesses() {
        let s = s3();
        let a = s.singleton(0);
        assert_eq!(
            irreducible_witness(&s, &a, 1).unwrap(),
            s.set_of(&["a", "c"]).unwrap()
        );
        assert_eq!(
            irreducible_witness(&s, &a, 2).unwrap(),
            s.set_of(&["a", "b"]).unwrap()
        );
        assert_eq!(
            irreducible_witness(&s, &a, 0),
            Err(Error::ElementInIdeal(0))
        );
        let l = l2();
        for x in 0..2 {
            assert_eq!(
                irreducible_witness(&l, &l.full(), x),
                Err(Error::ElementInIdeal(x))
            );
        }
    }

    #[test]
    fn decompositions() {
        let s = s3();
        let ab = s.set_of(&["a", "b"]).unwrap();
        let ac = s.set_of(&["a", "c"]).unwrap();
        let d = decompose_into_irreducibles(&s, &s.singleton(0)).unwrap();
        assert_eq!(d.components, vec![ab, ac]);
        assert_eq!(d.intersection, s.singleton(0));
        let d = decompose_into_irreducibles(&s, &ab).unwrap();
        assert_eq!((d.components, d.intersection), (vec![ab], ab));
        let n = n2();
        let d = decompose_into_irreducibles(&n, &n.singleton(0)).unwrap();
        assert_eq!(
            (d.components, d.intersection),
            (vec![n.singleton(0)], n.singleton(0))
        );
        assert_eq!(
            decompose_into_irreducibles(&s, &s.full()),
            Err(Error::NotProper)
        );
    }
}
