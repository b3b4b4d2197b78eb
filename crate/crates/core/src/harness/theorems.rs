//! Literal evaluation of each registered statement.
//!
//! Equivalences record one boolean per clause (keys `"1"`, `"2"`, … or
//! `"a"`…`"d"`) and fail when the clauses disagree. Set witnesses are keyed
//! by the clause they refute, e.g. `"2.Q"`.

use std::collections::BTreeSet;

use super::context::Analysis;
use super::{DegeneracyFlag, TheoremId, TheoremVerdict, Verdict, Witness};
use crate::classify::{chain_in, interior_simple_in, is_trivial_ideal, nonzero_elements};
use crate::elemset::ElemSet;
use crate::green::{is_class_mod_zero, Relation};
use crate::idealprops::{irreducible_in, irreducible_witness_in};
use crate::ideals::{principal_of, IdealKind, PrincipalKind};

/// Intermediate result before flags are attached.
enum Outcome {
    Holds,
    Skipped,
    Fails(Witness),
}

struct Eval {
    outcome: Outcome,
    vacuous: bool,
}

impl Eval {
    fn holds() -> Self {
        Eval {
            outcome: Outcome::Holds,
            vacuous: false,
        }
    }

    fn skipped() -> Self {
        Eval {
            outcome: Outcome::Skipped,
            vacuous: false,
        }
    }

    fn fails(w: Witness) -> Self {
        Eval {
            outcome: Outcome::Fails(w),
            vacuous: false,
        }
    }

    fn from(w: Option<Witness>) -> Self {
        w.map_or_else(Eval::holds, Eval::fails)
    }

    fn vacuous_if(mut self, v: bool) -> Self {
        self.vacuous = v;
        self
    }
}

pub(crate) fn evaluate(an: &Analysis<'_>, t: TheoremId) -> TheoremVerdict {
    let eval = match t {
        TheoremId::IdealIsInterior => ideal_is_interior(an),
        TheoremId::Intersection => intersection(an),
        TheoremId::Relative => relative(an),
        TheoremId::RegSis => reg_sis(an),
        TheoremId::RegEquivQjq => reg_equiv_qjq(an),
        TheoremId::RegEquivBil => reg_equiv_bil(an),
        TheoremId::RegCoincide => coincide(an, an.regular()),
        TheoremId::IntraCoincide => coincide(an, an.intra_regular()),
        TheoremId::IntraSemiprime => intra_semiprime(an),
        TheoremId::IntraCompsemiIff => intra_compsemi_iff(an),
        TheoremId::DuoBi => duo_family(an, IdealKind::Bi),
        TheoremId::DuoQuasi => duo_family(an, IdealKind::Quasi),
        TheoremId::SimpleIff => simple_iff(an),
        TheoremId::SirrSp => sirr_sp(an),
        TheoremId::ZornWitness => zorn_witness(an),
        TheoremId::IdempotentEquiv => idempotent_equiv(an),
        TheoremId::ChainEquiv => chain_equiv(an),
        TheoremId::MinIff => min_iff(an),
        TheoremId::MinDisjoint => min_disjoint(an),
        TheoremId::MinInab => min_inab(an),
        TheoremId::JSubI => j_sub_i(an),
        TheoremId::RegJi => reg_ji(an),
        TheoremId::MinIclass => min_class(an, Relation::I, true),
        TheoremId::MinJclass => min_class(an, Relation::J, an.regular()),
        TheoremId::InLeast => in_least(an),
        TheoremId::ProdReg => prod_reg(an),
    };
    let mut flags = BTreeSet::new();
    if eval.vacuous {
        flags.insert(DegeneracyFlag::VacuousHypothesis);
    }
    if t.zero_sensitive() && an.zero_degenerate() {
        flags.insert(DegeneracyFlag::ZeroDegenerate);
    }
    let (status, witness) = match eval.outcome {
        Outcome::Holds => (Verdict::Holds, None),
        Outcome::Skipped => (Verdict::Skipped, None),
        Outcome::Fails(w) => (Verdict::Fails, Some(w)),
    };
    TheoremVerdict {
        theorem: t,
        semigroup: an.s.clone(),
        status,
        witness,
        flags,
    }
}

/// Fails when the recorded clauses are not all equal.
fn equivalence(w: Witness) -> Eval {
    let mut vals = w.conditions.values();
    let first = vals.next().copied();
    if vals.all(|&v| Some(v) == first) {
        Eval::holds()
    } else {
        Eval::fails(w)
    }
}

fn pairs(family: &[ElemSet]) -> impl Iterator<Item = (ElemSet, ElemSet)> + '_ {
    family
        .iter()
        .flat_map(move |&a| family.iter().map(move |&b| (a, b)))
}

fn ideal_is_interior(an: &Analysis<'_>) -> Eval {
    let interior = an.interior();
    Eval::from(
        an.family(IdealKind::TwoSided)
            .iter()
            .find(|j| !interior.contains(j))
            .map(|&j| Witness::new().set("J", j)),
    )
}

fn intersection(an: &Analysis<'_>) -> Eval {
    let fam = an.interior();
    Eval::from(pairs(fam).find_map(|(a, b)| {
        let m = a.intersection(&b);
        (!m.is_empty() && !fam.contains(&m))
            .then(|| Witness::new().set("I1", a).set("I2", b).set("meet", m))
    }))
}

fn relative(an: &Analysis<'_>) -> Eval {
    let s = an.s;
    for &i in an.interior() {
        for &t in an.subsemigroups() {
            let m = i.intersection(&t);
            if m.is_empty() {
                continue;
            }
            let ok = s.closed(&m) && s.product(&s.product(&t, &m), &t).is_subset(&m);
            if !ok {
                return Eval::fails(Witness::new().set("I", i).set("T", t).set("meet", m));
            }
        }
    }
    Eval::holds()
}

fn reg_sis(an: &Analysis<'_>) -> Eval {
    if !an.regular() {
        return Eval::skipped();
    }
    let s = an.s;
    Eval::from(an.interior().iter().find_map(|&i| {
        let sis = s.sandwich_of(&i);
        (sis != i).then(|| Witness::new().set("I", i).set("SIS", sis))
    }))
}

/// First `(x, y)` from the two families with `x ∩ y ≠ x·y·x`.
fn meet_vs_sandwich(
    an: &Analysis<'_>,
    xs: &[ElemSet],
    ys: &[ElemSet],
) -> Option<(ElemSet, ElemSet)> {
    let s = an.s;
    xs.iter()
        .flat_map(|&x| ys.iter().map(move |&y| (x, y)))
        .find(|(x, y)| x.intersection(y) != s.product(&s.product(x, y), x))
}

fn reg_equiv_qjq(an: &Analysis<'_>) -> Eval {
    let quasi = an.family(IdealKind::Quasi);
    let two = an.family(IdealKind::TwoSided);
    let bi = an.family(IdealKind::Bi);
    let interior = an.interior();
    let mut w = Witness::new().cond("1", an.regular());
    let c2 = meet_vs_sandwich(an, quasi, two);
    let c3 = meet_vs_sandwich(an, quasi, interior);
    // Clause 4 reads I ∩ B = BIB: the bi-ideal is the outer factor.
    let c4 = meet_vs_sandwich(an, bi, interior);
    w = w
        .cond("2", c2.is_none())
        .cond("3", c3.is_none())
        .cond("4", c4.is_none());
    if let Some((q, j)) = c2 {
        w = w.set("2.Q", q).set("2.J", j);
    }
    if let Some((q, i)) = c3 {
        w = w.set("3.Q", q).set("3.I", i);
    }
    if let Some((b, i)) = c4 {
        w = w.set("4.B", b).set("4.I", i);
    }
    equivalence(w)
}

/// First `(x, i, y)` with `x ∩ i ∩ y ⊄ lhs·i·rhs`, where the product order is
/// chosen by `swap` (false: `x·i·y`, true: `y·i·x`).
fn triple_meet(
    an: &Analysis<'_>,
    xs: &[ElemSet],
    ys: &[ElemSet],
    swap: bool,
) -> Option<(ElemSet, ElemSet, ElemSet)> {
    let s = an.s;
    for &x in xs {
        for &i in an.interior() {
            let xi = x.intersection(&i);
            if xi.is_empty() {
                continue;
            }
            for &y in ys {
                let meet = xi.intersection(&y);
                let prod = if swap {
                    s.product(&s.product(&y, &i), &x)
                } else {
                    s.product(&s.product(&x, &i), &y)
                };
                if !meet.is_subset(&prod) {
                    return Some((x, i, y));
                }
            }
        }
    }
    None
}

fn reg_equiv_bil(an: &Analysis<'_>) -> Eval {
    let bi = an.family(IdealKind::Bi);
    let quasi = an.family(IdealKind::Quasi);
    let left = an.family(IdealKind::Left);
    let right = an.family(IdealKind::Right);
    let c2 = triple_meet(an, bi, left, false);
    let c3 = triple_meet(an, quasi, left, false);
    let c4 = triple_meet(an, bi, right, true);
    let c5 = triple_meet(an, quasi, right, true);
    let mut w = Witness::new()
        .cond("1", an.regular())
        .cond("2", c2.is_none())
        .cond("3", c3.is_none())
        .cond("4", c4.is_none())
        .cond("5", c5.is_none());
    if let Some((b, i, l)) = c2 {
        w = w.set("2.B", b).set("2.I", i).set("2.L", l);
    }
    if let Some((q, i, l)) = c3 {
        w = w.set("3.Q", q).set("3.I", i).set("3.L", l);
    }
    if let Some((b, i, r)) = c4 {
        w = w.set("4.B", b).set("4.I", i).set("4.R", r);
    }
    if let Some((q, i, r)) = c5 {
        w = w.set("5.Q", q).set("5.I", i).set("5.R", r);
    }
    equivalence(w)
}

fn coincide(an: &Analysis<'_>, hypothesis: bool) -> Eval {
    if !hypothesis {
        return Eval::skipped();
    }
    let two = an.family(IdealKind::TwoSided);
    let interior = an.interior();
    let odd = interior
        .iter()
        .find(|i| !two.contains(i))
        .or_else(|| two.iter().find(|j| !interior.contains(j)));
    Eval::from(odd.map(|&i| Witness::new().set("I", i)))
}

fn intra_semiprime(an: &Analysis<'_>) -> Eval {
    if !an.intra_regular() {
        return Eval::skipped();
    }
    let s = an.s;
    let fam = an.interior();
    let mut any = false;
    for &p in fam.iter().filter(|p| !p.is_full()) {
        any = true;
        if let Some(&a) = fam
            .iter()
            .find(|a| s.product(a, a).is_subset(&p) && !a.is_subset(&p))
        {
            return Eval::fails(Witness::new().set("P", p).set("A", a));
        }
    }
    Eval::holds().vacuous_if(!any)
}

fn intra_compsemi_iff(an: &Analysis<'_>) -> Eval {
    let s = an.s;
    let bad = an.interior().iter().find_map(|&i| {
        (0..s.order())
            .find(|&a| i.contains(s.mul(a, a)) && !i.contains(a))
            .map(|a| (i, a))
    });
    let mut w = Witness::new()
        .cond("1", an.intra_regular())
        .cond("2", bad.is_none());
    if let Some((i, a)) = bad {
        w = w.set("I", i).elem("a", a);
    }
    equivalence(w)
}

fn duo_family(an: &Analysis<'_>, kind: IdealKind) -> Eval {
    if !(an.regular() && an.duo()) {
        return Eval::skipped();
    }
    let interior = an.interior();
    let key = if kind == IdealKind::Bi { "B" } else { "Q" };
    Eval::from(
        an.family(kind)
            .iter()
            .find(|x| !interior.contains(x))
            .map(|&x| Witness::new().set(key, x)),
    )
}

fn simple_iff(an: &Analysis<'_>) -> Eval {
    let s = an.s;
    let full = s.full();
    let nonzero = nonzero_elements(s);
    let fam = an.interior();
    let c2 = nonzero
        .iter()
        .find(|&a| s.sandwich_of(&s.singleton(a)) != full);
    let c3 = nonzero
        .iter()
        .find(|&a| principal_of(s, a, PrincipalKind::IN) != full);
    let mut w = Witness::new()
        .cond("1", interior_simple_in(s, fam))
        .cond("2", c2.is_none())
        .cond("3", c3.is_none());
    if let Some(&i) = fam.iter().find(|i| !is_trivial_ideal(s, i)) {
        w = w.set("I", i);
    }
    if let Some(a) = c2.or(c3) {
        w = w
            .elem("a", a)
            .set("SaS", s.sandwich_of(&s.singleton(a)))
            .set("IN(a)", principal_of(s, a, PrincipalKind::IN));
    }
    equivalence(w).vacuous_if(nonzero.is_empty())
}

fn sirr_sp(an: &Analysis<'_>) -> Eval {
    let s = an.s;
    let fam = an.interior();
    let mut any = false;
    for (i, p) in fam.iter().zip(an.profiles()) {
        if !(p.strongly_irreducible && p.semiprime) {
            continue;
        }
        any = true;
        if !p.strongly_prime {
            let (a, b) = pairs(fam)
                .find(|(a, b)| {
                    s.product(a, b).intersection(&s.product(b, a)).is_subset(i)
                        && !a.is_subset(i)
                        && !b.is_subset(i)
                })
                .expect("a non-strongly-prime ideal has a violating pair");
            return Eval::fails(Witness::new().set("I", *i).set("I1", a).set("I2", b));
        }
    }
    Eval::holds().vacuous_if(!any)
}

fn zorn_witness(an: &Analysis<'_>) -> Eval {
    let s = an.s;
    let fam = an.interior();
    let mut any = false;
    for &i in fam {
        for a in 0..s.order() {
            if i.contains(a) {
                continue;
            }
            any = true;
            let w = Witness::new().set("I", i).elem("a", a);
            match irreducible_witness_in(fam, &i, a) {
                Ok(b) if i.is_subset(&b) && !b.contains(a) && irreducible_in(fam, &b) => {}
                Ok(b) => return Eval::fails(w.set("B", b)),
                Err(_) => return Eval::fails(w),
            }
        }
    }
    Eval::holds().vacuous_if(!any)
}

fn idempotent_equiv(an: &Analysis<'_>) -> Eval {
    if !an.regular() {
        return Eval::skipped();
    }
    let s = an.s;
    let fam = an.interior();
    let profiles = an.profiles();
    let ca = fam.iter().find(|i| s.product(i, i) != **i);
    let cb = pairs(fam)
        .find(|(a, b)| a.intersection(b) != s.product(a, b).intersection(&s.product(b, a)));
    let cc = fam
        .iter()
        .zip(profiles)
        .find(|(_, p)| !p.semiprime)
        .map(|(i, _)| i);
    let cd = fam.iter().filter(|i| !i.is_full()).find_map(|&i| {
        let meet = fam
            .iter()
            .zip(profiles)
            .filter(|(j, p)| i.is_subset(j) && p.irreducible && p.semiprime)
            .fold(s.full(), |acc, (j, _)| acc.intersection(j));
        (meet != i).then_some((i, meet))
    });
    let mut w = Witness::new()
        .cond("a", ca.is_none())
        .cond("b", cb.is_none())
        .cond("c", cc.is_none())
        .cond("d", cd.is_none());
    if let Some(&i) = ca {
        w = w.set("a.I", i);
    }
    if let Some((x, y)) = cb {
        w = w.set("b.I1", x).set("b.I2", y);
    }
    if let Some(&i) = cc {
        w = w.set("c.I", i);
    }
    if let Some((i, meet)) = cd {
        w = w.set("d.I", i).set("d.meet", meet);
    }
    equivalence(w)
}

fn chain_equiv(an: &Analysis<'_>) -> Eval {
    let fam = an.interior();
    let profiles = an.profiles();
    let incomparable = pairs(fam).find(|(a, b)| !a.is_subset(b) && !b.is_subset(a));
    let not_si = fam
        .iter()
        .zip(profiles)
        .find(|(_, p)| !p.strongly_irreducible);
    let not_irr = fam.iter().zip(profiles).find(|(_, p)| !p.irreducible);
    let mut w = Witness::new()
        .cond("1", chain_in(fam))
        .cond("2", not_si.is_none())
        .cond("3", not_irr.is_none());
    if let Some((a, b)) = incomparable {
        w = w.set("1.I1", a).set("1.I2", b);
    }
    if let Some((i, _)) = not_si {
        w = w.set("2.I", *i);
    }
    if let Some((i, _)) = not_irr {
        w = w.set("3.I", *i);
    }
    equivalence(w)
}

/// Nonzero elements of `i`.
fn nonzero_in(an: &Analysis<'_>, i: &ElemSet) -> ElemSet {
    i.intersection(&nonzero_elements(an.s))
}

fn min_iff(an: &Analysis<'_>) -> Eval {
    let s = an.s;
    for (&i, p) in an.interior().iter().zip(an.profiles()) {
        let nz = nonzero_in(an, &i);
        let c2 = nz.iter().find(|&a| s.sandwich_of(&s.singleton(a)) != i);
        let c3 = nz
            .iter()
            .find(|&a| principal_of(s, a, PrincipalKind::IN) != i);
        let mut w = Witness::new()
            .set("I", i)
            .cond("1", p.minimal)
            .cond("2", c2.is_none())
            .cond("3", c3.is_none());
        if let Some(a) = c2.or(c3) {
            w = w
                .elem("a", a)
                .set("SaS", s.sandwich_of(&s.singleton(a)))
                .set("IN(a)", principal_of(s, a, PrincipalKind::IN));
        }
        if let fail @ Eval {
            outcome: Outcome::Fails(_),
            ..
        } = equivalence(w)
        {
            return fail;
        }
    }
    Eval::holds()
}

fn min_disjoint(an: &Analysis<'_>) -> Eval {
    let s = an.s;
    let zero = s.zero().map_or_else(|| s.empty_set(), |z| s.singleton(z));
    let nontrivial: Vec<(ElemSet, bool)> = an
        .interior()
        .iter()
        .zip(an.profiles())
        .filter(|(i, _)| !is_trivial_ideal(s, i))
        .map(|(&i, p)| (i, p.minimal))
        .collect();
    let not_min = nontrivial.iter().find(|(_, m)| !m).map(|(i, _)| *i);
    let overlap = nontrivial.iter().enumerate().find_map(|(k, (a, _))| {
        nontrivial[k + 1..]
            .iter()
            .find(|(b, _)| !a.intersection(b).is_subset(&zero))
            .map(|(b, _)| (*a, *b))
    });
    let mut w = Witness::new()
        .cond("1", not_min.is_none())
        .cond("2", overlap.is_none());
    if let Some(i) = not_min {
        w = w.set("1.I", i);
    }
    if let Some((a, b)) = overlap {
        w = w.set("2.I1", a).set("2.I2", b);
    }
    equivalence(w).vacuous_if(nontrivial.len() < 2)
}

fn min_inab(an: &Analysis<'_>) -> Eval {
    let s = an.s;
    for (&i, p) in an.interior().iter().zip(an.profiles()) {
        let nz = nonzero_in(an, &i);
        let split = nz.iter().find_map(|a| {
            let ina = principal_of(s, a, PrincipalKind::IN);
            nz.iter()
                .find(|&b| principal_of(s, b, PrincipalKind::IN) != ina)
                .map(|b| (a, b))
        });
        let mut w = Witness::new()
            .set("I", i)
            .cond("1", p.minimal)
            .cond("2", split.is_none());
        if let Some((a, b)) = split {
            w = w.elem("a", a).elem("b", b);
        }
        if let fail @ Eval {
            outcome: Outcome::Fails(_),
            ..
        } = equivalence(w)
        {
            return fail;
        }
    }
    Eval::holds()
}

/// First `(a, b)` related by `p` but not by `q`.
fn related_not(an: &Analysis<'_>, p: Relation, q: Relation) -> Option<(usize, usize)> {
    let (pp, qp) = (an.partition(p), an.partition(q));
    let n = an.s.order();
    (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .find(|&(a, b)| pp.related(a, b) && !qp.related(a, b))
}

fn relation_witness(an: &Analysis<'_>, a: usize, b: usize) -> Witness {
    let s = an.s;
    Witness::new()
        .elem("a", a)
        .elem("b", b)
        .set("I(a)", principal_of(s, a, PrincipalKind::I))
        .set("I(b)", principal_of(s, b, PrincipalKind::I))
        .set("IN(a)", principal_of(s, a, PrincipalKind::IN))
        .set("IN(b)", principal_of(s, b, PrincipalKind::IN))
}

fn j_sub_i(an: &Analysis<'_>) -> Eval {
    Eval::from(related_not(an, Relation::J, Relation::I).map(|(a, b)| relation_witness(an, a, b)))
}

fn reg_ji(an: &Analysis<'_>) -> Eval {
    if !(an.regular() || an.intra_regular()) {
        return Eval::skipped();
    }
    let pair = related_not(an, Relation::J, Relation::I)
        .or_else(|| related_not(an, Relation::I, Relation::J));
    Eval::from(pair.map(|(a, b)| relation_witness(an, a, b)))
}

fn min_class(an: &Analysis<'_>, r: Relation, hypothesis: bool) -> Eval {
    if !hypothesis {
        return Eval::skipped();
    }
    let part = an.partition(r);
    for (&i, p) in an.interior().iter().zip(an.profiles()) {
        let w = Witness::new()
            .set("I", i)
            .cond("1", p.minimal)
            .cond("2", is_class_mod_zero(an.s, part, &i));
        if let fail @ Eval {
            outcome: Outcome::Fails(_),
            ..
        } = equivalence(w)
        {
            return fail;
        }
    }
    Eval::holds()
}

fn in_least(an: &Analysis<'_>) -> Eval {
    let s = an.s;
    let fam = an.interior();
    for a in 0..s.order() {
        let ina = principal_of(s, a, PrincipalKind::IN);
        let w = Witness::new().elem("a", a).set("IN(a)", ina);
        if !fam.contains(&ina) {
            return Eval::fails(w);
        }
        if let Some(&j) = fam.iter().find(|j| j.contains(a) && !ina.is_subset(j)) {
            return Eval::fails(w.set("J", j));
        }
    }
    Eval::holds()
}

fn prod_reg(an: &Analysis<'_>) -> Eval {
    if !an.regular() {
        return Eval::skipped();
    }
    let s = an.s;
    let fam = an.interior();
    Eval::from(pairs(fam).find_map(|(a, b)| {
        let p = s.product(&a, &b);
        (!fam.contains(&p)).then(|| Witness::new().set("I1", a).set("I2", b).set("I1I2", p))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::verify;
    use crate::semigroup::fixtures::*;

    #[test]
    fn intra_semiprime_on_example2() {
        assert_eq!(
            verify(&s3(), TheoremId::IntraSemiprime).status,
            Verdict::Holds
        );
    }

    #[test]
    fn simple_iff_left_zero_and_null() {
        assert_eq!(verify(&l2(), TheoremId::SimpleIff).status, Verdict::Holds);
        let n = n2();
        let v = verify(&n, TheoremId::SimpleIff);
        assert_eq!(v.status, Verdict::Fails);
        let w = v.witness.unwrap();
        assert_eq!(w.elements["a"], 1);
        assert_eq!(w.sets["SaS"], n.singleton(0));
        assert!(v.flags.contains(&DegeneracyFlag::ZeroDegenerate));
    }

    #[test]
    fn hypotheses_gate() {
        let n = n2();
        assert_eq!(verify(&n, TheoremId::RegSis).status, Verdict::Skipped);
        assert_eq!(
            verify(&n, TheoremId::IntraCoincide).status,
            Verdict::Skipped
        );
        assert_eq!(verify(&s3(), TheoremId::RegSis).status, Verdict::Holds);
    }

    #[test]
    fn min_iclass_on_example2() {
        assert_eq!(verify(&s3(), TheoremId::MinIclass).status, Verdict::Holds);
    }

    #[test]
    fn vacuous_flag() {
        let t = trivial();
        let v = verify(&t, TheoremId::ZornWitness);
        assert_eq!(v.status, Verdict::Holds);
        assert!(v.flags.contains(&DegeneracyFlag::VacuousHypothesis));
    }

    #[test]
    fn every_theorem_on_fixtures_except_degenerate() {
        for s in [s3(), l2(), trivial()] {
            for &t in TheoremId::ALL {
                assert_ne!(
                    verify(&s, t).status,
                    Verdict::Fails,
                    "{t} on {:?}",
                    s.rows()
                );
            }
        }
    }
}
