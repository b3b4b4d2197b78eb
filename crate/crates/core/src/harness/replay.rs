//! Independent re-check of failing verdicts.
//!
//! Everything here is recomputed from `Semigroup::mul` with ordinary
//! `BTreeSet`s and direct subset scans. None of the bitset products, cached
//! families or profile flags used by the evaluator are consulted, so a
//! witness that replays is confirmed by a second implementation.

use std::collections::BTreeSet;

use super::{TheoremId, TheoremVerdict, Verdict, Witness};
use crate::elemset::ElemSet;
use crate::semigroup::Semigroup;

type Set = BTreeSet<usize>;

struct Naive<'a> {
    s: &'a Semigroup,
    all: Set,
}

impl<'a> Naive<'a> {
    fn new(s: &'a Semigroup) -> Self {
        Naive {
            s,
            all: (0..s.order()).collect(),
        }
    }

    fn prod(&self, a: &Set, b: &Set) -> Set {
        let mut out = Set::new();
        for &x in a {
            for &y in b {
                out.insert(self.s.mul(x, y));
            }
        }
        out
    }

    fn prod3(&self, a: &Set, b: &Set, c: &Set) -> Set {
        self.prod(&self.prod(a, b), c)
    }

    fn closed(&self, a: &Set) -> bool {
        self.prod(a, a).is_subset(a)
    }

    fn left(&self, a: &Set) -> bool {
        !a.is_empty() && self.prod(&self.all, a).is_subset(a)
    }

    fn right(&self, a: &Set) -> bool {
        !a.is_empty() && self.prod(a, &self.all).is_subset(a)
    }

    fn two_sided(&self, a: &Set) -> bool {
        self.left(a) && self.right(a)
    }

    fn quasi(&self, a: &Set) -> bool {
        let both: Set = self
            .prod(a, &self.all)
            .intersection(&self.prod(&self.all, a))
            .copied()
            .collect();
        !a.is_empty() && self.closed(a) && both.is_subset(a)
    }

    fn bi(&self, a: &Set) -> bool {
        !a.is_empty() && self.closed(a) && self.prod3(a, &self.all, a).is_subset(a)
    }

    fn interior(&self, a: &Set) -> bool {
        !a.is_empty() && self.closed(a) && self.prod3(&self.all, a, &self.all).is_subset(a)
    }

    fn subsets(&self) -> Vec<Set> {
        let n = self.s.order();
        (1u64..(1u64 << n))
            .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
            .collect()
    }

    fn family(&self, pred: impl Fn(&Set) -> bool) -> Vec<Set> {
        self.subsets().into_iter().filter(|a| pred(a)).collect()
    }

    fn interiors(&self) -> Vec<Set> {
        self.family(|a| self.interior(a))
    }

    fn single(a: usize) -> Set {
        Set::from([a])
    }

    fn sas(&self, a: usize) -> Set {
        self.prod3(&self.all, &Self::single(a), &self.all)
    }

    fn in_of(&self, a: usize) -> Set {
        let mut out = self.sas(a);
        out.insert(a);
        out.insert(self.s.mul(a, a));
        out
    }

    fn i_of(&self, a: usize) -> Set {
        let one = Self::single(a);
        let mut out = one.clone();
        out.extend(self.prod(&self.all, &one));
        out.extend(self.prod(&one, &self.all));
        out.extend(self.sas(a));
        out
    }

    fn zero(&self) -> Option<usize> {
        (0..self.s.order())
            .find(|&z| (0..self.s.order()).all(|x| self.s.mul(z, x) == z && self.s.mul(x, z) == z))
    }

    fn nonzero(&self, i: &Set) -> Set {
        let z = self.zero();
        i.iter().copied().filter(|&a| Some(a) != z).collect()
    }

    fn trivial(&self, i: &Set) -> bool {
        *i == self.all || self.zero().is_some_and(|z| *i == Self::single(z))
    }

    fn regular(&self) -> bool {
        let n = self.s.order();
        (0..n).all(|a| (0..n).any(|x| self.s.mul(self.s.mul(a, x), a) == a))
    }

    fn intra_regular(&self) -> bool {
        let n = self.s.order();
        (0..n).all(|a| self.sas(self.s.mul(a, a)).contains(&a))
    }

    fn duo(&self) -> bool {
        self.family(|a| self.left(a)) == self.family(|a| self.right(a))
    }

    fn minimal(&self, fam: &[Set], i: &Set) -> bool {
        let zero = self.zero().map(Self::single);
        fam.iter()
            .all(|j| j == i || !j.is_subset(i) || Some(j) == zero.as_ref())
    }

    fn semiprime(&self, fam: &[Set], i: &Set) -> bool {
        fam.iter()
            .all(|a| !self.prod(a, a).is_subset(i) || a.is_subset(i))
    }

    fn strongly_prime(&self, fam: &[Set], i: &Set) -> bool {
        fam.iter().all(|a| {
            fam.iter().all(|b| {
                let both: Set = self
                    .prod(a, b)
                    .intersection(&self.prod(b, a))
                    .copied()
                    .collect();
                !both.is_subset(i) || a.is_subset(i) || b.is_subset(i)
            })
        })
    }

    fn irreducible(&self, fam: &[Set], i: &Set) -> bool {
        fam.iter().all(|a| {
            fam.iter().all(|b| {
                let m: Set = a.intersection(b).copied().collect();
                m != *i || a == i || b == i
            })
        })
    }

    fn strongly_irreducible(&self, fam: &[Set], i: &Set) -> bool {
        fam.iter().all(|a| {
            fam.iter().all(|b| {
                let m: Set = a.intersection(b).copied().collect();
                !m.is_subset(i) || a.is_subset(i) || b.is_subset(i)
            })
        })
    }

    /// Classes of "same principal set" under `f`.
    fn related(&self, f: impl Fn(usize) -> Set, a: usize, b: usize) -> bool {
        f(a) == f(b)
    }
}

fn to_set(e: &ElemSet) -> Set {
    e.iter().collect()
}

fn meet(a: &Set, b: &Set) -> Set {
    a.intersection(b).copied().collect()
}

/// Accessors that treat a missing key as a replay failure.
struct W<'w>(&'w Witness);

impl W<'_> {
    fn set(&self, k: &str) -> Option<Set> {
        self.0.sets.get(k).map(to_set)
    }

    fn elem(&self, k: &str) -> Option<usize> {
        self.0.elements.get(k).copied()
    }

    fn cond(&self, k: &str) -> Option<bool> {
        self.0.conditions.get(k).copied()
    }
}

/// Confirms that a recorded clause vector matches the recomputed one and is
/// not constant.
fn clauses_disagree(w: &W<'_>, recomputed: &[(&str, bool)]) -> bool {
    let matches = recomputed.iter().all(|(k, v)| w.cond(k) == Some(*v));
    let first = recomputed[0].1;
    matches && recomputed.iter().any(|(_, v)| *v != first)
}

/// Re-validates a failing verdict from raw definitions. Returns `false` for
/// verdicts that are not failures or whose witness does not check out.
pub fn replay(v: &TheoremVerdict) -> bool {
    if v.status != Verdict::Fails {
        return false;
    }
    let Some(w) = &v.witness else { return false };
    replay_witness(&v.semigroup, v.theorem, w).unwrap_or(false)
}

fn replay_witness(s: &Semigroup, t: TheoremId, w: &Witness) -> Option<bool> {
    let nv = Naive::new(s);
    let w = W(w);
    let fam = nv.interiors();
    let ok = match t {
        TheoremId::IdealIsInterior => {
            let j = w.set("J")?;
            nv.two_sided(&j) && !nv.interior(&j)
        }
        TheoremId::Intersection => {
            let (a, b) = (w.set("I1")?, w.set("I2")?);
            let m = meet(&a, &b);
            nv.interior(&a) && nv.interior(&b) && !m.is_empty() && !nv.interior(&m)
        }
        TheoremId::Relative => {
            let (i, t) = (w.set("I")?, w.set("T")?);
            let m = meet(&i, &t);
            nv.interior(&i)
                && !t.is_empty()
                && nv.closed(&t)
                && !m.is_empty()
                && !(nv.closed(&m) && nv.prod3(&t, &m, &t).is_subset(&m))
        }
        TheoremId::RegSis => {
            let i = w.set("I")?;
            nv.regular() && nv.interior(&i) && nv.prod3(&nv.all, &i, &nv.all) != i
        }
        TheoremId::RegEquivQjq => {
            let quasi = nv.family(|a| nv.quasi(a));
            let two = nv.family(|a| nv.two_sided(a));
            let bi = nv.family(|a| nv.bi(a));
            let check = |xs: &[Set], ys: &[Set]| {
                xs.iter()
                    .all(|x| ys.iter().all(|y| meet(x, y) == nv.prod3(x, y, x)))
            };
            clauses_disagree(
                &w,
                &[
                    ("1", nv.regular()),
                    ("2", check(&quasi, &two)),
                    ("3", check(&quasi, &fam)),
                    ("4", check(&bi, &fam)),
                ],
            )
        }
        TheoremId::RegEquivBil => {
            let bi = nv.family(|a| nv.bi(a));
            let quasi = nv.family(|a| nv.quasi(a));
            let left = nv.family(|a| nv.left(a));
            let right = nv.family(|a| nv.right(a));
            let check = |xs: &[Set], ys: &[Set], swap: bool| {
                xs.iter().all(|x| {
                    fam.iter().all(|i| {
                        ys.iter().all(|y| {
                            let m = meet(&meet(x, i), y);
                            let p = if swap {
                                nv.prod3(y, i, x)
                            } else {
                                nv.prod3(x, i, y)
                            };
                            m.is_subset(&p)
                        })
                    })
                })
            };
            clauses_disagree(
                &w,
                &[
                    ("1", nv.regular()),
                    ("2", check(&bi, &left, false)),
                    ("3", check(&quasi, &left, false)),
                    ("4", check(&bi, &right, true)),
                    ("5", check(&quasi, &right, true)),
                ],
            )
        }
        TheoremId::RegCoincide | TheoremId::IntraCoincide => {
            let hyp = if t == TheoremId::RegCoincide {
                nv.regular()
            } else {
                nv.intra_regular()
            };
            let i = w.set("I")?;
            hyp && nv.interior(&i) != nv.two_sided(&i)
        }
        TheoremId::IntraSemiprime => {
            let (p, a) = (w.set("P")?, w.set("A")?);
            nv.intra_regular()
                && nv.interior(&p)
                && p != nv.all
                && nv.interior(&a)
                && nv.prod(&a, &a).is_subset(&p)
                && !a.is_subset(&p)
        }
        TheoremId::IntraCompsemiIff => {
            let all_cs = fam
                .iter()
                .all(|i| (0..s.order()).all(|a| !i.contains(&s.mul(a, a)) || i.contains(&a)));
            clauses_disagree(&w, &[("1", nv.intra_regular()), ("2", all_cs)])
        }
        TheoremId::DuoBi | TheoremId::DuoQuasi => {
            let (x, member) = if t == TheoremId::DuoBi {
                (w.set("B")?, nv.bi(&w.set("B")?))
            } else {
                (w.set("Q")?, nv.quasi(&w.set("Q")?))
            };
            nv.regular() && nv.duo() && member && !nv.interior(&x)
        }
        TheoremId::SimpleIff => {
            let nz = nv.nonzero(&nv.all);
            let simple = fam.iter().all(|i| nv.trivial(i));
            let c2 = nz.iter().all(|&a| nv.sas(a) == nv.all);
            let c3 = nz.iter().all(|&a| nv.in_of(a) == nv.all);
            clauses_disagree(&w, &[("1", simple), ("2", c2), ("3", c3)])
        }
        TheoremId::SirrSp => {
            let i = w.set("I")?;
            nv.interior(&i)
                && nv.strongly_irreducible(&fam, &i)
                && nv.semiprime(&fam, &i)
                && !nv.strongly_prime(&fam, &i)
        }
        TheoremId::ZornWitness => {
            // Confirm that no irreducible interior ideal contains I and avoids a.
            let (i, a) = (w.set("I")?, w.elem("a")?);
            nv.interior(&i)
                && !i.contains(&a)
                && !fam
                    .iter()
                    .any(|b| i.is_subset(b) && !b.contains(&a) && nv.irreducible(&fam, b))
        }
        TheoremId::IdempotentEquiv => {
            let ca = fam.iter().all(|i| nv.prod(i, i) == *i);
            let cb = fam.iter().all(|x| {
                fam.iter()
                    .all(|y| meet(x, y) == meet(&nv.prod(x, y), &nv.prod(y, x)))
            });
            let cc = fam.iter().all(|i| nv.semiprime(&fam, i));
            let cd = fam.iter().filter(|i| **i != nv.all).all(|i| {
                let m = fam
                    .iter()
                    .filter(|j| i.is_subset(j) && nv.irreducible(&fam, j) && nv.semiprime(&fam, j))
                    .fold(nv.all.clone(), |acc, j| meet(&acc, j));
                m == *i
            });
            nv.regular() && clauses_disagree(&w, &[("a", ca), ("b", cb), ("c", cc), ("d", cd)])
        }
        TheoremId::ChainEquiv => {
            let chain = fam
                .iter()
                .all(|a| fam.iter().all(|b| a.is_subset(b) || b.is_subset(a)));
            let si = fam.iter().all(|i| nv.strongly_irreducible(&fam, i));
            let irr = fam.iter().all(|i| nv.irreducible(&fam, i));
            clauses_disagree(&w, &[("1", chain), ("2", si), ("3", irr)])
        }
        TheoremId::MinIff => {
            let i = w.set("I")?;
            let nz = nv.nonzero(&i);
            nv.interior(&i)
                && clauses_disagree(
                    &w,
                    &[
                        ("1", nv.minimal(&fam, &i)),
                        ("2", nz.iter().all(|&a| nv.sas(a) == i)),
                        ("3", nz.iter().all(|&a| nv.in_of(a) == i)),
                    ],
                )
        }
        TheoremId::MinDisjoint => {
            let zero: Set = nv.zero().into_iter().collect();
            let nontrivial: Vec<&Set> = fam.iter().filter(|i| !nv.trivial(i)).collect();
            let c1 = nontrivial.iter().all(|i| nv.minimal(&fam, i));
            let c2 = nontrivial.iter().all(|a| {
                nontrivial
                    .iter()
                    .all(|b| a == b || meet(a, b).is_subset(&zero))
            });
            clauses_disagree(&w, &[("1", c1), ("2", c2)])
        }
        TheoremId::MinInab => {
            let i = w.set("I")?;
            let nz = nv.nonzero(&i);
            let same = nz
                .iter()
                .all(|&a| nz.iter().all(|&b| nv.in_of(a) == nv.in_of(b)));
            nv.interior(&i) && clauses_disagree(&w, &[("1", nv.minimal(&fam, &i)), ("2", same)])
        }
        TheoremId::JSubI | TheoremId::RegJi => {
            let (a, b) = (w.elem("a")?, w.elem("b")?);
            let j = nv.related(|x| nv.i_of(x), a, b);
            let i = nv.related(|x| nv.in_of(x), a, b);
            if t == TheoremId::JSubI {
                j && !i
            } else {
                (nv.regular() || nv.intra_regular()) && j != i
            }
        }
        TheoremId::MinIclass | TheoremId::MinJclass => {
            let i = w.set("I")?;
            let f = |x: usize| {
                if t == TheoremId::MinIclass {
                    nv.in_of(x)
                } else {
                    nv.i_of(x)
                }
            };
            // The nonzero part of I (all of I when I is the zero ideal) must
            // be exactly one class.
            let part = if nv.trivial(&i) && i != nv.all {
                i.clone()
            } else {
                nv.nonzero(&i)
            };
            let is_class = part
                .iter()
                .next()
                .is_some_and(|&a| (0..s.order()).all(|b| nv.related(f, a, b) == part.contains(&b)));
            let hyp = t == TheoremId::MinIclass || nv.regular();
            hyp && nv.interior(&i)
                && clauses_disagree(&w, &[("1", nv.minimal(&fam, &i)), ("2", is_class)])
        }
        TheoremId::InLeast => {
            let a = w.elem("a")?;
            let ina = nv.in_of(a);
            !nv.interior(&ina) || fam.iter().any(|j| j.contains(&a) && !ina.is_subset(j))
        }
        TheoremId::ProdReg => {
            let (a, b) = (w.set("I1")?, w.set("I2")?);
            nv.regular() && nv.interior(&a) && nv.interior(&b) && !nv.interior(&nv.prod(&a, &b))
        }
    };
    Some(ok)
}
