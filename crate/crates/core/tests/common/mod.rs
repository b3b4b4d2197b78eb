//! A deliberately plain second implementation: tables as nested vectors,
//! sets as `BTreeSet<usize>`, every family found by filtering all subsets.
#![allow(dead_code)]

use std::collections::BTreeSet;

use semideal_core::{ElemSet, Semigroup};

pub type Set = BTreeSet<usize>;

pub struct Oracle {
    pub n: usize,
    pub t: Vec<Vec<usize>>,
}

impl Oracle {
    pub fn new(s: &Semigroup) -> Self {
        Oracle {
            n: s.order(),
            t: s.rows(),
        }
    }

    pub fn from_rows(t: Vec<Vec<usize>>) -> Self {
        Oracle { n: t.len(), t }
    }

    pub fn all(&self) -> Set {
        (0..self.n).collect()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.t[a][b]
    }

    pub fn prod(&self, a: &Set, b: &Set) -> Set {
        a.iter()
            .flat_map(|&x| b.iter().map(move |&y| self.t[x][y]))
            .collect()
    }

    pub fn closed(&self, a: &Set) -> bool {
        self.prod(a, a).is_subset(a)
    }

    pub fn left(&self, a: &Set) -> bool {
        self.prod(&self.all(), a).is_subset(a)
    }

    pub fn right(&self, a: &Set) -> bool {
        self.prod(a, &self.all()).is_subset(a)
    }

    pub fn two_sided(&self, a: &Set) -> bool {
        self.left(a) && self.right(a)
    }

    pub fn quasi(&self, a: &Set) -> bool {
        let s = self.all();
        let m: Set = self
            .prod(a, &s)
            .intersection(&self.prod(&s, a))
            .copied()
            .collect();
        self.closed(a) && m.is_subset(a)
    }

    pub fn bi(&self, a: &Set) -> bool {
        self.closed(a) && self.prod(&self.prod(a, &self.all()), a).is_subset(a)
    }

    pub fn interior(&self, a: &Set) -> bool {
        let s = self.all();
        self.closed(a) && self.prod(&self.prod(&s, a), &s).is_subset(a)
    }

    /// Nonempty subsets in ascending bit order.
    pub fn subsets(&self) -> Vec<Set> {
        (1u64..1 << self.n)
            .map(|m| (0..self.n).filter(|i| m >> i & 1 == 1).collect())
            .collect()
    }

    pub fn interiors(&self) -> Vec<Set> {
        self.subsets()
            .into_iter()
            .filter(|a| self.interior(a))
            .collect()
    }

    pub fn zero(&self) -> Option<usize> {
        (0..self.n).find(|&z| (0..self.n).all(|x| self.t[z][x] == z && self.t[x][z] == z))
    }

    pub fn sas(&self, a: usize) -> Set {
        let s = self.all();
        self.prod(&self.prod(&s, &Set::from([a])), &s)
    }

    pub fn in_of(&self, a: usize) -> Set {
        let mut out = self.sas(a);
        out.insert(a);
        out.insert(self.t[a][a]);
        out
    }

    pub fn i_of(&self, a: usize) -> Set {
        let one = Set::from([a]);
        let s = self.all();
        let mut out = one.clone();
        out.extend(self.prod(&s, &one));
        out.extend(self.prod(&one, &s));
        out.extend(self.sas(a));
        out
    }

    pub fn l_of(&self, a: usize) -> Set {
        let mut out = self.prod(&self.all(), &Set::from([a]));
        out.insert(a);
        out
    }

    pub fn r_of(&self, a: usize) -> Set {
        let mut out = self.prod(&Set::from([a]), &self.all());
        out.insert(a);
        out
    }

    pub fn regular(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).any(|x| self.t[self.t[a][x]][a] == a))
    }

    pub fn semiprime(&self, fam: &[Set], i: &Set) -> bool {
        fam.iter()
            .all(|a| !self.prod(a, a).is_subset(i) || a.is_subset(i))
    }

    pub fn prime(&self, fam: &[Set], i: &Set) -> bool {
        fam.iter().all(|a| {
            fam.iter()
                .all(|b| !self.prod(a, b).is_subset(i) || a.is_subset(i) || b.is_subset(i))
        })
    }

    pub fn strongly_prime(&self, fam: &[Set], i: &Set) -> bool {
        fam.iter().all(|a| {
            fam.iter().all(|b| {
                let m: Set = self
                    .prod(a, b)
                    .intersection(&self.prod(b, a))
                    .copied()
                    .collect();
                !m.is_subset(i) || a.is_subset(i) || b.is_subset(i)
            })
        })
    }

    pub fn irreducible(&self, fam: &[Set], i: &Set) -> bool {
        fam.iter().all(|a| {
            fam.iter().all(|b| {
                let m: Set = a.intersection(b).copied().collect();
                m != *i || a == i || b == i
            })
        })
    }

    /// Classes of "equal principal set", listed by least element.
    pub fn classes(&self, f: impl Fn(usize) -> Set) -> Vec<Set> {
        let keys: Vec<Set> = (0..self.n).map(&f).collect();
        let mut out: Vec<Set> = Vec::new();
        for a in 0..self.n {
            if out.iter().any(|c| c.contains(&a)) {
                continue;
            }
            out.push((a..self.n).filter(|&b| keys[b] == keys[a]).collect());
        }
        out
    }
}

pub fn to_set(e: &ElemSet) -> Set {
    e.iter().collect()
}

pub fn to_sets(es: &[ElemSet]) -> Vec<Set> {
    es.iter().map(to_set).collect()
}

/// All associative tables of order `n` by brute force over `n^(n²)` tables.
pub fn naive_tables(n: usize) -> Vec<Vec<Vec<usize>>> {
    let cells = n * n;
    let total = n.pow(cells as u32);
    let mut out = Vec::new();
    let mut flat = vec![0usize; cells];
    for code in 0..total {
        let mut c = code;
        for k in (0..cells).rev() {
            flat[k] = c % n;
            c /= n;
        }
        let assoc = (0..n).all(|a| {
            (0..n).all(|b| {
                (0..n).all(|d| flat[flat[a * n + b] * n + d] == flat[a * n + flat[b * n + d]])
            })
        });
        if assoc {
            out.push(flat.chunks(n).map(|r| r.to_vec()).collect());
        }
    }
    out
}

/// Order-`n` semigroups from the library enumerator.
pub fn labeled(n: usize) -> Vec<Semigroup> {
    semideal_core::enumerate_semigroups(semideal_core::EnumerationConfig::labeled(n))
        .unwrap()
        .collect()
}
