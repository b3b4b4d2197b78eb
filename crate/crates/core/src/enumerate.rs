//! Exhaustive generation of small semigroups by backtracking over table
//! cells, plus canonical forms under relabeling.

use serde::{Deserialize, Serialize};

use crate::classify::{interior_chain, is_duo, is_interior_simple, is_intra_regular, is_regular};
use crate::error::{Error, Result};
use crate::semigroup::Semigroup;

pub const MIN_ORDER: usize = 1;
pub const MAX_ENUM_ORDER: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Dedup {
    /// Every associative table.
    Labeled,
    /// One canonical representative per isomorphism class.
    Iso,
}

impl Dedup {
    pub fn as_str(self) -> &'static str {
        match self {
            Dedup::Labeled => "labeled",
            Dedup::Iso => "iso",
        }
    }
}

/// Keeps only semigroups with the given classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassFilter {
    Regular,
    IntraRegular,
    Duo,
    InteriorSimple,
    Chain,
}

impl ClassFilter {
    pub fn accepts(self, s: &Semigroup) -> bool {
        match self {
            ClassFilter::Regular => is_regular(s).is_some(),
            ClassFilter::IntraRegular => is_intra_regular(s).is_some(),
            ClassFilter::Duo => is_duo(s),
            ClassFilter::InteriorSimple => is_interior_simple(s),
            ClassFilter::Chain => interior_chain(s),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationConfig {
    pub order: usize,
    pub dedup: Dedup,
    pub limit: Option<usize>,
    pub filter: Option<ClassFilter>,
}

impl EnumerationConfig {
    pub fn labeled(order: usize) -> Self {
        EnumerationConfig {
            order,
            dedup: Dedup::Labeled,
            limit: None,
            filter: None,
        }
    }

    pub fn up_to_iso(order: usize) -> Self {
        EnumerationConfig {
            dedup: Dedup::Iso,
            ..Self::labeled(order)
        }
    }
}

const UNSET: u8 = u8::MAX;

/// Depth-first search over row-major cells. Each assignment is checked
/// against every triple whose four table lookups are all defined and which
/// uses the cell just assigned.
struct CellSearch {
    n: usize,
    table: Vec<u8>,
    pos: usize,
    done: bool,
}

impl CellSearch {
    fn new(n: usize) -> Self {
        CellSearch {
            n,
            table: vec![UNSET; n * n],
            pos: 0,
            done: false,
        }
    }

    #[inline]
    fn get(&self, a: usize, b: usize) -> Option<usize> {
        let v = self.table[a * self.n + b];
        (v != UNSET).then_some(v as usize)
    }

    /// `(x·y)·z == x·(y·z)` whenever all four lookups are defined.
    #[inline]
    fn triple_ok(&self, x: usize, y: usize, z: usize) -> bool {
        let (Some(xy), Some(yz)) = (self.get(x, y), self.get(y, z)) else {
            return true;
        };
        match (self.get(xy, z), self.get(x, yz)) {
            (Some(l), Some(r)) => l == r,
            _ => true,
        }
    }

    fn consistent(&self, i: usize, j: usize) -> bool {
        let n = self.n;
        for t in 0..n {
            // (i,j) as x·y, and as y·z.
            if !self.triple_ok(i, j, t) || !self.triple_ok(t, i, j) {
                return false;
            }
        }
        for x in 0..n {
            for y in 0..n {
                // (i,j) as (x·y)·z with x·y = i, z = j.
                if self.get(x, y) == Some(i) && !self.triple_ok(x, y, j) {
                    return false;
                }
                // (i,j) as x·(y·z) with x = i, y·z = j.
                if self.get(x, y) == Some(j) && !self.triple_ok(i, x, y) {
                    return false;
                }
            }
        }
        true
    }

    fn next_table(&mut self) -> Option<Vec<u8>> {
        if self.done {
            return None;
        }
        let n = self.n;
        let cells = n * n;
        loop {
            let cur = self.table[self.pos];
            let mut v = if cur == UNSET { 0 } else { cur as usize + 1 };
            let mut placed = false;
            while v < n {
                self.table[self.pos] = v as u8;
                if self.consistent(self.pos / n, self.pos % n) {
                    placed = true;
                    break;
                }
                v += 1;
            }
            if placed {
                if self.pos + 1 == cells {
                    return Some(self.table.clone());
                }
                self.pos += 1;
            } else {
                self.table[self.pos] = UNSET;
                if self.pos == 0 {
                    self.done = true;
                    return None;
                }
                self.pos -= 1;
            }
        }
    }
}

/// Lazily yields semigroups per `cfg`, labeled tables in lexicographic
/// order.
pub struct SemigroupIter {
    search: CellSearch,
    cfg: EnumerationConfig,
    emitted: usize,
}

impl Iterator for SemigroupIter {
    type Item = Semigroup;

    fn next(&mut self) -> Option<Semigroup> {
        if self.cfg.limit.is_some_and(|l| self.emitted >= l) {
            return None;
        }
        loop {
            let table = self.search.next_table()?;
            if self.cfg.dedup == Dedup::Iso && canonical_table(self.search.n, &table) != table {
                continue;
            }
            let s = Semigroup::from_trusted(table);
            if self.cfg.filter.is_some_and(|f| !f.accepts(&s)) {
                continue;
            }
            self.emitted += 1;
            return Some(s);
        }
    }
}

pub fn enumerate_semigroups(cfg: EnumerationConfig) -> Result<SemigroupIter> {
    if !(MIN_ORDER..=MAX_ENUM_ORDER).contains(&cfg.order) {
        return Err(Error::UnsupportedOrder(cfg.order));
    }
    Ok(SemigroupIter {
        search: CellSearch::new(cfg.order),
        cfg,
        emitted: 0,
    })
}

/// Next permutation in lexicographic order; false after the last one.
fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Lexicographically least relabeled table and a permutation reaching it.
fn canonical_with_perm(n: usize, table: &[u8]) -> (Vec<u8>, Vec<usize>) {
    // `inv[new] = old`; the relabeled cell (r,c) holds perm[table[inv r][inv c]].
    let mut inv: Vec<usize> = (0..n).collect();
    let mut best = table.to_vec();
    let mut best_inv = inv.clone();
    let mut perm = vec![0usize; n];
    let mut cand = vec![0u8; n * n];
    loop {
        for (new, &old) in inv.iter().enumerate() {
            perm[old] = new;
        }
        let mut order = std::cmp::Ordering::Equal;
        for r in 0..n {
            for c in 0..n {
                let v = perm[table[inv[r] * n + inv[c]] as usize] as u8;
                cand[r * n + c] = v;
                if order == std::cmp::Ordering::Equal {
                    order = v.cmp(&best[r * n + c]);
                    if order == std::cmp::Ordering::Greater {
                        break;
                    }
                }
            }
            if order == std::cmp::Ordering::Greater {
                break;
            }
        }
        if order == std::cmp::Ordering::Less {
            best.copy_from_slice(&cand);
            best_inv.copy_from_slice(&inv);
        }
        if !next_permutation(&mut inv) {
            break;
        }
    }
    let mut perm = vec![0usize; n];
    for (new, &old) in best_inv.iter().enumerate() {
        perm[old] = new;
    }
    (best, perm)
}

fn canonical_table(n: usize, table: &[u8]) -> Vec<u8> {
    canonical_with_perm(n, table).0
}

/// The lexicographically least table over all `n!` relabelings, with
/// generated element names. Isomorphic semigroups have identical canonical
/// forms.
pub fn canonical_form(s: &Semigroup) -> Semigroup {
    let (_, perm) = canonical_with_perm(s.order(), s.table());
    s.relabel(&perm).with_default_names()
}

pub fn is_isomorphic(a: &Semigroup, b: &Semigroup) -> bool {
    a.order() == b.order()
        && canonical_table(a.order(), a.table()) == canonical_table(b.order(), b.table())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::fixtures::*;

    fn count(cfg: EnumerationConfig) -> usize {
        enumerate_semigroups(cfg).unwrap().count()
    }

    #[test]
    fn labeled_counts_small() {
        assert_eq!(count(EnumerationConfig::labeled(1)), 1);
        assert_eq!(count(EnumerationConfig::labeled(2)), 8);
        assert_eq!(count(EnumerationConfig::labeled(3)), 113);
    }

    #[test]
    fn iso_counts_small() {
        assert_eq!(count(EnumerationConfig::up_to_iso(1)), 1);
        assert_eq!(count(EnumerationConfig::up_to_iso(2)), 5);
        assert_eq!(count(EnumerationConfig::up_to_iso(3)), 24);
    }

    #[test]
    fn lexicographic_emission() {
        let tables: Vec<Vec<u8>> = enumerate_semigroups(EnumerationConfig::labeled(3))
            .unwrap()
            .map(|s| s.table().to_vec())
            .collect();
        assert!(tables.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn limit_and_filter() {
        let cfg = EnumerationConfig {
            limit: Some(3),
            ..EnumerationConfig::labeled(3)
        };
        assert_eq!(count(cfg), 3);
        let cfg = EnumerationConfig {
            filter: Some(ClassFilter::Regular),
            ..EnumerationConfig::labeled(2)
        };
        assert!(enumerate_semigroups(cfg)
            .unwrap()
            .all(|s| is_regular(&s).is_some()));
    }

    #[test]
    fn unsupported_orders() {
        assert_eq!(
            enumerate_semigroups(EnumerationConfig::labeled(0)).err(),
            Some(Error::UnsupportedOrder(0))
        );
        assert_eq!(
            enumerate_semigroups(EnumerationConfig::labeled(7)).err(),
            Some(Error::UnsupportedOrder(7))
        );
    }

    #[test]
    fn canonical_examples() {
        let t = trivial();
        assert_eq!(canonical_form(&t).table(), t.table());
        let l = l2();
        assert_eq!(canonical_form(&l), canonical_form(&l.relabel(&[1, 0])));
        let s = s3();
        assert_eq!(canonical_form(&s), canonical_form(&s.relabel(&[0, 2, 1])));
        assert!(is_isomorphic(&s, &s.relabel(&[2, 1, 0])));
        assert!(!is_isomorphic(&s, &n2()));
    }

    #[test]
    fn left_and_right_zero_are_not_identified() {
        let right_zero = Semigroup::new(
            vec!["x".into(), "y".into()],
            &[vec![0, 1], vec![0, 1]],
            None,
        )
        .unwrap();
        assert!(!is_isomorphic(&l2(), &right_zero));
    }
}
