//! Cayley-table semigroups and the subset algebra on them.
//!
//! Row convention: `table[i][j]` is the product `names[i]·names[j]`, so the
//! left operand selects the row.

use std::collections::HashSet;

use crate::elemset::{ElemSet, MAX_ORDER};
use crate::error::{AssociativityViolation, Error, Result, TableError};

/// A finite semigroup given by its multiplication table.
///
/// Values are validated on construction and immutable afterwards.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Semigroup {
    names: Vec<String>,
    table: Vec<u8>,
    zero: Option<usize>,
}

/// Tokens `a, b, c, …` used for generated semigroups.
pub fn default_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            if n <= 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("e{i}")
            }
        })
        .collect()
}

/// Every violating triple of a square table, in lexicographic triple order.
///
/// `table` is row-major with `n*n` entries, all in `0..n`.
pub fn check_associativity(n: usize, table: &[u8]) -> Vec<AssociativityViolation> {
    assert_eq!(table.len(), n * n, "table is not {n}x{n}");
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let ij = table[i * n + j] as usize;
            for k in 0..n {
                let lhs = table[ij * n + k] as usize;
                let rhs = table[i * n + table[j * n + k] as usize] as usize;
                if lhs != rhs {
                    out.push(AssociativityViolation {
                        triple: (i, j, k),
                        lhs,
                        rhs,
                    });
                }
            }
        }
    }
    out
}

fn first_violation(n: usize, table: &[u8]) -> Option<AssociativityViolation> {
    for i in 0..n {
        for j in 0..n {
            let ij = table[i * n + j] as usize;
            for k in 0..n {
                let lhs = table[ij * n + k] as usize;
                let rhs = table[i * n + table[j * n + k] as usize] as usize;
                if lhs != rhs {
                    return Some(AssociativityViolation {
                        triple: (i, j, k),
                        lhs,
                        rhs,
                    });
                }
            }
        }
    }
    None
}

fn absorbing(n: usize, table: &[u8], z: usize) -> bool {
    (0..n).all(|j| table[z * n + j] as usize == z && table[j * n + z] as usize == z)
}

/// Converts nested rows into a flat table, checking shape and range.
pub fn flatten_rows(rows: &[Vec<usize>]) -> std::result::Result<Vec<u8>, TableError> {
    let n = rows.len();
    if n == 0 {
        return Err(TableError::Empty);
    }
    if n > MAX_ORDER {
        return Err(TableError::TooLarge(n));
    }
    let mut flat = Vec::with_capacity(n * n);
    for (row, r) in rows.iter().enumerate() {
        if r.len() != n {
            return Err(TableError::NonSquare {
                row,
                len: r.len(),
                expected: n,
            });
        }
        for (col, &value) in r.iter().enumerate() {
            if value >= n {
                return Err(TableError::OutOfRange {
                    row,
                    col,
                    value,
                    order: n,
                });
            }
            flat.push(value as u8);
        }
    }
    Ok(flat)
}

impl Semigroup {
    /// Validates a table given as rows of element indices.
    ///
    /// A declared `zero` must be absorbing; when absent, a zero is detected.
    pub fn new(
        names: Vec<String>,
        rows: &[Vec<usize>],
        zero: Option<usize>,
    ) -> std::result::Result<Self, TableError> {
        let table = flatten_rows(rows)?;
        Self::from_flat(names, table, zero)
    }

    /// Like [`Semigroup::new`] with a row-major flat table.
    pub fn from_flat(
        names: Vec<String>,
        table: Vec<u8>,
        zero: Option<usize>,
    ) -> std::result::Result<Self, TableError> {
        let n = names.len();
        if n == 0 {
            return Err(TableError::Empty);
        }
        if n > MAX_ORDER {
            return Err(TableError::TooLarge(n));
        }
        if table.len() != n * n {
            return Err(TableError::NameCount {
                expected: isqrt(table.len()),
                found: n,
            });
        }
        let mut seen = HashSet::new();
        for name in &names {
            if !seen.insert(name.as_str()) {
                return Err(TableError::DuplicateName(name.clone()));
            }
        }
        for (idx, &v) in table.iter().enumerate() {
            if v as usize >= n {
                return Err(TableError::OutOfRange {
                    row: idx / n,
                    col: idx % n,
                    value: v as usize,
                    order: n,
                });
            }
        }
        if let Some(v) = first_violation(n, &table) {
            return Err(TableError::NotAssociative(v));
        }
        let zero = match zero {
            Some(z) if z >= n || !absorbing(n, &table, z) => {
                return Err(TableError::ZeroNotAbsorbing(z))
            }
            Some(z) => Some(z),
            None => (0..n).find(|&z| absorbing(n, &table, z)),
        };
        Ok(Semigroup { names, table, zero })
    }

    /// Builds a semigroup from an already-associative flat table with
    /// generated names. Used by the enumerator, which checks associativity
    /// itself.
    pub(crate) fn from_trusted(table: Vec<u8>) -> Self {
        let n = isqrt(table.len());
        debug_assert!(first_violation(n, &table).is_none());
        let zero = (0..n).find(|&z| absorbing(n, &table, z));
        Semigroup {
            names: default_names(n),
            table,
            zero,
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn index_of(&self, token: &str) -> Option<usize> {
        self.names.iter().position(|n| n == token)
    }

    /// Row-major flat table.
    pub fn table(&self) -> &[u8] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order())
            .map(|r| r.iter().map(|&v| v as usize).collect())
            .collect()
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b] as usize
    }

    pub fn full(&self) -> ElemSet {
        ElemSet::full(self.order())
    }

    pub fn empty_set(&self) -> ElemSet {
        ElemSet::empty(self.order())
    }

    pub fn singleton(&self, a: usize) -> ElemSet {
        ElemSet::singleton(self.order(), a)
    }

    /// Builds a set from element tokens; `None` if a token is unknown.
    pub fn set_of(&self, tokens: &[&str]) -> Option<ElemSet> {
        let mut s = self.empty_set();
        for t in tokens {
            s.insert(self.index_of(t)?);
        }
        Some(s)
    }

    pub fn set_names(&self, s: &ElemSet) -> Vec<String> {
        s.iter().map(|a| self.names[a].clone()).collect()
    }

    /// `{a} ∪ … ` rendered with element tokens, e.g. `{a,b}`.
    pub fn fmt_set(&self, s: &ElemSet) -> String {
        format!("{{{}}}", self.set_names(s).join(","))
    }

    pub(crate) fn check_set(&self, s: &ElemSet) -> Result<()> {
        if s.width() != self.order() {
            return Err(Error::WidthMismatch {
                expected: self.order(),
                found: s.width(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_nonempty(&self, s: &ElemSet) -> Result<()> {
        self.check_set(s)?;
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        Ok(())
    }

    pub(crate) fn check_element(&self, a: usize) -> Result<()> {
        if a >= self.order() {
            return Err(Error::ElementOutOfRange(a));
        }
        Ok(())
    }

    /// Complex product `{ab : a ∈ A, b ∈ B}`; infallible variant for
    /// internal callers that already hold same-width sets.
    pub(crate) fn product(&self, a: &ElemSet, b: &ElemSet) -> ElemSet {
        let n = self.order();
        let mut bits = 0u64;
        for x in a {
            let row = &self.table[x * n..(x + 1) * n];
            for y in b {
                bits |= 1 << row[y];
            }
        }
        ElemSet::from_bits(n, bits)
    }

    pub(crate) fn sandwich_of(&self, a: &ElemSet) -> ElemSet {
        let full = self.full();
        self.product(&self.product(&full, a), &full)
    }

    pub(crate) fn closed(&self, a: &ElemSet) -> bool {
        self.product(a, a).is_subset(a)
    }

    /// Relabels elements by `perm` (old index `i` becomes `perm[i]`); names
    /// travel with their elements.
    pub fn relabel(&self, perm: &[usize]) -> Semigroup {
        let n = self.order();
        assert_eq!(perm.len(), n, "permutation length");
        let mut table = vec![0u8; n * n];
        let mut names = vec![String::new(); n];
        for i in 0..n {
            names[perm[i]] = self.names[i].clone();
            for j in 0..n {
                table[perm[i] * n + perm[j]] = perm[self.mul(i, j)] as u8;
            }
        }
        Semigroup {
            names,
            table,
            zero: self.zero.map(|z| perm[z]),
        }
    }

    /// The subsemigroup induced on `t`, with `map[k]` giving the ambient
    /// index of its `k`-th element.
    pub fn induced(&self, t: &ElemSet) -> Result<(Semigroup, Vec<usize>)> {
        self.check_nonempty(t)?;
        if !self.closed(t) {
            return Err(Error::NotSubsemigroup);
        }
        let map: Vec<usize> = t.iter().collect();
        let mut local = vec![usize::MAX; self.order()];
        for (k, &a) in map.iter().enumerate() {
            local[a] = k;
        }
        let m = map.len();
        let mut table = Vec::with_capacity(m * m);
        for &a in &map {
            for &b in &map {
                table.push(local[self.mul(a, b)] as u8);
            }
        }
        let names = map.iter().map(|&a| self.names[a].clone()).collect();
        let zero = (0..m).find(|&z| absorbing(m, &table, z));
        Ok((Semigroup { names, table, zero }, map))
    }

    /// Same element set, fresh `a, b, c, …` tokens.
    pub fn with_default_names(&self) -> Semigroup {
        Semigroup {
            names: default_names(self.order()),
            ..self.clone()
        }
    }
}

fn isqrt(len: usize) -> usize {
    let mut n = 0;
    while (n + 1) * (n + 1) <= len {
        n += 1;
    }
    n
}

/// Complex product `A·B`.
pub fn subset_product(s: &Semigroup, a: &ElemSet, b: &ElemSet) -> Result<ElemSet> {
    s.check_set(a)?;
    s.check_set(b)?;
    Ok(s.product(a, b))
}

/// `S·A·S`.
pub fn sandwich(s: &Semigroup, a: &ElemSet) -> Result<ElemSet> {
    s.check_nonempty(a)?;
    Ok(s.sandwich_of(a))
}

/// The two-sided absorbing element, if one exists.
pub fn detect_zero(s: &Semigroup) -> Option<usize> {
    let n = s.order();
    (0..n).find(|&z| absorbing(n, &s.table, z))
}

pub fn is_subsemigroup(s: &Semigroup, a: &ElemSet) -> Result<bool> {
    s.check_nonempty(a)?;
    Ok(s.closed(a))
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    fn build(names: &[&str], rows: &[&[usize]]) -> Semigroup {
        let rows: Vec<Vec<usize>> = rows.iter().map(|r| r.to_vec()).collect();
        Semigroup::new(names.iter().map(|s| s.to_string()).collect(), &rows, None).unwrap()
    }

    /// Three-element semilattice with zero `a`.
    pub fn s3() -> Semigroup {
        build(&["a", "b", "c"], &[&[0, 0, 0], &[0, 1, 0], &[0, 0, 2]])
    }

    /// Left-zero semigroup: `x·y = x`.
    pub fn l2() -> Semigroup {
        build(&["x", "y"], &[&[0, 0], &[1, 1]])
    }

    /// Null semigroup: every product is `0`.
    pub fn n2() -> Semigroup {
        build(&["0", "e"], &[&[0, 0], &[0, 0]])
    }

    pub fn trivial() -> Semigroup {
        build(&["e"], &[&[0]])
    }

    /// The four-element table that fails associativity.
    pub fn example1_rows() -> Vec<Vec<usize>> {
        vec![
            vec![0, 2, 1, 3],
            vec![2, 3, 3, 3],
            vec![1, 3, 3, 3],
            vec![3, 3, 3, 3],
        ]
    }
}
