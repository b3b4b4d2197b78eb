//! Fixed-width subsets of a semigroup's carrier.

use std::fmt;

/// Largest carrier size an [`ElemSet`] can index.
pub const MAX_ORDER: usize = 64;

/// A subset of `{0, .., width-1}` stored as a bit-vector.
///
/// Ordering is by bit-vector value first, which is the order used for every
/// enumerated family in this crate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemSet {
    bits: u64,
    width: u8,
}

fn mask(width: usize) -> u64 {
    if width == 64 {
        u64::MAX
    } else {
        (1u64 << width) - 1
    }
}

impl ElemSet {
    pub fn empty(width: usize) -> Self {
        assert!(width <= MAX_ORDER, "width {width} exceeds {MAX_ORDER}");
        ElemSet {
            bits: 0,
            width: width as u8,
        }
    }

    pub fn full(width: usize) -> Self {
        assert!(width <= MAX_ORDER, "width {width} exceeds {MAX_ORDER}");
        ElemSet {
            bits: mask(width),
            width: width as u8,
        }
    }

    pub fn singleton(width: usize, a: usize) -> Self {
        let mut s = Self::empty(width);
        s.insert(a);
        s
    }

    /// Builds a set from raw bits; bits at or above `width` are discarded.
    pub fn from_bits(width: usize, bits: u64) -> Self {
        assert!(width <= MAX_ORDER, "width {width} exceeds {MAX_ORDER}");
        ElemSet {
            bits: bits & mask(width),
            width: width as u8,
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(width: usize, items: I) -> Self {
        let mut s = Self::empty(width);
        for a in items {
            s.insert(a);
        }
        s
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.width as usize
    }

    #[inline]
    pub fn contains(&self, a: usize) -> bool {
        a < self.width() && self.bits >> a & 1 == 1
    }

    pub fn insert(&mut self, a: usize) {
        assert!(a < self.width(), "element {a} outside width {}", self.width);
        self.bits |= 1 << a;
    }

    pub fn remove(&mut self, a: usize) {
        if a < self.width() {
            self.bits &= !(1 << a);
        }
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_full(&self) -> bool {
        self.bits == mask(self.width())
    }

    #[inline]
    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.check_width(other);
        self.bits & !other.bits == 0
    }

    pub fn is_proper_subset(&self, other: &ElemSet) -> bool {
        self.is_subset(other) && self.bits != other.bits
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        self.check_width(other);
        ElemSet {
            bits: self.bits | other.bits,
            width: self.width,
        }
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        self.check_width(other);
        ElemSet {
            bits: self.bits & other.bits,
            width: self.width,
        }
    }

    pub fn difference(&self, other: &ElemSet) -> ElemSet {
        self.check_width(other);
        ElemSet {
            bits: self.bits & !other.bits,
            width: self.width,
        }
    }

    /// Least member, if any.
    pub fn first(&self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> Iter {
        Iter { bits: self.bits }
    }

    fn check_width(&self, other: &ElemSet) {
        assert_eq!(self.width, other.width, "ElemSet width mismatch");
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Iterator over members in ascending order.
pub struct Iter {
    bits: u64,
}

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let a = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(a)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.bits.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for ElemSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl IntoIterator for &ElemSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

/// All nonempty subsets of a `width`-element carrier, ascending by bit value.
pub fn nonempty_subsets(width: usize) -> impl Iterator<Item = ElemSet> {
    assert!(
        width < MAX_ORDER,
        "subset scan over {width} elements is not supported"
    );
    (1u64..(1u64 << width)).map(move |bits| ElemSet::from_bits(width, bits))
}
