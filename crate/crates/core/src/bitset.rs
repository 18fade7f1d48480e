//! Subsets of a ground set of at most 64 elements, stored as a single word.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub, SubAssign};

/// Largest ground set representable by an [`ElementSet`].
pub const MAX_ELEMENTS: usize = 64;

/// A set of element ids `0..64`. Ordering is by the underlying word, which is
/// the canonical order used for every sorted output in this crate.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The set `{0, .., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ELEMENTS);
        if n == MAX_ELEMENTS {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(e: usize) -> Self {
        debug_assert!(e < MAX_ELEMENTS);
        ElementSet(1u64 << e)
    }

    #[inline]
    pub fn contains(self, e: usize) -> bool {
        e < MAX_ELEMENTS && self.0 >> e & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, e: usize) {
        self.0 |= 1u64 << e;
    }

    #[inline]
    pub fn remove(&mut self, e: usize) {
        self.0 &= !(1u64 << e);
    }

    #[inline]
    pub fn with(self, e: usize) -> Self {
        ElementSet(self.0 | 1u64 << e)
    }

    #[inline]
    pub fn without(self, e: usize) -> Self {
        ElementSet(self.0 & !(1u64 << e))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn is_subset(self, other: ElementSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_proper_subset(self, other: ElementSet) -> bool {
        self != other && self.is_subset(other)
    }

    #[inline]
    pub fn is_disjoint(self, other: ElementSet) -> bool {
        self.0 & other.0 == 0
    }

    #[inline]
    pub fn intersects(self, other: ElementSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Least element, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Largest element id plus one (0 for the empty set).
    #[inline]
    pub fn span(self) -> usize {
        (64 - self.0.leading_zeros()) as usize
    }

    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    /// All subsets of `self`, starting with the empty set and ending with `self`.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// All subsets of `self` with exactly `k` elements, in increasing word order.
    pub fn subsets_of_size(self, k: usize) -> impl Iterator<Item = ElementSet> {
        self.subsets().filter(move |s| s.len() == k)
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ElementSet::EMPTY;
        for e in iter {
            s.insert(e);
        }
        s
    }
}

impl<'a> FromIterator<&'a usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl IntoIterator for ElementSet {
    type Item = usize;
    type IntoIter = Elements;

    fn into_iter(self) -> Elements {
        self.iter()
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $assign_trait:ident, $assign:ident, $op:tt) => {
        impl $trait for ElementSet {
            type Output = ElementSet;
            #[inline]
            fn $method(self, rhs: ElementSet) -> ElementSet {
                ElementSet(self.0 $op rhs.0)
            }
        }
        impl $assign_trait for ElementSet {
            #[inline]
            fn $assign(&mut self, rhs: ElementSet) {
                self.0 = self.0 $op rhs.0;
            }
        }
    };
}

binop!(BitOr, bitor, BitOrAssign, bitor_assign, |);
binop!(BitAnd, bitand, BitAndAssign, bitand_assign, &);

impl Sub for ElementSet {
    type Output = ElementSet;
    #[inline]
    fn sub(self, rhs: ElementSet) -> ElementSet {
        ElementSet(self.0 & !rhs.0)
    }
}

impl SubAssign for ElementSet {
    #[inline]
    fn sub_assign(&mut self, rhs: ElementSet) {
        self.0 &= !rhs.0;
    }
}

impl Not for ElementSet {
    type Output = ElementSet;
    #[inline]
    fn not(self) -> ElementSet {
        ElementSet(!self.0)
    }
}

/// Iterator over the members of an [`ElementSet`] in increasing order.
#[derive(Clone)]
pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

/// Iterator over all subsets of a mask (increasing word order).
#[derive(Clone)]
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = ElementSet;

    #[inline]
    fn next(&mut self) -> Option<ElementSet> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            // next submask in increasing order
            Some((cur | !self.mask).wrapping_add(1) & self.mask)
        };
        Some(ElementSet(cur))
    }
}

// Serialized as the underlying word.
impl serde::Serialize for ElementSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u64(self.bits())
    }
}

impl<'de> serde::Deserialize<'de> for ElementSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        <u64 as serde::Deserialize>::deserialize(d).map(ElementSet::from_bits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_enumerates_every_submask_once_in_order() {
        let mask = ElementSet::from_iter([1usize, 3, 4]);
        let subs: Vec<_> = mask.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.windows(2).all(|w| w[0] < w[1]));
        assert!(subs.iter().all(|s| s.is_subset(mask)));
        assert_eq!(subs[0], ElementSet::EMPTY);
        assert_eq!(*subs.last().unwrap(), mask);
    }

    #[test]
    fn empty_mask_has_one_subset() {
        assert_eq!(ElementSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn full_and_iter() {
        assert_eq!(ElementSet::full(0), ElementSet::EMPTY);
        assert_eq!(ElementSet::full(64).len(), 64);
        let s = ElementSet::full(5).without(2);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 1, 3, 4]);
        assert_eq!(s.first(), Some(0));
        assert_eq!(s.span(), 5);
    }

    #[test]
    fn set_algebra() {
        let a = ElementSet::from_iter([0usize, 1, 2]);
        let b = ElementSet::from_iter([2usize, 3]);
        assert_eq!((a | b).len(), 4);
        assert_eq!(a & b, ElementSet::singleton(2));
        assert_eq!(a - b, ElementSet::from_iter([0usize, 1]));
        assert!(ElementSet::singleton(2).is_proper_subset(a));
        assert!(!a.is_proper_subset(a));
        assert!(a.intersects(b));
        assert_eq!(format!("{a:?}"), "{0, 1, 2}");
    }
}
