//! Word-packed subsets of the vertex/variable range `1..=n`.
//!
//! Every set-valued object in this crate (neighborhoods, monomial supports,
//! dominating sets, multidegrees) is a subset of at most [`MAX_VERTICES`]
//! indices, so a single machine word suffices. All outputs are ordered by
//! [`VertexSet`]'s `Ord`, which is lexicographic on the ascending element
//! sequence, so serialized families are reproducible.

use std::cmp::Ordering;
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

/// Largest universe a [`VertexSet`] can live in.
pub const MAX_VERTICES: usize = 32;

/// A set of 1-based indices drawn from `1..=32`, stored as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The full set `{1, .., n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "universe too large: {n}");
        if n == 0 {
            VertexSet(0)
        } else {
            VertexSet(u32::MAX >> (32 - n))
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet::EMPTY.with(v)
    }

    pub(crate) fn from_bits(bits: u32) -> Self {
        VertexSet(bits)
    }

    pub(crate) fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        self.0 & (1 << (v - 1)) != 0
    }

    #[must_use]
    pub fn with(self, v: usize) -> Self {
        assert!((1..=MAX_VERTICES).contains(&v), "vertex out of range: {v}");
        VertexSet(self.0 | (1 << (v - 1)))
    }

    #[must_use]
    pub fn without(self, v: usize) -> Self {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        VertexSet(self.0 & !(1 << (v - 1)))
    }

    #[must_use]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[must_use]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    /// Elements of `self` not in `other`.
    #[must_use]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Smallest element, if any.
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize + 1)
        }
    }

    /// Elements in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize + 1;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s = s.with(v);
        }
        s
    }
}

impl Ord for VertexSet {
    /// Lexicographic order on the ascending element sequence, so
    /// `{1,3,5} < {1,4} < {2,4} < {2,5}` and a proper prefix sorts first.
    fn cmp(&self, other: &Self) -> Ordering {
        if self.0 == other.0 {
            return Ordering::Equal;
        }
        let diff = self.0 ^ other.0;
        let low = diff.trailing_zeros();
        if self.0 & (1 << low) != 0 {
            // `self` owns the first differing element; it sorts first unless
            // `other` is exhausted there (prefix case).
            if other.0 >> low != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        } else if self.0 >> low != 0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for v in self.iter() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let s: VertexSet = [2, 4, 7].into_iter().collect();
        assert_eq!(s.len(), 3);
        assert!(s.contains(4));
        assert!(!s.contains(3));
        assert_eq!(s.to_vec(), vec![2, 4, 7]);
        assert_eq!(s.min(), Some(2));
        assert!(s.is_subset_of(VertexSet::full(7)));
        assert!(!VertexSet::full(7).is_subset_of(s));
        assert_eq!(s.without(4).to_vec(), vec![2, 7]);
    }

    #[test]
    fn lexicographic_order() {
        let set = |vs: &[usize]| vs.iter().copied().collect::<VertexSet>();
        let mut fam = vec![
            set(&[2, 4]),
            set(&[2, 5]),
            set(&[1, 4]),
            set(&[1, 3, 5]),
            set(&[1]),
            set(&[1, 3]),
        ];
        fam.sort();
        let sorted: Vec<Vec<usize>> = fam.into_iter().map(|s| s.to_vec()).collect();
        assert_eq!(
            sorted,
            vec![
                vec![1],
                vec![1, 3],
                vec![1, 3, 5],
                vec![1, 4],
                vec![2, 4],
                vec![2, 5],
            ]
        );
    }

    #[test]
    fn display_form() {
        let s: VertexSet = [1, 3].into_iter().collect();
        assert_eq!(s.to_string(), "{1,3}");
        assert_eq!(VertexSet::EMPTY.to_string(), "{}");
    }
}
