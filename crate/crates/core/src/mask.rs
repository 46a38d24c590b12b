//! Subsets of a small ground set `{0, .., n-1}` encoded as bit masks.

use serde::{Deserialize, Serialize};
use std::fmt;

/// Largest ground set a [`SubsetMask`] can describe.
pub const MAX_POINTS: usize = 16;

/// A subset of the ground set; bit `i` is set iff point `i` belongs to it.
///
/// The mask itself does not know the ground-set size. Operations that need
/// the full set (complement) take the width explicitly.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct SubsetMask(u16);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub const fn from_bits(bits: u16) -> Self {
        SubsetMask(bits)
    }

    pub const fn bits(self) -> u16 {
        self.0
    }

    /// The whole ground set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(
            n <= MAX_POINTS,
            "ground set of {n} points exceeds {MAX_POINTS}"
        );
        if n == MAX_POINTS {
            SubsetMask(u16::MAX)
        } else {
            SubsetMask((1u16 << n) - 1)
        }
    }

    pub fn singleton(point: usize) -> Self {
        assert!(point < MAX_POINTS);
        SubsetMask(1 << point)
    }

    pub fn from_points<I: IntoIterator<Item = usize>>(points: I) -> Self {
        points.into_iter().fold(SubsetMask::EMPTY, |acc, p| {
            acc.union(SubsetMask::singleton(p))
        })
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn contains(self, point: usize) -> bool {
        point < MAX_POINTS && self.0 & (1 << point) != 0
    }

    pub const fn union(self, other: Self) -> Self {
        SubsetMask(self.0 | other.0)
    }

    pub const fn intersection(self, other: Self) -> Self {
        SubsetMask(self.0 & other.0)
    }

    pub const fn difference(self, other: Self) -> Self {
        SubsetMask(self.0 & !other.0)
    }

    pub fn complement(self, n: usize) -> Self {
        SubsetMask::full(n).difference(self)
    }

    pub const fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn meets(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    /// True when no bit at position `n` or above is set.
    pub fn fits(self, n: usize) -> bool {
        self.is_subset_of(SubsetMask::full(n))
    }

    /// Usable as a table index.
    pub const fn index(self) -> usize {
        self.0 as usize
    }

    pub fn points(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..MAX_POINTS).filter(move |&p| bits & (1 << p) != 0)
    }

    /// All subsets of the ground set in increasing numeric order.
    pub fn all(n: usize) -> impl Iterator<Item = SubsetMask> {
        let top = SubsetMask::full(n).0 as u32;
        (0..=top).map(|b| SubsetMask(b as u16))
    }

    /// All subsets of `self` in increasing numeric order.
    pub fn subsets(self) -> impl Iterator<Item = SubsetMask> {
        let all = self.0;
        // Walk sub-masks upward: next = (current - all) & all.
        let mut next = Some(0u16);
        std::iter::from_fn(move || {
            let current = next?;
            next = if current == all {
                None
            } else {
                Some(current.wrapping_sub(all) & all)
            };
            Some(SubsetMask(current))
        })
    }

    /// All supersets of `self` inside the ground set, increasing.
    pub fn supersets(self, n: usize) -> impl Iterator<Item = SubsetMask> {
        let base = self;
        self.complement(n)
            .subsets()
            .map(move |extra| base.union(extra))
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.points().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", point_name(p))?;
        }
        write!(f, "}}")
    }
}

/// Default display name of a point: `a`, `b`, `c`, ...
pub fn point_name(point: usize) -> String {
    assert!(point < MAX_POINTS);
    ((b'a' + point as u8) as char).to_string()
}
