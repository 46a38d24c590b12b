//! Ideals on a finite ground set and the operators they induce on a topology:
//! the local function `A*`, the `*`-closure and `*`-interior, the δ_I-closure,
//! and the `*`-based structural predicates.
//!
//! Everything here is computed straight from the defining quantifiers by
//! scanning open sets. [`crate::SpaceContext`] memoizes faster equivalents.

use crate::mask::SubsetMask;
use crate::topology::{SetFamily, Topology};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// An ideal on a finite set. Finite ideals are principal, so the ideal is
/// stored as its largest member `M` and represents every subset of `M`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Ideal {
    n: usize,
    maximal: SubsetMask,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum IdealViolation {
    #[error("an ideal must be nonempty")]
    Empty,
    #[error("member {0} lies outside the ground set")]
    OutOfRange(SubsetMask),
    #[error("not downward closed: {sub} is missing below {member}")]
    NotDownwardClosed { member: SubsetMask, sub: SubsetMask },
    #[error("not union closed: union of {0} and {1} is missing")]
    NotUnionClosed(SubsetMask, SubsetMask),
}

/// Checks nonemptiness, downward closure and union closure.
pub fn check_ideal(n: usize, family: &SetFamily) -> Result<(), IdealViolation> {
    if family.is_empty() {
        return Err(IdealViolation::Empty);
    }
    if let Some(&bad) = family.members().iter().find(|m| !m.fits(n)) {
        return Err(IdealViolation::OutOfRange(bad));
    }
    for &member in family.members() {
        if let Some(sub) = member.subsets().find(|&s| !family.contains(s)) {
            return Err(IdealViolation::NotDownwardClosed { member, sub });
        }
    }
    let members = family.members();
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            if !family.contains(a.union(b)) {
                return Err(IdealViolation::NotUnionClosed(a, b));
            }
        }
    }
    Ok(())
}

pub fn is_ideal(n: usize, family: &SetFamily) -> bool {
    check_ideal(n, family).is_ok()
}

impl Ideal {
    /// The powerset of `maximal`.
    pub fn principal(n: usize, maximal: SubsetMask) -> Self {
        assert!(
            maximal.fits(n),
            "{maximal} outside a ground set of {n} points"
        );
        Ideal { n, maximal }
    }

    /// `{∅}`.
    pub fn trivial(n: usize) -> Self {
        Ideal::principal(n, SubsetMask::EMPTY)
    }

    /// `P(X)`.
    pub fn full(n: usize) -> Self {
        Ideal::principal(n, SubsetMask::full(n))
    }

    pub fn from_family(family: &SetFamily) -> Result<Self, IdealViolation> {
        check_ideal(family.width(), family)?;
        let maximal = family
            .members()
            .iter()
            .fold(SubsetMask::EMPTY, |acc, &m| acc.union(m));
        Ok(Ideal::principal(family.width(), maximal))
    }

    pub fn width(&self) -> usize {
        self.n
    }

    pub fn maximal(&self) -> SubsetMask {
        self.maximal
    }

    pub fn contains(&self, set: SubsetMask) -> bool {
        set.is_subset_of(self.maximal)
    }

    pub fn is_trivial(&self) -> bool {
        self.maximal.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.maximal == SubsetMask::full(self.n)
    }

    pub fn members(&self) -> SetFamily {
        SetFamily::new(self.n, self.maximal.subsets())
    }
}

/// All `2^n` ideals, ordered by their maximal member.
pub fn enumerate_ideals(n: usize) -> Vec<Ideal> {
    SubsetMask::all(n).map(|m| Ideal::principal(n, m)).collect()
}

/// Star-related flags of a subset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarStatus {
    /// `A ⊆ A*`
    pub dense_in_itself: bool,
    /// `A* ⊆ A`
    pub tau_star_closed: bool,
    /// `A = A*`
    pub perfect: bool,
}

impl StarStatus {
    pub fn of(set: SubsetMask, local: SubsetMask) -> Self {
        StarStatus {
            dense_in_itself: set.is_subset_of(local),
            tau_star_closed: local.is_subset_of(set),
            perfect: set == local,
        }
    }
}

/// A topology paired with an ideal, evaluated by definition.
#[derive(Clone, Copy, Debug)]
pub struct IdealSpace<'a> {
    pub topology: &'a Topology,
    pub ideal: &'a Ideal,
}

impl<'a> IdealSpace<'a> {
    pub fn new(topology: &'a Topology, ideal: &'a Ideal) -> Self {
        assert_eq!(topology.width(), ideal.width());
        IdealSpace { topology, ideal }
    }

    fn n(&self) -> usize {
        self.topology.width()
    }

    /// `A* = { x : U ∩ A ∉ I for every open U ∋ x }`.
    pub fn local_function(&self, set: SubsetMask) -> SubsetMask {
        let opens = self.topology.opens();
        (0..self.n())
            .filter(|&x| {
                opens
                    .iter()
                    .filter(|u| u.contains(x))
                    .all(|&u| !self.ideal.contains(u.intersection(set)))
            })
            .fold(SubsetMask::EMPTY, |acc, x| {
                acc.union(SubsetMask::singleton(x))
            })
    }

    /// `Cl*(A) = A ∪ A*`.
    pub fn star_closure(&self, set: SubsetMask) -> SubsetMask {
        set.union(self.local_function(set))
    }

    pub fn star_interior(&self, set: SubsetMask) -> SubsetMask {
        let n = self.n();
        self.star_closure(set.complement(n)).complement(n)
    }

    pub fn is_star_closed(&self, set: SubsetMask) -> bool {
        self.local_function(set).is_subset_of(set)
    }

    pub fn star_status(&self, set: SubsetMask) -> StarStatus {
        StarStatus::of(set, self.local_function(set))
    }

    /// Points `x` such that every open `U ∋ x` has `Int(Cl*(U)) ∩ A ≠ ∅`.
    pub fn delta_i_closure(&self, set: SubsetMask) -> SubsetMask {
        let opens = self.topology.opens();
        (0..self.n())
            .filter(|&x| {
                opens
                    .iter()
                    .filter(|u| u.contains(x))
                    .all(|&u| self.topology.interior(self.star_closure(u)).meets(set))
            })
            .fold(SubsetMask::EMPTY, |acc, x| {
                acc.union(SubsetMask::singleton(x))
            })
    }

    pub fn is_delta_i_closed(&self, set: SubsetMask) -> bool {
        self.delta_i_closure(set) == set
    }

    pub fn is_delta_i_open(&self, set: SubsetMask) -> bool {
        self.is_delta_i_closed(set.complement(self.n()))
    }

    /// `A = U ∩ Cl*(A)` for some open `U`.
    pub fn is_weakly_i_local_closed(&self, set: SubsetMask) -> bool {
        let cl = self.star_closure(set);
        self.topology
            .opens()
            .iter()
            .any(|&u| u.intersection(cl) == set)
    }

    /// `A = U ∩ K` with `U` open and `K` `*`-closed, by exhaustive pair scan.
    pub fn is_weakly_i_local_closed_by_pairs(&self, set: SubsetMask) -> bool {
        let star_closed: Vec<SubsetMask> = SubsetMask::all(self.n())
            .filter(|&k| self.is_star_closed(k))
            .collect();
        self.topology
            .opens()
            .iter()
            .any(|&u| star_closed.iter().any(|&k| u.intersection(k) == set))
    }

    /// `Cl*(V)` is open for every open `V`.
    pub fn is_star_extremally_disconnected(&self) -> bool {
        self.topology
            .opens()
            .iter()
            .all(|&v| self.topology.is_open(self.star_closure(v)))
    }

    /// `Cl*(Int(V)) ⊆ Int(Cl*(V))` for every subset `V`.
    pub fn star_interior_closure_criterion(&self) -> bool {
        SubsetMask::all(self.n()).all(|v| {
            self.star_closure(self.topology.interior(v))
                .is_subset_of(self.topology.interior(self.star_closure(v)))
        })
    }
}
