//! Topologies on finite ground sets and the purely topological operators.

use crate::mask::{SubsetMask, MAX_POINTS};
use thiserror::Error;

/// Largest ground set for which [`enumerate_topologies`] is supported.
pub const MAX_ENUMERATION_POINTS: usize = 5;

/// A sorted, duplicate-free family of subsets. No closure properties implied.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetFamily {
    n: usize,
    members: Vec<SubsetMask>,
}

impl SetFamily {
    pub fn new<I: IntoIterator<Item = SubsetMask>>(n: usize, members: I) -> Self {
        assert!(n <= MAX_POINTS);
        let mut members: Vec<SubsetMask> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        SetFamily { n, members }
    }

    pub fn width(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[SubsetMask] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, set: SubsetMask) -> bool {
        self.members.binary_search(&set).is_ok()
    }
}

/// Why a family fails to be a topology.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TopologyViolation {
    #[error("member {0} lies outside the ground set")]
    OutOfRange(SubsetMask),
    #[error("missing the empty set")]
    MissingEmpty,
    #[error("missing X")]
    MissingWhole,
    #[error("union of {0} and {1} is missing")]
    NotUnionClosed(SubsetMask, SubsetMask),
    #[error("intersection of {0} and {1} is missing")]
    NotIntersectionClosed(SubsetMask, SubsetMask),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("topology enumeration supports at most {max} points, got {requested}")]
    TooManyPoints { requested: usize, max: usize },
}

/// Checks the topology axioms, reporting the first violation found.
pub fn check_topology(n: usize, family: &SetFamily) -> Result<(), TopologyViolation> {
    let whole = SubsetMask::full(n);
    if let Some(&bad) = family.members().iter().find(|m| !m.fits(n)) {
        return Err(TopologyViolation::OutOfRange(bad));
    }
    if !family.contains(SubsetMask::EMPTY) {
        return Err(TopologyViolation::MissingEmpty);
    }
    if !family.contains(whole) {
        return Err(TopologyViolation::MissingWhole);
    }
    let members = family.members();
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            if !family.contains(a.union(b)) {
                return Err(TopologyViolation::NotUnionClosed(a, b));
            }
            if !family.contains(a.intersection(b)) {
                return Err(TopologyViolation::NotIntersectionClosed(a, b));
            }
        }
    }
    Ok(())
}

/// True iff the family contains the empty set and X and is closed under
/// pairwise union and intersection.
pub fn is_topology(n: usize, family: &SetFamily) -> bool {
    check_topology(n, family).is_ok()
}

/// A topology on `{0, .., n-1}`; open sets kept sorted by mask value.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Topology {
    opens: SetFamily,
}

impl Topology {
    pub fn new(family: SetFamily) -> Result<Self, TopologyViolation> {
        check_topology(family.width(), &family)?;
        Ok(Topology { opens: family })
    }

    pub fn from_opens<I: IntoIterator<Item = SubsetMask>>(
        n: usize,
        opens: I,
    ) -> Result<Self, TopologyViolation> {
        Topology::new(SetFamily::new(n, opens))
    }

    pub fn discrete(n: usize) -> Self {
        Topology {
            opens: SetFamily::new(n, SubsetMask::all(n)),
        }
    }

    pub fn indiscrete(n: usize) -> Self {
        Topology {
            opens: SetFamily::new(n, [SubsetMask::EMPTY, SubsetMask::full(n)]),
        }
    }

    pub fn width(&self) -> usize {
        self.opens.width()
    }

    pub fn whole(&self) -> SubsetMask {
        SubsetMask::full(self.width())
    }

    pub fn opens(&self) -> &[SubsetMask] {
        self.opens.members()
    }

    pub fn family(&self) -> &SetFamily {
        &self.opens
    }

    pub fn is_open(&self, set: SubsetMask) -> bool {
        self.opens.contains(set)
    }

    pub fn is_closed(&self, set: SubsetMask) -> bool {
        self.is_open(set.complement(self.width()))
    }

    pub fn closed_sets(&self) -> impl Iterator<Item = SubsetMask> + '_ {
        let n = self.width();
        self.opens().iter().map(move |u| u.complement(n))
    }

    /// Union of all open sets contained in `set`.
    pub fn interior(&self, set: SubsetMask) -> SubsetMask {
        self.opens()
            .iter()
            .filter(|u| u.is_subset_of(set))
            .fold(SubsetMask::EMPTY, |acc, &u| acc.union(u))
    }

    /// Complement of the interior of the complement.
    pub fn closure(&self, set: SubsetMask) -> SubsetMask {
        let n = self.width();
        self.interior(set.complement(n)).complement(n)
    }

    /// The smallest open set containing `point`.
    pub fn minimal_neighborhood(&self, point: usize) -> SubsetMask {
        self.opens()
            .iter()
            .filter(|u| u.contains(point))
            .fold(self.whole(), |acc, &u| acc.intersection(u))
    }

    pub fn is_regular_open(&self, set: SubsetMask) -> bool {
        self.interior(self.closure(set)) == set
    }

    pub fn regular_opens(&self) -> impl Iterator<Item = SubsetMask> + '_ {
        self.opens()
            .iter()
            .copied()
            .filter(move |&u| self.is_regular_open(u))
    }

    /// Every point of `set` has a regular open `G` with `x ∈ G ⊆ set`.
    pub fn is_delta_open(&self, set: SubsetMask) -> bool {
        set.points().all(|x| {
            self.regular_opens()
                .any(|g| g.contains(x) && g.is_subset_of(set))
        })
    }

    pub fn is_dense(&self, set: SubsetMask) -> bool {
        self.closure(set) == self.whole()
    }

    /// Every dense subset is open.
    pub fn is_submaximal(&self) -> bool {
        SubsetMask::all(self.width())
            .filter(|&a| self.is_dense(a))
            .all(|a| self.is_open(a))
    }

    pub fn is_preopen(&self, set: SubsetMask) -> bool {
        set.is_subset_of(self.interior(self.closure(set)))
    }

    /// `set = U ∩ Cl(set)` for some open `U`.
    pub fn is_locally_closed(&self, set: SubsetMask) -> bool {
        let cl = self.closure(set);
        self.opens().iter().any(|&u| u.intersection(cl) == set)
    }

    /// `set = U ∩ K` for some open `U` and closed `K`, by exhaustive pair scan.
    pub fn is_locally_closed_by_pairs(&self, set: SubsetMask) -> bool {
        self.opens()
            .iter()
            .any(|&u| self.closed_sets().any(|k| u.intersection(k) == set))
    }
}

/// Every labeled topology on `n` points, sorted by their open-set lists.
///
/// Uses the naive filter over all candidate families for `n <= 4` and
/// minimal-neighborhood generators for `n = 5`.
pub fn enumerate_topologies(n: usize) -> Result<Vec<Topology>, EnumerationError> {
    if n > MAX_ENUMERATION_POINTS {
        return Err(EnumerationError::TooManyPoints {
            requested: n,
            max: MAX_ENUMERATION_POINTS,
        });
    }
    if n <= 4 {
        Ok(enumerate_topologies_by_filter(n))
    } else {
        Ok(enumerate_topologies_by_generators(n))
    }
}

/// Filters every family containing the empty set and X through [`is_topology`].
pub fn enumerate_topologies_by_filter(n: usize) -> Vec<Topology> {
    assert!(n <= 4, "naive filter is limited to 4 points");
    let whole = SubsetMask::full(n);
    // Proper nonempty subsets are the free choices.
    let free: Vec<SubsetMask> = SubsetMask::all(n)
        .filter(|&s| !s.is_empty() && s != whole)
        .collect();
    let mut out = Vec::new();
    for choice in 0u32..(1u32 << free.len()) {
        let members = free
            .iter()
            .enumerate()
            .filter(|(i, _)| choice & (1 << i) != 0)
            .map(|(_, &s)| s)
            .chain([SubsetMask::EMPTY, whole]);
        let family = SetFamily::new(n, members);
        if is_topology(n, &family) {
            out.push(Topology { opens: family });
        }
    }
    out.sort();
    out
}

/// Grows the union closure of each consistent system of minimal neighborhoods
/// (`y ∈ U_x ⇒ U_y ⊆ U_x`) and keeps the intersection-closed results.
pub fn enumerate_topologies_by_generators(n: usize) -> Vec<Topology> {
    assert!(n <= MAX_ENUMERATION_POINTS);
    let whole = SubsetMask::full(n);
    let mut out = Vec::new();
    let mut neighborhoods = vec![SubsetMask::EMPTY; n];
    grow_generators(n, 0, &mut neighborhoods, whole, &mut out);
    out.sort();
    out
}

fn grow_generators(
    n: usize,
    point: usize,
    neighborhoods: &mut [SubsetMask],
    whole: SubsetMask,
    out: &mut Vec<Topology>,
) {
    if point == n {
        if !is_consistent_neighborhood_system(neighborhoods) {
            return;
        }
        let family = union_closure(n, neighborhoods);
        if is_topology(n, &family) {
            out.push(Topology { opens: family });
        }
        return;
    }
    let me = SubsetMask::singleton(point);
    for extra in whole.difference(me).subsets() {
        neighborhoods[point] = me.union(extra);
        grow_generators(n, point + 1, neighborhoods, whole, out);
    }
}

fn is_consistent_neighborhood_system(neighborhoods: &[SubsetMask]) -> bool {
    neighborhoods
        .iter()
        .all(|&ux| ux.points().all(|y| neighborhoods[y].is_subset_of(ux)))
}

fn union_closure(n: usize, generators: &[SubsetMask]) -> SetFamily {
    let mut present = vec![false; 1 << n];
    present[0] = true;
    present[SubsetMask::full(n).index()] = true;
    let mut frontier: Vec<SubsetMask> = vec![SubsetMask::EMPTY];
    let mut all = vec![SubsetMask::EMPTY];
    while let Some(set) = frontier.pop() {
        for &g in generators {
            let next = set.union(g);
            if !present[next.index()] {
                present[next.index()] = true;
                frontier.push(next);
                all.push(next);
            }
        }
    }
    all.push(SubsetMask::full(n));
    SetFamily::new(n, all)
}
