//! Operations γ on a topology and the γ-open family τ_γ they generate.

use crate::mask::SubsetMask;
use crate::topology::{SetFamily, Topology};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Default cap on how many operations full enumeration may produce for one
/// topology.
pub const DEFAULT_GAMMA_BUDGET: u64 = 1_000_000;

/// An expansive map from open sets to subsets, stored as a table parallel to
/// the sorted open sets of its topology.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GammaOperation {
    images: Vec<SubsetMask>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GammaError {
    #[error("gamma table has {got} entries but the topology has {expected} open sets")]
    WrongArity { expected: usize, got: usize },
    #[error("gamma not expansive: gamma({open}) = {image} does not contain {open}")]
    NotExpansive { open: SubsetMask, image: SubsetMask },
    #[error("gamma image {image} of {open} lies outside the ground set")]
    OutOfRange { open: SubsetMask, image: SubsetMask },
    #[error("{0} is not an open set")]
    NotOpen(SubsetMask),
    #[error("full gamma enumeration needs {count} operations, over the budget of {budget}")]
    BudgetExceeded { count: u64, budget: u64 },
    #[error("unknown gamma preset `{0}`")]
    UnknownPreset(String),
}

/// Named operations available on every topology.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GammaPreset {
    /// `γ(V) = V`
    Identity,
    /// `γ(V) = X`
    ConstantX,
    /// `γ(V) = Cl(V)`
    Closure,
    /// `γ(V) = Int(Cl(V))`
    IntClosure,
}

impl GammaPreset {
    pub const ALL: [GammaPreset; 4] = [
        GammaPreset::Identity,
        GammaPreset::ConstantX,
        GammaPreset::Closure,
        GammaPreset::IntClosure,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GammaPreset::Identity => "identity",
            GammaPreset::ConstantX => "constant_x",
            GammaPreset::Closure => "closure",
            GammaPreset::IntClosure => "int_closure",
        }
    }

    fn image(self, topology: &Topology, open: SubsetMask) -> SubsetMask {
        match self {
            GammaPreset::Identity => open,
            GammaPreset::ConstantX => topology.whole(),
            GammaPreset::Closure => topology.closure(open),
            GammaPreset::IntClosure => topology.interior(topology.closure(open)),
        }
    }
}

impl fmt::Display for GammaPreset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GammaPreset {
    type Err = GammaError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GammaPreset::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| GammaError::UnknownPreset(s.to_string()))
    }
}

/// How γ ranges over a topology during enumeration.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GammaMode {
    /// Every expansive map.
    #[default]
    Full,
    /// The four [`GammaPreset`]s.
    Presets,
}

impl fmt::Display for GammaMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GammaMode::Full => "full",
            GammaMode::Presets => "presets",
        })
    }
}

impl FromStr for GammaMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "full" => Ok(GammaMode::Full),
            "presets" => Ok(GammaMode::Presets),
            other => Err(format!(
                "unknown gamma mode `{other}` (expected full or presets)"
            )),
        }
    }
}

impl GammaOperation {
    /// Builds an operation from images listed in the topology's open-set order.
    pub fn new(topology: &Topology, images: Vec<SubsetMask>) -> Result<Self, GammaError> {
        let opens = topology.opens();
        if images.len() != opens.len() {
            return Err(GammaError::WrongArity {
                expected: opens.len(),
                got: images.len(),
            });
        }
        for (&open, &image) in opens.iter().zip(&images) {
            if !image.fits(topology.width()) {
                return Err(GammaError::OutOfRange { open, image });
            }
            if !open.is_subset_of(image) {
                return Err(GammaError::NotExpansive { open, image });
            }
        }
        Ok(GammaOperation { images })
    }

    /// Builds an operation from `(open, image)` pairs; opens left out map to
    /// themselves.
    pub fn from_pairs<I>(topology: &Topology, pairs: I) -> Result<Self, GammaError>
    where
        I: IntoIterator<Item = (SubsetMask, SubsetMask)>,
    {
        let mut images = topology.opens().to_vec();
        for (open, image) in pairs {
            let slot = topology
                .opens()
                .binary_search(&open)
                .map_err(|_| GammaError::NotOpen(open))?;
            images[slot] = image;
        }
        GammaOperation::new(topology, images)
    }

    pub fn preset(topology: &Topology, preset: GammaPreset) -> Self {
        let images = topology
            .opens()
            .iter()
            .map(|&v| preset.image(topology, v))
            .collect();
        GammaOperation { images }
    }

    pub fn identity(topology: &Topology) -> Self {
        GammaOperation::preset(topology, GammaPreset::Identity)
    }

    pub fn constant_whole(topology: &Topology) -> Self {
        GammaOperation::preset(topology, GammaPreset::ConstantX)
    }

    pub fn images(&self) -> &[SubsetMask] {
        &self.images
    }

    /// `γ(open)`. Panics if `open` is not an open set of `topology`.
    pub fn image(&self, topology: &Topology, open: SubsetMask) -> SubsetMask {
        let slot = topology
            .opens()
            .binary_search(&open)
            .unwrap_or_else(|_| panic!("{open} is not open"));
        self.images[slot]
    }

    /// `(open, γ(open))` pairs in open-set order.
    pub fn pairs<'a>(
        &'a self,
        topology: &'a Topology,
    ) -> impl Iterator<Item = (SubsetMask, SubsetMask)> + 'a {
        topology
            .opens()
            .iter()
            .copied()
            .zip(self.images.iter().copied())
    }
}

/// `∏_{V ∈ τ} 2^(n - |V|)`, saturating.
pub fn count_gammas(topology: &Topology) -> u64 {
    let n = topology.width();
    topology.opens().iter().fold(1u64, |acc, v| {
        let free = (n - v.len()) as u32;
        acc.saturating_mul(1u64.checked_shl(free).unwrap_or(u64::MAX))
    })
}

/// Number of operations [`enumerate_gammas`] yields in `mode`.
pub fn gamma_count(topology: &Topology, mode: GammaMode) -> u64 {
    match mode {
        GammaMode::Full => count_gammas(topology),
        GammaMode::Presets => GammaPreset::ALL.len() as u64,
    }
}

/// Operations on `topology` in canonical order.
///
/// Full mode walks all expansive tables odometer-style, the last open set
/// varying fastest and each image running through supersets in increasing
/// mask order.
pub fn enumerate_gammas(
    topology: &Topology,
    mode: GammaMode,
    budget: u64,
) -> Result<Vec<GammaOperation>, GammaError> {
    match mode {
        GammaMode::Presets => Ok(GammaPreset::ALL
            .into_iter()
            .map(|p| GammaOperation::preset(topology, p))
            .collect()),
        GammaMode::Full => {
            let count = count_gammas(topology);
            if count > budget {
                return Err(GammaError::BudgetExceeded { count, budget });
            }
            let n = topology.width();
            let choices: Vec<Vec<SubsetMask>> = topology
                .opens()
                .iter()
                .map(|v| v.supersets(n).collect())
                .collect();
            let mut digits = vec![0usize; choices.len()];
            let mut out = Vec::with_capacity(count as usize);
            loop {
                out.push(GammaOperation {
                    images: digits.iter().zip(&choices).map(|(&d, c)| c[d]).collect(),
                });
                let mut pos = digits.len();
                loop {
                    if pos == 0 {
                        return Ok(out);
                    }
                    pos -= 1;
                    digits[pos] += 1;
                    if digits[pos] < choices[pos].len() {
                        break;
                    }
                    digits[pos] = 0;
                }
            }
        }
    }
}

/// A topology with an operation, evaluated straight from the definitions.
#[derive(Clone, Copy, Debug)]
pub struct GammaSpace<'a> {
    pub topology: &'a Topology,
    pub gamma: &'a GammaOperation,
}

impl<'a> GammaSpace<'a> {
    pub fn new(topology: &'a Topology, gamma: &'a GammaOperation) -> Self {
        assert_eq!(topology.opens().len(), gamma.images().len());
        GammaSpace { topology, gamma }
    }

    /// Open neighborhoods of `point` with their images.
    fn neighborhoods(&self, point: usize) -> impl Iterator<Item = (SubsetMask, SubsetMask)> + 'a {
        self.gamma
            .pairs(self.topology)
            .filter(move |(u, _)| u.contains(point))
    }

    /// Each `x ∈ A` has an open `U ∋ x` with `γ(U) ⊆ A`.
    pub fn is_gamma_open(&self, set: SubsetMask) -> bool {
        set.points().all(|x| {
            self.neighborhoods(x)
                .any(|(_, image)| image.is_subset_of(set))
        })
    }

    pub fn tau_gamma(&self) -> SetFamily {
        SetFamily::new(
            self.topology.width(),
            SubsetMask::all(self.topology.width()).filter(|&a| self.is_gamma_open(a)),
        )
    }

    /// Union of the γ-open sets contained in `set`.
    pub fn tau_gamma_int(&self, set: SubsetMask) -> SubsetMask {
        self.tau_gamma()
            .members()
            .iter()
            .filter(|g| g.is_subset_of(set))
            .fold(SubsetMask::EMPTY, |acc, &g| acc.union(g))
    }

    /// Intersection of the γ-closed sets containing `set`.
    pub fn tau_gamma_cl(&self, set: SubsetMask) -> SubsetMask {
        let n = self.topology.width();
        self.tau_gamma()
            .members()
            .iter()
            .map(|g| g.complement(n))
            .filter(|f| set.is_subset_of(*f))
            .fold(SubsetMask::full(n), |acc, f| acc.intersection(f))
    }

    /// Every open neighborhood `V` of every point `x` contains `γ(U)` for some
    /// open neighborhood `U` of `x`.
    pub fn is_gamma_regular(&self) -> bool {
        (0..self.topology.width()).all(|x| {
            self.neighborhoods(x).all(|(v, _)| {
                self.neighborhoods(x)
                    .any(|(_, image)| image.is_subset_of(v))
            })
        })
    }

    /// For every point `x` and open `U, V ∋ x` there is an open `W ∋ x` with
    /// `γ(W) ⊆ γ(U) ∩ γ(V)`.
    pub fn is_regular_operation(&self) -> bool {
        (0..self.topology.width()).all(|x| {
            self.neighborhoods(x).all(|(_, gu)| {
                self.neighborhoods(x).all(|(_, gv)| {
                    let target = gu.intersection(gv);
                    self.neighborhoods(x).any(|(_, gw)| gw.is_subset_of(target))
                })
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(points: &[usize]) -> SubsetMask {
        SubsetMask::from_points(points.iter().copied())
    }

    fn topo(n: usize, opens: &[&[usize]]) -> Topology {
        Topology::from_opens(
            n,
            opens
                .iter()
                .map(|p| m(p))
                .chain([SubsetMask::EMPTY, SubsetMask::full(n)]),
        )
        .unwrap()
    }

    #[test]
    fn gamma_open_examples() {
        let t = topo(3, &[&[0, 2]]);
        let g = GammaOperation::constant_whole(&t);
        let s = GammaSpace::new(&t, &g);
        assert!(!s.is_gamma_open(m(&[0, 1])));
        assert!(s.is_gamma_open(SubsetMask::full(3)));
        assert!(s.is_gamma_open(SubsetMask::EMPTY));
        let id = GammaOperation::identity(&t);
        let s = GammaSpace::new(&t, &id);
        assert!(t.opens().iter().all(|&u| s.is_gamma_open(u)));
    }

    #[test]
    fn tau_gamma_examples() {
        let t = topo(3, &[&[0, 2]]);
        let g = GammaOperation::constant_whole(&t);
        let tg = GammaSpace::new(&t, &g).tau_gamma();
        assert_eq!(tg.members(), &[SubsetMask::EMPTY, SubsetMask::full(3)]);
        let id = GammaOperation::identity(&t);
        assert_eq!(&GammaSpace::new(&t, &id).tau_gamma(), t.family());
        let d = Topology::discrete(4);
        let g = GammaOperation::constant_whole(&d);
        assert_eq!(
            GammaSpace::new(&d, &g).tau_gamma().members(),
            &[SubsetMask::EMPTY, SubsetMask::full(4)]
        );
    }

    #[test]
    fn tau_gamma_interior_closure_examples() {
        let t = topo(3, &[&[0, 2]]);
        let g = GammaOperation::constant_whole(&t);
        assert_eq!(
            GammaSpace::new(&t, &g).tau_gamma_int(SubsetMask::full(3)),
            SubsetMask::full(3)
        );
        let t = topo(3, &[&[1, 2]]);
        let g = GammaOperation::constant_whole(&t);
        assert_eq!(
            GammaSpace::new(&t, &g).tau_gamma_int(m(&[2])),
            SubsetMask::EMPTY
        );
        let t = topo(3, &[&[1], &[0, 1]]);
        let g = GammaOperation::constant_whole(&t);
        assert_eq!(
            GammaSpace::new(&t, &g).tau_gamma_cl(m(&[1, 2])),
            SubsetMask::full(3)
        );
    }

    #[test]
    fn gamma_regularity_examples() {
        let t = topo(3, &[&[0, 2]]);
        assert!(GammaSpace::new(&t, &GammaOperation::identity(&t)).is_gamma_regular());
        assert!(!GammaSpace::new(&t, &GammaOperation::constant_whole(&t)).is_gamma_regular());
        let ind = Topology::indiscrete(3);
        for g in enumerate_gammas(&ind, GammaMode::Full, DEFAULT_GAMMA_BUDGET).unwrap() {
            assert!(GammaSpace::new(&ind, &g).is_gamma_regular());
        }
    }

    #[test]
    fn regular_operation_examples() {
        let t = topo(3, &[&[0], &[1], &[0, 1]]);
        assert!(GammaSpace::new(&t, &GammaOperation::identity(&t)).is_regular_operation());
        assert!(GammaSpace::new(&t, &GammaOperation::constant_whole(&t)).is_regular_operation());
        // γ({a}) = {a,c}, γ({b}) = {b,c}, identity elsewhere. Neighborhoods of a
        // are {a}, {a,b}, X with images {a,c}, {a,b}, X: γ({a}) ∩ γ({a,b}) = {a}
        // contains no image, so the operation is not regular.
        let g =
            GammaOperation::from_pairs(&t, [(m(&[0]), m(&[0, 2])), (m(&[1]), m(&[1, 2]))]).unwrap();
        assert!(!GammaSpace::new(&t, &g).is_regular_operation());
    }

    #[test]
    fn enumeration_counts() {
        let t = topo(3, &[&[0, 2]]);
        let all = enumerate_gammas(&t, GammaMode::Full, DEFAULT_GAMMA_BUDGET).unwrap();
        assert_eq!(all.len(), 16);
        assert_eq!(count_gammas(&t), 16);
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 16);
        assert_eq!(
            enumerate_gammas(&t, GammaMode::Presets, 0).unwrap().len(),
            4
        );
        let ind = Topology::indiscrete(4);
        assert_eq!(
            enumerate_gammas(&ind, GammaMode::Full, DEFAULT_GAMMA_BUDGET)
                .unwrap()
                .len(),
            16
        );
        let d = Topology::discrete(4);
        assert!(matches!(
            enumerate_gammas(&d, GammaMode::Full, DEFAULT_GAMMA_BUDGET),
            Err(GammaError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn construction_rejects_shrinking_images() {
        let t = topo(3, &[&[0, 2]]);
        assert_eq!(
            GammaOperation::from_pairs(&t, [(m(&[0, 2]), m(&[0]))]),
            Err(GammaError::NotExpansive {
                open: m(&[0, 2]),
                image: m(&[0])
            })
        );
        assert_eq!(
            GammaOperation::from_pairs(&t, [(m(&[0]), m(&[0]))]),
            Err(GammaError::NotOpen(m(&[0])))
        );
    }
}
