//! [`SpaceContext`]: a topology, an ideal and an operation γ bundled together,
//! with every operator memoized at construction.
//!
//! The tables are filled through minimal open neighborhoods `U_x` rather than
//! by scanning all open sets; the scanning definitions in [`crate::topology`],
//! [`crate::ideal`] and [`crate::gamma`] stay available as the reference route.

use crate::gamma::{GammaOperation, GammaSpace};
use crate::ideal::{Ideal, IdealSpace, StarStatus};
use crate::mask::SubsetMask;
use crate::topology::{SetFamily, Topology};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ContextError {
    #[error("ideal is on {ideal} points but the topology on {topology}")]
    WidthMismatch { topology: usize, ideal: usize },
    #[error("gamma table has {got} entries but the topology has {expected} open sets")]
    GammaArity { expected: usize, got: usize },
}

/// Properties of a whole space, usable as hypotheses when filtering universes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct SpaceFlags {
    gamma_regular: bool,
    regular_operation: bool,
    submaximal: bool,
    star_extremally_disconnected: bool,
}

/// An ideal topological space with an operation γ on its topology.
#[derive(Clone, Debug)]
pub struct SpaceContext {
    topology: Topology,
    ideal: Ideal,
    gamma: GammaOperation,
    neighborhoods: Vec<SubsetMask>,
    interior: Vec<SubsetMask>,
    closure: Vec<SubsetMask>,
    local: Vec<SubsetMask>,
    gamma_open: Vec<bool>,
    tau_gamma_int: Vec<SubsetMask>,
    star_closed: Vec<SubsetMask>,
    flags: SpaceFlags,
}

impl PartialEq for SpaceContext {
    fn eq(&self, other: &Self) -> bool {
        self.topology == other.topology && self.ideal == other.ideal && self.gamma == other.gamma
    }
}

impl Eq for SpaceContext {}

impl SpaceContext {
    pub fn new(
        topology: Topology,
        ideal: Ideal,
        gamma: GammaOperation,
    ) -> Result<Self, ContextError> {
        let n = topology.width();
        if ideal.width() != n {
            return Err(ContextError::WidthMismatch {
                topology: n,
                ideal: ideal.width(),
            });
        }
        if gamma.images().len() != topology.opens().len() {
            return Err(ContextError::GammaArity {
                expected: topology.opens().len(),
                got: gamma.images().len(),
            });
        }

        let whole = SubsetMask::full(n);
        let neighborhoods: Vec<SubsetMask> =
            (0..n).map(|x| topology.minimal_neighborhood(x)).collect();
        let collect = |keep: &dyn Fn(SubsetMask, SubsetMask) -> bool| -> Vec<SubsetMask> {
            SubsetMask::all(n)
                .map(|a| {
                    (0..n)
                        .filter(|&x| keep(neighborhoods[x], a))
                        .fold(SubsetMask::EMPTY, |acc, x| {
                            acc.union(SubsetMask::singleton(x))
                        })
                })
                .collect()
        };
        let interior = collect(&|u, a| u.is_subset_of(a));
        let closure = collect(&|u, a| u.meets(a));
        let maximal = ideal.maximal();
        let local = collect(&|u, a| !u.intersection(a).is_subset_of(maximal));

        // Points with an open neighborhood whose γ-image lies inside each set.
        let reach: Vec<SubsetMask> = SubsetMask::all(n)
            .map(|a| {
                gamma
                    .pairs(&topology)
                    .filter(|(_, image)| image.is_subset_of(a))
                    .fold(SubsetMask::EMPTY, |acc, (u, _)| acc.union(u))
            })
            .collect();
        let gamma_open: Vec<bool> = SubsetMask::all(n)
            .map(|a| a.is_subset_of(reach[a.index()]))
            .collect();
        // Largest γ-open subset: greatest fixed point of B ↦ A ∩ reach(B).
        let tau_gamma_int: Vec<SubsetMask> = SubsetMask::all(n)
            .map(|a| {
                let mut b = a;
                loop {
                    let next = b.intersection(reach[b.index()]);
                    if next == b {
                        break b;
                    }
                    b = next;
                }
            })
            .collect();
        let star_closed: Vec<SubsetMask> = SubsetMask::all(n)
            .filter(|k| local[k.index()].is_subset_of(*k))
            .collect();

        let mut ctx = SpaceContext {
            topology,
            ideal,
            gamma,
            neighborhoods,
            interior,
            closure,
            local,
            gamma_open,
            tau_gamma_int,
            star_closed,
            flags: SpaceFlags {
                gamma_regular: false,
                regular_operation: false,
                submaximal: false,
                star_extremally_disconnected: false,
            },
        };
        let gamma_space = GammaSpace::new(&ctx.topology, &ctx.gamma);
        ctx.flags = SpaceFlags {
            gamma_regular: gamma_space.is_gamma_regular(),
            regular_operation: gamma_space.is_regular_operation(),
            submaximal: SubsetMask::all(n)
                .filter(|&a| ctx.closure(a) == whole)
                .all(|a| ctx.is_open(a)),
            star_extremally_disconnected: ctx
                .topology
                .opens()
                .iter()
                .all(|&v| ctx.topology.is_open(ctx.star_closure(v))),
        };
        Ok(ctx)
    }

    pub fn n(&self) -> usize {
        self.topology.width()
    }

    pub fn whole(&self) -> SubsetMask {
        SubsetMask::full(self.n())
    }

    pub fn topology(&self) -> &Topology {
        &self.topology
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn gamma(&self) -> &GammaOperation {
        &self.gamma
    }

    /// The scanning evaluator for the topology and ideal.
    pub fn ideal_space(&self) -> IdealSpace<'_> {
        IdealSpace::new(&self.topology, &self.ideal)
    }

    /// The scanning evaluator for the topology and γ.
    pub fn gamma_space(&self) -> GammaSpace<'_> {
        GammaSpace::new(&self.topology, &self.gamma)
    }

    pub fn minimal_neighborhood(&self, point: usize) -> SubsetMask {
        self.neighborhoods[point]
    }

    pub fn is_open(&self, set: SubsetMask) -> bool {
        self.topology.is_open(set)
    }

    pub fn is_closed(&self, set: SubsetMask) -> bool {
        self.topology.is_closed(set)
    }

    pub fn interior(&self, set: SubsetMask) -> SubsetMask {
        self.interior[set.index()]
    }

    pub fn closure(&self, set: SubsetMask) -> SubsetMask {
        self.closure[set.index()]
    }

    pub fn is_regular_open(&self, set: SubsetMask) -> bool {
        self.interior(self.closure(set)) == set
    }

    pub fn is_delta_open(&self, set: SubsetMask) -> bool {
        set.points().all(|x| {
            self.topology
                .opens()
                .iter()
                .any(|&g| g.contains(x) && g.is_subset_of(set) && self.is_regular_open(g))
        })
    }

    /// `A* = { x : U_x ∩ A ∉ I }`.
    pub fn local_function(&self, set: SubsetMask) -> SubsetMask {
        self.local[set.index()]
    }

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

    /// All `*`-closed sets, increasing.
    pub fn star_closed_sets(&self) -> &[SubsetMask] {
        &self.star_closed
    }

    pub fn star_status(&self, set: SubsetMask) -> StarStatus {
        StarStatus::of(set, self.local_function(set))
    }

    /// `δCl_I(A)`; the condition only needs checking at `U_x`, the smallest
    /// open neighborhood, since `Int(Cl*(U))` grows with `U`.
    pub fn delta_i_closure(&self, set: SubsetMask) -> SubsetMask {
        (0..self.n())
            .filter(|&x| {
                self.interior(self.star_closure(self.neighborhoods[x]))
                    .meets(set)
            })
            .fold(SubsetMask::EMPTY, |acc, x| {
                acc.union(SubsetMask::singleton(x))
            })
    }

    pub fn is_delta_i_open(&self, set: SubsetMask) -> bool {
        let complement = set.complement(self.n());
        self.delta_i_closure(complement) == complement
    }

    /// `A = U ∩ Cl*(A)` for some open `U`.
    pub fn is_weakly_i_local_closed(&self, set: SubsetMask) -> bool {
        let cl = self.star_closure(set);
        self.topology
            .opens()
            .iter()
            .any(|&u| u.intersection(cl) == set)
    }

    /// `A = U ∩ K` for an open `U` and a `*`-closed `K`.
    pub fn is_weakly_i_local_closed_by_pairs(&self, set: SubsetMask) -> bool {
        self.topology
            .opens()
            .iter()
            .any(|&u| self.star_closed.iter().any(|&k| u.intersection(k) == set))
    }

    /// `A = U ∩ Cl(A)` for some open `U`.
    pub fn is_locally_closed(&self, set: SubsetMask) -> bool {
        let cl = self.closure(set);
        self.topology
            .opens()
            .iter()
            .any(|&u| u.intersection(cl) == set)
    }

    pub fn is_locally_closed_by_pairs(&self, set: SubsetMask) -> bool {
        self.topology.is_locally_closed_by_pairs(set)
    }

    pub fn is_gamma_open(&self, set: SubsetMask) -> bool {
        self.gamma_open[set.index()]
    }

    pub fn tau_gamma(&self) -> SetFamily {
        SetFamily::new(
            self.n(),
            SubsetMask::all(self.n()).filter(|&a| self.is_gamma_open(a)),
        )
    }

    pub fn tau_gamma_int(&self, set: SubsetMask) -> SubsetMask {
        self.tau_gamma_int[set.index()]
    }

    pub fn tau_gamma_cl(&self, set: SubsetMask) -> SubsetMask {
        let n = self.n();
        self.tau_gamma_int(set.complement(n)).complement(n)
    }

    pub fn is_gamma_regular_space(&self) -> bool {
        self.flags.gamma_regular
    }

    /// `τ = τ_γ`.
    pub fn tau_equals_tau_gamma(&self) -> bool {
        SubsetMask::all(self.n()).all(|a| self.is_open(a) == self.is_gamma_open(a))
    }

    pub fn is_regular_operation(&self) -> bool {
        self.flags.regular_operation
    }

    pub fn is_submaximal(&self) -> bool {
        self.flags.submaximal
    }

    /// `Cl*(V)` is open for every open `V`.
    pub fn is_star_extremally_disconnected(&self) -> bool {
        debug_assert_eq!(
            self.flags.star_extremally_disconnected,
            self.star_interior_closure_criterion(),
            "*-extremal disconnectedness disagrees with its interior-closure criterion"
        );
        self.flags.star_extremally_disconnected
    }

    /// `Cl*(Int(V)) ⊆ Int(Cl*(V))` for every subset `V`.
    pub fn star_interior_closure_criterion(&self) -> bool {
        SubsetMask::all(self.n()).all(|v| {
            self.star_closure(self.interior(v))
                .is_subset_of(self.interior(self.star_closure(v)))
        })
    }
}
