//! Exhaustive universes of small spaces, visited in canonical order:
//! topology index, then ideal index, then γ index.

use crate::context::SpaceContext;
use crate::gamma::{
    enumerate_gammas, gamma_count, GammaError, GammaMode, GammaOperation, DEFAULT_GAMMA_BUDGET,
};
use crate::ideal::{enumerate_ideals, Ideal};
use crate::topology::{enumerate_topologies, Topology};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Largest ground set any exhaustive scan accepts.
pub const MAX_SCAN_POINTS: usize = 4;

/// Default cap on the number of contexts one scan may visit.
pub const DEFAULT_CONTEXT_BUDGET: u64 = 20_000_000;

/// Properties of a whole space. The first six serve as universe filters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpaceProperty {
    GammaRegular,
    RegularOperation,
    Submaximal,
    StarExtremallyDisconnected,
    /// `I = {∅}`
    IdealTrivial,
    /// `I = P(X)`
    IdealFull,
    /// `τ = τ_γ`
    TauEqualsTauGamma,
    /// `Cl*(Int(V)) ⊆ Int(Cl*(V))` for every `V`
    StarInteriorClosureCriterion,
}

impl SpaceProperty {
    pub const ALL: [SpaceProperty; 8] = [
        SpaceProperty::GammaRegular,
        SpaceProperty::RegularOperation,
        SpaceProperty::Submaximal,
        SpaceProperty::StarExtremallyDisconnected,
        SpaceProperty::IdealTrivial,
        SpaceProperty::IdealFull,
        SpaceProperty::TauEqualsTauGamma,
        SpaceProperty::StarInteriorClosureCriterion,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SpaceProperty::GammaRegular => "gamma-regular",
            SpaceProperty::RegularOperation => "regular-operation",
            SpaceProperty::Submaximal => "submaximal",
            SpaceProperty::StarExtremallyDisconnected => "star-extremally-disconnected",
            SpaceProperty::IdealTrivial => "ideal-trivial",
            SpaceProperty::IdealFull => "ideal-full",
            SpaceProperty::TauEqualsTauGamma => "tau-equals-tau-gamma",
            SpaceProperty::StarInteriorClosureCriterion => "star-interior-closure-criterion",
        }
    }

    pub fn holds(self, ctx: &SpaceContext) -> bool {
        match self {
            SpaceProperty::GammaRegular => ctx.is_gamma_regular_space(),
            SpaceProperty::RegularOperation => ctx.is_regular_operation(),
            SpaceProperty::Submaximal => ctx.is_submaximal(),
            SpaceProperty::StarExtremallyDisconnected => ctx.is_star_extremally_disconnected(),
            SpaceProperty::IdealTrivial => ctx.ideal().is_trivial(),
            SpaceProperty::IdealFull => ctx.ideal().is_full(),
            SpaceProperty::TauEqualsTauGamma => ctx.tau_equals_tau_gamma(),
            SpaceProperty::StarInteriorClosureCriterion => ctx.star_interior_closure_criterion(),
        }
    }
}

impl fmt::Display for SpaceProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SpaceProperty {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let wanted = s.trim().to_ascii_lowercase().replace('_', "-");
        SpaceProperty::ALL
            .into_iter()
            .find(|p| p.name() == wanted)
            .ok_or_else(|| format!("unknown space property `{s}`"))
    }
}

/// True when every property in `filter` holds.
pub fn satisfies(ctx: &SpaceContext, filter: &[SpaceProperty]) -> bool {
    filter.iter().all(|p| p.holds(ctx))
}

/// Size and γ range of one exhaustive scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub n: usize,
    pub gamma_mode: GammaMode,
    /// Cap on contexts visited.
    pub budget: u64,
    /// Cap on full-mode operations per topology.
    pub gamma_budget: u64,
}

impl Bounds {
    pub fn new(n: usize, gamma_mode: GammaMode) -> Self {
        Bounds {
            n,
            gamma_mode,
            budget: DEFAULT_CONTEXT_BUDGET,
            gamma_budget: DEFAULT_GAMMA_BUDGET,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ScanError {
    #[error("exhaustive scans support at most {max} points, got {requested}", max = MAX_SCAN_POINTS)]
    TooManyPoints { requested: usize },
    #[error("universe at n = {n} holds {contexts} contexts, over the budget of {budget}")]
    BudgetExceeded {
        n: usize,
        contexts: u64,
        budget: u64,
    },
    #[error("topology #{topology} at n = {n}: {source}")]
    Gamma {
        n: usize,
        topology: usize,
        source: GammaError,
    },
}

/// Where a context sits in the canonical scan order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Position {
    pub n: usize,
    pub topology: usize,
    pub ideal: usize,
    pub gamma: usize,
}

/// All `(topology, ideal, γ)` triples on `n` points.
#[derive(Clone, Debug)]
pub struct Universe {
    bounds: Bounds,
    topologies: Vec<Topology>,
    ideals: Vec<Ideal>,
    gamma_counts: Vec<u64>,
}

impl Universe {
    /// Enumerates the topologies and checks both budgets up front.
    pub fn new(bounds: Bounds) -> Result<Self, ScanError> {
        let n = bounds.n;
        if n > MAX_SCAN_POINTS {
            return Err(ScanError::TooManyPoints { requested: n });
        }
        let topologies = enumerate_topologies(n).expect("n within enumeration range");
        let ideals = enumerate_ideals(n);
        let mut gamma_counts = Vec::with_capacity(topologies.len());
        for (index, t) in topologies.iter().enumerate() {
            let count = gamma_count(t, bounds.gamma_mode);
            if bounds.gamma_mode == GammaMode::Full && count > bounds.gamma_budget {
                return Err(ScanError::Gamma {
                    n,
                    topology: index,
                    source: GammaError::BudgetExceeded {
                        count,
                        budget: bounds.gamma_budget,
                    },
                });
            }
            gamma_counts.push(count);
        }
        let contexts = gamma_counts.iter().fold(0u64, |acc, &g| {
            acc.saturating_add(g.saturating_mul(ideals.len() as u64))
        });
        if contexts > bounds.budget {
            return Err(ScanError::BudgetExceeded {
                n,
                contexts,
                budget: bounds.budget,
            });
        }
        Ok(Universe {
            bounds,
            topologies,
            ideals,
            gamma_counts,
        })
    }

    pub fn bounds(&self) -> Bounds {
        self.bounds
    }

    pub fn topologies(&self) -> &[Topology] {
        &self.topologies
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn total_contexts(&self) -> u64 {
        self.gamma_counts
            .iter()
            .map(|g| g * self.ideals.len() as u64)
            .sum()
    }

    pub fn gammas(&self, topology: usize) -> Vec<GammaOperation> {
        enumerate_gammas(
            &self.topologies[topology],
            self.bounds.gamma_mode,
            self.bounds.gamma_budget,
        )
        .expect("budget checked at construction")
    }

    /// Visits every context of one topology in canonical order.
    pub fn for_each_context(&self, topology: usize, mut visit: impl FnMut(Position, SpaceContext)) {
        let gammas = self.gammas(topology);
        let t = &self.topologies[topology];
        for (ideal_index, ideal) in self.ideals.iter().enumerate() {
            for (gamma_index, gamma) in gammas.iter().enumerate() {
                let ctx = SpaceContext::new(t.clone(), *ideal, gamma.clone())
                    .expect("universe parts share a ground set");
                let position = Position {
                    n: self.bounds.n,
                    topology,
                    ideal: ideal_index,
                    gamma: gamma_index,
                };
                visit(position, ctx);
            }
        }
    }

    /// Runs `work` once per topology in parallel; results come back in
    /// topology order.
    pub fn map_topologies<R, F>(&self, work: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        (0..self.topologies.len())
            .into_par_iter()
            .map(work)
            .collect()
    }

    /// Rebuilds the context at `position`.
    pub fn context_at(&self, position: Position) -> SpaceContext {
        let gammas = self.gammas(position.topology);
        SpaceContext::new(
            self.topologies[position.topology].clone(),
            self.ideals[position.ideal],
            gammas[position.gamma].clone(),
        )
        .expect("universe parts share a ground set")
    }
}
