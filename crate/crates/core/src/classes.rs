//! The catalog of set classes and per-subset membership vectors.
//!
//! Each class is decided from its own defining condition. No class is
//! derived from another, so implications observed between classes are
//! genuine evidence rather than consequences of shared code.

use crate::context::SpaceContext;
use crate::mask::SubsetMask;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SetClass {
    /// `A ∈ τ`
    Open,
    /// `X \ A ∈ τ`
    Closed,
    /// `A = Int(Cl(A))`
    RegularOpen,
    /// each point of `A` lies in a regular open subset of `A`
    DeltaOpen,
    /// each point of `A` has an open `U ∋ x` with `γ(U) ⊆ A`
    GammaOpen,
    /// `A ⊆ Int(Cl(A))`
    Preopen,
    /// `A ⊆ τ_γ-Int(Cl(A))`
    PreGammaOpen,
    /// `A ⊆ τ_γ-Int(τ_γ-Cl(A))`
    GammaPreopen,
    /// `A ⊆ Int(τ_γ-Cl(A))`
    GammaPOpen,
    /// `A ⊆ Int(A*)`
    IOpen,
    /// `A = Int(Cl*(A))`
    RIOpen,
    /// `A ⊆ Int(Cl*(A))`
    PreIOpen,
    /// `A ⊆ Cl*(Int(A))`
    SemiIOpen,
    /// `A ⊆ Int(Cl*(Int(A)))`
    AlphaIOpen,
    /// `A ⊆ Int(Cl*(A)) ∪ Cl*(Int(A))`
    BIOpen,
    /// `A = U ∩ K`, `U` open, `K` `*`-closed
    WeaklyILocalClosed,
    /// `A = U ∩ K`, `U` open, `K` closed
    LocallyClosed,
    /// the complement is fixed by the δ_I-closure
    DeltaIOpen,
    /// `A ⊆ τ_γ-Int(Cl*(A))`
    PreGammaIOpen,
    /// the complement is pre-γ-I-open
    PreGammaIClosed,
}

impl SetClass {
    pub const ALL: [SetClass; 20] = [
        SetClass::Open,
        SetClass::Closed,
        SetClass::RegularOpen,
        SetClass::DeltaOpen,
        SetClass::GammaOpen,
        SetClass::Preopen,
        SetClass::PreGammaOpen,
        SetClass::GammaPreopen,
        SetClass::GammaPOpen,
        SetClass::IOpen,
        SetClass::RIOpen,
        SetClass::PreIOpen,
        SetClass::SemiIOpen,
        SetClass::AlphaIOpen,
        SetClass::BIOpen,
        SetClass::WeaklyILocalClosed,
        SetClass::LocallyClosed,
        SetClass::DeltaIOpen,
        SetClass::PreGammaIOpen,
        SetClass::PreGammaIClosed,
    ];

    /// Position in [`SetClass::ALL`].
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn tag(self) -> &'static str {
        match self {
            SetClass::Open => "OPEN",
            SetClass::Closed => "CLOSED",
            SetClass::RegularOpen => "REGULAR_OPEN",
            SetClass::DeltaOpen => "DELTA_OPEN",
            SetClass::GammaOpen => "GAMMA_OPEN",
            SetClass::Preopen => "PREOPEN",
            SetClass::PreGammaOpen => "PRE_GAMMA_OPEN",
            SetClass::GammaPreopen => "GAMMA_PREOPEN",
            SetClass::GammaPOpen => "GAMMA_P_OPEN",
            SetClass::IOpen => "I_OPEN",
            SetClass::RIOpen => "R_I_OPEN",
            SetClass::PreIOpen => "PRE_I_OPEN",
            SetClass::SemiIOpen => "SEMI_I_OPEN",
            SetClass::AlphaIOpen => "ALPHA_I_OPEN",
            SetClass::BIOpen => "B_I_OPEN",
            SetClass::WeaklyILocalClosed => "WEAKLY_I_LOCAL_CLOSED",
            SetClass::LocallyClosed => "LOCALLY_CLOSED",
            SetClass::DeltaIOpen => "DELTA_I_OPEN",
            SetClass::PreGammaIOpen => "PRE_GAMMA_I_OPEN",
            SetClass::PreGammaIClosed => "PRE_GAMMA_I_CLOSED",
        }
    }

    /// Human-readable name, e.g. `pre-γ-I-open`.
    pub fn label(self) -> &'static str {
        match self {
            SetClass::Open => "open",
            SetClass::Closed => "closed",
            SetClass::RegularOpen => "regular open",
            SetClass::DeltaOpen => "δ-open",
            SetClass::GammaOpen => "γ-open",
            SetClass::Preopen => "preopen",
            SetClass::PreGammaOpen => "pre-γ-open",
            SetClass::GammaPreopen => "γ-preopen",
            SetClass::GammaPOpen => "γ-p-open",
            SetClass::IOpen => "I-open",
            SetClass::RIOpen => "R-I-open",
            SetClass::PreIOpen => "pre-I-open",
            SetClass::SemiIOpen => "semi-I-open",
            SetClass::AlphaIOpen => "α-I-open",
            SetClass::BIOpen => "b-I-open",
            SetClass::WeaklyILocalClosed => "weakly I-local closed",
            SetClass::LocallyClosed => "locally closed",
            SetClass::DeltaIOpen => "δ_I-open",
            SetClass::PreGammaIOpen => "pre-γ-I-open",
            SetClass::PreGammaIClosed => "pre-γ-I-closed",
        }
    }
}

impl fmt::Display for SetClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for SetClass {
    type Err = String;

    /// Accepts tags in any case, with `-` or `_` as separators.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let wanted = s.trim().to_ascii_uppercase().replace('-', "_");
        SetClass::ALL
            .into_iter()
            .find(|c| c.tag() == wanted)
            .ok_or_else(|| format!("unknown set class `{s}`"))
    }
}

/// Evaluates the defining condition of `class` at `set`.
pub fn is_member(ctx: &SpaceContext, class: SetClass, set: SubsetMask) -> bool {
    let n = ctx.n();
    match class {
        SetClass::Open => ctx.is_open(set),
        SetClass::Closed => ctx.is_open(set.complement(n)),
        SetClass::RegularOpen => set == ctx.interior(ctx.closure(set)),
        SetClass::DeltaOpen => ctx.is_delta_open(set),
        SetClass::GammaOpen => ctx.is_gamma_open(set),
        SetClass::Preopen => set.is_subset_of(ctx.interior(ctx.closure(set))),
        SetClass::PreGammaOpen => set.is_subset_of(ctx.tau_gamma_int(ctx.closure(set))),
        SetClass::GammaPreopen => set.is_subset_of(ctx.tau_gamma_int(ctx.tau_gamma_cl(set))),
        SetClass::GammaPOpen => set.is_subset_of(ctx.interior(ctx.tau_gamma_cl(set))),
        SetClass::IOpen => set.is_subset_of(ctx.interior(ctx.local_function(set))),
        SetClass::RIOpen => set == ctx.interior(ctx.star_closure(set)),
        SetClass::PreIOpen => set.is_subset_of(ctx.interior(ctx.star_closure(set))),
        SetClass::SemiIOpen => set.is_subset_of(ctx.star_closure(ctx.interior(set))),
        SetClass::AlphaIOpen => set.is_subset_of(ctx.interior(ctx.star_closure(ctx.interior(set)))),
        SetClass::BIOpen => set.is_subset_of(
            ctx.interior(ctx.star_closure(set))
                .union(ctx.star_closure(ctx.interior(set))),
        ),
        SetClass::WeaklyILocalClosed => ctx.is_weakly_i_local_closed_by_pairs(set),
        SetClass::LocallyClosed => ctx.is_locally_closed_by_pairs(set),
        SetClass::DeltaIOpen => {
            let complement = set.complement(n);
            ctx.delta_i_closure(complement) == complement
        }
        SetClass::PreGammaIOpen => set.is_subset_of(ctx.tau_gamma_int(ctx.star_closure(set))),
        SetClass::PreGammaIClosed => {
            let complement = set.complement(n);
            complement.is_subset_of(ctx.tau_gamma_int(ctx.star_closure(complement)))
        }
    }
}

/// A set of [`SetClass`]es packed into a bit field.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct ClassSet(u32);

impl ClassSet {
    pub const EMPTY: ClassSet = ClassSet(0);

    pub fn of<I: IntoIterator<Item = SetClass>>(classes: I) -> Self {
        classes
            .into_iter()
            .fold(ClassSet::EMPTY, |acc, c| acc.with(c))
    }

    pub fn with(self, class: SetClass) -> Self {
        ClassSet(self.0 | 1 << class.index())
    }

    pub fn contains(self, class: SetClass) -> bool {
        self.0 & (1 << class.index()) != 0
    }

    pub fn contains_all(self, other: ClassSet) -> bool {
        self.0 & other.0 == other.0
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn iter(self) -> impl Iterator<Item = SetClass> {
        SetClass::ALL.into_iter().filter(move |&c| self.contains(c))
    }
}

/// Membership of one subset in every catalogued class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassVector {
    pub subset: SubsetMask,
    pub flags: ClassSet,
}

impl ClassVector {
    pub fn is(&self, class: SetClass) -> bool {
        self.flags.contains(class)
    }
}

pub fn classify(ctx: &SpaceContext, set: SubsetMask) -> ClassVector {
    let flags = SetClass::ALL
        .into_iter()
        .filter(|&c| is_member(ctx, c, set))
        .fold(ClassSet::EMPTY, ClassSet::with);
    ClassVector { subset: set, flags }
}

/// Class vectors of all `2^n` subsets in increasing mask order.
pub fn classify_all(ctx: &SpaceContext) -> Vec<ClassVector> {
    SubsetMask::all(ctx.n()).map(|a| classify(ctx, a)).collect()
}
