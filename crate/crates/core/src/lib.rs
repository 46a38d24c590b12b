//! Finite-model laboratory for ideal topological spaces carrying an
//! operation γ on their open sets.
//!
//! Subsets of a ground set of at most 16 points are bitmasks
//! ([`SubsetMask`]). A [`SpaceContext`] bundles a topology, an ideal and a
//! γ operation and answers operator and membership queries from
//! precomputed tables. On top of that sit the twenty set classes
//! ([`SetClass`]), a roster of checkable claims ([`theorems`]), a
//! counterexample hunter ([`hunt`]) and the implication atlas ([`atlas`]).

pub mod atlas;
pub mod classes;
pub mod cli;
pub mod context;
pub mod fixtures;
pub mod gamma;
pub mod hunt;
pub mod ideal;
pub mod mask;
pub mod report;
pub mod spacefile;
pub mod theorems;
pub mod topology;
pub mod universe;

pub use atlas::{build_atlas, export_atlas, parse_atlas, AtlasMatrix, CellStatus};
pub use classes::{classify, classify_all, is_member, ClassSet, ClassVector, SetClass};
pub use context::{ContextError, SpaceContext};
pub use fixtures::{check_fixtures, Fixture, FixtureCheck};
pub use gamma::{GammaError, GammaMode, GammaOperation, GammaPreset};
pub use hunt::{hunt, HuntBounds, Query, Witness};
pub use ideal::{Ideal, IdealSpace};
pub use mask::SubsetMask;
pub use spacefile::{
    export_space_spec, parse_named_space_spec, parse_space_spec, NamedSpace, SpaceSpecFile,
    SpecError,
};
pub use theorems::{
    builtin_theorems, non_implications, run_all, verify, TheoremSpec, Verdict, VerificationReport,
};
pub use topology::{enumerate_topologies, SetFamily, Topology};
pub use universe::{Bounds, Position, ScanError, SpaceProperty, Universe};
