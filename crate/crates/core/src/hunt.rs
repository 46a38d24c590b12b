//! Counterexample search for user-posed implications between set classes.

use crate::classes::{classify, ClassSet, SetClass};
use crate::context::SpaceContext;
use crate::gamma::{GammaMode, DEFAULT_GAMMA_BUDGET};
use crate::mask::SubsetMask;
use crate::spacefile::{export_space_spec, NamedSpace, SpaceSpecFile};
use crate::universe::{
    satisfies, Bounds, Position, ScanError, SpaceProperty, Universe, DEFAULT_CONTEXT_BUDGET,
    MAX_SCAN_POINTS,
};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

/// Search range shared by every `n` from 1 up to `n_max`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HuntBounds {
    pub n_max: usize,
    pub gamma_mode: GammaMode,
    pub budget: u64,
    pub gamma_budget: u64,
}

impl HuntBounds {
    pub fn new(n_max: usize, gamma_mode: GammaMode) -> Self {
        HuntBounds {
            n_max,
            gamma_mode,
            budget: DEFAULT_CONTEXT_BUDGET,
            gamma_budget: DEFAULT_GAMMA_BUDGET,
        }
    }

    pub fn at(&self, n: usize) -> Bounds {
        Bounds {
            n,
            gamma_mode: self.gamma_mode,
            budget: self.budget,
            gamma_budget: self.gamma_budget,
        }
    }
}

/// "Does every set in all `source` classes lie in all `target` classes?"
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Query {
    pub source: Vec<SetClass>,
    pub target: Vec<SetClass>,
    pub constraints: Vec<SpaceProperty>,
    pub bounds: HuntBounds,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum QueryError {
    #[error("source and target must each name at least one class")]
    EmptySide,
    #[error("source and target are the same conjunction")]
    SameSides,
    #[error("n_max must lie in 1..={MAX_SCAN_POINTS}, got {0}")]
    BadRange(usize),
}

impl Query {
    pub fn new(
        source: &[SetClass],
        target: &[SetClass],
        constraints: &[SpaceProperty],
        bounds: HuntBounds,
    ) -> Result<Self, QueryError> {
        let q = Query {
            source: source.to_vec(),
            target: target.to_vec(),
            constraints: constraints.to_vec(),
            bounds,
        };
        q.validate()?;
        Ok(q)
    }

    pub fn validate(&self) -> Result<(), QueryError> {
        if self.source.is_empty() || self.target.is_empty() {
            return Err(QueryError::EmptySide);
        }
        if ClassSet::of(self.source.iter().copied()) == ClassSet::of(self.target.iter().copied()) {
            return Err(QueryError::SameSides);
        }
        if self.bounds.n_max == 0 || self.bounds.n_max > MAX_SCAN_POINTS {
            return Err(QueryError::BadRange(self.bounds.n_max));
        }
        Ok(())
    }

    fn source_set(&self) -> ClassSet {
        ClassSet::of(self.source.iter().copied())
    }

    fn target_set(&self) -> ClassSet {
        ClassSet::of(self.target.iter().copied())
    }
}

/// A context and subset in every source class but outside some target class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub position: Position,
    pub context: SpaceContext,
    pub subset: SubsetMask,
    pub source_flags: BTreeMap<SetClass, bool>,
    pub target_flags: BTreeMap<SetClass, bool>,
}

impl Witness {
    fn evaluate(
        position: Position,
        context: SpaceContext,
        subset: SubsetMask,
        source: &[SetClass],
        target: &[SetClass],
    ) -> Self {
        let flags = classify(&context, subset).flags;
        let pick = |classes: &[SetClass]| classes.iter().map(|&c| (c, flags.contains(c))).collect();
        Witness {
            position,
            source_flags: pick(source),
            target_flags: pick(target),
            context,
            subset,
        }
    }

    pub(crate) fn evaluate_single(
        position: Position,
        context: SpaceContext,
        subset: SubsetMask,
        source: SetClass,
        target: SetClass,
    ) -> Self {
        Witness::evaluate(position, context, subset, &[source], &[target])
    }

    /// Source flags all true and at least one target flag false.
    pub fn is_separating(&self) -> bool {
        self.source_flags.values().all(|&b| b) && self.target_flags.values().any(|&b| !b)
    }

    /// Rebuilds the context from its exported spec file and re-evaluates
    /// every flag from scratch.
    pub fn recheck(&self) -> bool {
        let Ok(rebuilt) = NamedSpace::try_from(&export_space_spec(&self.context)) else {
            return false;
        };
        if rebuilt.context != self.context {
            return false;
        }
        let source: Vec<SetClass> = self.source_flags.keys().copied().collect();
        let target: Vec<SetClass> = self.target_flags.keys().copied().collect();
        let fresh = Witness::evaluate(
            self.position,
            rebuilt.context,
            self.subset,
            &source,
            &target,
        );
        fresh == *self && fresh.is_separating()
    }
}

#[derive(Serialize, Deserialize)]
struct WitnessRecord {
    position: Position,
    space: SpaceSpecFile,
    subset: Vec<String>,
    source: BTreeMap<SetClass, bool>,
    target: BTreeMap<SetClass, bool>,
}

impl Serialize for Witness {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let named = NamedSpace::with_default_names(self.context.clone());
        WitnessRecord {
            position: self.position,
            space: export_space_spec(&self.context),
            subset: named.names_of(self.subset),
            source: self.source_flags.clone(),
            target: self.target_flags.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Witness {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let record = WitnessRecord::deserialize(deserializer)?;
        let named = NamedSpace::try_from(&record.space).map_err(D::Error::custom)?;
        let subset = named
            .parse_subset(&record.subset.join(","))
            .map_err(D::Error::custom)?;
        Ok(Witness {
            position: record.position,
            context: named.context,
            subset,
            source_flags: record.source,
            target_flags: record.target,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum HuntError {
    #[error(transparent)]
    Query(#[from] QueryError),
    #[error("budget exhausted before a witness was found: {0}")]
    BudgetExhausted(ScanError),
    #[error("witness at {0:?} failed re-verification")]
    EngineDefect(Position),
}

/// Scans `n = 1..=n_max` in canonical order and returns the first witness,
/// or `None` when the implication holds throughout the bounds.
pub fn hunt(q: &Query) -> Result<Option<Witness>, HuntError> {
    q.validate()?;
    let (source, target) = (q.source_set(), q.target_set());
    for n in 1..=q.bounds.n_max {
        let universe = Universe::new(q.bounds.at(n)).map_err(HuntError::BudgetExhausted)?;
        let shards = universe.map_topologies(|topology| {
            let mut found = None;
            universe.for_each_context(topology, |position, ctx| {
                if found.is_some() || !satisfies(&ctx, &q.constraints) {
                    return;
                }
                let hit = SubsetMask::all(n).find(|&a| {
                    let flags = classify(&ctx, a).flags;
                    flags.contains_all(source) && !flags.contains_all(target)
                });
                if let Some(a) = hit {
                    found = Some((position, ctx, a));
                }
            });
            found
        });
        if let Some((position, ctx, a)) = shards.into_iter().flatten().next() {
            let witness = Witness::evaluate(position, ctx, a, &q.source, &q.target);
            if !witness.recheck() {
                return Err(HuntError::EngineDefect(position));
            }
            return Ok(Some(witness));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use SetClass::*;

    fn query(source: &[SetClass], target: &[SetClass], n_max: usize) -> Query {
        Query::new(source, target, &[], HuntBounds::new(n_max, GammaMode::Full)).unwrap()
    }

    #[test]
    fn gamma_open_sets_are_open_throughout() {
        assert_eq!(hunt(&query(&[GammaOpen], &[Open], 3)).unwrap(), None);
    }

    #[test]
    fn pre_i_open_converse_has_a_witness() {
        let w = hunt(&query(&[PreIOpen], &[PreGammaIOpen], 3))
            .unwrap()
            .unwrap();
        assert!(w.is_separating());
        assert!(w.source_flags[&PreIOpen]);
        assert!(!w.target_flags[&PreGammaIOpen]);
        assert!(w.recheck());
    }

    #[test]
    fn witness_serde_round_trip() {
        let w = hunt(&query(&[PreGammaIOpen], &[GammaOpen], 3))
            .unwrap()
            .unwrap();
        let json = serde_json::to_string(&w).unwrap();
        let back: Witness = serde_json::from_str(&json).unwrap();
        assert_eq!(back, w);
        assert!(back.recheck());
    }

    #[test]
    fn invalid_queries_are_rejected() {
        let b = HuntBounds::new(3, GammaMode::Full);
        assert_eq!(Query::new(&[], &[Open], &[], b), Err(QueryError::EmptySide));
        assert_eq!(
            Query::new(&[Open, Closed], &[Closed, Open], &[], b),
            Err(QueryError::SameSides)
        );
        assert_eq!(
            Query::new(&[Open], &[Closed], &[], HuntBounds::new(5, GammaMode::Full)),
            Err(QueryError::BadRange(5))
        );
    }

    #[test]
    fn budget_exhaustion_is_not_absence() {
        let q = Query::new(
            &[GammaOpen],
            &[Open],
            &[],
            HuntBounds::new(4, GammaMode::Full),
        )
        .unwrap();
        assert!(matches!(hunt(&q), Err(HuntError::BudgetExhausted(_))));
    }

    #[test]
    fn constraints_restrict_the_universe() {
        // Under γ-regularity pre-γ-I-open and pre-I-open coincide.
        let q = Query::new(
            &[PreIOpen],
            &[PreGammaIOpen],
            &[SpaceProperty::GammaRegular],
            HuntBounds::new(3, GammaMode::Full),
        )
        .unwrap();
        assert_eq!(hunt(&q).unwrap(), None);
    }

    #[test]
    fn tampered_witness_fails_recheck() {
        let mut w = hunt(&query(&[PreGammaIOpen], &[GammaOpen], 3))
            .unwrap()
            .unwrap();
        w.target_flags.insert(GammaOpen, true);
        assert!(!w.recheck());
    }
}
