//! Machine-checkable claims about ideal spaces with an operation γ, and the
//! exhaustive verifier that hunts for counterexamples to them.

use crate::classes::{classify_all, ClassSet, SetClass};
use crate::context::SpaceContext;
use crate::gamma::GammaMode;
use crate::mask::SubsetMask;
use crate::spacefile::{export_space_spec, NamedSpace};
use crate::universe::{satisfies, Bounds, Position, ScanError, SpaceProperty, Universe};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::time::{Duration, Instant};
use thiserror::Error;

/// A per-subset predicate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Atom {
    Class(SetClass),
    /// `A ⊆ A*`
    DenseInItself,
    /// `A* ⊆ A`
    TauStarClosed,
    /// `A = A*`
    StarPerfect,
    /// `A = U ∩ Cl*(A)` for some open `U`
    OpenMeetsStarClosure,
    /// `A = U ∩ Cl(A)` for some open `U`
    OpenMeetsClosure,
    /// `A*` is closed
    LocalFunctionClosed,
    /// `τ_γ-Cl(Int*(A)) ⊆ A`
    GammaClosureOfStarInteriorWithin,
    /// `Cl(τ_γ-Int(A)) ⊆ A`
    ClosureOfGammaInteriorWithin,
}

impl Atom {
    fn holds(self, ctx: &SpaceContext, classes: ClassSet, set: SubsetMask) -> bool {
        match self {
            Atom::Class(c) => classes.contains(c),
            Atom::DenseInItself => ctx.star_status(set).dense_in_itself,
            Atom::TauStarClosed => ctx.star_status(set).tau_star_closed,
            Atom::StarPerfect => ctx.star_status(set).perfect,
            Atom::OpenMeetsStarClosure => ctx.is_weakly_i_local_closed(set),
            Atom::OpenMeetsClosure => ctx.is_locally_closed(set),
            Atom::LocalFunctionClosed => ctx.is_closed(ctx.local_function(set)),
            Atom::GammaClosureOfStarInteriorWithin => {
                ctx.tau_gamma_cl(ctx.star_interior(set)).is_subset_of(set)
            }
            Atom::ClosureOfGammaInteriorWithin => {
                ctx.closure(ctx.tau_gamma_int(set)).is_subset_of(set)
            }
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Class(c) => f.write_str(c.label()),
            Atom::DenseInItself => f.write_str("*-dense-in-itself"),
            Atom::TauStarClosed => f.write_str("τ*-closed"),
            Atom::StarPerfect => f.write_str("*-perfect"),
            Atom::OpenMeetsStarClosure => f.write_str("U ∩ Cl*(A) for some open U"),
            Atom::OpenMeetsClosure => f.write_str("U ∩ Cl(A) for some open U"),
            Atom::LocalFunctionClosed => f.write_str("A* closed"),
            Atom::GammaClosureOfStarInteriorWithin => f.write_str("τ_γ-Cl(Int*(A)) ⊆ A"),
            Atom::ClosureOfGammaInteriorWithin => f.write_str("Cl(τ_γ-Int(A)) ⊆ A"),
        }
    }
}

fn all_hold(atoms: &[Atom], ctx: &SpaceContext, classes: ClassSet, set: SubsetMask) -> bool {
    atoms.iter().all(|a| a.holds(ctx, classes, set))
}

fn conjunction(atoms: &[Atom]) -> String {
    if atoms.is_empty() {
        return "any set".to_string();
    }
    atoms
        .iter()
        .map(Atom::to_string)
        .collect::<Vec<_>>()
        .join(" ∧ ")
}

/// The shape of a claim.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Law {
    /// Every subset satisfying `given` satisfies `then`.
    Implies { given: Vec<Atom>, then: Vec<Atom> },
    /// `left` and `right` select the same subsets.
    Iff { left: Vec<Atom>, right: Vec<Atom> },
    /// `atom(A) ∧ atom(B) ⇒ atom(A ∪ B)`.
    UnionClosed(Atom),
    /// `left(A) ∧ right(B) ⇒ result(A ∩ B)`.
    MeetClosed {
        left: Atom,
        right: Atom,
        result: Atom,
    },
    /// `A ⊆ B ⇒ A* ⊆ B*`.
    LocalFunctionMonotone,
    /// `U` open `⇒ U ∩ A* ⊆ (U ∩ A)*`.
    OpenMeetLocalFunction,
    /// Two whole-space properties coincide.
    SpaceIff(SpaceProperty, SpaceProperty),
}

impl Law {
    /// How many subsets a violation names.
    pub fn arity(&self) -> usize {
        match self {
            Law::Implies { .. } | Law::Iff { .. } => 1,
            Law::UnionClosed(_)
            | Law::MeetClosed { .. }
            | Law::LocalFunctionMonotone
            | Law::OpenMeetLocalFunction => 2,
            Law::SpaceIff(..) => 0,
        }
    }

    /// True when the law fails at `subjects` (`arity()` subsets).
    fn violated_at(
        &self,
        ctx: &SpaceContext,
        classes: &dyn Fn(SubsetMask) -> ClassSet,
        subjects: &[SubsetMask],
    ) -> bool {
        let holds = |atoms: &[Atom], s: SubsetMask| all_hold(atoms, ctx, classes(s), s);
        let one = |atom: Atom, s: SubsetMask| atom.holds(ctx, classes(s), s);
        match self {
            Law::Implies { given, then } => holds(given, subjects[0]) && !holds(then, subjects[0]),
            Law::Iff { left, right } => holds(left, subjects[0]) != holds(right, subjects[0]),
            Law::UnionClosed(atom) => {
                let (a, b) = (subjects[0], subjects[1]);
                one(*atom, a) && one(*atom, b) && !one(*atom, a.union(b))
            }
            Law::MeetClosed {
                left,
                right,
                result,
            } => {
                let (a, b) = (subjects[0], subjects[1]);
                one(*left, a) && one(*right, b) && !one(*result, a.intersection(b))
            }
            Law::LocalFunctionMonotone => {
                let (a, b) = (subjects[0], subjects[1]);
                a.is_subset_of(b) && !ctx.local_function(a).is_subset_of(ctx.local_function(b))
            }
            Law::OpenMeetLocalFunction => {
                let (a, u) = (subjects[0], subjects[1]);
                ctx.is_open(u)
                    && !u
                        .intersection(ctx.local_function(a))
                        .is_subset_of(ctx.local_function(u.intersection(a)))
            }
            Law::SpaceIff(p, q) => p.holds(ctx) != q.holds(ctx),
        }
    }

    /// First violation in increasing subject order.
    fn first_violation(&self, ctx: &SpaceContext, vectors: &[ClassSet]) -> Option<Vec<SubsetMask>> {
        let lookup = |s: SubsetMask| vectors[s.index()];
        let n = ctx.n();
        match self.arity() {
            0 => self.violated_at(ctx, &lookup, &[]).then(Vec::new),
            1 => SubsetMask::all(n)
                .find(|&a| self.violated_at(ctx, &lookup, &[a]))
                .map(|a| vec![a]),
            _ => SubsetMask::all(n)
                .flat_map(|a| SubsetMask::all(n).map(move |b| [a, b]))
                .find(|pair| self.violated_at(ctx, &lookup, pair))
                .map(|pair| pair.to_vec()),
        }
    }

    fn describe(&self) -> String {
        match self {
            Law::Implies { given, then } => {
                format!("{} ⇒ {}", conjunction(given), conjunction(then))
            }
            Law::Iff { left, right } => format!("{} ⇔ {}", conjunction(left), conjunction(right)),
            Law::UnionClosed(a) => format!("{a} sets are closed under union"),
            Law::MeetClosed {
                left,
                right,
                result,
            } => {
                format!("A {left} ∧ B {right} ⇒ A ∩ B {result}")
            }
            Law::LocalFunctionMonotone => "A ⊆ B ⇒ A* ⊆ B*".to_string(),
            Law::OpenMeetLocalFunction => "U open ⇒ U ∩ A* ⊆ (U ∩ A)*".to_string(),
            Law::SpaceIff(p, q) => format!("{p} ⇔ {q}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimKind {
    Implication,
    Equivalence,
    FamilyIdentity,
    ClosureLaw,
    OperatorLaw,
    SpaceEquivalence,
}

/// One claim, the hypotheses under which it is asserted, and its shape.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremSpec {
    pub id: String,
    pub kind: ClaimKind,
    pub hypotheses: Vec<SpaceProperty>,
    pub law: Law,
}

impl TheoremSpec {
    pub fn new(id: &str, kind: ClaimKind, hypotheses: &[SpaceProperty], law: Law) -> Self {
        TheoremSpec {
            id: id.to_string(),
            kind,
            hypotheses: hypotheses.to_vec(),
            law,
        }
    }

    pub fn statement(&self) -> String {
        if self.hypotheses.is_empty() {
            self.law.describe()
        } else {
            let hyps: Vec<&str> = self.hypotheses.iter().map(|h| h.name()).collect();
            format!("[{}] {}", hyps.join(", "), self.law.describe())
        }
    }

    /// True when the law fails at `subjects`, evaluating every class afresh.
    pub fn violated_at(&self, ctx: &SpaceContext, subjects: &[SubsetMask]) -> bool {
        satisfies(ctx, &self.hypotheses)
            && self
                .law
                .violated_at(ctx, &|s| crate::classes::classify(ctx, s).flags, subjects)
    }
}

use Atom::Class as C;
use SetClass::*;
use SpaceProperty::*;

fn implies(id: &str, hyps: &[SpaceProperty], given: &[Atom], then: &[Atom]) -> TheoremSpec {
    TheoremSpec::new(
        id,
        ClaimKind::Implication,
        hyps,
        Law::Implies {
            given: given.to_vec(),
            then: then.to_vec(),
        },
    )
}

fn iff(
    id: &str,
    kind: ClaimKind,
    hyps: &[SpaceProperty],
    left: &[Atom],
    right: &[Atom],
) -> TheoremSpec {
    TheoremSpec::new(
        id,
        kind,
        hyps,
        Law::Iff {
            left: left.to_vec(),
            right: right.to_vec(),
        },
    )
}

/// Links `(1) ⇒ (2) ⇒ … ⇒ (6) ⇒ (1)` of a six-way equivalence, with
/// `(1)` = γ-open and `(k)` = `classes[k-2]` together with `companion`.
fn equivalence_cycle(prefix: &str, companion: SetClass) -> Vec<TheoremSpec> {
    let hyps = [StarExtremallyDisconnected, GammaRegular];
    let mut stages: Vec<Vec<Atom>> = vec![vec![C(GammaOpen)]];
    for c in [AlphaIOpen, PreGammaIOpen, PreIOpen, SemiIOpen, BIOpen] {
        stages.push(vec![C(c), C(companion)]);
    }
    (0..stages.len())
        .map(|i| {
            let next = (i + 1) % stages.len();
            implies(
                &format!("{prefix}-{}-to-{}", i + 1, next + 1),
                &hyps,
                &stages[i],
                &stages[next],
            )
        })
        .collect()
}

/// The full roster of claims expected to hold in every finite model.
pub fn builtin_theorems() -> Vec<TheoremSpec> {
    use ClaimKind::*;
    let pgio = C(PreGammaIOpen);
    let mut r = vec![
        // Preliminaries.
        TheoremSpec::new(
            "gamma-regular-iff-tau-gamma-is-tau",
            SpaceEquivalence,
            &[],
            Law::SpaceIff(GammaRegular, TauEqualsTauGamma),
        ),
        implies("gamma-open-sets-are-open", &[], &[C(GammaOpen)], &[C(Open)]),
        TheoremSpec::new(
            "gamma-open-union-closed",
            ClosureLaw,
            &[],
            Law::UnionClosed(C(GammaOpen)),
        ),
        iff(
            "weakly-local-closed-open-meet-star-closure",
            Equivalence,
            &[],
            &[C(WeaklyILocalClosed)],
            &[Atom::OpenMeetsStarClosure],
        ),
        iff(
            "locally-closed-open-meet-closure",
            Equivalence,
            &[],
            &[C(LocallyClosed)],
            &[Atom::OpenMeetsClosure],
        ),
        TheoremSpec::new(
            "star-extremal-disconnectedness-criterion",
            SpaceEquivalence,
            &[],
            Law::SpaceIff(StarExtremallyDisconnected, StarInteriorClosureCriterion),
        ),
        TheoremSpec::new(
            "local-function-monotone",
            OperatorLaw,
            &[],
            Law::LocalFunctionMonotone,
        ),
        TheoremSpec::new(
            "open-meet-local-function",
            OperatorLaw,
            &[],
            Law::OpenMeetLocalFunction,
        ),
        implies(
            "local-function-closed",
            &[],
            &[],
            &[Atom::LocalFunctionClosed],
        ),
        iff(
            "submaximal-preopen-equals-open",
            FamilyIdentity,
            &[Submaximal],
            &[C(Preopen)],
            &[C(Open)],
        ),
        iff(
            "submaximal-pre-i-open-equals-open",
            FamilyIdentity,
            &[Submaximal],
            &[C(PreIOpen)],
            &[C(Open)],
        ),
        TheoremSpec::new(
            "regular-operation-gamma-open-meet-closed",
            ClosureLaw,
            &[RegularOperation],
            Law::MeetClosed {
                left: C(GammaOpen),
                right: C(GammaOpen),
                result: C(GammaOpen),
            },
        ),
        // The pre-γ-I-open chain.
        implies(
            "gamma-open-is-pre-gamma-i-open",
            &[],
            &[C(GammaOpen)],
            &[pgio],
        ),
        implies(
            "pre-gamma-i-open-is-pre-gamma-open",
            &[],
            &[pgio],
            &[C(PreGammaOpen)],
        ),
        implies(
            "pre-gamma-i-open-is-pre-i-open",
            &[],
            &[pgio],
            &[C(PreIOpen)],
        ),
        implies(
            "pre-gamma-i-open-is-gamma-preopen",
            &[],
            &[pgio],
            &[C(GammaPreopen)],
        ),
        implies(
            "pre-gamma-i-open-is-gamma-p-open",
            &[],
            &[pgio],
            &[C(GammaPOpen)],
        ),
        TheoremSpec::new(
            "pre-gamma-i-open-union-closed",
            ClosureLaw,
            &[],
            Law::UnionClosed(pgio),
        ),
        TheoremSpec::new(
            "pre-gamma-i-open-meet-gamma-open",
            ClosureLaw,
            &[RegularOperation],
            Law::MeetClosed {
                left: pgio,
                right: C(GammaOpen),
                result: pgio,
            },
        ),
        iff(
            "trivial-ideal-pre-gamma-i-open-iff-pre-gamma-open",
            Equivalence,
            &[IdealTrivial],
            &[pgio],
            &[C(PreGammaOpen)],
        ),
        iff(
            "full-ideal-pre-gamma-i-open-equals-tau-gamma",
            FamilyIdentity,
            &[IdealFull],
            &[pgio],
            &[C(GammaOpen)],
        ),
        // Consequences under extra hypotheses.
        implies(
            "gamma-regular-open-is-pre-gamma-i-open",
            &[GammaRegular],
            &[C(Open)],
            &[pgio],
        ),
        implies(
            "submaximal-pre-gamma-i-open-is-open",
            &[Submaximal],
            &[pgio],
            &[C(Open)],
        ),
        iff(
            "gamma-regular-full-ideal-pre-gamma-i-open-iff-open",
            Equivalence,
            &[GammaRegular, IdealFull],
            &[pgio],
            &[C(Open)],
        ),
        implies(
            "gamma-regular-full-ideal-r-i-open-is-pre-gamma-i-open",
            &[GammaRegular, IdealFull],
            &[C(RIOpen)],
            &[pgio],
        ),
        implies(
            "gamma-regular-full-ideal-delta-i-open-is-pre-gamma-i-open",
            &[GammaRegular, IdealFull],
            &[C(DeltaIOpen)],
            &[pgio],
        ),
        implies(
            "gamma-regular-full-ideal-regular-open-is-pre-gamma-i-open",
            &[GammaRegular, IdealFull],
            &[C(RegularOpen)],
            &[pgio],
        ),
        implies(
            "gamma-regular-full-ideal-delta-open-is-pre-gamma-i-open",
            &[GammaRegular, IdealFull],
            &[C(DeltaOpen)],
            &[pgio],
        ),
        implies(
            "full-ideal-pre-gamma-i-open-is-open",
            &[IdealFull],
            &[pgio],
            &[C(Open)],
        ),
        implies(
            "full-ideal-pre-gamma-i-open-is-alpha-i-open",
            &[IdealFull],
            &[pgio],
            &[C(AlphaIOpen)],
        ),
        implies(
            "full-ideal-pre-gamma-i-open-is-semi-i-open",
            &[IdealFull],
            &[pgio],
            &[C(SemiIOpen)],
        ),
        implies(
            "closed-pre-gamma-i-open-is-r-i-open",
            &[],
            &[C(Closed), pgio],
            &[C(RIOpen)],
        ),
        implies(
            "gamma-regular-r-i-open-is-pre-gamma-i-open",
            &[GammaRegular],
            &[C(RIOpen)],
            &[pgio],
        ),
        iff(
            "gamma-regular-trivial-ideal-pre-gamma-i-open-iff-preopen",
            Equivalence,
            &[GammaRegular, IdealTrivial],
            &[pgio],
            &[C(Preopen)],
        ),
        iff(
            "gamma-regular-trivial-ideal-pre-gamma-i-open-iff-gamma-preopen",
            Equivalence,
            &[GammaRegular, IdealTrivial],
            &[pgio],
            &[C(GammaPreopen)],
        ),
        iff(
            "gamma-regular-trivial-ideal-pre-gamma-i-open-iff-gamma-p-open",
            Equivalence,
            &[GammaRegular, IdealTrivial],
            &[pgio],
            &[C(GammaPOpen)],
        ),
        implies(
            "trivial-ideal-pre-gamma-i-open-is-i-open",
            &[IdealTrivial],
            &[pgio],
            &[C(IOpen)],
        ),
        implies(
            "gamma-regular-delta-i-open-is-pre-gamma-i-open",
            &[GammaRegular],
            &[C(DeltaIOpen)],
            &[pgio],
        ),
        iff(
            "gamma-regular-pre-gamma-i-open-iff-pre-i-open",
            Equivalence,
            &[GammaRegular],
            &[pgio],
            &[C(PreIOpen)],
        ),
        implies(
            "perfect-pre-gamma-i-open-is-gamma-open",
            &[],
            &[Atom::StarPerfect, pgio],
            &[C(GammaOpen)],
        ),
        implies(
            "perfect-pre-gamma-i-open-is-open",
            &[],
            &[Atom::StarPerfect, pgio],
            &[C(Open)],
        ),
        implies(
            "tau-star-closed-pre-gamma-i-open-is-gamma-open",
            &[],
            &[Atom::TauStarClosed, pgio],
            &[C(GammaOpen)],
        ),
        implies(
            "tau-star-closed-pre-gamma-i-open-is-open",
            &[],
            &[Atom::TauStarClosed, pgio],
            &[C(Open)],
        ),
        implies(
            "perfect-pre-gamma-i-open-is-i-open",
            &[],
            &[Atom::StarPerfect, pgio],
            &[C(IOpen)],
        ),
        implies(
            "dense-in-itself-pre-gamma-i-open-is-i-open",
            &[],
            &[Atom::DenseInItself, pgio],
            &[C(IOpen)],
        ),
        implies(
            "star-ed-gamma-regular-alpha-i-open-is-pre-gamma-i-open",
            &[StarExtremallyDisconnected, GammaRegular],
            &[C(AlphaIOpen)],
            &[pgio],
        ),
        implies(
            "star-ed-gamma-regular-semi-i-open-is-pre-gamma-i-open",
            &[StarExtremallyDisconnected, GammaRegular],
            &[C(SemiIOpen)],
            &[pgio],
        ),
        implies(
            "star-ed-gamma-regular-full-ideal-b-i-open-is-pre-gamma-i-open",
            &[StarExtremallyDisconnected, GammaRegular, IdealFull],
            &[C(BIOpen)],
            &[pgio],
        ),
    ];
    r.extend(equivalence_cycle(
        "gamma-open-decomposition-weakly-local-closed",
        WeaklyILocalClosed,
    ));
    r.extend(equivalence_cycle(
        "gamma-open-decomposition-locally-closed",
        LocallyClosed,
    ));
    r.push(iff(
        "pre-gamma-i-closed-criterion",
        Equivalence,
        &[],
        &[C(PreGammaIClosed)],
        &[Atom::GammaClosureOfStarInteriorWithin],
    ));
    r.push(implies(
        "pre-gamma-i-closed-contains-closure-of-gamma-interior",
        &[],
        &[C(PreGammaIClosed)],
        &[Atom::ClosureOfGammaInteriorWithin],
    ));
    r
}

/// Claims that should fail somewhere: the converses of the pre-γ-I-open
/// chain and intersection closure of pre-γ-I-open sets.
pub fn non_implications() -> Vec<TheoremSpec> {
    let pgio = C(PreGammaIOpen);
    vec![
        implies(
            "converse-pre-gamma-i-open-is-gamma-open",
            &[],
            &[pgio],
            &[C(GammaOpen)],
        ),
        implies(
            "converse-pre-gamma-open-is-pre-gamma-i-open",
            &[],
            &[C(PreGammaOpen)],
            &[pgio],
        ),
        implies(
            "converse-pre-i-open-is-pre-gamma-i-open",
            &[],
            &[C(PreIOpen)],
            &[pgio],
        ),
        implies(
            "converse-gamma-preopen-is-pre-gamma-i-open",
            &[],
            &[C(GammaPreopen)],
            &[pgio],
        ),
        implies(
            "converse-gamma-p-open-is-pre-gamma-i-open",
            &[],
            &[C(GammaPOpen)],
            &[pgio],
        ),
        TheoremSpec::new(
            "pre-gamma-i-open-meet-closed",
            ClaimKind::ClosureLaw,
            &[],
            Law::MeetClosed {
                left: pgio,
                right: pgio,
                result: pgio,
            },
        ),
    ]
}

pub fn find_theorem(id: &str) -> Option<TheoremSpec> {
    builtin_theorems()
        .into_iter()
        .chain(non_implications())
        .find(|t| t.id == id)
}

/// A context and the subsets at which a claim fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub position: Position,
    pub context: SpaceContext,
    pub subjects: Vec<SubsetMask>,
}

#[derive(Serialize, Deserialize)]
struct CounterexampleRecord {
    position: Position,
    space: crate::spacefile::SpaceSpecFile,
    subjects: Vec<Vec<String>>,
}

impl Serialize for Counterexample {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let named = NamedSpace::with_default_names(self.context.clone());
        CounterexampleRecord {
            position: self.position,
            space: export_space_spec(&self.context),
            subjects: self.subjects.iter().map(|&s| named.names_of(s)).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Counterexample {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let record = CounterexampleRecord::deserialize(deserializer)?;
        let named = NamedSpace::try_from(&record.space).map_err(D::Error::custom)?;
        let subjects = record
            .subjects
            .iter()
            .map(|names| named.parse_subset(&names.join(",")))
            .collect::<Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        Ok(Counterexample {
            position: record.position,
            context: named.context,
            subjects,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    NoCounterexample,
    Counterexample,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub id: String,
    pub statement: String,
    pub bounds: Bounds,
    /// Contexts in the universe.
    pub contexts_total: u64,
    /// Contexts satisfying the hypotheses.
    pub contexts_in_scope: u64,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Counterexample>,
    /// Wall time of the scan that produced this report; not serialized so
    /// reports stay byte-identical across runs.
    #[serde(skip)]
    pub runtime: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Scan(#[from] ScanError),
    #[error("counterexample to `{id}` did not survive re-evaluation from its exported spec")]
    EngineDefect { id: String },
}

/// Checks one claim over the universe described by `bounds`.
pub fn verify(spec: &TheoremSpec, bounds: Bounds) -> Result<VerificationReport, VerifyError> {
    Ok(verify_many(std::slice::from_ref(spec), bounds)?.remove(0))
}

/// Checks `specs` in one pass over the universe. Each report is the same as
/// [`verify`] would produce for that spec alone.
pub fn verify_many(
    specs: &[TheoremSpec],
    bounds: Bounds,
) -> Result<Vec<VerificationReport>, VerifyError> {
    let started = Instant::now();
    let universe = Universe::new(bounds)?;

    struct Shard {
        in_scope: Vec<u64>,
        witnesses: Vec<Option<Counterexample>>,
    }

    let shards = universe.map_topologies(|topology| {
        let mut shard = Shard {
            in_scope: vec![0; specs.len()],
            witnesses: vec![None; specs.len()],
        };
        universe.for_each_context(topology, |position, ctx| {
            let mut vectors: Option<Vec<ClassSet>> = None;
            for (i, spec) in specs.iter().enumerate() {
                if !satisfies(&ctx, &spec.hypotheses) {
                    continue;
                }
                shard.in_scope[i] += 1;
                if shard.witnesses[i].is_some() {
                    continue;
                }
                let vectors = vectors.get_or_insert_with(|| {
                    classify_all(&ctx).into_iter().map(|v| v.flags).collect()
                });
                if let Some(subjects) = spec.law.first_violation(&ctx, vectors) {
                    shard.witnesses[i] = Some(Counterexample {
                        position,
                        context: ctx.clone(),
                        subjects,
                    });
                }
            }
        });
        shard
    });

    let elapsed = started.elapsed();
    specs
        .iter()
        .enumerate()
        .map(|(i, spec)| {
            let contexts_in_scope = shards.iter().map(|s| s.in_scope[i]).sum();
            let witness = shards.iter().find_map(|s| s.witnesses[i].clone());
            if let Some(w) = &witness {
                if !recheck(spec, w) {
                    return Err(VerifyError::EngineDefect {
                        id: spec.id.clone(),
                    });
                }
            }
            Ok(VerificationReport {
                id: spec.id.clone(),
                statement: spec.statement(),
                bounds,
                contexts_total: universe.total_contexts(),
                contexts_in_scope,
                verdict: if witness.is_some() {
                    Verdict::Counterexample
                } else {
                    Verdict::NoCounterexample
                },
                witness,
                runtime: elapsed,
            })
        })
        .collect()
}

/// Re-evaluates a counterexample from scratch: the context is rebuilt from
/// its exported spec file and every class is recomputed.
pub fn recheck(spec: &TheoremSpec, witness: &Counterexample) -> bool {
    let file = export_space_spec(&witness.context);
    let Ok(rebuilt) = NamedSpace::try_from(&file) else {
        return false;
    };
    rebuilt.context == witness.context && spec.violated_at(&rebuilt.context, &witness.subjects)
}

/// Verifies the whole roster.
pub fn run_all(bounds: Bounds) -> Result<Vec<VerificationReport>, VerifyError> {
    verify_many(&builtin_theorems(), bounds)
}

/// Default bounds for [`run_all`]: full γ enumeration on three points.
pub fn default_bounds() -> Bounds {
    Bounds::new(3, GammaMode::Full)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::Fixture;

    #[test]
    fn roster_is_complete_and_unique() {
        let roster = builtin_theorems();
        assert!(roster.len() >= 35, "{}", roster.len());
        let mut ids: Vec<&str> = roster.iter().map(|t| t.id.as_str()).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), roster.len());
        let cycle: Vec<_> = roster
            .iter()
            .filter(|t| {
                t.id.starts_with("gamma-open-decomposition-weakly-local-closed")
            })
            .collect();
        assert_eq!(cycle.len(), 6);
        assert!(cycle
            .iter()
            .all(|t| t.hypotheses == [StarExtremallyDisconnected, GammaRegular]));
        assert!(non_implications()
            .iter()
            .all(|t| !ids.contains(&t.id.as_str())));
    }

    #[test]
    fn single_point_has_no_counterexamples() {
        for report in run_all(Bounds::new(1, GammaMode::Full)).unwrap() {
            assert_eq!(report.verdict, Verdict::NoCounterexample, "{}", report.id);
        }
        for report in verify_many(&non_implications(), Bounds::new(1, GammaMode::Full)).unwrap() {
            assert_eq!(report.verdict, Verdict::NoCounterexample, "{}", report.id);
        }
    }

    #[test]
    fn roster_clean_at_two_points() {
        for report in run_all(Bounds::new(2, GammaMode::Full)).unwrap() {
            assert_eq!(
                report.verdict,
                Verdict::NoCounterexample,
                "{}: {:?}",
                report.id,
                report.witness
            );
        }
    }

    #[test]
    fn chain_converse_is_refuted_at_three_points() {
        let spec = find_theorem("converse-pre-gamma-i-open-is-gamma-open").unwrap();
        let report = verify(&spec, Bounds::new(3, GammaMode::Full)).unwrap();
        assert_eq!(report.verdict, Verdict::Counterexample);
        let w = report.witness.unwrap();
        assert!(spec.violated_at(&w.context, &w.subjects));
        // The hand-built fixture is a witness too.
        let fixture = Fixture::PreGammaIOpenNotGammaOpen.context();
        assert!(spec.violated_at(&fixture, &[SubsetMask::from_points([0, 1])]));
    }

    #[test]
    fn single_spec_matches_batch() {
        let bounds = Bounds::new(2, GammaMode::Full);
        let specs = non_implications();
        let batch = verify_many(&specs, bounds).unwrap();
        for (spec, from_batch) in specs.iter().zip(&batch) {
            let alone = verify(spec, bounds).unwrap();
            assert_eq!(alone.witness, from_batch.witness);
            assert_eq!(alone.contexts_in_scope, from_batch.contexts_in_scope);
        }
    }

    #[test]
    fn recheck_rejects_non_witness() {
        let spec = find_theorem("gamma-open-is-pre-gamma-i-open").unwrap();
        let ctx = Fixture::PreGammaIOpenNotGammaOpen.context();
        let fake = Counterexample {
            position: Position {
                n: 3,
                topology: 0,
                ideal: 0,
                gamma: 0,
            },
            context: ctx,
            subjects: vec![SubsetMask::from_points([0, 1])],
        };
        assert!(!recheck(&spec, &fake));
    }

    #[test]
    fn counterexample_serde_round_trip() {
        let spec = find_theorem("pre-gamma-i-open-meet-closed").unwrap();
        let report = verify(&spec, Bounds::new(3, GammaMode::Full)).unwrap();
        let w = report.witness.unwrap();
        assert_eq!(w.subjects.len(), 2);
        let json = serde_json::to_string(&w).unwrap();
        let back: Counterexample = serde_json::from_str(&json).unwrap();
        assert_eq!(back, w);
    }
}
