//! Six hand-built spaces that separate pre-γ-I-openness from its neighbours,
//! and the exact membership facts each one exhibits.

use crate::classes::{is_member, SetClass};
use crate::context::SpaceContext;
use crate::gamma::GammaOperation;
use crate::ideal::Ideal;
use crate::mask::SubsetMask;
use crate::topology::Topology;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Fixture {
    /// X = {a,b,c}, τ = {∅, X, {a,c}}, I = {∅, {b}}, γ ≡ X.
    PreGammaIOpenNotGammaOpen,
    /// X = {a,b,c}, τ = {∅, X, {b,c}}, I = {∅, {c}}, γ ≡ X.
    PreGammaOpenNotPreGammaIOpen,
    /// X = {a,b,c}, τ = {∅, X, {c}}, I = {∅, {c}}, γ ≡ X.
    PreIOpenNotPreGammaIOpen,
    /// X = {a,b,c}, τ = {∅, X, {b}, {a,b}}, I = {∅, {b}}, γ ≡ X.
    GammaPreopenNotPreGammaIOpen,
    /// X = {a,b,c,d}, τ = P(X), I = {∅}, γ ≡ X.
    GammaPOpenNotPreGammaIOpen,
    /// Same space as the first fixture, viewed through {a,b} ∩ {b,c}.
    PreGammaIOpenNotMeetClosed,
}

fn m(points: &[usize]) -> SubsetMask {
    SubsetMask::from_points(points.iter().copied())
}

fn constant_whole_space(n: usize, opens: &[SubsetMask], ideal_max: SubsetMask) -> SpaceContext {
    let topology = Topology::from_opens(
        n,
        opens
            .iter()
            .copied()
            .chain([SubsetMask::EMPTY, SubsetMask::full(n)]),
    )
    .expect("fixture topology");
    let gamma = GammaOperation::constant_whole(&topology);
    SpaceContext::new(topology, Ideal::principal(n, ideal_max), gamma).expect("fixture context")
}

impl Fixture {
    pub const ALL: [Fixture; 6] = [
        Fixture::PreGammaIOpenNotGammaOpen,
        Fixture::PreGammaOpenNotPreGammaIOpen,
        Fixture::PreIOpenNotPreGammaIOpen,
        Fixture::GammaPreopenNotPreGammaIOpen,
        Fixture::GammaPOpenNotPreGammaIOpen,
        Fixture::PreGammaIOpenNotMeetClosed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Fixture::PreGammaIOpenNotGammaOpen => "pre-gamma-i-open-not-gamma-open",
            Fixture::PreGammaOpenNotPreGammaIOpen => "pre-gamma-open-not-pre-gamma-i-open",
            Fixture::PreIOpenNotPreGammaIOpen => "pre-i-open-not-pre-gamma-i-open",
            Fixture::GammaPreopenNotPreGammaIOpen => "gamma-preopen-not-pre-gamma-i-open",
            Fixture::GammaPOpenNotPreGammaIOpen => "gamma-p-open-not-pre-gamma-i-open",
            Fixture::PreGammaIOpenNotMeetClosed => "pre-gamma-i-open-not-meet-closed",
        }
    }

    pub fn from_name(name: &str) -> Option<Fixture> {
        Fixture::ALL.into_iter().find(|f| f.name() == name)
    }

    pub fn context(self) -> SpaceContext {
        match self {
            Fixture::PreGammaIOpenNotGammaOpen | Fixture::PreGammaIOpenNotMeetClosed => {
                constant_whole_space(3, &[m(&[0, 2])], m(&[1]))
            }
            Fixture::PreGammaOpenNotPreGammaIOpen => {
                constant_whole_space(3, &[m(&[1, 2])], m(&[2]))
            }
            Fixture::PreIOpenNotPreGammaIOpen => constant_whole_space(3, &[m(&[2])], m(&[2])),
            Fixture::GammaPreopenNotPreGammaIOpen => {
                constant_whole_space(3, &[m(&[1]), m(&[0, 1])], m(&[1]))
            }
            Fixture::GammaPOpenNotPreGammaIOpen => {
                let opens: Vec<SubsetMask> = SubsetMask::all(4).collect();
                constant_whole_space(4, &opens, SubsetMask::EMPTY)
            }
        }
    }

    /// The facts this fixture must exhibit.
    pub fn assertions(self) -> Vec<FixtureAssertion> {
        use FixtureAssertion::*;
        let pgio = SetClass::PreGammaIOpen;
        match self {
            Fixture::PreGammaIOpenNotGammaOpen => vec![
                Member {
                    subset: m(&[0, 1]),
                    class: pgio,
                    expected: true,
                },
                Member {
                    subset: m(&[0, 1]),
                    class: SetClass::GammaOpen,
                    expected: false,
                },
            ],
            Fixture::PreGammaOpenNotPreGammaIOpen => vec![
                LocalFunction {
                    subset: m(&[2]),
                    expected: SubsetMask::EMPTY,
                },
                StarClosure {
                    subset: m(&[2]),
                    expected: m(&[2]),
                },
                Member {
                    subset: m(&[2]),
                    class: SetClass::PreGammaOpen,
                    expected: true,
                },
                Member {
                    subset: m(&[2]),
                    class: pgio,
                    expected: false,
                },
            ],
            Fixture::PreIOpenNotPreGammaIOpen => vec![
                Member {
                    subset: m(&[2]),
                    class: SetClass::PreIOpen,
                    expected: true,
                },
                Member {
                    subset: m(&[2]),
                    class: pgio,
                    expected: false,
                },
            ],
            Fixture::GammaPreopenNotPreGammaIOpen => vec![
                Member {
                    subset: m(&[1, 2]),
                    class: SetClass::GammaPreopen,
                    expected: true,
                },
                Member {
                    subset: m(&[1, 2]),
                    class: pgio,
                    expected: false,
                },
            ],
            Fixture::GammaPOpenNotPreGammaIOpen => vec![
                Member {
                    subset: m(&[2, 3]),
                    class: SetClass::GammaPOpen,
                    expected: true,
                },
                Member {
                    subset: m(&[2, 3]),
                    class: pgio,
                    expected: false,
                },
            ],
            Fixture::PreGammaIOpenNotMeetClosed => vec![
                LocalFunction {
                    subset: m(&[0, 1]),
                    expected: m(&[0, 1, 2]),
                },
                LocalFunction {
                    subset: m(&[1, 2]),
                    expected: m(&[0, 1, 2]),
                },
                Member {
                    subset: m(&[0, 1]),
                    class: pgio,
                    expected: true,
                },
                Member {
                    subset: m(&[1, 2]),
                    class: pgio,
                    expected: true,
                },
                Member {
                    subset: m(&[1]),
                    class: pgio,
                    expected: false,
                },
            ],
        }
    }
}

impl fmt::Display for Fixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One exact fact about a fixture.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixtureAssertion {
    Member {
        subset: SubsetMask,
        class: SetClass,
        expected: bool,
    },
    LocalFunction {
        subset: SubsetMask,
        expected: SubsetMask,
    },
    StarClosure {
        subset: SubsetMask,
        expected: SubsetMask,
    },
}

impl FixtureAssertion {
    /// Evaluates the assertion, returning `(passed, observed value)`.
    pub fn evaluate(&self, ctx: &SpaceContext) -> (bool, String) {
        match *self {
            FixtureAssertion::Member {
                subset,
                class,
                expected,
            } => {
                let got = is_member(ctx, class, subset);
                (got == expected, got.to_string())
            }
            FixtureAssertion::LocalFunction { subset, expected } => {
                let got = ctx.local_function(subset);
                (got == expected, got.to_string())
            }
            FixtureAssertion::StarClosure { subset, expected } => {
                let got = ctx.star_closure(subset);
                (got == expected, got.to_string())
            }
        }
    }
}

impl fmt::Display for FixtureAssertion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FixtureAssertion::Member {
                subset,
                class,
                expected: true,
            } => {
                write!(f, "{subset} is {}", class.label())
            }
            FixtureAssertion::Member {
                subset,
                class,
                expected: false,
            } => {
                write!(f, "{subset} is not {}", class.label())
            }
            FixtureAssertion::LocalFunction { subset, expected } => {
                write!(f, "{subset}* = {expected}")
            }
            FixtureAssertion::StarClosure { subset, expected } => {
                write!(f, "Cl*({subset}) = {expected}")
            }
        }
    }
}

/// Outcome of one fixture assertion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureCheck {
    pub fixture: Fixture,
    pub assertion: String,
    pub observed: String,
    pub passed: bool,
}

/// Evaluates every assertion of every fixture.
pub fn check_fixtures() -> Vec<FixtureCheck> {
    Fixture::ALL
        .into_iter()
        .flat_map(|fixture| {
            let ctx = fixture.context();
            fixture
                .assertions()
                .into_iter()
                .map(move |a| {
                    let (passed, observed) = a.evaluate(&ctx);
                    FixtureCheck {
                        fixture,
                        assertion: a.to_string(),
                        observed,
                        passed,
                    }
                })
                .collect::<Vec<_>>()
        })
        .collect()
}
