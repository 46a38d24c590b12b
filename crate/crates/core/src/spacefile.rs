//! The JSON space-spec file format.
//!
//! ```json
//! {
//!   "points": ["a", "b", "c"],
//!   "opens": [[], ["a", "c"], ["a", "b", "c"]],
//!   "ideal": { "max": ["b"] },
//!   "gamma": "constant_x"
//! }
//! ```
//!
//! `ideal` is either `{"max": [...]}` (the powerset of the listed points) or
//! `{"members": [[...], ...]}`. `gamma` is a preset name (`identity`,
//! `constant_x`, `closure`, `int_closure`) or a table
//! `[{"open": [...], "image": [...]}, ...]` covering every nonempty open set;
//! an omitted entry for the empty set means `γ(∅) = ∅`.

use crate::context::SpaceContext;
use crate::gamma::{GammaError, GammaOperation, GammaPreset};
use crate::ideal::{Ideal, IdealViolation};
use crate::mask::{point_name, SubsetMask, MAX_POINTS};
use crate::topology::{SetFamily, Topology, TopologyViolation};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceSpecFile {
    pub points: Vec<String>,
    pub opens: Vec<Vec<String>>,
    pub ideal: IdealSpec,
    pub gamma: GammaSpec,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IdealSpec {
    Principal { max: Vec<String> },
    Members { members: Vec<Vec<String>> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GammaSpec {
    Preset(String),
    Table(Vec<GammaEntry>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GammaEntry {
    pub open: Vec<String>,
    pub image: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("line {line}, column {column}: malformed space spec: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: a space needs between 1 and {max} points, got {count}", max = MAX_POINTS)]
    PointCount { line: usize, count: usize },
    #[error("line {line}: duplicate point `{name}`")]
    DuplicatePoint { line: usize, name: String },
    #[error("line {line}: unknown point `{name}`")]
    UnknownPoint { line: usize, name: String },
    #[error("line {line}: not a topology: {violation}")]
    NotTopology {
        line: usize,
        violation: TopologyViolation,
    },
    #[error("line {line}: not an ideal: {violation}")]
    NotIdeal {
        line: usize,
        violation: IdealViolation,
    },
    #[error("line {line}: {error}")]
    Gamma { line: usize, error: GammaError },
    #[error("line {line}: gamma table has no entry for open set {open}")]
    GammaMissing { line: usize, open: String },
    #[error("line {line}: gamma table lists open set {open} twice")]
    GammaDuplicate { line: usize, open: String },
}

impl SpecError {
    /// Stable machine-readable code for the error kind.
    pub fn code(&self) -> &'static str {
        match self {
            SpecError::Syntax { .. } => "syntax",
            SpecError::PointCount { .. } => "point-count",
            SpecError::DuplicatePoint { .. } => "duplicate-point",
            SpecError::UnknownPoint { .. } => "unknown-point",
            SpecError::NotTopology { .. } => "not-topology",
            SpecError::NotIdeal { .. } => "not-ideal",
            SpecError::Gamma {
                error: GammaError::NotExpansive { .. },
                ..
            } => "gamma-not-expansive",
            SpecError::Gamma {
                error: GammaError::NotOpen(_),
                ..
            } => "gamma-not-open",
            SpecError::Gamma {
                error: GammaError::UnknownPreset(_),
                ..
            } => "gamma-unknown-preset",
            SpecError::Gamma { .. } => "gamma-invalid",
            SpecError::GammaMissing { .. } => "gamma-missing",
            SpecError::GammaDuplicate { .. } => "gamma-duplicate",
        }
    }
}

/// A context together with the names of its points, in bit order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedSpace {
    pub names: Vec<String>,
    pub context: SpaceContext,
}

impl NamedSpace {
    /// `a`, `b`, `c`, ... for `n` points.
    pub fn default_names(n: usize) -> Vec<String> {
        (0..n).map(point_name).collect()
    }

    pub fn with_default_names(context: SpaceContext) -> Self {
        NamedSpace {
            names: NamedSpace::default_names(context.n()),
            context,
        }
    }

    pub fn render(&self, set: SubsetMask) -> String {
        render_subset(&self.names, set)
    }

    pub fn names_of(&self, set: SubsetMask) -> Vec<String> {
        set.points().map(|p| self.names[p].clone()).collect()
    }

    /// Parses a comma-separated list of point names; the empty string is ∅.
    pub fn parse_subset(&self, text: &str) -> Result<SubsetMask, String> {
        text.split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .try_fold(SubsetMask::EMPTY, |acc, name| {
                self.names
                    .iter()
                    .position(|n| n == name)
                    .map(|p| acc.union(SubsetMask::singleton(p)))
                    .ok_or_else(|| format!("unknown point `{name}`"))
            })
    }
}

pub fn render_subset(names: &[String], set: SubsetMask) -> String {
    let inner: Vec<&str> = set.points().map(|p| names[p].as_str()).collect();
    format!("{{{}}}", inner.join(","))
}

/// 1-based line of the first occurrence of `"key"`, or 1.
fn line_of(text: &str, key: &str) -> usize {
    let quoted = format!("\"{key}\"");
    text.find(&quoted)
        .map(|at| text[..at].matches('\n').count() + 1)
        .unwrap_or(1)
}

/// Parses and validates a space spec, keeping the point names.
pub fn parse_named_space_spec(text: &str) -> Result<NamedSpace, SpecError> {
    let file: SpaceSpecFile = serde_json::from_str(text).map_err(|e| SpecError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    build(&file, |key| line_of(text, key))
}

/// Parses and validates a space spec.
pub fn parse_space_spec(text: &str) -> Result<SpaceContext, SpecError> {
    parse_named_space_spec(text).map(|named| named.context)
}

impl TryFrom<&SpaceSpecFile> for NamedSpace {
    type Error = SpecError;

    fn try_from(file: &SpaceSpecFile) -> Result<Self, Self::Error> {
        build(file, |_| 0)
    }
}

fn build(file: &SpaceSpecFile, line: impl Fn(&str) -> usize) -> Result<NamedSpace, SpecError> {
    let n = file.points.len();
    if n == 0 || n > MAX_POINTS {
        return Err(SpecError::PointCount {
            line: line("points"),
            count: n,
        });
    }
    for (i, name) in file.points.iter().enumerate() {
        if file.points[..i].contains(name) {
            return Err(SpecError::DuplicatePoint {
                line: line("points"),
                name: name.clone(),
            });
        }
    }
    let mask_of = |names: &[String], key: &str| -> Result<SubsetMask, SpecError> {
        names.iter().try_fold(SubsetMask::EMPTY, |acc, name| {
            file.points
                .iter()
                .position(|p| p == name)
                .map(|p| acc.union(SubsetMask::singleton(p)))
                .ok_or_else(|| SpecError::UnknownPoint {
                    line: line(key),
                    name: name.clone(),
                })
        })
    };

    let opens = file
        .opens
        .iter()
        .map(|o| mask_of(o, "opens"))
        .collect::<Result<Vec<_>, _>>()?;
    let topology = Topology::from_opens(n, opens).map_err(|violation| SpecError::NotTopology {
        line: line("opens"),
        violation,
    })?;

    let ideal = match &file.ideal {
        IdealSpec::Principal { max } => Ideal::principal(n, mask_of(max, "ideal")?),
        IdealSpec::Members { members } => {
            let family = SetFamily::new(
                n,
                members
                    .iter()
                    .map(|m| mask_of(m, "ideal"))
                    .collect::<Result<Vec<_>, _>>()?,
            );
            Ideal::from_family(&family).map_err(|violation| SpecError::NotIdeal {
                line: line("ideal"),
                violation,
            })?
        }
    };

    let gamma_line = line("gamma");
    let gamma = match &file.gamma {
        GammaSpec::Preset(name) => {
            let preset: GammaPreset = name.parse().map_err(|error| SpecError::Gamma {
                line: gamma_line,
                error,
            })?;
            GammaOperation::preset(&topology, preset)
        }
        GammaSpec::Table(entries) => {
            let mut images: Vec<Option<SubsetMask>> = vec![None; topology.opens().len()];
            images[0] = Some(SubsetMask::EMPTY);
            let mut seen = vec![false; images.len()];
            for entry in entries {
                let open = mask_of(&entry.open, "gamma")?;
                let image = mask_of(&entry.image, "gamma")?;
                let slot = topology
                    .opens()
                    .binary_search(&open)
                    .map_err(|_| SpecError::Gamma {
                        line: gamma_line,
                        error: GammaError::NotOpen(open),
                    })?;
                if seen[slot] {
                    return Err(SpecError::GammaDuplicate {
                        line: gamma_line,
                        open: render_subset(&file.points, open),
                    });
                }
                seen[slot] = true;
                images[slot] = Some(image);
            }
            let images = images
                .into_iter()
                .zip(topology.opens())
                .map(|(image, &open)| {
                    image.ok_or_else(|| SpecError::GammaMissing {
                        line: gamma_line,
                        open: render_subset(&file.points, open),
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            GammaOperation::new(&topology, images).map_err(|error| SpecError::Gamma {
                line: gamma_line,
                error,
            })?
        }
    };

    let context =
        SpaceContext::new(topology, ideal, gamma).expect("parts validated against one topology");
    Ok(NamedSpace {
        names: file.points.clone(),
        context,
    })
}

impl From<&NamedSpace> for SpaceSpecFile {
    /// Principal ideal form and an explicit γ table including `γ(∅)`.
    fn from(space: &NamedSpace) -> Self {
        let ctx = &space.context;
        SpaceSpecFile {
            points: space.names.clone(),
            opens: ctx
                .topology()
                .opens()
                .iter()
                .map(|&u| space.names_of(u))
                .collect(),
            ideal: IdealSpec::Principal {
                max: space.names_of(ctx.ideal().maximal()),
            },
            gamma: GammaSpec::Table(
                ctx.gamma()
                    .pairs(ctx.topology())
                    .map(|(open, image)| GammaEntry {
                        open: space.names_of(open),
                        image: space.names_of(image),
                    })
                    .collect(),
            ),
        }
    }
}

/// The space-spec file of a context, with default point names.
pub fn export_space_spec(ctx: &SpaceContext) -> SpaceSpecFile {
    SpaceSpecFile::from(&NamedSpace::with_default_names(ctx.clone()))
}

impl Serialize for SpaceContext {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        export_space_spec(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SpaceContext {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let file = SpaceSpecFile::deserialize(deserializer)?;
        NamedSpace::try_from(&file)
            .map(|named| named.context)
            .map_err(serde::de::Error::custom)
    }
}
