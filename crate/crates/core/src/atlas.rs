//! The implication matrix over all twenty set classes.
//!
//! A cell `(from, to)` records whether every `from` set is a `to` set:
//! implied by a roster claim, refuted by a witness, or unrefuted within the
//! scanned bounds. Each constraint set gets its own matrix.

use crate::classes::{classify_all, SetClass};
use crate::hunt::{HuntBounds, HuntError, Witness};
use crate::mask::SubsetMask;
use crate::theorems::{builtin_theorems, Atom, Law};
use crate::universe::{satisfies, Position, SpaceProperty, Universe};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use thiserror::Error;

pub const ATLAS_SCHEMA_VERSION: u32 = 1;

const CLASSES: usize = SetClass::ALL.len();

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum CellStatus {
    /// A roster claim (or reflexivity) asserts the implication.
    Implied {
        citation: String,
    },
    /// No counterexample within the bounds.
    Unrefuted,
    Refuted {
        witness: Box<Witness>,
    },
    /// The universe at `n` exceeded the budget before a witness turned up.
    BudgetExhausted {
        n: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtlasCell {
    pub from: SetClass,
    pub to: SetClass,
    #[serde(flatten)]
    pub status: CellStatus,
}

/// A cited implication that the scan nonetheless refuted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CitationConflict {
    pub from: SetClass,
    pub to: SetClass,
    pub citation: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtlasMatrix {
    pub schema_version: u32,
    pub constraints: Vec<SpaceProperty>,
    pub bounds: HuntBounds,
    pub classes: Vec<SetClass>,
    /// Row-major over `classes × classes`.
    pub cells: Vec<AtlasCell>,
    pub citation_conflicts: Vec<CitationConflict>,
}

impl AtlasMatrix {
    pub fn cell(&self, from: SetClass, to: SetClass) -> &AtlasCell {
        &self.cells[from.index() * CLASSES + to.index()]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum AtlasError {
    #[error("unknown atlas format `{0}` (expected dot or json)")]
    UnknownFormat(String),
    #[error("malformed atlas JSON: {0}")]
    Json(String),
    #[error("atlas cells do not cover the class catalog in order")]
    Shape,
    #[error("witness for {from} -> {to} does not re-verify")]
    WitnessRejected { from: SetClass, to: SetClass },
    #[error(transparent)]
    Hunt(#[from] HuntError),
}

/// The first roster claim, valid under `constraints`, that states
/// `from ⇒ to` about single classes.
pub fn citation(from: SetClass, to: SetClass, constraints: &[SpaceProperty]) -> Option<String> {
    if from == to {
        return Some("reflexive".to_string());
    }
    let single = |atoms: &[Atom], c: SetClass| atoms == [Atom::Class(c)];
    builtin_theorems()
        .into_iter()
        .filter(|t| t.hypotheses.iter().all(|h| constraints.contains(h)))
        .find(|t| match &t.law {
            Law::Implies { given, then } => single(given, from) && then.contains(&Atom::Class(to)),
            Law::Iff { left, right } => {
                (single(left, from) && single(right, to))
                    || (single(left, to) && single(right, from))
            }
            _ => false,
        })
        .map(|t| t.id)
}

type Hits = Vec<Option<(Position, SubsetMask)>>;

/// Fills every ordered pair of classes: citations first, then one canonical
/// scan over `n = 1..=n_max` that looks for a witness to every cell at once.
pub fn build_atlas(
    constraints: &[SpaceProperty],
    bounds: HuntBounds,
) -> Result<AtlasMatrix, AtlasError> {
    let mut hits: Hits = vec![None; CLASSES * CLASSES];
    let mut exhausted_at = None;
    let mut universes = Vec::new();
    for n in 1..=bounds.n_max {
        match Universe::new(bounds.at(n)) {
            Ok(u) => universes.push(u),
            Err(_) => {
                exhausted_at = Some(n);
                break;
            }
        };
        let universe = universes.last().expect("just pushed");
        let open: Vec<bool> = (0..CLASSES * CLASSES)
            .map(|k| hits[k].is_none() && k / CLASSES != k % CLASSES)
            .collect();
        let shards = universe.map_topologies(|topology| {
            let mut found: Hits = vec![None; CLASSES * CLASSES];
            universe.for_each_context(topology, |position, ctx| {
                if !satisfies(&ctx, constraints) {
                    return;
                }
                for (a, vector) in classify_all(&ctx).into_iter().enumerate() {
                    for from in vector.flags.iter() {
                        for to in SetClass::ALL
                            .into_iter()
                            .filter(|&c| !vector.flags.contains(c))
                        {
                            let k = from.index() * CLASSES + to.index();
                            if open[k] && found[k].is_none() {
                                found[k] = Some((position, SubsetMask::from_bits(a as u16)));
                            }
                        }
                    }
                }
            });
            found
        });
        for k in 0..hits.len() {
            if open[k] {
                hits[k] = shards.iter().find_map(|s| s[k]);
            }
        }
    }

    let mut cells = Vec::with_capacity(CLASSES * CLASSES);
    let mut citation_conflicts = Vec::new();
    for from in SetClass::ALL {
        for to in SetClass::ALL {
            let cited = citation(from, to, constraints);
            let status = match hits[from.index() * CLASSES + to.index()] {
                Some((position, subset)) => {
                    let context = universes[position.n - 1].context_at(position);
                    let witness = Witness::evaluate_single(position, context, subset, from, to);
                    if !witness.recheck() {
                        return Err(HuntError::EngineDefect(position).into());
                    }
                    if let Some(citation) = cited {
                        citation_conflicts.push(CitationConflict { from, to, citation });
                    }
                    CellStatus::Refuted {
                        witness: Box::new(witness),
                    }
                }
                None => match (cited, exhausted_at) {
                    (Some(citation), _) => CellStatus::Implied { citation },
                    (None, Some(n)) => CellStatus::BudgetExhausted { n },
                    (None, None) => CellStatus::Unrefuted,
                },
            };
            cells.push(AtlasCell { from, to, status });
        }
    }
    Ok(AtlasMatrix {
        schema_version: ATLAS_SCHEMA_VERSION,
        constraints: constraints.to_vec(),
        bounds,
        classes: SetClass::ALL.to_vec(),
        cells,
        citation_conflicts,
    })
}

fn dot(m: &AtlasMatrix) -> String {
    let mut out = String::from("digraph atlas {\n  node [shape=box];\n");
    for c in &m.classes {
        let _ = writeln!(out, "  {} [label=\"{}\"];", c.tag(), c.label());
    }
    for cell in m.cells.iter().filter(|c| c.from != c.to) {
        match &cell.status {
            CellStatus::Implied { citation } => {
                let converse = &m.cell(cell.to, cell.from).status;
                let label = if matches!(converse, CellStatus::Refuted { .. }) {
                    format!("{citation}\\nconverse refuted")
                } else {
                    citation.clone()
                };
                let _ = writeln!(
                    out,
                    "  {} -> {} [style=solid, label=\"{label}\"];",
                    cell.from.tag(),
                    cell.to.tag()
                );
            }
            CellStatus::Unrefuted => {
                let _ = writeln!(
                    out,
                    "  {} -> {} [style=dashed];",
                    cell.from.tag(),
                    cell.to.tag()
                );
            }
            CellStatus::Refuted { .. } | CellStatus::BudgetExhausted { .. } => {}
        }
    }
    out.push_str("}\n");
    out
}

/// Serializes the matrix as `json` or `dot`.
pub fn export_atlas(m: &AtlasMatrix, format: &str) -> Result<Vec<u8>, AtlasError> {
    match format {
        "json" => {
            let mut bytes =
                serde_json::to_vec_pretty(m).map_err(|e| AtlasError::Json(e.to_string()))?;
            bytes.push(b'\n');
            Ok(bytes)
        }
        "dot" => Ok(dot(m).into_bytes()),
        other => Err(AtlasError::UnknownFormat(other.to_string())),
    }
}

/// Reads a JSON export back, re-verifying every embedded witness.
pub fn parse_atlas(bytes: &[u8]) -> Result<AtlasMatrix, AtlasError> {
    let m: AtlasMatrix =
        serde_json::from_slice(bytes).map_err(|e| AtlasError::Json(e.to_string()))?;
    let in_order = m.classes == SetClass::ALL
        && m.cells.len() == CLASSES * CLASSES
        && m.cells.iter().enumerate().all(|(k, c)| {
            c.from == SetClass::ALL[k / CLASSES] && c.to == SetClass::ALL[k % CLASSES]
        });
    if !in_order {
        return Err(AtlasError::Shape);
    }
    for cell in &m.cells {
        if let CellStatus::Refuted { witness } = &cell.status {
            let matches_cell = witness.source_flags.keys().eq([&cell.from])
                && witness.target_flags.keys().eq([&cell.to]);
            if !matches_cell || !witness.recheck() {
                return Err(AtlasError::WitnessRejected {
                    from: cell.from,
                    to: cell.to,
                });
            }
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma::GammaMode;
    use SetClass::*;

    fn atlas_n2() -> AtlasMatrix {
        build_atlas(&[], HuntBounds::new(2, GammaMode::Full)).unwrap()
    }

    #[test]
    fn citations_respect_hypotheses() {
        assert_eq!(
            citation(GammaOpen, PreGammaIOpen, &[]).as_deref(),
            Some("gamma-open-is-pre-gamma-i-open")
        );
        assert_eq!(citation(Open, PreGammaIOpen, &[]), None);
        assert!(citation(Open, PreGammaIOpen, &[SpaceProperty::GammaRegular]).is_some());
        assert_eq!(citation(Open, Open, &[]).as_deref(), Some("reflexive"));
    }

    #[test]
    fn small_atlas_is_consistent() {
        let m = atlas_n2();
        assert_eq!(m.cells.len(), 400);
        assert!(m.citation_conflicts.is_empty());
        for c in SetClass::ALL {
            assert!(matches!(m.cell(c, c).status, CellStatus::Implied { .. }));
        }
        assert!(matches!(
            m.cell(GammaOpen, Open).status,
            CellStatus::Implied { .. }
        ));
    }

    #[test]
    fn json_round_trip_and_dot_shape() {
        let m = atlas_n2();
        let json = export_atlas(&m, "json").unwrap();
        assert_eq!(parse_atlas(&json).unwrap(), m);
        let dot = String::from_utf8(export_atlas(&m, "dot").unwrap()).unwrap();
        assert_eq!(
            dot.lines()
                .filter(|l| l.contains("[label=") && !l.contains("->"))
                .count(),
            20
        );
        assert!(matches!(
            export_atlas(&m, "svg"),
            Err(AtlasError::UnknownFormat(_))
        ));
    }

    #[test]
    fn tampered_export_is_rejected() {
        let m = atlas_n2();
        let k = m
            .cells
            .iter()
            .position(|c| matches!(c.status, CellStatus::Refuted { .. }))
            .expect("some refuted cell at n = 2");
        let mut bad = m.clone();
        if let CellStatus::Refuted { witness } = &mut bad.cells[k].status {
            let flag = witness.target_flags.values_mut().next().unwrap();
            *flag = true;
        }
        let json = export_atlas(&bad, "json").unwrap();
        assert!(matches!(
            parse_atlas(&json),
            Err(AtlasError::WitnessRejected { .. })
        ));
    }

    #[test]
    fn budget_exhaustion_is_recorded_per_cell() {
        let m = build_atlas(&[], HuntBounds::new(4, GammaMode::Full)).unwrap();
        assert!(m
            .cells
            .iter()
            .any(|c| matches!(c.status, CellStatus::BudgetExhausted { n: 4 })));
        assert!(matches!(
            m.cell(PreGammaIOpen, GammaOpen).status,
            CellStatus::Refuted { .. }
        ));
    }
}
