//! The implication atlas over three points with every γ.

use idealtop::atlas::{build_atlas, export_atlas, parse_atlas, AtlasMatrix, CellStatus};
use idealtop::hunt::HuntBounds;
use idealtop::{GammaMode, SetClass, SpaceProperty};
use std::sync::OnceLock;
use SetClass::*;

fn atlas() -> &'static AtlasMatrix {
    static ATLAS: OnceLock<AtlasMatrix> = OnceLock::new();
    ATLAS.get_or_init(|| build_atlas(&[], HuntBounds::new(3, GammaMode::Full)).unwrap())
}

fn implied(m: &AtlasMatrix, from: SetClass, to: SetClass) -> Option<&str> {
    match &m.cell(from, to).status {
        CellStatus::Implied { citation } => Some(citation),
        _ => None,
    }
}

fn refuted(m: &AtlasMatrix, from: SetClass, to: SetClass) -> bool {
    matches!(m.cell(from, to).status, CellStatus::Refuted { .. })
}

#[test]
fn every_citation_is_confirmed_by_the_scan() {
    let m = atlas();
    assert!(
        m.citation_conflicts.is_empty(),
        "{:?}",
        m.citation_conflicts
    );
    assert!(!m
        .cells
        .iter()
        .any(|c| matches!(c.status, CellStatus::BudgetExhausted { .. })));
}

#[test]
fn chain_pattern_with_all_converses_refuted() {
    let m = atlas();
    assert_eq!(
        implied(m, GammaOpen, PreGammaIOpen),
        Some("gamma-open-is-pre-gamma-i-open")
    );
    assert!(refuted(m, PreGammaIOpen, GammaOpen));
    for weaker in [PreGammaOpen, PreIOpen, GammaPreopen, GammaPOpen] {
        assert!(implied(m, PreGammaIOpen, weaker).is_some(), "{weaker}");
        assert!(refuted(m, weaker, PreGammaIOpen), "{weaker}");
    }
}

#[test]
fn diagonal_is_reflexive() {
    for c in SetClass::ALL {
        assert_eq!(implied(atlas(), c, c), Some("reflexive"));
    }
}

#[test]
fn refuted_cells_survive_export() {
    let m = atlas();
    let json = export_atlas(m, "json").unwrap();
    assert_eq!(&parse_atlas(&json).unwrap(), m);
    let dot = String::from_utf8(export_atlas(m, "dot").unwrap()).unwrap();
    assert!(dot.contains("PRE_GAMMA_I_OPEN -> PRE_I_OPEN [style=solid, label=\"pre-gamma-i-open-is-pre-i-open\\nconverse refuted\"]"));
    assert_eq!(
        export_atlas(m, "dot").unwrap(),
        export_atlas(m, "dot").unwrap()
    );
}

#[test]
fn constraints_give_a_separate_matrix() {
    let regular = build_atlas(
        &[SpaceProperty::GammaRegular],
        HuntBounds::new(3, GammaMode::Full),
    )
    .unwrap();
    assert!(implied(&regular, Open, PreGammaIOpen).is_some());
    assert!(implied(&regular, PreIOpen, PreGammaIOpen).is_some());
    assert!(refuted(atlas(), Open, PreGammaIOpen));
    assert!(regular.citation_conflicts.is_empty());
}
