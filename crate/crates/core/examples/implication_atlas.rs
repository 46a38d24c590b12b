//! Builds the class implication matrix and prints it as a grid, or as DOT
//! with `dot` as the first argument.
//!
//! cargo run --release --example implication_atlas [dot]

use idealtop::atlas::{build_atlas, export_atlas, CellStatus};
use idealtop::hunt::HuntBounds;
use idealtop::{GammaMode, SetClass};

fn main() {
    let m = build_atlas(&[], HuntBounds::new(3, GammaMode::Full)).expect("atlas");
    if std::env::args().nth(1).as_deref() == Some("dot") {
        print!(
            "{}",
            String::from_utf8(export_atlas(&m, "dot").unwrap()).unwrap()
        );
        return;
    }
    // Rows imply columns: = reflexive, ⇒ cited, ? unrefuted, · refuted.
    print!("{:>4}", "");
    for j in 0..SetClass::ALL.len() {
        print!("{j:>3}");
    }
    println!();
    for from in SetClass::ALL {
        print!("{:>4}", from.index());
        for to in SetClass::ALL {
            let mark = match &m.cell(from, to).status {
                CellStatus::Implied { citation } if citation == "reflexive" => "=",
                CellStatus::Implied { .. } => "⇒",
                CellStatus::Unrefuted => "?",
                CellStatus::Refuted { .. } => "·",
                CellStatus::BudgetExhausted { .. } => "!",
            };
            print!("{mark:>3}");
        }
        println!("  {}", from.label());
    }
}
