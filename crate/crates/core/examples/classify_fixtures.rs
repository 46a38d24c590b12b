//! Prints the membership facts of the bundled fixtures and the full class
//! vector of each subset they talk about.
//!
//! cargo run --example classify_fixtures

use idealtop::{check_fixtures, classify, Fixture, NamedSpace, SetClass, SubsetMask};

fn main() {
    for check in check_fixtures() {
        let mark = if check.passed { "ok " } else { "BAD" };
        println!("{mark} {:<40} {}", check.fixture.name(), check.assertion);
    }
    println!();
    let fixture = Fixture::PreGammaIOpenNotMeetClosed;
    let named = NamedSpace::with_default_names(fixture.context());
    println!("{}:", fixture.name());
    for a in SubsetMask::all(named.context.n()) {
        let flags = classify(&named.context, a).flags;
        let classes: Vec<&str> = SetClass::ALL
            .into_iter()
            .filter(|&c| flags.contains(c))
            .map(SetClass::label)
            .collect();
        println!("  {:<8} {}", named.render(a), classes.join(", "));
    }
}
