//! Hunts witnesses against the converses of the pre-γ-I-open chain and
//! prints each one as a space-spec file.
//!
//! cargo run --release --example hunt_converse

use idealtop::hunt::{hunt, HuntBounds, Query};
use idealtop::spacefile::NamedSpace;
use idealtop::{GammaMode, SetClass};

fn main() {
    use SetClass::*;
    let converses = [
        (PreGammaIOpen, GammaOpen),
        (PreGammaOpen, PreGammaIOpen),
        (PreIOpen, PreGammaIOpen),
        (GammaPreopen, PreGammaIOpen),
        (GammaPOpen, PreGammaIOpen),
    ];
    for (from, to) in converses {
        let q = Query::new(&[from], &[to], &[], HuntBounds::new(3, GammaMode::Full))
            .expect("valid query");
        match hunt(&q).expect("within budget") {
            Some(w) => {
                let named = NamedSpace::with_default_names(w.context.clone());
                println!(
                    "{} ⇏ {}: n = {}, A = {}",
                    from.label(),
                    to.label(),
                    w.position.n,
                    named.render(w.subset)
                );
                println!(
                    "{}",
                    serde_json::to_string(&idealtop::export_space_spec(&w.context)).unwrap()
                );
            }
            None => println!("{} ⇒ {} holds up to n = 3", from.label(), to.label()),
        }
    }
}
