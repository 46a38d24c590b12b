//! Counts the spaces the exhaustive scans walk through.
//!
//! cargo run --release --example enumerate_universe

use idealtop::gamma::count_gammas;
use idealtop::ideal::enumerate_ideals;
use idealtop::{enumerate_topologies, Bounds, GammaMode, Universe};

fn main() {
    for n in 0..=5 {
        let topologies = enumerate_topologies(n).expect("n ≤ 5");
        let gammas: u64 = topologies
            .iter()
            .map(count_gammas)
            .fold(0, u64::saturating_add);
        println!(
            "n = {n}: {:>5} topologies, {:>3} ideals, {gammas:>20} γ operations",
            topologies.len(),
            enumerate_ideals(n).len()
        );
    }
    for (n, mode) in [(3, GammaMode::Full), (4, GammaMode::Presets)] {
        let u = Universe::new(Bounds::new(n, mode)).expect("within budget");
        println!("universe n = {n}, {mode}: {} contexts", u.total_contexts());
    }
}
