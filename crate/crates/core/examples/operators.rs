//! Computes the basic operators on a small ideal space.
//!
//! cargo run --example operators

use idealtop::{GammaOperation, GammaPreset, Ideal, SpaceContext, SubsetMask, Topology};

fn main() {
    // X = {a,b,c}, τ = {∅, {a}, {a,b}, X}, I = P({b}), γ = Int∘Cl.
    let n = 3;
    let m = |pts: &[usize]| SubsetMask::from_points(pts.iter().copied());
    let topology =
        Topology::from_opens(n, [m(&[]), m(&[0]), m(&[0, 1]), m(&[0, 1, 2])]).expect("a topology");
    let gamma = GammaOperation::preset(&topology, GammaPreset::IntClosure);
    let ctx =
        SpaceContext::new(topology, Ideal::principal(n, m(&[1])), gamma).expect("same ground set");

    println!(
        "{:<8} {:>8} {:>8} {:>8} {:>8} {:>8} {:>10}",
        "A", "Int", "Cl", "A*", "Cl*", "Int*", "τ_γ-Int"
    );
    for a in SubsetMask::all(n) {
        println!(
            "{:<8} {:>8} {:>8} {:>8} {:>8} {:>8} {:>10}",
            a.to_string(),
            ctx.interior(a).to_string(),
            ctx.closure(a).to_string(),
            ctx.local_function(a).to_string(),
            ctx.star_closure(a).to_string(),
            ctx.star_interior(a).to_string(),
            ctx.tau_gamma_int(a).to_string(),
        );
    }
    let tau_gamma: Vec<String> = ctx
        .tau_gamma()
        .members()
        .iter()
        .map(|s| s.to_string())
        .collect();
    println!("τ_γ = {{{}}}", tau_gamma.join(", "));
    println!("γ-regular: {}", ctx.is_gamma_regular_space());
    println!("regular operation: {}", ctx.is_regular_operation());
    println!(
        "*-extremally disconnected: {}",
        ctx.is_star_extremally_disconnected()
    );
    println!("submaximal: {}", ctx.is_submaximal());
}
