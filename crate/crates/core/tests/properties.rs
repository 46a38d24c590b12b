//! Randomized checks on spaces with up to four points and arbitrary γ
//! tables, including the four-point operations that no exhaustive scan
//! reaches.

mod common;

use common::Oracle;
use idealtop::theorems::builtin_theorems;
use idealtop::{
    classify, enumerate_topologies, export_space_spec, GammaOperation, Ideal, NamedSpace, SetClass,
    SpaceContext, SubsetMask, Topology,
};
use proptest::prelude::*;
use std::sync::OnceLock;

fn topologies(n: usize) -> &'static [Topology] {
    static CACHE: OnceLock<Vec<Vec<Topology>>> = OnceLock::new();
    &CACHE.get_or_init(|| (0..=4).map(|n| enumerate_topologies(n).unwrap()).collect())[n]
}

/// A random context: any topology, any ideal, and γ(V) = V ∪ noise.
fn space() -> impl Strategy<Value = SpaceContext> {
    prop_oneof![1 => 1usize..=3, 3 => Just(4usize)]
        .prop_flat_map(|n| {
            (
                Just(n),
                0..topologies(n).len(),
                any::<u16>(),
                prop::collection::vec(any::<u16>(), 16),
            )
        })
        .prop_map(|(n, t, ideal_bits, noise)| {
            let topology = topologies(n)[t].clone();
            let whole = SubsetMask::full(n).bits();
            let images = topology
                .opens()
                .iter()
                .zip(noise)
                .map(|(v, extra)| SubsetMask::from_bits(v.bits() | (extra & whole)))
                .collect();
            let gamma = GammaOperation::new(&topology, images).unwrap();
            let ideal = Ideal::principal(n, SubsetMask::from_bits(ideal_bits & whole));
            SpaceContext::new(topology, ideal, gamma).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn tables_agree_with_oracle(ctx in space()) {
        let o = Oracle::of(&ctx);
        for a in o.subsets() {
            let m = SubsetMask::from_bits(a);
            prop_assert_eq!(ctx.interior(m).bits(), o.interior(a));
            prop_assert_eq!(ctx.closure(m).bits(), o.closure(a));
            prop_assert_eq!(ctx.local_function(m).bits(), o.local(a));
            prop_assert_eq!(ctx.star_closure(m).bits(), o.star_closure(a));
            prop_assert_eq!(ctx.star_interior(m).bits(), o.star_interior(a));
            prop_assert_eq!(ctx.is_gamma_open(m), o.is_gamma_open(a));
            prop_assert_eq!(ctx.tau_gamma_int(m).bits(), o.gamma_interior(a));
            prop_assert_eq!(ctx.tau_gamma_cl(m).bits(), o.gamma_closure(a));
        }
        prop_assert_eq!(ctx.is_gamma_regular_space(), o.is_gamma_regular());
        prop_assert_eq!(ctx.is_star_extremally_disconnected(), o.is_star_extremally_disconnected());
    }

    #[test]
    fn class_definitions_agree_with_oracle(ctx in space()) {
        let o = Oracle::of(&ctx);
        for a in o.subsets() {
            let flags = classify(&ctx, SubsetMask::from_bits(a)).flags;
            let star = o.star_closure(a);
            prop_assert_eq!(flags.contains(SetClass::PreGammaIOpen), a & !o.gamma_interior(star) == 0);
            prop_assert_eq!(flags.contains(SetClass::PreIOpen), a & !o.interior(star) == 0);
            prop_assert_eq!(flags.contains(SetClass::PreGammaOpen), a & !o.gamma_interior(o.closure(a)) == 0);
            prop_assert_eq!(
                flags.contains(SetClass::GammaPreopen),
                a & !o.gamma_interior(o.gamma_closure(a)) == 0
            );
            prop_assert_eq!(flags.contains(SetClass::GammaPOpen), a & !o.interior(o.gamma_closure(a)) == 0);
            prop_assert_eq!(flags.contains(SetClass::WeaklyILocalClosed), o.is_weakly_i_local_closed(a));
            let complement = o.whole() & !a;
            prop_assert_eq!(
                flags.contains(SetClass::PreGammaIClosed),
                complement & !o.gamma_interior(o.star_closure(complement)) == 0
            );
        }
    }

    #[test]
    fn roster_holds_in_random_spaces(ctx in space()) {
        let n = ctx.n();
        for spec in builtin_theorems() {
            let subjects: Vec<Vec<SubsetMask>> = match spec.law.arity() {
                0 => vec![vec![]],
                1 => SubsetMask::all(n).map(|a| vec![a]).collect(),
                _ => SubsetMask::all(n)
                    .flat_map(|a| SubsetMask::all(n).map(move |b| vec![a, b]))
                    .collect(),
            };
            for s in subjects {
                prop_assert!(!spec.violated_at(&ctx, &s), "{} fails at {:?} in {}", spec.id, s,
                    serde_json::to_string(&ctx).unwrap());
            }
        }
    }

    #[test]
    fn space_file_round_trip(ctx in space()) {
        let file = export_space_spec(&ctx);
        let text = serde_json::to_string_pretty(&file).unwrap();
        let back = idealtop::parse_space_spec(&text).unwrap();
        prop_assert_eq!(&back, &ctx);
        let named = NamedSpace::with_default_names(ctx.clone());
        prop_assert_eq!(idealtop::SpaceSpecFile::from(&named), file);
    }
}
