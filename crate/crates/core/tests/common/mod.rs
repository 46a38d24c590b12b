//! Brute-force oracles that recompute every operator straight from its
//! definition, sharing nothing with the engine beyond the raw data of a
//! space: its open sets, the maximal member of its ideal and the γ table.

#![allow(dead_code)]

use idealtop::{Bounds, GammaMode, SpaceContext, Universe};

pub struct Oracle {
    pub n: usize,
    pub opens: Vec<u16>,
    pub ideal_max: u16,
    pub gamma: Vec<(u16, u16)>,
}

fn subset(a: u16, b: u16) -> bool {
    a & !b == 0
}

impl Oracle {
    pub fn of(ctx: &SpaceContext) -> Self {
        let topology = ctx.topology();
        Oracle {
            n: ctx.n(),
            opens: topology.opens().iter().map(|o| o.bits()).collect(),
            ideal_max: ctx.ideal().maximal().bits(),
            gamma: ctx
                .gamma()
                .pairs(topology)
                .map(|(v, g)| (v.bits(), g.bits()))
                .collect(),
        }
    }

    pub fn whole(&self) -> u16 {
        ((1u32 << self.n) - 1) as u16
    }

    pub fn subsets(&self) -> impl Iterator<Item = u16> {
        0..=self.whole()
    }

    pub fn is_open(&self, a: u16) -> bool {
        self.opens.contains(&a)
    }

    pub fn is_closed(&self, a: u16) -> bool {
        self.is_open(self.whole() & !a)
    }

    pub fn interior(&self, a: u16) -> u16 {
        self.opens
            .iter()
            .filter(|&&o| subset(o, a))
            .fold(0, |acc, &o| acc | o)
    }

    pub fn closure(&self, a: u16) -> u16 {
        self.opens
            .iter()
            .map(|&o| self.whole() & !o)
            .filter(|&c| subset(a, c))
            .fold(self.whole(), |acc, c| acc & c)
    }

    pub fn in_ideal(&self, a: u16) -> bool {
        subset(a, self.ideal_max)
    }

    /// Points whose every open neighbourhood meets `a` outside the ideal.
    pub fn local(&self, a: u16) -> u16 {
        (0..self.n)
            .filter(|&x| {
                self.opens
                    .iter()
                    .filter(|&&o| o >> x & 1 == 1)
                    .all(|&o| !self.in_ideal(o & a))
            })
            .fold(0, |acc, x| acc | 1 << x)
    }

    pub fn star_closure(&self, a: u16) -> u16 {
        a | self.local(a)
    }

    pub fn star_interior(&self, a: u16) -> u16 {
        self.whole() & !self.star_closure(self.whole() & !a)
    }

    pub fn is_star_closed(&self, a: u16) -> bool {
        self.star_closure(a) == a
    }

    fn gamma_of(&self, open: u16) -> u16 {
        self.gamma
            .iter()
            .find(|&&(v, _)| v == open)
            .map(|&(_, g)| g)
            .unwrap()
    }

    pub fn is_gamma_open(&self, a: u16) -> bool {
        (0..self.n).filter(|&x| a >> x & 1 == 1).all(|x| {
            self.opens
                .iter()
                .any(|&o| o >> x & 1 == 1 && subset(self.gamma_of(o), a))
        })
    }

    pub fn tau_gamma(&self) -> Vec<u16> {
        self.subsets().filter(|&a| self.is_gamma_open(a)).collect()
    }

    pub fn gamma_interior(&self, a: u16) -> u16 {
        self.tau_gamma()
            .into_iter()
            .filter(|&g| subset(g, a))
            .fold(0, |acc, g| acc | g)
    }

    pub fn gamma_closure(&self, a: u16) -> u16 {
        self.whole() & !self.gamma_interior(self.whole() & !a)
    }

    /// Every open neighbourhood of every point contains the γ-image of
    /// some smaller open neighbourhood.
    pub fn is_gamma_regular(&self) -> bool {
        (0..self.n).all(|x| {
            let around: Vec<u16> = self
                .opens
                .iter()
                .copied()
                .filter(|&o| o >> x & 1 == 1)
                .collect();
            around
                .iter()
                .all(|&v| around.iter().any(|&u| subset(self.gamma_of(u), v)))
        })
    }

    /// The star closure of every open set is open.
    pub fn is_star_extremally_disconnected(&self) -> bool {
        self.opens
            .iter()
            .all(|&o| self.is_open(self.star_closure(o)))
    }

    /// `a = U ∩ K` for an open `U` and a star-closed `K`.
    pub fn is_weakly_i_local_closed(&self, a: u16) -> bool {
        let star_closed: Vec<u16> = self.subsets().filter(|&k| self.is_star_closed(k)).collect();
        self.opens
            .iter()
            .any(|&u| star_closed.iter().any(|&k| u & k == a))
    }
}

/// Calls `visit` on every context of the universe at `n`.
pub fn for_each_space(n: usize, mode: GammaMode, mut visit: impl FnMut(&SpaceContext)) {
    let universe = Universe::new(Bounds::new(n, mode)).expect("universe within budget");
    for t in 0..universe.topologies().len() {
        universe.for_each_context(t, |_, ctx| visit(&ctx));
    }
}

/// Naive topology count: every family of subsets containing ∅ and X,
/// kept when closed under pairwise unions and intersections.
pub fn count_topologies_naively(n: usize) -> usize {
    let whole = ((1u32 << n) - 1) as u16;
    let middle: Vec<u16> = (1..whole).collect();
    let mut count = 0;
    for choice in 0u32..(1u32 << middle.len()) {
        let mut family = vec![0u16, whole];
        family.extend(
            middle
                .iter()
                .enumerate()
                .filter(|(i, _)| choice >> i & 1 == 1)
                .map(|(_, &s)| s),
        );
        let closed = family.iter().all(|&a| {
            family
                .iter()
                .all(|&b| family.contains(&(a | b)) && family.contains(&(a & b)))
        });
        if n == 0 || closed {
            count += 1;
        }
        if n == 0 {
            break;
        }
    }
    count
}

/// Naive ideal count: nonempty families closed under subsets and unions.
pub fn count_ideals_naively(n: usize) -> usize {
    let sets = 1usize << n;
    (1u64..(1u64 << sets))
        .filter(|&family| {
            let has = |s: usize| family >> s & 1 == 1;
            (0..sets)
                .filter(|&a| has(a))
                .all(|a| (0..sets).all(|b| (!has(b) || has(a | b)) && (b & !a != 0 || has(b))))
        })
        .count()
}
