#![allow(dead_code)]

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use itertools::Itertools;
use minsep::bounded::{enumerate_bounded, BoundedContext};
use minsep::gen::gen_random;
use minsep::graph::{Graph, Separator};
use minsep::hardness::SetCoverInstance;
use minsep::takata::{enumerate_all, EnumContext, SearchObserver, SearchStats, TakataNode};

pub const PROBS: [f64; 3] = [0.2, 0.4, 0.6];

/// 540 seeded random graphs: every n in 4..=9 and every probability, 30 seeds each.
pub fn corpus() -> Vec<Graph> {
    (0..540u64)
        .map(|i| {
            let n = 4 + (i / 3 % 6) as usize;
            let prob = PROBS[(i % 3) as usize];
            gen_random(n, prob, i)
        })
        .collect()
}

/// Ordered pairs of distinct, non-adjacent vertices.
pub fn nonadjacent_pairs(g: &Graph) -> Vec<(usize, usize)> {
    (0..g.n())
        .cartesian_product(0..g.n())
        .filter(|&(a, b)| a != b && !g.has_edge(a, b))
        .collect()
}

/// Runs a stream and checks it for duplicates; returns the emitted set.
pub fn collect_unique(
    run: impl FnOnce(&mut dyn FnMut(&Separator) -> ControlFlow<()>) -> SearchStats,
) -> (BTreeSet<Separator>, usize, SearchStats) {
    let mut out = Vec::new();
    let stats = run(&mut |s: &Separator| {
        out.push(s.clone());
        ControlFlow::Continue(())
    });
    let len = out.len();
    (out.into_iter().collect(), len, stats)
}

pub fn bounded_set(g: &Graph, a: usize, b: usize, k: usize) -> (BTreeSet<Separator>, usize) {
    let ctx = EnumContext::new(g, a, b).unwrap();
    let (set, len, _) = collect_unique(|sink| enumerate_bounded(BoundedContext::new(ctx, k), sink));
    (set, len)
}

pub fn unbounded_set(g: &Graph, a: usize, b: usize) -> (BTreeSet<Separator>, usize) {
    let ctx = EnumContext::new(g, a, b).unwrap();
    let (set, len, _) = collect_unique(|sink| enumerate_all(&ctx, sink));
    (set, len)
}

/// Records every visit and branch of a search.
#[derive(Default)]
pub struct Recorder {
    pub visits: Vec<(TakataNode, bool)>,
    pub branches: Vec<(TakataNode, Option<TakataNode>, TakataNode)>,
}

impl SearchObserver for Recorder {
    fn visit(&mut self, node: &TakataNode, nonempty: bool) {
        self.visits.push((node.clone(), nonempty));
    }

    fn branch(
        &mut self,
        parent: &TakataNode,
        _v: usize,
        left: Option<&TakataNode>,
        right: &TakataNode,
    ) {
        self.branches
            .push((parent.clone(), left.cloned(), right.clone()));
    }
}

/// Families of at most four distinct subsets of a universe of at most five
/// elements, one representative per orbit under relabeling the universe,
/// with every budget up to the family size.
pub fn set_cover_corpus() -> Vec<SetCoverInstance> {
    let mut out = Vec::new();
    for u in 0..=5usize {
        let perms: Vec<Vec<usize>> = (0..u).permutations(u).collect();
        for f in 0..=4usize {
            let mut seen = BTreeSet::new();
            for family in (0u32..1 << u).combinations(f) {
                let canon = perms
                    .iter()
                    .map(|p| {
                        let mut fam: Vec<u32> = family
                            .iter()
                            .map(|&m| {
                                (0..u)
                                    .filter(|&e| m >> e & 1 == 1)
                                    .map(|e| 1u32 << p[e])
                                    .sum()
                            })
                            .collect();
                        fam.sort_unstable();
                        fam
                    })
                    .min()
                    .unwrap();
                if !seen.insert(canon.clone()) {
                    continue;
                }
                let sets: Vec<Vec<usize>> = canon
                    .iter()
                    .map(|&m| (0..u).filter(|&e| m >> e & 1 == 1).map(|e| e + 1).collect())
                    .collect();
                for k in 0..=f {
                    out.push(SetCoverInstance::new((1..=u).collect(), sets.clone(), k).unwrap());
                }
            }
        }
    }
    out
}
