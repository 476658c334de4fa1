mod common;

use std::ops::ControlFlow;

use common::{bounded_set, nonadjacent_pairs, unbounded_set, Recorder, PROBS};
use minsep::bounded::{
    delta_k_witness, enumerate_bounded, enumerate_bounded_observed, BoundedContext, EnumSession,
};
use minsep::gen::gen_random;
use minsep::graph::{Graph, Separator};
use minsep::oracle::{brute_delta, brute_minimal_separators};
use minsep::takata::EnumContext;
use proptest::prelude::*;

fn random_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (4..=max_n, 0..PROBS.len(), any::<u64>()).prop_map(|(n, p, seed)| gen_random(n, PROBS[p], seed))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn matches_oracle(g in random_graph(9)) {
        for (a, b) in nonadjacent_pairs(&g) {
            for k in 0..=g.n() {
                let (got, len) = bounded_set(&g, a, b, k);
                prop_assert_eq!(len, got.len(), "duplicate emission");
                prop_assert_eq!(got, brute_minimal_separators(&g, a, b, Some(k)).unwrap());
            }
        }
    }

    #[test]
    fn monotone_in_k(g in random_graph(9)) {
        for (a, b) in nonadjacent_pairs(&g) {
            let mut prev = bounded_set(&g, a, b, 0).0;
            for k in 1..=g.n() {
                let next = bounded_set(&g, a, b, k).0;
                prop_assert!(prev.is_subset(&next));
                prev = next;
            }
            prop_assert_eq!(prev, unbounded_set(&g, a, b).0);
        }
    }

    #[test]
    fn emptiness_and_witnesses_agree_with_oracle(g in random_graph(8), k in 0..=4usize) {
        for (a, b) in nonadjacent_pairs(&g) {
            let ctx = EnumContext::new(&g, a, b).unwrap();
            let mut rec = Recorder::default();
            enumerate_bounded_observed(BoundedContext::new(ctx, k), |_| ControlFlow::Continue(()), &mut rec);
            for (node, nonempty) in &rec.visits {
                let brute = brute_delta(&g, Some(k), &node.inside, &node.forced, a, b).unwrap();
                prop_assert_eq!(!brute.is_empty(), *nonempty);
                let mut sink = |_: &Separator| ControlFlow::Continue(());
                let mut session = EnumSession::new(BoundedContext::new(ctx, k), &mut sink);
                let ControlFlow::Continue(witness) = delta_k_witness(&mut session, node) else {
                    panic!("sink never stops");
                };
                prop_assert_eq!(witness.is_some(), *nonempty);
                if let Some(w) = witness {
                    prop_assert!(brute.contains(&w), "witness {} outside the subtree", w);
                }
            }
        }
    }
}

#[test]
fn limit_stops_exactly() {
    let g = gen_random(9, 0.4, 21);
    for (a, b) in nonadjacent_pairs(&g).into_iter().take(6) {
        let ctx = EnumContext::new(&g, a, b).unwrap();
        let total = brute_minimal_separators(&g, a, b, Some(4)).unwrap().len();
        for r in 1..=total + 1 {
            let mut seen = 0;
            let stats = enumerate_bounded(BoundedContext::new(ctx, 4), |_| {
                seen += 1;
                if seen == r {
                    ControlFlow::Break(())
                } else {
                    ControlFlow::Continue(())
                }
            });
            assert_eq!(seen, r.min(total));
            assert_eq!(stats.stopped, r <= total);
        }
    }
}
