//! Instance generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

/// A generated graph with designated terminals.
#[derive(Clone, Debug)]
pub struct Generated {
    pub graph: Graph,
    pub a: usize,
    pub b: usize,
}

/// Terminals `a` and `b` joined by `q` paths with one internal vertex and `p`
/// paths with two. The minimal a,b-separators are exactly the `2^p` sets that
/// take every short-path vertex and one vertex from each long path.
///
/// Without a seed the numbering is `a = 0`, `b = 1`, the `q` short-path
/// vertices, then the long paths as (neighbor of a, neighbor of b) pairs. A
/// seed relabels all vertices by a ChaCha8 shuffle.
pub fn gen_parallel_paths(p: usize, q: usize, seed: Option<u64>) -> Generated {
    let n = 2 + q + 2 * p;
    let (a, b) = (0, 1);
    let mut edges = Vec::with_capacity(2 * q + 3 * p);
    for i in 0..q {
        edges.extend([(a, 2 + i), (2 + i, b)]);
    }
    for i in 0..p {
        let (x, y) = (2 + q + 2 * i, 3 + q + 2 * i);
        edges.extend([(a, x), (x, y), (y, b)]);
    }
    let mut label: Vec<usize> = (0..n).collect();
    if let Some(seed) = seed {
        label.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    let graph = Graph::new(n, edges.into_iter().map(|(u, v)| (label[u], label[v])))
        .expect("parallel paths are simple");
    Generated {
        graph,
        a: label[a],
        b: label[b],
    }
}

/// Erdős–Rényi graph: pairs `(u, v)` with `u < v` are visited in
/// lexicographic order and each is kept when a ChaCha8 draw from
/// `[0, 1)` (seeded by `seed`) falls below `prob`.
pub fn gen_random(n: usize, prob: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < prob {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("generated edges are simple")
}
