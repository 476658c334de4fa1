//! Important separators of bounded size.
//!
//! The minimum cut is computed with unit-capacity augmenting paths on the
//! vertex-split network and then pushed as far toward `B` as possible. The
//! enumeration branches on one vertex `v` of that furthest minimum cut: either
//! `v` belongs to the separator (delete it, budget minus one) or `v` ends up on
//! the `A` side (merge it into `A`). Both branches raise `2k - λ` by at least
//! one relative to the parent's budget, so the branching tree has at most
//! `4^k` leaves.
//!
//! The raw stream is a superset of the important separators: every candidate
//! is checked to be a minimal A,B-separator of size at most `k`, but no
//! importance test is applied. The bounded enumerator only needs those two
//! properties. [`important_separators`] adds the importance filter for
//! callers that want exactly the important ones.

use std::collections::VecDeque;
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::{Graph, Separator, VertexSet};

/// A,B-separation problem with a size budget. Both sides induce connected
/// subgraphs, so that inclusion-minimal separators and separators with full
/// components on both sides coincide.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutProblem {
    /// The side whose component is maximized.
    pub source: VertexSet,
    pub target: VertexSet,
    pub budget: usize,
}

impl CutProblem {
    pub fn new(g: &Graph, source: VertexSet, target: VertexSet, budget: usize) -> Result<Self> {
        g.check_set(&source)?;
        g.check_set(&target)?;
        if source.is_empty() || target.is_empty() {
            return Err(Error::invalid("cut sides must be nonempty"));
        }
        if !source.is_disjoint(&target) {
            return Err(Error::invalid("cut sides must be disjoint"));
        }
        for side in [&source, &target] {
            let outside: VertexSet = (0..g.n()).filter(|&v| !side.contains(v)).collect();
            let first = side.first().expect("nonempty side");
            if g.component_of(first, &outside)? != *side {
                return Err(Error::invalid(format!(
                    "cut side {side} does not induce a connected subgraph"
                )));
            }
        }
        Ok(CutProblem {
            source,
            target,
            budget,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinCut {
    /// The furthest-from-source minimum cut, of the given size.
    Cut { size: usize, cut: VertexSet },
    /// Minimum cut exceeds the budget.
    OverBudget,
    /// An edge joins the two sides; no vertex cut exists.
    Unbounded,
}

const INF: u32 = u32::MAX;

struct Arc {
    to: usize,
    cap: u32,
    rev: usize,
}

/// Vertex-split residual network: `2v` is the in-node of `v`, `2v + 1` its
/// out-node, followed by a super source and super sink.
struct Network {
    arcs: Vec<Vec<Arc>>,
    src: usize,
    snk: usize,
}

impl Network {
    fn build(g: &Graph, source: &[bool], target: &[bool], removed: &[bool]) -> Network {
        let n = g.n();
        let (src, snk) = (2 * n, 2 * n + 1);
        let mut net = Network {
            arcs: (0..2 * n + 2).map(|_| Vec::new()).collect(),
            src,
            snk,
        };
        for v in (0..n).filter(|&v| !removed[v]) {
            let terminal = source[v] || target[v];
            net.add(2 * v, 2 * v + 1, if terminal { INF } else { 1 });
            if source[v] {
                net.add(src, 2 * v, INF);
            }
            if target[v] {
                net.add(2 * v + 1, snk, INF);
            }
            for &w in g.neighbors(v) {
                if !removed[w] {
                    net.add(2 * v + 1, 2 * w, INF);
                }
            }
        }
        net
    }

    fn add(&mut self, from: usize, to: usize, cap: u32) {
        let (rf, rt) = (self.arcs[to].len(), self.arcs[from].len());
        self.arcs[from].push(Arc { to, cap, rev: rf });
        self.arcs[to].push(Arc {
            to: from,
            cap: 0,
            rev: rt,
        });
    }

    /// Pushes one unit along a shortest residual path. Every source-sink path
    /// crosses a unit arc, so one unit is the bottleneck.
    fn augment(&mut self) -> bool {
        let mut pred: Vec<Option<(usize, usize)>> = vec![None; self.arcs.len()];
        let mut queue = VecDeque::from([self.src]);
        let mut seen = vec![false; self.arcs.len()];
        seen[self.src] = true;
        'bfs: while let Some(u) = queue.pop_front() {
            for (i, arc) in self.arcs[u].iter().enumerate() {
                if arc.cap > 0 && !seen[arc.to] {
                    seen[arc.to] = true;
                    pred[arc.to] = Some((u, i));
                    if arc.to == self.snk {
                        break 'bfs;
                    }
                    queue.push_back(arc.to);
                }
            }
        }
        if !seen[self.snk] {
            return false;
        }
        let mut at = self.snk;
        while let Some((u, i)) = pred[at] {
            let rev = self.arcs[u][i].rev;
            if self.arcs[u][i].cap != INF {
                self.arcs[u][i].cap -= 1;
            }
            let back = &mut self.arcs[at][rev];
            back.cap = back.cap.saturating_add(1);
            at = u;
        }
        true
    }

    /// Network nodes that can still reach the sink in the residual graph.
    fn reaches_sink(&self) -> Vec<bool> {
        let mut seen = vec![false; self.arcs.len()];
        seen[self.snk] = true;
        let mut queue = VecDeque::from([self.snk]);
        while let Some(w) = queue.pop_front() {
            for arc in &self.arcs[w] {
                let u = arc.to;
                if !seen[u] && self.arcs[u][arc.rev].cap > 0 {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        seen
    }
}

fn sides_touch(g: &Graph, source: &[bool], target: &[bool]) -> bool {
    (0..g.n())
        .filter(|&v| source[v])
        .any(|v| target[v] || g.neighbors(v).iter().any(|&w| target[w]))
}

/// Minimum vertex cut of `G \ removed` between the masked sides, pushed
/// toward the target, with at most `budget + 1` augmentations.
fn furthest_min_cut(
    g: &Graph,
    source: &[bool],
    target: &[bool],
    removed: &[bool],
    budget: usize,
) -> MinCut {
    if sides_touch(g, source, target) {
        return MinCut::Unbounded;
    }
    let mut net = Network::build(g, source, target, removed);
    let mut flow = 0;
    while net.augment() {
        flow += 1;
        if flow > budget {
            return MinCut::OverBudget;
        }
    }
    let reach = net.reaches_sink();
    let cut: VertexSet = (0..g.n())
        .filter(|&v| !removed[v] && !source[v] && !target[v])
        .filter(|&v| !reach[2 * v] && reach[2 * v + 1])
        .collect();
    debug_assert_eq!(cut.len(), flow);
    MinCut::Cut { size: flow, cut }
}

/// Minimum A,B vertex cut if it has at most `budget` vertices. Among all
/// minimum cuts the one whose A side is inclusion-maximal is returned.
pub fn min_vertex_cut_le_k(g: &Graph, prob: &CutProblem) -> MinCut {
    let removed = vec![false; g.n()];
    furthest_min_cut(
        g,
        &g.mask(&prob.source),
        &g.mask(&prob.target),
        &removed,
        prob.budget,
    )
}

/// Counters for one run of [`enumerate_important_separators`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ImportantStats {
    /// Branching nodes (a cut of positive size within budget).
    pub nodes: u64,
    /// Leaves: disconnected, over budget, or unbounded.
    pub leaves: u64,
    /// Candidates handed to the visitor.
    pub emitted: u64,
    pub stopped: bool,
}

struct Search<'a, F> {
    g: &'a Graph,
    prob: &'a CutProblem,
    target: Vec<bool>,
    visitor: F,
    stats: ImportantStats,
}

impl<F> Search<'_, F>
where
    F: FnMut(&Separator) -> ControlFlow<()>,
{
    fn run(
        &mut self,
        source: &mut Vec<bool>,
        removed: &mut Vec<bool>,
        budget: usize,
    ) -> ControlFlow<()> {
        let cut = match furthest_min_cut(self.g, source, &self.target, removed, budget) {
            MinCut::Cut { size: 0, .. } => {
                self.stats.leaves += 1;
                return self.leaf(removed);
            }
            MinCut::Cut { cut, .. } => cut,
            MinCut::OverBudget | MinCut::Unbounded => {
                self.stats.leaves += 1;
                return ControlFlow::Continue(());
            }
        };
        self.stats.nodes += 1;
        let v = cut.first().expect("positive cut");

        removed[v] = true;
        let flow = self.run(source, removed, budget - 1);
        removed[v] = false;
        flow?;

        source[v] = true;
        let flow = self.run(source, removed, budget);
        source[v] = false;
        flow
    }

    fn leaf(&mut self, removed: &[bool]) -> ControlFlow<()> {
        let candidate = VertexSet::from_mask(removed);
        let minimal = self
            .g
            .is_minimal_set_separator(&self.prob.source, &self.prob.target, &candidate)
            .expect("sets validated by CutProblem");
        if !minimal {
            return ControlFlow::Continue(());
        }
        self.stats.emitted += 1;
        let out = (self.visitor)(&Separator::new(candidate));
        if out.is_break() {
            self.stats.stopped = true;
        }
        out
    }
}

/// Streams minimal A,B-separators of size at most `budget`, including every
/// important one. The visitor may stop the stream by returning `Break`.
pub fn enumerate_important_separators<F>(g: &Graph, prob: &CutProblem, visitor: F) -> ImportantStats
where
    F: FnMut(&Separator) -> ControlFlow<()>,
{
    let mut search = Search {
        g,
        prob,
        target: g.mask(&prob.target),
        visitor,
        stats: ImportantStats::default(),
    };
    let mut source = g.mask(&prob.source);
    let mut removed = vec![false; g.n()];
    let _ = search.run(&mut source, &mut removed, prob.budget);
    search.stats
}

/// Exactly the important A,B-separators of size at most the budget, sorted.
///
/// A stream candidate is dropped when another candidate of no larger size has
/// a strictly larger source component. Since the stream contains every
/// important separator, and every non-important one is dominated by an
/// important one, this leaves exactly the important set.
pub fn important_separators(g: &Graph, prob: &CutProblem) -> Vec<Separator> {
    let mut found = Vec::new();
    enumerate_important_separators(g, prob, |s| {
        found.push(s.clone());
        ControlFlow::Continue(())
    });
    let with_side: Vec<(Separator, VertexSet)> = found
        .into_iter()
        .map(|s| {
            let side = prob.source.iter().fold(VertexSet::new(), |acc, v| {
                acc.union(&g.component_of(v, s.vertices()).expect("valid separator"))
            });
            (s, side)
        })
        .collect();
    let mut out: Vec<Separator> = with_side
        .iter()
        .filter(|(s, side)| {
            !with_side.iter().any(|(t, other)| {
                t.len() <= s.len() && other.len() > side.len() && side.is_subset(other)
            })
        })
        .map(|(s, _)| s.clone())
        .collect();
    out.sort();
    out
}
