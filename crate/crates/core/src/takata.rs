//! Binary-partition search over minimal a,b-separators.
//!
//! A search node `(C, X)` stands for every minimal a,b-separator `S` with
//! `S ∩ C = ∅` and `X ⊆ S`, where `a ∈ C`, `G[C]` is connected and
//! `X ⊆ N(C)`. Picking any `v ∈ N(C) \ X` splits the node into
//! `(C ∪ {v}, X)` (separators avoiding `v`) and `(C, X ∪ {v})` (separators
//! containing `v`). A node with `X = N(C)` holds at most `N(C)` itself.
//!
//! Depth is bounded by `n`, so an exact emptiness test at every node gives
//! polynomial delay. [`delta_nonempty_witness`] is that test for the
//! unbounded problem; the size-bounded enumerator in [`crate::bounded`]
//! swaps in a different one and reuses the same node type.

use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::{Graph, Separator, VertexSet};

/// A graph together with the two terminals being separated.
#[derive(Clone, Copy, Debug)]
pub struct EnumContext<'g> {
    graph: &'g Graph,
    a: usize,
    b: usize,
}

impl<'g> EnumContext<'g> {
    pub fn new(graph: &'g Graph, a: usize, b: usize) -> Result<Self> {
        graph.check_vertex(a)?;
        graph.check_vertex(b)?;
        if a == b {
            return Err(Error::invalid("terminals must be distinct"));
        }
        Ok(EnumContext { graph, a, b })
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn terminals_adjacent(&self) -> bool {
        self.graph.has_edge(self.a, self.b)
    }
}

/// The subtree of separators avoiding `inside` and containing `forced`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TakataNode {
    /// Connected vertex set containing `a`; no separator below may touch it.
    pub inside: VertexSet,
    /// Vertices of `N(inside)` every separator below must contain.
    pub forced: VertexSet,
}

impl TakataNode {
    pub fn new(inside: VertexSet, forced: VertexSet) -> Self {
        TakataNode { inside, forced }
    }

    /// Checks `a ∈ C`, `b ∉ C`, `G[C]` connected and `X ⊆ N(C)`.
    pub fn validate(&self, ctx: &EnumContext<'_>) -> Result<()> {
        let g = ctx.graph();
        g.check_set(&self.inside)?;
        g.check_set(&self.forced)?;
        if !self.inside.contains(ctx.a()) || self.inside.contains(ctx.b()) {
            return Err(Error::invalid("node must contain a and exclude b"));
        }
        let outside: VertexSet = (0..g.n()).filter(|&v| !self.inside.contains(v)).collect();
        if g.component_of(ctx.a(), &outside)? != self.inside {
            return Err(Error::invalid("node's inside set is not connected"));
        }
        if !self.forced.is_subset(&g.neighborhood(&self.inside)?) {
            return Err(Error::invalid("forced vertices must lie in N(C)"));
        }
        Ok(())
    }
}

/// Counters shared by both enumerators.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Search-tree nodes whose emptiness was tested.
    pub nodes: u64,
    /// Internal nodes of the important-separator branching, summed over calls.
    pub important_nodes: u64,
    /// Leaves of the important-separator branching, summed over calls.
    pub important_leaves: u64,
    /// Separators handed to the sink.
    pub emitted: u64,
    /// True when the sink asked to stop before the search finished.
    pub stopped: bool,
}

impl SearchStats {
    /// Work measure used by the incremental-output checks.
    pub fn work(&self) -> u64 {
        self.nodes + self.important_nodes
    }
}

/// Hooks for instrumenting a search. All methods default to no-ops.
pub trait SearchObserver {
    /// Called once per visited node with the emptiness verdict.
    fn visit(&mut self, _node: &TakataNode, _nonempty: bool) {}

    /// Called when `parent` is split on `v`. `left` is `None` when `v = b`.
    fn branch(
        &mut self,
        _parent: &TakataNode,
        _v: usize,
        _left: Option<&TakataNode>,
        _right: &TakataNode,
    ) {
    }

    /// Called after each emission, with the counters at that moment.
    fn emitted(&mut self, _separator: &Separator, _stats: &SearchStats) {}
}

impl SearchObserver for () {}

pub fn root_node(ctx: &EnumContext<'_>) -> TakataNode {
    TakataNode::new(VertexSet::singleton(ctx.a()), VertexSet::new())
}

/// Smallest vertex of `N(C) \ X`, or `None` at a leaf.
pub fn choose_branch_vertex(ctx: &EnumContext<'_>, node: &TakataNode) -> Option<usize> {
    let nb = ctx
        .graph()
        .neighborhood_of_mask(&ctx.graph().mask(&node.inside));
    let v = nb.iter().find(|&v| !node.forced.contains(v));
    v
}

/// Splits `node` on `v ∈ N(C) \ X` into the "v avoided" and "v forced"
/// children. The first child is `None` when `v = b`, since such a subtree
/// cannot contain a separator.
pub fn branch(
    ctx: &EnumContext<'_>,
    node: &TakataNode,
    v: usize,
) -> Result<(Option<TakataNode>, TakataNode)> {
    let nb = ctx.graph().neighborhood(&node.inside)?;
    if !nb.contains(v) || node.forced.contains(v) {
        return Err(Error::invalid(format!("vertex {v} is not in N(C) \\ X")));
    }
    let left = (v != ctx.b()).then(|| TakataNode::new(node.inside.with(v), node.forced.clone()));
    let right = TakataNode::new(node.inside.clone(), node.forced.with(v));
    Ok((left, right))
}

/// Exact emptiness test for the unbounded subtree: returns `N(C_b)` for the
/// component `C_b` of `G \ N[C]` containing `b` when `X ⊆ N(C_b)`, else
/// `None`. The returned set is itself a member of the subtree.
pub fn delta_nonempty_witness(ctx: &EnumContext<'_>, node: &TakataNode) -> Option<Separator> {
    let g = ctx.graph();
    let mut closed = g.mask(&node.inside);
    for v in g.neighborhood_of_mask(&closed).iter() {
        closed[v] = true;
    }
    if closed[ctx.b()] {
        return None;
    }
    let comp_b = g.reach_mask(ctx.b(), &closed);
    let sep = g.neighborhood_of_mask(&comp_b);
    node.forced.is_subset(&sep).then(|| Separator::new(sep))
}

/// Emits every minimal a,b-separator exactly once, depth first with the
/// "v avoided" child first. The sink may stop the search early.
pub fn enumerate_all<F>(ctx: &EnumContext<'_>, sink: F) -> SearchStats
where
    F: FnMut(&Separator) -> ControlFlow<()>,
{
    enumerate_all_observed(ctx, sink, &mut ())
}

pub fn enumerate_all_observed<F>(
    ctx: &EnumContext<'_>,
    mut sink: F,
    observer: &mut dyn SearchObserver,
) -> SearchStats
where
    F: FnMut(&Separator) -> ControlFlow<()>,
{
    let mut stats = SearchStats::default();
    if ctx.terminals_adjacent() {
        return stats;
    }
    let g = ctx.graph();
    let mut stack = vec![root_node(ctx)];
    while let Some(node) = stack.pop() {
        stats.nodes += 1;
        let nonempty = delta_nonempty_witness(ctx, &node).is_some();
        observer.visit(&node, nonempty);
        if !nonempty {
            continue;
        }
        match choose_branch_vertex(ctx, &node) {
            None => {
                let sep = node.forced;
                // a nonempty leaf holds exactly N(C)
                debug_assert!(g.is_minimal_ab_separator(ctx.a(), ctx.b(), &sep).unwrap());
                let sep = Separator::new(sep);
                stats.emitted += 1;
                observer.emitted(&sep, &stats);
                if sink(&sep).is_break() {
                    stats.stopped = true;
                    return stats;
                }
            }
            Some(v) => {
                let (left, right) = branch(ctx, &node, v).expect("branch vertex is valid");
                observer.branch(&node, v, left.as_ref(), &right);
                stack.push(right);
                stack.extend(left);
            }
        }
    }
    stats
}
