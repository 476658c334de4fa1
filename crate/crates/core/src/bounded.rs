//! Enumeration of minimal a,b-separators with at most `k` vertices.
//!
//! The search tree is the one from [`crate::takata`]; only the emptiness test
//! changes. A subtree `(C, X)` contains a separator of size at most `k` iff
//! some important `{b},C`-separator of size at most `k` contains `X`, so the
//! test streams candidates from
//! [`enumerate_important_separators`](crate::important::enumerate_important_separators)
//! with `A = {b}` and `B = C` and stops at the first candidate containing `X`.
//!
//! Every candidate in that stream is a minimal `{b},C`-separator of size at
//! most `k`, which makes it a minimal a,b-separator of size at most `k`
//! whether or not it contains `X`. All of them are emitted on the spot through
//! the [`EnumSession`], which remembers what it has already output. Leaves
//! reached later may then find their separator already emitted; that output
//! simply happened earlier. This bounds the work of each emptiness test by the
//! number of separators already output as well as by `4^k`.

use std::collections::HashSet;
use std::ops::ControlFlow;

use crate::graph::{Separator, VertexSet};
use crate::important::{enumerate_important_separators, CutProblem};
use crate::takata::{
    branch, choose_branch_vertex, root_node, EnumContext, SearchObserver, SearchStats, TakataNode,
};

/// Terminals plus the size bound `k`.
#[derive(Clone, Copy, Debug)]
pub struct BoundedContext<'g> {
    ctx: EnumContext<'g>,
    k: usize,
}

impl<'g> BoundedContext<'g> {
    pub fn new(ctx: EnumContext<'g>, k: usize) -> Self {
        BoundedContext { ctx, k }
    }

    pub fn ctx(&self) -> &EnumContext<'g> {
        &self.ctx
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

/// Output sink with deduplication. Single-threaded by construction: the
/// emitted set is the search's only shared mutable state.
pub struct EnumSession<'s, 'g> {
    bctx: BoundedContext<'g>,
    emitted: HashSet<Separator>,
    sink: &'s mut dyn FnMut(&Separator) -> ControlFlow<()>,
    observer: Option<&'s mut dyn SearchObserver>,
    stats: SearchStats,
}

impl<'s, 'g> EnumSession<'s, 'g> {
    pub fn new(
        bctx: BoundedContext<'g>,
        sink: &'s mut dyn FnMut(&Separator) -> ControlFlow<()>,
    ) -> Self {
        EnumSession {
            bctx,
            emitted: HashSet::new(),
            sink,
            observer: None,
            stats: SearchStats::default(),
        }
    }

    pub fn with_observer(
        bctx: BoundedContext<'g>,
        sink: &'s mut dyn FnMut(&Separator) -> ControlFlow<()>,
        observer: &'s mut dyn SearchObserver,
    ) -> Self {
        let mut session = Self::new(bctx, sink);
        session.observer = Some(observer);
        session
    }

    pub fn context(&self) -> &BoundedContext<'g> {
        &self.bctx
    }

    /// Number of separators output so far.
    pub fn count(&self) -> u64 {
        self.stats.emitted
    }

    pub fn stats(&self) -> &SearchStats {
        &self.stats
    }

    pub fn has_emitted(&self, s: &Separator) -> bool {
        self.emitted.contains(s)
    }

    /// Forwards `s` to the sink unless it was emitted before. Yields
    /// `Continue(true)` for a new separator, `Continue(false)` for a repeat,
    /// and `Break` once the sink has asked to stop.
    pub fn emit(&mut self, s: &Separator) -> ControlFlow<(), bool> {
        assert!(s.len() <= self.bctx.k, "separator exceeds the size bound");
        debug_assert!(self
            .bctx
            .ctx
            .graph()
            .is_minimal_ab_separator(self.bctx.ctx.a(), self.bctx.ctx.b(), s.vertices())
            .unwrap_or(false));
        if self.emitted.contains(s) {
            return ControlFlow::Continue(false);
        }
        self.emitted.insert(s.clone());
        self.stats.emitted += 1;
        if let Some(obs) = self.observer.as_deref_mut() {
            obs.emitted(s, &self.stats);
        }
        if (self.sink)(s).is_break() {
            self.stats.stopped = true;
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(true)
    }
}

/// Streams important `{b},C`-separators until one contains `X`, emitting every
/// new candidate on the way. Returns that candidate, or `None` when the
/// subtree holds no separator of size at most `k`.
pub fn delta_k_witness(
    session: &mut EnumSession<'_, '_>,
    node: &TakataNode,
) -> ControlFlow<(), Option<Separator>> {
    let bctx = session.bctx;
    let g = bctx.ctx.graph();
    if node.forced.len() > bctx.k || node.inside.contains(bctx.ctx.b()) {
        return ControlFlow::Continue(None);
    }
    let prob = CutProblem {
        source: VertexSet::singleton(bctx.ctx.b()),
        target: node.inside.clone(),
        budget: bctx.k,
    };
    let mut witness = None;
    let mut sink_stopped = false;
    let stats = enumerate_important_separators(g, &prob, |s| {
        if session.emit(s).is_break() {
            sink_stopped = true;
            return ControlFlow::Break(());
        }
        if node.forced.is_subset(s.vertices()) {
            witness = Some(s.clone());
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    session.stats.important_nodes += stats.nodes;
    session.stats.important_leaves += stats.leaves;
    if sink_stopped {
        return ControlFlow::Break(());
    }
    ControlFlow::Continue(witness)
}

/// Whether the subtree `(C, X)` contains a minimal a,b-separator of size at
/// most `k`. `Break` means the sink stopped during the test.
pub fn delta_k_nonempty(
    session: &mut EnumSession<'_, '_>,
    node: &TakataNode,
) -> ControlFlow<(), bool> {
    delta_k_witness(session, node).map_continue(|w| w.is_some())
}

/// Emits every minimal a,b-separator with at most `k` vertices exactly once,
/// in no particular order.
pub fn enumerate_bounded<F>(bctx: BoundedContext<'_>, sink: F) -> SearchStats
where
    F: FnMut(&Separator) -> ControlFlow<()>,
{
    enumerate_bounded_observed(bctx, sink, &mut ())
}

pub fn enumerate_bounded_observed<F>(
    bctx: BoundedContext<'_>,
    mut sink: F,
    observer: &mut dyn SearchObserver,
) -> SearchStats
where
    F: FnMut(&Separator) -> ControlFlow<()>,
{
    let mut session = EnumSession::with_observer(bctx, &mut sink, observer);
    let _ = search(&mut session);
    session.stats
}

/// Runs the bounded search for `a`, `b` and `k` on an existing session.
pub fn search(session: &mut EnumSession<'_, '_>) -> ControlFlow<()> {
    let ctx = *session.bctx.ctx();
    if ctx.terminals_adjacent() {
        return ControlFlow::Continue(());
    }
    let mut stack = vec![root_node(&ctx)];
    while let Some(node) = stack.pop() {
        session.stats.nodes += 1;
        let nonempty = delta_k_nonempty(session, &node)?;
        if let Some(obs) = session.observer.as_deref_mut() {
            obs.visit(&node, nonempty);
        }
        if !nonempty {
            continue;
        }
        match choose_branch_vertex(&ctx, &node) {
            None => {
                session.emit(&Separator::new(node.forced))?;
            }
            Some(v) => {
                let (left, right) = branch(&ctx, &node, v).expect("branch vertex is valid");
                if let Some(obs) = session.observer.as_deref_mut() {
                    obs.branch(&node, v, left.as_ref(), &right);
                }
                stack.push(right);
                stack.extend(left);
            }
        }
    }
    ControlFlow::Continue(())
}

/// Convenience wrapper collecting the whole output.
pub fn bounded_separators(ctx: EnumContext<'_>, k: usize) -> Vec<Separator> {
    let mut out = Vec::new();
    enumerate_bounded(BoundedContext::new(ctx, k), |s| {
        out.push(s.clone());
        ControlFlow::Continue(())
    });
    out
}
