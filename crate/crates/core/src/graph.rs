//! Undirected simple graphs over dense vertex ids, vertex sets in canonical
//! form, and the neighborhood/component primitives every enumerator builds on.
//!
//! Vertices are `0..n`. External labels (1-indexed `.gr` ids, set-cover
//! element names) are translated at the I/O boundary. Deleted vertices are
//! always passed as an explicit [`VertexSet`]; a [`Graph`] never changes after
//! construction, so one graph can be shared by many concurrent searches.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// A set of vertex ids stored as a strictly increasing sequence.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(vec![v])
    }

    /// Collects the vertices whose flag is set.
    pub(crate) fn from_mask(mask: &[bool]) -> Self {
        VertexSet(
            mask.iter()
                .enumerate()
                .filter_map(|(v, &m)| m.then_some(v))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        let mut it = other.0.iter();
        'outer: for &v in &self.0 {
            for &w in it.by_ref() {
                if w == v {
                    continue 'outer;
                }
                if w > v {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| !other.contains(v)).collect())
    }

    /// Returns a copy of the set with `v` added.
    pub fn with(&self, v: usize) -> VertexSet {
        let mut out = self.clone();
        if let Err(pos) = out.0.binary_search(&v) {
            out.0.insert(pos, v);
        }
        out
    }

    /// Returns a copy of the set with `v` removed.
    pub fn without(&self, v: usize) -> VertexSet {
        let mut out = self.clone();
        if let Ok(pos) = out.0.binary_search(&v) {
            out.0.remove(pos);
        }
        out
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl From<&[usize]> for VertexSet {
    fn from(v: &[usize]) -> Self {
        v.iter().copied().collect()
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(v: [usize; N]) -> Self {
        v.into_iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A vertex set produced as a separator by one of the enumerators.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Separator(VertexSet);

impl Separator {
    pub fn new(vertices: VertexSet) -> Self {
        Separator(vertices)
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(v)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter()
    }

    pub fn into_vertices(self) -> VertexSet {
        self.0
    }
}

impl From<VertexSet> for Separator {
    fn from(v: VertexSet) -> Self {
        Separator(v)
    }
}

impl<const N: usize> From<[usize; N]> for Separator {
    fn from(v: [usize; N]) -> Self {
        Separator(v.into())
    }
}

impl fmt::Display for Separator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Immutable undirected simple graph with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Self-loops, duplicate edges and
    /// out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::invalid(format!(
                    "edge {u}-{v} out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::invalid(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
            m += 1;
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::invalid(format!("duplicate edge {u}-{}", w[0])));
            }
        }
        Ok(Graph { adj, m })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::invalid(format!(
                "vertex {v} out of range for {} vertices",
                self.n()
            )))
        }
    }

    pub fn check_set(&self, xs: &VertexSet) -> Result<()> {
        match xs.as_slice().last() {
            Some(&v) => self.check_vertex(v),
            None => Ok(()),
        }
    }

    pub(crate) fn mask(&self, xs: &VertexSet) -> Vec<bool> {
        let mut mask = vec![false; self.n()];
        for v in xs.iter() {
            mask[v] = true;
        }
        mask
    }

    /// Open neighborhood N(xs): neighbors of members, minus `xs` itself.
    pub fn neighborhood(&self, xs: &VertexSet) -> Result<VertexSet> {
        self.check_set(xs)?;
        Ok(self.neighborhood_of_mask(&self.mask(xs)))
    }

    /// Closed neighborhood N[xs] = N(xs) ∪ xs.
    pub fn closed_neighborhood(&self, xs: &VertexSet) -> Result<VertexSet> {
        Ok(self.neighborhood(xs)?.union(xs))
    }

    pub(crate) fn neighborhood_of_mask(&self, inside: &[bool]) -> VertexSet {
        let mut seen = vec![false; self.n()];
        for (v, _) in inside.iter().enumerate().filter(|(_, &m)| m) {
            for &w in &self.adj[v] {
                if !inside[w] {
                    seen[w] = true;
                }
            }
        }
        VertexSet::from_mask(&seen)
    }

    /// Vertices reachable from `start` without entering `blocked`, as a mask.
    /// `start` itself must not be blocked.
    pub(crate) fn reach_mask(&self, start: usize, blocked: &[bool]) -> Vec<bool> {
        let mut seen = vec![false; self.n()];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if !seen[w] && !blocked[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// The component of `G \ removed` containing `v`.
    pub fn component_of(&self, v: usize, removed: &VertexSet) -> Result<VertexSet> {
        self.check_vertex(v)?;
        self.check_set(removed)?;
        if removed.contains(v) {
            return Err(Error::invalid(format!("vertex {v} is removed")));
        }
        Ok(VertexSet::from_mask(
            &self.reach_mask(v, &self.mask(removed)),
        ))
    }

    /// Connected components of `G \ removed`, ordered by smallest member.
    pub fn components(&self, removed: &VertexSet) -> Result<Vec<VertexSet>> {
        self.check_set(removed)?;
        let mut blocked = self.mask(removed);
        let mut out = Vec::new();
        for v in 0..self.n() {
            if blocked[v] {
                continue;
            }
            let comp = self.reach_mask(v, &blocked);
            for (w, _) in comp.iter().enumerate().filter(|(_, &c)| c) {
                blocked[w] = true;
            }
            out.push(VertexSet::from_mask(&comp));
        }
        Ok(out)
    }

    /// Components D of `G \ s` with N(D) = s.
    pub fn full_components(&self, s: &VertexSet) -> Result<Vec<VertexSet>> {
        Ok(self
            .components(s)?
            .into_iter()
            .filter(|d| self.neighborhood_of_mask(&self.mask(d)) == *s)
            .collect())
    }

    /// True iff `s` has two distinct full components, one containing `a` and
    /// the other containing `b`.
    pub fn is_minimal_ab_separator(&self, a: usize, b: usize, s: &VertexSet) -> Result<bool> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        self.check_set(s)?;
        if a == b {
            return Err(Error::invalid("terminals must be distinct"));
        }
        if s.contains(a) || s.contains(b) {
            return Err(Error::invalid("a separator may not contain a terminal"));
        }
        Ok(self.separates_fully(&VertexSet::singleton(a), &VertexSet::singleton(b), s))
    }

    /// Set version used by the important-separator machinery: there are
    /// components `C_A ⊇ A` and `C_B ⊇ B` of `G \ s`, distinct, with
    /// `s = N(C_A) = N(C_B)`.
    pub fn is_minimal_set_separator(
        &self,
        a_side: &VertexSet,
        b_side: &VertexSet,
        s: &VertexSet,
    ) -> Result<bool> {
        self.check_set(a_side)?;
        self.check_set(b_side)?;
        self.check_set(s)?;
        if a_side.is_empty() || b_side.is_empty() {
            return Err(Error::invalid("separator sides must be nonempty"));
        }
        if !a_side.is_disjoint(s) || !b_side.is_disjoint(s) {
            return Ok(false);
        }
        Ok(self.separates_fully(a_side, b_side, s))
    }

    fn separates_fully(&self, a_side: &VertexSet, b_side: &VertexSet, s: &VertexSet) -> bool {
        let blocked = self.mask(s);
        let full_side = |side: &VertexSet| -> Option<Vec<bool>> {
            let comp = self.reach_mask(side.first()?, &blocked);
            if !side.iter().all(|v| comp[v]) {
                return None;
            }
            (self.neighborhood_of_mask(&comp) == *s).then_some(comp)
        };
        let Some(comp_a) = full_side(a_side) else {
            return false;
        };
        if b_side.iter().any(|v| comp_a[v]) {
            return false;
        }
        full_side(b_side).is_some()
    }

    /// `G \ removed`, relabeled so that surviving vertices keep their
    /// relative order. Returns the subgraph and the old id of each new vertex.
    pub fn without_vertices(&self, removed: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(removed)?;
        let keep: Vec<usize> = (0..self.n()).filter(|&v| !removed.contains(v)).collect();
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            new_id[v] = i;
        }
        let edges = self
            .edges()
            .filter(|&(u, v)| new_id[u] != usize::MAX && new_id[v] != usize::MAX)
            .map(|(u, v)| (new_id[u], new_id[v]));
        Ok((Graph::new(keep.len(), edges)?, keep))
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::Graph;

    pub fn p3() -> Graph {
        Graph::new(3, [(0, 1), (1, 2)]).unwrap()
    }

    pub fn c4() -> Graph {
        Graph::new(4, [(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()
    }

    /// Three a-b paths with a = 0, b = 1: 0-2-1, 0-3-1, 0-4-5-1.
    pub fn g3() -> Graph {
        Graph::new(6, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 5), (5, 1)]).unwrap()
    }
}
