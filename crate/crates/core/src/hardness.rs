//! Set cover to bounded-separator reduction.
//!
//! The gadget `G(U, F)` is bipartite with four layers: `{a}`, then the element
//! vertices together with two pendant vertices `u_T, w_T` per set, then one
//! vertex `v_T` per set, then `{b}`. A cover `F'` with `|F'| ≤ k` corresponds
//! to a minimal a,b-separator containing every element vertex, avoiding `a`,
//! and of size at most `|U| + |F| + k`.

use crate::error::{Error, Result};
use crate::graph::{Graph, Separator, VertexSet};

/// Universe of element labels, a family of subsets, and the cover budget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetCoverInstance {
    universe: Vec<usize>,
    family: Vec<Vec<usize>>,
    budget: usize,
}

impl SetCoverInstance {
    pub fn new(universe: Vec<usize>, family: Vec<Vec<usize>>, budget: usize) -> Result<Self> {
        let mut sorted = universe.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid("universe has repeated elements"));
        }
        let mut family = family;
        for (i, set) in family.iter_mut().enumerate() {
            set.sort_unstable();
            set.dedup();
            if let Some(z) = set.iter().find(|z| sorted.binary_search(z).is_err()) {
                return Err(Error::invalid(format!(
                    "set {} has element {z} outside the universe",
                    i + 1
                )));
            }
        }
        Ok(SetCoverInstance {
            universe,
            family,
            budget,
        })
    }

    pub fn universe(&self) -> &[usize] {
        &self.universe
    }

    pub fn family(&self) -> &[Vec<usize>] {
        &self.family
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    /// True if the chosen family members cover the universe.
    pub fn covers(&self, cover: &[usize]) -> bool {
        self.universe
            .iter()
            .all(|z| cover.iter().any(|&i| self.family[i].contains(z)))
    }
}

/// The gadget graph with the role of every vertex.
#[derive(Clone, Debug)]
pub struct GadgetGraph {
    pub instance: SetCoverInstance,
    pub graph: Graph,
    pub a: usize,
    pub b: usize,
    /// Vertex of each universe element, in universe order.
    pub element_vertex: Vec<usize>,
    /// `v_T` for each family member.
    pub set_vertex: Vec<usize>,
    /// `(u_T, w_T)` for each family member.
    pub pendant_vertices: Vec<(usize, usize)>,
}

/// Budget under which separators correspond to covers of size at most `k`.
pub fn reduction_budget(inst: &SetCoverInstance) -> usize {
    inst.universe.len() + inst.family.len() + inst.budget
}

/// Builds `G(U, F)`. Numbering: `a = 0`, `b = 1`, the elements in universe
/// order, then `(u_T, w_T, v_T)` for each set in family order.
pub fn build_gadget(inst: &SetCoverInstance) -> GadgetGraph {
    let (a, b) = (0, 1);
    let element_vertex: Vec<usize> = (0..inst.universe.len()).map(|i| 2 + i).collect();
    let base = 2 + inst.universe.len();
    let mut set_vertex = Vec::new();
    let mut pendant_vertices = Vec::new();
    let mut edges: Vec<(usize, usize)> = element_vertex.iter().map(|&z| (a, z)).collect();
    for (i, set) in inst.family.iter().enumerate() {
        let (u, w, v) = (base + 3 * i, base + 3 * i + 1, base + 3 * i + 2);
        edges.extend([(a, u), (a, w), (u, v), (w, v), (v, b)]);
        for z in set {
            let pos = inst
                .universe
                .iter()
                .position(|e| e == z)
                .expect("validated element");
            edges.push((element_vertex[pos], v));
        }
        set_vertex.push(v);
        pendant_vertices.push((u, w));
    }
    let n = base + 3 * inst.family.len();
    let graph = Graph::new(n, edges).expect("gadget edges are simple");
    GadgetGraph {
        instance: inst.clone(),
        graph,
        a,
        b,
        element_vertex,
        set_vertex,
        pendant_vertices,
    }
}

impl GadgetGraph {
    /// The element vertices, i.e. the set every corresponding separator contains.
    pub fn element_set(&self) -> VertexSet {
        self.element_vertex.iter().copied().collect()
    }

    pub fn size_bound(&self) -> usize {
        reduction_budget(&self.instance)
    }

    /// Checks that `{a} ∪ N(b)` and `{b} ∪ N(a)` partition the vertices and
    /// that every edge runs between them.
    pub fn check_bipartition(&self) -> bool {
        let g = &self.graph;
        let left = g
            .neighborhood(&VertexSet::singleton(self.b))
            .expect("b is a vertex")
            .with(self.a);
        let right = g
            .neighborhood(&VertexSet::singleton(self.a))
            .expect("a is a vertex")
            .with(self.b);
        left.is_disjoint(&right)
            && left.len() + right.len() == g.n()
            && g.edges().all(|(u, v)| left.contains(u) != left.contains(v))
    }

    /// `(label, vertex)` pairs naming every vertex: `a`, `b`, `z<element>`,
    /// and `u<i>`, `w<i>`, `v<i>` for the i-th set (1-indexed).
    pub fn labels(&self) -> Vec<(String, usize)> {
        let mut out = vec![("a".to_string(), self.a), ("b".to_string(), self.b)];
        for (z, &v) in self.instance.universe.iter().zip(&self.element_vertex) {
            out.push((format!("z{z}"), v));
        }
        for (i, (&(u, w), &v)) in self
            .pendant_vertices
            .iter()
            .zip(&self.set_vertex)
            .enumerate()
        {
            out.push((format!("u{}", i + 1), u));
            out.push((format!("w{}", i + 1), w));
            out.push((format!("v{}", i + 1), v));
        }
        out
    }

    /// Whether `s` lies in Δ(G, |U|+|F|+k, {a}, U).
    pub fn in_delta(&self, s: &VertexSet) -> Result<bool> {
        if s.contains(self.a) || s.contains(self.b) {
            return Ok(false);
        }
        Ok(s.len() <= self.size_bound()
            && self.element_set().is_subset(s)
            && self.graph.is_minimal_ab_separator(self.a, self.b, s)?)
    }
}

/// Separator built from a cover: all element vertices, `v_T` for sets outside
/// the cover, and both pendants of every set in it.
pub fn cover_to_separator(gg: &GadgetGraph, cover: &[usize]) -> Result<Separator> {
    let inst = &gg.instance;
    let mut picked = vec![false; inst.family.len()];
    for &i in cover {
        if i >= picked.len() || picked[i] {
            return Err(Error::invalid(format!("bad or repeated set index {i}")));
        }
        picked[i] = true;
    }
    if !inst.covers(cover) {
        return Err(Error::invalid("subfamily does not cover the universe"));
    }
    if cover.len() > inst.budget {
        return Err(Error::invalid("cover exceeds the budget"));
    }
    let mut s: Vec<usize> = gg.element_vertex.clone();
    for (i, &chosen) in picked.iter().enumerate() {
        if chosen {
            let (u, w) = gg.pendant_vertices[i];
            s.extend([u, w]);
        } else {
            s.push(gg.set_vertex[i]);
        }
    }
    let s: VertexSet = s.into();
    let (nu, nf, nc) = (inst.universe.len(), inst.family.len(), cover.len());
    assert_eq!(s.len(), nu + nf - nc + 2 * nc);
    assert!(
        gg.in_delta(&s)?,
        "cover separator must be a minimal separator"
    );
    Ok(Separator::new(s))
}

/// Cover read off a separator: the sets whose `v_T` is not in it.
pub fn separator_to_cover(gg: &GadgetGraph, s: &Separator) -> Result<Vec<usize>> {
    gg.graph.check_set(s.vertices())?;
    if !gg.in_delta(s.vertices())? {
        return Err(Error::invalid(
            "separator is not in the reduction's subtree",
        ));
    }
    let cover: Vec<usize> = gg
        .set_vertex
        .iter()
        .enumerate()
        .filter(|&(_, &v)| !s.contains(v))
        .map(|(i, _)| i)
        .collect();
    let inst = &gg.instance;
    assert!(inst.covers(&cover), "separator must encode a cover");
    assert_eq!(
        inst.universe.len() + 2 * cover.len() + inst.family.len() - cover.len(),
        s.len()
    );
    assert!(cover.len() <= inst.budget);
    Ok(cover)
}

/// `G \ {a, b}` with the old id of each remaining vertex. On a gadget (or any
/// graph bipartitioned as `{a} ∪ N(b)`, `{b} ∪ N(a)` with every other vertex
/// adjacent to a terminal) the minimal a,b-separators are exactly the minimal
/// vertex covers of this graph.
pub fn vertex_cover_bridge(g: &Graph, a: usize, b: usize) -> Result<(Graph, Vec<usize>)> {
    g.without_vertices(&[a, b].into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{brute_delta, brute_minimal_separators};

    fn example() -> SetCoverInstance {
        SetCoverInstance::new(vec![1, 2], vec![vec![1, 2], vec![1]], 1).unwrap()
    }

    #[test]
    fn gadget_shape() {
        let gg = build_gadget(&example());
        assert_eq!(gg.graph.n(), 10);
        assert_eq!(gg.graph.m(), 15);
        // a=0 b=1 z1=2 z2=3 u1=4 w1=5 v1=6 u2=7 w2=8 v2=9
        let expected = [
            (0, 2),
            (0, 3),
            (0, 4),
            (0, 5),
            (0, 7),
            (0, 8),
            (4, 6),
            (5, 6),
            (7, 9),
            (8, 9),
            (1, 6),
            (1, 9),
            (2, 6),
            (3, 6),
            (2, 9),
        ];
        for (u, v) in expected {
            assert!(gg.graph.has_edge(u, v), "{u}-{v}");
        }
        assert!(gg.check_bipartition());
        for (i, &(u, w)) in gg.pendant_vertices.iter().enumerate() {
            for p in [u, w] {
                let nb: Vec<usize> = gg.graph.neighbors(p).to_vec();
                assert_eq!(nb, vec![gg.a, gg.set_vertex[i]]);
            }
        }
    }

    #[test]
    fn empty_instance() {
        let inst = SetCoverInstance::new(vec![], vec![], 0).unwrap();
        let gg = build_gadget(&inst);
        assert_eq!((gg.graph.n(), gg.graph.m()), (2, 0));
        assert!(gg.check_bipartition());
        assert_eq!(reduction_budget(&inst), 0);
        assert_eq!(cover_to_separator(&gg, &[]).unwrap(), Separator::default());
    }

    #[test]
    fn budget_arithmetic() {
        assert_eq!(reduction_budget(&example()), 5);
        let inst =
            SetCoverInstance::new(vec![1, 2, 3], vec![vec![1], vec![2], vec![3]], 2).unwrap();
        assert_eq!(reduction_budget(&inst), 8);
    }

    #[test]
    fn rejects_foreign_elements() {
        assert!(SetCoverInstance::new(vec![1, 2], vec![vec![3]], 1).is_err());
        assert!(SetCoverInstance::new(vec![1, 1], vec![], 1).is_err());
    }

    #[test]
    fn cover_round_trip() {
        let gg = build_gadget(&example());
        let s = cover_to_separator(&gg, &[0]).unwrap();
        assert_eq!(s, Separator::from([2, 3, 9, 4, 5]));
        assert!(brute_minimal_separators(&gg.graph, 0, 1, None)
            .unwrap()
            .contains(&s));
        assert_eq!(separator_to_cover(&gg, &s).unwrap(), vec![0]);
        assert!(cover_to_separator(&gg, &[1]).is_err());
    }

    #[test]
    fn whole_family_cover() {
        let inst = SetCoverInstance::new(vec![1, 2], vec![vec![1], vec![2]], 2).unwrap();
        let gg = build_gadget(&inst);
        let s = cover_to_separator(&gg, &[0, 1]).unwrap();
        let mut expected = gg.element_vertex.clone();
        for &(u, w) in &gg.pendant_vertices {
            expected.extend([u, w]);
        }
        assert_eq!(s, Separator::new(expected.into()));
    }

    #[test]
    fn every_delta_member_maps_to_a_cover() {
        let gg = build_gadget(&example());
        let delta = brute_delta(
            &gg.graph,
            Some(gg.size_bound()),
            &VertexSet::singleton(gg.a),
            &gg.element_set(),
            gg.a,
            gg.b,
        )
        .unwrap();
        assert!(!delta.is_empty());
        for s in &delta {
            let cover = separator_to_cover(&gg, s).unwrap();
            assert_eq!(
                gg.instance.universe().len() + gg.instance.family().len() + cover.len(),
                s.len()
            );
        }
    }

    #[test]
    fn separator_outside_delta_is_rejected() {
        let gg = build_gadget(&example());
        // {v1, v2} separates a from b but misses the element vertices
        assert!(separator_to_cover(&gg, &Separator::from([6, 9])).is_err());
    }

    #[test]
    fn bridge_strips_terminals() {
        let gg = build_gadget(&example());
        let (h, map) = vertex_cover_bridge(&gg.graph, gg.a, gg.b).unwrap();
        assert_eq!(h.n(), 8);
        assert_eq!(map[0], 2);
        assert_eq!(h.m(), 15 - 6 - 2);
    }
}
