//! Exhaustive reference implementations used as ground truth in tests and by
//! the `--oracle` CLI mode.
//!
//! Nothing here calls the fast enumerators or the full-component test in
//! [`crate::graph`]. Connectivity is recomputed over `u64` bitmasks and
//! minimality uses the deletion formulation: `S` separates, and putting any
//! single vertex of `S` back reconnects the two sides. Subsets are scanned by
//! size, then lexicographically.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{Graph, Separator, VertexSet};
use crate::hardness::SetCoverInstance;

/// Largest vertex count accepted for an unbounded subset scan.
pub const MAX_UNBOUNDED_N: usize = 22;
/// Largest number of candidate subsets any scan will visit.
pub const MAX_SUBSETS: u64 = 1 << 22;
/// Largest family accepted by [`brute_set_cover`].
pub const MAX_FAMILY: usize = 20;

struct Masks {
    adj: Vec<u64>,
}

impl Masks {
    fn new(g: &Graph) -> Result<Self> {
        if g.n() > 64 {
            return Err(Error::TooLarge(format!("{} vertices", g.n())));
        }
        let adj = (0..g.n())
            .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
            .collect();
        Ok(Masks { adj })
    }

    /// Vertices reachable from `from` while avoiding `blocked`.
    fn reach(&self, from: u64, blocked: u64) -> u64 {
        let mut seen = from & !blocked;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v];
            }
            next &= !blocked & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Component containing all of `side` in `G \ s`, or `None` if `side` is
    /// split across components.
    fn side_component(&self, side: u64, s: u64) -> Option<u64> {
        let first = side & side.wrapping_neg();
        let comp = self.reach(first, s);
        (comp & side == side).then_some(comp)
    }

    /// Deletion-based minimality: the sides are separated by `s`, and every
    /// vertex of `s` reconnects them when restored.
    fn is_minimal(&self, a_side: u64, b_side: u64, s: u64) -> Option<u64> {
        let comp_a = self.side_component(a_side, s)?;
        if comp_a & b_side != 0 {
            return None;
        }
        let comp_b = self.side_component(b_side, s)?;
        let mut rest = s;
        while rest != 0 {
            let v = rest & rest.wrapping_neg();
            rest &= rest - 1;
            if self.reach(comp_a, s & !v) & comp_b == 0 {
                return None;
            }
        }
        Some(comp_a)
    }
}

fn bits(xs: &VertexSet) -> u64 {
    xs.iter().fold(0, |m, v| m | 1 << v)
}

fn to_set(mask: u64) -> VertexSet {
    (0..64).filter(|v| mask >> v & 1 == 1).collect()
}

fn binomial_sum(n: usize, k: usize) -> u64 {
    let mut total = 0u64;
    let mut c = 1u64;
    for i in 0..=k.min(n) {
        total = total.saturating_add(c);
        c = c.saturating_mul((n - i) as u64) / (i as u64 + 1);
    }
    total
}

/// Every subset of `free` with size at most `max_size`, as bitmasks, by size
/// then lexicographic order of members.
fn subsets(free: &[usize], max_size: usize) -> impl Iterator<Item = u64> + '_ {
    (0..=max_size.min(free.len())).flat_map(move |size| {
        free.iter()
            .combinations(size)
            .map(|c| c.into_iter().fold(0u64, |m, &v| m | 1 << v))
    })
}

fn guard(free: usize, bound: Option<usize>) -> Result<usize> {
    let max_size = match bound {
        Some(k) => k.min(free),
        None if free > MAX_UNBOUNDED_N => {
            return Err(Error::TooLarge(format!(
                "unbounded scan over {free} free vertices"
            )))
        }
        None => free,
    };
    if binomial_sum(free, max_size) > MAX_SUBSETS {
        return Err(Error::TooLarge(format!(
            "{free} free vertices with size bound {max_size}"
        )));
    }
    Ok(max_size)
}

/// All minimal a,b-separators with at most `bound` vertices (`None`: any size).
pub fn brute_minimal_separators(
    g: &Graph,
    a: usize,
    b: usize,
    bound: Option<usize>,
) -> Result<BTreeSet<Separator>> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    if a == b {
        return Err(Error::invalid("terminals must be distinct"));
    }
    let masks = Masks::new(g)?;
    let free: Vec<usize> = (0..g.n()).filter(|&v| v != a && v != b).collect();
    let max_size = guard(free.len(), bound)?;
    Ok(subsets(&free, max_size)
        .filter(|&s| masks.is_minimal(1 << a, 1 << b, s).is_some())
        .map(|s| Separator::new(to_set(s)))
        .collect())
}

/// Δ(G, k, C, X): minimal a,b-separators avoiding `c`, containing `x`, with
/// at most `bound` vertices. Only supersets of `x` are scanned.
pub fn brute_delta(
    g: &Graph,
    bound: Option<usize>,
    c: &VertexSet,
    x: &VertexSet,
    a: usize,
    b: usize,
) -> Result<BTreeSet<Separator>> {
    g.check_set(c)?;
    g.check_set(x)?;
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    if a == b || !c.contains(a) {
        return Err(Error::invalid("node must contain a and not equal b"));
    }
    if c.contains(b) || !c.is_disjoint(x) || x.contains(b) {
        return Ok(BTreeSet::new());
    }
    let masks = Masks::new(g)?;
    let free: Vec<usize> = (0..g.n())
        .filter(|&v| v != b && !c.contains(v) && !x.contains(v))
        .collect();
    let room = match bound {
        Some(k) if k < x.len() => return Ok(BTreeSet::new()),
        Some(k) => Some(k - x.len()),
        None => None,
    };
    let max_size = guard(free.len(), room)?;
    let forced = bits(x);
    Ok(subsets(&free, max_size)
        .map(|s| s | forced)
        .filter(|&s| masks.is_minimal(1 << a, 1 << b, s).is_some())
        .map(|s| Separator::new(to_set(s)))
        .collect())
}

/// Important A,B-separators of size at most `k`, by pairwise comparison of
/// the full list of minimal A,B-separators of size at most `k`.
pub fn brute_important_separators(
    g: &Graph,
    a_side: &VertexSet,
    b_side: &VertexSet,
    k: usize,
) -> Result<BTreeSet<Separator>> {
    let minimal = brute_minimal_set_separators(g, a_side, b_side, k)?;
    Ok(minimal
        .iter()
        .filter(|(s, comp)| {
            !minimal
                .iter()
                .any(|(t, other)| t.len() <= s.len() && other & comp == *comp && other != comp)
        })
        .map(|(s, _)| s.clone())
        .collect())
}

/// Minimal A,B-separators of size at most `k` paired with the bitmask of the
/// component containing A.
fn brute_minimal_set_separators(
    g: &Graph,
    a_side: &VertexSet,
    b_side: &VertexSet,
    k: usize,
) -> Result<Vec<(Separator, u64)>> {
    g.check_set(a_side)?;
    g.check_set(b_side)?;
    if a_side.is_empty() || b_side.is_empty() || !a_side.is_disjoint(b_side) {
        return Err(Error::invalid("sides must be nonempty and disjoint"));
    }
    let masks = Masks::new(g)?;
    let free: Vec<usize> = (0..g.n())
        .filter(|&v| !a_side.contains(v) && !b_side.contains(v))
        .collect();
    let max_size = guard(free.len(), Some(k))?;
    let (am, bm) = (bits(a_side), bits(b_side));
    Ok(subsets(&free, max_size)
        .filter_map(|s| {
            masks
                .is_minimal(am, bm, s)
                .map(|comp| (Separator::new(to_set(s)), comp))
        })
        .collect())
}

/// All minimum-size vertex sets outside `A ∪ B` whose removal disconnects
/// the sides, together with that size. `None` when some edge joins the sides.
pub fn brute_minimum_cuts(
    g: &Graph,
    a_side: &VertexSet,
    b_side: &VertexSet,
) -> Result<Option<(usize, Vec<VertexSet>)>> {
    let masks = Masks::new(g)?;
    let (am, bm) = (bits(a_side), bits(b_side));
    let free: Vec<usize> = (0..g.n())
        .filter(|&v| !a_side.contains(v) && !b_side.contains(v))
        .collect();
    let max_size = guard(free.len(), None)?;
    for size in 0..=max_size {
        let cuts: Vec<VertexSet> = free
            .iter()
            .combinations(size)
            .map(|c| c.into_iter().fold(0u64, |m, &v| m | 1 << v))
            .filter(|&s| masks.reach(am, s) & bm == 0)
            .map(to_set)
            .collect();
        if !cuts.is_empty() {
            return Ok(Some((size, cuts)));
        }
    }
    Ok(None)
}

/// Vertices reachable from `a_side` in `G \ cut`.
pub fn brute_reach(g: &Graph, a_side: &VertexSet, cut: &VertexSet) -> Result<VertexSet> {
    let masks = Masks::new(g)?;
    Ok(to_set(masks.reach(bits(a_side), bits(cut))))
}

/// Maximum number of A-B paths whose interiors (vertices outside `A ∪ B`)
/// are pairwise disjoint. `None` when an edge joins the sides.
pub fn brute_max_disjoint_paths(
    g: &Graph,
    a_side: &VertexSet,
    b_side: &VertexSet,
) -> Result<Option<usize>> {
    let masks = Masks::new(g)?;
    let (am, bm) = (bits(a_side), bits(b_side));
    let mut interiors = BTreeSet::new();
    for a in a_side.iter() {
        if masks.adj[a] & bm != 0 {
            return Ok(None);
        }
        for &v in g.neighbors(a) {
            if (am | bm) >> v & 1 == 0 {
                collect_interiors(&masks, v, 1 << v, am | bm, bm, &mut interiors);
            }
        }
    }
    // keep inclusion-minimal interiors only
    let minimal: Vec<u64> = interiors
        .iter()
        .copied()
        .filter(|&p| !interiors.iter().any(|&q| q != p && q & p == q))
        .collect();
    Ok(Some(max_packing(&minimal, 0, 0)))
}

fn collect_interiors(
    masks: &Masks,
    v: usize,
    used: u64,
    terminals: u64,
    bm: u64,
    out: &mut BTreeSet<u64>,
) {
    if masks.adj[v] & bm != 0 {
        out.insert(used);
    }
    let mut next = masks.adj[v] & !used & !terminals;
    while next != 0 {
        let w = next.trailing_zeros() as usize;
        next &= next - 1;
        collect_interiors(masks, w, used | 1 << w, terminals, bm, out);
    }
}

fn max_packing(paths: &[u64], start: usize, used: u64) -> usize {
    let mut best = 0;
    for i in start..paths.len() {
        if paths[i] & used == 0 {
            best = best.max(1 + max_packing(paths, i + 1, used | paths[i]));
        }
    }
    best
}

/// Smallest subfamily (as indices into the family) of at most `budget`
/// members covering the universe, or `None`.
pub fn brute_set_cover(inst: &SetCoverInstance) -> Result<Option<Vec<usize>>> {
    let family = inst.family();
    if family.len() > MAX_FAMILY {
        return Err(Error::TooLarge(format!("family of {} sets", family.len())));
    }
    let universe: BTreeSet<usize> = inst.universe().iter().copied().collect();
    for size in 0..=inst.budget().min(family.len()) {
        for pick in (0..family.len()).combinations(size) {
            let covered: BTreeSet<usize> = pick
                .iter()
                .flat_map(|&i| family[i].iter().copied())
                .collect();
            if covered == universe {
                return Ok(Some(pick));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    fn seps<const N: usize>(list: [&[usize]; N]) -> BTreeSet<Separator> {
        list.iter()
            .map(|s| Separator::new(VertexSet::from(*s)))
            .collect()
    }

    #[test]
    fn minimal_separator_examples() {
        assert_eq!(
            brute_minimal_separators(&p3(), 0, 2, Some(1)).unwrap(),
            seps([&[1]])
        );
        assert_eq!(
            brute_minimal_separators(&c4(), 0, 3, None).unwrap(),
            seps([&[1, 2]])
        );
        assert_eq!(
            brute_minimal_separators(&g3(), 0, 1, Some(3)).unwrap(),
            seps([&[2, 3, 4], &[2, 3, 5]])
        );
        assert!(brute_minimal_separators(&g3(), 0, 1, Some(2))
            .unwrap()
            .is_empty());
        assert!(brute_minimal_separators(&p3(), 0, 1, None)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn important_separator_examples() {
        let (a, b) = (VertexSet::singleton(1), VertexSet::singleton(0));
        assert_eq!(
            brute_important_separators(&g3(), &a, &b, 3).unwrap(),
            seps([&[2, 3, 4]])
        );
        assert!(brute_important_separators(&g3(), &a, &b, 2)
            .unwrap()
            .is_empty());
        let (a, b) = (VertexSet::singleton(2), VertexSet::singleton(0));
        assert_eq!(
            brute_important_separators(&p3(), &a, &b, 1).unwrap(),
            seps([&[1]])
        );
    }

    #[test]
    fn delta_examples() {
        let c = VertexSet::singleton(0);
        assert_eq!(
            brute_delta(&g3(), Some(3), &c, &VertexSet::singleton(4), 0, 1).unwrap(),
            seps([&[2, 3, 4]])
        );
        assert_eq!(
            brute_delta(&g3(), Some(3), &c, &VertexSet::new(), 0, 1).unwrap(),
            seps([&[2, 3, 4], &[2, 3, 5]])
        );
        // b ∈ N[C]
        let c = VertexSet::from([0, 2]);
        assert!(brute_delta(&g3(), None, &c, &VertexSet::new(), 0, 1)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn delta_at_root_matches_unbounded_scan() {
        for (g, a, b) in [(g3(), 0, 1), (c4(), 0, 3), (p3(), 0, 2)] {
            let root = brute_delta(
                &g,
                Some(g.n()),
                &VertexSet::singleton(a),
                &VertexSet::new(),
                a,
                b,
            );
            assert_eq!(
                root.unwrap(),
                brute_minimal_separators(&g, a, b, None).unwrap()
            );
        }
    }

    #[test]
    fn cut_and_path_oracles_agree_on_g3() {
        let (a, b) = (VertexSet::singleton(1), VertexSet::singleton(0));
        let (size, cuts) = brute_minimum_cuts(&g3(), &a, &b).unwrap().unwrap();
        assert_eq!(size, 3);
        assert_eq!(
            cuts,
            vec![VertexSet::from([2, 3, 4]), VertexSet::from([2, 3, 5])]
        );
        assert_eq!(brute_max_disjoint_paths(&g3(), &a, &b).unwrap(), Some(3));
        assert_eq!(
            brute_max_disjoint_paths(&p3(), &a, &VertexSet::singleton(2)).unwrap(),
            None
        );
    }

    #[test]
    fn set_cover_examples() {
        let inst = SetCoverInstance::new(vec![1, 2], vec![vec![1, 2]], 1).unwrap();
        assert_eq!(brute_set_cover(&inst).unwrap(), Some(vec![0]));
        let inst = SetCoverInstance::new(vec![1, 2], vec![vec![1], vec![2]], 1).unwrap();
        assert_eq!(brute_set_cover(&inst).unwrap(), None);
        let inst =
            SetCoverInstance::new(vec![1, 2, 3], vec![vec![1, 2], vec![2, 3], vec![3]], 2).unwrap();
        assert_eq!(brute_set_cover(&inst).unwrap(), Some(vec![0, 1]));
    }

    #[test]
    fn size_guard() {
        let g = Graph::empty(30);
        assert!(matches!(
            brute_minimal_separators(&g, 0, 1, None),
            Err(Error::TooLarge(_))
        ));
        assert!(brute_minimal_separators(&g, 0, 1, Some(2)).is_ok());
    }

    #[test]
    fn deterministic() {
        let x = brute_minimal_separators(&g3(), 0, 1, None).unwrap();
        let y = brute_minimal_separators(&g3(), 0, 1, None).unwrap();
        assert_eq!(x, y);
    }
}
