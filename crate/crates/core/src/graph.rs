//! Intersection graphs and the edit properties.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::Serialize;

use crate::geometry::{disks_intersect, intervals_intersect, Disk, IntervalCollection};
use crate::rational::Rational;

/// Largest non-interval graph accepted by [`has_k_clique`].
pub const CLIQUE_SEARCH_CAP: usize = 25;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("interval collection is not sorted by center")]
    Unsorted,
    #[error("exhaustive clique search limited to {cap} vertices, got {n}")]
    TooLarge { n: usize, cap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    /// Sorted copy of the collection; vertex `i` is `items[i]` of the input.
    Intervals(IntervalCollection),
    Disks,
}

#[derive(Debug, Clone)]
pub struct IntersectionGraph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
    source: Source,
}

#[derive(Debug, Clone, Serialize)]
pub struct EdgeList {
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize)>,
}

impl IntersectionGraph {
    fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>, source: Source) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        let mut edge_count = 0;
        for (a, b) in edges {
            debug_assert!(a != b);
            adjacency[a].push(b);
            adjacency[b].push(a);
            edge_count += 1;
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        IntersectionGraph { adjacency, edge_count, source }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].binary_search(&b).is_ok()
    }

    pub fn source(&self) -> &Source {
        &self.source
    }

    /// Edges `(a, b)` with `a < b`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (a, list) in self.adjacency.iter().enumerate() {
            out.extend(list.iter().filter(|&&b| a < b).map(|&b| (a, b)));
        }
        out
    }

    pub fn edge_list(&self) -> EdgeList {
        EdgeList { vertex_count: self.vertex_count(), edges: self.edges() }
    }
}

/// Sweep over left endpoints; every interval still open when a new one starts
/// meets it, so the work is O(n log n + |E|).
pub fn build_interval_graph(objects: &IntervalCollection) -> IntersectionGraph {
    let n = objects.len();
    let mut by_left: Vec<usize> = (0..n).collect();
    let lefts: Vec<Rational> = objects.items.iter().map(|i| i.left()).collect();
    let rights: Vec<Rational> = objects.items.iter().map(|i| i.right()).collect();
    by_left.sort_by(|&a, &b| lefts[a].cmp(&lefts[b]));
    let mut active: BinaryHeap<Reverse<(Rational, usize)>> = BinaryHeap::new();
    let mut edges = Vec::new();
    for &i in &by_left {
        while let Some(Reverse((r, _))) = active.peek() {
            if *r <= lefts[i] {
                active.pop();
            } else {
                break;
            }
        }
        for Reverse((_, j)) in active.iter() {
            edges.push((*j, i));
        }
        active.push(Reverse((rights[i].clone(), i)));
    }
    let mut sorted = objects.sorted();
    sorted.sorted = true;
    IntersectionGraph::from_edges(n, edges, Source::Intervals(sorted))
}

/// Pairwise test; gadget collections are small.
pub fn build_disk_graph(disks: &[Disk]) -> IntersectionGraph {
    let mut edges = Vec::new();
    for a in 0..disks.len() {
        for b in a + 1..disks.len() {
            if disks_intersect(&disks[a], &disks[b]) {
                edges.push((a, b));
            }
        }
    }
    IntersectionGraph::from_edges(disks.len(), edges, Source::Disks)
}

/// O(n^2) reference construction.
pub fn build_interval_graph_naive(objects: &IntervalCollection) -> IntersectionGraph {
    let items = &objects.items;
    let mut edges = Vec::new();
    for a in 0..items.len() {
        for b in a + 1..items.len() {
            if intervals_intersect(&items[a], &items[b]) {
                edges.push((a, b));
            }
        }
    }
    IntersectionGraph::from_edges(items.len(), edges, Source::Intervals(objects.sorted()))
}

pub fn is_edgeless(g: &IntersectionGraph) -> bool {
    g.edge_count() == 0
}

/// Union-find cycle detection; valid for any simple graph.
pub fn is_acyclic(g: &IntersectionGraph) -> bool {
    let n = g.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    for (a, b) in g.edges() {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            return false;
        }
        parent[ra] = rb;
    }
    true
}

/// Maximum number of pairwise-intersecting intervals: the deepest point of
/// the open-interval arrangement. Closing events sort before opening events
/// at the same coordinate.
pub fn max_clique_interval(sorted: &IntervalCollection) -> Result<usize, GraphError> {
    if !sorted.is_sorted() {
        return Err(GraphError::Unsorted);
    }
    let mut events: Vec<(Rational, i32)> = Vec::with_capacity(2 * sorted.len());
    for it in &sorted.items {
        events.push((it.left(), 1));
        events.push((it.right(), -1));
    }
    events.sort();
    let mut depth = 0i64;
    let mut best = 0i64;
    for (_, delta) in events {
        depth += delta as i64;
        best = best.max(depth);
    }
    Ok(best as usize)
}

/// Maximum clique by bitmask branch and bound, for graphs up to the cap.
pub fn max_clique_exhaustive(g: &IntersectionGraph) -> Result<usize, GraphError> {
    let n = g.vertex_count();
    if n > CLIQUE_SEARCH_CAP {
        return Err(GraphError::TooLarge { n, cap: CLIQUE_SEARCH_CAP });
    }
    let masks: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | (1 << u)))
        .collect();
    fn grow(masks: &[u32], size: usize, candidates: u32, best: &mut usize) {
        if candidates == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + candidates.count_ones() as usize <= *best {
            return;
        }
        let mut rest = candidates;
        while rest != 0 {
            if size + rest.count_ones() as usize <= *best {
                return;
            }
            let v = rest.trailing_zeros() as usize;
            rest &= !(1 << v);
            grow(masks, size + 1, rest & masks[v], best);
        }
    }
    let mut best = 0;
    let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    grow(&masks, 0, all, &mut best);
    Ok(best)
}

pub fn has_k_clique(g: &IntersectionGraph, k: usize) -> Result<bool, GraphError> {
    if k == 0 {
        return Ok(true);
    }
    let omega = match g.source() {
        Source::Intervals(sorted) => max_clique_interval(sorted)?,
        Source::Disks => max_clique_exhaustive(g)?,
    };
    Ok(omega >= k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn units(cs: &[Rational]) -> IntervalCollection {
        IntervalCollection::unit(cs)
    }

    #[test]
    fn build_examples() {
        let g = build_interval_graph(&units(&[q(0, 1), q(1, 1), q(2, 1)]));
        assert_eq!((g.vertex_count(), g.edge_count()), (3, 0));
        let g = build_interval_graph(&units(&[q(0, 1), q(1, 2), q(1, 1)]));
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        let g = build_interval_graph(&units(&[]));
        assert_eq!(g.vertex_count(), 0);
    }

    #[test]
    fn property_examples() {
        let path = build_interval_graph(&units(&[q(0, 1), q(1, 2), q(1, 1), q(3, 2)]));
        assert!(is_acyclic(&path));
        assert!(!is_edgeless(&path));
        let tri = build_interval_graph(&units(&[q(0, 1), q(1, 4), q(1, 2)]));
        assert!(!is_acyclic(&tri));
        assert!(has_k_clique(&tri, 3).unwrap());
        let none = build_interval_graph(&units(&[q(0, 1), q(5, 1)]));
        assert!(is_edgeless(&none));
        assert!(!has_k_clique(&none, 2).unwrap());
        assert!(has_k_clique(&none, 1).unwrap());
    }

    #[test]
    fn clique_sweep_examples() {
        let s = |cs: &[Rational]| units(cs).sorted();
        assert_eq!(max_clique_interval(&s(&[q(0, 1), q(1, 1), q(2, 1)])).unwrap(), 1);
        assert_eq!(max_clique_interval(&s(&[q(0, 1), q(1, 4), q(1, 2)])).unwrap(), 3);
        assert_eq!(max_clique_interval(&s(&[q(0, 1), q(1, 2), q(1, 1)])).unwrap(), 2);
        assert_eq!(
            max_clique_interval(&units(&[q(1, 1), q(0, 1)])),
            Err(GraphError::Unsorted)
        );
    }

    #[test]
    fn disk_clique_cap() {
        use crate::geometry::{DiskKind, Metric, Point};
        let disks: Vec<Disk> = (0..26)
            .map(|i| Disk::unit(Point::from_ints(i, 0), DiskKind::Transition, Metric::L2))
            .collect();
        let g = build_disk_graph(&disks);
        assert!(is_edgeless(&g));
        assert!(matches!(has_k_clique(&g, 2), Err(GraphError::TooLarge { .. })));
        let g = build_disk_graph(&disks[..3]);
        assert!(!has_k_clique(&g, 2).unwrap());
    }
}
