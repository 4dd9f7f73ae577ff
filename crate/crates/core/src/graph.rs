//! Simple undirected graphs on at most 64 vertices, one bitset row per
//! vertex. Adjacency tests are O(1) and whole-neighborhood operations are
//! single word ops, which is what the exhaustive searches elsewhere in the
//! crate lean on.

use crate::degseq::DegreeSequence;
use crate::error::{Error, Result};

/// Hard cap imposed by the one-word-per-row representation.
pub const MAX_VERTICES: usize = 64;

/// Simple undirected graph with dense vertex labels `0..n`.
///
/// Invariants: no loops, no multi-edges, `m <= n(n-1)/2`. Values are
/// immutable in practice: every combinator returns a fresh graph, so sharing
/// across threads is safe.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
    m: usize,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Graph {
        assert!(
            n <= MAX_VERTICES,
            "graph order {n} exceeds the supported maximum of {MAX_VERTICES}"
        );
        Graph {
            n,
            rows: vec![0; n],
            m: 0,
        }
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Complete bipartite graph; block `0..a` first, block `a..a+b` second.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut g = Graph::empty(a + b);
        for u in 0..a {
            for v in a..(a + b) {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Cycle with edges `i -- (i+1 mod n)`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!(
                "cycle needs at least 3 vertices, got {n}"
            )));
        }
        let mut g = Graph::empty(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        Ok(g)
    }

    /// `k` disjoint edges (the graph `kK_2`) on vertices `2i -- 2i+1`.
    pub fn matching(k: usize) -> Graph {
        let mut g = Graph::empty(2 * k);
        for i in 0..k {
            g.add_edge(2 * i, 2 * i + 1);
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::InvalidParameter(format!(
                "graph order {n} exceeds the supported maximum of {MAX_VERTICES}"
            )));
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge ({u}, {v}) out of range for n = {n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.rows[u] >> v & 1 == 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n);
        if !self.has_edge(u, v) {
            self.rows[u] |= 1 << v;
            self.rows[v] |= 1 << u;
            self.m += 1;
        }
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if self.has_edge(u, v) {
            self.rows[u] &= !(1 << v);
            self.rows[v] &= !(1 << u);
            self.m -= 1;
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    /// Neighborhood of `v` as a bitmask.
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.rows[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.rows[v])
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Mask with one bit per vertex.
    pub fn vertex_mask(&self) -> u64 {
        mask_below(self.n)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n)
            .flat_map(move |u| BitIter(self.rows[u] & !mask_below(u + 1)).map(move |v| (u, v)))
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        self.m == self.n * self.n.saturating_sub(1) / 2
    }

    /// Vertices adjacent to everything else.
    pub fn universal_mask(&self) -> u64 {
        let mut mask = 0;
        for v in 0..self.n {
            if self.degree(v) == self.n - 1 {
                mask |= 1 << v;
            }
        }
        mask
    }

    /// Join: disjoint union plus all edges between the two parts. Vertices of
    /// `other` are relabeled by offset `self.n()`.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in self.n..(self.n + other.n) {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Disjoint union; vertices of `other` are relabeled by offset `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut g = Graph::empty(n);
        for v in 0..self.n {
            g.rows[v] = self.rows[v];
        }
        for v in 0..other.n {
            g.rows[self.n + v] = other.rows[v] << self.n;
        }
        g.m = self.m + other.m;
        g
    }

    /// Disjoint union of `k` copies; `k = 0` yields the empty graph on 0
    /// vertices.
    pub fn k_copies(k: usize, g: &Graph) -> Graph {
        let mut out = Graph::empty(0);
        for _ in 0..k {
            out = out.disjoint_union(g);
        }
        out
    }

    /// Non-decreasing degree sequence.
    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut degrees: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        degrees.sort_unstable();
        DegreeSequence::from_sorted(degrees)
    }

    /// Number of connected components (0 for the empty graph).
    pub fn components(&self) -> usize {
        self.components_within(self.vertex_mask())
    }

    /// Number of connected components of the subgraph induced by `alive`.
    pub(crate) fn components_within(&self, alive: u64) -> usize {
        let mut remaining = alive;
        let mut count = 0;
        while remaining != 0 {
            let start = remaining & remaining.wrapping_neg();
            let mut comp = start;
            loop {
                let mut grown = comp;
                let mut frontier = comp;
                while frontier != 0 {
                    let v = frontier.trailing_zeros() as usize;
                    frontier &= frontier - 1;
                    grown |= self.rows[v] & alive;
                }
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            remaining &= !comp;
            count += 1;
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components() == 1
    }

    /// Induced subgraph `G[V \ S]` with compacted labels. Returns the graph
    /// together with the label map `new -> old`.
    pub fn delete_vertices(&self, removed: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut removed_mask = 0u64;
        for &v in removed {
            if v >= self.n {
                return Err(Error::InvalidParameter(format!(
                    "vertex {v} not in graph of order {}",
                    self.n
                )));
            }
            removed_mask |= 1 << v;
        }
        let kept: Vec<usize> = (0..self.n).filter(|v| removed_mask >> v & 1 == 0).collect();
        let mut g = Graph::empty(kept.len());
        for (new_u, &old_u) in kept.iter().enumerate() {
            for (new_v, &old_v) in kept.iter().enumerate().skip(new_u + 1) {
                if self.has_edge(old_u, old_v) {
                    g.add_edge(new_u, new_v);
                }
            }
        }
        Ok((g, kept))
    }

    /// Proper 2-coloring (0/1 per vertex) when one exists.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for v in self.neighbors(u) {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        stack.push(v);
                    } else if color[v] == color[u] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.m)
    }
}

impl std::fmt::Display for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match crate::format::graph6_encode(self) {
            Ok(text) => write!(f, "{text}"),
            Err(_) => write!(f, "Graph(n={}, m={})", self.n, self.m),
        }
    }
}

/// The family `S_n` from the exceptional clause of the pancyclicity
/// propositions: a clique on `n/2` vertices, a perfect matching on the other
/// `n/2`, and a perfect matching across. Requires `n` divisible by 4 so the
/// inner matching exists.
///
/// Canonical labeling: clique `0..n/2`; matching edges
/// `(n/2 + 2i) -- (n/2 + 2i + 1)`; cross edges `i -- (n/2 + i)`. Any other
/// bijection across gives an isomorphic graph.
pub fn s_graph(n: usize) -> Result<Graph> {
    if n == 0 || !n.is_multiple_of(4) {
        return Err(Error::InvalidParameter(format!(
            "S-graph needs order divisible by 4 (no perfect matching on {} vertices), got {n}",
            n / 2
        )));
    }
    let half = n / 2;
    let mut g = Graph::complete(half).disjoint_union(&Graph::matching(half / 2));
    for i in 0..half {
        g.add_edge(i, half + i);
    }
    Ok(g)
}

/// Whether `g` is isomorphic to the `S_n` family: the degree classes split
/// into a clique of high-degree vertices and a perfectly matched set of
/// degree-2 vertices, matched one-to-one across. Checking the structure per
/// degree class decides isomorphism without search.
pub fn is_s_graph(g: &Graph) -> bool {
    let n = g.n();
    if n < 8 || !n.is_multiple_of(4) {
        return false;
    }
    let half = n / 2;
    let high: Vec<usize> = (0..n).filter(|&v| g.degree(v) == half).collect();
    let low: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 2).collect();
    if high.len() != half || low.len() != half {
        return false;
    }
    for (i, &u) in high.iter().enumerate() {
        for &v in &high[i + 1..] {
            if !g.has_edge(u, v) {
                return false;
            }
        }
    }
    let low_mask: u64 = low.iter().map(|&v| 1u64 << v).sum();
    let high_mask: u64 = high.iter().map(|&v| 1u64 << v).sum();
    low.iter().all(|&v| {
        (g.neighbor_mask(v) & low_mask).count_ones() == 1
            && (g.neighbor_mask(v) & high_mask).count_ones() == 1
    }) && high
        .iter()
        .all(|&v| (g.neighbor_mask(v) & low_mask).count_ones() == 1)
}

pub(crate) fn mask_below(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    pub(crate) fn random_graph(n: usize, edge_prob: f64, rng: &mut SplitMix64) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.next_f64() < edge_prob {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    #[test]
    fn standard_graphs() {
        let k4 = Graph::complete(4);
        assert_eq!(k4.edge_count(), 6);
        assert_eq!(k4.degree_sequence().as_slice(), &[3, 3, 3, 3]);

        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.edge_count(), 5);
        assert!(c5.vertices().all(|v| c5.degree(v) == 2));

        let k23 = Graph::complete_bipartite(2, 3);
        assert_eq!(k23.edge_count(), 6);
        assert!(k23.is_bipartite());
        assert_eq!(k23.degree_sequence().as_slice(), &[2, 2, 2, 3, 3]);

        assert!(Graph::cycle(2).is_err());
    }

    #[test]
    fn join_degree_sequences() {
        let g = Graph::complete(1).join(&Graph::complete(4).disjoint_union(&Graph::complete(2)));
        assert_eq!(g.n(), 7);
        assert_eq!(g.edge_count(), 13);
        assert_eq!(g.degree_sequence().as_slice(), &[2, 2, 4, 4, 4, 4, 6]);

        let g = Graph::complete(3).join(&Graph::k_copies(3, &Graph::complete(2)));
        assert_eq!(g.n(), 9);
        assert_eq!(g.edge_count(), 24);
        assert_eq!(g.degree_sequence().as_slice(), &[4, 4, 4, 4, 4, 4, 8, 8, 8]);

        let h = Graph::cycle(5).unwrap();
        assert_eq!(Graph::empty(0).join(&h), h);
    }

    #[test]
    fn join_degree_multiset_identity() {
        // deg multiset of G v H = {d + n_H : d in deg G} u {d + n_G : d in deg H}
        let mut rng = SplitMix64::new(41);
        for _ in 0..50 {
            let g = random_graph(2 + rng.next_below(6), 0.5, &mut rng);
            let h = random_graph(1 + rng.next_below(6), 0.5, &mut rng);
            let mut expected: Vec<usize> = g
                .vertices()
                .map(|v| g.degree(v) + h.n())
                .chain(h.vertices().map(|v| h.degree(v) + g.n()))
                .collect();
            expected.sort_unstable();
            assert_eq!(g.join(&h).degree_sequence().as_slice(), &expected[..]);
        }
    }

    #[test]
    fn unions_and_copies() {
        let g = Graph::k_copies(3, &Graph::complete(2));
        assert_eq!((g.n(), g.edge_count()), (6, 3));
        assert!(g.vertices().all(|v| g.degree(v) == 1));

        let g = Graph::matching(2).disjoint_union(&Graph::complete(1));
        assert_eq!((g.n(), g.edge_count()), (5, 2));

        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(Graph::k_copies(1, &c5), c5);
        assert_eq!(Graph::k_copies(0, &c5).n(), 0);
    }

    #[test]
    fn degree_sum_is_twice_edge_count() {
        let mut rng = SplitMix64::new(99);
        for _ in 0..100 {
            let g = random_graph(1 + rng.next_below(12), 0.4, &mut rng);
            assert_eq!(g.degree_sequence().sum(), 2 * g.edge_count());
        }
    }

    #[test]
    fn bipartite_detection() {
        assert!(Graph::cycle(4).unwrap().is_bipartite());
        assert!(!Graph::cycle(5).unwrap().is_bipartite());
        assert!(Graph::complete_bipartite(2, 3).is_bipartite());
        let coloring = Graph::complete_bipartite(2, 3).bipartition().unwrap();
        assert_eq!(coloring[0], coloring[1]);
        assert_ne!(coloring[0], coloring[2]);
    }

    #[test]
    fn components_and_deletion() {
        assert_eq!(Graph::k_copies(3, &Graph::complete(2)).components(), 3);
        assert_eq!(Graph::complete(7).components(), 1);

        let apex = Graph::complete(1).join(&Graph::complete(4).disjoint_union(&Graph::complete(2)));
        let (without_apex, map) = apex.delete_vertices(&[0]).unwrap();
        assert_eq!(without_apex.components(), 2);
        assert_eq!(map, vec![1, 2, 3, 4, 5, 6]);

        assert!(apex.delete_vertices(&[9]).is_err());
    }

    #[test]
    fn components_agree_with_union_find_oracle() {
        fn union_find_components(g: &Graph) -> usize {
            let mut parent: Vec<usize> = (0..g.n()).collect();
            fn find(parent: &mut Vec<usize>, v: usize) -> usize {
                if parent[v] != v {
                    let root = find(parent, parent[v]);
                    parent[v] = root;
                }
                parent[v]
            }
            for (u, v) in g.edges() {
                let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                parent[ru] = rv;
            }
            (0..g.n()).filter(|&v| find(&mut parent, v) == v).count()
        }

        let mut rng = SplitMix64::new(2024);
        for _ in 0..200 {
            let n = 1 + rng.next_below(10);
            let g = random_graph(n, 0.3, &mut rng);
            assert_eq!(g.components(), union_find_components(&g));
            // Agreement also after deleting a random subset.
            let removed: Vec<usize> = (0..n).filter(|_| rng.next_f64() < 0.3).collect();
            let (induced, _) = g.delete_vertices(&removed).unwrap();
            assert_eq!(induced.components(), union_find_components(&induced));
        }
    }

    #[test]
    fn s_graph_construction() {
        let s8 = s_graph(8).unwrap();
        assert_eq!(s8.degree_sequence().as_slice(), &[2, 2, 2, 2, 4, 4, 4, 4]);
        assert_eq!(s8.edge_count(), 12);

        let s12 = s_graph(12).unwrap();
        assert_eq!(
            s12.degree_sequence().as_slice(),
            &[2, 2, 2, 2, 2, 2, 6, 6, 6, 6, 6, 6]
        );

        assert!(s_graph(10).is_err());
    }
}
