//! Shared helpers for the unit tests.

use crate::graph::Graph;
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

/// Random graph patched into connectivity by chaining the components.
pub(crate) fn random_connected_graph(n: usize, edge_prob: f64, rng: &mut SplitMix64) -> Graph {
    let mut g = random_graph(n, edge_prob, rng);
    for v in 1..n {
        if !g.vertices().take(v).any(|u| g.has_edge(u, v)) {
            g.add_edge(rng.next_below(v), v);
        }
    }
    g
}
