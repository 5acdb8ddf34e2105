//! Fixed instances shared by the benchmarks.

use hellykit::gadgets::random::{random_graph, random_hypergraph, rng};
use hellykit::{Graph, Hypergraph, VertexSet};

/// A random hypergraph of rank at most `rank`.
pub fn hypergraph(n: usize, m: usize, rank: usize, seed: u64) -> Hypergraph {
    random_hypergraph(n, m, rank, &mut rng(seed)).expect("valid parameters")
}

/// The same hypergraph with one extra vertex added to every edge, so that
/// all edges share a vertex and every Helly property holds.
pub fn coned(h: &Hypergraph) -> Hypergraph {
    let apex = h.n() as u32;
    let edges = h.edges().iter().map(|e| e.union(&VertexSet::singleton(apex))).collect();
    Hypergraph::partial(h.n() + 1, edges).expect("valid edges")
}

pub fn graph(n: usize, density: f64, seed: u64) -> Graph {
    random_graph(n, density, &mut rng(seed))
}
