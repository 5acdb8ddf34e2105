//! Exhaustive and seeded instance collections.

use std::collections::HashSet;
use std::sync::OnceLock;

use itertools::Itertools;

use super::random::{random_graph, random_hypergraph, rng};
use crate::{Graph, Hypergraph};

/// Largest order for which [`all_graphs`] is available.
pub const EXHAUSTIVE_MAX_N: usize = 7;

/// Upper-triangle adjacency bits of `g` under the vertex order `order`.
fn code_under(g: &Graph, order: &[u32]) -> u64 {
    let mut code = 0u64;
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            code = code << 1 | g.adjacent(order[i], order[j]) as u64;
        }
    }
    code
}

/// Isomorphism-invariant code of a graph with at most 11 vertices: the
/// largest adjacency code over the orders that sort vertices by degree and
/// neighbour degrees.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= 11, "canonical codes fit graphs with at most 11 vertices");
    let key = |v: u32| {
        let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&u| g.degree(u)).collect();
        nd.sort_unstable();
        (g.degree(v), nd)
    };
    let mut verts: Vec<u32> = (0..n as u32).collect();
    verts.sort_by_key(|&v| key(v));
    let classes: Vec<Vec<u32>> = verts.into_iter().chunk_by(|&v| key(v)).into_iter().map(|(_, c)| c.collect()).collect();
    classes
        .iter()
        .map(|c| c.iter().copied().permutations(c.len()).collect::<Vec<_>>())
        .multi_cartesian_product()
        .map(|parts| code_under(g, &parts.concat()))
        .max()
        .unwrap_or(0)
}

fn from_code(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = n * n.saturating_sub(1) / 2;
    for i in 0..n as u32 {
        for j in i + 1..n as u32 {
            bit -= 1;
            if code >> bit & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, &edges).expect("codes describe simple graphs")
}

/// One graph from every isomorphism class on `n <= 7` vertices, ordered by
/// edge count and then by canonical code.
pub fn all_graphs(n: usize) -> &'static [Graph] {
    static LEVELS: OnceLock<Vec<Vec<Graph>>> = OnceLock::new();
    assert!(n <= EXHAUSTIVE_MAX_N, "exhaustive lists stop at {EXHAUSTIVE_MAX_N} vertices");
    let levels = LEVELS.get_or_init(|| {
        let mut levels = vec![vec![Graph::empty(0)]];
        for k in 1..=EXHAUSTIVE_MAX_N {
            let mut seen = HashSet::new();
            let mut next = Vec::new();
            for g in &levels[k - 1] {
                for mask in 0u32..1 << (k - 1) {
                    let mut edges: Vec<(u32, u32)> = g.edges().collect();
                    edges.extend((0..k as u32 - 1).filter(|&v| mask >> v & 1 == 1).map(|v| (v, k as u32 - 1)));
                    let code = canonical_code(&Graph::new(k, &edges).unwrap());
                    if seen.insert(code) {
                        next.push(from_code(k, code));
                    }
                }
            }
            next.sort_by_key(|g| (g.m(), canonical_code(g)));
            levels.push(next);
        }
        levels
    });
    &levels[n]
}

/// Every graph on at most `max_n <= 7` vertices, by order.
pub fn graphs_up_to(max_n: usize) -> impl Iterator<Item = &'static Graph> {
    (0..=max_n).flat_map(all_graphs)
}

/// Seeded random graphs on `n` vertices with densities spread over
/// `0.15..=0.85`.
pub fn random_graphs(n: usize, count: usize, seed: u64) -> Vec<Graph> {
    let mut r = rng(seed);
    (0..count).map(|i| random_graph(n, 0.15 + 0.7 * i as f64 / count.max(2) as f64, &mut r)).collect()
}

/// Seeded random hypergraphs with at most `n` vertices, `m` edges and rank
/// `r`; the edge count varies from 1 to `m`.
pub fn random_hypergraphs(n: usize, m: usize, r: usize, count: usize, seed: u64) -> Vec<Hypergraph> {
    let mut g = rng(seed);
    (0..count).map(|i| random_hypergraph(n, 1 + i % m, r, &mut g).expect("positive parameters")).collect()
}

/// The default graph suite: every graph on at most 7 vertices plus 100
/// seeded random graphs on each of 8 and 9 vertices.
pub fn default_graph_corpus() -> Vec<Graph> {
    let mut out: Vec<Graph> = graphs_up_to(EXHAUSTIVE_MAX_N).cloned().collect();
    out.extend(random_graphs(8, 100, 8));
    out.extend(random_graphs(9, 100, 9));
    out
}

/// The default hypergraph suite: 1000 seeded random hypergraphs with
/// `n <= 8`, `m <= 6` and rank at most 5.
pub fn default_hypergraph_corpus() -> Vec<Hypergraph> {
    random_hypergraphs(8, 6, 5, 1000, 1)
}
