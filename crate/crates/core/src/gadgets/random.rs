//! Seeded random instances.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::{Graph, Hypergraph, VertexSet};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `G(n, density)`: every pair is an edge independently.
pub fn random_graph<R: Rng>(n: usize, density: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if rng.gen_bool(density.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("generated edges are valid")
}

/// `m` edges of uniformly random sizes in `1..=max_rank` over `n`
/// vertices. Vertices missed by every edge are dropped and the rest
/// relabeled in order, so the result may have fewer than `n` vertices.
pub fn random_hypergraph<R: Rng>(n: usize, m: usize, max_rank: usize, rng: &mut R) -> Result<Hypergraph> {
    if n == 0 || m == 0 || max_rank == 0 {
        return Err(Error::invalid("n, m and the rank must be positive"));
    }
    let edges: Vec<VertexSet> = (0..m)
        .map(|_| {
            let k = rng.gen_range(1..=max_rank.min(n));
            sample(rng, n, k).iter().map(|v| v as u32).collect()
        })
        .collect();
    let covered = edges.iter().fold(VertexSet::new(), |a, e| a.union(e));
    let mut relabel = vec![0u32; n];
    for (i, v) in covered.iter().enumerate() {
        relabel[v as usize] = i as u32;
    }
    Hypergraph::new(covered.len(), edges.iter().map(|e| e.map(|v| relabel[v as usize])).collect())
}
