//! Lifts and joins that shift the Helly parameters of an instance.

use crate::clique_helly::build_ocular;
use crate::error::{Error, Result};
use crate::{Graph, Hypergraph, VertexSet};

/// Adds `q - 1` new vertices to the universe and to every edge.
pub fn universal_vertex_lift(h: &Hypergraph, q: usize) -> Result<Hypergraph> {
    if q == 0 {
        return Err(Error::invalid("q must be positive"));
    }
    let extra: VertexSet = (h.n() as u32..(h.n() + q - 1) as u32).collect();
    Hypergraph::partial(h.n() + q - 1, h.edges().iter().map(|e| e.union(&extra)).collect())
}

/// Adds `q - 1` universal vertices.
pub fn graph_universal_lift(g: &Graph, q: usize) -> Result<Graph> {
    if q == 0 {
        return Err(Error::invalid("q must be positive"));
    }
    Ok(g.add_universal(q - 1))
}

/// The join of `g` with the `(p+1)`-ocular whose `w` vertices are pairwise
/// nonadjacent, together with `q = k + 1`. The join fails to be hereditary
/// `(p,q)`-clique-Helly exactly when `g` has a `k`-clique.
pub fn clique_join_gadget(g: &Graph, k: usize, p: usize) -> Result<(Graph, usize)> {
    if p < 2 {
        return Err(Error::invalid("the join gadget needs p >= 2"));
    }
    if k == 0 {
        return Err(Error::invalid("k must be positive"));
    }
    let ocular = build_ocular(p, 1, 0, None)?.graph;
    Ok((g.join(&ocular), k + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clique_helly::is_hereditary_pq_clique_helly;
    use crate::helly_hg::is_hereditary_pq_helly;

    #[test]
    fn lifts() {
        let k3_2 = Hypergraph::from_lists(3, &[&[0, 1], &[1, 2], &[0, 2]]).unwrap();
        assert_eq!(universal_vertex_lift(&k3_2, 1).unwrap(), k3_2);
        let lifted = universal_vertex_lift(&k3_2, 2).unwrap();
        assert!(!is_hereditary_pq_helly(&lifted, 2, 2).unwrap().holds);
        let star = Hypergraph::from_lists(4, &[&[0, 1], &[0, 2], &[0, 3]]).unwrap();
        assert!(is_hereditary_pq_helly(&universal_vertex_lift(&star, 2).unwrap(), 2, 2).unwrap().holds);

        let hajos = build_ocular(2, 1, 0, None).unwrap().graph;
        assert_eq!(graph_universal_lift(&hajos, 1).unwrap(), hajos);
        assert!(!is_hereditary_pq_clique_helly(&graph_universal_lift(&hajos, 2).unwrap(), 2, 2).unwrap().holds);
        assert!(is_hereditary_pq_clique_helly(&graph_universal_lift(&Graph::cycle(5), 2).unwrap(), 2, 2).unwrap().holds);
    }

    #[test]
    fn join_gadget() {
        let (g, q) = clique_join_gadget(&Graph::complete(3), 3, 2).unwrap();
        assert_eq!((g.n(), q), (9, 4));
        assert!(!is_hereditary_pq_clique_helly(&g, 2, q).unwrap().holds);
        let (g, q) = clique_join_gadget(&Graph::empty(3), 2, 2).unwrap();
        assert!(is_hereditary_pq_clique_helly(&g, 2, q).unwrap().holds);
    }
}
