//! Small instances known by name.

use crate::clique_helly::build_ocular;
use crate::{Graph, Hypergraph};

/// Recognizes `hajos`, `petersen`, `co-p3`, and the families `k<n>`,
/// `c<n>`, `p<n>`, `e<n>` (edgeless) and `k<a>,<b>`, case-insensitively.
pub fn named_graph(name: &str) -> Option<Graph> {
    let name = name.to_ascii_lowercase();
    match name.as_str() {
        "hajos" => return Some(build_ocular(2, 1, 0, None).ok()?.graph),
        "co-p3" => return Graph::new(3, &[(0, 1)]).ok(),
        "petersen" => {
            let mut edges: Vec<(u32, u32)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
            edges.extend((0..5).map(|i| (i, i + 5)));
            edges.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
            return Graph::new(10, &edges).ok();
        }
        _ => {}
    }
    let (kind, rest) = name.split_at(1);
    if let Some((a, b)) = rest.split_once(',') {
        return (kind == "k").then_some(Graph::complete_bipartite(a.parse().ok()?, b.parse().ok()?));
    }
    let n: usize = rest.parse().ok()?;
    match kind {
        "k" => Some(Graph::complete(n)),
        "c" if n >= 3 => Some(Graph::cycle(n)),
        "p" if n >= 1 => Some(Graph::path(n)),
        "e" => Some(Graph::empty(n)),
        _ => None,
    }
}

/// Recognizes `k3_2` (the triangle as a hypergraph) and `star<n>` (`n`
/// edges `{0, i}`).
pub fn named_hypergraph(name: &str) -> Option<Hypergraph> {
    let name = name.to_ascii_lowercase();
    if name == "k3_2" {
        return Hypergraph::from_lists(3, &[&[0, 1], &[1, 2], &[0, 2]]).ok();
    }
    let n: usize = name.strip_prefix("star")?.parse().ok()?;
    let lists: Vec<Vec<u32>> = (1..=n as u32).map(|i| vec![0, i]).collect();
    let refs: Vec<&[u32]> = lists.iter().map(Vec::as_slice).collect();
    Hypergraph::from_lists(n + 1, &refs).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names() {
        assert_eq!(named_graph("Hajos").unwrap().n(), 6);
        assert_eq!(named_graph("petersen").unwrap().m(), 15);
        assert_eq!(named_graph("k2,3").unwrap(), Graph::complete_bipartite(2, 3));
        assert_eq!(named_graph("c5").unwrap(), Graph::cycle(5));
        assert!(named_graph("c2").is_none());
        assert!(named_graph("x").is_none());
        assert_eq!(named_hypergraph("k3_2").unwrap().m(), 3);
        assert_eq!(named_hypergraph("star3").unwrap().n(), 4);
    }
}
