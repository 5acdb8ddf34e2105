//! Simple undirected graphs and the clique and biclique primitives used by
//! both graph recognizers.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypercore::Hypergraph;
use crate::text::{data_lines, numbers};
use crate::VertexSet;

/// Default cap on the number of vertices for maximal biclique enumeration.
pub const BICLIQUE_VERTEX_CAP: usize = 18;

/// Default cap on the number of maximal cliques listed.
pub const MAX_CLIQUE_BUDGET: usize = 1_000_000;

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<Vec<u32>>,
    rows: Vec<VertexSet>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(u32, u32)>,
}

impl TryFrom<GraphRepr> for Graph {
    type Error = Error;
    fn try_from(r: GraphRepr) -> Result<Self> {
        Graph::new(r.n, &r.edges)
    }
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr { n: g.n, edges: g.edges().collect() }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    /// Builds a graph from an edge list. Repeated edges are merged; loops
    /// and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: &[(u32, u32)]) -> Result<Self> {
        let mut rows = vec![VertexSet::new(); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x as usize >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::invalid(format!("loop at vertex {u}")));
            }
            rows[u as usize].insert(v);
            rows[v as usize].insert(u);
        }
        Ok(Self::from_rows(rows))
    }

    /// Builds a graph from symmetric, loopless adjacency rows.
    pub fn from_rows(rows: Vec<VertexSet>) -> Self {
        let adj: Vec<Vec<u32>> = rows.iter().map(VertexSet::to_vec).collect();
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        debug_assert!(rows.iter().enumerate().all(|(u, r)| !r.contains(u as u32)
            && r.iter().all(|v| rows[v as usize].contains(u as u32))));
        Graph { n: rows.len(), m, adj, rows }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_rows(vec![VertexSet::new(); n])
    }

    pub fn complete(n: usize) -> Self {
        let all = VertexSet::full(n);
        Self::from_rows((0..n as u32).map(|v| all.difference(&VertexSet::singleton(v))).collect())
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<(u32, u32)> = (1..n as u32).map(|v| (v - 1, v)).collect();
        Self::new(n, &edges).unwrap()
    }

    pub fn cycle(n: usize) -> Self {
        let mut edges: Vec<(u32, u32)> = (1..n as u32).map(|v| (v - 1, v)).collect();
        if n >= 3 {
            edges.push((0, n as u32 - 1));
        }
        Self::new(n, &edges).unwrap()
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges: Vec<(u32, u32)> =
            (0..a as u32).flat_map(|u| (a as u32..(a + b) as u32).map(move |v| (u, v))).collect();
        Self::new(a + b, &edges).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn row(&self, v: u32) -> &VertexSet {
        &self.rows[v as usize]
    }

    pub fn adjacent(&self, u: u32, v: u32) -> bool {
        self.rows[u as usize].contains(v)
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        (0..self.n as u32).flat_map(move |u| self.adj[u as usize].iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| s.difference(self.row(v)).len() == 1)
    }

    pub fn is_stable(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.row(v).is_disjoint(s))
    }

    pub fn is_biclique(&self, s: &VertexSet) -> bool {
        self.bipartition_of(s).is_some()
    }

    /// The canonical bipartition `(X, Y)` of `G[s]` when it is complete
    /// bipartite: `(s, ∅)` when edgeless, otherwise `X` holds the smallest
    /// vertex of `s`.
    pub fn bipartition_of(&self, s: &VertexSet) -> Option<(VertexSet, VertexSet)> {
        let Some(v) = s.first() else { return Some((VertexSet::new(), VertexSet::new())) };
        let y = self.row(v).intersection(s);
        let x = s.difference(&y);
        if y.is_empty() {
            return self.is_stable(s).then_some((x, y));
        }
        let ok = self.is_stable(&y) && x.iter().all(|u| self.row(u).intersection(s) == y);
        ok.then_some((x, y))
    }

    /// Induced subgraph on `x`, relabeled to `0..|x|`, with the map from new
    /// labels to old ones.
    pub fn induced(&self, x: &VertexSet) -> (Graph, Vec<u32>) {
        let map: Vec<u32> = x.iter().filter(|&v| (v as usize) < self.n).collect();
        let mut inverse = vec![u32::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            inverse[v as usize] = i as u32;
        }
        let rows = map.iter().map(|&v| self.row(v).intersection(x).map(|u| inverse[u as usize])).collect();
        (Graph::from_rows(rows), map)
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        Graph::from_rows(
            (0..self.n as u32).map(|v| all.difference(self.row(v)).difference(&VertexSet::singleton(v))).collect(),
        )
    }

    /// Disjoint union followed by all edges between the two sides; the
    /// vertices of `other` are shifted by `self.n()`.
    pub fn join(&self, other: &Graph) -> Graph {
        let (a, b) = (self.n as u32, other.n as u32);
        let left_all: VertexSet = (0..a).collect();
        let right_all: VertexSet = (a..a + b).collect();
        let mut rows: Vec<VertexSet> = self.rows.iter().map(|r| r.union(&right_all)).collect();
        rows.extend(other.rows.iter().map(|r| r.map(|v| v + a).union(&left_all)));
        Graph::from_rows(rows)
    }

    /// Adds `k` new vertices adjacent to every vertex and to each other.
    pub fn add_universal(&self, k: usize) -> Graph {
        self.join(&Graph::complete(k))
    }

    /// Connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::new();
        let mut out = Vec::new();
        for s in 0..self.n as u32 {
            if seen.contains(s) {
                continue;
            }
            let mut comp = VertexSet::singleton(s);
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &u in self.neighbors(v) {
                    if comp.insert(u) {
                        stack.push(u);
                    }
                }
            }
            seen.union_with(&comp);
            out.push(comp);
        }
        out
    }

    /// `comp(W)`: the vertices adjacent to every vertex of `W` other than
    /// themselves.
    pub fn complete_to(&self, w: &VertexSet) -> VertexSet {
        (0..self.n as u32)
            .filter(|&v| {
                let rest = w.difference(self.row(v));
                rest.is_empty() || (rest.len() == 1 && rest.contains(v))
            })
            .collect()
    }

    /// Clique number, computed from the maximal cliques.
    pub fn clique_number(&self) -> Result<usize> {
        Ok(maximal_cliques(self, MAX_CLIQUE_BUDGET)?.iter().map(VertexSet::len).max().unwrap_or(0))
    }

    /// Biclique number, computed from the maximal bicliques.
    pub fn biclique_number(&self) -> Result<usize> {
        Ok(maximal_bicliques(self, BICLIQUE_VERTEX_CAP)?.iter().map(VertexSet::len).max().unwrap_or(0))
    }

    /// Parses `n m` followed by `m` lines `u v`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = data_lines(text);
        let (ln, header) = lines.next().ok_or_else(|| Error::parse(1, "missing header `n m`"))?;
        let head: Vec<usize> = numbers(ln, header)?;
        let [n, m] = head[..] else { return Err(Error::parse(ln, "header must be `n m`")) };
        let mut edges = Vec::with_capacity(m);
        let mut seen = BTreeSet::new();
        for (ln, line) in lines {
            let pair: Vec<u32> = numbers(ln, line)?;
            let [u, v] = pair[..] else { return Err(Error::parse(ln, "edge lines must be `u v`")) };
            if u == v {
                return Err(Error::parse(ln, format!("loop at vertex {u}")));
            }
            if u as usize >= n || v as usize >= n {
                return Err(Error::parse(ln, format!("vertex out of range 0..{n}")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::parse(ln, format!("repeated edge {u} {v}")));
            }
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::parse(ln, format!("header announces {m} edges, found {}", edges.len())));
        }
        Graph::new(n, &edges)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.m);
        for (u, v) in self.edges() {
            let _ = writeln!(s, "{u} {v}");
        }
        s
    }
}

/// All q-cliques in lexicographic order, listed from a degree ordering.
pub fn enumerate_q_cliques(g: &Graph, q: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    if q == 0 {
        return out;
    }
    let mut order: Vec<u32> = (0..g.n as u32).collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    let mut rank = vec![0usize; g.n];
    for (i, &v) in order.iter().enumerate() {
        rank[v as usize] = i;
    }
    let later: Vec<VertexSet> =
        (0..g.n as u32).map(|v| g.row(v).iter().filter(|&u| rank[u as usize] > rank[v as usize]).collect()).collect();
    fn grow(later: &[VertexSet], cur: &mut VertexSet, cand: &VertexSet, left: usize, out: &mut Vec<VertexSet>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        if cand.len() < left {
            return;
        }
        for v in cand {
            cur.insert(v);
            grow(later, cur, &cand.intersection(&later[v as usize]), left - 1, out);
            cur.remove(v);
        }
    }
    for v in 0..g.n as u32 {
        let mut cur = VertexSet::singleton(v);
        grow(&later, &mut cur, &later[v as usize], q - 1, &mut out);
    }
    out.sort();
    out
}

/// Calls `f` on every q-biclique in lexicographic order until it returns
/// `false`. Returns whether the enumeration completed.
pub fn for_each_q_biclique(g: &Graph, q: usize, mut f: impl FnMut(&VertexSet) -> bool) -> bool {
    fn grow(
        g: &Graph,
        cur: &mut Vec<u32>,
        start: u32,
        q: usize,
        f: &mut dyn FnMut(&VertexSet) -> bool,
    ) -> bool {
        if cur.len() == q {
            return f(&cur.iter().copied().collect());
        }
        let need = (q - cur.len()) as u32;
        for w in start..=(g.n as u32).saturating_sub(need) {
            if w as usize >= g.n {
                break;
            }
            let fits = cur.iter().enumerate().all(|(i, &a)| {
                cur[i + 1..].iter().all(|&b| !(g.adjacent(a, b) ^ g.adjacent(a, w) ^ g.adjacent(b, w)))
            });
            if fits {
                cur.push(w);
                let go_on = grow(g, cur, w + 1, q, f);
                cur.pop();
                if !go_on {
                    return false;
                }
            }
        }
        true
    }
    if q == 0 || q > g.n {
        return true;
    }
    grow(g, &mut Vec::with_capacity(q), 0, q, &mut f)
}

/// All q-bicliques in lexicographic order.
pub fn enumerate_q_bicliques(g: &Graph, q: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    for_each_q_biclique(g, q, |s| {
        out.push(s.clone());
        true
    });
    out
}

/// Maximal cliques in lexicographic order (Bron–Kerbosch with pivoting).
/// Fails once more than `budget` cliques have been found.
pub fn maximal_cliques(g: &Graph, budget: usize) -> Result<Vec<VertexSet>> {
    fn bk(g: &Graph, r: &mut VertexSet, p: VertexSet, mut x: VertexSet, out: &mut Vec<VertexSet>, budget: usize) -> bool {
        if p.is_empty() && x.is_empty() {
            out.push(r.clone());
            return out.len() <= budget;
        }
        let pivot = p.union(&x).iter().max_by_key(|&u| g.row(u).intersection_len(&p)).unwrap();
        let mut p = p;
        for v in p.difference(g.row(pivot)).to_vec() {
            r.insert(v);
            let ok = bk(g, r, p.intersection(g.row(v)), x.intersection(g.row(v)), out, budget);
            r.remove(v);
            if !ok {
                return false;
            }
            p.remove(v);
            x.insert(v);
        }
        true
    }
    let mut out = Vec::new();
    if g.n == 0 {
        return Ok(out);
    }
    if !bk(g, &mut VertexSet::new(), g.vertices(), VertexSet::new(), &mut out, budget) {
        return Err(Error::BudgetExceeded(format!("more than {budget} maximal cliques")));
    }
    out.sort();
    Ok(out)
}

/// `C(G)`: the hypergraph of maximal cliques.
pub fn clique_hypergraph(g: &Graph) -> Result<Hypergraph> {
    Hypergraph::partial(g.n, maximal_cliques(g, MAX_CLIQUE_BUDGET)?)
}

/// Maximal bicliques in lexicographic order, by exhaustive search over
/// bicliques. Refuses graphs with more than `cap` vertices.
pub fn maximal_bicliques(g: &Graph, cap: usize) -> Result<Vec<VertexSet>> {
    if g.n > cap {
        return Err(Error::BudgetExceeded(format!("{} vertices exceed the biclique cap of {cap}", g.n)));
    }
    let mut out = Vec::new();
    // Depth-first over bicliques in increasing vertex order; a biclique is
    // kept when no vertex at all can be added.
    fn grow(g: &Graph, cur: &mut VertexSet, start: u32, out: &mut Vec<VertexSet>) {
        let extendable = |cur: &VertexSet, w: u32| {
            let mut s = cur.clone();
            s.insert(w);
            g.is_biclique(&s)
        };
        if (0..g.n as u32).filter(|&w| !cur.contains(w)).all(|w| !extendable(cur, w)) {
            out.push(cur.clone());
        }
        for w in start..g.n as u32 {
            if extendable(cur, w) {
                cur.insert(w);
                grow(g, cur, w + 1, out);
                cur.remove(w);
            }
        }
    }
    if g.n > 0 {
        grow(g, &mut VertexSet::new(), 0, &mut out);
    }
    out.sort();
    Ok(out)
}

/// `B(G)`: the hypergraph of maximal bicliques.
pub fn biclique_hypergraph(g: &Graph, cap: usize) -> Result<Hypergraph> {
    Hypergraph::partial(g.n, maximal_bicliques(g, cap)?)
}

/// `Φ_q(G)` with the q-clique carried by each vertex.
pub fn phi_graph(g: &Graph, q: usize) -> (Graph, Vec<VertexSet>) {
    let qcliques = enumerate_q_cliques(g, q);
    let k = qcliques.len();
    let mut rows = vec![VertexSet::new(); k];
    for i in 0..k {
        for j in i + 1..k {
            if g.is_clique(&qcliques[i].union(&qcliques[j])) {
                rows[i].insert(j as u32);
                rows[j].insert(i as u32);
            }
        }
    }
    (Graph::from_rows(rows), qcliques)
}
