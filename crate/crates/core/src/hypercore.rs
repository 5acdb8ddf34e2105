//! Hypergraphs, cores, bases and the q-subset operator.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::combin::for_each_combination;
use crate::error::{Error, Result};
use crate::text::{data_lines, numbers};
use crate::VertexSet;

/// A hypergraph on vertices `0..n` with an ordered multiset of edges.
///
/// [`Hypergraph::new`] insists that the edges cover every vertex. Partial
/// hypergraphs (for instance `H_P`) are built with [`Hypergraph::partial`],
/// which keeps the vertex universe and tolerates isolated vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<VertexSet>,
}

impl Hypergraph {
    pub fn new(n: usize, edges: Vec<VertexSet>) -> Result<Self> {
        let h = Self::partial(n, edges)?;
        let isolated = h.isolated_vertices();
        if isolated.is_empty() {
            Ok(h)
        } else {
            Err(Error::IsolatedVertices(isolated))
        }
    }

    pub fn partial(n: usize, edges: Vec<VertexSet>) -> Result<Self> {
        for (index, e) in edges.iter().enumerate() {
            if e.is_empty() {
                return Err(Error::EmptyEdge { index });
            }
            if e.bound() > n {
                return Err(Error::VertexOutOfRange { vertex: e.bound() as u32 - 1, n });
            }
        }
        Ok(Self { n, edges })
    }

    /// Strict constructor from vertex lists.
    pub fn from_lists(n: usize, lists: &[&[u32]]) -> Result<Self> {
        Self::new(n, lists.iter().map(|l| VertexSet::from_slice(l)).collect())
    }

    pub fn empty() -> Self {
        Self { n: 0, edges: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &VertexSet {
        &self.edges[i]
    }

    /// Sum of the edge sizes.
    pub fn total_size(&self) -> usize {
        self.edges.iter().map(VertexSet::len).sum()
    }

    /// Largest edge size.
    pub fn rank(&self) -> usize {
        self.edges.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn isolated_vertices(&self) -> Vec<u32> {
        let mut covered = VertexSet::new();
        for e in &self.edges {
            covered.union_with(e);
        }
        covered.complement(self.n).to_vec()
    }

    pub fn is_covering(&self) -> bool {
        self.isolated_vertices().is_empty()
    }

    pub fn edges_containing<'a>(&'a self, p: &'a VertexSet) -> impl Iterator<Item = usize> + 'a {
        self.edges.iter().enumerate().filter(move |(_, e)| p.is_subset(e)).map(|(i, _)| i)
    }

    /// `H_P`: the partial hypergraph of edges containing `p`.
    pub fn restrict_to(&self, p: &VertexSet) -> Hypergraph {
        let edges = self.edges.iter().filter(|e| p.is_subset(e)).cloned().collect();
        Hypergraph { n: self.n, edges }
    }

    /// Core of `H_P`, or `None` when no edge contains `p`.
    pub fn core_containing(&self, p: &VertexSet) -> Option<VertexSet> {
        let mut acc: Option<VertexSet> = None;
        for e in &self.edges {
            if p.is_subset(e) {
                match acc.as_mut() {
                    None => acc = Some(e.clone()),
                    Some(c) => c.intersect_with(e),
                }
            }
        }
        acc
    }

    /// `H_S^∪`: the edges containing at least one support set of `s`.
    pub fn union_restrict(&self, s: &Basis) -> Hypergraph {
        let supports = s.support_sets();
        let edges = self
            .edges
            .iter()
            .filter(|e| supports.iter().any(|p| p.is_subset(e)))
            .cloned()
            .collect();
        Hypergraph { n: self.n, edges }
    }

    /// Subhypergraph induced by `x`, relabeled to `0..|x|`. The second
    /// component maps new labels to old ones.
    pub fn induced_sub(&self, x: &VertexSet) -> (Hypergraph, Vec<u32>) {
        let map: Vec<u32> = x.iter().filter(|&v| (v as usize) < self.n).collect();
        let mut inverse = HashMap::with_capacity(map.len());
        for (i, &v) in map.iter().enumerate() {
            inverse.insert(v, i as u32);
        }
        let edges = self
            .edges
            .iter()
            .map(|e| e.intersection(x))
            .filter(|e| !e.is_empty())
            .map(|e| e.map(|v| inverse[&v]))
            .collect();
        (Hypergraph { n: map.len(), edges }, map)
    }

    /// Indices of the edges with at least `q` vertices.
    pub fn q_plus_edges(&self, q: usize) -> Vec<usize> {
        (0..self.m()).filter(|&i| self.edges[i].len() >= q).collect()
    }

    pub fn core(&self) -> Result<VertexSet> {
        core(&self.edges)
    }

    /// The same hypergraph with repeated edges collapsed to their first
    /// occurrence, plus whether anything was removed.
    pub fn dedup(&self) -> (Hypergraph, bool) {
        let mut seen = BTreeSet::new();
        let edges: Vec<VertexSet> = self.edges.iter().filter(|e| seen.insert((*e).clone())).cloned().collect();
        let changed = edges.len() != self.edges.len();
        (Hypergraph { n: self.n, edges }, changed)
    }

    /// Keeps the edges whose indices are listed.
    pub fn partial_on(&self, indices: &[usize]) -> Hypergraph {
        Hypergraph { n: self.n, edges: indices.iter().map(|&i| self.edges[i].clone()).collect() }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let h = Self::parse_partial(text)?;
        let isolated = h.isolated_vertices();
        if isolated.is_empty() {
            Ok(h)
        } else {
            Err(Error::IsolatedVertices(isolated))
        }
    }

    /// Parses the text format without requiring the edges to cover every vertex.
    pub fn parse_partial(text: &str) -> Result<Self> {
        let mut lines = data_lines(text);
        let (hl, header) = lines.next().ok_or_else(|| Error::parse(1, "missing header"))?;
        let head: Vec<usize> = numbers(hl, header)?;
        let [n, m] = head[..] else { return Err(Error::parse(hl, "header must be `n m`")) };
        let mut edges = Vec::with_capacity(m);
        for (ln, line) in lines.by_ref().take(m) {
            let nums: Vec<u32> = numbers(ln, line)?;
            let (&k, rest) = nums.split_first().ok_or_else(|| Error::parse(ln, "empty edge line"))?;
            if k as usize != rest.len() {
                return Err(Error::parse(ln, format!("edge declares {k} vertices but lists {}", rest.len())));
            }
            if k == 0 {
                return Err(Error::EmptyEdge { index: edges.len() });
            }
            if rest.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::parse(ln, "vertices must be strictly increasing"));
            }
            if let Some(&v) = rest.iter().find(|&&v| v as usize >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            edges.push(VertexSet::from_slice(rest));
        }
        if edges.len() != m {
            return Err(Error::parse(0, format!("expected {m} edges, found {}", edges.len())));
        }
        if let Some((ln, _)) = lines.next() {
            return Err(Error::parse(ln, "unexpected content after the last edge"));
        }
        Self::partial(n, edges)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.m());
        for e in &self.edges {
            let _ = write!(out, "{}", e.len());
            for v in e {
                let _ = write!(out, " {v}");
            }
            out.push('\n');
        }
        out
    }
}

/// Total intersection of a nonempty family.
pub fn core<'a, I>(family: I) -> Result<VertexSet>
where
    I: IntoIterator<Item = &'a VertexSet>,
{
    let mut it = family.into_iter();
    let mut acc = it.next().ok_or(Error::EmptyFamily)?.clone();
    for s in it {
        acc.intersect_with(s);
    }
    Ok(acc)
}

/// All `q`-subsets of `s` in lexicographic order.
pub fn phi_sets(s: &VertexSet, q: usize) -> Vec<VertexSet> {
    let items = s.to_vec();
    let mut out = Vec::new();
    for_each_combination(items.len(), q, |c| {
        out.push(c.iter().map(|&i| items[i]).collect());
        true
    });
    out
}

/// `Φ_q(H)` together with the q-set carried by each of its vertices.
#[derive(Clone, Debug)]
pub struct PhiHypergraph {
    pub hypergraph: Hypergraph,
    pub qsets: Vec<VertexSet>,
}

impl PhiHypergraph {
    pub fn index_of(&self, qset: &VertexSet) -> Option<u32> {
        self.qsets.binary_search(qset).ok().map(|i| i as u32)
    }
}

/// `Φ_q(H)`: vertices are the q-sets inside some edge, in lexicographic
/// order; each q⁺-edge `E` becomes the edge `φ_q(E)`.
pub fn phi_hypergraph(h: &Hypergraph, q: usize) -> PhiHypergraph {
    let big: Vec<&VertexSet> = h.edges().iter().filter(|e| e.len() >= q).collect();
    let mut all = BTreeSet::new();
    for e in &big {
        all.extend(phi_sets(e, q));
    }
    let qsets: Vec<VertexSet> = all.into_iter().collect();
    let index: HashMap<&VertexSet, u32> = qsets.iter().enumerate().map(|(i, s)| (s, i as u32)).collect();
    let edges = big.iter().map(|e| phi_sets(e, q).iter().map(|s| index[s]).collect()).collect();
    let hypergraph = Hypergraph { n: qsets.len(), edges };
    PhiHypergraph { hypergraph, qsets }
}

/// Whether every nonempty subfamily of at most `p` members has a core of
/// at least `q` vertices. Only subfamilies of size `min(p, |family|)` are
/// inspected, since cores shrink as members are added.
pub fn is_pq_intersecting(family: &[VertexSet], p: usize, q: usize) -> Result<bool> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let k = p.min(family.len());
    Ok(for_each_combination(family.len(), k, |c| {
        let mut acc = family[c[0]].clone();
        for &i in &c[1..] {
            acc.intersect_with(&family[i]);
        }
        acc.len() >= q
    }))
}

/// A `(p+1, q)`-basis: `p+1` pairwise distinct `q`-sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Basis {
    members: Vec<VertexSet>,
    q: usize,
}

impl Basis {
    pub fn new(members: Vec<VertexSet>, q: usize) -> Result<Self> {
        if members.len() < 2 {
            return Err(Error::InvalidBasis(format!("needs at least 2 members, got {}", members.len())));
        }
        if let Some(s) = members.iter().find(|s| s.len() != q) {
            return Err(Error::InvalidBasis(format!("member {s} is not a {q}-set")));
        }
        let distinct: BTreeSet<&VertexSet> = members.iter().collect();
        if distinct.len() != members.len() {
            return Err(Error::InvalidBasis("members are not pairwise distinct".into()));
        }
        Ok(Self { members, q })
    }

    pub fn p(&self) -> usize {
        self.members.len() - 1
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn members(&self) -> &[VertexSet] {
        &self.members
    }

    /// The `i`-th support set is the union of all members except member `i`.
    pub fn support_sets(&self) -> Vec<VertexSet> {
        (0..self.members.len())
            .map(|i| {
                let mut acc = VertexSet::new();
                for (j, s) in self.members.iter().enumerate() {
                    if j != i {
                        acc.union_with(s);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn union(&self) -> VertexSet {
        let mut acc = VertexSet::new();
        for s in &self.members {
            acc.union_with(s);
        }
        acc
    }

    pub fn core(&self) -> VertexSet {
        core(&self.members).expect("a basis has members")
    }

    pub fn ext(&self) -> VertexSet {
        self.union().difference(&self.core())
    }

    pub fn is_starlike(&self) -> bool {
        let core = self.core();
        let mut seen = VertexSet::new();
        for s in &self.members {
            for v in s {
                if !seen.insert(v) && !core.contains(v) {
                    return false;
                }
            }
        }
        true
    }

    /// Whether every support set lies in some edge of `h`.
    pub fn is_nontrivial(&self, h: &Hypergraph) -> bool {
        self.support_sets().iter().all(|p| h.edges().iter().any(|e| p.is_subset(e)))
    }
}

/// The hypergraph `J_{p+1,q,s}` with its canonical parts.
#[derive(Clone, Debug)]
pub struct ForbiddenHypergraph {
    pub p: usize,
    pub q: usize,
    pub s: usize,
    pub hypergraph: Hypergraph,
    pub parts: Vec<VertexSet>,
    pub z: VertexSet,
}

/// Builds `J_{p+1,q,s}`: `T_i` is the `i`-th block of `q-s` consecutive
/// vertices, `Z` the last `s` vertices, and the edges are `V - T_i`.
pub fn build_j(p: usize, q: usize, s: usize) -> Result<ForbiddenHypergraph> {
    if p == 0 || q == 0 {
        return Err(Error::invalid("p and q must be positive"));
    }
    if s >= q {
        return Err(Error::invalid(format!("s = {s} must be smaller than q = {q}")));
    }
    let t = q - s;
    let n = (p + 1) * t + s;
    let all = VertexSet::full(n);
    let parts: Vec<VertexSet> =
        (0..=p).map(|i| ((i * t) as u32..((i + 1) * t) as u32).collect()).collect();
    let z: VertexSet = (((p + 1) * t) as u32..n as u32).collect();
    let edges = parts.iter().map(|ti| all.difference(ti)).collect();
    let hypergraph = Hypergraph::new(n, edges)?;
    Ok(ForbiddenHypergraph { p, q, s, hypergraph, parts, z })
}
