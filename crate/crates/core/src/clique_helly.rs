//! `(p,q)`-clique-Helly and hereditary `(p,q)`-clique-Helly recognition,
//! expansions, and oculars.

use crate::basis_engine::{self, BasisViolation, CoreProvider, EngineConfig, EngineStats, Mode, ProviderCost};
use crate::combin::for_each_combination;
use crate::error::{Error, Result};
use crate::graphcore::{enumerate_q_cliques, Graph};
use crate::verdict::{Method, SearchOutcome, Stats, Verdict, Witness};
use crate::VertexSet;

/// Cores of the families of maximal cliques containing a given set.
pub struct CliqueCores<'a>(pub &'a Graph);

impl CoreProvider for CliqueCores<'_> {
    fn universe(&self) -> usize {
        self.0.n()
    }

    fn core_of(&self, p: &VertexSet) -> Option<VertexSet> {
        clique_core(self.0, p)
    }

    fn is_empty_for(&self, p: &VertexSet) -> bool {
        !self.0.is_clique(p)
    }

    fn cost(&self) -> ProviderCost {
        ProviderCost { name: "comp of comp", work: 2 * self.0.n() * (self.0.n() / 64 + 1) }
    }
}

/// Core of the maximal cliques containing `p`, i.e. `comp(comp(p))`, or
/// `None` when `p` is not a clique.
pub fn clique_core(g: &Graph, p: &VertexSet) -> Option<VertexSet> {
    g.is_clique(p).then(|| g.complete_to(&g.complete_to(p)))
}

fn check_pq(p: usize, q: usize) -> Result<()> {
    if p == 0 || q == 0 {
        return Err(Error::invalid("p and q must be positive"));
    }
    Ok(())
}

fn stats(g: &Graph) -> Stats {
    Stats { n: g.n(), m: g.m(), ..Default::default() }
}

pub fn is_pq_clique_helly(g: &Graph, p: usize, q: usize) -> Result<Verdict> {
    is_pq_clique_helly_with(g, p, q, &EngineConfig::default())
}

pub fn is_pq_clique_helly_with(g: &Graph, p: usize, q: usize, config: &EngineConfig) -> Result<Verdict> {
    check_pq(p, q)?;
    if g.n() == 0 {
        return Ok(Verdict::holds(Method::Trivial, stats(g)));
    }
    match (p, q) {
        (1, 1) => Ok(core_intersection(g, 1, Method::UniversalVertex)),
        (1, _) => Ok(core_intersection(g, q, Method::CoreIntersection)),
        (_, 1) => Ok(CliqueTrie::run(g, p, Mode::Plain)),
        _ => engine_by_components(g, p, q, Mode::Plain, config),
    }
}

pub fn is_hereditary_pq_clique_helly(g: &Graph, p: usize, q: usize) -> Result<Verdict> {
    is_hereditary_pq_clique_helly_with(g, p, q, &EngineConfig::default())
}

pub fn is_hereditary_pq_clique_helly_with(g: &Graph, p: usize, q: usize, config: &EngineConfig) -> Result<Verdict> {
    check_pq(p, q)?;
    if g.n() == 0 {
        return Ok(Verdict::holds(Method::Trivial, stats(g)));
    }
    match (p, q) {
        (1, _) => Ok(union_of_q_cliques(g, q)),
        (_, 1) => Ok(CliqueTrie::run(g, p, Mode::Hereditary)),
        _ => engine_by_components(g, p, q, Mode::Hereditary, config),
    }
}

/// `p = 1`: the cores of all q-cliques must share at least `q` vertices.
fn core_intersection(g: &Graph, q: usize, method: Method) -> Verdict {
    let sets = enumerate_q_cliques(g, q);
    let cores: Vec<VertexSet> = sets.iter().map(|s| clique_core(g, s).unwrap()).collect();
    match shrink_core_family(&cores, q) {
        None => Verdict::holds(method, stats(g)),
        Some(keep) => {
            let w = Witness::CoreFamily {
                sets: keep.iter().map(|&i| sets[i].clone()).collect(),
                cores: keep.iter().map(|&i| cores[i].clone()).collect(),
            };
            Verdict::fails(method, w, stats(g))
        }
    }
}

/// When the cores meet in fewer than `q` vertices, returns a small subset of
/// indices whose cores still do.
pub(crate) fn shrink_core_family(cores: &[VertexSet], q: usize) -> Option<Vec<usize>> {
    let mut acc: Option<VertexSet> = None;
    let mut keep = Vec::new();
    for (i, c) in cores.iter().enumerate() {
        let next = match &acc {
            None => c.clone(),
            Some(a) => a.intersection(c),
        };
        if acc.as_ref().map_or(true, |a| next.len() < a.len()) {
            keep.push(i);
        }
        let done = next.len() < q;
        acc = Some(next);
        if done {
            return Some(keep);
        }
    }
    None
}

/// Extends `s` greedily to a maximal clique, trying vertices in increasing order.
pub(crate) fn extend_to_maximal_clique(g: &Graph, s: &VertexSet) -> VertexSet {
    let mut k = s.clone();
    for v in 0..g.n() as u32 {
        if !k.contains(v) && k.is_subset(g.row(v)) {
            k.insert(v);
        }
    }
    k
}

/// Starlike basis `{T1 ∪ Z, T2 ∪ Z}` drawn from two distinct maximal sets,
/// with `|Z| = min(|K1 ∩ K2|, q-1)`.
pub(crate) fn two_set_basis(k1: &VertexSet, k2: &VertexSet, q: usize) -> Vec<VertexSet> {
    let common = k1.intersection(k2);
    let s = common.len().min(q - 1);
    let z: VertexSet = common.iter().take(s).collect();
    let t1: VertexSet = k1.difference(k2).iter().take(q - s).collect();
    let t2: VertexSet = k2.difference(k1).iter().take(q - s).collect();
    vec![t1.union(&z), t2.union(&z)]
}

/// `p = 1` hereditary: the union of all q-cliques must be a clique.
fn union_of_q_cliques(g: &Graph, q: usize) -> Verdict {
    let cliques = enumerate_q_cliques(g, q);
    let union: VertexSet = cliques.iter().fold(VertexSet::new(), |acc, c| acc.union(c));
    if g.is_clique(&union) {
        return Verdict::holds(Method::UnionCheck, stats(g));
    }
    let (u, v) = union
        .iter()
        .find_map(|u| union.difference(g.row(u)).iter().find(|&v| v != u).map(|v| (u, v)))
        .expect("a non-clique has a non-adjacent pair");
    let k1 = extend_to_maximal_clique(g, cliques.iter().find(|c| c.contains(u)).unwrap());
    let k2 = extend_to_maximal_clique(g, cliques.iter().find(|c| c.contains(v)).unwrap());
    let members = two_set_basis(&k1, &k2, q);
    let support_cores = vec![clique_core(g, &members[1]).unwrap(), clique_core(g, &members[0]).unwrap()];
    Verdict::fails(Method::UnionCheck, Witness::Basis { members, support_cores }, stats(g))
}

fn engine_by_components(g: &Graph, p: usize, q: usize, mode: Mode, config: &EngineConfig) -> Result<Verdict> {
    let provider = CliqueCores(g);
    let all = enumerate_q_cliques(g, q);
    let mut st = stats(g);
    st.qsets = Some(all.len());
    let mut total = EngineStats::default();
    for comp in g.components() {
        let qsets: Vec<VertexSet> = all.iter().filter(|s| s.is_subset(&comp)).cloned().collect();
        if qsets.len() <= p {
            continue;
        }
        let out = basis_engine::run(qsets, p, q, &provider, config, mode)?;
        accumulate(&mut total, &out.stats);
        if let Some(v) = out.violation {
            st.engine = Some(total);
            return Ok(Verdict::fails(Method::Engine, v.into(), st));
        }
    }
    st.engine = Some(total);
    Ok(Verdict::holds(Method::Engine, st))
}

fn accumulate(total: &mut EngineStats, s: &EngineStats) {
    total.qsets += s.qsets;
    total.t1_nodes += s.t1_nodes;
    total.t1_leaves += s.t1_leaves;
    total.t2_nodes += s.t2_nodes;
    total.t2_leaves += s.t2_leaves;
    total.implicit |= s.implicit;
}

/// Trie of the p-cliques (children sorted by vertex) with the core of the
/// maximal cliques containing each p-clique cached at its leaf. The
/// `(p+1)`-cliques are walked without being stored.
struct CliqueTrie {
    children: Vec<Vec<(u32, u32)>>,
    core: Vec<Option<VertexSet>>,
}

impl CliqueTrie {
    fn build(g: &Graph, p: usize) -> Self {
        let mut trie = CliqueTrie { children: vec![Vec::new()], core: vec![None] };
        for clique in enumerate_q_cliques(g, p) {
            let mut node = 0u32;
            for v in &clique {
                node = match trie.child(node, v) {
                    Some(c) => c,
                    None => {
                        let id = trie.children.len() as u32;
                        trie.children.push(Vec::new());
                        trie.core.push(None);
                        // Cliques arrive in lexicographic order, so appending keeps children sorted.
                        trie.children[node as usize].push((v, id));
                        id
                    }
                };
            }
            trie.core[node as usize] = clique_core(g, &clique);
        }
        trie
    }

    fn child(&self, node: u32, letter: u32) -> Option<u32> {
        let kids = &self.children[node as usize];
        kids.binary_search_by_key(&letter, |&(l, _)| l).ok().map(|i| kids[i].1)
    }

    fn run(g: &Graph, p: usize, mode: Mode) -> Verdict {
        let trie = Self::build(g, p);
        let mut es = EngineStats { t1_nodes: trie.children.len() as u64, ..Default::default() };
        es.t1_leaves = trie.core.iter().filter(|c| c.is_some()).count() as u64;
        let mut tuple = Vec::with_capacity(p + 1);
        let violation = trie.walk(g, p, mode, &mut tuple, g.vertices(), &[0], &mut es);
        let method = Method::CliqueTrie;
        let st = Stats { n: g.n(), m: g.m(), qsets: Some(g.n()), engine: Some(es) };
        match violation {
            None => Verdict::holds(method, st),
            Some(v) => Verdict::fails(method, v.into(), st),
        }
    }

    /// Visits the clique `tuple`; `its[0]` is the trie node of its first
    /// `min(k, p)` vertices and `its[l]` the node of `tuple` without its
    /// `l`-th vertex.
    fn walk(
        &self,
        g: &Graph,
        p: usize,
        mode: Mode,
        tuple: &mut Vec<u32>,
        cand: VertexSet,
        its: &[u32],
        es: &mut EngineStats,
    ) -> Option<BasisViolation> {
        es.t2_nodes += 1;
        let k = tuple.len();
        if k == p + 1 {
            es.t2_leaves += 1;
            let cores: Vec<&VertexSet> = its[1..].iter().map(|&n| self.core[n as usize].as_ref().unwrap()).collect();
            let mut acc = cores[0].clone();
            for c in &cores[1..] {
                acc.intersect_with(c);
            }
            let members: VertexSet = tuple.iter().copied().collect();
            let ok = match mode {
                Mode::Plain => !acc.is_empty(),
                Mode::Hereditary => !acc.is_disjoint(&members),
            };
            return (!ok).then(|| BasisViolation {
                members: tuple.iter().map(|&v| VertexSet::singleton(v)).collect(),
                support_cores: cores.into_iter().cloned().collect(),
            });
        }
        if cand.len() + k < p + 1 {
            return None;
        }
        let mut next = Vec::with_capacity(k + 2);
        for w in &cand {
            next.clear();
            next.push(if k < p {
                match self.child(its[0], w) {
                    Some(c) => c,
                    None => continue,
                }
            } else {
                its[0]
            });
            if !its[1..].iter().all(|&n| self.child(n, w).map(|c| next.push(c)).is_some()) {
                continue;
            }
            next.push(its[0]);
            let later: VertexSet = cand.intersection(g.row(w)).iter().filter(|&x| x > w).collect();
            tuple.push(w);
            let found = self.walk(g, p, mode, tuple, later, &next.clone(), es);
            tuple.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

/// The `(p+1, q)`-expansion of a family of `p+1` q-cliques.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    pub family: Vec<VertexSet>,
    /// Vertices complete to at least `p` members.
    pub vertices: VertexSet,
    /// Vertices of the expansion adjacent to all its other vertices.
    pub universal: VertexSet,
}

impl Expansion {
    pub fn graph(&self, g: &Graph) -> Graph {
        g.induced(&self.vertices).0
    }
}

/// Builds the expansion of `family`, which must be `p+1 >= 2` distinct
/// q-cliques whose `p`-unions are cliques.
pub fn build_expansion(g: &Graph, family: &[VertexSet]) -> Result<Expansion> {
    let k = family.len();
    if k < 2 {
        return Err(Error::InvalidBasis("an expansion needs at least two cliques".into()));
    }
    let q = family[0].len();
    for (i, s) in family.iter().enumerate() {
        if s.len() != q || !g.is_clique(s) {
            return Err(Error::InvalidBasis(format!("{s} is not a {q}-clique")));
        }
        if family[..i].contains(s) {
            return Err(Error::InvalidBasis(format!("{s} appears twice")));
        }
    }
    for skip in 0..k {
        let union = family.iter().enumerate().filter(|&(i, _)| i != skip).fold(VertexSet::new(), |a, (_, s)| a.union(s));
        if !g.is_clique(&union) {
            return Err(Error::InvalidBasis(format!("{union} is not a clique")));
        }
    }
    let comps: Vec<VertexSet> = family.iter().map(|s| g.complete_to(s)).collect();
    let vertices: VertexSet =
        (0..g.n() as u32).filter(|&v| comps.iter().filter(|c| c.contains(v)).count() >= k - 1).collect();
    let universal = vertices
        .iter()
        .filter(|&v| vertices.difference(g.row(v)).iter().all(|u| u == v))
        .collect();
    Ok(Expansion { family: family.to_vec(), vertices, universal })
}

/// Decides `(p,q)`-clique-Helly by checking that every expansion has at
/// least `q` universal vertices. Exponential; meant for small graphs.
pub fn holds_by_expansions(g: &Graph, p: usize, q: usize) -> Result<bool> {
    check_pq(p, q)?;
    let cliques = enumerate_q_cliques(g, q);
    let mut ok = true;
    for_each_combination(cliques.len(), p + 1, |c| {
        let fam: Vec<VertexSet> = c.iter().map(|&i| cliques[i].clone()).collect();
        if let Ok(e) = build_expansion(g, &fam) {
            ok = e.universal.len() >= q;
        }
        ok
    });
    Ok(ok)
}

/// A realized `(p+1, q, s)`-ocular. Vertices are numbered `T_1, ..., T_{p+1}`,
/// then `Z`, then `w_1, ..., w_{p+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OcularSpec {
    pub p: usize,
    pub q: usize,
    pub s: usize,
    pub parts: Vec<VertexSet>,
    pub z: VertexSet,
    pub w: Vec<u32>,
    pub graph: Graph,
}

impl OcularSpec {
    pub fn witness(&self) -> Witness {
        Witness::Ocular { s: self.s, parts: self.parts.clone(), z: self.z.clone(), w: self.w.clone() }
    }
}

/// Builds the canonical `(p+1, q, s)`-ocular. For `p = 1` the parts are
/// mutually anticomplete; for `p >= 2` the `w_i` induce `w_graph`
/// (edgeless when absent).
pub fn build_ocular(p: usize, q: usize, s: usize, w_graph: Option<&Graph>) -> Result<OcularSpec> {
    check_pq(p, q)?;
    if s >= q {
        return Err(Error::invalid(format!("s = {s} must be smaller than q = {q}")));
    }
    let t = q - s;
    let u_size = (p + 1) * t + s;
    let parts: Vec<VertexSet> = (0..=p).map(|i| ((i * t) as u32..((i + 1) * t) as u32).collect()).collect();
    let z: VertexSet = (((p + 1) * t) as u32..u_size as u32).collect();
    let u = VertexSet::full(u_size);
    let mut edges = Vec::new();
    if p == 1 {
        if w_graph.is_some() {
            return Err(Error::invalid("a graph on W only applies when p >= 2"));
        }
        for side in &parts {
            let k = side.union(&z);
            for a in &k {
                edges.extend(k.iter().filter(|&b| b > a).map(|b| (a, b)));
            }
        }
        let graph = Graph::new(u_size, &edges)?;
        return Ok(OcularSpec { p, q, s, parts, z, w: Vec::new(), graph });
    }
    for a in &u {
        edges.extend(u.iter().filter(|&b| b > a).map(|b| (a, b)));
    }
    let w: Vec<u32> = (0..=p).map(|i| (u_size + i) as u32).collect();
    for (i, &wi) in w.iter().enumerate() {
        edges.extend(u.difference(&parts[i]).iter().map(|x| (x, wi)));
    }
    if let Some(h) = w_graph {
        if h.n() != p + 1 {
            return Err(Error::invalid(format!("the graph on W must have {} vertices", p + 1)));
        }
        edges.extend(h.edges().map(|(a, b)| (w[a as usize], w[b as usize])));
    }
    let graph = Graph::new(u_size + p + 1, &edges)?;
    Ok(OcularSpec { p, q, s, parts, z, w, graph })
}

/// Whether the vertex sets of a claimed ocular satisfy the definition
/// inside `g`.
pub fn is_ocular_embedding(g: &Graph, p: usize, q: usize, s: usize, parts: &[VertexSet], z: &VertexSet, w: &[u32]) -> bool {
    if s >= q || parts.len() != p + 1 || z.len() != s || parts.iter().any(|t| t.len() != q - s) {
        return false;
    }
    let mut u = z.clone();
    for t in parts {
        if !u.is_disjoint(t) {
            return false;
        }
        u.union_with(t);
    }
    if u.bound() > g.n() {
        return false;
    }
    if p == 1 {
        return w.is_empty()
            && (0..2).all(|i| {
                let rest = u.difference(&parts[i]);
                g.is_clique(&rest) && parts[i].iter().all(|v| !rest.is_subset(g.row(v)))
            });
    }
    if w.len() != p + 1 || !g.is_clique(&u) {
        return false;
    }
    let wset: VertexSet = w.iter().copied().collect();
    if wset.len() != p + 1 || !wset.is_disjoint(&u) || wset.bound() > g.n() {
        return false;
    }
    w.iter().zip(parts).all(|(&wi, t)| g.row(wi).intersection(&u) == u.difference(t))
}

/// Searches for an induced `(p+1, q, s)`-ocular for any `s < q`. Gives up
/// with an indeterminate answer after `budget` candidate sets.
pub fn find_induced_ocular(g: &Graph, p: usize, q: usize, budget: u64) -> Result<SearchOutcome<Witness>> {
    check_pq(p, q)?;
    let mut steps = 0u64;
    if p == 1 {
        let cliques = enumerate_q_cliques(g, q);
        for (i, k1) in cliques.iter().enumerate() {
            for k2 in &cliques[i + 1..] {
                steps += 1;
                if steps > budget {
                    return Ok(SearchOutcome::Indeterminate);
                }
                let z = k1.intersection(k2);
                let parts = vec![k1.difference(&z), k2.difference(&z)];
                if is_ocular_embedding(g, 1, q, z.len(), &parts, &z, &[]) {
                    return Ok(SearchOutcome::Found(Witness::Ocular { s: z.len(), parts, z, w: Vec::new() }));
                }
            }
        }
        return Ok(SearchOutcome::NotFound);
    }
    for s in 0..q {
        let t = q - s;
        for u in enumerate_q_cliques(g, (p + 1) * t + s) {
            // Every candidate w_i is determined by its non-neighbours in U.
            let mut options: Vec<(VertexSet, u32)> = Vec::new();
            for x in 0..g.n() as u32 {
                if u.contains(x) {
                    continue;
                }
                let miss = u.difference(g.row(x));
                if miss.len() == t && !options.iter().any(|(m, _)| *m == miss) {
                    options.push((miss, x));
                }
            }
            let mut found = None;
            let complete = for_each_combination(options.len(), p + 1, |c| {
                steps += 1;
                if steps > budget {
                    return false;
                }
                let disjoint = c.iter().enumerate().all(|(i, &a)| c[i + 1..].iter().all(|&b| options[a].0.is_disjoint(&options[b].0)));
                if disjoint {
                    let parts: Vec<VertexSet> = c.iter().map(|&i| options[i].0.clone()).collect();
                    let used = parts.iter().fold(VertexSet::new(), |a, t| a.union(t));
                    found = Some(Witness::Ocular {
                        s,
                        parts,
                        z: u.difference(&used),
                        w: c.iter().map(|&i| options[i].1).collect(),
                    });
                }
                found.is_none()
            });
            if let Some(w) = found {
                return Ok(SearchOutcome::Found(w));
            }
            if !complete {
                return Ok(SearchOutcome::Indeterminate);
            }
        }
    }
    Ok(SearchOutcome::NotFound)
}
