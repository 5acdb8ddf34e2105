//! `(p,q)`-biclique-Helly and hereditary `(p,q)`-biclique-Helly recognition,
//! bicompletions, biexpansions, and bioculars.
//!
//! Edgeless graphs count as complete bipartite, so stable sets are bicliques.

use crate::basis_engine::{self, CoreProvider, EngineConfig, Mode, ProviderCost};
use crate::clique_helly::{shrink_core_family, two_set_basis};
use crate::combin::for_each_combination;
use crate::error::{Error, Result};
use crate::graphcore::{enumerate_q_bicliques, Graph};
use crate::verdict::{BiocularClause, Method, SearchOutcome, Stats, Verdict, Witness};
use crate::VertexSet;

/// Side of a 2-labeled vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Label {
    X,
    Y,
}

/// An induced subgraph with every vertex labeled `X` or `Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledSubgraph {
    pub x: VertexSet,
    pub y: VertexSet,
}

impl LabeledSubgraph {
    pub fn vertices(&self) -> VertexSet {
        self.x.union(&self.y)
    }

    pub fn label(&self, v: u32) -> Option<Label> {
        if self.x.contains(v) {
            Some(Label::X)
        } else if self.y.contains(v) {
            Some(Label::Y)
        } else {
            None
        }
    }

    /// Adjacent with different labels, or nonadjacent with the same label.
    pub fn bicompatible(&self, g: &Graph, u: u32, v: u32) -> bool {
        match (self.label(u), self.label(v)) {
            (Some(a), Some(b)) => g.adjacent(u, v) == (a != b),
            _ => false,
        }
    }

    /// Vertices adjacent to exactly the vertices carrying the other label.
    pub fn biuniversal(&self, g: &Graph) -> VertexSet {
        let all = self.vertices();
        let side = |own: &VertexSet, other: &VertexSet| -> Vec<u32> {
            own.iter().filter(|&v| g.row(v).intersection(&all) == *other).collect()
        };
        side(&self.x, &self.y).into_iter().chain(side(&self.y, &self.x)).collect()
    }
}

/// Label making `v` bicompatible with every vertex of `px ∪ py` (labeled `X`
/// and `Y`), if any.
fn compatible_label(g: &Graph, v: u32, px: &VertexSet, py: &VertexSet) -> Option<Label> {
    let row = g.row(v);
    let as_y = px.is_subset(row) && row.is_disjoint(py);
    let as_x = row.is_disjoint(px) && py.is_subset(row);
    debug_assert!(!(as_x && as_y) || (px.is_empty() && py.is_empty()));
    match (as_x, as_y) {
        (true, _) => Some(Label::X),
        (false, true) => Some(Label::Y),
        _ => None,
    }
}

fn labeled_extension(g: &Graph, px: &VertexSet, py: &VertexSet) -> LabeledSubgraph {
    let mut out = LabeledSubgraph { x: px.clone(), y: py.clone() };
    for v in 0..g.n() as u32 {
        if px.contains(v) || py.contains(v) {
            continue;
        }
        match compatible_label(g, v, px, py) {
            Some(Label::X) => out.x.insert(v),
            Some(Label::Y) => out.y.insert(v),
            None => false,
        };
    }
    out
}

/// The bicompletion of a nonempty biclique `p`: the vertices `v` with
/// `p ∪ {v}` a biclique, labeled to extend the bipartition of `G[p]`.
pub fn bicompletion(g: &Graph, p: &VertexSet) -> Result<LabeledSubgraph> {
    if p.is_empty() {
        return Err(Error::Precondition("the set must be nonempty".into()));
    }
    if p.bound() > g.n() {
        return Err(Error::VertexOutOfRange { vertex: p.bound() as u32 - 1, n: g.n() });
    }
    let (x, y) = g.bipartition_of(p).ok_or_else(|| Error::Precondition(format!("{p} is not a biclique")))?;
    Ok(labeled_extension(g, &x, &y))
}

/// Core of the maximal bicliques containing `p`, or `None` when `p` is
/// empty or not a biclique.
pub fn core_bp(g: &Graph, p: &VertexSet) -> Option<VertexSet> {
    if p.is_empty() || p.bound() > g.n() {
        return None;
    }
    let (x, y) = g.bipartition_of(p)?;
    Some(labeled_extension(g, &x, &y).biuniversal(g))
}

/// Cores of the families of maximal bicliques containing a given set.
pub struct BicliqueCores<'a>(pub &'a Graph);

impl CoreProvider for BicliqueCores<'_> {
    fn universe(&self) -> usize {
        self.0.n()
    }

    fn core_of(&self, p: &VertexSet) -> Option<VertexSet> {
        core_bp(self.0, p)
    }

    fn is_empty_for(&self, p: &VertexSet) -> bool {
        !self.0.is_biclique(p)
    }

    fn cost(&self) -> ProviderCost {
        ProviderCost { name: "biuniversal vertices of the bicompletion", work: self.0.n() + self.0.m() }
    }
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

fn is_small_case(p: usize, q: usize) -> bool {
    matches!((p, q), (1, 1) | (1, 2) | (2, 1))
}

/// Three vertices that do not form a biclique, when `g` is not complete
/// bipartite.
pub fn non_biclique_triple(g: &Graph) -> Option<[u32; 3]> {
    let v0 = g.vertices().first()?;
    let y = g.row(v0).clone();
    let x = g.vertices().difference(&y);
    for a in &x {
        if let Some(b) = g.row(a).intersection(&x).first() {
            return Some(sorted([v0, a, b]));
        }
        if let Some(b) = y.difference(g.row(a)).first() {
            return Some(sorted([v0, a, b]));
        }
    }
    for a in &y {
        if let Some(b) = g.row(a).intersection(&y).first() {
            return Some(sorted([v0, a, b]));
        }
    }
    None
}

fn sorted(mut t: [u32; 3]) -> [u32; 3] {
    t.sort_unstable();
    t
}

/// A non-biclique triple read as a `(3,1,0)`-biocular, or for `q = 2` as a
/// `(2,2,1)`-biocular whose `Z` is the last vertex.
fn triple_biocular(t: [u32; 3], q: usize) -> Witness {
    let (s, parts, z) = if q == 2 {
        (1, t[..2].iter().map(|&v| VertexSet::singleton(v)).collect(), VertexSet::singleton(t[2]))
    } else {
        (0, t.iter().map(|&v| VertexSet::singleton(v)).collect(), VertexSet::new())
    };
    Witness::Biocular { s, clause: BiocularClause::Beta1, parts, z, w: Vec::new() }
}

pub fn is_pq_biclique_helly(g: &Graph, p: usize, q: usize) -> Result<Verdict> {
    is_pq_biclique_helly_with(g, p, q, &EngineConfig::default())
}

pub fn is_pq_biclique_helly_with(g: &Graph, p: usize, q: usize, config: &EngineConfig) -> Result<Verdict> {
    check_pq(p, q)?;
    if g.n() == 0 {
        return Ok(Verdict::holds(Method::Trivial, stats(g)));
    }
    if is_small_case(p, q) {
        let Some(t) = non_biclique_triple(g) else {
            return Ok(Verdict::holds(Method::CompleteBipartite, stats(g)));
        };
        let w = if p == 2 {
            let members: Vec<VertexSet> = t.iter().map(|&v| VertexSet::singleton(v)).collect();
            let support_cores = (0..3)
                .map(|i| {
                    let support: VertexSet = t.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v).collect();
                    core_bp(g, &support).expect("pairs are bicliques")
                })
                .collect();
            Witness::Basis { members, support_cores }
        } else {
            core_family_witness(g, q).expect("a graph that is not complete bipartite has disjoint biclique cores")
        };
        return Ok(Verdict::fails(Method::CompleteBipartite, w, stats(g)));
    }
    if p == 1 {
        return Ok(match core_family_witness(g, q) {
            None => Verdict::holds(Method::CoreIntersection, stats(g)),
            Some(w) => Verdict::fails(Method::CoreIntersection, w, stats(g)),
        });
    }
    engine(g, p, q, Mode::Plain, config)
}

pub fn is_hereditary_pq_biclique_helly(g: &Graph, p: usize, q: usize) -> Result<Verdict> {
    is_hereditary_pq_biclique_helly_with(g, p, q, &EngineConfig::default())
}

pub fn is_hereditary_pq_biclique_helly_with(g: &Graph, p: usize, q: usize, config: &EngineConfig) -> Result<Verdict> {
    check_pq(p, q)?;
    if g.n() == 0 {
        return Ok(Verdict::holds(Method::Trivial, stats(g)));
    }
    if is_small_case(p, q) {
        return Ok(match non_biclique_triple(g) {
            None => Verdict::holds(Method::CompleteBipartite, stats(g)),
            Some(t) => Verdict::fails(Method::CompleteBipartite, triple_biocular(t, q), stats(g)),
        });
    }
    if p == 1 {
        return Ok(union_of_q_bicliques(g, q));
    }
    engine(g, p, q, Mode::Hereditary, config)
}

fn core_family_witness(g: &Graph, q: usize) -> Option<Witness> {
    let sets = enumerate_q_bicliques(g, q);
    let cores: Vec<VertexSet> = sets.iter().map(|s| core_bp(g, s).unwrap()).collect();
    let keep = shrink_core_family(&cores, q)?;
    Some(Witness::CoreFamily {
        sets: keep.iter().map(|&i| sets[i].clone()).collect(),
        cores: keep.iter().map(|&i| cores[i].clone()).collect(),
    })
}

/// Extends `s` greedily to a maximal biclique, trying vertices in increasing order.
pub fn extend_to_maximal_biclique(g: &Graph, s: &VertexSet) -> VertexSet {
    let mut k = s.clone();
    for v in 0..g.n() as u32 {
        if !k.contains(v) {
            k.insert(v);
            if !g.is_biclique(&k) {
                k.remove(v);
            }
        }
    }
    k
}

fn union_of_q_bicliques(g: &Graph, q: usize) -> Verdict {
    let bicliques = enumerate_q_bicliques(g, q);
    let union = bicliques.iter().fold(VertexSet::new(), |acc, b| acc.union(b));
    if g.is_biclique(&union) {
        return Verdict::holds(Method::UnionCheck, stats(g));
    }
    let first = extend_to_maximal_biclique(g, &bicliques[0]);
    let other = bicliques
        .iter()
        .filter(|b| !b.is_subset(&first))
        .map(|b| extend_to_maximal_biclique(g, b))
        .next()
        .expect("q-bicliques spanning a non-biclique lie in two maximal bicliques");
    let members = two_set_basis(&first, &other, q);
    let support_cores = vec![core_bp(g, &members[1]).unwrap(), core_bp(g, &members[0]).unwrap()];
    Verdict::fails(Method::UnionCheck, Witness::Basis { members, support_cores }, stats(g))
}

fn engine(g: &Graph, p: usize, q: usize, mode: Mode, config: &EngineConfig) -> Result<Verdict> {
    let qsets = enumerate_q_bicliques(g, q);
    let mut st = stats(g);
    st.qsets = Some(qsets.len());
    let out = basis_engine::run(qsets, p, q, &BicliqueCores(g), config, mode)?;
    st.engine = Some(out.stats);
    Ok(match out.violation {
        None => Verdict::holds(Method::Engine, st),
        Some(v) => Verdict::fails(Method::Engine, v.into(), st),
    })
}

/// Whether `d` certifies that `g` is not `(p,q)`-biclique-Helly: `p+1`
/// distinct q-sets whose `p`-unions are bicliques, with fewer than `q`
/// vertices biuniversal in all their bicompletions.
pub fn validate_non_helly_certificate(g: &Graph, p: usize, q: usize, d: &[VertexSet]) -> bool {
    if p == 0 || q == 0 || d.len() != p + 1 {
        return false;
    }
    if d.iter().enumerate().any(|(i, s)| s.len() != q || s.bound() > g.n() || d[..i].contains(s)) {
        return false;
    }
    let mut common: Option<VertexSet> = None;
    for skip in 0..=p {
        let support = d.iter().enumerate().filter(|&(i, _)| i != skip).fold(VertexSet::new(), |a, (_, s)| a.union(s));
        let Some(core) = core_bp(g, &support) else { return false };
        common = Some(match common {
            None => core,
            Some(c) => c.intersection(&core),
        });
    }
    common.map_or(false, |c| c.len() < q)
}

/// The `(p+1, q)`-biexpansion of a family of `p+1 >= 3` distinct q-bicliques
/// whose union is a biclique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Biexpansion {
    pub family: Vec<VertexSet>,
    pub labeled: LabeledSubgraph,
    pub biuniversal: VertexSet,
}

pub fn build_biexpansion(g: &Graph, family: &[VertexSet]) -> Result<Biexpansion> {
    let k = family.len();
    if k < 3 {
        return Err(Error::InvalidBasis("a biexpansion needs at least three bicliques".into()));
    }
    let q = family[0].len();
    for (i, s) in family.iter().enumerate() {
        if s.len() != q || s.bound() > g.n() || !g.is_biclique(s) {
            return Err(Error::InvalidBasis(format!("{s} is not a {q}-biclique")));
        }
        if family[..i].contains(s) {
            return Err(Error::InvalidBasis(format!("{s} appears twice")));
        }
    }
    let union = family.iter().fold(VertexSet::new(), |a, s| a.union(s));
    let (ux, uy) =
        g.bipartition_of(&union).ok_or_else(|| Error::InvalidBasis(format!("the union {union} is not a biclique")))?;
    let mut labeled = LabeledSubgraph { x: ux.clone(), y: uy.clone() };
    for skip in 0..k {
        let support = family.iter().enumerate().filter(|&(i, _)| i != skip).fold(VertexSet::new(), |a, (_, s)| a.union(s));
        let (px, py) = (ux.intersection(&support), uy.intersection(&support));
        for v in 0..g.n() as u32 {
            if union.contains(v) {
                continue;
            }
            let Some(label) = compatible_label(g, v, &px, &py) else { continue };
            match (labeled.label(v), label) {
                (None, Label::X) => {
                    labeled.x.insert(v);
                }
                (None, Label::Y) => {
                    labeled.y.insert(v);
                }
                (Some(old), new) if old != new => return Err(Error::LabelConflict { vertex: v }),
                _ => {}
            }
        }
    }
    let biuniversal = labeled.biuniversal(g);
    Ok(Biexpansion { family: family.to_vec(), labeled, biuniversal })
}

/// Decides `(p,q)`-biclique-Helly for `p >= 2` through biexpansions: every
/// biexpansion needs `q` biuniversal vertices and, for `p = 2`, pairwise
/// biclique unions of three q-bicliques must have a biclique union.
/// Exponential; meant for small graphs.
pub fn holds_by_biexpansions(g: &Graph, p: usize, q: usize) -> Result<bool> {
    check_pq(p, q)?;
    if p < 2 {
        return Err(Error::invalid("biexpansions need p >= 2"));
    }
    let bicliques = enumerate_q_bicliques(g, q);
    let mut result = Ok(true);
    for_each_combination(bicliques.len(), p + 1, |c| {
        let fam: Vec<VertexSet> = c.iter().map(|&i| bicliques[i].clone()).collect();
        let union = fam.iter().fold(VertexSet::new(), |a, s| a.union(s));
        if g.is_biclique(&union) {
            match build_biexpansion(g, &fam) {
                Ok(e) if e.biuniversal.len() < q => result = Ok(false),
                Ok(_) => {}
                Err(e) => result = Err(e),
            }
        } else if p == 2 && (0..3).all(|i| g.is_biclique(&fam[i].union(&fam[(i + 1) % 3]))) {
            result = Ok(false);
        }
        matches!(result, Ok(true))
    });
    result
}

/// A realized biocular. Vertices are numbered `T_1, ..., T_{p+1}`, then `Z`,
/// then `W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiocularSpec {
    pub p: usize,
    pub q: usize,
    pub s: usize,
    pub clause: BiocularClause,
    pub parts: Vec<VertexSet>,
    pub z: VertexSet,
    pub w: Vec<u32>,
    pub graph: Graph,
}

impl BiocularSpec {
    pub fn witness(&self) -> Witness {
        Witness::Biocular {
            s: self.s,
            clause: self.clause,
            parts: self.parts.clone(),
            z: self.z.clone(),
            w: self.w.clone(),
        }
    }
}

/// Whether a `(p+1, q, s)`-biocular exists with the given clause.
pub fn biocular_clause_applies(p: usize, q: usize, s: usize, clause: BiocularClause) -> bool {
    if p == 0 || q == 0 || s >= q {
        return false;
    }
    match clause {
        BiocularClause::Beta1 => p == 1 || (p == 2 && s == 0),
        BiocularClause::Beta2 => p >= 2 && (p, q) != (2, 1),
    }
}

/// Builds the canonical `(p+1, q, s)`-biocular under `clause`:
/// for `(β1, p = 1)` a matching between `T_1` and `T_2` with `Z` isolated,
/// for `(β1, p = 2)` the complete tripartite graph on the parts, and for
/// `β2` a stable `U` with each `w_i` complete to `U - T_i`, the `w_i`
/// inducing `w_graph` (edgeless when absent). For `(p,q) = (1,1)` the
/// bioculars are `K_3` (`β1`) and the complement of `P_3` (`β2`).
pub fn build_biocular(
    p: usize,
    q: usize,
    s: usize,
    clause: BiocularClause,
    w_graph: Option<&Graph>,
) -> Result<BiocularSpec> {
    check_pq(p, q)?;
    if w_graph.is_some() && clause != BiocularClause::Beta2 {
        return Err(Error::invalid("a graph on W only applies to the second clause"));
    }
    let singletons = |k: u32| (0..k).map(VertexSet::singleton).collect::<Vec<_>>();
    if (p, q) == (1, 1) {
        if s != 0 {
            return Err(Error::invalid("s must be 0 when q = 1"));
        }
        let graph = match clause {
            BiocularClause::Beta1 => Graph::complete(3),
            BiocularClause::Beta2 => Graph::new(3, &[(0, 1)])?,
        };
        let (parts, z) = (singletons(3), VertexSet::new());
        return Ok(BiocularSpec { p, q, s, clause, parts, z, w: Vec::new(), graph });
    }
    if !biocular_clause_applies(p, q, s, clause) {
        return Err(Error::invalid(format!("no ({}, {q}, {s})-biocular follows {clause:?}", p + 1)));
    }
    let t = q - s;
    let u_size = (p + 1) * t + s;
    let parts: Vec<VertexSet> = (0..=p).map(|i| ((i * t) as u32..((i + 1) * t) as u32).collect()).collect();
    let z: VertexSet = (((p + 1) * t) as u32..u_size as u32).collect();
    let mut edges = Vec::new();
    let graph = match (clause, p) {
        (BiocularClause::Beta1, 1) => {
            edges.extend((0..t as u32).map(|i| (i, i + t as u32)));
            Graph::new(u_size, &edges)?
        }
        (BiocularClause::Beta1, _) => {
            for (i, a) in parts.iter().enumerate() {
                for b in &parts[i + 1..] {
                    edges.extend(a.iter().flat_map(|x| b.iter().map(move |y| (x, y))));
                }
            }
            Graph::new(u_size, &edges)?
        }
        (BiocularClause::Beta2, _) => {
            let u = VertexSet::full(u_size);
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
            return Ok(BiocularSpec { p, q, s, clause, parts, z, w, graph });
        }
    };
    Ok(BiocularSpec { p, q, s, clause, parts, z, w: Vec::new(), graph })
}

/// Whether the vertex sets of a claimed biocular satisfy the definition
/// inside `g`. For `(p,q) = (1,1)` the parts are three singletons whose
/// union is not a biclique.
pub fn is_biocular_embedding(
    g: &Graph,
    p: usize,
    q: usize,
    s: usize,
    clause: BiocularClause,
    parts: &[VertexSet],
    z: &VertexSet,
    w: &[u32],
) -> bool {
    if (p, q) == (1, 1) {
        return s == 0 && is_biocular_embedding(g, 2, 1, 0, BiocularClause::Beta1, parts, z, w);
    }
    if !biocular_clause_applies(p, q, s, clause)
        || parts.len() != p + 1
        || z.len() != s
        || parts.iter().any(|t| t.len() != q - s)
    {
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
    let breaks = |base: &VertexSet, t: &VertexSet| {
        t.iter().all(|v| {
            let mut b = base.clone();
            b.insert(v);
            !g.is_biclique(&b)
        })
    };
    match clause {
        BiocularClause::Beta1 => {
            w.is_empty()
                && parts.iter().all(|t| {
                    let rest = u.difference(t);
                    g.is_biclique(&rest) && breaks(&rest, t)
                })
        }
        BiocularClause::Beta2 => {
            let wset: VertexSet = w.iter().copied().collect();
            if w.len() != p + 1 || wset.len() != p + 1 || !wset.is_disjoint(&u) || wset.bound() > g.n() {
                return false;
            }
            g.is_biclique(&u)
                && w.iter().zip(parts).all(|(&wi, t)| {
                    let mut rest = u.difference(t);
                    rest.insert(wi);
                    g.is_biclique(&rest) && breaks(&rest, t)
                })
        }
    }
}

/// Searches for an induced `(p+1, q, s)`-biocular for any `s < q`. Gives up
/// with an indeterminate answer after `budget` candidate sets.
pub fn find_induced_biocular(g: &Graph, p: usize, q: usize, budget: u64) -> Result<SearchOutcome<Witness>> {
    check_pq(p, q)?;
    if (p, q) == (1, 1) {
        return Ok(match non_biclique_triple(g) {
            Some(t) => SearchOutcome::Found(triple_biocular(t, 1)),
            None => SearchOutcome::NotFound,
        });
    }
    let mut steps = 0u64;
    let over = |steps: &mut u64| {
        *steps += 1;
        *steps > budget
    };
    if p == 1 {
        let bicliques = enumerate_q_bicliques(g, q);
        for (i, k1) in bicliques.iter().enumerate() {
            for k2 in &bicliques[i + 1..] {
                if over(&mut steps) {
                    return Ok(SearchOutcome::Indeterminate);
                }
                let z = k1.intersection(k2);
                let parts = vec![k1.difference(&z), k2.difference(&z)];
                if is_biocular_embedding(g, 1, q, z.len(), BiocularClause::Beta1, &parts, &z, &[]) {
                    let w = Witness::Biocular { s: z.len(), clause: BiocularClause::Beta1, parts, z, w: Vec::new() };
                    return Ok(SearchOutcome::Found(w));
                }
            }
        }
        return Ok(SearchOutcome::NotFound);
    }
    if p == 2 {
        let bicliques = enumerate_q_bicliques(g, q);
        let mut found = None;
        let complete = for_each_combination(bicliques.len(), 3, |c| {
            if over(&mut steps) {
                return false;
            }
            let parts: Vec<VertexSet> = c.iter().map(|&i| bicliques[i].clone()).collect();
            let z = VertexSet::new();
            if is_biocular_embedding(g, 2, q, 0, BiocularClause::Beta1, &parts, &z, &[]) {
                found = Some(Witness::Biocular { s: 0, clause: BiocularClause::Beta1, parts, z, w: Vec::new() });
            }
            found.is_none()
        });
        if let Some(w) = found {
            return Ok(SearchOutcome::Found(w));
        }
        if !complete {
            return Ok(SearchOutcome::Indeterminate);
        }
        if q == 1 {
            return Ok(SearchOutcome::NotFound);
        }
    }
    for s in 0..q {
        let t = q - s;
        for u in enumerate_q_bicliques(g, (p + 1) * t + s) {
            let (ux, uy) = g.bipartition_of(&u).expect("enumerated sets are bicliques");
            // A vertex outside U can play w_i only for the vertices of U it
            // is incompatible with under one of its two labels.
            let mut options: Vec<(VertexSet, u32)> = Vec::new();
            for x in 0..g.n() as u32 {
                if u.contains(x) {
                    continue;
                }
                let row = g.row(x);
                let as_x = ux.intersection(row).union(&uy.difference(row));
                for miss in [u.difference(&as_x), as_x] {
                    if miss.len() == t && !options.iter().any(|(m, _)| *m == miss) {
                        options.push((miss, x));
                    }
                }
            }
            let mut found = None;
            let complete = for_each_combination(options.len(), p + 1, |c| {
                if over(&mut steps) {
                    return false;
                }
                let mut used = VertexSet::new();
                let mut ws = VertexSet::new();
                for &i in c {
                    if !used.is_disjoint(&options[i].0) || !ws.insert(options[i].1) {
                        return true;
                    }
                    used.union_with(&options[i].0);
                }
                let parts: Vec<VertexSet> = c.iter().map(|&i| options[i].0.clone()).collect();
                let w: Vec<u32> = c.iter().map(|&i| options[i].1).collect();
                let z = u.difference(&used);
                if is_biocular_embedding(g, p, q, s, BiocularClause::Beta2, &parts, &z, &w) {
                    found = Some(Witness::Biocular { s, clause: BiocularClause::Beta2, parts, z, w });
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
