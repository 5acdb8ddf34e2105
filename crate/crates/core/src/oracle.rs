//! Brute-force references that follow the definitions literally, plus
//! independent witness validation.

use std::time::{Duration, Instant};

use crate::clique_helly::is_ocular_embedding;
use crate::biclique_helly::is_biocular_embedding;
use crate::error::{Error, Result};
use crate::hypercore::Basis;
use crate::property::{Instance, Property, Structure};
use crate::{Graph, Hypergraph, VertexSet, Witness};

/// Limits on brute-force runs. Exceeding any of them yields
/// [`Error::BudgetExceeded`].
#[derive(Clone, Debug)]
pub struct Budget {
    pub max_n: usize,
    pub max_m: usize,
    pub max_steps: u64,
    pub deadline: Option<Instant>,
}

impl Default for Budget {
    /// `n <= 10`, `m <= 14`, and a wall clock read from `HELLYKIT_BUDGET_MS`
    /// (60 seconds when unset).
    fn default() -> Self {
        let ms = std::env::var("HELLYKIT_BUDGET_MS").ok().and_then(|s| s.parse().ok()).unwrap_or(60_000);
        Budget { max_n: 10, max_m: 14, max_steps: 1 << 32, deadline: Some(Instant::now() + Duration::from_millis(ms)) }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { max_n: usize::MAX, max_m: usize::MAX, max_steps: u64::MAX, deadline: None }
    }

    pub fn with_limits(max_n: usize, max_m: usize) -> Self {
        Budget { max_n, max_m, ..Budget::unlimited() }
    }

    fn check_size(&self, n: usize, m: usize) -> Result<()> {
        if n > self.max_n || m > self.max_m {
            return Err(Error::BudgetExceeded(format!(
                "instance with n = {n}, m = {m} exceeds the oracle limits n <= {}, m <= {}",
                self.max_n, self.max_m
            )));
        }
        Ok(())
    }

    fn tick(&self, steps: &mut u64) -> Result<()> {
        *steps += 1;
        if *steps > self.max_steps {
            return Err(Error::BudgetExceeded(format!("more than {} oracle steps", self.max_steps)));
        }
        if *steps & 0xfff == 0 && self.deadline.is_some_and(|d| Instant::now() > d) {
            return Err(Error::BudgetExceeded("oracle wall-clock limit reached".into()));
        }
        Ok(())
    }
}

fn intersect_all<'a>(sets: impl IntoIterator<Item = &'a VertexSet>) -> Option<VertexSet> {
    let mut it = sets.into_iter();
    let mut acc = it.next()?.clone();
    for s in it {
        acc.intersect_with(s);
    }
    Some(acc)
}

/// A nonempty `(p,q)`-intersecting subfamily of `family` whose core has
/// fewer than `q` vertices, as sorted indices. Subfamilies are grown one
/// member at a time; a family that stops being `(p,q)`-intersecting is
/// never extended since all its extensions fail too.
pub fn brute_pq_helly_counterexample(
    family: &[VertexSet],
    p: usize,
    q: usize,
    budget: &Budget,
) -> Result<Option<Vec<usize>>> {
    fn grow(
        family: &[VertexSet],
        p: usize,
        q: usize,
        chosen: &mut Vec<usize>,
        core: &VertexSet,
        budget: &Budget,
        steps: &mut u64,
    ) -> Result<bool> {
        let start = chosen.last().map_or(0, |&i| i + 1);
        for i in start..family.len() {
            budget.tick(steps)?;
            let next_core = if chosen.is_empty() { family[i].clone() } else { core.intersection(&family[i]) };
            // Only the subfamilies of at most p members that contain the new
            // edge can break the intersecting condition.
            let mut intersecting = family[i].len() >= q;
            for k in 1..p.min(chosen.len() + 1) {
                if !intersecting {
                    break;
                }
                intersecting = crate::combin::for_each_combination(chosen.len(), k, |c| {
                    let sub = intersect_all(c.iter().map(|&j| &family[chosen[j]])).unwrap();
                    sub.intersection_len(&family[i]) >= q
                });
            }
            if !intersecting {
                continue;
            }
            chosen.push(i);
            if next_core.len() < q || grow(family, p, q, chosen, &next_core, budget, steps)? {
                return Ok(true);
            }
            chosen.pop();
        }
        Ok(false)
    }
    if p == 0 || q == 0 {
        return Err(Error::invalid("p and q must be positive"));
    }
    let mut chosen = Vec::new();
    let mut steps = 0;
    Ok(grow(family, p, q, &mut chosen, &VertexSet::new(), budget, &mut steps)?.then_some(chosen))
}

/// Every nonempty `(p,q)`-intersecting subfamily of edges has a core with
/// at least `q` vertices.
pub fn brute_is_pq_helly(h: &Hypergraph, p: usize, q: usize, budget: &Budget) -> Result<bool> {
    budget.check_size(h.n(), h.m())?;
    Ok(brute_pq_helly_counterexample(h.edges(), p, q, budget)?.is_none())
}

/// Every vertex-induced subhypergraph is `(p,q)`-Helly.
pub fn brute_is_hereditary_pq_helly(h: &Hypergraph, p: usize, q: usize, budget: &Budget) -> Result<bool> {
    budget.check_size(h.n(), h.m())?;
    Ok(hereditary_counterexample(h.n(), |x| Ok(h.induced_sub(x).0.edges().to_vec()), p, q, budget)?.is_none())
}

/// A vertex subset whose induced family (as produced by `family_on`) fails
/// the `(p,q)`-Helly property.
fn hereditary_counterexample(
    n: usize,
    family_on: impl Fn(&VertexSet) -> Result<Vec<VertexSet>>,
    p: usize,
    q: usize,
    budget: &Budget,
) -> Result<Option<VertexSet>> {
    let mut steps = 0;
    for mask in 1u64..(1u64 << n) {
        budget.tick(&mut steps)?;
        let x: VertexSet = (0..n as u32).filter(|&v| mask >> v & 1 == 1).collect();
        if brute_pq_helly_counterexample(&family_on(&x)?, p, q, budget)?.is_some() {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

/// The maximal cliques (or bicliques) of `g`, found by testing every
/// vertex subset.
pub fn brute_maximal_sets(g: &Graph, structure: Structure, budget: &Budget) -> Result<Vec<VertexSet>> {
    let n = g.n();
    if n > budget.max_n.min(20) {
        return Err(Error::BudgetExceeded(format!("{n} vertices are too many for subset enumeration")));
    }
    let test = |s: &VertexSet| match structure {
        Structure::Clique => g.is_clique(s),
        Structure::Biclique => g.is_biclique(s),
        Structure::Hypergraph => unreachable!("graphs only"),
    };
    let mut good = vec![false; 1 << n];
    let mut steps = 0;
    for mask in 1usize..(1 << n) {
        budget.tick(&mut steps)?;
        let s: VertexSet = (0..n as u32).filter(|&v| mask >> v & 1 == 1).collect();
        good[mask] = test(&s);
    }
    let mut out: Vec<VertexSet> = (1usize..(1 << n))
        .filter(|&mask| good[mask] && (0..n).all(|v| mask >> v & 1 == 1 || !good[mask | 1 << v]))
        .map(|mask| (0..n as u32).filter(|&v| mask >> v & 1 == 1).collect())
        .collect();
    out.sort();
    Ok(out)
}

/// The clique- or biclique-Helly property straight from the definition;
/// the hereditary variant quantifies over all induced subgraphs.
pub fn brute_graph_property(
    g: &Graph,
    p: usize,
    q: usize,
    structure: Structure,
    hereditary: bool,
    budget: &Budget,
) -> Result<bool> {
    if structure == Structure::Hypergraph {
        return Err(Error::invalid("graph properties concern cliques or bicliques"));
    }
    let family_on = |x: &VertexSet| -> Result<Vec<VertexSet>> {
        let (sub, map) = g.induced(x);
        let sets = brute_maximal_sets(&sub, structure, budget)?;
        if sets.len() > budget.max_m {
            return Err(Error::BudgetExceeded(format!("{} maximal sets exceed m <= {}", sets.len(), budget.max_m)));
        }
        Ok(sets.iter().map(|s| s.map(|v| map[v as usize])).collect())
    };
    if hereditary {
        if g.n() > budget.max_n {
            return Err(Error::BudgetExceeded(format!("{} vertices exceed n <= {}", g.n(), budget.max_n)));
        }
        Ok(hereditary_counterexample(g.n(), family_on, p, q, budget)?.is_none())
    } else {
        Ok(brute_pq_helly_counterexample(&family_on(&g.vertices())?, p, q, budget)?.is_none())
    }
}

/// Core of the maximal cliques (or bicliques) containing `p`, computed as
/// the vertices `v` such that adding `v` to any one-vertex extension of `p`
/// still gives a clique (or biclique). `None` when `p` is not one.
pub fn definitional_graph_core(g: &Graph, p: &VertexSet, structure: Structure) -> Option<VertexSet> {
    let test = |s: &VertexSet| match structure {
        Structure::Clique => g.is_clique(s),
        _ => g.is_biclique(s),
    };
    if p.is_empty() || p.bound() > g.n() || !test(p) {
        return None;
    }
    if structure == Structure::Clique {
        let closed = |w: u32| {
            let mut r = g.row(w).clone();
            r.insert(w);
            r
        };
        let ext: VertexSet = (0..g.n() as u32).filter(|&w| p.is_subset(&closed(w))).collect();
        return Some(ext.iter().filter(|&v| ext.is_subset(&closed(v))).collect());
    }
    let with = |extra: &[u32]| {
        let mut s = p.clone();
        s.extend(extra.iter().copied());
        s
    };
    let ext: Vec<u32> = (0..g.n() as u32).filter(|&w| test(&with(&[w]))).collect();
    Some(ext.iter().copied().filter(|&v| ext.iter().all(|&w| test(&with(&[v, w])))).collect())
}

fn support_core(instance: Instance<'_>, structure: Structure, support: &VertexSet) -> Option<VertexSet> {
    match instance {
        Instance::Hypergraph(h) => {
            let containing: Vec<&VertexSet> = h.edges().iter().filter(|e| support.is_subset(e)).collect();
            intersect_all(containing)
        }
        Instance::Graph(g) => definitional_graph_core(g, support, structure),
    }
}

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedWitness(msg.into())
}

/// Whether `witness` independently certifies that `property` fails for
/// `instance` with parameters `p` and `q`. Witnesses that do not fit the
/// instance (vertices out of range, graph-only witnesses for hypergraphs
/// and the like) are reported as malformed.
pub fn validate_witness(instance: Instance<'_>, property: Property, p: usize, q: usize, witness: &Witness) -> Result<bool> {
    let n = instance.n();
    let in_range = |sets: &[VertexSet]| sets.iter().all(|s| s.bound() <= n);
    match (instance, property.structure) {
        (Instance::Hypergraph(_), Structure::Hypergraph) | (Instance::Graph(_), Structure::Clique | Structure::Biclique) => {}
        _ => return Err(malformed("the property does not match the instance")),
    }
    match witness {
        Witness::Basis { members, support_cores } => {
            if !in_range(members) || !in_range(support_cores) {
                return Err(malformed("basis vertex out of range"));
            }
            if members.len() != p + 1 || support_cores.len() != p + 1 {
                return Ok(false);
            }
            let Ok(basis) = Basis::new(members.clone(), q) else { return Ok(false) };
            let mut common: Option<VertexSet> = None;
            for (support, claimed) in basis.support_sets().iter().zip(support_cores) {
                match support_core(instance, property.structure, support) {
                    Some(core) if core == *claimed => {
                        common = Some(common.map_or(core.clone(), |c| c.intersection(&core)));
                    }
                    _ => return Ok(false),
                }
            }
            let common = common.unwrap();
            if property.hereditary {
                Ok(basis.is_starlike() && common.is_disjoint(&basis.ext()))
            } else {
                Ok(common.len() < q)
            }
        }
        Witness::Subfamily { edges, indices } => {
            let Instance::Hypergraph(h) = instance else { return Err(malformed("subfamilies describe hypergraphs")) };
            if let Some(idx) = indices {
                if idx.len() != edges.len() || idx.iter().any(|&i| i >= h.m()) {
                    return Err(malformed("edge index out of range"));
                }
                if idx.iter().zip(edges).any(|(&i, e)| h.edge(i) != e) {
                    return Ok(false);
                }
            } else if !edges.iter().all(|e| h.edges().contains(e)) {
                return Ok(false);
            }
            if edges.is_empty() {
                return Ok(false);
            }
            let core = intersect_all(edges).unwrap();
            if core.len() < q && crate::hypercore::is_pq_intersecting(edges, p, q)? {
                return Ok(true);
            }
            // Two incomparable edges with at least q vertices each leave a
            // (1,q)-intersecting pair with a small core on a suitable
            // vertex subset.
            Ok(property.hereditary
                && p == 1
                && edges.len() == 2
                && edges.iter().all(|e| e.len() >= q)
                && !edges[0].is_subset(&edges[1])
                && !edges[1].is_subset(&edges[0]))
        }
        Witness::CoreFamily { sets, cores } => {
            if !in_range(sets) || !in_range(cores) {
                return Err(malformed("vertex out of range"));
            }
            if sets.is_empty() || sets.len() != cores.len() || sets.iter().any(|s| s.len() != q) {
                return Ok(false);
            }
            for (s, c) in sets.iter().zip(cores) {
                if support_core(instance, property.structure, s).as_ref() != Some(c) {
                    return Ok(false);
                }
            }
            Ok(p == 1 && intersect_all(cores).unwrap().len() < q)
        }
        Witness::JEmbedding { s, edges, parts, z } => {
            let Instance::Hypergraph(h) = instance else { return Err(malformed("J embeddings describe hypergraphs")) };
            if edges.iter().any(|&i| i >= h.m()) || !in_range(parts) || z.bound() > n {
                return Err(malformed("J embedding out of range"));
            }
            if !property.hereditary || *s >= q || parts.len() != p + 1 || edges.len() != p + 1 || z.len() != *s {
                return Ok(false);
            }
            let mut u = z.clone();
            for t in parts {
                if t.len() != q - s || !u.is_disjoint(t) {
                    return Ok(false);
                }
                u.union_with(t);
            }
            Ok(edges.iter().zip(parts).all(|(&i, t)| h.edge(i).intersection(&u) == u.difference(t)))
        }
        Witness::Ocular { s, parts, z, w } => {
            let Instance::Graph(g) = instance else { return Err(malformed("oculars describe graphs")) };
            if property.structure != Structure::Clique {
                return Err(malformed("oculars concern cliques"));
            }
            if !in_range(parts) || z.bound() > n || w.iter().any(|&v| v as usize >= n) {
                return Err(malformed("ocular vertex out of range"));
            }
            Ok(property.hereditary && is_ocular_embedding(g, p, q, *s, parts, z, w))
        }
        Witness::Biocular { s, clause, parts, z, w } => {
            let Instance::Graph(g) = instance else { return Err(malformed("bioculars describe graphs")) };
            if property.structure != Structure::Biclique {
                return Err(malformed("bioculars concern bicliques"));
            }
            if !in_range(parts) || z.bound() > n || w.iter().any(|&v| v as usize >= n) {
                return Err(malformed("biocular vertex out of range"));
            }
            Ok(property.hereditary && is_biocular_embedding(g, p, q, *s, *clause, parts, z, w))
        }
    }
}
