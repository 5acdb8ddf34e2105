//! Recognizers for the `(p,q)`-Helly and hereditary `(p,q)`-Helly properties
//! of hypergraphs.

use crate::basis_engine::{self, EngineConfig};
use crate::combin::for_each_combination;
use crate::error::{Error, Result};
use crate::hypercore::{core, is_pq_intersecting, phi_hypergraph, Hypergraph};
use crate::verdict::{Method, SearchOutcome, Stats, Verdict, Witness};
use crate::VertexSet;

/// Largest edge count accepted by [`is_strong_pq_helly`] by default.
pub const STRONG_EDGE_CAP: usize = 18;

fn check_pq(p: usize, q: usize) -> Result<()> {
    if p == 0 || q == 0 {
        return Err(Error::invalid("p and q must be positive"));
    }
    Ok(())
}

fn stats(h: &Hypergraph) -> Stats {
    Stats { n: h.n(), m: h.m(), ..Default::default() }
}

/// The q-sets contained in some edge, sorted.
fn edge_qsets(h: &Hypergraph, q: usize) -> Vec<VertexSet> {
    phi_hypergraph(h, q).qsets
}

pub fn is_pq_helly(h: &Hypergraph, p: usize, q: usize) -> Result<Verdict> {
    is_pq_helly_with(h, p, q, &EngineConfig::default())
}

pub fn is_pq_helly_with(h: &Hypergraph, p: usize, q: usize, config: &EngineConfig) -> Result<Verdict> {
    check_pq(p, q)?;
    if q > h.rank() {
        return Ok(Verdict::holds(Method::Trivial, stats(h)));
    }
    if p == 1 {
        let big: Vec<usize> = h.q_plus_edges(q);
        let c = core(big.iter().map(|&i| h.edge(i)))?;
        if c.len() >= q {
            return Ok(Verdict::holds(Method::CoreIntersection, stats(h)));
        }
        let indices = shrink_low_core(h, big, q);
        let edges = indices.iter().map(|&i| h.edge(i).clone()).collect();
        let w = Witness::Subfamily { edges, indices: Some(indices) };
        return Ok(Verdict::fails(Method::CoreIntersection, w, stats(h)));
    }
    let qsets = edge_qsets(h, q);
    let mut st = stats(h);
    st.qsets = Some(qsets.len());
    let out = basis_engine::run_plain(qsets, p, q, h, config)?;
    st.engine = Some(out.stats);
    Ok(match out.violation {
        None => Verdict::holds(Method::Engine, st),
        Some(v) => Verdict::fails(Method::Engine, v.into(), st),
    })
}

/// Drops edges from `family` while its core stays below `q`.
fn shrink_low_core(h: &Hypergraph, mut family: Vec<usize>, q: usize) -> Vec<usize> {
    let mut i = 0;
    while i < family.len() && family.len() > 1 {
        let rest: Vec<usize> = family.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &e)| e).collect();
        if core(rest.iter().map(|&e| h.edge(e))).map_or(false, |c| c.len() < q) {
            family = rest;
        } else {
            i += 1;
        }
    }
    family
}

pub fn is_hereditary_pq_helly(h: &Hypergraph, p: usize, q: usize) -> Result<Verdict> {
    is_hereditary_pq_helly_with(h, p, q, &EngineConfig::default())
}

pub fn is_hereditary_pq_helly_with(h: &Hypergraph, p: usize, q: usize, config: &EngineConfig) -> Result<Verdict> {
    check_pq(p, q)?;
    if q > h.rank() {
        return Ok(Verdict::holds(Method::Trivial, stats(h)));
    }
    if p == 1 {
        return Ok(hereditary_chain(h, q));
    }
    let qsets = edge_qsets(h, q);
    let mut st = stats(h);
    st.qsets = Some(qsets.len());
    let out = basis_engine::run_hereditary(qsets, p, q, h, config)?;
    st.engine = Some(out.stats);
    Ok(match out.violation {
        None => Verdict::holds(Method::Engine, st),
        Some(v) => Verdict::fails(Method::Engine, v.into(), st),
    })
}

/// For `p = 1`: after collapsing repeated edges, the `q⁺`-edges must be
/// pairwise comparable.
fn hereditary_chain(h: &Hypergraph, q: usize) -> Verdict {
    let (simple, collapsed) = h.dedup();
    let big: Vec<&VertexSet> = simple.edges().iter().filter(|e| e.len() >= q).collect();
    let mut verdict = Verdict::holds(Method::Chain, stats(h));
    'outer: for (i, a) in big.iter().enumerate() {
        for b in &big[i + 1..] {
            if !a.is_subset(b) && !b.is_subset(a) {
                let ia = h.edges().iter().position(|e| e == *a).unwrap();
                let ib = h.edges().iter().position(|e| e == *b).unwrap();
                let w = Witness::Subfamily { edges: vec![(*a).clone(), (*b).clone()], indices: Some(vec![ia, ib]) };
                verdict = Verdict::fails(Method::Chain, w, stats(h));
                break 'outer;
            }
        }
    }
    if collapsed {
        verdict = verdict.with_note("repeated edges were collapsed before the chain check");
    }
    verdict
}

/// Checks that every `(p+1)`-subfamily of edges which is `(p,q)`-intersecting
/// has a subfamily of at most `p` edges with the same core.
pub fn is_hereditary_by_edge_subfamilies(h: &Hypergraph, p: usize, q: usize) -> Result<Verdict> {
    check_pq(p, q)?;
    let mut witness = None;
    for_each_combination(h.m(), p + 1, |c| {
        let fam: Vec<VertexSet> = c.iter().map(|&i| h.edge(i).clone()).collect();
        if !is_pq_intersecting(&fam, p, q).unwrap_or(false) {
            return true;
        }
        let full = core(&fam).unwrap();
        let matched = (0..=p).any(|skip| {
            let c = core(fam.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, e)| e)).unwrap();
            c == full
        });
        if !matched {
            witness = Some(Witness::Subfamily { edges: fam, indices: Some(c.to_vec()) });
        }
        matched
    });
    Ok(match witness {
        None => Verdict::holds(Method::EdgeSubfamilies, stats(h)),
        Some(w) => Verdict::fails(Method::EdgeSubfamilies, w, stats(h)),
    })
}

/// Definitional strong `(p,q)`-Helly check over every nonempty partial
/// hypergraph. Refuses hypergraphs with more than `cap` edges.
pub fn is_strong_pq_helly(h: &Hypergraph, p: usize, q: usize, cap: usize) -> Result<Verdict> {
    check_pq(p, q)?;
    let m = h.m();
    if m > cap {
        return Err(Error::BudgetExceeded(format!("{m} edges exceed the cap of {cap}")));
    }
    for mask in 1u64..(1u64 << m) {
        let idx: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 1).collect();
        if idx.len() <= p {
            continue;
        }
        let fam: Vec<VertexSet> = idx.iter().map(|&i| h.edge(i).clone()).collect();
        if !is_pq_intersecting(&fam, p, q)? {
            continue;
        }
        let full = core(&fam)?;
        let matched = !for_each_combination(fam.len(), p, |c| core(c.iter().map(|&i| &fam[i])).unwrap() != full);
        if !matched {
            let w = Witness::Subfamily { edges: fam, indices: Some(idx) };
            return Ok(Verdict::fails(Method::Strong, w, stats(h)));
        }
    }
    Ok(Verdict::holds(Method::Strong, stats(h)))
}

/// An occurrence of `J_{p+1,q,s}` as a partial subhypergraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JOccurrence {
    pub s: usize,
    pub edges: Vec<usize>,
    pub parts: Vec<VertexSet>,
    pub z: VertexSet,
}

impl From<JOccurrence> for Witness {
    fn from(j: JOccurrence) -> Self {
        Witness::JEmbedding { s: j.s, edges: j.edges, parts: j.parts, z: j.z }
    }
}

/// Looks for `p+1` edges and disjoint parts realizing some `J_{p+1,q,s}`.
/// At most `budget` edge subfamilies are examined.
pub fn contains_j_partial_sub(h: &Hypergraph, p: usize, q: usize, budget: u64) -> Result<SearchOutcome<JOccurrence>> {
    check_pq(p, q)?;
    let mut found = None;
    let mut seen = 0u64;
    let complete = for_each_combination(h.m(), p + 1, |c| {
        seen += 1;
        if seen > budget {
            return false;
        }
        let fam: Vec<&VertexSet> = c.iter().map(|&i| h.edge(i)).collect();
        let all = core(fam.iter().copied()).unwrap();
        let exclusive: Vec<VertexSet> = (0..=p)
            .map(|i| {
                let others = core(fam.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &e)| e)).unwrap();
                others.difference(fam[i])
            })
            .collect();
        let a = exclusive.iter().map(VertexSet::len).min().unwrap();
        if a == 0 {
            return true;
        }
        let s = q.saturating_sub(a);
        if s > all.len().min(q - 1) {
            return true;
        }
        let parts = exclusive.iter().map(|x| x.iter().take(q - s).collect()).collect();
        let z = all.iter().take(s).collect();
        found = Some(JOccurrence { s, edges: c.to_vec(), parts, z });
        false
    });
    Ok(match found {
        Some(j) => SearchOutcome::Found(j),
        None if complete => SearchOutcome::NotFound,
        None => SearchOutcome::Indeterminate,
    })
}

/// Whether the incidence matrix has a `k×k` submatrix with exactly one zero
/// in every row and every column. Returns the rows and columns used.
pub fn complement_permutation_submatrix(h: &Hypergraph, k: usize) -> Option<(Vec<usize>, Vec<u32>)> {
    let verts = h.vertices().to_vec();
    let mut hit = None;
    for_each_combination(h.m(), k, |rows| {
        for_each_combination(verts.len(), k, |cols| {
            let zeros_ok = |count: &dyn Fn(usize) -> usize| (0..k).all(|i| count(i) == 1);
            let row_zeros = |r: usize| cols.iter().filter(|&&c| !h.edge(rows[r]).contains(verts[c])).count();
            let col_zeros = |c: usize| rows.iter().filter(|&&r| !h.edge(r).contains(verts[cols[c]])).count();
            if zeros_ok(&row_zeros) && zeros_ok(&col_zeros) {
                hit = Some((rows.to_vec(), cols.iter().map(|&c| verts[c]).collect()));
                return false;
            }
            true
        });
        hit.is_none()
    });
    hit
}

/// Hereditary `(p,q)`-Helly decided through `Φ_q(H)` being hereditary `p`-Helly.
pub fn is_hereditary_via_phi(h: &Hypergraph, p: usize, q: usize) -> Result<bool> {
    let phi = phi_hypergraph(h, q);
    if phi.hypergraph.m() == 0 {
        return Ok(true);
    }
    Ok(is_hereditary_pq_helly(&phi.hypergraph, p, 1)?.holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercore::build_j;

    fn k32() -> Hypergraph {
        Hypergraph::from_lists(3, &[&[0, 1], &[1, 2], &[0, 2]]).unwrap()
    }

    fn star() -> Hypergraph {
        Hypergraph::from_lists(4, &[&[0, 1], &[0, 2], &[0, 3]]).unwrap()
    }

    #[test]
    fn plain_examples() {
        let v = is_pq_helly(&k32(), 2, 1).unwrap();
        assert!(!v.holds);
        assert!(matches!(v.witness, Some(Witness::Basis { .. })));
        let path = Hypergraph::from_lists(3, &[&[0, 1], &[1, 2]]).unwrap();
        let v = is_pq_helly(&path, 1, 2).unwrap();
        assert!(!v.holds);
        assert_eq!(v.witness, Some(Witness::Subfamily { edges: path.edges().to_vec(), indices: Some(vec![0, 1]) }));
        assert_eq!(is_pq_helly(&k32(), 3, 3).unwrap().method, Method::Trivial);
        assert!(is_pq_helly(&star(), 2, 1).unwrap().holds);
    }

    #[test]
    fn hereditary_examples() {
        for (p, q, s) in [(2, 1, 0), (2, 2, 0), (2, 2, 1), (3, 2, 1)] {
            let j = build_j(p, q, s).unwrap();
            assert!(!is_hereditary_pq_helly(&j.hypergraph, p, q).unwrap().holds, "{p} {q} {s}");
            assert!(!is_hereditary_by_edge_subfamilies(&j.hypergraph, p, q).unwrap().holds);
            assert!(!is_strong_pq_helly(&j.hypergraph, p, q, STRONG_EDGE_CAP).unwrap().holds);
        }
        let single = Hypergraph::from_lists(3, &[&[0, 1, 2]]).unwrap();
        for p in 1..=3 {
            for q in 1..=3 {
                assert!(is_hereditary_pq_helly(&single, p, q).unwrap().holds);
            }
        }
    }

    #[test]
    fn chain_check_collapses_repeats() {
        let h = Hypergraph::from_lists(3, &[&[0, 1], &[0, 1], &[0, 1, 2]]).unwrap();
        let v = is_hereditary_pq_helly(&h, 1, 1).unwrap();
        assert!(v.holds);
        assert_eq!(v.notes.len(), 1);
        let v = is_hereditary_pq_helly(&k32(), 1, 2).unwrap();
        assert!(!v.holds);
    }

    #[test]
    fn hereditary_implies_larger_q() {
        let h = Hypergraph::from_lists(5, &[&[0, 1, 2, 3], &[0, 1, 4], &[1, 2, 4]]).unwrap();
        for p in 1..=3 {
            for q in 1..=3 {
                if is_hereditary_pq_helly(&h, p, q).unwrap().holds {
                    for q2 in q..q + 3 {
                        assert!(is_pq_helly(&h, p, q2).unwrap().holds);
                    }
                }
            }
        }
    }

    #[test]
    fn edge_subfamily_examples() {
        let v = is_hereditary_by_edge_subfamilies(&k32(), 2, 1).unwrap();
        assert_eq!(v.witness, Some(Witness::Subfamily { edges: k32().edges().to_vec(), indices: Some(vec![0, 1, 2]) }));
        assert!(is_hereditary_by_edge_subfamilies(&k32(), 3, 1).unwrap().holds);
    }

    #[test]
    fn strong_cap() {
        let many = Hypergraph::partial(2, vec![VertexSet::singleton(0); 19]).unwrap();
        assert!(matches!(is_strong_pq_helly(&many, 1, 1, STRONG_EDGE_CAP), Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn j_search_examples() {
        let j = build_j(2, 2, 1).unwrap();
        let occ = contains_j_partial_sub(&j.hypergraph, 2, 2, u64::MAX).unwrap().found().unwrap();
        assert_eq!(occ.s, 1);
        assert_eq!(occ.parts, j.parts);
        assert_eq!(occ.z, j.z);
        assert_eq!(contains_j_partial_sub(&star(), 2, 1, u64::MAX).unwrap(), SearchOutcome::NotFound);
        let lifted = Hypergraph::from_lists(4, &[&[0, 1, 3], &[1, 2, 3], &[0, 2, 3]]).unwrap();
        let occ = contains_j_partial_sub(&lifted, 2, 2, u64::MAX).unwrap().found().unwrap();
        assert_eq!(occ.s, 1);
        let many = Hypergraph::from_lists(4, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3], &[0, 2]]).unwrap();
        assert_eq!(contains_j_partial_sub(&many, 2, 3, 1).unwrap(), SearchOutcome::Indeterminate);
    }

    #[test]
    fn permutation_submatrix_in_k32() {
        let (rows, cols) = complement_permutation_submatrix(&k32(), 3).unwrap();
        assert_eq!(rows, vec![0, 1, 2]);
        assert_eq!(cols, vec![0, 1, 2]);
        assert!(complement_permutation_submatrix(&star(), 3).is_none());
    }
}
