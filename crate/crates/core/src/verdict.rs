//! Results of the recognizers and the evidence attached to negative answers.

use serde::{Deserialize, Serialize};

use crate::basis_engine::{BasisViolation, EngineStats};
use crate::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// The answer follows from the parameters alone.
    Trivial,
    /// Core of the family of `q⁺`-edges (or of the cores of all q-sets).
    CoreIntersection,
    /// The `q⁺`-edges must form an inclusion chain.
    Chain,
    Engine,
    EdgeSubfamilies,
    Strong,
    JSearch,
    UniversalVertex,
    /// The union of all q-cliques (or q-bicliques) must itself be one.
    UnionCheck,
    CompleteBipartite,
    CliqueTrie,
    Brute,
}

/// Which clause of the biocular definition a biocular embedding follows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BiocularClause {
    Beta1,
    Beta2,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A nontrivial basis; `support_cores[i]` is the core of the family of
    /// edges containing the support set that omits `members[i]`.
    Basis { members: Vec<VertexSet>, support_cores: Vec<VertexSet> },
    /// A family of edges given explicitly (and by index for hypergraphs).
    Subfamily {
        edges: Vec<VertexSet>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        indices: Option<Vec<usize>>,
    },
    /// q-sets, each inside some edge, whose edge-family cores meet in fewer
    /// than `q` vertices.
    CoreFamily { sets: Vec<VertexSet>, cores: Vec<VertexSet> },
    /// Edges `E_i` and disjoint parts `T_i` with `E_i ∩ U = U - T_i`, where
    /// `U` is the union of the parts and `z`.
    JEmbedding { s: usize, edges: Vec<usize>, parts: Vec<VertexSet>, z: VertexSet },
    /// Vertex sets realizing an ocular as an induced subgraph.
    Ocular { s: usize, parts: Vec<VertexSet>, z: VertexSet, w: Vec<u32> },
    /// Vertex sets realizing a biocular as an induced subgraph.
    Biocular { s: usize, clause: BiocularClause, parts: Vec<VertexSet>, z: VertexSet, w: Vec<u32> },
}

impl From<BasisViolation> for Witness {
    fn from(v: BasisViolation) -> Self {
        Witness::Basis { members: v.members, support_cores: v.support_cores }
    }
}

impl Witness {
    pub fn kind(&self) -> &'static str {
        match self {
            Witness::Basis { .. } => "basis",
            Witness::Subfamily { .. } => "subfamily",
            Witness::CoreFamily { .. } => "core_family",
            Witness::JEmbedding { .. } => "j_embedding",
            Witness::Ocular { .. } => "ocular",
            Witness::Biocular { .. } => "biocular",
        }
    }

    /// Applies `f` to every vertex mentioned by the witness.
    pub fn map_vertices(&self, f: impl Fn(u32) -> u32) -> Witness {
        let sets = |v: &[VertexSet]| v.iter().map(|s| s.map(&f)).collect::<Vec<_>>();
        match self {
            Witness::Basis { members, support_cores } => {
                Witness::Basis { members: sets(members), support_cores: sets(support_cores) }
            }
            Witness::Subfamily { edges, indices } => Witness::Subfamily { edges: sets(edges), indices: indices.clone() },
            Witness::CoreFamily { sets: s, cores } => Witness::CoreFamily { sets: sets(s), cores: sets(cores) },
            Witness::JEmbedding { s, edges, parts, z } => {
                Witness::JEmbedding { s: *s, edges: edges.clone(), parts: sets(parts), z: z.map(&f) }
            }
            Witness::Ocular { s, parts, z, w } => {
                Witness::Ocular { s: *s, parts: sets(parts), z: z.map(&f), w: w.iter().map(|&v| f(v)).collect() }
            }
            Witness::Biocular { s, clause, parts, z, w } => Witness::Biocular {
                s: *s,
                clause: *clause,
                parts: sets(parts),
                z: z.map(&f),
                w: w.iter().map(|&v| f(v)).collect(),
            },
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Stats {
    pub n: usize,
    pub m: usize,
    /// Number of q-sets handed to the basis engine, when it ran.
    #[serde(rename = "N", skip_serializing_if = "Option::is_none")]
    pub qsets: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub engine: Option<EngineStats>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub method: Method,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub stats: Stats,
}

impl Verdict {
    pub fn holds(method: Method, stats: Stats) -> Self {
        Verdict { holds: true, method, witness: None, notes: Vec::new(), stats }
    }

    pub fn fails(method: Method, witness: Witness, stats: Stats) -> Self {
        Verdict { holds: false, method, witness: Some(witness), notes: Vec::new(), stats }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }
}

/// Result of a search that may run out of budget.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", content = "value", rename_all = "snake_case")]
pub enum SearchOutcome<T> {
    Found(T),
    NotFound,
    Indeterminate,
}

impl<T> SearchOutcome<T> {
    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }

    pub fn found(self) -> Option<T> {
        match self {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }
}
