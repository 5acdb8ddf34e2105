//! The six recognized properties and a single entry point dispatching to them.

use serde::Serialize;

use crate::basis_engine::{self, EngineConfig, Mode};
use crate::biclique_helly::BicliqueCores;
use crate::clique_helly::CliqueCores;
use crate::error::Result;
use crate::graphcore::{enumerate_q_bicliques, enumerate_q_cliques};
use crate::hypercore::phi_hypergraph;
use crate::verdict::{Method, Stats};
use crate::{biclique_helly, clique_helly, helly_hg, Graph, Hypergraph, Verdict};

/// Which family of sets the Helly condition is imposed on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Structure {
    /// The edges of a hypergraph.
    Hypergraph,
    /// The maximal cliques of a graph.
    Clique,
    /// The maximal bicliques of a graph.
    Biclique,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Property {
    pub structure: Structure,
    pub hereditary: bool,
}

impl Property {
    pub const ALL: [Property; 6] = [
        Property::new(Structure::Hypergraph, false),
        Property::new(Structure::Hypergraph, true),
        Property::new(Structure::Clique, false),
        Property::new(Structure::Clique, true),
        Property::new(Structure::Biclique, false),
        Property::new(Structure::Biclique, true),
    ];

    pub const fn new(structure: Structure, hereditary: bool) -> Self {
        Property { structure, hereditary }
    }

    pub fn name(&self) -> &'static str {
        match (self.structure, self.hereditary) {
            (Structure::Hypergraph, false) => "pq_helly",
            (Structure::Hypergraph, true) => "hereditary_pq_helly",
            (Structure::Clique, false) => "pq_clique_helly",
            (Structure::Clique, true) => "hereditary_pq_clique_helly",
            (Structure::Biclique, false) => "pq_biclique_helly",
            (Structure::Biclique, true) => "hereditary_pq_biclique_helly",
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub enum Instance<'a> {
    Hypergraph(&'a Hypergraph),
    Graph(&'a Graph),
}

impl Instance<'_> {
    pub fn n(&self) -> usize {
        match self {
            Instance::Hypergraph(h) => h.n(),
            Instance::Graph(g) => g.n(),
        }
    }
}

/// Runs the polynomial recognizer for `property`. Hypergraph properties
/// need a hypergraph instance and graph properties a graph instance.
pub fn recognize(instance: Instance<'_>, property: Property, p: usize, q: usize, config: &EngineConfig) -> Result<Verdict> {
    use Structure::*;
    match (instance, property.structure, property.hereditary) {
        (Instance::Hypergraph(h), Hypergraph, false) => helly_hg::is_pq_helly_with(h, p, q, config),
        (Instance::Hypergraph(h), Hypergraph, true) => helly_hg::is_hereditary_pq_helly_with(h, p, q, config),
        (Instance::Graph(g), Clique, false) => clique_helly::is_pq_clique_helly_with(g, p, q, config),
        (Instance::Graph(g), Clique, true) => clique_helly::is_hereditary_pq_clique_helly_with(g, p, q, config),
        (Instance::Graph(g), Biclique, false) => biclique_helly::is_pq_biclique_helly_with(g, p, q, config),
        (Instance::Graph(g), Biclique, true) => biclique_helly::is_hereditary_pq_biclique_helly_with(g, p, q, config),
        _ => Err(crate::Error::invalid(format!("{} does not apply to this kind of instance", property.name()))),
    }
}

/// Decides `property` with the basis engine alone, for every `p`, skipping
/// the special-purpose paths that [`recognize`] prefers.
pub fn recognize_by_engine(instance: Instance<'_>, property: Property, p: usize, q: usize, config: &EngineConfig) -> Result<Verdict> {
    use Structure::*;
    if p == 0 || q == 0 {
        return Err(crate::Error::invalid("p and q must be positive"));
    }
    let mode = if property.hereditary { Mode::Hereditary } else { Mode::Plain };
    let (out, n, m) = match (instance, property.structure) {
        (Instance::Hypergraph(h), Hypergraph) => {
            let qsets = phi_hypergraph(h, q).qsets;
            (basis_engine::run(qsets, p, q, h, config, mode)?, h.n(), h.m())
        }
        (Instance::Graph(g), Clique) => {
            (basis_engine::run(enumerate_q_cliques(g, q), p, q, &CliqueCores(g), config, mode)?, g.n(), g.m())
        }
        (Instance::Graph(g), Biclique) => {
            (basis_engine::run(enumerate_q_bicliques(g, q), p, q, &BicliqueCores(g), config, mode)?, g.n(), g.m())
        }
        _ => return Err(crate::Error::invalid(format!("{} does not apply to this kind of instance", property.name()))),
    };
    let stats = Stats { n, m, qsets: Some(out.stats.qsets), engine: Some(out.stats) };
    Ok(match out.violation {
        None => Verdict::holds(Method::Engine, stats),
        Some(v) => Verdict::fails(Method::Engine, v.into(), stats),
    })
}
