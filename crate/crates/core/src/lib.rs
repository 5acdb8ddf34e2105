//! Recognition of `(p,q)`-Helly hypergraphs and of `(p,q)`-clique-Helly and
//! `(p,q)`-biclique-Helly graphs, with their hereditary variants.

pub mod basis_engine;
pub mod biclique_helly;
pub mod clique_helly;
pub mod combin;
pub mod error;
pub mod gadgets;
pub mod graphcore;
pub mod helly_hg;
pub mod hypercore;
pub mod oracle;
pub mod property;
pub mod suite;
pub mod text;
pub mod verdict;
mod vset;

pub use error::{Error, Result};
pub use graphcore::Graph;
pub use hypercore::{Basis, Hypergraph};
pub use vset::VertexSet;
pub use verdict::{Method, SearchOutcome, Verdict, Witness};
