//! Generators for forbidden structures, hardness reductions, random
//! instances and test corpora.

pub mod corpus;
pub mod lifts;
pub mod named;
pub mod random;
pub mod sat;

pub use crate::biclique_helly::build_biocular;
pub use crate::clique_helly::build_ocular;
pub use crate::hypercore::build_j;
pub use lifts::{clique_join_gadget, graph_universal_lift, universal_vertex_lift};
pub use sat::{random_sat34, sat_to_biclique_gadget_p, sat_to_biclique_gadget_q, solve_sat, Sat34Formula, SatGadget};
