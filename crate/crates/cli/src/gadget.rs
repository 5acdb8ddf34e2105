use clap::{Subcommand, ValueEnum};

use hellykit::gadgets::random::{random_graph, random_hypergraph, rng};
use hellykit::gadgets::{
    build_biocular, build_j, build_ocular, clique_join_gadget, graph_universal_lift, random_sat34,
    sat_to_biclique_gadget_p, sat_to_biclique_gadget_q, universal_vertex_lift, Sat34Formula,
};
use hellykit::text::render_names;
use hellykit::verdict::BiocularClause;
use hellykit::VertexSet;

use crate::input::{load_graph, load_hypergraph, read_source};
use crate::Failure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ClauseArg {
    Beta1,
    Beta2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LiftKind {
    Hg,
    Graph,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RandomKind {
    Graph,
    Hg,
    Sat,
}

#[derive(Subcommand)]
pub enum GadgetCommand {
    /// The forbidden hypergraph on p+1 parts of size q-s plus s shared vertices.
    J {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long, default_value_t = 0)]
        s: usize,
    },
    /// A canonical ocular graph.
    Ocular {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long, default_value_t = 0)]
        s: usize,
        /// Graph induced on the w vertices (edgeless by default).
        #[arg(long)]
        w_graph: Option<String>,
    },
    /// A canonical biocular graph.
    Biocular {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long, default_value_t = 0)]
        s: usize,
        #[arg(long, value_enum, default_value_t = ClauseArg::Beta2)]
        clause: ClauseArg,
        #[arg(long)]
        w_graph: Option<String>,
    },
    /// Reduction from 3SAT-(3,4) with p = m - 1 and the given q.
    SatP {
        /// Formula file in the cnf format.
        formula: String,
        #[arg(long, default_value_t = 1)]
        q: usize,
        /// Accept formulas with fewer clauses than the reduction needs.
        #[arg(long)]
        allow_small: bool,
    },
    /// Reduction from 3SAT-(3,4) with the given p and q = m(p+1) + 1.
    SatQ {
        formula: String,
        #[arg(long, default_value_t = 1)]
        p: usize,
        #[arg(long)]
        allow_small: bool,
    },
    /// Add q-1 universal vertices (graphs) or q-1 new vertices to every edge (hypergraphs).
    Lift {
        input: String,
        #[arg(long, value_enum)]
        kind: LiftKind,
        #[arg(long)]
        q: usize,
    },
    /// The join gadget deciding whether a graph has a k-clique.
    Join {
        input: String,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 2)]
        p: usize,
    },
    /// A seeded random instance.
    Random {
        #[arg(long, value_enum)]
        kind: RandomKind,
        /// Vertices, or variables for formulas.
        #[arg(long)]
        n: usize,
        /// Edges for hypergraphs, clauses for formulas.
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long, default_value_t = 3)]
        rank: usize,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parts_comment(parts: &[VertexSet], z: &VertexSet, w: &[u32]) -> String {
    let mut s = String::new();
    for (i, t) in parts.iter().enumerate() {
        s.push_str(&format!("# T{} = {t}\n", i + 1));
    }
    s.push_str(&format!("# Z = {z}\n"));
    if !w.is_empty() {
        s.push_str(&format!("# W = {:?}\n", w));
    }
    s
}

pub fn run(cmd: GadgetCommand) -> Result<u8, Failure> {
    let text = match cmd {
        GadgetCommand::J { p, q, s } => {
            let j = build_j(p, q, s)?;
            format!("# J p+1 = {}, q = {q}, s = {s}\n{}{}", p + 1, parts_comment(&j.parts, &j.z, &[]), j.hypergraph.to_text())
        }
        GadgetCommand::Ocular { p, q, s, w_graph } => {
            let w = w_graph.map(|f| load_graph(&f)).transpose()?;
            let o = build_ocular(p, q, s, w.as_ref().map(|l| &l.value))?;
            format!("# ocular p+1 = {}, q = {q}, s = {s}\n{}{}", p + 1, parts_comment(&o.parts, &o.z, &o.w), o.graph.to_text())
        }
        GadgetCommand::Biocular { p, q, s, clause, w_graph } => {
            let w = w_graph.map(|f| load_graph(&f)).transpose()?;
            let clause = match clause {
                ClauseArg::Beta1 => BiocularClause::Beta1,
                ClauseArg::Beta2 => BiocularClause::Beta2,
            };
            let b = build_biocular(p, q, s, clause, w.as_ref().map(|l| &l.value))?;
            format!(
                "# biocular p+1 = {}, q = {q}, s = {s}, clause {clause:?}\n{}{}",
                p + 1,
                parts_comment(&b.parts, &b.z, &b.w),
                b.graph.to_text()
            )
        }
        GadgetCommand::SatP { formula, q, allow_small } => {
            let f = Sat34Formula::parse(&read_source(&formula)?)?;
            let g = sat_to_biclique_gadget_p(&f, q, allow_small)?;
            format!("# p = {}, q = {}\n{}{}", g.p, g.q, render_names(&g.names), g.graph.to_text())
        }
        GadgetCommand::SatQ { formula, p, allow_small } => {
            let f = Sat34Formula::parse(&read_source(&formula)?)?;
            let g = sat_to_biclique_gadget_q(&f, p, allow_small)?;
            format!("# p = {}, q = {}\n{}{}", g.p, g.q, render_names(&g.names), g.graph.to_text())
        }
        GadgetCommand::Lift { input, kind, q } => match kind {
            LiftKind::Hg => universal_vertex_lift(&load_hypergraph(&input, true)?.value, q)?.to_text(),
            LiftKind::Graph => graph_universal_lift(&load_graph(&input)?.value, q)?.to_text(),
        },
        GadgetCommand::Join { input, k, p } => {
            let (g, q) = clique_join_gadget(&load_graph(&input)?.value, k, p)?;
            format!("# p = {p}, q = {q}\n{}", g.to_text())
        }
        GadgetCommand::Random { kind, n, m, rank, density, seed } => {
            let mut r = rng(seed);
            match kind {
                RandomKind::Graph => {
                    if !(0.0..=1.0).contains(&density) {
                        return Err(Failure::usage("density must lie in [0, 1]"));
                    }
                    random_graph(n, density, &mut r).to_text()
                }
                RandomKind::Hg => random_hypergraph(n, m, rank, &mut r)?.to_text(),
                RandomKind::Sat => random_sat34(n, m, &mut r)?.to_text(),
            }
        }
    };
    print!("{text}");
    Ok(0)
}
