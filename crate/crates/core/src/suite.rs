//! Runs every available characterization of a property on one instance and
//! reports whether they agree.

use serde::Serialize;

use crate::basis_engine::EngineConfig;
use crate::error::{Error, Result};
use crate::graphcore::{biclique_hypergraph, clique_hypergraph, phi_graph, BICLIQUE_VERTEX_CAP};
use crate::helly_hg::{self, STRONG_EDGE_CAP};
use crate::hypercore::phi_hypergraph;
use crate::oracle::{self, Budget};
use crate::property::{recognize, Instance, Property, Structure};
use crate::{biclique_helly, clique_helly, Graph, Hypergraph, SearchOutcome};

/// One characterization's answer. `holds` is `None` when the check ran out
/// of budget or does not apply.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub holds: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub property: &'static str,
    pub p: usize,
    pub q: usize,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    /// Whether all decided checks give the same answer.
    pub fn consistent(&self) -> bool {
        let mut decided = self.checks.iter().filter_map(|c| c.holds);
        match decided.next() {
            Some(first) => decided.all(|h| h == first),
            None => true,
        }
    }

    /// The common answer, if at least one check decided and all agree.
    pub fn verdict(&self) -> Option<bool> {
        let first = self.checks.iter().find_map(|c| c.holds)?;
        self.consistent().then_some(first)
    }

    pub fn disagreements(&self) -> Vec<&Check> {
        match self.verdict() {
            Some(_) => Vec::new(),
            None => self.checks.iter().filter(|c| c.holds.is_some()).collect(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub engine: EngineConfig,
    /// Limits for the brute-force oracle; `None` skips it.
    pub oracle: Option<Budget>,
    /// Candidate limit for the forbidden-structure searches.
    pub search_budget: u64,
    /// Largest edge count for the definitional strong check.
    pub strong_cap: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            engine: EngineConfig::default(),
            oracle: Some(Budget::default()),
            search_budget: 5_000_000,
            strong_cap: STRONG_EDGE_CAP,
        }
    }
}

struct Collector {
    checks: Vec<Check>,
}

impl Collector {
    fn push(&mut self, name: &'static str, outcome: Result<bool>) -> Result<()> {
        let (holds, note) = match outcome {
            Ok(h) => (Some(h), None),
            Err(Error::BudgetExceeded(msg)) => (None, Some(msg)),
            Err(e) => return Err(e),
        };
        self.checks.push(Check { name, holds, note });
        Ok(())
    }

    fn skip(&mut self, name: &'static str, why: &str) {
        self.checks.push(Check { name, holds: None, note: Some(why.to_string()) });
    }

    fn search<T>(&mut self, name: &'static str, outcome: Result<SearchOutcome<T>>) -> Result<()> {
        match outcome? {
            SearchOutcome::Found(_) => self.push(name, Ok(false)),
            SearchOutcome::NotFound => self.push(name, Ok(true)),
            SearchOutcome::Indeterminate => {
                self.skip(name, "search budget exhausted");
                Ok(())
            }
        }
    }
}

/// Runs every characterization of `property` that applies to `instance`.
pub fn run_suite(instance: Instance<'_>, property: Property, p: usize, q: usize, options: &SuiteOptions) -> Result<SuiteReport> {
    if p == 0 || q == 0 {
        return Err(Error::invalid("p and q must be positive"));
    }
    let mut c = Collector { checks: Vec::new() };
    c.push("recognizer", recognize(instance, property, p, q, &options.engine).map(|v| v.holds))?;
    match (instance, property.structure) {
        (Instance::Hypergraph(h), Structure::Hypergraph) => hypergraph_checks(&mut c, h, property.hereditary, p, q, options)?,
        (Instance::Graph(g), Structure::Clique) => clique_checks(&mut c, g, property.hereditary, p, q, options)?,
        (Instance::Graph(g), Structure::Biclique) => biclique_checks(&mut c, g, property.hereditary, p, q, options)?,
        _ => unreachable!("recognize rejects mismatched instances"),
    }
    if let Some(budget) = &options.oracle {
        let brute = match instance {
            Instance::Hypergraph(h) if property.hereditary => oracle::brute_is_hereditary_pq_helly(h, p, q, budget),
            Instance::Hypergraph(h) => oracle::brute_is_pq_helly(h, p, q, budget),
            Instance::Graph(g) => oracle::brute_graph_property(g, p, q, property.structure, property.hereditary, budget),
        };
        c.push("brute_force", brute)?;
    }
    Ok(SuiteReport { property: property.name(), p, q, checks: c.checks })
}

fn plain_phi(h: &Hypergraph, p: usize, q: usize) -> Result<bool> {
    let phi = phi_hypergraph(h, q);
    if phi.hypergraph.m() == 0 {
        return Ok(true);
    }
    Ok(helly_hg::is_pq_helly(&phi.hypergraph, p, 1)?.holds)
}

/// Checks every statement shared by the hereditary characterizations of a
/// hypergraph `h`, which is the clique or biclique hypergraph for graphs.
fn hereditary_family_checks(c: &mut Collector, h: &Hypergraph, p: usize, q: usize, options: &SuiteOptions) -> Result<()> {
    let upper = h.rank().max(q);
    c.push("all_larger_q", (q..=upper).try_fold(true, |ok, q2| Ok(ok && helly_hg::is_pq_helly(h, p, q2)?.holds)))?;
    c.push("strong", helly_hg::is_strong_pq_helly(h, p, q, options.strong_cap).map(|v| v.holds))?;
    c.push("edge_subfamilies", helly_hg::is_hereditary_by_edge_subfamilies(h, p, q).map(|v| v.holds))?;
    c.push("phi_hereditary", helly_hg::is_hereditary_via_phi(h, p, q))?;
    c.search("no_j_occurrence", helly_hg::contains_j_partial_sub(h, p, q, options.search_budget))
}

fn hypergraph_checks(c: &mut Collector, h: &Hypergraph, hereditary: bool, p: usize, q: usize, o: &SuiteOptions) -> Result<()> {
    if hereditary {
        hereditary_family_checks(c, h, p, q, o)
    } else {
        c.push("phi_plain", plain_phi(h, p, q))
    }
}

fn clique_checks(c: &mut Collector, g: &Graph, hereditary: bool, p: usize, q: usize, o: &SuiteOptions) -> Result<()> {
    let ch = clique_hypergraph(g)?;
    if hereditary {
        hereditary_family_checks(c, &ch, p, q, o)?;
        c.push("hereditary_hypergraph", helly_hg::is_hereditary_pq_helly_with(&ch, p, q, &o.engine).map(|v| v.holds))?;
        let (phi, _) = phi_graph(g, q);
        c.push("phi_graph_hereditary", clique_helly::is_hereditary_pq_clique_helly_with(&phi, p, 1, &o.engine).map(|v| v.holds))?;
        c.search("no_ocular", clique_helly::find_induced_ocular(g, p, q, o.search_budget))
    } else {
        c.push("clique_hypergraph", helly_hg::is_pq_helly_with(&ch, p, q, &o.engine).map(|v| v.holds))?;
        c.push("phi_plain", plain_phi(&ch, p, q))?;
        let (phi, _) = phi_graph(g, q);
        c.push("phi_graph", clique_helly::is_pq_clique_helly_with(&phi, p, 1, &o.engine).map(|v| v.holds))?;
        c.push("expansions", clique_helly::holds_by_expansions(g, p, q))
    }
}

fn biclique_checks(c: &mut Collector, g: &Graph, hereditary: bool, p: usize, q: usize, o: &SuiteOptions) -> Result<()> {
    if g.n() > BICLIQUE_VERTEX_CAP {
        c.skip("biclique_hypergraph", "too many vertices to list maximal bicliques");
    } else {
        let bh = biclique_hypergraph(g, BICLIQUE_VERTEX_CAP)?;
        if hereditary {
            hereditary_family_checks(c, &bh, p, q, o)?;
            c.push("hereditary_hypergraph", helly_hg::is_hereditary_pq_helly_with(&bh, p, q, &o.engine).map(|v| v.holds))?;
        } else {
            c.push("biclique_hypergraph", helly_hg::is_pq_helly_with(&bh, p, q, &o.engine).map(|v| v.holds))?;
            c.push("phi_plain", plain_phi(&bh, p, q))?;
        }
    }
    if hereditary {
        c.search("no_biocular", biclique_helly::find_induced_biocular(g, p, q, o.search_budget))
    } else if p >= 2 {
        c.push("biexpansions", biclique_helly::holds_by_biexpansions(g, p, q))
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::named::{named_graph, named_hypergraph};

    fn opts() -> SuiteOptions {
        SuiteOptions { oracle: Some(Budget::with_limits(10, 14)), ..SuiteOptions::default() }
    }

    #[test]
    fn hypergraph_suite_agrees() {
        let k32 = named_hypergraph("k3_2").unwrap();
        for hereditary in [false, true] {
            let r = run_suite(Instance::Hypergraph(&k32), Property::new(Structure::Hypergraph, hereditary), 2, 1, &opts()).unwrap();
            assert_eq!(r.verdict(), Some(false), "{r:?}");
        }
        let star = named_hypergraph("star3").unwrap();
        let r = run_suite(Instance::Hypergraph(&star), Property::new(Structure::Hypergraph, true), 2, 1, &opts()).unwrap();
        assert_eq!(r.verdict(), Some(true));
        assert_eq!(r.checks.len(), 7);
    }

    #[test]
    fn graph_suites_agree() {
        let hajos = named_graph("hajos").unwrap();
        let c5 = named_graph("c5").unwrap();
        for prop in Property::ALL.into_iter().filter(|p| p.structure != Structure::Hypergraph) {
            for g in [&hajos, &c5] {
                for (p, q) in [(1, 1), (2, 1), (2, 2)] {
                    let r = run_suite(Instance::Graph(g), prop, p, q, &opts()).unwrap();
                    assert!(r.consistent(), "{r:?}");
                    assert!(r.checks.iter().all(|c| c.holds.is_some()), "{r:?}");
                }
            }
        }
        let r = run_suite(Instance::Graph(&hajos), Property::new(Structure::Clique, true), 2, 1, &opts()).unwrap();
        assert_eq!(r.verdict(), Some(false));
    }

    #[test]
    fn disagreement_is_reported() {
        let r = SuiteReport {
            property: "pq_helly",
            p: 1,
            q: 1,
            checks: vec![
                Check { name: "a", holds: Some(true), note: None },
                Check { name: "b", holds: None, note: None },
                Check { name: "c", holds: Some(false), note: None },
            ],
        };
        assert!(!r.consistent());
        assert_eq!(r.verdict(), None);
        assert_eq!(r.disagreements().len(), 2);
    }
}
