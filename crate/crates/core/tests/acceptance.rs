//! Acceptance criteria 1 to 10. Prints one PASS/FAIL line per criterion and
//! exits with a failure status if any criterion fails. Passing numbers on
//! the command line runs only those criteria.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hellykit::biclique_helly::{
    biocular_clause_applies, build_biocular, core_bp, holds_by_biexpansions, is_hereditary_pq_biclique_helly,
    is_pq_biclique_helly,
};
use hellykit::clique_helly::{build_ocular, holds_by_expansions, is_hereditary_pq_clique_helly, is_pq_clique_helly};
use hellykit::combin::for_each_combination;
use hellykit::gadgets::corpus::{all_graphs, default_graph_corpus, default_hypergraph_corpus, graphs_up_to, random_graphs};
use hellykit::gadgets::random::{random_graph, random_hypergraph, rng};
use hellykit::gadgets::{
    clique_join_gadget, graph_universal_lift, random_sat34, sat_to_biclique_gadget_p, sat_to_biclique_gadget_q,
    solve_sat, universal_vertex_lift,
};
use hellykit::graphcore::{maximal_cliques, phi_graph, MAX_CLIQUE_BUDGET};
use hellykit::helly_hg::{is_hereditary_pq_helly, is_pq_helly};
use hellykit::hypercore::{build_j, phi_hypergraph, phi_sets};
use hellykit::oracle::{
    brute_graph_property, brute_is_hereditary_pq_helly, brute_is_pq_helly, brute_maximal_sets, definitional_graph_core, validate_witness, Budget,
};
use hellykit::property::{Instance, Property, Structure};
use hellykit::suite::{run_suite, SuiteOptions};
use hellykit::verdict::BiocularClause;
use hellykit::{Graph, Hypergraph, Verdict, VertexSet};

type Outcome = Result<String, String>;

const PQ: [(usize, usize); 9] = [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3)];

fn hg_prop(hereditary: bool) -> Property {
    Property::new(Structure::Hypergraph, hereditary)
}

/// Collects up to a few failure descriptions and counts the rest.
#[derive(Default)]
struct Failures {
    shown: Vec<String>,
    total: usize,
}

impl Failures {
    fn add(&mut self, msg: String) {
        self.total += 1;
        if self.shown.len() < 5 {
            self.shown.push(msg);
        }
    }

    fn finish(self, summary: String) -> Outcome {
        if self.total == 0 {
            Ok(summary)
        } else {
            Err(format!("{} failures; first: {}", self.total, self.shown.join(" | ")))
        }
    }
}

/// A failing verdict's witness must validate.
fn witness_ok(instance: Instance<'_>, property: Property, p: usize, q: usize, v: &Verdict) -> bool {
    match &v.witness {
        Some(w) => validate_witness(instance, property, p, q, w).unwrap_or(false),
        None => v.holds,
    }
}

fn criterion_1() -> Outcome {
    let corpus = default_hypergraph_corpus();
    let budget = Budget::with_limits(16, 16);
    let mut f = Failures::default();
    let mut holding = [0usize; 2];
    for (i, h) in corpus.iter().enumerate() {
        for (p, q) in PQ {
            let fast = is_pq_helly(h, p, q).map_err(|e| e.to_string())?;
            holding[0] += fast.holds as usize;
            let slow = brute_is_pq_helly(h, p, q, &budget).map_err(|e| e.to_string())?;
            if fast.holds != slow || !witness_ok(Instance::Hypergraph(h), hg_prop(false), p, q, &fast) {
                f.add(format!("plain #{i} ({p},{q})"));
            }
            let fast = is_hereditary_pq_helly(h, p, q).map_err(|e| e.to_string())?;
            let slow = brute_is_hereditary_pq_helly(h, p, q, &budget).map_err(|e| e.to_string())?;
            holding[1] += fast.holds as usize;
            if fast.holds != slow || !witness_ok(Instance::Hypergraph(h), hg_prop(true), p, q, &fast) {
                f.add(format!("hereditary #{i} ({p},{q})"));
            }
        }
    }
    f.finish(format!(
        "{} hypergraphs x 9 parameter pairs x 2 properties ({} plain and {} hereditary positives)",
        corpus.len(),
        holding[0],
        holding[1]
    ))
}

fn criterion_2() -> Outcome {
    let corpus = default_hypergraph_corpus();
    let options = SuiteOptions { oracle: None, ..SuiteOptions::default() };
    let mut f = Failures::default();
    let mut decided = 0usize;
    for (i, h) in corpus.iter().enumerate() {
        for (p, q) in PQ {
            let r = run_suite(Instance::Hypergraph(h), hg_prop(true), p, q, &options).map_err(|e| e.to_string())?;
            decided += r.checks.iter().filter(|c| c.holds.is_some()).count();
            let required = ["recognizer", "strong", "edge_subfamilies", "phi_hereditary", "no_j_occurrence"];
            let missing = required.iter().any(|name| r.checks.iter().all(|c| c.name != *name || c.holds.is_none()));
            if !r.consistent() || missing {
                f.add(format!("#{i} ({p},{q}): {:?}", r.checks));
            }
        }
    }
    f.finish(format!("{} instances, {decided} decided statements", corpus.len() * PQ.len()))
}

fn criterion_3() -> Outcome {
    let mut f = Failures::default();
    let hypergraphs = default_hypergraph_corpus();
    for (i, h) in hypergraphs.iter().enumerate() {
        for (p, q) in PQ {
            let phi = phi_hypergraph(h, q);
            let via_phi = phi.hypergraph.m() == 0 || is_pq_helly(&phi.hypergraph, p, 1).map_err(|e| e.to_string())?.holds;
            if is_pq_helly(h, p, q).map_err(|e| e.to_string())?.holds != via_phi {
                f.add(format!("hypergraph #{i} ({p},{q})"));
            }
        }
    }
    let graphs = default_graph_corpus();
    for (i, g) in graphs.iter().enumerate() {
        let cliques = maximal_cliques(g, MAX_CLIQUE_BUDGET).map_err(|e| e.to_string())?;
        for q in 1..=3 {
            let (phi, qcliques) = phi_graph(g, q);
            let of_phi: Vec<BTreeSet<VertexSet>> = maximal_cliques(&phi, MAX_CLIQUE_BUDGET)
                .map_err(|e| e.to_string())?
                .iter()
                .map(|c| c.iter().map(|v| qcliques[v as usize].clone()).collect())
                .collect();
            let expected: Vec<BTreeSet<VertexSet>> =
                cliques.iter().filter(|c| c.len() >= q).map(|c| phi_sets(c, q).into_iter().collect()).collect();
            let (mut a, mut b) = (of_phi, expected);
            a.sort();
            b.sort();
            if a != b {
                f.add(format!("clique preservation graph #{i} q={q}"));
            }
            for p in 1..=3 {
                let direct = is_pq_clique_helly(g, p, q).map_err(|e| e.to_string())?.holds;
                let lifted = is_pq_clique_helly(&phi, p, 1).map_err(|e| e.to_string())?.holds;
                if direct != lifted {
                    f.add(format!("phi clique law graph #{i} ({p},{q})"));
                }
            }
        }
    }
    f.finish(format!("{} hypergraphs, {} graphs, q <= 3", hypergraphs.len(), graphs.len()))
}

fn criterion_4() -> Outcome {
    let mut f = Failures::default();
    let mut built = 0;
    let complete_w = |p: usize| Graph::complete(p + 1);
    for p in 1..=3 {
        for q in 1..=3 {
            for s in 0..q {
                let j = build_j(p, q, s).map_err(|e| e.to_string())?.hypergraph;
                built += 1;
                for hereditary in [false, true] {
                    let v = if hereditary { is_hereditary_pq_helly(&j, p, q) } else { is_pq_helly(&j, p, q) };
                    let v = v.map_err(|e| e.to_string())?;
                    if v.holds || !witness_ok(Instance::Hypergraph(&j), hg_prop(hereditary), p, q, &v) {
                        f.add(format!("J({p},{q},{s}) hereditary={hereditary}"));
                    }
                }
                let w_graphs: Vec<Option<Graph>> = if p >= 2 { vec![None, Some(complete_w(p))] } else { vec![None] };
                for w in &w_graphs {
                    let oc = build_ocular(p, q, s, w.as_ref()).map_err(|e| e.to_string())?;
                    built += 1;
                    let prop = Property::new(Structure::Clique, true);
                    let her = is_hereditary_pq_clique_helly(&oc.graph, p, q).map_err(|e| e.to_string())?;
                    let plain = is_pq_clique_helly(&oc.graph, p, q).map_err(|e| e.to_string())?;
                    let own = validate_witness(Instance::Graph(&oc.graph), prop, p, q, &oc.witness()).unwrap_or(false);
                    if her.holds || plain.holds || !own || !witness_ok(Instance::Graph(&oc.graph), prop, p, q, &her) {
                        f.add(format!("ocular({p},{q},{s}) w={}", w.is_some()));
                    }
                }
                for clause in [BiocularClause::Beta1, BiocularClause::Beta2] {
                    if !biocular_clause_applies(p, q, s, clause) {
                        continue;
                    }
                    let w_graphs: Vec<Option<Graph>> =
                        if clause == BiocularClause::Beta2 { vec![None, Some(complete_w(p))] } else { vec![None] };
                    for w in &w_graphs {
                        let bc = build_biocular(p, q, s, clause, w.as_ref()).map_err(|e| e.to_string())?;
                        built += 1;
                        let prop = Property::new(Structure::Biclique, true);
                        let g = &bc.graph;
                        let her = is_hereditary_pq_biclique_helly(g, p, q).map_err(|e| e.to_string())?;
                        let plain = is_pq_biclique_helly(g, p, q).map_err(|e| e.to_string())?;
                        let own = validate_witness(Instance::Graph(g), prop, p, q, &bc.witness()).unwrap_or(false);
                        if her.holds || plain.holds || !own || !witness_ok(Instance::Graph(g), prop, p, q, &her) {
                            f.add(format!("biocular({p},{q},{s},{clause:?}) w={}", w.is_some()));
                        }
                    }
                }
            }
        }
    }
    f.finish(format!("{built} forbidden structures fail plain and hereditary recognition"))
}

fn criterion_5() -> Outcome {
    let mut f = Failures::default();
    let mut count = 0;
    for g in graphs_up_to(7) {
        for p in [2, 3] {
            for q in [1, 2] {
                count += 1;
                let rec = is_pq_clique_helly(g, p, q).map_err(|e| e.to_string())?.holds;
                if rec != holds_by_expansions(g, p, q).map_err(|e| e.to_string())? {
                    f.add(format!("expansions ({p},{q}) on {}", g.to_text().replace('\n', " ")));
                }
                let rec = is_pq_biclique_helly(g, p, q).map_err(|e| e.to_string())?.holds;
                if rec != holds_by_biexpansions(g, p, q).map_err(|e| e.to_string())? {
                    f.add(format!("biexpansions ({p},{q}) on {}", g.to_text().replace('\n', " ")));
                }
            }
        }
    }
    f.finish(format!("{count} graph and parameter combinations, both structures"))
}

fn criterion_6() -> Outcome {
    let mut f = Failures::default();
    let mut free = [0usize; 2];
    let mut failing = [0usize; 2];
    let mut confirmed = 0;
    for g in default_graph_corpus() {
        let omega = g.clique_number().map_err(|e| e.to_string())?;
        for p in 1..=4 {
            for q in 1..=5 - p {
                if omega < p + q {
                    let bucket = (p >= 2) as usize;
                    free[bucket] += 1;
                    if !is_hereditary_pq_clique_helly(&g, p, q).map_err(|e| e.to_string())?.holds {
                        failing[bucket] += 1;
                        let brute = brute_graph_property(&g, p, q, Structure::Clique, true, &Budget::with_limits(10, 40));
                        confirmed += (brute == Ok(false)) as usize;
                        f.add(format!("({p},{q}) on {}", g.to_text().trim_end().replace('\n', "; ")));
                    }
                }
            }
        }
    }
    let summary = format!(
        "K_(p+q)-free cases: p = 1 has {} of {} not hereditary, p >= 2 has {} of {}; brute force confirms {} of the {} failures",
        failing[0],
        free[0],
        failing[1],
        free[1],
        confirmed,
        failing[0] + failing[1]
    );
    f.finish(summary.clone()).map_err(|e| format!("{summary}; {e}"))
}

fn each_biclique(g: &Graph, max_size: usize, mut visit: impl FnMut(&VertexSet)) {
    for k in 1..=max_size.min(g.n()) {
        for_each_combination(g.n(), k, |c| {
            let s: VertexSet = c.iter().map(|&v| v as u32).collect();
            if g.is_biclique(&s) {
                visit(&s);
            }
            true
        });
    }
}

fn criterion_7() -> Outcome {
    let mut f = Failures::default();
    let budget = Budget::unlimited();
    let graphs = default_graph_corpus();
    let mut cores = 0;
    for g in graphs.iter().filter(|g| g.n() > 0) {
        let complete_bipartite = g.is_biclique(&g.vertices());
        for (p, q) in [(1, 1), (1, 2), (2, 1)] {
            if is_pq_biclique_helly(g, p, q).map_err(|e| e.to_string())?.holds != complete_bipartite {
                f.add(format!("complete bipartite ({p},{q}) on {}", g.to_text().replace('\n', " ")));
            }
        }
        let n = g.n() as u32;
        for a in 0..n {
            for b in a..n {
                for c in b..n {
                    for d in c..n {
                        let sets = [[a, b, c], [a, b, d], [a, c, d], [b, c, d]];
                        let bicliques = sets.iter().filter(|s| g.is_biclique(&VertexSet::from_slice(*s))).count();
                        if bicliques % 2 != 0 {
                            f.add(format!("parity {a} {b} {c} {d}"));
                        }
                    }
                }
            }
        }
        let maximal = brute_maximal_sets(g, Structure::Biclique, &budget).map_err(|e| e.to_string())?;
        let max_size = if g.n() <= 7 { g.n() } else { 3 };
        each_biclique(g, max_size, |s| {
            cores += 1;
            let brute = maximal
                .iter()
                .filter(|b| s.is_subset(b))
                .fold(None::<VertexSet>, |acc, b| Some(acc.map_or(b.clone(), |a| a.intersection(b))));
            let fast = core_bp(g, s);
            let definitional = definitional_graph_core(g, s, Structure::Biclique);
            if fast != brute || definitional != brute || !fast.as_ref().is_some_and(|c| g.is_biclique(c) && s.is_subset(c)) {
                f.add(format!("core of {:?} on {}", s.to_vec(), g.to_text().replace('\n', " ")));
            }
        });
    }
    f.finish(format!("{} graphs, {cores} biclique cores", graphs.len()))
}

fn criterion_8() -> Outcome {
    let mut f = Failures::default();
    let mut r = rng(8);
    let mut satisfiable = [0usize; 2];
    for i in 0..50 {
        let nv = 6 + i % 5;
        let formula = random_sat34(nv, 7, &mut r).map_err(|e| e.to_string())?;
        let sat = solve_sat(&formula).map_err(|e| e.to_string())?.is_some();
        satisfiable[0] += sat as usize;
        let gadget = sat_to_biclique_gadget_p(&formula, 1, false).map_err(|e| e.to_string())?;
        let v = is_pq_biclique_helly(&gadget.graph, gadget.p, gadget.q).map_err(|e| e.to_string())?;
        let prop = Property::new(Structure::Biclique, false);
        if sat == v.holds || !witness_ok(Instance::Graph(&gadget.graph), prop, gadget.p, gadget.q, &v) {
            f.add(format!("P variant: {}", formula.to_text().replace('\n', " ")));
        }
    }
    for i in 0..50 {
        let nv = 5 + i % 5;
        let formula = random_sat34(nv, 6, &mut r).map_err(|e| e.to_string())?;
        let sat = solve_sat(&formula).map_err(|e| e.to_string())?.is_some();
        satisfiable[1] += sat as usize;
        let gadget = sat_to_biclique_gadget_q(&formula, 1, false).map_err(|e| e.to_string())?;
        let v = is_pq_biclique_helly(&gadget.graph, gadget.p, gadget.q).map_err(|e| e.to_string())?;
        let prop = Property::new(Structure::Biclique, false);
        if sat == v.holds || !witness_ok(Instance::Graph(&gadget.graph), prop, gadget.p, gadget.q, &v) {
            f.add(format!("Q variant: {}", formula.to_text().replace('\n', " ")));
        }
    }
    f.finish(format!(
        "50 + 50 formulas ({} and {} satisfiable; fewer than 8 clauses can never be unsatisfiable)",
        satisfiable[0], satisfiable[1]
    ))
}

fn has_clique(g: &Graph, k: usize) -> bool {
    !for_each_combination(g.n(), k, |c| !g.is_clique(&c.iter().map(|&v| v as u32).collect()))
}

fn criterion_9() -> Outcome {
    let mut f = Failures::default();
    let hypergraphs = default_hypergraph_corpus();
    for (i, h) in hypergraphs.iter().enumerate() {
        for p in 1..=3 {
            let base = is_hereditary_pq_helly(h, p, 1).map_err(|e| e.to_string())?.holds;
            for q in 1..=3 {
                let lifted = universal_vertex_lift(h, q).map_err(|e| e.to_string())?;
                if is_hereditary_pq_helly(&lifted, p, q).map_err(|e| e.to_string())?.holds != base {
                    f.add(format!("hypergraph lift #{i} ({p},{q})"));
                }
            }
        }
    }
    let mut graphs: Vec<Graph> = graphs_up_to(7).cloned().collect();
    graphs.extend(random_graphs(8, 100, 80));
    for g in &graphs {
        for p in 1..=3 {
            let base = is_hereditary_pq_clique_helly(g, p, 1).map_err(|e| e.to_string())?.holds;
            for q in 2..=3 {
                let lifted = graph_universal_lift(g, q).map_err(|e| e.to_string())?;
                if is_hereditary_pq_clique_helly(&lifted, p, q).map_err(|e| e.to_string())?.holds != base {
                    f.add(format!("graph lift ({p},{q}) on {}", g.to_text().replace('\n', " ")));
                }
            }
        }
    }
    let mut joins = 0;
    let mut join_inputs: Vec<Graph> = graphs_up_to(5).cloned().collect();
    join_inputs.extend(all_graphs(6).iter().cloned());
    join_inputs.extend(random_graphs(7, 60, 70));
    join_inputs.extend(random_graphs(8, 60, 81));
    for g in &join_inputs {
        for k in 1..=3 {
            let (joined, q) = clique_join_gadget(g, k, 2).map_err(|e| e.to_string())?;
            joins += 1;
            let hereditary = is_hereditary_pq_clique_helly(&joined, 2, q).map_err(|e| e.to_string())?.holds;
            if hereditary == has_clique(g, k) {
                f.add(format!("join k={k} on {}", g.to_text().replace('\n', " ")));
            }
        }
    }
    f.finish(format!(
        "{} hypergraph lifts, {} graph lifts, {joins} joins",
        hypergraphs.len() * 9,
        graphs.len() * 6
    ))
}

fn criterion_10() -> Outcome {
    let mut r = rng(10);
    let h = random_hypergraph(60, 200, 5, &mut r).map_err(|e| e.to_string())?;
    let (v_h, t_h) = best_of(5, || is_pq_helly(&h, 2, 1));
    let v_h = v_h.map_err(|e| e.to_string())?;
    let apex = h.n() as u32;
    let coned = Hypergraph::new(h.n() + 1, h.edges().iter().map(|e| e.union(&VertexSet::singleton(apex))).collect())
        .map_err(|e| e.to_string())?;
    let (v_c, t_c) = best_of(5, || is_pq_helly(&coned, 2, 1));
    if !v_c.map_err(|e| e.to_string())?.holds {
        return Err("a hypergraph with a common vertex must be 2-Helly".into());
    }
    let g = random_graph(40, 0.3, &mut r);
    let (v_g, t_g) = best_of(5, || is_hereditary_pq_clique_helly(&g, 2, 1));
    let v_g = v_g.map_err(|e| e.to_string())?;

    let mut ratios = Vec::new();
    let checks: [(Instance<'_>, Property, &Verdict, Duration); 2] = [
        (Instance::Hypergraph(&h), hg_prop(false), &v_h, t_h),
        (Instance::Graph(&g), Property::new(Structure::Clique, true), &v_g, t_g),
    ];
    for (instance, prop, verdict, rec_time) in checks {
        if let Some(w) = &verdict.witness {
            let (ok, t_v) = best_of(50, || validate_witness(instance, prop, 2, 1, w));
            if !ok.unwrap_or(false) {
                return Err(format!("{} witness does not validate", prop.name()));
            }
            ratios.push(t_v.as_secs_f64() / rec_time.as_secs_f64().max(1e-9));
        }
    }
    let max_ratio = ratios.iter().copied().fold(0.0, f64::max);
    let summary = format!(
        "hypergraph n={} m={} in {:.1} ms (holds={}), with a common vertex in {:.1} ms, graph n=40 m={} in {:.1} ms (holds={}), validation/recognition <= {:.3}%",
        h.n(),
        h.m(),
        t_h.as_secs_f64() * 1e3,
        v_h.holds,
        t_c.as_secs_f64() * 1e3,
        g.m(),
        t_g.as_secs_f64() * 1e3,
        v_g.holds,
        max_ratio * 100.0
    );
    if t_h.max(t_c) < Duration::from_secs(2) && t_g < Duration::from_secs(10) && max_ratio < 0.01 {
        Ok(summary)
    } else {
        Err(summary)
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

/// Runs `f` `runs` times and keeps the fastest wall-clock time.
fn best_of<T>(runs: usize, mut f: impl FnMut() -> T) -> (T, Duration) {
    let (mut out, mut best) = timed(&mut f);
    for _ in 1..runs {
        let (o, t) = timed(&mut f);
        if t < best {
            (out, best) = (o, t);
        }
    }
    (out, best)
}

fn main() -> ExitCode {
    let criteria: [(usize, &str, fn() -> Outcome); 10] = [
        (1, "hypergraph oracle equivalence", criterion_1),
        (2, "hereditary characterization agreement", criterion_2),
        (3, "phi operator laws", criterion_3),
        (4, "forbidden structures fail", criterion_4),
        (5, "expansion and biexpansion equivalence", criterion_5),
        (6, "K_(p+q)-free graphs are hereditary", criterion_6),
        (7, "biclique basics", criterion_7),
        (8, "SAT gadget equivalence", criterion_8),
        (9, "lift and join laws", criterion_9),
        (10, "performance smoke", criterion_10),
    ];
    let selected: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for (id, name, run) in criteria {
        if !selected.is_empty() && !selected.contains(&id) {
            continue;
        }
        let (outcome, elapsed) = timed(run);
        let secs = elapsed.as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {id:>2} PASS  {name}: {detail} [{secs:.1} s]"),
            Err(detail) => {
                failed += 1;
                println!("criterion {id:>2} FAIL  {name}: {detail} [{secs:.1} s]");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
