use clap::Args;
use rayon::prelude::*;
use serde_json::{json, Value};

use hellykit::gadgets::corpus::{graphs_up_to, random_hypergraphs};
use hellykit::property::{Property, Structure};
use hellykit::suite::{run_suite, SuiteOptions};
use hellykit::{Error, Graph, Hypergraph};

use crate::output::emit_value;
use crate::{brute, load, Ctx, Failure, Kind, Owned};

#[derive(Args)]
pub struct OracleArgs {
    /// Instance files.
    #[arg(required = true)]
    inputs: Vec<String>,
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long)]
    p: usize,
    #[arg(long)]
    q: usize,
    #[arg(long)]
    hereditary: bool,
    /// Worker threads (all cores by default).
    #[arg(long)]
    workers: Option<usize>,
    /// Lift the n <= 10, m <= 14 limits.
    #[arg(long)]
    ack_brute: bool,
    #[arg(long)]
    allow_isolated: bool,
}

#[derive(Args)]
pub struct SuiteArgs {
    /// Instance files; the built-in corpus is used when none are given.
    inputs: Vec<String>,
    /// Kind of the given instance files.
    #[arg(long, value_enum)]
    kind: Option<Kind>,
    /// Single p to test (1, 2 and 3 by default).
    #[arg(long)]
    p: Option<usize>,
    /// Single q to test (1, 2 and 3 by default).
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    workers: Option<usize>,
    /// Largest graph order in the built-in corpus.
    #[arg(long, default_value_t = 6)]
    max_n: usize,
    /// Number of random hypergraphs in the built-in corpus.
    #[arg(long, default_value_t = 1000)]
    hypergraphs: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Skip the brute-force oracle.
    #[arg(long)]
    no_oracle: bool,
    #[arg(long)]
    allow_isolated: bool,
}

fn pool(workers: Option<usize>) -> Result<rayon::ThreadPool, Failure> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(w) = workers {
        if w == 0 {
            return Err(Failure::usage("--workers must be positive"));
        }
        b = b.num_threads(w);
    }
    b.build().map_err(|e| Failure::usage(e.to_string()))
}

pub fn oracle_cmd(ctx: &Ctx, a: OracleArgs) -> Result<u8, Failure> {
    if a.p == 0 || a.q == 0 {
        return Err(Failure::usage("p and q must be positive"));
    }
    let property = Property::new(a.kind.structure(), a.hereditary);
    let loaded = a.inputs.iter().map(|f| load(a.kind, f, a.allow_isolated).map(|(o, _)| (f, o))).collect::<Result<Vec<_>, _>>()?;
    let results: Vec<(Value, Option<bool>)> = pool(a.workers)?.install(|| {
        loaded
            .par_iter()
            .map(|(file, owned)| {
                let mut budget = ctx.budget();
                if a.ack_brute {
                    budget.max_n = usize::MAX;
                    budget.max_m = usize::MAX;
                }
                match brute(owned, property, a.p, a.q, &budget) {
                    Ok((holds, _)) => (json!({ "input": file, "holds": holds }), Some(holds)),
                    Err(f) => (json!({ "input": file, "holds": null, "error": f.message }), None),
                }
            })
            .collect()
    });
    let code = if results.iter().any(|(_, h)| h.is_none()) {
        Failure::UNDECIDED
    } else if results.iter().any(|(_, h)| *h == Some(false)) {
        1
    } else {
        0
    };
    let runs: Vec<Value> = results.into_iter().map(|(v, _)| v).collect();
    emit_value(ctx.format, &json!({ "property": property.name(), "p": a.p, "q": a.q, "results": runs }));
    Ok(code)
}

struct Item {
    label: String,
    owned: Owned,
}

fn builtin_corpus(a: &SuiteArgs) -> Result<Vec<Item>, Failure> {
    if a.max_n > hellykit::gadgets::corpus::EXHAUSTIVE_MAX_N {
        return Err(Failure::usage(format!(
            "the exhaustive graph corpus stops at n = {}",
            hellykit::gadgets::corpus::EXHAUSTIVE_MAX_N
        )));
    }
    let hs: Vec<Hypergraph> = random_hypergraphs(8, 6, 5, a.hypergraphs, a.seed);
    let mut items: Vec<Item> =
        hs.into_iter().enumerate().map(|(i, h)| Item { label: format!("hypergraph#{i}"), owned: Owned::Hypergraph(h) }).collect();
    let graphs: Vec<&Graph> = graphs_up_to(a.max_n).collect();
    items.extend(graphs.into_iter().enumerate().map(|(i, g)| Item { label: format!("graph#{i}"), owned: Owned::Graph(g.clone()) }));
    Ok(items)
}

fn range(v: Option<usize>) -> Result<Vec<usize>, Failure> {
    match v {
        Some(0) => Err(Failure::usage("p and q must be positive")),
        Some(x) => Ok(vec![x]),
        None => Ok(vec![1, 2, 3]),
    }
}

pub fn suite_cmd(ctx: &Ctx, a: SuiteArgs) -> Result<u8, Failure> {
    let items = if a.inputs.is_empty() {
        builtin_corpus(&a)?
    } else {
        let kind = a.kind.ok_or_else(|| Failure::usage("--kind is required with instance files"))?;
        a.inputs
            .iter()
            .map(|f| load(kind, f, a.allow_isolated).map(|(owned, _)| Item { label: f.clone(), owned }))
            .collect::<Result<Vec<_>, _>>()?
    };
    let (ps, qs) = (range(a.p)?, range(a.q)?);
    let mut jobs = Vec::new();
    for item in &items {
        for property in Property::ALL {
            let applies = matches!(
                (&item.owned, property.structure),
                (Owned::Hypergraph(_), Structure::Hypergraph) | (Owned::Graph(_), Structure::Clique | Structure::Biclique)
            );
            if applies {
                for &p in &ps {
                    for &q in &qs {
                        jobs.push((item, property, p, q));
                    }
                }
            }
        }
    }
    let outcomes: Vec<Result<Option<Value>, Error>> = pool(a.workers)?.install(|| {
        jobs.par_iter()
            .map(|&(item, property, p, q)| {
                let options = SuiteOptions { oracle: (!a.no_oracle).then(|| ctx.budget()), ..SuiteOptions::default() };
                let report = run_suite(item.owned.instance(), property, p, q, &options)?;
                Ok((!report.consistent()).then(|| json!({ "instance": item.label, "report": report })))
            })
            .collect()
    });
    let mut disagreements = Vec::new();
    let mut errors = Vec::new();
    for (o, job) in outcomes.into_iter().zip(&jobs) {
        match o {
            Ok(Some(d)) => disagreements.push(d),
            Ok(None) => {}
            Err(e) => errors.push(json!({ "instance": job.0.label, "property": job.1.name(), "p": job.2, "q": job.3, "error": e.to_string() })),
        }
    }
    let summary = json!({
        "instances": items.len(),
        "runs": jobs.len(),
        "disagreements": disagreements.len(),
        "errors": errors.len(),
        "first_disagreements": disagreements.iter().take(20).collect::<Vec<_>>(),
        "first_errors": errors.iter().take(20).collect::<Vec<_>>(),
    });
    emit_value(ctx.format, &summary);
    Ok(if disagreements.is_empty() && errors.is_empty() { 0 } else { 1 })
}
