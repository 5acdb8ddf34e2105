//! Command-line front end for the hellykit recognizers, oracle, suite and
//! gadget generators.

mod batch;
mod gadget;
mod input;
mod output;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use hellykit::basis_engine::EngineConfig;
use hellykit::helly_hg;
use hellykit::oracle::{self, Budget};
use hellykit::property::{recognize, recognize_by_engine, Instance, Property, Structure};
use hellykit::suite::{run_suite, SuiteOptions};
use hellykit::{Error, Witness};

use input::{load_graph, load_hypergraph, read_source};
use output::{emit, emit_value, Report};

#[derive(Parser)]
#[command(name = "hellykit", version, about = "Recognize (p,q)-Helly hypergraphs and (p,q)-clique- and biclique-Helly graphs")]
struct Cli {
    /// Output format for results.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Wall-clock limit for brute-force runs, in milliseconds.
    #[arg(long, global = true, env = "HELLYKIT_BUDGET_MS", default_value_t = 60_000)]
    budget_ms: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Auto,
    Engine,
    EdgeSubfamilies,
    Brute,
    CharacterizationSuite,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum WitnessArg {
    Basis,
    Subfamily,
    JEmbedding,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Hg,
    Clique,
    Biclique,
}

impl Kind {
    fn structure(self) -> Structure {
        match self {
            Kind::Hg => Structure::Hypergraph,
            Kind::Clique => Structure::Clique,
            Kind::Biclique => Structure::Biclique,
        }
    }
}

#[derive(Args)]
struct RecognizeArgs {
    /// Instance file, `-` for standard input, or `named:NAME`.
    input: String,
    #[arg(long)]
    p: usize,
    #[arg(long)]
    q: usize,
    /// Decide the hereditary version of the property.
    #[arg(long)]
    hereditary: bool,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    method: MethodArg,
    /// Allow the brute-force method beyond n = 10 or m = 14.
    #[arg(long)]
    ack_brute: bool,
    /// Accept hypergraphs with vertices outside every edge.
    #[arg(long)]
    allow_isolated: bool,
    /// Largest number of engine leaves before giving up.
    #[arg(long)]
    max_leaves: Option<u64>,
    /// Preferred witness for a failing hypergraph.
    #[arg(long, value_enum, default_value_t = WitnessArg::Basis)]
    witness: WitnessArg,
}

#[derive(Subcommand)]
enum Command {
    /// Decide (hereditary) (p,q)-Helly for a hypergraph.
    Hg(RecognizeArgs),
    /// Decide (hereditary) (p,q)-clique-Helly for a graph.
    Clique(RecognizeArgs),
    /// Decide (hereditary) (p,q)-biclique-Helly for a graph.
    Biclique(RecognizeArgs),
    /// Run the brute-force oracle on several instances.
    Oracle(batch::OracleArgs),
    /// Cross-check every characterization on a corpus.
    Suite(batch::SuiteArgs),
    /// Generate forbidden structures, reductions, lifts and random instances.
    #[command(subcommand)]
    Gadget(gadget::GadgetCommand),
    /// Check a witness from a previous run against an instance.
    ValidateWitness(ValidateArgs),
}

#[derive(Args)]
struct ValidateArgs {
    /// Instance file, `-` for standard input, or `named:NAME`.
    instance: String,
    /// JSON output of a recognition run.
    verdict: String,
    #[arg(long)]
    allow_isolated: bool,
}

/// A reason to stop with a non-zero exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub const USAGE: u8 = 2;
    pub const UNDECIDED: u8 = 3;

    pub fn usage(message: impl Into<String>) -> Self {
        Failure { code: Self::USAGE, message: message.into() }
    }

    pub fn undecided(message: impl Into<String>) -> Self {
        Failure { code: Self::UNDECIDED, message: message.into() }
    }

    pub fn from_core(e: Error) -> Self {
        match e {
            Error::BudgetExceeded(_) => Failure::undecided(e.to_string()),
            _ => Failure::usage(e.to_string()),
        }
    }

    pub fn context(mut self, what: &str) -> Self {
        self.message = format!("{what}: {}", self.message);
        self
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::from_core(e)
    }
}

/// Process exit code for a decided answer.
pub fn answer_code(holds: Option<bool>) -> u8 {
    match holds {
        Some(true) => 0,
        Some(false) => 1,
        None => Failure::UNDECIDED,
    }
}

pub struct Ctx {
    pub format: Format,
    pub budget_ms: u64,
}

impl Ctx {
    /// Brute-force limits with the wall clock starting now.
    pub fn budget(&self) -> Budget {
        Budget { deadline: Some(Instant::now() + Duration::from_millis(self.budget_ms)), ..Budget::default() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Ctx { format: cli.format, budget_ms: cli.budget_ms };
    let result = match cli.command {
        Command::Hg(a) => recognize_cmd(&ctx, Kind::Hg, a),
        Command::Clique(a) => recognize_cmd(&ctx, Kind::Clique, a),
        Command::Biclique(a) => recognize_cmd(&ctx, Kind::Biclique, a),
        Command::Oracle(a) => batch::oracle_cmd(&ctx, a),
        Command::Suite(a) => batch::suite_cmd(&ctx, a),
        Command::Gadget(g) => gadget::run(g),
        Command::ValidateWitness(a) => validate_cmd(&ctx, a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("hellykit: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

enum Owned {
    Hypergraph(hellykit::Hypergraph),
    Graph(hellykit::Graph),
}

impl Owned {
    fn instance(&self) -> Instance<'_> {
        match self {
            Owned::Hypergraph(h) => Instance::Hypergraph(h),
            Owned::Graph(g) => Instance::Graph(g),
        }
    }

    fn size(&self) -> (usize, usize) {
        match self {
            Owned::Hypergraph(h) => (h.n(), h.m()),
            Owned::Graph(g) => (g.n(), g.m()),
        }
    }
}

fn load(kind: Kind, source: &str, allow_isolated: bool) -> Result<(Owned, Option<Vec<String>>), Failure> {
    Ok(match kind {
        Kind::Hg => {
            let l = load_hypergraph(source, allow_isolated)?;
            (Owned::Hypergraph(l.value), l.names)
        }
        _ => {
            let l = load_graph(source)?;
            (Owned::Graph(l.value), l.names)
        }
    })
}

fn recognize_cmd(ctx: &Ctx, kind: Kind, a: RecognizeArgs) -> Result<u8, Failure> {
    if a.p == 0 || a.q == 0 {
        return Err(Failure::usage("p and q must be positive"));
    }
    let (owned, names) = load(kind, &a.input, a.allow_isolated)?;
    let instance = owned.instance();
    let property = Property::new(kind.structure(), a.hereditary);
    let mut config = EngineConfig::default();
    if let Some(l) = a.max_leaves {
        config.leaf_budget = l;
    }
    let (p, q) = (a.p, a.q);
    let (n, m) = owned.size();
    let start = Instant::now();
    let elapsed = |s: Instant| s.elapsed().as_secs_f64() * 1e3;
    let mut report = match a.method {
        MethodArg::Auto => {
            let v = recognize(instance, property, p, q, &config)?;
            Report::from_verdict(property.name(), p, q, v, elapsed(start))
        }
        MethodArg::Engine => {
            let v = recognize_by_engine(instance, property, p, q, &config)?;
            Report::from_verdict(property.name(), p, q, v, elapsed(start))
        }
        MethodArg::EdgeSubfamilies => {
            let Owned::Hypergraph(h) = &owned else {
                return Err(Failure::usage("edge-subfamilies applies to hypergraphs only"));
            };
            if !a.hereditary {
                return Err(Failure::usage("edge-subfamilies decides the hereditary property only"));
            }
            let v = helly_hg::is_hereditary_by_edge_subfamilies(h, p, q)?;
            Report::from_verdict(property.name(), p, q, v, elapsed(start))
        }
        MethodArg::Brute => {
            let too_big = n > 10 || (kind == Kind::Hg && m > 14);
            if too_big && !a.ack_brute {
                return Err(Failure::usage(format!(
                    "brute force on n = {n}, m = {m} exceeds n <= 10, m <= 14; pass --ack-brute to run it anyway"
                )));
            }
            let mut budget = ctx.budget();
            if a.ack_brute {
                budget.max_n = usize::MAX;
                budget.max_m = usize::MAX;
            }
            let (holds, witness) = brute(&owned, property, p, q, &budget)?;
            let mut v = match witness {
                Some(w) => hellykit::Verdict::fails(hellykit::Method::Brute, w, Default::default()),
                None => hellykit::Verdict::holds(hellykit::Method::Brute, Default::default()),
            };
            v.holds = holds;
            v.stats.n = n;
            v.stats.m = m;
            Report::from_verdict(property.name(), p, q, v, elapsed(start))
        }
        MethodArg::CharacterizationSuite => {
            let options = SuiteOptions { engine: config.clone(), oracle: Some(ctx.budget()), ..SuiteOptions::default() };
            let suite = run_suite(instance, property, p, q, &options)?;
            let v = recognize(instance, property, p, q, &config)?;
            let mut r = Report::from_verdict(property.name(), p, q, v, elapsed(start));
            r.method = "characterization_suite".into();
            r.holds = suite.verdict();
            if !suite.consistent() {
                r.notes.push("the characterizations disagree".into());
            }
            r.suite = Some(suite);
            r
        }
    };
    report.stats.n = n;
    report.stats.m = m;
    if report.holds == Some(false) && a.witness != WitnessArg::Basis {
        let Owned::Hypergraph(h) = &owned else {
            return Err(Failure::usage("--witness applies to hypergraphs only"));
        };
        match preferred_witness(ctx, h, a.hereditary, p, q, a.witness)? {
            Some(w) => report.witness = Some(w),
            None => report.notes.push("the preferred witness was not found within budget".into()),
        }
    }
    report.attach_names(names.as_deref());
    emit(ctx.format, &report);
    Ok(answer_code(report.holds))
}

/// Brute-force answer, with a counterexample subfamily for the plain
/// hypergraph property.
fn brute(owned: &Owned, property: Property, p: usize, q: usize, budget: &Budget) -> Result<(bool, Option<Witness>), Failure> {
    Ok(match owned {
        Owned::Hypergraph(h) if !property.hereditary => {
            if h.n() > budget.max_n || h.m() > budget.max_m {
                return Err(Failure::undecided("instance exceeds the oracle limits"));
            }
            match oracle::brute_pq_helly_counterexample(h.edges(), p, q, budget)? {
                Some(idx) => {
                    let edges = idx.iter().map(|&i| h.edge(i).clone()).collect();
                    (false, Some(Witness::Subfamily { edges, indices: Some(idx) }))
                }
                None => (true, None),
            }
        }
        Owned::Hypergraph(h) => (oracle::brute_is_hereditary_pq_helly(h, p, q, budget)?, None),
        Owned::Graph(g) => {
            (oracle::brute_graph_property(g, p, q, property.structure, property.hereditary, budget)?, None)
        }
    })
}

fn preferred_witness(
    ctx: &Ctx,
    h: &hellykit::Hypergraph,
    hereditary: bool,
    p: usize,
    q: usize,
    kind: WitnessArg,
) -> Result<Option<Witness>, Failure> {
    Ok(match (kind, hereditary) {
        (WitnessArg::Basis, _) => None,
        (WitnessArg::Subfamily, true) => helly_hg::is_hereditary_by_edge_subfamilies(h, p, q)?.witness,
        (WitnessArg::Subfamily, false) => {
            let mut budget = ctx.budget();
            budget.max_n = usize::MAX;
            budget.max_m = usize::MAX;
            match oracle::brute_pq_helly_counterexample(h.edges(), p, q, &budget) {
                Ok(found) => found.map(|idx| Witness::Subfamily {
                    edges: idx.iter().map(|&i| h.edge(i).clone()).collect(),
                    indices: Some(idx),
                }),
                Err(Error::BudgetExceeded(_)) => None,
                Err(e) => return Err(e.into()),
            }
        }
        (WitnessArg::JEmbedding, false) => {
            return Err(Failure::usage("J-embedding witnesses exist for the hereditary property only"))
        }
        (WitnessArg::JEmbedding, true) => helly_hg::contains_j_partial_sub(h, p, q, 5_000_000)?.found().map(Witness::from),
    })
}

fn validate_cmd(ctx: &Ctx, a: ValidateArgs) -> Result<u8, Failure> {
    let text = read_source(&a.verdict)?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| Failure::usage(format!("{}: {e}", a.verdict)))?;
    let name = value.get("property").and_then(|v| v.as_str()).ok_or_else(|| Failure::usage("missing `property`"))?;
    let property = Property::ALL
        .into_iter()
        .find(|p| p.name() == name)
        .ok_or_else(|| Failure::usage(format!("unknown property `{name}`")))?;
    let field = |k: &str| {
        value.get(k).and_then(|v| v.as_u64()).map(|v| v as usize).ok_or_else(|| Failure::usage(format!("missing `{k}`")))
    };
    let (p, q) = (field("p")?, field("q")?);
    let witness = value.get("witness").ok_or_else(|| Failure::usage("the verdict carries no witness"))?;
    let witness: Witness =
        serde_json::from_value(witness.clone()).map_err(|e| Failure::usage(format!("malformed witness: {e}")))?;
    let kind = match property.structure {
        Structure::Hypergraph => Kind::Hg,
        Structure::Clique => Kind::Clique,
        Structure::Biclique => Kind::Biclique,
    };
    let (owned, _) = load(kind, &a.instance, a.allow_isolated)?;
    let valid = oracle::validate_witness(owned.instance(), property, p, q, &witness)?;
    emit_value(ctx.format, &json!({ "property": name, "p": p, "q": q, "valid": valid }));
    Ok(if valid { 0 } else { 1 })
}
