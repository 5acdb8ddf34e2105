use std::io::Read;

use hellykit::gadgets::named::{named_graph, named_hypergraph};
use hellykit::text::parse_names;
use hellykit::{Graph, Hypergraph};

use crate::Failure;

/// An instance read from a source together with its optional vertex names.
pub struct Loaded<T> {
    pub value: T,
    pub names: Option<Vec<String>>,
}

/// Reads a file, `-` for standard input.
pub fn read_source(source: &str) -> Result<String, Failure> {
    if source == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::usage(format!("stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(source).map_err(|e| Failure::usage(format!("{source}: {e}")))
}

pub fn load_graph(source: &str) -> Result<Loaded<Graph>, Failure> {
    if let Some(name) = source.strip_prefix("named:") {
        let value = named_graph(name).ok_or_else(|| Failure::usage(format!("unknown graph name `{name}`")))?;
        return Ok(Loaded { value, names: None });
    }
    let text = read_source(source)?;
    let value = Graph::parse(&text).map_err(|e| Failure::from_core(e).context(source))?;
    let names = parse_names(&text, value.n());
    Ok(Loaded { value, names })
}

pub fn load_hypergraph(source: &str, allow_isolated: bool) -> Result<Loaded<Hypergraph>, Failure> {
    if let Some(name) = source.strip_prefix("named:") {
        let value =
            named_hypergraph(name).ok_or_else(|| Failure::usage(format!("unknown hypergraph name `{name}`")))?;
        return Ok(Loaded { value, names: None });
    }
    let text = read_source(source)?;
    let parsed = if allow_isolated { Hypergraph::parse_partial(&text) } else { Hypergraph::parse(&text) };
    let value = parsed.map_err(|e| Failure::from_core(e).context(source))?;
    let names = parse_names(&text, value.n());
    Ok(Loaded { value, names })
}
