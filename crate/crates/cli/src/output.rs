use serde::Serialize;
use serde_json::{json, Value};

use hellykit::suite::SuiteReport;
use hellykit::{Method, Verdict, Witness};

use crate::Format;

#[derive(Serialize)]
pub struct Stats {
    pub n: usize,
    pub m: usize,
    #[serde(rename = "N", skip_serializing_if = "Option::is_none")]
    pub qsets: Option<usize>,
    pub elapsed_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub engine: Option<Value>,
}

/// The record printed for one recognition run.
#[derive(Serialize)]
pub struct Report {
    pub property: &'static str,
    pub p: usize,
    pub q: usize,
    pub holds: Option<bool>,
    pub method: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_named: Option<Value>,
    pub notes: Vec<String>,
    pub stats: Stats,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub suite: Option<SuiteReport>,
}

impl Report {
    pub fn from_verdict(property: &'static str, p: usize, q: usize, v: Verdict, elapsed_ms: f64) -> Self {
        let witness_named = None;
        Report {
            property,
            p,
            q,
            holds: Some(v.holds),
            method: method_name(v.method),
            witness: v.witness,
            witness_named,
            notes: v.notes,
            stats: Stats {
                n: v.stats.n,
                m: v.stats.m,
                qsets: v.stats.qsets,
                elapsed_ms,
                engine: v.stats.engine.map(|e| json!(e)),
            },
            suite: None,
        }
    }

    pub fn attach_names(&mut self, names: Option<&[String]>) {
        if let (Some(names), Some(w)) = (names, &self.witness) {
            self.witness_named = Some(name_witness(w, names));
        }
    }
}

pub fn method_name(m: Method) -> String {
    match json!(m) {
        Value::String(s) => s,
        other => other.to_string(),
    }
}

/// The witness with vertex numbers replaced by names. Edge indices of
/// J-embeddings and subfamilies stay numeric.
pub fn name_witness(w: &Witness, names: &[String]) -> Value {
    let name = |v: &Value| match v.as_u64() {
        Some(i) => names.get(i as usize).map_or(v.clone(), |s| Value::String(s.clone())),
        None => v.clone(),
    };
    fn rename(v: &Value, name: &dyn Fn(&Value) -> Value) -> Value {
        match v {
            Value::Array(items) => Value::Array(items.iter().map(|x| rename(x, name)).collect()),
            other => name(other),
        }
    }
    let mut value = json!(w);
    let is_j = matches!(w, Witness::JEmbedding { .. });
    if let Value::Object(map) = &mut value {
        for (key, field) in map.iter_mut() {
            let vertex_field = match key.as_str() {
                "kind" | "s" | "clause" | "indices" => false,
                "edges" => !is_j,
                _ => true,
            };
            if vertex_field {
                *field = rename(field, &name);
            }
        }
    }
    value
}

pub fn emit(format: Format, report: &Report) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(report).expect("reports serialize")),
        Format::Text => {
            let answer = match report.holds {
                Some(true) => "holds",
                Some(false) => "fails",
                None => "undecided",
            };
            println!("{} (p = {}, q = {}): {answer} [{}]", report.property, report.p, report.q, report.method);
            if let Some(w) = &report.witness {
                println!("witness: {}", serde_json::to_string(w).expect("witnesses serialize"));
            }
            if let Some(w) = &report.witness_named {
                println!("named witness: {w}");
            }
            for note in &report.notes {
                println!("note: {note}");
            }
            if let Some(suite) = &report.suite {
                for c in &suite.checks {
                    let h = c.holds.map_or("-".to_string(), |b| b.to_string());
                    println!("  {:<24} {h}", c.name);
                }
            }
            let s = &report.stats;
            print!("n = {}, m = {}", s.n, s.m);
            if let Some(nq) = s.qsets {
                print!(", N = {nq}");
            }
            println!(", {:.3} ms", s.elapsed_ms);
        }
    }
}

pub fn emit_value(format: Format, value: &Value) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(value).expect("values serialize")),
        Format::Text => println!("{value}"),
    }
}
