use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use hellykit::{Graph, Hypergraph};
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hellykit"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("the binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin().args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hellykit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn triangle_hypergraph_fails_with_basis_witness() {
    let o = run(&["hg", "named:k3_2", "--p", "2", "--q", "1"]);
    assert_eq!(code(&o), 1);
    let v = json(&o);
    assert_eq!(v["holds"], false);
    assert_eq!(v["property"], "pq_helly");
    assert_eq!(v["witness"]["kind"], "basis");
    assert_eq!(v["stats"]["n"], 3);
    assert!(v["stats"]["elapsed_ms"].is_number());

    let o = run(&["hg", "named:star4", "--p", "2", "--q", "1", "--hereditary"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["holds"], true);
}

#[test]
fn hajos_fails_clique_helly_and_k4_passes() {
    let o = run(&["clique", "named:hajos", "--p", "2", "--q", "1", "--hereditary"]);
    assert_eq!(code(&o), 1);
    let o = run(&["clique", "named:hajos", "--p", "2", "--q", "1"]);
    assert_eq!(code(&o), 1);
    let o = run(&["clique", "named:k4", "--p", "2", "--q", "1", "--hereditary"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn every_method_agrees_on_small_instances() {
    for (cmd, input, hereditary, expected) in [
        ("hg", "named:k3_2", true, 1),
        ("hg", "named:star3", true, 0),
        ("clique", "named:hajos", true, 1),
        ("clique", "named:c5", false, 0),
        ("biclique", "named:c5", true, 1),
        ("biclique", "named:k2,3", false, 0),
    ] {
        for method in ["auto", "engine", "brute", "characterization-suite"] {
            let mut args = vec![cmd, input, "--p", "2", "--q", "1", "--method", method];
            if hereditary {
                args.push("--hereditary");
            }
            let o = run(&args);
            assert_eq!(code(&o), expected, "{args:?}: {}", stdout(&o));
        }
    }
    let o = run(&["hg", "named:k3_2", "--p", "2", "--q", "1", "--hereditary", "--method", "edge-subfamilies"]);
    assert_eq!(code(&o), 1);
    let o = run(&["clique", "named:c5", "--p", "2", "--q", "1", "--hereditary", "--method", "edge-subfamilies"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn sat_reduction_of_a_satisfiable_formula_is_not_biclique_helly() {
    let formula = "7 7\n1 2 3\n-1 4 5\n-2 -4 6\n-3 -5 -6\n1 -7 4\n7 -2 5\n-6 3 7\n";
    let path = scratch("formula.cnf", formula);
    let o = run(&["gadget", "sat-p", path.to_str().unwrap(), "--q", "1"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("# p = 6, q = 1"), "{text}");
    assert!(text.contains("#@name 0 y1"));
    let o = run_stdin(&["biclique", "-", "--p", "6", "--q", "1"], &text);
    assert_eq!(code(&o), 1, "{}", stdout(&o));
    let v = json(&o);
    assert!(v["witness_named"].is_object());
}

#[test]
fn usage_and_parse_errors_exit_with_two() {
    assert_eq!(code(&run(&["hg", "named:k3_2", "--p", "0", "--q", "1"])), 2);
    assert_eq!(code(&run(&["hg", "named:nothing", "--p", "1", "--q", "1"])), 2);
    assert_eq!(code(&run(&["hg", "/definitely/missing/file", "--p", "1", "--q", "1"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
    assert_eq!(code(&run_stdin(&["hg", "-", "--p", "1", "--q", "1"], "3 1\n2 1 0\n")), 2);
    let isolated = "4 1\n2 0 1\n";
    assert_eq!(code(&run_stdin(&["hg", "-", "--p", "1", "--q", "1"], isolated)), 2);
    assert_eq!(code(&run_stdin(&["hg", "-", "--p", "1", "--q", "1", "--allow-isolated"], isolated)), 0);
    let big = Graph::complete(11).to_text();
    assert_eq!(code(&run_stdin(&["clique", "-", "--p", "1", "--q", "1", "--method", "brute"], &big)), 2);
}

#[test]
fn budget_exhaustion_exits_with_three() {
    let g = Graph::cycle(30).to_text();
    let o = run_stdin(&["clique", "-", "--p", "3", "--q", "1", "--method", "engine", "--max-leaves", "10"], &g);
    assert_eq!(code(&o), 3, "{}", String::from_utf8_lossy(&o.stderr));
    let big = Graph::complete(11).to_text();
    let o = run_stdin(&["oracle", "-", "--kind", "clique", "--p", "1", "--q", "1"], &big);
    assert_eq!(code(&o), 3);
    assert!(json(&o)["results"][0]["error"].is_string());
}

fn reparse_graph(text: &str) {
    let g = Graph::parse(text).unwrap_or_else(|e| panic!("{e}: {text}"));
    let names = hellykit::text::parse_names(text, g.n());
    let mut again = text.lines().filter(|l| l.starts_with("# ")).map(|l| format!("{l}\n")).collect::<String>();
    if let Some(n) = &names {
        again.push_str(&hellykit::text::render_names(n));
    }
    again.push_str(&g.to_text());
    assert_eq!(again, text);
}

fn reparse_hypergraph(text: &str) {
    let h = Hypergraph::parse_partial(text).unwrap_or_else(|e| panic!("{e}: {text}"));
    let comments: String = text.lines().filter(|l| l.starts_with('#')).map(|l| format!("{l}\n")).collect();
    assert_eq!(comments + &h.to_text(), text);
}

#[test]
fn generator_outputs_round_trip() {
    let formula = stdout(&run(&["gadget", "random", "--kind", "sat", "--n", "7", "--m", "7", "--seed", "5"]));
    let parsed = hellykit::gadgets::Sat34Formula::parse(&formula).unwrap();
    assert_eq!(parsed.to_text(), formula);
    let f = scratch("random.cnf", &formula);
    let f = f.to_str().unwrap();
    let w = scratch("w.txt", &Graph::path(3).to_text());
    let w = w.to_str().unwrap();
    let base = scratch("base.txt", &Graph::cycle(5).to_text());
    let base = base.to_str().unwrap();
    let hbase = scratch("base.hg", &Hypergraph::from_lists(3, &[&[0, 1], &[1, 2]]).unwrap().to_text());
    let hbase = hbase.to_str().unwrap();

    let graphs: Vec<Vec<&str>> = vec![
        vec!["ocular", "--p", "2", "--q", "2", "--s", "1"],
        vec!["ocular", "--p", "2", "--q", "1", "--w-graph", w],
        vec!["biocular", "--p", "2", "--q", "2", "--clause", "beta2", "--w-graph", w],
        vec!["biocular", "--p", "1", "--q", "1", "--clause", "beta1"],
        vec!["sat-p", f, "--q", "2"],
        vec!["sat-q", f, "--p", "1"],
        vec!["lift", base, "--kind", "graph", "--q", "3"],
        vec!["join", base, "--k", "2", "--p", "2"],
        vec!["random", "--kind", "graph", "--n", "9", "--density", "0.4", "--seed", "2"],
    ];
    for args in graphs {
        let mut full = vec!["gadget"];
        full.extend(&args);
        let o = run(&full);
        assert_eq!(code(&o), 0, "{args:?}");
        reparse_graph(&stdout(&o));
    }
    for args in [
        vec!["j", "--p", "2", "--q", "3", "--s", "1"],
        vec!["lift", hbase, "--kind", "hg", "--q", "2"],
        vec!["random", "--kind", "hg", "--n", "8", "--m", "6", "--rank", "4", "--seed", "2"],
    ] {
        let mut full = vec!["gadget"];
        full.extend(&args);
        let o = run(&full);
        assert_eq!(code(&o), 0, "{args:?}");
        reparse_hypergraph(&stdout(&o));
    }
}

#[test]
fn generated_gadgets_are_recognized() {
    let j = stdout(&run(&["gadget", "j", "--p", "2", "--q", "2", "--s", "1"]));
    assert_eq!(code(&run_stdin(&["hg", "-", "--p", "2", "--q", "2", "--hereditary"], &j)), 1);
    let oc = stdout(&run(&["gadget", "ocular", "--p", "2", "--q", "2", "--s", "1"]));
    assert_eq!(code(&run_stdin(&["clique", "-", "--p", "2", "--q", "2", "--hereditary"], &oc)), 1);
    let bi = stdout(&run(&["gadget", "biocular", "--p", "2", "--q", "2"]));
    assert_eq!(code(&run_stdin(&["biclique", "-", "--p", "2", "--q", "2", "--hereditary"], &bi)), 1);
}

#[test]
fn witnesses_validate_after_a_round_trip() {
    let hajos = scratch("hajos.txt", &hellykit::gadgets::named::named_graph("hajos").unwrap().to_text());
    let hajos = hajos.to_str().unwrap();
    for (cmd, input, extra) in [
        ("hg", "named:k3_2", vec![]),
        ("hg", "named:k3_2", vec!["--hereditary"]),
        ("clique", hajos, vec!["--hereditary"]),
        ("biclique", "named:c5", vec!["--hereditary"]),
    ] {
        let mut args = vec![cmd, input, "--p", "2", "--q", "1"];
        args.extend(extra);
        let o = run(&args);
        assert_eq!(code(&o), 1);
        let verdict = scratch(&format!("verdict-{cmd}.json"), &stdout(&o));
        let o = run(&["validate-witness", input, verdict.to_str().unwrap()]);
        assert_eq!(code(&o), 0, "{args:?}: {}", stdout(&o));
        assert_eq!(json(&o)["valid"], true);
    }
    let verdict = stdout(&run(&["hg", "named:k3_2", "--p", "2", "--q", "1"]));
    let path = scratch("verdict-other.json", &verdict);
    let other = scratch("other.hg", "3 3\n3 0 1 2\n2 0 1\n2 1 2\n");
    let o = run(&["validate-witness", other.to_str().unwrap(), path.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    let bad = scratch("bad.json", "{\"property\": \"pq_helly\", \"p\": 2, \"q\": 1, \"witness\": {\"kind\": \"nonsense\"}}");
    assert_eq!(code(&run(&["validate-witness", "named:k3_2", bad.to_str().unwrap()])), 2);
}

#[test]
fn suite_on_a_small_corpus_finds_no_disagreement() {
    let o = run(&["suite", "--max-n", "4", "--hypergraphs", "30", "--workers", "2"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let v = json(&o);
    assert_eq!(v["disagreements"], 0);
    assert_eq!(v["instances"], 30 + 1 + 1 + 2 + 4 + 11);
    let o = run(&["suite", "named:petersen", "--kind", "clique", "--p", "2", "--q", "1"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn text_format_is_line_oriented() {
    let o = run(&["--format", "text", "hg", "named:k3_2", "--p", "2", "--q", "1"]);
    let out = stdout(&o);
    assert!(out.starts_with("pq_helly (p = 2, q = 1): fails"), "{out}");
    assert!(out.contains("witness: {\"kind\":\"basis\""));
}

#[test]
fn preferred_witness_kinds() {
    for (extra, kind) in [
        (vec![], "subfamily"),
        (vec!["--hereditary"], "subfamily"),
        (vec!["--hereditary", "--witness", "j-embedding"], "j_embedding"),
    ] {
        let mut args = vec!["hg", "named:k3_2", "--p", "2", "--q", "1"];
        if !extra.contains(&"--witness") {
            args.extend(["--witness", "subfamily"]);
        }
        args.extend(&extra);
        let o = run(&args);
        assert_eq!(code(&o), 1);
        let v = json(&o);
        assert_eq!(v["witness"]["kind"], kind, "{args:?}");
        let verdict = scratch(&format!("pref-{kind}-{}.json", extra.len()), &stdout(&o));
        assert_eq!(code(&run(&["validate-witness", "named:k3_2", verdict.to_str().unwrap()])), 0);
    }
    let o = run(&["hg", "named:k3_2", "--p", "2", "--q", "1", "--witness", "j-embedding"]);
    assert_eq!(code(&o), 2);
}
