use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use graphpow_core::{cycle, read_graph6, read_graph6_lines, star, subdivide, write_graph6, Graph};
use serde_json::Value;

fn graphpow(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_graphpow"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_graphs(path: &Path, graphs: &[Graph]) {
    let text: String = graphs.iter().map(|g| write_graph6(g) + "\n").collect();
    fs::write(path, text).unwrap();
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn json(path: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn compute_aut_of_c4() {
    let dir = tempfile::tempdir().unwrap();
    let (input, out) = (dir.path().join("c4.g6"), dir.path().join("aut.json"));
    write_graphs(&input, &[cycle(4)]);
    let o = graphpow(&["compute", "--in", s(&input), "--what", "aut", "--json", s(&out)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&out)[0]["value"], 8);
}

#[test]
fn compute_values_and_undefined() {
    let dir = tempfile::tempdir().unwrap();
    let (input, out) = (dir.path().join("g.g6"), dir.path().join("d.json"));
    write_graphs(&input, &[Graph::complete(2), star(3)]);
    let o = graphpow(&["compute", "--in", s(&input), "--what", "Dprime", "--json", s(&out)]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&out);
    assert!(v[0]["value"]["undefined"].is_string());
    assert_eq!(v[1]["value"], 3);
    let o = graphpow(&["compute", "--in", s(&input), "--what", "Dtotal", "--json", s(&out)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&out)[1]["value"], 2);
}

#[test]
fn transform_subdivides_c3_into_c6() {
    let dir = tempfile::tempdir().unwrap();
    let (input, out, se) = (
        dir.path().join("c3.g6"),
        dir.path().join("c6.g6"),
        dir.path().join("se.json"),
    );
    write_graphs(&input, &[cycle(3)]);
    let o = graphpow(&[
        "transform", "--in", s(&input), "--op", "subdivide:2", "--out", s(&out), "--superedges", s(&se),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = fs::read_to_string(&out).unwrap();
    let g = read_graph6(text.trim()).unwrap();
    assert!(g.is_cycle() && g.n() == 6);
    assert_eq!(text.trim(), write_graph6(&subdivide(&cycle(3), 2).unwrap().graph));
    assert_eq!(json(&se)[0].as_array().unwrap().len(), 3);
}

#[test]
fn transform_powers_and_fractions() {
    let dir = tempfile::tempdir().unwrap();
    let (input, out) = (dir.path().join("c.g6"), dir.path().join("o.g6"));
    write_graphs(&input, &[cycle(5), cycle(6)]);
    for (op, edges) in [("power:2", [10, 12]), ("frac:2/2:sp", [20, 24]), ("frac:2/2:ps", [20, 24])] {
        let o = graphpow(&["transform", "--in", s(&input), "--op", op, "--out", s(&out)]);
        assert_eq!(o.status.code(), Some(0), "{op}");
        let gs = read_graph6_lines(&fs::read_to_string(&out).unwrap()).unwrap();
        let got: Vec<usize> = gs.iter().map(Graph::edge_count).collect();
        assert_eq!(got, edges, "{op}");
    }
    let o = graphpow(&["transform", "--in", s(&input), "--op", "cube", "--out", s(&out)]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn label_methods_write_certified_labelings() {
    let dir = tempfile::tempdir().unwrap();
    let (input, out) = (dir.path().join("k13.g6"), dir.path().join("l.json"));
    write_graphs(&input, &[star(3)]);
    for method in ["bfs:2", "pair", "tuple:3", "transfer:2"] {
        let o = graphpow(&["label", "--in", s(&input), "--method", method, "--out", s(&out)]);
        assert_eq!(o.status.code(), Some(0), "{method}");
        let v = json(&out);
        assert!(v["labels_used"].as_u64().unwrap() >= 1, "{method}");
        assert!(v["labeling"]["kind"].is_string());
    }
    let o = graphpow(&["label", "--method", "star:3,2,2", "--out", s(&out)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&out)["labels_used"], 2);
    let o = graphpow(&["label", "--method", "pathpower:5,3", "--out", s(&out)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&out)["labels_used"], 3);
    assert_eq!(json(&out)["claimed_labels"], 1);
    let o = graphpow(&["label", "--method", "pair", "--out", s(&out)]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn malformed_graph6_reports_offset() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("bad.g6");
    fs::write(&input, "Bw\nC~\nD?\x10\n").unwrap();
    let o = graphpow(&["compute", "--in", s(&input), "--what", "D"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("at byte"));
}

#[test]
fn usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let o = graphpow(&["verify", "--claims", "T2.10,NOPE", "--out", s(&out)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!out.exists());
    assert_eq!(graphpow(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(graphpow(&["--help"]).status.code(), Some(0));
}

#[test]
fn verify_exit_status_follows_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    let (out, md) = (dir.path().join("r.json"), dir.path().join("r.md"));
    let o = graphpow(&["verify", "--claims", "C2.9", "--max-n", "7", "--out", s(&out), "--md", s(&md)]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["meta"]["limits"]["max_n"], 7);
    let records = v["records"].as_array().unwrap();
    assert!(records.len() > 853);
    assert!(records.iter().all(|r| r["claim"] == "C2.9" && r["verdict"] == "PASS"));
    assert!(fs::read_to_string(&md).unwrap().contains("| C2.9 |"));

    let o = graphpow(&["verify", "--claims", "T2.10", "--out", s(&out)]);
    assert_eq!(o.status.code(), Some(1));
    // report-only claims never fail the run
    let o = graphpow(&["verify", "--claims", "CONJ.ii", "--out", s(&out)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(json(&out)["records"]
        .as_array()
        .unwrap()
        .iter()
        .any(|r| r["verdict"] == "FAIL"));
}
