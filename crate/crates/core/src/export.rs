//! Deterministic text exports of a Cayley graph.

use std::fmt::Write;

use serde::Serialize;

use crate::graph::CayleyGraph;
use crate::poly::PolyRingSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Dot,
    Json,
    GraphMl,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "dot" => Ok(Format::Dot),
            "json" => Ok(Format::Json),
            "graphml" => Ok(Format::GraphMl),
            other => Err(format!(
                "unknown format `{other}` (expected dot, json or graphml)"
            )),
        }
    }
}

pub fn export(g: &CayleyGraph, format: Format) -> String {
    match format {
        Format::Dot => to_dot(g),
        Format::Json => to_json(g),
        Format::GraphMl => to_graphml(g),
    }
}

/// `graph G { ... }`: one labelled node line per vertex, then each edge once
/// as `i -- j` with `i < j`, ascending.
pub fn to_dot(g: &CayleyGraph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        writeln!(out, "  {v} [label=\"{}\"];", g.element(v)).unwrap();
    }
    for (i, j) in g.edges() {
        writeln!(out, "  {i} -- {j};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct JsonGraph {
    spec: PolyRingSpec,
    vertex_count: usize,
    degree: usize,
    edges: Vec<[usize; 2]>,
}

/// `{spec, vertex_count, degree, edges}` with edges `[i, j]`, `i < j`, sorted.
pub fn to_json(g: &CayleyGraph) -> String {
    let doc = JsonGraph {
        spec: g.spec,
        vertex_count: g.vertex_count(),
        degree: g.degree,
        edges: g.edges().map(|(i, j)| [i, j]).collect(),
    };
    let mut s = serde_json::to_string(&doc).expect("graph serializes");
    s.push('\n');
    s
}

pub fn to_graphml(g: &CayleyGraph) -> String {
    let mut out = String::from(concat!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n",
        "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n",
        "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n",
        "  <graph id=\"G\" edgedefault=\"undirected\">\n",
    ));
    for v in 0..g.vertex_count() {
        writeln!(
            out,
            "    <node id=\"n{v}\"><data key=\"label\">{}</data></node>",
            g.element(v)
        )
        .unwrap();
    }
    for (i, j) in g.edges() {
        writeln!(out, "    <edge source=\"n{i}\" target=\"n{j}\"/>").unwrap();
    }
    out.push_str("  </graph>\n</graphml>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_cayley_graph;
    use crate::Limits;

    fn build(n: u64, d: u32) -> CayleyGraph {
        build_cayley_graph(PolyRingSpec::new(n, d).unwrap(), &Limits::default()).unwrap()
    }

    #[test]
    fn dot_five_cycle() {
        let dot = to_dot(&build(5, 0));
        assert!(dot.starts_with("graph G {\n  0 [label=\"0\"];\n"));
        let edges: Vec<&str> = dot.lines().filter(|l| l.contains("--")).collect();
        assert_eq!(
            edges,
            vec![
                "  0 -- 1;",
                "  0 -- 4;",
                "  1 -- 2;",
                "  2 -- 3;",
                "  3 -- 4;"
            ]
        );
        assert!(dot.ends_with("}\n"));
    }

    #[test]
    fn dot_labels_use_polynomial_rendering() {
        let dot = to_dot(&build(4, 1));
        assert!(dot.contains("  9 [label=\"1 + 2*x\"];"));
    }

    #[test]
    fn json_matching() {
        let s = to_json(&build(2, 1));
        assert_eq!(
            s,
            "{\"spec\":{\"n\":2,\"d\":1},\"vertex_count\":4,\"degree\":1,\"edges\":[[0,1],[2,3]]}\n"
        );
    }

    #[test]
    fn graphml_counts() {
        let s = to_graphml(&build(3, 0));
        assert_eq!(s.matches("<node ").count(), 3);
        assert_eq!(s.matches("<edge ").count(), 3);
        assert_eq!("graphml".parse::<Format>().unwrap(), Format::GraphMl);
        assert!("svg".parse::<Format>().is_err());
    }
}
