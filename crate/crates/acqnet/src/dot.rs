//! DOT export for undirected graphs, with optional bold highlighting of a
//! spanning tree or any other edge subset.

use crate::error::Error;
use crate::graph::{Graph, Vertex};

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Renders the graph as DOT text. Vertices appear in label order and edges
/// in label-pair order, so output is deterministic. Every highlight edge
/// must exist in the graph.
pub fn emit_dot(g: &Graph, highlight: Option<&[(Vertex, Vertex)]>) -> Result<String, Error> {
    let mut bold = std::collections::HashSet::new();
    if let Some(edges) = highlight {
        for &(u, v) in edges {
            if !g.has_edge(u, v) {
                return Err(Error::HighlightEdgeMissing(
                    g.label(u).to_string(),
                    g.label(v).to_string(),
                ));
            }
            let (a, b) = ordered(g, u, v);
            bold.insert((a, b));
        }
    }

    let mut labels: Vec<&str> = g.labels().iter().map(String::as_str).collect();
    labels.sort_unstable();

    let mut edges: Vec<(String, String)> = g
        .edge_pairs()
        .iter()
        .map(|&(u, v)| ordered(g, u, v))
        .collect();
    edges.sort();

    let mut out = String::from("graph G {\n");
    for label in labels {
        out.push_str(&format!("  \"{}\";\n", escape(label)));
    }
    for (a, b) in edges {
        let style = if bold.contains(&(a.clone(), b.clone())) {
            " [style=bold]"
        } else {
            ""
        };
        out.push_str(&format!(
            "  \"{}\" -- \"{}\"{};\n",
            escape(&a),
            escape(&b),
            style
        ));
    }
    out.push_str("}\n");
    Ok(out)
}

fn ordered(g: &Graph, u: Vertex, v: Vertex) -> (String, String) {
    let (a, b) = (g.label(u), g.label(v));
    if a <= b {
        (a.to_string(), b.to_string())
    } else {
        (b.to_string(), a.to_string())
    }
}
