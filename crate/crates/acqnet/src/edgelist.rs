//! Plain-text edge lists.
//!
//! One record per line: `<label> <label>` declares an edge, `v <label>`
//! declares an isolated vertex, `#` starts a full-line comment, blank lines
//! are skipped. Labels are whitespace-free tokens; the token `v` is reserved
//! for vertex declarations. Duplicate edges collapse; self-loops are parse
//! errors.

use std::collections::HashSet;

use crate::error::Error;
use crate::graph::Graph;

/// A parsed edge-list file, keeping first-appearance order so the
/// normalized form is reproducible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeListDocument {
    pub source_name: String,
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
}

/// Parses a document; empty documents (no vertices at all) are rejected.
pub fn parse_document(text: &str, source_name: &str) -> Result<EdgeListDocument, Error> {
    let mut vertices = Vec::new();
    let mut seen_vertices = HashSet::new();
    let mut edges = Vec::new();
    let mut seen_edges = HashSet::new();

    let mut declare = |label: &str, vertices: &mut Vec<String>| {
        if seen_vertices.insert(label.to_string()) {
            vertices.push(label.to_string());
        }
    };

    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let parse_err = |reason: String| Error::Parse {
            file: source_name.to_string(),
            line: lineno + 1,
            reason,
        };
        match tokens.as_slice() {
            ["v", label] => declare(label, &mut vertices),
            [a, b] => {
                if a == b {
                    return Err(parse_err(format!("self-loop at `{a}`")));
                }
                declare(a, &mut vertices);
                declare(b, &mut vertices);
                let key = if a < b {
                    (a.to_string(), b.to_string())
                } else {
                    (b.to_string(), a.to_string())
                };
                if seen_edges.insert(key.clone()) {
                    edges.push(key);
                }
            }
            _ => {
                return Err(parse_err(
                    "expected `v <label>` or `<label> <label>`".to_string(),
                ))
            }
        }
    }

    if vertices.is_empty() {
        return Err(Error::EmptyDocument(source_name.to_string()));
    }
    Ok(EdgeListDocument {
        source_name: source_name.to_string(),
        vertices,
        edges,
    })
}

impl EdgeListDocument {
    pub fn to_graph(&self) -> Result<Graph, Error> {
        Graph::build(self.vertices.clone(), &self.edges)
    }

    /// Canonical text form: sorted `v` lines for isolated vertices, then
    /// sorted edge lines with each pair in label order. Parsing the output
    /// and normalizing again reproduces it byte for byte.
    pub fn normalized(&self) -> String {
        let mut in_edges = HashSet::new();
        for (a, b) in &self.edges {
            in_edges.insert(a.clone());
            in_edges.insert(b.clone());
        }
        let mut isolated: Vec<&String> = self
            .vertices
            .iter()
            .filter(|x| !in_edges.contains(*x))
            .collect();
        isolated.sort();
        let mut lines: Vec<String> = isolated.iter().map(|x| format!("v {x}")).collect();
        let mut edges: Vec<(String, String)> = self
            .edges
            .iter()
            .map(|(a, b)| {
                if a < b {
                    (a.clone(), b.clone())
                } else {
                    (b.clone(), a.clone())
                }
            })
            .collect();
        edges.sort();
        lines.extend(edges.iter().map(|(a, b)| format!("{a} {b}")));
        let mut out = lines.join("\n");
        out.push('\n');
        out
    }
}

/// Straight to a graph.
pub fn parse_edge_list(text: &str, source_name: &str) -> Result<Graph, Error> {
    parse_document(text, source_name)?.to_graph()
}

/// Normalized edge-list text for a graph.
pub fn write_edge_list(g: &Graph) -> String {
    let doc = EdgeListDocument {
        source_name: String::new(),
        vertices: g.labels().to_vec(),
        edges: g
            .edge_pairs()
            .into_iter()
            .map(|(u, v)| (g.label(u).to_string(), g.label(v).to_string()))
            .collect(),
    };
    doc.normalized()
}
