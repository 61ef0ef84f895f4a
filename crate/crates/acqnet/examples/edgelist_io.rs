//! File round trip: parse an edge list, classify it, print the canonical
//! JSON report, and export DOT with the witness spanning tree in bold.
//!
//! ```bash
//! cargo run -p acqnet --example edgelist_io
//! ```

use std::path::PathBuf;

use acqnet::{dot, edgelist, report, span, typology};

fn main() {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/data/k23.edges");
    let text = std::fs::read_to_string(&path).expect("sample data ships with the crate");
    let g = edgelist::parse_edge_list(&text, "k23.edges").unwrap();

    println!("parsed {}: n = {}, m = {}\n", path.display(), g.n(), g.m());
    println!("normalized edge list:\n{}", edgelist::write_edge_list(&g));

    let r = typology::classify(&g);
    println!("report:\n{}\n", report::emit_report(&r, &g));

    let witness = span::span_2club(&g).unwrap().witness;
    let tree_edges: Vec<_> = witness
        .graph()
        .edge_pairs()
        .iter()
        .map(|&(u, v)| {
            (
                g.vertex(witness.graph().label(u)).unwrap(),
                g.vertex(witness.graph().label(v)).unwrap(),
            )
        })
        .collect();
    println!(
        "DOT with the coupled-star witness in bold:\n{}",
        dot::emit_dot(&g, Some(&tree_edges)).unwrap()
    );
}
