//! Spans with witnesses: the closed form on diameter-2 graphs, the
//! exhaustive spanning-tree oracle, and the layered factor-2 bound for
//! everything else.
//!
//! ```bash
//! cargo run -p acqnet --example span_witness
//! ```

use acqnet::graph::Graph;
use acqnet::{named, report, span};

fn show(name: &str, g: &Graph) {
    let r = span::span_2club(g).expect("diameter 2");
    let edges: Vec<String> = r
        .witness
        .graph()
        .edge_pairs()
        .iter()
        .map(|&(u, v)| {
            format!(
                "{}-{}",
                r.witness.graph().label(u),
                r.witness.graph().label(v)
            )
        })
        .collect();
    println!(
        "{name}: span {} via {}",
        r.span,
        report::method_name(r.method)
    );
    println!(
        "  witness tree ({} edges): {}",
        edges.len(),
        edges.join(" ")
    );
}

fn main() {
    // The three span classes of diameter-2 graphs, witnessed.
    show("K6 minus an edge", &named::complete_minus_edge(6));
    show("K(2,3)", &named::complete_bipartite(2, 3));
    show("six-point hamlet", &named::cliqueless_hamlet_six());

    // The exhaustive oracle agrees on anything small enough.
    let petersen = named::petersen();
    let exact = span::span_bruteforce(&petersen, 10).unwrap();
    let closed = span::span_2club(&petersen).unwrap().span;
    println!("\nPetersen: closed form {closed}, exhaustive search over all spanning trees {exact}");

    // Beyond diameter 2 the layered tree still certifies span <= 2*radius.
    let ring = named::cycle(6);
    let bound = span::span_bfs_bound(&ring).unwrap();
    let exact = span::span_bruteforce(&ring, 9).unwrap();
    println!(
        "C6: layered-tree bound {} (method {}), exhaustive value {}",
        bound.span,
        report::method_name(bound.method),
        exact
    );
}
