//! Tour of the span-girth typology over stock graphs.
//!
//! ```bash
//! cargo run -p acqnet --example classify
//! ```

use acqnet::graph::Graph;
use acqnet::{named, report, typology};

fn main() {
    let zoo: Vec<(&str, Graph)> = vec![
        ("complete K6", named::complete(6)),
        ("star S6", named::star(6)),
        ("K6 minus an edge", named::complete_minus_edge(6)),
        ("bowtie", named::bowtie()),
        (
            "octahedron K(2,2,2)",
            named::complete_multipartite(&[2, 2, 2]),
        ),
        ("complete bigraph K(2,3)", named::complete_bipartite(2, 3)),
        ("pentagon C5", named::cycle(5)),
        ("six-point hamlet", named::cliqueless_hamlet_six()),
        ("Petersen", named::petersen()),
        ("path P5", named::path(5)),
    ];

    println!(
        "{:<24} {:>7} {:>5} {:>5} {:>6}  family",
        "graph", "n/m", "span", "girth", "cell"
    );
    for (name, g) in &zoo {
        let r = typology::classify(g);
        let span = r.span.map_or("-".to_string(), |t| t.to_string());
        let cell = r
            .cell
            .map_or("-".to_string(), |(t, gg)| format!("({t},{gg})"));
        println!(
            "{:<24} {:>7} {:>5} {:>5} {:>6}  {}{}",
            name,
            format!("{}/{}", r.n, r.m),
            span,
            r.girth,
            cell,
            r.family.as_str(),
            if r.moore { " (moore)" } else { "" },
        );
    }

    let hamlet = named::cliqueless_hamlet_six();
    println!("\nfull report for the six-point hamlet:");
    println!(
        "{}",
        report::emit_report(&typology::classify(&hamlet), &hamlet)
    );
}
