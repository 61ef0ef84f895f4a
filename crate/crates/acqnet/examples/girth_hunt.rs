//! Shortest cycles with witnesses, from the triangle up to the
//! girth-5 Moore graphs.
//!
//! ```bash
//! cargo run -p acqnet --example girth_hunt
//! ```

use acqnet::graph::Graph;
use acqnet::{named, span};

fn show(name: &str, g: &Graph) {
    let r = span::girth(g);
    match r.witness_cycle {
        Some(cycle) => {
            let labels: Vec<&str> = cycle.iter().map(|&v| g.label(v)).collect();
            println!("{name}: girth {} (cycle {})", r.girth, labels.join("-"));
        }
        None => println!("{name}: girth {} (acyclic)", r.girth),
    }
}

fn main() {
    show("K4", &named::complete(4));
    show("K(2,3)", &named::complete_bipartite(2, 3));
    show("pentagon C5", &named::cycle(5));
    show("six-point hamlet", &named::cliqueless_hamlet_six());
    show("Petersen", &named::petersen());
    show("Hoffman-Singleton", &named::hoffman_singleton());
    show("star S6", &named::star(6));
    show("path P5", &named::path(5));
}
