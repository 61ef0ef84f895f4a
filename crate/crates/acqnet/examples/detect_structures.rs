//! The structural detectors: spanning-star centers, central neighbor
//! pairs, singleton anchoring, cliqueless points, complete multipartite
//! recognition, Moore checks, and the cliqueless-hamlet checklist.
//!
//! ```bash
//! cargo run -p acqnet --example detect_structures
//! ```

use acqnet::graph::Graph;
use acqnet::{detect, named};

fn labels(g: &Graph, vs: &[acqnet::Vertex]) -> String {
    let mut out: Vec<&str> = vs.iter().map(|&v| g.label(v)).collect();
    out.sort_unstable();
    format!("{{{}}}", out.join(", "))
}

fn main() {
    let star_chords = named::star_with_chords();
    let check = detect::singleton_check(&star_chords).unwrap();
    println!(
        "star with chords: centers {}, singletons {} (anchored: {})",
        labels(&star_chords, &detect::spanning_star_centers(&star_chords)),
        labels(&star_chords, &check.singletons),
        check.anchored_to_center,
    );

    let k23 = named::complete_bipartite(2, 3);
    let pairs = detect::central_neighbor_pairs(&k23);
    println!("K(2,3): {} central pairs (every cross edge)", pairs.len());

    let fixture = named::single_triangle_seven();
    println!(
        "single-triangle fixture: cliqueless points {}, cliqueless neighborhoods {}",
        labels(&fixture, &detect::cliqueless_points(&fixture)),
        labels(&fixture, &detect::cliqueless_neighborhood_points(&fixture)),
    );

    let octahedron = named::complete_multipartite(&[2, 2, 2]);
    if let Some(parts) = detect::complete_multipartite(&octahedron) {
        let shown: Vec<String> = parts.iter().map(|p| labels(&octahedron, p)).collect();
        println!("octahedron parts: {}", shown.join(" "));
    }

    for (name, g) in [
        ("C5", named::cycle(5)),
        ("Petersen", named::petersen()),
        ("Hoffman-Singleton", named::hoffman_singleton()),
        ("K(3,3)", named::complete_bipartite(3, 3)),
    ] {
        println!("{name}: moore = {:?}", detect::moore_status(&g));
    }

    let hamlet = named::cliqueless_hamlet_six();
    let checklist = detect::cliqueless_hamlet_properties(&hamlet).unwrap();
    println!("six-point hamlet checklist:");
    for (name, item) in checklist.items() {
        println!("  {name}: {}", if item.passed { "pass" } else { "FAIL" });
    }
}
