//! Maximal 2-club mining inside a host network, with per-club
//! classification of the induced communities.
//!
//! ```bash
//! cargo run -p acqnet --example mine_clubs
//! ```

use acqnet::graph::Graph;
use acqnet::{clubs, named, typology};

fn main() {
    // A hamlet with a pendant member: the pendant stretches the whole
    // graph past diameter 2, but the hamlet survives inside as a club.
    let hamlet = named::cliqueless_hamlet_six();
    let mut labels: Vec<String> = hamlet.labels().to_vec();
    labels.push("pendant".to_string());
    let mut edges: Vec<(String, String)> = hamlet
        .edge_pairs()
        .iter()
        .map(|&(u, v)| (hamlet.label(u).to_string(), hamlet.label(v).to_string()))
        .collect();
    edges.push(("1".to_string(), "pendant".to_string()));
    let host = Graph::build(labels, &edges).unwrap();

    let report = typology::classify(&host);
    println!(
        "host: n = {}, diameter = {}, family = {}",
        report.n,
        report.diameter,
        report.family.as_str()
    );

    let found = clubs::maximal_two_clubs(&host, 2, clubs::DEFAULT_NODE_CAP).unwrap();
    let classified = clubs::classify_clubs(&host, &found).unwrap();
    println!("maximal 2-clubs of size >= 2:");
    for (club, r) in found.iter().zip(&classified) {
        let mut members: Vec<&str> = club.members.iter().map(|&v| host.label(v)).collect();
        members.sort_unstable();
        println!(
            "  {{{}}} — induced diameter {}, {}{}",
            members.join(", "),
            club.induced_diameter,
            r.family.as_str(),
            r.cell.map_or(String::new(), |(t, g)| format!(" ({t},{g})")),
        );
    }
}
