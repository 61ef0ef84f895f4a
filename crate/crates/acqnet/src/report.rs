//! Canonical JSON serialization of reports, plus CSV rows for experiment
//! sweeps. Key order is fixed by struct declaration, label sets are sorted,
//! and infinities render as the string `"inf"`, so output is byte-stable
//! across runs and platforms.

use serde::Serialize;

use crate::clubs::TwoClub;
use crate::detect::{MooreStatus, StructureWitnesses};
use crate::experiments::ExperimentResult;
use crate::graph::{Dist, Graph, Vertex};
use crate::span::{GirthResult, SpanMethod, SpanResult};
use crate::typology::TypologyReport;

fn label_of(g: &Graph, v: Vertex) -> String {
    g.label(v).to_string()
}

fn sorted_labels(g: &Graph, vs: &[Vertex]) -> Vec<String> {
    let mut out: Vec<String> = vs.iter().map(|&v| label_of(g, v)).collect();
    out.sort();
    out
}

fn sorted_pairs(g: &Graph, pairs: &[(Vertex, Vertex)]) -> Vec<[String; 2]> {
    let mut out: Vec<[String; 2]> = pairs
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (label_of(g, u), label_of(g, v));
            if a <= b {
                [a, b]
            } else {
                [b, a]
            }
        })
        .collect();
    out.sort();
    out
}

pub fn method_name(method: SpanMethod) -> &'static str {
    match method {
        SpanMethod::ClosedFormTwoClub => "closed_form_2club",
        SpanMethod::BfsBound => "bfs_bound",
        SpanMethod::BruteForce => "brute_force",
    }
}

fn moore_status_name(status: MooreStatus) -> &'static str {
    match status {
        MooreStatus::No => "no",
        MooreStatus::Known => "known",
        MooreStatus::Undecided => "undecided",
    }
}

#[derive(Serialize)]
struct ReportJson {
    n: usize,
    m: usize,
    diameter: Dist,
    radius: Dist,
    family: &'static str,
    separable: Option<bool>,
    span: Option<u32>,
    girth: Dist,
    cell: Option<[u32; 2]>,
    cliquishness: &'static str,
    star_centers: Vec<String>,
    central_pairs: Vec<[String; 2]>,
    cutpoints: Option<Vec<String>>,
    singletons: Vec<String>,
    local_cliquelessness: bool,
    moore: bool,
    sst_edges: Vec<[String; 2]>,
    notes: Vec<String>,
}

/// Canonical JSON for a typology report.
pub fn emit_report(r: &TypologyReport, g: &Graph) -> String {
    let json = ReportJson {
        n: r.n,
        m: r.m,
        diameter: r.diameter,
        radius: r.radius,
        family: r.family.as_str(),
        separable: r.separable,
        span: r.span,
        girth: r.girth,
        cell: r.cell.map(|(t, gg)| [t, gg]),
        cliquishness: r.cliquishness.as_str(),
        star_centers: sorted_labels(g, &r.witnesses.star_centers),
        central_pairs: sorted_pairs(g, &r.witnesses.central_pairs),
        cutpoints: r.cutpoints.as_ref().map(|c| sorted_labels(g, c)),
        singletons: sorted_labels(g, &r.witnesses.singletons),
        local_cliquelessness: r.local_cliquelessness,
        moore: r.moore,
        sst_edges: sorted_pairs(g, &r.sst_edges),
        notes: r.notes.clone(),
    };
    serde_json::to_string_pretty(&json).expect("report serializes")
}

#[derive(Serialize)]
struct WitnessesJson {
    star_centers: Vec<String>,
    central_pairs: Vec<[String; 2]>,
    singletons: Vec<String>,
    cliqueless_points: Vec<String>,
    cliqueless_neighborhood_points: Vec<String>,
    multipartite_parts: Option<Vec<Vec<String>>>,
    moore: bool,
    moore_status: &'static str,
}

/// Canonical JSON for the structural witness set of a graph.
pub fn emit_witnesses(w: &StructureWitnesses, status: MooreStatus, g: &Graph) -> String {
    let multipartite_parts = w.multipartite_parts.as_ref().map(|parts| {
        let mut out: Vec<Vec<String>> = parts.iter().map(|p| sorted_labels(g, p)).collect();
        out.sort();
        out
    });
    let json = WitnessesJson {
        star_centers: sorted_labels(g, &w.star_centers),
        central_pairs: sorted_pairs(g, &w.central_pairs),
        singletons: sorted_labels(g, &w.singletons),
        cliqueless_points: sorted_labels(g, &w.cliqueless_points),
        cliqueless_neighborhood_points: sorted_labels(g, &w.cliqueless_neighborhood_points),
        multipartite_parts,
        moore: w.moore,
        moore_status: moore_status_name(status),
    };
    serde_json::to_string_pretty(&json).expect("witnesses serialize")
}

#[derive(Serialize)]
struct SpanJson {
    span: u32,
    method: &'static str,
    exact: bool,
    diameter: Dist,
    witness_edges: Vec<[String; 2]>,
}

/// Canonical JSON for a span result. `exact` is false for the layered-tree
/// bound, whose value is only an upper bound on the span.
pub fn emit_span(r: &SpanResult, diameter: Dist, g: &Graph) -> String {
    let t = r.witness.graph();
    let edges: Vec<(Vertex, Vertex)> = t
        .edge_pairs()
        .iter()
        .map(|&(u, v)| {
            (
                g.vertex(t.label(u)).expect("witness spans the host"),
                g.vertex(t.label(v)).expect("witness spans the host"),
            )
        })
        .collect();
    let json = SpanJson {
        span: r.span,
        method: method_name(r.method),
        exact: r.method != SpanMethod::BfsBound,
        diameter,
        witness_edges: sorted_pairs(g, &edges),
    };
    serde_json::to_string_pretty(&json).expect("span serializes")
}

#[derive(Serialize)]
struct GirthJson {
    girth: Dist,
    witness_cycle: Option<Vec<String>>,
}

/// Canonical JSON for a girth result. The witness keeps cycle order (it is
/// a closed walk, not a set), already normalized to a fixed rotation.
pub fn emit_girth(r: &GirthResult, g: &Graph) -> String {
    let json = GirthJson {
        girth: r.girth,
        witness_cycle: r
            .witness_cycle
            .as_ref()
            .map(|cycle| cycle.iter().map(|&v| label_of(g, v)).collect()),
    };
    serde_json::to_string_pretty(&json).expect("girth serializes")
}

#[derive(Serialize)]
struct ClubJson {
    members: Vec<String>,
    size: usize,
    induced_diameter: u32,
    maximal: bool,
}

/// Canonical JSON for a club list.
pub fn emit_clubs(clubs: &[TwoClub], g: &Graph) -> String {
    let json: Vec<ClubJson> = clubs
        .iter()
        .map(|c| ClubJson {
            members: sorted_labels(g, &c.members),
            size: c.members.len(),
            induced_diameter: c.induced_diameter,
            maximal: c.maximal,
        })
        .collect();
    serde_json::to_string_pretty(&json).expect("clubs serialize")
}

/// Canonical JSON for an experiment result.
pub fn emit_experiment(r: &ExperimentResult) -> String {
    serde_json::to_string_pretty(r).expect("experiment serializes")
}

/// One CSV row per experiment: parameter columns, count columns, then rate,
/// seed and trials. Header first.
pub fn experiment_csv(r: &ExperimentResult) -> String {
    let mut header = Vec::new();
    let mut row = Vec::new();
    for (k, v) in &r.parameters {
        header.push(k.clone());
        row.push(v.clone());
    }
    for (k, v) in &r.counts {
        header.push(k.clone());
        row.push(v.to_string());
    }
    header.push("rate".to_string());
    row.push(r.rate.map_or_else(|| "".to_string(), |x| x.to_string()));
    header.push("seed".to_string());
    row.push(r.seed.map_or_else(|| "".to_string(), |s| s.to_string()));
    header.push("trials".to_string());
    row.push(r.trials.to_string());
    format!("{}\n{}\n", header.join(","), row.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{detect, named, span, typology};

    #[test]
    fn bigraph_report_fields() {
        let g = named::complete_bipartite(2, 3);
        let text = emit_report(&typology::classify(&g), &g);
        assert!(text.contains("\"family\": \"social_circle\""));
        assert!(text.contains("\"cell\": [\n    3,\n    4\n  ]"));
        assert!(text.contains("\"girth\": 4"));
    }

    #[test]
    fn star_report_renders_infinite_girth() {
        let g = named::star(6);
        let text = emit_report(&typology::classify(&g), &g);
        assert!(text.contains("\"family\": \"star\""));
        assert!(text.contains("\"girth\": \"inf\""));
        assert!(text.contains("\"separable\": true"));
    }

    #[test]
    fn path_report_is_not_acquaintance() {
        let g = named::path(5);
        let text = emit_report(&typology::classify(&g), &g);
        assert!(text.contains("\"family\": \"not_acquaintance\""));
        assert!(text.contains("\"diameter\": 4"));
        assert!(text.contains("\"span\": null"));
    }

    #[test]
    fn report_key_order_is_fixed() {
        let g = named::cycle(5);
        let text = emit_report(&typology::classify(&g), &g);
        let keys = [
            "\"n\"",
            "\"m\"",
            "\"diameter\"",
            "\"radius\"",
            "\"family\"",
            "\"separable\"",
            "\"span\"",
            "\"girth\"",
            "\"cell\"",
            "\"cliquishness\"",
            "\"star_centers\"",
            "\"central_pairs\"",
            "\"cutpoints\"",
            "\"singletons\"",
            "\"local_cliquelessness\"",
            "\"moore\"",
            "\"sst_edges\"",
            "\"notes\"",
        ];
        let mut last = 0;
        for key in keys {
            let pos = text.find(key).unwrap_or_else(|| panic!("missing {key}"));
            assert!(pos > last || last == 0, "key {key} out of order");
            last = pos;
        }
    }

    #[test]
    fn disconnected_report_nulls_connectivity_fields() {
        let g = crate::graph::Graph::build(["a", "b"], &[] as &[(&str, &str)]).unwrap();
        let text = emit_report(&typology::classify(&g), &g);
        assert!(text.contains("\"diameter\": \"inf\""));
        assert!(text.contains("\"separable\": null"));
        assert!(text.contains("\"cutpoints\": null"));
    }

    #[test]
    fn report_is_byte_stable() {
        let g = named::petersen();
        let a = emit_report(&typology::classify(&g), &g);
        let b = emit_report(&typology::classify(&g), &g);
        assert_eq!(a, b);
    }

    #[test]
    fn witnesses_json_sorts_labels() {
        let g = named::complete_bipartite(2, 3);
        let text = emit_witnesses(
            &detect::structure_witnesses(&g),
            detect::moore_status(&g),
            &g,
        );
        assert!(text.contains("\"moore_status\": \"no\""));
        let a1 = text.find("\"a1\"").unwrap();
        let b3 = text.find("\"b3\"").unwrap();
        assert!(a1 < b3);
    }

    #[test]
    fn span_json_of_bigraph() {
        let g = named::complete_bipartite(2, 3);
        let r = span::span_2club(&g).unwrap();
        let text = emit_span(&r, Dist::Finite(2), &g);
        assert!(text.contains("\"span\": 3"));
        assert!(text.contains("\"method\": \"closed_form_2club\""));
        assert!(text.contains("\"exact\": true"));
    }

    #[test]
    fn csv_shape() {
        let r = crate::experiments::diameter2_fraction(6, 0.5, 10, 3);
        let csv = experiment_csv(&r);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[0].split(',').count(), lines[1].split(',').count());
        assert!(lines[0].starts_with("n,p,"));
    }
}
