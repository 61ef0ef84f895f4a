//! Structural witnesses inside diameter-2 graphs: spanning-star centers,
//! central neighbor pairs, singletons, cliqueless points, complete
//! multipartite structure, Moore graphs, and the cliqueless-hamlet
//! property checklist.

use crate::error::Error;
use crate::graph::{Dist, Graph, Vertex};
use crate::span;

/// Aggregate of the cheap structural detectors, as carried in reports.
#[derive(Clone, Debug)]
pub struct StructureWitnesses {
    /// Vertices adjacent to every other vertex.
    pub star_centers: Vec<Vertex>,
    /// Adjacent pairs whose neighborhoods cover the whole graph.
    pub central_pairs: Vec<(Vertex, Vertex)>,
    /// Degree-one vertices.
    pub singletons: Vec<Vertex>,
    /// Vertices on no triangle.
    pub cliqueless_points: Vec<Vertex>,
    /// Vertices all of whose neighbors are cliqueless.
    pub cliqueless_neighborhood_points: Vec<Vertex>,
    /// The unique partition into independent parts with all cross edges,
    /// when the graph is complete multipartite.
    pub multipartite_parts: Option<Vec<Vec<Vertex>>>,
    pub moore: bool,
}

/// Outcome of the degree-one check on a diameter-2 graph.
#[derive(Clone, Debug)]
pub struct SingletonCheck {
    pub singletons: Vec<Vertex>,
    /// True when there are no singletons, or the graph has exactly one
    /// spanning-star center and every singleton hangs off it.
    pub anchored_to_center: bool,
}

/// Existence status of a Moore graph of diameter two at a given order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MooreStatus {
    /// Not a Moore graph of diameter two.
    No,
    /// One of the orders known to exist: 5, 10 or 50.
    Known,
    /// Order 3250, whose existence is undecided.
    Undecided,
}

/// Vertices of degree n-1.
pub fn spanning_star_centers(g: &Graph) -> Vec<Vertex> {
    let n = g.n();
    if n < 2 {
        return Vec::new();
    }
    g.vertices().filter(|&v| g.degree(v) == n - 1).collect()
}

/// Adjacent pairs `(u, v)` such that every other vertex is adjacent to `u`
/// or to `v`, in index order.
pub fn central_neighbor_pairs(g: &Graph) -> Vec<(Vertex, Vertex)> {
    g.edge_pairs()
        .into_iter()
        .filter(|&(u, v)| {
            g.neighbor_partition(u, v)
                .expect("edge endpoints differ")
                .neither
                .is_empty()
        })
        .collect()
}

/// Degree-one vertices of a diameter-2 graph, and whether they all hang off
/// a unique spanning-star center.
pub fn singleton_check(g: &Graph) -> Result<SingletonCheck, Error> {
    if g.metric_profile().diameter != Dist::Finite(2) {
        return Err(Error::NotDiameterTwo);
    }
    let singletons: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) == 1).collect();
    let anchored_to_center = if singletons.is_empty() {
        true
    } else {
        let centers = spanning_star_centers(g);
        centers.len() == 1 && singletons.iter().all(|&s| g.has_edge(s, centers[0]))
    };
    Ok(SingletonCheck {
        singletons,
        anchored_to_center,
    })
}

/// Vertices on no triangle: their neighborhood induces no edge.
pub fn cliqueless_points(g: &Graph) -> Vec<Vertex> {
    g.vertices().filter(|&v| is_cliqueless(g, v)).collect()
}

fn is_cliqueless(g: &Graph, v: Vertex) -> bool {
    let nbrs: Vec<Vertex> = g.neighbors(v).collect();
    for (i, &a) in nbrs.iter().enumerate() {
        for &b in &nbrs[i + 1..] {
            if g.has_edge(a, b) {
                return false;
            }
        }
    }
    true
}

/// Vertices all of whose neighbors are cliqueless. Such a vertex is itself
/// cliqueless; isolated vertices qualify vacuously.
pub fn cliqueless_neighborhood_points(g: &Graph) -> Vec<Vertex> {
    let cliqueless: Vec<bool> = g.vertices().map(|v| is_cliqueless(g, v)).collect();
    g.vertices()
        .filter(|&v| g.neighbors(v).all(|u| cliqueless[u.index()]))
        .collect()
}

/// Whether some vertex has a cliqueless neighborhood.
pub fn local_cliquelessness(g: &Graph) -> bool {
    !cliqueless_neighborhood_points(g).is_empty()
}

/// Recognizes complete multipartite graphs via the complement: each
/// complement component must induce a complete graph, and those components
/// are then the parts. Parts come back ordered by smallest member.
///
/// Note on the typology: a complete multipartite graph with three or more
/// parts is a cliquish social circle only when every part has at least two
/// members. A singleton part is a vertex adjacent to everything, which
/// drops the span to 2 and the family to coterie (or clique). Classifiers
/// report the computed span, so the two cases come apart naturally.
pub fn complete_multipartite(g: &Graph) -> Option<Vec<Vec<Vertex>>> {
    let comp = g.complement();
    let parts = comp.components();
    for part in &parts {
        let inner = comp.induced_subgraph(part);
        let k = inner.n();
        if inner.m() != k * (k - 1) / 2 {
            return None;
        }
    }
    Some(parts)
}

/// Moore graph of diameter two: regular, diameter 2, girth 5, and one of
/// the feasible orders 5, 10, 50 or 3250.
pub fn moore_status(g: &Graph) -> MooreStatus {
    let feasible = matches!(g.n(), 5 | 10 | 50 | 3250);
    if !feasible
        || !g.is_regular()
        || g.metric_profile().diameter != Dist::Finite(2)
        || span::girth(g).girth != Dist::Finite(5)
    {
        return MooreStatus::No;
    }
    if g.n() == 3250 {
        MooreStatus::Undecided
    } else {
        MooreStatus::Known
    }
}

pub fn moore_check(g: &Graph) -> bool {
    moore_status(g) != MooreStatus::No
}

/// Runs every detector once.
pub fn structure_witnesses(g: &Graph) -> StructureWitnesses {
    StructureWitnesses {
        star_centers: spanning_star_centers(g),
        central_pairs: central_neighbor_pairs(g),
        singletons: g.vertices().filter(|&v| g.degree(v) == 1).collect(),
        cliqueless_points: cliqueless_points(g),
        cliqueless_neighborhood_points: cliqueless_neighborhood_points(g),
        multipartite_parts: complete_multipartite(g),
        moore: moore_check(g),
    }
}

/// One item of the cliqueless-hamlet checklist.
#[derive(Clone, Debug)]
pub struct PropertyCheck {
    pub passed: bool,
    /// Offending vertices when the check fails.
    pub counterexample: Option<Vec<Vertex>>,
}

impl PropertyCheck {
    fn pass() -> Self {
        PropertyCheck {
            passed: true,
            counterexample: None,
        }
    }

    fn fail(witness: Vec<Vertex>) -> Self {
        PropertyCheck {
            passed: false,
            counterexample: Some(witness),
        }
    }
}

/// The six structural facts that hold in every cliqueless hamlet, checked
/// one by one with counterexamples on failure.
#[derive(Clone, Debug)]
pub struct HamletChecklist {
    /// Each endpoint of each edge keeps a private neighbor.
    pub private_neighbors: PropertyCheck,
    /// No adjacent pair shares a neighbor.
    pub no_common_neighbors: PropertyCheck,
    /// Each adjacent pair leaves some vertex uncovered.
    pub uncovered_remainder: PropertyCheck,
    /// Every edge lies on a pentagon.
    pub edge_on_pentagon: PropertyCheck,
    /// Every 4-cycle and 5-cycle is diagonal-free.
    pub open_cycles: PropertyCheck,
    /// Every neighborhood induces no edges.
    pub independent_neighborhoods: PropertyCheck,
}

impl HamletChecklist {
    pub fn all_pass(&self) -> bool {
        self.items().iter().all(|(_, c)| c.passed)
    }

    pub fn items(&self) -> [(&'static str, &PropertyCheck); 6] {
        [
            ("private_neighbors", &self.private_neighbors),
            ("no_common_neighbors", &self.no_common_neighbors),
            ("uncovered_remainder", &self.uncovered_remainder),
            ("edge_on_pentagon", &self.edge_on_pentagon),
            ("open_cycles", &self.open_cycles),
            ("independent_neighborhoods", &self.independent_neighborhoods),
        ]
    }
}

/// Cap on the exact 4/5-cycle enumeration behind the open-cycle check;
/// larger graphs are refused rather than sampled.
pub const OPEN_CYCLE_CAP: usize = 64;

/// Verifies the cliqueless-hamlet checklist on a graph of diameter 2 with
/// span 4 and girth 4; anything else is a precondition error.
pub fn cliqueless_hamlet_properties(g: &Graph) -> Result<HamletChecklist, Error> {
    if g.n() > OPEN_CYCLE_CAP {
        return Err(Error::CapExceeded {
            n: g.n(),
            cap: OPEN_CYCLE_CAP,
        });
    }
    let span = span::span_2club(g)?;
    if span.span != 4 {
        return Err(Error::NotCliquelessHamlet("span is not 4"));
    }
    if span::girth(g).girth != Dist::Finite(4) {
        return Err(Error::NotCliquelessHamlet("girth is not 4"));
    }

    let edges = g.edge_pairs();
    let mut private_neighbors = PropertyCheck::pass();
    let mut no_common_neighbors = PropertyCheck::pass();
    let mut uncovered_remainder = PropertyCheck::pass();
    for &(u, v) in &edges {
        let part = g.neighbor_partition(u, v).expect("edge endpoints differ");
        if private_neighbors.passed && (part.only_u.is_empty() || part.only_v.is_empty()) {
            private_neighbors = PropertyCheck::fail(vec![u, v]);
        }
        if no_common_neighbors.passed && !part.common.is_empty() {
            no_common_neighbors = PropertyCheck::fail(vec![u, v, part.common[0]]);
        }
        if uncovered_remainder.passed && part.neither.is_empty() {
            uncovered_remainder = PropertyCheck::fail(vec![u, v]);
        }
    }

    let pentagons = cycles_of_length(g, 5);
    let mut edge_on_pentagon = PropertyCheck::pass();
    'edges: for &(u, v) in &edges {
        for cycle in &pentagons {
            for i in 0..cycle.len() {
                let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
                if (a, b) == (u, v) || (b, a) == (u, v) {
                    continue 'edges;
                }
            }
        }
        edge_on_pentagon = PropertyCheck::fail(vec![u, v]);
        break;
    }

    let mut open_cycles = PropertyCheck::pass();
    let squares = cycles_of_length(g, 4);
    'cycles: for cycle in squares.iter().chain(pentagons.iter()) {
        let k = cycle.len();
        for i in 0..k {
            for j in (i + 2)..k {
                if (i, j) == (0, k - 1) {
                    continue; // consecutive around the cycle
                }
                if g.has_edge(cycle[i], cycle[j]) {
                    open_cycles = PropertyCheck::fail(cycle.clone());
                    break 'cycles;
                }
            }
        }
    }

    let mut independent_neighborhoods = PropertyCheck::pass();
    for v in g.vertices() {
        if !is_cliqueless(g, v) {
            independent_neighborhoods = PropertyCheck::fail(vec![v]);
            break;
        }
    }

    Ok(HamletChecklist {
        private_neighbors,
        no_common_neighbors,
        uncovered_remainder,
        edge_on_pentagon,
        open_cycles,
        independent_neighborhoods,
    })
}

/// All simple cycles of exactly `len` vertices, each reported once with its
/// smallest vertex first.
pub(crate) fn cycles_of_length(g: &Graph, len: usize) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    let n = g.n() as u32;
    let mut path: Vec<u32> = Vec::with_capacity(len);
    for start in 0..n {
        path.push(start);
        extend_cycle(g, start, len, &mut path, &mut out);
        path.pop();
    }
    out
}

fn extend_cycle(
    g: &Graph,
    start: u32,
    len: usize,
    path: &mut Vec<u32>,
    out: &mut Vec<Vec<Vertex>>,
) {
    let last = *path.last().unwrap();
    if path.len() == len {
        // Close the cycle; keep each once by orientation: second < last.
        if g.has_edge(Vertex(last), Vertex(start)) && path[1] < path[len - 1] {
            out.push(path.iter().map(|&v| Vertex(v)).collect());
        }
        return;
    }
    for v in g.neighbors(Vertex(last)) {
        // Keep `start` minimal on the cycle so each set is explored once.
        if v.0 > start && !path.contains(&v.0) {
            path.push(v.0);
            extend_cycle(g, start, len, path, out);
            path.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn star_centers_of_near_complete_graph() {
        let g = named::complete_minus_edge(6);
        let centers = spanning_star_centers(&g);
        assert_eq!(centers.len(), 4);
        assert!(!centers.contains(&g.vertex("0").unwrap()));
        assert!(!centers.contains(&g.vertex("1").unwrap()));
    }

    #[test]
    fn star_center_of_star() {
        let g = named::star(6);
        assert_eq!(spanning_star_centers(&g), vec![g.vertex("c").unwrap()]);
    }

    #[test]
    fn petersen_has_no_star_center() {
        assert!(spanning_star_centers(&named::petersen()).is_empty());
    }

    #[test]
    fn bigraph_central_pairs_are_all_cross_edges() {
        let g = named::complete_bipartite(2, 3);
        assert_eq!(central_neighbor_pairs(&g).len(), 6);
    }

    /// Two adjacent Petersen vertices cover only 8 of 10 vertices.
    #[test]
    fn petersen_has_no_central_pairs() {
        assert!(central_neighbor_pairs(&named::petersen()).is_empty());
    }

    #[test]
    fn triangle_central_pairs() {
        assert_eq!(central_neighbor_pairs(&named::complete(3)).len(), 3);
    }

    #[test]
    fn star_singletons_anchor_to_hub() {
        let g = named::star(6);
        let check = singleton_check(&g).unwrap();
        assert_eq!(check.singletons.len(), 5);
        assert!(check.anchored_to_center);
    }

    #[test]
    fn star_with_chords_keeps_singletons_anchored() {
        let g = named::star_with_chords();
        let check = singleton_check(&g).unwrap();
        assert_eq!(check.singletons.len(), 2); // l4, l5 stay degree one
        assert!(check.anchored_to_center);
    }

    #[test]
    fn bigraph_has_no_singletons() {
        let check = singleton_check(&named::complete_bipartite(2, 3)).unwrap();
        assert!(check.singletons.is_empty());
        assert!(check.anchored_to_center);
    }

    #[test]
    fn singleton_check_requires_diameter_two() {
        assert!(singleton_check(&named::path(5)).is_err());
    }

    #[test]
    fn triangle_free_graphs_are_everywhere_cliqueless() {
        let g = named::petersen();
        assert_eq!(cliqueless_points(&g).len(), 10);
        assert_eq!(cliqueless_neighborhood_points(&g).len(), 10);
    }

    #[test]
    fn complete_triangle_has_no_cliqueless_points() {
        assert!(cliqueless_points(&named::complete(3)).is_empty());
        assert!(cliqueless_neighborhood_points(&named::complete(3)).is_empty());
    }

    /// Frozen from the triangle enumeration oracle: the fixture's only
    /// triangle is {2, 3, 7}, so exactly the vertices off it are cliqueless,
    /// and only vertex 5 has all its neighbors among them.
    #[test]
    fn single_triangle_fixture_cliqueless_sets() {
        let g = named::single_triangle_seven();
        let tri = crate::testkit::triangles(&g);
        assert_eq!(tri.len(), 1);
        let on_triangle: Vec<&str> = tri[0].iter().map(|&v| g.label(v)).collect();
        assert_eq!(on_triangle, ["2", "3", "7"]);

        let labels = |vs: &[Vertex]| -> Vec<&str> { vs.iter().map(|&v| g.label(v)).collect() };
        assert_eq!(labels(&cliqueless_points(&g)), ["1", "4", "5", "6"]);
        assert_eq!(labels(&cliqueless_neighborhood_points(&g)), ["5"]);
    }

    #[test]
    fn bigraph_multipartite_parts() {
        let g = named::complete_bipartite(2, 3);
        let parts = complete_multipartite(&g).unwrap();
        assert_eq!(parts.len(), 2);
        let sizes: Vec<usize> = parts.iter().map(Vec::len).collect();
        assert_eq!(sizes, [2, 3]);
    }

    /// The octahedron's complement is three disjoint edges.
    #[test]
    fn octahedron_is_tripartite() {
        let g = named::complete_multipartite(&[2, 2, 2]);
        let parts = complete_multipartite(&g).unwrap();
        assert_eq!(parts.len(), 3);
        assert!(parts.iter().all(|p| p.len() == 2));
    }

    #[test]
    fn pentagon_is_not_multipartite() {
        assert!(complete_multipartite(&named::cycle(5)).is_none());
    }

    /// Multipartite with every part of size >= 2 lands at span 3; a
    /// singleton part dominates and pulls the span down to 2.
    #[test]
    fn multipartite_span_depends_on_part_sizes() {
        let octahedron = named::complete_multipartite(&[2, 2, 2]);
        assert_eq!(crate::span::span_2club(&octahedron).unwrap().span, 3);

        let with_singleton = named::complete_multipartite(&[1, 2, 2]);
        assert!(complete_multipartite(&with_singleton).is_some());
        assert_eq!(crate::span::span_2club(&with_singleton).unwrap().span, 2);
    }

    #[test]
    fn moore_members() {
        assert!(moore_check(&named::cycle(5)));
        assert!(moore_check(&named::petersen()));
        assert!(!moore_check(&named::complete_bipartite(2, 3))); // girth 4
        assert!(!moore_check(&named::complete(5))); // diameter 1
        assert_eq!(moore_status(&named::petersen()), MooreStatus::Known);
    }

    #[test]
    fn hoffman_singleton_is_moore() {
        let g = named::hoffman_singleton();
        assert_eq!(moore_status(&g), MooreStatus::Known);
        assert_eq!(span::girth(&g).girth, Dist::Finite(5));
        assert_eq!(g.metric_profile().diameter, Dist::Finite(2));
    }

    /// Brute-force verification of all six facts on the six-point hamlet.
    #[test]
    fn six_point_hamlet_passes_checklist() {
        let g = named::cliqueless_hamlet_six();
        let checklist = cliqueless_hamlet_properties(&g).unwrap();
        assert!(checklist.all_pass(), "{checklist:?}");

        // Independent recomputation, straight from the definitions.
        for (u, v) in g.edge_pairs() {
            let part = g.neighbor_partition(u, v).unwrap();
            assert!(!part.only_u.is_empty() && !part.only_v.is_empty());
            assert!(part.common.is_empty());
            assert!(!part.neither.is_empty());
        }
        assert!(crate::testkit::triangles(&g).is_empty());
    }

    #[test]
    fn checklist_rejects_span_three_graphs() {
        assert!(matches!(
            cliqueless_hamlet_properties(&named::complete_bipartite(3, 3)),
            Err(Error::NotCliquelessHamlet(_))
        ));
    }

    #[test]
    fn checklist_rejects_petersen() {
        // Girth 5, not 4.
        assert!(matches!(
            cliqueless_hamlet_properties(&named::petersen()),
            Err(Error::NotCliquelessHamlet(_))
        ));
    }

    #[test]
    fn checklist_refuses_oversized_graphs() {
        // The exact cycle enumeration is capped; beyond it the checklist
        // refuses instead of sampling.
        let big = named::cycle(70);
        assert!(matches!(
            cliqueless_hamlet_properties(&big),
            Err(Error::CapExceeded { n: 70, cap: 64 })
        ));
    }

    #[test]
    fn cycle_enumeration_counts() {
        // A 4-cycle has one 4-cycle; K_4 has three; the Petersen graph has
        // twelve pentagons.
        assert_eq!(cycles_of_length(&named::cycle(4), 4).len(), 1);
        assert_eq!(cycles_of_length(&named::complete(4), 4).len(), 3);
        assert_eq!(cycles_of_length(&named::petersen(), 5).len(), 12);
    }
}
