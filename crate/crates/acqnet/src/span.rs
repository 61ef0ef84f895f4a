//! Span and girth of a connected graph.
//!
//! The span is the smallest diameter over all spanning trees. For graphs of
//! diameter two it takes one of the values 2, 3, 4 and admits a closed-form
//! test ([`span_2club`]); for anything connected there is a layered-tree
//! upper bound within a factor two ([`bfs_spanning_tree`]) and an exhaustive
//! oracle capped at small sizes ([`span_bruteforce`]).

use crate::error::Error;
use crate::graph::{Dist, Graph, Vertex};
use crate::tree::{certify_tree, Tree};

/// How a [`SpanResult`] was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpanMethod {
    /// Exact closed form for diameter-2 graphs.
    ClosedFormTwoClub,
    /// Layered tree from a radial point: an upper-bound certificate within
    /// twice the diameter, not necessarily the minimum.
    BfsBound,
    /// Exhaustive minimum over all spanning trees.
    BruteForce,
}

/// A spanning tree together with the span value it witnesses.
///
/// The witness spans the whole input and its diameter equals `span`. For
/// `ClosedFormTwoClub` and `BruteForce` that value is the exact span; for
/// `BfsBound` it is an upper bound.
#[derive(Clone, Debug)]
pub struct SpanResult {
    pub span: u32,
    pub witness: Tree,
    pub method: SpanMethod,
}

/// Girth (length of a shortest cycle) with a witness cycle; infinite, with
/// no witness, on acyclic graphs.
#[derive(Clone, Debug)]
pub struct GirthResult {
    pub girth: Dist,
    pub witness_cycle: Option<Vec<Vertex>>,
}

/// Layered spanning tree from `root`: every vertex at distance i keeps
/// exactly one edge to distance i-1 (the lowest-indexed such neighbor) and
/// all other edges are cut. The resulting tree has diameter at most twice
/// the eccentricity of the root.
pub fn bfs_spanning_tree(g: &Graph, root: Vertex) -> Result<Tree, Error> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let dist = g.bfs_distances(root.0);
    let mut edges = Vec::with_capacity(g.n().saturating_sub(1));
    for v in g.vertices() {
        if v == root {
            continue;
        }
        let dv = dist[v.index()];
        let parent = g
            .neighbors(v)
            .find(|u| dist[u.index()] + 1 == dv)
            .expect("every non-root vertex has a neighbor one layer up");
        edges.push((g.label(parent).to_string(), g.label(v).to_string()));
    }
    let tree = Graph::build(g.labels().to_vec(), &edges).expect("layered edges are valid");
    Ok(certify_tree(&tree).expect("one parent edge per non-root vertex forms a tree"))
}

/// Exact span of a diameter-2 graph, with a witness tree.
///
/// Span 2 exactly when some vertex is adjacent to all others (the witness is
/// that spanning star); otherwise span 3 exactly when some adjacent pair
/// covers the whole graph with its neighborhoods (the witness is a coupled
/// star on the pair); otherwise span 4 (the witness is a layered tree from a
/// radial point). Ties break toward the lowest vertex index.
pub fn span_2club(g: &Graph) -> Result<SpanResult, Error> {
    let profile = g.metric_profile();
    if profile.diameter != Dist::Finite(2) {
        return Err(Error::NotDiameterTwo);
    }
    let n = g.n();

    // Span 2: spanning star.
    if let Some(center) = g.vertices().find(|&v| g.degree(v) == n - 1) {
        let edges: Vec<(String, String)> = g
            .vertices()
            .filter(|&v| v != center)
            .map(|v| (g.label(center).to_string(), g.label(v).to_string()))
            .collect();
        let star = Graph::build(g.labels().to_vec(), &edges).unwrap();
        let witness = certify_tree(&star).expect("spanning star is a tree");
        debug_assert_eq!(witness.diameter(), 2);
        return Ok(SpanResult {
            span: 2,
            witness,
            method: SpanMethod::ClosedFormTwoClub,
        });
    }

    // Span 3: a central pair, two adjacent vertices covering everything.
    if let Some((u, v)) = central_pair(g) {
        let mut edges = vec![(g.label(u).to_string(), g.label(v).to_string())];
        for w in g.vertices() {
            if w == u || w == v {
                continue;
            }
            let hub = if g.has_edge(w, u) { u } else { v };
            edges.push((g.label(hub).to_string(), g.label(w).to_string()));
        }
        let coupled = Graph::build(g.labels().to_vec(), &edges).unwrap();
        let witness = certify_tree(&coupled).expect("coupled star is a tree");
        // Neither hub can carry all the leaves, or it would be a spanning star.
        debug_assert_eq!(witness.diameter(), 3);
        return Ok(SpanResult {
            span: 3,
            witness,
            method: SpanMethod::ClosedFormTwoClub,
        });
    }

    // Span 4: layered tree from the first radial point.
    let root = profile.radial_center[0];
    let witness = bfs_spanning_tree(g, root)?;
    debug_assert_eq!(witness.diameter(), 4);
    Ok(SpanResult {
        span: 4,
        witness,
        method: SpanMethod::ClosedFormTwoClub,
    })
}

/// First adjacent pair (in index order) whose neighborhoods cover the whole
/// vertex set, if any.
fn central_pair(g: &Graph) -> Option<(Vertex, Vertex)> {
    for (u, v) in g.edge_pairs() {
        let part = g.neighbor_partition(u, v).expect("edge endpoints differ");
        if part.neither.is_empty() {
            return Some((u, v));
        }
    }
    None
}

/// Upper-bound certificate for any connected graph: a layered tree from the
/// lowest-indexed radial point, of diameter at most twice the radius.
pub fn span_bfs_bound(g: &Graph) -> Result<SpanResult, Error> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() == 0 {
        return Err(Error::Disconnected);
    }
    let root = g.metric_profile().radial_center[0];
    let witness = bfs_spanning_tree(g, root)?;
    Ok(SpanResult {
        span: witness.diameter(),
        witness,
        method: SpanMethod::BfsBound,
    })
}

/// Best available spanning tree for a connected graph: a spanning star for
/// diameter at most one, the exact closed form for diameter two, and the
/// layered bound beyond that.
pub fn spanning_tree_witness(g: &Graph) -> Result<SpanResult, Error> {
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    match g.metric_profile().diameter {
        Dist::Finite(d) if d <= 1 => {
            // Complete graph: a spanning star is already a smallest tree.
            let hub = Vertex(0);
            let edges: Vec<(String, String)> = g
                .vertices()
                .skip(1)
                .map(|v| (g.label(hub).to_string(), g.label(v).to_string()))
                .collect();
            let star = Graph::build(g.labels().to_vec(), &edges).unwrap();
            let witness = certify_tree(&star).expect("spanning star is a tree");
            Ok(SpanResult {
                span: witness.diameter(),
                witness,
                method: SpanMethod::ClosedFormTwoClub,
            })
        }
        Dist::Finite(2) => span_2club(g),
        _ => span_bfs_bound(g),
    }
}

pub const DEFAULT_SPAN_CAP: usize = 9;

/// Exact span by exhaustive search over all spanning trees.
///
/// Backtracks over edges in index order, keeping a rollback union-find for
/// the chosen forest and pruning branches that can no longer connect the
/// graph. Refuses graphs larger than `cap` (and 16 outright).
pub fn span_bruteforce(g: &Graph, cap: usize) -> Result<u32, Error> {
    let n = g.n();
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    if n > 16 {
        return Err(Error::CapExceeded { n, cap: 16 });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if n <= 2 {
        return Ok(n.saturating_sub(1) as u32);
    }

    let edges: Vec<(u8, u8)> = g
        .edge_pairs()
        .iter()
        .map(|&(u, v)| (u.0 as u8, v.0 as u8))
        .collect();
    let mut avail = [0u16; 16];
    for &(u, v) in &edges {
        avail[u as usize] |= 1 << v;
        avail[v as usize] |= 1 << u;
    }

    let mut search = SpanSearch {
        n,
        edges,
        avail,
        tree: [0u16; 16],
        dsu_parent: (0..16u8).collect::<Vec<_>>().try_into().unwrap(),
        dsu_size: [1u8; 16],
        best: u32::MAX,
    };
    search.run(0, 0);
    Ok(search.best)
}

struct SpanSearch {
    n: usize,
    edges: Vec<(u8, u8)>,
    avail: [u16; 16],
    tree: [u16; 16],
    dsu_parent: [u8; 16],
    dsu_size: [u8; 16],
    best: u32,
}

impl SpanSearch {
    fn find(&self, mut x: u8) -> u8 {
        while self.dsu_parent[x as usize] != x {
            x = self.dsu_parent[x as usize];
        }
        x
    }

    fn connected_via_avail(&self) -> bool {
        let full = (1u16 << self.n) - 1;
        let mut reach: u16 = 1;
        loop {
            let mut next = reach;
            let mut rest = reach;
            while rest != 0 {
                let u = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                next |= self.avail[u];
            }
            if next == reach {
                return reach == full;
            }
            reach = next;
        }
    }

    fn tree_diameter(&self) -> u32 {
        let (far, _) = self.farthest_from(0);
        let (_, d) = self.farthest_from(far);
        d
    }

    fn farthest_from(&self, s: usize) -> (usize, u32) {
        let mut frontier: u16 = 1 << s;
        let mut seen = frontier;
        let mut last = frontier;
        let mut depth = 0u32;
        loop {
            let mut next: u16 = 0;
            let mut rest = frontier;
            while rest != 0 {
                let u = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                next |= self.tree[u];
            }
            next &= !seen;
            if next == 0 {
                let v = 15 - last.leading_zeros() as usize;
                return (v, depth);
            }
            seen |= next;
            last = next;
            frontier = next;
            depth += 1;
        }
    }

    fn run(&mut self, idx: usize, chosen: usize) {
        // A spanning tree on three or more vertices has diameter at least 2.
        if self.best <= 2 {
            return;
        }
        if chosen == self.n - 1 {
            self.best = self.best.min(self.tree_diameter());
            return;
        }
        if idx == self.edges.len() || chosen + (self.edges.len() - idx) < self.n - 1 {
            return;
        }
        let (u, v) = self.edges[idx];

        // Include the edge if it joins two components.
        let (ru, rv) = (self.find(u), self.find(v));
        if ru != rv {
            let (big, small) = if self.dsu_size[ru as usize] >= self.dsu_size[rv as usize] {
                (ru, rv)
            } else {
                (rv, ru)
            };
            self.dsu_parent[small as usize] = big;
            self.dsu_size[big as usize] += self.dsu_size[small as usize];
            self.tree[u as usize] |= 1 << v;
            self.tree[v as usize] |= 1 << u;

            self.run(idx + 1, chosen + 1);

            self.tree[u as usize] &= !(1 << v);
            self.tree[v as usize] &= !(1 << u);
            self.dsu_size[big as usize] -= self.dsu_size[small as usize];
            self.dsu_parent[small as usize] = small;
        }

        // Skip the edge if the rest can still connect everything.
        self.avail[u as usize] &= !(1 << v);
        self.avail[v as usize] &= !(1 << u);
        if self.connected_via_avail() {
            self.run(idx + 1, chosen);
        }
        self.avail[u as usize] |= 1 << v;
        self.avail[v as usize] |= 1 << u;
    }
}

/// Shortest-cycle search: one breadth-first pass per root; every non-tree
/// adjacency closes a cycle through the branching point of the two parent
/// chains. The minimum over all roots is the girth, and the first shortest
/// cycle found (roots and neighbors in index order) is the witness.
pub fn girth(g: &Graph) -> GirthResult {
    let n = g.n();
    let mut best: Option<Vec<u32>> = None;

    'roots: for root in 0..n as u32 {
        let mut dist = vec![u32::MAX; n];
        let mut parent = vec![u32::MAX; n];
        let mut queue = std::collections::VecDeque::from([root]);
        dist[root as usize] = 0;
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbor_indices(u) {
                if dist[v as usize] == u32::MAX {
                    dist[v as usize] = dist[u as usize] + 1;
                    parent[v as usize] = u;
                    queue.push_back(v);
                    continue;
                }
                if v == parent[u as usize] || parent[v as usize] == u {
                    continue;
                }
                let cycle = close_cycle(&parent, u, v);
                if best.as_ref().is_none_or(|b| cycle.len() < b.len()) {
                    let len = cycle.len();
                    best = Some(cycle);
                    if len == 3 {
                        break 'roots;
                    }
                }
            }
        }
    }

    match best {
        None => GirthResult {
            girth: Dist::Infinite,
            witness_cycle: None,
        },
        Some(cycle) => GirthResult {
            girth: Dist::Finite(cycle.len() as u32),
            witness_cycle: Some(normalize_cycle(cycle)),
        },
    }
}

/// Joins the parent chains of `u` and `v` at their branching point and closes
/// them with the edge `(u, v)`, yielding a simple cycle.
fn close_cycle(parent: &[u32], u: u32, v: u32) -> Vec<u32> {
    let chain = |mut x: u32| {
        let mut out = vec![x];
        while parent[x as usize] != u32::MAX {
            x = parent[x as usize];
            out.push(x);
        }
        out
    };
    let up_u = chain(u);
    let up_v = chain(v);
    let in_u: std::collections::HashSet<u32> = up_u.iter().copied().collect();
    let meet = *up_v
        .iter()
        .find(|x| in_u.contains(x))
        .expect("chains share the root");

    let mut cycle: Vec<u32> = up_u.iter().copied().take_while(|&x| x != meet).collect();
    cycle.push(meet);
    let tail: Vec<u32> = up_v.iter().copied().take_while(|&x| x != meet).collect();
    cycle.extend(tail.into_iter().rev());
    cycle
}

/// Rotates the cycle to start at its smallest vertex and fixes the direction
/// toward the smaller neighbor, for stable output.
fn normalize_cycle(cycle: Vec<u32>) -> Vec<Vertex> {
    let k = cycle.len();
    let start = (0..k).min_by_key(|&i| cycle[i]).unwrap();
    let fwd = cycle[(start + 1) % k];
    let bwd = cycle[(start + k - 1) % k];
    let mut out = Vec::with_capacity(k);
    if fwd <= bwd {
        for i in 0..k {
            out.push(Vertex(cycle[(start + i) % k]));
        }
    } else {
        for i in 0..k {
            out.push(Vertex(cycle[(start + k - i) % k]));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate;
    use crate::named;

    fn verify_witness(g: &Graph, r: &SpanResult) {
        let t = r.witness.graph();
        assert_eq!(t.labels(), g.labels(), "witness must span the input");
        assert_eq!(t.m(), g.n() - 1);
        for (u, v) in t.edge_pairs() {
            assert!(
                g.has_edge(g.vertex(t.label(u)).unwrap(), g.vertex(t.label(v)).unwrap()),
                "witness edge missing from host"
            );
        }
        assert_eq!(r.witness.diameter(), r.span);
    }

    #[test]
    fn layered_tree_of_star_is_the_star() {
        let g = named::star(6);
        let t = bfs_spanning_tree(&g, g.vertex("c").unwrap()).unwrap();
        assert_eq!(t.graph(), &g);
    }

    /// Both layered trees of a 6-cycle (the only parent choice is at the
    /// antipode) are 6-vertex paths of diameter 5.
    #[test]
    fn layered_trees_of_six_cycle() {
        let g = named::cycle(6);
        let t = bfs_spanning_tree(&g, g.vertex("0").unwrap()).unwrap();
        assert_eq!(t.diameter(), 5);
        // The other parent choice for the antipodal vertex.
        let alt = Graph::build(
            g.labels().to_vec(),
            &[("0", "1"), ("0", "5"), ("1", "2"), ("5", "4"), ("4", "3")],
        )
        .unwrap();
        assert_eq!(certify_tree(&alt).unwrap().diameter(), 5);
    }

    #[test]
    fn layered_tree_of_petersen_within_bound() {
        let g = named::petersen();
        for root in g.vertices() {
            let t = bfs_spanning_tree(&g, root).unwrap();
            assert!(t.diameter() <= 4); // twice the eccentricity
        }
    }

    #[test]
    fn layered_tree_rejects_disconnected() {
        let g = Graph::build(["a", "b"], &[] as &[(&str, &str)]).unwrap();
        assert!(matches!(
            bfs_spanning_tree(&g, g.vertex("a").unwrap()),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn near_complete_graph_has_span_two() {
        let g = named::complete_minus_edge(6);
        let r = span_2club(&g).unwrap();
        assert_eq!(r.span, 2);
        verify_witness(&g, &r);
    }

    #[test]
    fn complete_bigraph_has_span_three() {
        let g = named::complete_bipartite(2, 3);
        let r = span_2club(&g).unwrap();
        assert_eq!(r.span, 3);
        verify_witness(&g, &r);
        assert_eq!(span_bruteforce(&g, DEFAULT_SPAN_CAP).unwrap(), 3);
    }

    #[test]
    fn petersen_has_span_four() {
        let g = named::petersen();
        let r = span_2club(&g).unwrap();
        assert_eq!(r.span, 4);
        verify_witness(&g, &r);
        assert_eq!(span_bruteforce(&g, 10).unwrap(), 4);
    }

    #[test]
    fn span_closed_form_rejects_wrong_diameter() {
        assert!(matches!(
            span_2club(&named::path(5)),
            Err(Error::NotDiameterTwo)
        ));
        assert!(matches!(
            span_2club(&named::complete(4)),
            Err(Error::NotDiameterTwo)
        ));
    }

    #[test]
    fn bruteforce_span_of_tree_is_its_diameter() {
        let g = named::double_star(7);
        assert_eq!(span_bruteforce(&g, DEFAULT_SPAN_CAP).unwrap(), 4);
    }

    #[test]
    fn bruteforce_span_of_six_cycle() {
        // Every spanning tree of a cycle is a Hamiltonian path.
        assert_eq!(
            span_bruteforce(&named::cycle(6), DEFAULT_SPAN_CAP).unwrap(),
            5
        );
    }

    #[test]
    fn bruteforce_span_of_complete_graph() {
        assert_eq!(
            span_bruteforce(&named::complete(4), DEFAULT_SPAN_CAP).unwrap(),
            2
        );
    }

    #[test]
    fn bruteforce_enforces_cap() {
        let g = named::petersen();
        assert!(matches!(
            span_bruteforce(&g, DEFAULT_SPAN_CAP),
            Err(Error::CapExceeded { n: 10, cap: 9 })
        ));
    }

    #[test]
    fn bruteforce_rejects_disconnected() {
        let g = Graph::build(["a", "b", "c"], &[("a", "b")]).unwrap();
        assert!(matches!(span_bruteforce(&g, 9), Err(Error::Disconnected)));
    }

    /// Independent route: enumerate (n-1)-subsets of edges directly.
    #[test]
    fn bruteforce_agrees_with_subset_enumeration() {
        for n in 2..=5 {
            for small in enumerate::all_graphs(n) {
                let g = small.to_graph();
                if !g.is_connected() {
                    continue;
                }
                assert_eq!(
                    span_bruteforce(&g, 9).unwrap(),
                    crate::testkit::span_by_edge_subsets(&g).unwrap()
                );
            }
        }
    }

    /// Closed form equals the exhaustive oracle on every diameter-2 graph
    /// with up to 6 vertices (the acceptance suite pushes this to 8).
    #[test]
    fn closed_form_matches_oracle_small() {
        for n in 3..=6 {
            for small in enumerate::unlabeled_connected_graphs(n) {
                if small.diameter() != Some(2) {
                    continue;
                }
                let g = small.to_graph();
                let r = span_2club(&g).unwrap();
                assert_eq!(r.span, span_bruteforce(&g, 9).unwrap());
                verify_witness(&g, &r);
            }
        }
    }

    /// Span lies between the diameter and twice the diameter.
    #[test]
    fn span_bound_small() {
        for n in 2..=6 {
            for small in enumerate::unlabeled_connected_graphs(n) {
                let g = small.to_graph();
                let d = g.metric_profile().diameter.finite().unwrap();
                let t = span_bruteforce(&g, 9).unwrap();
                assert!(d <= t && t <= 2 * d, "n = {n}, d = {d}, span = {t}");
            }
        }
    }

    #[test]
    fn bfs_bound_is_within_twice_radius() {
        for n in 2..=6 {
            for small in enumerate::unlabeled_connected_graphs(n) {
                let g = small.to_graph();
                let r = span_bfs_bound(&g).unwrap();
                let radius = g.metric_profile().radius.finite().unwrap();
                assert!(r.span <= 2 * radius);
                assert_eq!(r.witness.diameter(), r.span);
            }
        }
    }

    #[test]
    fn girth_of_complete_bigraph_is_four() {
        let r = girth(&named::complete_bipartite(2, 3));
        assert_eq!(r.girth, Dist::Finite(4));
        check_cycle_witness(&named::complete_bipartite(2, 3), &r);
    }

    #[test]
    fn girth_of_petersen_is_five() {
        let g = named::petersen();
        let r = girth(&g);
        assert_eq!(r.girth, Dist::Finite(5));
        check_cycle_witness(&g, &r);
    }

    #[test]
    fn girth_of_star_is_infinite() {
        let r = girth(&named::star(6));
        assert_eq!(r.girth, Dist::Infinite);
        assert!(r.witness_cycle.is_none());
    }

    fn check_cycle_witness(g: &Graph, r: &GirthResult) {
        let cycle = r.witness_cycle.as_ref().unwrap();
        assert_eq!(cycle.len() as u32, r.girth.finite().unwrap());
        let mut sorted = cycle.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), cycle.len(), "witness repeats a vertex");
        for i in 0..cycle.len() {
            assert!(g.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]));
        }
    }

    /// Breadth-first girth equals the exhaustive subset oracle.
    #[test]
    fn girth_matches_subset_oracle_small() {
        for n in 1..=6 {
            for small in enumerate::unlabeled_graphs(n) {
                let g = small.to_graph();
                let r = girth(&g);
                let expected = crate::testkit::girth_by_subsets(&g);
                assert_eq!(r.girth.finite().map(|d| d as usize), expected);
                if expected.is_some() {
                    check_cycle_witness(&g, &r);
                }
            }
        }
    }
}
