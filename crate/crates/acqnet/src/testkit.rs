//! Independent oracles used by the unit tests. Everything here recomputes
//! results by brute force, deliberately avoiding the production code paths
//! it is used to check.

use crate::graph::{Graph, Vertex};

/// All-pairs shortest paths by Floyd-Warshall; `None` marks unreachable.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<u32>>> {
    let n = g.n();
    let mut dist = vec![vec![None; n]; n];
    for (i, row) in dist.iter_mut().enumerate() {
        row[i] = Some(0);
    }
    for (u, v) in g.edge_pairs() {
        dist[u.index()][v.index()] = Some(1);
        dist[v.index()][u.index()] = Some(1);
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (dist[i][k], dist[k][j]) {
                    if dist[i][j].is_none_or(|d| d > a + b) {
                        dist[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    dist
}

/// Isomorphism by exhaustive search over all vertex bijections.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.m() != b.m() {
        return false;
    }
    let n = a.n();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let ok = a.edge_pairs().iter().all(|&(u, v)| {
            b.has_edge(
                Vertex(perm[u.index()] as u32),
                Vertex(perm[v.index()] as u32),
            )
        });
        if ok {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Cutpoints by definition: remove each vertex and count components.
pub fn cutpoints_by_removal(g: &Graph) -> Vec<Vertex> {
    let before = g.components().len();
    g.vertices()
        .filter(|&v| {
            let rest: Vec<Vertex> = g.vertices().filter(|&u| u != v).collect();
            if rest.is_empty() {
                return false;
            }
            g.induced_subgraph(&rest).components().len() > before
        })
        .collect()
}

/// Girth by exhaustive subset search: a vertex set carries a shortest cycle
/// exactly when it induces a connected 2-regular subgraph (shortest cycles
/// have no chords).
pub fn girth_by_subsets(g: &Graph) -> Option<usize> {
    let n = g.n();
    assert!(n <= 16);
    let verts: Vec<Vertex> = g.vertices().collect();
    let mut best: Option<usize> = None;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size < 3 || best.is_some_and(|b| size >= b) {
            continue;
        }
        let subset: Vec<Vertex> = (0..n)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| verts[i])
            .collect();
        let h = g.induced_subgraph(&subset);
        if h.is_connected() && h.vertices().all(|v| h.degree(v) == 2) {
            best = Some(size);
        }
    }
    best
}

/// Spanning-tree diameter minimum by direct enumeration of all edge subsets
/// of size n-1. Exponential; fine for the tiny graphs the tests feed it.
pub fn span_by_edge_subsets(g: &Graph) -> Option<u32> {
    let n = g.n();
    if !g.is_connected() {
        return None;
    }
    if n <= 1 {
        return Some(0);
    }
    let edges = g.edge_pairs();
    let m = edges.len();
    assert!(m <= 20);
    let mut best: Option<u32> = None;
    for mask in 0u32..(1 << m) {
        if mask.count_ones() as usize != n - 1 {
            continue;
        }
        let subset: Vec<(Vertex, Vertex)> = (0..m)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| edges[i])
            .collect();
        let labels: Vec<String> = g.labels().to_vec();
        let pairs: Vec<(String, String)> = subset
            .iter()
            .map(|&(u, v)| (g.label(u).to_string(), g.label(v).to_string()))
            .collect();
        let t = Graph::build(labels, &pairs).unwrap();
        if !t.is_connected() {
            continue;
        }
        let d = t.metric_profile().diameter.finite().unwrap();
        if best.is_none_or(|b| d < b) {
            best = Some(d);
        }
    }
    best
}

/// All triangles of the graph, as sorted vertex triples.
pub fn triangles(g: &Graph) -> Vec<[Vertex; 3]> {
    let n = g.n() as u32;
    let mut out = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            for w in (v + 1)..n {
                let (a, b, c) = (Vertex(u), Vertex(v), Vertex(w));
                if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}
