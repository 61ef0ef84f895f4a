//! Stock graphs used throughout the examples and test suites.

use crate::graph::Graph;

/// Complete graph on `n` vertices labelled `0..n-1`.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in (u + 1)..n as u32 {
            edges.push((u, v));
        }
    }
    Graph::from_index_edges(n, edges)
}

/// Complete graph minus the edge `(0, 1)`.
pub fn complete_minus_edge(n: usize) -> Graph {
    assert!(n >= 2);
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in (u + 1)..n as u32 {
            if (u, v) != (0, 1) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_index_edges(n, edges)
}

/// Path on `n` vertices labelled `0..n-1` along the path.
pub fn path(n: usize) -> Graph {
    Graph::from_index_edges(n, (1..n as u32).map(|v| (v - 1, v)))
}

/// Cycle on `n >= 3` vertices labelled `0..n-1` around the ring.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    Graph::from_index_edges(n, (0..n as u32).map(|v| (v, (v + 1) % n as u32)))
}

/// Star on `n >= 2` vertices total: hub `c`, leaves `l1..l(n-1)`.
pub fn star(n: usize) -> Graph {
    assert!(n >= 2);
    let mut labels = vec!["c".to_string()];
    labels.extend((1..n).map(|i| format!("l{i}")));
    let edges: Vec<(String, String)> = (1..n).map(|i| ("c".to_string(), format!("l{i}"))).collect();
    Graph::build(labels, &edges).unwrap()
}

/// Coupled star on `n >= 4` vertices: adjacent hubs `h1`, `h2`, leaves
/// alternating between them. A tree of diameter 3.
pub fn coupled_star(n: usize) -> Graph {
    assert!(n >= 4);
    let mut labels = vec!["h1".to_string(), "h2".to_string()];
    let mut edges = vec![("h1".to_string(), "h2".to_string())];
    for i in 1..=(n - 2) {
        let leaf = format!("l{i}");
        let hub = if i % 2 == 1 { "h1" } else { "h2" };
        edges.push((hub.to_string(), leaf.clone()));
        labels.push(leaf);
    }
    Graph::build(labels, &edges).unwrap()
}

/// Double star on `n >= 5` vertices: center `c` with two spokes that each
/// carry one leaf, remaining leaves on the center. A tree of diameter 4.
pub fn double_star(n: usize) -> Graph {
    assert!(n >= 5);
    let mut labels: Vec<String> = ["c", "s1", "s2", "t1", "t2"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let mut edges = vec![
        ("c".to_string(), "s1".to_string()),
        ("c".to_string(), "s2".to_string()),
        ("s1".to_string(), "t1".to_string()),
        ("s2".to_string(), "t2".to_string()),
    ];
    for i in 1..=(n - 5) {
        let leaf = format!("l{i}");
        edges.push(("c".to_string(), leaf.clone()));
        labels.push(leaf);
    }
    Graph::build(labels, &edges).unwrap()
}

/// Complete bipartite graph with sides `a1..` and `b1..`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut labels = Vec::new();
    labels.extend((1..=a).map(|i| format!("a{i}")));
    labels.extend((1..=b).map(|i| format!("b{i}")));
    let mut edges = Vec::new();
    for i in 1..=a {
        for j in 1..=b {
            edges.push((format!("a{i}"), format!("b{j}")));
        }
    }
    Graph::build(labels, &edges).unwrap()
}

/// Complete multipartite graph; part `i` has vertices `p{i}v{j}`.
pub fn complete_multipartite(parts: &[usize]) -> Graph {
    let mut labels = Vec::new();
    let mut owner = Vec::new();
    for (i, &size) in parts.iter().enumerate() {
        for j in 1..=size {
            labels.push(format!("p{}v{}", i + 1, j));
            owner.push(i);
        }
    }
    let mut edges = Vec::new();
    for u in 0..labels.len() {
        for v in (u + 1)..labels.len() {
            if owner[u] != owner[v] {
                edges.push((labels[u].clone(), labels[v].clone()));
            }
        }
    }
    Graph::build(labels, &edges).unwrap()
}

/// The Petersen graph: outer pentagon `0..4`, inner pentagram `5..9`,
/// spokes in between. 3-regular, diameter 2, girth 5.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5u32 {
        edges.push((i, (i + 1) % 5)); // outer cycle
        edges.push((5 + i, 5 + (i + 2) % 5)); // inner pentagram
        edges.push((i, 5 + i)); // spokes
    }
    Graph::from_index_edges(10, edges)
}

/// The Hoffman-Singleton graph: 50 vertices, 7-regular, diameter 2,
/// girth 5. Built from five pentagons `p{h}` and five pentagrams `q{i}`
/// with vertex `p{h}.{j}` joined to `q{i}.{h*i+j mod 5}`.
pub fn hoffman_singleton() -> Graph {
    let p = |h: u32, j: u32| format!("p{h}.{j}");
    let q = |i: u32, j: u32| format!("q{i}.{j}");
    let mut labels = Vec::new();
    for h in 0..5 {
        for j in 0..5 {
            labels.push(p(h, j));
        }
    }
    for i in 0..5 {
        for j in 0..5 {
            labels.push(q(i, j));
        }
    }
    let mut edges = Vec::new();
    for h in 0..5u32 {
        for j in 0..5u32 {
            edges.push((p(h, j), p(h, (j + 1) % 5)));
            edges.push((q(h, j), q(h, (j + 2) % 5)));
        }
    }
    for h in 0..5u32 {
        for i in 0..5u32 {
            for j in 0..5u32 {
                edges.push((p(h, j), q(i, (h * i + j) % 5)));
            }
        }
    }
    Graph::build(labels, &edges).unwrap()
}

/// Two triangles sharing the vertex `c`.
pub fn bowtie() -> Graph {
    Graph::build(
        ["c", "a1", "a2", "b1", "b2"],
        &[
            ("c", "a1"),
            ("c", "a2"),
            ("a1", "a2"),
            ("c", "b1"),
            ("c", "b2"),
            ("b1", "b2"),
        ],
    )
    .unwrap()
}

/// Six-point cliqueless hamlet: pentagon `1..5` plus a sixth vertex joined
/// to `1` and `3`. Diameter 2, triangle-free, girth 4, span 4.
pub fn cliqueless_hamlet_six() -> Graph {
    Graph::build(
        ["1", "2", "3", "4", "5", "6"],
        &[
            ("1", "2"),
            ("2", "3"),
            ("3", "4"),
            ("4", "5"),
            ("5", "1"),
            ("6", "1"),
            ("6", "3"),
        ],
    )
    .unwrap()
}

/// Seven-point fixture whose only triangle is `{2, 3, 7}`: pentagon `1..5`,
/// vertex `6` joined to `{1, 3}`, vertex `7` joined to `{2, 3}`.
pub fn single_triangle_seven() -> Graph {
    Graph::build(
        ["1", "2", "3", "4", "5", "6", "7"],
        &[
            ("1", "2"),
            ("2", "3"),
            ("3", "4"),
            ("4", "5"),
            ("5", "1"),
            ("6", "1"),
            ("6", "3"),
            ("7", "2"),
            ("7", "3"),
        ],
    )
    .unwrap()
}

/// Star hub with extra edges among some of its leaves: separable, diameter
/// 2, and the remaining degree-one leaves all hang off the hub.
pub fn star_with_chords() -> Graph {
    Graph::build(
        ["c", "l1", "l2", "l3", "l4", "l5"],
        &[
            ("c", "l1"),
            ("c", "l2"),
            ("c", "l3"),
            ("c", "l4"),
            ("c", "l5"),
            ("l1", "l2"),
            ("l2", "l3"),
        ],
    )
    .unwrap()
}
