//! Tree certification and the small taxonomy of low-diameter trees: stars,
//! coupled stars and double stars, with their radial centers.

use crate::error::Error;
use crate::graph::{Dist, Graph, Vertex};

/// A graph certified connected and acyclic (`m = n - 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tree {
    graph: Graph,
}

/// Why a graph failed tree certification.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeRejection {
    Empty,
    Disconnected,
    HasCycle,
}

/// Certifies that `g` is a tree; the rejection names the failed condition.
pub fn certify_tree(g: &Graph) -> Result<Tree, TreeRejection> {
    if g.n() == 0 {
        return Err(TreeRejection::Empty);
    }
    if !g.is_connected() {
        return Err(TreeRejection::Disconnected);
    }
    if g.m() != g.n() - 1 {
        // Connected with n-1 edges is acyclic; connected with more has a cycle.
        return Err(TreeRejection::HasCycle);
    }
    Ok(Tree { graph: g.clone() })
}

/// Shape classes keyed by tree diameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeKind {
    /// One or two vertices: diameter 0 or 1.
    Trivial,
    /// Diameter 2: a hub adjacent to every other vertex.
    Star,
    /// Diameter 3: two adjacent hubs carrying all the leaves.
    CoupledStar,
    /// Diameter 4: pruning the endpoints leaves a star.
    DoubleStar,
    /// Diameter 5 or more.
    Other,
}

/// Classification record: shape, radial center and radius.
///
/// The radial center of a tree is a single vertex for even diameter and a
/// pair of adjacent vertices for odd diameter.
#[derive(Clone, Debug)]
pub struct TreeClass {
    pub kind: TreeKind,
    pub radial_center: Vec<Vertex>,
    pub radius: u32,
}

impl Tree {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Tree diameter; finite because trees are connected.
    pub fn diameter(&self) -> u32 {
        match self.graph.metric_profile().diameter {
            Dist::Finite(d) => d,
            Dist::Infinite => unreachable!("trees are connected"),
        }
    }

    /// Degree-one vertices.
    pub fn endpoints(&self) -> Vec<Vertex> {
        self.graph
            .vertices()
            .filter(|&v| self.graph.degree(v) == 1)
            .collect()
    }

    /// Removes every endpoint, yielding the derived graph on the interior
    /// vertices. For a tree on three or more vertices the result is again a
    /// tree (possibly a single vertex); for exactly two it is empty.
    pub fn prune_endpoints(&self) -> Result<Graph, Error> {
        if self.n() < 2 {
            return Err(Error::NothingToPrune);
        }
        let keep: Vec<Vertex> = self
            .graph
            .vertices()
            .filter(|&v| self.graph.degree(v) != 1)
            .collect();
        Ok(self.graph.induced_subgraph(&keep))
    }

    /// Classifies the tree by its diameter and reports the radial center.
    pub fn classify(&self) -> TreeClass {
        let profile = self.graph.metric_profile();
        let diameter = profile.diameter.finite().expect("trees are connected");
        let kind = match diameter {
            0 | 1 => TreeKind::Trivial,
            2 => TreeKind::Star,
            3 => TreeKind::CoupledStar,
            4 => TreeKind::DoubleStar,
            _ => TreeKind::Other,
        };
        TreeClass {
            kind,
            radial_center: profile.radial_center,
            radius: profile.radius.finite().expect("trees are connected"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::unlabeled_trees;
    use crate::named;

    #[test]
    fn certifies_paths() {
        assert!(certify_tree(&named::path(5)).is_ok());
    }

    #[test]
    fn rejects_cycles_and_disconnected() {
        assert_eq!(
            certify_tree(&named::cycle(4)).unwrap_err(),
            TreeRejection::HasCycle
        );
        let g = Graph::build(["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("a", "c")]).unwrap();
        assert_eq!(certify_tree(&g).unwrap_err(), TreeRejection::Disconnected);
    }

    #[test]
    fn prune_star_leaves_single_point() {
        let t = certify_tree(&named::star(6)).unwrap();
        let pruned = t.prune_endpoints().unwrap();
        assert_eq!((pruned.n(), pruned.m()), (1, 0));
        assert_eq!(pruned.labels(), ["c"]);
    }

    #[test]
    fn prune_four_path_leaves_edge() {
        let t = certify_tree(&named::path(4)).unwrap();
        let pruned = t.prune_endpoints().unwrap();
        assert_eq!((pruned.n(), pruned.m()), (2, 1));
    }

    #[test]
    fn prune_five_path_leaves_three_path() {
        let t = certify_tree(&named::path(5)).unwrap();
        let pruned = t.prune_endpoints().unwrap();
        assert_eq!((pruned.n(), pruned.m()), (3, 2));
        // The remainder is itself a star on three points.
        let inner = certify_tree(&pruned).unwrap();
        assert_eq!(inner.classify().kind, TreeKind::Star);
    }

    #[test]
    fn prune_rejects_single_vertex() {
        let t = certify_tree(&Graph::build(["a"], &[] as &[(&str, &str)]).unwrap()).unwrap();
        assert!(matches!(t.prune_endpoints(), Err(Error::NothingToPrune)));
        // Two vertices are both endpoints; pruning leaves nothing.
        let two = certify_tree(&named::path(2)).unwrap();
        assert_eq!(two.prune_endpoints().unwrap().n(), 0);
    }

    #[test]
    fn classify_star() {
        let t = certify_tree(&named::star(6)).unwrap();
        let class = t.classify();
        assert_eq!(class.kind, TreeKind::Star);
        assert_eq!(class.radius, 1);
        assert_eq!(class.radial_center, vec![t.graph().vertex("c").unwrap()]);
    }

    #[test]
    fn classify_coupled_star() {
        let t = certify_tree(&named::coupled_star(9)).unwrap();
        let class = t.classify();
        assert_eq!(class.kind, TreeKind::CoupledStar);
        assert_eq!(class.radius, 2);
        let g = t.graph();
        assert_eq!(
            class.radial_center,
            vec![g.vertex("h1").unwrap(), g.vertex("h2").unwrap()]
        );
        assert!(g.has_edge(class.radial_center[0], class.radial_center[1]));
    }

    #[test]
    fn classify_double_star() {
        let t = certify_tree(&named::double_star(11)).unwrap();
        let class = t.classify();
        assert_eq!(class.kind, TreeKind::DoubleStar);
        assert_eq!(class.radius, 2);
        assert_eq!(class.radial_center, vec![t.graph().vertex("c").unwrap()]);
    }

    #[test]
    fn classify_trivial_trees() {
        let one = certify_tree(&Graph::build(["a"], &[] as &[(&str, &str)]).unwrap()).unwrap();
        assert_eq!(one.classify().kind, TreeKind::Trivial);
        let two = certify_tree(&named::path(2)).unwrap();
        assert_eq!(two.classify().kind, TreeKind::Trivial);
    }

    /// Radial-center parity over every tree with up to 10 vertices: even
    /// diameter 2k gives a unique radial point at radius k; odd diameter
    /// 2k+1 gives two adjacent radial points at radius k+1.
    #[test]
    fn radial_center_parity_exhaustive() {
        for n in 1..=10 {
            for small in unlabeled_trees(n) {
                let g = small.to_graph();
                let t = certify_tree(&g).unwrap();
                let class = t.classify();
                let d = t.diameter();
                if d.is_multiple_of(2) {
                    assert_eq!(class.radial_center.len(), 1, "even diameter, n = {n}");
                    assert_eq!(class.radius, d / 2);
                } else {
                    assert_eq!(class.radial_center.len(), 2, "odd diameter, n = {n}");
                    assert!(g.has_edge(class.radial_center[0], class.radial_center[1]));
                    assert_eq!(class.radius, d.div_ceil(2));
                }
            }
        }
    }

    /// Every longest path of a tree passes through all its radial points.
    #[test]
    fn longest_paths_contain_radial_center() {
        for n in 2..=10 {
            for small in unlabeled_trees(n) {
                let g = small.to_graph();
                let t = certify_tree(&g).unwrap();
                let class = t.classify();
                let d = t.diameter();
                // Tree paths are unique, so walking the BFS parents of each
                // diameter pair enumerates every longest path.
                for a in g.vertices() {
                    let dist = crate::testkit::floyd_warshall(&g);
                    for b in g.vertices() {
                        if dist[a.index()][b.index()] != Some(d) {
                            continue;
                        }
                        let path = tree_path(&g, a, b);
                        for &c in &class.radial_center {
                            assert!(path.contains(&c));
                        }
                    }
                }
            }
        }
    }

    fn tree_path(g: &Graph, a: Vertex, b: Vertex) -> Vec<Vertex> {
        // Walk back from b along any shortest route; unique in a tree.
        let mut dist = vec![u32::MAX; g.n()];
        let mut parent = vec![u32::MAX; g.n()];
        let mut queue = std::collections::VecDeque::from([a]);
        dist[a.index()] = 0;
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                if dist[v.index()] == u32::MAX {
                    dist[v.index()] = dist[u.index()] + 1;
                    parent[v.index()] = u.0;
                    queue.push_back(v);
                }
            }
        }
        let mut path = vec![b];
        let mut cur = b;
        while cur != a {
            cur = Vertex(parent[cur.index()]);
            path.push(cur);
        }
        path
    }

    /// Shape classes need minimum sizes: coupled stars four points, double
    /// stars five.
    #[test]
    fn shape_minimum_sizes() {
        for n in 1..=10 {
            for small in unlabeled_trees(n) {
                let t = certify_tree(&small.to_graph()).unwrap();
                match t.classify().kind {
                    TreeKind::Star => assert!(n >= 3),
                    TreeKind::CoupledStar => assert!(n >= 4),
                    TreeKind::DoubleStar => assert!(n >= 5),
                    _ => {}
                }
            }
        }
    }

    /// The diameter criterion and the pruning definition agree: diameter 3
    /// trees prune to a single edge, diameter 4 trees prune to a star.
    #[test]
    fn pruning_agrees_with_diameter_classes() {
        for n in 2..=10 {
            for small in unlabeled_trees(n) {
                let g = small.to_graph();
                let t = certify_tree(&g).unwrap();
                let pruned = t.prune_endpoints().unwrap();
                match t.classify().kind {
                    TreeKind::Star => assert_eq!((pruned.n(), pruned.m()), (1, 0)),
                    TreeKind::CoupledStar => assert_eq!((pruned.n(), pruned.m()), (2, 1)),
                    TreeKind::DoubleStar => {
                        let inner = certify_tree(&pruned).unwrap();
                        assert!(inner.n() >= 3);
                        assert_eq!(inner.classify().kind, TreeKind::Star);
                    }
                    _ => {}
                }
            }
        }
    }
}
