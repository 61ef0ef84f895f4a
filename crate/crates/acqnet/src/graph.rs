//! Immutable simple undirected graphs with the metric queries the rest of
//! the crate builds on: distances, eccentricities, neighborhoods, components,
//! cutpoints, complement and induced subgraphs.
//!
//! Vertices carry external string labels. Labels are mapped to dense indices
//! at construction time; all algorithms work on indices and the report layer
//! translates back. A [`Vertex`] is only meaningful for the graph that issued
//! it.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use crate::error::Error;

/// Dense index of a vertex inside one particular [`Graph`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Vertex(pub u32);

impl Vertex {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A graph distance or metric value; `Infinite` marks disconnected pairs.
///
/// The derived ordering puts every finite value below `Infinite`, so `min`
/// and `max` behave the way the metric definitions expect.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Dist {
    Finite(u32),
    Infinite,
}

impl Dist {
    pub fn is_finite(self) -> bool {
        matches!(self, Dist::Finite(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Dist::Finite(d) => Some(d),
            Dist::Infinite => None,
        }
    }
}

impl fmt::Display for Dist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dist::Finite(d) => write!(f, "{d}"),
            Dist::Infinite => write!(f, "inf"),
        }
    }
}

// Reports render infinity as the string "inf"; finite values stay numbers.
impl serde::Serialize for Dist {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Dist::Finite(d) => s.serialize_u32(*d),
            Dist::Infinite => s.serialize_str("inf"),
        }
    }
}

/// Per-vertex eccentricities together with radius, diameter and the set of
/// radial points (vertices of minimum eccentricity).
#[derive(Clone, Debug)]
pub struct MetricProfile {
    pub eccentricity: Vec<Dist>,
    pub radius: Dist,
    pub diameter: Dist,
    pub radial_center: Vec<Vertex>,
}

/// The four-way split of `V \ {u, v}` by adjacency to an ordered pair:
/// adjacent to both, to `u` only, to `v` only, or to neither.
#[derive(Clone, Debug)]
pub struct NeighborPartition {
    pub common: Vec<Vertex>,
    pub only_u: Vec<Vertex>,
    pub only_v: Vec<Vertex>,
    pub neither: Vec<Vertex>,
}

/// Exact degree of every vertex plus the minimum and maximum.
#[derive(Clone, Debug)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub min: usize,
    pub max: usize,
}

/// Immutable simple undirected graph: no loops, no multi-edges.
///
/// Construction validates the input; afterwards every operation is a pure
/// function, so a `Graph` can be shared freely across threads.
#[derive(Clone, Debug)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, u32>,
    adj: Vec<Vec<u32>>,
    edges: HashSet<(u32, u32)>,
}

impl PartialEq for Graph {
    /// Structural equality: same label sequence, same edge set.
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from distinct labels and label pairs.
    ///
    /// Duplicate edges collapse silently; self-loops, repeated labels and
    /// edge endpoints that were never declared are errors.
    pub fn build<L, A, B>(
        labels: impl IntoIterator<Item = L>,
        edges: &[(A, B)],
    ) -> Result<Graph, Error>
    where
        L: Into<String>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), i as u32).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        let mut g = Graph {
            adj: vec![Vec::new(); labels.len()],
            edges: HashSet::new(),
            labels,
            index,
        };
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let u = *g
                .index
                .get(a)
                .ok_or_else(|| Error::UnknownVertex(a.to_string()))?;
            let v = *g
                .index
                .get(b)
                .ok_or_else(|| Error::UnknownVertex(b.to_string()))?;
            if u == v {
                return Err(Error::SelfLoop(a.to_string()));
            }
            g.insert_edge(u, v);
        }
        g.sort_adjacency();
        Ok(g)
    }

    /// Builds from index pairs; labelled `"0"`, `"1"`, ... in order.
    /// Used by generators that already work with dense indices.
    pub(crate) fn from_index_edges(n: usize, edges: impl IntoIterator<Item = (u32, u32)>) -> Graph {
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i as u32))
            .collect();
        let mut g = Graph {
            adj: vec![Vec::new(); n],
            edges: HashSet::new(),
            labels,
            index,
        };
        for (u, v) in edges {
            debug_assert!(u != v && (u as usize) < n && (v as usize) < n);
            g.insert_edge(u, v);
        }
        g.sort_adjacency();
        g
    }

    fn insert_edge(&mut self, u: u32, v: u32) {
        let key = (u.min(v), u.max(v));
        if self.edges.insert(key) {
            self.adj[u as usize].push(v);
            self.adj[v as usize].push(u);
        }
    }

    fn sort_adjacency(&mut self) {
        for nbrs in &mut self.adj {
            nbrs.sort_unstable();
        }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        (0..self.labels.len() as u32).map(Vertex)
    }

    /// Resolves a label; the returned handle is valid for this graph only.
    pub fn vertex(&self, label: &str) -> Result<Vertex, Error> {
        self.index
            .get(label)
            .map(|&i| Vertex(i))
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v.index()]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v.index()].len()
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v.index()].iter().map(|&u| Vertex(u))
    }

    pub(crate) fn neighbor_indices(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edges.contains(&(u.0.min(v.0), u.0.max(v.0)))
    }

    /// All edges as vertex pairs `(u, v)` with `u < v`, sorted by index.
    pub fn edge_pairs(&self) -> Vec<(Vertex, Vertex)> {
        let mut pairs: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| (Vertex(u), Vertex(v)))
            .collect();
        pairs.sort_unstable();
        pairs
    }

    /// The graph on the same vertices where a pair is adjacent exactly when
    /// it is not adjacent here. An involution.
    pub fn complement(&self) -> Graph {
        let n = self.labels.len() as u32;
        let mut g = Graph {
            labels: self.labels.clone(),
            index: self.index.clone(),
            adj: vec![Vec::new(); n as usize],
            edges: HashSet::new(),
        };
        for u in 0..n {
            for v in (u + 1)..n {
                if !self.edges.contains(&(u, v)) {
                    g.insert_edge(u, v);
                }
            }
        }
        g.sort_adjacency();
        g
    }

    /// Breadth-first distances from `src`; `u32::MAX` marks unreachable.
    pub(crate) fn bfs_distances(&self, src: u32) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.labels.len()];
        let mut queue = VecDeque::new();
        dist[src as usize] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize];
            for &v in &self.adj[u as usize] {
                if dist[v as usize] == u32::MAX {
                    dist[v as usize] = du + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Length of a shortest path between `u` and `v`; infinite across
    /// components; zero when `u == v`.
    pub fn distance(&self, u: Vertex, v: Vertex) -> Dist {
        let dist = self.bfs_distances(u.0);
        match dist[v.index()] {
            u32::MAX => Dist::Infinite,
            d => Dist::Finite(d),
        }
    }

    /// All-pairs metric summary. Disconnected graphs get infinite radius and
    /// diameter, and every vertex then counts as radial.
    pub fn metric_profile(&self) -> MetricProfile {
        let n = self.labels.len();
        if n == 0 {
            return MetricProfile {
                eccentricity: Vec::new(),
                radius: Dist::Finite(0),
                diameter: Dist::Finite(0),
                radial_center: Vec::new(),
            };
        }
        let mut eccentricity = Vec::with_capacity(n);
        for u in 0..n as u32 {
            let dist = self.bfs_distances(u);
            let ecc = dist
                .iter()
                .map(|&d| {
                    if d == u32::MAX {
                        Dist::Infinite
                    } else {
                        Dist::Finite(d)
                    }
                })
                .max()
                .unwrap();
            eccentricity.push(ecc);
        }
        let radius = *eccentricity.iter().min().unwrap();
        let diameter = *eccentricity.iter().max().unwrap();
        let radial_center = (0..n as u32)
            .filter(|&u| eccentricity[u as usize] == radius)
            .map(Vertex)
            .collect();
        MetricProfile {
            eccentricity,
            radius,
            diameter,
            radial_center,
        }
    }

    /// Vertices at distance exactly `i` from `u`, in index order.
    /// `i = 0` gives `{u}` itself.
    pub fn neighborhood(&self, u: Vertex, i: u32) -> Vec<Vertex> {
        let dist = self.bfs_distances(u.0);
        (0..self.labels.len() as u32)
            .filter(|&v| dist[v as usize] == i)
            .map(Vertex)
            .collect()
    }

    /// Splits the remaining vertices by adjacency to the pair `(u, v)`.
    pub fn neighbor_partition(&self, u: Vertex, v: Vertex) -> Result<NeighborPartition, Error> {
        if u == v {
            return Err(Error::SamePair(self.label(u).to_string()));
        }
        let mut part = NeighborPartition {
            common: Vec::new(),
            only_u: Vec::new(),
            only_v: Vec::new(),
            neither: Vec::new(),
        };
        for w in self.vertices() {
            if w == u || w == v {
                continue;
            }
            match (self.has_edge(w, u), self.has_edge(w, v)) {
                (true, true) => part.common.push(w),
                (true, false) => part.only_u.push(w),
                (false, true) => part.only_v.push(w),
                (false, false) => part.neither.push(w),
            }
        }
        Ok(part)
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let n = self.labels.len();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for start in 0..n as u32 {
            if seen[start as usize] {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([start]);
            seen[start as usize] = true;
            while let Some(u) = queue.pop_front() {
                comp.push(Vertex(u));
                for &v in &self.adj[u as usize] {
                    if !seen[v as usize] {
                        seen[v as usize] = true;
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Cutpoints of a connected graph: the vertices whose removal disconnects
    /// it. Computed with an iterative lowpoint search.
    pub fn cutpoints(&self) -> Result<Vec<Vertex>, Error> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let n = self.labels.len();
        if n == 0 {
            return Ok(Vec::new());
        }
        let mut order = vec![u32::MAX; n]; // discovery time
        let mut low = vec![u32::MAX; n];
        let mut is_cut = vec![false; n];
        let mut timer = 1u32;

        // Explicit stack of (vertex, parent, next-neighbor offset).
        let mut stack: Vec<(u32, u32, usize)> = Vec::new();
        let root = 0u32;
        let mut root_children = 0usize;
        order[0] = 0;
        low[0] = 0;
        stack.push((root, u32::MAX, 0));
        while let Some(&mut (u, parent, ref mut next)) = stack.last_mut() {
            if *next < self.adj[u as usize].len() {
                let v = self.adj[u as usize][*next];
                *next += 1;
                if order[v as usize] == u32::MAX {
                    order[v as usize] = timer;
                    low[v as usize] = timer;
                    timer += 1;
                    if u == root {
                        root_children += 1;
                    }
                    stack.push((v, u, 0));
                } else if v != parent {
                    low[u as usize] = low[u as usize].min(order[v as usize]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p as usize] = low[p as usize].min(low[u as usize]);
                    if p != root && low[u as usize] >= order[p as usize] {
                        is_cut[p as usize] = true;
                    }
                }
            }
        }
        is_cut[root as usize] = root_children >= 2;
        Ok((0..n as u32)
            .filter(|&u| is_cut[u as usize])
            .map(Vertex)
            .collect())
    }

    /// Point subgraph on `s`: the listed vertices together with every edge of
    /// this graph joining two of them. Duplicates in `s` collapse; the result
    /// keeps the original relative vertex order and labels.
    pub fn induced_subgraph(&self, s: &[Vertex]) -> Graph {
        let mut keep: Vec<u32> = s.iter().map(|v| v.0).collect();
        keep.sort_unstable();
        keep.dedup();
        let mut remap = HashMap::with_capacity(keep.len());
        let mut labels = Vec::with_capacity(keep.len());
        for (new, &old) in keep.iter().enumerate() {
            remap.insert(old, new as u32);
            labels.push(self.labels[old as usize].clone());
        }
        let index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i as u32))
            .collect();
        let mut g = Graph {
            adj: vec![Vec::new(); keep.len()],
            edges: HashSet::new(),
            labels,
            index,
        };
        for &(u, v) in &self.edges {
            if let (Some(&nu), Some(&nv)) = (remap.get(&u), remap.get(&v)) {
                g.insert_edge(nu, nv);
            }
        }
        g.sort_adjacency();
        g
    }

    /// Exact degrees with minimum and maximum; both zero on the empty graph.
    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        let min = degrees.iter().copied().min().unwrap_or(0);
        let max = degrees.iter().copied().max().unwrap_or(0);
        DegreeProfile { degrees, min, max }
    }

    pub fn is_regular(&self) -> bool {
        let p = self.degree_profile();
        p.min == p.max
    }

    /// True when every pair of vertices is adjacent or shares a neighbor,
    /// i.e. the graph is connected with diameter at most two. Runs on packed
    /// adjacency rows, so it stays cheap for the Monte Carlo sweeps.
    pub fn diameter_at_most_two(&self) -> bool {
        let n = self.labels.len();
        let words = n.div_ceil(64);
        let mut rows = vec![0u64; n * words];
        for &(u, v) in &self.edges {
            rows[u as usize * words + (v as usize >> 6)] |= 1 << (v & 63);
            rows[v as usize * words + (u as usize >> 6)] |= 1 << (u & 63);
        }
        for u in 0..n {
            for v in (u + 1)..n {
                if rows[u * words + (v >> 6)] & (1 << (v & 63)) != 0 {
                    continue;
                }
                let ru = &rows[u * words..(u + 1) * words];
                let rv = &rows[v * words..(v + 1) * words];
                if !ru.iter().zip(rv).any(|(&a, &b)| a & b != 0) {
                    return false;
                }
            }
        }
        true
    }
}
