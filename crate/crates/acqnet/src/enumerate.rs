//! Exhaustive small-graph machinery: packed adjacency graphs on up to 16
//! vertices, canonical forms under isomorphism, and generators for the
//! unlabeled corpora swept by the census and the test suites.
//!
//! The unlabeled generators work by extension: every graph arises from a
//! one-vertex-smaller graph by attaching a new vertex with some neighbor
//! set, so extending each representative with every mask and deduplicating
//! on canonical form enumerates each isomorphism class exactly once.

use std::collections::HashSet;

use crate::graph::Graph;

pub const MAX_N: usize = 16;

/// Simple graph on at most [`MAX_N`] vertices, one adjacency bitmask per
/// vertex.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SmallGraph {
    n: u8,
    adj: [u16; MAX_N],
}

impl SmallGraph {
    pub fn empty(n: usize) -> SmallGraph {
        assert!(n <= MAX_N);
        SmallGraph {
            n: n as u8,
            adj: [0; MAX_N],
        }
    }

    /// Decodes a graph from its pair bitmask: bit `v*(v-1)/2 + u` (for
    /// `u < v`) holds the adjacency of the pair `(u, v)`.
    pub fn from_pair_bits(n: usize, bits: u64) -> SmallGraph {
        let mut g = SmallGraph::empty(n);
        let mut k = 0;
        for v in 1..n {
            for u in 0..v {
                if bits >> k & 1 == 1 {
                    g.add_edge(u, v);
                }
                k += 1;
            }
        }
        g
    }

    pub fn pair_bits(&self) -> u64 {
        let n = self.n as usize;
        let mut bits = 0u64;
        let mut k = 0;
        for v in 1..n {
            for u in 0..v {
                if self.has_edge(u, v) {
                    bits |= 1 << k;
                }
                k += 1;
            }
        }
        bits
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn m(&self) -> usize {
        self.adj[..self.n as usize]
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n as usize && v < self.n as usize);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors_mask(&self, u: usize) -> u16 {
        self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones() as usize
    }

    /// Adds a fresh vertex adjacent to the vertices in `mask`.
    pub fn extend(&self, mask: u16) -> SmallGraph {
        let n = self.n as usize;
        debug_assert!(n < MAX_N && mask >> n == 0);
        let mut g = *self;
        g.n += 1;
        g.adj[n] = mask;
        let mut rest = mask;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            g.adj[u] |= 1 << n;
        }
        g
    }

    pub fn complement(&self) -> SmallGraph {
        let n = self.n as usize;
        let full = if n == 16 { u16::MAX } else { (1u16 << n) - 1 };
        let mut g = SmallGraph::empty(n);
        for u in 0..n {
            g.adj[u] = !self.adj[u] & full & !(1 << u);
        }
        g
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n as usize;
        if n <= 1 {
            return true;
        }
        let full = (1u16 << n) - 1;
        let mut reach: u16 = 1;
        loop {
            let mut next = reach;
            let mut rest = reach;
            while rest != 0 {
                let u = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                next |= self.adj[u];
            }
            if next == reach {
                return reach == full;
            }
            reach = next;
        }
    }

    /// Breadth-first distances from `s`; `u8::MAX` marks unreachable.
    pub fn distances_from(&self, s: usize) -> [u8; MAX_N] {
        let mut dist = [u8::MAX; MAX_N];
        let mut frontier: u16 = 1 << s;
        let mut seen: u16 = frontier;
        let mut level = 0u8;
        while frontier != 0 {
            let mut rest = frontier;
            while rest != 0 {
                let u = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                dist[u] = level;
            }
            let mut next: u16 = 0;
            let mut f = frontier;
            while f != 0 {
                let u = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[u];
            }
            frontier = next & !seen;
            seen |= next;
            level += 1;
        }
        dist
    }

    /// `None` when disconnected.
    pub fn diameter(&self) -> Option<u8> {
        let n = self.n as usize;
        if n == 0 {
            return Some(0);
        }
        let mut max = 0;
        for s in 0..n {
            let dist = self.distances_from(s);
            for &d in &dist[..n] {
                if d == u8::MAX {
                    return None;
                }
                max = max.max(d);
            }
        }
        Some(max)
    }

    pub fn is_triangle_free(&self) -> bool {
        let n = self.n as usize;
        for u in 0..n {
            let mut rest = self.adj[u] >> (u + 1) << (u + 1);
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if self.adj[u] & self.adj[v] != 0 {
                    return false;
                }
            }
        }
        true
    }

    pub fn diameter_at_most_two(&self) -> bool {
        let n = self.n as usize;
        for u in 0..n {
            for v in (u + 1)..n {
                if !self.has_edge(u, v) && self.adj[u] & self.adj[v] == 0 {
                    return false;
                }
            }
        }
        true
    }

    pub fn to_graph(&self) -> Graph {
        let n = self.n as usize;
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if self.has_edge(u, v) {
                    edges.push((u as u32, v as u32));
                }
            }
        }
        Graph::from_index_edges(n, edges)
    }

    /// Stable vertex coloring by iterated neighbor-color refinement,
    /// starting from degrees. Isomorphic graphs get identical color vectors
    /// up to the vertex bijection.
    fn refine_colors(&self) -> Vec<u32> {
        let n = self.n as usize;
        let mut colors: Vec<u32> = (0..n).map(|u| self.degree(u) as u32).collect();
        rank_in_place(&mut colors);
        loop {
            let sigs: Vec<(u32, Vec<u32>)> = (0..n)
                .map(|u| {
                    let mut nb = Vec::with_capacity(self.degree(u));
                    let mut rest = self.adj[u];
                    while rest != 0 {
                        let v = rest.trailing_zeros() as usize;
                        rest &= rest - 1;
                        nb.push(colors[v]);
                    }
                    nb.sort_unstable();
                    (colors[u], nb)
                })
                .collect();
            let mut uniq = sigs.clone();
            uniq.sort_unstable();
            uniq.dedup();
            let new: Vec<u32> = sigs
                .iter()
                .map(|s| uniq.binary_search(s).unwrap() as u32)
                .collect();
            if new == colors {
                return colors;
            }
            colors = new;
        }
    }

    /// Canonical representative of this graph's isomorphism class.
    ///
    /// The refinement coloring pins each vertex to a color class; the search
    /// then minimizes the relabeled adjacency over all color-preserving
    /// bijections. `best` always holds the smallest prefix seen so far padded
    /// with sentinels, so larger prefixes prune without a full descent.
    pub fn canonical_form(&self) -> SmallGraph {
        let n = self.n as usize;
        assert!(n <= 11, "canonical form is for small graphs only");
        if n <= 1 {
            return *self;
        }
        let colors = self.refine_colors();
        // Position p must receive a vertex of the p-th smallest color.
        let mut pos_color: Vec<u32> = colors.clone();
        pos_color.sort_unstable();

        let mut perm = vec![u8::MAX; n]; // position -> original vertex
        let mut used: u16 = 0;
        // Candidate adjacency rows, bits below the row index. Rows hold at
        // most 15 low bits, so the all-ones sentinel compares above any row.
        let mut best = vec![u16::MAX; n];

        fn row_less(a: u16, b: u16) -> bool {
            // Lexicographic over bit positions 0,1,...: at the lowest
            // differing bit the smaller row has a 0.
            let d = a ^ b;
            d != 0 && a & (d & d.wrapping_neg()) == 0
        }

        fn search(
            g: &SmallGraph,
            colors: &[u32],
            pos_color: &[u32],
            p: usize,
            perm: &mut Vec<u8>,
            used: &mut u16,
            best: &mut Vec<u16>,
        ) {
            let n = g.n as usize;
            if p == n {
                return;
            }
            for w in 0..n {
                if *used >> w & 1 == 1 || colors[w] != pos_color[p] {
                    continue;
                }
                let mut row: u16 = 0;
                for (q, &placed) in perm[..p].iter().enumerate() {
                    if g.has_edge(placed as usize, w) {
                        row |= 1 << q;
                    }
                }
                if row != best[p] {
                    if row_less(row, best[p]) {
                        // Strictly better prefix: commit it and forget the
                        // stale suffix of the previous best.
                        best[p] = row;
                        for b in &mut best[p + 1..] {
                            *b = u16::MAX;
                        }
                    } else {
                        continue;
                    }
                }
                perm[p] = w as u8;
                *used |= 1 << w;
                search(g, colors, pos_color, p + 1, perm, used, best);
                *used &= !(1 << w);
            }
        }

        search(
            self, &colors, &pos_color, 0, &mut perm, &mut used, &mut best,
        );

        let mut g = SmallGraph::empty(n);
        for (v, &row) in best.iter().enumerate().skip(1) {
            for u in 0..v {
                if row >> u & 1 == 1 {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }
}

fn rank_in_place(values: &mut [u32]) {
    let mut uniq: Vec<u32> = values.to_vec();
    uniq.sort_unstable();
    uniq.dedup();
    for v in values {
        *v = uniq.binary_search(v).unwrap() as u32;
    }
}

/// All labelled graphs on `n` vertices, one per adjacency bitmask.
pub fn all_graphs(n: usize) -> impl Iterator<Item = SmallGraph> {
    let pairs = n * (n - 1) / 2;
    assert!(pairs < 63, "bitmask enumeration is for small graphs only");
    (0..1u64 << pairs).map(move |bits| SmallGraph::from_pair_bits(n, bits))
}

fn dedup_insert(set: &mut HashSet<u64>, out: &mut Vec<SmallGraph>, g: SmallGraph) {
    let canon = g.canonical_form();
    if set.insert(canon.pair_bits()) {
        out.push(canon);
    }
}

fn extend_all(parents: &[SmallGraph], keep: impl Fn(&SmallGraph, u16) -> bool) -> Vec<SmallGraph> {
    let mut set = HashSet::new();
    let mut out = Vec::new();
    for parent in parents {
        let k = parent.n() as u16;
        for mask in 0..1u32 << k {
            if keep(parent, mask as u16) {
                dedup_insert(&mut set, &mut out, parent.extend(mask as u16));
            }
        }
    }
    out.sort_unstable_by_key(|g| g.pair_bits());
    out
}

fn grow(n: usize, keep: impl Fn(&SmallGraph, u16) -> bool + Copy) -> Vec<SmallGraph> {
    assert!(n >= 1);
    let mut reps = vec![SmallGraph::empty(1)];
    for _ in 2..=n {
        reps = extend_all(&reps, keep);
    }
    reps
}

/// One representative per isomorphism class of graphs on `n` vertices.
pub fn unlabeled_graphs(n: usize) -> Vec<SmallGraph> {
    grow(n, |_, _| true)
}

/// One representative per isomorphism class of connected graphs.
pub fn unlabeled_connected_graphs(n: usize) -> Vec<SmallGraph> {
    unlabeled_graphs(n)
        .into_iter()
        .filter(SmallGraph::is_connected)
        .collect()
}

/// One representative per isomorphism class of triangle-free graphs.
/// Extending a triangle-free graph stays triangle-free exactly when the new
/// vertex's neighbor set is independent.
pub fn unlabeled_triangle_free_graphs(n: usize) -> Vec<SmallGraph> {
    grow(n, |parent, mask| {
        let mut rest = mask;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if parent.neighbors_mask(u) & mask != 0 {
                return false;
            }
        }
        true
    })
}

/// One representative per isomorphism class of trees on `n` vertices,
/// generated by repeated leaf attachment.
pub fn unlabeled_trees(n: usize) -> Vec<SmallGraph> {
    assert!(n >= 1);
    let mut reps = vec![SmallGraph::empty(1)];
    for k in 2..=n {
        let mut set = HashSet::new();
        let mut out = Vec::new();
        for parent in &reps {
            for u in 0..(k - 1) {
                dedup_insert(&mut set, &mut out, parent.extend(1 << u));
            }
        }
        out.sort_unstable_by_key(|g| g.pair_bits());
        reps = out;
    }
    reps
}
