//! Maximal 2-club enumeration: vertex sets inducing connected subgraphs of
//! diameter at most two inside a larger host graph.
//!
//! 2-clubs are not hereditary (a subset of a 2-club need not be one), so the
//! search never prunes by subset reasoning. It starts from the full vertex
//! set and branches on conflicts: whenever two chosen vertices sit at
//! induced distance greater than two, any 2-club below the current set must
//! drop one of them, because removing vertices can only stretch induced
//! distances further.

use std::collections::HashSet;

use crate::error::Error;
use crate::graph::{Graph, Vertex};
use crate::typology::{self, TypologyReport};

/// A vertex set inducing a connected subgraph of diameter at most two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoClub {
    pub members: Vec<Vertex>,
    pub induced_diameter: u32,
    pub maximal: bool,
}

pub const DEFAULT_NODE_CAP: usize = 30;

/// Enumerates every maximal 2-club with at least `min_size` members.
///
/// Hosts larger than `node_cap` are refused outright; the problem is
/// exponential and a silent partial answer would be worse than none.
/// Clubs come back sorted by size descending, then by label sequence.
pub fn maximal_two_clubs(
    g: &Graph,
    min_size: usize,
    node_cap: usize,
) -> Result<Vec<TwoClub>, Error> {
    let n = g.n();
    if n > node_cap {
        return Err(Error::CapExceeded { n, cap: node_cap });
    }
    if n > 64 {
        return Err(Error::CapExceeded { n, cap: 64 });
    }
    if min_size > n {
        return Err(Error::MinSizeTooLarge { min_size, n });
    }
    if n == 0 {
        return Ok(Vec::new());
    }

    let adj: Vec<u64> = (0..n)
        .map(|u| {
            let mut mask = 0u64;
            for v in g.neighbors(Vertex(u as u32)) {
                mask |= 1 << v.0;
            }
            mask
        })
        .collect();

    let full: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };
    let mut visited = HashSet::new();
    let mut leaves = HashSet::new();
    branch(full, &adj, &mut visited, &mut leaves);

    // Maximality means no proper superset is a 2-club. One-vertex extension
    // tests are not enough (a club can be extendable only by several
    // vertices at once), but every maximal club is a leaf of the branching,
    // so it suffices to discard leaves strictly contained in another leaf.
    let mut by_size: Vec<u64> = leaves.iter().copied().filter(|&s| s != 0).collect();
    by_size.sort_by_key(|s| std::cmp::Reverse(s.count_ones()));

    let mut clubs = Vec::new();
    for (i, &set) in by_size.iter().enumerate() {
        let maximal = by_size[..i].iter().all(|&bigger| bigger & set != set);
        if !maximal {
            continue;
        }
        let members: Vec<Vertex> = (0..n as u32)
            .filter(|&v| set >> v & 1 == 1)
            .map(Vertex)
            .collect();
        if members.len() < min_size {
            continue;
        }
        // Re-verify through the graph interface, independent of the mask
        // arithmetic the search used.
        let induced = g.induced_subgraph(&members);
        let diameter = induced
            .metric_profile()
            .diameter
            .finite()
            .expect("club induces a connected subgraph");
        assert!(diameter <= 2);
        clubs.push(TwoClub {
            members,
            induced_diameter: diameter,
            maximal: true,
        });
    }

    clubs.sort_by(|a, b| {
        b.members
            .len()
            .cmp(&a.members.len())
            .then_with(|| club_labels(g, a).cmp(&club_labels(g, b)))
    });
    Ok(clubs)
}

fn club_labels(g: &Graph, club: &TwoClub) -> Vec<String> {
    let mut labels: Vec<String> = club
        .members
        .iter()
        .map(|&v| g.label(v).to_string())
        .collect();
    labels.sort();
    labels
}

/// Vertices of `set` reachable from `u` in at most two induced steps.
fn reach_two(set: u64, adj: &[u64], u: usize) -> u64 {
    let direct = adj[u] & set;
    let mut reach = 1 << u | direct;
    let mut rest = direct;
    while rest != 0 {
        let w = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        reach |= adj[w] & set;
    }
    reach
}

/// First pair of members at induced distance greater than two, lowest
/// indices first.
fn conflict(set: u64, adj: &[u64]) -> Option<(usize, usize)> {
    let mut rest = set;
    while rest != 0 {
        let u = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let far = set & !reach_two(set, adj, u);
        if far != 0 {
            return Some((u, far.trailing_zeros() as usize));
        }
    }
    None
}

fn branch(set: u64, adj: &[u64], visited: &mut HashSet<u64>, leaves: &mut HashSet<u64>) {
    if !visited.insert(set) {
        return;
    }
    match conflict(set, adj) {
        None => {
            leaves.insert(set);
        }
        Some((u, v)) => {
            branch(set & !(1 << u), adj, visited, leaves);
            branch(set & !(1 << v), adj, visited, leaves);
        }
    }
}

/// Classifies the subgraph induced by each club. Clubs are validated
/// against the host first.
pub fn classify_clubs(g: &Graph, clubs: &[TwoClub]) -> Result<Vec<TypologyReport>, Error> {
    let mut reports = Vec::with_capacity(clubs.len());
    for club in clubs {
        let mut sorted = club.members.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != club.members.len() || sorted.is_empty() {
            return Err(Error::InvalidClub(
                "members must be distinct and nonempty".to_string(),
            ));
        }
        if sorted.last().unwrap().index() >= g.n() {
            return Err(Error::InvalidClub(
                "member outside the host graph".to_string(),
            ));
        }
        let induced = g.induced_subgraph(&sorted);
        let profile = induced.metric_profile();
        match profile.diameter.finite() {
            Some(d) if d <= 2 => {}
            _ => {
                return Err(Error::InvalidClub(format!(
                    "induced diameter is {}, not a 2-club",
                    profile.diameter
                )))
            }
        }
        reports.push(typology::classify(&induced));
    }
    Ok(reports)
}
