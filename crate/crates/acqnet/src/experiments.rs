//! Randomized and exhaustive sweeps: binomial random graphs, the
//! diameter-2 fraction, the diameter/complement-diameter census, and the
//! minimum-degree bound scan.
//!
//! Randomness is fully deterministic: a 64-bit master seed is split per
//! trial with SplitMix64 and each trial runs its own PCG stream, so trials
//! are order-independent and reproducible across platforms.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_pcg::Pcg64Mcg;
use serde::Serialize;

use crate::error::Error;
use crate::graph::{Dist, Graph};

/// Aggregate outcome of one experiment run.
#[derive(Clone, Debug, Serialize)]
pub struct ExperimentResult {
    pub name: String,
    pub parameters: BTreeMap<String, String>,
    pub counts: BTreeMap<String, u64>,
    pub rate: Option<f64>,
    pub seed: Option<u64>,
    pub trials: u64,
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e3779b97f4a7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d049bb133111eb);
    x ^ (x >> 31)
}

/// Seed for trial `index` under `master`; two mixing rounds keep nearby
/// indices uncorrelated.
fn trial_seed(master: u64, index: u64) -> u64 {
    splitmix64(master ^ splitmix64(index.wrapping_add(1)))
}

fn trial_rng(master: u64, index: u64) -> Pcg64Mcg {
    Pcg64Mcg::seed_from_u64(trial_seed(master, index))
}

/// Binomial random graph: each of the n(n-1)/2 pairs is an edge
/// independently with probability `p`. Identical `(n, p, seed)` always
/// yields the identical graph.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = Pcg64Mcg::seed_from_u64(seed);
    sample_graph(n, p, &mut rng)
}

/// One uniform draw per pair, compared against `p`; with a shared generator
/// state this couples the samples monotonically across edge probabilities.
fn sample_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in (u + 1)..n as u32 {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_index_edges(n, edges)
}

/// Fraction of sampled graphs with diameter at most two.
pub fn diameter2_fraction(n: usize, p: f64, trials: u64, seed: u64) -> ExperimentResult {
    let mut hits = 0u64;
    for t in 0..trials {
        let g = sample_graph(n, p, &mut trial_rng(seed, t));
        if g.diameter_at_most_two() {
            hits += 1;
        }
    }
    let mut counts = BTreeMap::new();
    counts.insert("diameter_le_2".to_string(), hits);
    counts.insert("diameter_gt_2".to_string(), trials - hits);
    ExperimentResult {
        name: "diameter2_fraction".to_string(),
        parameters: BTreeMap::from([
            ("n".to_string(), n.to_string()),
            ("p".to_string(), p.to_string()),
        ]),
        counts,
        rate: Some(hits as f64 / trials as f64),
        seed: Some(seed),
        trials,
    }
}

/// Diameter band of a graph or its complement, as used by the census grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DiameterBand {
    One,
    Two,
    Three,
    AtLeastFour,
    Infinite,
}

impl DiameterBand {
    pub fn label(self) -> &'static str {
        match self {
            DiameterBand::One => "1",
            DiameterBand::Two => "2",
            DiameterBand::Three => "3",
            DiameterBand::AtLeastFour => "ge4",
            DiameterBand::Infinite => "inf",
        }
    }

    /// `None` for diameter 0 (a single vertex), which sits outside the grid.
    pub fn from_diameter(d: Dist) -> Option<DiameterBand> {
        match d {
            Dist::Finite(0) => None,
            Dist::Finite(1) => Some(DiameterBand::One),
            Dist::Finite(2) => Some(DiameterBand::Two),
            Dist::Finite(3) => Some(DiameterBand::Three),
            Dist::Finite(_) => Some(DiameterBand::AtLeastFour),
            Dist::Infinite => Some(DiameterBand::Infinite),
        }
    }
}

/// The feasible combinations of d(G) and d(complement): ten of the
/// twenty-five band pairs can occur.
pub fn band_pair_allowed(g: DiameterBand, complement: DiameterBand) -> bool {
    use DiameterBand::*;
    matches!(
        (g, complement),
        (One, Infinite)
            | (Two, Two)
            | (Two, Three)
            | (Two, AtLeastFour)
            | (Two, Infinite)
            | (Three, Two)
            | (Three, Three)
            | (AtLeastFour, Two)
            | (Infinite, One)
            | (Infinite, Two)
    )
}

pub const ALLOWED_BAND_PAIRS: usize = 10;

/// How a census sweep picks its graphs.
#[derive(Clone, Copy, Debug)]
pub enum CensusMode {
    /// Every adjacency bitmask on 2..=n_max vertices.
    Exhaustive,
    /// Randomly sampled graphs with uniform order in 2..=n_max and uniform
    /// edge probability per trial.
    Sampled { trials: u64, seed: u64 },
}

pub const CENSUS_EXHAUSTIVE_MAX: usize = 9;

/// Tallies (d(G), d(complement)) band pairs over small graphs.
///
/// Counts come back under `cell:<band>,<band>` keys; `forbidden_cells`
/// counts graphs landing outside the feasible grid (none exist); the rate
/// is the fraction of the ten feasible cells that received a witness.
/// Graphs on one vertex have diameter 0 and sit outside the grid, so the
/// sweep starts at two vertices.
pub fn diameter_pair_census(n_max: usize, mode: CensusMode) -> Result<ExperimentResult, Error> {
    let mut counts: BTreeMap<String, u64> = BTreeMap::new();
    let mut forbidden = 0u64;
    let mut seen: std::collections::HashSet<(DiameterBand, DiameterBand)> = Default::default();
    let mut trials = 0u64;

    let mut record = |a: DiameterBand, b: DiameterBand, counts: &mut BTreeMap<String, u64>| {
        *counts
            .entry(format!("cell:{},{}", a.label(), b.label()))
            .or_insert(0) += 1;
        seen.insert((a, b));
        if !band_pair_allowed(a, b) {
            forbidden += 1;
        }
    };

    match mode {
        CensusMode::Exhaustive => {
            if n_max > CENSUS_EXHAUSTIVE_MAX {
                return Err(Error::CapExceeded {
                    n: n_max,
                    cap: CENSUS_EXHAUSTIVE_MAX,
                });
            }
            for n in 2..=n_max {
                for g in crate::enumerate::all_graphs(n) {
                    let a = band_of(g.diameter());
                    let b = band_of(g.complement().diameter());
                    record(a, b, &mut counts);
                    trials += 1;
                }
            }
        }
        CensusMode::Sampled { trials: t, seed } => {
            for i in 0..t {
                let mut rng = trial_rng(seed, i);
                let n = rng.gen_range(2..=n_max.max(2));
                let p = rng.gen::<f64>();
                let g = sample_graph(n, p, &mut rng);
                let a = DiameterBand::from_diameter(g.metric_profile().diameter).expect("n >= 2");
                let b = DiameterBand::from_diameter(g.complement().metric_profile().diameter)
                    .expect("n >= 2");
                record(a, b, &mut counts);
            }
            trials = t;
        }
    }

    counts.insert("forbidden_cells".to_string(), forbidden);
    let witnessed = seen
        .iter()
        .filter(|&&(a, b)| band_pair_allowed(a, b))
        .count();
    let (seed, mode_name) = match mode {
        CensusMode::Exhaustive => (None, "exhaustive"),
        CensusMode::Sampled { seed, .. } => (Some(seed), "sampled"),
    };
    Ok(ExperimentResult {
        name: "diameter_pair_census".to_string(),
        parameters: BTreeMap::from([
            ("n_max".to_string(), n_max.to_string()),
            ("mode".to_string(), mode_name.to_string()),
        ]),
        counts,
        rate: Some(witnessed as f64 / ALLOWED_BAND_PAIRS as f64),
        seed,
        trials,
    })
}

fn band_of(d: Option<u8>) -> DiameterBand {
    match d {
        None => DiameterBand::Infinite,
        Some(d) => DiameterBand::from_diameter(Dist::Finite(d as u32))
            .expect("census skips single vertices"),
    }
}

/// Samples graphs at a uniform edge probability per trial, keeps those with
/// minimum degree at least (n-1)/2, and checks that each kept graph has
/// diameter at most two. Violations would refute the degree bound; the
/// expected count is zero.
pub fn sabidussi_scan(n: usize, trials: u64, seed: u64) -> ExperimentResult {
    let mut filtered = 0u64;
    let mut violations = 0u64;
    for t in 0..trials {
        let mut rng = trial_rng(seed, t);
        let p = rng.gen::<f64>();
        let g = sample_graph(n, p, &mut rng);
        let min_degree = g.degree_profile().min;
        // Degree condition 2*min >= n-1, written without underflow at n = 0.
        if 2 * min_degree + 1 < n {
            continue;
        }
        filtered += 1;
        if !g.diameter_at_most_two() {
            violations += 1;
        }
    }
    let counts = BTreeMap::from([
        ("sampled".to_string(), trials),
        ("filtered".to_string(), filtered),
        ("violations".to_string(), violations),
    ]);
    ExperimentResult {
        name: "sabidussi_scan".to_string(),
        parameters: BTreeMap::from([("n".to_string(), n.to_string())]),
        counts,
        rate: (filtered > 0).then(|| (filtered - violations) as f64 / filtered as f64),
        seed: Some(seed),
        trials,
    }
}
