//! Analysis of acquaintance networks: connected graphs of diameter at most
//! two, the communities where any two members are acquainted or share an
//! acquaintance.
//!
//! The crate recognizes such graphs, computes their span (the smallest
//! diameter over all spanning trees) and girth, classifies them into the
//! span-girth typology — coteries, social circles and hamlets, cliquish or
//! cliqueless — and emits structural witnesses, canonical JSON reports and
//! DOT drawings. Experiment sweeps cover random graphs and exhaustive
//! small-graph corpora, and a 2-club miner applies the typology to
//! communities embedded in larger networks.
//!
//! # Examples
//!
//! Each major capability has a runnable example:
//!
//! - **`classify`** — the typology tour over stock graphs
//! - **`span_witness`** — spans with spanning-tree witnesses and bounds
//! - **`girth_hunt`** — shortest cycles with witnesses
//! - **`detect_structures`** — star centers, central pairs, cliqueless points,
//!   multipartite parts, Moore checks
//! - **`tree_shapes`** — stars, coupled stars and double stars
//! - **`mine_clubs`** — maximal 2-clubs in a host network, then classified
//! - **`random_sweep`** — diameter-2 fraction along a probability grid
//! - **`complement_census`** — feasible (d(G), d(complement)) pairs
//! - **`edgelist_io`** — parsing, reports and DOT export
//!
//! ```bash
//! cargo run -p acqnet --example classify
//! ```
//!
//! The same functionality is scriptable through the `acqnet` binary; see the
//! README for the subcommand and file-format reference.
//!
//! # Quick start
//!
//! ```
//! use acqnet::{named, typology};
//!
//! let report = typology::classify(&named::petersen());
//! assert_eq!(report.family, typology::Family::Hamlet);
//! assert_eq!(report.cell, Some((4, 5)));
//! assert!(report.moore);
//! ```

pub mod cli;
pub mod clubs;
pub mod detect;
pub mod dot;
pub mod edgelist;
pub mod enumerate;
mod error;
pub mod experiments;
pub mod graph;
pub mod named;
pub mod report;
pub mod span;
#[cfg(test)]
pub mod testkit;
pub mod tree;
pub mod typology;

pub use error::Error;
pub use graph::{DegreeProfile, Dist, Graph, MetricProfile, NeighborPartition, Vertex};
pub use span::{GirthResult, SpanMethod, SpanResult};
pub use tree::{Tree, TreeClass, TreeKind, TreeRejection};
pub use typology::{Cliquishness, Family, TypologyReport};
