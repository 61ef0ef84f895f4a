//! Command-line surface. Every subcommand reads an edge list or experiment
//! flags, calls into the library and prints canonical JSON (or a bare number
//! for `count-subclasses`).
//!
//! Exit codes: 0 success, 1 usage error, 2 parse or read error,
//! 3 precondition violation. Failures print one line to standard error in
//! the form `error: <kind>: <message>`.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::error::Error;
use crate::graph::{Dist, Graph};
use crate::{clubs, detect, dot, edgelist, experiments, report, span, typology};

#[derive(Parser)]
#[command(
    name = "acqnet",
    version,
    about = "Acquaintance-network analysis: span, girth and typology of diameter-2 graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

fn parse_probability(s: &str) -> Result<f64, String> {
    let p: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    if (0.0..=1.0).contains(&p) {
        Ok(p)
    } else {
        Err(format!("probability {p} is outside [0, 1]"))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Classify a graph and print its typology report
    Classify { file: PathBuf },
    /// Exact span of a diameter-2 graph, with a witness tree
    Span { file: PathBuf },
    /// Girth with a shortest-cycle witness
    Girth { file: PathBuf },
    /// Smallest spanning tree (exact up to diameter 2, a bound beyond)
    Sst {
        file: PathBuf,
        /// Write the graph as DOT with the tree edges bold
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Structural witnesses: star centers, central pairs, cliqueless points
    Detect { file: PathBuf },
    /// Enumerate maximal 2-clubs
    Clubs {
        file: PathBuf,
        /// Smallest club size to report
        #[arg(long, default_value_t = 1)]
        min_size: usize,
        /// Refuse hosts larger than this
        #[arg(long, default_value_t = clubs::DEFAULT_NODE_CAP)]
        cap: usize,
    },
    /// Fraction of binomial random graphs with diameter at most 2
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_probability)]
        p: f64,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
        /// Also write the result as a CSV row
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Census of (diameter, complement diameter) band pairs
    Census {
        #[arg(long)]
        n_max: usize,
        /// Sample this many graphs instead of sweeping exhaustively
        #[arg(long)]
        trials: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Check the minimum-degree bound: high minimum degree forces diameter 2
    Sabidussi {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        n: u64,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Number of span-girth subclasses for diameter d
    CountSubclasses {
        #[arg(long)]
        d: u32,
    },
}

/// Runs the CLI against process stdout/stderr and returns the exit code.
pub fn run_cli<I>(args: I) -> i32
where
    I: IntoIterator<Item = String>,
{
    run(args, &mut std::io::stdout(), &mut std::io::stderr())
}

/// Same as [`run_cli`] with injected output streams, for tests.
pub fn run<I, W, E>(args: I, out: &mut W, err: &mut E) -> i32
where
    I: IntoIterator<Item = String>,
    W: Write,
    E: Write,
{
    let mut full_args = vec!["acqnet".to_string()];
    full_args.extend(args);
    let cli = match Cli::try_parse_from(full_args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let _ = write!(err, "error: usage: {e}");
            return 1;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {}: {}", e.kind(), e);
            match e.kind() {
                "parse" | "io" => 2,
                _ => 3,
            }
        }
    }
}

fn load_graph(path: &Path) -> Result<Graph, Error> {
    let text = std::fs::read_to_string(path)?;
    edgelist::parse_edge_list(&text, &path.display().to_string())
}

fn write_csv(path: Option<&Path>, result: &experiments::ExperimentResult) -> Result<(), Error> {
    if let Some(path) = path {
        std::fs::write(path, report::experiment_csv(result))?;
    }
    Ok(())
}

fn dispatch<W: Write>(command: Command, out: &mut W) -> Result<(), Error> {
    match command {
        Command::Classify { file } => {
            let g = load_graph(&file)?;
            let r = typology::classify(&g);
            writeln!(out, "{}", report::emit_report(&r, &g))?;
        }
        Command::Span { file } => {
            let g = load_graph(&file)?;
            let r = span::span_2club(&g)?;
            writeln!(out, "{}", report::emit_span(&r, Dist::Finite(2), &g))?;
        }
        Command::Girth { file } => {
            let g = load_graph(&file)?;
            writeln!(out, "{}", report::emit_girth(&span::girth(&g), &g))?;
        }
        Command::Sst {
            file,
            dot: dot_path,
        } => {
            let g = load_graph(&file)?;
            let diameter = g.metric_profile().diameter;
            let r = span::spanning_tree_witness(&g)?;
            writeln!(out, "{}", report::emit_span(&r, diameter, &g))?;
            if let Some(path) = dot_path {
                let t = r.witness.graph();
                let edges: Vec<_> = t
                    .edge_pairs()
                    .iter()
                    .map(|&(u, v)| {
                        (
                            g.vertex(t.label(u)).expect("witness spans the host"),
                            g.vertex(t.label(v)).expect("witness spans the host"),
                        )
                    })
                    .collect();
                std::fs::write(&path, dot::emit_dot(&g, Some(&edges))?)?;
            }
        }
        Command::Detect { file } => {
            let g = load_graph(&file)?;
            let w = detect::structure_witnesses(&g);
            writeln!(
                out,
                "{}",
                report::emit_witnesses(&w, detect::moore_status(&g), &g)
            )?;
        }
        Command::Clubs {
            file,
            min_size,
            cap,
        } => {
            let g = load_graph(&file)?;
            let found = clubs::maximal_two_clubs(&g, min_size, cap)?;
            writeln!(out, "{}", report::emit_clubs(&found, &g))?;
        }
        Command::Random {
            n,
            p,
            trials,
            seed,
            csv,
        } => {
            let r = experiments::diameter2_fraction(n, p, trials, seed);
            write_csv(csv.as_deref(), &r)?;
            writeln!(out, "{}", report::emit_experiment(&r))?;
        }
        Command::Census {
            n_max,
            trials,
            seed,
            csv,
        } => {
            let mode = match trials {
                Some(trials) => experiments::CensusMode::Sampled { trials, seed },
                None => experiments::CensusMode::Exhaustive,
            };
            let r = experiments::diameter_pair_census(n_max, mode)?;
            write_csv(csv.as_deref(), &r)?;
            writeln!(out, "{}", report::emit_experiment(&r))?;
        }
        Command::Sabidussi {
            n,
            trials,
            seed,
            csv,
        } => {
            let r = experiments::sabidussi_scan(n as usize, trials, seed);
            write_csv(csv.as_deref(), &r)?;
            writeln!(out, "{}", report::emit_experiment(&r))?;
        }
        Command::CountSubclasses { d } => {
            writeln!(out, "{}", typology::subclass_count(d)?)?;
        }
    }
    Ok(())
}
