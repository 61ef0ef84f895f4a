//! Monte Carlo sweeps: the diameter-2 fraction along an edge-probability
//! grid, and the minimum-degree bound scan.
//!
//! ```bash
//! cargo run -p acqnet --example random_sweep
//! ```

use acqnet::{experiments, report};

fn main() {
    let n = 30;
    let trials = 400;
    let seed = 0xace;
    println!("diameter-2 fraction at n = {n} ({trials} trials per point):");
    for p in [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7] {
        let r = experiments::diameter2_fraction(n, p, trials, seed);
        let rate = r.rate.unwrap();
        let bar = "#".repeat((rate * 40.0).round() as usize);
        println!("  p = {p:.1}  rate {rate:.3}  {bar}");
    }

    println!("\nminimum-degree bound scan (degree >= (n-1)/2 forces diameter <= 2):");
    for n in [6, 9, 12] {
        let r = experiments::sabidussi_scan(n, 2000, 0xbead);
        println!(
            "  n = {n:>2}: {} sampled, {} passed the degree filter, {} violations",
            r.counts["sampled"], r.counts["filtered"], r.counts["violations"],
        );
    }

    println!("\nfull result record for one sweep:");
    let r = experiments::diameter2_fraction(100, 0.5, 200, 0x5eed);
    println!("{}", report::emit_experiment(&r));
}
