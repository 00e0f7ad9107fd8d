//! Certified non-B-factorizable instances on antiprisms.
//!
//! Usage: `cargo run --release --example antiprism [n ...]` (default 6 8 10 12 14).

use std::time::Instant;

use hapcone::bfactor::antiprism::antiprism_counterexample;
use hapcone::budget::Budget;

fn main() -> hapcone::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let sizes = if args.is_empty() { vec![6, 8, 10, 12, 14] } else { args };
    for n in sizes {
        let start = Instant::now();
        let cert = antiprism_counterexample(n, &Budget::seconds(600))?;
        println!("antiprism on {n} teams ({:.2?})", start.elapsed());
        if let Some(t) = &cert.twists {
            print!("{t}");
        }
        for row in cert.hap.rows() {
            println!("  {row}");
        }
        println!("  matchings per day: {:?}", cert.matchings_per_day);
        println!("  double cover of 2v: {} matchings", cert.double_cover.len());
        println!("  rational decomposition scale: {}", cert.decomposition.scale);
        println!("  schedule search: no schedule after {} nodes", cert.search_nodes);
        println!("  stable set with one candidate per day: {}", cert.stable_set);
        println!("  certificate re-verified: {}", cert.verify());
    }
    Ok(())
}
