//! Equal partitions and perfect-matching generators for small team counts.
//!
//! Usage: `cargo run --example pm_counts [n ...]` (default 4 6 8).

use hapcone::combinat::{enumerate_partitions, enumerate_pm, TeamSet};

fn main() -> hapcone::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let sizes = if args.is_empty() { vec![4, 6, 8] } else { args };
    for n in sizes {
        let ts = TeamSet::new(n)?;
        let parts = enumerate_partitions(ts);
        let gens = enumerate_pm(ts);
        println!("{n} teams: {} equal partitions, {} generators", parts.len(), gens.len());
        if n == 4 {
            for g in &gens {
                println!("  {g}");
            }
        }
    }
    Ok(())
}
