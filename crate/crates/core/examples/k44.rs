//! K4,4 in two cases, each expected to have no additional generator with
//! 0/1 edge components. Every lattice point of the unit slice is listed per
//! degree (about half a minute per case); finished degrees are stored in the
//! checkpoint directory and skipped on rerun.
//!
//! Usage: `cargo run --release --example k44 [checkpoint-dir]`

use std::path::PathBuf;

use hapcone::bfactor::scenarios::{k44_case_generators, run_scenario, ScenarioOptions};
use hapcone::budget::Budget;

fn main() -> hapcone::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "k44-checkpoints".into()));
    std::fs::create_dir_all(&dir).map_err(|e| hapcone::Error::InvalidInput(e.to_string()))?;
    let (a, b) = k44_case_generators()?;
    println!("case A: {} generators, case B: {} generators", a.len(), b.len());
    let opts = ScenarioOptions {
        checkpoint_dir: Some(dir),
        ..ScenarioOptions::default()
    };
    print!("{}", run_scenario("k44", &Budget::unlimited(), &opts)?);
    Ok(())
}
