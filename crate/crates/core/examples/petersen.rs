//! The Petersen graph: fractionally schedulable three-day tables without
//! an integral schedule, and a four-regular extension where such a vector
//! splits into two cone members.

use hapcone::bfactor::scenarios::{run_scenario, ScenarioOptions};
use hapcone::budget::Budget;

fn main() -> hapcone::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    let opts = ScenarioOptions {
        seed,
        ..ScenarioOptions::default()
    };
    let report = run_scenario("petersen", &Budget::seconds(600), &opts)?;
    print!("{report}");
    Ok(())
}
