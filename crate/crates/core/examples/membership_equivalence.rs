//! Fractional schedules versus cone membership, and integral schedules
//! versus monoid membership, over every small instance of four teams and
//! every day multiset on the octahedron.

use hapcone::bfactor::scenarios::{run_scenario, ScenarioOptions};
use hapcone::budget::Budget;

fn main() -> hapcone::Result<()> {
    let report = run_scenario("equivalence", &Budget::seconds(600), &ScenarioOptions::default())?;
    print!("{report}");
    Ok(())
}
