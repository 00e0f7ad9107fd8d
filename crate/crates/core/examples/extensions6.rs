//! Six teams: adding any one day to the additional generator's table,
//! with the three unused pairs playing, gives an integrally schedulable
//! instance. Also checks the half-integral point of that construction.

use hapcone::bfactor::scenarios::{run_scenario, ScenarioOptions};
use hapcone::budget::Budget;

fn main() -> hapcone::Result<()> {
    let budget = Budget::seconds(600);
    for name in ["extensions6", "halfintegral"] {
        print!("{}", run_scenario(name, &budget, &ScenarioOptions::default())?);
    }
    Ok(())
}
