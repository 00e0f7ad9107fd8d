//! Runs every default reproduction scenario and prints the report.

use hapcone::bfactor::scenarios::{run_scenario, ScenarioOptions, SCENARIOS};
use hapcone::budget::Budget;
use hapcone::report::exit_code;

fn main() -> hapcone::Result<()> {
    let mut reports = Vec::new();
    for &(name, slow) in SCENARIOS {
        if !slow {
            let report = run_scenario(name, &Budget::seconds(300), &ScenarioOptions::default())?;
            print!("{report}");
            reports.push(report);
        }
    }
    std::process::exit(exit_code(&reports));
}
