//! Acceptance run: one line per criterion, `PASS`, `FAIL` or `UNDECIDED`.
//!
//! The K4,4 check is opt-in: set `HAPCONE_K44=1` (and optionally
//! `HAPCONE_CHECKPOINT_DIR`) to include it. An undecided K4,4 result, i.e.
//! a run that hit its budget, does not fail the suite.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hapcone::bfactor::scenarios::{run_scenario, ScenarioOptions};
use hapcone::budget::Budget;
use hapcone::report::{ScenarioReport, Status};

struct Criterion {
    number: u32,
    scenario: &'static str,
    summary: &'static str,
    limit: Duration,
}

const fn minutes(m: u64) -> Duration {
    Duration::from_secs(60 * m)
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        number: 1,
        scenario: "counts",
        summary: "10 partitions and 60 generators for 6 teams, 6 generators for 4",
        limit: Duration::from_secs(1),
    },
    Criterion {
        number: 2,
        scenario: "hilbert4",
        summary: "Hilbert basis for 4 teams has no additional generator",
        limit: Duration::from_secs(10),
    },
    Criterion {
        number: 3,
        scenario: "hilbert6",
        summary: "90 additional generators for 6 teams, one octahedral class",
        limit: minutes(120),
    },
    Criterion {
        number: 4,
        scenario: "extensions6",
        summary: "all 10 one-day extensions are schedulable",
        limit: minutes(10),
    },
    Criterion {
        number: 5,
        scenario: "halfintegral",
        summary: "rigid half-integral vertex",
        limit: minutes(1),
    },
    Criterion {
        number: 6,
        scenario: "antiprism",
        summary: "certified antiprism counterexamples, n = 6..14",
        limit: minutes(10),
    },
    Criterion {
        number: 7,
        scenario: "bfactor",
        summary: "prisms on 4 and 5 vertices and K3,3 are B-factorizable",
        limit: minutes(30),
    },
    Criterion {
        number: 8,
        scenario: "petersen",
        summary: "Petersen double cover without schedule, split of a non-member",
        limit: minutes(30),
    },
    Criterion {
        number: 9,
        scenario: "equivalence",
        summary: "fractional/cone and integral/monoid equivalences",
        limit: minutes(5),
    },
    Criterion {
        number: 10,
        scenario: "k44",
        summary: "K4,4 case split has no additional generator (opt-in)",
        limit: minutes(8 * 60),
    },
];

fn main() -> ExitCode {
    let include_k44 = std::env::var_os("HAPCONE_K44").is_some();
    let opts = ScenarioOptions {
        seed: 0,
        checkpoint_dir: std::env::var_os("HAPCONE_CHECKPOINT_DIR").map(PathBuf::from),
    };
    let mut failed = false;
    let mut reports: Vec<ScenarioReport> = Vec::new();
    for c in CRITERIA {
        if c.number == 10 && !include_k44 {
            println!("criterion 10 k44 SKIPPED (opt-in, set HAPCONE_K44=1): {}", c.summary);
            continue;
        }
        let start = Instant::now();
        let report = match run_scenario(c.scenario, &Budget::unlimited().with_time_limit(c.limit), &opts) {
            Ok(r) => r,
            Err(e) => {
                let mut r = ScenarioReport::new(c.scenario);
                r.error(&e);
                r
            }
        };
        let elapsed = start.elapsed();
        let mut status = report.status;
        if status == Status::Pass && elapsed > c.limit {
            status = Status::Fail;
        }
        println!(
            "criterion {} {} {status} ({elapsed:.2?} of {:?}): {}",
            c.number, c.scenario, c.limit, c.summary
        );
        if status != Status::Pass {
            for l in &report.lines {
                println!("    {l}");
            }
        }
        let counts = status == Status::Fail || (status == Status::Undecided && c.number != 10);
        failed |= counts;
        reports.push(report);
    }

    let certificates: usize = reports.iter().map(|r| r.certificates).sum();
    let verified: usize = reports.iter().map(|r| r.verified).sum();
    let audit = certificates > 0 && verified == certificates;
    println!(
        "criterion 11 audit {} ({verified} of {certificates} certificates re-verified)",
        if audit { Status::Pass } else { Status::Fail }
    );
    failed |= !audit;

    if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
