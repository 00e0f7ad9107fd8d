use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use hapcone::bfactor::antiprism::antiprism_counterexample;
use hapcone::bfactor::scenarios::{run_scenario, ScenarioOptions, SCENARIOS};
use hapcone::bfactor::{decide_bfactor, Verdict};
use hapcone::budget::Budget;
use hapcone::combinat::{enumerate_partitions, enumerate_pm, TeamSet};
use hapcone::cone::{hilbert_basis, restricted_generators};
use hapcone::format;
use hapcone::report::{exit, exit_code, ScenarioReport};
use hapcone::schedule::{build_polytope, find_integral_schedule, fractional_feasible, FractionalOutcome, ScheduleOutcome};
use hapcone::Error;

/// Home-away pattern feasibility via perfect-matching cones.
#[derive(Parser, Debug)]
#[command(name = "hapcone", version)]
struct Cli {
    /// Time budget per command or scenario, in seconds.
    #[arg(long, global = true, default_value_t = 300)]
    budget: u64,
    /// Seed for heuristic search orders; never changes a verdict.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write the output here instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count equal partitions and perfect-matching generators.
    Pm {
        #[arg(long)]
        n: usize,
        /// Also list every generator.
        #[arg(long)]
        dump: bool,
    },
    /// Fractional schedule: a feasible point or a Farkas certificate.
    Feasible(Instance),
    /// Integral schedule, or proof by exhaustive search that none exists.
    Schedule(Instance),
    /// Hilbert basis of all generators on n teams, or of those of a graph.
    Hilbert {
        #[arg(long, conflicts_with = "graph", required_unless_present = "graph")]
        n: Option<usize>,
        #[arg(long)]
        graph: Option<PathBuf>,
    },
    /// Decide B-factorizability of a regular graph.
    Bfactor {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Certified counterexample on an antiprism.
    Antiprism {
        #[arg(long)]
        n: usize,
    },
    /// Run the reproduction scenarios.
    VerifyPaper {
        /// Only these scenarios (repeatable).
        #[arg(long)]
        scenario: Vec<String>,
        /// Include the long-running K4,4 check.
        #[arg(long)]
        include_slow: bool,
        /// Budget in seconds for slow scenarios.
        #[arg(long, default_value_t = 8 * 3600)]
        slow_budget: u64,
        /// Scenarios run concurrently.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Directory for resumable progress of slow scenarios.
        #[arg(long)]
        checkpoint_dir: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct Instance {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    hap: PathBuf,
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
}

/// Output text and exit code.
fn dispatch(cli: &Cli) -> Result<(String, i32), Error> {
    let budget = Budget::seconds(cli.budget);
    let mut out = String::new();
    let code = match &cli.command {
        Command::Pm { n, dump } => {
            let ts = TeamSet::new(*n)?;
            let gens = enumerate_pm(ts);
            out += &format!("partitions {}\ngenerators {}\n", enumerate_partitions(ts).len(), gens.len());
            if *dump {
                for g in &gens {
                    out += &format!("{g}\n");
                }
            }
            exit::PASS
        }
        Command::Feasible(inst) => {
            let g = format::parse_graph(&read(&inst.graph)?)?;
            let hap = format::parse_hap(&read(&inst.hap)?)?;
            let poly = build_polytope(&g, &hap)?;
            match fractional_feasible(&poly, &budget)? {
                FractionalOutcome::Feasible(x) => {
                    out += &format!("feasible{}\n", if x.is_integral() { " integral" } else { "" });
                    for ((e, d), v) in &x.values {
                        out += &format!("x {} {} {} {}/{}\n", e.a(), e.b(), d + 1, v.numer(), v.denom());
                    }
                }
                FractionalOutcome::Infeasible(h) => {
                    out += "infeasible\n";
                    for (i, v) in h.iter().enumerate() {
                        out += &format!("row {i} {}/{}\n", v.numer(), v.denom());
                    }
                }
            }
            exit::PASS
        }
        Command::Schedule(inst) => {
            let g = format::parse_graph(&read(&inst.graph)?)?;
            let hap = format::parse_hap(&read(&inst.hap)?)?;
            match find_integral_schedule(&g, &hap, &budget)? {
                ScheduleOutcome::Found(s) => out += &format::write_schedule(&s),
                ScheduleOutcome::NoSchedule { nodes } => out += &format!("no schedule ({nodes} search nodes)\n"),
            }
            exit::PASS
        }
        Command::Hilbert { n, graph } => {
            let gens = match (n, graph) {
                (Some(n), _) => enumerate_pm(TeamSet::new(*n)?),
                (None, Some(p)) => restricted_generators(&format::parse_graph(&read(p)?)?),
                (None, None) => return Err(Error::InvalidInput("give --n or --graph".into())),
            };
            let hb = hilbert_basis(&gens, &budget)?;
            out += &format::write_hilbert(&hb.basis, hb.additional.len());
            exit::PASS
        }
        Command::Bfactor { graph } => {
            let g = format::parse_graph(&read(graph)?)?;
            let v = decide_bfactor(&g, &budget)?;
            out += &format!("verdict {:?}\nmethod {:?}\n", v.verdict, v.method);
            if let Some(a) = v.additional {
                out += &format!("additional {a}\n");
            }
            for s in &v.additional_supports {
                let edges: Vec<String> = s.iter().map(|e| e.to_string()).collect();
                out += &format!("additional support {}\n", edges.join(" "));
            }
            if let Some(w) = &v.witness {
                out += &format!("witness re-verified {}\n", v.verify_witness(&budget)?);
                out += &format::write_vec(w);
            }
            if let Some(r) = &v.reason {
                out += &format!("undecided: {r}\n");
            }
            if v.verdict == Verdict::Undecided {
                exit::UNDECIDED
            } else {
                exit::PASS
            }
        }
        Command::Antiprism { n } => {
            let cert = antiprism_counterexample(*n, &budget)?;
            if let Some(t) = &cert.twists {
                out += &t.to_string();
            }
            out += &format::write_hap(&cert.hap);
            out += &format::write_vec(&cert.vector);
            out += &format!("matchings per day {:?}\n", cert.matchings_per_day);
            out += "double cover\n";
            for g in &cert.double_cover {
                out += &format!("{g}\n");
            }
            out += "rational decomposition\n";
            out += &format::write_certificate(*n, &cert.decomposition)?;
            out += &format!("no schedule ({} search nodes)\n", cert.search_nodes);
            out += &format!("stable set of size 4: {}\n", cert.stable_set);
            let ok = cert.verify();
            out += &format!("certificate re-verified {ok}\n");
            if ok {
                exit::PASS
            } else {
                exit::FAIL
            }
        }
        Command::VerifyPaper {
            scenario,
            include_slow,
            slow_budget,
            jobs,
            checkpoint_dir,
        } => {
            let names: Vec<(&str, bool)> = if scenario.is_empty() {
                SCENARIOS.iter().copied().filter(|&(_, slow)| !slow || *include_slow).collect()
            } else {
                scenario
                    .iter()
                    .map(|s| {
                        SCENARIOS
                            .iter()
                            .copied()
                            .find(|(name, _)| name == s)
                            .ok_or_else(|| Error::InvalidInput(format!("unknown scenario {s:?}")))
                    })
                    .collect::<Result<_, _>>()?
            };
            if let Some(d) = checkpoint_dir {
                fs::create_dir_all(d).map_err(|e| Error::InvalidInput(format!("{}: {e}", d.display())))?;
            }
            let opts = ScenarioOptions {
                seed: cli.seed,
                checkpoint_dir: checkpoint_dir.clone(),
            };
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads((*jobs).max(1))
                .build()
                .map_err(|e| Error::InvalidInput(e.to_string()))?;
            let reports: Vec<ScenarioReport> = pool.install(|| {
                names
                    .par_iter()
                    .map(|&(name, slow)| {
                        let b = Budget::seconds(if slow { *slow_budget } else { cli.budget });
                        run_scenario(name, &b, &opts)
                    })
                    .collect::<Result<_, _>>()
            })?;
            for r in &reports {
                out += &r.to_string();
            }
            exit_code(&reports)
        }
    };
    Ok((out, code))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::USAGE as u8 } else { 0 });
        }
    };
    let (text, code) = match dispatch(&cli) {
        Ok(r) => r,
        Err(e) if e.is_budget() => (format!("UNDECIDED {e}\n"), exit::UNDECIDED),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit::FAIL as u8);
        }
    };
    let written = match &cli.output {
        Some(p) => fs::write(p, &text),
        None => std::io::stdout().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(exit::FAIL as u8);
    }
    ExitCode::from(code as u8)
}
