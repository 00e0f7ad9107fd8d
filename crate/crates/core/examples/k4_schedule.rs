//! A three-day, four-team home-away table: its fractional schedule
//! polytope, an integral schedule, and the same facts as cone and monoid
//! membership of its problem vector.

use hapcone::budget::Budget;
use hapcone::combinat::{enumerate_pm, TeamSet};
use hapcone::cone::{cone_member, monoid_member, verify_decomposition, ConeMembership, MonoidMembership};
use hapcone::format;
use hapcone::graphs::complete_graph;
use hapcone::schedule::{
    build_polytope, find_integral_schedule, fractional_feasible, vector_of, verify_schedule, FractionalOutcome,
    HapTable, ScheduleOutcome,
};

fn main() -> hapcone::Result<()> {
    let budget = Budget::seconds(60);
    let g = complete_graph(4)?;
    let hap = HapTable::from_rows(&["HHAA", "HAAH", "HAHA"])?;
    print!("{}", format::write_hap(&hap));

    let poly = build_polytope(&g, &hap)?;
    println!(
        "polytope: {} variables, {} after dropping same-side pairs",
        poly.raw_variable_count,
        poly.variables.len()
    );
    match fractional_feasible(&poly, &budget)? {
        FractionalOutcome::Feasible(x) => println!("fractionally feasible, integral vertex: {}", x.is_integral()),
        FractionalOutcome::Infeasible(_) => println!("fractionally infeasible"),
    }
    if let ScheduleOutcome::Found(s) = find_integral_schedule(&g, &hap, &budget)? {
        print!("{}", format::write_schedule(&s));
        println!("schedule verified: {}", verify_schedule(&g, &hap, &s));
    }

    let v = vector_of(&g, &hap)?;
    print!("{}", format::write_vec(&v));
    let gens = enumerate_pm(TeamSet::new(4)?);
    if let ConeMembership::Member(dec) = cone_member(&v, &gens, &budget)? {
        print!("{}", format::write_certificate(4, &dec)?);
        println!("cone decomposition verified: {}", verify_decomposition(&v, &dec));
    }
    if let MonoidMembership::Member(dec) = monoid_member(&v, &gens, &budget)? {
        println!("monoid decomposition verified: {}", verify_decomposition(&v, &dec));
    }
    Ok(())
}
