//! Writing and reading back every text format: graph, HAP table, vector,
//! schedule and decomposition certificate.

use hapcone::budget::Budget;
use hapcone::combinat::{enumerate_pm, TeamSet};
use hapcone::cone::{cone_member, ConeMembership};
use hapcone::format;
use hapcone::graphs::antiprism;
use hapcone::schedule::{find_integral_schedule, vector_of, ScheduleOutcome};

fn main() -> hapcone::Result<()> {
    let budget = Budget::seconds(60);
    let g = antiprism(8)?;
    let (hap, _) = hapcone::bfactor::antiprism::antiprism_hap(8)?;
    let v = vector_of(&g, &hap)?;

    let graph_text = format::write_graph(&g);
    let hap_text = format::write_hap(&hap);
    let vec_text = format::write_vec(&v);
    print!("{graph_text}{hap_text}{vec_text}");
    assert_eq!(format::parse_graph(&graph_text)?, g);
    assert_eq!(format::parse_hap(&hap_text)?, hap);
    assert_eq!(format::parse_vec(&vec_text)?, v);

    if let ConeMembership::Member(dec) = cone_member(&v, &enumerate_pm(TeamSet::new(8)?), &budget)? {
        let text = format::write_certificate(8, &dec)?;
        print!("{text}");
        assert_eq!(format::write_certificate(8, &format::parse_certificate(8, &text)?)?, text);
    }
    // a twisted table on the cube prism is schedulable: print the schedule
    let cube = hapcone::graphs::prism(4)?;
    let cube_hap = hapcone::schedule::HapTable::from_rows(&["HAHAAHAH", "HHAAAAHH", "HAAHAHHA"])?;
    if let ScheduleOutcome::Found(s) = find_integral_schedule(&cube, &cube_hap, &budget)? {
        let text = format::write_schedule(&s);
        print!("{text}");
        assert_eq!(format::parse_schedule(&text)?, s);
    }
    println!("all formats round-trip");
    Ok(())
}
