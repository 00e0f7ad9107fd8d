//! Rational cone membership with both kinds of certificate: a
//! decomposition for a member and a separating hyperplane for a
//! non-member, each re-checked exactly.

use hapcone::budget::Budget;
use hapcone::combinat::{enumerate_pm, TeamSet};
use hapcone::cone::{cone_member, verify_decomposition, verify_separation, ConeMembership};
use hapcone::format;
use hapcone::graphs::complete_graph;
use hapcone::schedule::{vector_of, HapTable};

fn main() -> hapcone::Result<()> {
    let budget = Budget::seconds(60);
    let g = complete_graph(4)?;
    let gens = enumerate_pm(TeamSet::new(4)?);
    for rows in [["HHAA", "HAAH", "HAHA"], ["HHAA", "HHAA", "HHAA"]] {
        let v = vector_of(&g, &HapTable::from_rows(&rows)?)?;
        println!("days {rows:?}");
        match cone_member(&v, &gens, &budget)? {
            ConeMembership::Member(dec) => {
                print!("{}", format::write_certificate(4, &dec)?);
                println!("member, decomposition verified: {}", verify_decomposition(&v, &dec));
            }
            ConeMembership::NotMember(sep) => {
                print!("{}", format::write_separation(&sep));
                println!("not a member, hyperplane verified: {}", verify_separation(&v, &gens, &sep));
            }
        }
    }
    Ok(())
}
