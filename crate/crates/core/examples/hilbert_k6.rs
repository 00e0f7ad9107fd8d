//! Hilbert basis of the perfect-matching cone on six teams, with its
//! additional generators grouped into isomorphism classes.

use std::collections::BTreeSet;
use std::time::Instant;

use hapcone::budget::Budget;
use hapcone::combinat::{canonical_form, enumerate_pm, support_graph, TeamSet};
use hapcone::cone::hilbert_basis;

fn main() -> hapcone::Result<()> {
    let gens = enumerate_pm(TeamSet::new(6)?);
    let start = Instant::now();
    let hb = hilbert_basis(&gens, &Budget::unlimited())?;
    println!(
        "{} generators -> {} basis elements, {} additional ({:.1?})",
        hb.generator_count,
        hb.basis.len(),
        hb.additional.len(),
        start.elapsed()
    );
    for block in &hb.stats.blocks {
        println!(
            "  block: rank {}, {} simplices, multiplicity {}, {} facets, {} parallelepiped points",
            block.dimension, block.simplices, block.multiplicity, block.facets, block.box_points
        );
    }
    let classes: BTreeSet<_> = hb
        .additional
        .iter()
        .map(canonical_form)
        .collect::<hapcone::Result<_>>()?;
    println!("isomorphism classes of additional generators: {}", classes.len());
    if let Some(rep) = classes.iter().next() {
        println!(
            "representative: {} edges, {} days",
            support_graph(rep).len(),
            rep.part_sum()
        );
    }
    Ok(())
}
