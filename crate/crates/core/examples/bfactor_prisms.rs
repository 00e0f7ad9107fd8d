//! B-factorizability verdicts for small regular graphs.
//!
//! The 3-cube, the pentagonal prism and K3,3 have no additional Hilbert
//! basis element in their restricted monoids; the eight-team antiprism has
//! one supported on every edge.

use std::time::Instant;

use hapcone::bfactor::decide_bfactor;
use hapcone::budget::Budget;
use hapcone::graphs::{antiprism, complete_bipartite, prism, RegularGraph};

fn main() -> hapcone::Result<()> {
    let graphs: Vec<(&str, RegularGraph)> = vec![
        ("prism(4)", prism(4)?),
        ("prism(5)", prism(5)?),
        ("K3,3", complete_bipartite(3)?),
        ("antiprism(8)", antiprism(8)?),
    ];
    for (name, g) in graphs {
        let start = Instant::now();
        let budget = Budget::seconds(1800);
        let v = decide_bfactor(&g, &budget)?;
        let additional = match v.additional {
            Some(a) => format!("{a} additional generators"),
            None => "Hilbert basis not finished".to_string(),
        };
        println!("{name}: {:?} via {:?}, {additional} ({:.2?})", v.verdict, v.method, start.elapsed());
        if let Some(w) = &v.witness {
            println!("  witness re-verified: {}", v.verify_witness(&budget)?);
            for (c, k) in w.parts() {
                println!("  day partition {c} x{k}");
            }
        }
    }
    Ok(())
}
