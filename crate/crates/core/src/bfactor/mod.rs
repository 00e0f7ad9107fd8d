//! B-factorizability decisions: whether every fractionally schedulable
//! problem vector on a graph also has an integral schedule.
//!
//! A graph `G` fails exactly when some `v` in the rational cone of the
//! perfect-matching generators, with edge part `χ_E`, is not a sum of
//! generators. [`decide_bfactor`] looks for such `v` among the Hilbert basis
//! elements of the generators restricted to `G`, and falls back to an
//! exhaustive scan over day multisets when the basis alone does not settle
//! the question.

pub mod antiprism;
pub mod scenarios;

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::budget::Budget;
use crate::combinat::{
    enumerate_partitions, is_problem_vector, support_graph, EqualPartition, PMGenerator, PairIndex, ProblemVector,
    TeamSet,
};
use crate::cone::{cone_member, hilbert_basis, monoid_member, restricted_generators, ConeMembership, MonoidMembership};
use crate::error::{Error, Result};
use crate::graphs::RegularGraph;
use crate::schedule::{self, compatible_matchings, vector_of, HapTable, ScheduleOutcome};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    BFactorizable,
    NotBFactorizable,
    Undecided,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    /// Scan of the Hilbert basis of the restricted generators.
    HilbertScan,
    /// Exhaustive scan of day multisets with an LP and a schedule search each.
    DirectWitness,
}

#[derive(Clone, Debug)]
pub struct BFactorVerdict {
    pub graph: RegularGraph,
    pub verdict: Verdict,
    /// For `NotBFactorizable`: a fractionally but not integrally schedulable
    /// vector whose support is the whole graph.
    pub witness: Option<ProblemVector>,
    pub method: Method,
    /// Additional Hilbert basis elements of the restricted monoid, when the
    /// basis was computed.
    pub additional: Option<usize>,
    /// Edge sets of the additional elements that are problem vectors.
    pub additional_supports: Vec<Vec<PairIndex>>,
    /// Why the verdict is undecided, if it is.
    pub reason: Option<String>,
}

impl BFactorVerdict {
    /// Re-checks the witness from scratch: in the cone, not in the monoid,
    /// and supported on exactly the graph's edges.
    pub fn verify_witness(&self, budget: &Budget) -> Result<bool> {
        let Some(w) = &self.witness else {
            return Ok(self.verdict != Verdict::NotBFactorizable);
        };
        verify_witness(&self.graph, w, budget)
    }
}

/// The witness triple: `w ∈ N̄`, `w ∉ N`, support of `w` equal to `E(g)`.
pub fn verify_witness(g: &RegularGraph, w: &ProblemVector, budget: &Budget) -> Result<bool> {
    if !is_problem_vector(w) || support_graph(w) != g.edges() {
        return Ok(false);
    }
    let gens = restricted_generators(g);
    let in_cone = match cone_member(w, &gens, budget)? {
        ConeMembership::Member(dec) => crate::cone::verify_decomposition(w, &dec),
        ConeMembership::NotMember(_) => false,
    };
    if !in_cone {
        return Ok(false);
    }
    // independent of the exact-cover search: no r pairwise compatible
    // candidates, one per day
    let hap = schedule::hap_of(w)?;
    let cands = schedule::day_candidates(g, &hap)?;
    let stable = schedule::has_disjoint_system(&cands, hap.day_count(), budget)?;
    Ok(!stable && !monoid_member(w, &gens, budget)?.is_member())
}

fn undecided(g: &RegularGraph, method: Method, additional: Option<usize>, e: Error) -> Result<BFactorVerdict> {
    if !e.is_budget() {
        return Err(e);
    }
    Ok(BFactorVerdict {
        graph: g.clone(),
        verdict: Verdict::Undecided,
        witness: None,
        method,
        additional,
        additional_supports: Vec::new(),
        reason: Some(e.to_string()),
    })
}

/// Fraction of the remaining time given to the Hilbert basis before the
/// direct scan takes over.
pub const HILBERT_SHARE: f64 = 0.5;

/// Decides B-factorizability. The Hilbert basis of the restricted
/// generators is tried first with [`HILBERT_SHARE`] of the budget; if it
/// runs out, or if the basis alone is inconclusive, the complete
/// [`direct_witness_search`] decides with the rest.
pub fn decide_bfactor(g: &RegularGraph, budget: &Budget) -> Result<BFactorVerdict> {
    let gens = restricted_generators(g);
    let base = BFactorVerdict {
        graph: g.clone(),
        verdict: Verdict::BFactorizable,
        witness: None,
        method: Method::HilbertScan,
        additional: Some(0),
        additional_supports: Vec::new(),
        reason: None,
    };
    if gens.is_empty() {
        // no perfect matching crosses any partition, so the cone is {0}
        return Ok(base);
    }
    let hb = match hilbert_basis(&gens, &budget.share(HILBERT_SHARE)) {
        Ok(hb) => hb,
        Err(e) if e.is_budget() => return direct_verdict(g, None, Vec::new(), budget),
        Err(e) => return Err(e),
    };
    let problems: Vec<&ProblemVector> = hb.additional.iter().filter(|v| is_problem_vector(v)).collect();
    let supports: Vec<Vec<PairIndex>> = problems.iter().map(|v| support_graph(v)).collect();
    let mut verdict = BFactorVerdict {
        additional: Some(hb.additional.len()),
        additional_supports: supports.clone(),
        ..base
    };
    if problems.is_empty() {
        return Ok(verdict);
    }
    if let Some(i) = supports.iter().position(|s| s == g.edges()) {
        verdict.verdict = Verdict::NotBFactorizable;
        verdict.witness = Some(problems[i].clone());
        return Ok(verdict);
    }
    // only proper regular subgraphs carry additional elements; settle the
    // question by the complete scan
    direct_verdict(g, verdict.additional, supports, budget)
}

fn direct_verdict(
    g: &RegularGraph,
    additional: Option<usize>,
    additional_supports: Vec<Vec<PairIndex>>,
    budget: &Budget,
) -> Result<BFactorVerdict> {
    match direct_witness_search(g, budget) {
        Ok(witness) => Ok(BFactorVerdict {
            graph: g.clone(),
            verdict: if witness.is_some() {
                Verdict::NotBFactorizable
            } else {
                Verdict::BFactorizable
            },
            witness,
            method: Method::DirectWitness,
            additional,
            additional_supports,
            reason: None,
        }),
        Err(e) => undecided(g, Method::DirectWitness, additional, e),
    }
}

/// Partitions crossed by at least one perfect matching of `g`.
pub fn usable_partitions(g: &RegularGraph) -> Result<Vec<EqualPartition>> {
    Ok(enumerate_partitions(TeamSet::new(g.n())?)
        .into_iter()
        .filter(|&c| !compatible_matchings(g, c).is_empty())
        .collect())
}

/// Exhaustive search for `v = χ_E + days` in the cone but not the monoid,
/// over every multiset of `degree(g)` usable partitions. Complete: `None`
/// means the graph is B-factorizable. Multisets are scanned in parallel by
/// first partition; the witness returned is the first in scan order.
pub fn direct_witness_search(g: &RegularGraph, budget: &Budget) -> Result<Option<ProblemVector>> {
    let parts = usable_partitions(g)?;
    let gens = restricted_generators(g);
    // edges each partition's compatible matchings can cover
    let reach: Vec<Vec<bool>> = parts
        .iter()
        .map(|&c| {
            let mut r = vec![false; g.edge_count()];
            for m in compatible_matchings(g, c) {
                for e in m {
                    r[g.edge_position(e).expect("edge of g")] = true;
                }
            }
            r
        })
        .collect();
    let scan = Scan {
        g,
        parts: &parts,
        reach: &reach,
        gens: &gens,
        budget,
    };
    (0..parts.len())
        .into_par_iter()
        .map(|first| {
            let mut pick = vec![first];
            scan.run(first, &mut pick)
        })
        .find_map_first(|r| match r {
            Ok(None) => None,
            other => Some(other),
        })
        .unwrap_or(Ok(None))
}

struct Scan<'a> {
    g: &'a RegularGraph,
    parts: &'a [EqualPartition],
    reach: &'a [Vec<bool>],
    gens: &'a [PMGenerator],
    budget: &'a Budget,
}

impl Scan<'_> {
    fn run(&self, start: usize, pick: &mut Vec<usize>) -> Result<Option<ProblemVector>> {
        if pick.len() == self.g.degree() {
            return self.check(pick);
        }
        for i in start..self.parts.len() {
            pick.push(i);
            let found = self.run(i, pick)?;
            pick.pop();
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }

    fn check(&self, pick: &[usize]) -> Result<Option<ProblemVector>> {
        self.budget.tick("direct witness search")?;
        // an edge no chosen day can play rules out the cone
        let covered = (0..self.g.edge_count()).all(|e| pick.iter().any(|&i| self.reach[i][e]));
        if !covered {
            return Ok(None);
        }
        let hap = HapTable::new(self.g.n(), pick.iter().map(|&i| self.parts[i]).collect())?;
        if let ScheduleOutcome::Found(_) = schedule::find_integral_schedule(self.g, &hap, self.budget)? {
            return Ok(None);
        }
        let v = vector_of(self.g, &hap)?;
        Ok(cone_member(&v, self.gens, self.budget)?.is_member().then_some(v))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DoubleCover {
    /// Generators summing to exactly `2v`.
    Found(Vec<PMGenerator>),
    NotFound { nodes: u64 },
}

/// Searches for a decomposition of `2v` into perfect-matching generators,
/// each partition of `v` used twice as often as in `v`.
///
/// Requires `v` to lie in the rational cone.
pub fn double_cover_search(v: &ProblemVector, budget: &Budget) -> Result<DoubleCover> {
    let all = crate::combinat::enumerate_pm(TeamSet::new(v.n())?);
    if !cone_member(v, &all, budget)?.is_member() {
        return Err(Error::PreconditionViolated(
            "double cover search needs a vector of the rational cone".into(),
        ));
    }
    let two = v.scaled(2);
    let edges: Vec<PairIndex> = two.edges().map(|(p, _)| p).collect();
    let mut remaining: Vec<u64> = two.edges().map(|(_, x)| x).collect();
    let pos: BTreeMap<PairIndex, usize> = edges.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    // one slot per day copy, with that partition's candidate matchings
    let mut slots: Vec<(EqualPartition, usize)> = Vec::new();
    let mut cands: Vec<Vec<Vec<usize>>> = Vec::new();
    for (c, k) in two.parts() {
        let ms: Vec<Vec<usize>> = crate::matching::perfect_matchings(
            v.n(),
            &edges.iter().copied().filter(|&e| c.crosses(e)).collect::<Vec<_>>(),
        )
        .into_iter()
        .map(|m| m.iter().map(|e| pos[e]).collect())
        .collect();
        for _ in 0..k {
            slots.push((c, cands.len()));
        }
        cands.push(ms);
    }
    let mut chosen = vec![0usize; slots.len()];
    let mut nodes = 0u64;
    #[allow(clippy::too_many_arguments)]
    fn rec(
        s: usize,
        slots: &[(EqualPartition, usize)],
        cands: &[Vec<Vec<usize>>],
        remaining: &mut [u64],
        chosen: &mut [usize],
        nodes: &mut u64,
        budget: &Budget,
    ) -> Result<bool> {
        *nodes += 1;
        budget.tick("double cover search")?;
        if s == slots.len() {
            return Ok(remaining.iter().all(|&x| x == 0));
        }
        let kind = slots[s].1;
        // copies of one partition take matchings in nondecreasing order
        let from = if s > 0 && slots[s - 1].1 == kind { chosen[s - 1] } else { 0 };
        for (i, m) in cands[kind].iter().enumerate().skip(from) {
            if m.iter().all(|&e| remaining[e] > 0) {
                m.iter().for_each(|&e| remaining[e] -= 1);
                chosen[s] = i;
                let ok = rec(s + 1, slots, cands, remaining, chosen, nodes, budget)?;
                m.iter().for_each(|&e| remaining[e] += 1);
                if ok {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }
    if !rec(0, &slots, &cands, &mut remaining, &mut chosen, &mut nodes, budget)? {
        return Ok(DoubleCover::NotFound { nodes });
    }
    slots
        .iter()
        .zip(&chosen)
        .map(|(&(c, kind), &i)| PMGenerator::new(cands[kind][i].iter().map(|&e| edges[e]).collect(), c))
        .collect::<Result<Vec<_>>>()
        .map(DoubleCover::Found)
}

/// Integral membership of `v` in the monoid of all generators.
pub fn in_monoid(v: &ProblemVector, budget: &Budget) -> Result<MonoidMembership> {
    let all = crate::combinat::enumerate_pm(TeamSet::new(v.n())?);
    monoid_member(v, &all, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complete_bipartite, complete_graph, prism, RegularGraph};
    use crate::schedule::verify_double_cover;

    #[test]
    fn cube_prism_and_k33_are_bfactorizable() {
        let budget = Budget::unlimited();
        for g in [prism(4).unwrap(), complete_bipartite(3).unwrap()] {
            let v = decide_bfactor(&g, &budget).unwrap();
            assert_eq!(v.verdict, Verdict::BFactorizable);
            assert_eq!(v.additional, Some(0));
            assert!(v.verify_witness(&budget).unwrap());
        }
    }

    #[test]
    fn two_regular_graphs_are_bfactorizable() {
        let budget = Budget::unlimited();
        let c = |n: usize, cycles: &[&[usize]]| {
            let mut pairs = Vec::new();
            for cyc in cycles {
                for i in 0..cyc.len() {
                    pairs.push((cyc[i], cyc[(i + 1) % cyc.len()]));
                }
            }
            RegularGraph::from_pairs(n, &pairs).unwrap()
        };
        let graphs = [
            c(4, &[&[0, 1, 2, 3]]),
            c(6, &[&[0, 1, 2, 3, 4, 5]]),
            c(6, &[&[0, 1, 2], &[3, 4, 5]]),
            c(8, &[&[0, 1, 2, 3, 4, 5, 6, 7]]),
            c(8, &[&[0, 1, 2, 3], &[4, 5, 6, 7]]),
            c(8, &[&[0, 1, 2], &[3, 4, 5, 6, 7]]),
        ];
        for g in graphs {
            let v = decide_bfactor(&g, &budget).unwrap();
            assert_eq!(v.verdict, Verdict::BFactorizable, "{:?}", g.edges());
            // cross-check with the complete scan
            assert!(direct_witness_search(&g, &budget).unwrap().is_none());
        }
        // an odd cycle admits no perfect matching at all
        let odd = c(6, &[&[0, 1, 2], &[3, 4, 5]]);
        assert!(restricted_generators(&odd).is_empty());
    }

    #[test]
    fn direct_scan_finds_antiprism8_witness() {
        let g = crate::graphs::antiprism(8).unwrap();
        let budget = Budget::unlimited();
        let w = direct_witness_search(&g, &budget).unwrap().expect("a witness");
        assert!(verify_witness(&g, &w, &budget).unwrap());
        // the scan result does not depend on thread scheduling
        assert_eq!(direct_witness_search(&g, &budget).unwrap(), Some(w));
    }

    #[test]
    fn double_cover_of_a_monoid_member_is_found() {
        let budget = Budget::unlimited();
        let g = complete_graph(4).unwrap();
        let hap = HapTable::from_rows(&["HHAA", "HAAH", "HAHA"]).unwrap();
        let v = vector_of(&g, &hap).unwrap();
        let DoubleCover::Found(gens) = double_cover_search(&v, &budget).unwrap() else {
            panic!()
        };
        assert!(verify_double_cover(&v, &gens));
    }

    #[test]
    fn double_cover_rejects_vectors_outside_the_cone() {
        let g = complete_graph(4).unwrap();
        let hap = HapTable::from_rows(&["HHAA", "HHAA", "HHAA"]).unwrap();
        let v = vector_of(&g, &hap).unwrap();
        assert!(matches!(
            double_cover_search(&v, &Budget::unlimited()),
            Err(Error::PreconditionViolated(_))
        ));
    }
}
