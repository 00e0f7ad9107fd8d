//! Scripted reproductions of every graph verdict, each producing a
//! [`ScenarioReport`] whose certificates are re-checked by code that does
//! not share the search that found them.

use std::path::PathBuf;
use std::sync::OnceLock;
use std::time::Instant;

use num_traits::{One, Zero};

use super::antiprism::{antiprism_counterexample, AntiprismCertificate};
use super::{decide_bfactor, direct_witness_search, double_cover_search, DoubleCover, Method, Verdict};
use crate::budget::Budget;
use crate::combinat::{
    enumerate_partitions, enumerate_pm, is_problem_vector, support_graph, Canonicalizer, EqualPartition, PMGenerator,
    PairIndex, ProblemVector, TeamSet,
};
use crate::cone::slice::{self, SliceDegree};
use crate::cone::{
    cone_member, hilbert_basis, monoid_member, restricted_generators, verify_decomposition, verify_separation,
    ConeMembership, HilbertBasisResult, MatchingDecomposition, MonoidMembership,
};
use crate::error::{Error, Result};
use crate::format;
use crate::graphs::{
    antiprism, complete_bipartite, complete_graph, petersen, petersen_complement_matching, petersen_plus_matching,
    prism, RegularGraph,
};
use crate::lp::{EqualityProgram, Optimum, Q};
use crate::matching::perfect_matchings;
use crate::report::{ScenarioReport, Status};
use crate::schedule::{
    self, build_polytope, day_candidates, find_integral_schedule, fractional_feasible, has_disjoint_system,
    vector_of, verify_double_cover, verify_fractional_point, verify_schedule, FractionalOutcome, FractionalPoint,
    HapTable, ScheduleOutcome,
};

/// Scenario names in report order, with whether each is opt-in.
pub const SCENARIOS: &[(&str, bool)] = &[
    ("counts", false),
    ("hilbert4", false),
    ("hilbert6", false),
    ("extensions6", false),
    ("halfintegral", false),
    ("antiprism", false),
    ("bfactor", false),
    ("petersen", false),
    ("equivalence", false),
    ("k44", true),
];

#[derive(Clone, Debug, Default)]
pub struct ScenarioOptions {
    /// Rotates heuristic search orders; never changes a verdict.
    pub seed: u64,
    /// Where long scenarios store finished stages so a rerun resumes.
    pub checkpoint_dir: Option<PathBuf>,
}

pub fn run_scenario(name: &str, budget: &Budget, opts: &ScenarioOptions) -> Result<ScenarioReport> {
    let start = Instant::now();
    let mut report = ScenarioReport::new(name);
    let outcome = match name {
        "counts" => counts(&mut report),
        "hilbert4" => hilbert4(&mut report, budget),
        "hilbert6" => hilbert6(&mut report, budget),
        "extensions6" => extensions6(&mut report, budget),
        "halfintegral" => half_integral(&mut report, budget),
        "antiprism" => antiprisms(&mut report, budget),
        "bfactor" => bfactor_verdicts(&mut report, budget),
        "petersen" => petersen_scenarios(&mut report, budget, opts.seed),
        "equivalence" => membership_equivalence(&mut report, budget),
        "k44" => verify_k44(&mut report, budget, opts),
        other => return Err(Error::InvalidInput(format!("unknown scenario {other:?}"))),
    };
    if let Err(e) = outcome {
        report.error(&e);
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

fn pm(n: usize) -> Vec<PMGenerator> {
    enumerate_pm(TeamSet::new(n).expect("even team count"))
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn counts(report: &mut ScenarioReport) -> Result<()> {
    for n in [4usize, 6, 8] {
        let ts = TeamSet::new(n)?;
        let parts = enumerate_partitions(ts).len() as u64;
        let gens = enumerate_pm(ts).len() as u64;
        // each side pairing is a bijection between the two halves
        let h = n as u64 / 2;
        let want_parts = binomial(n as u64, h) / 2;
        let want_gens = want_parts * (1..=h).product::<u64>();
        report.line(format!("n={n}: {parts} equal partitions, {gens} generators"));
        report.check(&format!("n={n} partition count {want_parts}"), parts == want_parts);
        report.check(&format!("n={n} generator count {want_gens}"), gens == want_gens);
    }
    Ok(())
}

fn hilbert4(report: &mut ScenarioReport, budget: &Budget) -> Result<()> {
    let gens = pm(4);
    let hb = hilbert_basis(&gens, budget)?;
    report.line(format!("hilbert {} {}", hb.basis.len(), hb.additional.len()));
    report.check("no additional generators", hb.additional.is_empty());
    let mut basis = hb.basis.clone();
    let mut vecs: Vec<ProblemVector> = gens.iter().map(PMGenerator::to_vector).collect();
    basis.sort();
    vecs.sort();
    report.certificate("basis equals the generator set", basis == vecs);
    Ok(())
}

static K6: OnceLock<HilbertBasisResult> = OnceLock::new();

/// Hilbert basis of all generators on six teams, computed once per process.
pub fn k6_hilbert(budget: &Budget) -> Result<&'static HilbertBasisResult> {
    if let Some(h) = K6.get() {
        return Ok(h);
    }
    let h = hilbert_basis(&pm(6), budget)?;
    Ok(K6.get_or_init(|| h))
}

fn octahedron() -> RegularGraph {
    antiprism(6).expect("six-team antiprism")
}

/// Canonical form of a graph, as the canonical form of its edge indicator.
fn graph_class(canon: &Canonicalizer, edges: &[PairIndex], n: usize) -> Result<ProblemVector> {
    canon.canonical(&ProblemVector::chi_edges(n, edges.iter().copied()))
}

fn hilbert6(report: &mut ScenarioReport, budget: &Budget) -> Result<()> {
    let hb = k6_hilbert(budget)?;
    report.line(format!("hilbert {} {}", hb.basis.len(), hb.additional.len()));
    for b in &hb.stats.blocks {
        report.line(format!(
            "block rank {}: {} simplices, multiplicity {}, {} facets",
            b.dimension, b.simplices, b.multiplicity, b.facets
        ));
    }
    report.check("90 additional generators", hb.additional.len() == 90);
    let canon = Canonicalizer::new(6)?;
    let mut classes: Vec<ProblemVector> = hb
        .additional
        .iter()
        .map(|v| canon.canonical(v))
        .collect::<Result<_>>()?;
    classes.sort();
    classes.dedup();
    report.check(
        &format!("{} isomorphism class(es), expected 1", classes.len()),
        classes.len() == 1,
    );
    let octa = graph_class(&canon, octahedron().edges(), 6)?;
    let gens = pm(6);
    let all_shaped = hb.additional.iter().all(|v| {
        is_problem_vector(v)
            && v.part_sum() == 4
            && graph_class(&canon, &support_graph(v), 6).is_ok_and(|c| c == octa)
    });
    report.check(
        "every additional generator is a problem vector on an octahedron with 4 days",
        all_shaped,
    );
    if let Some(rep) = hb.additional.first() {
        report.line("representative:");
        report.block(&format::write_vec(rep));
    }
    // each element: in the cone, outside the monoid (no one-per-day
    // compatible system), and twice it is a sum of generators
    let mut ok = 0;
    for v in &hb.additional {
        let g = RegularGraph::new(6, support_graph(v))?;
        let hap = schedule::hap_of(v)?;
        let in_cone = match cone_member(v, &gens, budget)? {
            ConeMembership::Member(dec) => verify_decomposition(v, &dec),
            ConeMembership::NotMember(_) => false,
        };
        let no_system = !has_disjoint_system(&day_candidates(&g, &hap)?, hap.day_count(), budget)?;
        let doubled = match double_cover_search(v, budget)? {
            DoubleCover::Found(d) => verify_double_cover(v, &d),
            DoubleCover::NotFound { .. } => false,
        };
        if in_cone && no_system && doubled {
            ok += 1;
        }
    }
    report.certificate(
        &format!("{ok} of {} additional generators in the cone, not in the monoid, doubled into it", hb.additional.len()),
        ok == hb.additional.len(),
    );
    Ok(())
}

/// First additional generator on six teams (all are isomorphic).
fn six_team_generator(budget: &Budget) -> Result<ProblemVector> {
    k6_hilbert(budget)?
        .additional
        .first()
        .cloned()
        .ok_or_else(|| Error::InvalidInput("no additional generator on six teams".into()))
}

fn missing_edges(v: &ProblemVector) -> Vec<PairIndex> {
    let used = support_graph(v);
    crate::combinat::all_pairs(v.n())
        .into_iter()
        .filter(|p| !used.contains(p))
        .collect()
}

fn extensions6(report: &mut ScenarioReport, budget: &Budget) -> Result<()> {
    let hb = k6_hilbert(budget)?;
    let canon = Canonicalizer::new(6)?;
    let first = canon.canonical(&hb.additional[0])?;
    let one_class = hb.additional.iter().all(|v| canon.canonical(v).is_ok_and(|c| c == first));
    report.check(
        &format!("{} additional generators form one class, so one representative suffices", hb.additional.len()),
        one_class,
    );
    let v = six_team_generator(budget)?;
    let k6 = complete_graph(6)?;
    let mut found = 0;
    for c in enumerate_partitions(TeamSet::new(6)?) {
        let mut days = schedule::hap_of(&v)?.days().to_vec();
        days.push(c);
        let hap = HapTable::new(6, days)?;
        match find_integral_schedule(&k6, &hap, budget)? {
            ScheduleOutcome::Found(s) => {
                found += 1;
                report.line(format!("extra day {c}: schedule found"));
                report.block(&format::write_schedule(&s));
                report.certificate(&format!("schedule with extra day {c}"), verify_schedule(&k6, &hap, &s));
            }
            ScheduleOutcome::NoSchedule { nodes } => {
                report.check(&format!("extra day {c}: no schedule after {nodes} nodes"), false);
            }
        }
    }
    report.check(&format!("{found}/10 one-day extensions schedulable"), found == 10);
    Ok(())
}

/// The half-integral point: days of the six-team generator played by the
/// average of a double cover, and the three missing edges on one extra
/// day whose partition they all cross.
pub fn half_integral_point(budget: &Budget) -> Result<(schedule::PolytopeInstance, FractionalPoint)> {
    let v = six_team_generator(budget)?;
    let support = RegularGraph::new(6, support_graph(&v))?;
    let hap4 = schedule::hap_of(&v)?;
    let cover = schedule::double_cover_search(&support, &hap4, budget)?
        .ok_or_else(|| Error::PreconditionViolated("six-team generator without a double cover".into()))?;
    let missing = missing_edges(&v);
    let extra = enumerate_partitions(TeamSet::new(6)?)
        .into_iter()
        .find(|c| missing.iter().all(|&e| c.crosses(e)))
        .ok_or_else(|| Error::PreconditionViolated("no partition crosses the missing edges".into()))?;
    let mut days = hap4.days().to_vec();
    days.push(extra);
    let hap = HapTable::new(6, days)?;
    let poly = build_polytope(&complete_graph(6)?, &hap)?;
    let half = Q::new(1.into(), 2.into());
    let mut values = std::collections::BTreeMap::new();
    for &(e, d) in &poly.variables {
        let x = if d < 4 {
            let count = cover[2 * d..2 * d + 2].iter().filter(|m| m.matching().contains(&e)).count();
            &half * Q::from_integer(count.into())
        } else if missing.contains(&e) {
            Q::one()
        } else {
            Q::zero()
        };
        values.insert((e, d), x);
    }
    Ok((poly, FractionalPoint { values }))
}

fn half_integral(report: &mut ScenarioReport, budget: &Budget) -> Result<()> {
    let (poly, point) = half_integral_point(budget)?;
    report.line(format!(
        "{} variables ({} before dropping same-side pairs)",
        poly.variables.len(),
        poly.raw_variable_count
    ));
    for row in poly.hap.rows() {
        report.line(format!("day {row}"));
    }
    report.certificate("half-integral point satisfies every constraint", verify_fractional_point(&poly, &point));
    report.check("point is not integral", !point.is_integral());
    // rigidity: with the last day fixed, each variable's min equals its max
    let last = poly.hap.day_count() - 1;
    let k = poly.variables.len();
    let mut a = poly.program.a.clone();
    let mut b = poly.program.b.clone();
    for (j, &(e, d)) in poly.variables.iter().enumerate() {
        if d == last {
            a.push((0..k).map(|i| if i == j { Q::one() } else { Q::zero() }).collect());
            b.push(point.values[&(e, d)].clone());
        }
    }
    let fixed = EqualityProgram::new(a, b)?;
    let mut rigid = true;
    for (j, &(e, d)) in poly.variables.iter().enumerate() {
        if d == last {
            continue;
        }
        for sign in [1i64, -1] {
            let c: Vec<Q> = (0..k)
                .map(|i| if i == j { Q::from_integer(sign.into()) } else { Q::zero() })
                .collect();
            match fixed.minimize(&c, budget)? {
                Optimum::Optimal { x, value } => {
                    let at = Q::from_integer(sign.into()) * &point.values[&(e, d)];
                    rigid &= fixed.check_solution(&x) && value == at;
                }
                _ => rigid = false,
            }
        }
    }
    report.check("point is the only one with these last-day values", rigid);
    Ok(())
}

fn double_cover_certificate(n: usize, cover: &[PMGenerator]) -> Result<String> {
    let mut terms: Vec<(PMGenerator, Q)> = Vec::new();
    for g in cover {
        match terms.iter_mut().find(|(h, _)| h == g) {
            Some((_, c)) => *c += Q::one(),
            None => terms.push((g.clone(), Q::one())),
        }
    }
    format::write_certificate(
        n,
        &MatchingDecomposition {
            terms,
            scale: 2.into(),
        },
    )
}

fn report_antiprism(report: &mut ScenarioReport, n: usize, cert: &AntiprismCertificate) -> Result<()> {
    report.line(format!("antiprism {n}: matchings per day {:?}", cert.matchings_per_day));
    if let Some(t) = &cert.twists {
        report.check(&format!("antiprism {n}: twist table invariants"), t.validate().is_ok());
        report.block(&t.to_string());
    }
    report.block(&format::write_hap(&cert.hap));
    report.line(format!("double cover of 2v ({} matchings):", cert.double_cover.len()));
    report.block(&double_cover_certificate(n, &cert.double_cover)?);
    report.line(format!("no schedule after {} search nodes", cert.search_nodes));
    report.check(&format!("antiprism {n}: no stable set of size 4"), !cert.stable_set);
    report.certificate(&format!("antiprism {n}"), cert.verify());
    Ok(())
}

fn antiprisms(report: &mut ScenarioReport, budget: &Budget) -> Result<()> {
    for n in [6usize, 8, 10, 12, 14] {
        let cert = antiprism_counterexample(n, budget)?;
        report_antiprism(report, n, &cert)?;
        if n == 6 {
            let canon = Canonicalizer::new(6)?;
            let want = canon.canonical(&six_team_generator(budget)?)?;
            report.check(
                "six-team instance is isomorphic to the complete-graph additional generator",
                canon.canonical(&cert.vector)? == want,
            );
        }
    }
    Ok(())
}

fn two_regular_graphs() -> Result<Vec<RegularGraph>> {
    let build = |n: usize, cycles: &[&[usize]]| {
        let mut pairs = Vec::new();
        for cyc in cycles {
            for i in 0..cyc.len() {
                pairs.push((cyc[i], cyc[(i + 1) % cyc.len()]));
            }
        }
        RegularGraph::from_pairs(n, &pairs)
    };
    [
        build(4, &[&[0, 1, 2, 3]]),
        build(6, &[&[0, 1, 2, 3, 4, 5]]),
        build(6, &[&[0, 1, 2], &[3, 4, 5]]),
        build(8, &[&[0, 1, 2, 3, 4, 5, 6, 7]]),
        build(8, &[&[0, 1, 2, 3], &[4, 5, 6, 7]]),
        build(8, &[&[0, 1, 2], &[3, 4, 5, 6, 7]]),
    ]
    .into_iter()
    .collect()
}

fn bfactor_verdicts(report: &mut ScenarioReport, budget: &Budget) -> Result<()> {
    for (name, g) in [
        ("prism(4)", prism(4)?),
        ("prism(5)", prism(5)?),
        ("K3,3", complete_bipartite(3)?),
    ] {
        let v = decide_bfactor(&g, budget)?;
        report.line(format!(
            "{name}: {:?} via {:?}, additional {:?}",
            v.verdict, v.method, v.additional
        ));
        report.check(
            &format!("{name} B-factorizable with no additional generator"),
            v.verdict == Verdict::BFactorizable && v.method == Method::HilbertScan && v.additional == Some(0),
        );
        // independent: the complete scan over day multisets finds nothing
        report.certificate(
            &format!("{name}: exhaustive day-multiset scan finds no witness"),
            direct_witness_search(&g, budget)?.is_none(),
        );
    }
    for g in two_regular_graphs()? {
        let v = decide_bfactor(&g, budget)?;
        let odd = g.girth().is_some_and(|k| k % 2 == 1);
        report.check(
            &format!("2-regular graph {}: {:?}", edge_list(g.edges()), v.verdict),
            v.verdict == Verdict::BFactorizable,
        );
        if odd {
            report.check(
                "odd cycle: no compatible perfect matching, so no fractional schedule",
                restricted_generators(&g).is_empty(),
            );
        }
    }
    Ok(())
}

fn edge_list(edges: &[PairIndex]) -> String {
    edges.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ")
}

fn masks(g: &RegularGraph, ms: &[Vec<PairIndex>]) -> Vec<u128> {
    ms.iter()
        .map(|m| {
            m.iter()
                .map(|&e| 1u128 << g.edge_position(e).expect("edge of g"))
                .fold(0, |a, b| a | b)
        })
        .collect()
}

/// Three-day HAP tables on the Petersen graph with a double cover: pair up
/// its six perfect matchings and take a partition crossing both members of
/// each pair. `seed` rotates the order of the pairings.
pub fn petersen_double_cover_haps(seed: u64) -> Result<Vec<(HapTable, Vec<PMGenerator>)>> {
    let g = petersen();
    let ms = perfect_matchings(10, g.edges());
    let parts = enumerate_partitions(TeamSet::new(10)?);
    let crossing = |i: usize, j: usize| -> Vec<EqualPartition> {
        parts
            .iter()
            .copied()
            .filter(|c| ms[i].iter().chain(&ms[j]).all(|&e| c.crosses(e)))
            .collect()
    };
    let mut pairings: Vec<[(usize, usize); 3]> = Vec::new();
    let k = ms.len();
    for a in 1..k {
        let rest: Vec<usize> = (1..k).filter(|&x| x != a).collect();
        for &b in &rest[1..] {
            let c: Vec<usize> = rest[1..].iter().copied().filter(|&x| x != b).collect();
            if let [c0, c1] = c[..] {
                pairings.push([(0, a), (rest[0], b), (c0, c1)]);
            }
        }
    }
    let shift = (seed as usize) % pairings.len().max(1);
    pairings.rotate_left(shift);
    let mut out = Vec::new();
    for p in pairings {
        let options: Vec<Vec<EqualPartition>> = p.iter().map(|&(i, j)| crossing(i, j)).collect();
        for &c0 in &options[0] {
            for &c1 in &options[1] {
                for &c2 in &options[2] {
                    let days = [c0, c1, c2];
                    let hap = HapTable::new(10, days.to_vec())?;
                    let cover = p
                        .iter()
                        .zip(days)
                        .flat_map(|(&(i, j), c)| [PMGenerator::new(ms[i].clone(), c), PMGenerator::new(ms[j].clone(), c)])
                        .collect::<Result<Vec<_>>>()?;
                    out.push((hap, cover));
                }
            }
        }
    }
    Ok(out)
}

pub fn petersen_scenarios(report: &mut ScenarioReport, budget: &Budget, seed: u64) -> Result<()> {
    let g = petersen();
    let ms = perfect_matchings(10, g.edges());
    report.line(format!("Petersen graph: {} perfect matchings", ms.len()));
    let full = (1u128 << g.edge_count()) - 1;
    let (coloring, _) = schedule::exact_cover(full, &[(3, masks(&g, &ms))], budget)?;
    report.check("no 3-edge-coloring at all", coloring.is_none());

    let haps = petersen_double_cover_haps(seed)?;
    report.line(format!("{} three-day tables with a double cover by construction", haps.len()));
    report.check("at least one table found", !haps.is_empty());
    let gens = restricted_generators(&g);
    let mut all_none = true;
    let mut covers_ok = true;
    for (hap, cover) in &haps {
        let v = vector_of(&g, hap)?;
        covers_ok &= verify_double_cover(&v, cover);
        all_none &= matches!(find_integral_schedule(&g, hap, budget)?, ScheduleOutcome::NoSchedule { .. });
    }
    report.check("every table tried has no schedule", all_none);
    report.certificate("every double cover sums to 2v", covers_ok);
    let (hap, cover) = &haps[0];
    let v1 = vector_of(&g, hap)?;
    report.block(&format::write_hap(hap));
    report.block(&double_cover_certificate(10, cover)?);
    let searched = schedule::double_cover_search(&g, hap, budget)?;
    report.check(
        "double cover search rediscovers a cover",
        searched.is_some_and(|c| verify_double_cover(&v1, &c)),
    );
    let v1_in_cone = match cone_member(&v1, &gens, budget)? {
        ConeMembership::Member(dec) => verify_decomposition(&v1, &dec),
        ConeMembership::NotMember(_) => false,
    };
    report.certificate("v1 in the rational cone", v1_in_cone);
    report.certificate(
        "v1 has no one-per-day compatible system",
        !has_disjoint_system(&day_candidates(&g, hap)?, 3, budget)?,
    );

    // Petersen plus its complementary matching, one more day crossing it
    let plus = petersen_plus_matching();
    let m0 = petersen_complement_matching();
    let extra: Vec<EqualPartition> = enumerate_partitions(TeamSet::new(10)?)
        .into_iter()
        .filter(|c| m0.iter().all(|&e| c.crosses(e)))
        .collect();
    let mut found = None;
    'search: for (hap, _) in &haps {
        for &c0 in &extra {
            let mut days = hap.days().to_vec();
            days.push(c0);
            let hap4 = HapTable::new(10, days)?;
            if let ScheduleOutcome::NoSchedule { .. } = find_integral_schedule(&plus, &hap4, budget)? {
                found = Some((hap.clone(), c0, hap4));
                break 'search;
            }
        }
    }
    let Some((hap3, c0, hap4)) = found else {
        report.check("a four-day instance on Petersen plus a matching without a schedule", false);
        return Ok(());
    };
    let v1 = vector_of(&g, &hap3)?;
    let v2 = PMGenerator::new(m0.clone(), c0)?.to_vector();
    let v = vector_of(&plus, &hap4)?;
    report.line("v = v1 + v2 on Petersen plus a matching:");
    report.block(&format::write_hap(&hap4));
    report.check("v equals v1 + v2", v1.plus(&v2)? == v);
    let plus_gens = restricted_generators(&plus);
    let v_in_cone = match cone_member(&v, &plus_gens, budget)? {
        ConeMembership::Member(dec) => {
            report.block(&format::write_certificate(10, &dec)?);
            verify_decomposition(&v, &dec)
        }
        ConeMembership::NotMember(_) => false,
    };
    report.certificate("v in the rational cone", v_in_cone);
    report.certificate(
        "v has no one-per-day compatible system",
        !has_disjoint_system(&day_candidates(&plus, &hap4)?, 4, budget)?,
    );
    report.certificate(
        "v2 is a single generator, hence in the monoid",
        matches!(monoid_member(&v2, &plus_gens, budget)?, MonoidMembership::Member(ref d) if verify_decomposition(&v2, d)),
    );
    report.line("so v lies in the cone but not the monoid, yet splits into two cone members");
    Ok(())
}

fn equivalence_instance(
    report: &mut ScenarioReport,
    g: &RegularGraph,
    hap: &HapTable,
    gens: &[PMGenerator],
    budget: &Budget,
    tally: &mut [usize; 2],
) -> Result<()> {
    let v = vector_of(g, hap)?;
    let poly = build_polytope(g, hap)?;
    let frac = match fractional_feasible(&poly, budget)? {
        FractionalOutcome::Feasible(x) => {
            report.certificates += 1;
            report.verified += usize::from(verify_fractional_point(&poly, &x));
            true
        }
        FractionalOutcome::Infeasible(h) => {
            report.certificates += 1;
            report.verified += usize::from(poly.program.check_farkas(&h));
            false
        }
    };
    let cone = match cone_member(&v, gens, budget)? {
        ConeMembership::Member(dec) => {
            report.certificates += 1;
            report.verified += usize::from(verify_decomposition(&v, &dec));
            true
        }
        ConeMembership::NotMember(sep) => {
            report.certificates += 1;
            report.verified += usize::from(verify_separation(&v, gens, &sep));
            false
        }
    };
    let integral = match find_integral_schedule(g, hap, budget)? {
        ScheduleOutcome::Found(s) => {
            report.certificates += 1;
            report.verified += usize::from(verify_schedule(g, hap, &s));
            true
        }
        ScheduleOutcome::NoSchedule { .. } => {
            report.certificates += 1;
            report.verified += usize::from(!has_disjoint_system(&day_candidates(g, hap)?, hap.day_count(), budget)?);
            false
        }
    };
    let monoid = match monoid_member(&v, gens, budget)? {
        MonoidMembership::Member(dec) => {
            report.certificates += 1;
            report.verified += usize::from(verify_decomposition(&v, &dec) && dec.is_integral());
            true
        }
        MonoidMembership::NotMember { .. } => false,
    };
    tally[0] += usize::from(frac == cone);
    tally[1] += usize::from(integral == monoid);
    if frac != cone || integral != monoid {
        report.line(format!(
            "disagreement on {:?}: fractional {frac}, cone {cone}, integral {integral}, monoid {monoid}",
            hap.rows()
        ));
    }
    Ok(())
}

fn membership_equivalence(report: &mut ScenarioReport, budget: &Budget) -> Result<()> {
    let before = report.verified;
    let ts4 = TeamSet::new(4)?;
    let parts4 = enumerate_partitions(ts4);
    let gens4 = pm(4);
    let k4 = complete_graph(4)?;
    let mut tally = [0usize; 2];
    let mut total = 0;
    for a in &parts4 {
        for b in &parts4 {
            for c in &parts4 {
                let hap = HapTable::new(4, vec![*a, *b, *c])?;
                equivalence_instance(report, &k4, &hap, &gens4, budget, &mut tally)?;
                total += 1;
            }
        }
    }
    report.line(format!("K4, all {total} three-day tables"));
    // every 2-regular subgraph of K4 is a 4-cycle
    let cycles = [[0, 1, 2, 3], [0, 1, 3, 2], [0, 2, 1, 3]];
    let mut cycle_instances = 0;
    for cyc in cycles {
        let pairs: Vec<(usize, usize)> = (0..4).map(|i| (cyc[i], cyc[(i + 1) % 4])).collect();
        let g = RegularGraph::from_pairs(4, &pairs)?;
        for a in &parts4 {
            for b in &parts4 {
                let hap = HapTable::new(4, vec![*a, *b])?;
                equivalence_instance(report, &g, &hap, &gens4, budget, &mut tally)?;
                cycle_instances += 1;
            }
        }
    }
    total += cycle_instances;
    report.line(format!("4-cycles in K4: {cycle_instances} two-day tables"));
    // six teams: the octahedron under every multiset of four days
    let parts6 = enumerate_partitions(TeamSet::new(6)?);
    let gens6 = pm(6);
    let octa = octahedron();
    let mut octa_instances = 0;
    for i in 0..parts6.len() {
        for j in i..parts6.len() {
            for k in j..parts6.len() {
                for l in k..parts6.len() {
                    let hap = HapTable::new(6, vec![parts6[i], parts6[j], parts6[k], parts6[l]])?;
                    equivalence_instance(report, &octa, &hap, &gens6, budget, &mut tally)?;
                    octa_instances += 1;
                }
            }
        }
    }
    total += octa_instances;
    report.line(format!("octahedron: {octa_instances} four-day multisets"));
    report.check(
        &format!("fractional feasibility agrees with cone membership on {}/{total}", tally[0]),
        tally[0] == total,
    );
    report.check(
        &format!("integral schedules agree with monoid membership on {}/{total}", tally[1]),
        tally[1] == total,
    );
    report.check(
        &format!("{} certificates re-verified", report.verified - before),
        report.verified == report.certificates,
    );
    Ok(())
}

/// How the partitions of K4,4 (sides `0..4` and `4..8`) split by their
/// matchable edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum K44Type {
    /// Every edge is matchable.
    Full,
    /// Some team has a single matchable partner, so that edge is forced.
    Forced,
    /// Every team has exactly two matchable partners.
    Even,
}

/// Structural type, or `None` for a partition no perfect matching crosses.
pub fn k44_type(g: &RegularGraph, c: EqualPartition) -> Option<K44Type> {
    let deg: Vec<usize> = (0..g.n())
        .map(|t| g.neighbors(t).into_iter().filter(|&u| c.crosses(PairIndex::new(t, u).expect("edge"))).count())
        .collect();
    if schedule::compatible_matchings(g, c).is_empty() {
        None
    } else if deg.iter().all(|&d| d == g.degree()) {
        Some(K44Type::Full)
    } else if deg.contains(&1) {
        Some(K44Type::Forced)
    } else {
        Some(K44Type::Even)
    }
}

/// Generator sets of the two cases: (a) no generator uses edge `{0,4}`,
/// standing for the edge forced by a day of the forced type; (b) only
/// full- and even-type days.
pub fn k44_case_generators() -> Result<(Vec<PMGenerator>, Vec<PMGenerator>)> {
    let g = complete_bipartite(4)?;
    let forced = PairIndex::new(0, 4)?;
    let gens = restricted_generators(&g);
    let case_a = gens.iter().filter(|x| !x.matching().contains(&forced)).cloned().collect();
    let case_b = gens
        .iter()
        .filter(|x| matches!(k44_type(&g, x.partition()), Some(K44Type::Full | K44Type::Even)))
        .cloned()
        .collect();
    Ok((case_a, case_b))
}

fn verify_k44(report: &mut ScenarioReport, budget: &Budget, opts: &ScenarioOptions) -> Result<()> {
    let g = complete_bipartite(4)?;
    // type boundaries by number of side-one teams on team 0's side
    for c in enumerate_partitions(TeamSet::new(8)?) {
        let h = c.home_side().iter().filter(|&&t| t < 4).count();
        let t = k44_type(&g, c);
        let want = match h {
            4 => Some(K44Type::Full),
            2 => Some(K44Type::Even),
            _ => Some(K44Type::Forced),
        };
        if t != want {
            report.check(&format!("partition {c} with h={h} has type {t:?}"), false);
        }
    }
    report.line("types: h=4 full, h=2 even, h=1 or 3 forced");
    let (case_a, case_b) = k44_case_generators()?;
    report.line("only basis elements with 0/1 edge components can occur in a problem vector;");
    report.line("they are the irreducible points of the unit slice, listed exhaustively per degree");
    for (name, gens) in [("caseA", case_a), ("caseB", case_b)] {
        let path = opts.checkpoint_dir.as_ref().map(|d| d.join(format!("k44_{name}.census")));
        let mut done: Vec<SliceDegree> = match &path {
            Some(p) if p.exists() => parse_census(&std::fs::read_to_string(p).map_err(io)?)?,
            _ => Vec::new(),
        };
        if !done.is_empty() {
            report.line(format!("{name}: resumed {} degrees from checkpoint", done.len()));
        }
        let max_degree = slice::max_degree(&gens)?;
        for r in done.len() + 1..=max_degree {
            match slice::slice_degree(&gens, r, budget) {
                Ok(d) => {
                    done.push(d);
                    if let Some(p) = &path {
                        std::fs::write(p, write_census(&done)).map_err(io)?;
                    }
                }
                Err(e) if e.is_budget() => {
                    // the other case is still worth attempting
                    report.line(format!("{name}: undecided at degree {r}"));
                    report.error(&e);
                    break;
                }
                Err(e) => return Err(e),
            }
        }
        if done.len() < max_degree {
            continue;
        }
        report.line(format!("{name}: {} generators, degrees 1..={max_degree}", gens.len()));
        for d in &done {
            report.line(format!(
                "{name} degree {}: {} candidates, {} in cone, {} in monoid, {} gaps",
                d.degree,
                d.candidates,
                d.in_cone,
                d.in_monoid,
                d.gaps.len()
            ));
        }
        let additional = slice::irreducible_gaps(&gens, &done, budget)?;
        report.line(format!("{name}: hilbert additional with 0/1 edges {}", additional.len()));
        for v in &additional {
            report.block(&format::write_vec(v));
        }
        report.check(&format!("{name}: no additional generator"), additional.is_empty());
        let (certs, verified) = done
            .iter()
            .fold((0, 0), |(c, v), d| (c + d.certificates, v + d.verified));
        report.certificate(
            &format!("{name}: {verified} of {certs} decompositions and separations"),
            verified == certs,
        );
        report.check(
            &format!("{name}: degree-1 points are exactly the generators"),
            done[0].in_monoid as usize == gens.len(),
        );
    }
    if report.status == Status::Pass {
        report.line("K4,4 is B-factorizable");
    }
    Ok(())
}

/// Per-degree census lines, each followed by its gap vectors.
fn write_census(degrees: &[SliceDegree]) -> String {
    let mut s = String::new();
    for d in degrees {
        s += &format!(
            "degree {} candidates {} cone {} monoid {} certificates {} verified {} gaps {}\n",
            d.degree,
            d.candidates,
            d.in_cone,
            d.in_monoid,
            d.certificates,
            d.verified,
            d.gaps.len()
        );
        for v in &d.gaps {
            s += &format::write_vec(v);
        }
    }
    s
}

fn parse_census(text: &str) -> Result<Vec<SliceDegree>> {
    let mut degrees: Vec<SliceDegree> = Vec::new();
    let mut gap_text: Option<String> = None;
    let flush = |degrees: &mut Vec<SliceDegree>, gap_text: &mut Option<String>| -> Result<()> {
        if let (Some(t), Some(d)) = (gap_text.take(), degrees.last_mut()) {
            d.gaps.push(format::parse_vec(&t)?);
        }
        Ok(())
    };
    for (i, line) in text.lines().enumerate() {
        let f: Vec<&str> = line.split_whitespace().collect();
        match f.as_slice() {
            ["degree", r, "candidates", c, "cone", k, "monoid", m, "certificates", ce, "verified", ve, "gaps", _] => {
                flush(&mut degrees, &mut gap_text)?;
                let num = |x: &str| x.parse::<u64>().map_err(|_| Error::parse(i + 1, format!("bad number {x:?}")));
                degrees.push(SliceDegree {
                    degree: num(r)? as usize,
                    candidates: num(c)?,
                    in_cone: num(k)?,
                    in_monoid: num(m)?,
                    certificates: num(ce)?,
                    verified: num(ve)?,
                    gaps: Vec::new(),
                });
            }
            ["vec", ..] => {
                flush(&mut degrees, &mut gap_text)?;
                gap_text = Some(format!("{line}\n"));
            }
            _ => match &mut gap_text {
                Some(t) => {
                    t.push_str(line);
                    t.push('\n');
                }
                None => return Err(Error::parse(i + 1, format!("unexpected census line {line:?}"))),
            },
        }
    }
    flush(&mut degrees, &mut gap_text)?;
    if degrees.iter().enumerate().any(|(i, d)| d.degree != i + 1) {
        return Err(Error::InvalidInput("census checkpoint degrees out of order".into()));
    }
    Ok(degrees)
}

fn io(e: std::io::Error) -> Error {
    Error::InvalidInput(format!("checkpoint: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn census_checkpoint_round_trips_with_gaps() {
        let gap = octahedron_vector();
        let degrees = vec![
            SliceDegree {
                degree: 1,
                candidates: 6,
                in_cone: 6,
                in_monoid: 6,
                gaps: Vec::new(),
                certificates: 6,
                verified: 6,
            },
            SliceDegree {
                degree: 2,
                candidates: 9,
                in_cone: 5,
                in_monoid: 3,
                gaps: vec![gap.clone(), gap],
                certificates: 9,
                verified: 9,
            },
        ];
        assert_eq!(parse_census(&write_census(&degrees)).unwrap(), degrees);
        assert!(parse_census("degree 2 candidates 1 cone 1 monoid 1 certificates 1 verified 1 gaps 0\n").is_err());
        assert!(parse_census("nonsense\n").is_err());
    }

    fn octahedron_vector() -> ProblemVector {
        let mut v = ProblemVector::chi_edges(6, complete_graph(6).unwrap().edges().iter().copied().skip(3));
        v.add_part(EqualPartition::from_side(6, &[0, 1, 2]).unwrap(), 2);
        v
    }

    #[test]
    fn k44_types_follow_side_counts() {
        let g = complete_bipartite(4).unwrap();
        let (a, b) = k44_case_generators().unwrap();
        assert_eq!((a.len(), b.len()), (144, 96));
        for c in enumerate_partitions(TeamSet::new(8).unwrap()) {
            let h = c.home_side().iter().filter(|&&t| t < 4).count();
            let want = match h {
                4 => K44Type::Full,
                2 => K44Type::Even,
                _ => K44Type::Forced,
            };
            assert_eq!(k44_type(&g, c), Some(want), "{c}");
        }
    }
}
