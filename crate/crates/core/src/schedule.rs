//! Day-indexed scheduling: home-away pattern tables, the fractional
//! schedule polytope, exhaustive integral schedule search, double-edge
//! coverings and the intersection-graph obstruction.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::budget::Budget;
use crate::combinat::{check_problem_vector, EqualPartition, PMGenerator, PairIndex, ProblemVector, TeamSet};
use crate::error::{Error, Result};
use crate::graphs::RegularGraph;
use crate::lp::{EqualityProgram, Feasibility, Q};
use crate::matching;

/// Largest edge count the bitmask search supports.
pub const MAX_SEARCH_EDGES: usize = 128;

/// One equal partition per day. Orientation (which side is "home") is not
/// part of the model: only the split matters for which pairs can meet.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HapTable {
    n: usize,
    days: Vec<EqualPartition>,
}

impl HapTable {
    pub fn new(n: usize, days: Vec<EqualPartition>) -> Result<Self> {
        TeamSet::new(n)?;
        if days.is_empty() {
            return Err(Error::InvalidInput("a HAP table needs at least one day".into()));
        }
        if let Some(c) = days.iter().find(|c| c.n() != n) {
            return Err(Error::TeamCountMismatch {
                expected: n,
                found: c.n(),
            });
        }
        Ok(HapTable { n, days })
    }

    /// Rows of `H`/`A` characters, one row per day, one column per team.
    pub fn from_rows(rows: &[&str]) -> Result<Self> {
        let n = rows.first().map_or(0, |r| r.len());
        let days = rows
            .iter()
            .map(|row| {
                if row.len() != n {
                    return Err(Error::InvalidInput("HAP rows of different lengths".into()));
                }
                let mut home = Vec::new();
                for (t, ch) in row.chars().enumerate() {
                    match ch {
                        'H' => home.push(t),
                        'A' => {}
                        other => return Err(Error::InvalidInput(format!("HAP entry {other:?} is not H or A"))),
                    }
                }
                EqualPartition::from_side(n, &home)
            })
            .collect::<Result<Vec<_>>>()?;
        HapTable::new(n, days)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn days(&self) -> &[EqualPartition] {
        &self.days
    }

    pub fn day_count(&self) -> usize {
        self.days.len()
    }

    /// Day rows as `H`/`A` strings, the side of team 0 written as `H`.
    pub fn rows(&self) -> Vec<String> {
        self.days
            .iter()
            .map(|c| (0..self.n).map(|t| if c.on_home_side(t) { 'H' } else { 'A' }).collect())
            .collect()
    }

    /// Partition multiplicities.
    pub fn multiset(&self) -> BTreeMap<EqualPartition, usize> {
        let mut m = BTreeMap::new();
        for &c in &self.days {
            *m.entry(c).or_insert(0) += 1;
        }
        m
    }

    pub fn permuted_days(&self, order: &[usize]) -> Result<HapTable> {
        if order.len() != self.days.len() {
            return Err(Error::InvalidInput("day permutation of the wrong length".into()));
        }
        HapTable::new(self.n, order.iter().map(|&d| self.days[d]).collect())
    }
}

fn check_instance(g: &RegularGraph, hap: &HapTable) -> Result<()> {
    if g.n() != hap.n() {
        return Err(Error::TeamCountMismatch {
            expected: g.n(),
            found: hap.n(),
        });
    }
    if hap.day_count() != g.degree() {
        return Err(Error::DayCountMismatch {
            days: hap.day_count(),
            degree: g.degree(),
        });
    }
    Ok(())
}

/// χ_E on edges and day multiplicities on partitions.
pub fn vector_of(g: &RegularGraph, hap: &HapTable) -> Result<ProblemVector> {
    if g.n() != hap.n() {
        return Err(Error::TeamCountMismatch {
            expected: g.n(),
            found: hap.n(),
        });
    }
    let mut v = g.indicator();
    for (c, k) in hap.multiset() {
        v.set_part(c, k as u64);
    }
    Ok(v)
}

/// Support graph and days (in partition order) of a problem vector.
pub fn hap_of(v: &ProblemVector) -> Result<HapTable> {
    check_problem_vector(v).map_err(|e| Error::NotAProblemVector(e.to_string()))?;
    let days: Vec<EqualPartition> = v
        .parts()
        .flat_map(|(c, k)| std::iter::repeat_n(c, k as usize))
        .collect();
    HapTable::new(v.n(), days)
}

/// The fractional schedule system: variables `x_{e,d}` for edges `e` that
/// cross day `d`'s partition (the others are forced to zero and dropped);
/// each edge is played once over all days and each team plays once per day.
#[derive(Clone, Debug)]
pub struct PolytopeInstance {
    pub graph: RegularGraph,
    pub hap: HapTable,
    /// Surviving variables, edge-major then day.
    pub variables: Vec<(PairIndex, usize)>,
    /// `|E| * r` before the same-side variables are removed.
    pub raw_variable_count: usize,
    pub program: EqualityProgram,
}

pub fn build_polytope(g: &RegularGraph, hap: &HapTable) -> Result<PolytopeInstance> {
    check_instance(g, hap)?;
    let r = hap.day_count();
    let variables: Vec<(PairIndex, usize)> = g
        .edges()
        .iter()
        .flat_map(|&e| (0..r).filter(move |&d| hap.days[d].crosses(e)).map(move |d| (e, d)))
        .collect();
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for &e in g.edges() {
        rows.push(variables.iter().map(|&(f, _)| indicator(f == e)).collect());
    }
    for d in 0..r {
        for t in 0..g.n() {
            rows.push(variables.iter().map(|&(f, dd)| indicator(dd == d && f.contains(t))).collect());
        }
    }
    let b = vec![Q::one(); rows.len()];
    Ok(PolytopeInstance {
        graph: g.clone(),
        hap: hap.clone(),
        raw_variable_count: g.edge_count() * r,
        program: EqualityProgram::new(rows, b)?,
        variables,
    })
}

fn indicator(b: bool) -> Q {
    if b {
        Q::one()
    } else {
        Q::zero()
    }
}

/// Values of the surviving variables.
#[derive(Clone, Debug, PartialEq)]
pub struct FractionalPoint {
    pub values: BTreeMap<(PairIndex, usize), Q>,
}

impl FractionalPoint {
    pub fn is_integral(&self) -> bool {
        self.values.values().all(|x| x.is_integer())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum FractionalOutcome {
    Feasible(FractionalPoint),
    /// Farkas multipliers for the polytope's equality rows.
    Infeasible(Vec<Q>),
}

pub fn fractional_feasible(p: &PolytopeInstance, budget: &Budget) -> Result<FractionalOutcome> {
    Ok(match p.program.feasible(budget)? {
        Feasibility::Feasible(x) => FractionalOutcome::Feasible(FractionalPoint {
            values: p.variables.iter().copied().zip(x).collect(),
        }),
        Feasibility::Infeasible(h) => FractionalOutcome::Infeasible(h),
    })
}

/// Checks a point against the full system, including the dropped same-side
/// variables (which must be absent or zero) and the box constraints.
pub fn verify_fractional_point(p: &PolytopeInstance, x: &FractionalPoint) -> bool {
    let r = p.hap.day_count();
    let value = |e: PairIndex, d: usize| x.values.get(&(e, d)).cloned().unwrap_or_else(Q::zero);
    let in_box = x.values.values().all(|v| !v.is_negative() && *v <= Q::one());
    let same_side_zero = x
        .values
        .iter()
        .all(|(&(e, d), v)| d < r && p.graph.has_edge(e) && (p.hap.days[d].crosses(e) || v.is_zero()));
    let edges_once = p
        .graph
        .edges()
        .iter()
        .all(|&e| (0..r).map(|d| value(e, d)).sum::<Q>() == Q::one());
    let teams_once = (0..r).all(|d| {
        (0..p.graph.n()).all(|t| {
            p.graph
                .edges()
                .iter()
                .filter(|e| e.contains(t))
                .map(|&e| value(e, d))
                .sum::<Q>()
                == Q::one()
        })
    });
    in_box && same_side_zero && edges_once && teams_once
}

/// A compatible edge coloring: day `d` plays `days[d]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Schedule {
    pub days: Vec<Vec<PairIndex>>,
}

impl Schedule {
    pub fn generators(&self, hap: &HapTable) -> Result<Vec<PMGenerator>> {
        self.days
            .iter()
            .zip(hap.days())
            .map(|(m, &c)| PMGenerator::new(m.clone(), c))
            .collect()
    }

    /// The 0/1 polytope point of this schedule.
    pub fn to_point(&self) -> FractionalPoint {
        let mut values = BTreeMap::new();
        for (d, m) in self.days.iter().enumerate() {
            for &e in m {
                values.insert((e, d), Q::one());
            }
        }
        FractionalPoint { values }
    }
}

impl fmt::Display for Schedule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (d, m) in self.days.iter().enumerate() {
            write!(f, "day {}:", d + 1)?;
            for p in m {
                write!(f, " {p}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Independent check: perfect matchings, pairwise disjoint, union `E`,
/// each crossing its day.
pub fn verify_schedule(g: &RegularGraph, hap: &HapTable, s: &Schedule) -> bool {
    if s.days.len() != hap.day_count() || g.n() != hap.n() {
        return false;
    }
    let mut used: Vec<PairIndex> = Vec::new();
    for (m, c) in s.days.iter().zip(hap.days()) {
        if PMGenerator::new(m.clone(), *c).is_err() || m.iter().any(|e| !g.has_edge(*e)) {
            return false;
        }
        used.extend(m);
    }
    used.sort();
    used == g.edges()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScheduleOutcome {
    Found(Schedule),
    /// Exhaustive search finished without a schedule; `nodes` is its size.
    NoSchedule { nodes: u64 },
}

/// Perfect matchings of `g` crossing `c`, as sorted edge lists.
pub fn compatible_matchings(g: &RegularGraph, c: EqualPartition) -> Vec<Vec<PairIndex>> {
    let crossing: Vec<PairIndex> = g.edges().iter().copied().filter(|&e| c.crosses(e)).collect();
    matching::perfect_matchings(g.n(), &crossing)
}

fn edge_mask(g_edges: &[PairIndex], m: &[PairIndex]) -> Option<u128> {
    m.iter().try_fold(0u128, |acc, e| {
        g_edges.binary_search(e).ok().map(|i| acc | 1u128 << i)
    })
}

/// Exhaustive search for one candidate per day, pairwise disjoint, covering
/// `target` exactly. Days sharing a type draw from the same candidate list
/// and choose in increasing index order. Branches on the type with the
/// fewest usable candidates; prunes when a remaining edge has no usable
/// candidate on any remaining day.
pub(crate) fn exact_cover(
    target: u128,
    types: &[(usize, Vec<u128>)],
    budget: &Budget,
) -> Result<(Option<Vec<(usize, usize)>>, u64)> {
    struct Search<'a> {
        types: &'a [(usize, Vec<u128>)],
        budget: &'a Budget,
        left: Vec<usize>,
        floor: Vec<usize>,
        chosen: Vec<(usize, usize)>,
        nodes: u64,
    }
    impl Search<'_> {
        fn run(&mut self, remaining: u128) -> Result<bool> {
            self.nodes += 1;
            self.budget.tick("integral schedule search")?;
            if self.left.iter().all(|&k| k == 0) {
                return Ok(remaining == 0);
            }
            let mut best: Option<(usize, usize)> = None;
            let mut reach = 0u128;
            for (t, (_, cands)) in self.types.iter().enumerate() {
                if self.left[t] == 0 {
                    continue;
                }
                let mut count = 0;
                for &m in &cands[self.floor[t]..] {
                    if m & !remaining == 0 {
                        count += 1;
                        reach |= m;
                    }
                }
                if count < self.left[t] {
                    return Ok(false);
                }
                if best.is_none_or(|(_, c)| count < c) {
                    best = Some((t, count));
                }
            }
            if reach != remaining {
                return Ok(false);
            }
            let (t, _) = best.expect("some type has days left");
            let cands = &self.types[t].1;
            let (saved_floor, start) = (self.floor[t], self.floor[t]);
            for i in start..cands.len() {
                let m = cands[i];
                if m & !remaining != 0 {
                    continue;
                }
                self.left[t] -= 1;
                self.floor[t] = i + 1;
                self.chosen.push((t, i));
                if self.run(remaining & !m)? {
                    return Ok(true);
                }
                self.chosen.pop();
                self.left[t] += 1;
            }
            self.floor[t] = saved_floor;
            Ok(false)
        }
    }
    let mut s = Search {
        types,
        budget,
        left: types.iter().map(|(k, _)| *k).collect(),
        floor: vec![0; types.len()],
        chosen: Vec::new(),
        nodes: 0,
    };
    let found = s.run(target)?;
    Ok((found.then_some(s.chosen), s.nodes))
}

/// Exhaustive search for a compatible edge coloring.
pub fn find_integral_schedule(g: &RegularGraph, hap: &HapTable, budget: &Budget) -> Result<ScheduleOutcome> {
    check_instance(g, hap)?;
    if g.edge_count() > MAX_SEARCH_EDGES {
        return Err(Error::InvalidInput(format!(
            "schedule search supports at most {MAX_SEARCH_EDGES} edges"
        )));
    }
    let multiset = hap.multiset();
    let kinds: Vec<EqualPartition> = multiset.keys().copied().collect();
    let lists: Vec<Vec<Vec<PairIndex>>> = kinds.iter().map(|&c| compatible_matchings(g, c)).collect();
    let types: Vec<(usize, Vec<u128>)> = kinds
        .iter()
        .zip(&lists)
        .map(|(c, ms)| {
            (
                multiset[c],
                ms.iter().map(|m| edge_mask(g.edges(), m).expect("edges of g")).collect(),
            )
        })
        .collect();
    let target = if g.edge_count() == 128 {
        u128::MAX
    } else {
        (1u128 << g.edge_count()) - 1
    };
    let (found, nodes) = exact_cover(target, &types, budget)?;
    let Some(chosen) = found else {
        return Ok(ScheduleOutcome::NoSchedule { nodes });
    };
    // hand the chosen matchings of each type to that type's days in order
    let mut per_type: Vec<Vec<usize>> = vec![Vec::new(); kinds.len()];
    for (t, i) in chosen {
        per_type[t].push(i);
    }
    for v in per_type.iter_mut() {
        v.reverse();
    }
    let days = hap
        .days()
        .iter()
        .map(|c| {
            let t = kinds.binary_search(c).expect("kind of a day");
            lists[t][per_type[t].pop().expect("one matching per day")].clone()
        })
        .collect();
    Ok(ScheduleOutcome::Found(Schedule { days }))
}

/// Exact check that the generators sum to `2v`.
pub fn verify_double_cover(v: &ProblemVector, gens: &[PMGenerator]) -> bool {
    let mut sum = ProblemVector::zero(v.n());
    for g in gens {
        match sum.plus(&g.to_vector()) {
            Ok(s) => sum = s,
            Err(_) => return false,
        }
    }
    sum == v.scaled(2)
}

/// Searches two compatible matchings per day (repetition allowed) covering
/// every edge exactly twice. Returns them in day order.
pub fn double_cover_search(g: &RegularGraph, hap: &HapTable, budget: &Budget) -> Result<Option<Vec<PMGenerator>>> {
    check_instance(g, hap)?;
    if g.edge_count() > MAX_SEARCH_EDGES {
        return Err(Error::InvalidInput(format!(
            "double cover search supports at most {MAX_SEARCH_EDGES} edges"
        )));
    }
    let lists: Vec<Vec<Vec<PairIndex>>> = hap.days().iter().map(|&c| compatible_matchings(g, c)).collect();
    let masks: Vec<Vec<u128>> = lists
        .iter()
        .map(|ms| ms.iter().map(|m| edge_mask(g.edges(), m).expect("edges of g")).collect())
        .collect();
    let full = if g.edge_count() == 128 {
        u128::MAX
    } else {
        (1u128 << g.edge_count()) - 1
    };
    // state: edges covered twice / once
    fn rec(
        d: usize,
        masks: &[Vec<u128>],
        twice: u128,
        once: u128,
        full: u128,
        pick: &mut Vec<(usize, usize)>,
        budget: &Budget,
    ) -> Result<bool> {
        budget.tick("double cover search")?;
        if d == masks.len() {
            return Ok(twice == full && once == 0);
        }
        let ms = &masks[d];
        for i in 0..ms.len() {
            for j in i..ms.len() {
                let (a, b) = (ms[i], ms[j]);
                let both = a & b;
                let single = a ^ b;
                if twice & (a | b) != 0 || once & both != 0 {
                    continue;
                }
                pick.push((i, j));
                if rec(d + 1, masks, twice | both | (once & single), once ^ single, full, pick, budget)? {
                    return Ok(true);
                }
                pick.pop();
            }
        }
        Ok(false)
    }
    let mut pick = Vec::new();
    if !rec(0, &masks, 0, 0, full, &mut pick, budget)? {
        return Ok(None);
    }
    let mut out = Vec::with_capacity(2 * pick.len());
    for (d, (i, j)) in pick.into_iter().enumerate() {
        let c = hap.days()[d];
        out.push(PMGenerator::new(lists[d][i].clone(), c)?);
        out.push(PMGenerator::new(lists[d][j].clone(), c)?);
    }
    Ok(Some(out))
}

/// A generator tagged with the day it is a candidate for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DayCandidate {
    pub day: usize,
    pub generator: PMGenerator,
}

/// Every compatible matching of every day.
pub fn day_candidates(g: &RegularGraph, hap: &HapTable) -> Result<Vec<DayCandidate>> {
    check_instance(g, hap)?;
    let mut out = Vec::new();
    for (d, &c) in hap.days().iter().enumerate() {
        for m in compatible_matchings(g, c) {
            out.push(DayCandidate {
                day: d,
                generator: PMGenerator::new(m, c)?,
            });
        }
    }
    Ok(out)
}

/// Conflict graph: candidates are adjacent when they share an edge or a day.
pub fn intersection_graph(cands: &[DayCandidate]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); cands.len()];
    for i in 0..cands.len() {
        for j in i + 1..cands.len() {
            let shared_edge = cands[i]
                .generator
                .matching()
                .iter()
                .any(|e| cands[j].generator.matching().contains(e));
            if cands[i].day == cands[j].day || shared_edge {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    adj
}

/// Whether the intersection graph has a stable set of size `r`, which then
/// holds one candidate per day for `r` distinct days.
pub fn has_disjoint_system(cands: &[DayCandidate], r: usize, budget: &Budget) -> Result<bool> {
    let adj = intersection_graph(cands);
    let mut conflict = vec![vec![false; cands.len()]; cands.len()];
    for (i, ns) in adj.iter().enumerate() {
        for &j in ns {
            conflict[i][j] = true;
        }
    }
    fn rec(start: usize, left: usize, chosen: &mut Vec<usize>, conflict: &[Vec<bool>], budget: &Budget) -> Result<bool> {
        budget.tick("stable set search")?;
        if left == 0 {
            return Ok(true);
        }
        for i in start..conflict.len() {
            if chosen.iter().all(|&c| !conflict[c][i]) {
                chosen.push(i);
                if rec(i + 1, left - 1, chosen, conflict, budget)? {
                    return Ok(true);
                }
                chosen.pop();
            }
        }
        Ok(false)
    }
    rec(0, r, &mut Vec::new(), &conflict, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{antiprism, complete_graph, petersen, prism};

    fn rotation_table() -> HapTable {
        // days as team rows over teams 0..4
        HapTable::from_rows(&["HHAA", "HAAH", "HAHA"]).unwrap()
    }

    #[test]
    fn hap_rows_round_trip() {
        let hap = rotation_table();
        assert_eq!(hap.rows(), vec!["HHAA", "HAAH", "HAHA"]);
        assert_eq!(HapTable::from_rows(&["AAHH"]).unwrap().rows(), vec!["HHAA"]);
        assert!(HapTable::from_rows(&["HHHA"]).is_err());
        assert!(HapTable::from_rows(&["HXAA"]).is_err());
    }

    #[test]
    fn rotation_table_schedule() {
        let g = complete_graph(4).unwrap();
        let hap = rotation_table();
        let ScheduleOutcome::Found(s) = find_integral_schedule(&g, &hap, &Budget::unlimited()).unwrap() else {
            panic!("the rotation table has a schedule");
        };
        assert!(verify_schedule(&g, &hap, &s));
        let p = |a, b| PairIndex::of(a, b);
        assert_eq!(
            s.days,
            vec![vec![p(0, 2), p(1, 3)], vec![p(0, 1), p(2, 3)], vec![p(0, 3), p(1, 2)]]
        );
    }

    #[test]
    fn rotation_table_polytope_sizes() {
        let inst = build_polytope(&complete_graph(4).unwrap(), &rotation_table()).unwrap();
        assert_eq!(inst.raw_variable_count, 18);
        assert_eq!(inst.variables.len(), 12);
        let FractionalOutcome::Feasible(x) = fractional_feasible(&inst, &Budget::unlimited()).unwrap() else {
            panic!("feasible");
        };
        assert!(verify_fractional_point(&inst, &x));
    }

    #[test]
    fn repeated_partition_is_infeasible() {
        let g = complete_graph(4).unwrap();
        let hap = HapTable::from_rows(&["HHAA", "HHAA", "HHAA"]).unwrap();
        let inst = build_polytope(&g, &hap).unwrap();
        let FractionalOutcome::Infeasible(h) = fractional_feasible(&inst, &Budget::unlimited()).unwrap() else {
            panic!("infeasible");
        };
        assert!(inst.program.check_farkas(&h));
        assert!(matches!(
            find_integral_schedule(&g, &hap, &Budget::unlimited()).unwrap(),
            ScheduleOutcome::NoSchedule { .. }
        ));
    }

    #[test]
    fn day_count_must_match_degree() {
        let g = prism(4).unwrap();
        let hap = HapTable::from_rows(&["HHHHAAAA"; 4]).unwrap();
        assert!(matches!(build_polytope(&g, &hap), Err(Error::DayCountMismatch { days: 4, degree: 3 })));
    }

    #[test]
    fn vector_and_hap_round_trip() {
        let g = complete_graph(4).unwrap();
        let v = vector_of(&g, &rotation_table()).unwrap();
        assert_eq!(v.edge_sum(), 6);
        assert_eq!(v.part_sum(), 3);
        assert_eq!(hap_of(&v).unwrap().multiset(), rotation_table().multiset());
        let same = HapTable::from_rows(&["HHAA"; 3]).unwrap();
        let v = vector_of(&g, &same).unwrap();
        assert_eq!(v.part(same.days()[0]), 3);
        assert!(hap_of(&ProblemVector::chi_k(4)).is_err());
    }

    #[test]
    fn petersen_has_no_schedule() {
        let g = petersen();
        let hap = HapTable::from_rows(&["HAHAHAHAHA", "HHAAHHAAHA", "HHHHHAAAAA"]).unwrap();
        assert!(matches!(
            find_integral_schedule(&g, &hap, &Budget::unlimited()).unwrap(),
            ScheduleOutcome::NoSchedule { .. }
        ));
    }

    #[test]
    fn double_cover_of_duplicated_schedule() {
        let g = complete_graph(4).unwrap();
        let hap = rotation_table();
        let ScheduleOutcome::Found(s) = find_integral_schedule(&g, &hap, &Budget::unlimited()).unwrap() else {
            panic!()
        };
        let mut gens = s.generators(&hap).unwrap();
        gens.extend(gens.clone());
        let v = vector_of(&g, &hap).unwrap();
        assert!(verify_double_cover(&v, &gens));
        gens.pop();
        assert!(!verify_double_cover(&v, &gens));
        let found = double_cover_search(&g, &hap, &Budget::unlimited()).unwrap().unwrap();
        assert!(verify_double_cover(&v, &found));
    }

    #[test]
    fn disjoint_systems() {
        let g = complete_graph(4).unwrap();
        let hap = rotation_table();
        let cands = day_candidates(&g, &hap).unwrap();
        assert!(has_disjoint_system(&cands, 3, &Budget::unlimited()).unwrap());
        assert!(has_disjoint_system(&cands[..1], 1, &Budget::unlimited()).unwrap());
        // base alternating pattern on the 8-antiprism: only the outer cycle is matchable
        let a8 = antiprism(8).unwrap();
        let alt = HapTable::from_rows(&["HAHAHAHA"; 4]).unwrap();
        let cands = day_candidates(&a8, &alt).unwrap();
        assert_eq!(cands.len(), 8);
        assert!(!has_disjoint_system(&cands, 4, &Budget::unlimited()).unwrap());
    }
}
