//! Certified counterexamples on antiprisms.
//!
//! Teams sit on a cycle `0..n`; the antiprism joins teams at cyclic
//! distance 1 and 2. Every day starts from the alternating split (even teams
//! on one side) and then swaps the two teams of a few adjacent pairs
//! `{i, i+1 mod n}`. A [`TwistSchedule`] says which pairs are swapped on
//! which of the four days.
//!
//! The resulting vector is fractionally schedulable: two compatible
//! matchings per day cover every edge exactly twice. It is not integrally
//! schedulable, which an exhaustive search and an independent stable-set
//! search both confirm.

use std::fmt;

use crate::budget::Budget;
use crate::combinat::{is_problem_vector, support_graph, EqualPartition, PMGenerator, ProblemVector};
use crate::cone::{
    cone_member, hilbert_basis, restricted_generators, verify_decomposition, ConeMembership, MatchingDecomposition,
};
use crate::error::{Error, Result};
use crate::graphs::{antiprism, RegularGraph};
use crate::schedule::{
    self, day_candidates, find_integral_schedule, has_disjoint_system, vector_of, verify_double_cover, HapTable,
    ScheduleOutcome,
};

/// Twisted pairs per day; pair `i` is `{i, i+1 mod n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistSchedule {
    pub n: usize,
    pub twists: [Vec<usize>; 4],
}

/// Day of each pair for the eight-team base block.
const BASE_8: [usize; 8] = [1, 0, 2, 3, 0, 1, 3, 2];
/// Day of each pair for the ten-team base block.
const BASE_10: [usize; 10] = [0, 1, 2, 0, 3, 1, 0, 2, 1, 3];
/// Day of each pair in a four-team extension block.
const BLOCK: [usize; 4] = [0, 1, 2, 3];

/// Minimum cyclic distance between two pairs twisted on the same day.
pub const MIN_TWIST_DISTANCE: usize = 3;

impl TwistSchedule {
    /// Builds a schedule from the day of each pair.
    pub fn from_days(days: &[usize]) -> Result<Self> {
        let mut twists: [Vec<usize>; 4] = Default::default();
        for (i, &d) in days.iter().enumerate() {
            let slot = twists
                .get_mut(d)
                .ok_or_else(|| Error::InvalidInput(format!("twist day {d} out of range")))?;
            slot.push(i);
        }
        let s = TwistSchedule { n: days.len(), twists };
        s.validate()?;
        Ok(s)
    }

    /// Each pair twisted exactly once; same-day pairs at cyclic distance
    /// at least [`MIN_TWIST_DISTANCE`].
    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        let mut seen = vec![0usize; n];
        for day in &self.twists {
            for &i in day {
                if i >= n {
                    return Err(Error::InvalidInput(format!("pair index {i} out of range")));
                }
                seen[i] += 1;
            }
            for (k, &i) in day.iter().enumerate() {
                for &j in &day[k + 1..] {
                    let d = i.abs_diff(j);
                    if d.min(n - d) < MIN_TWIST_DISTANCE {
                        return Err(Error::InvalidInput(format!(
                            "pairs {i} and {j} twisted on one day are too close"
                        )));
                    }
                }
            }
        }
        if let Some(i) = seen.iter().position(|&c| c != 1) {
            return Err(Error::InvalidInput(format!(
                "pair {i} is twisted {} times",
                seen[i]
            )));
        }
        Ok(())
    }

    /// The four day partitions.
    pub fn hap(&self) -> Result<HapTable> {
        let n = self.n;
        let days = self
            .twists
            .iter()
            .map(|day| {
                let mut home: Vec<bool> = (0..n).map(|t| t % 2 == 0).collect();
                for &i in day {
                    home.swap(i, (i + 1) % n);
                }
                let side: Vec<usize> = (0..n).filter(|&t| home[t]).collect();
                EqualPartition::from_side(n, &side)
            })
            .collect::<Result<Vec<_>>>()?;
        HapTable::new(n, days)
    }
}

impl fmt::Display for TwistSchedule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (d, day) in self.twists.iter().enumerate() {
            write!(f, "twist day {}:", d + 1)?;
            for &i in day {
                write!(f, " {{{},{}}}", i, (i + 1) % self.n)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// The twist tables exactly as published for 8 and 10 teams.
///
/// The eight-team table admits an integral schedule, so it is not used by
/// [`antiprism_hap`]; see [`antiprism_twists`].
pub fn published_twists(n: usize) -> Result<TwistSchedule> {
    match n {
        8 => TwistSchedule::from_days(&[1, 0, 2, 3, 0, 1, 2, 3]),
        10 => TwistSchedule::from_days(&BASE_10),
        _ => Err(Error::InvalidInput(format!("no published twist table for {n} teams"))),
    }
}

/// Twist schedule used for `n` teams: a base block of 8 or 10 pairs
/// followed by four-pair blocks twisted on days 1, 2, 3, 4.
///
/// For 8 teams this differs from the published table in that pairs
/// `{6,7}` and `{7,0}` trade days 3 and 4.
pub fn antiprism_twists(n: usize) -> Result<TwistSchedule> {
    if !n.is_multiple_of(2) || n < 8 {
        return Err(Error::InvalidInput(format!(
            "twisted antiprism tables need an even team count of at least 8, got {n}"
        )));
    }
    let base: &[usize] = if n.is_multiple_of(4) { &BASE_8 } else { &BASE_10 };
    let mut days = base.to_vec();
    while days.len() < n {
        days.extend_from_slice(&BLOCK);
    }
    TwistSchedule::from_days(&days)
}

pub fn antiprism_hap(n: usize) -> Result<(HapTable, TwistSchedule)> {
    let t = antiprism_twists(n)?;
    Ok((t.hap()?, t))
}

/// A fractionally but not integrally schedulable antiprism instance with
/// the evidence for both halves.
#[derive(Clone, Debug)]
pub struct AntiprismCertificate {
    pub graph: RegularGraph,
    pub hap: HapTable,
    pub twists: Option<TwistSchedule>,
    pub vector: ProblemVector,
    /// Two compatible matchings per day, in day order, summing to `2v`.
    pub double_cover: Vec<PMGenerator>,
    /// Rational decomposition of `v`.
    pub decomposition: MatchingDecomposition,
    /// Size of the exhaustive schedule search that found nothing.
    pub search_nodes: u64,
    /// Compatible matchings per day.
    pub matchings_per_day: Vec<usize>,
    /// Whether the day-candidate conflict graph has a stable set with one
    /// candidate per day.
    pub stable_set: bool,
}

impl AntiprismCertificate {
    /// Re-checks every part of the certificate without the searches that
    /// produced it, except the stable-set search, which is itself the
    /// independent check of the schedule search.
    pub fn verify(&self) -> bool {
        let g = &self.graph;
        is_problem_vector(&self.vector)
            && support_graph(&self.vector) == g.edges()
            && vector_of(g, &self.hap).is_ok_and(|v| v == self.vector)
            && self.double_cover.len() == 2 * self.hap.day_count()
            && self
                .double_cover
                .chunks(2)
                .zip(self.hap.days())
                .all(|(pair, &c)| pair.iter().all(|m| m.partition() == c))
            && verify_double_cover(&self.vector, &self.double_cover)
            && verify_decomposition(&self.vector, &self.decomposition)
            && !self.stable_set
    }
}

/// The six-team instance: the first additional Hilbert basis element of
/// the octahedron's restricted generators whose support is every edge.
pub fn octahedron_generator(budget: &Budget) -> Result<ProblemVector> {
    let g = antiprism(6)?;
    let hb = hilbert_basis(&restricted_generators(&g), budget)?;
    hb.additional
        .into_iter()
        .find(|v| is_problem_vector(v) && support_graph(v) == g.edges())
        .ok_or_else(|| Error::InvalidInput("the octahedron has no additional generator".into()))
}

pub fn antiprism_counterexample(n: usize, budget: &Budget) -> Result<AntiprismCertificate> {
    let g = antiprism(n)?;
    let (hap, twists) = if n == 6 {
        (schedule::hap_of(&octahedron_generator(budget)?)?, None)
    } else {
        let (h, t) = antiprism_hap(n)?;
        (h, Some(t))
    };
    certify(g, hap, twists, budget)
}

/// Gathers the certificate for an arbitrary antiprism instance; fails with
/// `PreconditionViolated` if the instance is not a counterexample.
pub fn certify(
    g: RegularGraph,
    hap: HapTable,
    twists: Option<TwistSchedule>,
    budget: &Budget,
) -> Result<AntiprismCertificate> {
    let vector = vector_of(&g, &hap)?;
    let double_cover = schedule::double_cover_search(&g, &hap, budget)?
        .ok_or_else(|| Error::PreconditionViolated("no double cover of the instance".into()))?;
    let search_nodes = match find_integral_schedule(&g, &hap, budget)? {
        ScheduleOutcome::NoSchedule { nodes } => nodes,
        ScheduleOutcome::Found(s) => {
            return Err(Error::PreconditionViolated(format!(
                "the instance has an integral schedule:\n{s}"
            )))
        }
    };
    let decomposition = match cone_member(&vector, &restricted_generators(&g), budget)? {
        ConeMembership::Member(dec) => dec,
        ConeMembership::NotMember(_) => {
            return Err(Error::PreconditionViolated("instance outside the rational cone".into()))
        }
    };
    let matchings_per_day = hap
        .days()
        .iter()
        .map(|&c| schedule::compatible_matchings(&g, c).len())
        .collect();
    let stable_set = has_disjoint_system(&day_candidates(&g, &hap)?, hap.day_count(), budget)?;
    Ok(AntiprismCertificate {
        graph: g,
        hap,
        twists,
        vector,
        double_cover,
        decomposition,
        search_nodes,
        matchings_per_day,
        stable_set,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twist_schedules_satisfy_their_invariants() {
        for n in (8..=30).step_by(2) {
            let t = antiprism_twists(n).unwrap();
            t.validate().unwrap();
            let sizes: Vec<usize> = t.twists.iter().map(Vec::len).collect();
            let k = n / 4;
            if n % 4 == 0 {
                assert_eq!(sizes, vec![k; 4]);
            } else {
                assert_eq!(sizes, vec![k + 1, k + 1, k, k]);
            }
        }
        assert!(antiprism_twists(6).is_err());
        assert!(antiprism_twists(9).is_err());
    }

    #[test]
    fn published_tables() {
        let t8 = published_twists(8).unwrap();
        assert_eq!(t8.twists, [vec![1, 4], vec![0, 5], vec![2, 6], vec![3, 7]]);
        let t10 = published_twists(10).unwrap();
        assert_eq!(t10.twists, [vec![0, 3, 6], vec![1, 5, 8], vec![2, 7], vec![4, 9]]);
        assert_eq!(antiprism_twists(10).unwrap(), t10);
    }

    #[test]
    fn published_eight_team_table_is_schedulable() {
        let g = antiprism(8).unwrap();
        let hap = published_twists(8).unwrap().hap().unwrap();
        let out = find_integral_schedule(&g, &hap, &Budget::unlimited()).unwrap();
        let ScheduleOutcome::Found(s) = out else { panic!() };
        assert!(schedule::verify_schedule(&g, &hap, &s));
    }

    #[test]
    fn twisting_keeps_days_balanced_and_distinct_from_base() {
        let (hap, _) = antiprism_hap(12).unwrap();
        let base: Vec<usize> = (0..12).step_by(2).collect();
        let base = EqualPartition::from_side(12, &base).unwrap();
        assert!(hap.days().iter().all(|&c| c != base && c.home_side().len() == 6));
    }

    #[test]
    fn eight_and_ten_team_counterexamples() {
        let budget = Budget::unlimited();
        for n in [8, 10] {
            let cert = antiprism_counterexample(n, &budget).unwrap();
            assert!(cert.verify(), "n = {n}");
        }
    }
}
