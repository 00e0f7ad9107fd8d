//! The lattice points of a perfect-matching cone whose edge components are
//! all 0 or 1.
//!
//! Such a point of degree `r` (its partition components sum to `r`) has an
//! `r`-regular spanning edge set, so the points of each degree are finitely
//! many and can be listed exhaustively. Every summand of such a point again
//! has 0/1 edge components, so the Hilbert basis elements with 0/1 edge
//! components are exactly the irreducible points listed here. Whether any
//! of them is an additional generator is decided without the rest of the
//! Hilbert basis, whose other elements can be far more numerous.

use std::collections::{BTreeSet, HashMap};

use super::{cone_member, monoid_member, verify_decomposition, verify_separation, ConeMembership, MonoidMembership};
use crate::budget::Budget;
use crate::combinat::{EqualPartition, PMGenerator, PairIndex, ProblemVector};
use crate::error::{Error, Result};
use crate::schedule::MAX_SEARCH_EDGES;

/// Census of the points of one degree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SliceDegree {
    pub degree: usize,
    /// Edge sets times partition multisets passing the covering prefilter.
    pub candidates: u64,
    /// Candidates in the rational cone.
    pub in_cone: u64,
    /// Candidates that are sums of generators.
    pub in_monoid: u64,
    /// Cone points that are not sums of generators.
    pub gaps: Vec<ProblemVector>,
    /// Decompositions and separations checked independently.
    pub certificates: u64,
    pub verified: u64,
}

/// Census of every degree, plus the irreducible gaps.
#[derive(Clone, Debug, Default)]
pub struct SliceCensus {
    pub degrees: Vec<SliceDegree>,
    /// Hilbert basis elements with 0/1 edge components that are not
    /// generators.
    pub additional: Vec<ProblemVector>,
}

/// Edge universe and generator data shared by the enumeration.
struct Universe<'a> {
    gens: &'a [PMGenerator],
    n: usize,
    edges: Vec<PairIndex>,
    /// Per generator: its partition and its matching as an edge mask.
    masks: Vec<(EqualPartition, u128)>,
    partitions: Vec<EqualPartition>,
}

impl<'a> Universe<'a> {
    fn new(gens: &'a [PMGenerator]) -> Result<Self> {
        let n = gens
            .first()
            .map(|g| g.n())
            .ok_or_else(|| Error::InvalidInput("no generators".into()))?;
        if gens.iter().any(|g| g.n() != n) {
            return Err(Error::DimensionMismatch("generators on different team counts".into()));
        }
        let edges: Vec<PairIndex> = gens
            .iter()
            .flat_map(|g| g.matching().iter().copied())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        if edges.len() > MAX_SEARCH_EDGES {
            return Err(Error::InvalidInput(format!("at most {MAX_SEARCH_EDGES} edges supported")));
        }
        let masks = gens
            .iter()
            .map(|g| {
                let m = g.matching().iter().fold(0u128, |acc, e| {
                    acc | 1 << edges.binary_search(e).expect("edge of the universe")
                });
                (g.partition(), m)
            })
            .collect();
        let partitions = gens
            .iter()
            .map(|g| g.partition())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        Ok(Universe {
            gens,
            n,
            edges,
            masks,
            partitions,
        })
    }

    /// Largest degree with a regular spanning edge set: the minimum
    /// vertex degree of the universe.
    fn max_degree(&self) -> usize {
        (0..self.n)
            .map(|t| self.edges.iter().filter(|e| e.contains(t)).count())
            .min()
            .unwrap_or(0)
    }

    /// All `r`-regular spanning edge sets, as masks.
    fn regular_sets(&self, r: usize) -> Vec<u128> {
        fn rec(u: &Universe, r: usize, i: usize, deg: &mut [usize], mask: u128, out: &mut Vec<u128>) {
            if i == u.edges.len() {
                if deg.iter().all(|&d| d == r) {
                    out.push(mask);
                }
                return;
            }
            let e = u.edges[i];
            // every vertex must still be able to reach degree r
            let (a, b) = (e.a(), e.b());
            if deg[a] < r && deg[b] < r {
                deg[a] += 1;
                deg[b] += 1;
                rec(u, r, i + 1, deg, mask | 1 << i, out);
                deg[a] -= 1;
                deg[b] -= 1;
            }
            // skipping e is fine only if a and b keep enough later edges
            let later = |t: usize| u.edges[i + 1..].iter().filter(|f| f.contains(t)).count();
            if deg[a] + later(a) >= r && deg[b] + later(b) >= r {
                rec(u, r, i + 1, deg, mask, out);
            }
        }
        let mut out = Vec::new();
        rec(self, r, 0, &mut vec![0; self.n], 0, &mut out);
        out
    }

    fn vector(&self, set: u128, days: &[EqualPartition]) -> ProblemVector {
        let mut v = ProblemVector::chi_edges(
            self.n,
            (0..self.edges.len()).filter(|&i| set >> i & 1 == 1).map(|i| self.edges[i]),
        );
        for &c in days {
            v.add_part(c, 1);
        }
        v
    }
}

/// Multisets of size `r` drawn from `0..k`, as nondecreasing index lists.
fn multisets(k: usize, r: usize, f: &mut impl FnMut(&[usize]) -> Result<()>) -> Result<()> {
    fn rec(k: usize, r: usize, from: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize]) -> Result<()>) -> Result<()> {
        if cur.len() == r {
            return f(cur);
        }
        for i in from..k {
            cur.push(i);
            rec(k, r, i, cur, f)?;
            cur.pop();
        }
        Ok(())
    }
    rec(k, r, 0, &mut Vec::with_capacity(r), f)
}

/// Lists every point of degree `r` with 0/1 edge components and sorts it
/// into monoid members, cone members outside the monoid (gaps), and
/// non-members. Every membership answer comes with a certificate that is
/// re-checked.
pub fn slice_degree(gens: &[PMGenerator], r: usize, budget: &Budget) -> Result<SliceDegree> {
    let u = Universe::new(gens)?;
    let mut out = SliceDegree {
        degree: r,
        ..SliceDegree::default()
    };
    for set in u.regular_sets(r) {
        // partitions with a generator inside the edge set, and the edges
        // those generators cover
        let usable: Vec<(EqualPartition, u128)> = u
            .partitions
            .iter()
            .map(|&c| {
                let cover = u
                    .masks
                    .iter()
                    .filter(|&&(d, m)| d == c && m & !set == 0)
                    .fold(0u128, |acc, &(_, m)| acc | m);
                (c, cover)
            })
            .filter(|&(_, cover)| cover != 0)
            .collect();
        multisets(usable.len(), r, &mut |pick| {
            let cover = pick.iter().fold(0u128, |acc, &i| acc | usable[i].1);
            if cover != set {
                return Ok(());
            }
            budget.tick("unit slice")?;
            out.candidates += 1;
            let days: Vec<EqualPartition> = pick.iter().map(|&i| usable[i].0).collect();
            let v = u.vector(set, &days);
            out.certificates += 1;
            match monoid_member(&v, u.gens, budget)? {
                MonoidMembership::Member(d) => {
                    out.in_cone += 1;
                    out.in_monoid += 1;
                    out.verified += u64::from(verify_decomposition(&v, &d));
                }
                MonoidMembership::NotMember { .. } => match cone_member(&v, u.gens, budget)? {
                    ConeMembership::Member(d) => {
                        out.in_cone += 1;
                        out.verified += u64::from(verify_decomposition(&v, &d));
                        out.gaps.push(v);
                    }
                    ConeMembership::NotMember(sep) => {
                        out.verified += u64::from(verify_separation(&v, u.gens, &sep));
                    }
                },
            }
            Ok(())
        })?;
    }
    Ok(out)
}

/// Whether `p` (0/1 edges, in the cone) is the sum of two nonzero lattice
/// points of the cone. Both summands have 0/1 edges and regular spanning
/// supports, so it suffices to try sub-edge-sets and sub-multisets.
pub fn is_reducible(gens: &[PMGenerator], p: &ProblemVector, budget: &Budget) -> Result<bool> {
    let u = Universe::new(gens)?;
    let set = p.edges().filter(|&(_, x)| x > 0).try_fold(0u128, |acc, (e, x)| {
        if x > 1 {
            return Err(Error::PreconditionViolated(format!("edge component {e} = {x}")));
        }
        let i = u
            .edges
            .binary_search(&e)
            .map_err(|_| Error::PreconditionViolated(format!("edge {e} outside the generators")))?;
        Ok(acc | 1 << i)
    })?;
    let days: Vec<(EqualPartition, u64)> = p.parts().collect();
    let r = days.iter().map(|&(_, k)| k as usize).sum::<usize>();
    let mut in_cone: HashMap<ProblemVector, bool> = HashMap::new();
    let mut member = |v: ProblemVector| -> Result<bool> {
        if let Some(&m) = in_cone.get(&v) {
            return Ok(m);
        }
        let m = cone_member(&v, u.gens, budget)?.is_member();
        in_cone.insert(v, m);
        Ok(m)
    };
    for s in 1..=r / 2 {
        for sub in u.regular_sets(s).into_iter().filter(|&m| m & !set == 0) {
            // sub-multisets of size s of the days of p
            let mut counts = vec![0u64; days.len()];
            let mut found = false;
            sub_multisets(&days, s as u64, 0, &mut counts, &mut |counts| {
                let picked: Vec<EqualPartition> = days
                    .iter()
                    .zip(counts)
                    .flat_map(|(&(c, _), &k)| std::iter::repeat_n(c, k as usize))
                    .collect();
                let rest: Vec<EqualPartition> = days
                    .iter()
                    .zip(counts)
                    .flat_map(|(&(c, total), &k)| std::iter::repeat_n(c, (total - k) as usize))
                    .collect();
                if member(u.vector(sub, &picked))? && member(u.vector(set & !sub, &rest))? {
                    found = true;
                }
                Ok(found)
            })?;
            if found {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Calls `f` on every choice of `counts[i] <= days[i].1` summing to `left`;
/// stops as soon as `f` returns true.
fn sub_multisets(
    days: &[(EqualPartition, u64)],
    left: u64,
    i: usize,
    counts: &mut Vec<u64>,
    f: &mut impl FnMut(&[u64]) -> Result<bool>,
) -> Result<bool> {
    if i == days.len() {
        return if left == 0 { f(counts) } else { Ok(false) };
    }
    for k in 0..=days[i].1.min(left) {
        counts[i] = k;
        if sub_multisets(days, left - k, i + 1, counts, f)? {
            return Ok(true);
        }
    }
    counts[i] = 0;
    Ok(false)
}

/// Largest degree of a point with 0/1 edge components.
pub fn max_degree(gens: &[PMGenerator]) -> Result<usize> {
    Ok(Universe::new(gens)?.max_degree())
}

/// Census of all degrees, then the irreducible gaps.
pub fn slice_census(gens: &[PMGenerator], budget: &Budget) -> Result<SliceCensus> {
    let u = Universe::new(gens)?;
    let mut census = SliceCensus::default();
    for r in 1..=u.max_degree() {
        census.degrees.push(slice_degree(gens, r, budget)?);
    }
    census.additional = irreducible_gaps(gens, &census.degrees, budget)?;
    Ok(census)
}

/// The gaps of the given degrees that are irreducible.
pub fn irreducible_gaps(gens: &[PMGenerator], degrees: &[SliceDegree], budget: &Budget) -> Result<Vec<ProblemVector>> {
    let mut out = Vec::new();
    for p in degrees.iter().flat_map(|d| &d.gaps) {
        if !is_reducible(gens, p, budget)? {
            out.push(p.clone());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{enumerate_pm, TeamSet};
    use crate::cone::{hilbert_basis, restricted_generators};
    use crate::graphs::{complete_bipartite, prism};

    #[test]
    fn four_teams_have_no_gap() {
        let gens = enumerate_pm(TeamSet::new(4).unwrap());
        let c = slice_census(&gens, &Budget::unlimited()).unwrap();
        assert_eq!(c.degrees.len(), 3);
        // degree 1: the generators; degree 3: K4 with 3 distinct days
        assert_eq!(c.degrees[0].in_monoid, 6);
        assert!(c.degrees.iter().all(|d| d.gaps.is_empty() && d.verified == d.certificates));
        assert!(c.additional.is_empty());
    }

    #[test]
    fn six_teams_have_ninety_irreducible_gaps() {
        // the Hilbert basis on six teams has 90 additional elements, all
        // with 0/1 edges and four days
        let gens = enumerate_pm(TeamSet::new(6).unwrap());
        let c = slice_census(&gens, &Budget::unlimited()).unwrap();
        let gaps: Vec<usize> = c.degrees.iter().map(|d| d.gaps.len()).collect();
        assert_eq!(gaps, vec![0, 0, 0, 90, 0]);
        assert_eq!(c.additional.len(), 90);
        assert!(c.degrees.iter().all(|d| d.verified == d.certificates));
    }

    #[test]
    fn agrees_with_hilbert_basis_on_small_graphs() {
        for g in [complete_bipartite(3).unwrap(), prism(4).unwrap()] {
            let gens = restricted_generators(&g);
            let budget = Budget::unlimited();
            let hb = hilbert_basis(&gens, &budget).unwrap();
            let unit_additional = hb.additional.iter().filter(|v| v.max_edge() <= 1).count();
            let c = slice_census(&gens, &budget).unwrap();
            assert_eq!(c.additional.len(), unit_additional);
            assert_eq!(c.degrees[0].in_monoid as usize, gens.len());
        }
    }
}
