//! Membership in the perfect-matching cone and monoid, and Hilbert bases of
//! the lattice points of that cone.
//!
//! All arithmetic is exact. Rational cone membership is an LP whose
//! infeasibility comes with a separating hyperplane; integral membership is
//! an exhaustive search; both kinds of answer carry certificates that
//! [`verify_decomposition`] and [`verify_separation`] re-check directly.

pub mod hilbert;
pub mod linalg;
pub mod slice;

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::budget::Budget;
use crate::combinat::{support_graph, Coordinates, EqualPartition, PMGenerator, ProblemVector, TeamSet};
use crate::error::{Error, Result};
use crate::graphs::RegularGraph;
use crate::lp::{EqualityProgram, Feasibility, Q};
use crate::schedule::{self, compatible_matchings};

/// `scale * target = Σ coefficient * generator`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingDecomposition {
    pub terms: Vec<(PMGenerator, Q)>,
    pub scale: BigInt,
}

impl MatchingDecomposition {
    pub fn is_integral(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_integer())
    }
}

/// A linear form `h` (over the global coordinates) with `h·g >= 0` for
/// every generator and `h·v < 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Separation {
    pub normal: Vec<Q>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConeMembership {
    Member(MatchingDecomposition),
    NotMember(Separation),
}

impl ConeMembership {
    pub fn is_member(&self) -> bool {
        matches!(self, ConeMembership::Member(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonoidMembership {
    /// 0/1 coefficients, scale 1.
    Member(MatchingDecomposition),
    /// Exhaustive search found no decomposition.
    NotMember { nodes: u64 },
}

impl MonoidMembership {
    pub fn is_member(&self) -> bool {
        matches!(self, MonoidMembership::Member(_))
    }
}

fn check_n(v: &ProblemVector, gens: &[PMGenerator]) -> Result<()> {
    if let Some(g) = gens.iter().find(|g| g.n() != v.n()) {
        return Err(Error::DimensionMismatch(format!(
            "vector on {} teams, generator on {}",
            v.n(),
            g.n()
        )));
    }
    Ok(())
}

/// Whether every nonzero coordinate of `g` is nonzero in `v`.
fn supported_in(g: &PMGenerator, v: &ProblemVector) -> bool {
    v.part(g.partition()) > 0 && g.matching().iter().all(|&e| v.edge(e) > 0)
}

/// Rational cone membership: `v = Σ λ_g g` with `λ >= 0`.
pub fn cone_member(v: &ProblemVector, gens: &[PMGenerator], budget: &Budget) -> Result<ConeMembership> {
    check_n(v, gens)?;
    let ts = TeamSet::new(v.n())?;
    let coords = Coordinates::new(ts);
    let dense_v = v.dense(&coords);
    // Generators touching a coordinate where v vanishes must get λ = 0.
    let relevant: Vec<&PMGenerator> = gens.iter().filter(|g| supported_in(g, v)).collect();
    let rows: Vec<usize> = (0..coords.len()).filter(|&i| dense_v[i] != 0).collect();
    let dense_gens: Vec<Vec<u64>> = relevant.iter().map(|g| g.to_vector().dense(&coords)).collect();

    let lp_normal: Vec<Q> = if rows.is_empty() {
        return Ok(ConeMembership::Member(MatchingDecomposition {
            terms: Vec::new(),
            scale: BigInt::one(),
        }));
    } else {
        let a: Vec<Vec<Q>> = rows
            .iter()
            .map(|&i| dense_gens.iter().map(|g| Q::from_integer(g[i].into())).collect())
            .collect();
        let b: Vec<Q> = rows.iter().map(|&i| Q::from_integer(dense_v[i].into())).collect();
        let program = EqualityProgram::new(a, b)?;
        match program.feasible(budget)? {
            Feasibility::Feasible(lambda) => {
                // v = Σ λ g, so (lcm of denominators)·v has integer coefficients
                let scale = lambda.iter().fold(BigInt::one(), |acc, l| acc.lcm(l.denom()));
                let k = Q::from_integer(scale.clone());
                let terms: Vec<(PMGenerator, Q)> = relevant
                    .iter()
                    .zip(lambda)
                    .filter(|(_, l)| !l.is_zero())
                    .map(|(g, l)| ((*g).clone(), l * &k))
                    .collect();
                return Ok(ConeMembership::Member(MatchingDecomposition { terms, scale }));
            }
            Feasibility::Infeasible(h) => h,
        }
    };
    // Lift the certificate: coordinates outside supp(v) get a weight large
    // enough to make every discarded generator nonnegative.
    let mut normal = vec![Q::zero(); coords.len()];
    for (&i, h) in rows.iter().zip(&lp_normal) {
        normal[i] = h.clone();
    }
    let mut lift = Q::zero();
    for g in gens.iter().filter(|g| !supported_in(g, v)) {
        let d = g.to_vector().dense(&coords);
        let partial: Q = rows.iter().map(|&i| &normal[i] * Q::from_integer(d[i].into())).sum();
        if -&partial > lift {
            lift = -partial;
        }
    }
    for (i, w) in normal.iter_mut().enumerate() {
        if dense_v[i] == 0 {
            *w = lift.clone();
        }
    }
    Ok(ConeMembership::NotMember(Separation { normal }))
}

/// Independent check of a separating hyperplane.
pub fn verify_separation(v: &ProblemVector, gens: &[PMGenerator], sep: &Separation) -> bool {
    let Ok(ts) = TeamSet::new(v.n()) else {
        return false;
    };
    let coords = Coordinates::new(ts);
    if sep.normal.len() != coords.len() {
        return false;
    }
    let eval = |x: &ProblemVector| -> Q {
        x.dense(&coords)
            .iter()
            .zip(&sep.normal)
            .map(|(&a, h)| h * Q::from_integer(a.into()))
            .sum()
    };
    eval(v).is_negative() && gens.iter().all(|g| g.n() == v.n() && !eval(&g.to_vector()).is_negative())
}

/// Exact componentwise check of `scale * v = Σ coefficient * generator`.
pub fn verify_decomposition(v: &ProblemVector, dec: &MatchingDecomposition) -> bool {
    if !dec.scale.is_positive() || dec.terms.iter().any(|(g, c)| !c.is_positive() || g.n() != v.n()) {
        return false;
    }
    let mut edges: BTreeMap<_, Q> = BTreeMap::new();
    let mut parts: BTreeMap<EqualPartition, Q> = BTreeMap::new();
    for (g, c) in &dec.terms {
        for &e in g.matching() {
            *edges.entry(e).or_insert_with(Q::zero) += c;
        }
        *parts.entry(g.partition()).or_insert_with(Q::zero) += c;
    }
    let scale = Q::from_integer(dec.scale.clone());
    let target_edges: BTreeMap<_, Q> = v.edges().map(|(e, x)| (e, &scale * Q::from_integer(x.into()))).collect();
    let target_parts: BTreeMap<_, Q> = v.parts().map(|(c, x)| (c, &scale * Q::from_integer(x.into()))).collect();
    edges == target_edges && parts == target_parts
}

/// Integral membership for vectors with edge components at most 1: picks,
/// for each partition `c`, `v(c)` generators on `c` whose matchings
/// partition the support of `v`.
pub fn monoid_member(v: &ProblemVector, gens: &[PMGenerator], budget: &Budget) -> Result<MonoidMembership> {
    check_n(v, gens)?;
    if let Some((e, x)) = v.edges().find(|&(_, x)| x > 1) {
        return Err(Error::PreconditionViolated(format!(
            "edge component {e} = {x}; integral search needs components at most 1"
        )));
    }
    let support = support_graph(v);
    if support.len() > schedule::MAX_SEARCH_EDGES {
        return Err(Error::InvalidInput(format!(
            "integral search supports at most {} edges",
            schedule::MAX_SEARCH_EDGES
        )));
    }
    let kinds: Vec<(EqualPartition, u64)> = v.parts().collect();
    let mut lists: Vec<Vec<&PMGenerator>> = Vec::with_capacity(kinds.len());
    let mut types = Vec::with_capacity(kinds.len());
    for &(c, k) in &kinds {
        let mut list: Vec<&PMGenerator> = gens
            .iter()
            .filter(|g| g.partition() == c && supported_in(g, v))
            .collect();
        list.sort();
        list.dedup();
        let masks = list
            .iter()
            .map(|g| {
                g.matching().iter().fold(0u128, |acc, e| {
                    acc | 1u128 << support.binary_search(e).expect("supported edge")
                })
            })
            .collect();
        types.push((k as usize, masks));
        lists.push(list);
    }
    let target = if support.len() == 128 {
        u128::MAX
    } else {
        (1u128 << support.len()) - 1
    };
    let (found, nodes) = schedule::exact_cover(target, &types, budget)?;
    Ok(match found {
        None => MonoidMembership::NotMember { nodes },
        Some(chosen) => {
            let mut terms: Vec<(PMGenerator, Q)> =
                chosen.into_iter().map(|(t, i)| (lists[t][i].clone(), Q::one())).collect();
            terms.sort_by(|a, b| a.0.cmp(&b.0));
            MonoidMembership::Member(MatchingDecomposition {
                terms,
                scale: BigInt::one(),
            })
        }
    })
}

/// Generators whose matching uses only edges of `g`.
pub fn restricted_generators(g: &RegularGraph) -> Vec<PMGenerator> {
    let ts = TeamSet::new(g.n()).expect("regular graph on an even team count");
    crate::combinat::enumerate_partitions(ts)
        .into_iter()
        .flat_map(|c| {
            compatible_matchings(g, c)
                .into_iter()
                .map(move |m| PMGenerator::new(m, c).expect("compatible matching"))
        })
        .collect()
}

/// Hilbert basis of the lattice points of `cone(gens)`.
#[derive(Clone, Debug)]
pub struct HilbertBasisResult {
    /// In global coordinate order.
    pub basis: Vec<ProblemVector>,
    /// Basis elements that are not generators, same order.
    pub additional: Vec<ProblemVector>,
    pub generator_count: usize,
    pub stats: hilbert::DenseHilbert,
}

pub fn hilbert_basis(gens: &[PMGenerator], budget: &Budget) -> Result<HilbertBasisResult> {
    let Some(first) = gens.first() else {
        return Err(Error::InvalidInput("Hilbert basis of an empty generator set".into()));
    };
    let n = first.n();
    if gens.iter().any(|g| g.n() != n) {
        return Err(Error::DimensionMismatch("generators on different team counts".into()));
    }
    let coords = Coordinates::new(TeamSet::new(n)?);
    let dense: Vec<Vec<i64>> = gens
        .iter()
        .map(|g| g.to_vector().dense(&coords).into_iter().map(|x| x as i64).collect())
        .collect();
    let mut stats = hilbert::hilbert_basis_dense(&dense, budget)?;
    let mut basis = Vec::with_capacity(stats.basis.len());
    for h in &stats.basis {
        let values: Vec<u64> = h
            .iter()
            .map(|&x| u64::try_from(x).map_err(|_| Error::InvalidInput("negative basis coordinate".into())))
            .collect::<Result<_>>()?;
        basis.push(ProblemVector::from_dense(&coords, &values)?);
    }
    let originals: HashSet<ProblemVector> = gens.iter().map(|g| g.to_vector()).collect();
    let additional = basis.iter().filter(|b| !originals.contains(*b)).cloned().collect();
    stats.basis = Vec::new();
    Ok(HilbertBasisResult {
        basis,
        additional,
        generator_count: gens.len(),
        stats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{enumerate_pm, PairIndex};
    use crate::graphs::{complete_graph, prism};
    use crate::schedule::{vector_of, HapTable};

    fn pm(n: usize) -> Vec<PMGenerator> {
        enumerate_pm(TeamSet::new(n).unwrap())
    }

    #[test]
    fn sum_of_generators_is_member() {
        let gens = pm(4);
        let v = gens[0].to_vector().plus(&gens[3].to_vector()).unwrap();
        let ConeMembership::Member(dec) = cone_member(&v, &gens, &Budget::unlimited()).unwrap() else {
            panic!()
        };
        assert!(verify_decomposition(&v, &dec));
    }

    #[test]
    fn zero_vector_and_empty_generators() {
        let z = ProblemVector::zero(4);
        let ConeMembership::Member(dec) = cone_member(&z, &pm(4), &Budget::unlimited()).unwrap() else {
            panic!()
        };
        assert!(dec.terms.is_empty());
        assert!(verify_decomposition(&z, &dec));
        let v = pm(4)[0].to_vector();
        let ConeMembership::NotMember(sep) = cone_member(&v, &[], &Budget::unlimited()).unwrap() else {
            panic!()
        };
        assert!(verify_separation(&v, &[], &sep));
        assert!(monoid_member(&z, &pm(4), &Budget::unlimited()).unwrap().is_member());
    }

    #[test]
    fn unbalanced_vector_is_separated() {
        let gens = pm(4);
        let v = ProblemVector::chi_k(4);
        let ConeMembership::NotMember(sep) = cone_member(&v, &gens, &Budget::unlimited()).unwrap() else {
            panic!()
        };
        assert!(verify_separation(&v, &gens, &sep));
    }

    #[test]
    fn perturbed_decomposition_fails() {
        let gens = pm(4);
        let v = gens[1].to_vector();
        let mut dec = MatchingDecomposition {
            terms: vec![(gens[1].clone(), Q::one())],
            scale: BigInt::one(),
        };
        assert!(verify_decomposition(&v, &dec));
        dec.terms[0].1 = Q::new(1.into(), 2.into());
        assert!(!verify_decomposition(&v, &dec));
        let empty = MatchingDecomposition {
            terms: vec![],
            scale: BigInt::one(),
        };
        assert!(verify_decomposition(&ProblemVector::zero(4), &empty));
    }

    #[test]
    fn rotation_table_monoid_member() {
        let g = complete_graph(4).unwrap();
        let hap = HapTable::from_rows(&["HHAA", "HAAH", "HAHA"]).unwrap();
        let v = vector_of(&g, &hap).unwrap();
        let MonoidMembership::Member(dec) = monoid_member(&v, &pm(4), &Budget::unlimited()).unwrap() else {
            panic!()
        };
        assert_eq!(dec.terms.len(), 3);
        assert!(verify_decomposition(&v, &dec));
        let mut two = v.clone();
        two.set_edge(PairIndex::of(0, 1), 2);
        assert!(matches!(
            monoid_member(&two, &pm(4), &Budget::unlimited()),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn hilbert_basis_n4_is_the_generators() {
        let gens = pm(4);
        let hb = hilbert_basis(&gens, &Budget::unlimited()).unwrap();
        assert_eq!(hb.basis.len(), 6);
        assert!(hb.additional.is_empty());
        let single = hilbert_basis(&gens[..1], &Budget::unlimited()).unwrap();
        assert_eq!(single.basis, vec![gens[0].to_vector()]);
    }

    #[test]
    fn restricted_generators_filter() {
        let k4 = complete_graph(4).unwrap();
        assert_eq!(restricted_generators(&k4).len(), 6);
        let cube = prism(4).unwrap();
        let gens = restricted_generators(&cube);
        assert!(gens.iter().all(|g| g.matching().iter().all(|e| cube.has_edge(*e))));
        assert!(!gens.is_empty());
    }
}
