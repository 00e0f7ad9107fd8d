use proptest::prelude::*;

use hapcone::bfactor::antiprism::antiprism_twists;
use hapcone::budget::Budget;
use hapcone::combinat::{
    canonical_form, enumerate_partitions, enumerate_pm, permute_vector, EqualPartition, PairIndex, Permutation,
    ProblemVector, TeamSet,
};
use hapcone::cone::hilbert::hilbert_basis_dense;
use hapcone::cone::{cone_member, monoid_member, verify_decomposition, verify_separation, ConeMembership};
use hapcone::graphs::{complete_bipartite, prism, RegularGraph};
use hapcone::schedule::{
    build_polytope, find_integral_schedule, fractional_feasible, vector_of, verify_fractional_point,
    verify_schedule, FractionalOutcome, HapTable, ScheduleOutcome,
};

fn partitions(n: usize) -> Vec<EqualPartition> {
    enumerate_partitions(TeamSet::new(n).unwrap())
}

/// A 2-regular graph on six teams: a hexagon or two triangles, relabeled.
fn two_regular_six() -> impl Strategy<Value = RegularGraph> {
    (any::<bool>(), Just((0..6).collect::<Vec<usize>>()).prop_shuffle()).prop_map(|(hexagon, order)| {
        let cycles: Vec<Vec<usize>> = if hexagon {
            vec![order]
        } else {
            vec![order[..3].to_vec(), order[3..].to_vec()]
        };
        let edges = cycles
            .iter()
            .flat_map(|c| (0..c.len()).map(move |i| PairIndex::new(c[i], c[(i + 1) % c.len()]).unwrap()));
        RegularGraph::new(6, edges).unwrap()
    })
}

fn cubic_six() -> impl Strategy<Value = RegularGraph> {
    prop_oneof![Just(complete_bipartite(3).unwrap()), Just(prism(3).unwrap())]
}

fn hap(n: usize, days: usize) -> impl Strategy<Value = HapTable> {
    let parts = partitions(n);
    proptest::collection::vec(0..parts.len(), days)
        .prop_map(move |idx| HapTable::new(n, idx.iter().map(|&i| parts[i]).collect()).unwrap())
}

fn instance() -> impl Strategy<Value = (RegularGraph, HapTable)> {
    prop_oneof![
        (two_regular_six(), hap(6, 2)),
        (cubic_six(), hap(6, 3)),
        (Just(hapcone::graphs::complete_graph(4).unwrap()), hap(4, 3)),
    ]
}

/// Hilbert basis of a two-dimensional cone by brute force: the irreducible
/// lattice points, searched in a box that contains every one of them.
fn hilbert_2d_oracle(gens: &[(i64, i64)]) -> Vec<Vec<i64>> {
    let cross = |a: (i64, i64), b: (i64, i64)| a.0 * b.1 - a.1 * b.0;
    // extreme rays: smallest and largest angle
    let mut rays = gens.to_vec();
    rays.sort_by(|&a, &b| 0.cmp(&cross(a, b)));
    let (lo, hi) = (rays[0], rays[rays.len() - 1]);
    let inside = |p: (i64, i64)| cross(lo, p) >= 0 && cross(p, hi) >= 0 && p.0 >= 0 && p.1 >= 0;
    let bound = (lo.0 + hi.0).max(lo.1 + hi.1);
    let points: Vec<(i64, i64)> = (0..=bound)
        .flat_map(|x| (0..=bound).map(move |y| (x, y)))
        .filter(|&p| p != (0, 0) && inside(p))
        .collect();
    let mut basis: Vec<Vec<i64>> = points
        .iter()
        .filter(|&&p| !points.iter().any(|&q| q != p && inside((p.0 - q.0, p.1 - q.1)) && (p.0 - q.0, p.1 - q.1) != (0, 0)))
        .map(|&(x, y)| vec![x, y])
        .collect();
    basis.sort();
    basis
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn fractional_feasibility_matches_cone_membership((g, hap) in instance()) {
        let budget = Budget::unlimited();
        let v = vector_of(&g, &hap).unwrap();
        let gens = enumerate_pm(TeamSet::new(g.n()).unwrap());
        let poly = build_polytope(&g, &hap).unwrap();
        let feasible = match fractional_feasible(&poly, &budget).unwrap() {
            FractionalOutcome::Feasible(x) => {
                prop_assert!(verify_fractional_point(&poly, &x));
                true
            }
            FractionalOutcome::Infeasible(_) => false,
        };
        let member = match cone_member(&v, &gens, &budget).unwrap() {
            ConeMembership::Member(d) => {
                prop_assert!(verify_decomposition(&v, &d));
                true
            }
            ConeMembership::NotMember(sep) => {
                prop_assert!(verify_separation(&v, &gens, &sep));
                false
            }
        };
        prop_assert_eq!(feasible, member);
    }

    #[test]
    fn integral_schedule_matches_monoid_membership((g, hap) in instance()) {
        let budget = Budget::unlimited();
        let v = vector_of(&g, &hap).unwrap();
        let gens = enumerate_pm(TeamSet::new(g.n()).unwrap());
        let scheduled = match find_integral_schedule(&g, &hap, &budget).unwrap() {
            ScheduleOutcome::Found(s) => {
                prop_assert!(verify_schedule(&g, &hap, &s));
                true
            }
            ScheduleOutcome::NoSchedule { .. } => false,
        };
        prop_assert_eq!(scheduled, monoid_member(&v, &gens, &budget).unwrap().is_member());
    }

    #[test]
    fn verdicts_ignore_day_order((g, hap) in instance(), seed in any::<u64>()) {
        let budget = Budget::unlimited();
        let days = hap.day_count();
        let mut order: Vec<usize> = (0..days).collect();
        order.rotate_left((seed % days as u64) as usize);
        if seed & (1 << 40) != 0 {
            order.reverse();
        }
        let shuffled = hap.permuted_days(&order).unwrap();
        let scheduled = |h: &HapTable| matches!(find_integral_schedule(&g, h, &budget).unwrap(), ScheduleOutcome::Found(_));
        let feasible = |h: &HapTable| {
            matches!(fractional_feasible(&build_polytope(&g, h).unwrap(), &budget).unwrap(), FractionalOutcome::Feasible(_))
        };
        prop_assert_eq!(scheduled(&hap), scheduled(&shuffled));
        prop_assert_eq!(feasible(&hap), feasible(&shuffled));
        prop_assert_eq!(vector_of(&g, &hap).unwrap(), vector_of(&g, &shuffled).unwrap());
    }

    #[test]
    fn canonical_form_is_a_relabeling_invariant(
        picks in proptest::collection::vec(0usize..60, 1..5),
        images in Just((0..6).collect::<Vec<usize>>()).prop_shuffle(),
    ) {
        let gens = enumerate_pm(TeamSet::new(6).unwrap());
        let mut v = ProblemVector::zero(6);
        for &i in &picks {
            v = v.plus(&gens[i].to_vector()).unwrap();
        }
        let sigma = Permutation::new(images).unwrap();
        let moved = permute_vector(&v, &sigma).unwrap();
        prop_assert_eq!(moved.edge_sum(), v.edge_sum());
        prop_assert_eq!(moved.part_sum(), v.part_sum());
        prop_assert_eq!(canonical_form(&moved).unwrap(), canonical_form(&v).unwrap());
        prop_assert_eq!(permute_vector(&moved, &sigma.inverse()).unwrap(), v);
    }

    #[test]
    fn twist_schedules_are_valid(half in 4usize..24) {
        let n = 2 * half;
        let t = antiprism_twists(n).unwrap();
        t.validate().unwrap();
        let mut seen: Vec<usize> = t.twists.iter().flatten().copied().collect();
        seen.sort_unstable();
        prop_assert_eq!(seen, (0..n).collect::<Vec<_>>());
        prop_assert_eq!(t.hap().unwrap().day_count(), 4);
    }

    #[test]
    fn plane_cones_match_brute_force(gens in proptest::collection::vec((0i64..6, 0i64..6), 1..5)) {
        let gens: Vec<(i64, i64)> = gens.into_iter().filter(|&g| g != (0, 0)).collect();
        prop_assume!(!gens.is_empty());
        let dense: Vec<Vec<i64>> = gens.iter().map(|&(x, y)| vec![x, y]).collect();
        let hb = hilbert_basis_dense(&dense, &Budget::unlimited()).unwrap();
        prop_assert_eq!(hb.basis, hilbert_2d_oracle(&gens));
    }
}

#[test]
fn node_limit_reports_budget_exhaustion() {
    let gens = enumerate_pm(TeamSet::new(6).unwrap());
    let err = hapcone::cone::hilbert_basis(&gens, &Budget::unlimited().with_node_limit(1000)).unwrap_err();
    assert!(err.is_budget(), "{err}");
}
