use proptest::prelude::*;

use hapcone::combinat::{enumerate_partitions, enumerate_pm, ProblemVector, TeamSet};
use hapcone::format::{
    parse_hap, parse_hilbert, parse_schedule, parse_vec, write_hap, write_hilbert, write_schedule, write_vec,
};
use hapcone::budget::Budget;
use hapcone::graphs::prism;
use hapcone::schedule::{find_integral_schedule, HapTable, ScheduleOutcome};

fn vector(n: usize) -> impl Strategy<Value = ProblemVector> {
    let gens = enumerate_pm(TeamSet::new(n).unwrap());
    proptest::collection::vec((0..gens.len(), 1u64..4), 0..6).prop_map(move |picks| {
        let mut v = ProblemVector::zero(n);
        for (i, k) in picks {
            v = v.plus(&gens[i].to_vector().scaled(k)).unwrap();
        }
        v
    })
}

fn any_vector() -> impl Strategy<Value = ProblemVector> {
    prop_oneof![vector(4), vector(6), vector(8)]
}

proptest! {
    #[test]
    fn vectors_round_trip(v in any_vector()) {
        prop_assert_eq!(parse_vec(&write_vec(&v)).unwrap(), v);
    }

    #[test]
    fn hap_tables_round_trip(idx in proptest::collection::vec(0usize..35, 1..7)) {
        let parts = enumerate_partitions(TeamSet::new(8).unwrap());
        let hap = HapTable::new(8, idx.iter().map(|&i| parts[i]).collect()).unwrap();
        prop_assert_eq!(parse_hap(&write_hap(&hap)).unwrap(), hap);
    }

    #[test]
    fn hilbert_files_round_trip(basis in proptest::collection::vec(vector(6), 0..5), extra in 0usize..5) {
        let additional = extra.min(basis.len());
        let (parsed, extra) = parse_hilbert(&write_hilbert(&basis, additional)).unwrap();
        prop_assert_eq!(parsed, basis);
        prop_assert_eq!(extra, additional);
    }

    #[test]
    fn garbage_is_rejected_with_a_line_number(junk in "[a-z]{3,8} [0-9]{1,3}") {
        let text = format!("vec 6\n{junk}\n");
        let err = parse_vec(&text).unwrap_err().to_string();
        prop_assert!(err.contains('2'), "{}", err);
    }
}

#[test]
fn schedules_round_trip() {
    let g = prism(4).unwrap();
    let hap = HapTable::from_rows(&["HAHAAHAH", "HHAAAAHH", "HAAHAHHA"]).unwrap();
    let ScheduleOutcome::Found(s) = find_integral_schedule(&g, &hap, &Budget::unlimited()).unwrap() else {
        panic!("the cube is 3-edge-colorable along these partitions");
    };
    assert_eq!(parse_schedule(&write_schedule(&s)).unwrap(), s);
}
