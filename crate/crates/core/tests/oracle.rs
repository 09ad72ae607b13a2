use fszd::indicators::Session;
use fszd::oracle::{self, CommutingPairTable};
use fszd::permcore::{construct_group, Limits};

#[test]
fn naive_and_pair_sums_match_class_level() {
    for spec in ["S3", "D4", "A4"] {
        let g = construct_group(spec).unwrap();
        let (checks, mismatches) = oracle::cross_check(&g, oracle::DEFAULT_ORDER_BOUND).unwrap();
        assert!(checks > 0, "{spec}");
        assert_eq!(mismatches, 0, "{spec}");
    }
}

#[test]
fn commuting_pair_count_is_class_count_times_order() {
    for spec in ["S4", "Q8", "D5"] {
        let g = construct_group(spec).unwrap();
        let table = CommutingPairTable::new(&g).unwrap();
        let k = Session::new(g.clone()).unwrap().classes().len() as u128;
        assert_eq!(table.pair_count(), k * g.order(), "{spec}");
    }
}

#[test]
fn selftest_respects_order_bound() {
    let entries = oracle::selftest(12, Limits::default()).unwrap();
    assert!(!entries.is_empty());
    assert!(entries.iter().all(|e| e.order <= 12 && e.mismatches == 0));
}

#[test]
fn power_matches_pow() {
    let g = construct_group("S5").unwrap();
    for x in g.elements().unwrap().iter().take(30) {
        for m in 0..8 {
            assert_eq!(oracle::power(x, m), x.pow(m as i64));
        }
    }
}
