use fszd::indicators::{fsz_test, reduce, Backend, GammaReduction, Session, SessionOptions};
use fszd::oracle;
use fszd::permcore::construct_group;
use fszd::Cyclotomic;
use proptest::prelude::*;

fn session(spec: &str) -> Session {
    Session::new(construct_group(spec).unwrap()).unwrap()
}

#[test]
fn first_two_indicators_of_untwisted_doubles() {
    for spec in ["S3", "D4", "Q8", "A4", "C6"] {
        let s = session(spec);
        let report = s.all_indicators(Some(&[1, 2])).unwrap();
        for simple in &report.simples {
            let nu1 = &simple.indicators[0];
            let nu2 = &simple.indicators[1];
            let expected1 = if simple.g_class == 0 && simple.eta_index == 0 { "1" } else { "0" };
            assert_eq!(nu1.value.pretty(), expected1, "{spec}");
            assert!(["−1", "0", "1"].contains(&nu2.value.pretty().as_str()), "{spec}");
        }
    }
}

#[test]
fn backends_agree_with_naive_counts() {
    let s = session("S4");
    for zc in 0..s.classes().len() {
        let cd = s.centralizer(zc).unwrap();
        for m in 1..=s.exponent() {
            let a = s.gamma_with(zc, m, Backend::Characters).unwrap();
            let b = s.gamma_with(zc, m, Backend::Cmc).unwrap();
            assert_eq!(a.values(), b.values());
            for h in 0..cd.classes().len() {
                let rep = cd.classes().representative(h);
                let n = oracle::gmz_count_naive(cd.group(), rep, cd.z(), m).unwrap();
                assert_eq!(a.value(h), &Cyclotomic::from_integer(n as i64));
            }
        }
    }
}

#[test]
fn worker_count_does_not_change_results() {
    let g = construct_group("C2xS4").unwrap();
    let serial = Session::new(g.clone()).unwrap().all_indicators(None).unwrap();
    let options = SessionOptions {
        workers: 4,
        ..SessionOptions::default()
    };
    let parallel = Session::with_options(g, options)
        .unwrap()
        .all_indicators(None)
        .unwrap();
    assert_eq!(serial.to_json(), parallel.to_json());
}

#[test]
fn fsz_verdicts() {
    for spec in ["S4", "A5", "Q8", "SL23"] {
        let g = if spec == "SL23" {
            construct_group(oracle::SL23_SPEC).unwrap()
        } else {
            construct_group(spec).unwrap()
        };
        let out = fsz_test(&g, 1).unwrap();
        assert!(out.verdict, "{spec}");
        assert!(out.witness.is_none());
    }
    let g = construct_group("S3").unwrap();
    assert!(fsz_test(&g, 4).is_err());
}

#[test]
fn report_serializations_agree() {
    let report = session("D4").all_indicators(None).unwrap();
    let back = fszd::indicators::IndicatorReport::from_json(&report.to_json()).unwrap();
    assert_eq!(back.to_json(), report.to_json());
    let csv = report.to_csv().unwrap();
    let rows = csv.lines().count() - 1;
    let expected: usize = report.simples.iter().map(|s| s.indicators.len()).sum();
    assert_eq!(rows, expected);
}

#[test]
fn invalid_arguments_are_errors() {
    let s = session("S3");
    assert!(s.nu(0, 0, 0).is_err());
    assert!(s.nu(9, 0, 1).is_err());
    assert!(s.nu(0, 9, 1).is_err());
    assert!(s.gamma(7, 2).is_err());
}

proptest! {
    #[test]
    fn reduction_is_consistent(e in 1u64..60, m in 1u64..200, o in 1u64..12) {
        match reduce(m, e, o) {
            GammaReduction::Delta => prop_assert_eq!(num_integer::gcd(m % e, e), 1),
            GammaReduction::Zero => {
                let mp = num_integer::gcd(m % e, e);
                prop_assert!(mp != 1 && e % (mp * o) != 0);
            }
            GammaReduction::Reduced { m: mp, a } => {
                prop_assert_eq!(e % mp, 0);
                prop_assert_eq!(num_integer::gcd(a, e), 1);
                // gamma_m = psi^a gamma_m', so a m' = m mod e
                prop_assert_eq!((a * mp) % e, m % e);
            }
        }
    }
}
