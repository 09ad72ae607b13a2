use fszd::permcore::{construct_group, construct_group_with, Limits, Permutation};
use proptest::prelude::*;

fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

proptest! {
    #[test]
    fn product_is_associative(a in arb_perm(7), b in arb_perm(7), c in arb_perm(7)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert!((&a * &a.inverse()).is_identity());
    }

    #[test]
    fn cycle_round_trip(a in arb_perm(8)) {
        let parsed = Permutation::parse_cycles(&a.to_string(), 8).unwrap();
        prop_assert_eq!(parsed, a.clone());
        let moved = (0..8).filter(|&i| a.image(i) != i).count();
        prop_assert_eq!(a.cycle_type().iter().sum::<usize>(), moved);
        prop_assert!(a.pow(a.order() as i64).is_identity());
    }

    #[test]
    fn conjugator_conjugates(a in arb_perm(5), t in arb_perm(5)) {
        let g = construct_group("S5").unwrap();
        let b = a.conjugate_by(&t);
        let u = g.conjugator(&a, &b).unwrap().expect("conjugate in S5");
        prop_assert_eq!(a.conjugate_by(&u), b);
    }
}

#[test]
fn class_sizes_sum_to_order() {
    for spec in ["S5", "A5", "D6", "Q8", "C3xS3", "C2xC2xC2", "A4"] {
        let g = construct_group(spec).unwrap();
        let classes = fszd::permcore::conjugacy_classes(&g).unwrap();
        let total: usize = (0..classes.len()).map(|c| classes.size(c)).sum();
        assert_eq!(total as u128, g.order(), "{spec}");
        for c in 0..classes.len() {
            assert_eq!(classes.size(c) * classes.centralizer_order(c), total, "{spec}");
            let members = classes.members(c);
            assert!(members.iter().all(|x| classes.class_of(x) == Some(c)));
        }
    }
}

#[test]
fn power_maps_compose() {
    let g = construct_group("S6").unwrap();
    let classes = fszd::permcore::conjugacy_classes(&g).unwrap();
    for (a, b) in [(2i64, 3i64), (2, 2), (5, 7), (-1, 2)] {
        let pa = classes.power_map(a);
        let pb = classes.power_map(b);
        let pab = classes.power_map(a * b);
        for c in 0..classes.len() {
            assert_eq!(pb[pa[c]], pab[c]);
        }
    }
}

#[test]
fn centralizer_elements_commute() {
    let g = construct_group("S5").unwrap();
    let z = Permutation::parse_cycles("(1,2)(3,4)", 5).unwrap();
    let c = g.centralizer(&z).unwrap();
    assert_eq!(c.order(), 8);
    for x in c.elements().unwrap().iter() {
        assert!(x.commutes_with(&z));
    }
}

#[test]
fn limits_are_enforced() {
    let tight = Limits {
        max_degree: 64,
        max_enumeration: 100,
    };
    let g = construct_group_with("S6", tight).unwrap();
    assert!(g.elements().is_err());
    let narrow = Limits {
        max_degree: 4,
        max_enumeration: 1000,
    };
    assert!(construct_group_with("S5", narrow).is_err());
}
