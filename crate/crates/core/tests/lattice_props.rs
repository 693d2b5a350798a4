use oklab_core::{
    group_generated, hermite_normal_form, smith_invariants, subgroup_index, Index, Int, IntMatrix,
    LatticePoint,
};
use proptest::prelude::*;

fn matrix() -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(rows, cols)| {
        (Just(cols), prop::collection::vec(prop::collection::vec(-9i64..=9, cols), rows))
    })
}

fn to_int(rows: &[Vec<i64>]) -> Vec<Vec<Int>> {
    rows.iter().map(|r| r.iter().map(|&x| Int::from(x)).collect()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn hnf_is_idempotent_and_spans_the_same_lattice((cols, rows) in matrix()) {
        let m = IntMatrix::new(cols, to_int(&rows)).unwrap();
        let (h, rank) = hermite_normal_form(&m);
        prop_assert_eq!(&hermite_normal_form(&h).0, &h);
        let pts: Vec<LatticePoint> = rows.iter().map(|r| LatticePoint::from_i64(r)).collect();
        let l = group_generated(cols, &pts).unwrap();
        prop_assert_eq!(l.rank(), rank);
        prop_assert_eq!(&l, &group_generated(cols, &h.points()).unwrap());
        for p in &pts {
            prop_assert!(l.contains(p.coords()));
        }
    }

    #[test]
    fn saturation_index_is_the_invariant_product((cols, rows) in matrix()) {
        let m = IntMatrix::new(cols, to_int(&rows)).unwrap();
        let l = group_generated(cols, &m.points()).unwrap();
        let product: Int = smith_invariants(&m).iter().product();
        prop_assert_eq!(subgroup_index(&l, &l.saturation()).unwrap(), Index::Finite(product));
        prop_assert_eq!(subgroup_index(&l, &l).unwrap(), Index::Finite(Int::from(1)));
    }

    #[test]
    fn index_is_multiplicative_in_towers((cols, rows) in matrix(), k in 1i64..=4) {
        let m = IntMatrix::new(cols, to_int(&rows)).unwrap();
        let l = group_generated(cols, &m.points()).unwrap();
        let scaled: Vec<LatticePoint> = l
            .basis()
            .rows()
            .iter()
            .map(|r| LatticePoint::new(r.iter().map(|x| x * k).collect()))
            .collect();
        let kl = group_generated(cols, &scaled).unwrap();
        let sat = l.saturation();
        let a = subgroup_index(&kl, &l).unwrap();
        let b = subgroup_index(&l, &sat).unwrap();
        let c = subgroup_index(&kl, &sat).unwrap();
        match (a, b, c) {
            (Index::Finite(a), Index::Finite(b), Index::Finite(c)) => {
                prop_assert_eq!(&a, &Int::from(k).pow(l.rank() as u32));
                prop_assert_eq!(a * b, c);
            }
            other => prop_assert!(false, "unexpected infinite index {:?}", other),
        }
    }
}
