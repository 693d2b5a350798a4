use num_traits::Zero;
use oklab_core::num::{rat, to_f64};
use oklab_core::{
    convex_hull, integral_volume, minkowski_polynomial, minkowski_sum, Polytope, Rat,
    RationalVector, Sublattice,
};
use proptest::prelude::*;

fn points(dim: usize, min: usize, max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-6i64..=6, dim), min..=max)
}

fn hull(pts: &[Vec<i64>]) -> Polytope {
    convex_hull(&pts.iter().map(|p| RationalVector::from_i64(p)).collect::<Vec<_>>()).unwrap()
}

fn volume(p: &Polytope) -> Rat {
    let d = p.ambient_dim();
    if p.affine_dim() < d as isize {
        return Rat::zero();
    }
    integral_volume(p, &Sublattice::full(d)).unwrap()
}

/// Unimodular matrix from a sequence of elementary row operations.
fn unimodular(dim: usize, ops: &[(usize, usize, i64)]) -> Vec<Vec<i64>> {
    let mut u: Vec<Vec<i64>> = (0..dim).map(|i| (0..dim).map(|j| (i == j) as i64).collect()).collect();
    for &(i, j, c) in ops {
        let (i, j) = (i % dim, j % dim);
        if i != j {
            let row = u[j].clone();
            for (x, y) in u[i].iter_mut().zip(row) {
                *x += c * y;
            }
        }
    }
    u
}

fn apply(u: &[Vec<i64>], p: &[i64]) -> Vec<i64> {
    u.iter().map(|row| row.iter().zip(p).map(|(a, b)| a * b).sum()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn hull_is_idempotent(pts in points(3, 1, 8)) {
        let p = hull(&pts);
        let q = convex_hull(p.vertices()).unwrap();
        prop_assert_eq!(&p, &q);
        for v in &pts {
            prop_assert!(p.contains(&RationalVector::from_i64(v)));
        }
    }

    #[test]
    fn volume_is_unimodular_invariant(
        pts in points(3, 4, 8),
        ops in prop::collection::vec((0usize..3, 0usize..3, -2i64..=2), 0..5),
        shift in prop::collection::vec(-3i64..=3, 3),
    ) {
        let u = unimodular(3, &ops);
        let moved: Vec<Vec<i64>> = pts
            .iter()
            .map(|p| apply(&u, p).iter().zip(&shift).map(|(a, b)| a + b).collect())
            .collect();
        prop_assert_eq!(volume(&hull(&pts)), volume(&hull(&moved)));
    }

    #[test]
    fn brunn_minkowski(a in points(2, 3, 6), b in points(2, 3, 6)) {
        let (k, l) = (hull(&a), hull(&b));
        let s = minkowski_sum(&k, &l).unwrap();
        let (vk, vl, vs) = (to_f64(&volume(&k)), to_f64(&volume(&l)), to_f64(&volume(&s)));
        prop_assert!(vs.sqrt() + 1e-9 >= vk.sqrt() + vl.sqrt());
    }

    #[test]
    fn mixed_volume_is_monotone_and_symmetric(
        a in points(2, 1, 5),
        extra in points(2, 1, 3),
        b in points(2, 1, 5),
    ) {
        let k = hull(&a);
        let bigger = hull(&a.iter().chain(&extra).cloned().collect::<Vec<_>>());
        let l = hull(&b);
        let mv = |x: &Polytope, y: &Polytope| {
            minkowski_polynomial(&[x.clone(), y.clone()]).unwrap().mixed_value(&[1, 1])
        };
        let base = mv(&k, &l);
        prop_assert!(base <= mv(&bigger, &l));
        prop_assert_eq!(&base, &mv(&l, &k));
        prop_assert!(base >= Rat::zero());
        let p = minkowski_polynomial(&[k.clone(), l.clone()]).unwrap();
        prop_assert_eq!(p.mixed_value(&[2, 0]), volume(&k) * rat(2, 1));
    }
}
