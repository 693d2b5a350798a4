use oklab_core::algebra::{MonomialAlgebra, VolumeValue};
use oklab_core::num::{rat, to_f64};
use oklab_core::presets;
use oklab_core::semigroup::{
    Generator, GradedSemigroup, LinearForm, LowerBound, StaircaseSpec, UpperBound,
};
use oklab_core::Rat;
use proptest::prelude::*;

fn generators(r: usize, s: usize) -> impl Strategy<Value = Vec<Generator>> {
    let gen = (prop::collection::vec(-2i64..=4, r), prop::collection::vec(0u64..=2, s))
        .prop_filter("positive degree", |(_, d)| d.iter().any(|&x| x > 0))
        .prop_map(|(v, d)| Generator::new(v, d));
    prop::collection::vec(gen, 1..=4)
}

/// Finitely generated algebras with `s = 2` and nonzero axis pieces.
fn algebra() -> impl Strategy<Value = MonomialAlgebra> {
    (1usize..=2)
        .prop_flat_map(|r| {
            (
                Just(r),
                generators(r, 2),
                prop::collection::vec(0i64..=3, r),
                prop::collection::vec(0i64..=3, r),
            )
        })
        .prop_map(|(r, mut gens, a, b)| {
            gens.push(Generator::new(a, vec![1, 0]));
            gens.push(Generator::new(b, vec![0, 1]));
            MonomialAlgebra::from_generators(r, 2, gens).unwrap()
        })
}

fn semigroup_s1() -> impl Strategy<Value = GradedSemigroup> {
    (1usize..=2)
        .prop_flat_map(|r| (Just(r), generators(r, 1)))
        .prop_map(|(r, gens)| GradedSemigroup::from_generators(r, 1, gens).unwrap())
}

fn sumset(base: &[Vec<i64>], n: u64) -> Vec<Vec<i64>> {
    let mut acc = vec![vec![0; base.first().map_or(0, Vec::len)]];
    for _ in 0..n {
        let mut next: Vec<Vec<i64>> = acc
            .iter()
            .flat_map(|a| base.iter().map(move |b| a.iter().zip(b).map(|(x, y)| x + y).collect()))
            .collect();
        next.sort();
        next.dedup();
        acc = next;
    }
    acc
}

fn form() -> impl Strategy<Value = LinearForm> {
    (prop::collection::vec(0i64..=4, 2), 1u64..=3)
        .prop_map(|(c, d)| LinearForm::with_denominator(c, d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn series_and_enumeration_agree(
        (r, s, gens) in (1usize..=2, 1usize..=2).prop_flat_map(|(r, s)| (Just(r), Just(s), generators(r, s)))
    ) {
        let sg = GradedSemigroup::from_generators(r, s, gens).unwrap();
        let mut en = sg.enumerator().unwrap();
        for a in 0..=4u64 {
            for b in 0..=(if s == 2 { 4 } else { 0 }) {
                let n: Vec<u64> = if s == 2 { vec![a, b] } else { vec![a] };
                let dp = en.piece(&n).unwrap().len() as u64;
                prop_assert_eq!(sg.count(&n).unwrap(), dp, "degree {:?}", n);
            }
        }
    }

    #[test]
    fn truncation_sandwich(sg in semigroup_s1()) {
        let m = sg.invariants().unwrap().m;
        for p in 1..=4u64 {
            let base = sg.graded_piece(&[p * m]).unwrap();
            let trunc = sg.truncate(&[p * m]).unwrap();
            for n in 1..=4u64 {
                let lower = sumset(&base, n);
                let middle = trunc.graded_piece(&[n * p * m]).unwrap();
                let upper = sg.graded_piece(&[n * p * m]).unwrap();
                prop_assert!(lower.iter().all(|x| middle.binary_search(x).is_ok()));
                prop_assert!(middle.iter().all(|x| upper.binary_search(x).is_ok()));
            }
        }
    }

    #[test]
    fn min_staircases_are_closed(f in form(), g in form()) {
        let spec = StaircaseSpec::new(
            2,
            LowerBound::Linear(LinearForm::new(vec![0, 0])),
            UpperBound::PiecewiseLinearMin(vec![f, g]),
        )
        .unwrap();
        spec.check_closure(6).unwrap();
        let a = MonomialAlgebra::new(GradedSemigroup::staircase(spec.clone()).unwrap()).unwrap();
        let x = [rat(2, 1), rat(3, 1)];
        if a.q().unwrap() == 1 {
            let v = a.volume_fn_fiber(&x).unwrap();
            prop_assert_eq!(v, VolumeValue::Exact(spec.upper.limit(&x)));
        }
    }

    #[test]
    fn volume_function_is_homogeneous_and_concave(a in algebra(), x in (1i64..=4, 1i64..=4), y in (1i64..=4, 1i64..=4)) {
        let q = a.q().unwrap();
        let f = |p: &[Rat]| match a.volume_fn_fiber(p).unwrap() {
            VolumeValue::Exact(v) => v,
            VolumeValue::Estimate(_) => panic!("generator cones are exact"),
        };
        let xv = [rat(x.0, 1), rat(x.1, 1)];
        let yv = [rat(y.0, 1), rat(y.1, 1)];
        let fx = f(&xv);
        for l in [rat(1, 2), rat(2, 1), rat(3, 1)] {
            let scaled: Vec<Rat> = xv.iter().map(|c| c * &l).collect();
            prop_assert_eq!(f(&scaled), &fx * num_traits::pow(l, q));
        }
        if q > 0 {
            let sum: Vec<Rat> = xv.iter().zip(&yv).map(|(a, b)| a + b).collect();
            let root = |v: Rat| to_f64(&v).powf(1.0 / q as f64);
            prop_assert!(root(f(&sum)) + 1e-9 >= root(fx) + root(f(&yv)));
        }
    }

    #[test]
    fn counting_matches_geometry(a in algebra(), x in (1u64..=3, 1u64..=3)) {
        let n = [x.0, x.1];
        let exact = a.volume_fn_fiber(&[rat(x.0 as i64, 1), rat(x.1 as i64, 1)]).unwrap();
        let exact = to_f64(exact.exact().unwrap());
        let est = a.volume_fn_count(&n, 300).unwrap();
        prop_assert!((est - exact).abs() <= 0.03 * exact.max(1.0), "estimate {} vs {}", est, exact);
    }
}

#[test]
fn fiber_theorem_on_presets() {
    for a in [presets::min(), presets::min_staircase(), presets::concave_pl(), presets::segre()] {
        for n in [[1u64, 1], [2, 1], [1, 3]] {
            assert!(a.fiber_theorem_check(&n).unwrap(), "{n:?}");
        }
    }
}

#[test]
fn golden_ladder_is_monotone_along_divisibility() {
    let ps: Vec<u64> = (1..=24).collect();
    let rep = presets::golden().mixed_multiplicities(&[1], &ps).unwrap();
    for p in 1..=24usize {
        for k in 2..=24 / p {
            assert!(rep.ladder[p - 1].value <= rep.ladder[k * p - 1].value, "{p} -> {}", k * p);
        }
    }
}
