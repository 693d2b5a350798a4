//! Built-in algebras used by the command line and the test suites.

use alloc::vec;

use crate::algebra::MonomialAlgebra;
use crate::error::Result;
use crate::semigroup::{semigroup, GradedSemigroup, LinearForm, LowerBound, StaircaseSpec, UpperBound};

pub const NAMES: [&str; 5] = ["nonpoly", "min", "concave-pl", "segre", "golden"];

fn staircase(s: usize, lower: LowerBound, upper: UpperBound) -> Result<MonomialAlgebra> {
    let spec = StaircaseSpec::new(s, lower, upper)?;
    MonomialAlgebra::new(GradedSemigroup::staircase(spec)?)
}

/// `[A]_n = span{u^i : ceil(2 sqrt(n1^2 + n2^2)) <= i <= 2(n1 + n2)}`, whose
/// volume function `2(x1 + x2) - 2 sqrt(x1^2 + x2^2)` is not a polynomial.
pub fn try_nonpoly() -> Result<MonomialAlgebra> {
    staircase(
        2,
        LowerBound::CeilSqrtQuadratic(vec![vec![4, 0], vec![0, 4]]),
        UpperBound::Linear(LinearForm::new(vec![2, 2])),
    )
}

/// Generated by `(0|1,0)`, `(0|0,1)`, `(1|1,1)`; volume function `min(x1, x2)`.
pub fn try_min() -> Result<MonomialAlgebra> {
    MonomialAlgebra::new(semigroup(1, 2, &[(&[0], &[1, 0]), (&[0], &[0, 1]), (&[1], &[1, 1])])?)
}

/// The same algebra as [`min`], given by the staircase `0 <= i <= min(n1, n2)`.
pub fn try_min_staircase() -> Result<MonomialAlgebra> {
    staircase(
        2,
        LowerBound::Linear(LinearForm::new(vec![0, 0])),
        UpperBound::PiecewiseLinearMin(vec![LinearForm::new(vec![1, 0]), LinearForm::new(vec![0, 1])]),
    )
}

/// `0 <= i <= min(2 n1 + n2, n1 + 3 n2)`: a concave piecewise-linear volume function.
pub fn try_concave_pl() -> Result<MonomialAlgebra> {
    staircase(
        2,
        LowerBound::Linear(LinearForm::new(vec![0, 0])),
        UpperBound::PiecewiseLinearMin(vec![LinearForm::new(vec![2, 1]), LinearForm::new(vec![1, 3])]),
    )
}

/// The Segre algebra `k[x1 t1, x2 t1, x3 t2, x4 t2]`.
pub fn try_segre() -> Result<MonomialAlgebra> {
    MonomialAlgebra::new(
        semigroup(
            4,
            2,
            &[
                (&[1, 0, 0, 0], &[1, 0]),
                (&[0, 1, 0, 0], &[1, 0]),
                (&[0, 0, 1, 0], &[0, 1]),
                (&[0, 0, 0, 1], &[0, 1]),
            ],
        )?,
    )
}

/// `0 <= i <= floor(89 n / 55)`: a Fujita ladder whose supremum is attained at `p = 55`.
pub fn try_golden() -> Result<MonomialAlgebra> {
    staircase(
        1,
        LowerBound::Linear(LinearForm::new(vec![0])),
        UpperBound::Linear(LinearForm::with_denominator(vec![89], 55)?),
    )
}

/// Looks up a preset by name; construction fails only when the point budget
/// of [`crate::limits`] is exhausted.
pub fn by_name(name: &str) -> Option<Result<MonomialAlgebra>> {
    Some(match name {
        "nonpoly" => try_nonpoly(),
        "min" => try_min(),
        "concave-pl" => try_concave_pl(),
        "segre" => try_segre(),
        "golden" => try_golden(),
        _ => return None,
    })
}

macro_rules! infallible {
    ($($name:ident => $try:ident),*) => {$(
        /// Panics if the point budget is too small to build the preset.
        pub fn $name() -> MonomialAlgebra {
            $try().expect("preset fits the point budget")
        }
    )*};
}

infallible!(
    nonpoly => try_nonpoly,
    min => try_min,
    min_staircase => try_min_staircase,
    concave_pl => try_concave_pl,
    segre => try_segre,
    golden => try_golden
);
