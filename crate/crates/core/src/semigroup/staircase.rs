//! Degreewise interval rules `{(j, n) : lower(n) <= j <= upper(n)}` with `r = 1`.

use alloc::format;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::num::{isqrt_floor, Int, Rat};

/// The rational linear form `coeffs . n / denominator`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm {
    pub coeffs: Vec<i64>,
    pub denominator: u64,
}

impl LinearForm {
    pub fn new(coeffs: Vec<i64>) -> Self {
        LinearForm {
            coeffs,
            denominator: 1,
        }
    }

    pub fn with_denominator(coeffs: Vec<i64>, denominator: u64) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::invalid("LinearForm", "denominator is zero"));
        }
        Ok(LinearForm {
            coeffs,
            denominator,
        })
    }

    fn numerator(&self, n: &[u64]) -> i128 {
        self.coeffs
            .iter()
            .zip(n)
            .map(|(&c, &x)| c as i128 * x as i128)
            .sum()
    }

    pub fn floor_at(&self, n: &[u64]) -> i64 {
        Integer::div_floor(&self.numerator(n), &(self.denominator as i128)) as i64
    }

    pub fn ceil_at(&self, n: &[u64]) -> i64 {
        Integer::div_ceil(&self.numerator(n), &(self.denominator as i128)) as i64
    }

    pub fn value(&self, x: &[Rat]) -> Rat {
        let num: Rat = self
            .coeffs
            .iter()
            .zip(x)
            .map(|(&c, v)| Rat::from_integer(Int::from(c)) * v)
            .sum();
        num / Rat::from_integer(Int::from(self.denominator))
    }

    pub fn value_f64(&self, x: &[f64]) -> f64 {
        let num: f64 = self.coeffs.iter().zip(x).map(|(&c, v)| c as f64 * v).sum();
        num / self.denominator as f64
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LowerBound {
    /// `ceil(form(n))`.
    Linear(LinearForm),
    /// `min {j >= 0 : j^2 >= n^T Q n}` for a positive semidefinite integer `Q`.
    CeilSqrtQuadratic(Vec<Vec<i64>>),
    /// `max_i ceil(form_i(n))`.
    PiecewiseLinearMax(Vec<LinearForm>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UpperBound {
    /// `floor(form(n))`.
    Linear(LinearForm),
    /// `min_i floor(form_i(n))`.
    PiecewiseLinearMin(Vec<LinearForm>),
}

fn quadratic(q: &[Vec<i64>], n: &[u64]) -> i128 {
    let mut acc = 0i128;
    for (i, row) in q.iter().enumerate() {
        for (j, &c) in row.iter().enumerate() {
            acc += c as i128 * n[i] as i128 * n[j] as i128;
        }
    }
    acc
}

fn quadratic_f64(q: &[Vec<i64>], x: &[f64]) -> f64 {
    let mut acc = 0.0;
    for (i, row) in q.iter().enumerate() {
        for (j, &c) in row.iter().enumerate() {
            acc += c as f64 * x[i] * x[j];
        }
    }
    acc
}

impl LowerBound {
    pub fn at(&self, n: &[u64]) -> i64 {
        match self {
            LowerBound::Linear(f) => f.ceil_at(n),
            LowerBound::CeilSqrtQuadratic(q) => {
                let v = quadratic(q, n).max(0);
                let r = isqrt_floor(&Int::from(v));
                let r = i64::try_from(&r).expect("square root fits in i64");
                if (r as i128) * (r as i128) == v {
                    r
                } else {
                    r + 1
                }
            }
            LowerBound::PiecewiseLinearMax(fs) => {
                fs.iter().map(|f| f.ceil_at(n)).max().unwrap_or(0)
            }
        }
    }

    /// The homogeneous limit `lim lower(k x) / k`, when it is rational.
    pub fn limit(&self, x: &[Rat]) -> Option<Rat> {
        match self {
            LowerBound::Linear(f) => Some(f.value(x)),
            LowerBound::CeilSqrtQuadratic(_) => None,
            LowerBound::PiecewiseLinearMax(fs) => fs.iter().map(|f| f.value(x)).max(),
        }
    }

    pub fn limit_f64(&self, x: &[f64]) -> f64 {
        match self {
            LowerBound::Linear(f) => f.value_f64(x),
            LowerBound::CeilSqrtQuadratic(q) => libm::sqrt(quadratic_f64(q, x).max(0.0)),
            LowerBound::PiecewiseLinearMax(fs) => fs
                .iter()
                .map(|f| f.value_f64(x))
                .fold(f64::NEG_INFINITY, f64::max),
        }
    }

    fn dims(&self) -> Vec<usize> {
        match self {
            LowerBound::Linear(f) => alloc::vec![f.coeffs.len()],
            LowerBound::CeilSqrtQuadratic(q) => {
                let mut d: Vec<usize> = q.iter().map(Vec::len).collect();
                d.push(q.len());
                d
            }
            LowerBound::PiecewiseLinearMax(fs) => fs.iter().map(|f| f.coeffs.len()).collect(),
        }
    }
}

impl UpperBound {
    pub fn at(&self, n: &[u64]) -> i64 {
        match self {
            UpperBound::Linear(f) => f.floor_at(n),
            UpperBound::PiecewiseLinearMin(fs) => {
                fs.iter().map(|f| f.floor_at(n)).min().unwrap_or(0)
            }
        }
    }

    pub fn limit(&self, x: &[Rat]) -> Rat {
        match self {
            UpperBound::Linear(f) => f.value(x),
            UpperBound::PiecewiseLinearMin(fs) => fs
                .iter()
                .map(|f| f.value(x))
                .min()
                .unwrap_or_else(|| Rat::from_integer(Int::from(0))),
        }
    }

    pub fn limit_f64(&self, x: &[f64]) -> f64 {
        match self {
            UpperBound::Linear(f) => f.value_f64(x),
            UpperBound::PiecewiseLinearMin(fs) => fs
                .iter()
                .map(|f| f.value_f64(x))
                .fold(f64::INFINITY, f64::min),
        }
    }

    fn dims(&self) -> Vec<usize> {
        match self {
            UpperBound::Linear(f) => alloc::vec![f.coeffs.len()],
            UpperBound::PiecewiseLinearMin(fs) => fs.iter().map(|f| f.coeffs.len()).collect(),
        }
    }
}

/// Pieces `[S]_n = {lower(n), ..., upper(n)}` (empty when `lower > upper`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StaircaseSpec {
    pub s: usize,
    pub lower: LowerBound,
    pub upper: UpperBound,
}

impl StaircaseSpec {
    pub fn new(s: usize, lower: LowerBound, upper: UpperBound) -> Result<Self> {
        for d in lower.dims().into_iter().chain(upper.dims()) {
            Error::check_dim("StaircaseSpec", s, d)?;
        }
        if let LowerBound::PiecewiseLinearMax(fs) = &lower {
            if fs.is_empty() {
                return Err(Error::invalid("StaircaseSpec", "empty list of lower forms"));
            }
        }
        if let UpperBound::PiecewiseLinearMin(fs) = &upper {
            if fs.is_empty() {
                return Err(Error::invalid("StaircaseSpec", "empty list of upper forms"));
            }
        }
        Ok(StaircaseSpec { s, lower, upper })
    }

    pub fn bounds(&self, n: &[u64]) -> (i64, i64) {
        (self.lower.at(n), self.upper.at(n))
    }

    pub fn count(&self, n: &[u64]) -> u64 {
        let (l, u) = self.bounds(n);
        if u < l {
            0
        } else {
            (u - l + 1) as u64
        }
    }

    /// True when the continuous limits are piecewise linear, so that the
    /// closed cone of the semigroup is polyhedral with rational rays.
    pub fn is_polyhedral(&self) -> bool {
        !matches!(self.lower, LowerBound::CeilSqrtQuadratic(_))
    }

    /// `lim #[S]_{kx} / k`: the length `upper - lower` of the limit interval.
    pub fn volume_limit_f64(&self, x: &[f64]) -> f64 {
        (self.upper.limit_f64(x) - self.lower.limit_f64(x)).max(0.0)
    }

    /// Checks `[S]_0 = {0}` and `[S]_m + [S]_n ⊆ [S]_{m+n}` on the box `[0, bound]^s`.
    pub fn check_closure(&self, bound: u64) -> Result<()> {
        let zero = alloc::vec![0u64; self.s];
        if self.bounds(&zero) != (0, 0) {
            return Err(Error::NotClosed {
                op: "StaircaseSpec",
                detail: format!("piece at degree 0 is not {{0}}: {:?}", self.bounds(&zero)),
            });
        }
        let degrees = box_points(self.s, bound);
        let table: Vec<(i64, i64)> = degrees.iter().map(|n| self.bounds(n)).collect();
        for (i, m) in degrees.iter().enumerate() {
            if table[i].0 > table[i].1 {
                continue;
            }
            for (j, n) in degrees.iter().enumerate().skip(i) {
                if table[j].0 > table[j].1 {
                    continue;
                }
                let sum: Vec<u64> = m.iter().zip(n).map(|(a, b)| a + b).collect();
                let (l, u) = self.bounds(&sum);
                if l > table[i].0 + table[j].0 || u < table[i].1 + table[j].1 {
                    return Err(Error::NotClosed {
                        op: "StaircaseSpec",
                        detail: format!(
                            "pieces at {m:?} and {n:?} add outside the piece at {sum:?}"
                        ),
                    });
                }
            }
        }
        Ok(())
    }
}

/// All of `[0, bound]^s` in lexicographic order.
pub(crate) fn box_points(s: usize, bound: u64) -> Vec<Vec<u64>> {
    let mut out = alloc::vec![Vec::new()];
    for _ in 0..s {
        out = out
            .into_iter()
            .flat_map(|p: Vec<u64>| {
                (0..=bound).map(move |k| {
                    let mut q = p.clone();
                    q.push(k);
                    q
                })
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat;

    fn nonpoly() -> StaircaseSpec {
        StaircaseSpec::new(
            2,
            LowerBound::CeilSqrtQuadratic(alloc::vec![alloc::vec![4, 0], alloc::vec![0, 4]]),
            UpperBound::Linear(LinearForm::new(alloc::vec![2, 2])),
        )
        .unwrap()
    }

    #[test]
    fn nonpolynomial_pieces() {
        let s = nonpoly();
        assert_eq!(s.bounds(&[1, 1]), (3, 4));
        assert_eq!(s.count(&[3, 4]), 5);
        for k in 1..=50u64 {
            assert_eq!(s.count(&[3 * k, 4 * k]), 4 * k + 1);
        }
        s.check_closure(8).unwrap();
        assert!(!s.is_polyhedral());
    }

    #[test]
    fn rational_forms_round_correctly() {
        let f = LinearForm::with_denominator(alloc::vec![89], 55).unwrap();
        assert_eq!(f.floor_at(&[1]), 1);
        assert_eq!(f.floor_at(&[55]), 89);
        assert_eq!(f.ceil_at(&[1]), 2);
        let g = LinearForm::new(alloc::vec![-1]);
        assert_eq!(g.floor_at(&[3]), -3);
        assert_eq!(f.value(&[rat(55, 1)]), rat(89, 1));
    }

    #[test]
    fn min_rule_is_closed() {
        let s = StaircaseSpec::new(
            2,
            LowerBound::Linear(LinearForm::new(alloc::vec![0, 0])),
            UpperBound::PiecewiseLinearMin(alloc::vec![
                LinearForm::new(alloc::vec![1, 0]),
                LinearForm::new(alloc::vec![0, 1]),
            ]),
        )
        .unwrap();
        s.check_closure(8).unwrap();
        assert_eq!(s.count(&[2, 3]), 3);
        assert_eq!(s.upper.limit(&[rat(2, 1), rat(3, 1)]), rat(2, 1));
    }

    #[test]
    fn indefinite_quadratic_is_rejected() {
        let s = StaircaseSpec::new(
            2,
            LowerBound::CeilSqrtQuadratic(alloc::vec![alloc::vec![1, 0], alloc::vec![0, -1]]),
            UpperBound::Linear(LinearForm::new(alloc::vec![2, 2])),
        )
        .unwrap();
        assert!(matches!(s.check_closure(4), Err(Error::NotClosed { .. })));
    }
}
