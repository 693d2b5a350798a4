use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use num_traits::Signed;

use super::MonomialAlgebra;
use crate::error::{Error, Result};
use crate::num::{to_f64, Int, Rat};
use crate::poly::{interpolate, monomials_up_to, MultidegreePolynomial, Polynomial};
use crate::semigroup::{box_points, DEFAULT_BOUND};

/// Doublings of the base point before giving up on stabilization.
const MAX_DOUBLINGS: usize = 12;

/// Hilbert polynomial `P_A` with `P_A(n) = dim [A]_n` for `n >= n0` componentwise.
#[derive(Clone, Debug, PartialEq)]
pub struct HilbertPolynomial {
    pub polynomial: Polynomial,
    pub q: u32,
    pub n0: u64,
}

impl HilbertPolynomial {
    /// The degree-`q` part, with coefficients `e(d) / d!`.
    pub fn top(&self) -> MultidegreePolynomial {
        self.polynomial.homogeneous_part(self.q)
    }

    /// `e(d; A)`.
    pub fn mixed_multiplicity(&self, d: &[u32]) -> Rat {
        self.top().mixed_value(d)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LadderEntry {
    pub p: u64,
    pub value: Rat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Exact,
    FujitaLadder,
}

#[derive(Clone, Debug, PartialEq)]
pub enum MixedValue {
    Exact(Rat),
    Approximate(f64),
}

impl MixedValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            MixedValue::Exact(r) => to_f64(r),
            MixedValue::Approximate(x) => *x,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct MixedMultiplicityReport {
    pub d: Vec<u32>,
    pub value: MixedValue,
    pub provenance: Provenance,
    pub ladder: Vec<LadderEntry>,
    pub positive: bool,
}

/// One subset inequality `sum_{j in J} d_j <= dim(A_(J)) - |J|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetCheck {
    /// 1-based axis indices.
    pub subset: Vec<usize>,
    pub lhs: u64,
    pub rhs: i64,
}

impl SubsetCheck {
    pub fn holds(&self) -> bool {
        self.lhs as i64 <= self.rhs
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositivityCertificate {
    pub positive: bool,
    pub violated: Option<Vec<usize>>,
    pub checks: Vec<SubsetCheck>,
}

/// Builds a report from a ladder of exact values `e(d; Ã_[p]) / p^q`.
pub(crate) fn ladder_report(
    d: Vec<u32>,
    ladder: Vec<LadderEntry>,
    exact: Option<Rat>,
    stable_is_exact: bool,
) -> MixedMultiplicityReport {
    let positive_ladder = ladder.iter().any(|e| e.value.is_positive());
    if let Some(v) = exact {
        let positive = v.is_positive();
        return MixedMultiplicityReport {
            d,
            value: MixedValue::Exact(v),
            provenance: Provenance::Exact,
            ladder,
            positive,
        };
    }
    let n = ladder.len();
    if stable_is_exact && n >= 3 && ladder[n - 3..].windows(2).all(|w| w[0].value == w[1].value) {
        let v = ladder[n - 1].value.clone();
        return MixedMultiplicityReport {
            d,
            value: MixedValue::Exact(v),
            provenance: Provenance::Exact,
            ladder,
            positive: positive_ladder,
        };
    }
    let sup = ladder.iter().map(|e| to_f64(&e.value)).fold(0.0, f64::max);
    let value = if n >= 2 {
        let (a, b) = (&ladder[n - 2], &ladder[n - 1]);
        let (p1, p2) = (a.p as f64, b.p as f64);
        let rich = (p2 * to_f64(&b.value) - p1 * to_f64(&a.value)) / (p2 - p1);
        rich.max(sup)
    } else {
        sup
    };
    MixedMultiplicityReport {
        d,
        value: MixedValue::Approximate(value),
        provenance: Provenance::FujitaLadder,
        ladder,
        positive: positive_ladder,
    }
}

impl MonomialAlgebra {
    fn fit_at(
        &self,
        n0: u64,
        q: u32,
        count: &mut dyn FnMut(&[u64]) -> Result<u64>,
    ) -> Result<Option<Polynomial>> {
        let s = self.s();
        let monomials = monomials_up_to(s, q);
        let point = |l: &[u32]| -> Vec<u64> { l.iter().map(|&v| n0 + v as u64).collect() };
        let to_rat = |n: &[u64]| -> Vec<Rat> {
            n.iter().map(|&v| Rat::from_integer(Int::from(v))).collect()
        };
        let mut points = Vec::with_capacity(monomials.len());
        let mut values = Vec::with_capacity(monomials.len());
        for l in &monomials {
            let n = point(l);
            values.push(Rat::from_integer(Int::from(count(&n)?)));
            points.push(to_rat(&n));
        }
        let coeffs = interpolate(&monomials, &points, &values)
            .ok_or_else(|| Error::internal("hilbert_polynomial", "singular interpolation grid"))?;
        let poly = Polynomial::new(s, monomials.iter().cloned().zip(coeffs));
        for l in box_points(s, q as u64 + 1) {
            if l.iter().sum::<u64>() <= q as u64 {
                continue;
            }
            let n: Vec<u64> = l.iter().map(|&v| n0 + v).collect();
            let c = Rat::from_integer(Int::from(count(&n)?));
            if poly.evaluate(&to_rat(&n)) != c {
                return Ok(None);
            }
        }
        Ok(Some(poly))
    }

    /// Hilbert polynomial of a standard multigraded algebra, fitted on boxes
    /// `n0 + [0, q+1]^s` with `n0` doubled until two fits agree.
    pub fn hilbert_polynomial(&self) -> Result<HilbertPolynomial> {
        if !self.is_standard() {
            return Err(Error::unsupported(
                "hilbert_polynomial",
                "algebra is not generated in the degrees e_1, ..., e_s",
            ));
        }
        let q = self.q()? as u32;
        let mut en = self.semigroup.enumerator().expect("standard algebras have generators");
        let mut count = |n: &[u64]| -> Result<u64> { Ok(en.piece(n)?.len() as u64) };
        let mut previous: Option<Polynomial> = None;
        let mut n0 = 1u64;
        for _ in 0..MAX_DOUBLINGS {
            let fit = self.fit_at(n0, q, &mut count)?;
            if let (Some(p), Some(f)) = (&previous, &fit) {
                if p == f {
                    return Ok(HilbertPolynomial {
                        polynomial: f.clone(),
                        q,
                        n0: n0 / 2,
                    });
                }
            }
            previous = fit;
            n0 *= 2;
        }
        Err(Error::RegularityNotReached {
            op: "hilbert_polynomial",
            iterations: MAX_DOUBLINGS,
            previous: previous.map_or_else(|| "none".to_string(), |p| p.to_string()),
            last: self
                .fit_at(n0, q, &mut count)?
                .map_or_else(|| "none".to_string(), |p| p.to_string()),
        })
    }

    fn check_type(&self, op: &'static str, d: &[u32]) -> Result<u32> {
        Error::check_dim(op, self.s(), d.len())?;
        let q = self.q()? as u32;
        if d.iter().sum::<u32>() != q {
            return Err(Error::invalid(
                op,
                format!("type {d:?} does not have total degree q = {q}"),
            ));
        }
        Ok(q)
    }

    /// `e(d; A)` through the ladder `e(d; Ã_[p]) / p^q`, exact when `A` is
    /// standard or the ladder settles.
    pub fn mixed_multiplicities(
        &self,
        d: &[u32],
        schedule: &[u64],
    ) -> Result<MixedMultiplicityReport> {
        let q = self.check_type("mixed_multiplicities", d)?;
        let dec = self.is_decomposable(DEFAULT_BOUND)?;
        if let Some(w) = dec.witness {
            return Err(Error::NotDecomposable {
                op: "mixed_multiplicities",
                witness: w,
            });
        }
        let mut ladder = Vec::with_capacity(schedule.len());
        for &p in schedule {
            let sub = self.p_subalgebra(p)?;
            let e = sub.hilbert_polynomial()?.mixed_multiplicity(d);
            let scale = Rat::from_integer(Int::from(p).pow(q));
            ladder.push(LadderEntry {
                p,
                value: e / scale,
            });
        }
        let exact = if self.is_standard() {
            Some(self.hilbert_polynomial()?.mixed_multiplicity(d))
        } else {
            None
        };
        Ok(ladder_report(
            d.to_vec(),
            ladder,
            exact,
            self.semigroup.is_finitely_generated(),
        ))
    }

    /// Evaluates every subset inequality `sum_J d_j <= dim(A_(J)) - |J|`.
    pub fn positivity(&self, d: &[u32]) -> Result<PositivityCertificate> {
        Error::check_dim("positivity", self.s(), d.len())?;
        let s = self.s();
        let mut checks = Vec::new();
        let mut violated = None;
        for mask in 1u32..(1 << s) {
            let subset: Vec<usize> = (0..s).filter(|i| mask & (1 << i) != 0).collect();
            let lhs: u64 = subset.iter().map(|&i| d[i] as u64).sum();
            let rhs = self.dim_subalgebra(&subset)? as i64 - subset.len() as i64;
            let check = SubsetCheck {
                subset: subset.iter().map(|i| i + 1).collect(),
                lhs,
                rhs,
            };
            if !check.holds() && violated.is_none() {
                violated = Some(check.subset.clone());
            }
            checks.push(check);
        }
        Ok(PositivityCertificate {
            positive: violated.is_none(),
            violated,
            checks,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::{min_algebra, segre};
    use super::*;
    use crate::algebra::MonomialAlgebra;
    use crate::num::rat;
    use crate::semigroup::{
        semigroup, GradedSemigroup, LinearForm, LowerBound, StaircaseSpec, UpperBound,
    };
    use alloc::vec;

    #[test]
    fn segre_polynomial() {
        let h = segre().hilbert_polynomial().unwrap();
        assert_eq!(h.polynomial.to_string(), "n1*n2 + n1 + n2 + 1");
        assert_eq!(h.mixed_multiplicity(&[1, 1]), rat(1, 1));
        assert_eq!(h.mixed_multiplicity(&[2, 0]), rat(0, 1));
        assert_eq!(h.mixed_multiplicity(&[0, 2]), rat(0, 1));
    }

    #[test]
    fn small_polynomials() {
        let a = MonomialAlgebra::new(semigroup(2, 1, &[(&[1, 0], &[1]), (&[0, 1], &[1])]).unwrap())
            .unwrap();
        let h = a.hilbert_polynomial().unwrap();
        assert_eq!(h.polynomial.to_string(), "n1 + 1");
        assert_eq!(h.mixed_multiplicity(&[1]), rat(1, 1));
        let t = MonomialAlgebra::new(semigroup(0, 2, &[(&[], &[1, 0]), (&[], &[0, 1])]).unwrap())
            .unwrap();
        let h = t.hilbert_polynomial().unwrap();
        assert_eq!(h.q, 0);
        assert_eq!(h.mixed_multiplicity(&[0, 0]), rat(1, 1));
    }

    #[test]
    fn segre_ladder_and_positivity() {
        let a = segre();
        let rep = a.mixed_multiplicities(&[1, 1], &[1, 2, 4, 8]).unwrap();
        assert_eq!(rep.provenance, Provenance::Exact);
        assert_eq!(rep.value, MixedValue::Exact(rat(1, 1)));
        assert!(rep.ladder.iter().all(|e| e.value == rat(1, 1)));
        let rep = a.mixed_multiplicities(&[2, 0], &[1, 2]).unwrap();
        assert_eq!(rep.value, MixedValue::Exact(rat(0, 1)));
        assert!(!rep.positive);
        assert!(a.positivity(&[1, 1]).unwrap().positive);
        let c = a.positivity(&[2, 0]).unwrap();
        assert!(!c.positive);
        assert_eq!(c.violated, Some(vec![1]));
    }

    #[test]
    fn non_decomposable_is_refused() {
        assert!(matches!(
            min_algebra().mixed_multiplicities(&[1, 0], &[1]),
            Err(Error::NotDecomposable { .. })
        ));
    }

    #[test]
    fn golden_ladder() {
        let g = MonomialAlgebra::new(
            GradedSemigroup::staircase(
                StaircaseSpec::new(
                    1,
                    LowerBound::Linear(LinearForm::new(vec![0])),
                    UpperBound::Linear(LinearForm::with_denominator(vec![89], 55).unwrap()),
                )
                .unwrap(),
            )
            .unwrap(),
        )
        .unwrap();
        let rep = g.mixed_multiplicities(&[1], &[1, 2, 4, 8, 16]).unwrap();
        let vals: Vec<Rat> = rep.ladder.iter().map(|e| e.value.clone()).collect();
        assert_eq!(vals, vec![rat(1, 1), rat(3, 2), rat(3, 2), rat(3, 2), rat(25, 16)]);
        assert_eq!(rep.provenance, Provenance::FujitaLadder);
        assert!((rep.value.to_f64() - 1.625).abs() < 1e-12);
        let at55 = g.mixed_multiplicities(&[1], &[55]).unwrap();
        assert_eq!(at55.ladder[0].value, rat(89, 55));
    }
}
