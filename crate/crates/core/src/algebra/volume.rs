use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use super::MonomialAlgebra;
use crate::error::{Error, Result};
use crate::fit::leading_coefficient;
use crate::lattice::LatticePoint;
use crate::num::{denominator_lcm, powi, to_f64, Int, Rat};
use crate::polytope::{
    convex_hull_in, dd, integral_volume, PolyCone, Polytope, RationalVector,
};
use crate::semigroup::{degree_zero_data, LowerBound, Source, UpperBound, DEFAULT_BOUND};

/// Default `n_max` for counting estimates.
pub const DEFAULT_NMAX: u64 = 500;

/// The global cone, with `exact = false` when it is only spanned by
/// elements of bounded degree.
#[derive(Clone, Debug, PartialEq)]
pub struct GlobalCone {
    pub cone: PolyCone,
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub enum VolumeValue {
    Exact(Rat),
    Estimate(f64),
}

impl VolumeValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            VolumeValue::Exact(r) => to_f64(r),
            VolumeValue::Estimate(x) => *x,
        }
    }

    pub fn exact(&self) -> Option<&Rat> {
        match self {
            VolumeValue::Exact(r) => Some(r),
            VolumeValue::Estimate(_) => None,
        }
    }
}

fn staircase_cone(s: usize, lower: &LowerBound, upper: &UpperBound) -> Result<PolyCone> {
    // rows a with a . (y, x) >= 0
    let mut rows: Vec<Vec<Int>> = Vec::new();
    for i in 0..s {
        let mut e = vec![Int::zero(); s + 1];
        e[i + 1] = Int::one();
        rows.push(e);
    }
    let mut bound = |coeffs: &[i64], den: u64, sign: i64| {
        let mut row = vec![Int::from(sign * den as i64)];
        row.extend(coeffs.iter().map(|&c| Int::from(-sign * c)));
        rows.push(row);
    };
    match lower {
        LowerBound::Linear(f) => bound(&f.coeffs, f.denominator, 1),
        LowerBound::PiecewiseLinearMax(fs) => {
            for f in fs {
                bound(&f.coeffs, f.denominator, 1);
            }
        }
        LowerBound::CeilSqrtQuadratic(_) => {
            return Err(Error::unsupported("global_no_cone", "cone is not polyhedral"))
        }
    }
    match upper {
        UpperBound::Linear(f) => bound(&f.coeffs, f.denominator, -1),
        UpperBound::PiecewiseLinearMin(fs) => {
            for f in fs {
                bound(&f.coeffs, f.denominator, -1);
            }
        }
    }
    let rays = dd::extreme_rays(&rows, s + 1)?;
    PolyCone::new(s + 1, rays.into_iter().map(LatticePoint::new).collect())
}

impl MonomialAlgebra {
    /// `Δ(A)`: the cone spanned by exponent vectors `(valuation | degree)`.
    pub fn global_no_cone(&self) -> Result<GlobalCone> {
        match self.semigroup.source() {
            Source::Generators(_) => Ok(GlobalCone {
                cone: self.semigroup.cone()?,
                exact: true,
            }),
            Source::Staircase(spec) if spec.is_polyhedral() => Ok(GlobalCone {
                cone: staircase_cone(spec.s, &spec.lower, &spec.upper)?,
                exact: true,
            }),
            _ => {
                let gens = self.generators_or_proxies()?;
                Ok(GlobalCone {
                    cone: PolyCone::new(
                        self.r() + self.s(),
                        gens.iter().map(|g| g.to_point()).collect(),
                    )?,
                    exact: false,
                })
            }
        }
    }

    fn require_axes(&self, op: &'static str) -> Result<()> {
        if let Some(i) = self.axis_flags.iter().position(|f| !f) {
            return Err(Error::EmptyAxisPiece {
                op,
                axis: i,
                degree: 1,
            });
        }
        Ok(())
    }

    /// `F_A(x) = Vol_q(Δ(A)_x) / ind(A)`, or a counting estimate when the
    /// global cone is not known to be polyhedral.
    pub fn volume_fn_fiber(&self, x: &[Rat]) -> Result<VolumeValue> {
        Error::check_dim("volume_fn_fiber", self.s(), x.len())?;
        if x.iter().any(Signed::is_negative) {
            return Err(Error::invalid("volume_fn_fiber", "x must be nonnegative"));
        }
        self.require_axes("volume_fn_fiber")?;
        let q = self.q()?;
        let global = self.global_no_cone()?;
        if !global.exact {
            let l = denominator_lcm(x);
            let n: Vec<u64> = x
                .iter()
                .map(|v| {
                    u64::try_from((v * Rat::from_integer(l.clone())).to_integer())
                        .map_err(|_| Error::invalid("volume_fn_fiber", "x is too large"))
                })
                .collect::<Result<_>>()?;
            let est = self.volume_fn_count(&n, DEFAULT_NMAX)?;
            return Ok(VolumeValue::Estimate(est / powi(to_f64(&Rat::from_integer(l)), q as u32)));
        }
        let fiber = global
            .cone
            .fiber(self.r(), self.s(), &RationalVector::new(x.to_vec()))?;
        if fiber.is_empty() || fiber.affine_dim() < q as isize {
            return Ok(VolumeValue::Exact(Rat::zero()));
        }
        let gens = self.generators_or_proxies()?;
        let (_, h, ind) = degree_zero_data(self.r(), self.s(), &gens)?;
        let vol = integral_volume(&fiber, &h.saturation())?;
        Ok(VolumeValue::Exact(vol / Rat::from_integer(ind)))
    }

    /// Tail fit of `dim [A]_{kn}` against `a k^q + b k^(q-1)`.
    pub fn volume_fn_count(&self, n: &[u64], n_max: u64) -> Result<f64> {
        Error::check_dim("volume_fn_count", self.s(), n.len())?;
        self.require_axes("volume_fn_count")?;
        let q = self.q()?;
        let counts = self.semigroup.counts_along(n, n_max)?;
        let start = (n_max / 2).max(1);
        let samples: Vec<(f64, f64)> = (start..=n_max)
            .map(|k| (k as f64, counts[k as usize] as f64))
            .collect();
        Ok(leading_coefficient(&samples, q as u32))
    }

    /// The Newton-Okounkov body of `A^{(n)}` read off from its elements of
    /// degree at most `bound`, at level `m(A^{(n)})`, degree coordinate dropped.
    pub fn enumerated_body(&self, n: &[u64], bound: u64) -> Result<(Polytope, u64)> {
        let v = self.semigroup.veronese(n)?;
        let inv = v.invariants()?;
        let m = Rat::from_integer(Int::from(inv.m));
        let mut pts = Vec::new();
        for k in 1..=bound {
            let kr = Rat::from_integer(Int::from(k));
            for val in v.graded_piece(&[k])? {
                pts.push(RationalVector::new(
                    val.iter()
                        .map(|&c| Rat::from_integer(Int::from(c)) * &m / &kr)
                        .collect(),
                ));
            }
        }
        Ok((convex_hull_in(self.r(), &pts)?, inv.m))
    }

    /// Compares the fiber of `Δ(A)` over `m n` with the Okounkov body of the
    /// Veronese `A^{(n)}`, both computed and enumerated.
    pub fn fiber_theorem_check(&self, n: &[u64]) -> Result<bool> {
        let global = self.global_no_cone()?;
        let (enumerated, m) = self.enumerated_body(n, DEFAULT_BOUND)?;
        let x: Vec<Rat> = n.iter().map(|&v| Rat::from_integer(Int::from(v * m))).collect();
        let fiber = global
            .cone
            .fiber(self.r(), self.s(), &RationalVector::new(x))?;
        let body = self.semigroup.veronese(n)?.okounkov_body()?;
        if body.m != m {
            return Err(Error::internal(
                "fiber_theorem_check",
                format!("period {} differs from {m}", body.m),
            ));
        }
        Ok(fiber.vertices() == enumerated.vertices()
            && fiber.vertices() == body.valuation_part().vertices())
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::{min_algebra, min_staircase, nonpoly, segre};
    use super::*;
    use crate::num::rat;
    use crate::semigroup::semigroup;

    #[test]
    fn min_function_fibers() {
        for a in [min_algebra(), min_staircase()] {
            let f = |x: &[i64]| {
                let xr: Vec<Rat> = x.iter().map(|&v| rat(v, 1)).collect();
                a.volume_fn_fiber(&xr).unwrap()
            };
            assert_eq!(f(&[2, 3]), VolumeValue::Exact(rat(2, 1)));
            assert_eq!(f(&[1, 1]), VolumeValue::Exact(rat(1, 1)));
            assert_eq!(f(&[1, 0]), VolumeValue::Exact(rat(0, 1)));
            for n in [[1u64, 1], [2, 3], [3, 1]] {
                assert!(a.fiber_theorem_check(&n).unwrap());
            }
        }
    }

    #[test]
    fn min_cone_rays() {
        let mut rays: Vec<LatticePoint> = min_staircase().global_no_cone().unwrap().cone.rays().to_vec();
        rays.sort();
        let mut expected = vec![
            LatticePoint::from_i64(&[0, 1, 0]),
            LatticePoint::from_i64(&[0, 0, 1]),
            LatticePoint::from_i64(&[1, 1, 1]),
        ];
        expected.sort();
        assert_eq!(rays, expected);
    }

    #[test]
    fn segre_volume() {
        let a = segre();
        assert_eq!(
            a.volume_fn_fiber(&[rat(1, 1), rat(1, 1)]).unwrap(),
            VolumeValue::Exact(rat(1, 1))
        );
        assert_eq!(
            a.volume_fn_fiber(&[rat(2, 1), rat(3, 1)]).unwrap(),
            VolumeValue::Exact(rat(6, 1))
        );
        assert!((a.volume_fn_count(&[1, 1], 200).unwrap() - 1.0).abs() < 0.02);
    }

    #[test]
    fn nonpolynomial_counts() {
        let a = nonpoly();
        assert!((a.volume_fn_count(&[3, 4], 200).unwrap() - 4.0).abs() < 0.05);
        let t = 4.0 - 2.0 * core::f64::consts::SQRT_2;
        assert!((a.volume_fn_count(&[1, 1], 200).unwrap() - t).abs() < 0.02);
        match a.volume_fn_fiber(&[rat(1, 1), rat(1, 1)]).unwrap() {
            VolumeValue::Estimate(e) => assert!((e - t).abs() < 0.02),
            v => panic!("expected an estimate, got {v:?}"),
        }
    }

    #[test]
    fn homogeneity_and_index() {
        let a = MonomialAlgebra::new(
            semigroup(1, 2, &[(&[0], &[1, 0]), (&[2], &[1, 0]), (&[0], &[0, 1]), (&[1], &[1, 1])])
                .unwrap(),
        )
        .unwrap();
        let x = [rat(2, 1), rat(3, 1)];
        let base = a.volume_fn_fiber(&x).unwrap();
        let b = base.exact().unwrap().clone();
        for l in [rat(1, 2), rat(2, 1), rat(3, 1)] {
            let y: Vec<Rat> = x.iter().map(|v| v * &l).collect();
            assert_eq!(a.volume_fn_fiber(&y).unwrap(), VolumeValue::Exact(&b * &l));
        }
        let c = a.volume_fn_count(&[2, 3], 200).unwrap();
        assert!((c - to_f64(&b)).abs() / to_f64(&b) < 0.02);
    }
}
