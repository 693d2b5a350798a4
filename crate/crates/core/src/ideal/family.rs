use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use super::MonomialIdeal;
use crate::error::{Error, Result};
use crate::num::{Int, Rat};
use crate::polytope::Polytope;

#[derive(Clone, Debug, PartialEq)]
pub enum FamilyRule {
    /// `J_n = I^n`.
    Powers(MonomialIdeal),
    /// `J_1, J_2, ...` listed explicitly.
    Explicit(Vec<MonomialIdeal>),
    /// `J_n` generated by `x^(y, nh - |y|)` for lattice points `y` of `nK`.
    FromBody { body: Polytope, h: u32 },
}

/// A graded family `J_0 = R, J_1, J_2, ...` with `J_i J_j ⊆ J_(i+j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedIdealFamily {
    num_vars: usize,
    rule: FamilyRule,
    beta: u32,
}

impl GradedIdealFamily {
    pub fn powers(i: MonomialIdeal) -> Self {
        GradedIdealFamily {
            num_vars: i.num_vars(),
            beta: i.max_degree() as u32,
            rule: FamilyRule::Powers(i),
        }
    }

    /// The `m`-adic family `m^n`.
    pub fn m_adic(num_vars: usize) -> Self {
        Self::powers(MonomialIdeal::maximal(num_vars))
    }

    /// `pieces[k]` is `J_(k+1)`.
    pub fn explicit(num_vars: usize, pieces: Vec<MonomialIdeal>) -> Result<Self> {
        if pieces.is_empty() {
            return Err(Error::invalid("GradedIdealFamily", "no pieces given"));
        }
        let mut beta = 0u64;
        for (k, p) in pieces.iter().enumerate() {
            Error::check_dim("GradedIdealFamily", num_vars, p.num_vars())?;
            let n = k as u64 + 1;
            beta = beta.max(p.max_degree().div_ceil(n));
        }
        Ok(GradedIdealFamily {
            num_vars,
            rule: FamilyRule::Explicit(pieces),
            beta: beta as u32,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn rule(&self) -> &FamilyRule {
        &self.rule
    }

    /// `β` with every generator of `J_n` of degree at most `β n`.
    pub fn beta(&self) -> u32 {
        self.beta
    }

    /// Largest `n` with `J_n` available, `None` when unbounded.
    pub fn max_index(&self) -> Option<u64> {
        match &self.rule {
            FamilyRule::Explicit(p) => Some(p.len() as u64),
            _ => None,
        }
    }

    pub fn is_m_adic(&self) -> bool {
        matches!(&self.rule, FamilyRule::Powers(i) if i.maximal_power_degree() == Some(1))
    }

    pub fn member(&self, n: u64) -> Result<MonomialIdeal> {
        if n == 0 {
            return Ok(MonomialIdeal::unit(self.num_vars));
        }
        match &self.rule {
            FamilyRule::Powers(i) => Ok(i.power(n)),
            FamilyRule::Explicit(p) => p.get(n as usize - 1).cloned().ok_or_else(|| {
                Error::invalid("GradedIdealFamily", format!("piece {n} is not listed"))
            }),
            FamilyRule::FromBody { body, h } => {
                let scaled = body.scale(&Rat::from_integer(Int::from(n)));
                let level = n * *h as u64;
                let gens = scaled
                    .lattice_points()
                    .into_iter()
                    .map(|y| {
                        let y: Vec<u32> = y
                            .iter()
                            .map(|c| u32::try_from(c).expect("nonnegative body"))
                            .collect();
                        let rest = level - y.iter().map(|&c| c as u64).sum::<u64>();
                        let mut g = y;
                        g.push(rest as u32);
                        g
                    })
                    .collect();
                MonomialIdeal::new(self.num_vars, gens)
            }
        }
    }

    /// The generating degree of `J_n`, when all its generators share it.
    pub fn equigenerated_degree(&self, n: u64) -> Result<Option<u32>> {
        Ok(self.member(n)?.homogeneous_degree())
    }

    /// Checks `J_i J_j ⊆ J_(i+j)` for `1 <= i <= j`, `i + j <= bound`.
    pub fn check_closure(&self, bound: u64) -> Result<()> {
        let bound = self.max_index().map_or(bound, |m| m.min(bound));
        let members: Vec<MonomialIdeal> =
            (0..=bound).map(|n| self.member(n)).collect::<Result<_>>()?;
        for i in 1..=bound / 2 {
            for j in i..=bound - i {
                let (a, b, c) = (&members[i as usize], &members[j as usize], &members[(i + j) as usize]);
                for x in a.gens() {
                    for y in b.gens() {
                        let s: Vec<u32> = x.iter().zip(y).map(|(p, q)| p + q).collect();
                        if !c.contains(&s) {
                            return Err(Error::NotClosed {
                                op: "check_closure",
                                detail: format!("J_{i} J_{j} contains {s:?}, which is not in J_{}", i + j),
                            });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Checks that every generator of `J_n` has degree at most `β n` for `n <= bound`.
    pub fn check_growth(&self, bound: u64) -> Result<()> {
        let bound = self.max_index().map_or(bound, |m| m.min(bound));
        for n in 1..=bound {
            let top = self.member(n)?.max_degree();
            if top > self.beta as u64 * n {
                return Err(Error::invalid(
                    "check_growth",
                    format!("J_{n} has a generator of degree {top} > {} * {n}", self.beta),
                ));
            }
        }
        Ok(())
    }
}

/// The family of the homogenization of `K` at height `h`, in `d + 1` variables.
pub fn body_to_family(body: &Polytope, h: u32) -> Result<GradedIdealFamily> {
    if body.is_empty() {
        return Err(Error::invalid("body_to_family", "the body is empty"));
    }
    if h == 0 {
        return Err(Error::invalid("body_to_family", "h must be positive"));
    }
    let mut needed = Rat::zero();
    for v in body.vertices() {
        if v.coords().iter().any(Signed::is_negative) {
            return Err(Error::invalid(
                "body_to_family",
                format!("vertex {v} leaves the nonnegative orthant"),
            ));
        }
        let s: Rat = v.coords().iter().sum();
        if s > needed {
            needed = s;
        }
    }
    if needed > Rat::from_integer(Int::from(h)) {
        return Err(Error::HomogenizationInfeasible {
            h,
            needed: needed.to_string(),
        });
    }
    Ok(GradedIdealFamily {
        num_vars: body.ambient_dim() + 1,
        rule: FamilyRule::FromBody {
            body: body.clone(),
            h,
        },
        beta: h,
    })
}

/// The smallest admissible height for `K`.
pub fn default_height(body: &Polytope) -> u32 {
    body.vertices()
        .iter()
        .map(|v| {
            let s: Rat = v.coords().iter().sum();
            u32::try_from(s.ceil().to_integer()).unwrap_or(u32::MAX)
        })
        .max()
        .unwrap_or(0)
        .max(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::convex_hull;
    use crate::polytope::tests::pt;
    use alloc::vec;

    fn square() -> Polytope {
        convex_hull(&[pt(&[(0, 1), (0, 1)]), pt(&[(1, 1), (0, 1)]), pt(&[(0, 1), (1, 1)]), pt(&[(1, 1), (1, 1)])])
            .unwrap()
    }

    #[test]
    fn point_and_segment_families() {
        let p = body_to_family(&convex_hull(&[pt(&[(0, 1), (0, 1)])]).unwrap(), 1).unwrap();
        assert_eq!(p.member(3).unwrap(), MonomialIdeal::principal(vec![0, 0, 3]));
        let seg = convex_hull(&[pt(&[(0, 1), (0, 1)]), pt(&[(1, 1), (0, 1)])]).unwrap();
        let f = body_to_family(&seg, 1).unwrap();
        let j3 = f.member(3).unwrap();
        let expected: Vec<Vec<u32>> = (0..=3).map(|j| vec![j, 0, 3 - j]).collect();
        assert_eq!(j3, MonomialIdeal::new(3, expected).unwrap());
        f.check_closure(8).unwrap();
        f.check_growth(8).unwrap();
    }

    #[test]
    fn square_family() {
        let f = body_to_family(&square(), 2).unwrap();
        let j1 = f.member(1).unwrap();
        assert_eq!(j1.gens().len(), 4);
        assert_eq!(j1.homogeneous_degree(), Some(2));
        assert!(j1.contains(&[1, 1, 0]));
        f.check_closure(6).unwrap();
        assert!(matches!(
            body_to_family(&square(), 1),
            Err(Error::HomogenizationInfeasible { h: 1, .. })
        ));
        assert_eq!(default_height(&square()), 2);
    }

    #[test]
    fn explicit_families() {
        let x = |e: u32| MonomialIdeal::principal(vec![e, 0]);
        let ok = GradedIdealFamily::explicit(2, vec![x(1), x(2), x(3)]).unwrap();
        ok.check_closure(8).unwrap();
        assert_eq!(ok.beta(), 1);
        let bad = GradedIdealFamily::explicit(2, vec![x(1), x(3)]).unwrap();
        assert!(matches!(bad.check_closure(8), Err(Error::NotClosed { .. })));
        assert!(GradedIdealFamily::m_adic(2).is_m_adic());
    }
}
