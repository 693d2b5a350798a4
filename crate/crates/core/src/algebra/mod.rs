//! Multigraded monomial subalgebras of `k[x_1..x_r][t_1..t_s]`, carried by
//! their exponent semigroups.

mod mixed;
mod volume;

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

pub use mixed::{
    HilbertPolynomial, LadderEntry, MixedMultiplicityReport, MixedValue, PositivityCertificate,
    Provenance, SubsetCheck,
};
pub(crate) use mixed::ladder_report;
pub use volume::{GlobalCone, VolumeValue};

use crate::error::{Error, Result};
use crate::lattice::{group_generated, LatticePoint};
use crate::semigroup::{box_points, Generator, GradedSemigroup, DEFAULT_BOUND};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraKind {
    FinitelyGenerated,
    RuleDefined,
}

/// Outcome of a decomposability scan over a box of degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposability {
    pub decomposable: bool,
    pub witness: Option<Vec<u64>>,
    pub bound: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MonomialAlgebra {
    semigroup: GradedSemigroup,
    axis_flags: Vec<bool>,
}

impl MonomialAlgebra {
    pub fn new(semigroup: GradedSemigroup) -> Result<Self> {
        let s = semigroup.s();
        let mut axis_flags = Vec::with_capacity(s);
        for i in 0..s {
            let mut e = vec![0u64; s];
            e[i] = 1;
            axis_flags.push(!semigroup.graded_piece(&e)?.is_empty());
        }
        Ok(MonomialAlgebra {
            semigroup,
            axis_flags,
        })
    }

    /// The algebra generated by the monomials `x^v t^n` for `(v | n)` in `gens`.
    pub fn from_generators(r: usize, s: usize, gens: Vec<Generator>) -> Result<Self> {
        Self::new(GradedSemigroup::from_generators(r, s, gens)?)
    }

    pub fn semigroup(&self) -> &GradedSemigroup {
        &self.semigroup
    }

    pub fn r(&self) -> usize {
        self.semigroup.r()
    }

    pub fn s(&self) -> usize {
        self.semigroup.s()
    }

    pub fn kind(&self) -> AlgebraKind {
        if self.semigroup.is_finitely_generated() {
            AlgebraKind::FinitelyGenerated
        } else {
            AlgebraKind::RuleDefined
        }
    }

    /// `[A]_{e_i} != 0` for each axis.
    pub fn axis_flags(&self) -> &[bool] {
        &self.axis_flags
    }

    /// Generated in the degrees `e_1, ..., e_s` only.
    pub fn is_standard(&self) -> bool {
        self.semigroup.generators().is_some_and(|gens| {
            gens.iter()
                .all(|g| g.degree.iter().sum::<u64>() == 1)
        })
    }

    /// `dim_k [A]_n`, by enumerating the monomial basis.
    pub fn hilbert_function(&self, n: &[u64]) -> Result<u64> {
        Ok(self.semigroup.graded_piece(n)?.len() as u64)
    }

    /// `A^{(n)} = ⊕_k [A]_{kn}`, singly graded.
    pub fn veronese(&self, n: &[u64]) -> Result<MonomialAlgebra> {
        Error::check_dim("veronese", self.s(), n.len())?;
        if n.contains(&0) {
            return Err(Error::invalid("veronese", format!("degree {n:?} is not positive")));
        }
        MonomialAlgebra::new(self.semigroup.veronese(n)?)
    }

    fn generators_or_proxies(&self) -> Result<Vec<Generator>> {
        self.semigroup.proxy_generators(DEFAULT_BOUND)
    }

    /// Krull dimension: the rank of the exponent group. For rule-defined
    /// algebras this is a lower bound read from elements of bounded degree.
    pub fn krull_dim(&self) -> Result<usize> {
        let gens = self.generators_or_proxies()?;
        let pts: Vec<LatticePoint> = gens.iter().map(Generator::to_point).collect();
        Ok(group_generated(self.r() + self.s(), &pts)?.rank())
    }

    /// Krull dimension of `A_(J)`, spanned by the pieces with degree supported on `J` (0-based).
    pub fn dim_subalgebra(&self, j: &[usize]) -> Result<usize> {
        for &i in j {
            if i >= self.s() {
                return Err(Error::invalid("dim_subalgebra", format!("axis {i} out of range")));
            }
        }
        let gens = self.generators_or_proxies()?;
        let pts: Vec<LatticePoint> = gens
            .iter()
            .filter(|g| {
                g.degree
                    .iter()
                    .enumerate()
                    .all(|(i, &d)| d == 0 || j.contains(&i))
            })
            .map(Generator::to_point)
            .collect();
        Ok(group_generated(self.r() + self.s(), &pts)?.rank())
    }

    /// `q = dim(A) - s`.
    pub fn q(&self) -> Result<usize> {
        let d = self.krull_dim()?;
        d.checked_sub(self.s()).ok_or_else(|| {
            Error::unsupported(
                "volume_fn",
                format!("Krull dimension {d} is below the grading rank {}", self.s()),
            )
        })
    }

    /// Checks `[A]_n = [A]_{n_1 e_1} ... [A]_{n_s e_s}` for all `n` in `[0, bound]^s`.
    pub fn is_decomposable(&self, bound: u64) -> Result<Decomposability> {
        let s = self.s();
        let mut degrees = box_points(s, bound);
        degrees.sort_by_key(|n| (n.iter().sum::<u64>(), n.clone()));
        let mut en = self.semigroup.enumerator();
        let mut piece = |n: &[u64]| -> Result<Vec<Vec<i64>>> {
            match en.as_mut() {
                Some(e) => Ok(e.piece(n)?.to_vec()),
                None => self.semigroup.graded_piece(n),
            }
        };
        for n in degrees {
            if n.iter().filter(|&&x| x > 0).count() < 2 {
                continue;
            }
            let mut sum: Vec<Vec<i64>> = vec![vec![0; self.r()]];
            for i in 0..s {
                let mut e = vec![0u64; s];
                e[i] = n[i];
                let axis = piece(&e)?;
                let mut next: Vec<Vec<i64>> = Vec::with_capacity(sum.len() * axis.len());
                for a in &sum {
                    for b in &axis {
                        next.push(a.iter().zip(b).map(|(x, y)| x + y).collect());
                    }
                }
                next.sort();
                next.dedup();
                sum = next;
            }
            if sum != piece(&n)? {
                return Ok(Decomposability {
                    decomposable: false,
                    witness: Some(n),
                    bound,
                });
            }
        }
        Ok(Decomposability {
            decomposable: true,
            witness: None,
            bound,
        })
    }

    fn axis_piece(&self, op: &'static str, axis: usize, degree: u64) -> Result<Vec<Vec<i64>>> {
        let mut e = vec![0u64; self.s()];
        e[axis] = degree;
        let piece = self.semigroup.graded_piece(&e)?;
        if piece.is_empty() {
            return Err(Error::EmptyAxisPiece { op, axis, degree });
        }
        Ok(piece)
    }

    /// `G^[a](A)`: generated by the axis pieces `[A]_{k e_i}` with `k <= a`.
    pub fn truncation(&self, a: u64) -> Result<MonomialAlgebra> {
        let s = self.s();
        let mut gens = Vec::new();
        for i in 0..s {
            for k in 1..=a {
                let mut e = vec![0u64; s];
                e[i] = k;
                for v in self.semigroup.graded_piece(&e)? {
                    gens.push(Generator::new(v, e.clone()));
                }
            }
            if !gens.iter().any(|g| g.degree[i] > 0) {
                return Err(Error::EmptyAxisPiece {
                    op: "truncation",
                    axis: i,
                    degree: a,
                });
            }
        }
        MonomialAlgebra::from_generators(self.r(), s, gens)
    }

    /// `Ã_[p]`: generated by `[A]_{p e_i}`, regraded so that `p e_i` becomes `e_i`.
    pub fn p_subalgebra(&self, p: u64) -> Result<MonomialAlgebra> {
        if p == 0 {
            return Err(Error::invalid("p_subalgebra", "p must be positive"));
        }
        let s = self.s();
        let mut gens = Vec::new();
        for i in 0..s {
            let mut e = vec![0u64; s];
            e[i] = 1;
            for v in self.axis_piece("p_subalgebra", i, p)? {
                gens.push(Generator::new(v, e.clone()));
            }
        }
        MonomialAlgebra::from_generators(self.r(), s, gens)
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::semigroup::semigroup;

    pub(crate) use crate::presets::{min as min_algebra, min_staircase, nonpoly, segre};

    #[test]
    fn hilbert_function_examples() {
        assert_eq!(segre().hilbert_function(&[2, 3]).unwrap(), 12);
        assert_eq!(nonpoly().hilbert_function(&[3, 4]).unwrap(), 5);
        assert_eq!(segre().hilbert_function(&[0, 0]).unwrap(), 1);
        assert_eq!(min_algebra().hilbert_function(&[2, 3]).unwrap(), 3);
    }

    #[test]
    fn veronese_counts() {
        let v = segre().veronese(&[1, 1]).unwrap();
        for k in 0..5u64 {
            assert_eq!(v.hilbert_function(&[k]).unwrap(), (k + 1) * (k + 1));
        }
        let v = min_algebra().veronese(&[1, 1]).unwrap();
        for k in 0..5u64 {
            assert_eq!(v.hilbert_function(&[k]).unwrap(), k + 1);
        }
    }

    #[test]
    fn dimensions() {
        let a = segre();
        assert_eq!(a.krull_dim().unwrap(), 4);
        assert_eq!(a.dim_subalgebra(&[0]).unwrap(), 2);
        assert_eq!(min_algebra().krull_dim().unwrap(), 3);
        assert_eq!(min_staircase().krull_dim().unwrap(), 3);
        let single = MonomialAlgebra::new(semigroup(1, 1, &[(&[1], &[1])]).unwrap()).unwrap();
        assert_eq!(single.krull_dim().unwrap(), 1);
    }

    #[test]
    fn decomposability() {
        assert!(segre().is_decomposable(4).unwrap().decomposable);
        let d = min_algebra().is_decomposable(4).unwrap();
        assert!(!d.decomposable);
        assert_eq!(d.witness, Some(vec![1, 1]));
        assert_eq!(min_staircase().is_decomposable(4).unwrap().witness, Some(vec![1, 1]));
        let single = MonomialAlgebra::new(semigroup(1, 1, &[(&[1], &[1])]).unwrap()).unwrap();
        assert!(single.is_decomposable(8).unwrap().decomposable);
    }

    #[test]
    fn subalgebras() {
        let p2 = segre().p_subalgebra(2).unwrap();
        assert_eq!(p2.semigroup().generators().unwrap().len(), 6);
        assert_eq!(p2.hilbert_function(&[1, 2]).unwrap(), 3 * 5);
        let a = MonomialAlgebra::new(semigroup(1, 1, &[(&[0], &[1]), (&[1], &[1])]).unwrap())
            .unwrap();
        let p = a.p_subalgebra(3).unwrap();
        assert_eq!(p.semigroup().generators().unwrap().len(), 4);
        assert_eq!(p.hilbert_function(&[2]).unwrap(), 7);
        let t2 = segre().truncation(2).unwrap();
        let t3 = segre().truncation(3).unwrap();
        for g in t2.semigroup().generators().unwrap() {
            assert!(t3.semigroup().contains(&g.valuation, &g.degree).unwrap());
        }
        let gap = MonomialAlgebra::new(semigroup(1, 2, &[(&[0], &[1, 0]), (&[0], &[0, 2])]).unwrap())
            .unwrap();
        assert!(matches!(
            gap.p_subalgebra(1),
            Err(Error::EmptyAxisPiece { axis: 1, .. })
        ));
    }
}
