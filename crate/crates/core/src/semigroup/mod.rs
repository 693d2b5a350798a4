//! Graded subsemigroups of `Z^r x N^s`: graded pieces, lattice invariants,
//! Newton-Okounkov bodies, truncations and the asymptotic count check.

mod enumerate;
mod staircase;

use alloc::boxed::Box;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};
use once_cell::race::OnceBox;

pub use enumerate::PieceEnumerator;
pub use staircase::{LinearForm, LowerBound, StaircaseSpec, UpperBound};
pub(crate) use staircase::box_points;

use crate::error::{Error, Result};
use crate::fit::leading_coefficient;
use crate::lattice::{group_generated, subgroup_index, Index, LatticePoint, Sublattice};
use crate::num::{to_f64, Int, Rat};
use crate::polytope::{convex_hull_in, integral_volume, PolyCone, Polytope, RationalVector};
use crate::series::HilbertSeries;

/// Default per-axis box for staircase closure checks and proxy generators.
pub const DEFAULT_BOUND: u64 = 8;

/// Degrees scanned when reading `m(S)` off the counts of a rule-defined semigroup.
const PERIOD_SCAN: u64 = 64;

/// Scale used to inner-approximate a non-polyhedral staircase body.
const INNER_SCALE: u64 = 1 << 12;

/// An element `(valuation | degree)` of `Z^r x N^s`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub valuation: Vec<i64>,
    pub degree: Vec<u64>,
}

impl Generator {
    pub fn new(valuation: Vec<i64>, degree: Vec<u64>) -> Self {
        Generator { valuation, degree }
    }

    /// The vector `(valuation | degree)` in `Z^{r+s}`.
    pub fn to_point(&self) -> LatticePoint {
        LatticePoint::new(
            self.valuation
                .iter()
                .map(|&v| Int::from(v))
                .chain(self.degree.iter().map(|&d| Int::from(d)))
                .collect(),
        )
    }

    fn degree_first(&self) -> LatticePoint {
        LatticePoint::new(
            self.degree
                .iter()
                .map(|&d| Int::from(d))
                .chain(self.valuation.iter().map(|&v| Int::from(v)))
                .collect(),
        )
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.valuation.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "|")?;
        for (i, d) in self.degree.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Source {
    Generators(Vec<Generator>),
    Staircase(StaircaseSpec),
    /// The singly graded semigroup with pieces `[base]_{k * direction}`.
    Veronese {
        base: Box<GradedSemigroup>,
        direction: Vec<u64>,
    },
}

pub struct GradedSemigroup {
    r: usize,
    s: usize,
    source: Source,
    series: OnceBox<HilbertSeries>,
}

impl Clone for GradedSemigroup {
    fn clone(&self) -> Self {
        let series = OnceBox::new();
        if let Some(h) = self.series.get() {
            let _ = series.set(Box::new(h.clone()));
        }
        GradedSemigroup {
            r: self.r,
            s: self.s,
            source: self.source.clone(),
            series,
        }
    }
}

impl fmt::Debug for GradedSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GradedSemigroup")
            .field("r", &self.r)
            .field("s", &self.s)
            .field("source", &self.source)
            .finish()
    }
}

impl PartialEq for GradedSemigroup {
    fn eq(&self, o: &Self) -> bool {
        self.r == o.r && self.s == o.s && self.source == o.source
    }
}

/// Lattice data of a semigroup with `s = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Invariants {
    /// `G(S)` in `Z^{r+1}`, valuation coordinates first.
    pub group: Sublattice,
    /// Index of the degree projection of `G(S)` in `Z`.
    pub m: u64,
    /// `[sat(H) : H]` for the degree-zero part `H` of `G(S)`.
    pub ind: Int,
    /// The degree-zero part `H` of `G(S)`, in `Z^r`.
    pub degree_zero: Sublattice,
    /// Every nonzero element has positive degree.
    pub strongly_nonneg: bool,
    /// Dimension of the real span of `S`.
    pub cone_dim: usize,
    /// Computed from points of bounded degree rather than from generators.
    pub empirical: bool,
}

/// A Newton-Okounkov body at level `m` in `R^{r+1}`, degree coordinate last.
#[derive(Clone, Debug, PartialEq)]
pub struct OkounkovBody {
    pub polytope: Polytope,
    pub m: u64,
    /// False when only an inner approximation is available.
    pub exact: bool,
}

impl OkounkovBody {
    /// The body with the degree coordinate dropped.
    pub fn valuation_part(&self) -> Polytope {
        let r = self.polytope.ambient_dim() - 1;
        self.polytope.project(&(0..r).collect::<Vec<_>>())
    }
}

/// Fitted versus predicted leading coefficient of `#[S]_{km}`.
#[derive(Clone, Debug, PartialEq)]
pub struct LimitReport {
    pub estimate: f64,
    pub predicted: Rat,
    pub rel_err: f64,
    pub q: usize,
    pub exact_body: bool,
}

/// `G`, its degree-zero part `H` in `Z^r`, and `[sat(H) : H]`.
pub(crate) fn degree_zero_data(
    r: usize,
    s: usize,
    gens: &[Generator],
) -> Result<(Sublattice, Sublattice, Int)> {
    let pts: Vec<LatticePoint> = gens.iter().map(Generator::to_point).collect();
    let group = group_generated(r + s, &pts)?;
    let flipped: Vec<LatticePoint> = gens.iter().map(Generator::degree_first).collect();
    let h = group_generated(r + s, &flipped)?.vanishing_prefix(s);
    let ind = match subgroup_index(&h, &h.saturation())? {
        Index::Finite(i) => i,
        Index::Infinite => return Err(Error::internal("invariants", "saturation lost rank")),
    };
    Ok((group, h, ind))
}

/// The lattice `sat(H) x {0}^s` in `Z^{r+s}`.
pub(crate) fn reference_lattice(h: &Sublattice, s: usize) -> Result<Sublattice> {
    let sat = h.saturation();
    let rows: Vec<Vec<Int>> = sat
        .basis()
        .rows()
        .iter()
        .map(|row| {
            let mut v = row.clone();
            v.resize(row.len() + s, Int::zero());
            v
        })
        .collect();
    Sublattice::from_rows(h.ambient_dim() + s, rows)
}

impl GradedSemigroup {
    /// The semigroup generated by `gens`, each of nonzero degree.
    pub fn from_generators(r: usize, s: usize, gens: Vec<Generator>) -> Result<Self> {
        if s == 0 {
            return Err(Error::invalid("GradedSemigroup", "grading rank s must be positive"));
        }
        for g in &gens {
            Error::check_dim("GradedSemigroup", r, g.valuation.len())?;
            Error::check_dim("GradedSemigroup", s, g.degree.len())?;
            if g.degree.iter().all(|&d| d == 0) {
                return Err(Error::invalid(
                    "GradedSemigroup",
                    format!("generator {g} has degree zero"),
                ));
            }
        }
        let mut gens = gens;
        gens.sort();
        gens.dedup();
        Ok(GradedSemigroup {
            r,
            s,
            source: Source::Generators(gens),
            series: OnceBox::new(),
        })
    }

    /// A staircase semigroup (`r = 1`), checked for closure on the default box.
    pub fn staircase(spec: StaircaseSpec) -> Result<Self> {
        Self::staircase_with_bound(spec, DEFAULT_BOUND)
    }

    pub fn staircase_with_bound(spec: StaircaseSpec, bound: u64) -> Result<Self> {
        if spec.s == 0 {
            return Err(Error::invalid("GradedSemigroup", "grading rank s must be positive"));
        }
        spec.check_closure(bound)?;
        Ok(GradedSemigroup {
            r: 1,
            s: spec.s,
            source: Source::Staircase(spec),
            series: OnceBox::new(),
        })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn source(&self) -> &Source {
        &self.source
    }

    pub fn generators(&self) -> Option<&[Generator]> {
        match &self.source {
            Source::Generators(g) => Some(g),
            _ => None,
        }
    }

    pub fn is_finitely_generated(&self) -> bool {
        matches!(self.source, Source::Generators(_))
    }

    /// The singly graded semigroup `k -> [S]_{k * direction}`.
    pub fn veronese(&self, direction: &[u64]) -> Result<GradedSemigroup> {
        Error::check_dim("veronese", self.s, direction.len())?;
        if direction.iter().all(|&d| d == 0) {
            return Err(Error::invalid("veronese", "direction must be nonzero"));
        }
        match &self.source {
            Source::Staircase(spec) => {
                let compose = |f: &LinearForm| LinearForm {
                    coeffs: vec![f
                        .coeffs
                        .iter()
                        .zip(direction)
                        .map(|(&c, &d)| c * d as i64)
                        .sum()],
                    denominator: f.denominator,
                };
                let lower = match &spec.lower {
                    LowerBound::Linear(f) => LowerBound::Linear(compose(f)),
                    LowerBound::PiecewiseLinearMax(fs) => {
                        LowerBound::PiecewiseLinearMax(fs.iter().map(compose).collect())
                    }
                    LowerBound::CeilSqrtQuadratic(q) => {
                        let mut v = 0i64;
                        for (i, row) in q.iter().enumerate() {
                            for (j, &c) in row.iter().enumerate() {
                                v += c * direction[i] as i64 * direction[j] as i64;
                            }
                        }
                        LowerBound::CeilSqrtQuadratic(vec![vec![v]])
                    }
                };
                let upper = match &spec.upper {
                    UpperBound::Linear(f) => UpperBound::Linear(compose(f)),
                    UpperBound::PiecewiseLinearMin(fs) => {
                        UpperBound::PiecewiseLinearMin(fs.iter().map(compose).collect())
                    }
                };
                Ok(GradedSemigroup {
                    r: 1,
                    s: 1,
                    source: Source::Staircase(StaircaseSpec::new(1, lower, upper)?),
                    series: OnceBox::new(),
                })
            }
            Source::Veronese { base, direction: d0 } => {
                let d: Vec<u64> = d0.iter().map(|&x| x * direction[0]).collect();
                base.veronese(&d)
            }
            Source::Generators(_) => Ok(GradedSemigroup {
                r: self.r,
                s: 1,
                source: Source::Veronese {
                    base: Box::new(self.clone()),
                    direction: direction.to_vec(),
                },
                series: OnceBox::new(),
            }),
        }
    }

    /// A fresh memoizing enumerator; `None` unless finitely generated.
    pub fn enumerator(&self) -> Option<PieceEnumerator<'_>> {
        self.generators().map(|g| PieceEnumerator::new(self.r, g))
    }

    /// The sorted valuation parts of `[S]_n`.
    pub fn graded_piece(&self, n: &[u64]) -> Result<Vec<Vec<i64>>> {
        Error::check_dim("graded_piece", self.s, n.len())?;
        match &self.source {
            Source::Generators(g) => Ok(PieceEnumerator::new(self.r, g).piece(n)?.to_vec()),
            Source::Staircase(spec) => {
                let (l, u) = spec.bounds(n);
                Ok((l..=u).map(|j| vec![j]).collect())
            }
            Source::Veronese { base, direction } => {
                let m: Vec<u64> = direction.iter().map(|&d| d * n[0]).collect();
                base.graded_piece(&m)
            }
        }
    }

    /// Hilbert series of a finitely generated semigroup, computed once.
    pub fn hilbert_series(&self) -> Result<&HilbertSeries> {
        let gens = self.generators().ok_or_else(|| {
            Error::unsupported("hilbert_series", "semigroup is not given by generators")
        })?;
        self.series.get_or_try_init(|| {
            let pairs: Vec<(Vec<i64>, Vec<u64>)> = gens
                .iter()
                .map(|g| (g.valuation.clone(), g.degree.clone()))
                .collect();
            HilbertSeries::of_generators(self.r, self.s, &pairs).map(Box::new)
        })
    }

    /// `#[S]_n`.
    pub fn count(&self, n: &[u64]) -> Result<u64> {
        Error::check_dim("count", self.s, n.len())?;
        match &self.source {
            Source::Generators(_) => to_count(self.hilbert_series()?.coefficient(n)?),
            Source::Staircase(spec) => Ok(spec.count(n)),
            Source::Veronese { base, direction } => {
                let m: Vec<u64> = direction.iter().map(|&d| d * n[0]).collect();
                base.count(&m)
            }
        }
    }

    /// `#[S]_{k * dir}` for `k = 0..=kmax`.
    pub fn counts_along(&self, dir: &[u64], kmax: u64) -> Result<Vec<u64>> {
        Error::check_dim("counts_along", self.s, dir.len())?;
        match &self.source {
            Source::Generators(_) => self
                .hilbert_series()?
                .along_ray(dir, kmax)?
                .into_iter()
                .map(to_count)
                .collect(),
            Source::Staircase(spec) => Ok((0..=kmax)
                .map(|k| {
                    let n: Vec<u64> = dir.iter().map(|&d| d * k).collect();
                    spec.count(&n)
                })
                .collect()),
            Source::Veronese { base, direction } => {
                let d: Vec<u64> = direction.iter().map(|&x| x * dir[0]).collect();
                base.counts_along(&d, kmax)
            }
        }
    }

    /// Generators, or every nonzero element of degree in `[0, bound]^s`.
    pub fn proxy_generators(&self, bound: u64) -> Result<Vec<Generator>> {
        if let Some(g) = self.generators() {
            return Ok(g.to_vec());
        }
        let mut out = Vec::new();
        for n in box_points(self.s, bound) {
            if n.iter().all(|&x| x == 0) {
                continue;
            }
            for v in self.graded_piece(&n)? {
                out.push(Generator::new(v, n.clone()));
            }
        }
        Ok(out)
    }

    /// `m(S)`: the gcd of the degrees of nonempty pieces (`s = 1`).
    fn period(&self) -> Result<(u64, bool)> {
        if let Some(g) = self.generators() {
            return Ok((g.iter().fold(0u64, |a, x| a.gcd(&x.degree[0])), true));
        }
        let counts = self.counts_along(&[1], PERIOD_SCAN)?;
        let m = counts
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, &c)| c > 0)
            .fold(0u64, |a, (k, _)| a.gcd(&(k as u64)));
        Ok((m, m == 1))
    }

    fn require_single(&self, op: &'static str) -> Result<()> {
        if self.s != 1 {
            return Err(Error::unsupported(
                op,
                format!("needs a singly graded semigroup, got s = {}", self.s),
            ));
        }
        Ok(())
    }

    /// `G(S)`, `m(S)`, `ind(S)` and strong non-negativity (`s = 1`).
    pub fn invariants(&self) -> Result<Invariants> {
        self.require_single("invariants")?;
        let gens = self.proxy_generators(DEFAULT_BOUND)?;
        let (group, h, ind) = degree_zero_data(self.r, 1, &gens)?;
        let (m, _) = self.period()?;
        // with every generator of positive degree the cone is pointed and meets degree 0 only at 0
        let strongly_nonneg = gens.iter().all(|g| g.degree[0] > 0);
        Ok(Invariants {
            cone_dim: group.rank(),
            group,
            m,
            ind,
            degree_zero: h,
            strongly_nonneg,
            empirical: !self.is_finitely_generated(),
        })
    }

    /// The cone spanned by the generators, valuation coordinates first.
    pub fn cone(&self) -> Result<PolyCone> {
        let gens = self.generators().ok_or_else(|| {
            Error::unsupported("cone", "semigroup is not given by generators")
        })?;
        PolyCone::new(self.r + self.s, gens.iter().map(Generator::to_point).collect())
    }

    /// `Con(S) ∩ {degree = m(S)}` (`s = 1`).
    pub fn okounkov_body(&self) -> Result<OkounkovBody> {
        self.require_single("okounkov_body")?;
        let (m, m_certified) = self.period()?;
        if m == 0 {
            return Err(Error::unsupported("okounkov_body", "semigroup has no nonzero elements"));
        }
        let mr = Rat::from_integer(Int::from(m));
        let lift = |v: Vec<Rat>| {
            let mut v = v;
            v.push(mr.clone());
            RationalVector::new(v)
        };
        match &self.source {
            Source::Generators(gens) => {
                let pts: Vec<RationalVector> = gens
                    .iter()
                    .map(|g| {
                        let d = Rat::from_integer(Int::from(g.degree[0]));
                        lift(
                            g.valuation
                                .iter()
                                .map(|&v| Rat::from_integer(Int::from(v)) * &mr / &d)
                                .collect(),
                        )
                    })
                    .collect();
                Ok(OkounkovBody {
                    polytope: convex_hull_in(self.r + 1, &pts)?,
                    m,
                    exact: true,
                })
            }
            Source::Staircase(spec) => {
                let x = [mr.clone()];
                let (pts, exact) = match spec.lower.limit(&x) {
                    Some(lo) => (vec![lift(vec![lo]), lift(vec![spec.upper.limit(&x)])], true),
                    None => {
                        let k = m * INNER_SCALE;
                        let (l, u) = spec.bounds(&[k]);
                        let scale = Rat::new(Int::from(m), Int::from(k));
                        let pts = if l <= u {
                            vec![
                                lift(vec![Rat::from_integer(Int::from(l)) * &scale]),
                                lift(vec![Rat::from_integer(Int::from(u)) * &scale]),
                            ]
                        } else {
                            Vec::new()
                        };
                        (pts, false)
                    }
                };
                Ok(OkounkovBody {
                    polytope: convex_hull_in(2, &pts)?,
                    m,
                    exact: exact && m_certified,
                })
            }
            Source::Veronese { base, direction } => {
                let x = RationalVector::new(
                    direction
                        .iter()
                        .map(|&d| Rat::from_integer(Int::from(d)) * &mr)
                        .collect(),
                );
                let fiber = base.cone()?.fiber(self.r, base.s, &x)?;
                let pts: Vec<RationalVector> = fiber
                    .vertices()
                    .iter()
                    .map(|v| lift(v.coords().to_vec()))
                    .collect();
                Ok(OkounkovBody {
                    polytope: convex_hull_in(self.r + 1, &pts)?,
                    m,
                    exact: m_certified,
                })
            }
        }
    }

    /// Compares the fitted growth of `#[S]_{km}` with `Vol_q(Δ(S)) / ind(S)`.
    pub fn kk_limit_check(&self, n_max: u64) -> Result<LimitReport> {
        let inv = self.invariants()?;
        if !inv.strongly_nonneg {
            return Err(Error::unsupported("kk_limit_check", "semigroup is not strongly non-negative"));
        }
        let body = self.okounkov_body()?;
        let q = body.polytope.affine_dim().max(0) as usize;
        let lattice = reference_lattice(&inv.degree_zero, 1)?;
        let volume = integral_volume(&body.polytope, &lattice)?;
        let predicted = volume / Rat::from_integer(inv.ind.clone());
        let counts = self.counts_along(&[inv.m], n_max)?;
        let start = (n_max / 2).max(1);
        let samples: Vec<(f64, f64)> = (start..=n_max)
            .map(|k| (k as f64, counts[k as usize] as f64))
            .collect();
        let estimate = leading_coefficient(&samples, q as u32);
        let p = to_f64(&predicted);
        let rel_err = if p == 0.0 {
            estimate.abs()
        } else {
            (estimate - p).abs() / p
        };
        Ok(LimitReport {
            estimate,
            predicted,
            rel_err,
            q,
            exact_body: body.exact,
        })
    }

    /// `Ŝ_p`: the subsemigroup generated by `[S]_p`.
    pub fn truncate(&self, p: &[u64]) -> Result<GradedSemigroup> {
        let piece = self.graded_piece(p)?;
        if piece.is_empty() || p.iter().all(|&x| x == 0) {
            return Err(Error::EmptyTruncation { degree: p.to_vec() });
        }
        GradedSemigroup::from_generators(
            self.r,
            self.s,
            piece.into_iter().map(|v| Generator::new(v, p.to_vec())).collect(),
        )
    }

    /// True when `(v | n)` lies in the semigroup.
    pub fn contains(&self, v: &[i64], n: &[u64]) -> Result<bool> {
        Ok(self.graded_piece(n)?.binary_search(&v.to_vec()).is_ok())
    }
}

fn to_count(c: i128) -> Result<u64> {
    u64::try_from(c).map_err(|_| Error::internal("count", format!("coefficient {c} is not a count")))
}

/// Convenience constructor from `(valuation, degree)` slices.
pub fn semigroup(r: usize, s: usize, gens: &[(&[i64], &[u64])]) -> Result<GradedSemigroup> {
    GradedSemigroup::from_generators(
        r,
        s,
        gens.iter()
            .map(|(v, d)| Generator::new(v.to_vec(), d.to_vec()))
            .collect(),
    )
}

impl Invariants {
    pub fn ind_is_one(&self) -> bool {
        self.ind.is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat;

    fn nonpoly() -> GradedSemigroup {
        GradedSemigroup::staircase(
            StaircaseSpec::new(
                2,
                LowerBound::CeilSqrtQuadratic(vec![vec![4, 0], vec![0, 4]]),
                UpperBound::Linear(LinearForm::new(vec![2, 2])),
            )
            .unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn pieces() {
        let s = semigroup(1, 1, &[(&[0], &[1]), (&[1], &[1]), (&[2], &[1])]).unwrap();
        assert_eq!(s.graded_piece(&[3]).unwrap().len(), 7);
        assert_eq!(s.graded_piece(&[0]).unwrap(), vec![vec![0]]);
        assert_eq!(nonpoly().graded_piece(&[1, 1]).unwrap(), vec![vec![3], vec![4]]);
        assert_eq!(nonpoly().graded_piece(&[0, 0]).unwrap(), vec![vec![0]]);
    }

    #[test]
    fn hand_invariants() {
        let a = semigroup(1, 1, &[(&[0], &[1]), (&[2], &[1])]).unwrap();
        let i = a.invariants().unwrap();
        assert_eq!((i.m, i.ind.clone()), (1, Int::from(2)));
        assert!(i.strongly_nonneg);
        let b = semigroup(1, 1, &[(&[0], &[2]), (&[3], &[2])]).unwrap();
        let i = b.invariants().unwrap();
        assert_eq!((i.m, i.ind.clone()), (2, Int::from(3)));
        let c = semigroup(1, 1, &[(&[1], &[1])]).unwrap();
        let i = c.invariants().unwrap();
        assert_eq!((i.m, i.ind.clone(), i.cone_dim), (1, Int::from(1), 1));
    }

    #[test]
    fn bodies() {
        let a = semigroup(1, 1, &[(&[0], &[1]), (&[2], &[1])]).unwrap();
        let body = a.okounkov_body().unwrap();
        assert_eq!(
            body.polytope.vertices(),
            &[RationalVector::from_i64(&[0, 1]), RationalVector::from_i64(&[2, 1])]
        );
        let b = semigroup(1, 1, &[(&[0], &[2]), (&[3], &[2])]).unwrap();
        assert_eq!(
            b.okounkov_body().unwrap().polytope.vertices(),
            &[RationalVector::from_i64(&[0, 2]), RationalVector::from_i64(&[3, 2])]
        );
        let t = semigroup(2, 1, &[(&[0, 0], &[1]), (&[1, 0], &[1]), (&[0, 1], &[1])]).unwrap();
        assert_eq!(t.okounkov_body().unwrap().polytope.affine_dim(), 2);
    }

    #[test]
    fn limit_checks() {
        let a = semigroup(1, 1, &[(&[0], &[1]), (&[1], &[1]), (&[2], &[1])]).unwrap();
        let rep = a.kk_limit_check(200).unwrap();
        assert_eq!(rep.predicted, rat(2, 1));
        assert!(rep.rel_err < 1e-6);
        let b = semigroup(1, 1, &[(&[0], &[2]), (&[3], &[2])]).unwrap();
        let rep = b.kk_limit_check(200).unwrap();
        assert_eq!(rep.predicted, rat(1, 1));
        assert!(rep.rel_err < 1e-6);
        let c = semigroup(1, 1, &[(&[0], &[1]), (&[2], &[1])]).unwrap();
        let rep = c.kk_limit_check(200).unwrap();
        assert_eq!(rep.predicted, rat(1, 1));
        assert!(rep.rel_err < 1e-6);
        let d = semigroup(1, 1, &[(&[0], &[1])]).unwrap();
        let rep = d.kk_limit_check(50).unwrap();
        assert_eq!((rep.q, rep.predicted.clone()), (0, rat(1, 1)));
        assert!(rep.rel_err < 1e-12);
    }

    #[test]
    fn truncation_of_nonpolynomial_rule() {
        let t = nonpoly().truncate(&[1, 1]).unwrap();
        assert_eq!(
            t.generators().unwrap(),
            &[Generator::new(vec![3], vec![1, 1]), Generator::new(vec![4], vec![1, 1])]
        );
        assert!(matches!(
            semigroup(1, 1, &[(&[0], &[2])]).unwrap().truncate(&[1]),
            Err(Error::EmptyTruncation { .. })
        ));
    }

    #[test]
    fn series_agrees_with_enumeration() {
        let s = semigroup(2, 1, &[(&[1, -1], &[1]), (&[0, 2], &[2]), (&[3, 1], &[1])]).unwrap();
        let counts = s.counts_along(&[1], 8).unwrap();
        for (k, c) in counts.iter().enumerate() {
            assert_eq!(*c as usize, s.graded_piece(&[k as u64]).unwrap().len());
        }
    }

    #[test]
    fn veronese_of_staircase_stays_exact() {
        let v = nonpoly().veronese(&[3, 4]).unwrap();
        assert_eq!(v.counts_along(&[1], 10).unwrap()[10], 41);
        let segre = semigroup(
            2,
            2,
            &[(&[1, 0], &[1, 0]), (&[0, 1], &[1, 0]), (&[0, 0], &[0, 1]), (&[1, 1], &[0, 1])],
        )
        .unwrap();
        let v = segre.veronese(&[1, 1]).unwrap();
        assert_eq!(v.graded_piece(&[2]).unwrap().len(), segre.graded_piece(&[2, 2]).unwrap().len());
        let body = v.okounkov_body().unwrap();
        assert!(body.exact);
        assert_eq!(body.polytope.affine_dim(), 2);
    }
}
