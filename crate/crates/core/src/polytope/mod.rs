//! Rational polytopes and cones with exact vertex and facet descriptions.

mod cone;
pub(crate) mod dd;
mod mixed;

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};
use once_cell::race::OnceBox;

use crate::error::{Error, Result};
use crate::lattice::{LatticePoint, Sublattice};
use crate::linalg::{det_rat, nullspace, rref, RowSpan};
use crate::num::{dot_rat, factorial, integral_direction, Int, Rat};

pub use cone::{cone_fiber, cone_hrep, ConeHRep, PolyCone};
pub use mixed::minkowski_polynomial;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalVector {
    coords: Vec<Rat>,
}

impl RationalVector {
    pub fn new(coords: Vec<Rat>) -> Self {
        RationalVector { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        RationalVector::new(coords.iter().map(|&c| Rat::from_integer(Int::from(c))).collect())
    }

    pub fn from_ints(coords: &[Int]) -> Self {
        RationalVector::new(coords.iter().cloned().map(Rat::from_integer).collect())
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rat> {
        self.coords
    }

    pub fn ambient_dim(&self) -> usize {
        self.coords.len()
    }

    pub fn add(&self, o: &RationalVector) -> RationalVector {
        RationalVector::new(self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &RationalVector) -> RationalVector {
        RationalVector::new(self.coords.iter().zip(&o.coords).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, l: &Rat) -> RationalVector {
        RationalVector::new(self.coords.iter().map(|a| a * l).collect())
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// `normal . x >= offset`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Halfspace {
    pub normal: LatticePoint,
    pub offset: Rat,
}

/// `normal . x = offset`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hyperplane {
    pub normal: LatticePoint,
    pub offset: Rat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HRep {
    pub inequalities: Vec<Halfspace>,
    pub equalities: Vec<Hyperplane>,
}

impl HRep {
    pub fn contains(&self, x: &[Rat]) -> bool {
        let ev = |n: &LatticePoint| -> Rat {
            n.coords()
                .iter()
                .zip(x)
                .map(|(a, b)| Rat::from_integer(a.clone()) * b)
                .sum()
        };
        self.equalities.iter().all(|h| ev(&h.normal) == h.offset)
            && self.inequalities.iter().all(|h| ev(&h.normal) >= h.offset)
    }
}

/// Affine coordinates on the affine hull of a point set.
pub(crate) struct Frame {
    origin: Vec<Rat>,
    basis: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl Frame {
    pub(crate) fn new(points: &[Vec<Rat>]) -> Frame {
        let origin = points[0].clone();
        let n = origin.len();
        let diffs: Vec<Vec<Rat>> = points[1..]
            .iter()
            .map(|p| p.iter().zip(&origin).map(|(a, b)| a - b).collect())
            .collect();
        let (basis, pivots) = rref(diffs, n);
        Frame {
            origin,
            basis,
            pivots,
        }
    }

    pub(crate) fn dim(&self) -> usize {
        self.basis.len()
    }

    pub(crate) fn coords(&self, p: &[Rat]) -> Vec<Rat> {
        self.pivots
            .iter()
            .map(|&j| &p[j] - &self.origin[j])
            .collect()
    }

    fn in_direction_space(&self, v: &[Rat]) -> bool {
        let y: Vec<Rat> = self.pivots.iter().map(|&j| v[j].clone()).collect();
        (0..v.len()).all(|i| {
            let s: Rat = self.basis.iter().zip(&y).map(|(b, c)| &b[i] * c).sum();
            s == v[i]
        })
    }
}

/// Facets `a . y + a0 >= 0` of the hull of a full-dimensional point set in `Q^k`.
fn facets_full(ys: &[Vec<Rat>], k: usize) -> Result<Vec<Vec<Int>>> {
    let rows: Vec<Vec<Int>> = ys
        .iter()
        .map(|y| {
            let mut h = y.clone();
            h.push(Rat::one());
            integral_direction(&h)
        })
        .collect();
    dd::extreme_rays(&rows, k + 1)
}

fn facet_value(f: &[Int], y: &[Rat]) -> Rat {
    let k = y.len();
    let mut s = Rat::from_integer(f[k].clone());
    for (a, b) in f[..k].iter().zip(y) {
        s += Rat::from_integer(a.clone()) * b;
    }
    s
}

pub struct Polytope {
    ambient_dim: usize,
    vertices: Vec<RationalVector>,
    affine_dim: isize,
    hrep: OnceBox<HRep>,
}

impl Clone for Polytope {
    fn clone(&self) -> Self {
        let hrep = OnceBox::new();
        if let Some(h) = self.hrep.get() {
            let _ = hrep.set(Box::new(h.clone()));
        }
        Polytope {
            ambient_dim: self.ambient_dim,
            vertices: self.vertices.clone(),
            affine_dim: self.affine_dim,
            hrep,
        }
    }
}

impl PartialEq for Polytope {
    fn eq(&self, o: &Self) -> bool {
        self.ambient_dim == o.ambient_dim && self.vertices == o.vertices
    }
}

impl Eq for Polytope {}

impl fmt::Debug for Polytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Polytope")
            .field("ambient_dim", &self.ambient_dim)
            .field("affine_dim", &self.affine_dim)
            .field("vertices", &self.vertices)
            .finish()
    }
}

impl fmt::Display for Polytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "conv{{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Polytope {
    pub fn empty(ambient_dim: usize) -> Self {
        Polytope {
            ambient_dim,
            vertices: Vec::new(),
            affine_dim: -1,
            hrep: OnceBox::new(),
        }
    }

    pub fn vertices(&self) -> &[RationalVector] {
        &self.vertices
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Dimension of the affine hull; `-1` for the empty polytope.
    pub fn affine_dim(&self) -> isize {
        self.affine_dim
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn hrep(&self) -> &HRep {
        self.hrep.get_or_init(|| {
            let h = if self.vertices.is_empty() {
                HRep {
                    inequalities: vec![Halfspace {
                        normal: LatticePoint::zero(self.ambient_dim),
                        offset: Rat::one(),
                    }],
                    equalities: Vec::new(),
                }
            } else {
                hull_parts(self.ambient_dim, &self.vertices)
                    .map(|(_, h, _)| h)
                    .expect("hull of vertices")
            };
            Box::new(h)
        })
    }

    pub fn contains(&self, x: &RationalVector) -> bool {
        x.ambient_dim() == self.ambient_dim && !self.is_empty() && self.hrep().contains(x.coords())
    }

    /// Direction lattice of the affine hull intersected with `Z^n`.
    pub fn hull_lattice(&self) -> Sublattice {
        let n = self.ambient_dim;
        if self.vertices.len() < 2 {
            return Sublattice::zero(n);
        }
        let v0 = &self.vertices[0];
        let rows: Vec<Vec<Int>> = self.vertices[1..]
            .iter()
            .map(|v| integral_direction(v.sub(v0).coords()))
            .collect();
        Sublattice::from_rows(n, rows)
            .expect("consistent dimensions")
            .saturation()
    }

    pub fn scale(&self, l: &Rat) -> Polytope {
        if l.is_zero() && !self.is_empty() {
            return convex_hull_in(self.ambient_dim, &[RationalVector::new(vec![
                Rat::zero();
                self.ambient_dim
            ])])
            .expect("single point");
        }
        assert!(!l.is_negative(), "scale factor must be nonnegative");
        let mut vs: Vec<RationalVector> = self.vertices.iter().map(|v| v.scale(l)).collect();
        vs.sort();
        Polytope {
            ambient_dim: self.ambient_dim,
            vertices: vs,
            affine_dim: self.affine_dim,
            hrep: OnceBox::new(),
        }
    }

    pub fn translate(&self, t: &RationalVector) -> Polytope {
        let mut vs: Vec<RationalVector> = self.vertices.iter().map(|v| v.add(t)).collect();
        vs.sort();
        Polytope {
            ambient_dim: self.ambient_dim,
            vertices: vs,
            affine_dim: self.affine_dim,
            hrep: OnceBox::new(),
        }
    }

    /// Image under the coordinate projection onto `coords`.
    pub fn project(&self, coords: &[usize]) -> Polytope {
        let pts: Vec<RationalVector> = self
            .vertices
            .iter()
            .map(|v| RationalVector::new(coords.iter().map(|&i| v.coords[i].clone()).collect()))
            .collect();
        convex_hull_in(coords.len(), &pts).expect("projection dimensions agree")
    }

    /// Integer points of the polytope, in lexicographic order.
    pub fn lattice_points(&self) -> Vec<Vec<Int>> {
        if self.is_empty() {
            return Vec::new();
        }
        let n = self.ambient_dim;
        let lo: Vec<Int> = (0..n)
            .map(|i| {
                self.vertices
                    .iter()
                    .map(|v| v.coords[i].ceil().to_integer())
                    .min()
                    .expect("nonempty")
            })
            .collect();
        let hi: Vec<Int> = (0..n)
            .map(|i| {
                self.vertices
                    .iter()
                    .map(|v| v.coords[i].floor().to_integer())
                    .max()
                    .expect("nonempty")
            })
            .collect();
        if lo.iter().zip(&hi).any(|(a, b)| a > b) {
            return Vec::new();
        }
        let h = self.hrep();
        let mut out = Vec::new();
        let mut cur = lo.clone();
        loop {
            let x: Vec<Rat> = cur.iter().cloned().map(Rat::from_integer).collect();
            if h.contains(&x) {
                out.push(cur.clone());
            }
            let mut i = n;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if cur[i] < hi[i] {
                    cur[i] += 1;
                    cur[i + 1..n].clone_from_slice(&lo[i + 1..n]);
                    break;
                }
            }
            if n == 0 {
                return out;
            }
        }
    }
}

/// Vertices, H-representation and affine dimension of the hull of distinct points.
fn hull_parts(
    ambient_dim: usize,
    points: &[RationalVector],
) -> Result<(Vec<RationalVector>, HRep, usize)> {
    let pts: Vec<Vec<Rat>> = points.iter().map(|p| p.coords.clone()).collect();
    let frame = Frame::new(&pts);
    let k = frame.dim();
    let origin = frame.origin.clone();
    let eq_normals = nullspace(&frame.basis, ambient_dim);
    let equalities = eq_normals
        .iter()
        .map(|c| {
            let w = integral_direction(c);
            let wr: Vec<Rat> = w.iter().cloned().map(Rat::from_integer).collect();
            Hyperplane {
                offset: dot_rat(&wr, &origin),
                normal: LatticePoint::new(w),
            }
        })
        .collect();
    if k == 0 {
        return Ok((
            vec![points[0].clone()],
            HRep {
                inequalities: Vec::new(),
                equalities,
            },
            0,
        ));
    }
    let ys: Vec<Vec<Rat>> = pts.iter().map(|p| frame.coords(p)).collect();
    let facets = facets_full(&ys, k)?;
    let mut vertices = Vec::new();
    for (i, y) in ys.iter().enumerate() {
        let mut span = RowSpan::new(k);
        for f in &facets {
            if facet_value(f, y).is_zero() {
                span.insert_int(&f[..k]);
            }
        }
        if span.rank() == k {
            vertices.push(points[i].clone());
        }
    }
    vertices.sort();
    let inequalities = facets
        .iter()
        .map(|f| {
            let mut w = vec![Rat::zero(); ambient_dim];
            for (j, &p) in frame.pivots.iter().enumerate() {
                w[p] = Rat::from_integer(f[j].clone());
            }
            let offset = dot_rat(&w, &origin) - Rat::from_integer(f[k].clone());
            let wi = integral_direction(&w);
            let g = w
                .iter()
                .zip(&wi)
                .find(|(a, _)| !a.is_zero())
                .map(|(a, b)| a / Rat::from_integer(b.clone()))
                .unwrap_or_else(Rat::one);
            Halfspace {
                normal: LatticePoint::new(wi),
                offset: offset / g,
            }
        })
        .collect();
    Ok((
        vertices,
        HRep {
            inequalities,
            equalities,
        },
        k,
    ))
}

/// Convex hull of points in `Q^ambient_dim`.
pub fn convex_hull_in(ambient_dim: usize, points: &[RationalVector]) -> Result<Polytope> {
    for p in points {
        Error::check_dim("convex_hull", ambient_dim, p.ambient_dim())?;
    }
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.is_empty() {
        return Ok(Polytope::empty(ambient_dim));
    }
    let (vertices, hrep, k) = hull_parts(ambient_dim, &pts)?;
    let cache = OnceBox::new();
    let _ = cache.set(Box::new(hrep));
    Ok(Polytope {
        ambient_dim,
        vertices,
        affine_dim: k as isize,
        hrep: cache,
    })
}

/// Convex hull of a point list; the empty list yields the empty polytope.
pub fn convex_hull(points: &[RationalVector]) -> Result<Polytope> {
    let dim = points.first().map_or(0, RationalVector::ambient_dim);
    convex_hull_in(dim, points)
}

pub fn minkowski_sum(p: &Polytope, q: &Polytope) -> Result<Polytope> {
    Error::check_dim("minkowski_sum", p.ambient_dim, q.ambient_dim)?;
    if p.is_empty() || q.is_empty() {
        return Ok(Polytope::empty(p.ambient_dim));
    }
    let mut sums = Vec::with_capacity(p.vertices.len() * q.vertices.len());
    for a in &p.vertices {
        for b in &q.vertices {
            sums.push(a.add(b));
        }
    }
    convex_hull_in(p.ambient_dim, &sums)
}

/// Simplices (as index lists) of a triangulation of a full-dimensional
/// point configuration in `Q^k`, coning from the lexicographically smallest point.
fn triangulate(points: &[Vec<Rat>], k: usize) -> Result<Vec<Vec<usize>>> {
    if k == 1 {
        let lo = (0..points.len()).min_by(|&a, &b| points[a][0].cmp(&points[b][0]));
        let hi = (0..points.len()).max_by(|&a, &b| points[a][0].cmp(&points[b][0]));
        return Ok(vec![vec![lo.expect("points"), hi.expect("points")]]);
    }
    let base = (0..points.len())
        .min_by(|&a, &b| points[a].cmp(&points[b]))
        .expect("points");
    let facets = facets_full(points, k)?;
    let mut out = Vec::new();
    for f in &facets {
        if facet_value(f, &points[base]).is_zero() {
            continue;
        }
        let idx: Vec<usize> = (0..points.len())
            .filter(|&i| facet_value(f, &points[i]).is_zero())
            .collect();
        let sub: Vec<Vec<Rat>> = idx.iter().map(|&i| points[i].clone()).collect();
        let frame = Frame::new(&sub);
        let ys: Vec<Vec<Rat>> = sub.iter().map(|p| frame.coords(p)).collect();
        for simplex in triangulate(&ys, k - 1)? {
            let mut s: Vec<usize> = simplex.into_iter().map(|i| idx[i]).collect();
            s.push(base);
            out.push(s);
        }
    }
    Ok(out)
}

/// Euclidean volume of the hull of a full-dimensional point set in `Q^k`.
fn full_volume(points: &[Vec<Rat>], k: usize) -> Result<Rat> {
    if k == 0 {
        return Ok(Rat::one());
    }
    let mut total = Rat::zero();
    for s in triangulate(points, k)? {
        let v0 = &points[s[0]];
        let m: Vec<Vec<Rat>> = s[1..]
            .iter()
            .map(|&i| points[i].iter().zip(v0).map(|(a, b)| a - b).collect())
            .collect();
        total += det_rat(&m).abs();
    }
    Ok(total / Rat::from_integer(factorial(k as u32)))
}

/// Volume of `p` normalized so that a fundamental cell of `lattice` has volume 1.
pub fn integral_volume(p: &Polytope, lattice: &Sublattice) -> Result<Rat> {
    Error::check_dim("integral_volume", p.ambient_dim, lattice.ambient_dim())?;
    if p.is_empty() {
        return Ok(Rat::zero());
    }
    let k = p.affine_dim as usize;
    if lattice.rank() != k {
        return Err(Error::MeasureMismatch {
            detail: alloc::format!(
                "lattice rank {} differs from affine dimension {}",
                lattice.rank(),
                k
            ),
        });
    }
    if k == 0 {
        return Ok(Rat::one());
    }
    let pts: Vec<Vec<Rat>> = p.vertices.iter().map(|v| v.coords.clone()).collect();
    let frame = Frame::new(&pts);
    let basis: Vec<Vec<Rat>> = lattice
        .basis()
        .rows()
        .iter()
        .map(|r| r.iter().cloned().map(Rat::from_integer).collect())
        .collect();
    if !basis.iter().all(|b| frame.in_direction_space(b)) {
        return Err(Error::MeasureMismatch {
            detail: "lattice does not span the direction space of the affine hull".into(),
        });
    }
    // coordinates in the lattice basis, read off on columns where it is invertible
    let (_, cols) = rref(basis.clone(), p.ambient_dim);
    let bp: Vec<Vec<Rat>> = basis
        .iter()
        .map(|r| cols.iter().map(|&c| r[c].clone()).collect())
        .collect();
    let bt: Vec<Vec<Rat>> = (0..k)
        .map(|i| (0..k).map(|j| bp[j][i].clone()).collect())
        .collect();
    let inv = crate::linalg::inverse(&bt).ok_or_else(|| Error::internal("integral_volume", "singular lattice basis"))?;
    let v0 = &pts[0];
    let ys: Vec<Vec<Rat>> = pts
        .iter()
        .map(|v| {
            let d: Vec<Rat> = cols.iter().map(|&c| &v[c] - &v0[c]).collect();
            (0..k)
                .map(|i| inv[i].iter().zip(&d).map(|(a, b)| a * b).sum())
                .collect()
        })
        .collect();
    full_volume(&ys, k)
}
