use alloc::boxed::Box;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};
use once_cell::race::OnceBox;

use super::{convex_hull_in, dd, Polytope, RationalVector};
use crate::error::{Error, Result};
use crate::lattice::{integer_kernel, IntMatrix, LatticePoint};
use crate::linalg::{rref, to_rat_rows, RowSpan};
use crate::num::{primitive, Int, Rat};

/// Homogeneous description `a . x >= 0` (inequalities) and `a . x = 0` (equalities).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeHRep {
    pub inequalities: Vec<LatticePoint>,
    pub equalities: Vec<LatticePoint>,
}

/// Nonnegative span of finitely many integer rays.
pub struct PolyCone {
    ambient_dim: usize,
    rays: Vec<LatticePoint>,
    hrep: OnceBox<ConeHRep>,
}

impl Clone for PolyCone {
    fn clone(&self) -> Self {
        let hrep = OnceBox::new();
        if let Some(h) = self.hrep.get() {
            let _ = hrep.set(Box::new(h.clone()));
        }
        PolyCone {
            ambient_dim: self.ambient_dim,
            rays: self.rays.clone(),
            hrep,
        }
    }
}

impl fmt::Debug for PolyCone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PolyCone")
            .field("ambient_dim", &self.ambient_dim)
            .field("rays", &self.rays)
            .finish()
    }
}

impl PartialEq for PolyCone {
    fn eq(&self, o: &Self) -> bool {
        self.ambient_dim == o.ambient_dim && self.rays == o.rays
    }
}

impl PolyCone {
    pub fn new(ambient_dim: usize, rays: Vec<LatticePoint>) -> Result<Self> {
        for (i, r) in rays.iter().enumerate() {
            Error::check_dim("PolyCone", ambient_dim, r.ambient_dim())?;
            if r.is_zero() {
                return Err(Error::InvalidRay {
                    op: "PolyCone",
                    index: i,
                });
            }
        }
        Ok(PolyCone {
            ambient_dim,
            rays,
            hrep: OnceBox::new(),
        })
    }

    pub fn rays(&self) -> &[LatticePoint] {
        &self.rays
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn hrep(&self) -> &ConeHRep {
        self.hrep
            .get_or_init(|| Box::new(compute_hrep(self.ambient_dim, &self.rays)))
    }

    /// Dimension of the linear span.
    pub fn dim(&self) -> usize {
        let rows: Vec<Vec<Int>> = self.rays.iter().map(|r| r.coords().to_vec()).collect();
        crate::linalg::rank_int(&rows, self.ambient_dim)
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        let h = self.hrep();
        let ev = |a: &LatticePoint| -> Rat {
            a.coords()
                .iter()
                .zip(x)
                .map(|(p, q)| Rat::from_integer(p.clone()) * q)
                .sum()
        };
        h.equalities.iter().all(|a| ev(a).is_zero())
            && h.inequalities.iter().all(|a| !ev(a).is_negative())
    }

    /// Fiber `{y : (y, x) in cone}` over `x` in the last `s` coordinates.
    pub fn fiber(&self, r: usize, s: usize, x: &RationalVector) -> Result<Polytope> {
        cone_fiber(self, (r, s), x)
    }
}

fn compute_hrep(n: usize, rays: &[LatticePoint]) -> ConeHRep {
    let rows: Vec<Vec<Int>> = rays.iter().map(|r| r.coords().to_vec()).collect();
    let equalities = if rows.is_empty() {
        crate::lattice::Sublattice::full(n).basis().points()
    } else {
        integer_kernel(&IntMatrix::new(n, rows.clone()).expect("consistent rows"))
            .basis()
            .points()
    };
    let (_, pivots) = rref(to_rat_rows(&rows), n);
    let k = pivots.len();
    if k == 0 {
        return ConeHRep {
            inequalities: Vec::new(),
            equalities,
        };
    }
    // coordinates of the rays on pivot columns determine them within the span
    let ys: Vec<Vec<Int>> = rows
        .iter()
        .map(|r| pivots.iter().map(|&p| r[p].clone()).collect())
        .collect();
    let facets = dd::extreme_rays(&ys, k).expect("cone is full-dimensional in its span");
    let mut inequalities: Vec<LatticePoint> = facets
        .into_iter()
        .map(|f| {
            let mut w = alloc::vec![Int::zero(); n];
            for (j, &p) in pivots.iter().enumerate() {
                w[p] = f[j].clone();
            }
            LatticePoint::new(primitive(w))
        })
        .collect();
    inequalities.sort();
    ConeHRep {
        inequalities,
        equalities,
    }
}

/// Homogeneous inequalities `a . x >= 0` cutting out the cone; each
/// equality of the linear span is listed with both signs.
pub fn cone_hrep(c: &PolyCone) -> Vec<LatticePoint> {
    let h = c.hrep();
    let mut out = h.inequalities.clone();
    for e in &h.equalities {
        out.push(e.clone());
        out.push(LatticePoint::new(e.coords().iter().map(|x| -x).collect()));
    }
    out
}

/// `{y in R^r : (y, x) in c}` for `x in R^s`.
pub fn cone_fiber(c: &PolyCone, split: (usize, usize), x: &RationalVector) -> Result<Polytope> {
    let (r, s) = split;
    Error::check_dim("cone_fiber", c.ambient_dim, r + s)?;
    Error::check_dim("cone_fiber", s, x.ambient_dim())?;
    let x_int: Vec<Rat> = x.coords().to_vec();
    let mut rows: Vec<Vec<Int>> = Vec::new();
    let mut push = |a: &[Int]| {
        let shift: Rat = a[r..]
            .iter()
            .zip(&x_int)
            .map(|(p, q)| Rat::from_integer(p.clone()) * q)
            .sum();
        let mut row: Vec<Rat> = a[..r].iter().cloned().map(Rat::from_integer).collect();
        row.push(shift);
        let l = crate::num::denominator_lcm(&row);
        rows.push(
            row.iter()
                .map(|v| (v * Rat::from_integer(l.clone())).to_integer())
                .collect(),
        );
    };
    for a in cone_hrep(c) {
        push(a.coords());
    }
    if r == 0 {
        let ok = rows.iter().all(|row| !row[0].is_negative());
        return if ok {
            convex_hull_in(0, &[RationalVector::new(Vec::new())])
        } else {
            Ok(Polytope::empty(0))
        };
    }
    let mut t = alloc::vec![Int::zero(); r + 1];
    t[r] = Int::one();
    rows.push(t);
    let mut span = RowSpan::new(r + 1);
    for row in &rows {
        span.insert_int(row);
    }
    if span.rank() < r + 1 {
        return Err(Error::unsupported(
            "cone_fiber",
            alloc::format!("fiber over {x} is unbounded"),
        ));
    }
    let rays = dd::extreme_rays(&rows, r + 1)?;
    let mut vertices = Vec::new();
    let mut recession = false;
    for ray in &rays {
        if ray[r].is_zero() {
            recession = true;
        } else {
            let tr = Rat::from_integer(ray[r].clone());
            vertices.push(RationalVector::new(
                ray[..r]
                    .iter()
                    .map(|v| Rat::from_integer(v.clone()) / &tr)
                    .collect(),
            ));
        }
    }
    if recession && !vertices.is_empty() {
        return Err(Error::unsupported(
            "cone_fiber",
            alloc::format!("fiber over {x} is unbounded"),
        ));
    }
    convex_hull_in(r, &vertices)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{dot, rat};

    fn cone(n: usize, rays: &[&[i64]]) -> PolyCone {
        PolyCone::new(n, rays.iter().map(|r| LatticePoint::from_i64(r)).collect()).unwrap()
    }

    fn satisfies(h: &[LatticePoint], x: &[i64]) -> bool {
        let xi: Vec<Int> = x.iter().map(|&v| Int::from(v)).collect();
        h.iter().all(|a| !dot(a.coords(), &xi).is_negative())
    }

    #[test]
    fn orthant_hrep() {
        let c = cone(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(
            cone_hrep(&c),
            alloc::vec![LatticePoint::from_i64(&[0, 1]), LatticePoint::from_i64(&[1, 0])]
        );
    }

    #[test]
    fn min_cone_hrep() {
        let c = cone(3, &[&[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]);
        let h = cone_hrep(&c);
        let mut expected = alloc::vec![
            LatticePoint::from_i64(&[1, 0, 0]),
            LatticePoint::from_i64(&[-1, 1, 0]),
            LatticePoint::from_i64(&[-1, 0, 1]),
        ];
        expected.sort();
        assert_eq!(h, expected);
        for r in c.rays() {
            let xi: Vec<i64> = r.coords().iter().map(|v| i64::try_from(v).unwrap()).collect();
            assert!(satisfies(&h, &xi));
        }
        assert!(!satisfies(&h, &[2, 1, 3]));
    }

    #[test]
    fn absolute_value_cone() {
        let c = cone(2, &[&[1, 1], &[-1, 1]]);
        let mut expected = alloc::vec![
            LatticePoint::from_i64(&[-1, 1]),
            LatticePoint::from_i64(&[1, 1])
        ];
        expected.sort();
        assert_eq!(cone_hrep(&c), expected);
        assert!(satisfies(&cone_hrep(&c), &[0, 5]));
        assert!(!satisfies(&cone_hrep(&c), &[2, 1]));
    }

    #[test]
    fn lower_dimensional_cone_has_equalities() {
        let c = cone(3, &[&[1, 0, 1], &[0, 1, 1]]);
        let h = c.hrep();
        assert_eq!(h.equalities.len(), 1);
        assert!(c.contains(&[rat(1, 1), rat(1, 1), rat(2, 1)]));
        assert!(!c.contains(&[rat(1, 1), rat(1, 1), rat(1, 1)]));
    }

    #[test]
    fn min_cone_fibers() {
        let c = cone(3, &[&[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]);
        let f = cone_fiber(&c, (1, 2), &RationalVector::from_i64(&[2, 3])).unwrap();
        assert_eq!(
            f.vertices(),
            &[RationalVector::from_i64(&[0]), RationalVector::from_i64(&[2])]
        );
        let f = cone_fiber(&c, (1, 2), &RationalVector::from_i64(&[1, 0])).unwrap();
        assert_eq!(f.vertices(), &[RationalVector::from_i64(&[0])]);
        let f = cone_fiber(&c, (1, 2), &RationalVector::from_i64(&[0, 0])).unwrap();
        assert_eq!(f.vertices(), &[RationalVector::from_i64(&[0])]);
    }

    #[test]
    fn zero_ray_rejected() {
        assert!(matches!(
            PolyCone::new(2, alloc::vec![LatticePoint::from_i64(&[0, 0])]),
            Err(Error::InvalidRay { .. })
        ));
    }
}
