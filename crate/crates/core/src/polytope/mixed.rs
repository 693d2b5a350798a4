use alloc::format;
use alloc::vec::Vec;

use num_traits::Zero;

use super::{integral_volume, minkowski_sum, Polytope};
use crate::error::{Error, Result};
use crate::lattice::Sublattice;
use crate::num::{Int, Rat};
use crate::poly::{interpolate, monomials_of_degree, MultidegreePolynomial};

fn combination_volume(bodies: &[Polytope], lambda: &[u32], d: usize) -> Result<Rat> {
    let mut sum: Option<Polytope> = None;
    for (k, &l) in bodies.iter().zip(lambda) {
        if l == 0 {
            continue;
        }
        let scaled = k.scale(&Rat::from_integer(Int::from(l)));
        sum = Some(match sum {
            None => scaled,
            Some(s) => minkowski_sum(&s, &scaled)?,
        });
    }
    match sum {
        Some(p) if p.affine_dim() == d as isize => integral_volume(&p, &Sublattice::full(d)),
        _ => Ok(Rat::zero()),
    }
}

/// The homogeneous polynomial `lambda -> Vol(lambda_1 K_1 + ... + lambda_s K_s)`.
pub fn minkowski_polynomial(bodies: &[Polytope]) -> Result<MultidegreePolynomial> {
    let s = bodies.len();
    if s == 0 {
        return Err(Error::invalid("minkowski_polynomial", "no bodies given"));
    }
    let d = bodies[0].ambient_dim();
    for (i, k) in bodies.iter().enumerate() {
        Error::check_dim("minkowski_polynomial", d, k.ambient_dim())?;
        if k.is_empty() {
            return Err(Error::invalid(
                "minkowski_polynomial",
                format!("body {i} is empty"),
            ));
        }
    }
    let monomials = monomials_of_degree(s, d as u32);
    let to_point = |l: &[u32]| -> Vec<Rat> {
        l.iter().map(|&v| Rat::from_integer(Int::from(v))).collect()
    };
    let mut points = Vec::with_capacity(monomials.len());
    let mut values = Vec::with_capacity(monomials.len());
    for l in &monomials {
        points.push(to_point(l));
        values.push(combination_volume(bodies, l, d)?);
    }
    let coeffs = interpolate(&monomials, &points, &values)
        .ok_or_else(|| Error::internal("minkowski_polynomial", "singular interpolation grid"))?;
    let poly = MultidegreePolynomial::new(s, d as u32, monomials.iter().cloned().zip(coeffs))?;
    let needed = s.max(3);
    let mut checked = 0;
    let mut level = d as u32 + 1;
    while checked < needed {
        for l in monomials_of_degree(s, level) {
            if checked == needed {
                break;
            }
            let v = combination_volume(bodies, &l, d)?;
            let p = poly.evaluate(&to_point(&l));
            if v != p {
                return Err(Error::internal(
                    "minkowski_polynomial",
                    format!("held-out point {l:?}: volume {v} but polynomial gives {p}"),
                ));
            }
            checked += 1;
        }
        level += 1;
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat;
    use crate::polytope::{convex_hull, RationalVector};

    fn body(pts: &[&[i64]]) -> Polytope {
        convex_hull(&pts.iter().map(|p| RationalVector::from_i64(p)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn squares() {
        let sq = body(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let p = minkowski_polynomial(&[sq.clone(), sq]).unwrap();
        assert_eq!(p.coefficient(&[2, 0]), rat(1, 1));
        assert_eq!(p.coefficient(&[1, 1]), rat(2, 1));
        assert_eq!(p.coefficient(&[0, 2]), rat(1, 1));
        assert_eq!(p.mixed_value(&[1, 1]), rat(2, 1));
    }

    #[test]
    fn segments() {
        let a = body(&[&[0, 0], &[1, 0]]);
        let b = body(&[&[0, 0], &[0, 1]]);
        let p = minkowski_polynomial(&[a.clone(), b]).unwrap();
        assert_eq!(p.coeffs().len(), 1);
        assert_eq!(p.mixed_value(&[1, 1]), rat(1, 1));
        let q = minkowski_polynomial(&[a.clone(), a]).unwrap();
        assert_eq!(q.mixed_value(&[1, 1]), rat(0, 1));
    }

    #[test]
    fn square_and_triangle() {
        let sq = body(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let tri = body(&[&[0, 0], &[1, 0], &[0, 1]]);
        let p = minkowski_polynomial(&[sq, tri]).unwrap();
        assert_eq!(p.to_string_in("l"), "l1^2 + 2*l1*l2 + 1/2*l2^2");
        assert_eq!(p.mixed_value(&[1, 1]), rat(2, 1));
    }
}
