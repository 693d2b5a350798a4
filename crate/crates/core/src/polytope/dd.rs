//! Double description method: extreme rays of a pointed cone
//! `{x : a_i . x >= 0}` by incremental insertion of constraints.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{inverse, RowSpan};
use crate::num::{dot, integral_direction, primitive, Int, Rat};

#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn and(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }
    fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }
    fn contains_all(&self, o: &Bits) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a & b == *b)
    }
}

struct Ray {
    v: Vec<Int>,
    zeros: Bits,
}

/// Extreme rays (primitive integer vectors) of `{x in R^dim : a . x >= 0}`.
/// The constraint rows must span `R^dim`, i.e. the cone must be pointed.
pub(crate) fn extreme_rays(constraints: &[Vec<Int>], dim: usize) -> Result<Vec<Vec<Int>>> {
    if dim == 0 {
        return Ok(Vec::new());
    }
    let m = constraints.len();
    let mut span = RowSpan::new(dim);
    let mut basis_idx = Vec::with_capacity(dim);
    for (i, c) in constraints.iter().enumerate() {
        if span.insert_int(c) {
            basis_idx.push(i);
            if basis_idx.len() == dim {
                break;
            }
        }
    }
    if basis_idx.len() < dim {
        return Err(Error::unsupported(
            "double description",
            "constraint system does not define a pointed cone",
        ));
    }
    let b: Vec<Vec<Rat>> = basis_idx
        .iter()
        .map(|&i| {
            constraints[i]
                .iter()
                .cloned()
                .map(Rat::from_integer)
                .collect()
        })
        .collect();
    let inv = inverse(&b).ok_or_else(|| Error::internal("double description", "singular basis"))?;
    let mut rays: Vec<Ray> = (0..dim)
        .map(|j| {
            let col: Vec<Rat> = (0..dim).map(|i| inv[i][j].clone()).collect();
            let mut zeros = Bits::new(m);
            for (k, &idx) in basis_idx.iter().enumerate() {
                if k != j {
                    zeros.set(idx);
                }
            }
            Ray {
                v: integral_direction(&col),
                zeros,
            }
        })
        .collect();
    let mut in_basis = vec![false; m];
    for &i in &basis_idx {
        in_basis[i] = true;
    }
    for (c, a) in constraints.iter().enumerate() {
        if in_basis[c] {
            continue;
        }
        let vals: Vec<Int> = rays.iter().map(|r| dot(a, &r.v)).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
        if neg.is_empty() {
            for (r, v) in rays.iter_mut().zip(&vals) {
                if v.is_zero() {
                    r.zeros.set(c);
                }
            }
            continue;
        }
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let mut fresh = Vec::new();
        for &p in &pos {
            for &n in &neg {
                let common = rays[p].zeros.and(&rays[n].zeros);
                if (common.count() as usize) + 2 < dim {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(t, r)| t == p || t == n || !r.zeros.contains_all(&common));
                if !adjacent {
                    continue;
                }
                let v: Vec<Int> = rays[n]
                    .v
                    .iter()
                    .zip(&rays[p].v)
                    .map(|(x, y)| &vals[p] * x - &vals[n] * y)
                    .collect();
                let mut zeros = common;
                zeros.set(c);
                fresh.push(Ray {
                    v: primitive(v),
                    zeros,
                });
            }
        }
        let mut next = Vec::with_capacity(rays.len() + fresh.len());
        for (i, mut r) in rays.into_iter().enumerate() {
            if vals[i].is_zero() {
                r.zeros.set(c);
                next.push(r);
            } else if vals[i].is_positive() {
                next.push(r);
            }
        }
        next.extend(fresh);
        rays = next;
    }
    Ok(rays.into_iter().map(|r| r.v).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::int;

    fn rows(r: &[&[i64]]) -> Vec<Vec<Int>> {
        r.iter().map(|x| x.iter().map(|&c| int(c)).collect()).collect()
    }

    #[test]
    fn orthant() {
        let mut r = extreme_rays(&rows(&[&[1, 0], &[0, 1]]), 2).unwrap();
        r.sort();
        assert_eq!(r, rows(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn square_cone() {
        // cone over the unit square at height 1: x>=0, y>=0, t-x>=0, t-y>=0
        let c = rows(&[&[1, 0, 0], &[0, 1, 0], &[-1, 0, 1], &[0, -1, 1]]);
        let mut r = extreme_rays(&c, 3).unwrap();
        r.sort();
        assert_eq!(
            r,
            rows(&[&[0, 0, 1], &[0, 1, 1], &[1, 0, 1], &[1, 1, 1]])
        );
    }

    #[test]
    fn redundant_constraints_are_harmless() {
        let c = rows(&[&[1, 0], &[0, 1], &[1, 1], &[2, 1]]);
        assert_eq!(extreme_rays(&c, 2).unwrap().len(), 2);
    }

    #[test]
    fn not_pointed_is_rejected() {
        assert!(extreme_rays(&rows(&[&[1, 0]]), 2).is_err());
    }
}
