//! Multigraded Hilbert series of affine semigroup rings.
//!
//! The toric ideal of the generators is computed by Buchberger's algorithm on
//! binomials with an elimination order; the Hilbert series numerator then
//! comes from its initial monomial ideal by pivoting on variable powers.
//! Coefficients are extracted by dividing out the denominator degree by degree.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::limits;

type Mono = Vec<u32>;

#[derive(Clone, Debug)]
struct Binomial {
    lead: Mono,
    trail: Mono,
}

struct Order {
    nx: usize,
    weights: Vec<u64>,
}

impl Order {
    fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        let (ax, ay) = a.split_at(self.nx);
        let (bx, by) = b.split_at(self.nx);
        let da: u64 = ax.iter().map(|&v| v as u64).sum();
        let db: u64 = bx.iter().map(|&v| v as u64).sum();
        if da != db {
            return da.cmp(&db);
        }
        for i in (0..self.nx).rev() {
            if ax[i] != bx[i] {
                return bx[i].cmp(&ax[i]);
            }
        }
        let wa: u64 = ay.iter().zip(&self.weights).map(|(&v, w)| v as u64 * w).sum();
        let wb: u64 = by.iter().zip(&self.weights).map(|(&v, w)| v as u64 * w).sum();
        if wa != wb {
            return wa.cmp(&wb);
        }
        for i in (0..ay.len()).rev() {
            if ay[i] != by[i] {
                return by[i].cmp(&ay[i]);
            }
        }
        Ordering::Equal
    }
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

fn lcm(a: &[u32], b: &[u32]) -> Mono {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn normal_form(basis: &[Binomial], mut u: Mono) -> Mono {
    'outer: loop {
        for b in basis {
            if divides(&b.lead, &u) {
                for ((x, l), t) in u.iter_mut().zip(&b.lead).zip(&b.trail) {
                    *x = *x - l + t;
                }
                continue 'outer;
            }
        }
        return u;
    }
}

/// Initial ideal generators (in the `y` variables) of the toric ideal of `cols`.
fn toric_initial_ideal(cols: &[Vec<u32>], weights: &[u64]) -> Vec<Mono> {
    let nx = cols.first().map_or(0, Vec::len);
    let ny = cols.len();
    let order = Order {
        nx,
        weights: weights.to_vec(),
    };
    let mut basis: Vec<Binomial> = cols
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let mut lead = c.clone();
            lead.resize(nx + ny, 0);
            let mut trail = vec![0; nx + ny];
            trail[nx + i] = 1;
            Binomial { lead, trail }
        })
        .collect();
    let mut pairs: BTreeSet<(u64, usize, usize)> = BTreeSet::new();
    let key = |a: &[u32], b: &[u32]| -> u64 { lcm(a, b).iter().map(|&v| v as u64).sum() };
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.insert((key(&basis[i].lead, &basis[j].lead), i, j));
        }
    }
    while let Some(p) = pairs.pop_first() {
        let (_, i, j) = p;
        let (bi, bj) = (&basis[i], &basis[j]);
        if coprime(&bi.lead, &bj.lead) {
            continue;
        }
        let l = lcm(&bi.lead, &bj.lead);
        let u: Mono = l
            .iter()
            .zip(&bi.lead)
            .zip(&bi.trail)
            .map(|((x, a), b)| x - a + b)
            .collect();
        let w: Mono = l
            .iter()
            .zip(&bj.lead)
            .zip(&bj.trail)
            .map(|((x, a), b)| x - a + b)
            .collect();
        let u = normal_form(&basis, u);
        let w = normal_form(&basis, w);
        let new = match order.cmp(&u, &w) {
            Ordering::Equal => continue,
            Ordering::Greater => Binomial { lead: u, trail: w },
            Ordering::Less => Binomial { lead: w, trail: u },
        };
        let n = basis.len();
        for (k, b) in basis.iter().enumerate() {
            pairs.insert((key(&b.lead, &new.lead), k, n));
        }
        basis.push(new);
    }
    let mut init: Vec<Mono> = basis
        .into_iter()
        .filter(|b| b.lead[..nx].iter().all(|&v| v == 0) && b.trail[..nx].iter().all(|&v| v == 0))
        .map(|b| b.lead[nx..].to_vec())
        .collect();
    minimalize(&mut init);
    init
}

fn minimalize(gens: &mut Vec<Mono>) {
    gens.sort_by_key(|g| (g.iter().sum::<u32>(), g.clone()));
    gens.dedup();
    let mut kept: Vec<Mono> = Vec::with_capacity(gens.len());
    for g in gens.drain(..) {
        if !kept.iter().any(|k| divides(k, &g)) {
            kept.push(g);
        }
    }
    *gens = kept;
}

type TPoly = BTreeMap<Vec<u32>, i128>;

fn poly_add(a: &mut TPoly, b: &TPoly, shift: &[u32], sign: i128) -> Result<()> {
    for (e, c) in b {
        let key: Vec<u32> = e.iter().zip(shift).map(|(x, y)| x + y).collect();
        let v = c
            .checked_mul(sign)
            .ok_or(Error::Overflow { op: "hilbert_series" })?;
        let slot = a.entry(key).or_insert(0);
        *slot = slot
            .checked_add(v)
            .ok_or(Error::Overflow { op: "hilbert_series" })?;
    }
    a.retain(|_, c| *c != 0);
    Ok(())
}

fn poly_mul(a: &TPoly, b: &TPoly) -> Result<TPoly> {
    let mut out = TPoly::new();
    for (e, c) in b {
        poly_add(&mut out, a, e, *c)?;
    }
    Ok(out)
}

/// Numerator of the Hilbert series of `k[y]/(gens)` with `deg y_i = degs[i]`.
fn kpoly(mut gens: Vec<Mono>, degs: &[Vec<u32>], s: usize) -> Result<TPoly> {
    let one = || {
        let mut p = TPoly::new();
        p.insert(vec![0; s], 1);
        p
    };
    let deg_of = |m: &[u32]| -> Vec<u32> {
        let mut d = vec![0u32; s];
        for (k, &e) in m.iter().enumerate() {
            for (dj, gj) in d.iter_mut().zip(&degs[k]) {
                *dj += e * gj;
            }
        }
        d
    };
    minimalize(&mut gens);
    if gens.is_empty() {
        return Ok(one());
    }
    if gens.iter().any(|g| g.iter().all(|&v| v == 0)) {
        return Ok(TPoly::new());
    }
    let nvars = gens[0].len();
    let counts: Vec<usize> = (0..nvars)
        .map(|j| gens.iter().filter(|g| g[j] > 0).count())
        .collect();
    let (j, &c) = counts
        .iter()
        .enumerate()
        .max_by_key(|(_, c)| **c)
        .expect("variables");
    if c <= 1 {
        let mut acc = one();
        for g in &gens {
            let mut f = one();
            poly_add(&mut f, &one(), &deg_of(g), -1)?;
            acc = poly_mul(&acc, &f)?;
        }
        return Ok(acc);
    }
    let e = gens
        .iter()
        .filter(|g| g[j] > 0)
        .map(|g| g[j])
        .min()
        .expect("shared variable");
    let mut pivot = vec![0; nvars];
    pivot[j] = e;
    let mut with_pivot: Vec<Mono> = gens.iter().filter(|g| g[j] == 0).cloned().collect();
    with_pivot.push(pivot.clone());
    let colon: Vec<Mono> = gens
        .iter()
        .map(|g| {
            let mut h = g.clone();
            h[j] = h[j].saturating_sub(e);
            h
        })
        .collect();
    let mut out = kpoly(with_pivot, degs, s)?;
    let rest = kpoly(colon, degs, s)?;
    poly_add(&mut out, &rest, &deg_of(&pivot), 1)?;
    Ok(out)
}

/// Hilbert series `N(t) / prod (1 - t^{d_i})` of an affine semigroup ring
/// graded by `N^s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    s: usize,
    numerator: Vec<(Vec<u32>, i128)>,
    denominators: Vec<Vec<u32>>,
}

impl HilbertSeries {
    /// Series of the semigroup generated by `(valuation, degree)` pairs, each
    /// of nonzero degree.
    pub fn of_generators(r: usize, s: usize, gens: &[(Vec<i64>, Vec<u64>)]) -> Result<Self> {
        let mut gens: Vec<(Vec<i64>, Vec<u64>)> = gens.to_vec();
        gens.sort();
        gens.dedup();
        for (v, d) in &gens {
            Error::check_dim("hilbert_series", r, v.len())?;
            Error::check_dim("hilbert_series", s, d.len())?;
            if d.iter().all(|&x| x == 0) {
                return Err(Error::unsupported(
                    "hilbert_series",
                    alloc::format!("generator {v:?} has degree zero"),
                ));
            }
        }
        // shift valuations by a multiple of the total degree so all entries are >= 0
        let mut c: i64 = 0;
        for (v, d) in &gens {
            let td: i64 = d.iter().map(|&x| x as i64).sum();
            for &x in v {
                if x < 0 {
                    c = c.max((-x + td - 1) / td);
                }
            }
        }
        let cols: Vec<Vec<u32>> = gens
            .iter()
            .map(|(v, d)| {
                let td: i64 = d.iter().map(|&x| x as i64).sum();
                let mut col: Vec<u32> = v.iter().map(|&x| (x + c * td) as u32).collect();
                col.extend(d.iter().map(|&x| x as u32));
                col
            })
            .collect();
        let weights: Vec<u64> = gens.iter().map(|(_, d)| d.iter().sum()).collect();
        let degs: Vec<Vec<u32>> = gens
            .iter()
            .map(|(_, d)| d.iter().map(|&x| x as u32).collect())
            .collect();
        let init = if cols.is_empty() {
            Vec::new()
        } else {
            toric_initial_ideal(&cols, &weights)
        };
        let num = if cols.is_empty() {
            let mut p = TPoly::new();
            p.insert(vec![0; s], 1);
            p
        } else {
            kpoly(init, &degs, s)?
        };
        Ok(HilbertSeries {
            s,
            numerator: num.into_iter().collect(),
            denominators: degs,
        })
    }

    pub fn numerator(&self) -> &[(Vec<u32>, i128)] {
        &self.numerator
    }

    pub fn denominators(&self) -> &[Vec<u32>] {
        &self.denominators
    }

    /// Dense coefficients on the box `[0, bounds]`, row-major with the last
    /// coordinate fastest.
    pub fn coefficients_in_box(&self, bounds: &[u64]) -> Result<Vec<i128>> {
        Error::check_dim("hilbert_series", self.s, bounds.len())?;
        let s = self.s;
        let mut size: usize = 1;
        for &b in bounds {
            size = size
                .checked_mul(b as usize + 1)
                .filter(|&n| n <= limits::max_points())
                .ok_or_else(|| Error::ResourceLimit {
                    op: "hilbert_series",
                    degree: bounds.to_vec(),
                    points: limits::max_points(),
                })?;
        }
        let mut stride = vec![1usize; s];
        for i in (0..s.saturating_sub(1)).rev() {
            stride[i] = stride[i + 1] * (bounds[i + 1] as usize + 1);
        }
        let mut c = vec![0i128; size];
        for (e, v) in &self.numerator {
            if e.iter().zip(bounds).all(|(&x, &b)| x as u64 <= b) {
                let idx: usize = e.iter().zip(&stride).map(|(&x, st)| x as usize * st).sum();
                c[idx] = *v;
            }
        }
        for d in &self.denominators {
            if d.iter().zip(bounds).any(|(&x, &b)| x as u64 > b) {
                continue;
            }
            let off: usize = d.iter().zip(&stride).map(|(&x, st)| x as usize * st).sum();
            let mut n = vec![0u64; s];
            for idx in 0..size {
                if n.iter().zip(d).all(|(&a, &b)| a >= b as u64) {
                    c[idx] = c[idx]
                        .checked_add(c[idx - off])
                        .ok_or(Error::Overflow { op: "hilbert_series" })?;
                }
                for i in (0..s).rev() {
                    if n[i] < bounds[i] {
                        n[i] += 1;
                        break;
                    }
                    n[i] = 0;
                }
            }
        }
        Ok(c)
    }

    pub fn coefficient(&self, n: &[u64]) -> Result<i128> {
        let c = self.coefficients_in_box(n)?;
        Ok(*c.last().expect("nonempty box"))
    }

    /// Coefficients at `k * dir` for `k = 0..=kmax`.
    pub fn along_ray(&self, dir: &[u64], kmax: u64) -> Result<Vec<i128>> {
        Error::check_dim("hilbert_series", self.s, dir.len())?;
        let bounds: Vec<u64> = dir.iter().map(|&d| d * kmax).collect();
        let c = self.coefficients_in_box(&bounds)?;
        let mut stride = vec![1usize; self.s];
        for i in (0..self.s.saturating_sub(1)).rev() {
            stride[i] = stride[i + 1] * (bounds[i + 1] as usize + 1);
        }
        let step: usize = dir.iter().zip(&stride).map(|(&d, st)| d as usize * st).sum();
        Ok((0..=kmax as usize).map(|k| c[k * step]).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hs(r: usize, s: usize, g: &[(&[i64], &[u64])]) -> HilbertSeries {
        let gens: Vec<(Vec<i64>, Vec<u64>)> =
            g.iter().map(|(v, d)| (v.to_vec(), d.to_vec())).collect();
        HilbertSeries::of_generators(r, s, &gens).unwrap()
    }

    #[test]
    fn line_segment_semigroup() {
        // generators (0|1),(1|1),(2|1): counts 2n+1
        let h = hs(1, 1, &[(&[0], &[1]), (&[1], &[1]), (&[2], &[1])]);
        let c = h.along_ray(&[1], 10).unwrap();
        for (n, v) in c.iter().enumerate() {
            assert_eq!(*v, 2 * n as i128 + 1);
        }
    }

    #[test]
    fn segre_counts() {
        let h = hs(
            4,
            2,
            &[
                (&[1, 0, 0, 0], &[1, 0]),
                (&[0, 1, 0, 0], &[1, 0]),
                (&[0, 0, 1, 0], &[0, 1]),
                (&[0, 0, 0, 1], &[0, 1]),
            ],
        );
        assert_eq!(h.coefficient(&[2, 3]).unwrap(), 12);
        let c = h.along_ray(&[1, 1], 6).unwrap();
        for (k, v) in c.iter().enumerate() {
            assert_eq!(*v, ((k + 1) * (k + 1)) as i128);
        }
    }

    #[test]
    fn negative_valuations_and_gaps() {
        // (-1|1),(1|1): piece n is {-n,-n+2,..,n}, n+1 points
        let h = hs(1, 1, &[(&[-1], &[1]), (&[1], &[1])]);
        assert_eq!(h.along_ray(&[1], 5).unwrap(), vec![1, 2, 3, 4, 5, 6]);
        // (0|2),(3|2): nothing in odd degree
        let h = hs(1, 1, &[(&[0], &[2]), (&[3], &[2])]);
        assert_eq!(h.along_ray(&[1], 6).unwrap(), vec![1, 0, 2, 0, 3, 0, 4]);
    }

    #[test]
    fn numerical_semigroup_in_degree() {
        // (0|2),(0|3): piece n is {0} iff n is in <2,3>
        let h = hs(1, 1, &[(&[0], &[2]), (&[0], &[3])]);
        assert_eq!(h.along_ray(&[1], 6).unwrap(), vec![1, 0, 1, 1, 1, 1, 1]);
    }
}
