//! Integer lattices: Hermite and Smith normal forms, generated subgroups,
//! saturations and subgroup indices. All arithmetic is arbitrary precision.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::num::Int;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    coords: Vec<Int>,
}

impl LatticePoint {
    pub fn new(coords: Vec<Int>) -> Self {
        LatticePoint { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        LatticePoint::new(coords.iter().map(|&c| Int::from(c)).collect())
    }

    pub fn zero(ambient_dim: usize) -> Self {
        LatticePoint::new(vec![Int::zero(); ambient_dim])
    }

    pub fn coords(&self) -> &[Int] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Int> {
        self.coords
    }

    pub fn ambient_dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
}

impl fmt::Display for LatticePoint {
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

/// Integer matrix stored by rows. A matrix with no rows still records its
/// column count, which is how the zero matrix is expressed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    ncols: usize,
    rows: Vec<Vec<Int>>,
}

impl IntMatrix {
    pub fn new(ncols: usize, rows: Vec<Vec<Int>>) -> Result<Self> {
        for row in &rows {
            Error::check_dim("IntMatrix", ncols, row.len())?;
        }
        Ok(IntMatrix { ncols, rows })
    }

    pub fn zero(ncols: usize) -> Self {
        IntMatrix {
            ncols,
            rows: Vec::new(),
        }
    }

    pub fn from_points(ncols: usize, points: &[LatticePoint]) -> Result<Self> {
        IntMatrix::new(ncols, points.iter().map(|p| p.coords.clone()).collect())
    }

    pub fn from_i64(ncols: usize, rows: &[&[i64]]) -> Result<Self> {
        IntMatrix::new(
            ncols,
            rows.iter()
                .map(|r| r.iter().map(|&c| Int::from(c)).collect())
                .collect(),
        )
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Int>] {
        &self.rows
    }

    pub fn points(&self) -> Vec<LatticePoint> {
        self.rows.iter().cloned().map(LatticePoint::new).collect()
    }
}

fn row_sub(a: &mut [Vec<Int>], target: usize, source: usize, q: &Int) {
    if q.is_zero() {
        return;
    }
    let (t, s) = if target < source {
        let (lo, hi) = a.split_at_mut(source);
        (&mut lo[target], &hi[0])
    } else {
        let (lo, hi) = a.split_at_mut(target);
        (&mut hi[0], &lo[source])
    };
    for (x, y) in t.iter_mut().zip(s.iter()) {
        if !y.is_zero() {
            *x -= q * y;
        }
    }
}

/// Row-style Hermite normal form; returns the nonzero rows.
fn hnf_rows(mut a: Vec<Vec<Int>>, ncols: usize) -> Vec<Vec<Int>> {
    let mut r = 0;
    for c in 0..ncols {
        if r == a.len() {
            break;
        }
        let mut found = false;
        loop {
            let pivot = (r..a.len())
                .filter(|&i| !a[i][c].is_zero())
                .min_by(|&i, &j| a[i][c].abs().cmp(&a[j][c].abs()));
            let Some(p) = pivot else { break };
            found = true;
            a.swap(r, p);
            let mut clean = true;
            for i in r + 1..a.len() {
                if !a[i][c].is_zero() {
                    let q = a[i][c].div_floor(&a[r][c]);
                    row_sub(&mut a, i, r, &q);
                    if !a[i][c].is_zero() {
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
        }
        if !found {
            continue;
        }
        if a[r][c].is_negative() {
            for x in a[r].iter_mut() {
                *x = -&*x;
            }
        }
        for i in 0..r {
            let q = a[i][c].div_floor(&a[r][c]);
            row_sub(&mut a, i, r, &q);
        }
        r += 1;
    }
    a.truncate(r);
    a
}

/// Hermite normal form of the row lattice and its rank.
pub fn hermite_normal_form(m: &IntMatrix) -> (IntMatrix, usize) {
    let rows = hnf_rows(m.rows.clone(), m.ncols);
    let rank = rows.len();
    (
        IntMatrix {
            ncols: m.ncols,
            rows,
        },
        rank,
    )
}

/// Nonzero invariant factors of an integer matrix.
pub fn smith_invariants(m: &IntMatrix) -> Vec<Int> {
    let mut a = m.rows.clone();
    let nrows = a.len();
    let ncols = m.ncols;
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nrows.min(ncols) {
        let mut best: Option<(usize, usize)> = None;
        for i in t..nrows {
            for j in t..ncols {
                if !a[i][j].is_zero()
                    && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap(t, bi);
        for row in a.iter_mut() {
            row.swap(t, bj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..nrows {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&a[t][t]);
                    row_sub(&mut a, i, t, &q);
                    dirty |= !a[i][t].is_zero();
                }
            }
            for j in t + 1..ncols {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&a[t][t]);
                    for row in a.iter_mut() {
                        let v = &q * &row[t];
                        row[j] -= v;
                    }
                    dirty |= !a[t][j].is_zero();
                }
            }
            if dirty {
                let mut best = (t, t);
                for i in t..nrows {
                    if !a[i][t].is_zero()
                        && (a[best.0][best.1].is_zero() || a[i][t].abs() < a[best.0][best.1].abs())
                    {
                        best = (i, t);
                    }
                }
                for j in t..ncols {
                    if !a[t][j].is_zero()
                        && (a[best.0][best.1].is_zero() || a[t][j].abs() < a[best.0][best.1].abs())
                    {
                        best = (t, j);
                    }
                }
                a.swap(t, best.0);
                for row in a.iter_mut() {
                    row.swap(t, best.1);
                }
                continue;
            }
            let bad = (t + 1..nrows).find(|&i| {
                (t + 1..ncols).any(|j| !a[i][j].is_zero() && !a[i][j].is_multiple_of(&a[t][t]))
            });
            match bad {
                Some(i) => {
                    let src = a[i].clone();
                    for (x, y) in a[t].iter_mut().zip(src) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}

/// A subgroup of `Z^n`, presented by its Hermite basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sublattice {
    basis: IntMatrix,
}

/// Index of one lattice in another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Index {
    Finite(Int),
    Infinite,
}

impl Index {
    pub fn finite(&self) -> Option<&Int> {
        match self {
            Index::Finite(n) => Some(n),
            Index::Infinite => None,
        }
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Index::Finite(n) => write!(f, "{n}"),
            Index::Infinite => write!(f, "infinite"),
        }
    }
}

impl Sublattice {
    pub fn from_rows(ncols: usize, rows: Vec<Vec<Int>>) -> Result<Self> {
        let m = IntMatrix::new(ncols, rows)?;
        Ok(Sublattice {
            basis: hermite_normal_form(&m).0,
        })
    }

    pub fn full(ambient_dim: usize) -> Self {
        let rows = (0..ambient_dim)
            .map(|i| {
                let mut r = vec![Int::zero(); ambient_dim];
                r[i] = Int::one();
                r
            })
            .collect();
        Sublattice {
            basis: IntMatrix {
                ncols: ambient_dim,
                rows,
            },
        }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Sublattice {
            basis: IntMatrix::zero(ambient_dim),
        }
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.ncols
    }

    pub fn rank(&self) -> usize {
        self.basis.nrows()
    }

    /// Integer coordinates of `v` in the Hermite basis, if `v` lies in the lattice.
    pub fn coordinates(&self, v: &[Int]) -> Option<Vec<Int>> {
        if v.len() != self.ambient_dim() {
            return None;
        }
        let mut res = v.to_vec();
        let mut coeffs = Vec::with_capacity(self.rank());
        for row in &self.basis.rows {
            let p = row.iter().position(|x| !x.is_zero())?;
            let (q, rem) = res[p].div_rem(&row[p]);
            if !rem.is_zero() {
                return None;
            }
            if !q.is_zero() {
                for (x, y) in res.iter_mut().zip(row) {
                    *x -= &q * y;
                }
            }
            coeffs.push(q);
        }
        res.iter().all(Zero::is_zero).then_some(coeffs)
    }

    pub fn contains(&self, v: &[Int]) -> bool {
        self.coordinates(v).is_some()
    }

    /// The lattice of all integer vectors in the real span.
    pub fn saturation(&self) -> Sublattice {
        if self.rank() == 0 {
            return self.clone();
        }
        let orth = integer_kernel(&self.basis);
        if orth.rank() == 0 {
            return Sublattice::full(self.ambient_dim());
        }
        integer_kernel(&orth.basis)
    }

    /// Vectors of the lattice whose first `k` coordinates vanish, as a
    /// lattice in the remaining coordinates.
    pub fn vanishing_prefix(&self, k: usize) -> Sublattice {
        let n = self.ambient_dim();
        let rows = self
            .basis
            .rows
            .iter()
            .filter(|r| r[..k].iter().all(Zero::is_zero))
            .map(|r| r[k..].to_vec())
            .collect();
        Sublattice {
            basis: IntMatrix { ncols: n - k, rows },
        }
    }
}

/// The subgroup of `Z^n` generated by the points.
pub fn group_generated(ambient_dim: usize, points: &[LatticePoint]) -> Result<Sublattice> {
    let m = IntMatrix::from_points(ambient_dim, points)?;
    Ok(Sublattice {
        basis: hermite_normal_form(&m).0,
    })
}

/// Lattice of integer solutions of `m x = 0`.
pub fn integer_kernel(m: &IntMatrix) -> Sublattice {
    let n = m.ncols;
    let k = m.nrows();
    let aug: Vec<Vec<Int>> = (0..n)
        .map(|j| {
            let mut row: Vec<Int> = m.rows.iter().map(|r| r[j].clone()).collect();
            row.extend((0..n).map(|i| if i == j { Int::one() } else { Int::zero() }));
            row
        })
        .collect();
    let h = hnf_rows(aug, k + n);
    let rows = h
        .into_iter()
        .filter(|r| r[..k].iter().all(Zero::is_zero))
        .map(|r| r[k..].to_vec())
        .collect();
    Sublattice {
        basis: IntMatrix {
            ncols: n,
            rows: hnf_rows(rows, n),
        },
    }
}

/// `[ambient : sub]`, infinite when the ranks differ.
pub fn subgroup_index(sub: &Sublattice, ambient: &Sublattice) -> Result<Index> {
    Error::check_dim("subgroup_index", ambient.ambient_dim(), sub.ambient_dim())?;
    let mut coords = Vec::with_capacity(sub.rank());
    for row in &sub.basis.rows {
        match ambient.coordinates(row) {
            Some(c) => coords.push(c),
            None => {
                return Err(Error::NotASubgroup {
                    vector: format!("{}", LatticePoint::new(row.clone())),
                })
            }
        }
    }
    if sub.rank() < ambient.rank() {
        return Ok(Index::Infinite);
    }
    let m = IntMatrix {
        ncols: ambient.rank(),
        rows: coords,
    };
    Ok(Index::Finite(
        smith_invariants(&m)
            .into_iter()
            .fold(Int::one(), |acc, d| acc * d),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(ncols: usize, rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64(ncols, rows).unwrap()
    }

    fn lat(ncols: usize, rows: &[&[i64]]) -> Sublattice {
        group_generated(ncols, &m(ncols, rows).points()).unwrap()
    }

    #[test]
    fn hnf_small_cases() {
        let (h, r) = hermite_normal_form(&m(2, &[&[1, 0], &[0, 1]]));
        assert_eq!(r, 2);
        assert_eq!(h, m(2, &[&[1, 0], &[0, 1]]));
        let (h, r) = hermite_normal_form(&m(2, &[&[1, 1], &[2, 2]]));
        assert_eq!((h, r), (m(2, &[&[1, 1]]), 1));
        let (h, r) = hermite_normal_form(&m(2, &[&[2, 3], &[4, 6], &[0, 0]]));
        assert_eq!((h, r), (m(2, &[&[2, 3]]), 1));
    }

    #[test]
    fn hnf_reduces_above_pivots() {
        let (h, _) = hermite_normal_form(&m(2, &[&[1, 5], &[0, 3]]));
        assert_eq!(h, m(2, &[&[1, 2], &[0, 3]]));
    }

    #[test]
    fn generated_groups() {
        let g = lat(2, &[&[2, 0], &[0, 3]]);
        assert_eq!(g.rank(), 2);
        assert_eq!(g.basis(), &m(2, &[&[2, 0], &[0, 3]]));
        assert_eq!(lat(2, &[&[2, 3], &[4, 6]]).basis(), &m(2, &[&[2, 3]]));
        assert_eq!(lat(3, &[&[1, 0, 1], &[0, 1, 1], &[1, 1, 2]]).rank(), 2);
        assert_eq!(group_generated(3, &[]).unwrap().rank(), 0);
    }

    #[test]
    fn indices() {
        let full = Sublattice::full(2);
        let idx = |s: &Sublattice, a: &Sublattice| subgroup_index(s, a).unwrap();
        assert_eq!(
            idx(&lat(2, &[&[2, 0], &[0, 3]]), &full),
            Index::Finite(Int::from(6))
        );
        assert_eq!(idx(&lat(2, &[&[1, 1]]), &full), Index::Infinite);
        assert_eq!(
            idx(&lat(2, &[&[3, 0]]), &lat(2, &[&[1, 0]])),
            Index::Finite(Int::from(3))
        );
        assert!(matches!(
            subgroup_index(&lat(2, &[&[1, 1]]), &lat(2, &[&[1, 0]])),
            Err(Error::NotASubgroup { .. })
        ));
    }

    #[test]
    fn zero_rank_index_is_one() {
        let z = Sublattice::zero(3);
        assert_eq!(subgroup_index(&z, &z).unwrap(), Index::Finite(Int::one()));
    }

    #[test]
    fn smith_of_small_matrix() {
        let d = smith_invariants(&m(2, &[&[2, 4], &[6, 8]]));
        assert_eq!(d, vec![Int::from(2), Int::from(4)]);
    }

    #[test]
    fn saturation_and_kernel() {
        let s = lat(2, &[&[2, 2]]).saturation();
        assert_eq!(s.basis(), &m(2, &[&[1, 1]]));
        let k = integer_kernel(&m(3, &[&[1, 1, 1]]));
        assert_eq!(k.rank(), 2);
        assert!(k.contains(&[Int::from(1), Int::from(-1), Int::from(0)]));
        assert_eq!(lat(2, &[&[2, 0], &[0, 3]]).saturation(), Sublattice::full(2));
    }

    #[test]
    fn prefix_part() {
        // degree coordinate first: <(1,0),(1,2)> has degree-zero part 2Z
        let g = lat(2, &[&[1, 0], &[1, 2]]);
        assert_eq!(g.vanishing_prefix(1).basis(), &m(1, &[&[2]]));
    }
}
