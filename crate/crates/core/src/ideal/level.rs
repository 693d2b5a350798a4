//! Sets of monomials of one total degree, stored by their first `v - 1` exponents.

use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashSet;

use crate::limits;

#[derive(Clone, Debug)]
enum Store {
    /// Bitmap over `[0, side)^(v-1)`, row-major with the last stored coordinate fastest.
    Dense(Vec<u64>),
    Sparse(HashSet<Vec<u32>>),
}

/// The degree-`t` monomials of an ideal in `v` variables.
#[derive(Clone, Debug)]
pub(crate) struct Level {
    v: usize,
    side: usize,
    degree: u64,
    store: Store,
}

fn strides(v: usize, side: usize) -> Vec<usize> {
    let k = v.saturating_sub(1);
    let mut st = vec![1usize; k];
    for i in (0..k.saturating_sub(1)).rev() {
        st[i] = st[i + 1] * side;
    }
    st
}

fn or_shifted(dst: &mut [u64], src: &[u64], shift: usize) {
    let (w, b) = (shift / 64, shift % 64);
    let n = dst.len();
    for i in (0..src.len()).rev() {
        let x = src[i];
        if x == 0 || i + w >= n {
            continue;
        }
        dst[i + w] |= x << b;
        if b > 0 && i + w + 1 < n {
            dst[i + w + 1] |= x >> (64 - b);
        }
    }
}

impl Level {
    /// Empty level at `degree`; dense when `side^(v-1)` bits fit the memory guard.
    pub(crate) fn empty(v: usize, side: usize, degree: u64) -> Level {
        let k = v.saturating_sub(1) as u32;
        let cells = (side as u128).checked_pow(k).unwrap_or(u128::MAX);
        let store = if cells / 64 <= limits::max_points() as u128 {
            Store::Dense(vec![0u64; (cells as usize).div_ceil(64)])
        } else {
            Store::Sparse(HashSet::new())
        };
        Level {
            v,
            side,
            degree,
            store,
        }
    }

    #[cfg(test)]
    pub(crate) fn degree(&self) -> u64 {
        self.degree
    }

    fn index(&self, a: &[u32]) -> usize {
        let st = strides(self.v, self.side);
        a.iter().zip(&st).map(|(&x, s)| x as usize * s).sum()
    }

    /// Inserts a monomial of this level's degree, given by all `v` exponents.
    pub(crate) fn insert(&mut self, a: &[u32]) {
        debug_assert_eq!(a.iter().map(|&x| x as u64).sum::<u64>(), self.degree);
        let head = &a[..self.v.saturating_sub(1)];
        debug_assert!(head.iter().all(|&x| (x as usize) < self.side));
        match &mut self.store {
            Store::Dense(bits) => {
                let st = strides(self.v, self.side);
                let i: usize = head.iter().zip(&st).map(|(&x, s)| x as usize * s).sum();
                bits[i / 64] |= 1 << (i % 64);
            }
            Store::Sparse(set) => {
                set.insert(head.to_vec());
            }
        }
    }

    pub(crate) fn len(&self) -> u64 {
        match &self.store {
            Store::Dense(bits) => bits.iter().map(|w| w.count_ones() as u64).sum(),
            Store::Sparse(set) => set.len() as u64,
        }
    }

    /// `m * L`: the monomials of the next degree divisible by one in `L`.
    pub(crate) fn step(&self) -> Level {
        let k = self.v.saturating_sub(1);
        let store = match &self.store {
            Store::Dense(bits) => {
                let mut out = bits.clone();
                for s in strides(self.v, self.side) {
                    or_shifted(&mut out, bits, s);
                }
                Store::Dense(out)
            }
            Store::Sparse(set) => {
                let mut out = set.clone();
                for a in set {
                    for i in 0..k {
                        let mut b = a.clone();
                        b[i] += 1;
                        out.insert(b);
                    }
                }
                Store::Sparse(out)
            }
        };
        Level {
            v: self.v,
            side: self.side,
            degree: self.degree + 1,
            store,
        }
    }

    /// All monomials of the level, with all `v` exponents.
    pub(crate) fn points(&self) -> Vec<Vec<u32>> {
        let k = self.v.saturating_sub(1);
        let complete = |head: Vec<u32>| {
            let s: u64 = head.iter().map(|&x| x as u64).sum();
            let mut a = head;
            a.push((self.degree - s) as u32);
            a
        };
        if self.v == 0 {
            return Vec::new();
        }
        match &self.store {
            Store::Dense(bits) => {
                let st = strides(self.v, self.side);
                let mut out = Vec::new();
                for (w, &word) in bits.iter().enumerate() {
                    let mut x = word;
                    while x != 0 {
                        let b = x.trailing_zeros() as usize;
                        x &= x - 1;
                        let mut i = w * 64 + b;
                        let mut head = vec![0u32; k];
                        for (j, s) in st.iter().enumerate() {
                            head[j] = (i / s) as u32;
                            i %= s;
                        }
                        out.push(complete(head));
                    }
                }
                out
            }
            Store::Sparse(set) => {
                let mut out: Vec<Vec<u32>> = set.iter().cloned().map(complete).collect();
                out.sort();
                out
            }
        }
    }

    /// `{a + b : a in self, b in other}` at degree `deg(self) + deg(other)`.
    pub(crate) fn minkowski(&self, other: &Level) -> Level {
        let mut out = Level::empty(self.v, self.side, self.degree + other.degree);
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        match (&mut out.store, &large.store) {
            (Store::Dense(dst), Store::Dense(src)) => {
                let lo = src.iter().position(|&w| w != 0).unwrap_or(0);
                let hi = src.iter().rposition(|&w| w != 0).map_or(0, |i| i + 1);
                if lo < hi {
                    for p in small.points() {
                        let shift = small.index(&p[..self.v - 1]);
                        or_shifted(dst, &src[lo..hi], shift + lo * 64);
                    }
                }
            }
            _ => {
                let lp = large.points();
                for p in small.points() {
                    for q in &lp {
                        let s: Vec<u32> = p.iter().zip(q).map(|(a, b)| a + b).collect();
                        out.insert(&s);
                    }
                }
            }
        }
        out
    }
}
