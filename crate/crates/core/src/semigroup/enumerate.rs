//! Degree-indexed dynamic program for graded pieces of finitely generated semigroups.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use hashbrown::{HashMap, HashSet};

use super::Generator;
use crate::error::{Error, Result};
use crate::limits;

/// Memoized enumeration of `[S]_n = ∪_g (g.valuation + [S]_{n - g.degree})`.
#[derive(Debug)]
pub struct PieceEnumerator<'a> {
    r: usize,
    generators: &'a [Generator],
    memo: HashMap<Vec<u64>, Vec<Vec<i64>>>,
    stored: usize,
    limit: usize,
}

impl<'a> PieceEnumerator<'a> {
    pub fn new(r: usize, generators: &'a [Generator]) -> Self {
        Self::with_limit(r, generators, limits::max_points())
    }

    /// Enumerator that fails once more than `limit` points are stored.
    pub fn with_limit(r: usize, generators: &'a [Generator], limit: usize) -> Self {
        PieceEnumerator {
            r,
            generators,
            memo: HashMap::new(),
            stored: 0,
            limit,
        }
    }

    /// Number of lattice points currently held in the memo table.
    pub fn stored_points(&self) -> usize {
        self.stored
    }

    fn predecessors(&self, n: &[u64]) -> impl Iterator<Item = (&'a Generator, Vec<u64>)> + '_ {
        let gens = self.generators;
        let n = n.to_vec();
        gens.iter().filter_map(move |g| {
            if g.degree.iter().zip(&n).all(|(d, x)| d <= x) {
                Some((g, n.iter().zip(&g.degree).map(|(x, d)| x - d).collect()))
            } else {
                None
            }
        })
    }

    /// The sorted valuation parts of the elements of degree `n`.
    pub fn piece(&mut self, n: &[u64]) -> Result<&[Vec<i64>]> {
        if !self.memo.contains_key(n) {
            self.fill(n)?;
        }
        Ok(&self.memo[n])
    }

    fn fill(&mut self, n: &[u64]) -> Result<()> {
        // collect the missing degrees below n, then fill them by increasing total degree
        let mut todo: BTreeSet<(u64, Vec<u64>)> = BTreeSet::new();
        let mut stack = alloc::vec![n.to_vec()];
        let mut seen: HashSet<Vec<u64>> = HashSet::new();
        while let Some(m) = stack.pop() {
            if self.memo.contains_key(&m) || !seen.insert(m.clone()) {
                continue;
            }
            for (_, p) in self.predecessors(&m) {
                stack.push(p);
            }
            todo.insert((m.iter().sum(), m));
        }
        for (_, m) in todo {
            let piece: Vec<Vec<i64>> = if m.iter().all(|&x| x == 0) {
                alloc::vec![alloc::vec![0; self.r]]
            } else {
                let mut set: HashSet<Vec<i64>> = HashSet::new();
                for (g, p) in self.predecessors(&m) {
                    for v in &self.memo[&p] {
                        set.insert(v.iter().zip(&g.valuation).map(|(a, b)| a + b).collect());
                    }
                }
                let mut piece: Vec<Vec<i64>> = set.into_iter().collect();
                piece.sort();
                piece
            };
            self.stored += piece.len().max(1);
            if self.stored > self.limit {
                return Err(Error::ResourceLimit {
                    op: "graded_piece",
                    degree: m,
                    points: self.limit,
                });
            }
            self.memo.insert(m, piece);
        }
        Ok(())
    }
}
