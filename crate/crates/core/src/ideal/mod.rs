//! Monomial ideals in a polynomial ring and graded families of them.

mod bhattacharya;
mod family;
mod level;

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::linalg::RowSpan;
use crate::poly::monomials_of_degree;

pub use bhattacharya::{
    bhattacharya_limit, family_mixed_multiplicities, family_positivity, geometric_positivity,
    mixed_volume_via_ideals, quotient_dim, FamilyPositivity, MixedVolumeBridge,
};
pub use family::{body_to_family, default_height, FamilyRule, GradedIdealFamily};

/// A nonzero monomial ideal, kept as its minimal generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialIdeal {
    num_vars: usize,
    min_gens: Vec<Vec<u32>>,
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn degree(a: &[u32]) -> u64 {
    a.iter().map(|&x| x as u64).sum()
}

/// Minimal elements under divisibility, sorted by `(degree, lex)`.
fn antichain(mut gens: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    gens.sort_by(|a, b| degree(a).cmp(&degree(b)).then_with(|| a.cmp(b)));
    gens.dedup();
    let equigenerated = gens.first().map(|g| degree(g)) == gens.last().map(|g| degree(g));
    if equigenerated {
        return gens;
    }
    let mut kept: Vec<Vec<u32>> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| divides(k, &g)) {
            kept.push(g);
        }
    }
    kept
}

impl MonomialIdeal {
    pub fn new(num_vars: usize, gens: Vec<Vec<u32>>) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::invalid("MonomialIdeal", "the zero ideal is not supported"));
        }
        for g in &gens {
            Error::check_dim("MonomialIdeal", num_vars, g.len())?;
        }
        Ok(MonomialIdeal {
            num_vars,
            min_gens: antichain(gens),
        })
    }

    pub fn unit(num_vars: usize) -> Self {
        MonomialIdeal {
            num_vars,
            min_gens: alloc::vec![alloc::vec![0; num_vars]],
        }
    }

    /// `m^c` for the ideal `m` of the variables.
    pub fn maximal_power(num_vars: usize, c: u32) -> Self {
        MonomialIdeal {
            num_vars,
            min_gens: antichain(monomials_of_degree(num_vars, c)),
        }
    }

    pub fn maximal(num_vars: usize) -> Self {
        Self::maximal_power(num_vars, 1)
    }

    pub fn principal(a: Vec<u32>) -> Self {
        MonomialIdeal {
            num_vars: a.len(),
            min_gens: alloc::vec![a],
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn gens(&self) -> &[Vec<u32>] {
        &self.min_gens
    }

    /// The common total degree of the generators, if there is one.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = degree(&self.min_gens[0]);
        self.min_gens
            .iter()
            .all(|g| degree(g) == d)
            .then_some(d as u32)
    }

    pub fn min_degree(&self) -> u64 {
        degree(&self.min_gens[0])
    }

    pub fn max_degree(&self) -> u64 {
        degree(self.min_gens.last().expect("nonzero ideal"))
    }

    /// `c` with `self = m^c`.
    pub fn maximal_power_degree(&self) -> Option<u32> {
        let c = self.homogeneous_degree()?;
        let full = monomials_of_degree(self.num_vars, c).len();
        (full == self.min_gens.len()).then_some(c)
    }

    pub fn contains(&self, a: &[u32]) -> bool {
        a.len() == self.num_vars && self.min_gens.iter().any(|g| divides(g, a))
    }

    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.min_gens.iter().all(|g| self.contains(g))
    }

    /// Smallest `c` with `m^c` inside the ideal, when it is `m`-primary.
    pub fn primary_exponent(&self) -> Option<u32> {
        let mut total = 0u32;
        for i in 0..self.num_vars {
            let e = self
                .min_gens
                .iter()
                .filter(|g| g.iter().enumerate().all(|(j, &x)| j == i || x == 0))
                .map(|g| g[i])
                .min()?;
            total += e.saturating_sub(1);
        }
        Some(total + 1)
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        Error::check_dim("product", self.num_vars, other.num_vars)?;
        let mut gens = Vec::with_capacity(self.min_gens.len() * other.min_gens.len());
        for a in &self.min_gens {
            for b in &other.min_gens {
                gens.push(a.iter().zip(b).map(|(x, y)| x + y).collect());
            }
        }
        Ok(MonomialIdeal {
            num_vars: self.num_vars,
            min_gens: antichain(gens),
        })
    }

    pub fn power(&self, n: u64) -> MonomialIdeal {
        let mut out = MonomialIdeal::unit(self.num_vars);
        for _ in 0..n {
            out = out.product(self).expect("same number of variables");
        }
        out
    }

    /// `x^a * I`.
    pub fn shift(&self, a: &[u32]) -> Result<MonomialIdeal> {
        self.product(&MonomialIdeal::principal(a.to_vec()))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, g) in self.min_gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            let factors: Vec<_> = g
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{e}", i + 1)
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "1")?;
            } else {
                write!(f, "{}", factors.join("*"))?;
            }
        }
        write!(f, ")")
    }
}

/// `1 + dim` of the Newton polytope of the generators.
pub fn analytic_spread(i: &MonomialIdeal) -> Result<u32> {
    if i.homogeneous_degree().is_none() {
        return Err(Error::unsupported(
            "analytic_spread",
            format!("{i} is not generated in a single degree"),
        ));
    }
    Ok(1 + newton_dim(&[i]) as u32)
}

/// Dimension of the Minkowski sum of the Newton polytopes of the ideals.
pub(crate) fn newton_dim(ideals: &[&MonomialIdeal]) -> usize {
    let n = ideals.first().map_or(0, |i| i.num_vars);
    let mut span = RowSpan::new(n);
    for i in ideals {
        let base = &i.min_gens[0];
        for g in &i.min_gens[1..] {
            let v: Vec<i64> = g.iter().zip(base).map(|(&a, &b)| a as i64 - b as i64).collect();
            span.insert_i64(&v);
        }
    }
    span.rank()
}
