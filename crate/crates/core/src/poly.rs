//! Multivariate polynomials with rational coefficients and exact interpolation.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::solve;
use crate::num::{multi_factorial, Int, Rat};

/// Exponent vectors in `N^s` with total degree `d`, in descending lexicographic order.
pub fn monomials_of_degree(s: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(s: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == s {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for a in (0..=d).rev() {
            prefix.push(a);
            rec(s, d - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if s == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(s, d, &mut Vec::new(), &mut out);
    out
}

/// Exponent vectors with total degree at most `d`.
pub fn monomials_up_to(s: usize, d: u32) -> Vec<Vec<u32>> {
    (0..=d).rev().flat_map(|k| monomials_of_degree(s, k)).collect()
}

fn monomial_value(e: &[u32], x: &[Rat]) -> Rat {
    let mut v = Rat::one();
    for (&k, xi) in e.iter().zip(x) {
        for _ in 0..k {
            v *= xi;
        }
    }
    v
}

/// Coefficients of the polynomial spanned by `monomials` taking `values` at
/// `points`; the system must be square and nonsingular.
pub(crate) fn interpolate(
    monomials: &[Vec<u32>],
    points: &[Vec<Rat>],
    values: &[Rat],
) -> Option<Vec<Rat>> {
    let a: Vec<Vec<Rat>> = points
        .iter()
        .map(|p| monomials.iter().map(|m| monomial_value(m, p)).collect())
        .collect();
    solve(&a, values)
}

fn write_terms(
    f: &mut fmt::Formatter<'_>,
    coeffs: &BTreeMap<Vec<u32>, Rat>,
    var: &str,
) -> fmt::Result {
    if coeffs.is_empty() {
        return write!(f, "0");
    }
    for (i, (e, c)) in coeffs.iter().rev().enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        if i == 0 {
            if neg {
                write!(f, "-")?;
            }
        } else if neg {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        let constant = e.iter().all(|&k| k == 0);
        let mut first = true;
        if !a.is_one() || constant {
            write!(f, "{a}")?;
            first = false;
        }
        for (j, &k) in e.iter().enumerate() {
            if k == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{var}{}", j + 1)?;
            if k > 1 {
                write!(f, "^{k}")?;
            }
        }
    }
    Ok(())
}

/// Polynomial in `num_vars` variables; only nonzero coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    num_vars: usize,
    coeffs: BTreeMap<Vec<u32>, Rat>,
}

impl Polynomial {
    pub fn new(num_vars: usize, coeffs: impl IntoIterator<Item = (Vec<u32>, Rat)>) -> Self {
        let coeffs = coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Polynomial { num_vars, coeffs }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn coeffs(&self) -> &BTreeMap<Vec<u32>, Rat> {
        &self.coeffs
    }

    pub fn coefficient(&self, e: &[u32]) -> Rat {
        self.coeffs.get(e).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.coeffs.keys().map(|e| e.iter().sum()).max()
    }

    pub fn evaluate(&self, x: &[Rat]) -> Rat {
        self.coeffs
            .iter()
            .map(|(e, c)| c * monomial_value(e, x))
            .sum()
    }

    pub fn evaluate_int(&self, x: &[i64]) -> Rat {
        let xr: Vec<Rat> = x.iter().map(|&v| Rat::from_integer(Int::from(v))).collect();
        self.evaluate(&xr)
    }

    pub fn homogeneous_part(&self, degree: u32) -> MultidegreePolynomial {
        MultidegreePolynomial {
            num_vars: self.num_vars,
            degree,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == degree)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn to_string_in(&self, var: &str) -> String {
        alloc::format!("{}", Named(&self.coeffs, var))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs, "n")
    }
}

struct Named<'a>(&'a BTreeMap<Vec<u32>, Rat>, &'a str);

impl fmt::Display for Named<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.0, self.1)
    }
}

/// Homogeneous polynomial of degree `degree`; the coefficient `c_d` of
/// `n^d` relates to the mixed value by `e(d) = c_d * d!` with `d! = prod d_i!`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultidegreePolynomial {
    num_vars: usize,
    degree: u32,
    coeffs: BTreeMap<Vec<u32>, Rat>,
}

impl MultidegreePolynomial {
    pub fn new(
        num_vars: usize,
        degree: u32,
        coeffs: impl IntoIterator<Item = (Vec<u32>, Rat)>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (e, c) in coeffs {
            Error::check_dim("MultidegreePolynomial", num_vars, e.len())?;
            if e.iter().sum::<u32>() != degree {
                return Err(Error::invalid(
                    "MultidegreePolynomial",
                    alloc::format!("exponent {e:?} does not have total degree {degree}"),
                ));
            }
            if !c.is_zero() {
                map.insert(e, c);
            }
        }
        Ok(MultidegreePolynomial {
            num_vars,
            degree,
            coeffs: map,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> &BTreeMap<Vec<u32>, Rat> {
        &self.coeffs
    }

    pub fn coefficient(&self, d: &[u32]) -> Rat {
        self.coeffs.get(d).cloned().unwrap_or_else(Rat::zero)
    }

    /// `c_d * d!`: the mixed multiplicity or mixed volume of type `d`.
    pub fn mixed_value(&self, d: &[u32]) -> Rat {
        self.coefficient(d) * Rat::from_integer(multi_factorial(d))
    }

    pub fn evaluate(&self, x: &[Rat]) -> Rat {
        self.coeffs
            .iter()
            .map(|(e, c)| c * monomial_value(e, x))
            .sum()
    }

    pub fn to_string_in(&self, var: &str) -> String {
        alloc::format!("{}", Named(&self.coeffs, var))
    }
}

impl fmt::Display for MultidegreePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs, "n")
    }
}
