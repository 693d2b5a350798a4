use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn rat_int(n: Int) -> Rat {
    Rat::from_integer(n)
}

pub fn factorial(n: u32) -> Int {
    (1..=n).fold(Int::one(), |acc, k| acc * Int::from(k))
}

/// Product of factorials of the entries.
pub fn multi_factorial(d: &[u32]) -> Int {
    d.iter().fold(Int::one(), |acc, &k| acc * factorial(k))
}

pub fn dot(a: &[Int], b: &[Int]) -> Int {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_rat(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Divides by the gcd of the entries; the zero vector is returned unchanged.
pub fn primitive(mut v: Vec<Int>) -> Vec<Int> {
    let g = v.iter().fold(Int::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
    v
}

/// Positive multiple of a rational vector with integer entries, made primitive.
pub fn integral_direction(v: &[Rat]) -> Vec<Int> {
    let l = v.iter().fold(Int::one(), |l, x| l.lcm(x.denom()));
    primitive(v.iter().map(|x| (x * rat_int(l.clone())).to_integer()).collect())
}

/// Smallest positive scale turning a rational vector into integers.
pub fn denominator_lcm(v: &[Rat]) -> Int {
    v.iter().fold(Int::one(), |l, x| l.lcm(x.denom()))
}

pub fn to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

pub fn rat_abs(r: &Rat) -> Rat {
    r.abs()
}

/// Integer floor of a nonnegative square root.
pub fn isqrt_floor(n: &Int) -> Int {
    num_integer::Roots::sqrt(n)
}

/// `x^e` for floats, without relying on `std`.
pub fn powi(x: f64, e: u32) -> f64 {
    let mut acc = 1.0;
    for _ in 0..e {
        acc *= x;
    }
    acc
}
