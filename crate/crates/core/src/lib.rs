//! Exact computations for graded monomial semigroups and algebras:
//! lattices, rational polytopes, Newton-Okounkov bodies, volume functions,
//! mixed multiplicities and graded families of monomial ideals.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod error;
pub mod fit;
pub mod ideal;
pub mod lattice;
pub mod limits;
pub mod linalg;
pub mod num;
pub mod poly;
pub mod polytope;
pub mod presets;
pub mod semigroup;
pub mod series;

pub use error::{Error, Result};
pub use lattice::{
    group_generated, hermite_normal_form, smith_invariants, subgroup_index, Index, IntMatrix,
    LatticePoint, Sublattice,
};
pub use num::{Int, Rat};
pub use poly::{MultidegreePolynomial, Polynomial};
pub use polytope::{
    cone_fiber, cone_hrep, convex_hull, integral_volume, minkowski_polynomial, minkowski_sum,
    PolyCone, Polytope, RationalVector,
};
