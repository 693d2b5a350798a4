use alloc::string::String;
use alloc::vec::Vec;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{op}: dimension mismatch (expected {expected}, found {found})")]
    DimensionMismatch {
        op: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("{op}: invalid input: {detail}")]
    InvalidInput { op: &'static str, detail: String },
    #[error("subgroup_index: basis vector {vector} is not in the ambient lattice")]
    NotASubgroup { vector: String },
    #[error("{op}: ray {index} is zero")]
    InvalidRay { op: &'static str, index: usize },
    #[error("integral_volume: {detail}")]
    MeasureMismatch { detail: String },
    #[error("{op}: unsupported input: {detail}")]
    Unsupported { op: &'static str, detail: String },
    #[error("{op}: resource limit exceeded at degree {degree:?} ({points} points stored)")]
    ResourceLimit {
        op: &'static str,
        degree: Vec<u64>,
        points: usize,
    },
    #[error("{op}: arithmetic overflow")]
    Overflow { op: &'static str },
    #[error("{op}: internal consistency check failed: {detail}")]
    InternalConsistency { op: &'static str, detail: String },
    #[error("{op}: semigroup closure fails: {detail}")]
    NotClosed { op: &'static str, detail: String },
    #[error("truncate: graded piece at degree {degree:?} is empty")]
    EmptyTruncation { degree: Vec<u64> },
    #[error("{op}: graded piece on axis {axis} at degree {degree} is empty")]
    EmptyAxisPiece {
        op: &'static str,
        axis: usize,
        degree: u64,
    },
    #[error("{op}: not decomposable, first failure at degree {witness:?}")]
    NotDecomposable { op: &'static str, witness: Vec<u64> },
    #[error("{op}: regularity not reached after {iterations} doublings; last fits {previous} and {last}")]
    RegularityNotReached {
        op: &'static str,
        iterations: usize,
        previous: String,
        last: String,
    },
    #[error("quotient_dim: denominator generator {generator:?} is not in the numerator")]
    NotContained { generator: Vec<u32> },
    #[error("quotient_dim: finiteness not certified up to c = {c}")]
    CofinalityNotCertified { c: u32 },
    #[error("body_to_family: h = {h} is below the maximal coordinate sum {needed}")]
    HomogenizationInfeasible { h: u32, needed: String },
}

impl Error {
    pub(crate) fn invalid(op: &'static str, detail: impl Into<String>) -> Self {
        Error::InvalidInput {
            op,
            detail: detail.into(),
        }
    }

    pub(crate) fn unsupported(op: &'static str, detail: impl Into<String>) -> Self {
        Error::Unsupported {
            op,
            detail: detail.into(),
        }
    }

    pub(crate) fn internal(op: &'static str, detail: impl Into<String>) -> Self {
        Error::InternalConsistency {
            op,
            detail: detail.into(),
        }
    }

    pub(crate) fn check_dim(op: &'static str, expected: usize, found: usize) -> Result<()> {
        if expected == found {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                op,
                expected,
                found,
            })
        }
    }
}
