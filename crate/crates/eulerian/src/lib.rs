//! Exact-arithmetic toolkit for Eulerian-type polynomial families.
//!
//! The library generates polynomial families driven by the recurrence
//! `f_{n+1} = (a n x + b x + c) f_n + a x (1 - x) f_n'` (and its many
//! published specializations), computes symmetric decompositions and gamma
//! vectors, certifies coefficient-sequence properties (unimodality,
//! log-concavity, spiral and alternating orders, ratio monotonicity,
//! bi-gamma-positivity, real-rootedness via Sturm chains), and cross-checks
//! everything against independent brute-force and generating-function
//! oracles. All arithmetic is exact over arbitrary-precision rationals;
//! there is no floating-point path anywhere.

pub mod analysis;
pub mod families;
pub mod oracle;
pub mod poly;
pub mod scalar;
pub mod sweeps;

pub use poly::Poly;
pub use scalar::{Int, Rat};

/// Errors shared across the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("reverse window {window} is smaller than polynomial degree {degree}")]
    ReverseWindow { window: usize, degree: usize },

    #[error("division by (1 - x) is inexact: value at 1 is {remainder}")]
    DivisionInexact { remainder: Rat },

    #[error("polynomial is not palindromic about center degree {center}")]
    NotPalindromic { center: usize },

    #[error("{operation} is undefined for the zero polynomial")]
    ZeroPolynomial { operation: &'static str },

    #[error("coefficient at index {index} is negative")]
    NegativeCoefficient { index: usize },

    #[error("family `{kind}` requires parameters {expected:?}, got {got:?}")]
    BadFamilyParams {
        kind: &'static str,
        expected: Vec<&'static str>,
        got: Vec<String>,
    },

    #[error("parameter `{name}` must be a nonnegative rational, got {value}")]
    NegativeParameter { name: String, value: Rat },

    #[error("invalid rational literal `{0}`")]
    BadRational(String),

    #[error("{what} supports {min} <= n <= {max}, got {n}")]
    OracleRange {
        what: &'static str,
        min: usize,
        max: usize,
        n: usize,
    },

    #[error("series {op} requires constant term {expected}")]
    SeriesConstantTerm {
        op: &'static str,
        expected: &'static str,
    },

    #[error("generating function expansion is not implemented for family `{0}`")]
    UnsupportedFamily(&'static str),

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("sweep range for `{name}` is empty or has a nonpositive step")]
    BadRange { name: String },

    #[error("assertion `{assertion}` requires the `{family}` family")]
    AssertionFamilyMismatch {
        assertion: &'static str,
        family: &'static str,
    },
}
