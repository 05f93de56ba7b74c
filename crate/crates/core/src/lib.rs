//! Exact irreducibility tests and factor extraction for sparse integer
//! polynomials whose constant term is plus or minus a prime power.
//!
//! The crate is layered bottom-up:
//!
//! * [`int_arith`] — deterministic primality testing, prime-power
//!   decomposition, and small integer helpers;
//! * [`poly`] — the exact sparse polynomial type ([`SparsePoly`]) with ring
//!   operations, exact division, primitive gcd, and cyclotomic polynomials;
//! * [`binomial_gcd`] — closed-form gcds of binomials `x^n ± 1` and the
//!   product of all candidate reciprocal binomials attached to a polynomial;
//! * [`criteria`] — the classification of a polynomial against the covered
//!   input families and the closed-form irreducibility certificates;
//! * [`equality`] — the boundary case where the constant term ties the sum
//!   of the other coefficients: splitting off the cyclotomic part and
//!   certifying the rest;
//! * [`trinomial`] — discriminants, separability, and the full reducibility
//!   classification for trinomials in the covered families;
//! * [`oracle`] — an independent brute-force factorization engine used to
//!   cross-check every verdict the closed-form layers produce.
//!
//! All arithmetic is exact; no floating point is used anywhere.

pub mod int_arith;
pub mod poly;
pub mod binomial_gcd;
pub mod criteria;
pub mod equality;
pub mod trinomial;
pub mod oracle;

pub use num_bigint::{BigInt, BigUint, Sign};

pub use crate::criteria::{Certificate, Criterion, ExclusionReason, FamilyMembership, Verdict};
pub use crate::equality::Decomposition;
pub use crate::int_arith::PrimePower;
pub use crate::oracle::Factorization;
pub use crate::poly::SparsePoly;
pub use crate::trinomial::TrinomialSpec;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// The zero polynomial was passed where a nonzero one is required.
    #[error("the zero polynomial is not a valid input here")]
    ZeroPolynomial,

    /// A constant polynomial was passed where a nonconstant one is required.
    #[error("a constant polynomial is not a valid input here")]
    ConstantPolynomial,

    /// The polynomial vanishes at 0; callers must strip the maximal power of
    /// x first and account for it separately.
    #[error("the constant term is zero; strip the power of x first")]
    ZeroConstantTerm,

    /// A documented precondition of the operation does not hold.
    #[error("precondition not met: {0}")]
    Precondition(String),

    /// The input degree exceeds the hard cap passed to the oracle.
    #[error("degree {degree} exceeds the factorization cap {cap}")]
    DegreeCapExceeded { degree: u64, cap: u64 },

    /// An identity that is mathematically guaranteed under the operation's
    /// preconditions failed to hold; this always indicates a bug, never bad
    /// user input.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}
