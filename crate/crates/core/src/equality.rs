//! The boundary case: polynomials whose constant term magnitude *equals* the
//! sum of the other coefficient magnitudes.
//!
//! In this regime no root lies strictly inside the unit disk, and the
//! candidate part `f_c` from [`crate::binomial_gcd::compute_fc`] divides `f`
//! and collects *every* cyclotomic factor of `f`, each with multiplicity
//! exactly one. Writing `f = f_c · f_n`:
//!
//! * for members of `S_1 ∪ S'_2 ∪ S'_3` the cofactor `f_n` is certified
//!   irreducible and non-reciprocal — so `f` is irreducible exactly when
//!   `f_c = 1`;
//! * when the constant term is `±p` with `p` prime (exponent one), the same
//!   certificate holds with no divisibility hypotheses at all: in any
//!   splitting of `f`, the factor whose constant term is a unit has all its
//!   roots on the unit circle (their moduli are all `>= 1` with product
//!   `<= 1`), such a factor is a product of cyclotomic polynomials, and those
//!   all live in `f_c`. The one degenerate exception — a constant cofactor,
//!   possible only for non-primitive input like `3x^3 + 3` — is excluded by a
//!   degree guard.

use num_traits::Zero;

use crate::binomial_gcd::compute_fc;
use crate::criteria::{require_classifiable, Certificate, Criterion, FamilyMembership, Verdict};
use crate::int_arith::largest_even_part;
use crate::poly::SparsePoly;
use crate::Error;

/// The certified splitting `f = f_c · f_n` of an equality-case polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    /// Product of all cyclotomic factors of `f` (possibly 1).
    pub f_c: SparsePoly,
    /// The cofactor `f / f_c`.
    pub f_n: SparsePoly,
    /// Whether `f_n` is certified irreducible (scope membership or prime
    /// constant term, and `f_n` nonconstant).
    pub f_n_certified_irreducible: bool,
    /// Whether `f_n` differs from plus and minus its reciprocal transform.
    pub f_n_nonreciprocal: bool,
}

/// Whether the constant term magnitude equals the sum of the other
/// coefficient magnitudes.
pub fn equality_holds(f: &SparsePoly) -> Result<bool, Error> {
    require_classifiable(f)?;
    let tail = f
        .terms()
        .iter()
        .filter(|&&(e, _)| e > 0)
        .fold(num_bigint::BigUint::zero(), |acc, (_, c)| acc + c.magnitude());
    Ok(*f.constant_term().magnitude() == tail)
}

/// Splits an equality-case polynomial as `f = f_c · f_n`.
///
/// The split itself needs nothing beyond the equality (and a nonzero
/// constant term): `f_c` always divides `f` there. The certificate flag on
/// `f_n` additionally needs scope membership or a prime constant term, as
/// described in the module docs. `membership` must be the classification of
/// this same `f`.
///
/// # Errors
///
/// Rejects zero/constant input, zero constant term, and inputs where the
/// equality fails. An `Inconsistency` error (a bug, not bad input) would mean
/// `f_c` failed to divide `f`.
pub fn decompose_equality(
    f: &SparsePoly,
    membership: &FamilyMembership,
) -> Result<Decomposition, Error> {
    if !equality_holds(f)? {
        return Err(Error::Precondition(
            "the constant term magnitude must equal the sum of the other coefficient magnitudes"
                .into(),
        ));
    }
    let f_c = compute_fc(f)?;
    let f_n = if f_c.is_one() {
        f.clone()
    } else {
        f.exact_divide(&f_c).ok_or_else(|| {
            Error::Inconsistency(format!(
                "the cyclotomic part {f_c} must divide {f} in the equality case"
            ))
        })?
    };
    let prime_constant = membership
        .prime_power
        .as_ref()
        .is_some_and(|pp| pp.exponent == 1);
    let f_n_certified_irreducible = (membership.in_scope() || prime_constant)
        && f_n.degree().is_some_and(|d| d >= 1);
    let f_n_nonreciprocal = !f_n.is_reciprocal()?;
    Ok(Decomposition { f_c, f_n, f_n_certified_irreducible, f_n_nonreciprocal })
}

/// Equality case with every coefficient positive: `f` is irreducible exactly
/// when two of its exponents have different largest even parts; otherwise the
/// certified decomposition is returned.
///
/// All preconditions are hard errors here: every coefficient positive, the
/// equality, and scope membership.
pub fn check_positive_case(
    f: &SparsePoly,
    membership: &FamilyMembership,
) -> Result<Certificate, Error> {
    require_classifiable(f)?;
    if f.terms().iter().any(|(_, c)| c.sign() != num_bigint::Sign::Plus) {
        return Err(Error::Precondition(
            "every coefficient must be positive".into(),
        ));
    }
    if !equality_holds(f)? {
        return Err(Error::Precondition(
            "the constant term must equal the sum of the other coefficients".into(),
        ));
    }
    if !membership.in_scope() {
        return Err(Error::Precondition(
            "the polynomial must lie in S_1 ∪ S'_2 ∪ S'_3".into(),
        ));
    }
    // With all signs positive every binomial is x^e + 1, so f_c is nontrivial
    // exactly when all exponents share one largest even part. (Deflating
    // first would multiply every even part by the same power of two and
    // cannot change the comparison.)
    let mut even_parts = f
        .terms()
        .iter()
        .filter(|&&(e, _)| e > 0)
        .map(|&(e, _)| largest_even_part(e));
    let first = even_parts.next().expect("nonconstant");
    if even_parts.any(|ep| ep != first) {
        return Ok(Certificate::irreducible(
            Criterion::PositiveEquality,
            Some(membership.clone()),
        ));
    }
    let d = decompose_equality(f, membership)?;
    Ok(Certificate {
        verdict: Verdict::Decomposed,
        criterion: Some(Criterion::PositiveEquality),
        membership: Some(membership.clone()),
        f_c: Some(d.f_c),
        f_n: Some(d.f_n),
        f_n_certified_irreducible: d.f_n_certified_irreducible,
        notes: Vec::new(),
    })
}

/// Equality case with two consecutive exponents present (in scope): `f` is
/// irreducible exactly when `f(1)` and `f(-1)` are both nonzero; otherwise
/// `f_c` is the corresponding linear factor (or `x^2 - 1` if both vanish) and
/// the certified decomposition is returned.
///
/// Unmet hypotheses yield `NotApplicable` certificates, not errors.
pub fn check_consecutive_exponents(
    f: &SparsePoly,
    membership: &FamilyMembership,
) -> Result<Certificate, Error> {
    require_classifiable(f)?;
    if !membership.in_scope() {
        return Ok(Certificate::not_applicable(
            Some(membership.clone()),
            "not in S_1 ∪ S'_2 ∪ S'_3",
        ));
    }
    if !equality_holds(f)? {
        return Ok(Certificate::not_applicable(
            Some(membership.clone()),
            "the constant term magnitude must equal the sum of the other coefficient magnitudes",
        ));
    }
    let exps: Vec<u64> = f
        .terms()
        .iter()
        .filter(|&&(e, _)| e > 0)
        .map(|&(e, _)| e)
        .collect();
    if !exps.windows(2).any(|w| w[1] == w[0] + 1) {
        return Ok(Certificate::not_applicable(
            Some(membership.clone()),
            "no two exponents are consecutive",
        ));
    }
    let one = num_bigint::BigInt::from(1);
    let at_one = f.evaluate(&one);
    let at_minus_one = f.evaluate(&(-&one));
    if !at_one.is_zero() && !at_minus_one.is_zero() {
        return Ok(Certificate::irreducible(
            Criterion::ConsecutiveExponents,
            Some(membership.clone()),
        ));
    }
    let predicted = match (at_one.is_zero(), at_minus_one.is_zero()) {
        (true, false) => SparsePoly::from_terms_i64(&[(1, 1), (0, -1)]),
        (false, true) => SparsePoly::from_terms_i64(&[(1, 1), (0, 1)]),
        _ => SparsePoly::from_terms_i64(&[(2, 1), (0, -1)]),
    };
    let d = decompose_equality(f, membership)?;
    if d.f_c != predicted {
        return Err(Error::Inconsistency(format!(
            "consecutive-exponent case predicted f_c = {predicted} but computed {}",
            d.f_c
        )));
    }
    Ok(Certificate {
        verdict: Verdict::Decomposed,
        criterion: Some(Criterion::ConsecutiveExponents),
        membership: Some(membership.clone()),
        f_c: Some(d.f_c),
        f_n: Some(d.f_n),
        f_n_certified_irreducible: d.f_n_certified_irreducible,
        notes: Vec::new(),
    })
}
