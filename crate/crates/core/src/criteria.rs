//! Classification of sparse polynomials by the shape of their constant term,
//! and irreducibility certificates for the strict-inequality regime.
//!
//! For a polynomial `f = a_r x^{n_r} + … + a_1 x^{n_1} + a_0` with all listed
//! coefficients nonzero, exponents `n_r > … > n_1 >= 1` and `a_0 = ±p^u` a
//! prime power, the *family* bookkeeping records:
//!
//! * membership in `S_{n_1}`: `u >= 2` and `p` divides neither `a_1` nor
//!   `a_r`;
//! * membership in `S'_{n_1}`: additionally `u` is not a multiple of `n_1`
//!   (empty for `n_1 = 1`, since every `u` is a multiple of 1);
//! * *scope*: the union `S_1 ∪ S'_2 ∪ S'_3` on which the sharp results of
//!   this crate apply.
//!
//! The headline test: a polynomial in scope whose prime power strictly
//! exceeds the sum of the other coefficient magnitudes is irreducible.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::int_arith::{prime_power_decompose, sgn, PrimePower};
use crate::poly::SparsePoly;
use crate::Error;

/// Outcome of a classification or decomposition operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    /// Certified irreducible over the integers.
    Irreducible,
    /// Certified factorization into a cyclotomic part and a cofactor.
    Decomposed,
    /// The operation's hypotheses do not hold for this input.
    NotApplicable,
    /// The hypotheses hold in part but no certified conclusion follows.
    Unknown,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Irreducible => "Irreducible",
            Verdict::Decomposed => "Decomposed",
            Verdict::NotApplicable => "NotApplicable",
            Verdict::Unknown => "Unknown",
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The specific test that justified a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Criterion {
    /// In-scope membership with the prime power strictly dominating the tail.
    StrictPrimePower,
    /// Prime constant term strictly dominating the sum of all other
    /// coefficient magnitudes (no divisibility hypotheses).
    PanitopolStefanescu,
    /// Monic with the second-highest coefficient dominating everything below.
    Perron,
    /// Equality-case decomposition `f = f_c · f_n` with certified cofactor.
    EqualityDecomposition,
    /// Equality case with every coefficient positive.
    PositiveEquality,
    /// Equality case with two consecutive exponents present.
    ConsecutiveExponents,
    /// Equality-case trinomial classification.
    EqualityTrinomial,
    /// Equality case with prime constant term (exponent one).
    PrimeConstantEquality,
    /// Brute-force factorization ground truth.
    Oracle,
}

impl Criterion {
    /// Stable machine-readable token used in reports.
    pub fn token(self) -> &'static str {
        match self {
            Criterion::StrictPrimePower => "strict_prime_power",
            Criterion::PanitopolStefanescu => "panitopol_stefanescu",
            Criterion::Perron => "perron",
            Criterion::EqualityDecomposition => "equality_decomposition",
            Criterion::PositiveEquality => "positive_equality",
            Criterion::ConsecutiveExponents => "consecutive_exponents",
            Criterion::EqualityTrinomial => "equality_trinomial",
            Criterion::PrimeConstantEquality => "prime_constant_equality",
            Criterion::Oracle => "oracle",
        }
    }
}

impl std::fmt::Display for Criterion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.token())
    }
}

/// Why a polynomial with prime-power constant term fails `S_{n_1}`
/// membership.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExclusionReason {
    /// The constant term magnitude has at least two distinct prime factors.
    ConstantNotPrimePower,
    /// The constant term is `±p` or `±1`; membership needs exponent `>= 2`.
    ExponentBelowTwo,
    /// The base prime divides the lowest positive-degree coefficient.
    BaseDividesLowestCoeff,
    /// The base prime divides the leading coefficient.
    BaseDividesLeadingCoeff,
}

impl ExclusionReason {
    pub fn as_str(self) -> &'static str {
        match self {
            ExclusionReason::ConstantNotPrimePower => {
                "constant term magnitude is not a prime power"
            }
            ExclusionReason::ExponentBelowTwo => "prime power exponent is below two",
            ExclusionReason::BaseDividesLowestCoeff => {
                "base prime divides the lowest positive-degree coefficient"
            }
            ExclusionReason::BaseDividesLeadingCoeff => {
                "base prime divides the leading coefficient"
            }
        }
    }
}

impl std::fmt::Display for ExclusionReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Family bookkeeping for one polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyMembership {
    /// Smallest positive exponent with nonzero coefficient.
    pub n1: u64,
    /// Decomposition of the constant term magnitude, when it is a prime
    /// power.
    pub prime_power: Option<PrimePower>,
    /// Sign of the constant term.
    pub epsilon: i8,
    /// Sum of the magnitudes of all positive-degree coefficients.
    pub tail_sum: BigUint,
    /// Membership in `S_{n1}`.
    pub in_s: bool,
    /// Membership in `S'_{n1}` (always false when `n1 = 1`).
    pub in_s_prime: bool,
    /// First failed membership condition, when `in_s` is false.
    pub exclusion_reason: Option<ExclusionReason>,
}

impl FamilyMembership {
    /// Whether `f` lies in `S_1 ∪ S'_2 ∪ S'_3`, the domain of the sharp
    /// results.
    pub fn in_scope(&self) -> bool {
        self.in_s && (self.n1 == 1 || (self.n1 <= 3 && self.in_s_prime))
    }
}

/// A verdict together with everything needed to audit it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub verdict: Verdict,
    pub criterion: Option<Criterion>,
    pub membership: Option<FamilyMembership>,
    /// Cyclotomic part, when a decomposition was produced.
    pub f_c: Option<SparsePoly>,
    /// Cofactor, when a decomposition was produced.
    pub f_n: Option<SparsePoly>,
    /// Whether the cofactor `f_n` is certified irreducible.
    pub f_n_certified_irreducible: bool,
    /// Human-readable details, mostly explaining NotApplicable verdicts.
    pub notes: Vec<String>,
}

impl Certificate {
    pub(crate) fn not_applicable(
        membership: Option<FamilyMembership>,
        note: impl Into<String>,
    ) -> Self {
        Certificate {
            verdict: Verdict::NotApplicable,
            criterion: None,
            membership,
            f_c: None,
            f_n: None,
            f_n_certified_irreducible: false,
            notes: vec![note.into()],
        }
    }

    pub(crate) fn irreducible(
        criterion: Criterion,
        membership: Option<FamilyMembership>,
    ) -> Self {
        Certificate {
            verdict: Verdict::Irreducible,
            criterion: Some(criterion),
            membership,
            f_c: None,
            f_n: None,
            f_n_certified_irreducible: false,
            notes: Vec::new(),
        }
    }
}

/// Validates that `f` is nonzero, nonconstant and has nonzero constant term,
/// the shared shape requirement of every classification routine.
pub(crate) fn require_classifiable(f: &SparsePoly) -> Result<(), Error> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.degree() == Some(0) {
        return Err(Error::ConstantPolynomial);
    }
    if f.lowest_exponent() != Some(0) {
        return Err(Error::ZeroConstantTerm);
    }
    Ok(())
}

/// Computes the family bookkeeping for `f`.
///
/// # Errors
///
/// Rejects the zero polynomial, constants, and polynomials with zero constant
/// term.
pub fn classify_family(f: &SparsePoly) -> Result<FamilyMembership, Error> {
    require_classifiable(f)?;
    let a0 = f.constant_term();
    let epsilon = sgn(&a0)?;
    let tail: Vec<&(u64, BigInt)> = f.terms().iter().filter(|&&(e, _)| e > 0).collect();
    let n1 = tail.first().expect("nonconstant").0;
    let lowest_coeff = &tail.first().expect("nonconstant").1;
    let leading_coeff = &tail.last().expect("nonconstant").1;
    let tail_sum = tail
        .iter()
        .fold(BigUint::zero(), |acc, (_, c)| acc + c.magnitude());

    let prime_power = prime_power_decompose(a0.magnitude());
    let (in_s, in_s_prime, exclusion_reason) = match &prime_power {
        None => (false, false, Some(ExclusionReason::ConstantNotPrimePower)),
        Some(pp) => {
            let p = BigInt::from(pp.base.clone());
            if pp.exponent < 2 {
                (false, false, Some(ExclusionReason::ExponentBelowTwo))
            } else if (lowest_coeff % &p).is_zero() {
                (false, false, Some(ExclusionReason::BaseDividesLowestCoeff))
            } else if (leading_coeff % &p).is_zero() {
                (false, false, Some(ExclusionReason::BaseDividesLeadingCoeff))
            } else {
                let in_s_prime = u64::from(pp.exponent) % n1 != 0;
                (true, in_s_prime, None)
            }
        }
    };

    Ok(FamilyMembership {
        n1,
        prime_power,
        epsilon,
        tail_sum,
        in_s,
        in_s_prime,
        exclusion_reason,
    })
}

/// The strict-inequality irreducibility test.
///
/// Two certified routes:
///
/// * constant term `±p` with `p` prime and `p` strictly greater than the sum
///   of all other coefficient magnitudes (no divisibility hypotheses);
/// * membership in `S_1 ∪ S'_2 ∪ S'_3` with `p^u` strictly greater than that
///   sum.
///
/// Everything else is `NotApplicable` with an explanatory note.
pub fn check_strict(f: &SparsePoly) -> Result<Certificate, Error> {
    let membership = classify_family(f)?;
    let a0_mag = f.constant_term().magnitude().clone();
    let strict = a0_mag > membership.tail_sum;

    if let Some(pp) = &membership.prime_power {
        if pp.exponent == 1 && strict {
            return Ok(Certificate::irreducible(
                Criterion::PanitopolStefanescu,
                Some(membership),
            ));
        }
        if membership.in_scope() && strict {
            return Ok(Certificate::irreducible(
                Criterion::StrictPrimePower,
                Some(membership),
            ));
        }
    }

    let note = if membership.prime_power.is_none() {
        "constant term magnitude is not a prime power".to_string()
    } else if !strict {
        "the prime power does not strictly exceed the sum of the other coefficient magnitudes"
            .to_string()
    } else if let Some(reason) = membership.exclusion_reason {
        format!("not in S_{}: {}", membership.n1, reason)
    } else if membership.n1 > 3 {
        format!(
            "lowest exponent {} is outside the covered range (needs 1, 2 or 3)",
            membership.n1
        )
    } else {
        format!(
            "in S_{0} but not S'_{0}: the exponent {1} is a multiple of {0}",
            membership.n1,
            membership
                .prime_power
                .as_ref()
                .map(|pp| pp.exponent)
                .unwrap_or_default()
        )
    };
    Ok(Certificate::not_applicable(Some(membership), note))
}

/// Dominant-second-coefficient test for monic polynomials: irreducible when
/// `|a_{n-1}| > 1 + |a_{n-2}| + … + |a_0|`.
///
/// Non-monic input or degree below two yields `NotApplicable` (this test has
/// no useful non-monic analogue), as does a failed inequality.
pub fn check_perron(f: &SparsePoly) -> Result<Certificate, Error> {
    require_classifiable(f)?;
    let deg = f.degree().expect("nonzero");
    if deg < 2 {
        return Ok(Certificate::not_applicable(None, "degree is below two"));
    }
    if !f.leading_coeff().expect("nonzero").is_one() {
        return Ok(Certificate::not_applicable(
            None,
            "leading coefficient must be 1",
        ));
    }
    let second = f.coeff(deg - 1).magnitude().clone();
    let rest = f
        .terms()
        .iter()
        .filter(|&&(e, _)| e < deg - 1)
        .fold(BigUint::one(), |acc, (_, c)| acc + c.magnitude());
    if second > rest {
        Ok(Certificate::irreducible(Criterion::Perron, None))
    } else {
        Ok(Certificate::not_applicable(
            None,
            "the second-highest coefficient does not dominate the others",
        ))
    }
}

/// Sufficient coefficient test for root location: `true` guarantees that `f`
/// has no complex root in the closed unit disk (because
/// `|f(z)| >= |a_0| - Σ |a_i| > 0` there); `false` is inconclusive.
pub fn no_root_in_closed_unit_disk(f: &SparsePoly) -> Result<bool, Error> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.lowest_exponent() != Some(0) {
        return Err(Error::ZeroConstantTerm);
    }
    let a0_mag = f.constant_term().magnitude().clone();
    let tail = f
        .terms()
        .iter()
        .filter(|&&(e, _)| e > 0)
        .fold(BigUint::zero(), |acc, (_, c)| acc + c.magnitude());
    Ok(a0_mag > tail)
}

/// Upper bound on the number of non-reciprocal irreducible factors of `f`
/// (counted with multiplicity), when one is certified.
///
/// * `Some(1)` when [`check_strict`] certifies irreducibility: the single
///   factor is `f` itself.
/// * `Some(n1)` for members of `S_2` or `S_3` whose prime power is at least
///   the tail sum. Equality is included: coefficient domination still keeps
///   every root on or outside the unit circle, factors with unit constant
///   term are then products of roots of unity — reciprocal up to sign — and
///   the p-adic slopes of the remaining factors cap their number at `n1`.
/// * `None` otherwise.
pub fn max_nonreciprocal_factor_bound(f: &SparsePoly) -> Result<Option<u64>, Error> {
    let cert = check_strict(f)?;
    if cert.verdict == Verdict::Irreducible {
        return Ok(Some(1));
    }
    let membership = cert.membership.expect("check_strict always attaches membership");
    if membership.in_s && (membership.n1 == 2 || membership.n1 == 3) {
        let pp = membership
            .prime_power
            .as_ref()
            .expect("in_s implies a prime power");
        if pp.value() >= membership.tail_sum {
            return Ok(Some(membership.n1));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(u64, i64)]) -> SparsePoly {
        SparsePoly::from_terms_i64(terms)
    }

    fn pp(base: u64, exponent: u32) -> PrimePower {
        PrimePower { base: BigUint::from(base), exponent }
    }

    #[test]
    fn family_examples() {
        let m = classify_family(&p(&[(3, 1), (1, 1), (0, 25)])).unwrap();
        assert_eq!(m.n1, 1);
        assert_eq!(m.prime_power, Some(pp(5, 2)));
        assert_eq!(m.epsilon, 1);
        assert_eq!(m.tail_sum, BigUint::from(2u32));
        assert!(m.in_s);
        // Every u is a multiple of 1, so the congruence family at n1 = 1 is
        // empty; scope still covers this polynomial through S_1 itself.
        assert!(!m.in_s_prime);
        assert!(m.in_scope());

        let m = classify_family(&p(&[(3, 2), (2, -3), (0, -27)])).unwrap();
        assert_eq!(m.n1, 2);
        assert_eq!(m.prime_power, Some(pp(3, 3)));
        assert_eq!(m.epsilon, -1);
        assert!(!m.in_s);
        assert_eq!(m.exclusion_reason, Some(ExclusionReason::BaseDividesLowestCoeff));
        assert!(!m.in_scope());

        let m = classify_family(&p(&[(4, 1), (3, 4), (0, 27)])).unwrap();
        assert_eq!(m.n1, 3);
        assert_eq!(m.prime_power, Some(pp(3, 3)));
        assert!(m.in_s);
        assert!(!m.in_s_prime);
        assert!(!m.in_scope());

        let m = classify_family(&p(&[(8, 1), (6, 1), (4, 1), (0, 4)])).unwrap();
        assert_eq!(m.n1, 4);
        assert!(m.in_s);
        assert!(m.in_s_prime);
        assert!(!m.in_scope(), "lowest exponent 4 is outside the covered range");
    }

    #[test]
    fn family_rejections_and_exclusions() {
        assert_eq!(classify_family(&SparsePoly::zero()), Err(Error::ZeroPolynomial));
        assert_eq!(classify_family(&p(&[(0, 9)])), Err(Error::ConstantPolynomial));
        assert_eq!(classify_family(&p(&[(2, 1), (1, 3)])), Err(Error::ZeroConstantTerm));

        let m = classify_family(&p(&[(2, 1), (0, 12)])).unwrap();
        assert_eq!(m.exclusion_reason, Some(ExclusionReason::ConstantNotPrimePower));
        let m = classify_family(&p(&[(2, 1), (0, 7)])).unwrap();
        assert_eq!(m.exclusion_reason, Some(ExclusionReason::ExponentBelowTwo));
        let m = classify_family(&p(&[(5, 3), (1, 2), (0, 8)])).unwrap();
        assert_eq!(m.exclusion_reason, Some(ExclusionReason::BaseDividesLowestCoeff));
        let m = classify_family(&p(&[(5, 2), (1, 3), (0, 8)])).unwrap();
        assert_eq!(m.exclusion_reason, Some(ExclusionReason::BaseDividesLeadingCoeff));
    }

    #[test]
    fn strict_test_examples() {
        let cert = check_strict(&p(&[(3, 1), (1, 1), (0, 25)])).unwrap();
        assert_eq!(cert.verdict, Verdict::Irreducible);
        assert_eq!(cert.criterion, Some(Criterion::StrictPrimePower));

        let cert = check_strict(&p(&[(4, 1), (3, 4), (0, 27)])).unwrap();
        assert_eq!(cert.verdict, Verdict::NotApplicable);
        assert!(cert.notes[0].contains("S'_3"), "note: {}", cert.notes[0]);

        let cert = check_strict(&p(&[(8, 1), (6, 1), (4, 1), (0, 4)])).unwrap();
        assert_eq!(cert.verdict, Verdict::NotApplicable);
        assert!(cert.notes[0].contains("outside the covered range"));
    }

    #[test]
    fn strict_test_prime_constant_route() {
        // Prime constant dominating the tail: no divisibility or congruence
        // conditions are needed.
        let cert = check_strict(&p(&[(5, 1), (3, 1), (0, 7)])).unwrap();
        assert_eq!(cert.verdict, Verdict::Irreducible);
        assert_eq!(cert.criterion, Some(Criterion::PanitopolStefanescu));

        let cert = check_strict(&p(&[(3, 1), (1, 1), (0, -5)])).unwrap();
        assert_eq!(cert.verdict, Verdict::Irreducible);
        assert_eq!(cert.criterion, Some(Criterion::PanitopolStefanescu));

        // Prime constant but dominated: inconclusive.
        let cert = check_strict(&p(&[(3, 1), (1, 4), (0, 3)])).unwrap();
        assert_eq!(cert.verdict, Verdict::NotApplicable);
    }

    #[test]
    fn strict_test_requires_strict_inequality() {
        // Equality 16 = 9 + 5 + 2 is not enough for this criterion.
        let cert = check_strict(&p(&[(5, 9), (3, 5), (1, 2), (0, 16)])).unwrap();
        assert_eq!(cert.verdict, Verdict::NotApplicable);
        assert!(cert.notes[0].contains("strictly exceed"));
    }

    #[test]
    fn perron_examples() {
        let cert = check_perron(&p(&[(3, 1), (2, 5), (1, 1), (0, 1)])).unwrap();
        assert_eq!(cert.verdict, Verdict::Irreducible);
        assert_eq!(cert.criterion, Some(Criterion::Perron));

        let cert = check_perron(&p(&[(2, 1), (1, 1), (0, 1)])).unwrap();
        assert_eq!(cert.verdict, Verdict::NotApplicable);

        let cert = check_perron(&p(&[(2, 1), (1, 3), (0, 1)])).unwrap();
        assert_eq!(cert.verdict, Verdict::Irreducible);

        let cert = check_perron(&p(&[(3, 2), (2, 9), (0, 1)])).unwrap();
        assert_eq!(cert.verdict, Verdict::NotApplicable);
        assert!(cert.notes[0].contains("leading coefficient"));

        assert_eq!(
            check_perron(&p(&[(3, 1), (2, 5), (1, 1)])),
            Err(Error::ZeroConstantTerm)
        );
    }

    #[test]
    fn unit_disk_examples() {
        assert_eq!(no_root_in_closed_unit_disk(&p(&[(2, 1), (1, 1), (0, 3)])), Ok(true));
        assert_eq!(no_root_in_closed_unit_disk(&p(&[(2, 1), (1, 3), (0, 1)])), Ok(false));
        assert_eq!(no_root_in_closed_unit_disk(&p(&[(4, 1), (2, 1), (0, -8)])), Ok(true));
        assert_eq!(
            no_root_in_closed_unit_disk(&p(&[(2, 1), (1, 1)])),
            Err(Error::ZeroConstantTerm)
        );
    }

    #[test]
    fn factor_bound_examples() {
        assert_eq!(
            max_nonreciprocal_factor_bound(&p(&[(4, 1), (2, 3), (0, 4)])).unwrap(),
            Some(2)
        );
        assert_eq!(
            max_nonreciprocal_factor_bound(&p(&[(3, 1), (1, 1), (0, 25)])).unwrap(),
            Some(1)
        );
        assert_eq!(
            max_nonreciprocal_factor_bound(&p(&[(5, 1), (3, 1), (0, 7)])).unwrap(),
            Some(1)
        );
        assert_eq!(
            max_nonreciprocal_factor_bound(&p(&[(8, 1), (6, 1), (4, 1), (0, 4)])).unwrap(),
            None
        );
        assert_eq!(
            max_nonreciprocal_factor_bound(&p(&[(5, 9), (3, 5), (1, 2), (0, 16)])).unwrap(),
            None
        );
        // Equality case in S_2 (not S'_2): the bound still applies.
        assert_eq!(
            max_nonreciprocal_factor_bound(&p(&[(6, 4), (2, 5), (0, 9)])).unwrap(),
            Some(2)
        );
    }
}
