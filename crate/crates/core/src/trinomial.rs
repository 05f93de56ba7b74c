//! Trinomials `a x^n + ε₁ b x^m + ε₂ p^u`: exact discriminants, separability
//! classification, and the equality-case reducibility test.
//!
//! Everything here is closed-form. The discriminant of a trinomial factors
//! completely into small building blocks of `n`, `m` and the coefficients, so
//! separability (absence of repeated roots) reduces to four simultaneously
//! checkable conditions; under the standard normalizations those conditions
//! pin down exactly two sporadic non-separable families, each with an
//! explicit rational double root.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::criteria::{classify_family, Certificate, Criterion, Verdict};
use crate::equality::decompose_equality;
use crate::int_arith::{gcd_u64, is_prime, largest_even_part};
use crate::poly::SparsePoly;
use crate::Error;

/// A trinomial `a x^n + ε₁ b x^m + ε₂ p^u` with `a, b >= 1`, `n > m >= 1`,
/// `p` prime and `u >= 1`.
///
/// The leading coefficient is kept positive by convention; a trinomial with
/// negative leading coefficient should be negated by the caller first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrinomialSpec {
    pub a: BigUint,
    pub n: u64,
    pub eps1: i8,
    pub b: BigUint,
    pub m: u64,
    pub p: BigUint,
    pub u: u32,
    pub eps2: i8,
}

/// Separability answer, with the double root when there is one and the
/// degree gap is 1 (the only case where a rational double root can occur).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Separability {
    pub separable: bool,
    pub witness: Option<BigInt>,
}

/// Outcome of the exception classification for non-separable candidates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExceptionClass {
    /// No repeated root.
    Separable,
    /// The family `x^3 + 3ε₁ x^2 - 4ε₁` (double root at `-2ε₁`).
    ExceptionCubic,
    /// The family `x^4 + 4ε₁ x^3 + 27` (double root at `-3ε₁`).
    ExceptionQuartic,
}

impl TrinomialSpec {
    /// Validates and builds a trinomial description.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        a: BigUint,
        n: u64,
        eps1: i8,
        b: BigUint,
        m: u64,
        p: BigUint,
        u: u32,
        eps2: i8,
    ) -> Result<Self, Error> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::Precondition("coefficients a and b must be nonzero".into()));
        }
        if !(eps1 == 1 || eps1 == -1) || !(eps2 == 1 || eps2 == -1) {
            return Err(Error::Precondition("signs must be +1 or -1".into()));
        }
        if m == 0 || n <= m {
            return Err(Error::Precondition("exponents must satisfy n > m >= 1".into()));
        }
        if u == 0 {
            return Err(Error::Precondition("the prime power exponent must be >= 1".into()));
        }
        if !is_prime(&p) {
            return Err(Error::Precondition(format!("{p} is not prime")));
        }
        Ok(TrinomialSpec { a, n, eps1, b, m, p, u, eps2 })
    }

    /// Reads a trinomial description off a polynomial with exactly three
    /// terms, positive leading coefficient and prime-power constant term.
    pub fn from_poly(f: &SparsePoly) -> Result<Self, Error> {
        let terms = f.terms();
        if terms.len() != 3 {
            return Err(Error::Precondition(format!(
                "a trinomial needs exactly three terms, found {}",
                terms.len()
            )));
        }
        if terms[0].0 != 0 {
            return Err(Error::ZeroConstantTerm);
        }
        let (m, mid) = (terms[1].0, &terms[1].1);
        let (n, lead) = (terms[2].0, &terms[2].1);
        if lead.is_negative() {
            return Err(Error::Precondition(
                "leading coefficient must be positive; negate the polynomial first".into(),
            ));
        }
        let a0 = &terms[0].1;
        let Some(pp) = crate::int_arith::prime_power_decompose(a0.magnitude()) else {
            return Err(Error::Precondition(
                "the constant term magnitude must be a prime power".into(),
            ));
        };
        TrinomialSpec::new(
            lead.magnitude().clone(),
            n,
            if mid.is_negative() { -1 } else { 1 },
            mid.magnitude().clone(),
            m,
            pp.base,
            pp.exponent,
            if a0.is_negative() { -1 } else { 1 },
        )
    }

    /// Materializes the trinomial as a polynomial.
    pub fn to_poly(&self) -> SparsePoly {
        SparsePoly::new([
            (self.n, BigInt::from(self.a.clone())),
            (self.m, BigInt::from(self.b.clone()) * self.eps1),
            (0, BigInt::from(self.prime_power_value()) * self.eps2),
        ])
    }

    /// The constant term magnitude `p^u`.
    pub fn prime_power_value(&self) -> BigUint {
        self.p.pow(self.u)
    }
}

/// Hard cap on exponents fed to exact powering; beyond this the numbers stop
/// being representable at sane sizes and the closed forms, while still true,
/// are not computable here.
const POW_CAP: u64 = 1 << 20;

fn pow_big(base: &BigInt, exp: u64) -> Result<BigInt, Error> {
    if exp > POW_CAP {
        return Err(Error::Precondition(format!(
            "exponent {exp} is too large for exact evaluation"
        )));
    }
    Ok(base.pow(exp as u32))
}

fn pow_biguint(base: &BigUint, exp: u64) -> Result<BigUint, Error> {
    if exp > POW_CAP {
        return Err(Error::Precondition(format!(
            "exponent {exp} is too large for exact evaluation"
        )));
    }
    Ok(base.pow(exp as u32))
}

/// Whether `n(n-1)/2` is odd, i.e. the sign `(-1)^{n(n-1)/2}` is negative.
fn disc_sign_is_negative(n: u64) -> bool {
    matches!(n % 4, 2 | 3)
}

/// Discriminant of the monic trinomial `x^n + a x^m + b` in closed form.
///
/// With `d = gcd(n, m)`:
///
/// `disc = (-1)^{n(n-1)/2} b^{m-1} [ n^{n/d} b^{(n-m)/d}
///          - (-1)^{n/d} (n-m)^{(n-m)/d} m^{m/d} a^{n/d} ]^d`
pub fn discriminant_monic_trinomial(
    n: u64,
    m: u64,
    a: &BigInt,
    b: &BigInt,
) -> Result<BigInt, Error> {
    if m == 0 || n <= m {
        return Err(Error::Precondition("exponents must satisfy n > m >= 1".into()));
    }
    if a.is_zero() || b.is_zero() {
        return Err(Error::Precondition("coefficients a and b must be nonzero".into()));
    }
    let d = gcd_u64(n, m);
    let lhs = pow_big(&BigInt::from(n), n / d)? * pow_big(b, (n - m) / d)?;
    let mut rhs = pow_big(&BigInt::from(n - m), (n - m) / d)?
        * pow_big(&BigInt::from(m), m / d)?
        * pow_big(a, n / d)?;
    if (n / d) % 2 == 1 {
        rhs = -rhs;
    }
    let mut disc = pow_big(b, m - 1)? * pow_big(&(lhs - rhs), d)?;
    if disc_sign_is_negative(n) {
        disc = -disc;
    }
    Ok(disc)
}

/// Discriminant of the general trinomial `a x^n + ε₁ b x^m + ε₂ p^u`.
///
/// Writing `B = ε₁ b` and `C = ε₂ p^u`, with `d = gcd(n, m)`:
///
/// `disc = (-1)^{n(n-1)/2} C^{m-1} a^{n-m-1} [ n^{n/d} C^{(n-m)/d} a^{m/d}
///          - (-1)^{n/d} (n-m)^{(n-m)/d} m^{m/d} B^{n/d} ]^d`
///
/// For `a = 1` this reduces to the monic closed form.
pub fn discriminant_general_trinomial(t: &TrinomialSpec) -> Result<BigInt, Error> {
    let (n, m) = (t.n, t.m);
    let d = gcd_u64(n, m);
    let a = BigInt::from(t.a.clone());
    let cap_b = BigInt::from(t.b.clone()) * t.eps1;
    let cap_c = BigInt::from(t.prime_power_value()) * t.eps2;

    let lhs = pow_big(&BigInt::from(n), n / d)?
        * pow_big(&cap_c, (n - m) / d)?
        * pow_big(&a, m / d)?;
    let mut rhs = pow_big(&BigInt::from(n - m), (n - m) / d)?
        * pow_big(&BigInt::from(m), m / d)?
        * pow_big(&cap_b, n / d)?;
    if (n / d) % 2 == 1 {
        rhs = -rhs;
    }
    let mut disc = pow_big(&cap_c, m - 1)? * pow_big(&a, n - m - 1)? * pow_big(&(lhs - rhs), d)?;
    if disc_sign_is_negative(n) {
        disc = -disc;
    }
    Ok(disc)
}

/// Validates the standing hypotheses shared by the separability routines:
/// `gcd(a, b) = 1`, `gcd(n, m) = 1`, `p` coprime to `a b`, `b < p^u`,
/// `u >= 2`.
fn require_separability_hypotheses(t: &TrinomialSpec) -> Result<(), Error> {
    if !t.a.gcd(&t.b).is_one() {
        return Err(Error::Precondition("a and b must be coprime".into()));
    }
    if gcd_u64(t.n, t.m) != 1 {
        return Err(Error::Precondition("n and m must be coprime".into()));
    }
    if (&t.a % &t.p).is_zero() || (&t.b % &t.p).is_zero() {
        return Err(Error::Precondition("p must divide neither a nor b".into()));
    }
    if t.b >= t.prime_power_value() {
        return Err(Error::Precondition("b must be smaller than p^u".into()));
    }
    if t.u < 2 {
        return Err(Error::Precondition("the prime power exponent must be >= 2".into()));
    }
    Ok(())
}

/// Whether the four simultaneous conditions for a repeated root hold:
/// `b = n`, `p | m`, `p^{u(n-m)} a^m = (n-m)^{n-m} m^m`, and
/// `ε₂^{n-m} (-ε₁)^n = 1`.
fn repeated_root_conditions(t: &TrinomialSpec) -> Result<bool, Error> {
    let (n, m) = (t.n, t.m);
    if t.b != BigUint::from(n) {
        return Ok(false);
    }
    if !(BigUint::from(m) % &t.p).is_zero() {
        return Ok(false);
    }
    let exp = u64::from(t.u)
        .checked_mul(n - m)
        .ok_or_else(|| Error::Precondition("exponent overflow".into()))?;
    let lhs = pow_biguint(&t.p, exp)? * pow_biguint(&t.a, m)?;
    let rhs = pow_biguint(&BigUint::from(n - m), n - m)? * pow_biguint(&BigUint::from(m), m)?;
    if lhs != rhs {
        return Ok(false);
    }
    let sign_left = if (n - m) % 2 == 0 { 1 } else { t.eps2 };
    let sign_right = if n % 2 == 0 { 1 } else { -t.eps1 };
    Ok(sign_left * sign_right == 1)
}

/// Decides whether the trinomial has a repeated root, producing the explicit
/// double root when the degree gap is one.
///
/// # Errors
///
/// The standing hypotheses of [`require_separability_hypotheses`] are hard
/// errors. An `Inconsistency` would mean a repeated root appeared with
/// degree gap at least two, which the hypotheses rule out.
pub fn is_separable(t: &TrinomialSpec) -> Result<Separability, Error> {
    require_separability_hypotheses(t)?;
    if !repeated_root_conditions(t)? {
        debug_assert!(
            !discriminant_general_trinomial(t).unwrap().is_zero(),
            "zero discriminant contradicts separability for {}",
            t.to_poly()
        );
        return Ok(Separability { separable: true, witness: None });
    }
    if t.n - t.m >= 2 {
        return Err(Error::Inconsistency(format!(
            "repeated-root conditions held with degree gap {} for {}",
            t.n - t.m,
            t.to_poly()
        )));
    }
    // Degree gap one: the double root is -(m b ε₁) / (n a), which the
    // conditions force to be an exact integer.
    let numer = BigInt::from(t.m) * BigInt::from(t.b.clone()) * (-t.eps1);
    let denom = BigInt::from(t.n) * BigInt::from(t.a.clone());
    let (zeta, rem) = numer.div_rem(&denom);
    if !rem.is_zero() {
        return Err(Error::Inconsistency(format!(
            "double root of {} is not an integer",
            t.to_poly()
        )));
    }
    let f = t.to_poly();
    if !f.evaluate(&zeta).is_zero() || !f.derivative().evaluate(&zeta).is_zero() {
        return Err(Error::Inconsistency(format!(
            "claimed double root {zeta} of {f} does not check out"
        )));
    }
    debug_assert!(discriminant_general_trinomial(t).unwrap().is_zero());
    Ok(Separability { separable: false, witness: Some(zeta) })
}

/// Classifies a non-separable candidate from the boundary families
/// `S_2 \ S'_2` and `S_3 \ S'_3`: under the standing hypotheses the only
/// trinomials there with a repeated root are the two sporadic families.
pub fn classify_exception_corollary(t: &TrinomialSpec) -> Result<ExceptionClass, Error> {
    require_separability_hypotheses(t)?;
    let membership = classify_family(&t.to_poly())?;
    if !membership.in_s || !(membership.n1 == 2 || membership.n1 == 3) || membership.in_s_prime {
        return Err(Error::Precondition(
            "the trinomial must lie in S_2 \\ S'_2 or S_3 \\ S'_3".into(),
        ));
    }
    let sep = is_separable(t)?;
    if sep.separable {
        return Ok(ExceptionClass::Separable);
    }
    let four = BigUint::from(4u32);
    let twenty_seven = BigUint::from(27u32);
    if t.n == 3
        && t.m == 2
        && t.a.is_one()
        && t.b == BigUint::from(3u32)
        && t.prime_power_value() == four
        && t.eps2 == -t.eps1
    {
        return Ok(ExceptionClass::ExceptionCubic);
    }
    if t.n == 4
        && t.m == 3
        && t.a.is_one()
        && t.b == four
        && t.prime_power_value() == twenty_seven
        && t.eps2 == 1
    {
        return Ok(ExceptionClass::ExceptionQuartic);
    }
    Err(Error::Inconsistency(format!(
        "non-separable trinomial {} outside the two known families",
        t.to_poly()
    )))
}

/// Equality-case reducibility test for trinomials: requires
/// `p^u = a + b` and scope membership, then `f` is irreducible exactly when
/// the cyclotomic part is trivial, which the largest even parts of `n` and
/// `m` decide in closed form.
pub fn classify_equality_trinomial(t: &TrinomialSpec) -> Result<Certificate, Error> {
    let f = t.to_poly();
    let membership = classify_family(&f)?;
    if t.prime_power_value() != &t.a + &t.b {
        return Ok(Certificate::not_applicable(
            Some(membership),
            "p^u must equal a + b",
        ));
    }
    if !membership.in_scope() {
        let note = match membership.exclusion_reason {
            Some(reason) => format!("not in S_{}: {}", membership.n1, reason),
            None if membership.n1 > 3 => format!(
                "lowest exponent {} is outside the covered range (needs 1, 2 or 3)",
                membership.n1
            ),
            None => format!(
                "in S_{0} but not S'_{0}: the exponent {1} is a multiple of {0}",
                membership.n1, t.u
            ),
        };
        return Ok(Certificate::not_applicable(Some(membership), note));
    }
    let d = decompose_equality(&f, &membership)?;

    // Cross-check the closed forms for when the cyclotomic part is
    // nontrivial, in terms of the largest even parts of the exponents.
    #[cfg(debug_assertions)]
    {
        let (en, em) = (largest_even_part(t.n), largest_even_part(t.m));
        let expect_reducible = match (t.eps1, t.eps2) {
            (1, 1) => en == em,
            (1, -1) => true,
            (-1, 1) => em >= 2 * en,
            (-1, -1) => en >= 2 * em,
            _ => unreachable!(),
        };
        debug_assert_eq!(
            !d.f_c.is_one(),
            expect_reducible,
            "closed-form reducibility disagrees for {f}"
        );
    }
    #[cfg(not(debug_assertions))]
    let _ = largest_even_part;

    if d.f_c.is_one() {
        Ok(Certificate {
            verdict: Verdict::Irreducible,
            criterion: Some(Criterion::EqualityTrinomial),
            membership: Some(membership),
            f_c: None,
            f_n: None,
            f_n_certified_irreducible: false,
            notes: Vec::new(),
        })
    } else {
        Ok(Certificate {
            verdict: Verdict::Decomposed,
            criterion: Some(Criterion::EqualityTrinomial),
            membership: Some(membership),
            f_c: Some(d.f_c),
            f_n: Some(d.f_n),
            f_n_certified_irreducible: d.f_n_certified_irreducible,
            notes: Vec::new(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(a: u64, n: u64, eps1: i8, b: u64, m: u64, p: u64, u: u32, eps2: i8) -> TrinomialSpec {
        TrinomialSpec::new(
            BigUint::from(a),
            n,
            eps1,
            BigUint::from(b),
            m,
            BigUint::from(p),
            u,
            eps2,
        )
        .unwrap()
    }

    fn p(terms: &[(u64, i64)]) -> SparsePoly {
        SparsePoly::from_terms_i64(terms)
    }

    #[test]
    fn monic_discriminant_examples() {
        let a = BigInt::from(5);
        let b = BigInt::from(-7);
        assert_eq!(
            discriminant_monic_trinomial(2, 1, &a, &b).unwrap(),
            BigInt::from(25 + 28)
        );
        // x^3 + a x + b has discriminant -4a^3 - 27b^2.
        assert_eq!(
            discriminant_monic_trinomial(3, 1, &a, &b).unwrap(),
            BigInt::from(-4 * 125 - 27 * 49)
        );
        // x^4 + 4x^3 + 27 has a repeated root.
        assert_eq!(
            discriminant_monic_trinomial(4, 3, &BigInt::from(4), &BigInt::from(27)).unwrap(),
            BigInt::zero()
        );
    }

    #[test]
    fn general_discriminant_examples() {
        let t = spec(1, 4, 1, 4, 3, 3, 3, 1);
        assert_eq!(discriminant_general_trinomial(&t).unwrap(), BigInt::zero());

        let t = spec(1, 5, 1, 2, 2, 3, 2, 1);
        assert_eq!(
            discriminant_general_trinomial(&t).unwrap(),
            BigInt::from(20_534_229i64)
        );

        // Non-monic sanity check against the quadratic formula:
        // disc(2x^2 + 3x + 5) = 9 - 40 = -31.
        let t = spec(2, 2, 1, 3, 1, 5, 1, 1);
        assert_eq!(discriminant_general_trinomial(&t).unwrap(), BigInt::from(-31));
    }

    #[test]
    fn general_discriminant_reduces_to_monic() {
        for n in 2..=7u64 {
            for m in 1..n {
                for (b, eps1) in [(2u64, 1i8), (3, -1), (5, 1)] {
                    for (pu, p, u, eps2) in [(4u64, 2u64, 2u32, 1i8), (27, 3, 3, -1)] {
                        let t = spec(1, n, eps1, b, m, p, u, eps2);
                        let monic = discriminant_monic_trinomial(
                            n,
                            m,
                            &(BigInt::from(b) * eps1),
                            &(BigInt::from(pu) * eps2),
                        )
                        .unwrap();
                        assert_eq!(
                            discriminant_general_trinomial(&t).unwrap(),
                            monic,
                            "monic reduction failed at n={n} m={m}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn separability_examples() {
        // x^4 + 4x^3 + 27: double root at -3.
        let sep = is_separable(&spec(1, 4, 1, 4, 3, 3, 3, 1)).unwrap();
        assert!(!sep.separable);
        assert_eq!(sep.witness, Some(BigInt::from(-3)));

        // x^3 + 3x^2 - 4: double root at -2.
        let sep = is_separable(&spec(1, 3, 1, 3, 2, 2, 2, -1)).unwrap();
        assert!(!sep.separable);
        assert_eq!(sep.witness, Some(BigInt::from(-2)));

        // x^5 + 2x^2 + 9: b != n already fails the repeated-root conditions.
        let sep = is_separable(&spec(1, 5, 1, 2, 2, 3, 2, 1)).unwrap();
        assert!(sep.separable);
        assert_eq!(sep.witness, None);

        // Mirror images of the sporadic families.
        let sep = is_separable(&spec(1, 3, -1, 3, 2, 2, 2, 1)).unwrap();
        assert_eq!(sep.witness, Some(BigInt::from(2)));
        let sep = is_separable(&spec(1, 4, -1, 4, 3, 3, 3, 1)).unwrap();
        assert_eq!(sep.witness, Some(BigInt::from(3)));
    }

    #[test]
    fn separability_hypothesis_failures_are_errors() {
        // gcd(n, m) = 2.
        let t = spec(1, 6, 1, 5, 2, 3, 2, 1);
        assert!(matches!(is_separable(&t), Err(Error::Precondition(_))));
        // b >= p^u.
        let t = spec(1, 5, 1, 9, 2, 2, 2, 1);
        assert!(matches!(is_separable(&t), Err(Error::Precondition(_))));
        // u = 1.
        let t = spec(1, 5, 1, 2, 2, 3, 1, 1);
        assert!(matches!(is_separable(&t), Err(Error::Precondition(_))));
        // p divides b.
        let t = spec(1, 5, 1, 3, 2, 3, 2, 1);
        assert!(matches!(is_separable(&t), Err(Error::Precondition(_))));
    }

    #[test]
    fn exception_classification_examples() {
        let t = spec(1, 3, 1, 3, 2, 2, 2, -1);
        assert_eq!(classify_exception_corollary(&t).unwrap(), ExceptionClass::ExceptionCubic);

        let t = spec(1, 4, -1, 4, 3, 3, 3, 1);
        assert_eq!(classify_exception_corollary(&t).unwrap(), ExceptionClass::ExceptionQuartic);

        let t = spec(1, 5, 1, 2, 2, 3, 2, 1);
        assert_eq!(classify_exception_corollary(&t).unwrap(), ExceptionClass::Separable);
    }

    #[test]
    fn exception_classification_requires_boundary_membership() {
        // In S'_2 (u odd), not the boundary S_2 \ S'_2.
        let t = spec(1, 5, 1, 5, 2, 2, 3, 1);
        assert!(matches!(
            classify_exception_corollary(&t),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn equality_trinomial_examples() {
        // x^5 + 3x + 4: even parts of 5 and 1 agree, so x + 1 splits off.
        let t = spec(1, 5, 1, 3, 1, 2, 2, 1);
        let cert = classify_equality_trinomial(&t).unwrap();
        assert_eq!(cert.verdict, Verdict::Decomposed);
        assert_eq!(cert.criterion, Some(Criterion::EqualityTrinomial));
        assert_eq!(cert.f_c, Some(p(&[(1, 1), (0, 1)])));
        assert!(cert.f_n_certified_irreducible);

        // x^6 + 3x + 4: even parts 2 and 1 differ — irreducible.
        let t = spec(1, 6, 1, 3, 1, 2, 2, 1);
        let cert = classify_equality_trinomial(&t).unwrap();
        assert_eq!(cert.verdict, Verdict::Irreducible);

        // x^5 - 7x^2 + 8: mixed signs, x + 1 splits off.
        let t = spec(1, 5, -1, 7, 2, 2, 3, 1);
        let cert = classify_equality_trinomial(&t).unwrap();
        assert_eq!(cert.verdict, Verdict::Decomposed);
        assert_eq!(cert.f_c, Some(p(&[(1, 1), (0, 1)])));

        // 4x^6 + 5x^2 + 9: in S_2 but not S'_2 — out of scope.
        let t = spec(4, 6, 1, 5, 2, 3, 2, 1);
        let cert = classify_equality_trinomial(&t).unwrap();
        assert_eq!(cert.verdict, Verdict::NotApplicable);
        assert!(cert.notes[0].contains("S'_2"));

        // No equality: p^u != a + b.
        let t = spec(1, 5, 1, 2, 2, 3, 2, 1);
        let cert = classify_equality_trinomial(&t).unwrap();
        assert_eq!(cert.verdict, Verdict::NotApplicable);
        assert!(cert.notes[0].contains("a + b"));
    }

    #[test]
    fn poly_round_trip() {
        let t = spec(3, 7, -1, 5, 2, 2, 4, -1);
        assert_eq!(t.to_poly(), p(&[(7, 3), (2, -5), (0, -16)]));
        assert_eq!(TrinomialSpec::from_poly(&t.to_poly()).unwrap(), t);

        assert!(matches!(
            TrinomialSpec::from_poly(&p(&[(7, -3), (2, -5), (0, -16)])),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            TrinomialSpec::from_poly(&p(&[(7, 3), (0, -16)])),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            TrinomialSpec::from_poly(&p(&[(7, 3), (2, -5), (0, -12)])),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn small_sweep_finds_exactly_the_sporadic_families() {
        // Exhaustive sweep over a small box: the only repeated-root
        // trinomials satisfying the standing hypotheses are the cubic and
        // quartic sporadic families (in their two sign variants each).
        let mut found = Vec::new();
        for n in 2..=6u64 {
            for m in 1..n {
                if gcd_u64(n, m) != 1 {
                    continue;
                }
                for a in 1..=6u64 {
                    for b in 1..=12u64 {
                        if gcd_u64(a, b) != 1 {
                            continue;
                        }
                        for (pu, p_, u) in
                            [(4u64, 2u64, 2u32), (8, 2, 3), (9, 3, 2), (16, 2, 4), (25, 5, 2), (27, 3, 3), (32, 2, 5)]
                        {
                            if b >= pu || a % p_ == 0 || b % p_ == 0 {
                                continue;
                            }
                            for eps1 in [1i8, -1] {
                                for eps2 in [1i8, -1] {
                                    let t = spec(a, n, eps1, b, m, p_, u, eps2);
                                    let sep = is_separable(&t).unwrap();
                                    if !sep.separable {
                                        found.push((n, m, a, b, pu, eps1, eps2));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        found.sort_unstable();
        assert_eq!(
            found,
            vec![
                (3, 2, 1, 3, 4, -1, 1),
                (3, 2, 1, 3, 4, 1, -1),
                (4, 3, 1, 4, 27, -1, 1),
                (4, 3, 1, 4, 27, 1, 1),
            ]
        );
    }
}
