//! Closed-form gcds of binomials `x^n ± 1` and the candidate cyclotomic part
//! `f_c` assembled from them.
//!
//! The gcd of two such binomials is again of the form `x^k ± 1` or `1`, with
//! `k` and the sign determined entirely by the exponents' gcd and their
//! largest even parts. Folding the closed form across all terms of a sparse
//! polynomial with nonzero constant term `a_0` — one binomial
//! `x^{n_i} + sgn(a_0 a_i)` per positive-exponent term — yields `f_c`, the
//! divisor that collects every cyclotomic factor of the polynomial in the
//! boundary case where `|a_0|` equals the sum of the other coefficient
//! magnitudes.

use num_bigint::BigInt;

use crate::int_arith::{gcd_u64, largest_even_part, sgn};
use crate::poly::SparsePoly;
use crate::Error;

/// The binomial `x^exponent + sign`, with `exponent >= 1` and `sign = ±1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedBinomial {
    pub exponent: u64,
    pub sign: i8,
}

impl SignedBinomial {
    /// Materializes the binomial as a polynomial.
    pub fn expand(&self) -> SparsePoly {
        debug_assert!(self.exponent >= 1 && (self.sign == 1 || self.sign == -1));
        SparsePoly::new([
            (self.exponent, BigInt::from(1)),
            (0, BigInt::from(self.sign)),
        ])
    }
}

/// Closed-form gcd of two signed binomials; `None` means the gcd is `1`.
///
/// With `e(n)` the largest power of two dividing `n`:
///
/// * `gcd(x^n - 1, x^m - 1) = x^(n,m) - 1` always;
/// * `gcd(x^n + 1, x^m + 1) = x^(n,m) + 1` when `e(n) = e(m)`, else `1`;
/// * `gcd(x^n + 1, x^m - 1) = x^(n, m/2) + 1` when `e(m) >= 2 e(n)`, else `1`
///   (and symmetrically with the roles swapped).
///
/// In the mixed case the condition forces `m` even, so `m/2` is exact.
pub fn gcd_binomial_closed(
    a: &SignedBinomial,
    b: &SignedBinomial,
) -> Option<SignedBinomial> {
    let (n, m) = (a.exponent, b.exponent);
    match (a.sign, b.sign) {
        (-1, -1) => Some(SignedBinomial { exponent: gcd_u64(n, m), sign: -1 }),
        (1, 1) => (largest_even_part(n) == largest_even_part(m))
            .then(|| SignedBinomial { exponent: gcd_u64(n, m), sign: 1 }),
        (1, -1) => (largest_even_part(m) >= 2 * largest_even_part(n))
            .then(|| SignedBinomial { exponent: gcd_u64(n, m / 2), sign: 1 }),
        (-1, 1) => gcd_binomial_closed(b, a),
        _ => unreachable!("binomial signs are restricted to ±1"),
    }
}

/// Gcd of two signed binomials as a polynomial (`1` when trivial).
pub fn gcd_binomial(a: &SignedBinomial, b: &SignedBinomial) -> SparsePoly {
    match gcd_binomial_closed(a, b) {
        Some(g) => g.expand(),
        None => SparsePoly::one(),
    }
}

/// Folds the closed-form gcd across a list of binomials.
///
/// Returns `None` when the overall gcd is `1` (including for an empty list).
/// The result does not depend on the order of the list.
pub fn fold_binomial_gcd<I>(items: I) -> Option<SignedBinomial>
where
    I: IntoIterator<Item = SignedBinomial>,
{
    let mut iter = items.into_iter();
    let mut acc = iter.next()?;
    for next in iter {
        acc = gcd_binomial_closed(&acc, &next)?;
    }
    Some(acc)
}

/// The candidate cyclotomic part `f_c` of a polynomial with nonzero constant
/// term: the gcd of the binomials `x^{n_i} + sgn(a_0 a_i)` over all terms
/// `a_i x^{n_i}` with `n_i > 0`.
///
/// # Errors
///
/// Rejects constant polynomials and polynomials with zero constant term
/// (strip the power of x first).
pub fn compute_fc(f: &SparsePoly) -> Result<SparsePoly, Error> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.degree() == Some(0) {
        return Err(Error::ConstantPolynomial);
    }
    let a0 = f.constant_term();
    if a0 == BigInt::from(0) {
        return Err(Error::ZeroConstantTerm);
    }
    let s0 = sgn(&a0)?;
    let binomials = f
        .terms()
        .iter()
        .filter(|&&(e, _)| e > 0)
        .map(|(e, c)| {
            let s = sgn(c).expect("stored coefficients are nonzero");
            SignedBinomial { exponent: *e, sign: s0 * s }
        });
    Ok(match fold_binomial_gcd(binomials) {
        Some(g) => g.expand(),
        None => SparsePoly::one(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bin(exponent: u64, sign: i8) -> SignedBinomial {
        SignedBinomial { exponent, sign }
    }

    fn p(terms: &[(u64, i64)]) -> SparsePoly {
        SparsePoly::from_terms_i64(terms)
    }

    #[test]
    fn gcd_binomial_examples() {
        assert_eq!(gcd_binomial(&bin(4, -1), &bin(6, -1)), p(&[(2, 1), (0, -1)]));
        assert_eq!(gcd_binomial(&bin(4, 1), &bin(6, 1)), SparsePoly::one());
        assert_eq!(gcd_binomial(&bin(3, 1), &bin(2, -1)), p(&[(1, 1), (0, 1)]));
        assert_eq!(gcd_binomial(&bin(2, -1), &bin(3, 1)), p(&[(1, 1), (0, 1)]));
        assert_eq!(gcd_binomial(&bin(6, 1), &bin(2, 1)), p(&[(2, 1), (0, 1)]));
        assert_eq!(gcd_binomial(&bin(3, 1), &bin(5, 1)), p(&[(1, 1), (0, 1)]));
        assert_eq!(gcd_binomial(&bin(4, 1), &bin(8, -1)), p(&[(4, 1), (0, 1)]));
        assert_eq!(gcd_binomial(&bin(4, 1), &bin(4, -1)), SparsePoly::one());
    }

    #[test]
    fn gcd_binomial_matches_polynomial_gcd_exhaustively() {
        // Ground truth: the general polynomial gcd of the expansions, for all
        // exponents up to 24 and all four sign combinations.
        for n in 1..=24u64 {
            for m in 1..=24u64 {
                for sn in [1i8, -1] {
                    for sm in [1i8, -1] {
                        let a = bin(n, sn);
                        let b = bin(m, sm);
                        let fast = gcd_binomial(&a, &b);
                        let slow = SparsePoly::gcd(&a.expand(), &b.expand());
                        assert_eq!(
                            fast, slow,
                            "closed form disagrees at x^{n}{sn:+}, x^{m}{sm:+}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn fold_is_order_independent() {
        // All permutations of a few binomial lists give the same fold.
        let lists: Vec<Vec<SignedBinomial>> = vec![
            vec![bin(15, 1), bin(9, 1), bin(3, 1)],
            vec![bin(12, -1), bin(18, -1), bin(30, -1), bin(4, -1)],
            vec![bin(6, 1), bin(2, 1), bin(4, -1)],
            vec![bin(3, 1), bin(2, -1), bin(5, 1), bin(7, -1)],
            vec![bin(8, 1), bin(12, -1), bin(20, -1)],
        ];
        for list in lists {
            let reference = fold_binomial_gcd(list.clone());
            for perm in permutations(&list) {
                assert_eq!(fold_binomial_gcd(perm), reference, "fold depends on order");
            }
        }
    }

    fn permutations<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
        if items.len() <= 1 {
            return vec![items.to_vec()];
        }
        let mut out = Vec::new();
        for i in 0..items.len() {
            let mut rest = items.to_vec();
            let fixed = rest.remove(i);
            for mut tail in permutations(&rest) {
                tail.insert(0, fixed.clone());
                out.push(tail);
            }
        }
        out
    }

    #[test]
    fn candidate_cyclotomic_part_examples() {
        let f = p(&[(6, 4), (2, 5), (0, 9)]);
        assert_eq!(compute_fc(&f).unwrap(), p(&[(2, 1), (0, 1)]));

        let g = p(&[(4, 1), (2, 1), (0, -8)]);
        assert_eq!(compute_fc(&g).unwrap(), p(&[(2, 1), (0, -1)]));

        let h = p(&[(15, 5), (9, 9), (3, 2), (0, 16)]);
        assert_eq!(compute_fc(&h).unwrap(), p(&[(3, 1), (0, 1)]));

        let mixed = p(&[(12, 3), (6, 11), (3, 2), (0, 16)]);
        assert_eq!(compute_fc(&mixed).unwrap(), SparsePoly::one());
    }

    #[test]
    fn candidate_cyclotomic_part_rejections() {
        assert_eq!(compute_fc(&p(&[(0, 7)])), Err(Error::ConstantPolynomial));
        assert_eq!(compute_fc(&p(&[(3, 1), (1, 2)])), Err(Error::ZeroConstantTerm));
        assert_eq!(compute_fc(&SparsePoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn candidate_part_shape_is_binomial_or_one() {
        // Spot check on a grid: the result is 1 or x^k ± 1 with k dividing
        // every exponent.
        for n in 1..=10u64 {
            for m in 1..=10u64 {
                for sn in [1i8, -1] {
                    for sm in [1i8, -1] {
                        let f = &bin(n, sn).expand() * &bin(m, sm).expand();
                        let fc = compute_fc(&f).unwrap();
                        let ok = fc.is_one()
                            || (fc.num_terms() == 2
                                && fc.leading_coeff().map(|c| c.magnitude().bits()) == Some(1)
                                && f.terms().iter().all(|&(e, _)| {
                                    e == 0 || e % fc.degree().unwrap() == 0
                                }));
                        assert!(ok, "unexpected shape {fc} for n={n} m={m}");
                    }
                }
            }
        }
    }
}
