//! Sparse polynomials over arbitrary-precision integers.
//!
//! A [`SparsePoly`] stores only its nonzero terms, as `(exponent, coefficient)`
//! pairs in strictly increasing exponent order. Exponents are `u64`, so very
//! lacunary inputs like `x^1000000 + 3x + 7` cost three terms, not a million.
//! Every operation is exact.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::Error;

/// An integer polynomial stored by its nonzero terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SparsePoly {
    /// Nonzero terms in strictly increasing exponent order.
    terms: Vec<(u64, BigInt)>,
}

impl SparsePoly {
    /// Builds a polynomial from arbitrary `(exponent, coefficient)` pairs.
    ///
    /// Duplicate exponents are summed and zero coefficients dropped, so the
    /// result is always in canonical form.
    pub fn new<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u64, BigInt)>,
    {
        let mut acc: BTreeMap<u64, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            if c.is_zero() {
                continue;
            }
            let slot = acc.entry(e).or_insert_with(BigInt::zero);
            *slot += c;
            if slot.is_zero() {
                acc.remove(&e);
            }
        }
        SparsePoly { terms: acc.into_iter().collect() }
    }

    /// Convenience constructor from machine-integer coefficients.
    pub fn from_terms_i64(terms: &[(u64, i64)]) -> Self {
        Self::new(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    /// Builds a polynomial from dense coefficients, index = exponent.
    pub fn from_dense(coeffs: &[BigInt]) -> Self {
        Self::new(coeffs.iter().enumerate().map(|(e, c)| (e as u64, c.clone())))
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        SparsePoly { terms: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    /// A constant polynomial.
    pub fn constant(c: BigInt) -> Self {
        Self::new([(0u64, c)])
    }

    /// The single-term polynomial `c * x^e`.
    pub fn monomial(c: BigInt, e: u64) -> Self {
        Self::new([(e, c)])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.last().map(|&(e, _)| e)
    }

    /// Smallest exponent with a nonzero coefficient, or `None` for zero.
    pub fn lowest_exponent(&self) -> Option<u64> {
        self.terms.first().map(|&(e, _)| e)
    }

    /// Leading coefficient, or `None` for the zero polynomial.
    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.terms.last().map(|(_, c)| c)
    }

    /// Coefficient of `x^0` (zero when the term is absent).
    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    /// Coefficient of `x^e` (zero when the term is absent).
    pub fn coeff(&self, e: u64) -> BigInt {
        match self.terms.binary_search_by_key(&e, |&(exp, _)| exp) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    /// The nonzero terms in increasing exponent order.
    pub fn terms(&self) -> &[(u64, BigInt)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Dense coefficient vector of length `degree + 1` (empty for zero).
    pub fn to_dense(&self) -> Vec<BigInt> {
        let Some(deg) = self.degree() else {
            return Vec::new();
        };
        let mut out = vec![BigInt::zero(); deg as usize + 1];
        for (e, c) in &self.terms {
            out[*e as usize] = c.clone();
        }
        out
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        SparsePoly { terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect() }
    }

    /// Evaluates the polynomial at an integer point.
    pub fn evaluate(&self, t: &BigInt) -> BigInt {
        if t.is_zero() {
            return self.constant_term();
        }
        if t.magnitude().is_one() {
            // f(1) and f(-1) must stay cheap even for astronomical exponents.
            let negative = t.is_negative();
            let mut acc = BigInt::zero();
            for (e, c) in &self.terms {
                if negative && e % 2 == 1 {
                    acc -= c;
                } else {
                    acc += c;
                }
            }
            return acc;
        }
        // Sparse Horner: walk terms downward, raising t by exponent gaps.
        let mut acc = BigInt::zero();
        let mut prev_exp: Option<u64> = None;
        for (e, c) in self.terms.iter().rev() {
            if let Some(p) = prev_exp {
                acc *= pow_checked(t, p - e);
            }
            acc += c;
            prev_exp = Some(*e);
        }
        if let Some(p) = prev_exp {
            acc *= pow_checked(t, p);
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        Self::new(
            self.terms
                .iter()
                .filter(|&&(e, _)| e > 0)
                .map(|(e, c)| (e - 1, c * BigInt::from(*e))),
        )
    }

    /// The reciprocal transform `x^deg(f) * f(1/x)`, reversing coefficients.
    ///
    /// When `f(0) = 0` the degree of the result drops; the transform is an
    /// involution exactly on polynomials with nonzero constant term.
    pub fn reciprocal(&self) -> Result<Self, Error> {
        let deg = self.degree().ok_or(Error::ZeroPolynomial)?;
        Ok(Self::new(self.terms.iter().map(|(e, c)| (deg - e, c.clone()))))
    }

    /// Whether `f` equals plus or minus its reciprocal transform.
    pub fn is_reciprocal(&self) -> Result<bool, Error> {
        let rev = self.reciprocal()?;
        Ok(*self == rev || *self == -&rev)
    }

    /// Exact division: `Some(q)` with `self = q * g`, or `None` when `g` does
    /// not divide `self` over the integers.
    ///
    /// # Panics
    ///
    /// Panics if `g` is the zero polynomial.
    pub fn exact_divide(&self, g: &SparsePoly) -> Option<SparsePoly> {
        let dg = g.degree().expect("division by the zero polynomial");
        let lg = g.leading_coeff().expect("division by the zero polynomial");
        if self.is_zero() {
            return Some(SparsePoly::zero());
        }
        let mut rem: BTreeMap<u64, BigInt> =
            self.terms.iter().map(|(e, c)| (*e, c.clone())).collect();
        let mut quot: Vec<(u64, BigInt)> = Vec::new();
        while let Some((&top_e, top_c)) = rem.iter().next_back() {
            if top_e < dg {
                return None;
            }
            let (q, r) = top_c.div_rem(lg);
            if !r.is_zero() {
                return None;
            }
            let shift = top_e - dg;
            for (e, c) in &g.terms {
                let slot = rem.entry(e + shift).or_insert_with(BigInt::zero);
                *slot -= &q * c;
                if slot.is_zero() {
                    rem.remove(&(e + shift));
                }
            }
            quot.push((shift, q));
        }
        quot.reverse();
        Some(SparsePoly { terms: quot })
    }

    /// Splits `f` into `(content, primitive part)` with the primitive part
    /// having positive leading coefficient; the content carries the sign.
    ///
    /// # Panics
    ///
    /// Panics if `f` is the zero polynomial.
    pub fn content_primitive(&self) -> (BigInt, SparsePoly) {
        let lc = self.leading_coeff().expect("content of the zero polynomial");
        let mut content = BigInt::zero();
        for (_, c) in &self.terms {
            content = content.gcd(c);
            if content.is_one() {
                break;
            }
        }
        if lc.is_negative() {
            content = -content;
        }
        let prim = SparsePoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c / &content)).collect(),
        };
        (content, prim)
    }

    /// Greatest common divisor, returned primitive with positive leading
    /// coefficient; `gcd(f, 0)` is the primitive part of `f`.
    ///
    /// # Panics
    ///
    /// Panics if both inputs are zero.
    pub fn gcd(f: &SparsePoly, g: &SparsePoly) -> SparsePoly {
        assert!(
            !(f.is_zero() && g.is_zero()),
            "gcd of two zero polynomials is undefined"
        );
        if f.is_zero() {
            return g.content_primitive().1;
        }
        if g.is_zero() {
            return f.content_primitive().1;
        }
        let mut a = f.content_primitive().1;
        let mut b = g.content_primitive().1;
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = pseudo_rem(&a, &b);
            a = b;
            b = if r.is_zero() { r } else { r.content_primitive().1 };
        }
        a
    }

    /// The `d`-th cyclotomic polynomial.
    ///
    /// # Panics
    ///
    /// Panics if `d == 0`.
    pub fn cyclotomic(d: u64) -> SparsePoly {
        assert!(d > 0, "cyclotomic index must be positive");
        CYCLO_CACHE.with(|cache| cyclotomic_memo(d, &mut cache.borrow_mut()))
    }

    /// Substitutes `x^d` for `x`, multiplying every exponent by `d`.
    ///
    /// # Panics
    ///
    /// Panics if `d == 0` or an exponent overflows `u64`.
    pub fn inflate(&self, d: u64) -> SparsePoly {
        assert!(d > 0, "inflation factor must be positive");
        SparsePoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.checked_mul(d).expect("exponent overflow"), c.clone()))
                .collect(),
        }
    }

    /// Writes `f(x) = g(x^d)` with `d` maximal, returning `(g, d)`.
    ///
    /// A polynomial whose positive exponents have gcd 1 (or which is
    /// constant) returns `(f, 1)`.
    ///
    /// # Panics
    ///
    /// Panics if `f` is the zero polynomial.
    pub fn deflate(&self) -> (SparsePoly, u64) {
        assert!(!self.is_zero(), "cannot deflate the zero polynomial");
        let mut d = 0u64;
        for (e, _) in &self.terms {
            d = d.gcd(e);
            if d == 1 {
                break;
            }
        }
        if d <= 1 {
            return (self.clone(), 1);
        }
        let g = SparsePoly { terms: self.terms.iter().map(|(e, c)| (e / d, c.clone())).collect() };
        (g, d)
    }

    /// Canonical ordering: by degree, then by `(exponent, coefficient)` pairs
    /// from the bottom up. Used to sort factor lists deterministically.
    pub fn cmp_canonical(&self, other: &SparsePoly) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.terms.cmp(&other.terms))
    }
}

/// Raises `t` to the `e`-th power.
///
/// # Panics
///
/// Panics when `e` exceeds `u32::MAX`; such a value would be astronomically
/// large for any `|t| >= 2`, and `|t| <= 1` never reaches this path.
fn pow_checked(t: &BigInt, e: u64) -> BigInt {
    let e = u32::try_from(e).expect("exponent too large for evaluation");
    t.pow(e)
}

/// One multiply-through reduction step chain: returns a polynomial that is a
/// unit multiple of the remainder of `a` by `b` up to factors of `lc(b)`.
/// Exactness factors do not matter because the caller re-primitivizes.
fn pseudo_rem(a: &SparsePoly, b: &SparsePoly) -> SparsePoly {
    let db = b.degree().expect("pseudo_rem by zero");
    let lb = b.leading_coeff().expect("pseudo_rem by zero").clone();
    let mut r = a.clone();
    while let Some(dr) = r.degree() {
        if dr < db {
            break;
        }
        let lr = r.leading_coeff().expect("nonzero").clone();
        let shifted = SparsePoly {
            terms: b.terms.iter().map(|(e, c)| (e + (dr - db), c * &lr)).collect(),
        };
        r = &r.scale(&lb) - &shifted;
        debug_assert!(r.degree().is_none_or(|d| d < dr));
    }
    r
}

thread_local! {
    static CYCLO_CACHE: RefCell<HashMap<u64, SparsePoly>> = RefCell::new(HashMap::new());
}

fn cyclotomic_memo(d: u64, cache: &mut HashMap<u64, SparsePoly>) -> SparsePoly {
    if let Some(hit) = cache.get(&d) {
        return hit.clone();
    }
    // x^d - 1 divided by the cyclotomic polynomials of all proper divisors.
    let mut result = SparsePoly::new([(d, BigInt::one()), (0, BigInt::from(-1))]);
    for e in proper_divisors(d) {
        let phi = cyclotomic_memo(e, cache);
        result = result
            .exact_divide(&phi)
            .expect("cyclotomic polynomials divide x^d - 1 exactly");
    }
    cache.insert(d, result.clone());
    result
}

/// Divisors of `n` strictly smaller than `n`, ascending.
fn proper_divisors(n: u64) -> Vec<u64> {
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            if i != n {
                divs.push(i);
            }
            if i != n / i && n / i != n {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

impl std::ops::Add for &SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        SparsePoly::new(
            self.terms
                .iter()
                .chain(rhs.terms.iter())
                .map(|(e, c)| (*e, c.clone())),
        )
    }
}

impl std::ops::Sub for &SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        SparsePoly::new(
            self.terms
                .iter()
                .map(|(e, c)| (*e, c.clone()))
                .chain(rhs.terms.iter().map(|(e, c)| (*e, -c))),
        )
    }
}

impl std::ops::Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        SparsePoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl std::ops::Mul for &SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        let mut acc: BTreeMap<u64, BigInt> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e = e1.checked_add(*e2).expect("exponent overflow in multiplication");
                let slot = acc.entry(e).or_insert_with(BigInt::zero);
                *slot += c1 * c2;
                if slot.is_zero() {
                    acc.remove(&e);
                }
            }
        }
        SparsePoly { terms: acc.into_iter().collect() }
    }
}

impl fmt::Display for SparsePoly {
    /// Canonical compact notation: descending exponents, no spaces, unit
    /// coefficients omitted on nonconstant terms, e.g. `x^2-1`, `-3x`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.magnitude();
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str("-")?;
            } else {
                f.write_str("+")?;
            }
            let unit = mag.is_one();
            match (*e, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{e}")?,
                (_, false) => write!(f, "{mag}x^{e}")?,
            }
        }
        Ok(())
    }
}
