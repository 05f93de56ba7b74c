//! Brute-force ground truth: complete factorization over the integers.
//!
//! The engine is Kronecker interpolation: a degree-`d` divisor `g` of `f`
//! satisfies `g(t) | f(t)` at every integer node `t`, so enumerating divisor
//! tuples of `(f(t_0), …, f(t_d))` and interpolating covers every candidate
//! factor. The search is exhaustive, which makes the result a certificate:
//! when no divisor of degree `<= deg(f)/2` survives, `f` is irreducible.
//!
//! Practical shape of the implementation:
//!
//! * rational roots are stripped first, so node values are never zero and
//!   linear factors never enter the interpolation search;
//! * candidates are built in Newton form, and each partial divided
//!   difference must be an integer — a non-exact division prunes the whole
//!   subtree (divided differences of an integer polynomial at integer nodes
//!   are integers);
//! * the last interpolation level enumerates divisors of the leading
//!   coefficient instead of divisors of a node value (the leading Newton
//!   coefficient of a factor is its leading coefficient, which divides
//!   `lc(f)`), and derives the forced node value by linearity;
//! * interpolation nodes are chosen among `0, ±1, …, ±7` by fewest divisors,
//!   and two spare nodes give a cheap divisibility screen before any exact
//!   trial division;
//! * arithmetic runs in `i128` with overflow checks and falls back to
//!   arbitrary precision when anything overflows or a node value resists
//!   machine-word factoring.
//!
//! Nothing here consults the closed-form criteria of the other modules; this
//! module is the independent witness they are tested against.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::int_arith::is_prime;
use crate::poly::SparsePoly;
use crate::Error;

/// Degree cap that keeps full factorization interactive on one core.
pub const RECOMMENDED_DEGREE_CAP: u64 = 14;

/// Hard engine limit: the node pool supports degrees up to twice its size
/// minus two, and the search cost explodes long before that anyway.
const ENGINE_DEGREE_LIMIT: u64 = 28;

/// A complete factorization `f = content · Π factor_i ^ multiplicity_i`
/// with primitive irreducible factors of positive leading coefficient,
/// sorted by degree and then by coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub content: BigInt,
    pub factors: Vec<(SparsePoly, u32)>,
}

impl Factorization {
    /// Multiplies the factorization back out.
    pub fn expand(&self) -> SparsePoly {
        let mut acc = SparsePoly::constant(self.content.clone());
        for (g, mult) in &self.factors {
            for _ in 0..*mult {
                acc = &acc * g;
            }
        }
        acc
    }
}

/// Fully factors `f` over the integers.
///
/// # Errors
///
/// Rejects the zero polynomial, and degrees above `degree_cap` (or above the
/// engine's own hard limit): exhaustive interpolation is exponential, and the
/// cap is the caller's promise that this is affordable. See
/// [`RECOMMENDED_DEGREE_CAP`].
pub fn factorize(f: &SparsePoly, degree_cap: u64) -> Result<Factorization, Error> {
    let deg = f.degree().ok_or(Error::ZeroPolynomial)?;
    let cap = degree_cap.min(ENGINE_DEGREE_LIMIT);
    if deg > cap {
        return Err(Error::DegreeCapExceeded { degree: deg, cap });
    }
    let (content, prim) = f.content_primitive();
    let shift = prim.lowest_exponent().expect("nonzero polynomial");
    let mut factors: Vec<(SparsePoly, u32)> = Vec::new();
    if shift > 0 {
        let mult = u32::try_from(shift).expect("degree cap keeps exponents small");
        factors.push((SparsePoly::monomial(BigInt::one(), 1), mult));
    }
    let core = SparsePoly::new(prim.terms().iter().map(|(e, c)| (e - shift, c.clone())));
    if core.degree() == Some(0) {
        debug_assert!(core.is_one(), "primitive part with positive lead");
    } else {
        let dense_big: Vec<BigInt> = core.to_dense();
        let raw: Vec<Vec<BigInt>> = match dense_to_i128(&dense_big) {
            Some(small) => match kronecker(small) {
                Ok(fs) => fs
                    .into_iter()
                    .map(|g| g.into_iter().map(BigInt::from).collect())
                    .collect(),
                Err(Overflow) => {
                    kronecker(dense_big).expect("bignum arithmetic cannot overflow")
                }
            },
            None => kronecker(dense_big).expect("bignum arithmetic cannot overflow"),
        };
        let mut merged: BTreeMap<Vec<BigInt>, u32> = BTreeMap::new();
        for g in raw {
            *merged.entry(g).or_insert(0) += 1;
        }
        for (g, mult) in merged {
            factors.push((SparsePoly::from_dense(&g), mult));
        }
    }
    factors.sort_by(|(a, _), (b, _)| a.cmp_canonical(b));
    let result = Factorization { content, factors };
    assert_eq!(
        result.expand(),
        *f,
        "factorization self-check failed; this is a bug"
    );
    Ok(result)
}

/// Whether `f` is irreducible over the integers (up to sign): a single
/// factor of multiplicity one and unit content.
pub fn is_irreducible(f: &SparsePoly, degree_cap: u64) -> Result<bool, Error> {
    let fact = factorize(f, degree_cap)?;
    Ok(fact.content.magnitude().is_one() && fact.factors.len() == 1 && fact.factors[0].1 == 1)
}

/// Internal cap for [`cyclotomic_factor_list`]: candidate orders grow
/// quadratically with the degree, so very large degrees are rejected rather
/// than silently scanned forever.
const CYCLO_DEGREE_CAP: u64 = 64;

/// All cyclotomic factors of `f` as `(order, multiplicity)` pairs, ascending
/// by order.
///
/// Candidate orders are the `d` with `φ(d) <= deg f` (and `d <= 2·deg² + 1`,
/// which `φ(d) >= sqrt(d/2)` forces); the divisibility test folds exponents
/// modulo `d` — reduction modulo `x^d - 1` — before any division, so it is
/// cheap even for very sparse polynomials.
///
/// # Errors
///
/// Rejects the zero polynomial, a zero constant term (strip the power of `x`
/// first), and degrees above an internal cap.
pub fn cyclotomic_factor_list(f: &SparsePoly) -> Result<Vec<(u64, u32)>, Error> {
    let deg = f.degree().ok_or(Error::ZeroPolynomial)?;
    if f.lowest_exponent() != Some(0) {
        return Err(Error::ZeroConstantTerm);
    }
    if deg > CYCLO_DEGREE_CAP {
        return Err(Error::DegreeCapExceeded { degree: deg, cap: CYCLO_DEGREE_CAP });
    }
    if deg == 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for d in 1..=(2 * deg * deg + 1) {
        if euler_phi(d) > deg {
            continue;
        }
        let phi = SparsePoly::cyclotomic(d);
        let folded = SparsePoly::new(f.terms().iter().map(|(e, c)| (e % d, c.clone())));
        let divides = folded.is_zero() || folded.exact_divide(&phi).is_some();
        if !divides {
            continue;
        }
        let mut mult = 0u32;
        let mut rest = f.clone();
        while let Some(q) = rest.exact_divide(&phi) {
            rest = q;
            mult += 1;
        }
        debug_assert!(mult >= 1, "the folded prefilter admits only true divisors");
        out.push((d, mult));
    }
    Ok(out)
}

fn euler_phi(mut n: u64) -> u64 {
    let mut phi = 1u64;
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut pk = 1;
            n /= d;
            while n % d == 0 {
                pk *= d;
                n /= d;
            }
            phi *= pk * (d - 1);
        }
        d += 1;
    }
    if n > 1 {
        phi *= n - 1;
    }
    phi
}

/// Cap on the Sylvester matrix size used by [`resultant`].
const RESULTANT_SIZE_CAP: u64 = 512;

/// Exact resultant of nonzero `f` and `g`: the determinant of their
/// Sylvester matrix, by fraction-free (Bareiss) elimination.
///
/// With `f` of degree `n` and `g` of degree `m` this satisfies
/// `res(f, g) = lc(f)^m · Π g(α)` over the roots `α` of `f`, so e.g.
/// `res(x - c, g) = g(c)`. A constant `f = c` gives `c^m`.
pub fn resultant(f: &SparsePoly, g: &SparsePoly) -> Result<BigInt, Error> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)? as usize;
    let m = g.degree().ok_or(Error::ZeroPolynomial)? as usize;
    if (n + m) as u64 > RESULTANT_SIZE_CAP {
        return Err(Error::DegreeCapExceeded {
            degree: (n + m) as u64,
            cap: RESULTANT_SIZE_CAP,
        });
    }
    if n == 0 {
        return Ok(f.constant_term().pow(m as u32));
    }
    if m == 0 {
        return Ok(g.constant_term().pow(n as u32));
    }
    let fc = f.to_dense();
    let gc = g.to_dense();
    let size = n + m;
    let mut mat = vec![vec![BigInt::zero(); size]; size];
    for (row, matrow) in mat.iter_mut().enumerate().take(m) {
        for (i, c) in fc.iter().rev().enumerate() {
            matrow[row + i] = c.clone();
        }
    }
    for row in 0..n {
        for (i, c) in gc.iter().rev().enumerate() {
            mat[m + row][row + i] = c.clone();
        }
    }
    Ok(bareiss_determinant(mat))
}

/// Exact determinant by Bareiss fraction-free elimination; every internal
/// division is exact for integer matrices.
fn bareiss_determinant(mut mat: Vec<Vec<BigInt>>) -> BigInt {
    let n = mat.len();
    let mut sign = 1i8;
    let mut prev_pivot = BigInt::one();
    for k in 0..n {
        if mat[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !mat[r][k].is_zero()) else {
                return BigInt::zero();
            };
            mat.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &mat[i][j] * &mat[k][k] - &mat[i][k] * &mat[k][j];
                let (q, r) = num.div_rem(&prev_pivot);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                mat[i][j] = q;
            }
            mat[i][k] = BigInt::zero();
        }
        prev_pivot = mat[k][k].clone();
    }
    let det = mat[n - 1][n - 1].clone();
    if sign < 0 { -det } else { det }
}

/// Discriminant via the resultant: `(-1)^{n(n-1)/2} · res(f, f') / lc(f)`.
///
/// # Errors
///
/// Rejects zero and constant polynomials (and inherits the resultant's size
/// cap).
pub fn discriminant(f: &SparsePoly) -> Result<BigInt, Error> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let res = resultant(f, &f.derivative())?;
    let lc = f.leading_coeff().expect("nonzero polynomial");
    let (q, r) = res.div_rem(lc);
    debug_assert!(r.is_zero(), "lc(f) divides res(f, f')");
    Ok(if matches!(n % 4, 2 | 3) { -q } else { q })
}

// ---------------------------------------------------------------------------
// The generic Kronecker engine.
// ---------------------------------------------------------------------------

/// Marker for an `i128` overflow, or a node value too hard to factor in
/// machine words; the caller retries in arbitrary precision.
#[derive(Debug)]
struct Overflow;

type EngineResult<T> = Result<T, Overflow>;

/// Coefficient arithmetic the engine needs, implemented for `i128` (checked,
/// may bail out) and `BigInt` (never bails).
trait Coeff: Clone + Ord + std::fmt::Debug {
    fn is_nil(&self) -> bool;
    fn is_neg(&self) -> bool;
    fn neg_of(&self) -> Self;
    fn add_chk(&self, other: &Self) -> EngineResult<Self>;
    fn sub_chk(&self, other: &Self) -> EngineResult<Self>;
    fn mul_chk(&self, other: &Self) -> EngineResult<Self>;
    /// `Some(q)` iff `other != 0` divides `self` exactly.
    fn exact_div(&self, other: &Self) -> EngineResult<Option<Self>>;
    /// Whether `self != 0` and `self` divides `other`.
    fn divides_into(&self, other: &Self) -> EngineResult<bool>;
    fn gcd_with(&self, other: &Self) -> Self;
    fn from_i64(v: i64) -> Self;
    /// Positive divisors of `|self|` (`self != 0`), ascending; `Err` when
    /// the value cannot be factored within machine-word effort.
    fn positive_divisors(&self) -> EngineResult<Vec<Self>>;
}

impl Coeff for i128 {
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn is_neg(&self) -> bool {
        *self < 0
    }
    fn neg_of(&self) -> Self {
        -*self
    }
    fn add_chk(&self, other: &Self) -> EngineResult<Self> {
        self.checked_add(*other).ok_or(Overflow)
    }
    fn sub_chk(&self, other: &Self) -> EngineResult<Self> {
        self.checked_sub(*other).ok_or(Overflow)
    }
    fn mul_chk(&self, other: &Self) -> EngineResult<Self> {
        self.checked_mul(*other).ok_or(Overflow)
    }
    fn exact_div(&self, other: &Self) -> EngineResult<Option<Self>> {
        if *other == 0 {
            return Ok(None);
        }
        // checked_rem/checked_div fail only on MIN / -1, a genuine overflow.
        let r = self.checked_rem(*other).ok_or(Overflow)?;
        if r != 0 {
            return Ok(None);
        }
        Ok(Some(self.checked_div(*other).ok_or(Overflow)?))
    }
    fn divides_into(&self, other: &Self) -> EngineResult<bool> {
        if *self == 0 {
            return Ok(false);
        }
        Ok(other.checked_rem(*self).ok_or(Overflow)? == 0)
    }
    fn gcd_with(&self, other: &Self) -> Self {
        self.gcd(other)
    }
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn positive_divisors(&self) -> EngineResult<Vec<Self>> {
        divisors_u128(self.unsigned_abs()).map(|ds| {
            let mut out: Vec<i128> = ds.into_iter().map(|d| d as i128).collect();
            out.sort_unstable();
            out
        })
    }
}

impl Coeff for BigInt {
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_neg(&self) -> bool {
        Signed::is_negative(self)
    }
    fn neg_of(&self) -> Self {
        -self
    }
    fn add_chk(&self, other: &Self) -> EngineResult<Self> {
        Ok(self + other)
    }
    fn sub_chk(&self, other: &Self) -> EngineResult<Self> {
        Ok(self - other)
    }
    fn mul_chk(&self, other: &Self) -> EngineResult<Self> {
        Ok(self * other)
    }
    fn exact_div(&self, other: &Self) -> EngineResult<Option<Self>> {
        if Zero::is_zero(other) {
            return Ok(None);
        }
        let (q, r) = self.div_rem(other);
        Ok(Zero::is_zero(&r).then_some(q))
    }
    fn divides_into(&self, other: &Self) -> EngineResult<bool> {
        if Zero::is_zero(self) {
            return Ok(false);
        }
        Ok(Zero::is_zero(&(other % self)))
    }
    fn gcd_with(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn positive_divisors(&self) -> EngineResult<Vec<Self>> {
        let mut out: Vec<BigInt> = divisors_biguint(self.magnitude())
            .into_iter()
            .map(BigInt::from)
            .collect();
        out.sort_unstable();
        Ok(out)
    }
}

fn dense_to_i128(coeffs: &[BigInt]) -> Option<Vec<i128>> {
    coeffs.iter().map(|c| c.to_i128()).collect()
}

/// Factors a primitive dense polynomial (positive leading coefficient,
/// nonzero constant term, degree >= 1) into irreducible dense factors with
/// positive leading coefficients, repeated by multiplicity, unordered.
fn kronecker<N: Coeff>(mut f: Vec<N>) -> EngineResult<Vec<Vec<N>>> {
    debug_assert!(f.len() >= 2);
    debug_assert!(!f[0].is_nil() && !f.last().unwrap().is_nil());
    let one = N::from_i64(1);
    let mut factors: Vec<Vec<N>> = Vec::new();

    // Phase 1: rational roots, i.e. all linear factors. A root of any
    // cofactor is a root of f itself, so no later quotient can acquire a
    // linear factor once this loop finishes.
    'roots: loop {
        if f.len() == 2 {
            break;
        }
        let consts = f[0].positive_divisors()?;
        let leads = f.last().unwrap().positive_divisors()?;
        for s in &consts {
            for t in &leads {
                if s.gcd_with(t) != one {
                    continue;
                }
                for negate in [false, true] {
                    let s_signed = if negate { s.neg_of() } else { s.clone() };
                    if eval_homogeneous(&f, &s_signed, t)?.is_nil() {
                        // The rational root s/t yields the factor t·x - s.
                        let lin = vec![s_signed.neg_of(), t.clone()];
                        f = exact_poly_div(&f, &lin)?
                            .expect("a verified rational root divides");
                        factors.push(lin);
                        continue 'roots;
                    }
                }
            }
        }
        break;
    }

    if f.len() == 2 {
        factors.push(f);
        return Ok(factors);
    }

    // Phase 2: interpolation search, smallest candidate degree first. A
    // factor found at degree d is irreducible because every smaller degree
    // was already exhausted against a multiple of the current polynomial.
    let mut d = 2usize;
    let mut nodes = build_nodes(&f, (f.len() - 1) / 2 + 3)?;
    while 2 * d <= f.len() - 1 {
        match find_factor_of_degree(&f, d, &nodes)? {
            Some(g) => {
                f = exact_poly_div(&f, &g)?.expect("a verified factor divides");
                factors.push(g);
                if 2 * d <= f.len() - 1 {
                    nodes = build_nodes(&f, (f.len() - 1) / 2 + 3)?;
                }
            }
            None => d += 1,
        }
    }
    if f.len() >= 2 {
        factors.push(f);
    }
    Ok(factors)
}

/// One interpolation node: the point, the value `f(t) != 0`, and the
/// positive divisors of `|f(t)|`.
struct Node<N> {
    t: i64,
    value: N,
    divisors: Vec<N>,
}

/// Evaluates and factors `f` at `count` nodes drawn from `0, ±1, ±2, …`,
/// then sorts by fewest divisors (ties toward small `|t|`): few divisors
/// mean a narrow search level.
fn build_nodes<N: Coeff>(f: &[N], count: usize) -> EngineResult<Vec<Node<N>>> {
    const POOL: [i64; 15] = [0, 1, -1, 2, -2, 3, -3, 4, -4, 5, -5, 6, -6, 7, -7];
    let mut nodes = Vec::with_capacity(count.min(POOL.len()));
    for &t in POOL.iter().take(count.min(POOL.len())) {
        let value = horner(f, t)?;
        assert!(!value.is_nil(), "rational roots were stripped beforehand");
        let divisors = value.positive_divisors()?;
        nodes.push(Node { t, value, divisors });
    }
    nodes.sort_by(|a, b| {
        a.divisors
            .len()
            .cmp(&b.divisors.len())
            .then(a.t.unsigned_abs().cmp(&b.t.unsigned_abs()))
    });
    Ok(nodes)
}

fn horner<N: Coeff>(f: &[N], t: i64) -> EngineResult<N> {
    let tt = N::from_i64(t);
    let mut acc = N::from_i64(0);
    for c in f.iter().rev() {
        acc = acc.mul_chk(&tt)?.add_chk(c)?;
    }
    Ok(acc)
}

/// Evaluates `t^deg(f) · f(s/t)`, the homogeneous form whose vanishing
/// detects the rational root `s/t`.
fn eval_homogeneous<N: Coeff>(f: &[N], s: &N, t: &N) -> EngineResult<N> {
    let n = f.len() - 1;
    let mut acc = f[n].clone();
    let mut tpow = N::from_i64(1);
    for i in (0..n).rev() {
        tpow = tpow.mul_chk(t)?;
        acc = acc.mul_chk(s)?.add_chk(&f[i].mul_chk(&tpow)?)?;
    }
    Ok(acc)
}

/// Dense exact division; `Ok(None)` when `g` does not divide `f`.
fn exact_poly_div<N: Coeff>(f: &[N], g: &[N]) -> EngineResult<Option<Vec<N>>> {
    let dg = g.len() - 1;
    let lg = g.last().expect("nonzero divisor");
    if f.len() - 1 < dg {
        return Ok(None);
    }
    let dq = f.len() - 1 - dg;
    let mut rem: Vec<N> = f.to_vec();
    let mut quot: Vec<N> = vec![N::from_i64(0); dq + 1];
    for k in (0..=dq).rev() {
        let Some(q) = rem[k + dg].exact_div(lg)? else {
            return Ok(None);
        };
        if !q.is_nil() {
            for (i, gc) in g.iter().enumerate() {
                rem[k + i] = rem[k + i].sub_chk(&q.mul_chk(gc)?)?;
            }
        }
        quot[k] = q;
    }
    if rem.iter().all(N::is_nil) {
        Ok(Some(quot))
    } else {
        Ok(None)
    }
}

/// Searches for one degree-`d` factor of `f`; all factors of smaller degree
/// have already been removed. Returns it with positive leading coefficient.
fn find_factor_of_degree<N: Coeff>(
    f: &[N],
    d: usize,
    nodes: &[Node<N>],
) -> EngineResult<Option<Vec<N>>> {
    debug_assert!(d >= 2 && nodes.len() >= d + 1);
    let mut lc_divs: Vec<N> = f.last().unwrap().positive_divisors()?;
    let negs: Vec<N> = lc_divs.iter().map(N::neg_of).collect();
    lc_divs.extend(negs);
    let search = Search {
        f,
        d,
        interp: &nodes[..=d],
        checks: &nodes[d + 1..],
        lc_divs: &lc_divs,
    };
    let mut rows: Vec<Vec<N>> = Vec::with_capacity(d);
    search.level(0, &mut rows)
}

struct Search<'a, N> {
    f: &'a [N],
    d: usize,
    /// Interpolation nodes, fewest divisors first. The last one is consumed
    /// by the leading-coefficient level, so only its value matters there.
    interp: &'a [Node<N>],
    /// Spare nodes for the pre-division divisibility screen.
    checks: &'a [Node<N>],
    /// `±(positive divisors of lc(f))`: every possible leading coefficient
    /// of a factor.
    lc_divs: &'a [N],
}

impl<N: Coeff> Search<'_, N> {
    /// Depth-first over candidate values `g(t_k)` in Newton form.
    /// `rows[k][j]` is the `j`-th divided difference ending at node `k`;
    /// the Newton coefficients are the diagonal `rows[k][k]`.
    fn level(&self, k: usize, rows: &mut Vec<Vec<N>>) -> EngineResult<Option<Vec<N>>> {
        if k == self.d {
            return self.final_level(rows);
        }
        for idx in 0..self.interp[k].divisors.len() {
            for negate in [false, true] {
                // g and -g interpolate negated tuples, so fixing g(t_0) > 0
                // halves the search without losing either orientation.
                if k == 0 && negate {
                    continue;
                }
                let delta = {
                    let dv = &self.interp[k].divisors[idx];
                    if negate { dv.neg_of() } else { dv.clone() }
                };
                if let Some(row) = self.new_row(k, rows, delta)? {
                    rows.push(row);
                    let found = self.level(k + 1, rows)?;
                    rows.pop();
                    if found.is_some() {
                        return Ok(found);
                    }
                }
            }
        }
        Ok(None)
    }

    /// Extends the divided-difference table with a value at node `k`;
    /// `None` when some difference is non-integral, which no integer
    /// polynomial can produce.
    fn new_row(&self, k: usize, rows: &[Vec<N>], delta: N) -> EngineResult<Option<Vec<N>>> {
        let mut row = Vec::with_capacity(k + 1);
        row.push(delta);
        for j in 1..=k {
            let num = row[j - 1].sub_chk(&rows[k - 1][j - 1])?;
            let den = N::from_i64(self.interp[k].t - self.interp[k - j].t);
            match num.exact_div(&den)? {
                Some(q) => row.push(q),
                None => return Ok(None),
            }
        }
        Ok(Some(row))
    }

    /// Last level: instead of enumerating divisors of the node value,
    /// enumerate the candidate's leading coefficient `L` (a divisor of
    /// `lc(f)`), derive the forced value at the last node, and check that
    /// it divides there. The Newton coefficients are then `diag ++ [L]`.
    fn final_level(&self, rows: &[Vec<N>]) -> EngineResult<Option<Vec<N>>> {
        let d = self.d;
        let node = &self.interp[d];
        let diag: Vec<N> = (0..d).map(|k| rows[k][k].clone()).collect();
        // Value at t_d of the degree-(d-1) interpolant through the first d
        // nodes, by nested (Horner-style) Newton evaluation.
        let mut base = diag[d - 1].clone();
        for j in (0..d - 1).rev() {
            let den = N::from_i64(node.t - self.interp[j].t);
            base = base.mul_chk(&den)?.add_chk(&diag[j])?;
        }
        // Π (t_d - t_i): the coefficient of L in the value at t_d.
        let mut prod = N::from_i64(1);
        for nd in &self.interp[..d] {
            prod = prod.mul_chk(&N::from_i64(node.t - nd.t))?;
        }
        let one = N::from_i64(1);
        for lead in self.lc_divs {
            let delta_d = base.add_chk(&lead.mul_chk(&prod)?)?;
            if !delta_d.divides_into(&node.value)? {
                continue;
            }
            // Expand from Newton form:
            // g = (…(L·(x - t_{d-1}) + c_{d-1})…)·(x - t_0) + c_0.
            let mut g: Vec<N> = vec![lead.clone()];
            for j in (0..d).rev() {
                let t_j = N::from_i64(self.interp[j].t);
                let mut next = vec![N::from_i64(0); g.len() + 1];
                for (i, c) in g.iter().enumerate() {
                    next[i + 1] = next[i + 1].add_chk(c)?;
                    next[i] = next[i].sub_chk(&c.mul_chk(&t_j)?)?;
                }
                next[0] = next[0].add_chk(&diag[j])?;
                g = next;
            }
            debug_assert_eq!(g.len(), d + 1);
            // A factor of a primitive polynomial is primitive.
            let mut content = N::from_i64(0);
            for c in &g {
                content = content.gcd_with(c);
            }
            if content != one {
                continue;
            }
            // Cheap screen at the spare nodes before real division.
            let mut plausible = true;
            for chk in self.checks.iter().take(2) {
                let gv = horner(&g, chk.t)?;
                if !gv.divides_into(&chk.value)? {
                    plausible = false;
                    break;
                }
            }
            if !plausible {
                continue;
            }
            if exact_poly_div(self.f, &g)?.is_some() {
                if g.last().unwrap().is_neg() {
                    for c in &mut g {
                        *c = c.neg_of();
                    }
                }
                return Ok(Some(g));
            }
        }
        Ok(None)
    }
}

// ---------------------------------------------------------------------------
// Integer factorization of node values.
// ---------------------------------------------------------------------------

/// Smallest-prime-factor table for values below 2^16.
fn spf_table() -> &'static [u16] {
    static TABLE: OnceLock<Vec<u16>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let n = 1usize << 16;
        let mut spf = vec![0u16; n];
        for i in 2..n {
            if spf[i] == 0 {
                for j in (i..n).step_by(i) {
                    if spf[j] == 0 {
                        spf[j] = i as u16;
                    }
                }
            }
        }
        spf
    })
}

/// Positive divisors of `v > 0`, unsorted; `Err(Overflow)` when `v` resists
/// machine-word factoring (a leftover cofactor beyond `10^14` could hide two
/// large primes).
fn divisors_u128(v: u128) -> EngineResult<Vec<u128>> {
    debug_assert!(v > 0);
    let mut prime_powers: Vec<(u128, u32)> = Vec::new();
    let mut rest = v;
    if rest < (1 << 16) {
        let spf = spf_table();
        while rest > 1 {
            let p = spf[rest as usize] as u128;
            let mut e = 0;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            prime_powers.push((p, e));
        }
    } else {
        const TRIAL_CAP: u128 = 10_000_000;
        for p in [2u128, 3] {
            if rest % p == 0 {
                let mut e = 0;
                while rest % p == 0 {
                    rest /= p;
                    e += 1;
                }
                prime_powers.push((p, e));
            }
        }
        let mut p = 5u128;
        while p * p <= rest && p <= TRIAL_CAP {
            for q in [p, p + 2] {
                if rest % q == 0 {
                    let mut e = 0;
                    while rest % q == 0 {
                        rest /= q;
                        e += 1;
                    }
                    prime_powers.push((q, e));
                }
            }
            p += 6;
        }
        if rest > 1 {
            if rest <= TRIAL_CAP * TRIAL_CAP {
                // No prime up to 10^7 divides it, so it is prime itself.
                prime_powers.push((rest, 1));
            } else {
                return Err(Overflow);
            }
        }
    }
    Ok(expand_divisors(&prime_powers))
}

fn expand_divisors<T>(prime_powers: &[(T, u32)]) -> Vec<T>
where
    T: Clone + std::ops::Mul<Output = T> + One,
{
    let mut out = vec![T::one()];
    for (p, e) in prime_powers {
        let base = out.clone();
        let mut pk = T::one();
        for _ in 0..*e {
            pk = pk * p.clone();
            out.extend(base.iter().map(|d| d.clone() * pk.clone()));
        }
    }
    out
}

/// Positive divisors of `v > 0` in arbitrary precision: trial division plus
/// Pollard rho with deterministic primality testing. Never gives up.
fn divisors_biguint(v: &BigUint) -> Vec<BigUint> {
    debug_assert!(!v.is_zero());
    let mut prime_powers: BTreeMap<BigUint, u32> = BTreeMap::new();
    let mut stack = vec![v.clone()];
    while let Some(mut n) = stack.pop() {
        if n.is_one() {
            continue;
        }
        if let Some(small) = n.to_u64() {
            for (p, e) in factor_u64(small) {
                *prime_powers.entry(BigUint::from(p)).or_insert(0) += e;
            }
            continue;
        }
        for p in [2u32, 3, 5, 7, 11, 13] {
            let pb = BigUint::from(p);
            while (&n % &pb).is_zero() {
                *prime_powers.entry(pb.clone()).or_insert(0) += 1;
                n = &n / &pb;
            }
        }
        if n.is_one() {
            continue;
        }
        if is_prime(&n) {
            *prime_powers.entry(n).or_insert(0) += 1;
            continue;
        }
        let d = pollard_rho(&n);
        stack.push(&n / &d);
        stack.push(d);
    }
    let pairs: Vec<(BigUint, u32)> = prime_powers.into_iter().collect();
    expand_divisors(&pairs)
}

fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Pollard's rho on a composite input; retries with increasing polynomial
/// offsets until a proper factor splits off.
fn pollard_rho(n: &BigUint) -> BigUint {
    debug_assert!(!is_prime(n) && !n.is_one() && !n.is_zero());
    let one = BigUint::one();
    let two = &one + &one;
    if (n % &two).is_zero() {
        return two;
    }
    for c in 1u64.. {
        let cc = BigUint::from(c);
        let mut x = BigUint::from(2u32);
        let mut y = x.clone();
        loop {
            x = (&x * &x + &cc) % n;
            y = (&y * &y + &cc) % n;
            y = (&y * &y + &cc) % n;
            if x == y {
                break; // cycle closed without a factor; try the next offset
            }
            let diff = if x > y { &x - &y } else { &y - &x };
            let g = diff.gcd(n);
            if g > one && g < *n {
                return g;
            }
        }
    }
    unreachable!("some offset always splits a composite")
}
