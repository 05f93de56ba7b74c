//! Deterministic integer primality, prime-power decomposition and small
//! numeric helpers used throughout the crate.
//!
//! Primality below `3_317_044_064_679_887_385_961_981` (about `2^81.5`) is
//! decided by a Miller–Rabin round over thirteen fixed witness bases, which is
//! known to be exact on that range; larger inputs fall back to wheel trial
//! division, which is exact for every size but only practical when the input
//! is either composite with a modest factor or itself modest. All quantities
//! appearing in this crate's intended workloads are far below the threshold.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::Error;

/// A factored prime power `base^exponent` with `base` prime and
/// `exponent >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimePower {
    /// The prime base `p`.
    pub base: BigUint,
    /// The exponent `u >= 1`.
    pub exponent: u32,
}

impl PrimePower {
    /// Recomputes the represented integer `base^exponent`.
    pub fn value(&self) -> BigUint {
        self.base.pow(self.exponent)
    }
}

impl std::fmt::Display for PrimePower {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.exponent == 1 {
            write!(f, "{}", self.base)
        } else {
            write!(f, "{}^{}", self.base, self.exponent)
        }
    }
}

/// Sign of a nonzero integer, as `+1` or `-1`.
///
/// Zero is rejected: every caller in this crate works with coefficients that
/// are nonzero by construction, and a silent `0` would hide bugs.
pub fn sgn(z: &num_bigint::BigInt) -> Result<i8, Error> {
    match z.sign() {
        num_bigint::Sign::Plus => Ok(1),
        num_bigint::Sign::Minus => Ok(-1),
        num_bigint::Sign::NoSign => Err(Error::Precondition(
            "sgn is only defined for nonzero integers".into(),
        )),
    }
}

/// Greatest common divisor of two `u64` values; `gcd(n, 0) = n`.
pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// The largest power of two dividing `n`, e.g. `12 -> 4`, `7 -> 1`, `8 -> 8`.
///
/// # Panics
///
/// Panics if `n == 0`.
pub fn largest_even_part(n: u64) -> u64 {
    assert!(n > 0, "largest_even_part requires n >= 1");
    n & n.wrapping_neg()
}

/// Witness bases making Miller–Rabin exact below
/// `3_317_044_064_679_887_385_961_981`.
const MR_BASES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Deterministic primality for `u64` inputs.
///
/// Uses Miller–Rabin over the first twelve prime bases, which is exact on the
/// whole `u64` range.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let d = (n - 1) >> (n - 1).trailing_zeros();
    let s = (n - 1).trailing_zeros();
    'witness: for &a in &MR_BASES[..12] {
        let mut x = pow_mod_u64(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality for arbitrary-precision inputs.
///
/// Below `3_317_044_064_679_887_385_961_981` this is a proven-exact
/// Miller–Rabin round over thirteen fixed bases; at or above that bound it
/// falls back to wheel trial division, which is always correct but slow when
/// the input is a large prime.
pub fn is_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64_digits().first().copied().filter(|_| n.bits() <= 64) {
        return is_prime_u64(small);
    }
    // 13-base Miller-Rabin is exact strictly below this bound.
    let mr_bound: BigUint = "3317044064679887385961981".parse().unwrap();
    if *n < mr_bound {
        miller_rabin_biguint(n)
    } else {
        trial_division_biguint(n)
    }
}

fn miller_rabin_biguint(n: &BigUint) -> bool {
    let one = BigUint::one();
    let two = &one + &one;
    if n.is_zero() || *n == one {
        return false;
    }
    for &p in &MR_BASES {
        let p = BigUint::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().expect("n > 1");
    let d = &n_minus_1 >> s;
    'witness: for &a in &MR_BASES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn trial_division_biguint(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    let three = BigUint::from(3u32);
    if (n % &two).is_zero() {
        return *n == two;
    }
    if (n % &three).is_zero() {
        return *n == three;
    }
    let root = n.sqrt();
    let mut d = BigUint::from(5u32);
    let (step2, step4) = (BigUint::from(2u32), BigUint::from(4u32));
    while d <= root {
        if (n % &d).is_zero() {
            return false;
        }
        let d2 = &d + &step2;
        if d2 <= root && (n % &d2).is_zero() {
            return false;
        }
        d += &step2 + &step4;
    }
    true
}

/// Writes `n` as `p^u` with `p` prime and `u >= 1`, if possible.
///
/// Returns `None` when `n < 2` or when `n` has at least two distinct prime
/// divisors. The representation is unique when it exists.
pub fn prime_power_decompose(n: &BigUint) -> Option<PrimePower> {
    if n.bits() <= 64 {
        let small = n.to_u64_digits().first().copied().unwrap_or(0);
        return prime_power_decompose_u64(small)
            .map(|(p, u)| PrimePower { base: BigUint::from(p), exponent: u });
    }
    let max_u = (n.bits() - 1) as u32;
    for u in (1..=max_u.max(1)).rev() {
        let r = n.nth_root(u);
        if r.pow(u) == *n && is_prime(&r) {
            return Some(PrimePower { base: r, exponent: u });
        }
    }
    None
}

/// `u64` fast path of [`prime_power_decompose`], returning `(p, u)`.
pub fn prime_power_decompose_u64(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let max_u = 63 - n.leading_zeros();
    for u in (1..=max_u.max(1)).rev() {
        if let Some(r) = nth_root_u64(n, u) {
            if is_prime_u64(r) {
                return Some((r, u));
            }
        }
    }
    None
}

/// Exact integer `u`-th root: `Some(r)` iff `r^u == n`.
fn nth_root_u64(n: u64, u: u32) -> Option<u64> {
    if u == 1 {
        return Some(n);
    }
    let mut r = (n as f64).powf(1.0 / f64::from(u)).round() as u64;
    // Float seeding can be off by a little; walk to the exact root.
    while r > 1 && r.checked_pow(u).is_none_or(|v| v > n) {
        r -= 1;
    }
    while r.checked_pow(u).is_some_and(|v| v < n) {
        r += 1;
    }
    (r.checked_pow(u) == Some(n)).then_some(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn primality_basics() {
        assert!(is_prime(&BigUint::from(2u32)));
        assert!(!is_prime(&BigUint::from(1u32)));
        assert!(!is_prime(&BigUint::from(0u32)));
        assert!(!is_prime(&BigUint::from(27u32)));
        assert!(is_prime(&BigUint::from(97u32)));
    }

    #[test]
    fn primality_rejects_classic_pseudoprimes() {
        // Carmichael number.
        assert!(!is_prime(&BigUint::from(561u32)));
        // Strong pseudoprime to several small bases.
        assert!(!is_prime(&BigUint::from(3_215_031_751u64)));
        // Mersenne prime 2^61 - 1.
        assert!(is_prime(&BigUint::from((1u64 << 61) - 1)));
        // A 20-digit semiprime with two 10-digit factors.
        let semiprime = BigUint::from(2_147_483_647u64) * BigUint::from(2_147_483_629u64);
        assert!(!is_prime(&semiprime));
    }

    #[test]
    fn primality_u64_matches_trial_division_on_a_range() {
        let naive = |n: u64| n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
        for n in 0..5_000 {
            assert_eq!(is_prime_u64(n), naive(n), "disagreement at {n}");
        }
    }

    #[test]
    fn prime_power_examples() {
        let pp = |n: u64| prime_power_decompose(&BigUint::from(n));
        let expect = |p: u64, u: u32| Some(PrimePower { base: BigUint::from(p), exponent: u });
        assert_eq!(pp(27), expect(3, 3));
        assert_eq!(pp(16), expect(2, 4));
        assert_eq!(pp(12), None);
        assert_eq!(pp(2), expect(2, 1));
        assert_eq!(pp(1), None);
        assert_eq!(pp(0), None);
        assert_eq!(pp(97), expect(97, 1));
        assert_eq!(pp(1024), expect(2, 10));
        assert_eq!(pp(36), None);
    }

    #[test]
    fn prime_power_round_trip_small_bases() {
        for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
            73, 79, 83, 89, 97]
        {
            for u in 1..=20u32 {
                let n = BigUint::from(p).pow(u);
                let got = prime_power_decompose(&n).expect("prime power must decompose");
                assert_eq!(got.base, BigUint::from(p));
                assert_eq!(got.exponent, u);
                assert_eq!(got.value(), n);
            }
        }
    }

    #[test]
    fn prime_power_decomposition_matches_factor_counting() {
        // Exhaustively compare against naive factor counting: n is a prime
        // power exactly when it has a single distinct prime factor.
        let distinct_primes = |mut n: u64| {
            let mut count = 0;
            let mut d = 2;
            while d * d <= n {
                if n % d == 0 {
                    count += 1;
                    while n % d == 0 {
                        n /= d;
                    }
                }
                d += 1;
            }
            if n > 1 {
                count += 1;
            }
            count
        };
        for n in 0..=1_000_000u64 {
            let got = prime_power_decompose_u64(n);
            match got {
                Some((p, u)) => {
                    assert!(is_prime_u64(p));
                    assert!(u >= 1);
                    assert_eq!(p.checked_pow(u), Some(n));
                }
                None => assert!(n < 2 || distinct_primes(n) >= 2, "missed prime power {n}"),
            }
        }
    }

    #[test]
    fn largest_even_part_examples() {
        assert_eq!(largest_even_part(12), 4);
        assert_eq!(largest_even_part(7), 1);
        assert_eq!(largest_even_part(8), 8);
        assert_eq!(largest_even_part(1), 1);
        assert_eq!(largest_even_part(96), 32);
    }

    #[test]
    fn sign_examples() {
        assert_eq!(sgn(&BigInt::from(5)), Ok(1));
        assert_eq!(sgn(&BigInt::from(-16)), Ok(-1));
        assert!(sgn(&BigInt::from(0)).is_err());
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd_u64(15, 9), 3);
        assert_eq!(gcd_u64(7, 0), 7);
        assert_eq!(gcd_u64(0, 7), 7);
        assert_eq!(gcd_u64(5, 2), 1);
        assert_eq!(gcd_u64(0, 0), 0);
    }
}
