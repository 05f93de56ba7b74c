//! Exhaustive counterexample hunt for the strict-dominance irreducibility
//! claim at a fixed lowest exponent.
//!
//! For degrees 1, 2 and 3 of the lowest exponent the strict dominance of
//! the prime-power constant term is a proved irreducibility criterion; for
//! larger prime lowest exponents it is an open question, and for composite
//! lowest exponents it is simply false (`x^8 + x^6 + x^4 + 4` is a strict
//! instance with lowest exponent 4 that factors). This command enumerates
//! every strict instance with prime lowest exponent `q` inside the given
//! bounds, runs each through the exhaustive factorization engine, and
//! reports any reducible instance found.
//!
//! Instances related by the substitutions `f(x) → -f(x)` and
//! `f(x) → ±f(-x)` factor identically and satisfy the membership and
//! dominance conditions together, so only one representative per such
//! four-element orbit is sent to the engine (all four still count as
//! `tested`).

use crate::commands::{Outcome, EXIT_OK};
use lacunary::int_arith::is_prime_u64;
use lacunary::{criteria, oracle, BigInt, SparsePoly};
use rayon::prelude::*;
use serde_json::json;
use std::time::Instant;

pub struct ScanParams {
    pub q: u64,
    pub max_degree: u64,
    pub coeff_bound: u64,
    pub pp_bound: u64,
}

/// Hard ceiling on enumerated candidate instances, to keep accidental
/// parameter blowups from running for hours.
const CANDIDATE_CAP: u128 = 200_000_000;

#[derive(Default)]
struct Tally {
    tested: u64,
    oracle_calls: u64,
    counterexamples: Vec<String>,
}

impl Tally {
    fn merge(mut self, mut other: Tally) -> Tally {
        self.tested += other.tested;
        self.oracle_calls += other.oracle_calls;
        self.counterexamples.append(&mut other.counterexamples);
        self
    }
}

pub fn scan(params: &ScanParams) -> Outcome {
    let ScanParams { q, max_degree, coeff_bound, pp_bound } = *params;
    if q < 2 {
        return Outcome::input_error("--q must be at least 2");
    }
    if !is_prime_u64(q) {
        return Outcome::input_error(format!(
            "--q must be prime: for composite lowest exponents strict dominance does not \
             imply irreducibility (x^8 + x^6 + x^4 + 4 has lowest exponent 4, constant \
             2^2 strictly exceeding its tail sum 3, and factors), so a scan over q = {q} \
             would answer no open question"
        ));
    }
    if max_degree < q {
        return Outcome::input_error(format!(
            "--max-degree must be at least q = {q} so that instances exist"
        ));
    }
    if max_degree > 28 {
        return Outcome::input_error("--max-degree above 28 exceeds the factorization engine");
    }
    if coeff_bound == 0 || coeff_bound > 1000 {
        return Outcome::input_error("--coeff-bound must be between 1 and 1000");
    }
    if pp_bound < 4 || pp_bound > 1_000_000_000 {
        return Outcome::input_error(
            "--pp-bound must be between 4 (the smallest admissible constant) and 10^9",
        );
    }

    let prime_powers = admissible_prime_powers(q, pp_bound);
    if prime_powers.is_empty() {
        return Outcome::input_error(format!(
            "no admissible constant terms: no prime power p^u with u >= 2 and u not a \
             multiple of {q} lies below {pp_bound}"
        ));
    }
    let positions: Vec<u64> = (q + 1..=max_degree).collect();
    if let Err(estimate) = within_candidate_cap(positions.len() as u32, coeff_bound, prime_powers.len()) {
        return Outcome::input_error(format!(
            "the requested bounds enumerate about {estimate} candidate instances \
             (cap {CANDIDATE_CAP}); shrink --max-degree or --coeff-bound"
        ));
    }

    let start = Instant::now();
    let masks: Vec<u64> = (0..(1u64 << positions.len())).collect();
    let tally = masks
        .par_iter()
        .map(|&mask| scan_exponent_subset(q, max_degree, coeff_bound, &prime_powers, &positions, mask))
        .reduce(Tally::default, Tally::merge);

    let mut counterexamples = tally.counterexamples;
    counterexamples.sort();
    let report = json!({
        "q": q,
        "max_degree": max_degree,
        "coeff_bound": coeff_bound,
        "pp_bound": pp_bound,
        "tested": tally.tested,
        "oracle_calls": tally.oracle_calls,
        "counterexamples": counterexamples,
        "elapsed_ms": start.elapsed().as_millis() as u64,
    });
    Outcome { report, exit: EXIT_OK }
}

/// Prime powers `p^u <= pp_bound` with `u >= 2` and `u` not a multiple of
/// `q`, as `(p, u, p^u)` triples.
fn admissible_prime_powers(q: u64, pp_bound: u64) -> Vec<(u64, u32, u64)> {
    let mut out = Vec::new();
    for p in 2..=pp_bound.isqrt() {
        if !is_prime_u64(p) {
            continue;
        }
        let mut value = p * p;
        let mut u = 2u32;
        while value <= pp_bound {
            if u64::from(u) % q != 0 {
                out.push((p, u, value));
            }
            match value.checked_mul(p) {
                Some(next) => {
                    value = next;
                    u += 1;
                }
                None => break,
            }
        }
    }
    out.sort_by_key(|&(_, _, value)| value);
    out
}

/// Candidate count: for each of the `2^positions` exponent subsets of size
/// `k`, the odometer visits `(2B)^(k+1)` sign-coefficient assignments, and
/// each is paired with every admissible constant. The sum telescopes to
/// `2B * (1 + 2B)^positions * constants * 2`.
fn within_candidate_cap(positions: u32, coeff_bound: u64, constants: usize) -> Result<(), u128> {
    let two_b = 2 * coeff_bound as u128;
    let mut estimate = two_b * 2 * constants as u128;
    for _ in 0..positions {
        estimate = estimate.saturating_mul(1 + two_b);
        if estimate > CANDIDATE_CAP {
            return Err(estimate);
        }
    }
    if estimate > CANDIDATE_CAP {
        return Err(estimate);
    }
    Ok(())
}

fn scan_exponent_subset(
    q: u64,
    max_degree: u64,
    coeff_bound: u64,
    prime_powers: &[(u64, u32, u64)],
    positions: &[u64],
    mask: u64,
) -> Tally {
    let mut exponents: Vec<u64> = vec![q];
    for (i, &e) in positions.iter().enumerate() {
        if mask & (1 << i) != 0 {
            exponents.push(e);
        }
    }
    let r = exponents.len();
    // Signed coefficient values, one digit per exponent: 1, -1, 2, -2, ...
    let values: Vec<i64> = (1..=coeff_bound as i64).flat_map(|v| [v, -v]).collect();
    let mut digits = vec![0usize; r];
    let mut tally = Tally::default();

    loop {
        let coeffs: Vec<i64> = digits.iter().map(|&d| values[d]).collect();
        let tail: u64 = coeffs.iter().map(|c| c.unsigned_abs()).sum();
        for &(p, _u, value) in prime_powers {
            // Strict dominance and the two coprimality side conditions; the
            // remaining membership conditions hold by construction and are
            // re-checked against the classifier below.
            if value <= tail {
                continue;
            }
            if coeffs[0].unsigned_abs() % p == 0 || coeffs[r - 1].unsigned_abs() % p == 0 {
                continue;
            }
            for epsilon in [1i64, -1] {
                tally.tested += 1;
                let f = build_instance(&exponents, &coeffs, epsilon * value as i64);
                debug_assert!(strict_in_family(&f, q, max_degree));
                if !is_orbit_representative(&f) {
                    continue;
                }
                tally.oracle_calls += 1;
                let factorization = oracle::factorize(&f, max_degree)
                    .unwrap_or_else(|e| panic!("factorization engine failed on {f}: {e}"));
                let split = factorization.factors.len() > 1
                    || factorization.factors.first().is_some_and(|&(_, m)| m > 1);
                if split {
                    tally.counterexamples.push(f.to_string());
                }
            }
        }
        // Advance the odometer.
        let mut i = 0;
        loop {
            if i == r {
                return tally;
            }
            digits[i] += 1;
            if digits[i] < values.len() {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

fn build_instance(exponents: &[u64], coeffs: &[i64], constant: i64) -> SparsePoly {
    let mut terms: Vec<(u64, BigInt)> = vec![(0, BigInt::from(constant))];
    terms.extend(
        exponents
            .iter()
            .zip(coeffs)
            .map(|(&e, &c)| (e, BigInt::from(c))),
    );
    SparsePoly::new(terms)
}

/// Confirms against the classifier that a constructed instance really is a
/// strict member with the expected lowest exponent (debug builds only).
fn strict_in_family(f: &SparsePoly, q: u64, max_degree: u64) -> bool {
    let m = criteria::classify_family(f).expect("constructed instances are classifiable");
    f.degree().is_some_and(|d| d <= max_degree)
        && m.n1 == q
        && m.in_s_prime
        && f.constant_term().magnitude() > &m.tail_sum
}

/// The orbit `{f, -f, f(-x), -f(-x)}` factors identically; only its
/// canonically smallest element is sent to the engine.
fn is_orbit_representative(f: &SparsePoly) -> bool {
    let negated = -f;
    let mirrored = mirror(f);
    let both = -&mirrored;
    [&negated, &mirrored, &both]
        .iter()
        .all(|g| f.cmp_canonical(g) != std::cmp::Ordering::Greater)
}

/// `f(-x)`.
fn mirror(f: &SparsePoly) -> SparsePoly {
    SparsePoly::new(f.terms().iter().map(|(e, c)| {
        (*e, if e % 2 == 0 { c.clone() } else { -c })
    }))
}
