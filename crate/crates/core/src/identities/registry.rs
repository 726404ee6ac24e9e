//! The identity registry: one entry per checkable statement, each with a
//! parameter enumerator and an exact check.
//!
//! Conventions. Checks never assume a conjecture: the left-hand side is
//! always the definitional evaluator (excess, normalized_rem_sum, a direct
//! remainder scan) and the right-hand side the claimed closed form.
//! Geometric factors (p^e - 1)/(p - 1) are summed as integers; class
//! numbers enter through h* so the m = 3 case needs no special handling.
//!
//! Closed forms for prime powers are checked against brute force up to
//! `BRUTE_FORCE_LIMIT` and against each other (through the remainder-sum
//! identity for sqrt_sum) above it, where a direct evaluation would cost
//! billions of operations.

use crate::arith::{divisors, factorize, is_prime, isqrt, moebius, primes_up_to, rem, squarefree_decomp, ExactRational};
use crate::classnum::{class_number_neg, h_star};
use crate::error::Error;
use crate::floorsum::{
    excess, excess_closed_mod4, excess_from_half_rem_sum, excess_prime_power, half_range, half_rem_sum_from_excess,
    normalized_rem_sum, rem_half_sum_prime_power, rem_sq_sum, sqrt_sum, sqrt_sum_closed, square_divisible_count,
    square_divisible_count_closed,
};
use crate::symbols::legendre;

use super::{Entry, IdentityReport, Kind};

const BRUTE_FORCE_LIMIT: u64 = 10_000_000;

type Check = Result<IdentityReport, Error>;

fn int(v: i128) -> ExactRational {
    ExactRational::from(v)
}

fn ratio(n: i128, d: i128) -> ExactRational {
    ExactRational::new(n, d)
}

fn expect_len(id: &str, params: &[i64], len: usize, names: &str) -> Result<(), Error> {
    if params.len() != len {
        return Err(Error::domain(format!("{id} takes {len} parameter(s) ({names}), got {}", params.len())));
    }
    Ok(())
}

fn positive(id: &str, v: i64, what: &str) -> Result<u64, Error> {
    if v < 1 {
        return Err(Error::domain(format!("{id}: {what} must be positive, got {v}")));
    }
    Ok(v as u64)
}

/// A prime constrained to `class` mod `modulus` (ignored when modulus = 0)
/// and at least `min`.
fn prime_in_class(id: &str, v: i64, modulus: u64, class: u64, min: u64) -> Result<u64, Error> {
    let p = positive(id, v, "prime parameter")?;
    if !is_prime(p) {
        return Err(Error::domain(format!("{id}: {p} is not prime")));
    }
    if modulus != 0 && p % modulus != class {
        return Err(Error::domain(format!("{id}: prime {p} is not = {class} (mod {modulus})")));
    }
    if p < min {
        return Err(Error::domain(format!("{id}: prime must be >= {min}, got {p}")));
    }
    Ok(p)
}

fn bounded_power(id: &str, p: u64, alpha: i64) -> Result<u64, Error> {
    let alpha = positive(id, alpha, "exponent")?;
    u32::try_from(alpha)
        .ok()
        .and_then(|a| p.checked_pow(a))
        .filter(|&n| n < 1 << 41)
        .ok_or_else(|| Error::domain(format!("{id}: {p}^{alpha} exceeds the width contract")))
}

/// sum_{j<p} j (j/p), the weighted Legendre sum driving several closed forms.
fn weighted_legendre_sum(p: u64) -> i128 {
    (1..p).map(|j| j as i128 * legendre(j as i64, p).expect("odd prime") as i128).sum()
}

/// 1 + p + ... + p^(e-1), i.e. (p^e - 1)/(p - 1).
fn geometric(p: u64, e: u64) -> i128 {
    let mut acc: i128 = 0;
    let mut term: i128 = 1;
    for _ in 0..e {
        acc += term;
        term *= p as i128;
    }
    acc
}

/// Coefficient of h(-p) in the closed form for excess(4p), keyed off the
/// residue of p mod 8 (mod 4 in the first case).
fn quadrupled_excess_coefficient(p: u64) -> ExactRational {
    if p % 4 == 1 {
        ratio(1, 2)
    } else if p % 8 == 3 {
        int(2)
    } else {
        int(1)
    }
}

/// Multiplicity of h(-p) in the count of quadratic residues below p/4:
/// 0 when p = 3 (mod 8), 1 when p = 7 (mod 8).
fn quarter_residue_coefficient(p: u64) -> i128 {
    if p % 8 == 3 {
        0
    } else {
        1
    }
}

/// 1 when n = 3 (mod 4), else 0.
fn residue3_indicator(n: u64) -> i128 {
    if n % 4 == 3 {
        1
    } else {
        0
    }
}

fn h_of(p: u64) -> Result<i128, Error> {
    Ok(class_number_neg(p)? as i128)
}

fn odd_squarefree_up_to(max_n: u64, class_mod4: Option<u64>) -> Vec<Vec<i64>> {
    (1..=max_n)
        .step_by(2)
        .filter(|&n| class_mod4.map_or(true, |c| n % 4 == c) && moebius(n) != 0)
        .map(|n| vec![n as i64])
        .collect()
}

fn primes_in_class_up_to(max_n: u64, class_mod4: u64, min: u64) -> Vec<u64> {
    primes_up_to(max_n).into_iter().filter(|&p| p % 4 == class_mod4 && p >= min).collect()
}

/// n >= 5 whose prime factors are all = 1 (mod 4).
fn products_of_1mod4_primes(max_n: u64) -> Vec<u64> {
    (5..=max_n)
        .step_by(4) // such products are themselves = 1 (mod 4)
        .filter(|&n| factorize(n).pairs().iter().all(|&(p, _)| p % 4 == 1))
        .collect()
}

fn check_product_of_1mod4_primes(id: &str, v: i64) -> Result<u64, Error> {
    let n = positive(id, v, "n")?;
    if n < 5 || factorize(n).pairs().iter().any(|&(p, _)| p % 4 != 1) {
        return Err(Error::domain(format!("{id}: {n} is not a product of primes = 1 (mod 4)")));
    }
    Ok(n)
}

// ---------------------------------------------------------------------------
// Floor identities outside the main family.

fn enum_hermite(max_n: u64) -> Vec<Vec<i64>> {
    let bound = max_n as i64;
    let mut out = Vec::new();
    for q in 1..=bound {
        for n in 1..=bound {
            for a in -2 * q..=2 * q {
                out.push(vec![a, q, n]);
            }
        }
    }
    out
}

fn check_hermite(params: &[i64]) -> Check {
    let id = "eq-1.1-hermite";
    expect_len(id, params, 3, "a, q, n with x = a/q")?;
    let (a, q, n) = (params[0] as i128, params[1], params[2]);
    let q = positive(id, q, "denominator q")? as i128;
    let n = positive(id, n, "n")? as i128;
    let lhs: i128 = (0..n).map(|i| (a * n + i * q).div_euclid(q * n)).sum();
    let rhs = (n * a).div_euclid(q);
    Ok(IdentityReport::new(id, params, int(lhs), int(rhs)))
}

fn enum_sqrtsum(max_n: u64) -> Vec<Vec<i64>> {
    (1..=max_n).map(|n| vec![n as i64]).collect()
}

fn check_sqrtsum(params: &[i64]) -> Check {
    let id = "eq-1.2-sqrtsum";
    expect_len(id, params, 1, "n")?;
    let n = positive(id, params[0], "n")?;
    let lhs: u128 = (1..n as u128).map(isqrt).sum();
    let a = isqrt(n as u128) as i128;
    let rhs = n as i128 * a - a * (a + 1) * (2 * a + 1) / 6;
    Ok(IdentityReport::new(id, params, int(lhs as i128), int(rhs)))
}

// ---------------------------------------------------------------------------
// The prime evaluations of excess.

fn enum_primes_1mod4(max_n: u64) -> Vec<Vec<i64>> {
    primes_in_class_up_to(max_n, 1, 5).into_iter().map(|p| vec![p as i64]).collect()
}

fn enum_primes_3mod4_ge7(max_n: u64) -> Vec<Vec<i64>> {
    primes_in_class_up_to(max_n, 3, 7).into_iter().map(|p| vec![p as i64]).collect()
}

fn check_prop_1_1(params: &[i64]) -> Check {
    let id = "prop-1.1";
    expect_len(id, params, 1, "prime p = 1 (mod 4)")?;
    let p = prime_in_class(id, params[0], 4, 1, 5)?;
    Ok(IdentityReport::new(id, params, excess(p), ExactRational::ZERO))
}

fn check_prop_1_2(params: &[i64]) -> Check {
    let id = "prop-1.2";
    expect_len(id, params, 1, "prime p = 3 (mod 4), p >= 7")?;
    let p = prime_in_class(id, params[0], 4, 3, 7)?;
    let rhs = ratio(1 - p as i128 - 2 * h_of(p)?, 4);
    Ok(IdentityReport::new(id, params, excess(p), rhs))
}

// ---------------------------------------------------------------------------
// The remainder-sum closed forms for sqrt_sum and the divisibility count.

fn enum_not_mod4(max_n: u64) -> Vec<Vec<i64>> {
    (1..=max_n).filter(|n| n % 4 != 0).map(|n| vec![n as i64]).collect()
}

fn enum_mod4(max_n: u64) -> Vec<Vec<i64>> {
    (4..=max_n).step_by(4).map(|n| vec![n as i64]).collect()
}

fn enum_all(max_n: u64) -> Vec<Vec<i64>> {
    (1..=max_n).map(|n| vec![n as i64]).collect()
}

fn check_prop_2_1a(params: &[i64]) -> Check {
    let id = "prop-2.1a";
    expect_len(id, params, 1, "n with 4 not dividing n")?;
    let n = positive(id, params[0], "n")?;
    if n % 4 == 0 {
        return Err(Error::domain(format!("{id}: {n} is divisible by 4 (use prop-2.1b)")));
    }
    Ok(IdentityReport::new(id, params, int(sqrt_sum(n) as i128), int(sqrt_sum_closed(n) as i128)))
}

fn check_prop_2_1b(params: &[i64]) -> Check {
    let id = "prop-2.1b";
    expect_len(id, params, 1, "n divisible by 4")?;
    let n = positive(id, params[0], "n")?;
    if n % 4 != 0 {
        return Err(Error::domain(format!("{id}: {n} is not divisible by 4 (use prop-2.1a)")));
    }
    Ok(IdentityReport::new(id, params, int(sqrt_sum(n) as i128), int(sqrt_sum_closed(n) as i128)))
}

fn check_cor_2_2(params: &[i64]) -> Check {
    let id = "cor-2.2";
    expect_len(id, params, 1, "n divisible by 4")?;
    let n = positive(id, params[0], "n")?;
    Ok(IdentityReport::new(id, params, excess(n), excess_closed_mod4(n)?))
}

fn check_lemma_2_2(params: &[i64]) -> Check {
    let id = "lemma-2.2";
    expect_len(id, params, 1, "n")?;
    let n = positive(id, params[0], "n")?;
    let lhs = int(square_divisible_count(n) as i128);
    let rhs = int(square_divisible_count_closed(n) as i128);
    Ok(IdentityReport::new(id, params, lhs, rhs))
}

// ---------------------------------------------------------------------------
// Legendre-sum identities for remainder sums.

fn enum_odd_primes(max_n: u64) -> Vec<Vec<i64>> {
    primes_up_to(max_n).into_iter().skip(1).map(|p| vec![p as i64]).collect()
}

fn check_lemma_2_3(params: &[i64]) -> Check {
    let id = "lemma-2.3";
    expect_len(id, params, 1, "odd prime p")?;
    let p = prime_in_class(id, params[0], 2, 1, 3)?;
    let lhs = int(rem_sq_sum(p, (p - 1) / 2) as i128);
    let rhs = ratio((p as i128) * (p as i128 - 1), 4) + ratio(weighted_legendre_sum(p), 2);
    Ok(IdentityReport::new(id, params, lhs, rhs))
}

fn check_eq_2_25(params: &[i64]) -> Check {
    let id = "eq-2.25";
    expect_len(id, params, 1, "prime p = 1 (mod 4)")?;
    let p = prime_in_class(id, params[0], 4, 1, 5)?;
    Ok(IdentityReport::new(id, params, int(weighted_legendre_sum(p)), ExactRational::ZERO))
}

fn enum_odd_ge3(max_n: u64) -> Vec<Vec<i64>> {
    (3..=max_n).step_by(2).map(|n| vec![n as i64]).collect()
}

fn check_lemma_4_1(params: &[i64]) -> Check {
    let id = "lemma-4.1";
    expect_len(id, params, 1, "odd n >= 3")?;
    let n = positive(id, params[0], "n")?;
    if n < 3 || n % 2 == 0 {
        return Err(Error::domain(format!("{id}: n must be odd and >= 3, got {n}")));
    }
    let lhs = rem_sq_sum(2 * n, n - 1);
    let rhs = (n as u128) * (n as u128 - 1) / 2 + 2 * rem_sq_sum(n, (n - 1) / 2);
    Ok(IdentityReport::new(id, params, int(lhs as i128), int(rhs as i128)))
}

fn enum_products_1mod4(max_n: u64) -> Vec<Vec<i64>> {
    products_of_1mod4_primes(max_n).into_iter().map(|n| vec![n as i64]).collect()
}

fn check_lemma_5_2(params: &[i64]) -> Check {
    let id = "lemma-5.2";
    expect_len(id, params, 1, "n, a product of primes = 1 (mod 4)")?;
    let n = check_product_of_1mod4_primes(id, params[0])?;
    let q = squarefree_decomp(n).q_part as i128;
    let lhs = int(rem_sq_sum(n, (n - 1) / 2) as i128);
    let rhs = ratio(n as i128 * (n as i128 - q), 4);
    Ok(IdentityReport::new(id, params, lhs, rhs))
}

fn enum_prop_5_1(max_n: u64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for n in products_of_1mod4_primes(max_n) {
        out.push(vec![n as i64, 1]);
        out.push(vec![n as i64, 2]);
    }
    out
}

fn check_prop_5_1(params: &[i64]) -> Check {
    let id = "prop-5.1";
    expect_len(id, params, 2, "n (a product of primes = 1 mod 4) and part 1 or 2")?;
    let n = check_product_of_1mod4_primes(id, params[0])?;
    let q = squarefree_decomp(n).q_part as i128;
    match params[1] {
        1 => Ok(IdentityReport::new(id, params, excess(n), ratio(q - 1, 4))),
        2 => Ok(IdentityReport::new(id, params, excess(2 * n), ratio(q - 1 - n as i128, 4))),
        other => Err(Error::domain(format!("{id}: part must be 1 (excess(n)) or 2 (excess(2n)), got {other}"))),
    }
}

// ---------------------------------------------------------------------------
// excess at 2p and 4p.

fn enum_prop_4_2(max_n: u64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for p in primes_up_to(max_n).into_iter().skip(1) {
        out.push(vec![p as i64, 1]);
        if p >= 5 {
            out.push(vec![p as i64, 2]);
        }
    }
    out
}

fn check_prop_4_2(params: &[i64]) -> Check {
    let id = "prop-4.2";
    expect_len(id, params, 2, "odd prime p and part 1 or 2")?;
    let p = prime_in_class(id, params[0], 2, 1, 3)?;
    let lhs = excess(2 * p);
    match params[1] {
        1 => {
            let rhs = ratio(-(p as i128), 4) + ratio(weighted_legendre_sum(p), 2 * p as i128);
            Ok(IdentityReport::new(id, params, lhs, rhs))
        }
        2 => {
            if p < 5 {
                return Err(Error::domain(format!("{id}: part 2 requires p >= 5, got {p}")));
            }
            let rhs = if p % 4 == 1 {
                ratio(-(p as i128), 4)
            } else {
                ratio(-(p as i128), 4) - ratio(h_of(p)?, 2)
            };
            Ok(IdentityReport::new(id, params, lhs, rhs))
        }
        other => Err(Error::domain(format!("{id}: part must be 1 or 2, got {other}"))),
    }
}

fn enum_primes_ge5(max_n: u64) -> Vec<Vec<i64>> {
    primes_up_to(max_n).into_iter().filter(|&p| p >= 5).map(|p| vec![p as i64]).collect()
}

fn check_prop_4_3(params: &[i64]) -> Check {
    let id = "prop-4.3";
    expect_len(id, params, 1, "prime p >= 5")?;
    let p = prime_in_class(id, params[0], 2, 1, 5)?;
    let rhs = ratio(1, 4) + ratio(p as i128, 2) - quadrupled_excess_coefficient(p) * int(h_of(p)?);
    Ok(IdentityReport::new(id, params, excess(4 * p), rhs))
}

fn check_lemma_4_4(params: &[i64]) -> Check {
    let id = "lemma-4.4";
    expect_len(id, params, 1, "prime p = 1 (mod 4)")?;
    let p = prime_in_class(id, params[0], 4, 1, 5)?;
    let mut s1: i128 = 0;
    let mut s3: i128 = 0;
    for j in (1..2 * p).step_by(2) {
        if legendre(j as i64, p)? == 1 {
            if j % 4 == 1 {
                s1 += j as i128;
            } else {
                s3 += j as i128;
            }
        }
    }
    Ok(IdentityReport::new(id, params, int(h_of(p)?), ratio(s1 - s3, p as i128)))
}

fn check_lemma_4_5(params: &[i64]) -> Check {
    let id = "lemma-4.5";
    expect_len(id, params, 1, "prime p = 1 (mod 4)")?;
    let p = prime_in_class(id, params[0], 4, 1, 5)?;
    let sum: i128 =
        (1..p).step_by(2).map(|k| 2 * p as i128 - rem((k as u128) * (k as u128), 4 * p as u128) as i128).sum();
    Ok(IdentityReport::new(id, params, int(h_of(p)?), ratio(sum, p as i128)))
}

fn check_lemma_4_6(params: &[i64]) -> Check {
    let id = "lemma-4.6";
    expect_len(id, params, 1, "prime p = 1 (mod 4)")?;
    let p = prime_in_class(id, params[0], 4, 1, 5)?;
    let sum = 2 * (p as i128) * (p as i128 - 1) - rem_sq_sum(4 * p, p - 1) as i128;
    Ok(IdentityReport::new(id, params, int(h_of(p)?), ratio(sum, p as i128)))
}

fn check_lemma_4_7(params: &[i64]) -> Check {
    let id = "lemma-4.7";
    expect_len(id, params, 1, "prime p = 3 (mod 4), p >= 7")?;
    let p = prime_in_class(id, params[0], 4, 3, 7)?;
    let lhs = ratio(rem_sq_sum(4 * p, p - 1) as i128, 2 * p as i128);
    let eps = quarter_residue_coefficient(p);
    let rhs = int(p as i128) - ratio(3, 2) + int(eps - 2) * int(h_of(p)?);
    Ok(IdentityReport::new(id, params, lhs, rhs))
}

fn check_eq_4_11(params: &[i64]) -> Check {
    let id = "eq-4.11";
    expect_len(id, params, 1, "prime p = 3 (mod 4), p >= 7")?;
    let p = prime_in_class(id, params[0], 4, 3, 7)?;
    let lhs = int(rem_sq_sum(p, p - 1) as i128);
    let rhs = ratio((p as i128) * (p as i128 - 1), 2) - int(p as i128) * int(h_of(p)?);
    Ok(IdentityReport::new(id, params, lhs, rhs))
}

fn check_eq_4_17(params: &[i64]) -> Check {
    let id = "eq-4.17";
    expect_len(id, params, 1, "prime p = 3 (mod 4), p >= 7")?;
    let p = prime_in_class(id, params[0], 4, 3, 7)?;
    let count = (1..=p / 4).filter(|&j| legendre(j as i64, p).expect("odd prime") == 1).count() as i128;
    let rhs = ratio(p as i128 - 3, 8) + ratio(quarter_residue_coefficient(p) * h_of(p)?, 2);
    Ok(IdentityReport::new(id, params, int(count), rhs))
}

// ---------------------------------------------------------------------------
// Prime powers: the class-number closed forms of excess and the half-range
// remainder sums.

fn enum_prop_6_1a(max_n: u64) -> Vec<Vec<i64>> {
    (2..41).take_while(|&a| 1u64 << a <= max_n).map(|a| vec![a as i64]).collect()
}

fn enum_prime_powers(max_n: u64, class_mod4: u64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for p in primes_in_class_up_to(max_n, class_mod4, 3) {
        let mut alpha = 1u32;
        while let Some(n) = p.checked_pow(alpha) {
            if n > max_n {
                break;
            }
            out.push(vec![p as i64, alpha as i64]);
            alpha += 1;
        }
    }
    out
}

fn enum_lemma_6_2(max_n: u64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for p in primes_up_to(max_n) {
        let mut alpha = if p == 2 { 2u32 } else { 1u32 };
        while let Some(n) = p.checked_pow(alpha) {
            if n > max_n {
                break;
            }
            out.push(vec![p as i64, alpha as i64]);
            alpha += 1;
        }
    }
    out
}

/// excess(p^alpha) against the prime-power closed form; brute force below
/// BRUTE_FORCE_LIMIT, otherwise derived from the closed half-range
/// remainder sum through the sqrt_sum identity.
fn check_prime_power_excess(id: &'static str, params: &[i64], class_mod4: u64) -> Check {
    expect_len(id, params, 2, "prime p and exponent alpha")?;
    let p = if class_mod4 == 0 {
        if params[0] != 2 {
            return Err(Error::domain(format!("{id}: the prime must be 2, got {}", params[0])));
        }
        2
    } else {
        prime_in_class(id, params[0], 4, class_mod4, 3)?
    };
    let n = bounded_power(id, p, params[1])?;
    let alpha = params[1] as u32;
    if p == 2 && alpha < 2 {
        return Err(Error::domain(format!("{id}: alpha >= 2 required for p = 2")));
    }
    let rhs = excess_prime_power(p, alpha)?;
    let lhs = if n <= BRUTE_FORCE_LIMIT {
        excess(n)
    } else {
        excess_from_half_rem_sum(n, rem_half_sum_prime_power(p, alpha)?)
    };
    Ok(IdentityReport::new(id, params, lhs, rhs))
}

fn check_prop_6_1a(params: &[i64]) -> Check {
    let id = "prop-6.1a";
    expect_len(id, params, 1, "exponent alpha >= 2")?;
    check_prime_power_excess(id, &[2, params[0]], 0)
        .map(|r| IdentityReport { params: params.to_vec(), ..r })
}

fn check_prop_6_1b(params: &[i64]) -> Check {
    check_prime_power_excess("prop-6.1b", params, 1)
}

fn check_prop_6_1c(params: &[i64]) -> Check {
    check_prime_power_excess("prop-6.1c", params, 3)
}

fn check_lemma_6_2(params: &[i64]) -> Check {
    let id = "lemma-6.2";
    expect_len(id, params, 2, "prime p and exponent alpha (alpha >= 2 for p = 2)")?;
    let p = prime_in_class(id, params[0], 0, 0, 2)?;
    let n = bounded_power(id, p, params[1])?;
    let alpha = params[1] as u32;
    if p == 2 && alpha < 2 {
        return Err(Error::domain(format!("{id}: alpha >= 2 required for p = 2")));
    }
    let rhs = rem_half_sum_prime_power(p, alpha)?;
    let lhs = if n <= BRUTE_FORCE_LIMIT {
        rem_sq_sum(n, half_range(n))
    } else {
        half_rem_sum_from_excess(n, excess_prime_power(p, alpha)?)
    };
    Ok(IdentityReport::new(id, params, int(lhs as i128), int(rhs as i128)))
}

fn enum_lemma_6_3(_max_n: u64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for p in [2i64, 3, 5, 7] {
        for a in 1..=4 {
            for k in 1..=200 {
                out.push(vec![1, p, a, k]);
            }
        }
    }
    for p in [3i64, 5, 7] {
        for a in 0..=2 {
            for r in 1..p {
                out.push(vec![2, p, a, r]);
            }
        }
    }
    for a in 2..=12i64 {
        for k in 0..=1 << (a - 1) {
            out.push(vec![3, a, k]);
        }
    }
    for a in 1..=12i64 {
        for l in 0..1 << (a + 1) {
            out.push(vec![4, a, l]);
        }
    }
    out
}

fn check_lemma_6_3(params: &[i64]) -> Check {
    let id = "lemma-6.3";
    if params.is_empty() {
        return Err(Error::domain(format!("{id}: first parameter selects the part (1-4)")));
    }
    match params[0] {
        // Rem((kp)^2 / p^(a+2)) = p^2 Rem(k^2 / p^a)
        1 => {
            expect_len(id, params, 4, "part, prime p, alpha >= 1, k >= 1")?;
            let p = prime_in_class(id, params[1], 0, 0, 2)? as u128;
            let a = positive(id, params[2], "alpha")? as u32;
            let k = positive(id, params[3], "k")? as u128;
            if p.pow(a + 2) > 1 << 60 || k > 1 << 30 {
                return Err(Error::domain(format!("{id}: parameters exceed the width contract")));
            }
            let lhs = rem((k * p) * (k * p), p.pow(a + 2));
            let rhs = p * p * rem(k * k, p.pow(a));
            Ok(IdentityReport::new(id, params, int(lhs as i128), int(rhs as i128)))
        }
        // The p^(a+1) remainders Rem((jp+r)^2 / p^(a+2)), 0 <= j < p^(a+1),
        // are pairwise distinct; compared as a distinct count.
        2 => {
            expect_len(id, params, 4, "part, prime p, alpha >= 0, 1 <= r <= p-1")?;
            let p = prime_in_class(id, params[1], 0, 0, 2)?;
            if params[2] < 0 {
                return Err(Error::domain(format!("{id}: alpha must be >= 0")));
            }
            let a = params[2] as u32;
            let r = positive(id, params[3], "r")?;
            if r >= p {
                return Err(Error::domain(format!("{id}: r must lie in [1, p-1], got {r}")));
            }
            let modulus = p
                .checked_pow(a + 2)
                .filter(|&m| m < 1 << 30)
                .ok_or_else(|| Error::domain(format!("{id}: p^(alpha+2) too large")))? as u128;
            let count = p.pow(a + 1);
            let mut seen: Vec<u128> =
                (0..count).map(|j| rem((j as u128 * p as u128 + r as u128).pow(2), modulus)).collect();
            seen.sort_unstable();
            seen.dedup();
            Ok(IdentityReport::new(id, params, int(seen.len() as i128), int(count as i128)))
        }
        // Rem((2^(a-1) - k)^2 / 2^a) = Rem(k^2 / 2^a) for 0 <= k <= 2^(a-1)
        3 => {
            expect_len(id, params, 3, "part, alpha >= 2, 0 <= k <= 2^(alpha-1)")?;
            let a = positive(id, params[1], "alpha")?;
            if !(2..=60).contains(&a) || params[2] < 0 || params[2] as u128 > 1 << (a - 1) {
                return Err(Error::domain(format!("{id}: need 2 <= alpha <= 60 and 0 <= k <= 2^(alpha-1)")));
            }
            let k = params[2] as u128;
            let m = 1u128 << a;
            let lhs = rem(((1 << (a - 1)) - k) * ((1 << (a - 1)) - k), m);
            let rhs = rem(k * k, m);
            Ok(IdentityReport::new(id, params, int(lhs as i128), int(rhs as i128)))
        }
        // Rem((2l+1)^2 / 2^(a+2)) = 1 (mod 8)
        4 => {
            expect_len(id, params, 3, "part, alpha >= 1, l >= 0")?;
            let a = positive(id, params[1], "alpha")?;
            if a > 58 || params[2] < 0 {
                return Err(Error::domain(format!("{id}: need 1 <= alpha <= 58 and l >= 0")));
            }
            let l = params[2] as u128;
            let lhs = rem((2 * l + 1) * (2 * l + 1), 1 << (a + 2)) % 8;
            Ok(IdentityReport::new(id, params, int(lhs as i128), int(1)))
        }
        other => Err(Error::domain(format!("{id}: part must be 1-4, got {other}"))),
    }
}

fn enum_eq_6_11a(max_n: u64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for p in primes_in_class_up_to(max_n, 3, 3) {
        let mut beta = 0u32;
        while let Some(m) = p.checked_pow(2 * beta + 1) {
            if m > max_n {
                break;
            }
            out.push(vec![p as i64, beta as i64]);
            beta += 1;
        }
    }
    out
}

fn check_eq_6_11a(params: &[i64]) -> Check {
    let id = "eq-6.11a";
    expect_len(id, params, 2, "prime p = 3 (mod 4) and beta >= 0")?;
    let p = prime_in_class(id, params[0], 4, 3, 3)?;
    if !(0..=20).contains(&params[1]) {
        return Err(Error::domain(format!("{id}: beta must lie in 0..=20, got {}", params[1])));
    }
    let m = bounded_power(id, p, 2 * params[1] + 1)? as u128;
    let half = (m - 1) / 2;
    let lhs = rem(half * half, m);
    Ok(IdentityReport::new(id, params, int(lhs as i128), int(((m + 1) / 4) as i128)))
}

fn check_eq_6_18a(params: &[i64]) -> Check {
    let id = "eq-6.18a";
    expect_len(id, params, 1, "prime p = 1 (mod 4)")?;
    let p = prime_in_class(id, params[0], 4, 1, 5)?;
    let lhs = int(rem_sq_sum(p, (p - 1) / 2) as i128);
    Ok(IdentityReport::new(id, params, lhs, ratio((p as i128) * (p as i128 - 1), 4)))
}

// ---------------------------------------------------------------------------
// The conjectured closed forms for two prime factors and for odd
// squarefree integers.

fn enum_conj_7_1(max_n: u64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    if max_n < 15 {
        return out;
    }
    let primes = primes_up_to(max_n / 3);
    for &p in primes.iter().filter(|&&p| p % 4 == 1) {
        if p > max_n / 3 {
            break;
        }
        for &q in primes.iter().filter(|&&q| q % 4 == 3) {
            if q > max_n / p {
                break;
            }
            let mut a = 1i64;
            let mut pa = p;
            while pa <= max_n / q {
                let mut b = 1i64;
                let mut n = pa * q;
                loop {
                    out.push(vec![p as i64, q as i64, a, b]);
                    if n > max_n / q {
                        break;
                    }
                    n *= q;
                    b += 1;
                }
                pa = match pa.checked_mul(p) {
                    Some(v) => v,
                    None => break,
                };
                a += 1;
            }
        }
    }
    out
}

fn check_conj_7_1(params: &[i64]) -> Check {
    let id = "conj-7.1";
    expect_len(id, params, 4, "primes p = 1, q = 3 (mod 4) and exponents alpha, beta")?;
    let p = prime_in_class(id, params[0], 4, 1, 5)?;
    let q = prime_in_class(id, params[1], 4, 3, 3)?;
    let pa = bounded_power(id, p, params[2])? as u128;
    let qb = bounded_power(id, q, params[3])? as u128;
    let n = pa
        .checked_mul(qb)
        .filter(|&n| n < 1 << 41)
        .ok_or_else(|| Error::domain(format!("{id}: p^a q^b exceeds the width contract")))? as u64;
    let (a, b) = (params[2] as u64, params[3] as u64);

    let lhs = normalized_rem_sum(n)?;

    let h_q = h_star(q)?;
    let h_pq = h_star(p * q)?;
    let sym = legendre(p as i64, q)? as i128;
    let lead = ratio(n as i128 - (p.pow((a / 2) as u32) as i128) * (q.pow((b / 2) as u32) as i128), 2);
    let bracket = (int(geometric(p, (a + 2) / 2)) - int(geometric(p, a / 2)) * int(sym)) * h_q
        + int(geometric(p, (a + 1) / 2)) * h_pq;
    let rhs = lead - int(geometric(q, (b + 1) / 2)) * bracket;
    Ok(IdentityReport::new(id, params, lhs, rhs))
}

fn enum_conj_7_2(max_n: u64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    if max_n < 21 {
        return out;
    }
    let primes: Vec<u64> = primes_up_to(max_n / 3).into_iter().filter(|&p| p % 4 == 3).collect();
    for (i, &p) in primes.iter().enumerate() {
        for &q in &primes[i + 1..] {
            if q > max_n / p {
                break;
            }
            let mut a = 1i64;
            let mut pa = p;
            while pa <= max_n / q {
                let mut b = 1i64;
                let mut n = pa * q;
                loop {
                    out.push(vec![p as i64, q as i64, a, b]);
                    if n > max_n / q {
                        break;
                    }
                    n *= q;
                    b += 1;
                }
                pa = match pa.checked_mul(p) {
                    Some(v) => v,
                    None => break,
                };
                a += 1;
            }
        }
    }
    out
}

fn check_conj_7_2(params: &[i64]) -> Check {
    let id = "conj-7.2";
    expect_len(id, params, 4, "distinct primes p, q = 3 (mod 4) and exponents alpha, beta")?;
    let p = prime_in_class(id, params[0], 4, 3, 3)?;
    let q = prime_in_class(id, params[1], 4, 3, 3)?;
    if p == q {
        return Err(Error::domain(format!("{id}: p and q must be distinct, got {p}")));
    }
    let pa = bounded_power(id, p, params[2])? as u128;
    let qb = bounded_power(id, q, params[3])? as u128;
    let n = pa
        .checked_mul(qb)
        .filter(|&n| n < 1 << 41)
        .ok_or_else(|| Error::domain(format!("{id}: p^a q^b exceeds the width contract")))? as u64;
    let (a, b) = (params[2] as u64, params[3] as u64);

    let lhs = normalized_rem_sum(n)?;

    let h_p = h_star(p)?;
    let h_q = h_star(q)?;
    let p_over_q = legendre(p as i64, q)? as i128;
    let q_over_p = legendre(q as i64, p)? as i128;
    let lead = ratio(n as i128 - (p.pow((a / 2) as u32) as i128) * (q.pow((b / 2) as u32) as i128), 2);
    let t1 = int(geometric(q, b / 2) * p_over_q + geometric(q, b / 2 + 1)) * int(geometric(p, (a + 1) / 2)) * h_p;
    let t2 = int(geometric(p, a / 2) * q_over_p + geometric(p, a / 2 + 1)) * int(geometric(q, (b + 1) / 2)) * h_q;
    let rhs = lead - t1 - t2;
    Ok(IdentityReport::new(id, params, lhs, rhs))
}

fn enum_3mod4_prime_pairs(max_n: u64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let primes: Vec<u64> = primes_up_to(max_n / 3).into_iter().filter(|&p| p % 4 == 3).collect();
    for (i, &p) in primes.iter().enumerate() {
        for &q in &primes[i + 1..] {
            if q > max_n / p {
                break;
            }
            out.push(vec![p as i64, q as i64]);
        }
    }
    out
}

fn pair_3mod4(id: &str, params: &[i64]) -> Result<(u64, u64), Error> {
    expect_len(id, params, 2, "distinct primes p, q = 3 (mod 4)")?;
    let p = prime_in_class(id, params[0], 4, 3, 3)?;
    let q = prime_in_class(id, params[1], 4, 3, 3)?;
    if p == q {
        return Err(Error::domain(format!("{id}: p and q must be distinct, got {p}")));
    }
    Ok((p, q))
}

fn check_eq_7_3(params: &[i64]) -> Check {
    let id = "eq-7.3";
    let (p, q) = pair_3mod4(id, params)?;
    let lhs = normalized_rem_sum(p * q)?;
    let rhs = ratio((p * q) as i128 - 1, 2) - h_star(p)? - h_star(q)?;
    Ok(IdentityReport::new(id, params, lhs, rhs))
}

fn check_eq_7_4(params: &[i64]) -> Check {
    let id = "eq-7.4";
    let (p, q) = pair_3mod4(id, params)?;
    let rhs = -(h_star(p)? + h_star(q)?) / int(2);
    Ok(IdentityReport::new(id, params, excess(p * q), rhs))
}

fn odd_squarefree(id: &str, v: i64, class_mod4: Option<u64>) -> Result<u64, Error> {
    let n = positive(id, v, "n")?;
    if n % 2 == 0 || moebius(n) == 0 {
        return Err(Error::domain(format!("{id}: {n} is not odd and squarefree")));
    }
    if let Some(c) = class_mod4 {
        if n % 4 != c {
            return Err(Error::domain(format!("{id}: {n} is not = {c} (mod 4)")));
        }
    }
    Ok(n)
}

/// sum of h*(-d) over divisors d = 3 (mod 4) of squarefree odd n.
fn divisor_h_star_sum(n: u64) -> Result<ExactRational, Error> {
    let mut sum = ExactRational::ZERO;
    for d in divisors(n) {
        if d % 4 == 3 {
            sum = sum + h_star(d)?;
        }
    }
    Ok(sum)
}

fn check_conj_7_3a(params: &[i64]) -> Check {
    let id = "conj-7.3a";
    expect_len(id, params, 1, "odd squarefree n = 1 (mod 4)")?;
    let n = odd_squarefree(id, params[0], Some(1))?;
    let rhs = -divisor_h_star_sum(n)? / int(2);
    Ok(IdentityReport::new(id, params, excess(n), rhs))
}

fn check_conj_7_3b(params: &[i64]) -> Check {
    let id = "conj-7.3b";
    expect_len(id, params, 1, "odd squarefree n = 3 (mod 4)")?;
    let n = odd_squarefree(id, params[0], Some(3))?;
    let rhs = ratio(1 - n as i128, 4) - divisor_h_star_sum(n)? / int(2);
    Ok(IdentityReport::new(id, params, excess(n), rhs))
}

fn check_conj_7_4(params: &[i64]) -> Check {
    let id = "conj-7.4";
    expect_len(id, params, 1, "odd squarefree n")?;
    let n = odd_squarefree(id, params[0], None)?;
    let lhs = if n % 4 == 3 { h_star(n)? } else { ExactRational::ZERO };
    let mut rhs = ExactRational::ZERO;
    for d in divisors(n) {
        let mu = moebius(n / d) as i128;
        let term = ratio((1 - d as i128) * residue3_indicator(d), 2) - int(2) * excess(d);
        rhs = rhs + int(mu) * term;
    }
    Ok(IdentityReport::new(id, params, lhs, rhs))
}

// ---------------------------------------------------------------------------
// Table reproductions.

/// (p, excess(p), -p-1-4*excess(p), h(-p)) for the twelve primes
/// p = 3 (mod 4) with 7 <= p < 100.
const TABLE_1: [(u64, i128, i128, i128); 12] = [
    (7, -2, 0, 1),
    (11, -3, 0, 1),
    (19, -5, 0, 1),
    (23, -7, 4, 3),
    (31, -9, 4, 3),
    (43, -11, 0, 1),
    (47, -14, 8, 5),
    (59, -16, 4, 3),
    (67, -17, 0, 1),
    (71, -21, 12, 7),
    (79, -22, 8, 5),
    (83, -22, 4, 3),
];

fn enum_table_1(_max_n: u64) -> Vec<Vec<i64>> {
    TABLE_1.iter().flat_map(|&(p, ..)| (0..3).map(move |col| vec![p as i64, col])).collect()
}

fn check_table_1(params: &[i64]) -> Check {
    let id = "table-1";
    expect_len(id, params, 2, "tabulated prime p and column 0 (excess), 1 (-p-1-4*excess), 2 (h)")?;
    let row = TABLE_1
        .iter()
        .find(|&&(p, ..)| p as i64 == params[0])
        .ok_or_else(|| Error::domain(format!("{id}: {} is not a tabulated prime", params[0])))?;
    let &(p, f, linear, h) = row;
    let (lhs, rhs) = match params[1] {
        0 => (excess(p), int(f)),
        1 => (int(-(p as i128) - 1) - int(4) * excess(p), int(linear)),
        2 => (int(h_of(p)?), int(h)),
        other => return Err(Error::domain(format!("{id}: column must be 0, 1, or 2, got {other}"))),
    };
    Ok(IdentityReport::new(id, params, lhs, rhs))
}

/// Scaled tabulated values of excess(p^alpha) for alpha = 1..8: the
/// columns hold 4*excess(2^a), 3*excess(3^a), and excess(p^a) for the
/// five primes 5 <= p <= 17.
const TABLE_2: [(u64, i128, [i128; 8]); 7] = [
    (2, 4, [-1, 3, 3, 7, 11, 27, 51, 115]),
    (3, 3, [-2, 1, -20, 4, -182, 13, -1640, 40]),
    (5, 1, [0, 1, 1, 6, 6, 31, 31, 156]),
    (7, 1, [-2, 1, -88, 8, -4218, 57, -206000, 400]),
    (11, 1, [-3, 2, -336, 24, -40299, 266, -4872192, 2928]),
    (13, 1, [0, 3, 3, 42, 42, 549, 549, 7140]),
    (17, 1, [0, 4, 4, 72, 72, 1228, 1228, 20880]),
];

fn enum_table_2(_max_n: u64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for &(p, _, _) in &TABLE_2 {
        for alpha in 1..=8u32 {
            out.push(vec![p as i64, alpha as i64, 0]);
        }
    }
    for &(p, _, _) in &TABLE_2 {
        for alpha in 1..=8u32 {
            if p.pow(alpha) <= BRUTE_FORCE_LIMIT {
                out.push(vec![p as i64, alpha as i64, 1]);
            }
        }
    }
    out
}

fn check_table_2(params: &[i64]) -> Check {
    let id = "table-2";
    expect_len(id, params, 3, "tabulated prime p, alpha in 1..=8, mode 0 (closed form) or 1 (brute force)")?;
    let row = TABLE_2
        .iter()
        .find(|&&(p, ..)| p as i64 == params[0])
        .ok_or_else(|| Error::domain(format!("{id}: {} is not a tabulated prime", params[0])))?;
    let &(p, scale, cells) = row;
    if !(1..=8).contains(&params[1]) {
        return Err(Error::domain(format!("{id}: alpha must lie in 1..=8, got {}", params[1])));
    }
    let alpha = params[1] as u32;
    let expected = ratio(cells[(alpha - 1) as usize], scale);
    let lhs = match params[2] {
        0 => excess_prime_power(p, alpha)?,
        1 => {
            if p.pow(alpha) > BRUTE_FORCE_LIMIT {
                return Err(Error::domain(format!(
                    "{id}: {p}^{alpha} exceeds the brute-force limit {BRUTE_FORCE_LIMIT}"
                )));
            }
            excess(p.pow(alpha))
        }
        other => return Err(Error::domain(format!("{id}: mode must be 0 or 1, got {other}"))),
    };
    Ok(IdentityReport::new(id, params, lhs, expected))
}

// ---------------------------------------------------------------------------

static REGISTRY: &[Entry] = &[
    Entry {
        id: "eq-1.1-hermite",
        kind: Kind::Proven,
        summary: "floor(x) + floor(x + 1/n) + ... + floor(x + (n-1)/n) = floor(n x) for x = a/q; sweeps q, n <= max, -2q <= a <= 2q",
        default_max: 50,
        enumerate: enum_hermite,
        check: check_hermite,
    },
    Entry {
        id: "eq-1.2-sqrtsum",
        kind: Kind::Proven,
        summary: "1 + floor(sqrt(2)) + ... + floor(sqrt(n-1)) = n a - a(a + 1/2)(a + 1)/3 with a = floor(sqrt(n))",
        default_max: 10_000,
        enumerate: enum_sqrtsum,
        check: check_sqrtsum,
    },
    Entry {
        id: "prop-1.1",
        kind: Kind::Proven,
        summary: "excess(p) = 0 for primes p = 1 (mod 4)",
        default_max: 2000,
        enumerate: enum_primes_1mod4,
        check: check_prop_1_1,
    },
    Entry {
        id: "prop-1.2",
        kind: Kind::Proven,
        summary: "excess(p) = (1 - p - 2 h(-p))/4 for primes p = 3 (mod 4), p >= 7",
        default_max: 500,
        enumerate: enum_primes_3mod4_ge7,
        check: check_prop_1_2,
    },
    Entry {
        id: "prop-2.1a",
        kind: Kind::Proven,
        summary: "remainder-sum closed form for sqrt_sum(n), 4 not dividing n, against the direct sum",
        default_max: 5000,
        enumerate: enum_not_mod4,
        check: check_prop_2_1a,
    },
    Entry {
        id: "prop-2.1b",
        kind: Kind::Proven,
        summary: "remainder-sum closed form for sqrt_sum(n), 4 | n, against the direct sum",
        default_max: 5000,
        enumerate: enum_mod4,
        check: check_prop_2_1b,
    },
    Entry {
        id: "cor-2.2",
        kind: Kind::Proven,
        summary: "excess(n) = -n/8 + Q + rem_sq_sum(n, n/2)/n for 4 | n with n/4 = P Q^2, P squarefree",
        default_max: 5000,
        enumerate: enum_mod4,
        check: check_cor_2_2,
    },
    Entry {
        id: "lemma-2.2",
        kind: Kind::Proven,
        summary: "count of k <= 2 floor(n/4) - 1 with n | k^2 equals (Q-1)/2, or Q-1 when 4 | n",
        default_max: 5000,
        enumerate: enum_all,
        check: check_lemma_2_2,
    },
    Entry {
        id: "lemma-2.3",
        kind: Kind::Proven,
        summary: "rem_sq_sum(p, (p-1)/2) = p(p-1)/4 + (1/2) sum_{j<p} j (j/p) for odd primes",
        default_max: 2000,
        enumerate: enum_odd_primes,
        check: check_lemma_2_3,
    },
    Entry {
        id: "eq-2.25",
        kind: Kind::Proven,
        summary: "sum_{j<p} j (j/p) = 0 for primes p = 1 (mod 4)",
        default_max: 2000,
        enumerate: enum_primes_1mod4,
        check: check_eq_2_25,
    },
    Entry {
        id: "lemma-4.1",
        kind: Kind::Proven,
        summary: "rem_sq_sum(2n, n-1) = n(n-1)/2 + 2 rem_sq_sum(n, (n-1)/2) for odd n >= 3",
        default_max: 2000,
        enumerate: enum_odd_ge3,
        check: check_lemma_4_1,
    },
    Entry {
        id: "lemma-5.2",
        kind: Kind::Proven,
        summary: "rem_sq_sum(n, (n-1)/2) = n(n - Q)/4 for n a product of primes = 1 (mod 4), n = P Q^2",
        default_max: 2000,
        enumerate: enum_products_1mod4,
        check: check_lemma_5_2,
    },
    Entry {
        id: "prop-5.1",
        kind: Kind::Proven,
        summary: "excess(n) = (Q-1)/4 (part 1) and excess(2n) = (Q-1-n)/4 (part 2) for n a product of primes = 1 (mod 4)",
        default_max: 2000,
        enumerate: enum_prop_5_1,
        check: check_prop_5_1,
    },
    Entry {
        id: "prop-4.2",
        kind: Kind::Proven,
        summary: "excess(2p) = -p/4 + (1/2p) sum j (j/p) (part 1, p >= 3); class-number case split (part 2, p >= 5)",
        default_max: 500,
        enumerate: enum_prop_4_2,
        check: check_prop_4_2,
    },
    Entry {
        id: "prop-4.3",
        kind: Kind::Proven,
        summary: "excess(4p) = 1/4 + p/2 - delta(p) h(-p), delta keyed off p mod 8",
        default_max: 500,
        enumerate: enum_primes_ge5,
        check: check_prop_4_3,
    },
    Entry {
        id: "lemma-4.4",
        kind: Kind::Proven,
        summary: "h(-p) = (S1 - S3)/p from sums of residues j = 1, 3 (mod 4) below 2p, p = 1 (mod 4)",
        default_max: 500,
        enumerate: enum_primes_1mod4,
        check: check_lemma_4_4,
    },
    Entry {
        id: "lemma-4.5",
        kind: Kind::Proven,
        summary: "h(-p) = (1/p) sum over odd k < p of (2p - Rem(k^2 / 4p)), p = 1 (mod 4)",
        default_max: 500,
        enumerate: enum_primes_1mod4,
        check: check_lemma_4_5,
    },
    Entry {
        id: "lemma-4.6",
        kind: Kind::Proven,
        summary: "h(-p) = (1/p) sum over all k < p of (2p - Rem(k^2 / 4p)), p = 1 (mod 4)",
        default_max: 500,
        enumerate: enum_primes_1mod4,
        check: check_lemma_4_6,
    },
    Entry {
        id: "lemma-4.7",
        kind: Kind::Proven,
        summary: "(1/2p) sum_{k<p} Rem(k^2 / 4p) = p - 3/2 + (eps(p) - 2) h(-p), p = 3 (mod 4), p >= 7",
        default_max: 500,
        enumerate: enum_primes_3mod4_ge7,
        check: check_lemma_4_7,
    },
    Entry {
        id: "eq-4.11",
        kind: Kind::Proven,
        summary: "rem_sq_sum(p, p-1) = p(p-1)/2 - p h(-p) for primes p = 3 (mod 4), p >= 7",
        default_max: 500,
        enumerate: enum_primes_3mod4_ge7,
        check: check_eq_4_11,
    },
    Entry {
        id: "eq-4.17",
        kind: Kind::Proven,
        summary: "number of quadratic residues in [1, p/4] equals (p-3)/8 + eps(p) h(-p)/2, p = 3 (mod 4), p >= 7",
        default_max: 500,
        enumerate: enum_primes_3mod4_ge7,
        check: check_eq_4_17,
    },
    Entry {
        id: "prop-6.1a",
        kind: Kind::Proven,
        summary: "excess(2^a) = 2^(2b-3) - 2^(b-2) + 3/4 (a = 2b) or 2^(2b-2) - 2^(b-1) + 3/4 (a = 2b+1), a >= 2",
        default_max: 2000,
        enumerate: enum_prop_6_1a,
        check: check_prop_6_1a,
    },
    Entry {
        id: "prop-6.1b",
        kind: Kind::Proven,
        summary: "excess(p^a) = (p^floor(a/2) - 1)/4 for primes p = 1 (mod 4)",
        default_max: 2000,
        enumerate: |max| enum_prime_powers(max, 1),
        check: check_prop_6_1b,
    },
    Entry {
        id: "prop-6.1c",
        kind: Kind::Proven,
        summary: "excess(p^a) closed forms with the h*(-p) correction for primes p = 3 (mod 4)",
        default_max: 2000,
        enumerate: |max| enum_prime_powers(max, 3),
        check: check_prop_6_1c,
    },
    Entry {
        id: "lemma-6.2",
        kind: Kind::Proven,
        summary: "closed forms for the half-range remainder sum rem_sq_sum(p^a, .) of prime powers",
        default_max: 2000,
        enumerate: enum_lemma_6_2,
        check: check_lemma_6_2,
    },
    Entry {
        id: "lemma-6.3",
        kind: Kind::Proven,
        summary: "remainder scaling (part 1), distinctness (2), power-of-two symmetry (3) and odd-square mod-8 (4) facts",
        default_max: 200,
        enumerate: enum_lemma_6_3,
        check: check_lemma_6_3,
    },
    Entry {
        id: "eq-6.11a",
        kind: Kind::Proven,
        summary: "Rem(((m-1)/2)^2 / m) = (m+1)/4 for m = p^(2 beta + 1), p = 3 (mod 4)",
        default_max: 2000,
        enumerate: enum_eq_6_11a,
        check: check_eq_6_11a,
    },
    Entry {
        id: "eq-6.18a",
        kind: Kind::Proven,
        summary: "rem_sq_sum(p, (p-1)/2) = p(p-1)/4 for primes p = 1 (mod 4)",
        default_max: 2000,
        enumerate: enum_primes_1mod4,
        check: check_eq_6_18a,
    },
    Entry {
        id: "conj-7.1",
        kind: Kind::Conjecture,
        summary: "normalized remainder sum of n = p^a q^b (p = 1, q = 3 mod 4) via h*(-q) and h*(-pq)",
        default_max: 1_000_000,
        enumerate: enum_conj_7_1,
        check: check_conj_7_1,
    },
    Entry {
        id: "conj-7.2",
        kind: Kind::Conjecture,
        summary: "normalized remainder sum of n = p^a q^b (p, q = 3 mod 4 distinct) via h*(-p) and h*(-q)",
        default_max: 1_000_000,
        enumerate: enum_conj_7_2,
        check: check_conj_7_2,
    },
    Entry {
        id: "eq-7.3",
        kind: Kind::Conjecture,
        summary: "normalized remainder sum of pq equals (pq-1)/2 - h*(-p) - h*(-q), p, q = 3 (mod 4) distinct",
        default_max: 2000,
        enumerate: enum_3mod4_prime_pairs,
        check: check_eq_7_3,
    },
    Entry {
        id: "eq-7.4",
        kind: Kind::Conjecture,
        summary: "excess(pq) = -(h*(-p) + h*(-q))/2 for distinct primes p, q = 3 (mod 4)",
        default_max: 2000,
        enumerate: enum_3mod4_prime_pairs,
        check: check_eq_7_4,
    },
    Entry {
        id: "conj-7.3a",
        kind: Kind::Conjecture,
        summary: "excess(n) = -(1/2) sum of h*(-d) over divisors d = 3 (mod 4), odd squarefree n = 1 (mod 4)",
        default_max: 100_000,
        enumerate: |max| odd_squarefree_up_to(max, Some(1)),
        check: check_conj_7_3a,
    },
    Entry {
        id: "conj-7.3b",
        kind: Kind::Conjecture,
        summary: "excess(n) = (1-n)/4 - (1/2) sum of h*(-d) over divisors d = 3 (mod 4), odd squarefree n = 3 (mod 4)",
        default_max: 100_000,
        enumerate: |max| odd_squarefree_up_to(max, Some(3)),
        check: check_conj_7_3b,
    },
    Entry {
        id: "conj-7.4",
        kind: Kind::Conjecture,
        summary: "h*(-n) [n = 3 mod 4] = sum_{d|n} mu(n/d) ((1-d)/2 [d = 3 mod 4] - 2 excess(d)), odd squarefree n",
        default_max: 100_000,
        enumerate: |max| odd_squarefree_up_to(max, None),
        check: check_conj_7_4,
    },
    Entry {
        id: "table-1",
        kind: Kind::Table,
        summary: "tabulated excess(p), -p-1-4 excess(p), and h(-p) for the twelve primes p = 3 (mod 4), 7 <= p < 100",
        default_max: 100,
        enumerate: enum_table_1,
        check: check_table_1,
    },
    Entry {
        id: "table-2",
        kind: Kind::Table,
        summary: "tabulated excess(p^a) for p in {2,3,5,7,11,13,17}, a <= 8: closed forms plus brute force below 10^7",
        default_max: 17,
        enumerate: enum_table_2,
        check: check_table_2,
    },
];

pub fn all_entries() -> &'static [Entry] {
    REGISTRY
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<&str> = REGISTRY.iter().map(|e| e.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), REGISTRY.len());
    }

    #[test]
    fn geometric_matches_formula() {
        for p in [2u64, 3, 5, 13] {
            for e in 0..6u64 {
                let direct = (p.pow(e as u32) as i128 - 1) / (p as i128 - 1);
                assert_eq!(geometric(p, e), direct);
            }
        }
    }

    #[test]
    fn enum_conj_7_1_is_lexicographic_and_in_range() {
        let cases = enum_conj_7_1(2000);
        assert!(!cases.is_empty());
        for w in cases.windows(2) {
            assert!(w[0] < w[1], "not lexicographic: {:?} then {:?}", w[0], w[1]);
        }
        for c in &cases {
            let n = (c[0] as u64).pow(c[2] as u32) * (c[1] as u64).pow(c[3] as u32);
            assert!(n <= 2000);
            assert!(c[0] as u64 % 4 == 1 && c[1] as u64 % 4 == 3);
        }
    }

    #[test]
    fn enum_conj_7_2_pairs_are_ordered() {
        let cases = enum_conj_7_2(2000);
        assert!(!cases.is_empty());
        for c in &cases {
            assert!(c[0] < c[1]);
            let n = (c[0] as u64).pow(c[2] as u32) * (c[1] as u64).pow(c[3] as u32);
            assert!(n <= 2000);
        }
    }

    #[test]
    fn table_domains() {
        assert_eq!(enum_table_1(0).len(), 36);
        // 56 closed-form cells plus the brute-force cells below 10^7.
        let t2 = enum_table_2(0);
        let closed = t2.iter().filter(|c| c[2] == 0).count();
        let brute = t2.iter().filter(|c| c[2] == 1).count();
        assert_eq!(closed, 56);
        assert_eq!(brute, 49);
    }

    #[test]
    fn prime_power_checks_use_consistency_above_brute_limit() {
        // 11^8 and 13^8 are far beyond brute force; the check still runs.
        assert!(check_prop_6_1c(&[11, 8]).unwrap().pass);
        assert!(check_prop_6_1b(&[13, 8]).unwrap().pass);
        assert!(check_lemma_6_2(&[11, 8]).unwrap().pass);
        assert!(check_lemma_6_2(&[2, 40]).unwrap().pass);
    }

    #[test]
    fn part_domains_are_validated() {
        assert!(check_prop_5_1(&[25, 3]).is_err());
        assert!(check_prop_4_2(&[3, 2]).is_err());
        assert!(check_lemma_6_3(&[5, 1, 1]).is_err());
        assert!(check_table_2(&[17, 8, 1]).is_err()); // 17^8 has no brute-force cell
        assert!(check_conj_7_2(&[7, 7, 1, 1]).is_err());
        assert!(check_conj_7_1(&[3, 7, 1, 1]).is_err()); // 3 is not 1 mod 4
    }
}
