//! The central floor-function sums: the definitional evaluators and, where
//! one exists, an exact closed form.
//!
//! For a positive integer n write nu = floor(n/4). The basic objects are
//!
//!   sqrt_sum(n)            sum_{j=1}^{nu} floor(sqrt(j*n))
//!   excess(n)              sqrt_sum(n) - (n^2 - 1)/12
//!   rem_sq_sum(n, k)       sum of the remainders of 1^2, ..., k^2 mod n
//!   normalized_rem_sum(n)  rem_sq_sum(n, n-1) / n
//!
//! The closed forms route sqrt_sum through quadratic-residue remainder
//! sums and, for prime powers, through class numbers. The definitional
//! evaluators are the oracles: every closed form is tested against them,
//! never the reverse. A closed form producing a non-integer where an
//! integer is required panics; nothing is ever rounded.

use crate::arith::{isqrt, squarefree_decomp, ExactRational};
use crate::classnum::h_star;
use crate::error::Error;

/// n written as 4*nu + r with 0 <= r <= 3, so nu = floor(n/4).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NuDecomposition {
    pub nu: u64,
    pub r: u8,
}

pub fn nu_decomposition(n: u64) -> NuDecomposition {
    NuDecomposition { nu: n / 4, r: (n % 4) as u8 }
}

/// Definitional floor-of-square-root sum over j = 1..floor(n/4).
///
/// Runs in O(n) integer square roots; this is the normative oracle for
/// every closed form below.
pub fn sqrt_sum(n: u64) -> u128 {
    assert!(n >= 1, "sqrt_sum: argument must be positive");
    let n = n as u128;
    let mut sum: u128 = 0;
    for j in 1..=n / 4 {
        sum += isqrt(j * n);
    }
    sum
}

/// sqrt_sum(n) - (n^2 - 1)/12 as an exact rational.
///
/// The denominator always divides 12.
pub fn excess(n: u64) -> ExactRational {
    let f = sqrt_sum(n) as i128;
    let n = n as i128;
    ExactRational::new(12 * f - (n * n - 1), 12)
}

/// sum_{k=1}^{k_max} Rem(k^2 / n), accumulated in 128 bits.
///
/// Squares are maintained incrementally mod n, so the loop runs without
/// multiplications or divisions.
pub fn rem_sq_sum(n: u64, k_max: u64) -> u128 {
    assert!(n >= 1, "rem_sq_sum: modulus must be positive");
    if n == 1 {
        return 0;
    }
    let mut sum: u128 = 0;
    let mut cur: u64 = 0; // k^2 mod n
    let mut step: u64 = n - 1; // (2k - 1) mod n, primed so the first += 2 gives 1
    for _ in 0..k_max {
        step += 2;
        if step >= n {
            step -= n;
        }
        cur += step;
        if cur >= n {
            cur -= n;
        }
        sum += cur as u128;
    }
    sum
}

/// Number of k with 1 <= k <= 2*floor(n/4) - 1 and n | k^2, by direct scan.
pub fn square_divisible_count(n: u64) -> u64 {
    assert!(n >= 1);
    let nu = n / 4;
    if nu == 0 {
        return 0;
    }
    let n = n as u128;
    (1..=2 * nu as u128 - 1).filter(|&k| (k * k) % n == 0).count() as u64
}

/// The same count in closed form: with n = P*Q^2 (P squarefree) it equals
/// (Q-1)/2 when 4 does not divide n, and Q-1 when n = 4*P*Q^2.
pub fn square_divisible_count_closed(n: u64) -> u64 {
    assert!(n >= 1);
    if n % 4 == 0 {
        squarefree_decomp(n / 4).q_part - 1
    } else {
        // Q is odd here: an even Q would put a factor 4 in n.
        (squarefree_decomp(n).q_part - 1) / 2
    }
}

/// Closed form for sqrt_sum via the remainder-sum identity, dispatching on
/// n mod 4.
///
/// For n = 4*nu + r with 1 <= r <= 3 and n = P*Q^2, P squarefree:
///
///   F = 2 nu^2 - nu (8 nu^2 + 6 nu + 1)/(3n) + (Q-1)/2
///       + rem_sq_sum(n, 2 nu)/n,
///
/// and for n = 4*nu with nu = P'*Q'^2:
///
///   F = (4/3) nu^2 - nu/2 - 1/12 + Q' + rem_sq_sum(n, 2 nu)/n.
///
/// Panics if the assembled value is not a nonnegative integer.
pub fn sqrt_sum_closed(n: u64) -> u128 {
    assert!(n >= 1);
    let NuDecomposition { nu, r } = nu_decomposition(n);
    let s = rem_sq_sum(n, 2 * nu) as i128;
    let nu = nu as i128;
    let n = n as i128;
    // Assembled over the common denominator 12n to keep everything integral.
    let scaled = if r == 0 {
        let q = squarefree_decomp((n / 4) as u64).q_part as i128;
        16 * n * nu * nu - 6 * n * nu - n + 12 * n * q + 12 * s
    } else {
        let q = squarefree_decomp(n as u64).q_part as i128;
        24 * n * nu * nu - 4 * nu * (8 * nu * nu + 6 * nu + 1) + 6 * n * (q - 1) + 12 * s
    };
    assert!(scaled >= 0 && scaled % (12 * n) == 0, "closed form for sqrt_sum({n}) is not a nonnegative integer");
    (scaled / (12 * n)) as u128
}

/// Closed form for excess(n) when 4 | n: with n/4 = P*Q^2, P squarefree,
///
///   f = -n/8 + Q + rem_sq_sum(n, n/2)/n.
pub fn excess_closed_mod4(n: u64) -> Result<ExactRational, Error> {
    if n == 0 || n % 4 != 0 {
        return Err(Error::domain(format!("excess_closed_mod4: {n} is not divisible by 4")));
    }
    let q = squarefree_decomp(n / 4).q_part as i128;
    let s = rem_sq_sum(n, n / 2) as i128;
    let n = n as i128;
    Ok(ExactRational::new(-3 * n * n + 24 * n * q + 24 * s, 24 * n))
}

/// Normalized remainder sum rem_sq_sum(n, n-1)/n, defined for n >= 2.
///
/// The denominator always divides 12.
pub fn normalized_rem_sum(n: u64) -> Result<ExactRational, Error> {
    if n < 2 {
        return Err(Error::domain(format!("normalized_rem_sum: argument must be >= 2, got {n}")));
    }
    Ok(ExactRational::new(rem_sq_sum(n, n - 1) as i128, n as i128))
}

/// Upper index of the "half range" remainder sum for n: n/2 when 4 | n,
/// (n-1)/2 for odd n.
pub(crate) fn half_range(n: u64) -> u64 {
    debug_assert!(n % 2 == 1 || n % 4 == 0);
    if n % 2 == 1 {
        (n - 1) / 2
    } else {
        n / 2
    }
}

/// For odd n = 3 (mod 4) the remainder of ((n-1)/2)^2 mod n is (n+1)/4;
/// it separates the half-range sum from the sum to 2*nu.
fn half_range_tail(n: u64) -> u128 {
    if n % 4 == 3 {
        (n as u128 + 1) / 4
    } else {
        0
    }
}

/// excess(n) implied by the half-range remainder sum, for odd n or 4 | n.
pub(crate) fn excess_from_half_rem_sum(n: u64, s_half: u128) -> ExactRational {
    assert!(n % 2 == 1 || n % 4 == 0);
    if n % 4 == 0 {
        let q = squarefree_decomp(n / 4).q_part as i128;
        let n = n as i128;
        return ExactRational::new(-3 * n * n + 24 * n * q + 24 * s_half as i128, 24 * n);
    }
    let s2nu = s_half as i128 - half_range_tail(n) as i128;
    assert!(s2nu >= 0);
    let q = squarefree_decomp(n).q_part as i128;
    let nu = (n / 4) as i128;
    let n = n as i128;
    let f_scaled = 24 * n * nu * nu - 4 * nu * (8 * nu * nu + 6 * nu + 1) + 6 * n * (q - 1) + 12 * s2nu;
    ExactRational::new(f_scaled - n * (n * n - 1), 12 * n)
}

/// Inverse of `excess_from_half_rem_sum`: the half-range remainder sum
/// implied by an excess value. Panics if it is not a nonnegative integer.
pub(crate) fn half_rem_sum_from_excess(n: u64, f: ExactRational) -> u128 {
    assert!(n % 2 == 1 || n % 4 == 0);
    let twelve_f = (f * ExactRational::from(12i128)).to_integer();
    if n % 4 == 0 {
        let q = squarefree_decomp(n / 4).q_part as i128;
        let n = n as i128;
        let scaled = 2 * n * twelve_f + 3 * n * n - 24 * n * q;
        assert!(scaled >= 0 && scaled % 24 == 0, "remainder sum for n = {n} is not a nonnegative integer");
        return (scaled / 24) as u128;
    }
    let q = squarefree_decomp(n).q_part as i128;
    let nu = (n / 4) as i128;
    let tail = half_range_tail(n) as i128;
    let n = n as i128;
    let scaled =
        n * twelve_f + n * (n * n - 1) - 24 * n * nu * nu + 4 * nu * (8 * nu * nu + 6 * nu + 1) - 6 * n * (q - 1);
    assert!(scaled % 12 == 0);
    let s = scaled / 12 + tail;
    assert!(s >= 0, "remainder sum for n = {n} is negative");
    s as u128
}

fn checked_pow(p: u64, e: u32) -> Result<u64, Error> {
    p.checked_pow(e)
        .filter(|&v| v < 1 << 41)
        .ok_or_else(|| Error::domain(format!("{p}^{e} exceeds the width contract")))
}

fn pow2_rational(e: i64) -> ExactRational {
    if e >= 0 {
        ExactRational::from(1i128 << e)
    } else {
        ExactRational::new(1, 1i128 << (-e))
    }
}

/// Closed form for excess(p^alpha) at a prime p.
///
/// For p = 2 (alpha >= 2) the value is 2^(2b-3) - 2^(b-2) + 3/4 or
/// 2^(2b-2) - 2^(b-1) + 3/4 for alpha = 2b, 2b+1; for p = 1 (mod 4) it is
/// (p^floor(alpha/2) - 1)/4; for p = 3 (mod 4) the class-number term
/// h*(-p) enters:
///
///   excess(p^(2b))   =  (p^b - 1)(1 - 2 h*(-p)/(p-1)) / 4
///   excess(p^(2b+1)) = -(p^(b+1) - 1)(p^b + 2 h*(-p)/(p-1)) / 4.
///
/// alpha = 1 at p = 2 falls outside these forms and is evaluated
/// definitionally (a constant-time case).
pub fn excess_prime_power(p: u64, alpha: u32) -> Result<ExactRational, Error> {
    if !crate::arith::is_prime(p) || alpha == 0 {
        return Err(Error::domain(format!("excess_prime_power: need a prime and alpha >= 1, got {p}^{alpha}")));
    }
    checked_pow(p, alpha)?;
    if p == 2 {
        if alpha == 1 {
            return Ok(excess(2));
        }
        let b = (alpha / 2) as i64;
        return Ok(if alpha % 2 == 0 {
            pow2_rational(2 * b - 3) - pow2_rational(b - 2) + ExactRational::new(3, 4)
        } else {
            pow2_rational(2 * b - 2) - pow2_rational(b - 1) + ExactRational::new(3, 4)
        });
    }
    let b = alpha / 2;
    if p % 4 == 1 {
        return Ok(ExactRational::new(p.pow(b) as i128 - 1, 4));
    }
    let h = h_star(p)?;
    let (hn, hd) = (h.numer(), h.denom());
    let pm1 = (p - 1) as i128;
    if alpha % 2 == 0 {
        let pb = p.pow(b) as i128;
        Ok(ExactRational::new((pb - 1) * (pm1 * hd - 2 * hn), 4 * pm1 * hd))
    } else {
        let pb = p.pow(b) as i128;
        let pb1 = p.pow(b + 1) as i128;
        Ok(ExactRational::new(-(pb1 - 1) * (pb * pm1 * hd + 2 * hn), 4 * pm1 * hd))
    }
}

/// Closed form for the half-range remainder sum of a prime power:
/// rem_sq_sum(p^alpha, K) with K = half_range(p^alpha).
///
/// For p = 2 (alpha >= 2):
///   alpha = 2b:   2^(2b-2) (2^(2b) - 3*2^b + 3)
///   alpha = 2b+1: 2^(2b-1) (2^(2b+1) - 4*2^b + 3)
/// for p = 1 (mod 4):
///   alpha = 2b:   p^(3b) (p^b - 1)/4
///   alpha = 2b+1: p^(3b+1) (p^(b+1) - 1)/4
/// and for p = 3 (mod 4), with the h*(-p) correction:
///   alpha = 2b:   p^(2b)   (p^b - 1)    (p^b - 2 h*(-p)/(p-1))/4
///   alpha = 2b+1: p^(2b+1) (p^(b+1) - 1)(p^b - 2 h*(-p)/(p-1))/4.
pub fn rem_half_sum_prime_power(p: u64, alpha: u32) -> Result<u128, Error> {
    if !crate::arith::is_prime(p) || alpha == 0 || (p == 2 && alpha < 2) {
        return Err(Error::domain(format!(
            "rem_half_sum_prime_power: need a prime power with alpha >= 1 (>= 2 for p = 2), got {p}^{alpha}"
        )));
    }
    checked_pow(p, alpha)?;
    let b = alpha / 2;
    let val = if p == 2 {
        let b = b as u32;
        if alpha % 2 == 0 {
            ExactRational::from((1i128 << (2 * b - 2)) * ((1i128 << (2 * b)) - 3 * (1i128 << b) + 3))
        } else {
            ExactRational::from((1i128 << (2 * b - 1)) * ((1i128 << (2 * b + 1)) - 4 * (1i128 << b) + 3))
        }
    } else if p % 4 == 1 {
        if alpha % 2 == 0 {
            ExactRational::new((p.pow(3 * b) as i128) * (p.pow(b) as i128 - 1), 4)
        } else {
            ExactRational::new((p.pow(3 * b + 1) as i128) * (p.pow(b + 1) as i128 - 1), 4)
        }
    } else {
        let h = h_star(p)?;
        let (hn, hd) = (h.numer(), h.denom());
        let pm1 = (p - 1) as i128;
        let pb = p.pow(b) as i128;
        let correction = pb * pm1 * hd - 2 * hn;
        if alpha % 2 == 0 {
            ExactRational::new((p.pow(2 * b) as i128) * (pb - 1) * correction, 4 * pm1 * hd)
        } else {
            ExactRational::new((p.pow(2 * b + 1) as i128) * (p.pow(b + 1) as i128 - 1) * correction, 4 * pm1 * hd)
        }
    };
    let v = val.to_integer();
    assert!(v >= 0, "closed remainder sum for {p}^{alpha} is negative");
    Ok(v as u128)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{primes_up_to, rem};
    use crate::symbols::legendre;

    fn r(n: i128, d: i128) -> ExactRational {
        ExactRational::new(n, d)
    }

    #[test]
    fn sqrt_sum_examples() {
        assert_eq!(sqrt_sum(1), 0);
        assert_eq!(sqrt_sum(13), 14);
        assert_eq!(sqrt_sum(28), 68);
    }

    #[test]
    fn excess_examples() {
        assert_eq!(excess(5), ExactRational::ZERO);
        assert_eq!(excess(7), r(-2, 1));
        assert_eq!(excess(2), r(-1, 4));
        assert_eq!(excess(163), r(-41, 1));
    }

    #[test]
    fn rem_sq_sum_examples() {
        assert_eq!(rem_sq_sum(13, 6), 39);
        assert_eq!(rem_sq_sum(4, 0), 0);
        assert_eq!(rem_sq_sum(99991, 0), 0);
        assert_eq!(rem_sq_sum(4, 2), 1);
    }

    #[test]
    fn rem_sq_sum_matches_direct() {
        for n in 1u64..=200 {
            for k_max in [0, 1, 2, n / 2, n, 2 * n + 3] {
                let direct: u128 = (1..=k_max as u128).map(|k| rem(k * k, n as u128)).sum();
                assert_eq!(rem_sq_sum(n, k_max), direct, "n={n} k_max={k_max}");
            }
        }
    }

    #[test]
    fn closed_forms_match_direct_oracles() {
        for n in 1u64..=2000 {
            assert_eq!(sqrt_sum_closed(n), sqrt_sum(n), "sqrt_sum at n = {n}");
            assert_eq!(square_divisible_count_closed(n), square_divisible_count(n), "count at n = {n}");
            if n % 4 == 0 {
                assert_eq!(excess_closed_mod4(n).unwrap(), excess(n), "excess at n = {n}");
            }
        }
        assert!(excess_closed_mod4(6).is_err());
    }

    #[test]
    fn square_divisible_count_examples() {
        assert_eq!(square_divisible_count(12), 0);
        assert_eq!(square_divisible_count(36), 2);
        assert_eq!(square_divisible_count(3), 0);
        assert_eq!(square_divisible_count_closed(9), 1);
        for p in [2u64, 3, 5, 97] {
            assert_eq!(square_divisible_count_closed(p), 0);
        }
    }

    #[test]
    fn excess_closed_mod4_examples() {
        assert_eq!(excess_closed_mod4(4).unwrap(), r(3, 4));
        assert_eq!(excess_closed_mod4(16).unwrap(), r(7, 4));
        assert_eq!(excess_closed_mod4(12).unwrap(), excess(12));
    }

    #[test]
    fn normalized_rem_sum_examples() {
        assert_eq!(normalized_rem_sum(21).unwrap(), r(26, 3));
        assert_eq!(normalized_rem_sum(2).unwrap(), r(1, 2));
        assert_eq!(normalized_rem_sum(13).unwrap(), r(6, 1));
        assert!(normalized_rem_sum(1).is_err());
    }

    #[test]
    fn twelve_times_excess_is_integral() {
        for n in 1u64..=3000 {
            assert!((excess(n) * r(12, 1)).is_integer(), "n = {n}");
        }
    }

    // rem_sq_sum(p, (p-1)/2) = p(p-1)/4 + (1/2) sum j (j/p).
    #[test]
    fn half_rem_sum_legendre_identity() {
        for p in primes_up_to(500).into_iter().skip(1) {
            let lhs = r(rem_sq_sum(p, (p - 1) / 2) as i128, 1);
            let sum: i128 = (1..p).map(|j| j as i128 * legendre(j as i64, p).unwrap() as i128).sum();
            let rhs = r((p * (p - 1)) as i128, 4) + r(sum, 2);
            assert_eq!(lhs, rhs, "p = {p}");
            if p % 4 == 1 {
                assert_eq!(sum, 0, "weighted symbol sum at p = {p}");
                assert_eq!(rem_sq_sum(p, (p - 1) / 2), (p as u128) * (p as u128 - 1) / 4);
            }
        }
    }

    // rem_sq_sum(2n, n-1) = n(n-1)/2 + 2 rem_sq_sum(n, (n-1)/2) for odd n.
    #[test]
    fn doubled_modulus_rem_identity() {
        for n in (3u64..=501).step_by(2) {
            let lhs = rem_sq_sum(2 * n, n - 1);
            let rhs = (n as u128) * (n as u128 - 1) / 2 + 2 * rem_sq_sum(n, (n - 1) / 2);
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }

    #[test]
    fn prime_power_closed_forms_match_brute_force() {
        for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 29, 31] {
            let mut alpha = 1;
            while p.pow(alpha) <= 100_000 {
                let n = p.pow(alpha);
                assert_eq!(excess_prime_power(p, alpha).unwrap(), excess(n), "{p}^{alpha}");
                if !(p == 2 && alpha == 1) {
                    assert_eq!(
                        rem_half_sum_prime_power(p, alpha).unwrap(),
                        rem_sq_sum(n, half_range(n)),
                        "{p}^{alpha}"
                    );
                }
                alpha += 1;
            }
        }
        assert!(excess_prime_power(6, 2).is_err());
        assert!(excess_prime_power(7, 0).is_err());
    }

    #[test]
    fn half_rem_sum_conversions_roundtrip() {
        for n in [3u64, 7, 9, 13, 25, 27, 49, 4, 8, 16, 64, 243, 343] {
            let s = rem_sq_sum(n, half_range(n));
            assert_eq!(excess_from_half_rem_sum(n, s), excess(n), "n = {n}");
            assert_eq!(half_rem_sum_from_excess(n, excess(n)), s, "n = {n}");
        }
    }

    #[test]
    fn nu_decomposition_reconstructs() {
        for n in 1u64..=100 {
            let d = nu_decomposition(n);
            assert_eq!(4 * d.nu + d.r as u64, n);
            assert_eq!(d.nu, n / 4);
        }
    }

    // Rem((kp)^2 / p^(a+2)) = p^2 Rem(k^2 / p^a).
    #[test]
    fn remainder_scaling_identity() {
        for p in [2u128, 3, 5, 7] {
            for a in 1..=4u32 {
                for k in 1..=200u128 {
                    let lhs = rem((k * p) * (k * p), p.pow(a + 2));
                    let rhs = p * p * rem(k * k, p.pow(a));
                    assert_eq!(lhs, rhs, "p={p} a={a} k={k}");
                }
            }
        }
    }

    // Odd squares leave remainders = 1 (mod 8) modulo 2^(a+2).
    #[test]
    fn odd_square_remainders_mod8() {
        for a in 1..=12u32 {
            for l in 0..1u128 << (a + 1) {
                assert_eq!(rem((2 * l + 1) * (2 * l + 1), 1 << (a + 2)) % 8, 1, "a={a} l={l}");
            }
        }
    }
}
