//! Exact integer kernel: integer square root, division remainders,
//! factorization, squarefree decomposition, the Möbius function, and the
//! exact rational type used for every fractional value in the crate.
//!
//! All operations are pure and exact for inputs up to 2^40, with 128-bit
//! intermediates where squares or sums of squares appear.

mod rational;

pub use rational::ExactRational;

use std::sync::OnceLock;

/// Trial-division primes are cached up to this bound; factoring falls back
/// to Pollard's rho for cofactors with no prime factor below it.
const SIEVE_LIMIT: u32 = 1 << 20;

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| sieve_primes(SIEVE_LIMIT as u64).iter().map(|&p| p as u32).collect())
}

/// Primes up to `limit` (inclusive) by a plain sieve of Eratosthenes.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    sieve_primes(limit)
}

fn sieve_primes(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

/// Floor of the square root, exact for all `x < 2^126`.
///
/// A floating-point seed is corrected by integer arithmetic, so the result
/// is never off by one.
pub fn isqrt(x: u128) -> u128 {
    if x < (1 << 62) {
        return isqrt_u64(x as u64) as u128;
    }
    debug_assert!(x < (1 << 126), "isqrt argument out of contract range");
    let mut r = (x as f64).sqrt() as u128;
    if r == 0 {
        r = 1;
    }
    // Newton steps converge from above; the seed may start below the root,
    // in which case the loop exits immediately and the correction below
    // walks the last few steps.
    loop {
        let next = (r + x / r) >> 1;
        if next >= r {
            break;
        }
        r = next;
    }
    while r * r > x {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    r
}

fn isqrt_u64(x: u64) -> u64 {
    if x == 0 {
        return 0;
    }
    // For x < 2^62 the f64 estimate is within 1 of the true root.
    let mut r = (x as f64).sqrt() as u64;
    while r * r > x {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    r
}

/// Smallest nonnegative remainder of `a` divided by `b`.
///
/// Panics if `b == 0`.
pub fn rem(a: u128, b: u128) -> u128 {
    assert!(b >= 1, "rem: divisor must be positive");
    a % b
}

pub fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Deterministic Miller-Rabin, exact for all `n < 2^64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    // This witness set is deterministic for every 64-bit integer.
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Prime factorization with strictly increasing primes and exponents >= 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pairs: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.pairs
    }

    /// The factored integer, reconstructed.
    pub fn value(&self) -> u64 {
        self.pairs.iter().fold(1u64, |acc, &(p, e)| acc * p.pow(e))
    }

    pub fn is_squarefree(&self) -> bool {
        self.pairs.iter().all(|&(_, e)| e == 1)
    }
}

/// Factor `n >= 1` by trial division over the cached sieve, with a
/// deterministic Pollard rho fallback for cofactors above the sieve range.
///
/// Panics if `n == 0`.
pub fn factorize(n: u64) -> Factorization {
    assert!(n >= 1, "factorize: argument must be positive");
    let mut pairs: Vec<(u64, u32)> = Vec::new();
    let mut m = n;
    for &p in small_primes() {
        let p = p as u64;
        if p * p > m {
            break;
        }
        if m % p == 0 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            pairs.push((p, e));
        }
    }
    if m > 1 {
        if m < (SIEVE_LIMIT as u64).pow(2) || is_prime(m) {
            // No factor below the sieve limit, so a cofactor under its
            // square is prime.
            pairs.push((m, 1));
        } else {
            let mut rough = vec![m];
            let mut found: Vec<u64> = Vec::new();
            while let Some(c) = rough.pop() {
                if is_prime(c) {
                    found.push(c);
                    continue;
                }
                let d = pollard_rho(c);
                rough.push(d);
                rough.push(c / d);
            }
            found.sort_unstable();
            for p in found {
                match pairs.iter_mut().find(|(q, _)| *q == p) {
                    Some((_, e)) => *e += 1,
                    None => pairs.push((p, 1)),
                }
            }
            pairs.sort_unstable_by_key(|&(p, _)| p);
        }
    }
    Factorization { pairs }
}

/// Brent-cycle Pollard rho with a deterministic parameter schedule.
/// Only called on odd composites with no factor below the sieve limit.
fn pollard_rho(n: u64) -> u64 {
    debug_assert!(n % 2 == 1 && !is_prime(n));
    for c in 1..64u64 {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let mut x = 2u64;
        let mut y = 2u64;
        let mut d = 1u64;
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd(x.abs_diff(y) as u128, n as u128) as u64;
        }
        if d != n {
            return d;
        }
    }
    unreachable!("pollard rho exhausted its parameter schedule on {n}");
}

/// Möbius function: 0 when a square divides `n`, otherwise (-1)^(number of
/// prime factors).
pub fn moebius(n: u64) -> i8 {
    let f = factorize(n);
    if !f.is_squarefree() {
        return 0;
    }
    if f.pairs().len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// All divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let f = factorize(n);
    let mut out = vec![1u64];
    for &(p, e) in f.pairs() {
        let prev = out.len();
        let mut pe = 1u64;
        for _ in 0..e {
            pe *= p;
            for i in 0..prev {
                out.push(out[i] * pe);
            }
        }
    }
    out.sort_unstable();
    out
}

/// The unique decomposition `n = p_part * q_part^2` with `p_part` squarefree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SquarefreeDecomp {
    pub p_part: u64,
    pub q_part: u64,
}

/// Decompose `n >= 1` as a squarefree part times a perfect square.
///
/// Panics if `n == 0`.
pub fn squarefree_decomp(n: u64) -> SquarefreeDecomp {
    assert!(n >= 1, "squarefree_decomp: argument must be positive");
    let mut p_part = 1u64;
    let mut q_part = 1u64;
    for &(p, e) in factorize(n).pairs() {
        if e % 2 == 1 {
            p_part *= p;
        }
        q_part *= p.pow(e / 2);
    }
    SquarefreeDecomp { p_part, q_part }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isqrt_examples() {
        assert_eq!(isqrt(0), 0);
        assert_eq!(isqrt(195), 13);
        assert_eq!(isqrt(196), 14);
    }

    #[test]
    fn isqrt_exhaustive_small() {
        for x in 0u128..=1_000_000 {
            let r = isqrt(x);
            assert!(r * r <= x && x < (r + 1) * (r + 1), "isqrt({x}) = {r}");
        }
    }

    #[test]
    fn isqrt_square_boundaries() {
        // k^2 - 1, k^2, k^2 + 1 across the full contract range.
        let mut k: u128 = 2;
        while k <= 1_000_000_000 {
            for x in [k * k - 1, k * k, k * k + 1] {
                let r = isqrt(x);
                assert!(r * r <= x && x < (r + 1) * (r + 1), "isqrt({x}) = {r}");
            }
            k = k * 17 / 16 + 1;
        }
        for k in [(1u128 << 40) - 3, (1 << 51) + 7, (1 << 62) - 1, (1 << 62), (1 << 63) - 5] {
            for x in [k * k - 1, k * k, k * k + 1] {
                let r = isqrt(x);
                assert!(r * r <= x && x < (r + 1) * (r + 1), "isqrt({x}) = {r}");
            }
        }
    }

    #[test]
    fn rem_examples() {
        assert_eq!(rem(49, 13), 10);
        assert_eq!(rem(0, 7), 0);
        assert_eq!(rem(36, 13), 10);
    }

    #[test]
    #[should_panic(expected = "divisor must be positive")]
    fn rem_rejects_zero_divisor() {
        rem(1, 0);
    }

    #[test]
    fn squarefree_decomp_examples() {
        assert_eq!(squarefree_decomp(1), SquarefreeDecomp { p_part: 1, q_part: 1 });
        assert_eq!(squarefree_decomp(9), SquarefreeDecomp { p_part: 1, q_part: 3 });
        assert_eq!(squarefree_decomp(12), SquarefreeDecomp { p_part: 3, q_part: 2 });
    }

    #[test]
    #[should_panic(expected = "must be positive")]
    fn squarefree_decomp_rejects_zero() {
        squarefree_decomp(0);
    }

    #[test]
    fn squarefree_decomp_reconstructs() {
        for n in 1u64..=100_000 {
            let d = squarefree_decomp(n);
            assert_eq!(d.p_part * d.q_part * d.q_part, n);
            assert_ne!(moebius(d.p_part), 0, "p_part of {n} not squarefree");
        }
    }

    #[test]
    fn factorize_examples() {
        assert!(factorize(1).pairs().is_empty());
        assert_eq!(factorize(105).pairs(), &[(3, 1), (5, 1), (7, 1)]);
        assert_eq!(factorize(1 << 10).pairs(), &[(2, 10)]);
    }

    #[test]
    fn factorize_past_sieve_range() {
        // Both factors exceed the sieve limit, forcing the rho path.
        let p = 1_048_583u64; // first prime above 2^20
        let q = 2_097_169u64;
        assert!(is_prime(p) && is_prime(q));
        let f = factorize(p * q);
        assert_eq!(f.pairs(), &[(p, 1), (q, 1)]);
        let g = factorize(p * p);
        assert_eq!(g.pairs(), &[(p, 2)]);
    }

    #[test]
    fn moebius_examples() {
        assert_eq!(moebius(1), 1);
        assert_eq!(moebius(12), 0);
        assert_eq!(moebius(105), -1);
    }

    #[test]
    fn moebius_divisor_sums() {
        for n in 1u64..=10_000 {
            let s: i64 = divisors(n).iter().map(|&d| moebius(d) as i64).sum();
            assert_eq!(s, if n == 1 { 1 } else { 0 }, "n = {n}");
        }
    }

    #[test]
    fn moebius_multiplicative_on_coprime_pairs() {
        for m in 1u64..=500 {
            for n in (1u64..=500).step_by(7) {
                if gcd(m as u128, n as u128) == 1 {
                    assert_eq!(moebius(m * n), moebius(m) * moebius(n), "({m}, {n})");
                }
            }
        }
    }

    #[test]
    fn is_prime_examples() {
        assert!(is_prime(2));
        assert!(is_prime(163));
        assert!(!is_prime(91));
        assert!(!is_prime(1));
        // Strong pseudoprime to bases 2, 3, 5, 7.
        assert!(!is_prime(3_215_031_751));
        assert!(is_prime(18_446_744_073_709_551_557)); // largest 64-bit prime
    }

    #[test]
    fn divisors_examples() {
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(21), vec![1, 3, 7, 21]);
        assert_eq!(divisors(97), vec![1, 97]);
    }

    #[test]
    fn sieve_agrees_with_miller_rabin() {
        let primes = primes_up_to(2000);
        for n in 2u64..=2000 {
            assert_eq!(primes.binary_search(&n).is_ok(), is_prime(n), "n = {n}");
        }
    }
}
