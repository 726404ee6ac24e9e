//! Class numbers of imaginary quadratic fields via Dirichlet's formula
//!
//!     h = -w(d) / (2|d|) * sum_{j=1}^{|d|-1} j * (d/j)
//!
//! with (d/j) the Kronecker symbol, plus the prime-case evaluations that
//! express h through Legendre-symbol sums, and the normalization h* that
//! replaces h(-3) by 1/3.
//!
//! Results are memoized in a process-wide table keyed by discriminant;
//! sweeps re-request the same small discriminants constantly. Inserts are
//! idempotent (the value for a key is unique), so concurrent workers can
//! share the table freely.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::arith::{factorize, ExactRational};
use crate::error::Error;
use crate::symbols::{kronecker, legendre};

/// Discriminant of an imaginary quadratic field: either d = n for
/// squarefree n = 1 (mod 4), or d = 4n for squarefree n = 2, 3 (mod 4).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FundamentalDiscriminant(i64);

impl FundamentalDiscriminant {
    pub fn new(d: i64) -> Result<Self, Error> {
        if d >= 0 {
            return Err(Error::domain(format!("discriminant must be negative, got {d}")));
        }
        let ok = if d.rem_euclid(4) == 1 {
            factorize(d.unsigned_abs()).is_squarefree()
        } else if d % 4 == 0 {
            let n = d / 4;
            matches!(n.rem_euclid(4), 2 | 3) && factorize(n.unsigned_abs()).is_squarefree()
        } else {
            false
        };
        if ok {
            Ok(FundamentalDiscriminant(d))
        } else {
            Err(Error::domain(format!("{d} is not a fundamental discriminant")))
        }
    }

    pub fn get(&self) -> i64 {
        self.0
    }

    /// Number of units in the ring of integers: 6 for d = -3, 4 for
    /// d = -4, and 2 below that.
    pub fn unit_count(&self) -> u8 {
        match self.0 {
            -3 => 6,
            -4 => 4,
            _ => 2,
        }
    }
}

/// Discriminant of the quadratic field generated by the square root of a
/// negative squarefree integer `n`.
pub fn discriminant_of(n: i64) -> Result<FundamentalDiscriminant, Error> {
    if n >= 0 {
        return Err(Error::domain(format!("expected a negative integer, got {n}")));
    }
    if !factorize(n.unsigned_abs()).is_squarefree() {
        return Err(Error::domain(format!("{n} is not squarefree")));
    }
    let d = if n.rem_euclid(4) == 1 { n } else { 4 * n };
    Ok(FundamentalDiscriminant(d))
}

/// A computed class number together with its discriminant and unit count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassNumberResult {
    pub h: u64,
    pub d: FundamentalDiscriminant,
    pub w: u8,
}

fn memo() -> &'static RwLock<HashMap<i64, u64>> {
    static MEMO: OnceLock<RwLock<HashMap<i64, u64>>> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Class number by Dirichlet's formula, memoized.
pub fn class_number_dirichlet(d: FundamentalDiscriminant) -> Result<ClassNumberResult, Error> {
    let w = d.unit_count();
    if let Some(&h) = memo().read().unwrap().get(&d.get()) {
        return Ok(ClassNumberResult { h, d, w });
    }
    let h = class_number_dirichlet_uncached(d)?.h;
    memo().write().unwrap().insert(d.get(), h);
    Ok(ClassNumberResult { h, d, w })
}

/// The Dirichlet evaluation itself, bypassing the memo table. Runtime is
/// linear in |d|.
pub fn class_number_dirichlet_uncached(d: FundamentalDiscriminant) -> Result<ClassNumberResult, Error> {
    if d.get().unsigned_abs() > 1 << 31 {
        return Err(Error::domain(format!("|d| = {} exceeds the 2^31 width contract", d.get().unsigned_abs())));
    }
    let sum = weighted_character_sum(d.get());
    let w = d.unit_count() as i128;
    let num = -w * sum;
    let den = 2 * d.get().unsigned_abs() as i128;
    assert!(num % den == 0, "Dirichlet sum for d = {} is not divisible by 2|d|", d.get());
    let h = num / den;
    assert!(h >= 1, "Dirichlet formula gave nonpositive h = {h} for d = {}", d.get());
    Ok(ClassNumberResult { h: h as u64, d, w: d.unit_count() })
}

/// Sieve limit above which the j-by-j Kronecker loop is used instead of a
/// character table (the table would need O(|d|) memory).
const CHARACTER_TABLE_LIMIT: u64 = 1 << 25;

/// sum_{j=1}^{|d|-1} j * (d/j).
///
/// (d/.) is completely multiplicative, so for moderate |d| the values are
/// filled in by a linear sieve with one Kronecker evaluation per prime.
fn weighted_character_sum(d: i64) -> i128 {
    let m = d.unsigned_abs();
    if m > CHARACTER_TABLE_LIMIT {
        let mut sum: i128 = 0;
        for j in 1..m {
            sum += j as i128 * kronecker(d, j as i64).expect("nonzero arguments") as i128;
        }
        return sum;
    }
    let m = m as usize;
    let mut chi = vec![0i8; m.max(2)];
    chi[1] = 1;
    let mut spf = vec![0u32; m.max(2)];
    let mut primes: Vec<usize> = Vec::new();
    for i in 2..m {
        if spf[i] == 0 {
            spf[i] = i as u32;
            primes.push(i);
            chi[i] = kronecker(d, i as i64).expect("nonzero arguments");
        } else {
            let p = spf[i] as usize;
            chi[i] = chi[p] * chi[i / p];
        }
        for &p in &primes {
            if p > spf[i] as usize || i * p >= m {
                break;
            }
            spf[i * p] = p as u32;
        }
    }
    (1..m).map(|j| j as i128 * chi[j] as i128).sum()
}

/// h of the imaginary quadratic field generated by sqrt(-m), for positive
/// squarefree m.
pub fn class_number_neg(m: u64) -> Result<u64, Error> {
    if m == 0 || m > i64::MAX as u64 {
        return Err(Error::domain(format!("class_number_neg: m = {m} out of range")));
    }
    let d = discriminant_of(-(m as i64))?;
    Ok(class_number_dirichlet(d)?.h)
}

/// h(-p) for a prime p = 1 (mod 4), evaluated two ways from alternating
/// Legendre-symbol sums over odd j < 2p:
///
///     h = 1/2    * sum (-1)^((j-1)/2) (j/p)
///     h = 1/(2p) * sum (-1)^((j-1)/2) j (j/p)
///
/// Both evaluations must agree with each other and with the Dirichlet
/// value for d = -4p; any disagreement panics.
pub fn class_number_1mod4_prime(p: u64) -> Result<u64, Error> {
    if !crate::arith::is_prime(p) || p % 4 != 1 {
        return Err(Error::domain(format!("expected a prime = 1 (mod 4), got {p}")));
    }
    let mut plain: i128 = 0;
    let mut weighted: i128 = 0;
    for j in (1..2 * p).step_by(2) {
        let sign: i128 = if j % 4 == 1 { 1 } else { -1 };
        let sym = legendre(j as i64, p)? as i128;
        plain += sign * sym;
        weighted += sign * j as i128 * sym;
    }
    assert!(plain % 2 == 0 && weighted % (2 * p as i128) == 0, "p = {p}");
    let h_plain = plain / 2;
    let h_weighted = weighted / (2 * p as i128);
    assert_eq!(h_plain, h_weighted, "alternating-sum evaluations disagree at p = {p}");
    let h_dirichlet = class_number_dirichlet(FundamentalDiscriminant(-4 * p as i64))?.h;
    assert_eq!(h_plain, h_dirichlet as i128, "alternating sums disagree with Dirichlet at p = {p}");
    Ok(h_dirichlet)
}

/// h(-p) for a prime p = 3 (mod 4), p >= 7, by Jacobi's evaluation
/// h = -1/p * sum_{j=1}^{p-1} j (j/p), cross-checked against Dirichlet.
pub fn class_number_3mod4_prime(p: u64) -> Result<u64, Error> {
    if !crate::arith::is_prime(p) || p % 4 != 3 || p < 7 {
        return Err(Error::domain(format!(
            "expected a prime = 3 (mod 4) with p >= 7, got {p} (for p = 3 use h_star)"
        )));
    }
    let mut sum: i128 = 0;
    for j in 1..p {
        sum += j as i128 * legendre(j as i64, p)? as i128;
    }
    assert!((-sum) % (p as i128) == 0 && -sum > 0, "p = {p}");
    let h = (-sum / p as i128) as u64;
    let h_dirichlet = class_number_dirichlet(FundamentalDiscriminant(-(p as i64)))?.h;
    assert_eq!(h, h_dirichlet, "Jacobi evaluation disagrees with Dirichlet at p = {p}");
    Ok(h)
}

/// The normalization h*(-m) for positive squarefree m = 3 (mod 4):
/// equal to 1/3 at m = 3 and to h(-m) otherwise.
///
/// For composite m this is the Dirichlet value of discriminant -m with
/// unit count 2, which is the unique extension consistent with the prime
/// cases.
pub fn h_star(m: u64) -> Result<ExactRational, Error> {
    if m % 4 != 3 {
        return Err(Error::domain(format!("h_star: {m} is not = 3 (mod 4)")));
    }
    if !factorize(m).is_squarefree() {
        return Err(Error::domain(format!("h_star: {m} is not squarefree")));
    }
    if m == 3 {
        return Ok(ExactRational::new(1, 3));
    }
    Ok(ExactRational::from(class_number_neg(m)?))
}

/// Snapshot of the memo table, ordered by decreasing discriminant
/// (-3 before -4 before -7, ...). Used for cache persistence.
pub fn memo_snapshot() -> Vec<(i64, u64)> {
    let mut entries: Vec<(i64, u64)> = memo().read().unwrap().iter().map(|(&d, &h)| (d, h)).collect();
    entries.sort_unstable_by_key(|&(d, _)| std::cmp::Reverse(d));
    entries
}

/// Seed the memo table. Inserts are idempotent; entries for a key already
/// present are ignored.
pub fn memo_preload(entries: impl IntoIterator<Item = (i64, u64)>) {
    let mut guard = memo().write().unwrap();
    for (d, h) in entries {
        guard.entry(d).or_insert(h);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::primes_up_to;

    fn fd(d: i64) -> FundamentalDiscriminant {
        FundamentalDiscriminant::new(d).unwrap()
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(discriminant_of(-7).unwrap().get(), -7);
        assert_eq!(discriminant_of(-5).unwrap().get(), -20);
        assert_eq!(discriminant_of(-1).unwrap().get(), -4);
        assert!(discriminant_of(-12).is_err());
        assert!(discriminant_of(5).is_err());
    }

    #[test]
    fn unit_counts() {
        assert_eq!(fd(-3).unit_count(), 6);
        assert_eq!(fd(-4).unit_count(), 4);
        assert_eq!(fd(-7).unit_count(), 2);
    }

    #[test]
    fn dirichlet_small_values() {
        for (d, h) in [(-3, 1), (-4, 1), (-7, 1), (-8, 1), (-20, 2), (-23, 3), (-15, 2), (-163, 1)] {
            assert_eq!(class_number_dirichlet(fd(d)).unwrap().h, h, "d = {d}");
        }
    }

    #[test]
    fn character_table_matches_kronecker() {
        for d in [-7i64, -20, -84, -163, -420] {
            let direct: i128 = (1..d.unsigned_abs())
                .map(|j| j as i128 * kronecker(d, j as i64).unwrap() as i128)
                .sum();
            assert_eq!(weighted_character_sum(d), direct, "d = {d}");
        }
    }

    #[test]
    fn prime_case_evaluations() {
        assert_eq!(class_number_1mod4_prime(5).unwrap(), 2);
        assert_eq!(class_number_1mod4_prime(13).unwrap(), 2);
        assert_eq!(class_number_1mod4_prime(17).unwrap(), 4);
        assert_eq!(class_number_3mod4_prime(7).unwrap(), 1);
        assert_eq!(class_number_3mod4_prime(47).unwrap(), 5);
        assert_eq!(class_number_3mod4_prime(163).unwrap(), 1);
        assert!(class_number_3mod4_prime(3).is_err());
        assert!(class_number_3mod4_prime(5).is_err());
        assert!(class_number_1mod4_prime(7).is_err());
    }

    #[test]
    fn prime_case_cross_validation_to_200() {
        for p in primes_up_to(200) {
            if p % 4 == 1 {
                class_number_1mod4_prime(p).unwrap();
            } else if p % 4 == 3 && p >= 7 {
                class_number_3mod4_prime(p).unwrap();
            }
        }
    }

    #[test]
    fn h_star_values() {
        assert_eq!(h_star(3).unwrap(), ExactRational::new(1, 3));
        assert_eq!(h_star(7).unwrap(), ExactRational::from(1u64));
        assert_eq!(h_star(15).unwrap(), ExactRational::from(2u64));
        assert!(h_star(5).is_err());
        assert!(h_star(27).is_err());
        assert!(h_star(12).is_err());
    }

    // h*(-3) = 1/3 satisfies the same shape as Jacobi's evaluation:
    // -(1/3) * sum_{j=1}^{2} j (j/3) = 1/3.
    #[test]
    fn h_star_3_matches_jacobi_shape() {
        let sum: i64 = (1..3).map(|j| j * legendre(j, 3).unwrap() as i64).sum();
        assert_eq!(ExactRational::new(-sum as i128, 3), h_star(3).unwrap());
    }

    // The unit-count-2 Dirichlet value coincides with h* for every
    // squarefree m = 3 (mod 4), including m = 3 itself.
    #[test]
    fn h_star_is_dirichlet_with_two_units() {
        for m in (3u64..300).step_by(4) {
            if !factorize(m).is_squarefree() {
                continue;
            }
            let sum = weighted_character_sum(-(m as i64));
            let forced_w2 = ExactRational::new(-sum, m as i128);
            assert_eq!(forced_w2, h_star(m).unwrap(), "m = {m}");
        }
    }

    #[test]
    fn memo_roundtrip() {
        class_number_neg(7).unwrap();
        class_number_neg(15).unwrap();
        let snap = memo_snapshot();
        assert!(snap.windows(2).all(|w| w[0].0 > w[1].0));
        assert!(snap.contains(&(-7, 1)) && snap.contains(&(-15, 2)));
        memo_preload(snap.clone());
        assert!(memo_snapshot().len() >= snap.len());
    }
}
