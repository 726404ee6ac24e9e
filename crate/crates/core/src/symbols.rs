//! Legendre, Jacobi, and Kronecker symbols.
//!
//! The Jacobi symbol runs the standard quadratic reciprocity loop, so no
//! factorization of the lower argument is ever needed; the Kronecker
//! symbol peels the sign and the powers of two off the lower argument and
//! delegates the odd part to Jacobi.

use crate::arith::is_prime;
use crate::error::Error;

/// Value of a quadratic residue symbol: always -1, 0, or +1.
pub type SymbolValue = i8;

/// Legendre symbol (a/p) for an odd prime p.
///
/// +1 for a nonzero quadratic residue, -1 for a nonresidue, 0 when p | a.
/// Primality of `p` is the caller's responsibility (asserted in debug
/// builds); oddness is checked.
pub fn legendre(a: i64, p: u64) -> Result<SymbolValue, Error> {
    if p < 3 || p % 2 == 0 {
        return Err(Error::domain(format!("legendre: lower argument must be an odd prime, got {p}")));
    }
    debug_assert!(is_prime(p), "legendre: {p} is not prime");
    jacobi(a, p)
}

/// Jacobi symbol (a/m) for odd positive m, computed by reciprocity.
pub fn jacobi(a: i64, m: u64) -> Result<SymbolValue, Error> {
    if m == 0 || m % 2 == 0 {
        return Err(Error::domain(format!("jacobi: lower argument must be odd and positive, got {m}")));
    }
    assert!(m <= i64::MAX as u64, "jacobi: lower argument exceeds i64 range");
    let mut num = a.rem_euclid(m as i64) as u64;
    let mut den = m;
    let mut acc: SymbolValue = 1;
    loop {
        num %= den;
        if num == 0 {
            return Ok(if den == 1 { acc } else { 0 });
        }
        let tz = num.trailing_zeros();
        if tz % 2 == 1 && matches!(den % 8, 3 | 5) {
            acc = -acc;
        }
        num >>= tz;
        if num == 1 {
            return Ok(acc);
        }
        if num % 4 == 3 && den % 4 == 3 {
            acc = -acc;
        }
        std::mem::swap(&mut num, &mut den);
    }
}

/// Kronecker symbol (a/m), extending Jacobi to arbitrary lower arguments.
///
/// (a/2) is 0 for even a and follows the mod-8 rule for odd a; (a/-1) is
/// the sign of a; (a/0) is 1 exactly when a = ±1. Fully multiplicative in
/// the lower argument. Only (0, 0) is rejected.
pub fn kronecker(a: i64, m: i64) -> Result<SymbolValue, Error> {
    if a == 0 && m == 0 {
        return Err(Error::domain("kronecker: (0, 0) is undefined".to_string()));
    }
    if m == 0 {
        return Ok(if a == 1 || a == -1 { 1 } else { 0 });
    }
    let mut acc: SymbolValue = 1;
    if m < 0 && a < 0 {
        acc = -acc;
    }
    let mut m_abs = m.unsigned_abs();
    let tz = m_abs.trailing_zeros();
    if tz > 0 {
        if a % 2 == 0 {
            return Ok(0);
        }
        if tz % 2 == 1 && matches!(a.rem_euclid(8), 3 | 5) {
            acc = -acc;
        }
        m_abs >>= tz;
    }
    Ok(acc * jacobi(a, m_abs)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{gcd, primes_up_to};

    fn euler_criterion(a: i64, p: u64) -> i8 {
        let a = a.rem_euclid(p as i64) as u64;
        if a == 0 {
            return 0;
        }
        let mut acc = 1u64;
        let mut base = a % p;
        let mut e = (p - 1) / 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        if acc == 1 {
            1
        } else {
            -1
        }
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre(2, 7).unwrap(), 1);
        assert_eq!(legendre(7, 7).unwrap(), 0);
        assert_eq!(legendre(3, 7).unwrap(), -1);
        assert!(legendre(1, 2).is_err());
        assert!(legendre(1, 1).is_err());
    }

    #[test]
    fn legendre_agrees_with_euler_criterion() {
        for p in primes_up_to(2000).into_iter().skip(1) {
            for a in 0..p as i64 {
                assert_eq!(legendre(a, p).unwrap(), euler_criterion(a, p), "({a}/{p})");
            }
        }
    }

    #[test]
    fn jacobi_examples() {
        assert_eq!(jacobi(2, 15).unwrap(), 1);
        for a in [-7, 0, 3, 1000] {
            assert_eq!(jacobi(a, 1).unwrap(), 1);
        }
        assert_eq!(jacobi(5, 21).unwrap(), 1);
        assert_eq!(jacobi(1001, 9907).unwrap(), -1);
        assert!(jacobi(3, 4).is_err());
        assert!(jacobi(3, 0).is_err());
    }

    #[test]
    fn jacobi_multiplicative_in_lower_argument() {
        for m1 in (1u64..=111).step_by(2) {
            for m2 in (1u64..=111).step_by(2) {
                for a in [-5i64, 2, 7, 30] {
                    assert_eq!(
                        jacobi(a, m1 * m2).unwrap(),
                        jacobi(a, m1).unwrap() * jacobi(a, m2).unwrap(),
                        "a={a} m1={m1} m2={m2}"
                    );
                }
            }
        }
    }

    #[test]
    fn kronecker_examples() {
        assert_eq!(kronecker(-20, 4).unwrap(), 0);
        assert_eq!(kronecker(-7, -1).unwrap(), -1);
        assert_eq!(kronecker(-3, 5).unwrap(), -1);
        assert_eq!(kronecker(1, 0).unwrap(), 1);
        assert_eq!(kronecker(-1, 0).unwrap(), 1);
        assert_eq!(kronecker(5, 0).unwrap(), 0);
        assert!(kronecker(0, 0).is_err());
    }

    #[test]
    fn kronecker_matches_jacobi_on_odd_positive() {
        for m in (1u64..=301).step_by(2) {
            for a in -20i64..=20 {
                assert_eq!(kronecker(a, m as i64).unwrap(), jacobi(a, m).unwrap(), "a={a} m={m}");
            }
        }
    }

    #[test]
    fn kronecker_multiplicative_in_lower_argument() {
        for m1 in -40i64..=40 {
            for m2 in -40i64..=40 {
                if m1 == 0 || m2 == 0 {
                    continue;
                }
                for a in [-9i64, -2, 3, 10] {
                    assert_eq!(
                        kronecker(a, m1 * m2).unwrap(),
                        kronecker(a, m1).unwrap() * kronecker(a, m2).unwrap(),
                        "a={a} m1={m1} m2={m2}"
                    );
                }
            }
        }
    }

    // (-4p/j) = (-1)^((j-1)/2) (j/p) for odd j coprime to p, 0 for even j.
    #[test]
    fn negative_4p_symbol_identity_for_1mod4_primes() {
        for p in [5u64, 13, 17, 29] {
            for j in 1..4 * p {
                let k = kronecker(-4 * p as i64, j as i64).unwrap();
                if j % 2 == 0 {
                    assert_eq!(k, 0, "p={p} j={j}");
                } else if gcd(j as u128, p as u128) != 1 {
                    assert_eq!(k, 0, "p={p} j={j}");
                } else {
                    let sign = if j % 4 == 1 { 1 } else { -1 };
                    assert_eq!(k, sign * legendre(j as i64, p).unwrap(), "p={p} j={j}");
                }
            }
        }
    }

    // (-p/j) = (j/p) for 1 <= j <= p-1 when p = 3 (mod 4).
    #[test]
    fn negative_p_symbol_identity_for_3mod4_primes() {
        for p in [7u64, 11, 19, 23] {
            for j in 1..p {
                assert_eq!(
                    kronecker(-(p as i64), j as i64).unwrap(),
                    legendre(j as i64, p).unwrap(),
                    "p={p} j={j}"
                );
            }
        }
    }
}
