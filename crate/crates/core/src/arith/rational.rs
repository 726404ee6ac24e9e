use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::gcd;

/// Exact fraction, always stored reduced with a positive denominator.
///
/// Overflow of the 128-bit numerator is a hard error, never a silent
/// wraparound. In this crate every fractional value has a denominator
/// dividing 12, so the headroom is enormous.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExactRational {
    num: i128,
    den: i128,
}

fn reduce(num: i128, den: i128) -> (i128, i128) {
    assert!(den != 0, "ExactRational: zero denominator");
    let sign = if den < 0 { -1 } else { 1 };
    let g = gcd(num.unsigned_abs(), den.unsigned_abs()) as i128;
    if g == 0 {
        return (0, 1);
    }
    (sign * num / g, sign * den / g)
}

impl ExactRational {
    pub fn new(num: i128, den: i128) -> Self {
        let (num, den) = reduce(num, den);
        ExactRational { num, den }
    }

    pub const ZERO: ExactRational = ExactRational { num: 0, den: 1 };

    pub fn numer(&self) -> i128 {
        self.num
    }

    pub fn denom(&self) -> i128 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    /// The value as an integer; panics if it is not one.
    pub fn to_integer(&self) -> i128 {
        assert!(self.den == 1, "expected integral value, got {self}");
        self.num
    }

    /// Greatest integer <= the value.
    pub fn floor(&self) -> i128 {
        self.num.div_euclid(self.den)
    }

    pub fn abs(&self) -> Self {
        ExactRational { num: self.num.abs(), den: self.den }
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// Fixed-point decimal string with `places` digits, rounded half to even.
    pub fn to_decimal(&self, places: u32) -> String {
        let scale = 10i128.checked_pow(places).expect("decimal scale overflow");
        let scaled = self.num.checked_mul(scale).expect("ExactRational overflow");
        let mut q = scaled.div_euclid(self.den);
        let r = scaled.rem_euclid(self.den);
        match (2 * r).cmp(&self.den) {
            Ordering::Greater => q += 1,
            Ordering::Equal => {
                if q % 2 != 0 {
                    q += 1;
                }
            }
            Ordering::Less => {}
        }
        let sign = if q < 0 { "-" } else { "" };
        let mag = q.unsigned_abs();
        let int = mag / scale.unsigned_abs();
        let frac = mag % scale.unsigned_abs();
        if places == 0 {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac:0>width$}", width = places as usize)
        }
    }
}

impl From<i128> for ExactRational {
    fn from(n: i128) -> Self {
        ExactRational { num: n, den: 1 }
    }
}

impl From<i64> for ExactRational {
    fn from(n: i64) -> Self {
        ExactRational { num: n as i128, den: 1 }
    }
}

impl From<u64> for ExactRational {
    fn from(n: u64) -> Self {
        ExactRational { num: n as i128, den: 1 }
    }
}

fn checked(v: Option<i128>) -> i128 {
    v.expect("ExactRational overflow")
}

impl Add for ExactRational {
    type Output = ExactRational;
    fn add(self, rhs: Self) -> Self {
        ExactRational::new(
            checked(checked(self.num.checked_mul(rhs.den)).checked_add(checked(rhs.num.checked_mul(self.den)))),
            checked(self.den.checked_mul(rhs.den)),
        )
    }
}

impl Sub for ExactRational {
    type Output = ExactRational;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for ExactRational {
    type Output = ExactRational;
    fn mul(self, rhs: Self) -> Self {
        // Cross-reduce first to keep intermediates small.
        let g1 = gcd(self.num.unsigned_abs(), rhs.den.unsigned_abs()) as i128;
        let g2 = gcd(rhs.num.unsigned_abs(), self.den.unsigned_abs()) as i128;
        let g1 = g1.max(1);
        let g2 = g2.max(1);
        ExactRational::new(
            checked((self.num / g1).checked_mul(rhs.num / g2)),
            checked((self.den / g2).checked_mul(rhs.den / g1)),
        )
    }
}

impl Div for ExactRational {
    type Output = ExactRational;
    fn div(self, rhs: Self) -> Self {
        assert!(rhs.num != 0, "ExactRational: division by zero");
        self * ExactRational::new(rhs.den, rhs.num)
    }
}

impl Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> Self {
        ExactRational { num: -self.num, den: self.den }
    }
}

impl PartialOrd for ExactRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactRational {
    fn cmp(&self, other: &Self) -> Ordering {
        checked(self.num.checked_mul(other.den)).cmp(&checked(other.num.checked_mul(self.den)))
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl serde::Serialize for ExactRational {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i128, d: i128) -> ExactRational {
        ExactRational::new(n, d)
    }

    #[test]
    fn reduction_and_sign() {
        assert_eq!(r(2, 4), r(1, 2));
        assert_eq!(r(1, -2), r(-1, 2));
        assert_eq!(r(0, -5), ExactRational::ZERO);
        assert_eq!(r(-3, -9), r(1, 3));
        assert!(r(-3, 9).denom() > 0);
    }

    #[test]
    fn display() {
        assert_eq!(r(-2, 1).to_string(), "-2");
        assert_eq!(r(-1, 4).to_string(), "-1/4");
        assert_eq!(r(26, 3).to_string(), "26/3");
    }

    #[test]
    fn floor_matches_euclid() {
        assert_eq!(r(-3, 7).floor(), -1);
        assert_eq!(r(3, 7).floor(), 0);
        assert_eq!(r(-14, 7).floor(), -2);
        assert_eq!(r(14, 4).floor(), 3);
    }

    #[test]
    fn decimal_round_half_even() {
        assert_eq!(r(-7, 23).to_decimal(6), "-0.304348");
        assert_eq!(r(3, 16).to_decimal(6), "0.187500");
        assert_eq!(r(0, 1).to_decimal(6), "0.000000");
        // Exact ties round to the even digit.
        assert_eq!(r(5, 10_000_000).to_decimal(6), "0.000000");
        assert_eq!(r(15, 10_000_000).to_decimal(6), "0.000002");
        assert_eq!(r(-5, 10_000_000).to_decimal(6), "0.000000");
        assert_eq!(r(-15, 10_000_000).to_decimal(6), "-0.000002");
    }

    proptest! {
        #[test]
        fn add_sub_roundtrip(an in -10_000i128..10_000, ad in 1i128..200,
                             bn in -10_000i128..10_000, bd in 1i128..200) {
            let a = r(an, ad);
            let b = r(bn, bd);
            prop_assert_eq!((a + b) - b, a);
        }

        #[test]
        fn mul_div_roundtrip(an in -10_000i128..10_000, ad in 1i128..200,
                             bn in -10_000i128..10_000, bd in 1i128..200) {
            let a = r(an, ad);
            let b = r(bn, bd);
            prop_assume!(bn != 0);
            prop_assert_eq!((a * b) / b, a);
        }

        #[test]
        fn ordering_matches_f64(an in -1000i128..1000, ad in 1i128..50,
                                bn in -1000i128..1000, bd in 1i128..50) {
            let a = r(an, ad);
            let b = r(bn, bd);
            if a < b {
                prop_assert!(a.to_f64() < b.to_f64() + 1e-12);
            }
        }
    }
}
