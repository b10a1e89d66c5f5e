//! Arbitrary-precision integer and rational helpers shared by every module.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type ExactInt = BigInt;
pub type ExactRational = BigRational;

pub fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Binomial coefficient `x choose k` for an integer (possibly negative) upper
/// argument. Each intermediate `C(x, j)` is an integer, so the running
/// division is exact.
pub fn binomial(x: &BigInt, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for j in 0..k {
        acc *= x - BigInt::from(j);
        acc /= BigInt::from(j + 1);
    }
    acc
}

pub fn binomial_i64(x: i64, k: u64) -> BigInt {
    binomial(&BigInt::from(x), k)
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, j| acc * BigInt::from(j))
}

/// Returns the integer value if the rational has denominator one.
pub fn to_integer(q: &BigRational) -> Option<BigInt> {
    if q.denom().is_one() {
        Some(q.numer().clone())
    } else {
        None
    }
}

/// Exact square root of a non-negative integer, if it is a perfect square.
pub fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    if n.is_zero() {
        return Some(BigInt::zero());
    }
    let root = n.sqrt();
    (&root * &root == *n).then_some(root)
}

/// Exact square root of a rational, if both reduced parts are perfect squares.
pub fn exact_rational_sqrt(q: &BigRational) -> Option<BigRational> {
    let num = exact_isqrt(q.numer())?;
    let den = exact_isqrt(q.denom())?;
    Some(BigRational::new(num, den))
}

/// Renders a rational as `p/q`, or as a bare integer when the denominator is one.
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Ceiling division for a positive divisor.
pub(crate) fn div_ceil(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    Integer::div_ceil(&a, &b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_negative_upper() {
        assert_eq!(binomial_i64(-1, 5), int(-1));
        assert_eq!(binomial_i64(-2, 3), int(-4));
        assert_eq!(binomial_i64(11, 3), int(165));
        assert_eq!(binomial_i64(3, 5), int(0));
        assert_eq!(binomial_i64(7, 0), int(1));
    }

    #[test]
    fn rational_sqrt() {
        assert_eq!(exact_rational_sqrt(&ratio(9, 4)), Some(ratio(3, 2)));
        assert_eq!(exact_rational_sqrt(&rat(2)), None);
        assert_eq!(exact_rational_sqrt(&rat(-4)), None);
    }

    #[test]
    fn formatting() {
        assert_eq!(format_rational(&ratio(6, 4)), "3/2");
        assert_eq!(format_rational(&rat(-7)), "-7");
    }

    #[test]
    fn ceiling() {
        assert_eq!(div_ceil(5, 2), 3);
        assert_eq!(div_ceil(4, 2), 2);
        assert_eq!(div_ceil(0, 3), 0);
    }
}
