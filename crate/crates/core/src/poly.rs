//! Dense univariate polynomials with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::exact::{factorial, format_rational, rat, to_integer};

/// Coefficients in ascending degree; trailing zeros are never stored, so the
/// zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DensePolynomial {
    coeffs: Vec<BigRational>,
}

impl DensePolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Self::from_coeffs(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> BigRational {
        self.eval(&rat(x))
    }

    /// Value at an integer point, if it is an integer.
    pub fn eval_integer(&self, x: i64) -> Option<BigInt> {
        to_integer(&self.eval_int(x))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `p(x + a)`.
    pub fn shift(&self, a: i64) -> Self {
        let linear = Self::from_coeffs(vec![rat(a), BigRational::one()]);
        self.compose(&linear)
    }

    /// `p(q(x))` by Horner's scheme.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * inner) + &Self::constant(c.clone())
        })
    }

    /// `binom(p(x), k) = p (p - 1) ... (p - k + 1) / k!`.
    pub fn binomial_of(p: &Self, k: u64) -> Self {
        let mut acc = Self::one();
        for j in 0..k {
            acc = &acc * &(p - &Self::constant(rat(j as i64)));
        }
        acc.scale(&BigRational::new(BigInt::one(), factorial(k)))
    }

    /// The binomial basis polynomial `binom(x, k)`.
    pub fn binomial_basis(k: u64) -> Self {
        Self::binomial_of(&Self::x(), k)
    }

    /// Coordinates `a_k` with `p(x) = sum_k a_k binom(x, k)`, i.e. the forward
    /// differences of `p` at zero.
    pub fn to_binomial_basis(&self) -> Vec<BigRational> {
        let Some(deg) = self.degree() else {
            return Vec::new();
        };
        let mut values: Vec<BigRational> = (0..=deg as i64).map(|x| self.eval_int(x)).collect();
        let mut out = Vec::with_capacity(deg + 1);
        for _ in 0..=deg {
            out.push(values[0].clone());
            values = values.windows(2).map(|w| &w[1] - &w[0]).collect();
        }
        out
    }

    pub fn from_binomial_basis(coords: &[BigRational]) -> Self {
        combine_binomials(&Self::x(), coords, 0)
    }

    /// `sum_k coords[k] binom(x, k)` for integer coordinates. Works over
    /// `d! binom(x, k) = (d! / k!) x (x-1) ... (x-k+1)`, which has integer
    /// coefficients, and divides by `d!` once at the end.
    pub fn from_integer_binomial_basis(coords: &[BigInt]) -> Self {
        let Some(d) = coords.len().checked_sub(1) else {
            return Self::zero();
        };
        // falling[j] holds the coefficients of x (x-1) ... (x-k+1).
        let mut falling = vec![BigInt::one()];
        let mut acc = vec![BigInt::zero(); d + 1];
        let mut weight = factorial(d as u64);
        for (k, c) in coords.iter().enumerate() {
            if k > 0 {
                let mut next = vec![BigInt::zero(); k + 1];
                for (j, f) in falling.iter().enumerate() {
                    next[j + 1] += f;
                    next[j] -= f * BigInt::from(k - 1);
                }
                falling = next;
                weight /= BigInt::from(k);
            }
            if !c.is_zero() {
                let scaled = c * &weight;
                for (j, f) in falling.iter().enumerate() {
                    acc[j] += &scaled * f;
                }
            }
        }
        let denom = factorial(d as u64);
        Self::from_coeffs(
            acc.into_iter()
                .map(|a| BigRational::new(a, denom.clone()))
                .collect(),
        )
    }

    /// Backward difference `p(x) - p(x - 1)`.
    pub fn backward_difference(&self) -> Self {
        self - &self.shift(-1)
    }

    /// Lagrange interpolation (Newton divided differences) through the given
    /// points; abscissae must be distinct.
    pub fn interpolate(points: &[(BigRational, BigRational)]) -> Self {
        let n = points.len();
        let mut table: Vec<BigRational> = points.iter().map(|(_, y)| y.clone()).collect();
        for level in 1..n {
            for i in (level..n).rev() {
                let dx = &points[i].0 - &points[i - level].0;
                assert!(!dx.is_zero(), "interpolation abscissae must be distinct");
                table[i] = (&table[i] - &table[i - 1]) / dx;
            }
        }
        let mut result = Self::zero();
        for i in (0..n).rev() {
            let factor = Self::from_coeffs(vec![-points[i].0.clone(), BigRational::one()]);
            result = &(&result * &factor) + &Self::constant(table[i].clone());
        }
        result
    }
}

/// Solves `f(x) - f(x - 1) = g(x)` with `f(0) = 0`.
///
/// With `g = sum_k a_k binom(x, k)` the solution is
/// `sum_k a_k binom(x + 1, k + 1) - a_0`, because
/// `binom(x + 1, k + 1) - binom(x, k + 1) = binom(x, k)`.
pub fn discrete_antidifference(g: &DensePolynomial) -> DensePolynomial {
    let coords = g.to_binomial_basis();
    let Some(a0) = coords.first().cloned() else {
        return DensePolynomial::zero();
    };
    let x_plus_one = DensePolynomial::from_coeffs(vec![BigRational::one(), BigRational::one()]);
    let sum = combine_binomials(&x_plus_one, &coords, 1);
    &sum - &DensePolynomial::constant(a0)
}

/// `sum_k coords[k] * binom(base, k + lift)` for a linear `base`, building
/// each binomial from the previous one with a single linear factor.
fn combine_binomials(base: &DensePolynomial, coords: &[BigRational], lift: u64) -> DensePolynomial {
    let mut binom = DensePolynomial::one();
    for j in 0..lift {
        binom = next_binomial(&binom, base, j);
    }
    let mut sum = DensePolynomial::zero();
    for (k, a) in coords.iter().enumerate() {
        if !a.is_zero() {
            sum = &sum + &binom.scale(a);
        }
        binom = next_binomial(&binom, base, k as u64 + lift);
    }
    sum
}

/// `binom(base, j + 1)` from `binom(base, j)`.
fn next_binomial(binom: &DensePolynomial, base: &DensePolynomial, j: u64) -> DensePolynomial {
    let factor = base - &DensePolynomial::constant(rat(j as i64));
    (&factor * binom).scale(&BigRational::new(BigInt::one(), BigInt::from(j + 1)))
}

impl Add for &DensePolynomial {
    type Output = DensePolynomial;

    fn add(self, rhs: Self) -> DensePolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        DensePolynomial::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &DensePolynomial {
    type Output = DensePolynomial;

    fn sub(self, rhs: Self) -> DensePolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        DensePolynomial::from_coeffs((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &DensePolynomial {
    type Output = DensePolynomial;

    fn mul(self, rhs: Self) -> DensePolynomial {
        if self.is_zero() || rhs.is_zero() {
            return DensePolynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        DensePolynomial::from_coeffs(out)
    }
}

impl Neg for &DensePolynomial {
    type Output = DensePolynomial;

    fn neg(self) -> DensePolynomial {
        DensePolynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for DensePolynomial {
    /// Expanded form, highest degree first: `x^2 - 3/2 x + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            let show_coeff = deg == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{}", format_rational(&mag))?;
            }
            match deg {
                0 => {}
                1 if show_coeff => write!(f, " x")?,
                1 => write!(f, "x")?,
                _ if show_coeff => write!(f, " x^{deg}")?,
                _ => write!(f, "x^{deg}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for DensePolynomial {
    /// Ascending coefficient list of exact rational strings.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rendered: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        rendered.serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    fn p(c: &[i64]) -> DensePolynomial {
        DensePolynomial::from_integers(c)
    }

    #[test]
    fn trailing_zeros_trimmed() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), None);
    }

    #[test]
    fn arithmetic() {
        let a = p(&[1, 1]);
        let b = p(&[-1, 1]);
        assert_eq!(&a * &b, p(&[-1, 0, 1]));
        assert_eq!(&a - &a, DensePolynomial::zero());
        assert_eq!(a.shift(2), p(&[3, 1]));
        assert_eq!(p(&[0, 0, 1]).shift(-1), p(&[1, -2, 1]));
    }

    #[test]
    fn antidifference_examples() {
        assert_eq!(discrete_antidifference(&p(&[1])), p(&[0, 1]));
        let half = DensePolynomial::from_coeffs(vec![rat(0), ratio(1, 2), ratio(1, 2)]);
        assert_eq!(discrete_antidifference(&p(&[0, 1])), half);
        let squares =
            DensePolynomial::from_coeffs(vec![rat(0), ratio(1, 6), ratio(1, 2), ratio(1, 3)]);
        assert_eq!(discrete_antidifference(&p(&[0, 0, 1])), squares);
        assert!(discrete_antidifference(&DensePolynomial::zero()).is_zero());
    }

    #[test]
    fn binomial_basis_round_trip() {
        let q = p(&[3, -2, 0, 5, 1]);
        assert_eq!(
            DensePolynomial::from_binomial_basis(&q.to_binomial_basis()),
            q
        );
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let q = p(&[7, 0, -3, 1]);
        let pts: Vec<_> = (-2..3).map(|x| (rat(x), q.eval_int(x))).collect();
        assert_eq!(DensePolynomial::interpolate(&pts), q);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, -3, 1]).to_string(), "x^2 - 3 x + 1");
        assert_eq!(
            DensePolynomial::from_coeffs(vec![ratio(-1, 2), rat(1)]).to_string(),
            "x - 1/2"
        );
        assert_eq!(DensePolynomial::zero().to_string(), "0");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn small_poly() -> impl Strategy<Value = DensePolynomial> {
            prop::collection::vec(-20i64..20, 0..7).prop_map(|c| DensePolynomial::from_integers(&c))
        }

        proptest! {
            #[test]
            fn antidifference_inverts_backward_difference(g in small_poly()) {
                let f = discrete_antidifference(&g);
                prop_assert_eq!(f.backward_difference(), g);
                prop_assert!(f.eval_int(0).is_zero());
            }

            #[test]
            fn evaluation_is_a_ring_map(a in small_poly(), b in small_poly(), x in -10i64..10) {
                prop_assert_eq!((&a * &b).eval_int(x), a.eval_int(x) * b.eval_int(x));
                prop_assert_eq!((&a + &b).eval_int(x), a.eval_int(x) + b.eval_int(x));
            }
        }
    }
}
