//! Polynomial sequences for the delta operator `B` defined by
//! `E = 1 + B + ... + B^(r-1)`.
//!
//! Every family here satisfies
//!
//! ```text
//! f_n(x) - f_n(x - 1) = f_{n-1}(x) - f_{n-r}(x - 1)
//! ```
//!
//! and differs only in its anchor values. Members are built one degree at a
//! time by exact discrete antidifference followed by fixing the constant.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{invalid, Result};
use crate::exact::{div_ceil, format_rational, rat};
use crate::poly::DensePolynomial;
use crate::report::Report;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    /// Ballot counts avoiding east runs; root at `n - 1`.
    S,
    /// Rotated north-run counts; staircase root at `ceil(n / (r-2)) - 1`.
    P,
    /// Roots on the shifted diagonal `n - alpha - 1`.
    Q,
    /// Basic sequence, `b_n(0) = delta_{0,n}`.
    Basic,
}

#[derive(Debug, Clone, Serialize)]
pub struct SequenceFamily {
    pub kind: FamilyKind,
    pub r: u64,
    pub alpha: Option<u64>,
    pub members: Vec<DensePolynomial>,
    #[serde(skip)]
    coords: Vec<Vec<BigInt>>,
}

impl SequenceFamily {
    /// Builds members `0..=n_max` of the requested family.
    pub fn build(kind: FamilyKind, r: u64, alpha: Option<u64>, n_max: u64) -> Result<Self> {
        if r < 2 {
            return Err(invalid(format!("run bound r must be >= 2, got {r}")));
        }
        if kind == FamilyKind::P && r < 3 {
            return Err(invalid("the rotated family needs r >= 3"));
        }
        let alpha = match (kind, alpha) {
            (FamilyKind::Q, None) => return Err(invalid("family Q needs alpha")),
            (FamilyKind::Q, a) => a,
            _ => None,
        };
        // Members are built in integer binomial-basis coordinates,
        // f(x) = sum_k c_k binom(x, k), where every step is a linear scan.
        let mut coords: Vec<Vec<BigInt>> = Vec::with_capacity(n_max as usize + 1);
        coords.push(vec![BigInt::one()]);
        for n in 1..=n_max {
            let mut rhs = coords[n as usize - 1].clone();
            if n >= r {
                let back = shift_down(&coords[(n - r) as usize]);
                rhs.resize(rhs.len().max(back.len()), BigInt::zero());
                for (a, b) in rhs.iter_mut().zip(back) {
                    *a -= b;
                }
            }
            let mut f = antidifference(&rhs);
            let (at, value) = anchor(kind, r, alpha, n);
            f[0] = value - eval_coords(&f, at);
            coords.push(f);
        }
        let members = coords
            .iter()
            .map(|c| DensePolynomial::from_integer_binomial_basis(c))
            .collect();
        Ok(Self {
            kind,
            r,
            alpha,
            members,
            coords,
        })
    }

    pub fn basic(r: u64, n_max: u64) -> Result<Self> {
        Self::build(FamilyKind::Basic, r, None, n_max)
    }

    pub fn member(&self, n: usize) -> &DensePolynomial {
        &self.members[n]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Value of member `n` at integer `x`; always an integer for these families.
    pub fn value(&self, n: usize, x: i64) -> BigInt {
        eval_coords(&self.coords[n], x)
    }
}

/// Coordinates of `f(x - 1)` from those of `f(x)`, using
/// `binom(x - 1, k) = sum_{j <= k} (-1)^(k-j) binom(x, j)`.
fn shift_down(c: &[BigInt]) -> Vec<BigInt> {
    let mut out = c.to_vec();
    for j in (0..out.len().saturating_sub(1)).rev() {
        let next = out[j + 1].clone();
        out[j] -= next;
    }
    out
}

/// Coordinates of `f` with `f(x) - f(x - 1) = g(x)` and zero constant
/// coordinate. Since `f(x) - f(x - 1)` is the forward difference at `x - 1`,
/// shift `g` up by one (`binom(x+1, k) = binom(x, k) + binom(x, k-1)`) and
/// raise every index.
fn antidifference(g: &[BigInt]) -> Vec<BigInt> {
    let mut f = Vec::with_capacity(g.len() + 1);
    f.push(BigInt::zero());
    for k in 0..g.len() {
        let up = g
            .get(k + 1)
            .map_or_else(|| g[k].clone(), |next| &g[k] + next);
        f.push(up);
    }
    f
}

fn eval_coords(c: &[BigInt], x: i64) -> BigInt {
    let mut total = BigInt::zero();
    let mut binom = BigInt::one();
    for (k, a) in c.iter().enumerate() {
        if k > 0 {
            binom = binom * BigInt::from(x - k as i64 + 1) / BigInt::from(k);
        }
        if binom.is_zero() && x >= 0 {
            break;
        }
        total += a * &binom;
    }
    total
}

/// Point and value that pin down the constant of member `n >= 1`.
fn anchor(kind: FamilyKind, r: u64, alpha: Option<u64>, n: u64) -> (i64, BigInt) {
    let n = n as i64;
    match kind {
        FamilyKind::S => (n - 1, BigInt::zero()),
        FamilyKind::Basic => (0, BigInt::zero()),
        FamilyKind::P => (div_ceil(n, r as i64 - 2) - 1, BigInt::zero()),
        FamilyKind::Q => {
            let a = alpha.unwrap_or(0) as i64;
            if n <= a {
                (0, BigInt::zero())
            } else {
                (n - a - 1, BigInt::zero())
            }
        }
    }
}

fn check_r(r: u64, min: u64) -> Result<()> {
    if r < min {
        return Err(invalid(format!("run bound r must be >= {min}, got {r}")));
    }
    Ok(())
}

/// `b_n(x) = [t^n] (1 + t + ... + t^(r-1))^x` as a polynomial in `x`, from the
/// alternating binomial expansion with a polynomial upper argument.
pub fn basic_poly(n: u64, r: u64) -> Result<DensePolynomial> {
    check_r(r, 2)?;
    let x = DensePolynomial::x();
    let mut sum = DensePolynomial::zero();
    let mut i = 0u64;
    while r * i <= n {
        let rest = n - r * i;
        let upper = &x + &DensePolynomial::constant(rat(rest as i64 - 1));
        let term =
            &DensePolynomial::binomial_of(&x, i) * &DensePolynomial::binomial_of(&upper, rest);
        sum = if i.is_multiple_of(2) {
            &sum + &term
        } else {
            &sum - &term
        };
        i += 1;
    }
    Ok(sum)
}

pub fn s_poly(n: u64, r: u64) -> Result<DensePolynomial> {
    Ok(SequenceFamily::build(FamilyKind::S, r, None, n)?
        .members
        .swap_remove(n as usize))
}

pub fn p_poly(n: u64, r: u64) -> Result<DensePolynomial> {
    Ok(SequenceFamily::build(FamilyKind::P, r, None, n)?
        .members
        .swap_remove(n as usize))
}

pub fn q_poly(n: u64, alpha: u64, r: u64) -> Result<DensePolynomial> {
    Ok(SequenceFamily::build(FamilyKind::Q, r, Some(alpha), n)?
        .members
        .swap_remove(n as usize))
}

/// Checks `f_n(y + x) = sum_i f_i(y) b_{n-i}(x)` for every `n <= n_max` and
/// every `(x, y)` pair.
pub fn sheffer_binomial_check(
    family: &SequenceFamily,
    n_max: u64,
    points: &[(i64, i64)],
) -> Report {
    let mut report = Report::new("sheffer-binomial");
    let n_top = (n_max as usize).min(family.len().saturating_sub(1));
    let basic = SequenceFamily::basic(family.r, n_top as u64).expect("family r is valid");
    let label = format!("{:?}", family.kind).to_lowercase();
    for &(x, y) in points {
        for n in 0..=n_top {
            let lhs = family.value(n, y + x);
            let rhs: BigInt = (0..=n)
                .map(|i| family.value(i, y) * basic.value(n - i, x))
                .sum();
            report.record(
                format!("binomial-theorem-{label}"),
                format!("n={n} x={x} y={y} r={}", family.r),
                lhs,
                rhs,
            );
        }
    }
    report
}

/// Checks `b_n(x + 1) = sum_{i<r} b_{n-i}(x)` as a polynomial identity.
pub fn operator_identity_check(r: u64, n_max: u64) -> Result<Report> {
    let basic = SequenceFamily::basic(r, n_max)?;
    let mut report = Report::new("operator-identity");
    for n in 0..=n_max as usize {
        let lhs = basic.members[n].shift(1);
        let rhs = (0..r as usize)
            .filter(|&i| i <= n)
            .fold(DensePolynomial::zero(), |acc, i| {
                &acc + &basic.members[n - i]
            });
        report.record("shift-equals-sum", format!("n={n} r={r}"), lhs, rhs);
    }
    Ok(report)
}

/// Pointwise check of the Abelization convolution with `a = 1`, `c = 0`:
///
/// ```text
/// b_n(y + x + n) = sum_i b_i(y + i) * x / (x + n - i) * b_{n-i}(x + n - i)
/// ```
///
/// Points where some denominator `x + n - i` vanishes are skipped.
pub fn abelization_check(r: u64, n_max: u64, points: &[(i64, i64)]) -> Result<Report> {
    let basic = SequenceFamily::basic(r, n_max)?;
    let mut report = Report::new("abelization");
    for &(x, y) in points {
        for n in 0..=n_max as i64 {
            if (0..=n).any(|i| x + n - i == 0) {
                continue;
            }
            let lhs = BigRational::from_integer(basic.value(n as usize, y + x + n));
            let rhs: BigRational = (0..=n)
                .map(|i| {
                    let j = n - i;
                    let num = basic.value(i as usize, y + i)
                        * BigInt::from(x)
                        * basic.value(j as usize, x + j);
                    BigRational::new(num, (x + j).into())
                })
                .sum();
            report.record(
                "abelization",
                format!("n={n} x={x} y={y} r={r}"),
                format_rational(&lhs),
                format_rational(&rhs),
            );
        }
    }
    Ok(report)
}

/// `(x - n + 1) b_n(x + 1)`; equals `(x + 1) s_n(x)` as polynomials.
pub fn s_numerator_closed(n: u64, r: u64) -> Result<DensePolynomial> {
    let b = basic_poly(n, r)?.shift(1);
    let factor = DensePolynomial::from_coeffs(vec![rat(1 - n as i64), BigRational::one()]);
    Ok(&factor * &b)
}
