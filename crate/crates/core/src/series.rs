//! Truncated formal power series over exact rationals, and the generating
//! functions built from them.

use std::ops::RangeInclusive;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{invalid, Error, Result};
use crate::euler::catalan;
use crate::exact::{binomial_i64, exact_rational_sqrt, format_rational, int, rat};
use crate::paths::ballot_avoid_east;
use crate::poly::DensePolynomial;
use crate::polyseq::{FamilyKind, SequenceFamily};
use crate::report::Report;

pub const DEFAULT_ORDER: usize = 64;

/// Coefficients `c_0..=c_N` of a series known modulo `t^(N+1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    /// Pads with zeros or truncates to exactly `order + 1` coefficients.
    pub fn new(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        Self { coeffs }
    }

    pub fn from_integers(coeffs: &[i64], order: usize) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect(), order)
    }

    pub fn from_poly(p: &DensePolynomial, order: usize) -> Self {
        Self::new(p.coeffs().to_vec(), order)
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(BigRational::one(), order)
    }

    pub fn constant(c: BigRational, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    /// `c * t^k`.
    pub fn monomial(k: usize, c: BigRational, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// `1 + t + ... + t^(len-1)`.
    pub fn geometric_block(len: usize, order: usize) -> Self {
        Self::new(vec![BigRational::one(); len.min(order + 1)], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(
            self.coeffs[..=order.min(self.order())].to_vec(),
            order.min(self.order()),
        )
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::NotInvertible(format_rational(c0)));
        }
        let inv0 = c0.recip();
        let n = self.order();
        let mut out: Vec<BigRational> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for k in 1..=n {
            let acc: BigRational = (1..=k).map(|i| &self.coeffs[i] * &out[k - i]).sum();
            out.push(-(acc * &inv0));
        }
        Ok(Self { coeffs: out })
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inverse()?)
    }

    /// Integer power; negative exponents need an invertible constant term.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut exp = e.unsigned_abs();
        let mut acc = Self::one(self.order());
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &sq;
            }
            exp >>= 1;
            if exp > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Square root with the principal (non-negative) constant term, by the
    /// coefficient recursion `2 s_0 s_k = c_k - sum_{i=1}^{k-1} s_i s_{k-i}`.
    pub fn sqrt(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::NotSquare(format_rational(c0)));
        }
        let s0 = exact_rational_sqrt(c0).ok_or_else(|| Error::NotSquare(format_rational(c0)))?;
        let two_s0_inv = (&s0 + &s0).recip();
        let n = self.order();
        let mut out: Vec<BigRational> = Vec::with_capacity(n + 1);
        out.push(s0);
        for k in 1..=n {
            let cross: BigRational = (1..k).map(|i| &out[i] * &out[k - i]).sum();
            out.push((&self.coeffs[k] - cross) * &two_s0_inv);
        }
        Ok(Self { coeffs: out })
    }

    /// Index of the first differing coefficient up to the common order.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b)
    }

    /// The first `n + 1` coefficients as integers, if they all are.
    fn integer_coeffs(&self, n: usize) -> Option<Vec<BigInt>> {
        self.coeffs[..=n]
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(format_rational).collect()
    }
}

fn zip_with(
    a: &TruncatedSeries,
    b: &TruncatedSeries,
    f: impl Fn(&BigRational, &BigRational) -> BigRational,
) -> TruncatedSeries {
    TruncatedSeries {
        coeffs: a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| f(x, y))
            .collect(),
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: Self) -> TruncatedSeries {
        zip_with(self, rhs, |a, b| a + b)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: Self) -> TruncatedSeries {
        zip_with(self, rhs, |a, b| a - b)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: Self) -> TruncatedSeries {
        let n = self.order().min(rhs.order());
        if let (Some(a), Some(b)) = (self.integer_coeffs(n), rhs.integer_coeffs(n)) {
            let mut out = vec![BigInt::zero(); n + 1];
            for (i, x) in a.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (j, y) in b.iter().take(n + 1 - i).enumerate() {
                    out[i + j] += x * y;
                }
            }
            return TruncatedSeries {
                coeffs: out.into_iter().map(BigRational::from_integer).collect(),
            };
        }
        let mut out = vec![BigRational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n + 1 - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs: out }
    }
}

impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(serializer)
    }
}

fn check_r(r: u64) -> Result<()> {
    if r < 2 {
        return Err(invalid(format!("run bound r must be >= 2, got {r}")));
    }
    Ok(())
}

/// `(1 - t^r)`, `(1 - t)` and friends as series of the given order.
fn binomial_series(coeffs: &[(usize, i64)], order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(order);
    for &(k, c) in coeffs {
        if k <= order {
            s.coeffs[k] += rat(c);
        }
    }
    s
}

/// The factor `r t^r (1 - t) + (1 - t^r)(1 - 2t)` as a polynomial.
pub fn down_gf_factor(r: u64) -> DensePolynomial {
    let r_us = r as usize;
    let mut c = vec![0i64; r_us + 2];
    c[r_us] += r as i64;
    c[r_us + 1] -= r as i64;
    // (1 - t^r)(1 - 2t) = 1 - 2t - t^r + 2 t^(r+1)
    c[0] += 1;
    c[1] -= 2;
    c[r_us] -= 1;
    c[r_us + 1] += 2;
    DensePolynomial::from_integers(&c)
}

/// The same factor in the form `r t^r (1 - t) - (1 - t^r)(2t - 1)`.
pub fn down_gf_factor_alt(r: u64) -> DensePolynomial {
    let rt = DensePolynomial::from_integers(&{
        let mut v = vec![0i64; r as usize + 1];
        v[r as usize] = r as i64;
        v
    });
    let one_minus_t = DensePolynomial::from_integers(&[1, -1]);
    let one_minus_tr = DensePolynomial::from_integers(&{
        let mut v = vec![0i64; r as usize + 1];
        v[0] = 1;
        v[r as usize] = -1;
        v
    });
    let two_t_minus_one = DensePolynomial::from_integers(&[-1, 2]);
    &(&rt * &one_minus_t) - &(&one_minus_tr * &two_t_minus_one)
}

/// Generating function over `n` of the east-run-avoiding ballot counts to
/// `(n, m)`: `(1 - t^r)^m / (1 - t)^(m + 2) * (r t^r (1 - t) + (1 - t^r)(1 - 2t))`.
pub fn gen_func_down(m: u64, r: u64, order: usize) -> Result<TruncatedSeries> {
    check_r(r)?;
    let one_minus_tr = binomial_series(&[(0, 1), (r as usize, -1)], order);
    let one_minus_t = binomial_series(&[(0, 1), (1, -1)], order);
    let numer = one_minus_tr.pow(m as i64)?;
    let denom = one_minus_t.pow(-(m as i64) - 2)?;
    let factor = TruncatedSeries::from_poly(&down_gf_factor(r), order);
    Ok(&(&numer * &denom) * &factor)
}

/// `f(t) = sum_n s_n(n) t^n`, the Dyck paths to `(2n, 0)` avoiding `d^r`.
pub fn dyck_gf(r: u64, order: usize) -> Result<TruncatedSeries> {
    check_r(r)?;
    let coeffs = (0..=order as i64)
        .map(|n| ballot_avoid_east(n, n, r as i64).map(BigRational::from_integer))
        .collect::<Result<Vec<_>>>()?;
    Ok(TruncatedSeries::new(coeffs, order))
}

/// Checks that `f = sum_n s_n(n) t^n` satisfies
/// `f = 1 + sum_{i=1}^{r-1} (t f)^i` and its summed form
/// `f (1 - t f) = 1 - (t f)^r`, coefficient by coefficient.
pub fn dyck_gf_functional_check(r: u64, order: usize) -> Result<Report> {
    let f = dyck_gf(r, order)?;
    let tf = &TruncatedSeries::monomial(1, BigRational::one(), order) * &f;
    let mut report = Report::new("dyck-functional-equation");

    let mut sum_form = TruncatedSeries::one(order);
    let mut power = TruncatedSeries::one(order);
    for _ in 1..r {
        power = &power * &tf;
        sum_form = &sum_form + &power;
    }
    record_series(&mut report, "sum-form", r, &f, &sum_form);

    let lhs = &f * &(&TruncatedSeries::one(order) - &tf);
    let rhs = &TruncatedSeries::one(order) - &tf.pow(r as i64)?;
    record_series(&mut report, "geometric-form", r, &lhs, &rhs);
    Ok(report)
}

/// Checks `f = (1 - t - t^r f^r) / (1 - 2t)`. This form is not implied by
/// the sum form (together they force `t (f - 1)^2 = 0`) and fails at order 3
/// for every `r`; it is kept so the discrepancy stays reproducible.
pub fn dyck_gf_linear_form_check(r: u64, order: usize) -> Result<Report> {
    let f = dyck_gf(r, order)?;
    let t = TruncatedSeries::monomial(1, BigRational::one(), order);
    let one = TruncatedSeries::one(order);
    let tr_fr =
        &TruncatedSeries::monomial(r as usize, BigRational::one(), order) * &f.pow(r as i64)?;
    let numer = &(&one - &t) - &tr_fr;
    let denom = &one - &t.scale(&rat(2));
    let rhs = numer.div(&denom)?;
    let mut report = Report::new("dyck-linear-form");
    record_series(&mut report, "linear-form", r, &f, &rhs);
    Ok(report)
}

fn record_series(
    report: &mut Report,
    check: &str,
    r: u64,
    lhs: &TruncatedSeries,
    rhs: &TruncatedSeries,
) {
    for k in 0..=lhs.order().min(rhs.order()) {
        report.record(
            check,
            format!("r={r} order={k}"),
            format_rational(lhs.coeff(k)),
            format_rational(rhs.coeff(k)),
        );
    }
}

/// Peakless Motzkin numbers `M'(n) = sum_{i <= n/3} binom(n - i, 2i) C_i`.
pub fn motzkin_peakless(n: u64) -> BigInt {
    (0..=n / 3)
        .map(|i| binomial_i64((n - i) as i64, 2 * i) * catalan(i))
        .sum()
}

/// `(3 + t - sqrt((1 + t)^2 + 4 t^3)) / 2`.
pub fn conjecture_base(order: usize) -> Result<TruncatedSeries> {
    let radicand = binomial_series(&[(0, 1), (1, 2), (2, 1), (3, 4)], order);
    let root = radicand.sqrt()?;
    let lead = binomial_series(&[(0, 3), (1, 1)], order);
    Ok((&lead - &root).scale(&BigRational::new(int(1), int(2))))
}

/// `(3 + t - sqrt((1 + t)^2 + 4 t^3)) / 2 * ((1 - t^4) / (1 - t))^x`.
pub fn conjecture_series(x: i64, order: usize) -> Result<TruncatedSeries> {
    conjecture_series_with_r(x, 4, order)
}

/// The same ansatz with `(1 + t + ... + t^(r-1))^x`. Only `r = 4` is the
/// conjectured case; other `r` are exploratory.
pub fn conjecture_series_with_r(x: i64, r: u64, order: usize) -> Result<TruncatedSeries> {
    check_r(r)?;
    let block = TruncatedSeries::geometric_block(r as usize, order);
    Ok(&conjecture_base(order)? * &block.pow(x)?)
}

/// Evidence for `p_n(0) = (-1)^n M'(n - 3)` (`3 <= n <= n_max`, r = 4) and
/// for the coefficient of `t^n` in [`conjecture_series`] equalling `p_n(x)`
/// for `n <= xs_n_max` and every `x` in `xs`. Passing is evidence, not proof.
pub fn conjecture_check(n_max: u64, xs: RangeInclusive<i64>, xs_n_max: u64) -> Result<Report> {
    conjecture_check_with_r(4, n_max, xs, xs_n_max)
}

pub fn conjecture_check_with_r(
    r: u64,
    n_max: u64,
    xs: RangeInclusive<i64>,
    xs_n_max: u64,
) -> Result<Report> {
    if n_max < 3 {
        return Err(invalid("conjecture check needs n_max >= 3"));
    }
    let top = n_max.max(xs_n_max);
    let family = SequenceFamily::build(FamilyKind::P, r, None, top)?;
    let mut report = Report::new("conjecture");
    for n in 3..=n_max {
        let m = motzkin_peakless(n - 3);
        let signed = if n % 2 == 0 { m } else { -m };
        report.record(
            "p_n(0)-motzkin",
            format!("n={n} r={r}"),
            family.value(n as usize, 0),
            signed,
        );
    }
    for x in xs {
        let series = conjecture_series_with_r(x, r, xs_n_max as usize)?;
        for n in 0..=xs_n_max as usize {
            report.record(
                "gf-coefficient",
                format!("n={n} x={x} r={r}"),
                family.value(n, x),
                format_rational(series.coeff(n)),
            );
        }
    }
    if report.passed() {
        report.note(format!("verified to order {n_max} (evidence, not a proof)"));
    }
    Ok(report)
}
