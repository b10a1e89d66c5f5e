//! Generalized binomial and Euler (polynomial) coefficients.
//!
//! The Euler coefficient `binom(x, k)_r` is the coefficient of `t^k` in
//! `(1 + t + ... + t^(r-1))^x = ((1 - t^r) / (1 - t))^x`. Expanding the
//! quotient gives
//!
//! ```text
//! binom(x, k)_r = sum_{i=0}^{floor(k/r)} (-1)^i binom(x, i) binom(x + k - r i - 1, k - r i)
//! ```
//!
//! which is valid for every integer `x`, including negative ones.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{invalid, Result};
use crate::exact::{binomial_i64, factorial, int};
use crate::report::Report;

/// Validated arguments of an Euler coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EulerArgs {
    pub x: i64,
    pub k: u64,
    pub r: u64,
}

impl EulerArgs {
    pub fn new(x: i64, k: i64, r: i64) -> Result<Self> {
        if r < 1 {
            return Err(invalid(format!("run bound r must be >= 1, got {r}")));
        }
        if k < 0 {
            return Err(invalid(format!("lower argument k must be >= 0, got {k}")));
        }
        Ok(Self {
            x,
            k: k as u64,
            r: r as u64,
        })
    }

    pub fn eval(&self) -> BigInt {
        euler_unchecked(self.x, self.k, self.r)
    }
}

/// `x (x-1) ... (x-k+1) / k!` for rational `x`.
pub fn general_binomial(x: &BigRational, k: u64) -> BigRational {
    let mut acc = BigRational::one();
    for j in 0..k {
        acc *= x - BigRational::from_integer(BigInt::from(j));
    }
    acc / BigRational::from_integer(factorial(k))
}

/// Euler coefficient `binom(x, k)_r`.
pub fn euler_coeff(x: i64, k: i64, r: i64) -> Result<BigInt> {
    Ok(EulerArgs::new(x, k, r)?.eval())
}

pub(crate) fn euler_unchecked(x: i64, k: u64, r: u64) -> BigInt {
    let mut sum = BigInt::zero();
    let mut i = 0u64;
    while r * i <= k {
        let rest = k - r * i;
        let term = binomial_i64(x, i) * binomial_i64(x + rest as i64 - 1, rest);
        if i.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        i += 1;
    }
    sum
}

/// Euler coefficient that is zero for a negative lower argument, as used
/// inside convolution-style sums.
pub(crate) fn euler_or_zero(x: i64, k: i64, r: u64) -> BigInt {
    if k < 0 {
        BigInt::zero()
    } else {
        euler_unchecked(x, k as u64, r)
    }
}

/// The same alternating sum evaluated in rationals through [`general_binomial`].
/// At integer `x` the result reduces to an integer.
pub fn euler_coeff_rational(x: &BigRational, k: u64, r: u64) -> BigRational {
    assert!(r >= 1, "run bound must be positive");
    let mut sum = BigRational::zero();
    let mut i = 0u64;
    while r * i <= k {
        let rest = k - r * i;
        let upper = x + BigRational::from_integer(BigInt::from(rest as i64 - 1));
        let term = general_binomial(x, i) * general_binomial(&upper, rest);
        if i.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        i += 1;
    }
    sum
}

/// `binom(x, k)_r` for `k = 0..=k_max`.
pub fn euler_row(x: i64, r: i64, k_max: i64) -> Result<Vec<BigInt>> {
    let args = EulerArgs::new(x, k_max, r)?;
    if x < 0 {
        return Ok((0..=args.k)
            .map(|k| euler_unchecked(x, k, args.r))
            .collect());
    }
    Ok(power_row(x as u64, args.r, args.k as usize))
}

/// Coefficients of `(1 + t + ... + t^(r-1))^x` through `t^k_max`, by repeated
/// sliding-window multiplication.
fn power_row(x: u64, r: u64, k_max: usize) -> Vec<BigInt> {
    let width = r as usize;
    let mut row = vec![BigInt::zero(); k_max + 1];
    row[0] = BigInt::one();
    for _ in 0..x {
        let mut next = Vec::with_capacity(k_max + 1);
        let mut window = BigInt::zero();
        for k in 0..=k_max {
            window += &row[k];
            if k >= width {
                window -= &row[k - width];
            }
            next.push(window.clone());
        }
        row = next;
    }
    row
}

/// The `n`-th Catalan number.
pub fn catalan(n: u64) -> BigInt {
    binomial_i64(2 * n as i64, n) / BigInt::from(n + 1)
}

/// Right side of Euler's step from `r` to `r + 1`:
/// `sum_{i=0}^{i_max} binom(n, k - i) binom(k - i, i)_r`.
pub fn euler_recurrence_rhs(n: u64, k: u64, r: u64, i_max: u64) -> BigInt {
    (0..=i_max.min(k))
        .map(|i| binomial_i64(n as i64, k - i) * euler_unchecked((k - i) as i64, i, r))
        .sum()
}

/// Identities checked by [`verify_euler_identities`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EulerIdentity {
    Pascal,
    Symmetry,
    Vandermonde,
    CatalanIdentity,
    EulerRecurrence,
    LargeRunBinomial,
    CatalanLimit,
}

impl EulerIdentity {
    pub fn name(self) -> &'static str {
        match self {
            Self::Pascal => "pascal",
            Self::Symmetry => "symmetry",
            Self::Vandermonde => "vandermonde",
            Self::CatalanIdentity => "catalan-identity",
            Self::EulerRecurrence => "euler-recurrence",
            Self::LargeRunBinomial => "large-r-binomial",
            Self::CatalanLimit => "catalan-limit",
        }
    }
}

/// Cached rows `binom(x, k)_r` for `x = 0..=x_max`, `k = 0..=k_max`.
struct RowCache {
    rows: Vec<Vec<BigInt>>,
}

impl RowCache {
    fn new(x_max: u64, r: u64, k_max: usize) -> Self {
        let rows = (0..=x_max).map(|x| power_row(x, r, k_max)).collect();
        Self { rows }
    }

    fn get(&self, x: u64, k: i64) -> BigInt {
        if k < 0 {
            return BigInt::zero();
        }
        let row = &self.rows[x as usize];
        row.get(k as usize).cloned().unwrap_or_else(BigInt::zero)
    }
}

/// Checks the Euler-coefficient identities over `0 <= n <= n_max`,
/// `0 <= k <= k_max` and `2 <= r <= r_max`:
///
/// 1. Pascal: `binom(n,k)_r = sum_{i<r} binom(n-1,k-i)_r`
/// 2. symmetry: `binom(n,k)_r = binom(n, n(r-1)-k)_r`
/// 3. Vandermonde: `binom(n+m,k)_r = sum_i binom(n,i)_r binom(m,k-i)_r`
/// 4. `binom(n+1,n)_r / (n+1) = binom(n,n)_r - sum_{i=1}^{r-2} i binom(n,n-i-1)_r`
/// 5. Euler: `binom(n,k)_{r+1} = sum_i binom(n,k-i) binom(k-i,i)_r`, summed over all `i <= k`
/// 6. `binom(n,k)_r = binom(n+k-1,k)` whenever `r > k`
/// 7. `binom(n+1,n)_r / (n+1) = C_n` whenever `r > n`
pub fn verify_euler_identities(n_max: u64, k_max: u64, r_max: u64) -> Report {
    let rs: Vec<u64> = (2..=r_max).collect();
    verify_euler_identities_for(n_max, k_max, &rs)
}

/// As [`verify_euler_identities`], for an explicit set of run bounds.
pub fn verify_euler_identities_for(n_max: u64, k_max: u64, rs: &[u64]) -> Report {
    let mut report = Report::new("identities");
    for &r in rs {
        identities_for_r(&mut report, n_max, k_max, r);
    }
    report
}

fn identities_for_r(report: &mut Report, n_max: u64, k_max: u64, r: u64) {
    let k_top = k_max as usize;
    // Row length must cover binom(n+1, n) and the symmetric partner n(r-1)-k.
    let width = k_top.max((n_max as usize + 1) * r as usize);
    let cache = RowCache::new(2 * n_max + 1, r, width);
    let next = RowCache::new(n_max, r + 1, width);
    let lower = RowCache::new(k_max.max(1), r, k_top);
    for n in 0..=n_max {
        for k in 0..=k_max {
            let ki = k as i64;
            let args = format!("n={n} k={k} r={r}");
            let value = cache.get(n, ki);
            if n >= 1 {
                let sum: BigInt = (0..r as i64).map(|i| cache.get(n - 1, ki - i)).sum();
                report.record(EulerIdentity::Pascal.name(), &args, &value, sum);
            }
            let span = n * (r - 1);
            if k <= span {
                let mirror = cache.get(n, (span - k) as i64);
                report.record(EulerIdentity::Symmetry.name(), &args, &value, mirror);
            }
            for m in 0..=n_max {
                let conv: BigInt = (0..=ki)
                    .map(|i| cache.get(n, i) * cache.get(m, ki - i))
                    .sum();
                report.record(
                    EulerIdentity::Vandermonde.name(),
                    format!("n={n} m={m} k={k} r={r}"),
                    cache.get(n + m, ki),
                    conv,
                );
            }
            let stepped = next.get(n, ki);
            let rhs: BigInt = (0..=k)
                .map(|i| binomial_i64(n as i64, k - i) * lower.get(k - i, i as i64))
                .sum();
            report.record(EulerIdentity::EulerRecurrence.name(), &args, stepped, rhs);
            if r > k {
                let plain = binomial_i64((n + k) as i64 - 1, k);
                report.record(EulerIdentity::LargeRunBinomial.name(), &args, &value, plain);
            }
        }
        let args = format!("n={n} r={r}");
        let ni = n as i64;
        let lhs = cache.get(n + 1, ni);
        let mut rhs = cache.get(n, ni);
        for i in 1..=(r as i64 - 2) {
            rhs -= int(i) * cache.get(n, ni - i - 1);
        }
        // Compare (n+1) * rhs with binom(n+1,n)_r to stay in integers.
        report.record(
            EulerIdentity::CatalanIdentity.name(),
            &args,
            &lhs,
            rhs * BigInt::from(n + 1),
        );
        if r > n {
            report.record(
                EulerIdentity::CatalanLimit.name(),
                &args,
                lhs,
                catalan(n) * BigInt::from(n + 1),
            );
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};

    #[test]
    fn general_binomial_examples() {
        assert_eq!(general_binomial(&rat(11), 3), rat(165));
        assert_eq!(general_binomial(&ratio(7, 3), 0), rat(1));
        assert_eq!(general_binomial(&rat(-2), 3), rat(-4));
        assert_eq!(general_binomial(&ratio(1, 2), 2), ratio(-1, 8));
    }

    #[test]
    fn euler_coeff_examples() {
        assert_eq!(euler_coeff(5, 5, 4).unwrap(), int(101));
        assert_eq!(euler_coeff(8, 8, 4).unwrap(), int(3823));
        assert_eq!(euler_coeff(-7, 0, 3).unwrap(), int(1));
        assert_eq!(euler_coeff(-1, 1, 4).unwrap(), int(-1));
        assert_eq!(euler_coeff(-1, 2, 4).unwrap(), int(0));
        for n in 0..10 {
            for k in 0..12 {
                assert_eq!(euler_coeff(n, k, 2).unwrap(), binomial_i64(n, k as u64));
            }
        }
    }

    #[test]
    fn euler_coeff_rejects_bad_arguments() {
        assert!(euler_coeff(3, -1, 4).is_err());
        assert!(euler_coeff(3, 2, 0).is_err());
        assert!(euler_row(3, 0, 4).is_err());
    }

    #[test]
    fn run_bound_one_is_kronecker_delta() {
        for x in -3..6 {
            assert_eq!(euler_coeff(x, 0, 1).unwrap(), int(1));
            for k in 1..6 {
                assert_eq!(euler_coeff(x, k, 1).unwrap(), int(0), "x={x} k={k}");
            }
        }
    }

    #[test]
    fn euler_row_examples() {
        let row: Vec<BigInt> = [1, 3, 6, 10, 12, 12, 10, 6, 3]
            .iter()
            .map(|&v| int(v))
            .collect();
        assert_eq!(euler_row(3, 4, 8).unwrap(), row);
        let row: Vec<BigInt> = [1, 6, 21, 56, 120, 216].iter().map(|&v| int(v)).collect();
        assert_eq!(euler_row(6, 4, 5).unwrap(), row);
        let zero = euler_row(0, 4, 5).unwrap();
        assert_eq!(zero[0], int(1));
        assert!(zero[1..].iter().all(Zero::is_zero));
    }

    #[test]
    fn euler_row_matches_pointwise_formula_for_negative_x() {
        let row = euler_row(-3, 3, 10).unwrap();
        for (k, v) in row.iter().enumerate() {
            assert_eq!(*v, euler_coeff(-3, k as i64, 3).unwrap());
        }
    }

    #[test]
    fn rational_form_reduces_to_integers() {
        for r in 1..6u64 {
            for x in -6..10i64 {
                for k in 0..14u64 {
                    let q = euler_coeff_rational(&rat(x), k, r);
                    assert!(q.is_integer(), "x={x} k={k} r={r}");
                    assert_eq!(q.to_integer(), euler_unchecked(x, k, r));
                }
            }
        }
    }

    #[test]
    fn catalan_examples() {
        assert_eq!(catalan(0), int(1));
        assert_eq!(catalan(4), int(14));
        assert_eq!(catalan(6), int(132));
    }

    #[test]
    fn half_range_euler_step_is_too_short() {
        // Summing only up to floor(k/2) misses terms once r >= 3.
        assert_eq!(euler_unchecked(1, 3, 4), int(1));
        assert_eq!(euler_recurrence_rhs(1, 3, 3, 1), int(0));
        assert_eq!(euler_recurrence_rhs(1, 3, 3, 3), int(1));
        // At r = 2 the two bounds agree.
        for n in 0..8 {
            for k in 0..12 {
                assert_eq!(
                    euler_recurrence_rhs(n, k, 2, k / 2),
                    euler_unchecked(n as i64, k, 3)
                );
            }
        }
    }

    #[test]
    fn identity_examples() {
        // symmetry at (3, 8, 4)
        assert_eq!(euler_coeff(3, 8, 4).unwrap(), euler_coeff(3, 1, 4).unwrap());
        assert_eq!(euler_coeff(3, 1, 4).unwrap(), int(3));
        // r > k reduces to binom(n+k-1, k)
        assert_eq!(euler_coeff(5, 4, 6).unwrap(), int(70));
    }

    #[test]
    fn small_identity_suite_passes() {
        let report = verify_euler_identities(5, 12, 4);
        assert!(report.passed(), "{:?}", report.failures().next());
        let tally = report.tally();
        assert_eq!(tally.len(), 7);
    }
}
