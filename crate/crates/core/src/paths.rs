//! Closed-form counts of ballot and Dyck paths that avoid `r` consecutive
//! steps in one direction.
//!
//! Ballot paths use north/east steps and stay weakly above `y = x`; Dyck
//! paths use up/down steps and stay weakly above the axis. The Dyck point
//! `(x, y)` corresponds to the ballot point `((x - y) / 2, (x + y) / 2)`, and
//! a down run becomes an east run.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::euler::euler_or_zero;
use crate::exact::{int, to_integer};
use crate::polyseq::{q_poly, s_poly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BallotPoint {
    pub n: i64,
    pub m: i64,
}

impl BallotPoint {
    pub fn new(n: i64, m: i64) -> Self {
        Self { n, m }
    }

    /// True when some ballot path ends here.
    pub fn is_reachable(&self) -> bool {
        0 <= self.n && self.n <= self.m
    }

    pub fn to_dyck(self) -> DyckPoint {
        DyckPoint {
            x: self.n + self.m,
            y: self.m - self.n,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DyckPoint {
    pub x: i64,
    pub y: i64,
}

impl DyckPoint {
    /// Accepts only points a Dyck path can reach: `0 <= y <= x`, same parity.
    pub fn new(x: i64, y: i64) -> Result<Self> {
        if y < 0 || y > x || (x - y) % 2 != 0 {
            return Err(Error::UnreachableDyckPoint { x, y });
        }
        Ok(Self { x, y })
    }

    pub fn to_ballot(self) -> BallotPoint {
        BallotPoint {
            n: (self.x - self.y) / 2,
            m: (self.x + self.y) / 2,
        }
    }
}

/// `East` is the down step `d` of a Dyck path, `North` the up step `u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    East,
    North,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RunRestriction {
    pub direction: Direction,
    pub r: u64,
}

impl RunRestriction {
    pub fn new(direction: Direction, r: i64) -> Result<Self> {
        check_run(r)?;
        Ok(Self {
            direction,
            r: r as u64,
        })
    }
}

fn check_run(r: i64) -> Result<u64> {
    if r < 2 {
        return Err(invalid(format!("run bound r must be >= 2, got {r}")));
    }
    Ok(r as u64)
}

fn integral(q: BigRational, what: &str) -> BigInt {
    to_integer(&q).unwrap_or_else(|| panic!("{what} evaluated to non-integer {q}"))
}

/// `s_n(m) = (m - n + 1) / (m + 1) * binom(m + 1, n)_r`.
/// Fails with [`Error::Singular`] at `m = -1`.
pub fn ballot_avoid_east_closed(n: i64, m: i64, r: i64) -> Result<BigInt> {
    let r = check_run(r)?;
    if n < 0 {
        return Err(invalid(format!("east coordinate must be >= 0, got {n}")));
    }
    if m == -1 {
        return Err(Error::Singular(format!("s_{n}(-1)")));
    }
    let e = euler_or_zero(m + 1, n, r);
    let q = BigRational::new(int(m - n + 1) * e, int(m + 1));
    Ok(integral(q, "ballot east count"))
}

/// Number of ballot paths to `(n, m)` with no `r` consecutive east steps;
/// for `m < n` the value of the polynomial extension in `m`.
pub fn ballot_avoid_east(n: i64, m: i64, r: i64) -> Result<BigInt> {
    match ballot_avoid_east_closed(n, m, r) {
        Err(Error::Singular(_)) => {
            let poly = s_poly(n as u64, r as u64)?;
            Ok(poly.eval_integer(m).expect("s_n is integer-valued"))
        }
        other => other,
    }
}

/// Number of ballot paths to `(n, m)`, `m >= n >= 0`, with no `r`
/// consecutive north steps.
pub fn ballot_avoid_north(n: i64, m: i64, r: i64) -> Result<BigInt> {
    let r = check_run(r)?;
    if n < 0 || m < n {
        return Err(invalid(format!(
            "north-run counts need m >= n >= 0, got ({n}, {m})"
        )));
    }
    if m == n {
        let q = BigRational::new(euler_or_zero(n + 1, n, r), int(n + 1));
        return Ok(integral(q, "diagonal count"));
    }
    let mut sum = BigRational::zero();
    for i in 0..(m - n) {
        let num = euler_or_zero(i - m + n, i, r) * euler_or_zero(m + 1 - i, m - i, r);
        sum += BigRational::new(num, int(m + 1 - i));
    }
    Ok(integral(sum, "ballot north count"))
}

/// The Sheffer polynomial `q_n(x; alpha)` through its convolution form.
/// Fails with [`Error::Singular`] when some `x + alpha + 1 - i` vanishes.
pub fn sheffer_q_closed(n: i64, x: i64, alpha: i64, r: i64) -> Result<BigInt> {
    let r = check_run(r)?;
    if n < 0 || alpha < 0 {
        return Err(invalid(format!(
            "need n >= 0 and alpha >= 0, got n={n} alpha={alpha}"
        )));
    }
    if (0..=alpha).any(|i| x + alpha + 1 - i == 0) {
        return Err(Error::Singular(format!("q_{n}({x}; {alpha})")));
    }
    let mut sum = BigRational::zero();
    for i in 0..=alpha {
        let shifted = x + alpha + 1 - i;
        let num = euler_or_zero(i - alpha - 1, i, r)
            * int(x + alpha + 1 - n)
            * euler_or_zero(shifted, n - i, r);
        sum += BigRational::new(num, int(shifted));
    }
    Ok(integral(sum, "q polynomial"))
}

/// `q_n(x; alpha)`, falling back to the polynomial where the quotient form
/// is singular.
pub fn sheffer_q(n: i64, x: i64, alpha: i64, r: i64) -> Result<BigInt> {
    match sheffer_q_closed(n, x, alpha, r) {
        Err(Error::Singular(_)) => {
            let poly = q_poly(n as u64, alpha as u64, r as u64)?;
            Ok(poly.eval_integer(x).expect("q_n is integer-valued"))
        }
        other => other,
    }
}

/// Dyck paths to `(x, y)` with no `r` consecutive down steps.
pub fn dyck_avoid_down(x: i64, y: i64, r: i64) -> Result<BigInt> {
    check_run(r)?;
    let b = DyckPoint::new(x, y)?.to_ballot();
    ballot_avoid_east(b.n, b.m, r)
}

/// Dyck paths to `(x, y)` with no `r` consecutive up steps. On the axis the
/// last step is a down step, so the count equals that of `(x - 1, 1)`.
pub fn dyck_avoid_up(x: i64, y: i64, r: i64) -> Result<BigInt> {
    check_run(r)?;
    let p = DyckPoint::new(x, y)?;
    if p.y == 0 && p.x >= 1 {
        return dyck_avoid_up(p.x - 1, 1, r);
    }
    let b = p.to_ballot();
    ballot_avoid_north(b.n, b.m, r)
}

/// Closed-form count for a ballot point under a run restriction.
pub fn ballot_count(point: BallotPoint, restriction: RunRestriction) -> Result<BigInt> {
    let r = restriction.r as i64;
    match restriction.direction {
        Direction::East => ballot_avoid_east(point.n, point.m, r),
        Direction::North => ballot_avoid_north(point.n, point.m, r),
    }
}

/// Closed-form count for a Dyck point under a run restriction.
pub fn dyck_count(point: DyckPoint, restriction: RunRestriction) -> Result<BigInt> {
    let r = restriction.r as i64;
    match restriction.direction {
        Direction::East => dyck_avoid_down(point.x, point.y, r),
        Direction::North => dyck_avoid_up(point.x, point.y, r),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euler::catalan;
    use crate::exact::binomial_i64;

    #[test]
    fn east_examples() {
        assert_eq!(ballot_avoid_east(4, 4, 4).unwrap(), int(13));
        assert_eq!(ballot_avoid_east(2, 7, 4).unwrap(), int(27));
        assert_eq!(ballot_avoid_east(6, 4, 4).unwrap(), int(-27));
        for n in 1..10 {
            assert_eq!(ballot_avoid_east(n, n - 1, 4).unwrap(), int(0));
        }
    }

    #[test]
    fn east_singular_point_uses_polynomial() {
        assert!(matches!(
            ballot_avoid_east_closed(5, -1, 4),
            Err(Error::Singular(_))
        ));
        assert_eq!(ballot_avoid_east(5, -1, 4).unwrap(), int(-1));
        assert_eq!(ballot_avoid_east(4, -1, 4).unwrap(), int(3));
    }

    #[test]
    fn north_examples() {
        assert_eq!(ballot_avoid_north(2, 5, 4).unwrap(), int(10));
        assert_eq!(ballot_avoid_north(6, 6, 4).unwrap(), int(104));
        assert_eq!(ballot_avoid_north(3, 9, 4).unwrap(), int(19));
        for r in 2..6 {
            for n in 1..8 {
                let top = (r - 1) * n;
                assert_eq!(ballot_avoid_north(n - 1, top, r).unwrap(), int(1));
                assert_eq!(ballot_avoid_north(n - 1, top + 1, r).unwrap(), int(0));
            }
        }
        assert!(ballot_avoid_north(3, 2, 4).is_err());
    }

    #[test]
    fn q_examples() {
        assert_eq!(sheffer_q(7, 5, 2, 4).unwrap(), int(101));
        assert_eq!(sheffer_q(2, 2, 2, 4).unwrap(), int(3));
        assert_eq!(sheffer_q(8, 4, 2, 4).unwrap(), int(-70));
        for n in 3..10 {
            assert_eq!(sheffer_q(n, n - 3, 2, 4).unwrap(), int(0));
        }
        assert!(matches!(
            sheffer_q_closed(4, -2, 2, 4),
            Err(Error::Singular(_))
        ));
        assert_eq!(
            sheffer_q(4, -2, 2, 4).unwrap(),
            q_poly(4, 2, 4).unwrap().eval_integer(-2).unwrap()
        );
    }

    #[test]
    fn dyck_examples() {
        assert_eq!(dyck_avoid_down(13, 7, 4).unwrap(), int(208));
        assert_eq!(dyck_avoid_down(12, 0, 4).unwrap(), int(104));
        assert_eq!(dyck_avoid_down(0, 0, 3).unwrap(), int(1));
        assert_eq!(dyck_avoid_down(12, 4, 4).unwrap(), int(270));
        assert_eq!(dyck_avoid_up(13, 7, 4).unwrap(), int(10));
        assert_eq!(dyck_avoid_up(11, 7, 4).unwrap(), int(1));
        assert_eq!(dyck_avoid_up(12, 0, 4).unwrap(), int(104));
        assert_eq!(dyck_avoid_up(0, 0, 4).unwrap(), int(1));
    }

    #[test]
    fn dyck_rejects_unreachable_points() {
        assert!(matches!(
            dyck_avoid_down(1, 0, 4),
            Err(Error::UnreachableDyckPoint { .. })
        ));
        assert!(dyck_avoid_up(3, 5, 4).is_err());
        assert!(dyck_avoid_up(4, -2, 4).is_err());
        assert!(dyck_avoid_down(4, 2, 1).is_err());
    }

    #[test]
    fn diagonal_and_transform_consistency() {
        for r in 2..6 {
            for n in 0..12 {
                let east = ballot_avoid_east(n, n, r).unwrap();
                assert_eq!(east, ballot_avoid_north(n, n, r).unwrap());
                assert_eq!(dyck_avoid_up(2 * n, 0, r).unwrap(), east);
            }
        }
        for x in 0..14 {
            for y in (x % 2..=x).step_by(2) {
                let b = DyckPoint::new(x, y).unwrap().to_ballot();
                assert_eq!(b.to_dyck(), DyckPoint { x, y });
                assert_eq!(
                    dyck_avoid_down(x, y, 4).unwrap(),
                    ballot_avoid_east(b.n, b.m, 4).unwrap()
                );
            }
        }
    }

    #[test]
    fn saturation_and_ballot_numbers() {
        for n in 0..10 {
            assert_eq!(
                ballot_avoid_east(n, n, (n + 1).max(2)).unwrap(),
                catalan(n as u64)
            );
            for m in n..14 {
                let ballot =
                    BigRational::new(int(m - n + 1) * binomial_i64(m + 1, n as u64), int(m + 1));
                assert_eq!(ballot_avoid_east(n, m, 2).unwrap(), ballot.to_integer());
            }
        }
    }
}
