//! Brute-force ground truth by step-by-step state enumeration.
//!
//! Nothing here touches Euler coefficients, recurrences or closed forms; the
//! only shared code is the point and restriction types.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::paths::{BallotPoint, Direction, DyckPoint, RunRestriction};

/// Longest path the enumerators accept.
pub const MAX_STEPS: u64 = 96;
/// Most composition parts the enumerator accepts.
pub const MAX_PARTS: u64 = 40;
/// Longest Motzkin path the enumerator accepts.
pub const MAX_MOTZKIN: u64 = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Target {
    Ballot(BallotPoint),
    Dyck(DyckPoint),
}

/// Which walk is enumerated: north/east steps kept weakly above `y = x`, or
/// up/down steps kept weakly above the axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Boundary {
    Ballot,
    Dyck,
}

/// A prefix of a walk: where it is and how long its final run is.
/// `run_length` counts trailing steps in `run_direction` and stays below `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WalkState {
    pub position: (i64, i64),
    pub run_direction: Option<Direction>,
    pub run_length: u64,
}

impl WalkState {
    fn start() -> Self {
        Self {
            position: (0, 0),
            run_direction: None,
            run_length: 0,
        }
    }

    /// State after one more step, or `None` if it would complete a forbidden run.
    fn step(
        &self,
        dir: Direction,
        delta: (i64, i64),
        restriction: &RunRestriction,
    ) -> Option<Self> {
        let run_length = if self.run_direction == Some(dir) {
            self.run_length + 1
        } else {
            1
        };
        if dir == restriction.direction && run_length >= restriction.r {
            return None;
        }
        Some(Self {
            position: (self.position.0 + delta.0, self.position.1 + delta.1),
            run_direction: Some(dir),
            run_length: run_length.min(restriction.r),
        })
    }
}

struct Walker {
    boundary: Boundary,
    restriction: RunRestriction,
    goal: (i64, i64),
    memo: HashMap<WalkState, BigInt>,
}

impl Walker {
    fn steps(&self) -> [(Direction, (i64, i64)); 2] {
        match self.boundary {
            Boundary::Ballot => [(Direction::East, (1, 0)), (Direction::North, (0, 1))],
            Boundary::Dyck => [(Direction::East, (1, -1)), (Direction::North, (1, 1))],
        }
    }

    fn admissible(&self, (a, b): (i64, i64)) -> bool {
        match self.boundary {
            Boundary::Ballot => a <= b && a <= self.goal.0 && b <= self.goal.1,
            Boundary::Dyck => b >= 0 && a <= self.goal.0 && b - self.goal.1 <= self.goal.0 - a,
        }
    }

    fn completions(&mut self, state: WalkState) -> BigInt {
        if state.position == self.goal {
            return BigInt::one();
        }
        if let Some(hit) = self.memo.get(&state) {
            return hit.clone();
        }
        let mut total = BigInt::zero();
        for (dir, delta) in self.steps() {
            if let Some(next) = state.step(dir, delta, &self.restriction) {
                if self.admissible(next.position) {
                    total += self.completions(next);
                }
            }
        }
        self.memo.insert(state, total.clone());
        total
    }
}

/// Counts paths from the origin to `target` whose every prefix respects
/// `boundary` and which never take `r` consecutive steps in the restricted
/// direction. The target is converted to the walk's coordinates first.
pub fn brute_force_count(
    target: Target,
    restriction: RunRestriction,
    boundary: Boundary,
) -> Result<BigInt> {
    let goal = match (target, boundary) {
        (Target::Ballot(p), Boundary::Ballot) => (p.n, p.m),
        (Target::Ballot(p), Boundary::Dyck) => (p.n + p.m, p.m - p.n),
        (Target::Dyck(p), Boundary::Dyck) => (p.x, p.y),
        (Target::Dyck(p), Boundary::Ballot) => {
            let b = p.to_ballot();
            (b.n, b.m)
        }
    };
    let length = match boundary {
        Boundary::Ballot => goal.0 + goal.1,
        Boundary::Dyck => goal.0,
    };
    if length > MAX_STEPS as i64 {
        return Err(Error::SizeGuard(format!(
            "path length {length} exceeds the brute-force limit of {MAX_STEPS}"
        )));
    }
    let mut walker = Walker {
        boundary,
        restriction,
        goal,
        memo: HashMap::new(),
    };
    let start = WalkState::start();
    if !walker.admissible(start.position) {
        return Ok(BigInt::zero());
    }
    Ok(walker.completions(start))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    /// Compositions of `c n - alpha` whose first `k` parts sum to at most `c k`.
    P,
    /// Compositions of `n + alpha` whose first `k` parts sum to at most `k + alpha`.
    Q,
}

/// Counts compositions into `n` parts from `0..=c+1` with the prefix bounds of
/// `side` imposed for `k = 1..n-1` and the total pinned.
pub fn count_restricted_compositions(c: u64, n: u64, alpha: u64, side: Side) -> Result<BigInt> {
    if c == 0 {
        return Err(crate::error::invalid("composition step c must be >= 1"));
    }
    if n > MAX_PARTS {
        return Err(Error::SizeGuard(format!(
            "{n} parts exceeds the composition limit of {MAX_PARTS}"
        )));
    }
    let (c, n, alpha) = (c as i64, n as i64, alpha as i64);
    let total = match side {
        Side::P => c * n - alpha,
        Side::Q => n + alpha,
    };
    if total < 0 {
        return Ok(BigInt::zero());
    }
    let bound = |k: i64| match side {
        Side::P => c * k,
        Side::Q => k + alpha,
    };
    let mut memo: HashMap<(i64, i64), BigInt> = HashMap::new();
    Ok(compositions(0, 0, n, total, c + 1, &bound, &mut memo))
}

fn compositions(
    k: i64,
    sum: i64,
    n: i64,
    total: i64,
    max_part: i64,
    bound: &dyn Fn(i64) -> i64,
    memo: &mut HashMap<(i64, i64), BigInt>,
) -> BigInt {
    if k == n {
        return if sum == total {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    // Remaining parts cannot reach the total.
    if sum + (n - k) * max_part < total {
        return BigInt::zero();
    }
    if let Some(hit) = memo.get(&(k, sum)) {
        return hit.clone();
    }
    let mut count = BigInt::zero();
    for part in 0..=max_part {
        let next = sum + part;
        if next > total {
            break;
        }
        let k1 = k + 1;
        if k1 < n && next > bound(k1) {
            break;
        }
        count += compositions(k1, next, n, total, max_part, bound, memo);
    }
    memo.insert((k, sum), count.clone());
    count
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum MotzkinStep {
    Up,
    Down,
    Flat,
}

/// Motzkin paths of length `n` (up, down and flat steps, never below the
/// axis) in which an up step is always followed by a flat step.
pub fn motzkin_peakless_bruteforce(n: u64) -> Result<BigInt> {
    if n > MAX_MOTZKIN {
        return Err(Error::SizeGuard(format!(
            "Motzkin length {n} exceeds the limit of {MAX_MOTZKIN}"
        )));
    }
    let mut memo = HashMap::new();
    Ok(motzkin(0, 0, None, n as i64, &mut memo))
}

fn motzkin(
    pos: i64,
    height: i64,
    last: Option<MotzkinStep>,
    n: i64,
    memo: &mut HashMap<(i64, i64, Option<MotzkinStep>), BigInt>,
) -> BigInt {
    if height > n - pos {
        return BigInt::zero();
    }
    if pos == n {
        return if height == 0 {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    if let Some(hit) = memo.get(&(pos, height, last)) {
        return hit.clone();
    }
    let mut count = BigInt::zero();
    for step in [MotzkinStep::Up, MotzkinStep::Down, MotzkinStep::Flat] {
        if last == Some(MotzkinStep::Up) && step != MotzkinStep::Flat {
            continue;
        }
        let h = match step {
            MotzkinStep::Up => height + 1,
            MotzkinStep::Down => height - 1,
            MotzkinStep::Flat => height,
        };
        if h >= 0 {
            count += motzkin(pos + 1, h, Some(step), n, memo);
        }
    }
    memo.insert((pos, height, last), count.clone());
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn east(r: i64) -> RunRestriction {
        RunRestriction::new(Direction::East, r).unwrap()
    }

    fn north(r: i64) -> RunRestriction {
        RunRestriction::new(Direction::North, r).unwrap()
    }

    #[test]
    fn path_examples() {
        let both = [Boundary::Ballot, Boundary::Dyck];
        for b in both {
            let c3 = brute_force_count(Target::Ballot(BallotPoint::new(3, 3)), east(10), b);
            assert_eq!(c3.unwrap(), int(5));
            let d = brute_force_count(Target::Dyck(DyckPoint::new(12, 0).unwrap()), north(4), b);
            assert_eq!(d.unwrap(), int(104));
            let t = brute_force_count(Target::Ballot(BallotPoint::new(2, 5)), north(4), b);
            assert_eq!(t.unwrap(), int(10));
        }
    }

    #[test]
    fn below_diagonal_is_empty() {
        let t = Target::Ballot(BallotPoint::new(3, 2));
        assert_eq!(
            brute_force_count(t, east(3), Boundary::Ballot).unwrap(),
            int(0)
        );
        assert_eq!(
            brute_force_count(t, east(3), Boundary::Dyck).unwrap(),
            int(0)
        );
    }

    #[test]
    fn size_guard_refuses() {
        let t = Target::Ballot(BallotPoint::new(50, 50));
        assert!(matches!(
            brute_force_count(t, east(3), Boundary::Ballot),
            Err(Error::SizeGuard(_))
        ));
        assert!(matches!(
            count_restricted_compositions(2, 41, 0, Side::P),
            Err(Error::SizeGuard(_))
        ));
        assert!(motzkin_peakless_bruteforce(201).is_err());
    }

    #[test]
    fn composition_examples() {
        assert_eq!(
            count_restricted_compositions(2, 3, 1, Side::P).unwrap(),
            int(8)
        );
        assert_eq!(
            count_restricted_compositions(2, 3, 1, Side::Q).unwrap(),
            int(8)
        );
        for c in 1..4 {
            for side in [Side::P, Side::Q] {
                assert_eq!(
                    count_restricted_compositions(c, 0, 0, side).unwrap(),
                    int(1)
                );
            }
        }
    }

    #[test]
    fn motzkin_examples() {
        assert_eq!(motzkin_peakless_bruteforce(0).unwrap(), int(1));
        assert_eq!(motzkin_peakless_bruteforce(5).unwrap(), int(7));
        assert_eq!(motzkin_peakless_bruteforce(9).unwrap(), int(104));
    }
}
