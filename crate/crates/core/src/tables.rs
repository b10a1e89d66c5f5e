//! Count tables built purely by recurrence, independent of the closed forms.
//!
//! Fill orders:
//! * `s`: column by column in `n`; upward from the zero at `m = n - 1`, then
//!   downward into the polynomial extension by solving the same recurrence
//!   for `s_n(m - 1)`.
//! * `t`: column by column with the windowed sum over the previous column.
//! * `p`: row by row in `m` along the previous row, then each column's
//!   extension below its staircase zero by the difference recurrence run
//!   backwards.
//! * `q`: column by column from its single anchor, both directions.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{invalid, Result};
use crate::euler::euler_row;
use crate::exact::div_ceil;
use crate::paths::{dyck_avoid_down, dyck_avoid_up, Direction};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableKind {
    S,
    T,
    TPrime,
    P,
    Q,
    Euler,
    DyckUp,
    DyckDown,
}

impl TableKind {
    pub fn name(self) -> &'static str {
        match self {
            Self::S => "s",
            Self::T => "t",
            Self::TPrime => "tprime",
            Self::P => "p",
            Self::Q => "q",
            Self::Euler => "euler",
            Self::DyckUp => "dyck-up",
            Self::DyckDown => "dyck-down",
        }
    }
}

/// Rectangular grid indexed by `(n, m)`: columns are `n`, rows are `m`.
/// For Euler tables `n` is the lower argument `k` and `m` the upper `x`;
/// for Dyck tables `n` is the abscissa and `m` the height.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub kind: TableKind,
    pub r: u64,
    pub alpha: Option<u64>,
    /// Coordinates of `values[0][0]`.
    pub n_offset: i64,
    pub m_offset: i64,
    /// `values[m - m_offset][n - n_offset]`; `None` marks a cell with no
    /// value (wrong parity, or outside the region a path can reach).
    pub values: Vec<Vec<Option<BigInt>>>,
}

impl CountTable {
    fn from_fn(
        kind: TableKind,
        r: u64,
        alpha: Option<u64>,
        cols: RangeInclusive<i64>,
        rows: RangeInclusive<i64>,
        mut cell: impl FnMut(i64, i64) -> Option<BigInt>,
    ) -> Self {
        let values = rows
            .clone()
            .map(|m| cols.clone().map(|n| cell(n, m)).collect())
            .collect();
        Self {
            kind,
            r,
            alpha,
            n_offset: *cols.start(),
            m_offset: *rows.start(),
            values,
        }
    }

    pub fn get(&self, n: i64, m: i64) -> Option<&BigInt> {
        let row = usize::try_from(m - self.m_offset).ok()?;
        let col = usize::try_from(n - self.n_offset).ok()?;
        self.values.get(row)?.get(col)?.as_ref()
    }

    pub fn n_range(&self) -> RangeInclusive<i64> {
        let width = self.values.first().map_or(0, Vec::len) as i64;
        self.n_offset..=self.n_offset + width - 1
    }

    pub fn m_range(&self) -> RangeInclusive<i64> {
        self.m_offset..=self.m_offset + self.values.len() as i64 - 1
    }

    /// Restricts to a sub-rectangle; both ranges must lie inside the table.
    pub fn slice(&self, cols: RangeInclusive<i64>, rows: RangeInclusive<i64>) -> Result<Self> {
        let (have_n, have_m) = (self.n_range(), self.m_range());
        if cols.is_empty()
            || rows.is_empty()
            || !have_n.contains(cols.start())
            || !have_n.contains(cols.end())
            || !have_m.contains(rows.start())
            || !have_m.contains(rows.end())
        {
            return Err(invalid(format!(
                "slice {cols:?} x {rows:?} outside table {have_n:?} x {have_m:?}"
            )));
        }
        Ok(Self::from_fn(
            self.kind,
            self.r,
            self.alpha,
            cols,
            rows,
            |n, m| self.get(n, m).cloned(),
        ))
    }

    /// Rebuilds the same rectangle from the defining recurrence.
    pub fn rebuild(&self) -> Result<Self> {
        build_range(
            self.kind,
            self.r,
            self.alpha,
            self.n_range(),
            self.m_range(),
        )
    }

    /// CSV with a header row of column indices and a leading column of row
    /// indices; rows ascend in `m`, absent cells are empty.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("m\\n");
        for n in self.n_range() {
            let _ = write!(out, ",{n}");
        }
        out.push('\n');
        for (m, row) in self.m_range().zip(&self.values) {
            let _ = write!(out, "{m}");
            for cell in row {
                out.push(',');
                if let Some(v) = cell {
                    let _ = write!(out, "{v}");
                }
            }
            out.push('\n');
        }
        out
    }

    /// Self-describing JSON value; cells are exact JSON integers or `null`.
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .m_range()
            .zip(&self.values)
            .map(|(m, row)| {
                let cells: Vec<serde_json::Value> = row.iter().map(json_int).collect();
                serde_json::json!({ "m": m, "values": cells })
            })
            .collect();
        serde_json::json!({
            "kind": self.kind,
            "r": self.r,
            "alpha": self.alpha,
            "n_offset": self.n_offset,
            "m_offset": self.m_offset,
            "columns": self.n_range().collect::<Vec<_>>(),
            "rows": rows,
        })
    }
}

/// Builds any table kind over the given column (`n`) and row (`m`) ranges.
/// Columns start at 0 or later; rows may be negative only for `s` and
/// `euler`. `alpha` is required for `q` and ignored otherwise.
pub fn build_range(
    kind: TableKind,
    r: u64,
    alpha: Option<u64>,
    cols: RangeInclusive<i64>,
    rows: RangeInclusive<i64>,
) -> Result<CountTable> {
    if cols.is_empty() || rows.is_empty() {
        return Err(invalid(format!("empty range {cols:?} x {rows:?}")));
    }
    let negative_rows_ok = matches!(kind, TableKind::S | TableKind::Euler);
    if *cols.start() < 0 || (*rows.start() < 0 && !negative_rows_ok) {
        return Err(invalid(format!(
            "{} tables start at index 0, got {cols:?} x {rows:?}",
            kind.name()
        )));
    }
    let (n_max, m_lo, m_hi) = (*cols.end(), *rows.start(), *rows.end());
    let n_top = n_max as u64;
    let m_top = m_hi.max(0) as u64;
    let full = match kind {
        TableKind::S => build_s_table(n_top, m_lo, m_hi, r)?,
        TableKind::T => build_t_table(n_top, m_top.max(n_top), r)?,
        TableKind::TPrime => build_tprime_table(n_top, m_top.max(n_top), r)?,
        TableKind::P => build_p_table(n_top, m_top, r)?,
        TableKind::Q => {
            let alpha = alpha.ok_or_else(|| invalid("q tables need alpha"))?;
            build_q_table(n_top, m_top, alpha, r)?
        }
        TableKind::Euler => build_euler_table(m_lo, m_hi, n_top, r)?,
        TableKind::DyckUp => build_dyck_table(Direction::North, n_top, m_top, r)?,
        TableKind::DyckDown => build_dyck_table(Direction::East, n_top, m_top, r)?,
    };
    full.slice(cols, rows)
}

fn json_int(cell: &Option<BigInt>) -> serde_json::Value {
    match cell {
        None => serde_json::Value::Null,
        Some(v) => serde_json::Value::Number(
            v.to_string()
                .parse()
                .expect("integers render as valid JSON numbers"),
        ),
    }
}

fn check_r(r: u64, min: u64) -> Result<()> {
    if r < min {
        return Err(invalid(format!("run bound r must be >= {min}, got {r}")));
    }
    Ok(())
}

/// Column store addressed by `(n, m)` with zero outside what has been filled.
#[derive(Default)]
struct Grid {
    cells: HashMap<(i64, i64), BigInt>,
}

impl Grid {
    fn get(&self, n: i64, m: i64) -> BigInt {
        self.cells
            .get(&(n, m))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    fn set(&mut self, n: i64, m: i64, v: BigInt) {
        self.cells.insert((n, m), v);
    }
}

/// `s_n(m)` for `0 <= n <= n_max`, `m_min <= m <= m_max`, from
/// `s_n(m) = s_{n-1}(m) + s_n(m-1) - s_{n-r}(m-1)` with `s_0 = 1` and
/// `s_n(n-1) = 0`.
pub fn build_s_table(n_max: u64, m_min: i64, m_max: i64, r: u64) -> Result<CountTable> {
    check_r(r, 2)?;
    if m_min > m_max {
        return Err(invalid(format!("empty row range {m_min}..{m_max}")));
    }
    let n_max = n_max as i64;
    let r = r as i64;
    let lo = m_min.min(0);
    let hi = m_max.max(n_max);
    let mut g = Grid::default();
    for m in lo..=hi {
        g.set(0, m, BigInt::one());
    }
    for n in 1..=n_max {
        g.set(n, n - 1, BigInt::zero());
        for m in n..=hi {
            let v = g.get(n - 1, m) + g.get(n, m - 1) - g.get(n - r, m - 1);
            g.set(n, m, v);
        }
        for m in ((lo + 1)..=(n - 1)).rev() {
            let v = g.get(n, m) - g.get(n - 1, m) + g.get(n - r, m - 1);
            g.set(n, m - 1, v);
        }
    }
    Ok(CountTable::from_fn(
        TableKind::S,
        r as u64,
        None,
        0..=n_max,
        m_min..=m_max,
        |n, m| Some(g.get(n, m)),
    ))
}

fn t_grid(n_max: i64, m_max: i64, r: i64, primed: bool) -> Grid {
    let mut g = Grid::default();
    let first = if primed { 1 } else { 0 };
    for m in first..r.min(m_max + 1) {
        g.set(0, m, BigInt::one());
    }
    for n in 1..=n_max {
        for m in n..=m_max {
            if primed && m == n {
                continue;
            }
            let lower = if primed { m + 1 - r } else { n.max(m + 1 - r) };
            let v: BigInt = (lower..=m).map(|i| g.get(n - 1, i)).sum();
            g.set(n, m, v);
        }
    }
    g
}

fn check_t_bounds(n_max: u64, m_max: u64, r: u64) -> Result<()> {
    check_r(r, 2)?;
    if m_max < n_max {
        return Err(invalid(format!(
            "t tables need m_max >= n_max, got {m_max} < {n_max}"
        )));
    }
    Ok(())
}

/// `t_n(m)` on `0 <= n <= n_max`, `0 <= m <= m_max`: ballot paths avoiding
/// `r` consecutive north steps, zero below the diagonal.
pub fn build_t_table(n_max: u64, m_max: u64, r: u64) -> Result<CountTable> {
    check_t_bounds(n_max, m_max, r)?;
    let g = t_grid(n_max as i64, m_max as i64, r as i64, false);
    Ok(CountTable::from_fn(
        TableKind::T,
        r,
        None,
        0..=n_max as i64,
        0..=m_max as i64,
        |n, m| Some(g.get(n, m)),
    ))
}

/// `t'_n(m)`: like `t` but zero on and below the diagonal, so that the
/// window sum `t'_n(m) = sum_{i=m+1-r}^{m} t'_{n-1}(i)` needs no clamp.
pub fn build_tprime_table(n_max: u64, m_max: u64, r: u64) -> Result<CountTable> {
    check_t_bounds(n_max, m_max, r)?;
    let g = t_grid(n_max as i64, m_max as i64, r as i64, true);
    Ok(CountTable::from_fn(
        TableKind::TPrime,
        r,
        None,
        0..=n_max as i64,
        0..=m_max as i64,
        |n, m| Some(g.get(n, m)),
    ))
}

/// Row of the single staircase zero in column `n >= 1` of the `p` table.
pub fn p_staircase_row(n: i64, r: u64) -> i64 {
    div_ceil(n, r as i64 - 2) - 1
}

/// `p_n(m)` for `0 <= n <= n_max`, `0 <= m <= m_max`, including the
/// polynomial extension below the staircase. Needs `r >= 3`.
pub fn build_p_table(n_max: u64, m_max: u64, r: u64) -> Result<CountTable> {
    check_r(r, 3)?;
    let (n_max, m_max, ri) = (n_max as i64, m_max as i64, r as i64);
    let c = ri - 2;
    let top = m_max.max(p_staircase_row(n_max.max(1), r));
    let mut g = Grid::default();
    g.set(0, 0, BigInt::one());
    for m in 1..=top {
        for n in 0..=c * m {
            let v: BigInt = (0..ri)
                .filter(|j| n - j >= 0)
                .map(|j| g.get(n - j, m - 1))
                .sum();
            g.set(n, m, v);
        }
    }
    for m in 0..=top {
        for j in 1..=c {
            g.set(c * m + j, m, BigInt::zero());
        }
    }
    for n in 1..=n_max {
        for m in (1..=p_staircase_row(n, r)).rev() {
            let v = g.get(n, m) - g.get(n - 1, m) + g.get(n - ri, m - 1);
            g.set(n, m - 1, v);
        }
    }
    Ok(CountTable::from_fn(
        TableKind::P,
        r,
        None,
        0..=n_max,
        0..=m_max,
        |n, m| Some(g.get(n, m)),
    ))
}

/// `q_n(m; alpha)` for `0 <= n <= n_max`, `0 <= m <= m_max`, from
/// `q_0 = 1`, `q_n(0) = delta_{n,0}` for `n <= alpha`, `q_n(n-alpha-1) = 0`
/// for `n > alpha`, and the difference recurrence shared with `p`.
pub fn build_q_table(n_max: u64, m_max: u64, alpha: u64, r: u64) -> Result<CountTable> {
    check_r(r, 2)?;
    let (n_max, m_max, a, ri) = (n_max as i64, m_max as i64, alpha as i64, r as i64);
    let top = m_max.max(n_max - a - 1).max(0);
    let mut g = Grid::default();
    for m in 0..=top {
        g.set(0, m, BigInt::one());
    }
    for n in 1..=n_max {
        let root = if n <= a { 0 } else { n - a - 1 };
        g.set(n, root, BigInt::zero());
        for m in (root + 1)..=top {
            let v = g.get(n, m - 1) + g.get(n - 1, m) - g.get(n - ri, m - 1);
            g.set(n, m, v);
        }
        for m in (1..=root).rev() {
            let v = g.get(n, m) - g.get(n - 1, m) + g.get(n - ri, m - 1);
            g.set(n, m - 1, v);
        }
    }
    Ok(CountTable::from_fn(
        TableKind::Q,
        r,
        Some(alpha),
        0..=n_max,
        0..=m_max,
        |n, m| Some(g.get(n, m)),
    ))
}

/// Euler coefficients `binom(x, k)_r`, rows `x_min..=x_max`, columns `0..=k_max`.
pub fn build_euler_table(x_min: i64, x_max: i64, k_max: u64, r: u64) -> Result<CountTable> {
    if x_min > x_max {
        return Err(invalid(format!("empty row range {x_min}..{x_max}")));
    }
    let rows = (x_min..=x_max)
        .map(|x| euler_row(x, r as i64, k_max as i64))
        .collect::<Result<Vec<_>>>()?;
    Ok(CountTable::from_fn(
        TableKind::Euler,
        r,
        None,
        0..=k_max as i64,
        x_min..=x_max,
        |k, x| Some(rows[(x - x_min) as usize][k as usize].clone()),
    ))
}

/// Dyck counts for `0 <= x <= x_max`, `0 <= y <= y_max`; unreachable
/// cells are absent.
pub fn build_dyck_table(
    direction: Direction,
    x_max: u64,
    y_max: u64,
    r: u64,
) -> Result<CountTable> {
    check_r(r, 2)?;
    let kind = match direction {
        Direction::North => TableKind::DyckUp,
        Direction::East => TableKind::DyckDown,
    };
    let ri = r as i64;
    let mut failure = None;
    let table = CountTable::from_fn(kind, r, None, 0..=x_max as i64, 0..=y_max as i64, |x, y| {
        if y > x || (x - y) % 2 != 0 {
            return None;
        }
        let v = match direction {
            Direction::North => dyck_avoid_up(x, y, ri),
            Direction::East => dyck_avoid_down(x, y, ri),
        };
        v.map_err(|e| failure = Some(e)).ok()
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(table),
    }
}
