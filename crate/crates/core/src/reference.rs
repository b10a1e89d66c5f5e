//! Published reference tables, embedded as data files, and their comparison
//! with freshly built tables.
//!
//! Fixture format: `#` comment lines, `key = value` header lines (`kind`,
//! `r`, optional `alpha`, `columns`), then one `row | cells...` line per row
//! with `.` for a blank cell.

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::report::Report;
use crate::tables::{build_range, CountTable, TableKind};

const SOURCES: [(&str, &str); 7] = [
    ("dyck-up-r4", include_str!("../fixtures/dyck-up-r4.txt")),
    ("dyck-down-r4", include_str!("../fixtures/dyck-down-r4.txt")),
    ("s-r4", include_str!("../fixtures/s-r4.txt")),
    ("t-r4", include_str!("../fixtures/t-r4.txt")),
    ("p-r4", include_str!("../fixtures/p-r4.txt")),
    ("q-alpha2-r4", include_str!("../fixtures/q-alpha2-r4.txt")),
    ("euler-r4", include_str!("../fixtures/euler-r4.txt")),
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixture {
    pub name: String,
    pub kind: TableKind,
    pub r: u64,
    pub alpha: Option<u64>,
    pub columns: Vec<i64>,
    /// `(row index, cells)` in file order, top row first.
    pub rows: Vec<(i64, Vec<Option<BigInt>>)>,
}

impl Fixture {
    pub fn get(&self, n: i64, m: i64) -> Option<&BigInt> {
        let col = self.columns.iter().position(|&c| c == n)?;
        let (_, cells) = self.rows.iter().find(|(row, _)| *row == m)?;
        cells[col].as_ref()
    }

    pub fn cells(&self) -> impl Iterator<Item = (i64, i64, &BigInt)> + '_ {
        self.rows.iter().flat_map(move |(m, cells)| {
            self.columns
                .iter()
                .zip(cells)
                .filter_map(move |(&n, v)| v.as_ref().map(|v| (n, *m, v)))
        })
    }

    /// Builds the matching table over the fixture's full range.
    pub fn build(&self) -> Result<CountTable> {
        let (n_lo, n_hi) = span(self.columns.iter().copied());
        let (m_lo, m_hi) = span(self.rows.iter().map(|(m, _)| *m));
        build_range(self.kind, self.r, self.alpha, n_lo..=n_hi, m_lo..=m_hi)
    }
}

fn span(it: impl Iterator<Item = i64> + Clone) -> (i64, i64) {
    (it.clone().min().unwrap_or(0), it.max().unwrap_or(0))
}

fn kind_from_name(name: &str) -> Option<TableKind> {
    [
        TableKind::S,
        TableKind::T,
        TableKind::TPrime,
        TableKind::P,
        TableKind::Q,
        TableKind::Euler,
        TableKind::DyckUp,
        TableKind::DyckDown,
    ]
    .into_iter()
    .find(|k| k.name() == name)
}

pub fn parse_fixture(name: &str, text: &str) -> Result<Fixture> {
    let bad = |reason: String| Error::Fixture {
        name: name.to_string(),
        reason,
    };
    let mut kind = None;
    let mut r = None;
    let mut alpha = None;
    let mut columns: Option<Vec<i64>> = None;
    let mut rows = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let at = |msg: &str| bad(format!("line {}: {msg}", lineno + 1));
        if let Some((row, cells)) = line.split_once('|') {
            let row: i64 = row.trim().parse().map_err(|_| at("bad row index"))?;
            let cells = cells
                .split_whitespace()
                .map(|c| match c {
                    "." => Ok(None),
                    _ => c.parse::<BigInt>().map(Some).map_err(|_| at("bad cell")),
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push((row, cells));
        } else if let Some((key, value)) = line.split_once('=') {
            let value = value.trim();
            match key.trim() {
                "kind" => kind = Some(kind_from_name(value).ok_or_else(|| at("unknown kind"))?),
                "r" => r = Some(value.parse().map_err(|_| at("bad r"))?),
                "alpha" => alpha = Some(value.parse().map_err(|_| at("bad alpha"))?),
                "columns" => {
                    columns = Some(
                        value
                            .split_whitespace()
                            .map(str::parse)
                            .collect::<std::result::Result<_, _>>()
                            .map_err(|_| at("bad columns"))?,
                    )
                }
                other => return Err(at(&format!("unknown key {other}"))),
            }
        } else {
            return Err(at("expected `key = value` or `row | cells`"));
        }
    }
    let columns = columns.ok_or_else(|| bad("missing columns".into()))?;
    if let Some((row, _)) = rows.iter().find(|(_, c)| c.len() != columns.len()) {
        return Err(bad(format!("row {row} has the wrong number of cells")));
    }
    Ok(Fixture {
        name: name.to_string(),
        kind: kind.ok_or_else(|| bad("missing kind".into()))?,
        r: r.ok_or_else(|| bad("missing r".into()))?,
        alpha,
        columns,
        rows,
    })
}

/// All embedded fixtures, in a fixed order.
pub fn fixtures() -> Result<Vec<Fixture>> {
    SOURCES
        .iter()
        .map(|(name, text)| parse_fixture(name, text))
        .collect()
}

/// The `t'` table implied by the `t` fixture: diagonal cells become zero.
pub fn tprime_fixture() -> Result<Fixture> {
    let mut f = fixtures()?
        .into_iter()
        .find(|f| f.kind == TableKind::T)
        .expect("t fixture is embedded");
    f.name = "tprime-r4".into();
    f.kind = TableKind::TPrime;
    let columns = f.columns.clone();
    for (m, cells) in &mut f.rows {
        for (n, cell) in columns.iter().zip(cells.iter_mut()) {
            if n == m && cell.is_some() {
                *cell = Some(BigInt::from(0));
            }
        }
    }
    Ok(f)
}

/// Reference cells known to be wrong: the Euler row `x = 4`, `k >= 6`, for `r = 4`.
pub fn is_whitelisted(kind: TableKind, r: u64, n: i64, m: i64) -> bool {
    kind == TableKind::Euler && r == 4 && m == 4 && n >= 6
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellDiff {
    pub fixture: String,
    pub n: i64,
    pub m: i64,
    pub listed: String,
    pub computed: Option<String>,
    pub whitelisted: bool,
}

/// Compares every listed cell of `fixture` that lies inside `table`.
pub fn compare(fixture: &Fixture, table: &CountTable) -> Vec<CellDiff> {
    fixture
        .cells()
        .filter(|&(n, m, _)| table.n_range().contains(&n) && table.m_range().contains(&m))
        .filter_map(|(n, m, listed)| {
            let computed = table.get(n, m);
            (computed != Some(listed)).then(|| CellDiff {
                fixture: fixture.name.clone(),
                n,
                m,
                listed: listed.to_string(),
                computed: computed.map(BigInt::to_string),
                whitelisted: is_whitelisted(fixture.kind, fixture.r, n, m),
            })
        })
        .collect()
}

/// The fixture matching a table's kind, `r` and `alpha`, if one exists.
pub fn fixture_for(table: &CountTable) -> Result<Option<Fixture>> {
    let mut all = fixtures()?;
    all.push(tprime_fixture()?);
    Ok(all.into_iter().find(|f| {
        f.kind == table.kind && f.r == table.r && (f.kind != TableKind::Q || f.alpha == table.alpha)
    }))
}

/// Rebuilds every reference table on its listed range and compares cell by
/// cell. Whitelisted cells are reported as notes and must still differ, so a
/// stale whitelist entry shows up as a failure.
pub fn check_all() -> Result<Report> {
    let mut report = Report::new("tables");
    let mut all = fixtures()?;
    all.push(tprime_fixture()?);
    for fixture in &all {
        let table = fixture.build()?;
        for (n, m, listed) in fixture.cells() {
            let computed = table
                .get(n, m)
                .map_or_else(|| "absent".to_string(), BigInt::to_string);
            let args = format!("n={n} m={m}");
            if is_whitelisted(fixture.kind, fixture.r, n, m) {
                let differs = table.get(n, m) != Some(listed);
                report.record(
                    format!("{}:erratum-differs", fixture.name),
                    args,
                    differs,
                    true,
                );
                report.note(format!(
                    "{} whitelisted n={n} m={m}: listed {listed}, computed {computed}",
                    fixture.name
                ));
            } else {
                report.record(&fixture.name, args, listed.to_string(), computed);
            }
        }
        // Blank Dyck cells are either unreachable or hold no path at all.
        for (m, cells) in &fixture.rows {
            for (n, cell) in fixture.columns.iter().zip(cells) {
                if cell.is_none() && matches!(fixture.kind, TableKind::DyckUp | TableKind::DyckDown)
                {
                    let computed = match table.get(*n, *m) {
                        None => "blank".to_string(),
                        Some(v) if v.sign() == num_bigint::Sign::NoSign => "blank".to_string(),
                        Some(v) => v.to_string(),
                    };
                    report.record(&fixture.name, format!("n={n} m={m}"), "blank", computed);
                }
            }
        }
    }
    Ok(report)
}
