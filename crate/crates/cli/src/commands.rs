use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use eulerpaths::oracle::{brute_force_count, Boundary, Target};
use eulerpaths::paths::{ballot_count, dyck_count};
use eulerpaths::reference::{compare, fixture_for, fixtures, CellDiff};
use eulerpaths::series::{
    conjecture_series_with_r, dyck_gf, gen_func_down, TruncatedSeries, DEFAULT_ORDER,
};
use eulerpaths::tables::build_range;
use eulerpaths::verify::{run_suite, Suite, SuiteConfig};
use eulerpaths::{BallotPoint, CountTable, Direction, DyckPoint, Error, RunRestriction, TableKind};
use serde_json::{json, Value};

use crate::args::{
    BoundaryArg, Command, CountArgs, KindArg, Pattern, SeriesArgs, SuiteArg, TableArgs, VerifyArgs,
    Which,
};
use crate::config::{Config, DEFAULT_MAX_N, DEFAULT_R, DEFAULT_R_SET};
use crate::output::{aligned, csv_rows, Outcome, OutputRecord, Status};

#[derive(Debug)]
pub enum Failure {
    /// Bad input: exit code 2.
    Usage(String),
    /// A defect in the program or its embedded data: exit code 1.
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Fixture { .. } => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcomes = Result<Outcome, Failure>;

pub fn name(command: &Command) -> &'static str {
    match command {
        Command::Count(_) => "count",
        Command::Table(_) => "table",
        Command::Series(_) => "series",
        Command::Verify(_) => "verify",
    }
}

pub fn run(command: &Command, config: &Config) -> Outcomes {
    match command {
        Command::Count(args) => count(args, config),
        Command::Table(args) => table(args, config),
        Command::Series(args) => series(args, config),
        Command::Verify(args) => verify(args, config),
    }
}

/// Exact JSON integer; serde_json keeps the digits verbatim.
fn json_int(v: &impl std::fmt::Display) -> Value {
    Value::Number(
        v.to_string()
            .parse()
            .expect("integers are valid JSON numbers"),
    )
}

fn record(
    command: &str,
    parameters: BTreeMap<String, Value>,
    status: Status,
    payload: Value,
    notes: Vec<String>,
) -> OutputRecord {
    OutputRecord {
        command: command.to_string(),
        parameters,
        status,
        payload,
        notes,
    }
}

fn params<const N: usize>(pairs: [(&str, Value); N]) -> BTreeMap<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn count(args: &CountArgs, config: &Config) -> Outcomes {
    let r = args.r.or(config.r).unwrap_or(DEFAULT_R);
    let direction = match args.pattern {
        Pattern::Up => Direction::North,
        Pattern::Down => Direction::East,
    };
    let restriction = RunRestriction::new(direction, r as i64)?;
    let (a, b) = (args.at[0], args.at[1]);
    let (value, target, boundary) = match args.boundary {
        BoundaryArg::Ballot => {
            let p = BallotPoint::new(a, b);
            if !p.is_reachable() {
                return Err(Failure::Usage(format!(
                    "no ballot path reaches ({a}, {b}); need 0 <= n <= m"
                )));
            }
            (
                ballot_count(p, restriction)?,
                Target::Ballot(p),
                Boundary::Ballot,
            )
        }
        BoundaryArg::Dyck => {
            let p = DyckPoint::new(a, b)?;
            (dyck_count(p, restriction)?, Target::Dyck(p), Boundary::Dyck)
        }
    };
    let boundary_name = match args.boundary {
        BoundaryArg::Ballot => "ballot",
        BoundaryArg::Dyck => "dyck",
    };
    let pattern_name = match args.pattern {
        Pattern::Up => "up",
        Pattern::Down => "down",
    };
    let parameters = params([
        ("boundary", json!(boundary_name)),
        ("pattern", json!(pattern_name)),
        ("r", json!(r)),
        ("at", json!([a, b])),
        ("oracle", json!(args.oracle)),
    ]);
    if !args.oracle {
        let payload = json!({ "count": json_int(&value) });
        return Ok(Outcome {
            record: record("count", parameters, Status::Ok, payload, Vec::new()),
            text: format!("{value}\n"),
            csv: csv_rows(
                &["field", "value"],
                [["count".to_string(), value.to_string()]],
            ),
        });
    }
    let brute = brute_force_count(target, restriction, boundary)?;
    let agree = brute == value;
    let status = if agree {
        Status::Verified
    } else {
        Status::Refuted
    };
    let payload = json!({ "count": json_int(&value), "oracle": json_int(&brute), "agree": agree });
    let yes_no = if agree { "yes" } else { "no" };
    Ok(Outcome {
        record: record("count", parameters, status, payload, Vec::new()),
        text: format!("count  {value}\noracle {brute}\nagree  {yes_no}\n"),
        csv: csv_rows(
            &["field", "value"],
            [
                ["count".to_string(), value.to_string()],
                ["oracle".to_string(), brute.to_string()],
                ["agree".to_string(), yes_no.to_string()],
            ],
        ),
    })
}

fn table_kind(kind: KindArg) -> TableKind {
    match kind {
        KindArg::S => TableKind::S,
        KindArg::T => TableKind::T,
        KindArg::Tprime => TableKind::TPrime,
        KindArg::P => TableKind::P,
        KindArg::Q => TableKind::Q,
        KindArg::Euler => TableKind::Euler,
        KindArg::DyckUp => TableKind::DyckUp,
        KindArg::DyckDown => TableKind::DyckDown,
    }
}

/// The reference table's range when one exists for these parameters.
fn default_ranges(
    kind: TableKind,
    r: u64,
    alpha: Option<u64>,
) -> Result<(RangeInclusive<i64>, RangeInclusive<i64>), Failure> {
    let lookup = if kind == TableKind::TPrime {
        TableKind::T
    } else {
        kind
    };
    let found = fixtures()?
        .into_iter()
        .find(|f| f.kind == lookup && f.r == r && (kind != TableKind::Q || f.alpha == alpha));
    Ok(match found {
        Some(f) => {
            let cols = f.columns.iter().copied();
            let rows = f.rows.iter().map(|(m, _)| *m);
            (
                cols.clone().min().unwrap_or(0)..=cols.max().unwrap_or(0),
                rows.clone().min().unwrap_or(0)..=rows.max().unwrap_or(0),
            )
        }
        None => (0..=8, 0..=8),
    })
}

fn table_text(table: &CountTable) -> String {
    let mut header = vec!["m\\n".to_string()];
    header.extend(table.n_range().map(|n| n.to_string()));
    let rows: Vec<Vec<String>> = table
        .m_range()
        .rev()
        .map(|m| {
            let mut row = vec![m.to_string()];
            row.extend(table.n_range().map(|n| {
                table
                    .get(n, m)
                    .map_or_else(|| ".".to_string(), |v| v.to_string())
            }));
            row
        })
        .collect();
    aligned(&header, &rows)
}

fn diff_line(d: &CellDiff) -> String {
    let computed = d.computed.as_deref().unwrap_or("absent");
    let tag = if d.whitelisted {
        " (whitelisted erratum)"
    } else {
        ""
    };
    format!(
        "n={} m={}: listed {}, computed {computed}{tag}",
        d.n, d.m, d.listed
    )
}

fn table(args: &TableArgs, config: &Config) -> Outcomes {
    let kind = table_kind(args.kind);
    let r = args.r.or(config.r).unwrap_or(DEFAULT_R);
    if kind == TableKind::Q && args.alpha.is_none() {
        return Err(Failure::Usage("q tables need --alpha".into()));
    }
    let alpha = if kind == TableKind::Q {
        args.alpha
    } else {
        None
    };
    let (default_cols, default_rows) = default_ranges(kind, r, alpha)?;
    let cols = args.cols.clone().unwrap_or(default_cols);
    let rows = args.rows.clone().unwrap_or(default_rows);
    let table = build_range(kind, r, alpha, cols.clone(), rows.clone())?;

    let mut parameters = params([
        ("kind", json!(kind.name())),
        ("r", json!(r)),
        ("cols", json!([cols.start(), cols.end()])),
        ("rows", json!([rows.start(), rows.end()])),
        ("reference_check", json!(args.reference_check)),
    ]);
    if let Some(a) = alpha {
        parameters.insert("alpha".into(), json!(a));
    }
    let mut payload = table.to_json();
    let mut text = table_text(&table);
    let mut notes = Vec::new();
    let mut status = Status::Ok;

    if args.reference_check {
        let fixture = fixture_for(&table)?.ok_or_else(|| {
            Failure::Usage(format!(
                "no reference table for kind {} with r = {r}{}",
                kind.name(),
                alpha.map(|a| format!(", alpha = {a}")).unwrap_or_default()
            ))
        })?;
        let compared = fixture
            .cells()
            .filter(|(n, m, _)| cols.contains(n) && rows.contains(m))
            .count();
        let diffs = compare(&fixture, &table);
        let blocking = diffs.iter().filter(|d| !d.whitelisted).count();
        status = if blocking == 0 {
            Status::Verified
        } else {
            Status::Refuted
        };
        let summary = format!(
            "reference {}: {compared} cells compared, {} differ ({} whitelisted)",
            fixture.name,
            diffs.len(),
            diffs.len() - blocking
        );
        text.push('\n');
        text.push_str(&summary);
        text.push('\n');
        notes.push(summary);
        for d in &diffs {
            text.push_str(&format!("  {}\n", diff_line(d)));
            notes.push(diff_line(d));
        }
        payload["reference"] = json!({
            "fixture": fixture.name,
            "compared": compared,
            "diffs": diffs,
        });
    }
    Ok(Outcome {
        record: record("table", parameters, status, payload, notes),
        text,
        csv: table.to_csv(),
    })
}

fn series(args: &SeriesArgs, config: &Config) -> Outcomes {
    let r = args.r.or(config.r).unwrap_or(DEFAULT_R);
    let order = args.order.or(config.order).unwrap_or(DEFAULT_ORDER);
    let mut notes = Vec::new();
    let mut parameters = params([("r", json!(r)), ("order", json!(order))]);
    let (which, s): (&str, TruncatedSeries) = match args.which {
        Which::DownGf => {
            parameters.insert("m".into(), json!(args.m));
            ("down-gf", gen_func_down(args.m, r, order)?)
        }
        Which::DyckF => ("dyck-f", dyck_gf(r, order)?),
        Which::Conjecture => {
            if r != 4 && !args.experimental {
                return Err(Failure::Usage(
                    "the conjectured generating function is stated for r = 4; pass --experimental to try other r".into(),
                ));
            }
            if r != 4 {
                notes.push(format!(
                    "experimental: r = {r} is outside the conjectured case r = 4"
                ));
            }
            parameters.insert("x".into(), json!(args.x));
            ("conjecture", conjecture_series_with_r(args.x, r, order)?)
        }
    };
    parameters.insert("which".into(), json!(which));
    let coeffs = s.to_strings();
    let mut text = coeffs.join(", ");
    text.push('\n');
    for note in &notes {
        text.push_str(&format!("# {note}\n"));
    }
    let csv = csv_rows(
        &["k", "coefficient"],
        coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| [k.to_string(), c.clone()]),
    );
    Ok(Outcome {
        record: record("series", parameters, Status::Ok, json!(coeffs), notes),
        text,
        csv,
    })
}

fn suite(arg: SuiteArg) -> Suite {
    match arg {
        SuiteArg::Identities => Suite::Identities,
        SuiteArg::Tables => Suite::Tables,
        SuiteArg::Bridge => Suite::Bridge,
        SuiteArg::Oracle => Suite::Oracle,
        SuiteArg::Conjecture => Suite::Conjecture,
        SuiteArg::All => Suite::All,
    }
}

/// Failures shown in text output; JSON carries all of them.
const TEXT_FAILURE_LIMIT: usize = 20;

fn verify(args: &VerifyArgs, config: &Config) -> Outcomes {
    let suite = suite(args.suite);
    let suite_config = SuiteConfig {
        max_n: args.max_n.or(config.max_n).unwrap_or(DEFAULT_MAX_N),
        rs: args
            .r_set
            .clone()
            .or_else(|| config.r_set.clone())
            .unwrap_or_else(|| DEFAULT_R_SET.to_vec()),
        order: args.order.or(config.order).unwrap_or(DEFAULT_ORDER),
    };
    let report = run_suite(suite, &suite_config)?;
    let status = if report.passed() {
        Status::Verified
    } else {
        Status::Refuted
    };
    let parameters = params([
        ("suite", json!(suite.name())),
        ("max_n", json!(suite_config.max_n)),
        ("r_set", json!(suite_config.rs)),
        ("order", json!(suite_config.order)),
    ]);
    let tally = report.tally();
    let failed = report.failures().count();
    let verdict = if failed == 0 { "verified" } else { "refuted" };
    let summary = format!(
        "{}: {} checks, {failed} failed, {verdict}",
        suite.name(),
        report.len()
    );

    let header: Vec<String> = ["check", "checked", "failed"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let rows: Vec<Vec<String>> = tally
        .iter()
        .map(|(name, (c, f))| vec![name.clone(), c.to_string(), f.to_string()])
        .collect();
    let mut text = aligned(&header, &rows);
    for note in &report.notes {
        text.push_str(&format!("note: {note}\n"));
    }
    for f in report.failures().take(TEXT_FAILURE_LIMIT) {
        text.push_str(&format!(
            "FAIL {} [{}]: {} != {}\n",
            f.check, f.args, f.lhs, f.rhs
        ));
    }
    if failed > TEXT_FAILURE_LIMIT {
        text.push_str(&format!(
            "... {} more failures (use --format json)\n",
            failed - TEXT_FAILURE_LIMIT
        ));
    }
    text.push_str(&summary);
    text.push('\n');

    let checks: BTreeMap<&String, Value> = tally
        .iter()
        .map(|(name, (c, f))| (name, json!({ "checked": c, "failed": f })))
        .collect();
    let failures: Vec<&eulerpaths::report::Instance> = report.failures().collect();
    let payload = json!({
        "suite": suite.name(),
        "checked": report.len(),
        "failed": failed,
        "checks": checks,
        "failures": failures,
    });
    let csv = csv_rows(&["check", "checked", "failed"], rows);
    let mut notes: Vec<String> = report.notes.clone();
    notes.push(summary);
    Ok(Outcome {
        record: record("verify", parameters, status, payload, notes),
        text,
        csv,
    })
}
