//! Verification suites: each gathers the checks for one area into a
//! [`Report`]. The CLI `verify` command and the acceptance tests run these.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::euler::{catalan, euler_coeff, verify_euler_identities_for};
use crate::exact::{binomial_i64, format_rational, int, rat};
use crate::oracle::{
    brute_force_count, count_restricted_compositions, motzkin_peakless_bruteforce, Boundary, Side,
    Target,
};
use crate::paths::{
    ballot_avoid_east, ballot_avoid_north, dyck_avoid_down, dyck_avoid_up, BallotPoint, Direction,
    RunRestriction,
};
use crate::poly::DensePolynomial;
use crate::polyseq::{
    abelization_check, operator_identity_check, sheffer_binomial_check, FamilyKind, SequenceFamily,
};
use crate::reference;
use crate::report::Report;
use crate::series::{
    conjecture_check, conjecture_series, down_gf_factor, down_gf_factor_alt,
    dyck_gf_functional_check, dyck_gf_linear_form_check, gen_func_down, motzkin_peakless,
    TruncatedSeries, DEFAULT_ORDER,
};
use crate::tables::{
    build_p_table, build_q_table, build_s_table, build_t_table, build_tprime_table,
    p_staircase_row, CountTable,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Identities,
    Tables,
    Bridge,
    Oracle,
    Conjecture,
    All,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Identities,
        Suite::Tables,
        Suite::Bridge,
        Suite::Oracle,
        Suite::Conjecture,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Tables => "tables",
            Suite::Bridge => "bridge",
            Suite::Oracle => "oracle",
            Suite::Conjecture => "conjecture",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| invalid(format!("unknown suite {s:?}")))
    }
}

/// Bounds shared by the suites.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    /// Largest `n` for identities and polynomial families; the oracle suite
    /// covers ballot points with `n + m <= 2 max_n`.
    pub max_n: u64,
    /// Run bounds to check; `p` and the composition bridge skip `r < 3`.
    pub rs: Vec<u64>,
    /// Series truncation order.
    pub order: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            max_n: 12,
            rs: vec![2, 3, 4, 5],
            order: DEFAULT_ORDER,
        }
    }
}

impl SuiteConfig {
    fn validate(&self) -> Result<()> {
        if self.rs.is_empty() {
            return Err(invalid("the r set is empty"));
        }
        if let Some(r) = self.rs.iter().find(|&&r| r < 2) {
            return Err(invalid(format!("run bound r must be >= 2, got {r}")));
        }
        Ok(())
    }
}

pub fn run_suite(suite: Suite, config: &SuiteConfig) -> Result<Report> {
    config.validate()?;
    match suite {
        Suite::Identities => identities_suite(config),
        Suite::Tables => reference::check_all(),
        Suite::Bridge => bridge_suite(config),
        Suite::Oracle => oracle_suite(config),
        Suite::Conjecture => conjecture_suite(config),
        Suite::All => {
            let mut all = Report::new("all");
            for s in Suite::ALL {
                all.absorb(run_suite(s, config)?);
            }
            Ok(all)
        }
    }
}

/// Euler-coefficient identities with `k <= max_n (r - 1)`, the polynomial
/// operator identity, and negative rows against series expansion.
pub fn identities_suite(config: &SuiteConfig) -> Result<Report> {
    let mut report = Report::new("identities");
    for &r in &config.rs {
        report.absorb(verify_euler_identities_for(
            config.max_n,
            config.max_n * (r - 1),
            &[r],
        ));
        report.absorb(operator_identity_check(r, config.max_n)?);
        negative_rows(&mut report, r, config.max_n)?;
    }
    Ok(report)
}

/// `binom(x, k)_r` for `x < 0` against `((1 - t) / (1 - t^r))^(-x)`.
fn negative_rows(report: &mut Report, r: u64, max_n: u64) -> Result<()> {
    let order = (max_n * (r - 1)) as usize;
    let mut one_minus_tr = vec![BigRational::zero(); r as usize + 1];
    one_minus_tr[0] = BigRational::one();
    one_minus_tr[r as usize] = -BigRational::one();
    let ratio = TruncatedSeries::from_integers(&[1, -1], order)
        .div(&TruncatedSeries::new(one_minus_tr, order))?;
    for x in 1..=max_n as i64 {
        let series = ratio.pow(x)?;
        for k in 0..=order {
            report.record(
                "negative-row",
                format!("x={} k={k} r={r}", -x),
                euler_coeff(-x, k as i64, r as i64)?,
                format_rational(series.coeff(k)),
            );
        }
    }
    Ok(())
}

/// Closed forms, recurrence tables, polynomial families and generating
/// functions checked against each other.
pub fn bridge_suite(config: &SuiteConfig) -> Result<Report> {
    let mut report = Report::new("bridge");
    let n_max = config.max_n;
    for &r in &config.rs {
        path_bridges(&mut report, r, n_max)?;
        family_bridges(&mut report, r, n_max)?;
        if r >= 3 {
            p_table_bridges(&mut report, r, n_max)?;
        }
        gf_bridges(&mut report, r, config.order)?;
    }
    Ok(report)
}

fn path_bridges(report: &mut Report, r: u64, n_max: u64) -> Result<()> {
    let ri = r as i64;
    let m_max = 2 * n_max as i64;
    let s_table = build_s_table(n_max, -1, m_max, r)?;
    let t_table = build_t_table(n_max, m_max as u64, r)?;
    let tp_table = build_tprime_table(n_max, m_max as u64, r)?;
    for n in 0..=n_max as i64 {
        for m in n - 1..=m_max {
            if m >= 0 {
                let args = format!("n={n} m={m} r={r}");
                report.record(
                    "s-table=closed",
                    &args,
                    cell(&s_table, n, m),
                    ballot_avoid_east(n, m, ri)?,
                );
            }
            if m >= n {
                let args = format!("n={n} m={m} r={r}");
                let north = ballot_avoid_north(n, m, ri)?;
                report.record("t-table=closed", &args, cell(&t_table, n, m), &north);
                let primed = if m == n { int(0) } else { north.clone() };
                report.record("tprime-table", &args, cell(&tp_table, n, m), primed);
                let dyck = BallotPoint::new(n, m).to_dyck();
                report.record(
                    "transform-down",
                    &args,
                    dyck_avoid_down(dyck.x, dyck.y, ri)?,
                    ballot_avoid_east(n, m, ri)?,
                );
                report.record(
                    "transform-up",
                    &args,
                    dyck_avoid_up(dyck.x, dyck.y, ri)?,
                    &north,
                );
                if r == 2 {
                    let ballot = BigRational::new(int(m - n + 1), int(m + 1))
                        * BigRational::from_integer(binomial_i64(m + 1, n as u64));
                    report.record(
                        "r2-ballot-numbers",
                        &args,
                        ballot_avoid_east(n, m, 2)?,
                        format_rational(&ballot),
                    );
                }
            }
        }
        let args = format!("n={n} r={r}");
        report.record(
            "diagonal-equality",
            &args,
            ballot_avoid_north(n, n, ri)?,
            ballot_avoid_east(n, n, ri)?,
        );
        if r as i64 > n {
            report.record(
                "saturation",
                &args,
                ballot_avoid_east(n, n, ri)?,
                catalan(n as u64),
            );
        }
    }
    Ok(())
}

fn cell(table: &CountTable, n: i64, m: i64) -> String {
    table
        .get(n, m)
        .map_or_else(|| "absent".to_string(), BigInt::to_string)
}

fn sheffer_points() -> Vec<(i64, i64)> {
    (-3..=3).flat_map(|x| [(x, 0), (x, 2)]).collect()
}

fn family_bridges(report: &mut Report, r: u64, n_max: u64) -> Result<()> {
    let ri = r as i64;
    let m_max = 2 * n_max as i64;
    let points = sheffer_points();
    let s_family = SequenceFamily::build(FamilyKind::S, r, None, n_max)?;
    report.absorb(sheffer_binomial_check(&s_family, n_max, &points));
    report.absorb(abelization_check(r, n_max, &points)?);
    let s_table = build_s_table(n_max, -1, m_max, r)?;
    for n in 0..=n_max as i64 {
        let poly = &s_family.members[n as usize];
        for m in -1..=m_max {
            report.record(
                "s-poly=s-table",
                format!("n={n} m={m} r={r}"),
                poly.eval_int(m),
                cell(&s_table, n, m),
            );
        }
        if n >= 1 {
            report.record("s-root", format!("n={n} r={r}"), poly.eval_int(n - 1), 0);
        }
    }
    for alpha in 0..=4u64 {
        let q_family = SequenceFamily::build(FamilyKind::Q, r, Some(alpha), n_max)?;
        report.absorb(sheffer_binomial_check(&q_family, n_max, &points));
        let q_table = build_q_table(n_max, m_max as u64, alpha, r)?;
        for n in 0..=n_max as i64 {
            let poly = &q_family.members[n as usize];
            for m in 0..=m_max {
                let args = format!("n={n} m={m} alpha={alpha} r={r}");
                report.record(
                    "q-poly=q-table",
                    args,
                    poly.eval_int(m),
                    cell(&q_table, n, m),
                );
            }
            if n > alpha as i64 {
                report.record(
                    "q-root",
                    format!("n={n} alpha={alpha} r={r}"),
                    poly.eval_int(n - alpha as i64 - 1),
                    0,
                );
            }
        }
    }
    // Three-way bridge for the north-run counts.
    let top = (r - 1) * (n_max + 1);
    let p_family = if r >= 3 {
        Some(SequenceFamily::build(FamilyKind::P, r, None, top)?)
    } else {
        None
    };
    let q_families = (0..m_max as u64)
        .map(|alpha| SequenceFamily::build(FamilyKind::Q, r, Some(alpha), m_max as u64))
        .collect::<Result<Vec<_>>>()?;
    for n in 0..n_max as i64 {
        for m in n + 1..=m_max {
            let args = format!("n={n} m={m} r={r}");
            let t = ballot_avoid_north(n, m, ri)?;
            if let Some(p) = &p_family {
                let idx = (ri - 1) * (n + 1) - m;
                let via_p = if idx < 0 {
                    int(0)
                } else {
                    p.value(idx as usize, n + 1)
                };
                report.record("t=p-rotated", &args, &t, via_p);
            }
            let q = q_families[(m - 1 - n) as usize].value(m as usize, n + 1);
            report.record("t=q-shifted", &args, &t, q);
        }
    }
    Ok(())
}

fn p_table_bridges(report: &mut Report, r: u64, n_max: u64) -> Result<()> {
    let ri = r as i64;
    let c = ri - 2;
    let m_max = n_max as i64;
    let n_top = c * (m_max + 1);
    let p_table = build_p_table(n_top as u64, m_max as u64, r)?;
    let tp_table = build_tprime_table(m_max as u64, ((ri - 1) * m_max.max(1)) as u64, r)?;
    let p_family = SequenceFamily::build(FamilyKind::P, r, None, n_top as u64)?;
    let p = |n: i64, m: i64| -> BigInt {
        if n < 0 {
            BigInt::zero()
        } else {
            p_table.get(n, m).cloned().expect("inside the built p grid")
        }
    };
    for m in 0..=m_max {
        for n in 0..=n_top {
            let args = format!("n={n} m={m} r={r}");
            report.record(
                "p-poly=p-table",
                &args,
                p_family.value(n as usize, m),
                p(n, m),
            );
            if m >= 1 {
                report.record(
                    "p-difference-form",
                    &args,
                    p(n, m) - p(n, m - 1),
                    p(n - 1, m) - p(n - ri, m - 1),
                );
                if n <= c * (m + 1) {
                    let row = (ri - 1) * m - n;
                    // t' vanishes on and below its diagonal, negative rows included.
                    let rotated = if row < 0 {
                        "0".to_string()
                    } else {
                        cell(&tp_table, m - 1, row)
                    };
                    report.record("p-rotation", &args, p(n, m), rotated);
                }
            }
        }
        for j in 1..=c {
            report.record(
                "p-staircase-zero",
                format!("n={} m={m} r={r}", c * m + j),
                p(c * m + j, m),
                0,
            );
        }
    }
    for n in 1..=n_top {
        let root = p_staircase_row(n, r);
        report.record(
            "p-root",
            format!("n={n} r={r}"),
            p_family.value(n as usize, root),
            0,
        );
    }
    column_degrees(report, &p_table, "p", r, n_top.min(m_max))?;

    for alpha in 0..=4i64 {
        let q_table = build_q_table((m_max + alpha) as u64, m_max as u64, alpha as u64, r)?;
        let first = (alpha + c - 1) / c;
        for n in first..=m_max {
            let args = format!("n={n} alpha={alpha} r={r}");
            report.record(
                "composition-lemma",
                &args,
                cell(&q_table, n + alpha, n),
                p(c * n - alpha, n),
            );
        }
    }
    Ok(())
}

/// Column `n` restricted to the table rows has `n`-th difference constant
/// and nonzero, and `(n+1)`-th difference zero.
fn column_degrees(
    report: &mut Report,
    table: &CountTable,
    label: &str,
    r: u64,
    n_max: i64,
) -> Result<()> {
    let rows: Vec<i64> = table.m_range().collect();
    for n in 0..=n_max {
        if rows.len() < n as usize + 2 {
            break;
        }
        let mut column: Vec<BigInt> = rows
            .iter()
            .map(|&m| table.get(n, m).cloned().expect("dense table"))
            .collect();
        for _ in 0..n {
            column = column.windows(2).map(|w| &w[1] - &w[0]).collect();
        }
        let args = format!("n={n} r={r}");
        report.record(
            format!("{label}-column-degree"),
            &args,
            column[0].is_zero(),
            false,
        );
        let next: Vec<BigInt> = column.windows(2).map(|w| &w[1] - &w[0]).collect();
        report.record(
            format!("{label}-column-degree"),
            args,
            next.iter().all(Zero::is_zero),
            true,
        );
    }
    Ok(())
}

fn gf_bridges(report: &mut Report, r: u64, order: usize) -> Result<()> {
    let ri = r as i64;
    for m in 0..=8u64 {
        let g = gen_func_down(m, r, order)?;
        for n in 0..=order {
            report.record(
                "gen-func-down",
                format!("n={n} m={m} r={r}"),
                format_rational(g.coeff(n)),
                ballot_avoid_east(n as i64, m as i64, ri)?,
            );
        }
    }
    report.absorb(dyck_gf_functional_check(r, order)?);
    report.record(
        "gf-factor-forms",
        format!("r={r}"),
        down_gf_factor(r),
        down_gf_factor_alt(r),
    );
    if order >= 3 {
        // The quotient form disagrees from order 3 on; pin that fact.
        let linear = dyck_gf_linear_form_check(r, order)?;
        let first = linear.instances.iter().position(|i| !i.passed);
        report.record(
            "linear-form-first-failure",
            format!("r={r}"),
            format!("{first:?}"),
            "Some(3)",
        );
    }
    Ok(())
}

/// Formulas and tables against brute-force enumeration, compositions, and
/// peakless Motzkin paths.
pub fn oracle_suite(config: &SuiteConfig) -> Result<Report> {
    let mut report = Report::new("oracle");
    let total = 2 * config.max_n as i64;
    for &r in &config.rs {
        let ri = r as i64;
        let s_table = build_s_table((total / 2) as u64, 0, total, r)?;
        let t_table = build_t_table((total / 2) as u64, total as u64, r)?;
        for n in 0..=total / 2 {
            for m in n..=total - n {
                let point = BallotPoint::new(n, m);
                let args = format!("n={n} m={m} r={r}");
                for (dir, table, formula) in [
                    (Direction::East, &s_table, ballot_avoid_east(n, m, ri)?),
                    (Direction::North, &t_table, ballot_avoid_north(n, m, ri)?),
                ] {
                    let restriction = RunRestriction::new(dir, ri)?;
                    let label = match dir {
                        Direction::East => "east",
                        Direction::North => "north",
                    };
                    report.record(
                        format!("{label}-table=closed"),
                        &args,
                        cell(table, n, m),
                        &formula,
                    );
                    for boundary in [Boundary::Ballot, Boundary::Dyck] {
                        let brute =
                            brute_force_count(Target::Ballot(point), restriction, boundary)?;
                        let check = format!("{label}-closed=brute-{}", boundary_name(boundary));
                        report.record(check, &args, &formula, brute);
                    }
                }
            }
        }
    }
    compositions(&mut report, config.max_n.min(10))?;
    for n in 0..=total.min(24) as u64 {
        report.record(
            "motzkin-peakless",
            format!("n={n}"),
            motzkin_peakless(n),
            motzkin_peakless_bruteforce(n)?,
        );
    }
    Ok(report)
}

fn boundary_name(b: Boundary) -> &'static str {
    match b {
        Boundary::Ballot => "ballot",
        Boundary::Dyck => "dyck",
    }
}

/// `P_n^alpha = Q_n^alpha` for `c` in `1..=3`, `n <= n_max`, `alpha <= 6`,
/// and the `P` count against the `p` table with `r = c + 2`.
fn compositions(report: &mut Report, n_max: u64) -> Result<()> {
    for c in 1..=3u64 {
        let r = c + 2;
        let p_table = build_p_table(c * n_max, n_max, r)?;
        for n in 0..=n_max {
            for alpha in 0..=6u64 {
                let args = format!("c={c} n={n} alpha={alpha}");
                let p = count_restricted_compositions(c, n, alpha, Side::P)?;
                let q = count_restricted_compositions(c, n, alpha, Side::Q)?;
                report.record("compositions-p=q", &args, &p, q);
                let idx = (c * n) as i64 - alpha as i64;
                if n >= 1 && idx >= 0 {
                    report.record(
                        "compositions=p-table",
                        &args,
                        p,
                        cell(&p_table, idx, n as i64),
                    );
                }
            }
        }
    }
    Ok(())
}

/// `(x - 3)(x^6 + 24x^5 + 247x^4 + 426x^3 - 38x^2 - 2340x + 6720) / 7!`.
pub fn p7_factored() -> DensePolynomial {
    let left = DensePolynomial::from_integers(&[-3, 1]);
    let right = DensePolynomial::from_integers(&[6720, -2340, -38, 426, 247, 24, 1]);
    (&left * &right).scale(&BigRational::new(BigInt::one(), int(5040)))
}

/// Peakless Motzkin evidence for `p_n(0)`, the conjectured generating
/// function, and the degree-7 coefficient in closed form.
pub fn conjecture_suite(config: &SuiteConfig) -> Result<Report> {
    let order = config.order.max(3) as u64;
    let mut report = conjecture_check(order, 0..=16, order.min(40))?;
    let listed = [1, 1, 1, 2, 4, 7, 13, 26, 52, 104, 212, 438, 910];
    for (n, &v) in listed.iter().enumerate() {
        report.record(
            "motzkin-listed",
            format!("n={n}"),
            motzkin_peakless(n as u64),
            v,
        );
    }
    let p7 = crate::polyseq::p_poly(7, 4)?;
    report.record("p7-factored", "r=4", &p7, p7_factored());
    for x in 0..=8 {
        let coeff = conjecture_series(x, 7)?.coeff(7).clone();
        report.record(
            "p7-series",
            format!("x={x}"),
            format_rational(&coeff),
            format_rational(&p7_factored().eval_int(x)),
        );
    }
    report.record(
        "constant-term",
        "x=0",
        format_rational(conjecture_series(0, 0)?.coeff(0)),
        rat(1),
    );
    Ok(report)
}
