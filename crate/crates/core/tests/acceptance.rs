//! One PASS/FAIL line per acceptance criterion. Every comparison is exact
//! integer or rational equality; runtime bounds are checked as stated.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use eulerpaths::euler::{catalan, euler_coeff, verify_euler_identities_for};
use eulerpaths::exact::int;
use eulerpaths::oracle::{
    brute_force_count, count_restricted_compositions, motzkin_peakless_bruteforce, Boundary, Side,
    Target,
};
use eulerpaths::paths::{ballot_avoid_east, ballot_avoid_north};
use eulerpaths::polyseq::{p_poly, sheffer_binomial_check, FamilyKind, SequenceFamily};
use eulerpaths::reference::check_all;
use eulerpaths::series::{
    conjecture_series, down_gf_factor, down_gf_factor_alt, dyck_gf_functional_check, gen_func_down,
    motzkin_peakless,
};
use eulerpaths::tables::{build_p_table, build_q_table, build_s_table, build_t_table};
use eulerpaths::verify::p7_factored;
use eulerpaths::{BallotPoint, Direction, Result, RunRestriction};
use num_rational::BigRational;

/// Outcome of one criterion: whether it held and a short detail line.
type Verdict = Result<(bool, String)>;

/// Name, check, and runtime bound.
type Criterion = (&'static str, fn() -> Verdict, Duration);

/// Fails fast on the first mismatch, keeping a count of comparisons.
#[derive(Default)]
struct Tally {
    checked: usize,
    first_failure: Option<String>,
}

impl Tally {
    fn eq<T: PartialEq + std::fmt::Debug>(
        &mut self,
        what: impl FnOnce() -> String,
        lhs: T,
        rhs: T,
    ) {
        self.checked += 1;
        if lhs != rhs && self.first_failure.is_none() {
            self.first_failure = Some(format!("{}: {lhs:?} != {rhs:?}", what()));
        }
    }

    fn verdict(self) -> (bool, String) {
        match self.first_failure {
            None => (true, format!("{} exact comparisons", self.checked)),
            Some(f) => (false, f),
        }
    }
}

fn table_reproduction() -> Verdict {
    let report = check_all()?;
    let whitelisted = report
        .instances
        .iter()
        .filter(|i| i.check.ends_with("erratum-differs"))
        .count();
    let failed = report.failures().count();
    let ok = failed == 0 && whitelisted == 3;
    Ok((
        ok,
        format!(
            "{} cells, {failed} failed, {whitelisted} whitelisted",
            report.len()
        ),
    ))
}

fn oracle_triangle() -> Verdict {
    let mut t = Tally::default();
    for r in 2..=5i64 {
        let s = build_s_table(11, 0, 22, r as u64)?;
        let tt = build_t_table(11, 22, r as u64)?;
        for n in 0..=11i64 {
            for m in n..=22 - n {
                let point = BallotPoint::new(n, m);
                for (dir, table, closed) in [
                    (Direction::East, &s, ballot_avoid_east(n, m, r)?),
                    (Direction::North, &tt, ballot_avoid_north(n, m, r)?),
                ] {
                    let rest = RunRestriction::new(dir, r)?;
                    let brute = brute_force_count(Target::Ballot(point), rest, Boundary::Ballot)?;
                    let at = || format!("({n},{m}) r={r} {dir:?}");
                    t.eq(at, table.get(n, m), Some(&closed));
                    t.eq(at, closed, brute);
                }
            }
        }
    }
    Ok(t.verdict())
}

fn identity_suites() -> Verdict {
    let mut checked = 0;
    for r in 2..=6u64 {
        let report = verify_euler_identities_for(12, 12 * (r - 1), &[r]);
        if let Some(f) = report.failures().next() {
            return Ok((
                false,
                format!("{} [{}]: {} != {}", f.check, f.args, f.lhs, f.rhs),
            ));
        }
        checked += report.len();
    }
    let mut t = Tally::default();
    for n in 0..=12i64 {
        for r in n + 1..=n + 3 {
            let r = r.max(2);
            let lhs = euler_coeff(n + 1, n, r)?;
            t.eq(
                || format!("catalan limit n={n} r={r}"),
                lhs,
                catalan(n as u64) * (n + 1),
            );
        }
    }
    let (ok, detail) = t.verdict();
    Ok((
        ok,
        format!("{checked} identity instances, {detail} on the Catalan limit"),
    ))
}

fn composition_lemmas() -> Verdict {
    let mut t = Tally::default();
    for c in 1..=3u64 {
        for n in 0..=10u64 {
            for alpha in 0..=6u64 {
                let p = count_restricted_compositions(c, n, alpha, Side::P)?;
                let q = count_restricted_compositions(c, n, alpha, Side::Q)?;
                t.eq(|| format!("P=Q c={c} n={n} alpha={alpha}"), p, q);
            }
        }
    }
    let n_max = 12i64;
    for r in 3..=5i64 {
        let c = r - 2;
        let p = build_p_table((c * n_max) as u64, n_max as u64, r as u64)?;
        for alpha in 0..=4i64 {
            let q = build_q_table((n_max + alpha) as u64, n_max as u64, alpha as u64, r as u64)?;
            for n in 0..=n_max {
                if c * n < alpha {
                    continue;
                }
                t.eq(
                    || format!("q=p r={r} n={n} alpha={alpha}"),
                    q.get(n + alpha, n),
                    p.get(c * n - alpha, n),
                );
            }
        }
    }
    Ok(t.verdict())
}

fn generating_functions() -> Verdict {
    let order = 64;
    let mut t = Tally::default();
    for r in 2..=5u64 {
        let s = build_s_table(order as u64, 0, 8, r)?;
        for m in 0..=8u64 {
            let g = gen_func_down(m, r, order)?;
            for n in 0..=order {
                let cell = s
                    .get(n as i64, m as i64)
                    .map(|v| BigRational::from_integer(v.clone()));
                t.eq(
                    || format!("gen_func_down n={n} m={m} r={r}"),
                    Some(g.coeff(n).clone()),
                    cell,
                );
            }
        }
        let functional = dyck_gf_functional_check(r, order)?;
        t.eq(
            || format!("functional equation r={r}"),
            functional.failures().count(),
            0,
        );
    }
    Ok(t.verdict())
}

fn conjecture_evidence() -> Verdict {
    let mut t = Tally::default();
    let p = SequenceFamily::build(FamilyKind::P, 4, None, 64)?;
    for n in 3..=64u64 {
        let sign = if n % 2 == 0 { 1 } else { -1 };
        t.eq(
            || format!("p_{n}(0)"),
            p.value(n as usize, 0),
            motzkin_peakless(n - 3) * sign,
        );
    }
    for x in 0..=16i64 {
        let g = conjecture_series(x, 40)?;
        for n in 0..=40usize {
            let value = BigRational::from_integer(p.value(n, x));
            t.eq(
                || format!("conjectured coefficient n={n} x={x}"),
                g.coeff(n).clone(),
                value,
            );
        }
    }
    for n in 0..=20u64 {
        t.eq(
            || format!("M'({n}) by enumeration"),
            motzkin_peakless(n),
            motzkin_peakless_bruteforce(n)?,
        );
    }
    let listed = [1, 1, 1, 2, 4, 7, 13, 26, 52, 104, 212, 438, 910];
    for (n, &v) in listed.iter().enumerate() {
        t.eq(
            || format!("M'({n}) listed"),
            motzkin_peakless(n as u64),
            int(v),
        );
    }
    t.eq(|| "p_7 factored".to_string(), p_poly(7, 4)?, p7_factored());
    Ok(t.verdict())
}

fn sheffer_consequences() -> Verdict {
    let points: Vec<(i64, i64)> = (-3..=3).flat_map(|x| [(x, 0), (x, 2)]).collect();
    let mut t = Tally::default();
    let mut instances = 0;
    for r in 2..=5u64 {
        let mut families = vec![SequenceFamily::build(FamilyKind::S, r, None, 12)?];
        for alpha in 0..=4 {
            families.push(SequenceFamily::build(FamilyKind::Q, r, Some(alpha), 12)?);
        }
        for family in &families {
            let report = sheffer_binomial_check(family, 12, &points);
            let label = || format!("{:?} alpha={:?} r={r}", family.kind, family.alpha);
            t.eq(label, report.failures().count(), 0);
            t.eq(label, report.is_empty(), false);
            instances += report.len();
        }
        t.eq(
            || format!("factor forms r={r}"),
            down_gf_factor(r),
            down_gf_factor_alt(r),
        );
    }
    let (ok, detail) = t.verdict();
    Ok((
        ok,
        format!("{instances} convolution instances, {detail} on families and factor forms"),
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        (
            "1 table reproduction",
            table_reproduction,
            Duration::from_secs(1),
        ),
        (
            "2 closed form = table = oracle",
            oracle_triangle,
            Duration::from_secs(120),
        ),
        (
            "3 identity suites",
            identity_suites,
            Duration::from_secs(600),
        ),
        (
            "4 composition lemmas",
            composition_lemmas,
            Duration::from_secs(600),
        ),
        (
            "5 generating functions",
            generating_functions,
            Duration::from_secs(600),
        ),
        (
            "6 conjecture evidence",
            conjecture_evidence,
            Duration::from_secs(60),
        ),
        (
            "7 Sheffer consequences",
            sheffer_consequences,
            Duration::from_secs(600),
        ),
    ];
    let mut all = true;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let verdict = run();
        let elapsed = start.elapsed();
        let (ok, detail) = match verdict {
            Ok((_, detail)) if elapsed > limit => (
                false,
                format!("{detail}; took {elapsed:.2?}, limit {limit:?}"),
            ),
            Ok(v) => v,
            Err(e) => (false, format!("error: {e}")),
        };
        all &= ok;
        let tag = if ok { "PASS" } else { "FAIL" };
        println!("{tag} {name}: {detail} ({elapsed:.2?})");
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
