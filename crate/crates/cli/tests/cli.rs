use std::fs;
use std::process::{Command, Output};

fn eulerpaths(args: &[&str]) -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_eulerpaths"));
    cmd.args(args)
        .env_remove("EULERPATHS_R")
        .env_remove("EULERPATHS_ORDER")
        .env_remove("EULERPATHS_CONFIG");
    cmd
}

fn run(args: &[&str]) -> Output {
    eulerpaths(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn count_dyck_down_run() {
    let out = run(&[
        "count",
        "--boundary",
        "dyck",
        "--pattern",
        "down",
        "--r",
        "4",
        "--at",
        "13",
        "7",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "208\n");
}

#[test]
fn count_ballot_up_run_with_oracle() {
    let out = run(&[
        "count",
        "--pattern",
        "up",
        "--r",
        "4",
        "--at",
        "2",
        "5",
        "--oracle",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["status"], "verified");
    assert_eq!(v["payload"]["count"], 10);
    assert_eq!(v["payload"]["oracle"], 10);
    assert_eq!(v["payload"]["agree"], true);
}

#[test]
fn unreachable_points_are_usage_errors() {
    let out = run(&[
        "count",
        "--boundary",
        "dyck",
        "--pattern",
        "up",
        "--at",
        "1",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["count", "--pattern", "up", "--at", "3", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&[
        "count",
        "--pattern",
        "up",
        "--at",
        "3",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(json(&out)["status"], "usage-error");
}

#[test]
fn invalid_run_length_is_usage_error() {
    let out = run(&["count", "--pattern", "up", "--r", "0", "--at", "1", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn s_table_with_negative_row_matches_reference() {
    let out = run(&[
        "table",
        "--kind",
        "s",
        "--rows=-1..7",
        "--cols",
        "0..8",
        "--reference-check",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["status"], "verified");
    assert_eq!(v["payload"]["reference"]["compared"], 81);
}

#[test]
fn q_table_needs_alpha() {
    let out = run(&["table", "--kind", "q"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["table", "--kind", "q", "--alpha", "2", "--reference-check"]);
    assert!(out.status.success());
}

#[test]
fn euler_table_reports_whitelisted_cells() {
    let out = run(&["table", "--kind", "euler", "--reference-check"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("3 differ (3 whitelisted)"), "{text}");
}

#[test]
fn reference_check_without_reference_is_usage_error() {
    let out = run(&["table", "--kind", "t", "--r", "3", "--reference-check"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn table_csv_has_header_and_cells() {
    let out = run(&[
        "table", "--kind", "t", "--rows", "0..2", "--cols", "0..2", "--format", "csv",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "m\\n,0,1,2\n0,1,0,0\n1,1,1,0\n2,1,2,2\n");
}

#[test]
fn series_outputs() {
    let out = run(&["series", "--which", "dyck-f", "--r", "4", "--order", "10"]);
    assert_eq!(
        stdout(&out),
        "1, 1, 2, 5, 13, 36, 104, 309, 939, 2905, 9118\n"
    );

    let out = run(&[
        "series", "--which", "down-gf", "--r", "4", "--m", "0", "--order", "5", "--format", "json",
    ]);
    let v = json(&out);
    assert_eq!(v["payload"].as_array().map(Vec::len), Some(6));
    assert_eq!(v["payload"][0], "1");

    let out = run(&[
        "series",
        "--which",
        "conjecture",
        "--x",
        "0",
        "--order",
        "8",
        "--format",
        "csv",
    ]);
    let text = stdout(&out);
    assert!(text.starts_with("k,coefficient\n0,1\n"), "{text}");
}

#[test]
fn conjecture_off_r4_needs_experimental_flag() {
    let out = run(&["series", "--which", "conjecture", "--r", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&[
        "series",
        "--which",
        "conjecture",
        "--r",
        "3",
        "--order",
        "6",
        "--experimental",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let notes = json(&out)["notes"].to_string();
    assert!(notes.contains("experimental"), "{notes}");
}

#[test]
fn verify_suites_pass() {
    for suite in ["identities", "tables", "oracle"] {
        let out = run(&[
            "verify", "--suite", suite, "--max-n", "6", "--r-set", "2,3,4", "--format", "json",
        ]);
        assert!(out.status.success(), "{suite}");
        let v = json(&out);
        assert_eq!(v["status"], "verified", "{suite}");
        assert_eq!(v["payload"]["failed"], 0, "{suite}");
    }
    let out = run(&["verify", "--suite", "tables"]);
    assert!(stdout(&out).contains("whitelisted"));
}

#[test]
fn conjecture_suite_is_evidence_not_proof() {
    let out = run(&["verify", "--suite", "conjecture", "--order", "16"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("verified to order 16"), "{text}");
    assert!(!text.contains("proved"));
}

#[test]
fn output_is_deterministic() {
    let args = ["table", "--kind", "p", "--format", "json"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn environment_sets_defaults() {
    let out = eulerpaths(&["series", "--which", "dyck-f"])
        .env("EULERPATHS_ORDER", "3")
        .env("EULERPATHS_R", "2")
        .output()
        .unwrap();
    assert_eq!(stdout(&out), "1, 1, 1, 1\n");
    let out = eulerpaths(&["series", "--which", "dyck-f", "--order", "2"])
        .env("EULERPATHS_ORDER", "3")
        .output()
        .unwrap();
    assert_eq!(stdout(&out), "1, 1, 2\n");
}

#[test]
fn config_file_sits_below_environment() {
    let dir = std::env::temp_dir().join(format!("eulerpaths-cli-test-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join("defaults.conf");
    fs::write(&path, "# defaults\nr = 2\norder = 4\n").unwrap();
    let p = path.to_str().unwrap();

    let out = run(&["--config", p, "series", "--which", "dyck-f"]);
    assert_eq!(stdout(&out), "1, 1, 1, 1, 1\n");

    let out = eulerpaths(&["--config", p, "series", "--which", "dyck-f"])
        .env("EULERPATHS_R", "4")
        .output()
        .unwrap();
    assert_eq!(stdout(&out), "1, 1, 2, 5, 13\n");

    fs::write(&path, "colour = blue\n").unwrap();
    let out = run(&["--config", p, "series", "--which", "dyck-f"]);
    assert_eq!(out.status.code(), Some(2));
    fs::remove_dir_all(&dir).unwrap();
}
