//! Criterion 10: the CLI contract — determinism, b-file round-trip, and
//! exit-code semantics — exercised end to end against the built binary.

use std::process::{Command, Output};

use altruns::runs::r_table_recurrence;
use altruns_cli::format::parse_bfile;
use num_bigint::BigInt;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_altruns"))
        .args(args)
        .env_remove("ALTRUNS_ORACLE_HARD_CAP")
        .output()
        .expect("binary spawns")
}

fn run_with_cap(args: &[&str], cap: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_altruns"))
        .args(args)
        .env("ALTRUNS_ORACLE_HARD_CAP", cap)
        .output()
        .expect("binary spawns")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("exited normally")
}

#[test]
fn criterion_10_determinism() {
    for args in [
        &["table", "runs", "--n-max", "8", "--format", "json"][..],
        &["verify", "--n-max", "6", "--oracle-max", "4"][..],
        &["poly", "P", "--n", "9", "--format", "bfile"][..],
    ] {
        let first = run(args);
        let second = run(args);
        assert_eq!(code(&first), 0, "{args:?}");
        assert_eq!(code(&second), 0);
        assert_eq!(first.stdout, second.stdout, "nondeterministic output for {args:?}");
    }
    println!("criterion 10 (determinism): PASS — identical invocations are byte-identical");
}

#[test]
fn criterion_10_bfile_round_trip() {
    let output = run(&["table", "runs", "--n-max", "7", "--format", "bfile"]);
    assert_eq!(code(&output), 0);
    let text = stdout(&output);
    assert!(text.lines().all(|l| l == l.trim_end()), "no trailing whitespace");

    let values = parse_bfile(&text).expect("well-formed b-file");
    let mut rebuilt: Vec<Vec<BigInt>> = Vec::new();
    let mut cursor = values.into_iter();
    for n in 2..=7usize {
        rebuilt.push((&mut cursor).take(n - 1).collect());
    }
    assert_eq!(cursor.next(), None, "no values beyond the triangle");

    let expected = r_table_recurrence(7);
    for (i, row) in rebuilt.iter().enumerate() {
        assert_eq!(row.as_slice(), expected.row(i + 2).unwrap(), "row {}", i + 2);
    }
    println!("criterion 10 (bfile): PASS — emitted b-file re-parses to the exact triangle");
}

#[test]
fn criterion_10_exit_zero_and_all_pass_report() {
    let output = run(&["verify", "--n-max", "20", "--oracle-max", "8"]);
    assert_eq!(code(&output), 0);
    let report: serde_json::Value = serde_json::from_str(&stdout(&output)).expect("json report");
    assert_eq!(report["overall"], true);
    let checks = report["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["status"] == "pass"), "{checks:?}");
    println!("criterion 10 (exit 0): PASS — full suite exits 0 with an all-pass json report");
}

#[test]
fn criterion_10_exit_one_on_verification_failure() {
    let output = run(&[
        "verify",
        "--n-max",
        "8",
        "--oracle-max",
        "5",
        "--inject-fault",
        "6,3",
    ]);
    assert_eq!(code(&output), 1, "a planted fault must fail the run");
    let report: serde_json::Value = serde_json::from_str(&stdout(&output)).expect("json report");
    assert_eq!(report["overall"], false);
    let first_failures: Vec<&str> = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "fail")
        .map(|c| c["first_failure"].as_str().expect("populated"))
        .collect();
    assert!(!first_failures.is_empty());
    assert!(
        first_failures.contains(&"(6, 3)"),
        "the corrupted cell is named: {first_failures:?}"
    );
    println!("criterion 10 (exit 1): PASS — planted fault exits 1 with first_failure populated");
}

#[test]
fn criterion_10_exit_two_on_usage_errors() {
    let bad_invocations: &[&[&str]] = &[
        &[],                                                   // missing subcommand
        &["table", "nosuch", "--n-max", "3"],                  // unknown family
        &["table", "runs", "--n-max", "1"],                    // below family minimum
        &["table", "runs", "--format", "yaml"],                // unknown format
        &["table", "eulerian", "--method", "stanley"],         // method on wrong family
        &["table", "runs", "--method", "oracle", "--n-max", "10"], // beyond default cap
        &["poly", "R", "--n", "0"],                            // below family minimum
        &["poly", "Q", "--n", "3"],                            // unknown family
        &["verify", "--checks", "no-such-check"],              // unknown check
        &["verify", "--format", "csv"],                        // unsupported report format
        &["verify", "--inject-fault", "banana"],               // malformed hidden flag
    ];
    for args in bad_invocations {
        let output = run(args);
        assert_eq!(code(&output), 2, "{args:?} must be a usage error");
        assert!(
            !output.stderr.is_empty(),
            "{args:?} must explain itself on stderr"
        );
    }
    println!("criterion 10 (exit 2): PASS — malformed invocations exit 2 with a message on stderr");
}

#[test]
fn criterion_10_pinned_output_examples() {
    let csv = run(&["table", "runs", "--n-max", "5", "--format", "csv"]);
    assert_eq!(stdout(&csv), "2\n2,4\n2,12,10\n2,28,58,32\n");

    // Any method must print the same triangle.
    for method in ["theorem", "explicit", "stanley", "oracle"] {
        let other = run(&[
            "table", "runs", "--n-max", "5", "--format", "csv", "--method", method,
        ]);
        assert_eq!(code(&other), 0, "method {method}");
        assert_eq!(other.stdout, csv.stdout, "method {method} diverges");
    }

    let stirling = run(&["table", "stirling", "--n-max", "1", "--format", "json"]);
    assert_eq!(stdout(&stirling), "[[1]]\n");

    let p4 = run(&["poly", "P", "--n", "4"]);
    assert_eq!(stdout(&p4), "16x + 40x^3 + 24x^5\n");

    let r2 = run(&["poly", "R", "--n", "2"]);
    assert_eq!(stdout(&r2), "2x\n");

    let a3 = run(&["poly", "a", "--n", "3"]);
    assert_eq!(stdout(&a3), "2 - 8y^2 + 6y^4\n");

    println!("criterion 10 (examples): PASS — pinned table and polynomial outputs reproduced");
}

#[test]
fn criterion_10_oracle_cap_and_env_override() {
    // The oracle method agrees with the recurrence within the cap.
    let by_oracle = run(&["table", "runs", "--n-max", "7", "--format", "csv", "--method", "oracle"]);
    let by_recurrence = run(&["table", "runs", "--n-max", "7", "--format", "csv"]);
    assert_eq!(code(&by_oracle), 0);
    assert_eq!(by_oracle.stdout, by_recurrence.stdout);

    // A lowered hard cap blocks enumeration even with the override flag.
    let blocked = run_with_cap(
        &["table", "runs", "--n-max", "6", "--format", "csv", "--method", "oracle", "--allow-large-oracle"],
        "5",
    );
    assert_eq!(code(&blocked), 2);

    // Within the lowered cap it still works.
    let allowed = run_with_cap(
        &["table", "runs", "--n-max", "5", "--format", "csv", "--method", "oracle", "--allow-large-oracle"],
        "5",
    );
    assert_eq!(code(&allowed), 0);
    assert_eq!(stdout(&allowed), "2\n2,4\n2,12,10\n2,28,58,32\n");

    // Garbage in the env var is a usage error, not a panic.
    let garbage = run_with_cap(
        &["table", "runs", "--n-max", "5", "--method", "oracle", "--allow-large-oracle"],
        "banana",
    );
    assert_eq!(code(&garbage), 2);

    println!("criterion 10 (oracle cap): PASS — cap, override flag, and env var interact as documented");
}

#[test]
fn criterion_10_check_filter_and_listing() {
    let listing = run(&["verify", "--list-checks"]);
    assert_eq!(code(&listing), 0);
    let listing_text = stdout(&listing);
    let names: Vec<&str> = listing_text.lines().collect();
    assert_eq!(names.len(), altruns::check_names().len());
    assert_eq!(names, altruns::check_names());

    let filtered = run(&[
        "verify",
        "--n-max",
        "6",
        "--oracle-max",
        "4",
        "--checks",
        "row-sums,knuth-identity",
    ]);
    assert_eq!(code(&filtered), 0);
    let report: serde_json::Value = serde_json::from_str(&stdout(&filtered)).unwrap();
    let ran: Vec<&str> = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(ran, ["row-sums", "knuth-identity"], "declaration order, not flag order");

    println!("criterion 10 (filter): PASS — check listing and --checks selection work");
}

#[test]
fn criterion_10_help_and_version_succeed() {
    let help = run(&["--help"]);
    assert_eq!(code(&help), 0);
    let text = stdout(&help);
    for needle in ["table", "poly", "verify", "ALTRUNS_ORACLE_HARD_CAP"] {
        assert!(text.contains(needle), "--help must mention {needle}");
    }
    let version = run(&["--version"]);
    assert_eq!(code(&version), 0);
    println!("criterion 10 (help): PASS — help and version exit 0");
}
