use std::fs;
use std::path::Path;
use std::process::Command as Process;

use antsel_cli::{execute, Cli, CliError, SCHEMAS};
use clap::Parser;
use tempfile::TempDir;

fn run_to_file(dir: &TempDir, file: &str, args: &[&str]) -> String {
    let out = dir.path().join(file);
    let mut argv = vec!["antsel"];
    argv.extend_from_slice(args);
    argv.extend_from_slice(&["--out", out.to_str().unwrap()]);
    execute(&Cli::try_parse_from(argv).unwrap()).unwrap();
    fs::read_to_string(out).unwrap()
}

/// Header and data records, comment lines dropped.
fn records(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let body: String = text
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| format!("{l}\n"))
        .collect();
    let mut r = csv::Reader::from_reader(body.as_bytes());
    let header = r.headers().unwrap().iter().map(String::from).collect();
    let rows = r
        .records()
        .map(|rec| rec.unwrap().iter().map(String::from).collect())
        .collect();
    (header, rows)
}

fn col(header: &[String], name: &str) -> usize {
    header.iter().position(|h| h == name).unwrap()
}

fn num(s: &str) -> f64 {
    s.parse().unwrap()
}

#[test]
fn ergodic_rows_are_sandwiched() {
    let dir = TempDir::new().unwrap();
    let text = run_to_file(
        &dir,
        "e.csv",
        &["ergodic", "--n", "1", "--m", "1..20", "--rho-db", "5"],
    );
    let (h, rows) = records(&text);
    assert_eq!(rows.len(), 20);
    for r in &rows {
        let exact = num(&r[col(&h, "exact_quadrature")]);
        assert!(num(&r[col(&h, "bound_lower")]) <= exact + 1e-6);
        assert!(exact <= num(&r[col(&h, "bound_upper")]) + 1e-6);
        assert!(!r[col(&h, "qm_gamma_approx")].is_empty());
        assert!(r[col(&h, "monte_carlo")].is_empty());
    }
}

#[test]
fn table1_defaults_cover_the_grid() {
    let dir = TempDir::new().unwrap();
    let (h, rows) = records(&run_to_file(&dir, "t.csv", &["table1"]));
    assert_eq!(rows.len(), 80);
    let approx = col(&h, "approx_gain");
    assert_eq!(rows.iter().filter(|r| !r[approx].is_empty()).count(), 76);
    let first = &rows[2];
    assert_eq!((first[0].as_str(), first[1].as_str()), ("1", "5"));
    assert_eq!(first[col(&h, "exact_gain_display")], "2.0183");
}

#[test]
fn output_is_byte_stable() {
    let dir = TempDir::new().unwrap();
    let args = [
        "fit",
        "--n",
        "2",
        "--m",
        "5,10",
        "--mode",
        "mc",
        "--mode",
        "approx",
        "--samples",
        "5000",
    ];
    let a = run_to_file(&dir, "a.csv", &args);
    let b = run_to_file(&dir, "b.csv", &args);
    assert_eq!(a, b);
    let c = run_to_file(&dir, "c.csv", &[&args[..], &["--seed", "7"]].concat());
    assert_ne!(a, c);
}

#[test]
fn unselected_columns_stay_empty() {
    let dir = TempDir::new().unwrap();
    let (h, rows) = records(&run_to_file(
        &dir,
        "o.csv",
        &["outage", "--m", "2", "--mode", "exact"],
    ));
    assert_eq!(rows.len(), 4);
    for r in &rows {
        assert!(!r[col(&h, "exact_quadrature")].is_empty());
        assert!(r[col(&h, "gumbel_approx")].is_empty());
        assert!(r[col(&h, "mimo_monte_carlo")].is_empty());
    }
}

fn schema_line(columns: &[&str]) -> String {
    columns.join(",")
}

#[test]
fn every_subcommand_emits_its_documented_schema() {
    let readme =
        fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("../../README.md")).unwrap();
    let dir = TempDir::new().unwrap();
    let small: &[(&str, &[&str])] = &[
        (
            "dist",
            &[
                "--m",
                "2",
                "--x",
                "0,1",
                "--mode",
                "exact",
                "--mode",
                "approx",
                "--mode",
                "mc",
                "--samples",
                "2000",
            ],
        ),
        (
            "fit",
            &[
                "--n",
                "1",
                "--m",
                "3",
                "--mode",
                "exact",
                "--mode",
                "approx",
                "--mode",
                "mc",
                "--samples",
                "2000",
            ],
        ),
        (
            "outage",
            &[
                "--m",
                "2",
                "--rho-db",
                "0",
                "--mode",
                "exact",
                "--mode",
                "approx",
                "--mode",
                "mc",
                "--samples",
                "10000",
            ],
        ),
        (
            "ergodic",
            &[
                "--m",
                "2",
                "--rho-db",
                "0",
                "--mode",
                "exact",
                "--mode",
                "bounds",
                "--mode",
                "approx",
                "--mode",
                "mc",
                "--samples",
                "2000",
            ],
        ),
        (
            "scheduling",
            &[
                "--m",
                "2",
                "--users",
                "4",
                "--rho-db",
                "0",
                "--mode",
                "exact",
                "--mode",
                "approx",
                "--mode",
                "mc",
                "--samples",
                "2000",
            ],
        ),
        ("table1", &["--m", "1,2", "--rho-db", "0"]),
        (
            "mimo",
            &[
                "--m",
                "2",
                "--users",
                "2",
                "--rho-db",
                "0",
                "--samples",
                "10000",
            ],
        ),
        ("verify", &["--samples", "2000"]),
    ];
    assert_eq!(small.len(), SCHEMAS.len());
    for ((cmd, args), (name, columns)) in small.iter().zip(SCHEMAS) {
        assert_eq!(cmd, name);
        let line = schema_line(columns);
        assert!(
            readme.contains(&format!("`{line}`")),
            "README lacks the {cmd} schema `{line}`"
        );
        let text = run_to_file(&dir, &format!("{cmd}.csv"), &[&[*cmd], *args].concat());
        let (header, rows) = records(&text);
        assert_eq!(header.join(","), line, "{cmd}");
        assert!(!rows.is_empty());
        assert!(rows.iter().all(|r| r.len() == columns.len()));
        // every column is populated when all modes are on
        if *cmd != "table1" {
            for (i, c) in columns.iter().enumerate() {
                assert!(
                    rows.iter().any(|r| !r[i].is_empty()),
                    "{cmd}: column {c} never set"
                );
            }
        }
        assert!(text.starts_with(&format!("# antsel {} {cmd}\n", env!("CARGO_PKG_VERSION"))));
    }
}

#[test]
fn library_errors_map_to_exit_codes() {
    let numerical = CliError::from(antsel::Error::NoConvergence {
        what: "quantile",
        iterations: 200,
        estimate: 1.0,
    });
    assert_eq!(numerical.exit_code(), 3);
    assert!(numerical
        .report_line()
        .starts_with("error: kind=no-convergence exit=3 "));
    let bad = Cli::try_parse_from([
        "antsel",
        "fit",
        "--n",
        "2",
        "--m",
        "2",
        "--strategy",
        "asymptotic",
    ])
    .unwrap();
    let err = antsel_cli::commands::run(&bad.command).unwrap_err();
    assert_eq!((err.kind(), err.exit_code()), ("strategy-unavailable", 2));
}

fn binary(args: &[&str]) -> std::process::Output {
    Process::new(env!("CARGO_BIN_EXE_antsel"))
        .args(args)
        .output()
        .unwrap()
}

#[test]
fn binary_exit_codes() {
    let out = binary(&["ergodic", "--rho-db", "1:-1:3"]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(
        stderr
            .lines()
            .any(|l| l.starts_with("error: kind=usage exit=2 ")),
        "{stderr}"
    );
    assert_eq!(binary(&["--help"]).status.code(), Some(0));

    let out = binary(&["fit", "--n", "2", "--m", "2", "--strategy", "asymptotic"]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(
        stderr.starts_with("error: kind=strategy-unavailable"),
        "{stderr}"
    );

    let out = binary(&["table1", "--n", "1,2"]);
    assert_eq!(out.status.code(), Some(2));

    let out = binary(&["ergodic", "--m", "3", "--rho-db", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().lines().count() == 4);
}

#[test]
fn verify_passes_at_default_seed() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("v.csv");
    let res = binary(&[
        "verify",
        "--samples",
        "50000",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(
        res.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&res.stderr)
    );
    let (h, rows) = records(&fs::read_to_string(out).unwrap());
    assert!(rows.len() > 20);
    assert!(rows.iter().all(|r| r[col(&h, "passed")] == "true"));
}
