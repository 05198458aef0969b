use std::process::ExitCode;

use antsel_cli::{execute, Cli, CliError, Command};
use clap::error::ErrorKind;
use clap::Parser;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            e.exit()
        }
        Err(e) => {
            let _ = e.print();
            let first = e
                .to_string()
                .lines()
                .next()
                .unwrap_or_default()
                .trim_start_matches("error: ")
                .to_string();
            let err = CliError::Usage(first);
            eprintln!("{}", err.report_line());
            return ExitCode::from(err.exit_code());
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            if let Command::Verify(_) = cli.command {
                let failed = outcome.table.rows.iter().filter(|r| r[1] != "true").count();
                let total = outcome.table.rows.len();
                eprintln!("verify: {}/{total} checks passed", total - failed);
                for r in outcome.table.rows.iter().filter(|r| r[1] != "true") {
                    eprintln!("FAIL {}", r[0]);
                }
            }
            if outcome.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("{}", e.report_line());
            ExitCode::from(e.exit_code())
        }
    }
}
