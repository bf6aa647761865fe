use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use unital_cli::{execute, Cli};

/// A closed stdout (e.g. piped into `head`) is not an error.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|()| out.flush());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(report) => {
            if cli.json {
                emit(&format!("{}\n", report.to_json()));
            } else {
                emit(&report.to_text());
            }
            ExitCode::from(if report.passed() { 0 } else { 1 })
        }
        Err(e) => {
            if cli.json {
                emit(&format!("{}\n", e.to_json()));
            }
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
