//! Command-line front end: reads a JSON input file, runs one command and
//! emits a report with a digest of its checked body.

pub mod commands;
pub mod input;
pub mod report;

use std::fmt;
use std::path::PathBuf;
use std::time::Instant;

use clap::Parser;
use serde_json::json;
use unital_core::cech::DEFAULT_MAX_STATES;

pub use commands::{Command, Options};
pub use input::{parse_nerve, parse_input, print_input, validate, InputFile};
pub use report::Report;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Unreadable or invalid input, or a command that does not fit the kind.
    Input(String),
    /// A finiteness cap was exceeded.
    Cap(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Cap(_) => 3,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Input(_) => "input",
            CliError::Cap(_) => "cap",
        }
    }

    /// Error document printed on stdout in JSON mode.
    pub fn to_json(&self) -> String {
        let message = match self {
            CliError::Input(m) | CliError::Cap(m) => m,
        };
        let doc = json!({"error": {"kind": self.kind(), "message": message}, "exit_code": self.exit_code()});
        serde_json::to_string_pretty(&doc).expect("serializable")
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "input error: {m}"),
            CliError::Cap(m) => write!(f, "cap exceeded: {m}"),
        }
    }
}

#[derive(Debug, Clone, Parser)]
#[command(name = "unital", version, about = "Verify unit constructions for finite abelian complexes and crossed modules")]
pub struct Cli {
    pub command: Command,
    /// Input file (JSON)
    #[arg(long = "in", value_name = "FILE")]
    pub input: PathBuf,
    /// Nerve file (JSON); overrides the input's "nerve" field
    #[arg(long, value_name = "FILE")]
    pub nerve: Option<PathBuf>,
    /// Emit the JSON report
    #[arg(long, conflicts_with = "text")]
    pub json: bool,
    /// Emit the text report (default)
    #[arg(long)]
    pub text: bool,
    /// Cap on exhaustive search states
    #[arg(long, value_name = "N", default_value_t = DEFAULT_MAX_STATES as u64)]
    pub max_states: u64,
    /// unit-complex: require zero homology in every degree
    #[arg(long)]
    pub check_acyclic: bool,
    /// qiso: comparison to run (complex2: idA, ker, cone; complex3: sum, ker; or all)
    #[arg(long, value_name = "NAME")]
    pub against: Option<String>,
}

impl Cli {
    pub fn options(&self) -> Options {
        Options { check_acyclic: self.check_acyclic, against: self.against.clone(), max_states: self.max_states as u128 }
    }
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Reads the files named on the command line and runs the command.
pub fn execute(cli: &Cli) -> Result<Report, CliError> {
    let doc = read(&cli.input)?;
    let nerve = cli.nerve.as_ref().map(read).transpose()?;
    execute_text(cli.command, &cli.options(), &doc, nerve.as_deref())
}

/// Runs `command` on input given as text.
pub fn execute_text(command: Command, opts: &Options, doc_text: &str, nerve_text: Option<&str>) -> Result<Report, CliError> {
    let start = Instant::now();
    let input_error = |e: input::InputError| CliError::Input(e.to_string());
    let mut doc = parse_input(doc_text).map_err(input_error)?;
    if let Some(text) = nerve_text {
        doc.nerve = Some(parse_nerve(text).map_err(input_error)?);
    }
    let doc_value = serde_json::to_value(&doc).expect("doc files serialize");
    let input_digest = report::sha256_hex(report::canonical_json(&doc_value).as_bytes());
    let nerve = match &doc.nerve {
        None => None,
        Some(n) => Some(input::build_nerve(n).map_err(|e| match e {
            input::NerveError::Invalid(e) => input_error(e),
            input::NerveError::TooLarge(n) => CliError::Cap(format!("nerve has {n} cells > {}", input::MAX_NERVE_CELLS)),
        })?),
    };
    let mut input = validate(doc).map_err(input_error)?;
    input.nerve = nerve;
    let (verification, results) = commands::run(command, &input, opts)?;
    let echo = json!({
        "name": command.name(),
        "options": {
            "check_acyclic": opts.check_acyclic,
            "against": opts.against,
            "max_states": opts.max_states.to_string(),
        },
    });
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(Report::new(echo, input_digest, &verification, results, elapsed_ms))
}
