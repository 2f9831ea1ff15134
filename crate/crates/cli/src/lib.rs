//! Argument definitions, command runners and report types behind the `bsdh` binary.
//!
//! Exit status is 0 on success, 2 for usage or validation errors and 3 for
//! arithmetic overflow.

pub mod commands;
pub mod report;

use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "bsdh",
    version,
    about = "Picard groups and Fano criteria for Bott-Samelson varieties"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Expand a character in the O(1)-basis along a word.
    Expand(ExpandArgs),
    /// Anti-canonical class of Z_w or G x^B Z_w.
    Anticanonical(VarietyArgs),
    /// Positivity of a line bundle.
    Classify(ClassifyArgs),
    /// Fano / weak-Fano verdict with a witness.
    Fano(VarietyArgs),
    /// Whether a word is a reduced expression.
    Reduced(WordArgs),
    /// Classify every word up to a length bound.
    Census(CensusArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Variety {
    /// The Bott-Samelson variety Z_w.
    Z,
    /// The twisted variety G x^B Z_w.
    Gz,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Json,
    Csv,
}

#[derive(Args, Debug)]
pub struct WordArgs {
    /// Root system, e.g. A2, G2, E8 or a product such as A1xB2.
    #[arg(long = "type", value_name = "TYPE")]
    pub spec: String,
    /// Word in the simple reflections: "1,2,1" or "s1 s2 s1".
    #[arg(long, allow_hyphen_values = true)]
    pub word: String,
    #[arg(long, value_enum, default_value = "table")]
    pub format: OutputFormat,
}

#[derive(Args, Debug)]
pub struct ExpandArgs {
    #[command(flatten)]
    pub common: WordArgs,
    /// Character in fundamental-weight coordinates, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
}

#[derive(Args, Debug)]
pub struct VarietyArgs {
    #[command(flatten)]
    pub common: WordArgs,
    #[arg(long, value_enum)]
    pub variety: Variety,
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    /// Root system; may be omitted for --variety z, where only the letters matter.
    #[arg(long = "type", value_name = "TYPE")]
    pub spec: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub word: String,
    /// Coefficients in the O(1)-basis, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    pub m: String,
    /// Character part of the bundle; required for --variety gz.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
    #[arg(long, value_enum)]
    pub variety: Variety,
    #[arg(long, value_enum, default_value = "table")]
    pub format: OutputFormat,
}

#[derive(Args, Debug)]
pub struct CensusArgs {
    #[arg(long = "type", value_name = "TYPE")]
    pub spec: String,
    #[arg(long)]
    pub max_length: usize,
    #[arg(long)]
    pub reduced_only: bool,
    #[arg(long, value_enum, default_value = "table")]
    pub format: OutputFormat,
    /// Write rows here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads. Row order is only deterministic with 1.
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Arithmetic(String),
    Io(io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Arithmetic(_) => 3,
            CliError::Io(_) => 1,
        }
    }

    /// Wraps a library error, naming the flag it came from.
    pub fn from_core(flag: &str, e: bsdh_core::Error) -> Self {
        if e.is_overflow() {
            CliError::Arithmetic(format!("{flag}: {e}"))
        } else {
            CliError::Usage(format!("{flag}: {e}"))
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Arithmetic(m) => f.write_str(m),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Expand(a) => commands::expand(&a, &mut out),
        Command::Anticanonical(a) => commands::anticanonical(&a, &mut out),
        Command::Classify(a) => commands::classify(&a, &mut out),
        Command::Fano(a) => commands::fano(&a, &mut out),
        Command::Reduced(a) => commands::reduced(&a, &mut out),
        Command::Census(a) => commands::census(&a, &mut out),
    }?;
    out.flush()?;
    Ok(())
}
