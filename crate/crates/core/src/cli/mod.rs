mod commands;
mod config;

use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

pub use config::Config;

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;
pub const EXIT_NOT_APPLICABLE: i32 = 4;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn io(message: impl Into<String>) -> Self {
        CliError { code: EXIT_IO, message: message.into() }
    }

    pub fn validation(message: impl Into<String>) -> Self {
        CliError { code: EXIT_INVALID, message: message.into() }
    }

    pub fn not_applicable(message: impl Into<String>) -> Self {
        CliError { code: EXIT_NOT_APPLICABLE, message: message.into() }
    }
}

/// Result of a command: text for stdout and the exit code.
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: EXIT_OK }
    }
}

#[derive(Parser, Debug)]
#[command(name = "bondle", version, about = "Gauss codes, moves and bondle colorings for folded chains")]
pub struct Cli {
    /// Output format; overrides the config file.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Config file; defaults to $BONDLE_CONFIG.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct Input {
    /// File holding a Gauss code; `-` or nothing reads stdin.
    pub input: Option<PathBuf>,
    /// Gauss code given inline instead of a file.
    #[arg(long, conflicts_with = "input")]
    pub code: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Parse a code and print it in canonical form.
    Parse {
        #[command(flatten)]
        input: Input,
        /// Also write the diagram as JSON to this file.
        #[arg(long)]
        dump_diagram: Option<PathBuf>,
    },
    /// Report every convention the code breaks.
    Validate {
        #[command(flatten)]
        input: Input,
    },
    /// Segment sheets, replace helices and trim the ends.
    Normalize {
        #[command(flatten)]
        input: Input,
        /// Replace each helix by kinks instead of dropping it.
        #[arg(long)]
        keep_helices: bool,
        /// Kinks per helix with --keep-helices.
        #[arg(long, default_value_t = 1, requires = "keep_helices")]
        kinks: usize,
        /// Skip trimming crossings on the end segments.
        #[arg(long)]
        no_end_reduce: bool,
    },
    /// Apply a JSON list of moves.
    Move {
        #[command(flatten)]
        input: Input,
        /// Move script: a JSON array of moves or `{"moves": [...]}`.
        #[arg(long)]
        script: PathBuf,
        /// Write the rewrite trace to this file.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Check, build or search algebras.
    Algebra {
        #[command(subcommand)]
        action: AlgebraCommand,
    },
    /// Count colorings of a code by one bondle.
    Color {
        #[command(flatten)]
        input: Input,
        /// `affine:n,a,b,m`, `group:D4,family,n,r3` or a table file.
        #[arg(long)]
        bondle: String,
        /// Normalize the code before counting.
        #[arg(long)]
        normalize: bool,
        #[arg(long)]
        dump_diagram: Option<PathBuf>,
    },
    /// Compare two codes over a battery of bondles.
    Distinguish {
        first: PathBuf,
        second: PathBuf,
        /// Bondle specs; defaults to the configured battery.
        #[arg(long = "bondle")]
        bondles: Vec<String>,
        #[arg(long)]
        normalize: bool,
    },
    /// Scan affine bondles for one that separates two codes.
    Search {
        first: PathBuf,
        second: PathBuf,
        /// Smallest modulus to scan.
        #[arg(long, default_value_t = 2)]
        min_n: u64,
        /// Largest modulus to scan; defaults to the configured bound.
        #[arg(long)]
        max_n: Option<u64>,
        #[arg(long)]
        normalize: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum AlgebraCommand {
    /// Verify the axioms of a table file.
    Check {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Kind::OrientedBondle)]
        kind: Kind,
    },
    /// Write the tables of a constructed bondle.
    Make {
        #[command(subcommand)]
        what: MakeCommand,
        /// Output file; stdout if absent.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// List every affine oriented bondle on Z_n.
    Search { n: u64 },
}

#[derive(Subcommand, Debug)]
pub enum MakeCommand {
    /// `x ▷ y = a x + (1 - a) y`, `R1 = b x + (1 - b) y`, `R3 = m x + (1 - m) y`.
    Affine { n: u64, a: u64, b: u64, m: u64 },
    /// Conjugation quandle of a group with word maps.
    Group {
        /// D3..D8 or S3.
        group: String,
        #[arg(value_parser = clap::value_parser!(u8).range(1..=3))]
        family: u8,
        n: u32,
        /// x2y-1 or x-1y2.
        r3: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Quandle,
    Kei,
    Singquandle,
    InvolutoryBondle,
    OrientedSingquandle,
    OrientedBondle,
}

pub fn read_path(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::io(format!("{}: {e}", path.display())))
}

pub fn write_path(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::io(format!("{}: {e}", path.display())))
}

fn read_input(input: &Input) -> Result<String, CliError> {
    if let Some(code) = &input.code {
        return Ok(code.clone());
    }
    match &input.input {
        Some(p) if p.as_os_str() != "-" => read_path(p),
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::io(format!("stdin: {e}")))?;
            Ok(s)
        }
    }
}

/// Runs a parsed command line.
pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    let config = Config::load(cli.config.as_deref())?;
    let format = cli.format.unwrap_or(config.format);
    let ctx = commands::Ctx { format, config };
    commands::dispatch(&ctx, cli.command)
}
