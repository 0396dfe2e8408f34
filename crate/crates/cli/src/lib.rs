//! Command-line front end for `presmat`.

pub mod commands;
pub mod input;
pub mod report;
pub mod scenarios;

use clap::{Parser, Subcommand, ValueEnum};
use presmat::groebner::Budget;
use report::{Outcome, Report, Timings};
use sha2::{Digest, Sha256};
use std::path::PathBuf;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Largest,
    Smallest,
}

#[derive(Debug, Parser)]
#[command(name = "presmat", version, about = "Presentation matrices and Betti sequences of height-3 Gorenstein-type ideals")]
pub struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Time budget in seconds for Gröbner computations (overrides PRESMAT_BUDGET_SECS).
    #[arg(long, global = true)]
    pub budget: Option<f64>,
    /// Monomial order for the input ring (grevlex or lex).
    #[arg(long, global = true)]
    pub order: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// γ(M), the normalized signed maximal minors of a matrix.
    Gamma {
        input: PathBuf,
        /// Use the transpose of the matrix.
        #[arg(long)]
        transpose: bool,
    },
    /// Decide whether a matrix is a presentation matrix.
    Check { input: PathBuf },
    /// Length-three resolution of a presentation matrix, or the minimal free
    /// resolution of an ideal.
    Resolve {
        input: PathBuf,
        /// Maximal number of maps for ideal input.
        #[arg(long)]
        max_length: Option<usize>,
    },
    /// ζ(I_M) and the normalized basis for a minimal presentation matrix.
    Zeta { input: PathBuf },
    /// Split the ideal of maximal minors of an (n+1) x n matrix whose last row is H.
    Decompose { input: PathBuf },
    /// Classify a Betti sequence `a..; b..; s`.
    BettiClassify {
        sequence: Option<String>,
        /// Homogeneous sequence (a^n; b^n; n(b-a)) given as N A B.
        #[arg(long, num_args = 3, value_names = ["N", "A", "B"], conflicts_with = "sequence")]
        homogeneous: Option<Vec<i64>>,
        /// Also decide minimality of the sequence.
        #[arg(long)]
        minimality: bool,
    },
    /// Gaeta reduction of a Betti sequence.
    BettiReduce {
        sequence: String,
        #[arg(long, value_enum, default_value_t = StrategyArg::Largest)]
        strategy: StrategyArg,
    },
    /// Lift a Betti sequence by a vector u.
    BettiLift {
        sequence: String,
        /// Comma separated nonnegative integers, one per generator.
        #[arg(long, value_delimiter = ',', required = true)]
        u: Vec<i64>,
    },
    /// Build a matrix realizing an essential Betti sequence.
    Construct {
        sequence: Option<String>,
        #[arg(long, num_args = 3, value_names = ["N", "A", "B"], conflicts_with = "sequence")]
        homogeneous: Option<Vec<i64>>,
        /// Cross-check with a minimal free resolution computed from scratch.
        #[arg(long)]
        oracle: bool,
    },
    /// Reproduce a named worked example from the embedded fixtures.
    VerifyPaperExample {
        name: Option<String>,
        /// List the available scenarios.
        #[arg(long)]
        list: bool,
        /// Run stretch checks (full resolutions of large examples).
        #[arg(long)]
        full: bool,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Gamma { .. } => "gamma",
            Command::Check { .. } => "check",
            Command::Resolve { .. } => "resolve",
            Command::Zeta { .. } => "zeta",
            Command::Decompose { .. } => "decompose",
            Command::BettiClassify { .. } => "betti-classify",
            Command::BettiReduce { .. } => "betti-reduce",
            Command::BettiLift { .. } => "betti-lift",
            Command::Construct { .. } => "construct",
            Command::VerifyPaperExample { .. } => "verify-paper-example",
        }
    }
}

/// What a command produced, before timing and digest are attached.
#[derive(Debug)]
pub struct Outcomeful {
    pub outcome: Outcome,
    pub verdict: Option<String>,
    pub result: serde_json::Value,
    pub witness: Option<serde_json::Value>,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

pub fn budget_for(cli_secs: Option<f64>) -> Budget {
    match cli_secs {
        Some(s) if s > 0.0 => Budget::seconds(s).with_max_terms(1_000_000),
        _ => Budget::default(),
    }
}

/// Runs one job and returns its report. Never panics on bad input.
pub fn run(cli: &Cli) -> Report {
    let start = Instant::now();
    let (digest, produced) = commands::dispatch(cli);
    let total_ms = start.elapsed().as_secs_f64() * 1000.0;
    let timings = Timings { total_ms };
    let command = cli.command.name().to_string();
    match produced {
        Ok(o) => Report {
            command,
            input_digest: digest,
            outcome: o.outcome,
            verdict: o.verdict,
            result: o.result,
            witness: o.witness,
            error: None,
            timings,
        },
        Err(e) => Report {
            command,
            input_digest: digest,
            outcome: Outcome::Error,
            verdict: None,
            result: serde_json::Value::Null,
            witness: None,
            error: Some(e),
            timings,
        },
    }
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(report).expect("report serializes") + "\n",
        Format::Text => report.to_text(),
    }
}
