//! `goldbach`: command-line front end for sieving, Goldbach sums, characters,
//! zero tables, bound evaluation and the verification suite.

mod commands;
mod config;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::output::Format;

#[derive(Parser, Debug)]
#[command(name = "goldbach", version, about = "Goldbach sums, explicit bounds and zero-sum verification")]
pub struct Cli {
    #[command(flatten)]
    pub flags: Flags,
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Args, Debug, Default, Clone)]
pub struct Flags {
    /// Point, limit, x0 or n, depending on the command.
    #[arg(long, global = true)]
    pub x: Option<String>,
    #[arg(long, global = true)]
    pub q: Option<u64>,
    #[arg(long, global = true)]
    pub a: Option<u64>,
    #[arg(long, global = true)]
    pub b: Option<u64>,
    #[arg(long, global = true)]
    pub c: Option<u64>,
    /// Character index, or two comma-separated indices for sum-characters.
    #[arg(long = "chi-index", global = true)]
    pub chi_index: Option<String>,
    /// Selector: f-function, theorem, proposition[:mode], region[:class], threshold, zero sum or check id.
    #[arg(long, global = true)]
    pub which: Option<String>,
    #[arg(long = "T", global = true)]
    pub t: Option<String>,
    #[arg(long, global = true)]
    pub u: Option<String>,
    #[arg(long = "log-x", global = true)]
    pub log_x: Option<String>,
    /// Zero table path.
    #[arg(long, global = true, env = "GOLDBACH_ZEROS")]
    pub zeros: Option<std::path::PathBuf>,
    #[arg(long = "sieve-limit", global = true)]
    pub sieve_limit: Option<usize>,
    /// Working precision in decimal digits (at least 30).
    #[arg(long, global = true)]
    pub precision: Option<u32>,
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
    /// B_q: 1 (unconditional), 0.5 (GRH) or any real.
    #[arg(long, global = true)]
    pub bq: Option<String>,
    /// JSON config file; flags override it.
    #[arg(long, global = true)]
    pub config: Option<std::path::PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Build the von Mangoldt sieve up to --x and report ψ(x) and π(x).
    Sieve,
    /// Shorthand for `goldbach sum`.
    #[command(hide = true)]
    Sum,
    Goldbach {
        #[command(subcommand)]
        cmd: GoldbachCmd,
    },
    Chars {
        #[command(subcommand)]
        cmd: CharsCmd,
    },
    Zeros {
        #[command(subcommand)]
        cmd: ZerosCmd,
    },
    Bound {
        #[command(subcommand)]
        cmd: BoundCmd,
    },
    Verify {
        #[command(subcommand)]
        cmd: VerifyCmd,
    },
}

#[derive(Subcommand, Debug)]
pub enum GoldbachCmd {
    /// Number of ordered prime pairs summing to --x.
    #[command(name = "g")]
    Pairs,
    /// G(n) = Σ Λ(ℓ)Λ(m) over ℓ + m = --x.
    #[command(name = "G")]
    Weighted,
    /// S(x) = Σ_{n≤x} G(n).
    Sum,
    /// S(x;q,a,b).
    SumCongruence,
    /// S(x;χ₁,χ₂) with --chi-index i,j.
    SumCharacters,
    /// Σ_{n≤x, n≡c (mod q)} (G(n) − J(n)).
    GMinusJ,
}

#[derive(Subcommand, Debug)]
pub enum CharsCmd {
    List,
    Eval,
    PhiStar,
}

#[derive(Subcommand, Debug)]
pub enum ZerosCmd {
    Ingest,
    Count,
    Sum,
    ExplicitPsi,
}

#[derive(Subcommand, Debug)]
pub enum BoundCmd {
    F,
    Theorem,
    Proposition,
    Region,
    Threshold,
}

#[derive(Subcommand, Debug)]
pub enum VerifyCmd {
    /// Run the checks selected by --which (an id or id prefix).
    One,
    All,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
