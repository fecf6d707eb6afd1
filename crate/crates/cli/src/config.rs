use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use goldbach_explicit::bounds::hp::{Ctx, R};
use serde::Deserialize;

use crate::output::Format;
use crate::Flags;

/// Contents of the optional JSON config file.
#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
struct FileConfig {
    zero_file: Option<PathBuf>,
    sieve_limit: Option<usize>,
    precision_digits: Option<u32>,
    parallelism: Option<usize>,
    output: Option<Format>,
    bq: Option<String>,
    timings: Option<bool>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum BqMode {
    Unconditional,
    Grh,
    Custom(String),
}

impl BqMode {
    fn parse(s: &str) -> Result<BqMode> {
        Ok(match s.trim() {
            "1" | "unconditional" => BqMode::Unconditional,
            "0.5" | "1/2" | "grh" => BqMode::Grh,
            other => {
                let v: f64 = other.parse().with_context(|| format!("--bq must be 1, 0.5 or a real, got {other:?}"))?;
                if !(v > 0.0 && v <= 1.0) {
                    bail!("--bq must lie in (0, 1], got {other}");
                }
                BqMode::Custom(other.to_string())
            }
        })
    }

    pub fn value(&self, ctx: &Ctx) -> Result<R> {
        Ok(match self {
            BqMode::Unconditional => ctx.int(1),
            BqMode::Grh => ctx.lit("0.5"),
            BqMode::Custom(s) => ctx.parse(s)?,
        })
    }
}

/// Resolved configuration: defaults, then the config file, then flags.
#[derive(Clone, Debug)]
pub struct CliConfig {
    pub zero_file: Option<PathBuf>,
    pub sieve_limit: usize,
    pub precision_digits: u32,
    /// 0 means the hardware default.
    pub parallelism: usize,
    pub output: Format,
    pub bq: BqMode,
    pub timings: bool,
}

impl CliConfig {
    pub fn resolve(flags: &Flags) -> Result<CliConfig> {
        let file = match &flags.config {
            Some(p) => read_file(p)?,
            None => FileConfig::default(),
        };
        let bq = match flags.bq.as_deref().or(file.bq.as_deref()) {
            Some(s) => BqMode::parse(s)?,
            None => BqMode::Unconditional,
        };
        let cfg = CliConfig {
            zero_file: flags.zeros.clone().or(file.zero_file),
            sieve_limit: flags.sieve_limit.or(file.sieve_limit).unwrap_or(10_000_000),
            precision_digits: flags.precision.or(file.precision_digits).unwrap_or(50),
            parallelism: flags.jobs.or(file.parallelism).unwrap_or(0),
            output: flags.format.or(file.output).unwrap_or_default(),
            bq,
            timings: file.timings.unwrap_or(false),
        };
        if cfg.precision_digits < 30 {
            bail!("precision must be at least 30 digits, got {}", cfg.precision_digits);
        }
        if cfg.sieve_limit < 2 {
            bail!("sieve limit must be at least 2, got {}", cfg.sieve_limit);
        }
        Ok(cfg)
    }
}

fn read_file(p: &Path) -> Result<FileConfig> {
    let text = std::fs::read_to_string(p).with_context(|| format!("reading config {}", p.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing config {}", p.display()))
}
