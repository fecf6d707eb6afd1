//! Tables of nontrivial zero ordinates and the sums built on them.
//!
//! Only positive ordinates are stored and every zero is taken on the
//! critical line, ρ = 1/2 + iγ. Sums over all zeros are twice the one-sided
//! sums; results say so through [`ZeroSumResult::doubled`].

pub mod phase;

use std::io::{BufRead, BufReader, Read};
use std::path::Path;
use std::sync::OnceLock;

use serde::Serialize;

use crate::arith::sum::{chunked_sum, Neumaier};
use crate::error::{Error, Result};

/// Height up to which the zeros of ζ are known to lie on the critical line.
pub const MAX_HEIGHT: f64 = 3e12;

const CHUNK: usize = 1 << 14;

#[derive(Debug)]
pub struct ZeroTable {
    gammas: Vec<f64>,
    pub height: f64,
    pub source: String,
    pub modulus: Option<u64>,
    pub character: Option<u64>,
    inv_rho: OnceLock<Vec<f64>>,
    inv_rho_rho1: OnceLock<Vec<f64>>,
    inv_gamma_sq: OnceLock<Vec<f64>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SumKind {
    InvRho,
    InvRhoSq,
    InvRhoRho1,
    H,
    ExplicitPsi,
}

/// Truncation of a zero sum.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Cutoff {
    /// |ρ| < T.
    AbsRho(f64),
    /// |γ| < T.
    Gamma(f64),
}

#[derive(Clone, Debug, Serialize)]
pub struct ZeroSumResult {
    pub kind: SumKind,
    pub arg: f64,
    pub value: f64,
    /// Analytic bound for the part of the sum beyond the table.
    pub tail: Option<f64>,
    pub terms_used: usize,
    /// Whether the value counts both ±γ.
    pub doubled: bool,
}

fn format_err<T>(line: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Format { line, msg: msg.into() })
}

fn significant_digits(s: &str) -> usize {
    let mantissa = s.split(['e', 'E']).next().unwrap_or("");
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    digits.trim_start_matches('0').len()
}

/// Parses a zero table: optional `#` headers, then one ascending ordinate per line.
pub fn load_zeros<R: Read>(source: R) -> Result<ZeroTable> {
    let reader = BufReader::new(source);
    let mut gammas: Vec<f64> = Vec::new();
    let mut height: Option<(f64, usize)> = None;
    let mut src = String::new();
    let mut modulus = None;
    let mut character = None;
    let mut lines = 0usize;
    for (i, line) in reader.lines().enumerate() {
        let lineno = i + 1;
        lines = lineno;
        let line = line?;
        let line = line.trim_end_matches('\r').trim();
        if line.is_empty() {
            continue;
        }
        if let Some(h) = line.strip_prefix('#') {
            let h = h.trim();
            if let Some((key, val)) = h.split_once(':') {
                let val = val.trim();
                match key.trim() {
                    "height" => {
                        let v: f64 = val.parse().or_else(|_| format_err(lineno, format!("bad height {val:?}")))?;
                        height = Some((v, lineno));
                    }
                    "source" => src = val.to_string(),
                    "modulus" => {
                        modulus = Some(val.parse().or_else(|_| format_err(lineno, format!("bad modulus {val:?}")))?)
                    }
                    "character" => {
                        character =
                            Some(val.parse().or_else(|_| format_err(lineno, format!("bad character {val:?}")))?)
                    }
                    _ => {}
                }
            }
            continue;
        }
        let g: f64 = match line.parse() {
            Ok(g) => g,
            Err(_) => return format_err(lineno, format!("not a decimal ordinate: {line:?}")),
        };
        if !g.is_finite() || g <= 0.0 {
            return format_err(lineno, format!("ordinate must be positive, got {line}"));
        }
        if significant_digits(line) < 9 {
            return format_err(lineno, format!("ordinate {line} has fewer than 9 significant digits"));
        }
        if let Some(&prev) = gammas.last() {
            if g <= prev {
                return format_err(lineno, format!("ordinates not strictly increasing: {g} after {prev}"));
            }
        }
        gammas.push(g);
    }
    let Some(&last) = gammas.last() else {
        return format_err(lines + 1, "no ordinates in zero table");
    };
    let zeta = modulus.map_or(true, |q| q == 1);
    if zeta && !(gammas[0] > 14.0 && gammas[0] < 15.0) {
        return format_err(1, format!("first zeta ordinate should lie in (14, 15), got {}", gammas[0]));
    }
    let height = match height {
        None => last,
        Some((h, lineno)) => {
            if h > last {
                return format_err(lineno, format!("height {h} exceeds the last ordinate {last}"));
            }
            if h <= 0.0 {
                return format_err(lineno, "height must be positive");
            }
            h
        }
    };
    if height > MAX_HEIGHT {
        return Err(Error::Format { line: 0, msg: format!("height {height} is beyond the verified range {MAX_HEIGHT}") });
    }
    Ok(ZeroTable {
        gammas,
        height,
        source: src,
        modulus,
        character,
        inv_rho: OnceLock::new(),
        inv_rho_rho1: OnceLock::new(),
        inv_gamma_sq: OnceLock::new(),
    })
}

pub fn load_zeros_path(path: impl AsRef<Path>) -> Result<ZeroTable> {
    let f = std::fs::File::open(path.as_ref())
        .map_err(|e| Error::Config(format!("cannot open zero table {}: {e}", path.as_ref().display())))?;
    load_zeros(f)
}

fn prefix<F: Fn(f64) -> f64>(gammas: &[f64], f: F) -> Vec<f64> {
    let mut acc = Neumaier::new();
    let mut out = Vec::with_capacity(gammas.len() + 1);
    out.push(0.0);
    for &g in gammas {
        acc.add(f(g));
        out.push(acc.value());
    }
    out
}

#[inline]
fn abs_rho(g: f64) -> f64 {
    (0.25 + g * g).sqrt()
}

#[inline]
fn abs_rho1(g: f64) -> f64 {
    (2.25 + g * g).sqrt()
}

impl ZeroTable {
    pub fn gammas(&self) -> &[f64] {
        &self.gammas
    }

    pub fn count(&self) -> usize {
        self.gammas.len()
    }

    fn cover(&self, t: f64) -> Result<()> {
        if t > self.height || t.is_nan() {
            return Err(Error::Coverage { t, height: self.height });
        }
        Ok(())
    }

    /// Number of ordinates γ < T.
    pub fn count_below(&self, t: f64) -> Result<usize> {
        self.cover(t)?;
        Ok(self.gammas.partition_point(|&g| g < t))
    }

    /// Number of ordinates γ ≤ T.
    pub fn count_le(&self, t: f64) -> Result<usize> {
        self.cover(t)?;
        Ok(self.gammas.partition_point(|&g| g <= t))
    }

    /// Number of zeros with T < |γ| ≤ T + 1, both signs.
    pub fn count_interval(&self, t: f64) -> Result<usize> {
        Ok(2 * (self.count_le(t + 1.0)? - self.count_le(t)?))
    }

    pub fn is_ordinate(&self, t: f64) -> bool {
        self.gammas.binary_search_by(|g| g.total_cmp(&t)).is_ok()
    }

    /// Number of terms admitted by a cutoff.
    pub fn terms(&self, cutoff: Cutoff) -> Result<usize> {
        match cutoff {
            Cutoff::Gamma(t) => self.count_below(t),
            Cutoff::AbsRho(t) => {
                self.cover((t * t - 0.25).max(0.0).sqrt())?;
                Ok(self.gammas.partition_point(|&g| abs_rho(g) < t))
            }
        }
    }

    /// Σ_{0<γ≤T} 1/|ρ|.
    pub fn sum_inv_rho(&self, t: f64) -> Result<ZeroSumResult> {
        let n = self.count_le(t)?;
        let p = self.inv_rho.get_or_init(|| prefix(&self.gammas, |g| 1.0 / abs_rho(g)));
        Ok(ZeroSumResult { kind: SumKind::InvRho, arg: t, value: p[n], tail: None, terms_used: n, doubled: false })
    }

    /// Σ_{γ>T} 1/γ² over the table, with the analytic tail log H/(2πH) beyond the height H.
    pub fn sum_inv_gamma_sq(&self, from_t: f64) -> Result<ZeroSumResult> {
        if from_t < 0.0 {
            return Err(Error::Domain(format!("from_T must be nonnegative, got {from_t}")));
        }
        self.cover(from_t)?;
        let suffix = self.inv_gamma_sq.get_or_init(|| {
            let covered = self.gammas.partition_point(|&g| g <= self.height);
            let mut acc = Neumaier::new();
            let mut out = vec![0.0; covered + 1];
            for i in (0..covered).rev() {
                let g = self.gammas[i];
                acc.add(1.0 / (g * g));
                out[i] = acc.value();
            }
            out
        });
        let start = self.gammas.partition_point(|&g| g <= from_t);
        let h = self.height;
        Ok(ZeroSumResult {
            kind: SumKind::InvRhoSq,
            arg: from_t,
            value: suffix[start.min(suffix.len() - 1)],
            tail: Some(h.ln() / (2.0 * std::f64::consts::PI * h)),
            terms_used: suffix.len() - 1 - start.min(suffix.len() - 1),
            doubled: false,
        })
    }

    /// Σ 1/(|ρ||ρ+1|) over both signs of γ.
    pub fn sum_inv_rho_rho1(&self, cutoff: Cutoff) -> Result<ZeroSumResult> {
        let n = self.terms(cutoff)?;
        let p = self.inv_rho_rho1.get_or_init(|| prefix(&self.gammas, |g| 1.0 / (abs_rho(g) * abs_rho1(g))));
        Ok(ZeroSumResult {
            kind: SumKind::InvRhoRho1,
            arg: cutoff_value(cutoff),
            value: 2.0 * p[n],
            tail: None,
            terms_used: n,
            doubled: true,
        })
    }

    /// H(x) = Σ_ρ x^{ρ+1}/(ρ(ρ+1)) with conjugate pairs combined.
    #[allow(non_snake_case)]
    pub fn H_truncated(&self, x: f64, cutoff: Cutoff) -> Result<ZeroSumResult> {
        if x < 2.0 {
            return Err(Error::Domain(format!("H(x) needs x ≥ 2, got {x}")));
        }
        let n = self.terms(cutoff)?;
        let ln = phase::ln_dd(x);
        let x32 = x * x.sqrt();
        let g = &self.gammas;
        let s = chunked_sum(n, CHUNK, |i| {
            let gm = g[i];
            let (c, sn) = phase::cis(gm, ln);
            let a = 0.75 - gm * gm;
            let b = 2.0 * gm;
            2.0 * (a * c + b * sn) / (a * a + b * b)
        });
        Ok(ZeroSumResult {
            kind: SumKind::H,
            arg: x,
            value: x32 * s,
            tail: None,
            terms_used: n,
            doubled: true,
        })
    }

    /// Σ_{|γ|<T} u^ρ/ρ (real, conjugate pairs combined).
    pub fn zero_sum_u_rho(&self, u: f64, t: f64) -> Result<(f64, usize)> {
        let n = self.count_below(t)?;
        let ln = phase::ln_dd(u);
        let g = &self.gammas;
        let s = chunked_sum(n, CHUNK, |i| {
            let gm = g[i];
            let (c, sn) = phase::cis(gm, ln);
            2.0 * (0.5 * c + gm * sn) / (0.25 + gm * gm)
        });
        Ok((u.sqrt() * s, n))
    }

    /// u − log 2π − Σ_{|γ|<T} u^ρ/ρ.
    pub fn psi_explicit_truncated(&self, u: f64, t: f64) -> Result<ZeroSumResult> {
        if u < 2.0 {
            return Err(Error::Domain(format!("explicit formula needs u ≥ 2, got {u}")));
        }
        let (z, n) = self.zero_sum_u_rho(u, t)?;
        let value = u - (2.0 * std::f64::consts::PI).ln() - z;
        Ok(ZeroSumResult { kind: SumKind::ExplicitPsi, arg: u, value, tail: None, terms_used: n, doubled: true })
    }
}

fn cutoff_value(c: Cutoff) -> f64 {
    match c {
        Cutoff::AbsRho(t) | Cutoff::Gamma(t) => t,
    }
}
