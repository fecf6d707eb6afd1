use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use goldbach_explicit::arith::{phi1_star, phi_star, CharacterGroup, SieveTable};
use goldbach_explicit::bounds::hp::{Ctx, R};
use goldbach_explicit::bounds::theorems::PropArgs;
use goldbach_explicit::bounds::region::{zero_region_bounds, CharClass, RegionArgs, RegionWhich};
use goldbach_explicit::bounds::{
    f_function, proposition_bound, theorem_bound, threshold, AssumptionConstants, FArgs, FWhich, PropMode,
    PropWhich, Provenance, ThmWhich, ThresholdKind,
};
use goldbach_explicit::goldbach::{
    goldbach_G, goldbach_g, summatory_s, summatory_s_characters, summatory_s_congruence, G_minus_J_sum,
    SummatoryResult,
};
use goldbach_explicit::verify::{self, VerifyConfig};
use goldbach_explicit::zeros::{load_zeros_path, Cutoff, ZeroSumResult, ZeroTable};
use serde_json::json;

use crate::config::CliConfig;
use crate::output::{self, breakdown, emit, render, Format, Out, Record};
use crate::{BoundCmd, CharsCmd, Cli, Cmd, Flags, GoldbachCmd, VerifyCmd, ZerosCmd};

struct Env {
    flags: Flags,
    cfg: CliConfig,
    ctx: Ctx,
}

impl Env {
    fn digits(&self) -> usize {
        self.cfg.precision_digits as usize
    }

    fn need<'a>(&self, v: &'a Option<String>, name: &str) -> Result<&'a str> {
        v.as_deref().ok_or_else(|| anyhow!("--{name} is required"))
    }

    fn x_int(&self) -> Result<usize> {
        parse_int(self.need(&self.flags.x, "x")?, "x")
    }

    fn q(&self) -> Result<u64> {
        let q = self.flags.q.ok_or_else(|| anyhow!("--q is required"))?;
        if q == 0 {
            bail!("--q must be positive");
        }
        Ok(q)
    }

    fn which(&self) -> Result<&str> {
        self.need(&self.flags.which, "which")
    }

    fn real(&self, v: &Option<String>) -> Result<Option<R>> {
        v.as_deref().map(|s| self.ctx.parse(s).with_context(|| format!("bad number {s:?}"))).transpose()
    }

    fn f64_flag(&self, v: &Option<String>, name: &str) -> Result<f64> {
        let s = self.need(v, name)?;
        s.parse::<f64>().with_context(|| format!("--{name}: bad number {s:?}"))
    }

    /// Sieve covering `n`, refused beyond the configured limit.
    fn sieve(&self, n: usize) -> Result<SieveTable> {
        if n > self.cfg.sieve_limit {
            bail!("x = {n} exceeds the sieve limit {}; raise --sieve-limit", self.cfg.sieve_limit);
        }
        Ok(SieveTable::build(n.max(2))?)
    }

    fn zeros(&self) -> Result<ZeroTable> {
        let p = self.cfg.zero_file.as_ref().ok_or_else(|| anyhow!("no zero table: pass --zeros or set GOLDBACH_ZEROS"))?;
        Ok(load_zeros_path(p)?)
    }
}

/// Integers may be written as 100000 or 1e5.
fn parse_int(s: &str, name: &str) -> Result<usize> {
    if let Ok(n) = s.parse::<usize>() {
        return Ok(n);
    }
    let v: f64 = s.parse().with_context(|| format!("--{name}: bad integer {s:?}"))?;
    if v < 0.0 || v.fract() != 0.0 || v > 9.007_199_254_740_992e15 {
        bail!("--{name}: {s} is not a non-negative integer");
    }
    Ok(v as usize)
}

fn split_selector(s: &str) -> (&str, Option<&str>) {
    match s.split_once(':') {
        Some((a, b)) => (a, Some(b)),
        None => (s, None),
    }
}

pub fn run(cli: Cli) -> Result<u8> {
    let cfg = CliConfig::resolve(&cli.flags)?;
    let ctx = Ctx::new(cfg.precision_digits)?;
    let env = Env { flags: cli.flags, cfg, ctx };
    if env.cfg.parallelism > 0 {
        // Only the first call can set the global pool.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(env.cfg.parallelism).build_global();
    }
    let out = match cli.cmd {
        Cmd::Sieve => sieve(&env)?,
        Cmd::Goldbach { cmd } => goldbach(&env, cmd)?,
        Cmd::Sum => goldbach(&env, GoldbachCmd::Sum)?,
        Cmd::Chars { cmd } => chars(&env, cmd)?,
        Cmd::Zeros { cmd } => zeros(&env, cmd)?,
        Cmd::Bound { cmd } => bound(&env, cmd)?,
        Cmd::Verify { cmd } => return verify_cmd(&env, cmd),
    };
    emit(&render(&out, env.cfg.output)?, env.flags.out.as_deref())?;
    Ok(0)
}

fn sieve(env: &Env) -> Result<Out> {
    let x = env.x_int()?;
    let s = env.sieve(x)?;
    let primes = (2..=x).filter(|&n| s.is_prime(n)).count();
    let powers = s.prime_powers().iter().filter(|&&p| (p as usize) <= x).count();
    Ok(Record::new("sieve")
        .int("x", x as u64)
        .num("psi", s.psi(x))
        .int("pi", primes as u64)
        .int("prime_powers", powers as u64)
        .done())
}

fn summatory(command: &str, r: &SummatoryResult, extra: Vec<(&str, u64)>) -> Out {
    let mut rec = Record::new(command).int("x", r.x);
    for (k, v) in extra {
        rec = rec.int(k, v);
    }
    rec = rec.num("value", r.value);
    if r.imag != 0.0 {
        rec = rec.num("imag", r.imag);
    }
    if let Some(d) = &r.decomposition {
        for (k, v) in d {
            rec = rec.num(k, *v);
        }
    }
    rec.text("method", serde_json::to_value(r.method).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default())
        .notes(&r.notes)
        .done()
}

fn chi_pair(s: &str) -> Result<(usize, usize)> {
    let (a, b) = s.split_once(',').ok_or_else(|| anyhow!("--chi-index must be i,j for sum-characters"))?;
    Ok((parse_int(a.trim(), "chi-index")?, parse_int(b.trim(), "chi-index")?))
}

fn goldbach(env: &Env, cmd: GoldbachCmd) -> Result<Out> {
    let x = env.x_int()?;
    let sieve = env.sieve(x)?;
    Ok(match cmd {
        GoldbachCmd::Pairs => Record::new("goldbach g").int("n", x as u64).int("g", goldbach_g(x, &sieve)?).done(),
        GoldbachCmd::Weighted => Record::new("goldbach G").int("n", x as u64).num("G", goldbach_G(x, &sieve)?).done(),
        GoldbachCmd::Sum => summatory("goldbach sum", &summatory_s(x, &sieve)?, vec![]),
        GoldbachCmd::SumCongruence => {
            let q = env.q()?;
            let a = env.flags.a.ok_or_else(|| anyhow!("--a is required"))?;
            let b = env.flags.b.ok_or_else(|| anyhow!("--b is required"))?;
            let r = summatory_s_congruence(x, q, a, b, &sieve)?;
            summatory("goldbach sum-congruence", &r, vec![("q", q), ("a", a), ("b", b)])
        }
        GoldbachCmd::SumCharacters => {
            let q = env.q()?;
            let (i, j) = chi_pair(env.need(&env.flags.chi_index, "chi-index")?)?;
            let g = CharacterGroup::new(q)?;
            let r = summatory_s_characters(x, g.get(i)?, g.get(j)?, &sieve)?;
            summatory("goldbach sum-characters", &r, vec![("q", q), ("chi1", i as u64), ("chi2", j as u64)])
        }
        GoldbachCmd::GMinusJ => {
            let q = env.q()?;
            let c = env.flags.c.ok_or_else(|| anyhow!("--c is required"))?;
            summatory("goldbach g-minus-j", &G_minus_J_sum(x, q, c, &sieve)?, vec![("q", q), ("c", c)])
        }
    })
}

fn chars(env: &Env, cmd: CharsCmd) -> Result<Out> {
    let q = env.q()?;
    Ok(match cmd {
        CharsCmd::List => {
            let g = CharacterGroup::new(q)?;
            let infos: Vec<_> = g.characters.iter().map(|c| c.info()).collect();
            let rows = infos
                .iter()
                .map(|c| {
                    vec![
                        c.index.to_string(),
                        c.conductor.to_string(),
                        c.order.to_string(),
                        c.parity.to_string(),
                        c.principal.to_string(),
                        c.real.to_string(),
                        c.primitive.to_string(),
                    ]
                })
                .collect();
            let header = ["index", "conductor", "order", "parity", "principal", "real", "primitive"];
            Out {
                json: json!({ "command": "chars list", "q": output::int(q), "characters": infos }),
                header: header.iter().map(|s| s.to_string()).collect(),
                rows,
            }
        }
        CharsCmd::Eval => {
            let i = parse_int(env.need(&env.flags.chi_index, "chi-index")?, "chi-index")?;
            let n = env.x_int()? as u64;
            let g = CharacterGroup::new(q)?;
            let v = g.get(i)?.value(n);
            Record::new("chars eval").int("q", q).int("index", i as u64).int("n", n).num("re", v.re).num("im", v.im).done()
        }
        CharsCmd::PhiStar => {
            Record::new("chars phi-star").int("q", q).int("phi_star", phi_star(q)).int("phi1_star", phi1_star(q)).done()
        }
    })
}

fn zero_sum(command: &str, r: &ZeroSumResult) -> Out {
    let mut rec = Record::new(command).num("arg", r.arg).num("value", r.value);
    if let Some(t) = r.tail {
        rec = rec.num("tail", t).num("value_plus_tail", r.value + t);
    }
    rec.int("terms_used", r.terms_used as u64).flag("doubled", r.doubled).done()
}

fn zeros(env: &Env, cmd: ZerosCmd) -> Result<Out> {
    let z = env.zeros()?;
    Ok(match cmd {
        ZerosCmd::Ingest => {
            let mut rec = Record::new("zeros ingest")
                .text("source", z.source.clone())
                .int("count", z.count() as u64)
                .num("height", z.height);
            if let Some(m) = z.modulus {
                rec = rec.int("modulus", m);
            }
            if let Some(c) = z.character {
                rec = rec.int("character", c);
            }
            rec.done()
        }
        ZerosCmd::Count => {
            let t = env.f64_flag(&env.flags.t, "T")?;
            Record::new("zeros count")
                .num("T", t)
                .int("positive_le_T", z.count_le(t)? as u64)
                .int("N_T", 2 * z.count_le(t)? as u64)
                .int("interval_T_T1", z.count_interval(t).map(|n| n as u64).unwrap_or(0))
                .done()
        }
        ZerosCmd::Sum => {
            let t = env.f64_flag(&env.flags.t, "T")?;
            let r = match env.which()? {
                "inv-rho" => z.sum_inv_rho(t)?,
                "inv-gamma-sq" => z.sum_inv_gamma_sq(t)?,
                "inv-rho-rho1" => z.sum_inv_rho_rho1(Cutoff::AbsRho(t))?,
                "H" | "h" => z.H_truncated(env.f64_flag(&env.flags.x, "x")?, Cutoff::Gamma(t))?,
                other => bail!("unknown zero sum {other:?}; use inv-rho, inv-gamma-sq, inv-rho-rho1 or H"),
            };
            zero_sum("zeros sum", &r)
        }
        ZerosCmd::ExplicitPsi => {
            let u = env.f64_flag(&env.flags.u, "u")?;
            let t = env.f64_flag(&env.flags.t, "T")?;
            let r = z.psi_explicit_truncated(u, t)?;
            zero_sum("zeros explicit-psi", &r)
        }
    })
}

fn constants(env: &Env) -> Result<AssumptionConstants> {
    Ok(AssumptionConstants::for_modulus(&env.ctx, env.flags.q.unwrap_or(1))?)
}

fn bound(env: &Env, cmd: BoundCmd) -> Result<Out> {
    let d = env.digits();
    Ok(match cmd {
        BoundCmd::F => {
            let which = FWhich::from_str(env.which()?)?;
            let k = constants(env)?;
            let args = FArgs {
                x0: Some(env.real(&env.flags.x)?.unwrap_or_else(|| k.x0.clone())),
                t: env.real(&env.flags.t)?,
                c: env.flags.c,
                phi: None,
            };
            breakdown("bound f", &f_function(which, &k, &args)?, d)
        }
        BoundCmd::Theorem => {
            let which = ThmWhich::from_str(env.which()?)?;
            let log_x = env.real(&env.flags.log_x)?.ok_or_else(|| anyhow!("--log-x is required"))?;
            breakdown("bound theorem", &theorem_bound(&env.ctx, which, &log_x, env.flags.q)?, d)
        }
        BoundCmd::Proposition => {
            let (name, mode) = split_selector(env.which()?);
            let which = PropWhich::from_str(name)?;
            let log_x = env.real(&env.flags.log_x)?.ok_or_else(|| anyhow!("--log-x is required"))?;
            let k = constants(env)?;
            let mut args = PropArgs::new(log_x);
            args.a = env.flags.a;
            args.b = env.flags.b;
            args.c = env.flags.c;
            args.mode = mode.map(PropMode::from_str).transpose()?.unwrap_or_default();
            args.bq = env.cfg.bq.value(&env.ctx)?;
            breakdown("bound proposition", &proposition_bound(which, &k, &args)?, d)
        }
        BoundCmd::Region => {
            let (name, class) = split_selector(env.which()?);
            let which = RegionWhich::from_str(name)?;
            let class = class.map(CharClass::from_str).transpose()?;
            let args = RegionArgs {
                q: env.flags.q,
                t: env.real(&env.flags.t)?,
                u: env.real(&env.flags.u)?,
                x: env.real(&env.flags.x)?,
                class,
                with_siegel: class.is_some_and(|c| c.is_real_nonprincipal()),
            };
            breakdown("bound region", &zero_region_bounds(&env.ctx, which, &args)?, d)
        }
        BoundCmd::Threshold => {
            let kind = ThresholdKind::from_str(env.which()?)?;
            let r = threshold(&env.ctx, kind, env.flags.q)?;
            let mut rec = Record::new("bound threshold").text("kind", kind.name()).hp("log_x", &r.log_x, d, Provenance::Computed);
            if let Some(x) = &r.x {
                rec = rec.hp("x", x, d, Provenance::Computed);
            }
            if let Some(c) = &r.c {
                rec = rec.hp("c", c, d, Provenance::Computed);
            }
            rec.num("branch", f64::from(r.branch.index()))
                .hp("w_argument", &r.w_argument, d, Provenance::Computed)
                .hp("w_value", &r.w_value, d, Provenance::Computed)
                .num("residual", r.residual)
                .done()
        }
    })
}

fn verify_cmd(env: &Env, cmd: VerifyCmd) -> Result<u8> {
    let config = VerifyConfig {
        zero_file: env.cfg.zero_file.clone(),
        sieve_limit: env.cfg.sieve_limit,
        precision_digits: env.cfg.precision_digits,
        jobs: env.cfg.parallelism,
        timings: env.cfg.timings,
    };
    let res = verify::load_resources(&config)?;
    let report = match cmd {
        VerifyCmd::All => verify::run_all_with(&config, &res)?,
        VerifyCmd::One => verify::run_one(&config, &res, env.which()?)?,
    };
    let text = match env.cfg.output {
        Format::Json => report.to_json_string(),
        Format::Csv => report.to_csv()?,
        Format::Table => {
            let header: Vec<String> = ["id", "status", "worst_ratio", "points"].iter().map(|s| s.to_string()).collect();
            let rows = report
                .checks
                .iter()
                .map(|c| {
                    vec![
                        c.id.clone(),
                        serde_json::to_value(c.status).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default(),
                        c.worst_ratio.map(|r| format!("{r:.6e}")).unwrap_or_default(),
                        c.grid_points.to_string(),
                    ]
                })
                .collect();
            render(&Out { json: json!(null), header, rows }, Format::Table)?
        }
    };
    emit(&text, env.flags.out.as_deref())?;
    for c in report.checks.iter().filter(|c| c.status == verify::Status::Fail) {
        eprintln!("FAIL {}: worst ratio {:?}", c.id, c.worst_ratio);
    }
    Ok(if report.any_failed() { 1 } else { 0 })
}
