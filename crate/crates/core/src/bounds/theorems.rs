//! Theorem coefficients, proposition bounds and the log x thresholds.
//!
//! Every bound is returned as a coefficient with a `scale` label, because
//! x itself is far outside any floating-point range at the x these
//! statements need. The bound is `total · scale`.

use std::str::FromStr;

use serde::Serialize;

use super::constants::{b_star, AssumptionConstants, Context};
use super::ffun::FPoint;
use super::hp::{Ctx, R};
use super::lambert::{lambert_w, Branch};
use super::region::psi1_formula;
use super::BoundBreakdown;
use crate::arith::{phi1_star, small_multiplicative};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ThmWhich {
    Thm1,
    Thm2,
    Thm3,
    Thm4,
}

impl ThmWhich {
    pub const ALL: [ThmWhich; 4] = [ThmWhich::Thm1, ThmWhich::Thm2, ThmWhich::Thm3, ThmWhich::Thm4];

    pub fn name(self) -> &'static str {
        match self {
            ThmWhich::Thm1 => "thm1",
            ThmWhich::Thm2 => "thm2",
            ThmWhich::Thm3 => "thm3",
            ThmWhich::Thm4 => "thm4",
        }
    }

    /// The published coefficient.
    pub fn packaged(self) -> &'static str {
        match self {
            ThmWhich::Thm1 => "6.794",
            ThmWhich::Thm2 => "13.149",
            ThmWhich::Thm3 => "5.805",
            ThmWhich::Thm4 => "7.246",
        }
    }
}

impl FromStr for ThmWhich {
    type Err = Error;
    fn from_str(s: &str) -> Result<ThmWhich> {
        ThmWhich::ALL
            .into_iter()
            .find(|w| w.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown theorem {s:?}")))
    }
}

/// Modulus at which the q-theorems attain their packaged coefficients.
pub const THM_Q_DEFAULT: u64 = 400_001;

fn q_theorem_conditions(q: u64) -> (bool, Vec<String>) {
    let mut notes = Vec::new();
    if q <= 400_000 {
        notes.push(format!("hypothesis q > 4e5 fails for q = {q}"));
    }
    if q % 4 == 2 {
        notes.push(format!("hypothesis q not 2 mod 4 fails for q = {q}"));
    }
    (notes.is_empty(), notes)
}

/// Recomputes a theorem coefficient from the proposition formulas.
///
/// For thm1 and thm2 the ζ-variant f₇,ζ is evaluated at T = T₁; the
/// value at T = T₀ is reported in `extras`. For thm3 and thm4, φ(q) is
/// replaced by the lower bound q/RHS for φ₁*(q).
pub fn theorem_bound(ctx: &Ctx, which: ThmWhich, log_x: &R, q: Option<u64>) -> Result<BoundBreakdown> {
    let mut b = match which {
        ThmWhich::Thm1 | ThmWhich::Thm2 => {
            if let Some(q) = q.filter(|&q| q != 1) {
                return Err(Error::Domain(format!("{} is a statement about q = 1, got q = {q}", which.name())));
            }
            let k = AssumptionConstants::zeta(ctx);
            let p1 = FPoint::new(&k, k.x0.clone(), k.t1.clone(), ctx.int(1))?;
            let p0 = FPoint::new(&k, k.x0.clone(), k.t0.clone(), ctx.int(1))?;
            let f1 = p1.f1();
            let mut parts = vec![("f1".to_string(), f1.clone())];
            let mut base = f1.clone();
            if which == ThmWhich::Thm1 {
                parts.push(("d8_term".into(), &k.d8 * 2.0));
                base = base + &k.d8 * 2.0;
            }
            parts.push(("f7z_over_log_x".into(), p1.f7z() / log_x));
            let mut b = BoundBreakdown::from_parts(which.name(), parts);
            b.extras.push(("coefficient_with_T0".into(), base + p0.f7z() / log_x));
            b.notes.push("f7z is evaluated at T = T1; coefficient_with_T0 evaluates it at T = T0".into());
            let (met, scale) = if which == ThmWhich::Thm1 {
                let thr = threshold(ctx, ThresholdKind::Thm1LogX, None)?;
                (*log_x >= thr.log_x, "x^(B_1*(x)+1)")
            } else {
                (*log_x >= ctx.lit("1e6"), "(log x)^5 x^(2 B_1*(x))")
            };
            b.hypotheses_met = met;
            b.scale = scale.into();
            b.inputs.push(("T0".into(), k.t0.clone()));
            b.inputs.push(("T1".into(), k.t1.clone()));
            b.inputs.push(("x0".into(), k.x0.clone()));
            b
        }
        ThmWhich::Thm3 | ThmWhich::Thm4 => {
            let q = q.unwrap_or(THM_Q_DEFAULT);
            let k = AssumptionConstants::general(ctx, q)?;
            let phi1 = ctx.int(q as i64) / psi1_formula(ctx, q);
            let p0 = FPoint::new(&k, k.x0.clone(), k.t0.clone(), phi1.clone())?;
            let p1 = FPoint::new(&k, k.x0.clone(), k.t1.clone(), phi1.clone())?;
            let f1 = p1.f1();
            let (met, mut notes) = q_theorem_conditions(q);
            let mut b = if which == ThmWhich::Thm3 {
                let d8 = k.d8_primitive(&phi1) * 2.0 / &phi1;
                let base = &f1 + &d8;
                let mut b = BoundBreakdown::from_parts(
                    "thm3",
                    vec![("f1", f1), ("d8_term", d8), ("f7_over_log_x", p0.f7() / log_x)],
                );
                b.extras.push(("coefficient_with_T1".into(), base + p1.f7() / log_x));
                let thr = threshold(ctx, ThresholdKind::Thm3LogX, None)?;
                if *log_x < thr.log_x {
                    notes.push("log x is below the thm3 threshold".into());
                }
                b.hypotheses_met = met && *log_x >= thr.log_x;
                b.scale = "x^(B_q*(x)+1)".into();
                let bs = b_star(log_x, &k, &ctx.int(1))?;
                let llx = log_x.ln();
                b.extras.push(("removed_loglog_term".into(), ctx.lit("25.090") * (llx.sq() / log_x).sq()));
                let small = (-(bs + 1.0) / 2.0 * log_x + llx).exp() * ctx.lit("2.001");
                b.extras.push(("removed_sqrt_term".into(), small));
                b.notes.push("f7 is evaluated at T = T0; coefficient_with_T1 evaluates it at T = T1".into());
                b
            } else {
                let base = f1.clone();
                let mut b = BoundBreakdown::from_parts("thm4", vec![("f1", f1), ("f7_over_log_x", p1.f7() / log_x)]);
                b.extras.push(("coefficient_with_T0".into(), base + p0.f7() / log_x));
                if *log_x < 1e8 {
                    notes.push("hypothesis log x ≥ 1e8 fails".into());
                }
                b.hypotheses_met = met && *log_x >= 1e8;
                b.scale = "(log x)^5 x^(2 B_q*(x))".into();
                b
            };
            b.notes.push("phi(q) is replaced by the lower bound q/RHS for phi_1*(q)".into());
            b.notes.append(&mut notes);
            b.inputs.push(("q".into(), ctx.int(q as i64)));
            b.inputs.push(("phi1_star_lower".into(), phi1));
            b.inputs.push(("T0".into(), k.t0.clone()));
            b.inputs.push(("T1".into(), k.t1.clone()));
            b.inputs.push(("x0".into(), k.x0.clone()));
            b
        }
    };
    b.packaged = Some(ctx.lit(which.packaged()));
    b.inputs.insert(0, ("log_x".into(), log_x.clone()));
    Ok(b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PropWhich {
    #[serde(rename = "firstMainS")]
    FirstMainS,
    #[serde(rename = "firstMain")]
    FirstMain,
    #[serde(rename = "SxSecond")]
    SxSecond,
    #[serde(rename = "Sxqab")]
    Sxqab,
    #[serde(rename = "JG")]
    JG,
}

impl PropWhich {
    pub const ALL: [PropWhich; 5] =
        [PropWhich::FirstMainS, PropWhich::FirstMain, PropWhich::SxSecond, PropWhich::Sxqab, PropWhich::JG];

    pub fn name(self) -> &'static str {
        match self {
            PropWhich::FirstMainS => "firstMainS",
            PropWhich::FirstMain => "firstMain",
            PropWhich::SxSecond => "SxSecond",
            PropWhich::Sxqab => "Sxqab",
            PropWhich::JG => "JG",
        }
    }
}

impl FromStr for PropWhich {
    type Err = Error;
    fn from_str(s: &str) -> Result<PropWhich> {
        PropWhich::ALL
            .into_iter()
            .find(|w| w.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Domain(format!("unknown proposition {s:?}")))
    }
}

/// Variant of a proposition.
///
/// * `Standard`: the statement as given.
/// * `Simplified`: firstMain without the max and the two x-terms (q ≤ log x).
/// * `Primitive`: φ(q) → φ₁*(q) and, for firstMain, the 82.366 term.
/// * `PrimitiveLargeQ`: as `Primitive` with 25.090 and 2.001 (q > 4·10⁵).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PropMode {
    #[default]
    Standard,
    Simplified,
    Primitive,
    PrimitiveLargeQ,
}

impl FromStr for PropMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<PropMode> {
        match s {
            "standard" => Ok(PropMode::Standard),
            "simplified" => Ok(PropMode::Simplified),
            "primitive" => Ok(PropMode::Primitive),
            "primitive-large-q" => Ok(PropMode::PrimitiveLargeQ),
            _ => Err(Error::Domain(format!("unknown proposition mode {s:?}"))),
        }
    }
}

/// Arguments of [`proposition_bound`]. `a` and `b` only feed the
/// (ab, q) = 1 hypothesis check.
#[derive(Clone, Debug)]
pub struct PropArgs {
    pub log_x: R,
    pub a: Option<u64>,
    pub b: Option<u64>,
    pub c: Option<u64>,
    pub mode: PropMode,
    pub bq: R,
}

impl PropArgs {
    pub fn new(log_x: R) -> PropArgs {
        let one = log_x.zero_like() + 1.0;
        PropArgs { log_x, a: None, b: None, c: None, mode: PropMode::Standard, bq: one }
    }
}

struct Hyp {
    met: bool,
    notes: Vec<String>,
}

impl Hyp {
    fn check(&mut self, ok: bool, msg: &str) {
        if !ok {
            self.met = false;
            self.notes.push(format!("hypothesis fails: {msg}"));
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Evaluates a proposition bound. Each proposition uses the T that its
/// own statement names (T₀ or T₁).
pub fn proposition_bound(which: PropWhich, k: &AssumptionConstants, args: &PropArgs) -> Result<BoundBreakdown> {
    let ctx = k.ctx;
    let lx = &args.log_x;
    if *lx <= ctx.e() {
        return Err(Error::Domain(format!("{} needs log x > e", which.name())));
    }
    let q = k.q;
    let mode = args.mode;
    let primitive = matches!(mode, PropMode::Primitive | PropMode::PrimitiveLargeQ);
    let phi = if primitive { ctx.int(phi1_star(q) as i64) } else { k.phi() };
    let bs = b_star(lx, k, &args.bq)?;
    let mut h = Hyp { met: true, notes: Vec::new() };
    let ln = |v: &R| v.ln();
    let x0_ok = k.x0 >= ctx.e_to_e().max(&k.t1) * (1.0 - 1e-40);
    let llx = lx.ln();
    let zeta_only = matches!(which, PropWhich::FirstMainS | PropWhich::SxSecond);
    if zeta_only && k.context != Context::Zeta {
        h.check(false, "statement is for the zeta context (q = 1)");
    }
    if q > 1 && !zeta_only {
        h.check(q >= 83, "q ≥ 83");
        if let (Some(a), Some(b)) = (args.a, args.b) {
            h.check(gcd(a * b % q, q) == 1, "(ab, q) = 1");
        }
    }

    let mut b = match which {
        PropWhich::FirstMainS => {
            h.check(*lx >= ln(&ctx.int(83).max(&k.x0).max(&k.t0)), "x ≥ max{83, x0, T0}");
            h.check(x0_ok, "x0 ≥ max{e^e, T1}");
            let thr = threshold(&ctx, ThresholdKind::PropFirstMainSLogX, None).map(|t| t.log_x)?;
            h.check(*lx >= thr, "log x above the zero-free threshold");
            let p = FPoint::new(k, k.x0.clone(), k.t0.clone(), phi.clone())?;
            let mut b = BoundBreakdown::from_parts(
                "firstMainS",
                vec![("f1", p.f1()), ("d8_term", &k.d8 * 2.0), ("f7z_over_log_x", p.f7z() / lx)],
            );
            b.scale = "x^(B_1*(x)+1)".into();
            b.notes.push("f7z evaluated at T = T0 as stated".into());
            b
        }
        PropWhich::FirstMain => {
            h.check(*lx >= ln(&k.x0.max(&ctx.lit("4e15")).max(&k.q_real()).max(&k.t0)), "x ≥ max{x0, 4e15, q, T0}");
            h.check(x0_ok, "x0 ≥ max{e^e, T1}");
            if k.context == Context::GeneralQ {
                let thr = threshold(&ctx, ThresholdKind::PropFirstMainLogX, None).map(|t| t.log_x)?;
                h.check(*lx >= thr, "log x above the zero-free threshold");
            }
            let p = FPoint::new(k, k.x0.clone(), k.t0.clone(), phi.clone())?;
            let d8 = if primitive && q > 1 { k.d8_primitive(&phi) } else { k.d8.clone() };
            let mut parts: Vec<(String, R)> = vec![
                ("f1".into(), p.f1()),
                ("d8_term".into(), d8 * 2.0 / &phi),
                ("f7_over_log_x".into(), p.f7() / lx),
            ];
            if mode == PropMode::Simplified {
                h.check(k.q_real() <= *lx, "q ≤ log x for the simplified form");
            } else {
                let s: R = parts.iter().map(|(_, v)| v.clone()).sum();
                parts.push(("max_floor".into(), (1.0 - s).max(&ctx.int(0))));
                let (label, v) = match mode {
                    PropMode::Standard => {
                        ("loglog_term", (ctx.euler_gamma() * 2.0).exp() * 2.0 * (&llx / lx).sq())
                    }
                    PropMode::Primitive => ("loglog_sq_term", ctx.lit("82.366") * (llx.sq() / lx).sq()),
                    _ => {
                        h.check(q > 400_000, "q > 4e5 for the 25.090 constant");
                        ("loglog_sq_term", ctx.lit("25.090") * (llx.sq() / lx).sq())
                    }
                };
                parts.push((label.into(), v));
                let c = if mode == PropMode::PrimitiveLargeQ { "2.001" } else { "2.1" };
                let small = (-(&bs + 1.0) / 2.0 * lx + &llx).exp() * ctx.lit(c);
                parts.push(("sqrt_term".into(), small));
            }
            let mut b = BoundBreakdown::from_parts("firstMain", parts);
            b.scale = "x^(B_q*(x)+1)".into();
            b.notes.push("f7 evaluated at T = T0 as stated; Sxqab uses T1".into());
            b
        }
        PropWhich::SxSecond => {
            h.check(*lx >= ln(&ctx.int(83).max(&k.x0).max(&k.t0)), "x ≥ max{83, x0, T0}");
            h.check(x0_ok, "x0 ≥ max{e^e, T1}");
            let p = FPoint::new(k, k.x0.clone(), k.t0.clone(), phi.clone())?;
            let mut b = BoundBreakdown::from_parts(
                "SxSecond",
                vec![("f1_log5", p.f1() * lx.powi(5)), ("f7z_log4", p.f7z() * lx.powi(4))],
            );
            b.scale = "x^(2 B_1*(x))".into();
            b.notes.push("the range x ≥ {83, x0, T0} is read as x ≥ max{83, x0, T0}".into());
            b.notes.push("f7z evaluated at T = T0 as stated".into());
            b
        }
        PropWhich::Sxqab => {
            h.check(*lx >= ln(&k.q_real().max(&k.t0)), "x ≥ max{q, T0}");
            h.check(k.x0 >= ctx.e_to_e() * (1.0 - 1e-40), "x0 ≥ e^e");
            let p = FPoint::new(k, k.x0.clone(), k.t1.clone(), phi.clone())?;
            let mut b = BoundBreakdown::from_parts(
                "Sxqab",
                vec![("f1_log5", p.f1() * lx.powi(5)), ("f7_log4", p.f7() * lx.powi(4))],
            );
            b.scale = "x^(2 B_q*(x))".into();
            b.notes.push("f7 evaluated at T = T1 as stated; firstMain uses T0".into());
            b
        }
        PropWhich::JG => {
            let c = args.c.ok_or_else(|| Error::Domain("JG needs a positive integer c".into()))?;
            if c == 0 {
                return Err(Error::Domain("JG needs c ≥ 1".into()));
            }
            h.check(*lx >= ln(&k.q_real().max(&k.t0).max(&k.x0).max(&ctx.int(572))), "x ≥ max{q, T0, x0, 572}");
            h.check(x0_ok, "x0 ≥ max{e^e, T1}");
            let p = FPoint::new(k, k.x0.clone(), k.t1.clone(), phi.clone())?;
            let dq = ctx.int(small_multiplicative(q).d as i64);
            let second = p.f8() * lx.powi(5) * ((&bs * 2.0 - (&bs + 1.0)) * lx).exp();
            let mut b = BoundBreakdown::from_parts(
                "JG",
                vec![("d8_term", &k.d8 * 2.0 * &dq / &phi), ("f8_log5", second)],
            );
            b.scale = "x^(B_q*(x)+1)".into();
            b.inputs.push(("c".into(), ctx.int(c as i64)));
            b.inputs.push(("d(q)".into(), dq));
            b
        }
    };
    b.hypotheses_met = h.met;
    b.notes.extend(h.notes);
    if primitive {
        b.notes.push("phi(q) replaced by phi_1*(q)".into());
    }
    if let PropMode::Primitive | PropMode::PrimitiveLargeQ = mode {
        if which == PropWhich::FirstMain {
            b.notes.push("the loglog term uses ((log log x)^2 / log x)^2 as printed in the primitive remark".into());
        }
    }
    b.inputs.insert(0, ("log_x".into(), lx.clone()));
    b.inputs.push(("q".into(), k.q_real()));
    b.inputs.push(("B_q".into(), args.bq.clone()));
    b.inputs.push(("B_q*".into(), bs));
    b.inputs.push(("x0".into(), k.x0.clone()));
    b.inputs.push(("T0".into(), k.t0.clone()));
    b.inputs.push(("T1".into(), k.t1.clone()));
    Ok(b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ThresholdKind {
    Thm1LogX,
    Thm3LogX,
    PropFirstMainSLogX,
    PropFirstMainLogX,
    ZeroFreeX,
}

impl ThresholdKind {
    pub const ALL: [ThresholdKind; 5] = [
        ThresholdKind::Thm1LogX,
        ThresholdKind::Thm3LogX,
        ThresholdKind::PropFirstMainSLogX,
        ThresholdKind::PropFirstMainLogX,
        ThresholdKind::ZeroFreeX,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ThresholdKind::Thm1LogX => "thm1_logx",
            ThresholdKind::Thm3LogX => "thm3_logx",
            ThresholdKind::PropFirstMainSLogX => "prop_firstMainS_logx",
            ThresholdKind::PropFirstMainLogX => "prop_firstMain_logx",
            ThresholdKind::ZeroFreeX => "zero_free_x",
        }
    }
}

impl FromStr for ThresholdKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<ThresholdKind> {
        ThresholdKind::ALL
            .into_iter()
            .find(|w| w.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Domain(format!("unknown threshold {s:?}")))
    }
}

#[derive(Clone, Debug)]
pub struct ThresholdResult {
    pub kind: ThresholdKind,
    /// The log x threshold (for `ZeroFreeX`, log of the x threshold).
    pub log_x: R,
    /// The x threshold, when it is representable.
    pub x: Option<R>,
    pub branch: Branch,
    pub w_argument: R,
    pub w_value: R,
    /// Shape constant c in exp(−4W₋₁(−(4·5^{3/4}c^{3/4})^{−1})); absent for `ZeroFreeX`.
    pub c: Option<R>,
    /// Relative residual of the defining equation at the returned value.
    pub residual: f64,
}

fn log_threshold(ctx: &Ctx, kind: ThresholdKind, c: R) -> Result<ThresholdResult> {
    let five = ctx.int(5).pow(&ctx.lit("0.75"));
    let y = -(five * 4.0 * c.pow(&ctx.lit("0.75"))).recip();
    let w = lambert_w(ctx, Branch::Minus1, &y)?;
    let log_x = (-(&w * 4.0)).exp();
    let back = -log_x.ln() / 4.0 * log_x.pow(&ctx.lit("-0.25"));
    let residual = back.rel_diff(&y);
    Ok(ThresholdResult { kind, log_x, x: None, branch: Branch::Minus1, w_argument: y, w_value: w, c: Some(c), residual })
}

/// Evaluates one threshold. `q` is needed for `ZeroFreeX` only.
pub fn threshold(ctx: &Ctx, kind: ThresholdKind, q: Option<u64>) -> Result<ThresholdResult> {
    match kind {
        ThresholdKind::Thm1LogX => log_threshold(ctx, kind, ctx.lit("53.989")),
        ThresholdKind::Thm3LogX => {
            let c = ctx.lit("36.75") * (ctx.int(-2) / 3.0).exp() + ctx.lit("61.5");
            log_threshold(ctx, kind, c)
        }
        ThresholdKind::PropFirstMainSLogX => log_threshold(ctx, kind, AssumptionConstants::zeta(ctx).c2),
        ThresholdKind::PropFirstMainLogX => {
            let k = AssumptionConstants::general(ctx, q.unwrap_or(THM_Q_DEFAULT))?;
            let lx0 = k.x0.ln();
            let c = &k.c1 * 3.5 * (lx0.ln() / &lx0).pow(&(ctx.int(2) / 3.0)) + &k.c2;
            log_threshold(ctx, kind, c)
        }
        ThresholdKind::ZeroFreeX => {
            let q = q.ok_or_else(|| Error::Domain("zero_free_x needs q".into()))?;
            if q < 3 {
                return Err(Error::Domain(format!("zero_free_x needs q ≥ 3, got {q}")));
            }
            let qr = ctx.int(q as i64);
            let y = qr.pow(&ctx.lit("1.5")) * qr.ln().powi(6) / ctx.int(6150).powi(3);
            let w = lambert_w(ctx, Branch::Principal, &y)?;
            let ll = &w * 0.5;
            let log_x = ll.exp();
            let back = log_x.ln() * 2.0 * (log_x.ln() * 2.0).exp();
            let residual = back.rel_diff(&y);
            let x = log_x.exp();
            let x = x.is_finite().then_some(x);
            Ok(ThresholdResult { kind, log_x, x, branch: Branch::Principal, w_argument: y, w_value: w, c: None, residual })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lit(c: &Ctx, s: &str) -> R {
        c.lit(s)
    }

    #[test]
    fn thresholds() {
        let c = Ctx::default();
        let t1 = threshold(&c, ThresholdKind::Thm1LogX, None).unwrap();
        assert!((t1.log_x.to_f64() / 1.7e13 - 1.0).abs() < 0.03);
        assert!(t1.residual < 1e-20);
        let t3 = threshold(&c, ThresholdKind::Thm3LogX, None).unwrap();
        assert!((t3.log_x.to_f64() / 6.7e13 - 1.0).abs() < 0.03);
        let p = threshold(&c, ThresholdKind::PropFirstMainLogX, None).unwrap();
        assert!(p.log_x.rel_diff(&t3.log_x) < 1e-40);
        let z = threshold(&c, ThresholdKind::ZeroFreeX, Some(1_000_000)).unwrap();
        assert!(z.residual < 1e-20);
        assert!(z.x.is_some());
        assert!(threshold(&c, ThresholdKind::ZeroFreeX, None).is_err());
    }

    #[test]
    fn theorem_reference_values() {
        // 50-digit values from an independent transcription.
        let c = Ctx::default();
        let b = theorem_bound(&c, ThmWhich::Thm1, &lit(&c, "1.69342e13"), None).unwrap();
        assert!(b.total.rel_diff(&lit(&c, "6.7935471278907623841777059294186932972872698102072")) < 1e-40);
        assert!(b.check_sum() < 1e-40);
        let b = theorem_bound(&c, ThmWhich::Thm2, &lit(&c, "1e6"), None).unwrap();
        assert!(b.total.rel_diff(&lit(&c, "13.14927960645876914200503400229789175980613199981")) < 1e-40);
        let b = theorem_bound(&c, ThmWhich::Thm3, &lit(&c, "6.66032e13"), None).unwrap();
        assert!(b.total.rel_diff(&lit(&c, "5.8043882530005235265158606746259549511253687343337")) < 1e-40);
        let b = theorem_bound(&c, ThmWhich::Thm4, &lit(&c, "1e8"), None).unwrap();
        assert!(b.total.rel_diff(&lit(&c, "6.3907338112645149276234808127534926252651602630978")) < 1e-40);
        assert!(b.hypotheses_met);
    }

    #[test]
    fn theorem_flags() {
        let c = Ctx::default();
        let b = theorem_bound(&c, ThmWhich::Thm2, &c.int(100), None).unwrap();
        assert!(!b.hypotheses_met);
        let b = theorem_bound(&c, ThmWhich::Thm4, &lit(&c, "1e8"), Some(400_002)).unwrap();
        assert!(!b.hypotheses_met);
        assert!(theorem_bound(&c, ThmWhich::Thm1, &c.int(100), Some(5)).is_err());
    }

    #[test]
    fn sx_second_term_for_term() {
        let c = Ctx::default();
        let k = AssumptionConstants::zeta(&c);
        let lx = lit(&c, "1e6");
        let b = proposition_bound(PropWhich::SxSecond, &k, &PropArgs::new(lx.clone())).unwrap();
        let p = FPoint::new(&k, k.x0.clone(), k.t0.clone(), c.int(1)).unwrap();
        let want = p.f1() * lx.powi(5) + p.f7z() * lx.powi(4);
        assert!(b.total.rel_diff(&want) < 1e-45);
        assert!(b.hypotheses_met);
    }

    #[test]
    fn first_main_simplified_is_a_prefix() {
        let c = Ctx::default();
        let k = AssumptionConstants::general(&c, 400_003).unwrap();
        let mut a = PropArgs::new(lit(&c, "7e13"));
        let full = proposition_bound(PropWhich::FirstMain, &k, &a).unwrap();
        a.mode = PropMode::Simplified;
        let simple = proposition_bound(PropWhich::FirstMain, &k, &a).unwrap();
        assert_eq!(simple.components.len(), 3);
        for (name, v) in &simple.components {
            assert_eq!(full.component(name).unwrap(), v);
        }
        assert!(full.total > simple.total);
        assert!(simple.hypotheses_met);
        a.mode = PropMode::PrimitiveLargeQ;
        let prim = proposition_bound(PropWhich::FirstMain, &k, &a).unwrap();
        assert!(prim.component("loglog_sq_term").is_some());
    }

    #[test]
    fn jg_degenerates_to_first_main_s() {
        let c = Ctx::default();
        let k = AssumptionConstants::zeta(&c);
        let mut a = PropArgs::new(lit(&c, "1e6"));
        assert!(proposition_bound(PropWhich::JG, &k, &a).is_err());
        a.c = Some(1);
        let jg = proposition_bound(PropWhich::JG, &k, &a).unwrap();
        let fm = proposition_bound(PropWhich::FirstMainS, &k, &a).unwrap();
        assert_eq!(jg.component("d8_term").unwrap(), fm.component("d8_term").unwrap());
    }

    #[test]
    fn sxqab_uses_t1() {
        let c = Ctx::default();
        let k = AssumptionConstants::general(&c, 1009).unwrap();
        let lx = lit(&c, "1e8");
        let b = proposition_bound(PropWhich::Sxqab, &k, &PropArgs::new(lx.clone())).unwrap();
        let p = FPoint::new(&k, k.x0.clone(), k.t1.clone(), k.phi()).unwrap();
        assert!(b.component("f7_log4").unwrap().rel_diff(&(p.f7() * lx.powi(4))) < 1e-45);
    }
}
