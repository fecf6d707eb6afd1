//! Lemma-level bounds: zero-free regions, Siegel zeros, GRH heights,
//! logarithmic derivatives, zero counts, zero sums, ψ(u,χ) errors and the
//! arithmetic product bounds.

use std::str::FromStr;

use super::hp::{Ctx, R};
use super::BoundBreakdown;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CharClass {
    Principal,
    NonReal,
    RealOdd,
    RealEven,
}

impl CharClass {
    pub fn is_real_nonprincipal(self) -> bool {
        matches!(self, CharClass::RealOdd | CharClass::RealEven)
    }
}

impl FromStr for CharClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<CharClass> {
        match s {
            "principal" => Ok(CharClass::Principal),
            "non-real" | "nonreal" | "complex" => Ok(CharClass::NonReal),
            "real-odd" | "odd" => Ok(CharClass::RealOdd),
            "real-even" | "even" => Ok(CharClass::RealEven),
            _ => Err(Error::Domain(format!("unknown character class {s:?}"))),
        }
    }
}

fn need(cond: bool, lemma: &str, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Domain(format!("{lemma}: {}", msg())))
    }
}

fn shape(lt: &R) -> R {
    lt.cbrt().sq() * lt.ln().cbrt()
}

/// 53.989 (log|t|)^{2/3}(log log|t|)^{1/3}, for |t| ≥ 3.
pub fn bellotti_denominator(ctx: &Ctx, t: &R) -> Result<R> {
    let t = t.abs();
    need(t >= 3.0, "BellottiZeros", || format!("needs |t| ≥ 3, got {}", t.to_f64()))?;
    Ok(ctx.lit("53.989") * shape(&t.ln()))
}

/// 10.5 log q + 61.5 (log|t|)^{2/3}(log log|t|)^{1/3}, for q ≥ 3 and |t| ≥ 10.
pub fn khale_denominator(ctx: &Ctx, q: u64, t: &R) -> Result<R> {
    let t = t.abs();
    need(q >= 3, "zeroFreeAll", || format!("needs q ≥ 3, got {q}"))?;
    need(t >= 10.0, "zeroFreeAll", || format!("needs |Im s| ≥ 10, got {}", t.to_f64()))?;
    Ok(ctx.lit("10.5") * ctx.int(q as i64).ln() + ctx.lit("61.5") * shape(&t.ln()))
}

/// 9.646 log max{10, q, q|t|}.
pub fn mccurley_denominator(ctx: &Ctx, q: u64, t: &R) -> Result<R> {
    need(q >= 1, "zeroFreeLarge", || "needs q ≥ 1".into())?;
    let qr = ctx.int(q as i64);
    let m = ctx.int(10).max(&qr).max(&(&qr * t.abs()));
    Ok(ctx.lit("9.646") * m.ln())
}

/// Upper bound for a Siegel zero β₁ of a real character mod q > 4·10⁵.
pub fn siegel_bound(ctx: &Ctx, q: u64, odd: bool) -> Result<R> {
    need(q > 400_000, "SiegelBounds", || format!("needs q > 4e5, got {q}"))?;
    let qr = ctx.int(q as i64);
    let c = if odd { 800.0 } else { 100.0 };
    Ok(1.0 - ctx.f(c) / (qr.sqrt() * qr.ln().sq()))
}

/// Height up to which GRH is verified for primitive characters mod q ≤ 4·10⁵.
pub fn grh_height(ctx: &Ctx, q: u64) -> Result<R> {
    need((1..=400_000).contains(&q), "GRHHolds", || format!("needs 1 ≤ q ≤ 4e5, got {q}"))?;
    let qr = ctx.int(q as i64);
    let c = if q % 2 == 0 { ctx.lit("7.5e7") } else { ctx.lit("3.75e7") };
    Ok((ctx.lit("1e8") / &qr).max(&(c / &qr + 200.0)))
}

/// Uniform height: 3·10¹² for principal characters, 293.75 otherwise.
pub fn grh_height_uniform(ctx: &Ctx, q: u64, principal: bool) -> Result<R> {
    if principal {
        return Ok(ctx.lit("3e12"));
    }
    need((1..=400_000).contains(&q), "corollary GRH", || format!("needs q ≤ 4e5, got {q}"))?;
    Ok(ctx.lit("293.75"))
}

/// |L'/L(1,χ̄) − δ₁/(1−β₁)| bound for primitive χ mod q ≥ 4·10⁵.
pub fn log_derivative(ctx: &Ctx, q: u64, class: CharClass) -> Result<BoundBreakdown> {
    need(q >= 400_000, "explicitLogDerivativeDistance", || format!("needs q ≥ 4e5, got {q}"))?;
    let qr = ctx.int(q as i64);
    let lq = qr.ln();
    let sq = qr.sqrt();
    let s2 = &sq * lq.sq();
    let e24 = ctx.int(24).exp() - 2.0;
    let e92 = (ctx.pi() * 92.0).exp() - 2.0;
    let (label, parts): (&str, Vec<(&str, R)>) = match class {
        CharClass::NonReal => ("non-real", vec![("cubic", ctx.lit("2.651") * lq.powi(3))]),
        CharClass::Principal => {
            return Err(Error::Domain("explicitLogDerivativeDistance: χ must be primitive, not principal".into()))
        }
        c => {
            let odd = c == CharClass::RealOdd;
            if qr < e24 {
                let k = if odd { "0.025" } else { "0.033" };
                ("real, q < e^24 - 2", vec![("sqrt_log2", ctx.lit(k) * &s2)])
            } else if qr < e92 {
                let k = if odd { 800.0 } else { 100.0 };
                (
                    "real, e^24 - 2 < q < e^(92 pi) - 2",
                    vec![("siegel", &s2 / k), ("sqrt_log", ctx.lit("0.548") * &sq * &lq)],
                )
            } else {
                let k = if odd { "0.004" } else { "0.012" };
                ("real, q > e^(92 pi) - 2", vec![("sqrt_log2", ctx.lit(k) * &s2)])
            }
        }
    };
    if qr == e24 || qr == e92 {
        return Err(Error::Domain("explicitLogDerivativeDistance: q at a range boundary".into()));
    }
    let mut b = BoundBreakdown::from_parts("log_derivative", parts);
    b.notes.push(label.into());
    Ok(b)
}

/// 0.055 √q log²q, uniform over classes.
pub fn log_derivative_uniform(ctx: &Ctx, q: u64) -> Result<R> {
    need(q >= 400_000, "corollary LDerivative", || format!("needs q ≥ 4e5, got {q}"))?;
    let qr = ctx.int(q as i64);
    Ok(ctx.lit("0.055") * qr.sqrt() * qr.ln().sq())
}

/// A two-sided estimate center ± radius.
#[derive(Clone, Debug)]
pub struct Bracket {
    pub center: R,
    pub radius: R,
}

impl Bracket {
    pub fn lower(&self) -> R {
        &self.center - &self.radius
    }

    pub fn upper(&self) -> R {
        &self.center + &self.radius
    }

    pub fn contains(&self, v: f64) -> bool {
        self.lower() <= v && self.upper() >= v
    }

    fn into_breakdown(self, label: &str) -> BoundBreakdown {
        let lower = self.lower();
        let mut b = BoundBreakdown::from_parts(label, vec![("center", self.center), ("radius", self.radius)]);
        b.extras.push(("lower".into(), lower));
        b
    }
}

fn two_pi_e(ctx: &Ctx) -> R {
    ctx.pi() * 2.0 * ctx.e()
}

/// N(T,χ) for conductor q > 1 and T ≥ 5/7.
pub fn zeros_general(ctx: &Ctx, q: u64, t: &R) -> Result<Bracket> {
    need(q > 1, "NumberOfZeros", || format!("needs conductor q > 1, got {q}"))?;
    need(*t >= ctx.int(5) / 7.0, "NumberOfZeros", || format!("needs T ≥ 5/7, got {}", t.to_f64()))?;
    let qr = ctx.int(q as i64);
    let lqt = (&qr * t).ln();
    let center = t / ctx.pi() * (&qr * t / two_pi_e(ctx)).ln();
    let r1 = ctx.lit("0.247") * &lqt + ctx.lit("6.894");
    let r2 = ctx.lit("0.298") * &lqt + ctx.lit("4.358");
    Ok(Bracket { center, radius: r1.min(&r2) })
}

/// N(T,χ) for primitive χ mod q with χ(−1) = `sign`. Exactly 0 when l ≤ 1.567.
pub fn zeros_primitive(ctx: &Ctx, q: u64, t: &R, sign: i8) -> Result<Bracket> {
    need(q >= 1, "NumberOfZeros", || "needs q ≥ 1".into())?;
    need(sign == 1 || sign == -1, "NumberOfZeros", || "χ(−1) must be ±1".into())?;
    need(*t >= ctx.int(5) / 7.0, "NumberOfZeros", || format!("needs T ≥ 5/7, got {}", t.to_f64()))?;
    let qr = ctx.int(q as i64);
    let l = (&qr * (t + 2.0) / (ctx.pi() * 2.0)).ln();
    if l <= ctx.lit("1.567") {
        return Ok(Bracket { center: ctx.int(0), radius: ctx.int(0) });
    }
    let center = t / ctx.pi() * (&qr * t / two_pi_e(ctx)).ln() - ctx.f(sign as f64 / 4.0);
    let radius = ctx.lit("0.22737") * &l + (&l + 1.0).ln() * 2.0 - 0.5;
    Ok(Bracket { center, radius })
}

/// N(T) for ζ (principal characters), T > e.
pub fn zeros_principal(ctx: &Ctx, t: &R) -> Result<Bracket> {
    need(*t > ctx.e(), "NumberOfZeros", || format!("principal form needs T > e, got {}", t.to_f64()))?;
    let center = t / ctx.pi() * (t / two_pi_e(ctx)).ln() + 1.75;
    let radius = ctx.lit("0.34") * t.ln() + ctx.lit("3.996") + ctx.int(25) / (ctx.pi() * 24.0 * t);
    Ok(Bracket { center, radius })
}

/// 0.364 T log(qT/2πe) for q ≥ 4·10⁵, T ≥ e^e.
pub fn zeros_corollary_q(ctx: &Ctx, q: u64, t: &R) -> Result<R> {
    need(q >= 400_000, "numberOfZeros", || format!("needs q ≥ 4e5, got {q}"))?;
    need(*t >= ctx.e_to_e(), "numberOfZeros", || format!("needs T ≥ e^e, got {}", t.to_f64()))?;
    Ok(ctx.lit("0.364") * t * (ctx.int(q as i64) * t / two_pi_e(ctx)).ln())
}

/// 6.879 T log(T/2πe) for T ≥ 2πe + 1.
pub fn zeros_corollary_zeta(ctx: &Ctx, t: &R) -> Result<R> {
    need(*t >= ctx.two_pi_e_plus_one(), "numberOfZeros", || format!("needs T ≥ 2πe+1, got {}", t.to_f64()))?;
    Ok(ctx.lit("6.879") * t * (t / two_pi_e(ctx)).ln())
}

/// Zeros with T < |γ| ≤ T+1, primitive χ with conductor q ≥ 3, T ≥ 9.
pub fn interval_primitive(ctx: &Ctx, q: u64, t: &R) -> Result<R> {
    need(q >= 3, "ExplicitZeroInterval", || format!("needs q ≥ 3, got {q}"))?;
    need(*t >= 9.0, "ExplicitZeroInterval", || format!("needs T ≥ 9, got {}", t.to_f64()))?;
    let l = (ctx.int(q as i64) * (t + 1.0)).ln();
    Ok((ctx.pi().recip() + ctx.lit("0.45474")) * &l + l.ln() * 4.0 - ctx.lit("2.357"))
}

/// Zeros of ζ with T < γ ≤ T+1, counted with both signs, T ≥ 9.
pub fn interval_principal(ctx: &Ctx, t: &R) -> Result<R> {
    need(*t >= 9.0, "ExplicitZeroInterval", || format!("needs T ≥ 9, got {}", t.to_f64()))?;
    Ok((ctx.pi().recip() + ctx.lit("0.68")) * (t + 1.0).ln()
        + ctx.lit("7.407")
        + ctx.int(25) / (ctx.pi() * 12.0 * t))
}

/// 1.325 log(q(T+1)), q ≥ 4·10⁵, T ≥ e^e.
pub fn interval_corollary_q(ctx: &Ctx, q: u64, t: &R) -> Result<R> {
    need(q >= 400_000, "zerosBetween", || format!("needs q ≥ 4e5, got {q}"))?;
    need(*t >= ctx.e_to_e(), "zerosBetween", || format!("needs T ≥ e^e, got {}", t.to_f64()))?;
    Ok(ctx.lit("1.325") * (ctx.int(q as i64) * (t + 1.0)).ln())
}

/// 3.523 log(T+1), T ≥ 2πe + 1.
pub fn interval_corollary_zeta(ctx: &Ctx, t: &R) -> Result<R> {
    need(*t >= ctx.two_pi_e_plus_one(), "zerosBetween", || format!("needs T ≥ 2πe+1, got {}", t.to_f64()))?;
    Ok(ctx.lit("3.523") * (t + 1.0).ln())
}

fn siegel_addition(ctx: &Ctx, q: u64, class: CharClass) -> R {
    let qr = ctx.int(q as i64);
    let s2 = qr.sqrt() * qr.ln().sq();
    match class {
        CharClass::RealOdd => s2 / 800.0,
        CharClass::RealEven => s2 / 100.0,
        _ => ctx.int(0),
    }
}

/// Σ_{|γ|≤T} 1/|ρ| for primitive χ mod q ≥ 3, T ≥ 5/7. For q > 4·10⁵ and
/// `with_siegel`, the possible exceptional zero is included.
pub fn zero_sums(ctx: &Ctx, q: u64, t: &R, class: CharClass, with_siegel: bool) -> Result<BoundBreakdown> {
    need(q >= 3, "ZeroSums", || format!("needs q ≥ 3, got {q}"))?;
    need(*t >= ctx.int(5) / 7.0, "ZeroSums", || format!("needs T ≥ 5/7, got {}", t.to_f64()))?;
    let qr = ctx.int(q as i64);
    let lq = qr.ln();
    let lt = t.ln();
    let pi = ctx.pi();
    let mut parts: Vec<(&str, R)> = vec![
        ("log2_T", lt.sq() / (&pi * 2.0)),
        ("logT_logq", &lt / &pi * (&qr / (&pi * 2.0)).ln()),
    ];
    let mut b = if q <= 400_000 {
        parts.push(("q_over_T", -(ctx.lit("0.019") * &lq / t)));
        let ll = (ctx.e() * &qr * (t + 2.0) / (&pi * 2.0)).ln().ln();
        parts.push(("inverse_T", (ctx.lit("0.22737") * (t + 2.0).ln() + ll * 2.0 - ctx.lit("7.954")) / t));
        if q <= 11 {
            parts.push(("range", ctx.lit("0.843") * &lq + ctx.lit("5.153")));
        } else {
            let ll = (ctx.lit("1.175") * &qr).ln().ln();
            parts.push(("range", ctx.lit("1.116") * &lq + ctx.lit("1.2") * ll + ctx.lit("4.492")));
        }
        BoundBreakdown::from_parts("zero_sums", parts)
    } else {
        let ll19 = (ctx.int(19) * ctx.e() * &qr / (ctx.int(14) * &pi)).ln().ln();
        parts.push(("log2_q", ctx.lit("2.194") * lq.sq()));
        parts.push(("mccurley", ctx.lit("9.646") * &lq * &ll19));
        parts.push(("linear_q", -(ctx.lit("5.017") * &lq)));
        parts.push(("loglog", -(ctx.lit("0.8") * &ll19)));
        parts.push(("constant", ctx.lit("9.121")));
        let ll = (ctx.e() * &qr * (t + 2.0) / (&pi * 2.0)).ln().ln();
        let inv = ctx.lit("0.22737") * (t + 2.0).ln() - ctx.lit("0.019") * &lq + ll * 2.0 - ctx.lit("7.953");
        parts.push(("inverse_T", inv / t));
        if with_siegel {
            parts.push(("siegel", siegel_addition(ctx, q, class)));
        }
        BoundBreakdown::from_parts("zero_sums", parts)
    };
    b.inputs.push(("q".into(), qr));
    b.inputs.push(("T".into(), t.clone()));
    Ok(b)
}

/// log²T/2π + 4.434 log q log T, T ≥ q > 4·10⁵.
pub fn rho_no_chi(ctx: &Ctx, q: u64, t: &R) -> Result<R> {
    need(q > 400_000, "RhoNoChi", || format!("needs q > 4e5, got {q}"))?;
    need(*t >= ctx.int(q as i64), "RhoNoChi", || format!("needs T ≥ q, got {}", t.to_f64()))?;
    let lt = t.ln();
    Ok(lt.sq() / (ctx.pi() * 2.0) + ctx.lit("4.434") * ctx.int(q as i64).ln() * lt)
}

/// Σ_{|γ|>T} 1/|ρ|² for primitive χ mod q ≥ 3, T ≥ 5/7.
pub fn rho_squares_tail(ctx: &Ctx, q: u64, t: &R) -> Result<R> {
    need(q >= 3, "rhosquares", || format!("needs q ≥ 3, got {q}"))?;
    need(*t >= ctx.int(5) / 7.0, "rhosquares", || format!("needs T ≥ 5/7, got {}", t.to_f64()))?;
    let qt = ctx.int(q as i64) * t;
    Ok((&qt / (ctx.pi() * 2.0)).ln() / (ctx.pi() * t) + (ctx.lit("0.494") * qt.ln() + ctx.lit("13.912")) / t.sq())
}

/// Σ 1/|ρ(ρ+1)| over ρ ≠ 1 − β₁ for primitive χ mod q ≥ 3.
pub fn rho_rho1(ctx: &Ctx, q: u64, class: CharClass, with_siegel: bool) -> Result<BoundBreakdown> {
    need(q >= 3, "rhosquares", || format!("needs q ≥ 3, got {q}"))?;
    let lq = ctx.int(q as i64).ln();
    let mut parts: Vec<(&str, R)> = match q {
        3..=9 => vec![("linear", ctx.lit("0.894") * &lq + ctx.lit("3.107"))],
        10..=400_000 => vec![("linear", ctx.lit("1.116") * &lq + ctx.lit("4.637"))],
        _ => vec![("log2_q", ctx.lit("2.194") * lq.sq()), ("mccurley", ctx.lit("9.646") * &lq * lq.ln())],
    };
    if q > 400_000 && with_siegel {
        parts.push(("siegel", siegel_addition(ctx, q, class)));
    }
    Ok(BoundBreakdown::from_parts("rho_rho1", parts))
}

/// 0.430/T · log(qT/2π), q ≥ 4·10⁵, T ≥ e^e.
pub fn rho_squares_corollary(ctx: &Ctx, q: u64, t: &R) -> Result<R> {
    need(q >= 400_000, "sumRhoRhoGen", || format!("needs q ≥ 4e5, got {q}"))?;
    need(*t >= ctx.e_to_e(), "sumRhoRhoGen", || format!("needs T ≥ e^e, got {}", t.to_f64()))?;
    Ok(ctx.lit("0.430") / t * (ctx.int(q as i64) * t / (ctx.pi() * 2.0)).ln())
}

/// Σ_{0<γ≤T} 1/|ρ| ≤ (1/4π) log²(T/2π), T ≥ 4πe.
pub fn principal_rho_t(ctx: &Ctx, t: &R) -> Result<R> {
    need(*t >= ctx.pi() * 4.0 * ctx.e(), "principalrhoT", || format!("needs T ≥ 4πe, got {}", t.to_f64()))?;
    Ok((t / (ctx.pi() * 2.0)).ln().sq() / (ctx.pi() * 4.0))
}

/// Σ_{γ>T} 1/γ² ≤ log T/(2πT), T ≥ 2πe.
pub fn rho2_zeta_tail(ctx: &Ctx, t: &R) -> Result<R> {
    need(*t >= two_pi_e(ctx), "rho2Zeta", || format!("needs T ≥ 2πe, got {}", t.to_f64()))?;
    Ok(t.ln() / (ctx.pi() * 2.0 * t))
}

/// Σ_{γ>0} 1/γ² < 0.023105.
pub fn rho2_zeta_total(ctx: &Ctx) -> R {
    ctx.lit("0.023105")
}

fn psi_common(ctx: &Ctx, u: &R, t: &R) -> Vec<(&'static str, R)> {
    let lu = u.ln();
    vec![
        ("loglog", super::constants::d1_value(ctx) * u * &lu * lu.ln() / t),
        ("u_log_u", ctx.lit("34.544") * u * &lu / t),
    ]
}

fn psi_domain(ctx: &Ctx, lemma: &str, u: &R, t: &R) -> Result<()> {
    need(*t >= ctx.lit("4e5"), lemma, || format!("needs T ≥ 4e5, got {}", t.to_f64()))?;
    need(*u >= 2.0 && *u <= t * 3.0, lemma, || format!("needs 2 ≤ u ≤ 3T, got u = {}", u.to_f64()))
}

/// Right side of the truncated explicit formula for ψ(u,χ₀), q ≥ 7 or q = 1.
pub fn psi_principal(ctx: &Ctx, q: u64, u: &R, t: &R) -> Result<BoundBreakdown> {
    need(q == 1 || q >= 7, "psiPrincipal", || format!("needs q ≥ 7 or q = 1, got {q}"))?;
    psi_domain(ctx, "psiPrincipal", u, t)?;
    let mut parts = psi_common(ctx, u, t);
    parts.push(("log_T", ctx.lit("18.249") * t.ln()));
    parts.push(("log_u", (ctx.int(q as i64).ln() + ctx.lit("8.022")) * u.ln()));
    Ok(BoundBreakdown::from_parts("psi_principal", parts))
}

/// Non-principal primitive χ mod q > 4·10⁵, T ≥ q.
pub fn psi_primitive(ctx: &Ctx, q: u64, u: &R, t: &R) -> Result<BoundBreakdown> {
    need(q > 400_000, "psiPrimitive", || format!("needs q > 4e5, got {q}"))?;
    need(*t >= ctx.int(q as i64), "psiPrimitive", || "needs T ≥ q".into())?;
    psi_domain(ctx, "psiPrimitive", u, t)?;
    let mut parts = psi_common(ctx, u, t);
    parts.push(("log_T", (ctx.lit("0.195") * ctx.int(q as i64).sqrt() + ctx.lit("147.735")) * t.ln()));
    parts.push(("log_u", ctx.lit("8.022") * u.ln()));
    Ok(BoundBreakdown::from_parts("psi_primitive", parts))
}

/// Non-principal imprimitive χ mod q > 4·10⁵, T ≥ q.
pub fn psi_not_primitive(ctx: &Ctx, q: u64, u: &R, t: &R) -> Result<BoundBreakdown> {
    need(q > 400_000, "psiNotPrimitive", || format!("needs q > 4e5, got {q}"))?;
    need(*t >= ctx.int(q as i64), "psiNotPrimitive", || "needs T ≥ q".into())?;
    psi_domain(ctx, "psiNotPrimitive", u, t)?;
    let qr = ctx.int(q as i64);
    let mut parts = psi_common(ctx, u, t);
    parts.push(("log_T", (ctx.lit("0.195") * qr.sqrt() + ctx.lit("148.430")) * t.ln()));
    parts.push(("log_u", (qr.ln() + ctx.lit("8.022")) * u.ln()));
    Ok(BoundBreakdown::from_parts("psi_not_primitive", parts))
}

/// |Re B(χ)| for χ with conductor q ≥ 3.
pub fn b_chi(ctx: &Ctx, q: u64, class: CharClass) -> Result<BoundBreakdown> {
    need(q >= 3, "Bchi", || format!("needs q ≥ 3, got {q}"))?;
    let qr = ctx.int(q as i64);
    let lq = qr.ln();
    let parts: Vec<(&str, R)> = if q <= 400_000 {
        vec![("linear", ctx.lit("1.275") * &lq + ctx.lit("6.961"))]
    } else {
        match class {
            CharClass::NonReal | CharClass::Principal => vec![
                ("log2_q", ctx.lit("2.288") * lq.sq()),
                ("linear", ctx.lit("30.264") * &lq + ctx.lit("5.809")),
            ],
            c => vec![
                ("siegel", siegel_addition(ctx, q, c)),
                ("log2_q", ctx.lit("2.288") * lq.sq()),
                ("linear", ctx.lit("20.618") * &lq + ctx.lit("5.809")),
            ],
        }
    };
    Ok(BoundBreakdown::from_parts("b_chi", parts))
}

/// e^{2C₀}/(4C₂) (log x)² (1 + 1/(2 log²x))², x ≥ 286.
pub fn prodpp2_rhs(ctx: &Ctx, x: &R) -> Result<R> {
    need(*x >= 286.0, "prodpp2", || format!("needs x ≥ 286, got {}", x.to_f64()))?;
    let lx = x.ln();
    let k = (ctx.euler_gamma() * 2.0).exp() / (ctx.c2() * 4.0);
    Ok(k * lx.sq() * ((lx.sq() * 2.0).recip() + 1.0).sq())
}

/// e^{2C₀}/C₂ ((log log q)² + 2.8 + 1.96/(log log q)²), q ≥ 3, q ≢ 2 mod 4.
pub fn psi1_rhs(ctx: &Ctx, q: u64) -> Result<R> {
    need(q >= 3 && q % 4 != 2, "psi1Estimate", || format!("needs q ≥ 3 and q ≢ 2 mod 4, got {q}"))?;
    Ok(psi1_formula(ctx, q))
}

pub(crate) fn psi1_formula(ctx: &Ctx, q: u64) -> R {
    let ll = ctx.int(q as i64).ln().ln().sq();
    (ctx.euler_gamma() * 2.0).exp() / ctx.c2() * (&ll + ctx.lit("2.8") + ctx.lit("1.96") / &ll)
}

/// Lower bound q / RHS for φ₁*(q).
pub fn phi1_star_lower(ctx: &Ctx, q: u64) -> Result<R> {
    Ok(ctx.int(q as i64) / psi1_rhs(ctx, q)?)
}

/// 1.5379 log n log 2 / log log n, the bound for log d(n). Needs n ≥ 3 so
/// that log log n > 0.
pub fn divisor_log_bound(ctx: &Ctx, n: u64) -> Result<R> {
    need(n >= 3, "divisor bound", || format!("needs n ≥ 3 for log log n > 0, got {n}"))?;
    let ln = ctx.int(n as i64).ln();
    Ok(ctx.lit("1.5379") * &ln * ctx.int(2).ln() / ln.ln())
}

/// Selector for [`zero_region_bounds`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegionWhich {
    Bellotti,
    Khale,
    McCurley,
    Siegel,
    GrhHeight,
    GrhUniform,
    LogDerivative,
    LogDerivativeUniform,
    ZerosGeneral,
    ZerosPrimitive,
    ZerosPrincipal,
    ZerosCorollaryQ,
    ZerosCorollaryZeta,
    IntervalPrimitive,
    IntervalPrincipal,
    IntervalCorollaryQ,
    IntervalCorollaryZeta,
    ZeroSums,
    RhoNoChi,
    RhoSquaresTail,
    RhoRho1,
    RhoSquaresCorollary,
    PrincipalRhoT,
    Rho2ZetaTail,
    Rho2ZetaTotal,
    PsiPrincipal,
    PsiPrimitive,
    PsiNotPrimitive,
    BChi,
    Prodpp2,
    Psi1,
    Divisor,
}

impl RegionWhich {
    pub const ALL: [(RegionWhich, &'static str); 32] = [
        (RegionWhich::Bellotti, "bellotti"),
        (RegionWhich::Khale, "khale"),
        (RegionWhich::McCurley, "mccurley"),
        (RegionWhich::Siegel, "siegel"),
        (RegionWhich::GrhHeight, "grh-height"),
        (RegionWhich::GrhUniform, "grh-uniform"),
        (RegionWhich::LogDerivative, "log-derivative"),
        (RegionWhich::LogDerivativeUniform, "log-derivative-uniform"),
        (RegionWhich::ZerosGeneral, "zeros-general"),
        (RegionWhich::ZerosPrimitive, "zeros-primitive"),
        (RegionWhich::ZerosPrincipal, "zeros-principal"),
        (RegionWhich::ZerosCorollaryQ, "zeros-corollary-q"),
        (RegionWhich::ZerosCorollaryZeta, "zeros-corollary-zeta"),
        (RegionWhich::IntervalPrimitive, "interval-primitive"),
        (RegionWhich::IntervalPrincipal, "interval-principal"),
        (RegionWhich::IntervalCorollaryQ, "interval-corollary-q"),
        (RegionWhich::IntervalCorollaryZeta, "interval-corollary-zeta"),
        (RegionWhich::ZeroSums, "zero-sums"),
        (RegionWhich::RhoNoChi, "rho-no-chi"),
        (RegionWhich::RhoSquaresTail, "rho-squares-tail"),
        (RegionWhich::RhoRho1, "rho-rho1"),
        (RegionWhich::RhoSquaresCorollary, "rho-squares-corollary"),
        (RegionWhich::PrincipalRhoT, "principal-rho-t"),
        (RegionWhich::Rho2ZetaTail, "rho2-zeta-tail"),
        (RegionWhich::Rho2ZetaTotal, "rho2-zeta-total"),
        (RegionWhich::PsiPrincipal, "psi-principal"),
        (RegionWhich::PsiPrimitive, "psi-primitive"),
        (RegionWhich::PsiNotPrimitive, "psi-not-primitive"),
        (RegionWhich::BChi, "b-chi"),
        (RegionWhich::Prodpp2, "prodpp2"),
        (RegionWhich::Psi1, "psi1"),
        (RegionWhich::Divisor, "divisor"),
    ];

    pub fn name(self) -> &'static str {
        RegionWhich::ALL.iter().find(|(w, _)| *w == self).map(|(_, n)| *n).unwrap_or("?")
    }
}

impl FromStr for RegionWhich {
    type Err = Error;
    fn from_str(s: &str) -> Result<RegionWhich> {
        let s = s.to_ascii_lowercase().replace('_', "-");
        RegionWhich::ALL
            .iter()
            .find(|(_, n)| *n == s)
            .map(|(w, _)| *w)
            .ok_or_else(|| Error::Domain(format!("unknown region bound {s:?}")))
    }
}

/// Inputs for [`zero_region_bounds`]; each evaluator reads what it needs.
#[derive(Clone, Debug, Default)]
pub struct RegionArgs {
    pub q: Option<u64>,
    pub t: Option<R>,
    pub u: Option<R>,
    pub x: Option<R>,
    pub class: Option<CharClass>,
    pub with_siegel: bool,
}

fn single(label: &str, v: R) -> BoundBreakdown {
    BoundBreakdown::from_parts(label, vec![(label.to_string(), v)])
}

/// Evaluates one region bound with a breakdown.
pub fn zero_region_bounds(ctx: &Ctx, which: RegionWhich, a: &RegionArgs) -> Result<BoundBreakdown> {
    let name = which.name();
    let q = || a.q.ok_or_else(|| Error::Domain(format!("{name} needs q")));
    let t = || a.t.clone().ok_or_else(|| Error::Domain(format!("{name} needs T")));
    let u = || a.u.clone().ok_or_else(|| Error::Domain(format!("{name} needs u")));
    let x = || a.x.clone().ok_or_else(|| Error::Domain(format!("{name} needs x")));
    let class = || a.class.ok_or_else(|| Error::Domain(format!("{name} needs a character class")));
    let odd = |c: CharClass| -> Result<bool> {
        match c {
            CharClass::RealOdd => Ok(true),
            CharClass::RealEven => Ok(false),
            _ => Err(Error::Domain(format!("{name} needs a real character class"))),
        }
    };
    let mut b = match which {
        RegionWhich::Bellotti => single(name, bellotti_denominator(ctx, &t()?)?),
        RegionWhich::Khale => single(name, khale_denominator(ctx, q()?, &t()?)?),
        RegionWhich::McCurley => single(name, mccurley_denominator(ctx, q()?, &t()?)?),
        RegionWhich::Siegel => single(name, siegel_bound(ctx, q()?, odd(class()?)?)?),
        RegionWhich::GrhHeight => single(name, grh_height(ctx, q()?)?),
        RegionWhich::GrhUniform => {
            single(name, grh_height_uniform(ctx, q()?, a.class.unwrap_or(CharClass::NonReal) == CharClass::Principal)?)
        }
        RegionWhich::LogDerivative => log_derivative(ctx, q()?, class()?)?,
        RegionWhich::LogDerivativeUniform => single(name, log_derivative_uniform(ctx, q()?)?),
        RegionWhich::ZerosGeneral => zeros_general(ctx, q()?, &t()?)?.into_breakdown(name),
        RegionWhich::ZerosPrimitive => {
            let sign = match class()? {
                CharClass::RealOdd => -1,
                CharClass::RealEven | CharClass::Principal => 1,
                CharClass::NonReal => {
                    return Err(Error::Domain(format!("{name} needs the parity: use real-odd or real-even")))
                }
            };
            zeros_primitive(ctx, q()?, &t()?, sign)?.into_breakdown(name)
        }
        RegionWhich::ZerosPrincipal => zeros_principal(ctx, &t()?)?.into_breakdown(name),
        RegionWhich::ZerosCorollaryQ => single(name, zeros_corollary_q(ctx, q()?, &t()?)?),
        RegionWhich::ZerosCorollaryZeta => single(name, zeros_corollary_zeta(ctx, &t()?)?),
        RegionWhich::IntervalPrimitive => single(name, interval_primitive(ctx, q()?, &t()?)?),
        RegionWhich::IntervalPrincipal => single(name, interval_principal(ctx, &t()?)?),
        RegionWhich::IntervalCorollaryQ => single(name, interval_corollary_q(ctx, q()?, &t()?)?),
        RegionWhich::IntervalCorollaryZeta => single(name, interval_corollary_zeta(ctx, &t()?)?),
        RegionWhich::ZeroSums => {
            zero_sums(ctx, q()?, &t()?, a.class.unwrap_or(CharClass::NonReal), a.with_siegel)?
        }
        RegionWhich::RhoNoChi => single(name, rho_no_chi(ctx, q()?, &t()?)?),
        RegionWhich::RhoSquaresTail => single(name, rho_squares_tail(ctx, q()?, &t()?)?),
        RegionWhich::RhoRho1 => rho_rho1(ctx, q()?, a.class.unwrap_or(CharClass::NonReal), a.with_siegel)?,
        RegionWhich::RhoSquaresCorollary => single(name, rho_squares_corollary(ctx, q()?, &t()?)?),
        RegionWhich::PrincipalRhoT => single(name, principal_rho_t(ctx, &t()?)?),
        RegionWhich::Rho2ZetaTail => single(name, rho2_zeta_tail(ctx, &t()?)?),
        RegionWhich::Rho2ZetaTotal => single(name, rho2_zeta_total(ctx)),
        RegionWhich::PsiPrincipal => psi_principal(ctx, a.q.unwrap_or(1), &u()?, &t()?)?,
        RegionWhich::PsiPrimitive => psi_primitive(ctx, q()?, &u()?, &t()?)?,
        RegionWhich::PsiNotPrimitive => psi_not_primitive(ctx, q()?, &u()?, &t()?)?,
        RegionWhich::BChi => b_chi(ctx, q()?, a.class.unwrap_or(CharClass::NonReal))?,
        RegionWhich::Prodpp2 => single(name, prodpp2_rhs(ctx, &x()?)?),
        RegionWhich::Psi1 => single(name, psi1_rhs(ctx, q()?)?),
        RegionWhich::Divisor => {
            let n = q().or_else(|_| x().map(|v| v.to_f64() as u64))?;
            single(name, divisor_log_bound(ctx, n)?)
        }
    };
    b.label = name.to_string();
    if let Some(q) = a.q {
        b.inputs.push(("q".into(), ctx.int(q as i64)));
    }
    for (k, v) in [("T", &a.t), ("u", &a.u), ("x", &a.x)] {
        if let Some(v) = v {
            b.inputs.push((k.into(), v.clone()));
        }
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn siegel_example_and_monotone() {
        let c = Ctx::default();
        let want = 1.0 - c.int(800) / (c.int(1000) * c.lit("1e6").ln().sq());
        assert!(siegel_bound(&c, 1_000_000, true).unwrap().rel_diff(&want) < 1e-45);
        let mut prev = siegel_bound(&c, 400_001, false).unwrap();
        for k in 1..40 {
            let v = siegel_bound(&c, 400_001 + k * 50_000, false).unwrap();
            assert!(v > prev);
            prev = v;
        }
        assert!(siegel_bound(&c, 400_000, true).is_err());
    }

    #[test]
    fn principal_count_at_100() {
        let c = Ctx::default();
        let b = zeros_principal(&c, &c.int(100)).unwrap();
        // N(T) counts |γ| ≤ T; 29 ordinates lie in (0, 100].
        assert!(b.contains(58.0));
        assert!(!b.contains(29.0));
        let want = c.int(100) / c.pi() * (c.int(100) / (c.pi() * 2.0 * c.e())).ln() + 1.75;
        assert!(b.center.rel_diff(&want) < 1e-45);
        assert!(zeros_principal(&c, &c.lit("2.7")).is_err());
    }

    #[test]
    fn prodpp2_at_286() {
        let c = Ctx::default();
        let sieve = crate::arith::SieveTable::build(300).unwrap();
        let mut lhs = c.int(1);
        for p in 3..=286usize {
            if sieve.is_prime(p) {
                lhs = lhs * c.int(p as i64) / c.int(p as i64 - 2);
            }
        }
        assert!(prodpp2_rhs(&c, &c.int(286)).unwrap() >= lhs);
        assert!(prodpp2_rhs(&c, &c.int(285)).is_err());
    }

    #[test]
    fn piecewise_ranges() {
        let c = Ctx::default();
        let small = log_derivative(&c, 500_000, CharClass::RealOdd).unwrap();
        assert_eq!(small.components.len(), 1);
        let mid = log_derivative(&c, 30_000_000_000, CharClass::RealEven).unwrap();
        assert_eq!(mid.components.len(), 2);
        assert!(log_derivative(&c, 500_000, CharClass::Principal).is_err());
        assert_eq!(rho_rho1(&c, 5, CharClass::NonReal, false).unwrap().components.len(), 1);
        let big = rho_rho1(&c, 500_000, CharClass::RealOdd, true).unwrap();
        assert_eq!(big.components.len(), 3);
        assert!(zero_sums(&c, 12, &c.int(100), CharClass::NonReal, false).unwrap().check_sum() < 1e-30);
        assert!(zero_sums(&c, 2, &c.int(100), CharClass::NonReal, false).is_err());
        assert!(b_chi(&c, 500_000, CharClass::RealEven).unwrap().total > b_chi(&c, 500_000, CharClass::RealOdd).unwrap().total);
    }

    #[test]
    fn zero_free_comparisons() {
        // 9.646 log 10 < 61.5 (log 10)^{2/3} (loglog 10)^{1/3}.
        let c = Ctx::default();
        let m = mccurley_denominator(&c, 1, &c.int(1)).unwrap();
        let lt = c.int(10).ln();
        assert!(m < c.lit("61.5") * shape(&lt));
        assert!(bellotti_denominator(&c, &c.int(2)).is_err());
        assert!(khale_denominator(&c, 3, &c.int(9)).is_err());
    }

    #[test]
    fn grh_heights() {
        let c = Ctx::default();
        assert_eq!(grh_height(&c, 1).unwrap(), c.lit("1e8"));
        let v = grh_height(&c, 400_000).unwrap();
        assert_eq!(v, c.lit("7.5e7") / 400_000.0 + 200.0);
        assert!(v >= c.lit("293.75"));
        assert!(grh_height(&c, 399_999).unwrap() >= c.lit("293.75"));
        assert!(grh_height(&c, 400_001).is_err());
    }

    #[test]
    fn divisor_bound_holds_small() {
        let c = Ctx::default();
        assert!(divisor_log_bound(&c, 2).is_err());
        for n in 3..5000u64 {
            let d = crate::arith::small_multiplicative(n).d;
            assert!(c.int(d as i64).ln() <= divisor_log_bound(&c, n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn dispatcher_names_roundtrip() {
        for (w, n) in RegionWhich::ALL {
            assert_eq!(n.parse::<RegionWhich>().unwrap(), w);
        }
        let c = Ctx::default();
        let a = RegionArgs { t: Some(c.int(100)), ..Default::default() };
        let b = zero_region_bounds(&c, RegionWhich::ZerosPrincipal, &a).unwrap();
        assert!(b.extra("lower").is_some());
        assert!(zero_region_bounds(&c, RegionWhich::Khale, &a).is_err());
    }
}
