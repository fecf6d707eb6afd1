//! Assumption constants c₁, c₂, c_{q,3}, c_{q,4}, T₀, T₁, x₀ and d₁…d₁₁ for
//! the ζ case and for a general modulus q.

use serde::Serialize;

use super::hp::{Ctx, R};
use crate::arith::euler_phi;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Context {
    Zeta,
    GeneralQ,
}

#[derive(Clone, Debug)]
pub struct AssumptionConstants {
    pub context: Context,
    pub ctx: Ctx,
    pub q: u64,
    pub c1: R,
    pub c2: R,
    pub cq3: R,
    pub cq4: R,
    pub t0: R,
    pub t1: R,
    pub x0: R,
    pub d1: R,
    pub d2: R,
    pub d3: R,
    pub d4: R,
    pub d5: R,
    pub d6: R,
    pub d7: R,
    pub d8: R,
    pub d9: R,
    pub d10: R,
    pub d11: R,
}

/// 2((5/4)^{1+1/log 2} + 1).
pub fn d1_value(ctx: &Ctx) -> R {
    let e = ctx.int(2).ln().recip() + 1.0;
    (ctx.lit("1.25").pow(&e) + 1.0) * 2.0
}

impl AssumptionConstants {
    pub fn zeta(ctx: &Ctx) -> AssumptionConstants {
        let x0 = ctx.two_pi_e_plus_one();
        AssumptionConstants {
            context: Context::Zeta,
            ctx: *ctx,
            q: 1,
            c1: ctx.int(0),
            c2: ctx.lit("53.989"),
            cq3: ctx.int(0),
            cq4: ctx.int(0),
            t0: ctx.lit("4e5"),
            t1: x0.clone(),
            x0,
            d1: d1_value(ctx),
            d2: ctx.lit("34.544"),
            d3: ctx.lit("8.022"),
            d4: ctx.lit("18.249"),
            d5: (ctx.pi() * 2.0).recip(),
            d6: ctx.int(0),
            d7: ctx.lit("2.058"),
            d8: ctx.lit("0.04621"),
            d9: ctx.lit("3.523"),
            d10: ctx.lit("6.879"),
            d11: ctx.lit("1.03883"),
        }
    }

    /// General-modulus constants; needs q ≥ 3 so that log log q > 0.
    pub fn general(ctx: &Ctx, q: u64) -> Result<AssumptionConstants> {
        if q < 3 {
            return Err(Error::Domain(format!("general-q constants need q ≥ 3, got {q}")));
        }
        let qr = ctx.int(q as i64);
        let lq = qr.ln();
        let sq = qr.sqrt();
        let x0 = ctx.e_to_e();
        Ok(AssumptionConstants {
            context: Context::GeneralQ,
            ctx: *ctx,
            q,
            c1: ctx.lit("10.5"),
            c2: ctx.lit("61.5"),
            cq3: ctx.int(100) / (&sq * lq.sq()),
            cq4: ctx.lit("0.055") * &sq * &lq,
            t0: ctx.lit("4e5"),
            t1: x0.clone(),
            x0,
            d1: d1_value(ctx),
            d2: ctx.lit("34.544"),
            d3: &lq + ctx.lit("8.022"),
            d4: ctx.lit("0.195") * &sq + ctx.lit("147.735"),
            d5: (ctx.pi() * 2.0).recip(),
            d6: ctx.lit("4.434") * &lq,
            d7: ctx.lit("0.430"),
            d8: d8_tail(ctx, &lq) + &sq * lq.sq() / 100.0,
            d9: ctx.lit("1.325"),
            d10: ctx.lit("0.364"),
            d11: ctx.lit("1.03883"),
        })
    }

    /// The ζ constants for q = 1, the general table otherwise.
    pub fn for_modulus(ctx: &Ctx, q: u64) -> Result<AssumptionConstants> {
        match q {
            0 => Err(Error::Domain("modulus must be positive".into())),
            1 => Ok(Self::zeta(ctx)),
            _ => Self::general(ctx, q),
        }
    }

    pub fn q_real(&self) -> R {
        self.ctx.int(self.q as i64)
    }

    pub fn log_q(&self) -> R {
        self.q_real().ln()
    }

    /// φ(q) as a working-precision real.
    pub fn phi(&self) -> R {
        self.ctx.int(euler_phi(self.q) as i64)
    }

    /// d₈ when only primitive characters enter: 2√q log²q/(100φ₁*) + 2.194 log²q + 9.646 log q loglog q.
    pub fn d8_primitive(&self, phi1: &R) -> R {
        let lq = self.log_q();
        let sq = self.q_real().sqrt();
        d8_tail(&self.ctx, &lq) + sq * lq.sq() * 2.0 / (phi1 * 100.0)
    }

    pub fn with_x0(mut self, x0: R) -> Self {
        self.x0 = x0;
        self
    }

    pub fn with_t0(mut self, t0: R) -> Self {
        self.t0 = t0;
        self
    }

    pub fn with_t1(mut self, t1: R) -> Self {
        self.t1 = t1;
        self
    }

    /// (name, value) for every entry, in table order.
    pub fn entries(&self) -> Vec<(&'static str, R)> {
        vec![
            ("c1", self.c1.clone()),
            ("c2", self.c2.clone()),
            ("cq3", self.cq3.clone()),
            ("cq4", self.cq4.clone()),
            ("T0", self.t0.clone()),
            ("T1", self.t1.clone()),
            ("x0", self.x0.clone()),
            ("d1", self.d1.clone()),
            ("d2", self.d2.clone()),
            ("d3", self.d3.clone()),
            ("d4", self.d4.clone()),
            ("d5", self.d5.clone()),
            ("d6", self.d6.clone()),
            ("d7", self.d7.clone()),
            ("d8", self.d8.clone()),
            ("d9", self.d9.clone()),
            ("d10", self.d10.clone()),
            ("d11", self.d11.clone()),
        ]
    }
}

fn d8_tail(ctx: &Ctx, lq: &R) -> R {
    ctx.lit("2.194") * lq.sq() + ctx.lit("9.646") * lq * lq.ln()
}

/// η_q(t) = 1/(c₁ log q + c₂ (log t)^{2/3}(log log t)^{1/3}), given log t.
pub fn eta_q(log_t: &R, k: &AssumptionConstants) -> Result<R> {
    if *log_t < k.ctx.e() {
        return Err(Error::Domain(format!("η_q(t) needs t ≥ e^e, got log t = {}", log_t.to_f64())));
    }
    let third = k.ctx.int(1) / 3.0;
    let shape = log_t.pow(&(&third * 2.0)) * log_t.ln().pow(&third);
    let lq = if k.q > 1 { k.log_q() } else { k.ctx.int(0) };
    Ok((&k.c1 * lq + &k.c2 * shape).recip())
}

/// B_q*(x) = min{B_q, 1 − η_q(x)}, given log x.
pub fn b_star(log_x: &R, k: &AssumptionConstants, bq: &R) -> Result<R> {
    let eta = eta_q(log_x, k)?;
    Ok(bq.min(&(1.0 - eta)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables() {
        let c = Ctx::default();
        let z = AssumptionConstants::zeta(&c);
        assert!((z.d1.to_f64() - 2.0 * (1.25f64.powf(1.0 + 1.0 / 2f64.ln()) + 1.0)).abs() < 1e-14);
        assert!(z.entries().iter().all(|(_, v)| !v.is_sign_negative()));
        let g = AssumptionConstants::general(&c, 400_001).unwrap();
        assert!(g.entries().iter().all(|(_, v)| !v.is_sign_negative()));
        assert!((g.d6.to_f64() - 4.434 * 400_001f64.ln()).abs() < 1e-10);
        assert!(AssumptionConstants::general(&c, 2).is_err());
        assert_eq!(AssumptionConstants::for_modulus(&c, 1).unwrap().context, Context::Zeta);
    }

    #[test]
    fn eta_and_bstar() {
        let c = Ctx::default();
        let z = AssumptionConstants::zeta(&c);
        let lt = c.lit("1e6");
        let want = (c.lit("53.989") * c.int(10).powi(4) * lt.ln().cbrt()).recip();
        assert!(eta_q(&lt, &z).unwrap().rel_diff(&want) < 1e-45);
        let half = c.lit("0.5");
        assert_eq!(b_star(&lt, &z, &half).unwrap(), half);
        let one = c.int(1);
        assert_eq!(b_star(&lt, &z, &one).unwrap(), 1.0 - want);
        assert!(eta_q(&c.int(2), &z).is_err());
        let mut prev = eta_q(&c.int(3), &z).unwrap();
        for k in 1..40 {
            let e = eta_q(&c.int(3 * (1 << k)), &z).unwrap();
            assert!(e < prev);
            prev = e;
        }
    }
}
