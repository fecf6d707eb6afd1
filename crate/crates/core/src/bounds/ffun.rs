//! The bound functions f₁…f₈ and their ζ-variants f₄,ζ…f₇,ζ.
//!
//! Each function returns its additive parts; [`f_function`] wraps them in a
//! [`BoundBreakdown`]. Composite functions use the totals of their inputs.

use std::str::FromStr;

use super::constants::AssumptionConstants;
use super::hp::{Ctx, R};
use super::BoundBreakdown;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FWhich {
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
    F7,
    F8,
    F4z,
    F5z,
    F6z,
    F7z,
}

impl FWhich {
    pub const ALL: [FWhich; 12] = [
        FWhich::F1,
        FWhich::F2,
        FWhich::F3,
        FWhich::F4,
        FWhich::F5,
        FWhich::F6,
        FWhich::F7,
        FWhich::F8,
        FWhich::F4z,
        FWhich::F5z,
        FWhich::F6z,
        FWhich::F7z,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FWhich::F1 => "f1",
            FWhich::F2 => "f2",
            FWhich::F3 => "f3",
            FWhich::F4 => "f4",
            FWhich::F5 => "f5",
            FWhich::F6 => "f6",
            FWhich::F7 => "f7",
            FWhich::F8 => "f8",
            FWhich::F4z => "f4z",
            FWhich::F5z => "f5z",
            FWhich::F6z => "f6z",
            FWhich::F7z => "f7z",
        }
    }

    fn needs_t(self) -> bool {
        !matches!(self, FWhich::F1 | FWhich::F2 | FWhich::F6 | FWhich::F6z)
    }
}

impl FromStr for FWhich {
    type Err = Error;
    fn from_str(s: &str) -> Result<FWhich> {
        FWhich::ALL
            .iter()
            .copied()
            .find(|w| w.name() == s.to_ascii_lowercase().replace(['_', ','], "").replace("zeta", "z"))
            .ok_or_else(|| Error::Domain(format!("unknown bound function {s:?}")))
    }
}

/// Arguments of the f-functions. `t` is T₀ or T₁ as the caller's statement
/// requires; `phi` defaults to φ(q) and is where φ₁*(q) is substituted.
#[derive(Clone, Debug, Default)]
pub struct FArgs {
    pub x0: Option<R>,
    pub t: Option<R>,
    pub c: Option<u64>,
    pub phi: Option<R>,
}

/// Evaluation point shared by all f-functions.
pub struct FPoint<'a> {
    pub k: &'a AssumptionConstants,
    pub ctx: Ctx,
    pub x0: R,
    pub t: R,
    pub phi: R,
    l: R,
    l2: R,
    s: R,
    pi: R,
}

type Parts = Vec<(&'static str, R)>;

fn total(parts: &Parts) -> R {
    parts.iter().map(|(_, v)| v.clone()).sum()
}

impl<'a> FPoint<'a> {
    pub fn new(k: &'a AssumptionConstants, x0: R, t: R, phi: R) -> Result<FPoint<'a>> {
        let ctx = k.ctx;
        if x0 < ctx.e_to_e() * (1.0 - 1e-40) {
            return Err(Error::Domain(format!("f-functions need x₀ ≥ e^e, got {}", x0.to_f64())));
        }
        let l = x0.ln();
        let l2 = l.ln();
        let s = x0.sqrt();
        Ok(FPoint { k, ctx, pi: ctx.pi(), l, l2, s, x0, t, phi })
    }

    /// Point with x₀, T₁ and φ(q) taken from the constants.
    pub fn standard(k: &'a AssumptionConstants) -> Result<FPoint<'a>> {
        FPoint::new(k, k.x0.clone(), k.t1.clone(), k.phi())
    }

    fn lit(&self, s: &str) -> R {
        self.ctx.lit(s)
    }

    pub fn f1(&self) -> R {
        let k = self.k;
        self.pi.sq() * k.d5.sq() * (&self.x0 * 2.0 + 1.0) / (self.ctx.int(2).ln() * 2.0)
    }

    pub fn f2(&self) -> R {
        let k = self.k;
        let (l, l2) = (&self.l, &self.l2);
        let inv = self.x0.recip();
        let four = &inv + 4.0;
        let a = self.lit("1.2") * &four * (self.lit("1.2").ln() / l2 + 1.0) * &k.d1;
        let b = self.lit("1.2") * &k.d2 / l2 * &four;
        let c = &k.d3 / l2 * (((&inv + 2.0) * 2.0).ln() / l + 2.0);
        let d = &k.d4 * 2.0 / l2;
        &self.pi * (a + b + c + d).sq()
    }

    pub fn f3(&self) -> R {
        let k = self.k;
        let l = &self.l;
        let inv = self.x0.recip();
        let cube = (&inv + 2.0).powi(3) - 1.0;
        let inner = (self.lit("11.9") / l + 4.0 + self.lit("6.3") / l.sq() + (l + self.ctx.int(2).ln()) / (&self.x0 * l.sq()))
            * &k.d9;
        let qt = k.q_real() * &self.t / (&self.pi * 2.0 * self.ctx.e());
        let t_term = &k.d10 * 2.0 / l.sq() * &self.t * qt.ln();
        self.ctx.int(2).sqrt() * cube * (&k.d7 * 2.0 + &k.d10) * (inner + t_term)
    }

    fn big_d(&self) -> R {
        let k = self.k;
        &k.d2 + &k.d3 + &k.d4 + &k.cq4 + 1.0
    }

    pub fn f4_parts(&self) -> Parts {
        let k = self.k;
        let (l, l2, s) = (&self.l, &self.l2, &self.s);
        let d = self.big_d();
        let left = &k.d1 * l2 / (s * l) + &d / (s * l) + &k.d5 * 2.0 + (&k.d6 + 1.0) / l;
        let right = &k.d1 * l2 / s + &d / s + &k.d6 + 1.0;
        let main = (&self.x0 * 2.0 + 1.0) * left * self.pi.sq() / 2.0 * right;
        vec![
            ("product", main),
            ("f2_term", &self.pi * 6.0 * l2 / l * self.f2()),
            ("f3_term", self.pi.sq() * 3.0 * self.f3()),
        ]
    }

    pub fn f4(&self) -> R {
        total(&self.f4_parts())
    }

    pub fn f5_parts(&self) -> Parts {
        let k = self.k;
        let (l, l2, s) = (&self.l, &self.l2, &self.s);
        let first = self.pi.sq()
            * 2.0
            * (l2 / (l.sq() * self.pi.sqrt()) * (self.f2() * 3.0).sqrt() + (self.f3() * 3.0 / l.powi(3)).sqrt());
        let second = self.pi.sq() / (l.powi(3) * 2.0);
        let num = &k.d1 * l2 + self.big_d();
        let bracket = num / (s * l) + &k.d5 + &k.d6 / l + (s * l.sq()).recip();
        let third = (&self.x0 * 2.0 + 1.0) * self.pi.sq() * 2.0 / (s * l) * bracket;
        vec![("sqrt_terms", first), ("log_cube", second), ("x0_term", third)]
    }

    pub fn f5(&self) -> R {
        total(&self.f5_parts())
    }

    pub fn f6_parts(&self) -> Parts {
        let k = self.k;
        let (l, l2) = (&self.l, &self.l2);
        vec![
            ("d1", k.d1.clone()),
            ("d2", &k.d2 / (l2 * 2.0)),
            ("d3_d4", (&k.d3 + &k.d4 + &k.cq4 + 1.0) / l2),
            ("d8", &k.d8 * 4.0 / (&self.x0 * l * l2)),
            ("d11", &k.d11 / (l * l2)),
        ]
    }

    pub fn f6(&self) -> R {
        total(&self.f6_parts())
    }

    fn j_factor(&self) -> R {
        self.lit("1.443") + &self.x0 * 0.5 / &self.l
    }

    pub fn f7_parts(&self) -> Parts {
        let k = self.k;
        let (l, l2, phi) = (&self.l, &self.l2, &self.phi);
        let inner = (&k.cq3 * 2.0 + 1.5) / (phi * l * l2) + self.f6() * 2.0;
        vec![
            ("x0_f1", &self.x0 * self.lit("0.35") * self.f1()),
            ("f4_f5", self.j_factor() * (self.f4() + self.f5() * 2.0 / phi)),
            ("f6_term", l2 / (phi * l.powi(3)) * inner),
        ]
    }

    pub fn f7(&self) -> R {
        total(&self.f7_parts())
    }

    /// f₈(q, T₁, x₀, c); the formula does not depend on c.
    pub fn f8_parts(&self) -> Parts {
        let k = self.k;
        let (l, l2, phi) = (&self.l, &self.l2, &self.phi);
        let lq = if k.q > 1 { k.log_q() } else { self.ctx.int(0) };
        let num = l2 * self.f6() * 2.0 / phi + &k.d11 * lq / self.ctx.int(2).ln() + self.lit("17.314")
            + self.lit("1.624") / l;
        vec![
            ("log4_term", num / l.powi(4)),
            ("cq3_term", (&k.cq3 * 4.0 + 3.0) / (l.powi(5) * 2.0 * phi)),
            ("f4_f5", (&self.x0 * self.lit("0.35") * self.f1() + self.j_factor() * (self.f4() + self.f5() / phi)) / l),
            ("f1", self.f1()),
        ]
    }

    pub fn f8(&self) -> R {
        total(&self.f8_parts())
    }

    pub fn f4z_parts(&self) -> Parts {
        let k = self.k;
        let (l, l2, s) = (&self.l, &self.l2, &self.s);
        let d = &k.d2 + &k.d3 + &k.d4;
        let l2pi = (&self.pi * 2.0).ln();
        let left = &k.d1 * l2 / (s * l) + &d / (s * l) + &k.d5 * 2.0 + &k.d6 / l + &l2pi / (s * l.sq());
        let right = &k.d1 * l2 / s + &d / s + &k.d6 + &l2pi / (s * l);
        let main = (&self.x0 * 2.0 + 1.0) * left * self.pi.sq() / 2.0 * right;
        vec![
            ("product", main),
            ("f2_term", &self.pi * 6.0 * l2 / l * self.f2()),
            ("f3_term", self.pi.sq() * 3.0 * self.f3()),
        ]
    }

    pub fn f4z(&self) -> R {
        total(&self.f4z_parts())
    }

    /// f₅,ζ. Its last term carries (log x)², which is evaluated at x = x₀.
    pub fn f5z_parts(&self) -> Parts {
        let k = self.k;
        let (l, l2, s) = (&self.l, &self.l2, &self.s);
        let first = self.pi.sq()
            * 2.0
            * (l2 / (l.sq() * self.pi.sqrt()) * (self.f2() * 3.0).sqrt() + (self.f3() * 3.0 / l.powi(3)).sqrt());
        let second = self.pi.sq() / (l.powi(3) * 2.0);
        let num = &k.d1 * l2 + &k.d2 + &k.d3 + &k.d4;
        let bracket = &k.d5 + &k.d6 / l + num / (s * l) + ((&self.pi * 2.0).ln() + 1.0) / (s * l.sq());
        let third = (&self.x0 * 2.0 + 1.0) * self.pi.sq() * 2.0 / (s * l) * bracket;
        vec![("sqrt_terms", first), ("log_cube", second), ("x0_term", third)]
    }

    pub fn f5z(&self) -> R {
        total(&self.f5z_parts())
    }

    pub fn f6z_parts(&self) -> Parts {
        let k = self.k;
        let (l, l2) = (&self.l, &self.l2);
        let l2pi = (&self.pi * 2.0).ln();
        vec![
            ("d1", &k.d1 * 2.0),
            ("d2_d3_d4", (&k.d2 + (&k.d3 + &k.d4) * 2.0) / l2),
            ("d8", &k.d8 * 8.0 / (&self.x0 * l * l2)),
            ("d11", (&k.d11 * 2.0 + l2pi * 2.0 + 1.5) / (l * l2)),
        ]
    }

    pub fn f6z(&self) -> R {
        total(&self.f6z_parts())
    }

    pub fn f7z_parts(&self) -> Parts {
        let (l, l2) = (&self.l, &self.l2);
        let inner = self.ctx.lit("1.5") / (l * l2) + self.f6z() * 2.0;
        vec![
            ("x0_f1", &self.x0 * self.lit("0.35") * self.f1()),
            ("f4z_f5z", self.j_factor() * (self.f4z() + self.f5z())),
            ("f6z_term", l2 / l.powi(3) * inner),
        ]
    }

    pub fn f7z(&self) -> R {
        total(&self.f7z_parts())
    }

    pub fn parts(&self, which: FWhich) -> Parts {
        match which {
            FWhich::F1 => vec![("f1", self.f1())],
            FWhich::F2 => vec![("f2", self.f2())],
            FWhich::F3 => vec![("f3", self.f3())],
            FWhich::F4 => self.f4_parts(),
            FWhich::F5 => self.f5_parts(),
            FWhich::F6 => self.f6_parts(),
            FWhich::F7 => self.f7_parts(),
            FWhich::F8 => self.f8_parts(),
            FWhich::F4z => self.f4z_parts(),
            FWhich::F5z => self.f5z_parts(),
            FWhich::F6z => self.f6z_parts(),
            FWhich::F7z => self.f7z_parts(),
        }
    }

    pub fn eval(&self, which: FWhich) -> R {
        total(&self.parts(which))
    }
}

/// Evaluates one f-function with an additive breakdown.
pub fn f_function(which: FWhich, k: &AssumptionConstants, args: &FArgs) -> Result<BoundBreakdown> {
    let x0 = args.x0.clone().ok_or_else(|| Error::Domain(format!("{} needs x0", which.name())))?;
    let t = match (&args.t, which.needs_t()) {
        (Some(t), _) => t.clone(),
        (None, false) => k.t1.clone(),
        (None, true) => return Err(Error::Domain(format!("{} needs T", which.name()))),
    };
    if which == FWhich::F8 && args.c.is_none() {
        return Err(Error::Domain("f8 needs c".into()));
    }
    let phi = args.phi.clone().unwrap_or_else(|| k.phi());
    let p = FPoint::new(k, x0.clone(), t.clone(), phi.clone())?;
    let mut b = BoundBreakdown::from_parts(which.name(), p.parts(which));
    b.inputs.push(("q".into(), k.q_real()));
    b.inputs.push(("x0".into(), x0));
    if which.needs_t() {
        b.inputs.push(("T".into(), t));
    }
    if matches!(which, FWhich::F7 | FWhich::F8) {
        b.inputs.push(("phi".into(), phi));
    }
    if let Some(c) = args.c {
        b.inputs.push(("c".into(), k.ctx.int(c as i64)));
        b.notes.push("f8 does not depend on c".into());
    }
    if which == FWhich::F5z || which == FWhich::F7z {
        b.notes.push("the (log x)^2 in the last term of f5z is evaluated at x = x0".into());
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f1_zeta_closed_form() {
        let c = Ctx::default();
        let k = AssumptionConstants::zeta(&c);
        let p = FPoint::standard(&k).unwrap();
        let x0 = c.two_pi_e_plus_one();
        let d5 = (c.pi() * 2.0).recip();
        let want = c.pi().sq() * d5.sq() * (x0 * 2.0 + 1.0) / (c.int(2).ln() * 2.0);
        assert!(p.f1().rel_diff(&want) < 1e-45);
    }

    #[test]
    fn f6_vanishes_with_zero_inputs() {
        let c = Ctx::default();
        let mut k = AssumptionConstants::zeta(&c);
        for v in [&mut k.d1, &mut k.d2, &mut k.d3, &mut k.d4, &mut k.cq4, &mut k.d8, &mut k.d11] {
            *v = c.int(0);
        }
        let p = FPoint::standard(&k).unwrap();
        let parts = p.f6_parts();
        // The "+1" in the d3 + d4 + c_{q,4} + 1 numerator survives.
        assert_eq!(parts.iter().filter(|(_, v)| !v.is_zero()).count(), 1);
    }

    #[test]
    fn reference_values() {
        // Independent mpmath transcription at 50 digits.
        let c = Ctx::default();
        let k = AssumptionConstants::zeta(&c);
        let p = FPoint::standard(&k).unwrap();
        assert!(p.f2().rel_diff(&c.lit("184502.39038698505998277984017315778150339254199486")) < 1e-40);
        assert!(p.f7z().rel_diff(&c.lit("6448152.8593449468757512262051338195921748005967788")) < 1e-40);
        let p0 = FPoint::new(&k, k.x0.clone(), k.t0.clone(), c.int(1)).unwrap();
        assert!(p0.f7z().rel_diff(&c.lit("106710096515.44085708832503726754839382025442910696")) < 1e-40);
    }

    #[test]
    fn breakdown_and_errors() {
        let c = Ctx::default();
        let k = AssumptionConstants::zeta(&c);
        let args = FArgs { x0: Some(k.x0.clone()), t: Some(k.t1.clone()), ..Default::default() };
        let b = f_function(FWhich::F7z, &k, &args).unwrap();
        assert_eq!(b.components.len(), 3);
        assert!(b.check_sum() < 1e-20);
        assert!(f_function(FWhich::F3, &k, &FArgs { x0: Some(k.x0.clone()), ..Default::default() }).is_err());
        assert!(f_function(FWhich::F8, &k, &args).is_err());
        assert!(f_function(FWhich::F1, &k, &FArgs::default()).is_err());
        assert_eq!("f7_zeta".parse::<FWhich>().unwrap(), FWhich::F7z);
    }

    #[test]
    fn f1_increasing_in_x0() {
        let c = Ctx::default();
        let k = AssumptionConstants::zeta(&c);
        let mut prev = c.int(0);
        for i in 0..50 {
            let x0 = c.e_to_e() + c.int(i) * 3.0;
            let v = FPoint::new(&k, x0, k.t1.clone(), c.int(1)).unwrap().f1();
            assert!(v > prev);
            prev = v;
        }
    }
}
