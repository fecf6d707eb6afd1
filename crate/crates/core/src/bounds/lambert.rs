//! Lambert W on the real branches 0 and −1 by Halley iteration.

use super::hp::{Ctx, R};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    Principal,
    Minus1,
}

impl Branch {
    pub fn index(self) -> i8 {
        match self {
            Branch::Principal => 0,
            Branch::Minus1 => -1,
        }
    }
}

fn seed(branch: Branch, y: f64) -> f64 {
    let p2 = 2.0 * (std::f64::consts::E * y + 1.0);
    match branch {
        Branch::Principal => {
            if y < -0.25 {
                let p = p2.max(0.0).sqrt();
                -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p
            } else if y < 3.0 {
                (1.0 + y).ln() * 0.9
            } else {
                let l = y.ln();
                l - l.ln()
            }
        }
        Branch::Minus1 => {
            if y < -0.25 {
                let p = -p2.max(0.0).sqrt();
                -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p
            } else {
                let l = (-y).ln();
                l - (-l).ln()
            }
        }
    }
}

/// W(y) on the chosen branch, with w·e^w = y to working precision.
pub fn lambert_w(ctx: &Ctx, branch: Branch, y: &R) -> Result<R> {
    let inv_e = ctx.e().recip();
    let lower = -&inv_e;
    if *y < lower {
        return Err(Error::Domain(format!("Lambert W is real only for y ≥ −1/e, got {}", y.to_f64())));
    }
    if branch == Branch::Minus1 && !y.is_sign_negative() {
        return Err(Error::Domain(format!("branch −1 needs −1/e ≤ y < 0, got {}", y.to_f64())));
    }
    if y.is_zero() {
        return Ok(ctx.int(0));
    }
    let tiny = ctx.int(10).powi(-(ctx.digits as i32));
    if ((y * ctx.e()) + 1.0).abs() < tiny {
        return Ok(ctx.int(-1));
    }
    let mut w = ctx.f(seed(branch, y.to_f64()));
    let eps = ctx.int(2).powi(-(ctx.bits as i32) + 8);
    for _ in 0..200 {
        let ew = w.exp();
        let f = &w * &ew - y;
        let wp1 = &w + 1.0;
        let denom = &ew * &wp1 - (&w + 2.0) * &f / (wp1 * 2.0);
        let step = f / denom;
        w = &w - &step;
        if step.abs() <= w.abs() * &eps {
            break;
        }
    }
    let ok = match branch {
        Branch::Principal => w >= -1.0,
        Branch::Minus1 => w <= -1.0,
    };
    if !ok {
        return Err(Error::Domain(format!("Halley iteration left branch {} at y = {}", branch.index(), y.to_f64())));
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn branch_points_and_residuals() {
        let c = Ctx::default();
        let y = -c.e().recip();
        assert_eq!(lambert_w(&c, Branch::Minus1, &y).unwrap(), -1.0);
        assert_eq!(lambert_w(&c, Branch::Principal, &c.int(0)).unwrap(), 0.0);
        for s in ["-0.1", "-0.3", "-0.0001", "-1e-30", "-0.36787"] {
            let y = c.lit(s);
            for b in [Branch::Principal, Branch::Minus1] {
                let w = lambert_w(&c, b, &y).unwrap();
                assert!((&w * w.exp()).rel_diff(&y) < 1e-30, "{s} {b:?}");
            }
        }
        for s in ["0.5", "1", "1e10", "1e300"] {
            let y = c.lit(s);
            let w = lambert_w(&c, Branch::Principal, &y).unwrap();
            assert!((&w * w.exp()).rel_diff(&y) < 1e-30, "{s}");
        }
        assert!(lambert_w(&c, Branch::Minus1, &c.lit("0.1")).is_err());
        assert!(lambert_w(&c, Branch::Principal, &c.lit("-0.5")).is_err());
    }
}
