//! Working-precision reals on top of MPFR.
//!
//! `R` carries its own precision; binary operations use the larger of the two
//! operand precisions. Decimal literals go through [`Ctx::lit`] so values such
//! as 0.35 are parsed exactly to working precision instead of via `f64`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use rug::float::Constant;
use rug::ops::Pow;
use rug::Float;

use crate::error::{Error, Result};

pub const DEFAULT_DIGITS: u32 = 50;
pub const MIN_DIGITS: u32 = 30;

#[derive(Clone, Debug)]
pub struct R(pub Float);

/// Precision context: decimal digits and the derived MPFR bit count.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ctx {
    pub digits: u32,
    pub bits: u32,
}

impl Default for Ctx {
    fn default() -> Self {
        Ctx::new(DEFAULT_DIGITS).expect("default precision is valid")
    }
}

impl Ctx {
    pub fn new(digits: u32) -> Result<Ctx> {
        if digits < MIN_DIGITS {
            return Err(Error::Config(format!("precision must be at least {MIN_DIGITS} digits, got {digits}")));
        }
        let bits = (digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 16;
        Ok(Ctx { digits, bits })
    }

    /// Exact decimal literal such as "53.989" or "4e5".
    pub fn lit(&self, s: &str) -> R {
        self.parse(s).unwrap_or_else(|_| panic!("invalid decimal literal {s:?}"))
    }

    pub fn parse(&self, s: &str) -> Result<R> {
        let p = Float::parse(s.trim()).map_err(|e| Error::Domain(format!("cannot parse {s:?}: {e}")))?;
        Ok(R(Float::with_val(self.bits, p)))
    }

    pub fn int(&self, n: i64) -> R {
        R(Float::with_val(self.bits, n))
    }

    pub fn f(&self, x: f64) -> R {
        R(Float::with_val(self.bits, x))
    }

    pub fn pi(&self) -> R {
        R(Float::with_val(self.bits, Constant::Pi))
    }

    pub fn e(&self) -> R {
        self.int(1).exp()
    }

    pub fn euler_gamma(&self) -> R {
        R(Float::with_val(self.bits, Constant::Euler))
    }

    pub fn c2(&self) -> R {
        self.lit(crate::arith::consts::C2_DIGITS)
    }

    /// 2πe + 1.
    pub fn two_pi_e_plus_one(&self) -> R {
        self.pi() * self.e() * 2.0 + 1.0
    }

    /// e^e.
    pub fn e_to_e(&self) -> R {
        self.e().exp()
    }
}

impl R {
    pub fn prec(&self) -> u32 {
        self.0.prec()
    }

    pub fn zero_like(&self) -> R {
        R(Float::with_val(self.prec(), 0))
    }

    pub fn ln(&self) -> R {
        R(self.0.clone().ln())
    }

    pub fn exp(&self) -> R {
        R(self.0.clone().exp())
    }

    pub fn sqrt(&self) -> R {
        R(self.0.clone().sqrt())
    }

    pub fn cbrt(&self) -> R {
        R(self.0.clone().cbrt())
    }

    pub fn abs(&self) -> R {
        R(self.0.clone().abs())
    }

    pub fn sq(&self) -> R {
        R(self.0.clone().square())
    }

    pub fn powi(&self, n: i32) -> R {
        R(Float::with_val(self.prec(), (&self.0).pow(n)))
    }

    pub fn pow(&self, e: &R) -> R {
        R(Float::with_val(self.prec().max(e.prec()), (&self.0).pow(&e.0)))
    }

    pub fn recip(&self) -> R {
        R(self.0.clone().recip())
    }

    pub fn min(&self, o: &R) -> R {
        if self.0 <= o.0 {
            self.clone()
        } else {
            o.clone()
        }
    }

    pub fn max(&self, o: &R) -> R {
        if self.0 >= o.0 {
            self.clone()
        } else {
            o.clone()
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    pub fn is_finite(&self) -> bool {
        self.0.is_finite()
    }

    pub fn is_sign_negative(&self) -> bool {
        self.0.is_sign_negative() && !self.0.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Decimal string with `digits` significant digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        if self.0.is_zero() {
            return "0".into();
        }
        self.0.to_string_radix(10, Some(digits))
    }

    /// |a − b| / max(|a|, |b|), zero when both vanish.
    pub fn rel_diff(&self, o: &R) -> f64 {
        let d = (self - o).abs();
        let m = self.abs().max(&o.abs());
        if m.is_zero() {
            0.0
        } else {
            (d / m).to_f64()
        }
    }
}

impl fmt::Display for R {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = f.precision().unwrap_or(20);
        write!(f, "{}", self.to_decimal(d))
    }
}

impl PartialEq for R {
    fn eq(&self, o: &R) -> bool {
        self.0 == o.0
    }
}

impl PartialOrd for R {
    fn partial_cmp(&self, o: &R) -> Option<Ordering> {
        self.0.partial_cmp(&o.0)
    }
}

impl PartialEq<f64> for R {
    fn eq(&self, o: &f64) -> bool {
        self.0 == *o
    }
}

impl PartialOrd<f64> for R {
    fn partial_cmp(&self, o: &f64) -> Option<Ordering> {
        self.0.partial_cmp(o)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $op:tt) => {
        impl $tr<&R> for &R {
            type Output = R;
            fn $m(self, o: &R) -> R {
                R(Float::with_val(self.prec().max(o.prec()), &self.0 $op &o.0))
            }
        }
        impl $tr<R> for R {
            type Output = R;
            fn $m(self, o: R) -> R {
                &self $op &o
            }
        }
        impl $tr<&R> for R {
            type Output = R;
            fn $m(self, o: &R) -> R {
                &self $op o
            }
        }
        impl $tr<R> for &R {
            type Output = R;
            fn $m(self, o: R) -> R {
                self $op &o
            }
        }
        impl $tr<f64> for &R {
            type Output = R;
            fn $m(self, o: f64) -> R {
                R(Float::with_val(self.prec(), &self.0 $op o))
            }
        }
        impl $tr<f64> for R {
            type Output = R;
            fn $m(self, o: f64) -> R {
                &self $op o
            }
        }
        impl $tr<&R> for f64 {
            type Output = R;
            fn $m(self, o: &R) -> R {
                R(Float::with_val(o.prec(), self $op &o.0))
            }
        }
        impl $tr<R> for f64 {
            type Output = R;
            fn $m(self, o: R) -> R {
                self $op &o
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);
binop!(Div, div, /);

impl Neg for R {
    type Output = R;
    fn neg(self) -> R {
        R(-self.0)
    }
}

impl Neg for &R {
    type Output = R;
    fn neg(self) -> R {
        R(-self.0.clone())
    }
}

impl std::iter::Sum for R {
    fn sum<I: Iterator<Item = R>>(mut iter: I) -> R {
        let first = iter.next().expect("sum of an empty R iterator");
        iter.fold(first, |a, b| a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literals_are_exact_to_working_precision() {
        let c = Ctx::default();
        let a = c.lit("0.35");
        let b = c.int(35) / 100.0;
        assert!(a.rel_diff(&b) < 1e-55);
        assert!(c.f(0.35).rel_diff(&a) > 1e-18);
        assert_eq!(c.bits, 183);
        assert!(Ctx::new(29).is_err());
    }

    #[test]
    fn constants() {
        let c = Ctx::default();
        assert!(c.pi().to_decimal(30).starts_with("3.14159265358979323846264338"));
        assert!(c.euler_gamma().to_decimal(30).starts_with("5.77215664901532860606512090"));
        assert!((c.two_pi_e_plus_one().to_f64() - 18.079468445347134).abs() < 1e-13);
    }
}
