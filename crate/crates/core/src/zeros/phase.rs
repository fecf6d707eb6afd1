//! Reduction of γ·log u modulo 2π in double-double arithmetic.

use rug::Float;

const TWO_PI_HI: f64 = 6.283_185_307_179_586;
const TWO_PI_LO: f64 = 2.449_293_598_294_706_4e-16;

#[derive(Clone, Copy, Debug)]
pub struct DoubleDouble {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

/// log u to about 32 digits, as an unevaluated sum hi + lo.
pub fn ln_dd(u: f64) -> DoubleDouble {
    let l = Float::with_val(160, u).ln();
    let hi = l.to_f64();
    let lo = (l - hi).to_f64();
    DoubleDouble { hi, lo }
}

/// (γ·log u) mod 2π in (−π, π], with log u given in double-double.
#[inline]
pub fn reduced_phase(gamma: f64, ln_u: DoubleDouble) -> f64 {
    let (ph, pl) = two_prod(gamma, ln_u.hi);
    let pl = pl + gamma * ln_u.lo;
    let (th, tl) = two_sum(ph, pl);
    let k = (th / TWO_PI_HI).round();
    let (kh, kl) = two_prod(k, TWO_PI_HI);
    let r = th - kh;
    r + (tl - kl - k * TWO_PI_LO)
}

/// (cos, sin) of γ·log u after reduction.
#[inline]
pub fn cis(gamma: f64, ln_u: DoubleDouble) -> (f64, f64) {
    let r = reduced_phase(gamma, ln_u);
    let (s, c) = r.sin_cos();
    (c, s)
}
