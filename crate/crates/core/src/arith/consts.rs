//! Euler's constant C₀ and the twin-prime constant C₂ = ∏_{p>2}(1 − (p−1)⁻²).
//!
//! C₂ is stored without a factor 2. [`twin_prime_constant`] recomputes it
//! from a finite Euler product times a tail obtained from prime zeta values,
//! together with a bound on the truncated part of the tail series.

use super::factor::moebius;
use crate::bounds::hp::{Ctx, R};

pub const C0_DIGITS: &str = "0.57721566490153286060651209008240243104215933593992";
pub const C2_DIGITS: &str = "0.66016181584686957392781211001455577843262336028473";

pub const C0: f64 = 0.577_215_664_901_532_9;
pub const C2: f64 = 0.660_161_815_846_869_6;

/// Cut-off for the explicit part of the product.
const SPLIT: u64 = 100;

fn small_primes(limit: u64) -> Vec<u64> {
    (2..=limit).filter(|&n| super::factor::is_prime(n)).collect()
}

/// log ζ_{>P}(s) where ζ_{>P} drops the Euler factors of primes ≤ P.
fn log_zeta_tail(ctx: &Ctx, s: u32, primes: &[u64]) -> R {
    let mut z = R(rug::Float::with_val(ctx.bits, rug::Float::zeta_u(s)));
    for &p in primes {
        let ps = ctx.int(p as i64).powi(-(s as i32));
        z = z * (1.0 - ps);
    }
    z.ln()
}

/// Recomputed C₂ and an upper bound for the neglected part of the series.
pub fn twin_prime_constant(ctx: &Ctx) -> (R, R) {
    let work = Ctx::new(ctx.digits + 20).expect("valid precision");
    let primes = small_primes(SPLIT);
    let mut log_c = work.int(0);
    for &p in primes.iter().skip(1) {
        let pm = work.int(p as i64 - 1);
        log_c = log_c + (1.0 - pm.sq().recip()).ln();
    }
    let eps = work.int(10).powi(-(work.digits as i32));
    let ratio = 2.0 / (SPLIT as f64);
    let kmax = ((work.digits as f64 + 5.0) * 10f64.ln() / -ratio.ln()).ceil() as u32 + 2;
    for k in 2..=kmax {
        // Prime zeta over p > SPLIT via Möbius inversion of log ζ.
        let mut pz = work.int(0);
        let mut n = 1u32;
        loop {
            let mu = moebius(n as u64);
            if mu != 0 {
                let term = log_zeta_tail(&work, n * k, &primes) / (n as f64);
                if term.abs() < eps.clone() * 1e-10 {
                    break;
                }
                pz = if mu > 0 { pz + term } else { pz - term };
            }
            n += 1;
            if n * k > 4000 {
                break;
            }
        }
        let coef = (work.int(2).powi(k as i32) - 2.0) / (k as f64);
        log_c = log_c - pz * coef;
    }
    // Σ_{k>K} 2^k Σ_{m>P} m^{-k} ≤ Σ_{k>K} 2^k P^{1-k}/(k-1).
    let p = SPLIT as f64;
    let mut tail = work.int(0);
    for k in (kmax + 1)..(kmax + 200) {
        tail = tail + work.int(2).powi(k as i32) * work.f(p).powi(1 - k as i32) / ((k - 1) as f64);
    }
    let value = log_c.exp();
    (R(rug::Float::with_val(ctx.bits, &value.0)), tail * 2.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literals_match_recomputation() {
        let ctx = Ctx::default();
        let (c2, tail) = twin_prime_constant(&ctx);
        assert!(c2.rel_diff(&ctx.c2()) < 1e-40, "{c2:.55}");
        assert!(tail < 1e-40);
        assert!(ctx.euler_gamma().rel_diff(&ctx.lit(C0_DIGITS)) < 1e-48);
        assert!((C2 - ctx.c2().to_f64()).abs() < 1e-16);
    }

    #[test]
    fn plain_product_brackets_literal() {
        let mut prod = 1.0f64;
        for p in small_primes(100_000).into_iter().skip(1) {
            let pm = (p - 1) as f64;
            prod *= 1.0 - 1.0 / (pm * pm);
        }
        // Tail over p > 10⁵ lies in [1 − 1/(10⁵−1), 1].
        assert!(prod >= C2 && prod * (1.0 - 1.0 / 99_999.0) <= C2);
    }
}
