//! Singular series 𝔖_q(c, χ) and the Hardy–Littlewood main term J(n).

use super::chars::DirichletCharacter;
use super::consts::C2;
use super::factor::{euler_phi, factorize, moebius};
use super::sum::ComplexSum;
use super::{gcd, C64};
use crate::error::{Error, Result};

/// 𝔖_q(c,χ) = μ(q*)χ*(c)/(φ(q)φ(q*)) ∏_{p|q, p∤q*c} (p−2)/(p−1),
/// with q* the conductor and χ* the inducing primitive character.
pub fn singular_series(q: u64, c: u64, chi: &DirichletCharacter) -> Result<C64> {
    if chi.modulus() != q {
        return Err(Error::Domain(format!(
            "character has modulus {} but the series is mod {q}",
            chi.modulus()
        )));
    }
    if c == 0 {
        return Err(Error::Domain("c must be at least 1".into()));
    }
    let qs = chi.conductor;
    let mu = moebius(qs) as f64;
    if mu == 0.0 {
        return Ok(C64::new(0.0, 0.0));
    }
    let mut prod = 1.0f64;
    for p in factorize(q).primes() {
        if qs % p != 0 && c % p != 0 {
            prod *= (p as f64 - 2.0) / (p as f64 - 1.0);
        }
    }
    let scale = mu * prod / (euler_phi(q) as f64 * euler_phi(qs) as f64);
    Ok(chi.primitive_value(c) * scale)
}

/// Σ_{a=1..q, (a(c−a),q)=1} χ(a), the residue sum that equals φ(q)²𝔖_q(c,χ).
pub fn singular_series_residue_sum(q: u64, c: u64, chi: &DirichletCharacter) -> C64 {
    let mut acc = ComplexSum::new();
    for a in 1..=q {
        let diff = (c as i64 - a as i64).unsigned_abs();
        if gcd(a, q) == 1 && gcd(diff, q) == 1 {
            acc.add(chi.value(a));
        }
    }
    acc.value()
}

/// J(n) = n C₂ ∏_{p|n, p>2} (p−1)/(p−2).
pub fn hardy_littlewood_j(n: u64) -> f64 {
    assert!(n >= 1, "J(n) needs n >= 1");
    let mut ratio = 1.0f64;
    for p in factorize(n).primes().filter(|&p| p > 2) {
        ratio *= (p as f64 - 1.0) / (p as f64 - 2.0);
    }
    n as f64 * C2 * ratio
}

/// J(n) for 0 ≤ n ≤ limit (J(0) set to 0). Factors are applied in
/// increasing prime order, matching [`hardy_littlewood_j`].
pub fn j_table(limit: usize) -> Vec<f64> {
    let mut ratio = vec![1.0f64; limit + 1];
    let mut composite = vec![false; limit + 1];
    for p in 2..=limit {
        if composite[p] {
            continue;
        }
        let mut m = p * p;
        while m <= limit {
            composite[m] = true;
            m += p;
        }
        if p == 2 {
            continue;
        }
        let f = (p as f64 - 1.0) / (p as f64 - 2.0);
        let mut k = p;
        while k <= limit {
            ratio[k] *= f;
            k += p;
        }
    }
    let mut out: Vec<f64> = ratio.iter().enumerate().map(|(n, r)| n as f64 * C2 * r).collect();
    if let Some(first) = out.first_mut() {
        *first = 0.0;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::chars::CharacterGroup;

    #[test]
    fn small_values() {
        let g3 = CharacterGroup::new(3).unwrap();
        let s = singular_series(3, 1, &g3.characters[0]).unwrap();
        assert!((s.re - 0.25).abs() < 1e-15 && s.im == 0.0);
        let g2 = CharacterGroup::new(2).unwrap();
        // p = 2 divides q but not q*c, so the factor (2−2)/(2−1) kills the series.
        assert_eq!(singular_series(2, 1, &g2.characters[0]).unwrap().re, 0.0);
        assert_eq!(singular_series_residue_sum(2, 1, &g2.characters[0]).re, 0.0);
        assert!(singular_series(4, 1, &g3.characters[0]).is_err());
    }

    #[test]
    fn j_values() {
        assert_eq!(hardy_littlewood_j(1), C2);
        assert_eq!(hardy_littlewood_j(2), 2.0 * C2);
        assert!((hardy_littlewood_j(15) - 40.0 * C2).abs() < 1e-12);
        assert_eq!(hardy_littlewood_j(1024), 1024.0 * C2);
        let t = j_table(2000);
        for n in 1..=2000u64 {
            assert_eq!(t[n as usize], hardy_littlewood_j(n), "n = {n}");
        }
    }
}
