//! Exact desk-scale Goldbach sums.
//!
//! Every summatory function is computed through the rearrangement
//! S(x) = Σ_{ℓ≤x−1} Λ(ℓ)ψ(x−ℓ) against a prefix array, so a single value of
//! S costs one pass over the prime powers below x. [`goldbach_all`] produces
//! every G(n) at once, either directly or by FFT self-convolution.

use rayon::prelude::*;
use rustfft::FftPlanner;
use serde::Serialize;

use crate::arith::series::j_table;
use crate::arith::sum::{ComplexSum, Neumaier};
use crate::arith::{gcd, DirichletCharacter, SieveTable, C64};
use crate::error::{Error, Result};

/// Largest table length accepted by the FFT path.
pub const FFT_MAX_LIMIT: usize = 1 << 26;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Direct,
    Fft,
    Prefix,
    Brute,
}

impl std::str::FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Method> {
        match s {
            "direct" => Ok(Method::Direct),
            "fft" => Ok(Method::Fft),
            "prefix" => Ok(Method::Prefix),
            "brute" => Ok(Method::Brute),
            _ => Err(Error::Domain(format!("unknown method {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GoldbachTable {
    pub limit: usize,
    /// G[n] for 0 ≤ n ≤ limit.
    pub values: Vec<f64>,
    pub method: Method,
}

impl GoldbachTable {
    pub fn get(&self, n: usize) -> f64 {
        self.values[n]
    }

    /// Σ_{n≤x} G(n) in index order.
    pub fn summatory(&self, x: usize) -> f64 {
        self.values[..=x.min(self.limit)].iter().copied().collect::<Neumaier>().value()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SummatoryResult {
    pub x: u64,
    pub value: f64,
    /// Imaginary part for character-twisted sums, zero otherwise.
    pub imag: f64,
    pub decomposition: Option<Vec<(String, f64)>>,
    pub method: Method,
    pub notes: Vec<String>,
}

impl SummatoryResult {
    fn real(x: u64, value: f64, method: Method) -> Self {
        SummatoryResult { x, value, imag: 0.0, decomposition: None, method, notes: Vec::new() }
    }

    pub fn complex(&self) -> C64 {
        C64::new(self.value, self.imag)
    }
}

fn check_modulus(q: u64) -> Result<()> {
    if q == 0 {
        return Err(Error::Domain("modulus must be positive".into()));
    }
    Ok(())
}

/// G(n) = Σ_{ℓ+m=n} Λ(ℓ)Λ(m).
#[allow(non_snake_case)]
pub fn goldbach_G(n: usize, sieve: &SieveTable) -> Result<f64> {
    sieve.check(n)?;
    Ok(g_direct(n, sieve))
}

fn g_direct(n: usize, sieve: &SieveTable) -> f64 {
    let mut acc = Neumaier::new();
    for &l in sieve.prime_powers() {
        let l = l as usize;
        if l + 2 > n {
            break;
        }
        let lm = sieve.lambda(n - l);
        if lm != 0.0 {
            acc.add(sieve.lambda(l) * lm);
        }
    }
    acc.value()
}

/// Number of ordered prime pairs (p₁, p₂) with p₁ + p₂ = n.
pub fn goldbach_g(n: usize, sieve: &SieveTable) -> Result<u64> {
    sieve.check(n)?;
    if n % 2 == 1 {
        return Err(Error::Domain(format!("g(n) is defined here for even n, got {n}")));
    }
    Ok((2..n.saturating_sub(1)).filter(|&p| sieve.is_prime(p) && sieve.is_prime(n - p)).count() as u64)
}

/// G(n) for every 0 ≤ n ≤ limit.
pub fn goldbach_all(limit: usize, sieve: &SieveTable, method: Method) -> Result<GoldbachTable> {
    sieve.check(limit)?;
    let values = match method {
        Method::Direct => (0..=limit).into_par_iter().map(|n| g_direct(n, sieve)).collect(),
        Method::Fft => {
            if limit > FFT_MAX_LIMIT {
                return Err(Error::Resource(format!(
                    "FFT convolution is limited to n ≤ {FFT_MAX_LIMIT}, got {limit}"
                )));
            }
            fft_convolution(&sieve.lambdas()[..=limit])
        }
        _ => return Err(Error::Domain("goldbach_all supports the direct and fft methods".into())),
    };
    Ok(GoldbachTable { limit, values, method })
}

fn fft_convolution(lambda: &[f64]) -> Vec<f64> {
    let len = lambda.len();
    let size = (2 * len).next_power_of_two();
    let mut buf: Vec<C64> = lambda.iter().map(|&v| C64::new(v, 0.0)).collect();
    buf.resize(size, C64::new(0.0, 0.0));
    let mut planner = FftPlanner::new();
    planner.plan_fft_forward(size).process(&mut buf);
    for z in buf.iter_mut() {
        *z = *z * *z;
    }
    planner.plan_fft_inverse(size).process(&mut buf);
    let scale = 1.0 / size as f64;
    buf[..len]
        .iter()
        .enumerate()
        .map(|(n, z)| if n <= 3 { 0.0 } else { (z.re * scale).max(0.0) })
        .collect()
}

/// S(x) = Σ_{n≤x} G(n) by the prefix-sum rearrangement.
pub fn summatory_s(x: usize, sieve: &SieveTable) -> Result<SummatoryResult> {
    sieve.check(x)?;
    Ok(SummatoryResult::real(x as u64, s_prefix(x, sieve), Method::Prefix))
}

fn s_prefix(x: usize, sieve: &SieveTable) -> f64 {
    let mut acc = Neumaier::new();
    for &l in sieve.prime_powers() {
        let l = l as usize;
        if l + 2 > x {
            break;
        }
        acc.add(sieve.lambda(l) * sieve.psi(x - l));
    }
    acc.value()
}

/// S(x) as the plain double sum over pairs ℓ + m ≤ x.
pub fn summatory_s_brute(x: usize, sieve: &SieveTable) -> Result<SummatoryResult> {
    sieve.check(x)?;
    let mut acc = Neumaier::new();
    for n in 4..=x {
        for l in 2..=n - 2 {
            let a = sieve.lambda(l);
            if a != 0.0 {
                let b = sieve.lambda(n - l);
                if b != 0.0 {
                    acc.add(a * b);
                }
            }
        }
    }
    Ok(SummatoryResult::real(x as u64, acc.value(), Method::Brute))
}

/// S(x;q,a,b) = Σ_{ℓ+m≤x, ℓ≡a, m≡b (mod q)} Λ(ℓ)Λ(m).
pub fn summatory_s_congruence(x: usize, q: u64, a: u64, b: u64, sieve: &SieveTable) -> Result<SummatoryResult> {
    sieve.check(x)?;
    check_modulus(q)?;
    if a == 0 || b == 0 || a > q || b > q {
        return Err(Error::Domain(format!("residues must satisfy 1 ≤ a, b ≤ q, got a = {a}, b = {b}, q = {q}")));
    }
    let prefix = sieve.class_prefix(q, b)?;
    let a = a % q;
    let mut acc = Neumaier::new();
    for &l in sieve.prime_powers() {
        let l = l as usize;
        if l + 2 > x {
            break;
        }
        if l as u64 % q == a {
            acc.add(sieve.lambda(l) * prefix[x - l]);
        }
    }
    let mut out = SummatoryResult::real(x as u64, acc.value(), Method::Prefix);
    if gcd(a * b % q, q) != 1 && q > 1 {
        out.notes.push("(ab, q) > 1: outside the coprime classes the theorems assume".into());
    }
    Ok(out)
}

/// ψ(k, χ) for 0 ≤ k ≤ upto.
pub fn psi_chi_prefix(upto: usize, chi: &DirichletCharacter, sieve: &SieveTable) -> Result<Vec<C64>> {
    sieve.check(upto)?;
    let mut acc = ComplexSum::new();
    let mut out = Vec::with_capacity(upto + 1);
    for n in 0..=upto {
        let l = sieve.lambda(n);
        if l != 0.0 {
            acc.add(chi.value(n as u64) * l);
        }
        out.push(acc.value());
    }
    Ok(out)
}

/// ψ(x, χ) = Σ_{n≤x} χ(n)Λ(n).
pub fn psi_chi(x: usize, chi: &DirichletCharacter, sieve: &SieveTable) -> Result<C64> {
    sieve.check(x)?;
    let mut acc = ComplexSum::new();
    for &n in sieve.prime_powers() {
        if n as usize > x {
            break;
        }
        acc.add(chi.value(n as u64) * sieve.lambda(n as usize));
    }
    Ok(acc.value())
}

/// S(x; χ₁, χ₂) = Σ_{n≤x} Σ_{ℓ+m=n} χ₁(ℓ)Λ(ℓ)χ₂(m)Λ(m).
pub fn summatory_s_characters(
    x: usize,
    chi1: &DirichletCharacter,
    chi2: &DirichletCharacter,
    sieve: &SieveTable,
) -> Result<SummatoryResult> {
    let psi2 = psi_chi_prefix(x, chi2, sieve)?;
    let z = s_characters_with_prefix(x, chi1, chi2, &psi2, sieve)?;
    Ok(SummatoryResult {
        x: x as u64,
        value: z.re,
        imag: z.im,
        decomposition: None,
        method: Method::Prefix,
        notes: Vec::new(),
    })
}

/// Same as [`summatory_s_characters`] with ψ(·, χ₂) supplied by the caller,
/// for sweeps over many x.
pub fn s_characters_with_prefix(
    x: usize,
    chi1: &DirichletCharacter,
    chi2: &DirichletCharacter,
    psi2: &[C64],
    sieve: &SieveTable,
) -> Result<C64> {
    if chi1.modulus() != chi2.modulus() {
        return Err(Error::Domain(format!(
            "characters have different moduli {} and {}",
            chi1.modulus(),
            chi2.modulus()
        )));
    }
    sieve.check(x)?;
    if psi2.len() <= x {
        return Err(Error::Domain(format!("ψ(·, χ₂) prefix covers {} values, need {}", psi2.len(), x + 1)));
    }
    let mut acc = ComplexSum::new();
    for &l in sieve.prime_powers() {
        let l = l as usize;
        if l + 2 > x {
            break;
        }
        let c = chi1.value(l as u64);
        if c.re != 0.0 || c.im != 0.0 {
            acc.add(c * psi2[x - l] * sieve.lambda(l));
        }
    }
    Ok(acc.value())
}

/// Σ_{n≤x, n≡c (mod q)} (G(n) − J(n)), together with the two partial sums.
#[allow(non_snake_case)]
pub fn G_minus_J_sum(x: usize, q: u64, c: u64, sieve: &SieveTable) -> Result<SummatoryResult> {
    sieve.check(x)?;
    check_modulus(q)?;
    let qu = q as usize;
    let c = (c % q) as usize;
    let strided = sieve.strided_prefix(qu, x);
    // Largest t ≤ x − ℓ with ℓ + t ≡ c is x − ℓ − s.
    let s = (x + qu - c % qu) % qu;
    let mut g = Neumaier::new();
    for &l in sieve.prime_powers() {
        let l = l as usize;
        if l + s + 2 > x {
            break;
        }
        g.add(sieve.lambda(l) * strided[x - l - s]);
    }
    let js = j_table(x);
    let mut j = Neumaier::new();
    let start = if c == 0 { qu } else { c };
    let mut n = start;
    while n <= x {
        j.add(js[n]);
        n += qu;
    }
    let (gv, jv) = (g.value(), j.value());
    let mut out = SummatoryResult::real(x as u64, gv - jv, Method::Prefix);
    out.decomposition = Some(vec![("sum_G".into(), gv), ("sum_J".into(), jv)]);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::CharacterGroup;

    fn sieve(n: usize) -> SieveTable {
        SieveTable::build(n).unwrap()
    }

    #[test]
    fn small_g_values() {
        let s = sieve(100);
        let (l2, l3, l5, l7) = (2f64.ln(), 3f64.ln(), 5f64.ln(), 7f64.ln());
        assert_eq!(goldbach_G(4, &s).unwrap(), l2 * l2);
        assert_eq!(goldbach_G(3, &s).unwrap(), 0.0);
        let want = 2.0 * l2 * l2 + 2.0 * l3 * l7 + l5 * l5;
        assert!((goldbach_G(10, &s).unwrap() - want).abs() < 1e-14);
        assert_eq!(goldbach_g(4, &s).unwrap(), 1);
        assert_eq!(goldbach_g(6, &s).unwrap(), 1);
        assert_eq!(goldbach_g(10, &s).unwrap(), 3);
        assert!(goldbach_G(101, &s).is_err());
    }

    #[test]
    fn tiny_tables() {
        let s = sieve(10);
        let t = goldbach_all(4, &s, Method::Direct).unwrap();
        assert_eq!(t.values, vec![0.0, 0.0, 0.0, 0.0, 2f64.ln().powi(2)]);
        let t = goldbach_all(2, &s, Method::Fft).unwrap();
        assert_eq!(t.values, vec![0.0; 3]);
    }

    #[test]
    fn summatory_small() {
        let s = sieve(100);
        let (l2, l3) = (2f64.ln(), 3f64.ln());
        let v = summatory_s(5, &s).unwrap().value;
        assert!((v - (l2 * l2 + 2.0 * l2 * l3)).abs() < 1e-14);
        assert_eq!(summatory_s(3, &s).unwrap().value, 0.0);
    }

    #[test]
    fn congruence_partition_and_q1() {
        let s = sieve(3000);
        let total = summatory_s(2500, &s).unwrap().value;
        assert_eq!(summatory_s_congruence(2500, 1, 1, 1, &s).unwrap().value, total);
        let mut acc = Neumaier::new();
        for a in 1..=6 {
            for b in 1..=6 {
                acc.add(summatory_s_congruence(2500, 6, a, b, &s).unwrap().value);
            }
        }
        assert!((acc.value() - total).abs() <= 1e-10 * total);
        let r = summatory_s_congruence(20, 3, 3, 1, &s).unwrap();
        assert_eq!(r.notes.len(), 1);
    }

    #[test]
    fn congruence_matches_brute() {
        let s = sieve(100);
        let mut want = 0.0;
        for l in 1..20usize {
            for m in 1..=(20 - l) {
                if l % 3 == 2 && m % 3 == 2 {
                    want += s.lambda(l) * s.lambda(m);
                }
            }
        }
        let got = summatory_s_congruence(20, 3, 2, 2, &s).unwrap().value;
        assert!((got - want).abs() < 1e-12);
    }

    #[test]
    fn characters_mod_one_and_conjugation() {
        let s = sieve(1000);
        let g1 = CharacterGroup::new(1).unwrap();
        let c = &g1.characters[0];
        let z = summatory_s_characters(700, c, c, &s).unwrap();
        assert!((z.value - summatory_s(700, &s).unwrap().value).abs() < 1e-9 && z.imag == 0.0);
        let g5 = CharacterGroup::new(5).unwrap();
        let (a, b) = (&g5.characters[1], &g5.characters[3]);
        let (ca, cb) = (&g5.characters[3], &g5.characters[1]);
        let z1 = summatory_s_characters(500, a, b, &s).unwrap().complex();
        let z2 = summatory_s_characters(500, ca, cb, &s).unwrap().complex();
        assert!((z1 - z2.conj()).norm() < 1e-9);
        assert!(summatory_s_characters(10, a, &CharacterGroup::new(4).unwrap().characters[1], &s).is_err());
    }

    #[test]
    fn psi_chi_mod_four() {
        let s = sieve(200);
        let g4 = CharacterGroup::new(4).unwrap();
        let chi = &g4.characters[1];
        let mut want = 0.0;
        for n in 1..=100usize {
            want += chi.value(n as u64).re * s.lambda(n);
        }
        assert!((psi_chi(100, chi, &s).unwrap().re - want).abs() < 1e-12);
        let g1 = CharacterGroup::new(1).unwrap();
        assert_eq!(psi_chi(10, &g1.characters[0], &s).unwrap().re, s.psi(10));
    }

    #[test]
    fn g_minus_j_two_pass() {
        let s = sieve(10_000);
        let r = G_minus_J_sum(10_000, 3, 0, &s).unwrap();
        let mut g = 0.0;
        let mut j = 0.0;
        for n in (3..=10_000usize).step_by(3) {
            g += goldbach_G(n, &s).unwrap();
            j += crate::arith::hardy_littlewood_j(n as u64);
        }
        assert!((r.value - (g - j)).abs() < 1e-6 * g);
        let small = G_minus_J_sum(3, 1, 0, &s).unwrap();
        let want: f64 = (1..=3).map(crate::arith::hardy_littlewood_j).sum();
        assert!((small.value + want).abs() < 1e-12);
    }
}
