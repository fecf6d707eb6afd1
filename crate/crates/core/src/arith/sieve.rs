use std::collections::BTreeMap;
use std::sync::{Arc, RwLock};

use super::sum::Neumaier;
use crate::error::{Error, Result};

pub const DEFAULT_BUDGET: usize = 100_000_000;

/// Per-integer von Mangoldt values with global and lazily built
/// residue-class prefix sums.
#[derive(Debug)]
pub struct SieveTable {
    limit: usize,
    lambda: Vec<f64>,
    psi_prefix: Vec<f64>,
    prime: Vec<bool>,
    prime_powers: Vec<u32>,
    classes: RwLock<BTreeMap<(u64, u64), Arc<Vec<f64>>>>,
}

impl SieveTable {
    pub fn build(limit: usize) -> Result<SieveTable> {
        Self::build_with_budget(limit, &[], DEFAULT_BUDGET)
    }

    pub fn build_with_budget(limit: usize, classes: &[(u64, u64)], budget: usize) -> Result<SieveTable> {
        if limit < 2 {
            return Err(Error::Domain(format!("sieve limit must be at least 2, got {limit}")));
        }
        if limit > budget {
            return Err(Error::Resource(format!(
                "sieve limit {limit} exceeds the memory budget of {budget} entries"
            )));
        }
        let mut prime = vec![true; limit + 1];
        prime[0] = false;
        prime[1] = false;
        let mut i = 2;
        while i * i <= limit {
            if prime[i] {
                let mut j = i * i;
                while j <= limit {
                    prime[j] = false;
                    j += i;
                }
            }
            i += 1;
        }
        let mut lambda = vec![0.0f64; limit + 1];
        for p in 2..=limit {
            if !prime[p] {
                continue;
            }
            let lp = (p as f64).ln();
            let mut pk = p;
            loop {
                lambda[pk] = lp;
                match pk.checked_mul(p) {
                    Some(next) if next <= limit => pk = next,
                    _ => break,
                }
            }
        }
        let mut psi_prefix = Vec::with_capacity(limit + 1);
        let mut acc = Neumaier::new();
        for &l in &lambda {
            if l != 0.0 {
                acc.add(l);
            }
            psi_prefix.push(acc.value());
        }
        let prime_powers = (2..=limit).filter(|&n| lambda[n] != 0.0).map(|n| n as u32).collect();
        let table = SieveTable {
            limit,
            lambda,
            psi_prefix,
            prime,
            prime_powers,
            classes: RwLock::new(BTreeMap::new()),
        };
        for &(q, r) in classes {
            table.class_prefix(q, r)?;
        }
        Ok(table)
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    #[inline]
    pub fn lambda(&self, n: usize) -> f64 {
        self.lambda[n]
    }

    pub fn lambdas(&self) -> &[f64] {
        &self.lambda
    }

    #[inline]
    pub fn is_prime(&self, n: usize) -> bool {
        self.prime[n]
    }

    /// All prime powers up to the limit in increasing order.
    pub fn prime_powers(&self) -> &[u32] {
        &self.prime_powers
    }

    /// ψ(k) for integer k (ψ(0) = ψ(1) = 0).
    #[inline]
    pub fn psi(&self, k: usize) -> f64 {
        self.psi_prefix[k]
    }

    pub fn psi_prefix(&self) -> &[f64] {
        &self.psi_prefix
    }

    /// ψ(x) for real x, 0 ≤ x ≤ limit.
    pub fn psi_real(&self, x: f64) -> Result<f64> {
        if !(0.0..=self.limit as f64).contains(&x) {
            return Err(Error::Domain(format!("x = {x} outside sieve range [0, {}]", self.limit)));
        }
        Ok(self.psi_prefix[x.floor() as usize])
    }

    pub fn check(&self, n: usize) -> Result<()> {
        if n > self.limit {
            return Err(Error::Domain(format!("{n} exceeds sieve limit {}", self.limit)));
        }
        Ok(())
    }

    /// Prefix sums Σ_{n≤k, n≡r (mod q)} Λ(n), built on first request.
    pub fn class_prefix(&self, q: u64, r: u64) -> Result<Arc<Vec<f64>>> {
        if q == 0 {
            return Err(Error::Domain("modulus must be positive".into()));
        }
        let r = r % q;
        if let Some(v) = self.classes.read().unwrap().get(&(q, r)) {
            return Ok(v.clone());
        }
        let mut out = Vec::with_capacity(self.limit + 1);
        let mut acc = Neumaier::new();
        for (n, &l) in self.lambda.iter().enumerate() {
            if l != 0.0 && n as u64 % q == r {
                acc.add(l);
            }
            out.push(acc.value());
        }
        let arc = Arc::new(out);
        self.classes.write().unwrap().insert((q, r), arc.clone());
        Ok(arc)
    }

    /// R[k] = Σ_{m≤k, m≡k (mod q)} Λ(m): one array answering every class.
    pub fn strided_prefix(&self, q: usize, upto: usize) -> Vec<f64> {
        let upto = upto.min(self.limit);
        let mut accs = vec![Neumaier::new(); q];
        let mut out = Vec::with_capacity(upto + 1);
        for n in 0..=upto {
            let a = &mut accs[n % q];
            let l = self.lambda[n];
            if l != 0.0 {
                a.add(l);
            }
            out.push(a.value());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn limit_ten() {
        let s = SieveTable::build(10).unwrap();
        let l2 = 2f64.ln();
        assert_eq!(s.lambda(8), l2);
        assert_eq!(s.lambda(6), 0.0);
        let want = 3.0 * l2 + 2.0 * 3f64.ln() + 5f64.ln() + 7f64.ln();
        assert!((s.psi(10) - want).abs() < 1e-14);
        assert_eq!(s.prime_powers(), &[2, 3, 4, 5, 7, 8, 9]);
    }

    #[test]
    fn limit_two_and_errors() {
        let s = SieveTable::build(2).unwrap();
        assert_eq!(s.psi(2), 2f64.ln());
        assert!(matches!(SieveTable::build(1), Err(Error::Domain(_))));
        assert!(matches!(
            SieveTable::build_with_budget(1000, &[], 999),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn classes_partition_psi() {
        let s = SieveTable::build(5000).unwrap();
        for q in [1u64, 3, 4, 12] {
            let total: f64 = (0..q).map(|r| s.class_prefix(q, r).unwrap()[5000]).sum();
            assert!((total - s.psi(5000)).abs() < 1e-9 * s.psi(5000));
        }
        let r = s.strided_prefix(7, 5000);
        let c = s.class_prefix(7, 5000 % 7).unwrap();
        assert_eq!(r[5000], c[5000]);
    }
}
