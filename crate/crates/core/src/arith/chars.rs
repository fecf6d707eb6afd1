//! Dirichlet characters with exact root-of-unity exponents.
//!
//! The unit group mod q is decomposed along the prime powers of q. Odd prime
//! powers are cyclic; 2^α for α ≥ 3 splits as ⟨−1⟩ × ⟨5⟩. A character is an
//! exponent vector over these cyclic factors and its value at a unit n is
//! e(k/L), where L is the exponent of the group.

use std::sync::Arc;

use serde::Serialize;

use super::factor::{factorize, small_multiplicative};
use super::C64;
use crate::error::{Error, Result};

pub const MAX_MODULUS: u64 = 1_000_000;

#[derive(Debug)]
struct Component {
    p: u64,
    modulus: u64,
    order: u64,
    // Discrete log of each unit residue mod `modulus`; u64::MAX off units.
    dlog: Vec<u64>,
    kind: Kind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Odd,
    MinusOne,
    Five,
}

#[derive(Debug)]
struct Tables {
    q: u64,
    exponent: u64,
    components: Vec<Component>,
}

impl Tables {
    fn exp_at(&self, exps: &[u64], n: u64) -> Option<u64> {
        if gcd(n % self.q.max(1), self.q) != 1 && self.q > 1 {
            return None;
        }
        let mut k = 0u64;
        for (c, &e) in self.components.iter().zip(exps) {
            if e == 0 {
                continue;
            }
            let d = c.dlog[(n % c.modulus) as usize];
            let step = self.exponent / c.order;
            k = (k + (e * d % c.order) * step) % self.exponent;
        }
        Some(k)
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let f = factorize(p - 1);
    (2..p)
        .find(|&g| f.primes().all(|r| pow_mod(g, (p - 1) / r, p) != 1))
        .expect("primitive root exists")
}

fn build_components(q: u64) -> Vec<Component> {
    let mut out = Vec::new();
    for &(p, a) in &factorize(q).factors {
        let m = p.pow(a);
        if p == 2 {
            if a == 1 {
                continue;
            }
            let mut sign = vec![u64::MAX; m as usize];
            let mut five = vec![u64::MAX; m as usize];
            if a == 2 {
                sign[1] = 0;
                sign[3] = 1;
                out.push(Component { p, modulus: m, order: 2, dlog: sign, kind: Kind::MinusOne });
                continue;
            }
            let ord5 = m / 4;
            let mut v = 1u64;
            for k in 0..ord5 {
                sign[v as usize] = 0;
                five[v as usize] = k;
                sign[(m - v) as usize] = 1;
                five[(m - v) as usize] = k;
                v = v * 5 % m;
            }
            out.push(Component { p, modulus: m, order: 2, dlog: sign, kind: Kind::MinusOne });
            out.push(Component { p, modulus: m, order: ord5, dlog: five, kind: Kind::Five });
        } else {
            let mut g = primitive_root(p);
            if a > 1 && pow_mod(g, p - 1, p * p) == 1 {
                g += p;
            }
            let order = (p - 1) * p.pow(a - 1);
            let mut dlog = vec![u64::MAX; m as usize];
            let mut v = 1u64;
            for k in 0..order {
                dlog[v as usize] = k;
                v = v * g % m;
            }
            out.push(Component { p, modulus: m, order, dlog, kind: Kind::Odd });
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct DirichletCharacter {
    tables: Arc<Tables>,
    pub index: usize,
    pub exps: Vec<u64>,
    pub conductor: u64,
    pub order: u64,
    pub parity: i8,
    pub is_principal: bool,
    pub is_real: bool,
}

/// Serializable summary of one character.
#[derive(Clone, Debug, Serialize)]
pub struct CharacterInfo {
    pub modulus: u64,
    pub index: usize,
    pub exponents: Vec<u64>,
    pub conductor: u64,
    pub order: u64,
    pub parity: i8,
    pub principal: bool,
    pub real: bool,
    pub primitive: bool,
}

impl DirichletCharacter {
    pub fn modulus(&self) -> u64 {
        self.tables.q
    }

    pub fn is_primitive(&self) -> bool {
        self.conductor == self.tables.q
    }

    /// χ(n) = e(k/L) as the pair (k, L), or None when (n, q) > 1.
    pub fn exponent_at(&self, n: u64) -> Option<(u64, u64)> {
        self.tables.exp_at(&self.exps, n).map(|k| (k, self.tables.exponent))
    }

    pub fn value(&self, n: u64) -> C64 {
        match self.exponent_at(n) {
            None => C64::new(0.0, 0.0),
            Some((k, l)) => root_of_unity(k, l),
        }
    }

    pub fn value_i64(&self, n: i64) -> C64 {
        let q = self.tables.q as i64;
        self.value(n.rem_euclid(q.max(1)) as u64)
    }

    /// Values at the residues 0..q.
    pub fn table(&self) -> Vec<C64> {
        (0..self.tables.q.max(1)).map(|n| self.value(n)).collect()
    }

    /// Value of the primitive character inducing this one, at any integer c.
    pub fn primitive_value(&self, c: u64) -> C64 {
        if gcd(c, self.conductor) != 1 {
            return C64::new(0.0, 0.0);
        }
        let t = &self.tables;
        let mut k = 0u64;
        for (comp, &e) in t.components.iter().zip(&self.exps) {
            if e == 0 {
                continue;
            }
            let d = comp.dlog[(c % comp.modulus) as usize];
            k = (k + (e * d % comp.order) * (t.exponent / comp.order)) % t.exponent;
        }
        root_of_unity(k, t.exponent)
    }

    pub fn info(&self) -> CharacterInfo {
        CharacterInfo {
            modulus: self.modulus(),
            index: self.index,
            exponents: self.exps.clone(),
            conductor: self.conductor,
            order: self.order,
            parity: self.parity,
            principal: self.is_principal,
            real: self.is_real,
            primitive: self.is_primitive(),
        }
    }
}

pub fn root_of_unity(k: u64, l: u64) -> C64 {
    let k = k % l;
    if k == 0 {
        return C64::new(1.0, 0.0);
    }
    if 2 * k == l {
        return C64::new(-1.0, 0.0);
    }
    if 4 * k == l {
        return C64::new(0.0, 1.0);
    }
    if 4 * k == 3 * l {
        return C64::new(0.0, -1.0);
    }
    let g = gcd(k, l);
    let ang = 2.0 * std::f64::consts::PI * (k / g) as f64 / (l / g) as f64;
    C64::new(ang.cos(), ang.sin())
}

#[derive(Clone, Debug)]
pub struct CharacterGroup {
    pub q: u64,
    pub characters: Vec<DirichletCharacter>,
    pub principal: usize,
}

impl CharacterGroup {
    pub fn new(q: u64) -> Result<CharacterGroup> {
        if q == 0 {
            return Err(Error::Domain("character modulus must be positive".into()));
        }
        if q > MAX_MODULUS {
            return Err(Error::Resource(format!("character groups are limited to q ≤ {MAX_MODULUS}, got {q}")));
        }
        let components = build_components(q);
        let exponent = components.iter().fold(1u64, |acc, c| lcm(acc, c.order));
        let tables = Arc::new(Tables { q, exponent, components });
        let orders: Vec<u64> = tables.components.iter().map(|c| c.order).collect();
        let total: u64 = orders.iter().product();
        debug_assert_eq!(total, small_multiplicative(q).phi);
        let mut characters = Vec::with_capacity(total as usize);
        let mut exps = vec![0u64; orders.len()];
        for index in 0..total as usize {
            characters.push(make_character(&tables, index, exps.clone()));
            // Mixed-radix increment, last component fastest.
            for i in (0..exps.len()).rev() {
                exps[i] += 1;
                if exps[i] < orders[i] {
                    break;
                }
                exps[i] = 0;
            }
        }
        Ok(CharacterGroup { q, characters, principal: 0 })
    }

    pub fn len(&self) -> usize {
        self.characters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.characters.is_empty()
    }

    pub fn get(&self, index: usize) -> Result<&DirichletCharacter> {
        self.characters
            .get(index)
            .ok_or_else(|| Error::Domain(format!("character index {index} out of range for q = {}", self.q)))
    }

    pub fn primitive_count(&self) -> u64 {
        self.characters.iter().filter(|c| c.is_primitive()).count() as u64
    }
}

fn make_character(t: &Arc<Tables>, index: usize, exps: Vec<u64>) -> DirichletCharacter {
    let mut conductor = 1u64;
    let mut order = 1u64;
    let mut two_sign = 0u64;
    let mut two_five: Option<(u64, u64)> = None;
    for (c, &e) in t.components.iter().zip(&exps) {
        let ord = c.order / gcd(e, c.order);
        order = lcm(order, ord);
        match c.kind {
            Kind::Odd => {
                if e != 0 {
                    let mut pj = 1u64;
                    let mut o = ord;
                    while o % c.p == 0 {
                        o /= c.p;
                        pj *= c.p;
                    }
                    conductor *= pj * c.p;
                }
            }
            Kind::MinusOne => two_sign = e,
            Kind::Five => two_five = Some((e, ord)),
        }
    }
    match two_five {
        Some((e, ord)) if e != 0 => conductor *= 4 * ord,
        _ => {
            if two_sign != 0 {
                conductor *= 4;
            }
        }
    }
    let mut ch = DirichletCharacter {
        tables: t.clone(),
        index,
        exps,
        conductor,
        order,
        parity: 1,
        is_principal: conductor == 1,
        is_real: order <= 2,
    };
    if t.q > 2 {
        ch.parity = if ch.value(t.q - 1).re < 0.0 { -1 } else { 1 };
    }
    ch
}

/// Number of primitive characters mod q, from the multiplicative formula.
pub fn phi_star(q: u64) -> u64 {
    if q == 1 {
        return 1;
    }
    factorize(q)
        .factors
        .iter()
        .map(|&(p, a)| if a == 1 { p - 2 } else { (p - 1) * (p - 1) * p.pow(a - 2) })
        .product()
}

/// Number of primitive or principal characters mod q.
pub fn phi1_star(q: u64) -> u64 {
    if q == 1 {
        1
    } else {
        phi_star(q) + 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_groups() {
        let g1 = CharacterGroup::new(1).unwrap();
        assert_eq!(g1.len(), 1);
        assert_eq!(g1.characters[0].value(17), C64::new(1.0, 0.0));
        let g4 = CharacterGroup::new(4).unwrap();
        assert_eq!(g4.len(), 2);
        let chi = &g4.characters[1];
        assert_eq!((chi.conductor, chi.parity), (4, -1));
        let g12 = CharacterGroup::new(12).unwrap();
        assert_eq!(g12.len(), 4);
        assert_eq!(g12.primitive_count(), 1);
        assert_eq!((phi_star(12), phi1_star(12)), (1, 2));
        assert_eq!((phi_star(3), phi1_star(3)), (1, 2));
        assert_eq!((phi_star(1), phi1_star(1)), (1, 1));
        assert!(matches!(CharacterGroup::new(0), Err(Error::Domain(_))));
    }

    #[test]
    fn phi_star_matches_enumeration() {
        for q in 1..=200u64 {
            assert_eq!(CharacterGroup::new(q).unwrap().primitive_count(), phi_star(q), "q = {q}");
        }
    }
}
