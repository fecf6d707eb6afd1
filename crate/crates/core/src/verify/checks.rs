use rayon::prelude::*;

use super::{CheckKind, CheckSpec, Group, Resources, Tally};
use crate::arith::series::singular_series_residue_sum;
use crate::arith::{euler_phi, gcd, j_table, phi_star, singular_series, CharacterGroup, SieveTable, C64};
use crate::bounds::hp::Ctx;
use crate::bounds::region;
use crate::bounds::{theorem_bound, threshold, ThmWhich, ThresholdKind};
use crate::goldbach::{goldbach_all, summatory_s, summatory_s_brute, summatory_s_congruence, Method};
use crate::zeros::{Cutoff, ZeroTable};

/// Truncation height of the explicit-formula check.
pub const EXPLICIT_T: f64 = 4e5;
/// Sample points of the explicit-formula check.
pub const EXPLICIT_U: [f64; 4] = [1e3, 1e4, 1e5, 1e6];

const PER_DECADE: usize = 50;

macro_rules! spec {
    ($id:expr, $kind:ident, $group:ident, $anchor:expr, $grid:expr, $sieve:expr, $height:expr, $run:expr) => {
        CheckSpec {
            id: $id,
            kind: CheckKind::$kind,
            group: Group::$group,
            anchor: $anchor,
            grid: $grid,
            sieve: $sieve,
            height: $height,
            run: $run,
        }
    };
}

pub(super) fn specs() -> Vec<CheckSpec> {
    let h = super::ZERO_HEIGHT_MIN;
    vec![
        spec!("arith.phiStarEnumeration", Oracle, Arithmetic, "lemma:psi1Estimate, phi* multiplicative formula",
            "q in 1..=500", 0, 0.0, phi_star_enumeration),
        spec!("arith.singularSeriesOrthogonality", Oracle, Arithmetic, "lemma:singular series residue identity",
            "q in 1..=60, c in 1..=q, every chi mod q, tolerance 1e-9 absolute", 0, 0.0, singular_series_identity),
        spec!("constants.d8Zeta", Constant, Zeros, "zeta constants table, d8 = 0.04621",
            "T log-spaced in [15, height], 50 per decade", 0, h, d8_zeta),
        spec!("constants.threshold.thm1", Constant, Constants, "theorem on S(x), log x >= 1.7e13",
            "single point, 3% band and residual < 1e-20", 0, 0.0, |r| threshold_check(r, ThresholdKind::Thm1LogX, 1.7e13)),
        spec!("constants.threshold.thm3", Constant, Constants, "eq:logqLowerNum, log x >= 6.7e13",
            "single point, 3% band and residual < 1e-20", 0, 0.0, |r| threshold_check(r, ThresholdKind::Thm3LogX, 6.7e13)),
        spec!("constants.thm1", Constant, Constants, "theorem on S(x), 6.794",
            "log x at the thm1 threshold", 0, 0.0, |r| theorem_check(r, ThmWhich::Thm1)),
        spec!("constants.thm2", Constant, Constants, "theorem on S(x) with zero sum, 13.149",
            "log x = 1e6", 0, 0.0, |r| theorem_check(r, ThmWhich::Thm2)),
        spec!("constants.thm3", Constant, Constants, "theorem on S(x;q,a,b), 5.805",
            "q = 400001, log x at the thm3 threshold", 0, 0.0, |r| theorem_check(r, ThmWhich::Thm3)),
        spec!("constants.thm4", Constant, Constants, "theorem on S(x;q,a,b) with zero sum, 7.246",
            "q = 400001, log x = 1e8", 0, 0.0, |r| theorem_check(r, ThmWhich::Thm4)),
        spec!("lemma.ExplicitZeroInterval", Lemma, Zeros, "lemma:ExplicitZeroInterval, principal form",
            "T = 9, 19, ... up to height - 1", 0, h, explicit_zero_interval),
        spec!("lemma.explicitMangoldt", Lemma, Arithmetic, "lemma:explicitMangoldt, psi(x) <= 1.03883x",
            "every integer x <= sieve limit", 10_000_000, 0.0, explicit_mangoldt),
        spec!("lemma.numberofPrincipalZeros", Lemma, Zeros, "eq:numberofPrincipalZeros, 0.34 log T + 3.996",
            "T log-spaced in [3, height], 50 per decade", 0, h, principal_count),
        spec!("lemma.principalrhoT", Lemma, Zeros, "lemma:principalrhoT, (1/4pi) log^2(T/2pi)",
            "T log-spaced in [4 pi e, height], 50 per decade", 0, h, principal_rho_t),
        spec!("lemma.prodpp2", Lemma, Arithmetic, "lemma:prodpp2, x >= 286",
            "x = 286 and every prime in (286, 1e6]", 1_000_000, 0.0, prodpp2),
        spec!("lemma.psi1Estimate", Lemma, Arithmetic, "lemma:psi1Estimate, q not 2 mod 4",
            "q in 3..=10000, q not 2 mod 4", 0, 0.0, psi1_estimate),
        spec!("lemma.psiPrincipal", Lemma, Explicit, "cor:psiPrincipal, truncated explicit formula",
            "u in {1e3, 1e4, 1e5, 1e6}, T = 4e5", 1_000_000, EXPLICIT_T, explicit_formula),
        spec!("lemma.rho2Zeta", Lemma, Zeros, "lemma:rho2Zeta, < 0.023105",
            "full table, and tail bound at T log-spaced in [2 pi e, height]", 0, h, rho2_zeta),
        spec!("lemma.zerosBetween", Lemma, Zeros, "cor:zerosBetween, 3.523 log(T+1)",
            "T = 2 pi e + 1 + 10k up to height - 1", 0, h, zeros_between),
        spec!("oracle.characterRecombination", Oracle, Consistency, "character orthogonality recombination",
            "q in 1..=20, (ab,q) = 1, x in 4..=2000, tolerance 1e-6 relative", 2000, 0.0, character_recombination),
        spec!("oracle.gFftDirect", Oracle, Consistency, "G(n) by FFT against direct convolution",
            "n in 0..=5000, tolerance 1e-4 absolute", 5000, 0.0, g_fft_direct),
        spec!("oracle.residuePartition", Oracle, Consistency, "residue classes partition S(x)",
            "q in 1..=20, x in {100, 1000, 1777, 2000}, tolerance 1e-12 relative", 2000, 0.0, residue_partition),
        spec!("oracle.sBrutePrefix", Oracle, Consistency, "S(x) by pairs against the prefix rearrangement",
            "x in 0..=2000, tolerance 1e-9 relative", 2000, 0.0, s_brute_prefix),
        spec!("sanity.hardyLittlewood", Sanity, Consistency, "Hardy-Littlewood main term, not a lemma",
            "x = 1e6, band [0.95, 1.05]", 1_000_000, 0.0, hardy_littlewood),
    ]
}

/// Log-spaced points in [lo, hi] with `PER_DECADE` points per decade, endpoints included.
pub(crate) fn log_grid(lo: f64, hi: f64) -> Vec<f64> {
    if hi <= lo {
        return vec![lo];
    }
    let n = ((hi / lo).log10() * PER_DECADE as f64).ceil().max(1.0) as usize;
    let (a, b) = (lo.ln(), hi.ln());
    let mut v: Vec<f64> = (0..=n).map(|i| (a + (b - a) * i as f64 / n as f64).exp()).collect();
    v[0] = lo;
    v[n] = hi;
    v
}

/// Smallest double not below `v`.
fn up(ctx: &Ctx, v: &crate::bounds::hp::R) -> f64 {
    let f = v.to_f64();
    if ctx.f(f) < *v {
        f64::from_bits(f.to_bits() + 1)
    } else {
        f
    }
}

fn rel_floor(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs().max(1.0)
}

fn bad(t: &mut Tally, e: crate::Error) {
    t.notes.push(e.to_string());
    t.observe(f64::MAX, &[]);
}

fn principal_count(r: &Resources) -> Tally {
    let z = r.zeros();
    let mut t = Tally::new();
    for tv in log_grid(3.0, z.height) {
        let n = 2 * z.count_le(tv).expect("grid within height");
        match region::zeros_principal(&r.ctx, &r.ctx.f(tv)) {
            Ok(b) => {
                let dev = (r.ctx.int(n as i64) - &b.center).abs() / &b.radius;
                t.observe(dev.to_f64(), &[("T", tv), ("N", n as f64)]);
            }
            Err(e) => bad(&mut t, e),
        }
    }
    t.notes.push("N(T) counts zeros with |gamma| <= T, both signs; ratio is |N - center| / radius".into());
    t
}

fn principal_rho_t(r: &Resources) -> Tally {
    let z = r.zeros();
    let mut t = Tally::new();
    for tv in log_grid(up(&r.ctx, &(r.ctx.pi() * 4.0 * r.ctx.e())), z.height) {
        let s = z.sum_inv_rho(tv).expect("grid within height").value;
        let b = region::principal_rho_t(&r.ctx, &r.ctx.f(tv)).expect("T >= 4 pi e");
        t.observe(s / b.to_f64(), &[("T", tv)]);
    }
    t
}

fn rho2_zeta(r: &Resources) -> Tally {
    let z = r.zeros();
    let mut t = Tally::new();
    let full = z.sum_inv_gamma_sq(0.0).expect("T = 0 is covered");
    let tail = full.tail.unwrap_or(0.0);
    t.observe(full.value / 0.023105, &[("T", 0.0)]);
    t.observe((full.value + tail) / 0.023106, &[("T", 0.0), ("with_tail", 1.0)]);
    t.notes.push(format!("partial sum {:.9}, analytic tail beyond the height {:.3e}", full.value, tail));
    for tv in log_grid(up(&r.ctx, &(r.ctx.pi() * 2.0 * r.ctx.e())), z.height) {
        let s = z.sum_inv_gamma_sq(tv).expect("grid within height");
        let b = region::rho2_zeta_tail(&r.ctx, &r.ctx.f(tv)).expect("T >= 2 pi e");
        t.observe((s.value + tail) / b.to_f64(), &[("T", tv)]);
    }
    t
}

fn d8_zeta(r: &Resources) -> Tally {
    let z = r.zeros();
    let mut t = Tally::new();
    for tv in log_grid(15.0, z.height) {
        let s = z.sum_inv_rho_rho1(Cutoff::AbsRho(tv)).expect("grid within height");
        t.observe(s.value / 0.04621, &[("T", tv)]);
    }
    t
}

fn interval_grid(lo: f64, height: f64) -> impl Iterator<Item = f64> {
    (0..).map(move |k| lo + 10.0 * k as f64).take_while(move |&v| v <= height - 1.0)
}

fn zeros_between(r: &Resources) -> Tally {
    let z = r.zeros();
    let mut t = Tally::new();
    for tv in interval_grid(up(&r.ctx, &r.ctx.two_pi_e_plus_one()), z.height) {
        let n = z.count_interval(tv).expect("grid within height");
        let b = region::interval_corollary_zeta(&r.ctx, &r.ctx.f(tv)).expect("T >= 2 pi e + 1");
        t.observe(n as f64 / b.to_f64(), &[("T", tv), ("count", n as f64)]);
    }
    t
}

fn explicit_zero_interval(r: &Resources) -> Tally {
    let z = r.zeros();
    let mut t = Tally::new();
    for tv in interval_grid(9.0, z.height) {
        let n = z.count_interval(tv).expect("grid within height");
        let b = region::interval_principal(&r.ctx, &r.ctx.f(tv)).expect("T >= 9");
        t.observe(n as f64 / b.to_f64(), &[("T", tv), ("count", n as f64)]);
    }
    t
}

fn explicit_formula(r: &Resources) -> Tally {
    explicit_formula_tally(r.sieve(), r.zeros(), &r.ctx, &EXPLICIT_U, EXPLICIT_T)
}

/// |ψ(u) − u + log 2π + Σ_{|γ|<T} u^ρ/ρ| against the right side of the
/// truncated explicit formula with q = 1.
pub fn explicit_formula_tally(sieve: &SieveTable, z: &ZeroTable, ctx: &Ctx, us: &[f64], tv: f64) -> Tally {
    let mut t = Tally::new();
    if tv < EXPLICIT_T {
        t.unmet = true;
        t.notes.push(format!("the truncated formula needs T >= 4e5, got {tv}"));
        return t;
    }
    for &u in us {
        let tr = ctx.f(tv);
        let rhs = match region::psi_principal(ctx, 1, &ctx.f(u), &tr) {
            Ok(b) => b.total.to_f64(),
            Err(e) => {
                t.unmet = true;
                t.notes.push(e.to_string());
                continue;
            }
        };
        let psi = match sieve.psi_real(u) {
            Ok(p) => p,
            Err(e) => {
                bad(&mut t, e);
                continue;
            }
        };
        match z.psi_explicit_truncated(u, tv) {
            Ok(e) => {
                let lhs = (psi - e.value).abs();
                t.notes.push(format!("u = {u:e}: |LHS| = {lhs:.6}, RHS = {rhs:.6}, {} zeros", e.terms_used));
                t.observe(lhs / rhs, &[("u", u), ("T", tv)]);
            }
            Err(e) => bad(&mut t, e),
        }
    }
    t
}

fn explicit_mangoldt(r: &Resources) -> Tally {
    let s = r.sieve();
    let mut t = Tally::new();
    let mut worst = (0.0f64, 1usize);
    for n in 1..=s.limit() {
        let v = s.psi(n) / (1.03883 * n as f64);
        if v > worst.0 {
            worst = (v, n);
        }
    }
    t.observe(worst.0, &[("x", worst.1 as f64)]);
    t.points = s.limit();
    t.notes.push("psi is a step function, so its sup over [n, n+1) divided by x is attained at x = n".into());
    t
}

fn prodpp2(r: &Resources) -> Tally {
    let s = r.sieve();
    let ctx = &r.ctx;
    let k = ((ctx.euler_gamma() * 2.0).exp() / (ctx.c2() * 4.0)).to_f64();
    let rhs = |x: f64| {
        let l2 = x.ln().powi(2);
        k * l2 * (1.0 + 1.0 / (2.0 * l2)).powi(2)
    };
    let mut t = Tally::new();
    let mut log_prod = crate::arith::Neumaier::new();
    let top = 1_000_000.min(s.limit());
    for p in 3..=top {
        if !s.is_prime(p) {
            continue;
        }
        if p > 286 && t.points == 0 {
            t.observe(log_prod.value().exp() / rhs(286.0), &[("x", 286.0)]);
        }
        log_prod.add((p as f64 / (p as f64 - 2.0)).ln());
        if p > 286 {
            t.observe(log_prod.value().exp() / rhs(p as f64), &[("x", p as f64)]);
        }
    }
    let exact = region::prodpp2_rhs(ctx, &ctx.int(286)).expect("x = 286").to_f64();
    if (exact - rhs(286.0)).abs() > 1e-12 * exact {
        t.notes.push("double-precision right side disagrees with the 50-digit value at 286".into());
        t.observe(f64::MAX, &[("x", 286.0)]);
    }
    t
}

fn psi1_estimate(r: &Resources) -> Tally {
    let mut t = Tally::new();
    for q in (3..=10_000u64).filter(|q| q % 4 != 2) {
        let rhs = region::psi1_rhs(&r.ctx, q).expect("q not 2 mod 4").to_f64();
        t.observe(q as f64 / phi_star(q) as f64 / rhs, &[("q", q as f64)]);
    }
    t
}

fn phi_star_enumeration(_: &Resources) -> Tally {
    let rows: Vec<(u64, u64, u64)> = (1..=500u64)
        .into_par_iter()
        .map(|q| (q, CharacterGroup::new(q).expect("q <= 500").primitive_count(), phi_star(q)))
        .collect();
    let mut t = Tally::new();
    for (q, enumerated, formula) in rows {
        let d = enumerated.abs_diff(formula);
        t.observe(if d == 0 { 0.0 } else { 1.0 + d as f64 }, &[("q", q as f64)]);
    }
    t
}

fn singular_series_identity(_: &Resources) -> Tally {
    let tol = 1e-9;
    let parts: Vec<Tally> = (1..=60u64)
        .into_par_iter()
        .map(|q| {
            let mut t = Tally::new();
            let g = CharacterGroup::new(q).expect("q <= 60");
            let phi2 = (euler_phi(q) as f64).powi(2);
            for (i, chi) in g.characters.iter().enumerate() {
                for c in 1..=q {
                    let lhs = singular_series_residue_sum(q, c, chi);
                    let rhs = singular_series(q, c, chi).expect("matching modulus") * phi2;
                    t.observe((lhs - rhs).norm() / tol, &[("q", q as f64), ("c", c as f64), ("chi", i as f64)]);
                }
            }
            t
        })
        .collect();
    fold(parts)
}

fn fold(parts: Vec<Tally>) -> Tally {
    let mut t = Tally::new();
    for p in parts {
        t.absorb(p);
    }
    t
}

fn s_brute_prefix(r: &Resources) -> Tally {
    let s = r.sieve();
    let direct = goldbach_all(2000, s, Method::Direct).expect("sieve covers 2000");
    let mut t = Tally::new();
    let mut acc = crate::arith::Neumaier::new();
    for x in 0..=2000usize {
        acc.add(direct.get(x));
        let prefix = summatory_s(x, s).expect("sieve covers 2000").value;
        t.observe(rel_floor(prefix, acc.value()) / 1e-9, &[("x", x as f64)]);
    }
    for x in [1777usize, 2000] {
        let brute = summatory_s_brute(x, s).expect("sieve covers 2000").value;
        let prefix = summatory_s(x, s).expect("sieve covers 2000").value;
        t.observe(rel_floor(prefix, brute) / 1e-9, &[("x", x as f64), ("pairs", 1.0)]);
    }
    t
}

fn g_fft_direct(r: &Resources) -> Tally {
    let s = r.sieve();
    let direct = goldbach_all(5000, s, Method::Direct).expect("sieve covers 5000");
    let fft = goldbach_all(5000, s, Method::Fft).expect("sieve covers 5000");
    let mut t = Tally::new();
    for n in 0..=5000usize {
        t.observe((fft.get(n) - direct.get(n)).abs() / 1e-4, &[("n", n as f64)]);
    }
    t
}

const RECOMB_X: usize = 2000;

/// A sieve of exactly the oracle range, so that cached residue-class
/// prefixes stay small.
fn oracle_sieve(r: &Resources) -> SieveTable {
    let _ = r.sieve();
    SieveTable::build(RECOMB_X).expect("2000 is a valid sieve limit")
}

fn character_recombination(r: &Resources) -> Tally {
    let s = &oracle_sieve(r);
    let parts: Vec<Tally> = (1..=20u64).into_par_iter().map(|q| recombine(q, s)).collect();
    fold(parts)
}

/// For one modulus: S(x;χ₁,χ₂) for every x and every pair, then the
/// orthogonality recombination against the congruence sums.
fn recombine(q: u64, s: &SieveTable) -> Tally {
    let g = CharacterGroup::new(q).expect("q <= 20");
    let qu = q as usize;
    let tables: Vec<Vec<C64>> = g.characters.iter().map(|c| c.table()).collect();
    let pp: Vec<usize> = s.prime_powers().iter().map(|&n| n as usize).take_while(|&n| n <= RECOMB_X).collect();
    let psi: Vec<Vec<C64>> = tables
        .iter()
        .map(|tb| {
            let mut acc = crate::arith::ComplexSum::new();
            (0..=RECOMB_X)
                .map(|n| {
                    let l = s.lambda(n);
                    if l != 0.0 {
                        acc.add(tb[n % qu] * l);
                    }
                    acc.value()
                })
                .collect()
        })
        .collect();
    let k = tables.len();
    // pair[i][j][x] = S(x; χ_i, χ_j)
    let mut pair = vec![vec![vec![C64::new(0.0, 0.0); RECOMB_X + 1]; k]; k];
    for i in 0..k {
        for j in 0..k {
            for x in 4..=RECOMB_X {
                let mut acc = crate::arith::ComplexSum::new();
                for &l in &pp {
                    if l + 2 > x {
                        break;
                    }
                    let c = tables[i][l % qu];
                    if c.re != 0.0 || c.im != 0.0 {
                        acc.add(c * psi[j][x - l] * s.lambda(l));
                    }
                }
                pair[i][j][x] = acc.value();
            }
        }
    }
    let phi2 = (k * k) as f64;
    let mut t = Tally::new();
    let units: Vec<u64> = (1..=q).filter(|&a| gcd(a % q, q) == 1).collect();
    for &a in &units {
        for &b in &units {
            let weights: Vec<Vec<C64>> = (0..k)
                .map(|i| (0..k).map(|j| (tables[i][(a % q) as usize] * tables[j][(b % q) as usize]).conj()).collect())
                .collect();
            for x in 4..=RECOMB_X {
                let mut acc = crate::arith::ComplexSum::new();
                for i in 0..k {
                    for j in 0..k {
                        acc.add(weights[i][j] * pair[i][j][x]);
                    }
                }
                let recomb = acc.value() / phi2;
                let cong = summatory_s_congruence(x, q, a, b, s).expect("valid residues").value;
                let err = (recomb.re - cong).abs().max(recomb.im.abs());
                t.observe(err / (1e-6 * cong.abs().max(1.0)), &[("q", q as f64), ("a", a as f64), ("b", b as f64), ("x", x as f64)]);
            }
        }
    }
    t
}

fn residue_partition(r: &Resources) -> Tally {
    let s = &oracle_sieve(r);
    let mut t = Tally::new();
    for q in 1..=20u64 {
        for x in [100usize, 1000, 1777, 2000] {
            let mut acc = crate::arith::Neumaier::new();
            for a in 1..=q {
                for b in 1..=q {
                    acc.add(summatory_s_congruence(x, q, a, b, s).expect("valid residues").value);
                }
            }
            let total = summatory_s(x, s).expect("sieve covers x").value;
            t.observe(rel_floor(acc.value(), total) / 1e-12, &[("q", q as f64), ("x", x as f64)]);
        }
    }
    t
}

fn hardy_littlewood(r: &Resources) -> Tally {
    let s = r.sieve();
    let x = 1_000_000usize;
    let g = summatory_s(x, s).expect("sieve covers 1e6").value;
    let j = j_table(x);
    let mut acc = crate::arith::Neumaier::new();
    for n in (2..=x).step_by(2) {
        acc.add(j[n]);
    }
    let ratio = g / acc.value();
    let mut t = Tally::new();
    t.observe((ratio - 1.0).abs() / 0.05, &[("x", x as f64), ("ratio", ratio)]);
    t.notes.push(format!("sum G / sum over even n of J = {ratio:.6}"));
    t.notes.push(format!("with C2 = 2 * prod(1 - 1/(p-1)^2) in J the ratio would be {:.6}", ratio / 2.0));
    t
}

fn theorem_check(r: &Resources, which: ThmWhich) -> Tally {
    let ctx = &r.ctx;
    let mut t = Tally::new();
    let log_x = match which {
        ThmWhich::Thm1 => threshold(ctx, ThresholdKind::Thm1LogX, None).map(|v| v.log_x),
        ThmWhich::Thm2 => Ok(ctx.lit("1e6")),
        ThmWhich::Thm3 => threshold(ctx, ThresholdKind::Thm3LogX, None).map(|v| v.log_x),
        ThmWhich::Thm4 => Ok(ctx.lit("1e8")),
    };
    let q = matches!(which, ThmWhich::Thm3 | ThmWhich::Thm4).then_some(400_001);
    let b = match log_x.and_then(|lx| theorem_bound(ctx, which, &lx, q).map(|b| (lx, b))) {
        Ok(b) => b,
        Err(e) => {
            bad(&mut t, e);
            return t;
        }
    };
    let (lx, b) = b;
    let packaged = ctx.lit(which.packaged());
    let v = &b.total;
    let upper = (v / &packaged).to_f64();
    let lower = (&packaged / 2.0 / v).to_f64();
    t.observe(upper.max(lower), &[("log_x", lx.to_f64())]);
    t.notes.push(format!("recomputed {} against packaged {}", v.to_decimal(12), which.packaged()));
    for (k, e) in &b.extras {
        t.notes.push(format!("{k} = {}", e.to_decimal(12)));
    }
    if !b.hypotheses_met {
        t.notes.push("theorem hypotheses are not met at this point".into());
    }
    t
}

fn threshold_check(r: &Resources, kind: ThresholdKind, printed: f64) -> Tally {
    let mut t = Tally::new();
    match threshold(&r.ctx, kind, None) {
        Ok(th) => {
            let v = th.log_x.to_f64();
            let rel = (v - printed).abs() / printed;
            t.observe((rel / 0.03).max(th.residual / 1e-20), &[("log_x", v)]);
            t.notes.push(format!("log x threshold {} (relative gap {rel:.4}), residual {:e}", th.log_x.to_decimal(12), th.residual));
        }
        Err(e) => bad(&mut t, e),
    }
    t
}
