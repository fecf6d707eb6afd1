//! Hand-written bound evaluators against the manifest evaluator, 100 grid
//! points each, to 1e-25 relative.

use goldbach_explicit::bounds::hp::{Ctx, R};
use goldbach_explicit::bounds::manifest::{Evaluator, Manifest};
use goldbach_explicit::bounds::region::{self, CharClass};
use goldbach_explicit::bounds::{theorem_bound, AssumptionConstants, Context, FPoint, FWhich, ThmWhich};

const TOL: f64 = 1e-25;
const N: usize = 100;

fn log_grid(lo: &R, hi: &R) -> Vec<R> {
    let (a, b) = (lo.ln(), hi.ln());
    (0..N).map(|i| ((&b - &a) * (i as f64 / (N - 1) as f64) + &a).exp()).collect()
}

fn int_grid(lo: u64, hi: u64) -> Vec<u64> {
    let (a, b) = ((lo as f64).ln(), (hi as f64).ln());
    let mut v: Vec<u64> = (0..N).map(|i| (a + (b - a) * i as f64 / (N - 1) as f64).exp().round() as u64).collect();
    v[0] = lo;
    v[N - 1] = hi;
    v
}

fn close(hand: &R, table: &R, what: &str) {
    let d = hand.rel_diff(table);
    assert!(d < TOL, "{what}: hand {hand} vs manifest {table} (rel {d:e})");
}

fn ev<'a>(m: &'a Manifest, c: Ctx, context: Context, q: u64) -> Evaluator<'a> {
    m.evaluator(c, context).set("q", c.int(q as i64))
}

#[test]
fn f_functions_zeta() {
    let c = Ctx::default();
    let m = Manifest::builtin();
    let k = AssumptionConstants::zeta(&c);
    let xs = log_grid(&c.e_to_e(), &c.lit("1e6"));
    let ts = log_grid(&c.two_pi_e_plus_one(), &c.lit("1e7"));
    for (x0, t) in xs.iter().zip(ts.iter().rev()) {
        let p = FPoint::new(&k, x0.clone(), t.clone(), c.int(1)).unwrap();
        let e = ev(&m, c, Context::Zeta, 1).set("x0", x0.clone()).set("T", t.clone()).set("phi", c.int(1));
        for w in FWhich::ALL {
            close(&p.eval(w), &e.eval(w.name()).unwrap(), w.name());
        }
    }
}

#[test]
fn f_functions_general() {
    let c = Ctx::default();
    let m = Manifest::builtin();
    let qs = int_grid(3, 10_000_000_000);
    let xs = log_grid(&c.e_to_e(), &c.lit("1e4"));
    for (i, &q) in qs.iter().enumerate() {
        let k = AssumptionConstants::general(&c, q).unwrap();
        let x0 = &xs[(i * 37) % N];
        let t = c.e_to_e() * (1.0 + i as f64);
        let phi = c.int(1 + (q / 3) as i64);
        let p = FPoint::new(&k, x0.clone(), t.clone(), phi.clone()).unwrap();
        let e = ev(&m, c, Context::GeneralQ, q).set("x0", x0.clone()).set("T", t.clone()).set("phi", phi);
        for w in FWhich::ALL {
            close(&p.eval(w), &e.eval(w.name()).unwrap(), &format!("{} at q = {q}", w.name()));
        }
    }
}

#[test]
fn theorem_coefficients() {
    let c = Ctx::default();
    let m = Manifest::builtin();
    let z = AssumptionConstants::zeta(&c);
    for lx in log_grid(&c.lit("1e6"), &c.lit("1e15")) {
        let e = ev(&m, c, Context::Zeta, 1).set("T", z.t1.clone()).set("phi", c.int(1)).set("log_x", lx.clone());
        for w in [ThmWhich::Thm1, ThmWhich::Thm2] {
            close(&theorem_bound(&c, w, &lx, None).unwrap().total, &e.eval(w.name()).unwrap(), w.name());
        }
    }
    let qs = int_grid(400_001, 100_000_001);
    for (i, q) in qs.into_iter().filter(|q| q % 4 != 2).enumerate() {
        let lx = c.lit("1e8") * (1.0 + i as f64);
        let g = AssumptionConstants::general(&c, q).unwrap();
        let phi1 = ev(&m, c, Context::GeneralQ, q).eval("phi1_lower").unwrap();
        let base = ev(&m, c, Context::GeneralQ, q).set("phi", phi1.clone()).set("phi1", phi1).set("log_x", lx.clone());
        let e3 = base.set("T", g.t0.clone());
        close(&theorem_bound(&c, ThmWhich::Thm3, &lx, Some(q)).unwrap().total, &e3.eval("thm3").unwrap(), "thm3");
        let phi1 = ev(&m, c, Context::GeneralQ, q).eval("phi1_lower").unwrap();
        let e4 = ev(&m, c, Context::GeneralQ, q).set("phi", phi1).set("log_x", lx.clone()).set("T", g.t1.clone());
        close(&theorem_bound(&c, ThmWhich::Thm4, &lx, Some(q)).unwrap().total, &e4.eval("thm4").unwrap(), "thm4");
    }
}

#[test]
fn region_counts_and_intervals() {
    let c = Ctx::default();
    let m = Manifest::builtin();
    let ts = log_grid(&c.int(40), &c.lit("1e12"));
    let qs = int_grid(400_000, 1_000_000_000_000);
    for (t, &q) in ts.iter().zip(&qs) {
        let e = ev(&m, c, Context::GeneralQ, q).set("T", t.clone()).set("t", t.clone());
        let g = region::zeros_general(&c, q, t).unwrap();
        close(&g.center, &e.eval("nzeros.general.center").unwrap(), "N general center");
        close(&g.radius, &e.eval("nzeros.general.radius").unwrap(), "N general radius");
        for sign in [1i8, -1] {
            let p = region::zeros_primitive(&c, q, t, sign).unwrap();
            let e = ev(&m, c, Context::GeneralQ, q).set("T", t.clone()).set("sign", c.int(sign as i64));
            close(&p.center, &e.eval("nzeros.primitive.center").unwrap(), "N primitive center");
            close(&p.radius, &e.eval("nzeros.primitive.radius").unwrap(), "N primitive radius");
        }
        let p = region::zeros_principal(&c, t).unwrap();
        close(&p.center, &e.eval("nzeros.principal.center").unwrap(), "N principal center");
        close(&p.radius, &e.eval("nzeros.principal.radius").unwrap(), "N principal radius");
        close(&region::zeros_corollary_q(&c, q, t).unwrap(), &e.eval("nzeros.cor.q").unwrap(), "0.364");
        close(&region::zeros_corollary_zeta(&c, t).unwrap(), &e.eval("nzeros.cor.zeta").unwrap(), "6.879");
        close(&region::interval_primitive(&c, q, t).unwrap(), &e.eval("interval.primitive").unwrap(), "interval");
        close(&region::interval_principal(&c, t).unwrap(), &e.eval("interval.principal").unwrap(), "interval 0");
        close(&region::interval_corollary_q(&c, q, t).unwrap(), &e.eval("interval.cor.q").unwrap(), "1.325");
        close(&region::interval_corollary_zeta(&c, t).unwrap(), &e.eval("interval.cor.zeta").unwrap(), "3.523");
        close(&region::bellotti_denominator(&c, t).unwrap(), &e.eval("bellotti").unwrap(), "bellotti");
        close(&region::khale_denominator(&c, q, t).unwrap(), &e.eval("khale").unwrap(), "khale");
        close(&region::mccurley_denominator(&c, q, t).unwrap(), &e.eval("mccurley").unwrap(), "mccurley");
        close(&region::principal_rho_t(&c, t).unwrap(), &e.eval("principal_rho_t").unwrap(), "principalrhoT");
        close(&region::rho2_zeta_tail(&c, t).unwrap(), &e.eval("rho2zeta.tail").unwrap(), "rho2Zeta");
        close(&region::rho_squares_tail(&c, q, t).unwrap(), &e.eval("rhosq.tail").unwrap(), "rhosquares");
        close(&region::rho_squares_corollary(&c, q, t).unwrap(), &e.eval("rhosq.cor").unwrap(), "0.430");
    }
}

#[test]
fn region_modulus_piecewise() {
    let c = Ctx::default();
    let m = Manifest::builtin();
    let big = int_grid(400_001, 4_000_000_000_000_000_000);
    for &q in &big {
        let e = ev(&m, c, Context::GeneralQ, q);
        close(&region::siegel_bound(&c, q, true).unwrap(), &e.eval("siegel.odd").unwrap(), "siegel odd");
        close(&region::siegel_bound(&c, q, false).unwrap(), &e.eval("siegel.even").unwrap(), "siegel even");
        let range = if (q as f64) < 24f64.exp() - 2.0 { "small" } else { "mid" };
        for (class, key) in [(CharClass::RealOdd, "odd"), (CharClass::RealEven, "even")] {
            let hand = region::log_derivative(&c, q, class).unwrap().total;
            close(&hand, &e.eval(&format!("logder.{key}.{range}")).unwrap(), "log derivative");
        }
        let hand = region::log_derivative(&c, q, CharClass::NonReal).unwrap().total;
        close(&hand, &e.eval("logder.nonreal").unwrap(), "log derivative non-real");
        close(&region::log_derivative_uniform(&c, q).unwrap(), &e.eval("logder.uniform").unwrap(), "0.055");
        let hand = region::rho_rho1(&c, q, CharClass::RealOdd, true).unwrap().total;
        let table = e.eval("rhorho1.c").unwrap() + e.eval("siegel.add.odd").unwrap();
        close(&hand, &table, "rho rho+1 large q");
        for (class, key) in [(CharClass::NonReal, "bchi.nonreal"), (CharClass::RealOdd, "bchi.odd"), (CharClass::RealEven, "bchi.even")] {
            close(&region::b_chi(&c, q, class).unwrap().total, &e.eval(key).unwrap(), key);
        }
        if q % 4 != 2 {
            close(&region::psi1_rhs(&c, q).unwrap(), &e.eval("psi1").unwrap(), "psi1");
        }
        close(&region::divisor_log_bound(&c, q).unwrap(), &ev(&m, c, Context::GeneralQ, q).set("n", c.int(q as i64)).eval("divisor").unwrap(), "divisor");
    }
    for &q in &int_grid(3, 400_000) {
        let e = ev(&m, c, Context::GeneralQ, q);
        let key = if q % 2 == 0 { "grh.even" } else { "grh.odd" };
        close(&region::grh_height(&c, q).unwrap(), &e.eval(key).unwrap(), key);
        let key = match q {
            3..=9 => "rhorho1.a",
            _ => "rhorho1.b",
        };
        close(&region::rho_rho1(&c, q, CharClass::NonReal, false).unwrap().total, &e.eval(key).unwrap(), key);
        close(&region::b_chi(&c, q, CharClass::NonReal).unwrap().total, &e.eval("bchi.small").unwrap(), "bchi small");
    }
    // the range beyond e^(92π) − 2 lies past u64; evaluate the manifest against the formula directly
    let e = m.evaluator(c, Context::GeneralQ).set("q", c.lit("1e130"));
    let q = c.lit("1e130");
    close(&(c.lit("0.004") * q.sqrt() * q.ln().sq()), &e.eval("logder.odd.large").unwrap(), "large odd");
}

#[test]
fn region_sums_and_psi() {
    let c = Ctx::default();
    let m = Manifest::builtin();
    let ts = log_grid(&c.int(1), &c.lit("1e10"));
    for (i, t) in ts.iter().enumerate() {
        for q in [3u64 + (i as u64 % 9), 12 + 3_997 * i as u64, 400_001 + 1_000_003 * i as u64] {
            let e = ev(&m, c, Context::GeneralQ, q).set("T", t.clone());
            let key = match q {
                3..=11 => "zerosums.small.a",
                12..=400_000 => "zerosums.small.b",
                _ => "zerosums.large",
            };
            let hand = region::zero_sums(&c, q, t, CharClass::NonReal, false).unwrap().total;
            close(&hand, &e.eval(key).unwrap(), key);
            if q > 400_000 {
                let hand = region::zero_sums(&c, q, t, CharClass::RealEven, true).unwrap().total;
                close(&hand, &(e.eval(key).unwrap() + e.eval("siegel.add.even").unwrap()), "zero sums siegel");
            }
        }
    }
    let ts = log_grid(&c.lit("1e6"), &c.lit("1e12"));
    for (i, t) in ts.iter().enumerate() {
        let u = (t * 3.0 - 2.0) * ((i as f64 + 0.5) / N as f64) + 2.0;
        let q = 400_001 + 7 * i as u64;
        let e = ev(&m, c, Context::GeneralQ, q).set("T", t.clone()).set("u", u.clone());
        close(&region::psi_principal(&c, q, &u, t).unwrap().total, &e.eval("psi.principal").unwrap(), "psiPrincipal");
        close(&region::psi_principal(&c, 1, &u, t).unwrap().total, &ev(&m, c, Context::Zeta, 1).set("T", t.clone()).set("u", u.clone()).eval("psi.principal").unwrap(), "psiPrincipal q=1");
        close(&region::psi_primitive(&c, q, &u, t).unwrap().total, &e.eval("psi.primitive").unwrap(), "psiPrimitive");
        close(&region::psi_not_primitive(&c, q, &u, t).unwrap().total, &e.eval("psi.not_primitive").unwrap(), "psiNotPrimitive");
        close(&region::rho_no_chi(&c, q, t).unwrap(), &e.eval("rho_no_chi").unwrap(), "RhoNoChi");
    }
    for x in log_grid(&c.int(286), &c.lit("1e300")) {
        let e = m.evaluator(c, Context::Zeta).set("x", x.clone());
        close(&region::prodpp2_rhs(&c, &x).unwrap(), &e.eval("prodpp2").unwrap(), "prodpp2");
    }
}
