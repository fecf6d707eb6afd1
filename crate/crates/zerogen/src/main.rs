//! Generates a table of zeta-zero ordinates for the test suite.
//!
//! Low ordinates come from a seed file (certified values from arb, see
//! `scripts/low_zeros.py`). Above the seed the Riemann–Siegel Z function is
//! sampled on Gram points, every Rosser block is required to contain its full
//! quota of sign changes, and each bracket is refined by the Illinois method.
//! Generation aborts if a block cannot be completed.

use std::f64::consts::PI;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::Parser;

mod coef;

#[derive(Parser)]
struct Args {
    /// Seed file with low ordinates, one per line.
    #[arg(long)]
    seed: PathBuf,
    /// Stop after this many zeros in total.
    #[arg(long)]
    count: usize,
    #[arg(long)]
    out: PathBuf,
}

struct Rs {
    ln: Vec<f64>,
    rsqrt: Vec<f64>,
}

fn theta(t: f64) -> f64 {
    let t2 = t * t;
    0.5 * t * (t / (2.0 * PI)).ln() - 0.5 * t - PI / 8.0
        + 1.0 / (48.0 * t)
        + 7.0 / (5760.0 * t * t2)
        + 31.0 / (80640.0 * t * t2 * t2)
}

fn horner(c: &[f64], z: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &a| acc * z + a)
}

impl Rs {
    fn new(max_t: f64) -> Rs {
        let n = (max_t / (2.0 * PI)).sqrt() as usize + 2;
        let ln = (0..=n).map(|k| (k.max(1) as f64).ln()).collect();
        let rsqrt = (0..=n).map(|k| 1.0 / (k.max(1) as f64).sqrt()).collect();
        Rs { ln, rsqrt }
    }

    fn z(&self, t: f64) -> f64 {
        let a = (t / (2.0 * PI)).sqrt();
        let n = a.floor() as usize;
        let p = a - n as f64;
        let th = theta(t);
        let mut s = 0.0;
        for k in 1..=n {
            s += self.rsqrt[k] * (th - t * self.ln[k]).cos();
        }
        let z = 1.0 - 2.0 * p;
        let corr = horner(&coef::C0, z) + horner(&coef::C1, z) / a + horner(&coef::C2, z) / (a * a);
        let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
        2.0 * s + sign * corr / a.sqrt()
    }

    fn refine(&self, mut a: f64, mut fa: f64, mut b: f64, mut fb: f64) -> f64 {
        let mut side = 0i32;
        for _ in 0..100 {
            if b - a < 1e-11 * b.max(1.0) {
                break;
            }
            let c = (a * fb - b * fa) / (fb - fa);
            let c = if c <= a || c >= b { 0.5 * (a + b) } else { c };
            let fc = self.z(c);
            if fc == 0.0 {
                return c;
            }
            if (fc > 0.0) == (fb > 0.0) {
                b = c;
                fb = fc;
                if side == -1 {
                    fa *= 0.5;
                }
                side = -1;
            } else {
                a = c;
                fa = fc;
                if side == 1 {
                    fb *= 0.5;
                }
                side = 1;
            }
        }
        0.5 * (a + b)
    }
}

fn gram(n: u64, guess: f64) -> f64 {
    let target = n as f64 * PI;
    let mut t = guess;
    for _ in 0..50 {
        let d = (theta(t) - target) / (0.5 * (t / (2.0 * PI)).ln());
        t -= d;
        if d.abs() < 1e-12 * t {
            break;
        }
    }
    t
}

fn sign_changes(pts: &[(f64, f64)]) -> usize {
    pts.windows(2).filter(|w| (w[0].1 > 0.0) != (w[1].1 > 0.0)).count()
}

fn read_seed(path: &PathBuf) -> Result<Vec<f64>> {
    let f = File::open(path).with_context(|| format!("open {}", path.display()))?;
    let mut v = Vec::new();
    for line in BufReader::new(f).lines() {
        let line = line?;
        let s = line.trim();
        if s.is_empty() || s.starts_with('#') {
            continue;
        }
        v.push(s.parse::<f64>().with_context(|| format!("bad seed line {s:?}"))?);
    }
    Ok(v)
}

fn main() -> Result<()> {
    let args = Args::parse();
    let seed = read_seed(&args.seed)?;
    if seed.len() < 100 {
        bail!("seed too short");
    }
    // Rough height for the requested count, padded.
    let mut hi = 100.0f64;
    while (hi / (2.0 * PI)) * (hi / (2.0 * PI * std::f64::consts::E)).ln() < args.count as f64 * 1.01 + 100.0 {
        hi *= 1.05;
    }
    let rs = Rs::new(hi * 1.1);

    // Start at a good Gram point comfortably inside the seed range.
    let start_t = seed[seed.len() - 50];
    let mut n = (theta(start_t) / PI).floor() as u64;
    let mut g = gram(n, start_t);
    let mut zg = rs.z(g);
    while (if n % 2 == 0 { zg } else { -zg }) <= 0.0 {
        n += 1;
        g = gram(n, g);
        zg = rs.z(g);
    }
    let below: Vec<f64> = seed.iter().copied().filter(|&x| x < g).collect();
    if below.len() as u64 != n + 1 {
        bail!("seed has {} zeros below good Gram point g_{} = {}, expected {}", below.len(), n, g, n + 1);
    }
    let seeded = below.len();
    let mut zeros = below;
    let mut filled_to = g;

    while zeros.len() < args.count {
        // Collect Gram points up to the next good one.
        let mut pts = vec![(g, zg)];
        let mut k = n;
        let mut gk = g;
        loop {
            k += 1;
            gk = gram(k, gk);
            let zk = rs.z(gk);
            pts.push((gk, zk));
            if (if k % 2 == 0 { zk } else { -zk }) > 0.0 {
                break;
            }
        }
        let need = (k - n) as usize;
        let mut depth = 0;
        while sign_changes(&pts) < need {
            depth += 1;
            if depth > 10 {
                bail!("block g_{n}..g_{k} ({g}..{gk}): found {} of {need} zeros", sign_changes(&pts));
            }
            let mut next = Vec::with_capacity(pts.len() * 2);
            for w in pts.windows(2) {
                next.push(w[0]);
                let m = 0.5 * (w[0].0 + w[1].0);
                next.push((m, rs.z(m)));
            }
            next.push(*pts.last().unwrap());
            pts = next;
        }
        if sign_changes(&pts) > need {
            bail!("block g_{n}..g_{k}: {} sign changes exceed {need}", sign_changes(&pts));
        }
        for w in pts.windows(2) {
            if (w[0].1 > 0.0) != (w[1].1 > 0.0) {
                zeros.push(rs.refine(w[0].0, w[0].1, w[1].0, w[1].1));
            }
        }
        n = k;
        g = gk;
        zg = pts.last().unwrap().1;
        filled_to = g;
    }

    let height = *zeros.last().unwrap();
    let f = File::create(&args.out)?;
    let mut w = BufWriter::new(f);
    writeln!(w, "# height: {:.9}", height)?;
    writeln!(
        w,
        "# source: ordinates 1..{} from arb (acb_dirichlet_zeta_zeros); above, Riemann-Siegel Z with C0..C2 corrections on Gram points, every Rosser block complete through Gram index {}",
        seeded, n
    )?;
    for z in &zeros {
        writeln!(w, "{:.9}", z)?;
    }
    w.flush()?;
    eprintln!("{} zeros, complete to Gram point {:.6} (index {})", zeros.len(), filled_to, n);
    Ok(())
}
