//! The empirical check registry: lemma checks against sieve and zero data,
//! cross-method oracles, a Hardy–Littlewood sanity ratio and the
//! reproduction of the packaged theorem constants.
//!
//! Each check reduces to a worst ratio empirical/bound over its grid. A
//! check passes when that ratio is at most 1 + 10⁻¹². Exact identities report
//! the error divided by the stated tolerance.

mod checks;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::arith::SieveTable;
use crate::bounds::hp::Ctx;
use crate::bounds::Provenance;
use crate::error::{Error, Result};
use crate::zeros::{load_zeros_path, ZeroTable};

pub use checks::{explicit_formula_tally, EXPLICIT_T, EXPLICIT_U};

/// Comparison slack on empirical ≤ bound.
pub const SLACK: f64 = 1.0 + 1e-12;

/// Zero height needed by the zero-table checks.
pub const ZERO_HEIGHT_MIN: f64 = 1e5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    SkippedResources,
    HypothesesUnmet,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    Lemma,
    Oracle,
    Constant,
    Sanity,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Group {
    Zeros,
    Explicit,
    Arithmetic,
    Consistency,
    Constants,
}

/// A registered check and the resources it needs.
pub struct CheckSpec {
    pub id: &'static str,
    pub kind: CheckKind,
    pub group: Group,
    pub anchor: &'static str,
    pub grid: &'static str,
    /// Minimum sieve limit, 0 when no sieve is used.
    pub sieve: usize,
    /// Minimum zero height, 0 when no zero table is used.
    pub height: f64,
    run: fn(&Resources) -> Tally,
}

/// Shared read-only inputs of a run.
pub struct Resources {
    pub ctx: Ctx,
    pub sieve: Option<SieveTable>,
    pub zeros: Option<ZeroTable>,
}

impl Resources {
    pub fn new(ctx: Ctx, sieve: Option<SieveTable>, zeros: Option<ZeroTable>) -> Resources {
        Resources { ctx, sieve, zeros }
    }

    fn sieve(&self) -> &SieveTable {
        self.sieve.as_ref().expect("resources validated before running")
    }

    fn zeros(&self) -> &ZeroTable {
        self.zeros.as_ref().expect("resources validated before running")
    }
}

/// Running maximum of empirical/bound over a grid.
#[derive(Clone, Debug, Default)]
pub struct Tally {
    pub worst: f64,
    pub witness: Vec<(&'static str, f64)>,
    pub points: usize,
    pub notes: Vec<String>,
    pub unmet: bool,
}

impl Tally {
    pub fn new() -> Tally {
        Tally::default()
    }

    pub fn observe(&mut self, ratio: f64, witness: &[(&'static str, f64)]) {
        let r = if ratio.is_nan() { f64::MAX } else { ratio.min(f64::MAX) };
        if self.points == 0 || r > self.worst {
            self.worst = r;
            self.witness = witness.to_vec();
        }
        self.points += 1;
    }

    /// Merges grid parts computed separately, in order.
    pub fn absorb(&mut self, other: Tally) {
        if other.points > 0 && (self.points == 0 || other.worst > self.worst) {
            self.worst = other.worst;
            self.witness = other.witness;
        }
        self.points += other.points;
        self.notes.extend(other.notes);
        self.unmet |= other.unmet;
    }

    pub fn passed(&self) -> bool {
        self.points > 0 && self.worst <= SLACK
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ResourceUse {
    pub sieve_limit: Option<usize>,
    pub zero_source: Option<String>,
    pub zero_height: Option<f64>,
    pub zero_count: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub kind: CheckKind,
    pub anchor: String,
    pub grid: String,
    pub status: Status,
    pub worst_ratio: Option<f64>,
    pub witness: Option<BTreeMap<String, f64>>,
    pub grid_points: usize,
    pub runtime: f64,
    pub provenance: ResourceUse,
    pub notes: Vec<String>,
}

fn num(v: f64) -> Value {
    json!({ "value": v, "provenance": Provenance::Computed })
}

impl CheckReport {
    pub fn to_json(&self, timings: bool) -> Value {
        let mut o = json!({
            "id": self.id,
            "kind": self.kind,
            "anchor": self.anchor,
            "grid": self.grid,
            "status": self.status,
            "worst_ratio": self.worst_ratio.map(num),
            "witness": self.witness.as_ref().map(|w| w.iter().map(|(k, v)| (k.clone(), num(*v))).collect::<serde_json::Map<_, _>>()),
            "grid_points": self.grid_points,
            "provenance": {
                "sieve_limit": self.provenance.sieve_limit,
                "zero_source": self.provenance.zero_source,
                "zero_height": self.provenance.zero_height.map(num),
                "zero_count": self.provenance.zero_count,
            },
            "notes": self.notes,
        });
        if timings {
            o["runtime"] = num(self.runtime);
        }
        o
    }
}

pub fn registry() -> Vec<CheckSpec> {
    checks::specs()
}

fn provenance(spec: &CheckSpec, res: &Resources) -> ResourceUse {
    let mut p = ResourceUse::default();
    if spec.sieve > 0 {
        p.sieve_limit = res.sieve.as_ref().map(|s| s.limit());
    }
    if spec.height > 0.0 {
        if let Some(z) = &res.zeros {
            p.zero_source = Some(z.source.clone());
            p.zero_height = Some(z.height);
            p.zero_count = Some(z.count());
        }
    }
    p
}

fn missing(spec: &CheckSpec, res: &Resources) -> Option<String> {
    if spec.sieve > 0 {
        match &res.sieve {
            None => return Some("no sieve table".into()),
            Some(s) if s.limit() < spec.sieve => {
                return Some(format!("needs sieve limit ≥ {}, have {}", spec.sieve, s.limit()))
            }
            _ => {}
        }
    }
    if spec.height > 0.0 {
        match &res.zeros {
            None => return Some("no zero table".into()),
            Some(z) if z.height < spec.height => {
                return Some(format!("needs zero height ≥ {}, have {}", spec.height, z.height))
            }
            _ => {}
        }
    }
    None
}

/// Runs one registered check.
pub fn run_check(spec: &CheckSpec, res: &Resources) -> CheckReport {
    let start = Instant::now();
    let mut report = CheckReport {
        id: spec.id.into(),
        kind: spec.kind,
        anchor: spec.anchor.into(),
        grid: spec.grid.into(),
        status: Status::SkippedResources,
        worst_ratio: None,
        witness: None,
        grid_points: 0,
        runtime: 0.0,
        provenance: provenance(spec, res),
        notes: Vec::new(),
    };
    if let Some(why) = missing(spec, res) {
        report.notes.push(why);
        return report;
    }
    let t = (spec.run)(res);
    report.runtime = start.elapsed().as_secs_f64();
    report.status = if t.unmet {
        Status::HypothesesUnmet
    } else if t.points == 0 {
        report.notes.push("empty grid".into());
        Status::SkippedResources
    } else if t.passed() {
        Status::Pass
    } else {
        Status::Fail
    };
    if t.points > 0 {
        report.worst_ratio = Some(t.worst);
        report.witness = Some(t.witness.iter().map(|(k, v)| (k.to_string(), *v)).collect());
    }
    report.grid_points = t.points;
    report.notes.extend(t.notes);
    report
}

/// Runs the given checks concurrently and returns their reports sorted by id.
pub fn run_checks(specs: &[CheckSpec], res: &Resources) -> Vec<CheckReport> {
    let mut out: Vec<CheckReport> = specs.par_iter().map(|s| run_check(s, res)).collect();
    out.sort_by(|a, b| a.id.cmp(&b.id));
    out
}

fn run_group(group: Group, res: &Resources) -> Vec<CheckReport> {
    let specs: Vec<CheckSpec> = registry().into_iter().filter(|s| s.group == group).collect();
    run_checks(&specs, res)
}

pub fn check_zero_facts(res: &Resources) -> Vec<CheckReport> {
    run_group(Group::Zeros, res)
}

pub fn check_arithmetic_facts(res: &Resources) -> Vec<CheckReport> {
    run_group(Group::Arithmetic, res)
}

pub fn check_consistency_oracles(res: &Resources) -> Vec<CheckReport> {
    run_group(Group::Consistency, res)
}

pub fn reproduce_paper_constants(res: &Resources) -> Vec<CheckReport> {
    run_group(Group::Constants, res)
}

/// The truncated explicit formula for ψ(u) at the given samples and height.
pub fn check_explicit_formula(sieve: &SieveTable, table: &ZeroTable, ctx: &Ctx, u: &[f64], t: f64) -> CheckReport {
    let spec = registry().into_iter().find(|s| s.id == "lemma.psiPrincipal").expect("registered");
    let start = Instant::now();
    let need_sieve = u.iter().fold(0f64, |a, &b| a.max(b)).floor() as usize;
    let mut report = CheckReport {
        id: spec.id.into(),
        kind: spec.kind,
        anchor: spec.anchor.into(),
        grid: format!("u in {u:?}, T = {t}"),
        status: Status::SkippedResources,
        worst_ratio: None,
        witness: None,
        grid_points: 0,
        runtime: 0.0,
        provenance: ResourceUse {
            sieve_limit: Some(sieve.limit()),
            zero_source: Some(table.source.clone()),
            zero_height: Some(table.height),
            zero_count: Some(table.count()),
        },
        notes: Vec::new(),
    };
    if sieve.limit() < need_sieve || table.height < t {
        report.notes.push(format!("needs sieve ≥ {need_sieve} and zero height ≥ {t}"));
        return report;
    }
    let tally = explicit_formula_tally(sieve, table, ctx, u, t);
    report.runtime = start.elapsed().as_secs_f64();
    report.status = if tally.unmet {
        Status::HypothesesUnmet
    } else if tally.passed() {
        Status::Pass
    } else {
        Status::Fail
    };
    if tally.points > 0 {
        report.worst_ratio = Some(tally.worst);
        report.witness = Some(tally.witness.iter().map(|(k, v)| (k.to_string(), *v)).collect());
    }
    report.grid_points = tally.points;
    report.notes = tally.notes;
    report
}

/// Inputs of a verification run; also the JSON config file format.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct VerifyConfig {
    pub zero_file: Option<PathBuf>,
    pub sieve_limit: usize,
    pub precision_digits: u32,
    /// Worker threads, 0 for the rayon default.
    pub jobs: usize,
    /// Include per-check runtimes in JSON and CSV output.
    pub timings: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { zero_file: None, sieve_limit: 10_000_000, precision_digits: 50, jobs: 0, timings: false }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub version: String,
    pub config: VerifyConfig,
    pub resources: ResourceUse,
    pub checks: Vec<CheckReport>,
}

impl Report {
    pub fn any_failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    pub fn count(&self, s: Status) -> usize {
        self.checks.iter().filter(|c| c.status == s).count()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "version": self.version,
            "config": self.config,
            "resources": {
                "sieve_limit": self.resources.sieve_limit,
                "zero_source": self.resources.zero_source,
                "zero_height": self.resources.zero_height.map(num),
                "zero_count": self.resources.zero_count,
            },
            "summary": {
                "pass": self.count(Status::Pass),
                "fail": self.count(Status::Fail),
                "skipped-resources": self.count(Status::SkippedResources),
                "hypotheses-unmet": self.count(Status::HypothesesUnmet),
            },
            "checks": self.checks.iter().map(|c| c.to_json(self.config.timings)).collect::<Vec<_>>(),
        })
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("report serializes");
        s.push('\n');
        s
    }

    /// id, status, worst_ratio, runtime. Runtime is blank unless timings are on.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["id", "status", "worst_ratio", "runtime"]).map_err(csv_err)?;
        for c in &self.checks {
            let status = serde_json::to_value(c.status).expect("status serializes");
            let ratio = c.worst_ratio.map(|r| format!("{r:e}")).unwrap_or_default();
            let rt = if self.config.timings { format!("{:.3}", c.runtime) } else { String::new() };
            w.write_record([c.id.as_str(), status.as_str().unwrap_or(""), &ratio, &rt]).map_err(csv_err)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Config(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv is utf-8"))
    }
}

fn csv_err(e: csv::Error) -> Error {
    Error::Config(format!("csv: {e}"))
}

/// Loads the zero table and sieve named by the config. Unreadable or
/// corrupt resources are configuration errors.
pub fn load_resources(config: &VerifyConfig) -> Result<Resources> {
    let ctx = Ctx::new(config.precision_digits)?;
    let zeros = match &config.zero_file {
        Some(p) => Some(load_zeros_path(p).map_err(|e| Error::Config(format!("zero file {}: {e}", p.display())))?),
        None => None,
    };
    let sieve = SieveTable::build(config.sieve_limit).map_err(|e| Error::Config(format!("sieve: {e}")))?;
    Ok(Resources::new(ctx, Some(sieve), zeros))
}

fn run_in_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    if jobs == 0 {
        return Ok(f());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Config(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

fn report(config: &VerifyConfig, res: &Resources, checks: Vec<CheckReport>) -> Report {
    Report {
        version: env!("CARGO_PKG_VERSION").into(),
        config: config.clone(),
        resources: ResourceUse {
            sieve_limit: res.sieve.as_ref().map(|s| s.limit()),
            zero_source: res.zeros.as_ref().map(|z| z.source.clone()),
            zero_height: res.zeros.as_ref().map(|z| z.height),
            zero_count: res.zeros.as_ref().map(|z| z.count()),
        },
        checks,
    }
}

/// Runs every registered check.
pub fn run_all(config: &VerifyConfig) -> Result<Report> {
    let res = load_resources(config)?;
    run_all_with(config, &res)
}

/// [`run_all`] over resources already loaded.
pub fn run_all_with(config: &VerifyConfig, res: &Resources) -> Result<Report> {
    let specs = registry();
    let checks = run_in_pool(config.jobs, || run_checks(&specs, res))?;
    Ok(report(config, res, checks))
}

/// Runs the checks whose id equals `id` or starts with `id.`.
pub fn run_one(config: &VerifyConfig, res: &Resources, id: &str) -> Result<Report> {
    let prefix = format!("{id}.");
    let specs: Vec<CheckSpec> = registry().into_iter().filter(|s| s.id == id || s.id.starts_with(&prefix)).collect();
    if specs.is_empty() {
        return Err(Error::Config(format!("no check with id {id:?}")));
    }
    let checks = run_in_pool(config.jobs, || run_checks(&specs, res))?;
    Ok(report(config, res, checks))
}
