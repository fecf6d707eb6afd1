use std::path::PathBuf;
use std::process::{Command, Output};

use goldbach_explicit::arith::SieveTable;
use goldbach_explicit::goldbach::summatory_s;
use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_goldbach"));
    c.env_remove("GOLDBACH_ZEROS");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn zeros_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/zeta_zeros.txt")
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let o = run(&a);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn sum_matches_library() {
    let o = run(&["sum", "--x", "100000"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let line = text.lines().find(|l| l.starts_with("value")).unwrap();
    let v: f64 = line.split_whitespace().nth(1).unwrap().parse().unwrap();
    let s = SieveTable::build(100_000).unwrap();
    assert_eq!(v, summatory_s(100_000, &s).unwrap().value);

    let j = json(&["goldbach", "sum", "--x", "1e5"]);
    assert_eq!(j["value"]["value"].as_f64().unwrap(), v);
    assert_eq!(j["value"]["provenance"], "computed");
}

#[test]
fn theorem_one_breakdown() {
    let j = json(&["bound", "theorem", "--which", "thm1", "--log-x", "1.7e13"]);
    let total: f64 = j["total"]["value"].as_str().unwrap().parse().unwrap();
    assert!(total <= 6.794 && total >= 0.5 * 6.794, "{total}");
    assert_eq!(j["packaged"]["provenance"], "paper-constant");
    for c in j["components"].as_array().unwrap() {
        assert_eq!(c["provenance"], "computed");
    }
    for c in j["inputs"].as_array().unwrap() {
        assert_eq!(c["provenance"], "manifest");
    }
}

#[test]
fn json_and_csv_are_byte_identical_across_runs() {
    for args in [
        ["bound", "threshold", "--which", "thm3_logx", "--format", "json"],
        ["goldbach", "sum-congruence", "--x", "3000", "--format", "csv"],
    ] {
        let mut a: Vec<&str> = args.to_vec();
        if a[1] == "sum-congruence" {
            a.extend(["--q", "5", "--a", "1", "--b", "2"]);
        }
        assert_eq!(run(&a).stdout, run(&a).stdout);
    }
}

#[test]
fn every_json_number_is_tagged() {
    fn walk(v: &Value, tagged: bool) {
        match v {
            Value::Number(_) => assert!(tagged, "untagged number"),
            Value::Object(m) => {
                let t = m.contains_key("provenance");
                for (k, x) in m {
                    walk(x, t && k == "value");
                }
            }
            Value::Array(a) => a.iter().for_each(|x| walk(x, false)),
            _ => {}
        }
    }
    for args in [
        vec!["goldbach", "g-minus-j", "--x", "2000", "--q", "3", "--c", "0"],
        vec!["goldbach", "G", "--x", "1000"],
        vec!["chars", "phi-star", "--q", "60"],
        vec!["bound", "f", "--which", "f3", "--q", "7", "--T", "1e6"],
        vec!["bound", "region", "--which", "zeros-principal", "--T", "1000"],
    ] {
        walk(&json(&args), false);
    }
}

#[test]
fn goldbach_values() {
    assert_eq!(json(&["goldbach", "g", "--x", "100"])["g"]["value"], 12);
    let g = json(&["goldbach", "G", "--x", "10"])["G"]["value"].as_f64().unwrap();
    let want = 2.0 * 3f64.ln() * 7f64.ln() + 5f64.ln().powi(2) + 2.0 * 2f64.ln() * 2f64.ln();
    assert!((g - want).abs() < 1e-12, "{g} {want}");
    let c = json(&["goldbach", "sum-characters", "--x", "500", "--q", "5", "--chi-index", "0,0"]);
    assert!(c["value"]["value"].as_f64().unwrap() > 0.0);
}

#[test]
fn chars_eval_and_list() {
    let j = json(&["chars", "list", "--q", "12"]);
    assert_eq!(j["characters"].as_array().unwrap().len(), 4);
    let v = json(&["chars", "eval", "--q", "5", "--chi-index", "0", "--x", "5"]);
    assert_eq!(v["re"]["value"].as_f64().unwrap(), 0.0);
}

#[test]
fn zero_commands_use_env_path() {
    let z = zeros_path();
    let o = bin().args(["zeros", "count", "--T", "100", "--format", "json"]).env("GOLDBACH_ZEROS", &z).output().unwrap();
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let j: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(j["positive_le_T"]["value"], 29);

    let zs = z.to_str().unwrap();
    let e = json(&["zeros", "explicit-psi", "--u", "100.5", "--T", "1000", "--zeros", zs]);
    let v = e["value"]["value"].as_f64().unwrap();
    let psi = SieveTable::build(100).unwrap().psi(100);
    assert!((v - psi).abs() < 3.0, "{v} vs {psi}");
}

#[test]
fn missing_zero_table_is_usage_error() {
    let o = run(&["zeros", "ingest"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("GOLDBACH_ZEROS"));
}

#[test]
fn usage_and_config_errors_exit_two() {
    assert_eq!(run(&["sum", "--x", "10", "--nope"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["sum", "--x", "10", "--precision", "29"]).status.code(), Some(2));
    assert_eq!(run(&["sum", "--x", "10", "--sieve-limit", "1"]).status.code(), Some(2));
    assert_eq!(run(&["sum", "--x", "20000000"]).status.code(), Some(2));
    assert_eq!(run(&["bound", "proposition", "--which", "firstMain", "--log-x", "1e6", "--bq", "abc"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "one", "--which", "no.such.check", "--sieve-limit", "100"]).status.code(), Some(2));
}

#[test]
fn config_file_is_overridden_by_flags() {
    let dir = std::env::temp_dir().join(format!("goldbach-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("cfg.json");
    std::fs::write(&cfg, r#"{"sieve_limit": 1000, "output": "json"}"#).unwrap();
    let c = cfg.to_str().unwrap();
    let o = run(&["sum", "--x", "5000", "--config", c]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["sum", "--x", "500", "--config", c]);
    assert!(o.status.success());
    assert!(serde_json::from_slice::<Value>(&o.stdout).is_ok());
    let o = run(&["sum", "--x", "5000", "--config", c, "--sieve-limit", "10000", "--format", "csv"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("key,value,provenance"));

    std::fs::write(&cfg, r#"{"sieve_limt": 1000}"#).unwrap();
    assert_eq!(run(&["sum", "--x", "10", "--config", c]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn proposition_bq_modes() {
    let total = |bq: &str| -> String {
        json(&["bound", "proposition", "--which", "firstMain", "--log-x", "1e6", "--q", "7", "--bq", bq])["total"]["value"]
            .as_str()
            .unwrap()
            .to_string()
    };
    assert_eq!(total("1"), total("unconditional"));
    assert_eq!(total("0.5"), total("grh"));
}

#[test]
fn verify_exit_codes_and_output_file() {
    let dir = std::env::temp_dir().join(format!("goldbach-verify-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("report.json");
    let o = run(&["verify", "one", "--which", "constants.thm1", "--sieve-limit", "100", "--out", out.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(r["checks"][0]["status"], "pass");

    // The thm2 coefficient recomputes above its printed value.
    let o = run(&["verify", "one", "--which", "constants.thm2", "--sieve-limit", "100", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("constants.thm2,fail"));

    let o = run(&["verify", "one", "--which", "lemma.zerosBetween", "--sieve-limit", "100"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("skipped-resources"));
    std::fs::remove_dir_all(&dir).ok();
}
