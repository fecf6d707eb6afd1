//! Explicit constants, the f-functions, theorem and proposition bounds,
//! thresholds and the lemma-level region bounds, all in MPFR arithmetic.

pub mod constants;
pub mod ffun;
pub mod hp;
pub mod lambert;
pub mod manifest;
pub mod region;
pub mod theorems;

use serde::Serialize;
use serde_json::{json, Value};

use hp::R;

pub use constants::{b_star, eta_q, AssumptionConstants, Context};
pub use ffun::{f_function, FArgs, FPoint, FWhich};
pub use lambert::{lambert_w, Branch};
pub use theorems::{proposition_bound, theorem_bound, threshold, PropMode, PropWhich, ThmWhich, ThresholdKind, ThresholdResult};

/// Where a printed number comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Computed,
    PaperConstant,
    Manifest,
}

/// A number rendered for JSON with its provenance tag.
pub fn tagged(v: &R, digits: usize, p: Provenance) -> Value {
    json!({ "value": v.to_decimal(digits), "provenance": p })
}

/// An additive decomposition of a bound. `total` is Σ `components`;
/// `extras` are reported values that do not enter the sum.
#[derive(Clone, Debug)]
pub struct BoundBreakdown {
    pub label: String,
    pub total: R,
    pub components: Vec<(String, R)>,
    pub inputs: Vec<(String, R)>,
    pub extras: Vec<(String, R)>,
    /// Factor by which `total` must be multiplied to give the bound itself,
    /// e.g. "x^(B*+1)". Empty when the total is the bound.
    pub scale: String,
    pub packaged: Option<R>,
    pub hypotheses_met: bool,
    pub notes: Vec<String>,
}

impl BoundBreakdown {
    pub fn from_parts<S: Into<String>>(label: &str, parts: Vec<(S, R)>) -> BoundBreakdown {
        let components: Vec<(String, R)> = parts.into_iter().map(|(k, v)| (k.into(), v)).collect();
        let total = components.iter().map(|(_, v)| v.clone()).sum();
        BoundBreakdown {
            label: label.to_string(),
            total,
            components,
            inputs: Vec::new(),
            extras: Vec::new(),
            scale: String::new(),
            packaged: None,
            hypotheses_met: true,
            notes: Vec::new(),
        }
    }

    pub fn component(&self, name: &str) -> Option<&R> {
        self.components.iter().find(|(k, _)| k == name).map(|(_, v)| v)
    }

    pub fn extra(&self, name: &str) -> Option<&R> {
        self.extras.iter().find(|(k, _)| k == name).map(|(_, v)| v)
    }

    /// Relative gap between `total` and the sum of components.
    pub fn check_sum(&self) -> f64 {
        let s: R = self.components.iter().map(|(_, v)| v.clone()).sum();
        s.rel_diff(&self.total)
    }

    pub fn to_json(&self, digits: usize) -> Value {
        let list = |xs: &[(String, R)], p: Provenance| -> Value {
            Value::Array(
                xs.iter()
                    .map(|(k, v)| {
                        let mut o = tagged(v, digits, p);
                        o["label"] = json!(k);
                        o
                    })
                    .collect(),
            )
        };
        json!({
            "label": self.label,
            "total": tagged(&self.total, digits, Provenance::Computed),
            "scale": self.scale,
            "packaged": self.packaged.as_ref().map(|p| tagged(p, digits, Provenance::PaperConstant)),
            "hypotheses_met": self.hypotheses_met,
            "components": list(&self.components, Provenance::Computed),
            "extras": list(&self.extras, Provenance::Computed),
            "inputs": list(&self.inputs, Provenance::Manifest),
            "notes": self.notes,
        })
    }
}
