//! Seeded verification of the structure theory.
//!
//! Each registered statement produces a list of [`Instance`]s (exhaustive
//! basis enumerations where the quantified expression is linear or
//! quadratic, seeded random samples otherwise) and a per-instance check.
//! Checks run in parallel; the reported counterexample is always the first
//! failing instance in generation order, so reports depend only on the `RandomSpec`.

pub mod random;
mod statements;

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::element::CDElement;
use crate::error::{AlgebraError, Result};

pub use random::{stream_id, Purity, RandomSpec, Sampler, DEFAULT_COEFFICIENT_BOUND, DEFAULT_TRIALS};

/// Named inputs of one check, plus free-form labels (construction kind, map word).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub elements: Vec<(String, CDElement)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub labels: Vec<(String, String)>,
}

impl Instance {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn of(items: &[(&str, &CDElement)]) -> Self {
        Instance {
            elements: items.iter().map(|(k, v)| (k.to_string(), (*v).clone())).collect(),
            labels: Vec::new(),
        }
    }

    pub fn with(mut self, name: &str, x: CDElement) -> Self {
        self.elements.push((name.to_string(), x));
        self
    }

    pub fn label(mut self, key: &str, value: impl Into<String>) -> Self {
        self.labels.push((key.to_string(), value.into()));
        self
    }

    pub fn get(&self, name: &str) -> Result<&CDElement> {
        self.elements
            .iter()
            .find(|(k, _)| k == name)
            .map(|(_, v)| v)
            .ok_or_else(|| AlgebraError::Payload(format!("instance has no element `{name}`")))
    }

    pub fn get_label(&self, key: &str) -> Result<&str> {
        self.labels
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
            .ok_or_else(|| AlgebraError::Payload(format!("instance has no label `{key}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails(String),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem_id: String,
    pub level: u32,
    pub seed: u64,
    pub trials: u64,
    pub passed: bool,
    pub counterexample: Option<Value>,
    pub elapsed_ms: u64,
}

impl TheoremReport {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// The report with `elapsed_ms` zeroed, for byte comparisons.
    pub fn without_timing(&self) -> Self {
        TheoremReport { elapsed_ms: 0, ..self.clone() }
    }
}

pub fn theorem_ids() -> Vec<&'static str> {
    statements::REGISTRY.iter().map(|s| s.id).collect()
}

/// Smallest level at which the statement applies.
pub fn min_level(theorem_id: &str) -> Option<u32> {
    statements::lookup(theorem_id).map(|s| s.min_level)
}

fn find(theorem_id: &str) -> Result<&'static statements::Statement> {
    statements::lookup(theorem_id)
        .ok_or_else(|| AlgebraError::UnknownTheorem { id: theorem_id.to_string(), known: theorem_ids() })
}

/// The instances `run_theorem` would check, in order.
pub fn instances(theorem_id: &str, spec: &RandomSpec) -> Result<Vec<Instance>> {
    let st = find(theorem_id)?;
    if spec.level < st.min_level {
        return Err(AlgebraError::TheoremLevel { id: st.id, min: st.min_level, level: spec.level });
    }
    let mut sampler = spec.sampler(stream_id(st.id).wrapping_add(u64::from(spec.level)));
    Ok((st.generate)(spec, &mut sampler))
}

fn verdict_of(st: &statements::Statement, inst: &Instance) -> Verdict {
    match (st.check)(inst) {
        Ok(v) => v,
        Err(e) => Verdict::Fails(format!("error: {e}")),
    }
}

pub fn run_theorem(theorem_id: &str, spec: &RandomSpec) -> Result<TheoremReport> {
    let start = Instant::now();
    let st = find(theorem_id)?;
    let cases = instances(theorem_id, spec)?;
    let failure = cases.par_iter().find_map_first(|inst| match verdict_of(st, inst) {
        Verdict::Holds => None,
        Verdict::Fails(detail) => Some(json!({ "instance": inst, "detail": detail })),
    });
    Ok(TheoremReport {
        theorem_id: st.id.to_string(),
        level: spec.level,
        seed: spec.seed,
        trials: cases.len() as u64,
        passed: failure.is_none(),
        counterexample: failure,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Every registered statement at every level where it applies.
pub fn run_all(spec: &RandomSpec, levels: &[u32]) -> Vec<TheoremReport> {
    let mut out = Vec::new();
    for &level in levels {
        let spec = spec.at_level(level);
        for st in statements::REGISTRY {
            if level >= st.min_level {
                out.push(run_theorem(st.id, &spec).expect("registered and applicable"));
            }
        }
    }
    out
}

/// Re-run the check on a counterexample payload from a failing report.
pub fn replay(theorem_id: &str, payload: &Value) -> Result<Verdict> {
    let st = find(theorem_id)?;
    let inst = payload
        .get("instance")
        .ok_or_else(|| AlgebraError::Payload("missing `instance`".into()))?;
    let inst: Instance =
        serde_json::from_value(inst.clone()).map_err(|e| AlgebraError::Payload(e.to_string()))?;
    Ok(verdict_of(st, &inst))
}

/// Check a single hand-built instance against a statement.
pub fn check_instance(theorem_id: &str, inst: &Instance) -> Result<Verdict> {
    Ok(verdict_of(find(theorem_id)?, inst))
}

/// First pair `x = e_i + e_j`, `y = e_k + e_l` (`i < j`, `k < l`, in
/// lexicographic order of `(i, j, k, l)`) with `||xy||^2 != ||x||^2 ||y||^2`.
pub fn find_norm_violation(level: u32) -> Option<(CDElement, CDElement)> {
    let dim = crate::element::dim_of(level);
    let sums: Vec<CDElement> = (0..dim)
        .flat_map(|i| (i + 1..dim).map(move |j| (i, j)))
        .map(|(i, j)| &crate::basis(level, i) + &crate::basis(level, j))
        .collect();
    let four = crate::rational::int(4);
    sums.par_iter()
        .find_map_first(|x| {
            sums.iter().find(|y| (x * *y).norm_sq() != four).map(|y| (x.clone(), y.clone()))
        })
}

/// Plain-text summary table of a run.
pub fn summary_table(reports: &[TheoremReport]) -> String {
    let mut out = format!("{:<18} {:>5} {:>8} {:>6} {:>10}\n", "theorem", "level", "trials", "result", "ms");
    for r in reports {
        out.push_str(&format!(
            "{:<18} {:>5} {:>8} {:>6} {:>10}\n",
            r.theorem_id,
            r.level,
            r.trials,
            if r.passed { "pass" } else { "FAIL" },
            r.elapsed_ms
        ));
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    out.push_str(&format!("{} reports, {} failed\n", reports.len(), failed));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_and_low_level() {
        let err = run_theorem("lemma_9_9", &RandomSpec::new(0, 4)).unwrap_err();
        assert!(matches!(err, AlgebraError::UnknownTheorem { ref known, .. } if known.len() == 18));
        assert!(matches!(
            run_theorem("theorem_4_2", &RandomSpec::new(0, 3)),
            Err(AlgebraError::TheoremLevel { min: 4, .. })
        ));
    }

    #[test]
    fn norm_violation_levels() {
        assert_eq!(find_norm_violation(2), None);
        assert_eq!(find_norm_violation(3), None);
        let (x, y) = find_norm_violation(4).expect("sedenions are not normed");
        assert_eq!(x.to_string(), "e1 + e10");
        assert_eq!(y.to_string(), "e4 + e15");
        assert!(!crate::classification::normed_with(&x, &y).unwrap());
    }
}
