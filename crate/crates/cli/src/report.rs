//! Report schema and emission.
//!
//! JSON is the machine format; CSV covers the tabular views. Exact
//! rationals cross the boundary as `num/den` strings, never floats, and
//! struct field order fixes the byte layout so identical inputs produce
//! identical bytes.

use serde::{Deserialize, Serialize};

use hk_core::bounds::{CheckOutcome, EpsilonCell};
use hk_core::hk::{HKSample, MultiplicityEstimate};
use hk_core::rational::rat_to_string;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct EstimateJson {
    pub value: String,
    pub uncertainty: String,
    pub method: String,
    pub samples_used: usize,
}

impl EstimateJson {
    pub fn from_estimate(e: &MultiplicityEstimate) -> Self {
        EstimateJson {
            value: rat_to_string(&e.value),
            uncertainty: rat_to_string(&e.uncertainty),
            method: e.method.as_str().to_string(),
            samples_used: e.samples_used,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct SampleJson {
    pub e: u32,
    pub q: u64,
    pub colength: u64,
    pub normalized: String,
}

impl SampleJson {
    pub fn from_sample(s: &HKSample) -> Self {
        SampleJson {
            e: s.e,
            q: s.q,
            colength: s.colength,
            normalized: rat_to_string(&s.normalized),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CheckJson {
    pub id: String,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub slack: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckJson {
    pub fn from_outcome(c: &CheckOutcome) -> Self {
        CheckJson {
            id: c.id.clone(),
            status: c.status.as_str().to_string(),
            slack: c.slack.as_ref().map(rat_to_string),
            note: c.note.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct FStatJson {
    pub ideal: String,
    pub colength: u64,
    pub value: String,
    pub uncertainty: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct RingReport {
    pub engine_version: String,
    pub ring: String,
    pub p: u32,
    pub vars: Vec<String>,
    pub order: String,
    pub e_max: u32,
    pub n_max: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dimension: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub regular: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e_hk: Option<EstimateJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e_r: Option<EstimateJson>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub hk_samples: Vec<SampleJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda_p: Option<u64>,
    /// Whether |normalized(e+1) - normalized(e)| decreases in e. Needs at
    /// least three samples; informational, never a pass/fail verdict.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub convergence_monotone: Option<bool>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<CheckJson>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub f_stats: Vec<FStatJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epsilon_contribution: Option<String>,
    /// Structured failure: set when a pipeline stage errored.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct EpsilonJson {
    pub d: usize,
    pub p: u32,
    pub corpus_min: String,
    pub min_uncertainty: String,
    pub minimizing_ring: String,
    pub theorem_bound: String,
    pub bound_satisfied: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reference: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub within_tolerance: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl EpsilonJson {
    pub fn from_cell(c: &EpsilonCell) -> Self {
        EpsilonJson {
            d: c.d,
            p: c.p,
            corpus_min: rat_to_string(&c.corpus_min),
            min_uncertainty: rat_to_string(&c.min_uncertainty),
            minimizing_ring: c.minimizing_ring.clone(),
            theorem_bound: rat_to_string(&c.theorem_bound),
            bound_satisfied: c.bound_satisfied,
            reference: c.reference.as_ref().map(rat_to_string),
            within_tolerance: c.within_tolerance,
            note: c.note.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CorpusReport {
    pub engine_version: String,
    pub ring_count: usize,
    pub rings: Vec<RingReport>,
    pub epsilon_table: Vec<EpsilonJson>,
    pub epsilon_valid: bool,
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn opt(s: &Option<String>) -> String {
    s.clone().unwrap_or_default()
}

/// Long-format check table: one row per (ring, check).
pub fn ring_reports_csv(reports: &[RingReport]) -> String {
    let mut out = String::from("ring,d,p,e_r,e_hk,check,status,slack\n");
    for r in reports {
        let d = r.dimension.map(|d| d.to_string()).unwrap_or_default();
        let e_r = r.e_r.as_ref().map(|e| e.value.clone()).unwrap_or_default();
        let e_hk = r.e_hk.as_ref().map(|e| e.value.clone()).unwrap_or_default();
        if r.checks.is_empty() {
            out.push_str(&format!(
                "{},{},{},{},{},,{},\n",
                csv_field(&r.ring),
                d,
                r.p,
                e_r,
                e_hk,
                r.error.as_deref().map(|_| "error").unwrap_or("none")
            ));
            continue;
        }
        for c in &r.checks {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                csv_field(&r.ring),
                d,
                r.p,
                e_r,
                e_hk,
                csv_field(&c.id),
                c.status,
                opt(&c.slack)
            ));
        }
    }
    out
}

pub fn epsilon_csv(cells: &[EpsilonJson]) -> String {
    let mut out =
        String::from("d,p,corpus_min,minimizing_ring,theorem_bound,bound_satisfied,reference,within_tolerance\n");
    for c in cells {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            c.d,
            c.p,
            c.corpus_min,
            csv_field(&c.minimizing_ring),
            c.theorem_bound,
            c.bound_satisfied,
            opt(&c.reference),
            c.within_tolerance.map(|b| b.to_string()).unwrap_or_default()
        ));
    }
    out
}

pub fn corpus_csv(report: &CorpusReport) -> String {
    format!(
        "{}\n{}",
        ring_reports_csv(&report.rings),
        epsilon_csv(&report.epsilon_table)
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_quotes_fields_with_commas() {
        assert_eq!(csv_field("a,b"), "\"a,b\"");
        assert_eq!(csv_field("plain"), "plain");
    }

    #[test]
    fn json_is_newline_terminated() {
        let j = to_json(&CheckJson {
            id: "sandwich".into(),
            status: "pass".into(),
            slack: Some("1/2".into()),
            note: None,
        });
        assert!(j.ends_with('\n'));
        assert!(j.contains("\"slack\": \"1/2\""));
    }
}
