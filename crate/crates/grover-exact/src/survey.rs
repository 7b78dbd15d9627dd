//! Exhaustive (t, N) enumeration up to a bound, with each instance
//! classified by three independent routes (analytic classifier, exact
//! rational hit search, float simulation) and cross-validated, plus
//! CSV/JSON report emission.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::Error;
use crate::exactmath::Rational;
use crate::grover::{ExactnessVerdict, InstanceParams};
use crate::simulator::{grover_step, success_probability, uniform_state, SearchSpec};

/// Float simulation is skipped for databases larger than this inside
/// surveys; exact arithmetic has no cap.
pub const SIMULATION_SIZE_CAP: u64 = 64;

/// All three classification routes for one (t, N) instance.
#[derive(Clone, PartialEq, Debug)]
pub struct SurveyRecord {
    pub database_size: u64,
    pub target_count: u64,
    pub cos_two_theta: Rational,
    pub verdict: ExactnessVerdict,
    /// Smallest n with exact p_n = 1, from the rational hit search.
    pub exact_hit: Option<u64>,
    /// Max simulated success probability over n ≤ n_max; absent above the cap.
    pub sim_max_prob: Option<f64>,
    pub sim_argmax_n: Option<u64>,
    /// Whether the hit search agrees with the analytic verdict.
    pub agreement: bool,
}

/// One record per (t, N) with 1 ≤ N ≤ max_size and 0 ≤ t ≤ N, in
/// (N, t) lexicographic order.
pub fn survey_range(max_size: u64, n_max: u64) -> Vec<SurveyRecord> {
    let mut records = Vec::new();
    for size in 1..=max_size {
        for targets in 0..=size {
            records.push(survey_instance(targets, size, n_max));
        }
    }
    records
}

fn survey_instance(targets: u64, size: u64, n_max: u64) -> SurveyRecord {
    let params = InstanceParams::new(targets, size).expect("enumeration stays in range");
    let verdict = params.classify_exactness();
    let exact_hit = params.exact_hit_search(n_max);
    let (sim_max_prob, sim_argmax_n) = if size <= SIMULATION_SIZE_CAP {
        let (p, n) = simulate_max(targets, size, n_max);
        (Some(p), Some(n))
    } else {
        (None, None)
    };
    let agreement = match verdict.exact_iterations() {
        Some(n) => exact_hit == Some(n),
        None => exact_hit.is_none(),
    };
    SurveyRecord {
        database_size: size,
        target_count: targets,
        cos_two_theta: params.cos_two_theta(),
        verdict,
        exact_hit,
        sim_max_prob,
        sim_argmax_n,
        agreement,
    }
}

fn simulate_max(targets: u64, size: u64, n_max: u64) -> (f64, u64) {
    let spec = SearchSpec::new(size as usize, 1..=targets as usize).expect("valid enumeration");
    let mut state = uniform_state(size as usize).expect("size >= 1");
    let mut best = (success_probability(&state, &spec).expect("dims match"), 0u64);
    for n in 1..=n_max {
        state = grover_step(&state, &spec).expect("dims match");
        let p = success_probability(&state, &spec).expect("dims match");
        if p > best.0 {
            best = (p, n);
        }
    }
    best
}

/// Verdict-class counts plus the records whose routes disagree; an
/// empty disagreement list is the pass condition.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct ValidationSummary {
    pub total: usize,
    pub verdict_counts: BTreeMap<String, usize>,
    pub disagreements: Vec<SurveyRecord>,
}

pub fn cross_validate(records: &[SurveyRecord]) -> ValidationSummary {
    let mut summary = ValidationSummary { total: records.len(), ..Default::default() };
    for record in records {
        *summary.verdict_counts.entry(record.verdict.class_name().to_string()).or_insert(0) += 1;
        if !record.agreement {
            summary.disagreements.push(record.clone());
        }
    }
    summary
}

/// Report output format.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReportFormat {
    Csv,
    Json,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

pub const CSV_HEADER: &str = "N,t,cos2theta,verdict,exact_hit_n,sim_max_prob,sim_argmax_n,agreement";

fn fraction(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Renders records as a text document; CSV has the fixed header above,
/// JSON is an array of objects with the same field names. Absent values
/// are empty (CSV) or null (JSON).
pub fn emit_report(records: &[SurveyRecord], format: ReportFormat) -> String {
    match format {
        ReportFormat::Csv => {
            let mut out = String::from(CSV_HEADER);
            out.push('\n');
            for r in records {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{},{}",
                    r.database_size,
                    r.target_count,
                    fraction(&r.cos_two_theta),
                    r.verdict,
                    r.exact_hit.map(|n| n.to_string()).unwrap_or_default(),
                    r.sim_max_prob.map(|p| format!("{p:?}")).unwrap_or_default(),
                    r.sim_argmax_n.map(|n| n.to_string()).unwrap_or_default(),
                    r.agreement,
                );
            }
            out
        }
        ReportFormat::Json => {
            let rows: Vec<Value> = records.iter().map(record_to_json).collect();
            serde_json::to_string_pretty(&rows).expect("report values are serializable")
        }
    }
}

pub fn record_to_json(r: &SurveyRecord) -> Value {
    json!({
        "N": r.database_size,
        "t": r.target_count,
        "cos2theta": fraction(&r.cos_two_theta),
        "verdict": r.verdict.to_string(),
        "exact_hit_n": r.exact_hit,
        "sim_max_prob": r.sim_max_prob,
        "sim_argmax_n": r.sim_argmax_n,
        "agreement": r.agreement,
    })
}
