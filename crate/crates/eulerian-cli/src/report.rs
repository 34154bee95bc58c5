//! Stable report schema shared by every subcommand.
//!
//! Rationals are serialized as `"numerator/denominator"` strings (plain
//! `"numerator"` for integers) so no float ever appears. Struct field order
//! and `BTreeMap` inputs keep serialization deterministic: parsing a report
//! and re-serializing it is byte-identical.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use eulerian::analysis::{PropertyReport, Witness};
use eulerian::scalar::format_rat;
use eulerian::sweeps::Violation;
use eulerian::Poly;

/// Bumped on any breaking field change.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Deserialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub results: Vec<ResultItem>,
    pub cells_checked: Option<u64>,
    pub status: Status,
}

impl Report {
    pub fn new(command: &str, inputs: BTreeMap<String, String>) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            inputs,
            results: Vec::new(),
            cells_checked: None,
            status: Status::Pass,
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq, Default)]
pub struct ResultItem {
    pub n: Option<u64>,
    /// Ascending coefficients as decimal-rational strings.
    pub polynomial: Option<Vec<String>>,
    pub checks: Vec<CheckItem>,
    /// Bivariate coefficient rows (`table[e][c]` multiplies `x^e q^c`).
    pub table: Option<Vec<Vec<String>>>,
    pub violation: Option<ViolationItem>,
    pub note: Option<String>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct CheckItem {
    pub property: String,
    pub verdict: String,
    pub reason: Option<String>,
    pub witness: Option<WitnessItem>,
    pub modes: Option<Vec<u64>>,
    pub gamma_alpha: Option<Vec<String>>,
    pub gamma_beta: Option<Vec<String>>,
    /// Command reproducing a failure in isolation.
    pub replay: Option<String>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct WitnessItem {
    pub site: String,
    pub indices: Vec<u64>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct ViolationItem {
    pub family: String,
    pub params: BTreeMap<String, String>,
    pub n: u64,
    pub property: String,
    pub witness: Option<WitnessItem>,
    pub replay: String,
}

pub fn poly_strings(p: &Poly) -> Vec<String> {
    p.coeffs().iter().map(format_rat).collect()
}

pub fn witness_item(w: &Witness) -> WitnessItem {
    WitnessItem {
        site: w.site.as_str().to_string(),
        indices: w.indices.iter().map(|&i| i as u64).collect(),
        lhs: format_rat(&w.lhs),
        rhs: format_rat(&w.rhs),
    }
}

pub fn check_item(report: &PropertyReport, replay: Option<String>) -> CheckItem {
    CheckItem {
        property: report.property.as_str().to_string(),
        verdict: report.verdict.as_str().to_string(),
        reason: report.reason.clone(),
        witness: report.witness.as_ref().map(witness_item),
        modes: report
            .modes
            .as_ref()
            .map(|m| m.iter().map(|&i| i as u64).collect()),
        gamma_alpha: report
            .alpha
            .as_ref()
            .map(|g| g.entries().iter().map(format_rat).collect()),
        gamma_beta: report
            .beta
            .as_ref()
            .map(|g| g.entries().iter().map(format_rat).collect()),
        replay,
    }
}

pub fn violation_item(v: &Violation, replay: String) -> ViolationItem {
    ViolationItem {
        family: v.family.as_str().to_string(),
        params: v
            .params
            .iter()
            .map(|(k, val)| (k.clone(), format_rat(val)))
            .collect(),
        n: v.n as u64,
        property: v.property.clone(),
        witness: v.witness.as_ref().map(witness_item),
        replay,
    }
}

pub fn render_json(report: &Report) -> String {
    let mut out = serde_json::to_string_pretty(report).expect("report serializes");
    out.push('\n');
    out
}
