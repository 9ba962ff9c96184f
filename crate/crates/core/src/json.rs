//! JSON serialization of reports.
//!
//! Field order is fixed by the struct definitions and maps are avoided, so
//! identical inputs serialize byte-identically. Arbitrary-precision integers
//! (multiplicities, ranks) are decimal strings; weight coordinates and query
//! parameters are plain JSON numbers. Levi indices are 1-based, matching the
//! CLI convention.

use crate::error::{Error, Result};
use crate::frobenius::{DecompositionReport, Multiplicity, StableSummands};
use crate::verify::VerifyReport;
use crate::weight::Weight;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QueryJson {
    #[serde(rename = "type")]
    pub type_spec: String,
    pub levi: Vec<usize>,
    pub p: u64,
    pub r: u32,
    pub mu: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummandJson {
    pub lambda: Vec<i64>,
    /// `"unknown"` or a decimal integer string.
    pub multiplicity: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub query: QueryJson,
    pub summands: Vec<SummandJson>,
    pub total_rank: String,
    pub accounted_rank: String,
}

impl From<&DecompositionReport> for ReportJson {
    fn from(report: &DecompositionReport) -> Self {
        let query = &report.query;
        ReportJson {
            query: QueryJson {
                type_spec: query.root_system().type_string(),
                levi: query.parabolic().levi().iter().map(|&i| i + 1).collect(),
                p: query.p(),
                r: query.r(),
                mu: query.mu().coords().to_vec(),
            },
            summands: report
                .summands
                .iter()
                .map(|s| SummandJson {
                    lambda: s.lambda.coords().to_vec(),
                    multiplicity: s.multiplicity.to_string(),
                })
                .collect(),
            total_rank: report.total_rank.to_string(),
            accounted_rank: report.accounted_rank.to_string(),
        }
    }
}

impl ReportJson {
    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::ParseJson(e.to_string()))
    }
}

/// Parse a serialized multiplicity back into the typed form.
pub fn parse_multiplicity(s: &str) -> Option<Multiplicity> {
    if s == "unknown" {
        return Some(Multiplicity::Unknown);
    }
    s.parse().ok().map(Multiplicity::Exact)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StableJson {
    #[serde(rename = "type")]
    pub type_spec: String,
    pub levi: Vec<usize>,
    pub p: u64,
    /// A decimal power or `"limit"`.
    pub r: String,
    pub weights: Vec<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stabilizes_at: Option<u32>,
}

impl StableJson {
    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("stable serialization cannot fail")
    }

    pub fn new(
        type_spec: String,
        levi: Vec<usize>,
        p: u64,
        r: String,
        stable: &StableSummands,
    ) -> Self {
        StableJson {
            type_spec,
            levi,
            p,
            r,
            weights: weights_to_rows(&stable.weights),
            stabilizes_at: stable.stabilizes_at,
        }
    }
}

pub fn weights_to_rows(weights: &[Weight]) -> Vec<Vec<i64>> {
    weights.iter().map(|w| w.coords().to_vec()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyCheckJson {
    pub name: String,
    pub checks: u64,
    pub failed: u64,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyJson {
    pub suite: String,
    pub seed: u64,
    pub passed: u64,
    pub failed: u64,
    pub checks: Vec<VerifyCheckJson>,
}

impl From<&VerifyReport> for VerifyJson {
    fn from(report: &VerifyReport) -> Self {
        VerifyJson {
            suite: report.suite.clone(),
            seed: report.seed,
            passed: report.passed(),
            failed: report.failed(),
            checks: report
                .outcomes
                .iter()
                .map(|o| VerifyCheckJson {
                    name: o.name.clone(),
                    checks: o.checks,
                    failed: o.failures.len() as u64,
                    failures: o.failures.clone(),
                })
                .collect(),
        }
    }
}

impl VerifyJson {
    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("verify serialization cannot fail")
    }
}
