//! JSON documents written by the `analyze`, `corpus` and `search` subcommands.

use logtan::corpus::FixtureOutcome;
use logtan::homology::BettiTable;
use logtan::logtan::{BourbakiData, InvariantReport, Violation};
use logtan::search::{Anomaly, SearchConfig};
use serde::{Deserialize, Serialize};

/// Bumped whenever a field is added, removed or renamed.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalyzeInput {
    pub f: String,
    pub g: String,
    /// True when `f` and `g` were exchanged to put the lower degree first.
    pub swapped: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BettiOutput {
    /// Macaulay2-style table of graded Betti numbers.
    pub grid: String,
    /// Generator degrees of each free module, by homological index.
    pub degrees: Vec<Vec<i64>>,
}

impl From<&BettiTable> for BettiOutput {
    fn from(b: &BettiTable) -> Self {
        BettiOutput { grid: b.to_grid(), degrees: b.all_degrees().to_vec() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ErrorOutput {
    /// One of `parse`, `invalid_sequence`, `invalid_request`, `not_normal`, `dependent`, `bourbaki`, `internal`.
    pub kind: String,
    pub message: String,
    /// For non-normal input: projective dimension and degree of `V(Fitt0)`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub dimension: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub divisor_degree: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalyzeOutput {
    pub schema_version: u32,
    pub version: String,
    pub input: AnalyzeInput,
    pub field: String,
    pub report: Option<InvariantReport>,
    pub bourbaki: Option<BourbakiData>,
    pub betti: Option<BettiOutput>,
    pub violations: Option<Vec<Violation>>,
    pub timing_ms: u64,
    pub error: Option<ErrorOutput>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusOutput<'a> {
    pub schema_version: u32,
    pub version: String,
    pub field: String,
    pub passed: usize,
    pub failed: usize,
    pub fixtures: &'a [FixtureOutcome],
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HistogramRow {
    pub m: i64,
    pub e: i64,
    pub bour: i64,
    pub c3: i64,
    pub count: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SearchSummary {
    pub schema_version: u32,
    pub version: String,
    pub config: SearchConfig,
    pub draws: u64,
    pub kept: usize,
    pub non_normal: u64,
    pub dependent: u64,
    pub histogram: Vec<HistogramRow>,
    pub anomalies: Vec<Anomaly>,
}
