//! The structured output document and its command-specific bodies.

use qlambda::classify::{ComparisonVerdict, CuntzRealization, SearchResult};
use qlambda::invariants::table::{FormulaRow, TableRegime};
use qlambda::invariants::{HomologyTable, InvariantReport, KTriple};
use qlambda::polyring::IntPoly;
use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Bumped on any breaking change to the document layout.
pub const SCHEMA_VERSION: &str = "1.0";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    /// The input was rejected; `body` is a [`Failure`].
    Refused,
    /// The computation failed; `body` is a [`Failure`].
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawDocument")]
pub struct OutputDocument {
    pub schema_version: String,
    pub command: String,
    /// The arguments as given.
    pub inputs: Value,
    pub status: Status,
    pub body: Body,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Body {
    Report(Box<InvariantReport>),
    Compare(Box<CompareBody>),
    Cuntz(Box<CuntzRealization>),
    Search(SearchResult),
    Table(TableBody),
    Failure(Failure),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub code: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompareBody {
    pub f: IntPoly,
    pub g: IntPoly,
    pub f_ktriple: KTriple,
    pub g_ktriple: KTriple,
    pub verdict: ComparisonVerdict,
}

/// Groups computed from the blocks, laid out like a [`FormulaRow`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComputedRow {
    pub ktriple: KTriple,
    pub homology_coeff: HomologyTable,
    pub homology_g: HomologyTable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub parameters: Vec<i64>,
    pub poly: IntPoly,
    pub computed: ComputedRow,
    pub formula: FormulaRow,
    pub matches: bool,
}

/// A parameter tuple with no row: outside the regime, or refused.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedTuple {
    pub parameters: Vec<i64>,
    pub poly: Option<IntPoly>,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableBody {
    pub regime: TableRegime,
    pub parameter_names: Vec<String>,
    pub rows: Vec<TableRow>,
    pub skipped: Vec<SkippedTuple>,
    pub all_match: bool,
}

#[derive(Deserialize)]
struct RawDocument {
    schema_version: String,
    command: String,
    inputs: Value,
    status: Status,
    body: Value,
}

impl TryFrom<RawDocument> for OutputDocument {
    type Error = String;

    fn try_from(raw: RawDocument) -> Result<Self, String> {
        fn decode<T: serde::de::DeserializeOwned>(v: Value) -> Result<T, String> {
            serde_json::from_value(v).map_err(|e| e.to_string())
        }
        let body = match (raw.status, raw.command.as_str()) {
            (Status::Refused | Status::Error, _) => Body::Failure(decode(raw.body)?),
            (Status::Ok, "report") => Body::Report(decode(raw.body)?),
            (Status::Ok, "compare") => Body::Compare(decode(raw.body)?),
            (Status::Ok, "cuntz") => Body::Cuntz(decode(raw.body)?),
            (Status::Ok, "search") => Body::Search(decode(raw.body)?),
            (Status::Ok, "table") => Body::Table(decode(raw.body)?),
            (Status::Ok, other) => return Err(format!("unknown command '{other}'")),
        };
        Ok(OutputDocument {
            schema_version: raw.schema_version,
            command: raw.command,
            inputs: raw.inputs,
            status: raw.status,
            body,
        })
    }
}
