//! The structured output schema.  Field names are part of the interface.

use serde::{Deserialize, Serialize};
use tetra_core::WeightVector;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    pub input: Input,
    pub result: serde_json::Value,
    pub trace: Option<Vec<TraceStep>>,
    pub diagnostics: Diagnostics,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Input {
    Weights(WeightVector),
    Integer(u32),
}

/// One reduction: facet tag, `F` as an exponent 4-tuple over `a, b, c, d`,
/// the variable `G`, and the weights after the step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub facet: String,
    pub f: [u32; 4],
    pub g: String,
    pub after: WeightVector,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostics {
    pub elapsed_micros: u64,
    /// Whether the brute-force ideal engine was consulted.
    pub oracle: bool,
    pub caps: CapsRecord,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CapsRecord {
    pub max_generators: u64,
    pub max_degree: u32,
}

/// Sparse matrix with entries written as signed monomials, e.g. `-a^2c`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixRecord {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<MatrixEntryRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixEntryRecord {
    pub row: usize,
    pub col: usize,
    pub entry: String,
}
