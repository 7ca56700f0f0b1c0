//! Run records and their tabular and JSON renderings.
//!
//! JSON output goes through `serde_json::Value`, whose object keys are
//! sorted, so identical inputs always produce byte-identical documents.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::complex::{discrepancy, max_nonzero_h1, DiscrepancyReport};
use crate::error::AlgebraError;
use crate::mesh::Triangulation;
use crate::rank::RankEngine;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub k: usize,
    pub dim: usize,
    #[serde(rename = "P")]
    pub bound: i64,
    pub chi: i64,
    pub h1: i64,
    pub gap: i64,
}

impl From<&DiscrepancyReport> for Row {
    fn from(d: &DiscrepancyReport) -> Self {
        Self { k: d.k, dim: d.dim, bound: d.bound, chi: d.chi, h1: d.h1, gap: d.gap }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunRecord {
    pub command: String,
    pub mesh: String,
    pub r: usize,
    pub rows: Vec<Row>,
    pub max_nonzero_h1: Option<usize>,
    pub engine_version: String,
    /// Wall-clock time; only recorded on request since it breaks
    /// reproducibility of the document.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl RunRecord {
    pub fn to_json(&self) -> String {
        to_sorted_json(self)
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

/// Pretty JSON with sorted object keys.
pub fn to_sorted_json<T: Serialize>(value: &T) -> String {
    let value = serde_json::to_value(value).expect("records serialize");
    let mut text = serde_json::to_string_pretty(&value).expect("values serialize");
    text.push('\n');
    text
}

pub const CSV_HEADER: &str = "k,dim,P,chi,h1,gap";

pub fn rows_to_csv(rows: &[Row]) -> String {
    to_csv(rows)
}

/// CSV with a header taken from the field names.
pub fn to_csv<T: Serialize>(records: &[T]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for record in records {
        writer.serialize(record).expect("records serialize");
    }
    String::from_utf8(writer.into_inner().expect("in-memory writer")).expect("utf-8 output")
}

pub fn rows_to_text(rows: &[Row], max_nonzero_h1: Option<usize>) -> String {
    let mut out = format!("{:>4} {:>8} {:>8} {:>8} {:>6} {:>6}\n", "k", "dim", "P", "chi", "h1", "gap");
    for r in rows {
        let _ = writeln!(out, "{:>4} {:>8} {:>8} {:>8} {:>6} {:>6}", r.k, r.dim, r.bound, r.chi, r.h1, r.gap);
    }
    match max_nonzero_h1 {
        Some(k) => {
            let _ = writeln!(out, "max nonzero h1: {k}");
        }
        None => out.push_str("max nonzero h1: none\n"),
    }
    out
}

/// Parses `"N"` or `"A..B"` (inclusive).
pub fn parse_range(text: &str) -> Option<RangeInclusive<usize>> {
    match text.split_once("..") {
        None => text.trim().parse().ok().map(|k| k..=k),
        Some((a, b)) => {
            let a: usize = a.trim().parse().ok()?;
            let b: usize = b.trim().trim_start_matches('=').parse().ok()?;
            (a <= b).then_some(a..=b)
        }
    }
}

/// Discrepancy rows for a degree range plus the `max_nonzero_h1` footer.
pub fn sweep(
    mesh: &Triangulation,
    r: usize,
    ks: RangeInclusive<usize>,
    engine: &RankEngine,
) -> Result<(Vec<Row>, Option<usize>), AlgebraError> {
    if ks.is_empty() {
        return Err(AlgebraError::EmptyRange);
    }
    let rows =
        ks.map(|k| discrepancy(mesh, r, k, engine).map(|d| Row::from(&d))).collect::<Result<Vec<_>, _>>()?;
    Ok((rows, max_nonzero_h1(mesh, r, engine)?))
}
