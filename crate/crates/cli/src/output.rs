//! Machine-readable output helpers.
//!
//! Every numeric payload is serialized exactly: integers as decimal strings,
//! rationals as "p/q" strings. No floating-point token ever reaches stdout.

use chisel_core::polytope::ValidationReport;
use chisel_core::{Int, Polynomial, Rational};
use serde_json::{json, Value};

/// Exact string form of a rational ("p" or "p/q").
pub fn rational_str(r: &Rational) -> String {
    r.to_string()
}

/// Exact string form of an integer.
pub fn int_str(v: &Int) -> String {
    v.to_string()
}

/// Ascending-degree coefficient array of exact strings.
pub fn poly_json(p: &Polynomial) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .map(|c| Value::String(rational_str(c)))
            .collect(),
    )
}

pub fn rational_array_json(values: &[Rational]) -> Value {
    Value::Array(
        values
            .iter()
            .map(|c| Value::String(rational_str(c)))
            .collect(),
    )
}

pub fn validation_json(report: &ValidationReport) -> Value {
    json!({
        "dim": report.dim.to_string(),
        "vertices": report.vertex_count.to_string(),
        "edges": report.edge_count.to_string(),
        "facets": report.facet_count.to_string(),
        "is_smooth": report.is_smooth,
        "is_reflexive": report.is_reflexive,
        "min_edge_length": report.min_edge_length.as_ref().map(int_str),
    })
}

pub fn validation_text(report: &ValidationReport) -> String {
    format!(
        "dim {}  vertices {}  edges {}  facets {}\nsmooth: {}  reflexive: {}  min edge length: {}",
        report.dim,
        report.vertex_count,
        report.edge_count,
        report.facet_count,
        report.is_smooth,
        report.is_reflexive,
        report
            .min_edge_length
            .as_ref()
            .map_or("-".to_string(), |v| v.to_string()),
    )
}

/// The envelope printed in `--json` mode.
pub fn envelope(command: &str, result: Value, elapsed_ms: u128) -> Value {
    json!({
        "command": command,
        "result": result,
        "exact": true,
        "status": "ok",
        "elapsed_ms": elapsed_ms.to_string(),
    })
}
