//! Report and table rendering.
//!
//! Rationals are always rendered as strings (`"3/4"`, or `"3"` when the
//! denominator is 1). Object keys keep insertion order, so the output is
//! byte-stable for a given input.

use serde_json::{json, Map, Value as Json};

use crate::algebra::AlgebraPresentation;
use crate::audit::{AxiomResult, Value, Witness};
use crate::basis::{BasisId, CellUniverse};
use crate::element::{Combination, Element};
use crate::hallfusion::ContractionReport;
use crate::scalar::Scalar;
use crate::suite::SuiteReport;

fn s(x: &Scalar) -> Json {
    Json::String(x.to_string())
}

fn b(cells: &CellUniverse, x: BasisId) -> Json {
    Json::String(cells.render(x))
}

fn value_json(cells: &CellUniverse, v: &Value) -> Json {
    match v {
        Value::Scalar(x) => s(x),
        Value::Element(e) => Json::Array(e.iter().map(|(k, c)| json!([b(cells, *k), s(c)])).collect()),
        Value::Tensor(t) => Json::Array(
            t.iter()
                .map(|((l, r), c)| json!([[b(cells, *l), b(cells, *r)], s(c)]))
                .collect(),
        ),
        Value::Tensor3(t) => Json::Array(
            t.iter()
                .map(|((x, y, z), c)| json!([[b(cells, *x), b(cells, *y), b(cells, *z)], s(c)]))
                .collect(),
        ),
    }
}

fn witness_json(cells: &CellUniverse, w: &Witness) -> Json {
    json!({
        "inputs": w.inputs.iter().map(|x| b(cells, *x)).collect::<Vec<_>>(),
        "label": w.label,
        "lhs": value_json(cells, &w.lhs),
        "rhs": value_json(cells, &w.rhs),
    })
}

fn axiom_json(cells: &CellUniverse, r: &AxiomResult) -> Json {
    let mut obj = Map::new();
    obj.insert("status".into(), json!(r.status.as_str()));
    obj.insert("checked".into(), json!(r.checked));
    obj.insert("truncated".into(), json!(r.truncated));
    if !r.truncated_tuples.is_empty() {
        obj.insert(
            "truncated_tuples".into(),
            Json::Array(
                r.truncated_tuples
                    .iter()
                    .map(|t| Json::Array(t.iter().map(|x| b(cells, *x)).collect()))
                    .collect(),
            ),
        );
    }
    if let Some(note) = &r.note {
        obj.insert("note".into(), json!(note));
    }
    obj.insert(
        "witnesses".into(),
        Json::Array(r.witnesses.iter().map(|w| witness_json(cells, w)).collect()),
    );
    Json::Object(obj)
}

fn contractions_json(c: &ContractionReport) -> Json {
    let conditions: Vec<Json> = c
        .conditions
        .iter()
        .map(|r| {
            json!({
                "id": r.condition.id(),
                "scope": r.scope,
                "status": r.status.as_str(),
                "note": r.note,
                "violations": r.violations.iter().map(|v| json!({
                    "indices": v.indices,
                    "label": v.label,
                    "value": s(&v.value),
                    "required": s(&v.required),
                })).collect::<Vec<_>>(),
            })
        })
        .collect();
    let mut tables = Map::new();
    for (name, t) in &c.tables {
        tables.insert(
            name.clone(),
            Json::Array(t.entries.iter().map(|(k, v)| json!([k, s(v)])).collect()),
        );
    }
    json!({
        "conditions": conditions,
        "tables": tables,
        "warnings": c.warnings,
    })
}

fn audits_json(report: &SuiteReport) -> Json {
    let cells = report.algebra.cells();
    let mut audits = Map::new();
    for r in &report.audit.results {
        audits.insert(r.axiom.id().into(), axiom_json(cells, r));
    }
    Json::Object(audits)
}

/// Audit and contraction results only (the `audit --json` document).
pub fn render_report_json(report: &SuiteReport) -> String {
    let doc = json!({
        "audits": audits_json(report),
        "contractions": report.contractions.as_ref().map(contractions_json),
    });
    let mut text = serde_json::to_string_pretty(&doc).expect("json values serialize");
    text.push('\n');
    text
}

/// Full export: structure tables plus audit and contraction results.
pub fn render_export(alg: &AlgebraPresentation, report: &SuiteReport) -> String {
    let cells = alg.cells();
    let mut mul = Vec::new();
    for ((x, y), prod) in alg.mul_table() {
        for (z, c) in prod {
            mul.push(json!([b(cells, *x), b(cells, *y), b(cells, *z), s(c)]));
        }
    }
    let mut comul = Vec::new();
    for (x, d) in alg.comul_table() {
        for ((l, r), c) in d {
            comul.push(json!([b(cells, *x), [b(cells, *l), b(cells, *r)], s(c)]));
        }
    }
    let counit: Vec<Json> = alg
        .counit_table()
        .iter()
        .map(|(x, c)| json!([b(cells, *x), s(c)]))
        .collect();
    let unit: Vec<Json> = alg.unit().iter().map(|(x, c)| json!([b(cells, *x), s(c)])).collect();
    let doc = json!({
        "basis": alg.basis().iter().map(|x| b(cells, *x)).collect::<Vec<_>>(),
        "mul": mul,
        "comul": comul,
        "counit": counit,
        "unit": unit,
        "audits": audits_json(report),
        "contractions": report.contractions.as_ref().map(contractions_json),
    });
    let mut text = serde_json::to_string_pretty(&doc).expect("json values serialize");
    text.push('\n');
    text
}

fn combination_text<K: Ord + Clone>(x: &Combination<K>, key: impl Fn(&K) -> String) -> String {
    if x.is_zero() {
        return "0".into();
    }
    x.iter()
        .map(|(k, c)| {
            if c.is_one() {
                key(k)
            } else {
                format!("{c} {}", key(k))
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn element_text(cells: &CellUniverse, x: &Element) -> String {
    combination_text(x, |k| cells.render(*k))
}

pub fn value_text(cells: &CellUniverse, v: &Value) -> String {
    match v {
        Value::Scalar(x) => x.to_string(),
        Value::Element(e) => element_text(cells, e),
        Value::Tensor(t) => combination_text(t, |(l, r)| format!("{}⊗{}", cells.render(*l), cells.render(*r))),
        Value::Tensor3(t) => combination_text(t, |(x, y, z)| {
            format!("{}⊗{}⊗{}", cells.render(*x), cells.render(*y), cells.render(*z))
        }),
    }
}

/// Human-readable report, one line per axiom and condition with indented
/// witnesses and violations.
pub fn render_report_text(report: &SuiteReport) -> String {
    let cells = report.algebra.cells();
    let mut out = String::new();
    out.push_str("audits:\n");
    for r in &report.audit.results {
        out.push_str(&format!(
            "  {:<20} {:<4}  checked {}",
            r.axiom.id(),
            r.status.as_str(),
            r.checked
        ));
        if r.truncated > 0 {
            out.push_str(&format!(", truncated {}", r.truncated));
        }
        if let Some(note) = &r.note {
            out.push_str(&format!("  ({note})"));
        }
        out.push('\n');
        for w in &r.witnesses {
            let inputs = w.inputs.iter().map(|x| cells.render(*x)).collect::<Vec<_>>().join(", ");
            let label = if w.label.is_empty() {
                String::new()
            } else {
                format!(" [{}]", w.label)
            };
            out.push_str(&format!(
                "      witness ({inputs}){label}: {} != {}\n",
                value_text(cells, &w.lhs),
                value_text(cells, &w.rhs)
            ));
        }
    }
    if let Some(c) = &report.contractions {
        out.push_str(&render_contractions_text(c));
    }
    out
}

/// Contraction conditions and warnings in the text layout of
/// [`render_report_text`].
pub fn render_contractions_text(c: &ContractionReport) -> String {
    let mut out = String::from("contractions:\n");
    for r in &c.conditions {
        let id = match r.scope {
            Some(scope) => format!("{}[{scope}]", r.condition.id()),
            None => r.condition.id().to_string(),
        };
        out.push_str(&format!("  {:<20} {}", id, r.status.as_str()));
        if let Some(note) = &r.note {
            out.push_str(&format!("  ({note})"));
        }
        out.push('\n');
        for v in &r.violations {
            let label = if v.label.is_empty() {
                String::new()
            } else {
                format!(" [{}]", v.label)
            };
            out.push_str(&format!(
                "      ({}){label}: value {}, required {}\n",
                v.indices.join(","),
                v.value,
                v.required
            ));
        }
    }
    for w in &c.warnings {
        out.push_str(&format!("  warning: {w}\n"));
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableOp {
    Mul,
    Comul,
}

/// Nonzero entries of the multiplication or comultiplication table.
pub fn render_table(alg: &AlgebraPresentation, op: TableOp) -> String {
    let cells = alg.cells();
    let mut out = String::new();
    match op {
        TableOp::Mul => {
            for ((x, y), prod) in alg.mul_table() {
                out.push_str(&format!(
                    "{} * {} = {}\n",
                    cells.render(*x),
                    cells.render(*y),
                    element_text(cells, prod)
                ));
            }
        }
        TableOp::Comul => {
            for (x, d) in alg.comul_table() {
                out.push_str(&format!(
                    "Δ {} = {}\n",
                    cells.render(*x),
                    value_text(cells, &Value::Tensor(d.clone()))
                ));
            }
        }
    }
    out
}

/// Per-degree dimensions (a single entry when ungraded).
pub fn render_dimensions(alg: &AlgebraPresentation) -> String {
    let mut out = format!("dimension {}\n", alg.dim());
    if alg.grading().is_some() {
        for (deg, group) in alg.degree_components() {
            out.push_str(&format!("  degree {deg}: {}\n", group.len()));
        }
    }
    out
}
