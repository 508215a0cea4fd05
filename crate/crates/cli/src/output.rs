//! Command reports and their text and JSON renderings.

use std::fmt::Write as _;

use lietriple::exactlin::format_rational;
use lietriple::{Matrix, MultiMap, Report};
use serde_json::{json, Map, Value};

use crate::format::sparse;

/// How many violations a rendered check lists.
pub const SHOWN_VIOLATIONS: usize = 8;

#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub report: Report,
    /// Set when the check could not run because an input failed its own axioms.
    pub note: Option<String>,
}

#[derive(Debug, Clone)]
pub enum Output {
    Line(String),
    Count(usize),
    Text(String),
    Tensor(MultiMap),
    Matrix(Matrix),
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub command: String,
    pub checks: Vec<Check>,
    pub outputs: Vec<(String, Output)>,
}

impl Outcome {
    pub fn new(command: impl Into<String>) -> Self {
        Outcome { command: command.into(), checks: Vec::new(), outputs: Vec::new() }
    }

    pub fn check(&mut self, name: impl Into<String>, report: Report) {
        self.checks.push(Check { name: name.into(), report, note: None });
    }

    pub fn blocked(&mut self, name: impl Into<String>, note: impl Into<String>, report: Report) {
        self.checks.push(Check { name: name.into(), report, note: Some(note.into()) });
    }

    pub fn output(&mut self, name: impl Into<String>, value: Output) {
        self.outputs.push((name.into(), value));
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.note.is_none() && c.report.passed())
    }
}

fn tensor_lines(t: &MultiMap) -> Vec<String> {
    t.nonzero_values()
        .map(|(idx, v)| {
            let joined: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
            format!("{} = {}", joined.join(" "), sparse(v))
        })
        .collect()
}

fn matrix_rows(m: &Matrix) -> Vec<String> {
    (0..m.rows()).map(|r| m.row(r).iter().map(format_rational).collect::<Vec<_>>().join(" ")).collect()
}

pub fn render_text(o: &Outcome) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "command: {}", o.command);
    for c in &o.checks {
        let status = if c.note.is_none() && c.report.passed() { "PASS" } else { "FAIL" };
        let _ = write!(out, "{status} {} (instances {}", c.name, c.report.instances_checked);
        if c.report.total_violations > 0 {
            let _ = write!(out, ", violations {}", c.report.total_violations);
        }
        out.push_str(")\n");
        if let Some(note) = &c.note {
            let _ = writeln!(out, "  not run: {note}");
        }
        for v in c.report.violations.iter().take(SHOWN_VIOLATIONS) {
            let idx: Vec<String> = v.indices.iter().map(|i| i.to_string()).collect();
            let _ = writeln!(out, "  {} at ({}): residual {}", v.check, idx.join(","), sparse(&v.residual));
        }
    }
    for (name, value) in &o.outputs {
        match value {
            Output::Line(s) => {
                let _ = writeln!(out, "{s}");
            }
            Output::Count(n) => {
                let _ = writeln!(out, "{name}: {n}");
            }
            Output::Text(s) => {
                let _ = writeln!(out, "{name}: {s}");
            }
            Output::Tensor(t) => {
                let _ = writeln!(out, "{name}: arity {} ({} -> {})", t.arity(), t.dim_in(), t.dim_out());
                for line in tensor_lines(t) {
                    let _ = writeln!(out, "  {line}");
                }
            }
            Output::Matrix(m) => {
                let _ = writeln!(out, "{name}: {}x{}", m.rows(), m.cols());
                for line in matrix_rows(m) {
                    let _ = writeln!(out, "  {line}");
                }
            }
        }
    }
    let _ = writeln!(out, "status: {}", if o.passed() { "ok" } else { "failed" });
    out
}

fn rational_list(v: &[lietriple::Rational]) -> Value {
    Value::Array(v.iter().map(|c| Value::String(format_rational(c))).collect())
}

fn report_json(c: &Check) -> Value {
    let violations: Vec<Value> = c
        .report
        .violations
        .iter()
        .take(SHOWN_VIOLATIONS)
        .map(|v| json!({ "identity": v.check, "indices": v.indices, "residual": rational_list(&v.residual) }))
        .collect();
    let mut m = Map::new();
    m.insert("name".into(), json!(c.name));
    m.insert("status".into(), json!(if c.note.is_none() && c.report.passed() { "pass" } else { "fail" }));
    m.insert("instances".into(), json!(c.report.instances_checked));
    m.insert("violations".into(), json!(c.report.total_violations));
    if let Some(note) = &c.note {
        m.insert("not_run".into(), json!(note));
    }
    m.insert("first_violations".into(), Value::Array(violations));
    Value::Object(m)
}

fn value_json(v: &Output) -> Value {
    match v {
        Output::Line(s) | Output::Text(s) => json!(s),
        Output::Count(n) => json!(n),
        Output::Tensor(t) => {
            let entries: Vec<Value> = t.nonzero_values().map(|(idx, v)| json!({ "indices": idx, "value": rational_list(v) })).collect();
            json!({ "arity": t.arity(), "dim_in": t.dim_in(), "dim_out": t.dim_out(), "entries": entries })
        }
        Output::Matrix(m) => {
            let rows: Vec<Value> = (0..m.rows()).map(|r| rational_list(m.row(r))).collect();
            json!({ "rows": m.rows(), "cols": m.cols(), "entries": rows })
        }
    }
}

pub fn render_json(o: &Outcome) -> String {
    let mut m = Map::new();
    m.insert("command".into(), json!(o.command));
    m.insert("status".into(), json!(if o.passed() { "ok" } else { "failed" }));
    m.insert("checks".into(), Value::Array(o.checks.iter().map(report_json).collect()));
    let mut outputs = Map::new();
    for (name, v) in &o.outputs {
        outputs.insert(name.clone(), value_json(v));
    }
    m.insert("outputs".into(), Value::Object(outputs));
    let mut s = serde_json::to_string_pretty(&Value::Object(m)).expect("serializable");
    s.push('\n');
    s
}
