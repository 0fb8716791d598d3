//! Text, CSV and JSON rendering. JSON goes through `serde_json::Value`, so keys
//! are sorted and re-serializing parsed output reproduces it byte for byte.
//! Integers from the number domain are emitted as decimal strings.

use std::fmt::Write as _;

use serde_json::{json, Value};

use laplace2sq_core::constructor::{Branch, Recipe};
use laplace2sq_core::spectrum::SurveyReport;
use laplace2sq_core::sweep::TableRow;
use laplace2sq_core::{MultiplicityReport, RepSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Text,
    Json,
    Csv,
}

fn to_json(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("Value always serializes");
    s.push('\n');
    s
}

pub fn reps(set: &RepSet, kind: Kind) -> String {
    let mut s = String::new();
    match kind {
        Kind::Text => {
            for r in set {
                writeln!(s, "{} {}", r.a(), r.b()).unwrap();
            }
        }
        Kind::Csv => {
            s.push_str("a,b,kind\n");
            for r in set {
                writeln!(s, "{},{},{}", r.a(), r.b(), r.kind()).unwrap();
            }
        }
        Kind::Json => {
            let reps: Vec<Value> = set
                .iter()
                .map(|r| json!({ "a": r.a().to_string(), "b": r.b().to_string(), "kind": r.kind().as_str() }))
                .collect();
            s = to_json(&json!({ "n": set.n().to_string(), "count": set.len(), "reps": reps }));
        }
    }
    s
}

pub fn multiplicity(report: &MultiplicityReport, as_json: bool) -> String {
    if !as_json {
        return format!("{}\n", report.multiplicity);
    }
    let witnesses: Vec<Vec<String>> =
        report.witnesses.iter().map(|w| w.iter().map(|x| x.to_string()).collect()).collect();
    to_json(&json!({
        "lambda": report.lambda.to_string(),
        "dim": report.dim,
        "multiplicity": report.multiplicity,
        "witnesses": witnesses,
        "witnesses_omitted": report.witnesses_omitted,
    }))
}

pub fn split(p: u64, a: u64, b: u64, as_json: bool) -> String {
    if as_json {
        to_json(&json!({ "p": p.to_string(), "a": a.to_string(), "b": b.to_string() }))
    } else {
        format!("{a} {b}\n")
    }
}

fn recipe_value(r: &Recipe) -> Value {
    let (p1, p2, p, k) = match r.branch {
        Branch::Even { p1, p2, k } => (Some(p1), p2, None, k),
        Branch::Odd { p, k } => (None, None, Some(p), k),
    };
    let num = |x: Option<u64>| x.map(|v| Value::String(v.to_string())).unwrap_or(Value::Null);
    json!({
        "target": r.target,
        "branch": r.branch.name(),
        "p1": num(p1),
        "p2": num(p2),
        "p": num(p),
        "k": k,
        "inert_factor": num(r.inert_factor),
        "value": r.value.to_string(),
        "factorization": r.factorization.to_string(),
        "verified": true,
    })
}

fn recipe_line(r: &Recipe) -> String {
    match r.inert_factor {
        Some(q) => format!("{} {} * {q}^2\n", r.value, r.branch),
        None => format!("{} {}\n", r.value, r.branch),
    }
}

pub fn recipe(r: &Recipe, as_json: bool) -> String {
    if as_json {
        to_json(&recipe_value(r))
    } else {
        recipe_line(r)
    }
}

pub fn recipes(rs: &[Recipe], as_json: bool) -> String {
    if as_json {
        to_json(&Value::Array(rs.iter().map(recipe_value).collect()))
    } else {
        rs.iter().map(recipe_line).collect()
    }
}

pub fn smallest(n: u64, bound: u64, found: Option<u64>, as_json: bool) -> String {
    if as_json {
        let lambda = found.map(|v| Value::String(v.to_string())).unwrap_or(Value::Null);
        to_json(&json!({ "multiplicity": n, "bound": bound.to_string(), "lambda": lambda }))
    } else {
        match found {
            Some(v) => format!("{v}\n"),
            None => "none\n".to_string(),
        }
    }
}

pub const TABLE_HEADER: &str = "lambda,multiplicity,num_reps,has_diagonal,has_zero";

pub fn table(rows: &[TableRow], as_json: bool) -> String {
    if as_json {
        let rows: Vec<Value> = rows
            .iter()
            .map(|r| {
                json!({
                    "lambda": r.lambda.to_string(),
                    "multiplicity": r.multiplicity,
                    "num_reps": r.num_reps,
                    "has_diagonal": r.has_diagonal,
                    "has_zero": r.has_zero,
                })
            })
            .collect();
        return to_json(&Value::Array(rows));
    }
    let mut s = String::with_capacity(rows.len() * 24);
    s.push_str(TABLE_HEADER);
    s.push('\n');
    for r in rows {
        writeln!(s, "{},{},{},{},{}", r.lambda, r.multiplicity, r.num_reps, r.has_diagonal, r.has_zero).unwrap();
    }
    s
}

pub fn survey(report: &SurveyReport, as_json: bool) -> String {
    if as_json {
        let counterexamples: Vec<Value> = report
            .counterexamples
            .iter()
            .map(|c| json!({ "lambda": c.lambda.to_string(), "multiplicity": c.multiplicity }))
            .collect();
        return to_json(&json!({
            "dim": report.dim,
            "bound": report.bound.to_string(),
            "observed": report.observed,
            "counterexamples": counterexamples,
        }));
    }
    let observed: Vec<String> = report.observed.iter().map(u64::to_string).collect();
    let mut s = format!(
        "# dim={} bound={} observed={} counterexamples={}\n",
        report.dim,
        report.bound,
        observed.join(","),
        report.counterexamples.len()
    );
    for c in &report.counterexamples {
        writeln!(s, "{} {}", c.lambda, c.multiplicity).unwrap();
    }
    s
}
