//! The JSON document every subcommand prints, and its `--human` rendering.

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub version: String,
    pub inputs: Value,
    pub results: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diffs: Option<Vec<Value>>,
}

impl Report {
    pub fn new(command: &str, inputs: Value, results: Value) -> Self {
        Report {
            command: command.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            inputs,
            results,
            diffs: None,
        }
    }

    pub fn with_diffs(mut self, diffs: Vec<Value>) -> Self {
        self.diffs = (!diffs.is_empty()).then_some(diffs);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_human(&self) -> String {
        let mut out = format!("{} (version {})\n", self.command, self.version);
        section(&mut out, "inputs", &self.inputs);
        section(&mut out, "results", &self.results);
        if let Some(diffs) = &self.diffs {
            for (i, d) in diffs.iter().enumerate() {
                section(&mut out, &format!("diff {}", i + 1), d);
            }
        }
        out
    }
}

fn section(out: &mut String, name: &str, v: &Value) {
    out.push_str(&format!("\n== {name} ==\n"));
    render(out, "", v);
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Object(m) if m.len() == 2 && m.contains_key("num") && m.contains_key("den") => {
            format!("{}/{}", scalar(&m["num"]), scalar(&m["den"]))
        }
        other => other.to_string(),
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(a) => a.iter().all(|x| !x.is_array() && !x.is_object()),
        Value::Object(m) => m.len() == 2 && m.contains_key("num") && m.contains_key("den"),
        _ => true,
    }
}

/// An object whose values all fit in a table cell.
fn flat_object(v: &Value) -> bool {
    v.as_object().is_some_and(|m| m.values().all(is_flat))
}

fn flat_text(v: &Value) -> String {
    match v {
        Value::Array(a) => a.iter().map(scalar).collect::<Vec<_>>().join(", "),
        other => scalar(other),
    }
}

/// Objects become `key: value` lines, arrays of objects become tables and
/// anything deeper is indented under its key.
fn render(out: &mut String, indent: &str, v: &Value) {
    match v {
        Value::Object(m) if !is_flat(v) => {
            let width = m.keys().map(|k| k.chars().count()).max().unwrap_or(0);
            for (k, x) in m {
                if is_flat(x) {
                    out.push_str(&format!("{indent}{k:width$}  {}\n", flat_text(x)));
                } else {
                    out.push_str(&format!("{indent}{k}:\n"));
                    render(out, &format!("{indent}  "), x);
                }
            }
        }
        Value::Array(rows) if !rows.is_empty() && rows.iter().all(flat_object) => table(out, indent, rows),
        Value::Array(rows) if !is_flat(v) => {
            for (i, x) in rows.iter().enumerate() {
                out.push_str(&format!("{indent}[{}]\n", i + 1));
                render(out, &format!("{indent}  "), x);
            }
        }
        other => out.push_str(&format!("{indent}{}\n", flat_text(other))),
    }
}

fn table(out: &mut String, indent: &str, rows: &[Value]) {
    let mut columns: Vec<String> = Vec::new();
    for r in rows {
        for k in r.as_object().expect("rows are objects").keys() {
            if !columns.contains(k) {
                columns.push(k.clone());
            }
        }
    }
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            columns
                .iter()
                .map(|c| r.get(c).map(flat_text).unwrap_or_default())
                .collect()
        })
        .collect();
    let widths: Vec<usize> = columns
        .iter()
        .enumerate()
        .map(|(i, c)| {
            cells
                .iter()
                .map(|row| row[i].chars().count())
                .chain([c.chars().count()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |items: &[String]| {
        let padded: Vec<String> = items.iter().zip(&widths).map(|(s, w)| format!("{s:w$}")).collect();
        format!("{indent}{}\n", padded.join("  ").trim_end())
    };
    out.push_str(&line(&columns));
    out.push_str(&line(&widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>()));
    for row in &cells {
        out.push_str(&line(row));
    }
}
