use std::io::Write;

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::args::{Format, OutputArgs};
use crate::error::{CliError, Exit};

pub type Row = Map<String, Value>;

/// Significant digits kept when serializing reals.
pub const SIGNIFICANT_DIGITS: usize = 12;
const HUMAN_DIGITS: usize = 8;

pub struct Report {
    pub command: String,
    pub tolerance: f64,
    pub rows: Vec<Row>,
    pub summary: Row,
    pub exit: Exit,
}

impl Report {
    pub fn new(command: impl Into<String>, tolerance: f64) -> Self {
        Report {
            command: command.into(),
            tolerance,
            rows: Vec::new(),
            summary: Row::new(),
            exit: Exit::Ok,
        }
    }

    pub fn raise(&mut self, exit: Exit) {
        self.exit = self.exit.max(exit);
    }
}

/// Serializes a struct into a row.
pub fn to_row<T: Serialize>(value: &T) -> Row {
    match serde_json::to_value(value) {
        Ok(Value::Object(m)) => m,
        Ok(other) => {
            let mut m = Row::new();
            m.insert("value".into(), other);
            m
        }
        Err(e) => {
            let mut m = Row::new();
            m.insert("error".into(), Value::String(e.to_string()));
            m
        }
    }
}

pub fn round_sig(x: f64, digits: usize) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return if x == 0.0 { 0.0 } else { x };
    }
    let r: f64 = format!("{:.*e}", digits - 1, x).parse().unwrap_or(x);
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Rounded text form: plain decimals in `[1e-4, 1e12)`, exponent form outside.
pub fn fmt_num(x: f64, digits: usize) -> String {
    let r = round_sig(x, digits);
    if r == 0.0 || !r.is_finite() || (1e-4..1e12).contains(&r.abs()) {
        r.to_string()
    } else {
        format!("{r:e}")
    }
}

fn round_value(v: &mut Value, digits: usize) {
    match v {
        Value::Number(n) if n.is_f64() => {
            if let Some(x) = n.as_f64() {
                *v = json!(round_sig(x, digits));
            }
        }
        Value::Array(items) => items.iter_mut().for_each(|x| round_value(x, digits)),
        Value::Object(m) => m.values_mut().for_each(|x| round_value(x, digits)),
        _ => {}
    }
}

fn columns(rows: &[Row]) -> Vec<String> {
    let mut cols: Vec<String> = Vec::new();
    for row in rows {
        for key in row.keys() {
            if !cols.iter().any(|c| c == key) {
                cols.push(key.clone());
            }
        }
    }
    cols
}

fn scalar_text(v: &Value, digits: usize) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Number(n) if n.is_f64() => {
            n.as_f64().map(|x| fmt_num(x, digits)).unwrap_or_default()
        }
        Value::Number(n) => n.to_string(),
        Value::Bool(b) => b.to_string(),
        Value::Array(items) => items
            .iter()
            .map(|x| scalar_text(x, digits))
            .collect::<Vec<_>>()
            .join(";"),
        Value::Object(_) => v.to_string(),
    }
}

fn render_json(r: &Report) -> Result<String, CliError> {
    let mut doc = json!({
        "meta": {
            "version": env!("CARGO_PKG_VERSION"),
            "command": r.command,
            "tolerance": r.tolerance,
        },
        "rows": r.rows,
        "summary": r.summary,
    });
    round_value(&mut doc, SIGNIFICANT_DIGITS);
    let mut s = serde_json::to_string_pretty(&doc).map_err(|e| CliError::Output(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn render_csv(r: &Report) -> Result<String, CliError> {
    let cols = columns(&r.rows);
    let mut w = csv::Writer::from_writer(Vec::new());
    if !cols.is_empty() {
        w.write_record(&cols)
            .map_err(|e| CliError::Output(e.to_string()))?;
    }
    for row in &r.rows {
        let cells = cols.iter().map(|c| {
            row.get(c)
                .map(|v| scalar_text(v, SIGNIFICANT_DIGITS))
                .unwrap_or_default()
        });
        w.write_record(cells)
            .map_err(|e| CliError::Output(e.to_string()))?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::Output(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Output(e.to_string()))
}

fn render_human(r: &Report) -> String {
    let cols = columns(&r.rows);
    let cells: Vec<Vec<String>> = r
        .rows
        .iter()
        .map(|row| {
            cols.iter()
                .map(|c| {
                    row.get(c)
                        .map(|v| scalar_text(v, HUMAN_DIGITS))
                        .unwrap_or_default()
                })
                .collect()
        })
        .collect();
    let widths: Vec<usize> = cols
        .iter()
        .enumerate()
        .map(|(j, c)| {
            cells
                .iter()
                .map(|r| r[j].chars().count())
                .chain([c.len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |items: &[String]| {
        let mut s = items
            .iter()
            .zip(&widths)
            .map(|(x, w)| format!("{x:<w$}"))
            .collect::<Vec<_>>()
            .join("  ");
        s.truncate(s.trim_end().len());
        s.push('\n');
        s
    };
    let mut out = String::new();
    if !cols.is_empty() {
        out.push_str(&line(&cols));
        for row in &cells {
            out.push_str(&line(row));
        }
    } else {
        out.push_str("(no rows)\n");
    }
    if !r.summary.is_empty() {
        out.push('\n');
        for (k, v) in &r.summary {
            out.push_str(&format!("{k}: {}\n", scalar_text(v, HUMAN_DIGITS)));
        }
    }
    out
}

pub fn render(r: &Report, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => render_json(r),
        Format::Csv => render_csv(r),
        Format::Human => Ok(render_human(r)),
    }
}

pub fn emit(r: &Report, opts: &OutputArgs) -> Result<(), CliError> {
    let text = render(r, opts.format)?;
    match &opts.out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|source| CliError::Io {
                    path: "stdout".into(),
                    source,
                })
        }
    }
}
