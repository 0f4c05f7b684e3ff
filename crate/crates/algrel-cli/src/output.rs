//! Output rendering: a document model of labeled tables rendered as an
//! aligned text table, CSV, or deterministic JSON.

use std::fmt::Write as _;

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Clone)]
pub enum Value {
    Int(i64),
    Big(String),
    Float(f64),
    Text(String),
    Bool(bool),
    /// Exponent vector, rendered as space-separated integers in text
    /// formats and as an array in JSON.
    Vector(Vec<u32>),
}

pub struct Table {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

/// One report: optional scalar header fields plus one or more tables.
pub struct Report {
    pub scalars: Vec<(String, Value)>,
    pub tables: Vec<Table>,
}

impl Report {
    pub fn new() -> Self {
        Report { scalars: Vec::new(), tables: Vec::new() }
    }

    pub fn scalar(&mut self, name: &str, value: Value) -> &mut Self {
        self.scalars.push((name.to_string(), value));
        self
    }

    pub fn table(&mut self, table: Table) -> &mut Self {
        self.tables.push(table);
        self
    }

    pub fn render(&self, format: Format, precision: usize) -> String {
        match format {
            Format::Table => self.render_table(precision),
            Format::Csv => self.render_csv(precision),
            Format::Json => self.render_json(precision),
        }
    }

    fn render_table(&self, precision: usize) -> String {
        let mut out = String::new();
        for (name, value) in &self.scalars {
            let _ = writeln!(out, "{name}: {}", text_value(value, precision));
        }
        for table in &self.tables {
            if !out.is_empty() {
                out.push('\n');
            }
            let _ = writeln!(out, "{}", table.name);
            let mut cells: Vec<Vec<String>> = vec![table.columns.clone()];
            for row in &table.rows {
                cells.push(row.iter().map(|v| text_value(v, precision)).collect());
            }
            let ncols = table.columns.len();
            let widths: Vec<usize> = (0..ncols)
                .map(|c| cells.iter().map(|r| r[c].len()).max().unwrap_or(0))
                .collect();
            for row in &cells {
                let line: Vec<String> = row
                    .iter()
                    .zip(&widths)
                    .map(|(cell, w)| format!("{cell:<w$}"))
                    .collect();
                let _ = writeln!(out, "  {}", line.join("  ").trim_end());
            }
        }
        out
    }

    fn render_csv(&self, precision: usize) -> String {
        let mut out = String::new();
        for (name, value) in &self.scalars {
            let _ = writeln!(out, "{name},{}", csv_cell(&text_value(value, precision)));
        }
        for table in &self.tables {
            let _ = writeln!(out, "{}", table.columns.join(","));
            for row in &table.rows {
                let line: Vec<String> = row
                    .iter()
                    .map(|v| csv_cell(&text_value(v, precision)))
                    .collect();
                let _ = writeln!(out, "{}", line.join(","));
            }
        }
        out
    }

    fn render_json(&self, precision: usize) -> String {
        let mut root = serde_json::Map::new();
        for (name, value) in &self.scalars {
            root.insert(name.clone(), json_value(value, precision));
        }
        for table in &self.tables {
            let rows: Vec<serde_json::Value> = table
                .rows
                .iter()
                .map(|row| {
                    let mut obj = serde_json::Map::new();
                    for (col, v) in table.columns.iter().zip(row) {
                        obj.insert(col.clone(), json_value(v, precision));
                    }
                    serde_json::Value::Object(obj)
                })
                .collect();
            root.insert(table.name.clone(), serde_json::Value::Array(rows));
        }
        let mut text = serde_json::to_string_pretty(&serde_json::Value::Object(root))
            .expect("report serialization cannot fail");
        text.push('\n');
        text
    }
}

/// Formats with `precision` significant digits, trimming trailing zeros.
pub fn significant(x: f64, precision: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let digits = precision.max(1) as i32;
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (digits - 1 - magnitude).max(0) as usize;
    let mut s = format!("{x:.decimals$}");
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    s
}

fn text_value(value: &Value, precision: usize) -> String {
    match value {
        Value::Int(v) => v.to_string(),
        Value::Big(v) => v.clone(),
        Value::Float(v) => significant(*v, precision),
        Value::Text(v) => v.clone(),
        Value::Bool(v) => v.to_string(),
        Value::Vector(v) => v
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(" "),
    }
}

fn csv_cell(text: &str) -> String {
    if text.contains(',') || text.contains('"') || text.contains('\n') {
        format!("\"{}\"", text.replace('"', "\"\""))
    } else {
        text.to_string()
    }
}

fn json_value(value: &Value, precision: usize) -> serde_json::Value {
    match value {
        Value::Int(v) => serde_json::Value::from(*v),
        Value::Big(v) => match v.parse::<u64>() {
            Ok(n) => serde_json::Value::from(n),
            Err(_) => serde_json::Value::from(v.clone()),
        },
        Value::Float(v) => {
            // round to the displayed precision so JSON output is stable
            let text = significant(*v, precision);
            serde_json::Value::from(text.parse::<f64>().unwrap_or(*v))
        }
        Value::Text(v) => serde_json::Value::from(v.clone()),
        Value::Bool(v) => serde_json::Value::from(*v),
        Value::Vector(v) => serde_json::Value::from(v.clone()),
    }
}
