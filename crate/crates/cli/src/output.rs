use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{Map, Value};

/// One table cell. Floats are written with 17 significant digits in CSV
/// and in shortest round-trip form in JSON; both parse to the same double.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Float(f64),
    Int(u64),
    Bool(bool),
    Text(String),
    Empty,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Float(v) if v.is_finite() => format!("{v:.16e}"),
            Cell::Float(v) => v.to_string(),
            Cell::Int(v) => v.to_string(),
            Cell::Bool(v) => v.to_string(),
            Cell::Text(s) if s.contains([',', '"', '\n']) => format!("\"{}\"", s.replace('"', "\"\"")),
            Cell::Text(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Float(v) => serde_json::Number::from_f64(*v).map_or(Value::Null, Value::Number),
            Cell::Int(v) => Value::from(*v),
            Cell::Bool(v) => Value::Bool(*v),
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Empty => Value::Null,
        }
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as u64)
    }
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::Int(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

impl From<Option<f64>> for Cell {
    fn from(v: Option<f64>) -> Self {
        v.map_or(Cell::Empty, Cell::Float)
    }
}

#[derive(Debug, Clone)]
pub struct Record {
    pub command: &'static str,
    pub parameters: Vec<(&'static str, Cell)>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    pub metadata: Vec<(&'static str, Cell)>,
}

#[derive(Serialize)]
struct JsonRecord {
    command: &'static str,
    parameters: Map<String, Value>,
    rows: Vec<Map<String, Value>>,
    metadata: Map<String, Value>,
}

fn to_map(pairs: &[(&'static str, Cell)]) -> Map<String, Value> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.json())).collect()
}

impl Record {
    pub fn new(command: &'static str, columns: Vec<&'static str>) -> Self {
        Record { command, parameters: Vec::new(), columns, rows: Vec::new(), metadata: Vec::new() }
    }

    pub fn param(&mut self, key: &'static str, value: impl Into<Cell>) {
        self.parameters.push((key, value.into()));
    }

    pub fn meta(&mut self, key: &'static str, value: impl Into<Cell>) {
        self.metadata.push((key, value.into()));
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    /// Parameters and metadata as `# key = value` lines, then a header row
    /// and one line per row.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# command = {}", self.command);
        for (k, v) in self.parameters.iter().chain(&self.metadata) {
            let _ = writeln!(out, "# {k} = {}", v.csv());
        }
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::csv).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let rec = JsonRecord {
            command: self.command,
            parameters: to_map(&self.parameters),
            rows: self
                .rows
                .iter()
                .map(|row| self.columns.iter().zip(row).map(|(c, v)| (c.to_string(), v.json())).collect())
                .collect(),
            metadata: to_map(&self.metadata),
        };
        let mut s = serde_json::to_string_pretty(&rec).expect("record serializes");
        s.push('\n');
        s
    }
}
