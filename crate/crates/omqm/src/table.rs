//! Tabular reports and their CSV and JSON renderings.
//!
//! Rendering is byte-for-byte deterministic: reals use Rust's shortest
//! round-trip formatting, negative zero prints as zero, and JSON objects keep
//! a fixed key order.

use std::fmt::Write as _;

use num_complex::Complex64;
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Real(f64),
    Complex(Complex64),
    Bool(bool),
    Text(String),
    /// A value that does not exist for this row, e.g. a division by zero.
    Undefined,
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<i64> for Cell {
    fn from(v: i64) -> Self {
        Cell::Int(v)
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Real(v)
    }
}

impl From<Complex64> for Cell {
    fn from(v: Complex64) -> Self {
        Cell::Complex(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(v: Option<T>) -> Self {
        v.map_or(Cell::Undefined, Into::into)
    }
}

/// A column and the formula it evaluates.
#[derive(Debug, Clone, PartialEq)]
pub struct Column {
    pub name: &'static str,
    pub formula: &'static str,
}

pub const fn col(name: &'static str, formula: &'static str) -> Column {
    Column { name, formula }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub columns: Vec<Column>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: Vec<Column>) -> Self {
        Table {
            columns,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row width mismatch");
        self.rows.push(row);
    }
}

/// A complete command result: the table plus free-form notes and the
/// provenance echoed into JSON.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Report {
    pub command: String,
    pub config: Vec<(&'static str, String)>,
    pub table: Table,
    pub notes: Vec<String>,
    pub flags: Vec<(&'static str, String)>,
}

fn real(x: f64) -> String {
    if x == 0.0 {
        "0".to_string()
    } else if x.is_nan() {
        "NaN".to_string()
    } else if x.is_infinite() {
        if x > 0.0 { "inf" } else { "-inf" }.to_string()
    } else {
        format!("{x}")
    }
}

/// `re+imi` / `re-imi`.
pub fn complex(z: Complex64) -> String {
    let im = if z.im == 0.0 { 0.0 } else { z.im };
    let sign = if im.is_sign_negative() { '-' } else { '+' };
    format!("{}{}{}i", real(z.re), sign, real(im.abs()))
}

fn csv_cell(cell: &Cell) -> String {
    match cell {
        Cell::Int(v) => v.to_string(),
        Cell::Real(v) => real(*v),
        Cell::Complex(z) => complex(*z),
        Cell::Bool(b) => b.to_string(),
        Cell::Text(s) => {
            if s.contains([',', '"', '\n']) {
                format!("\"{}\"", s.replace('"', "\"\""))
            } else {
                s.clone()
            }
        }
        Cell::Undefined => "undefined".to_string(),
    }
}

fn json_real(x: f64) -> Value {
    if x.is_finite() {
        json!(if x == 0.0 { 0.0 } else { x })
    } else {
        Value::Null
    }
}

fn json_cell(cell: &Cell) -> Value {
    match cell {
        Cell::Int(v) => json!(v),
        Cell::Real(v) => json_real(*v),
        Cell::Complex(z) => json!({ "re": json_real(z.re), "im": json_real(z.im) }),
        Cell::Bool(b) => json!(b),
        Cell::Text(s) => json!(s),
        Cell::Undefined => Value::Null,
    }
}

impl Report {
    /// Header row `name[formula]`, then one line per row. Notes follow as
    /// `#` comment lines so the table itself stays machine-readable.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let header: Vec<String> = self
            .table
            .columns
            .iter()
            .map(|c| csv_cell(&Cell::Text(format!("{}[{}]", c.name, c.formula))))
            .collect();
        out.push_str(&header.join(","));
        out.push('\n');
        for row in &self.table.rows {
            let cells: Vec<String> = row.iter().map(csv_cell).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        for note in &self.notes {
            let _ = writeln!(out, "# {note}");
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut config = Map::new();
        for (k, v) in &self.config {
            config.insert((*k).to_string(), json!(v));
        }
        let rows: Vec<Value> = self
            .table
            .rows
            .iter()
            .map(|row| {
                let mut obj = Map::new();
                for (c, cell) in self.table.columns.iter().zip(row) {
                    obj.insert(c.name.to_string(), json_cell(cell));
                }
                Value::Object(obj)
            })
            .collect();
        let mut columns = Map::new();
        for c in &self.table.columns {
            columns.insert(c.name.to_string(), json!(c.formula));
        }
        let mut flags = Map::new();
        for (k, v) in &self.flags {
            flags.insert((*k).to_string(), json!(v));
        }
        let doc = json!({
            "config": config,
            "rows": rows,
            "provenance": {
                "command": self.command,
                "columns": columns,
                "flags": flags,
                "notes": self.notes,
            },
        });
        let mut s = serde_json::to_string_pretty(&doc).expect("JSON values always serialize");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_rendering() {
        assert_eq!(complex(Complex64::new(-0.5, 0.5)), "-0.5+0.5i");
        assert_eq!(complex(Complex64::new(1.0, -2.0)), "1-2i");
        assert_eq!(complex(Complex64::new(-0.0, -0.0)), "0+0i");
    }

    fn sample() -> Report {
        let mut table = Table::new(vec![col("N", "n"), col("m", "s/N"), col("ok", "flag")]);
        table.push(vec![2u64.into(), Complex64::new(-0.5, 0.5).into(), true.into()]);
        table.push(vec![6u64.into(), Cell::Undefined, false.into()]);
        Report {
            command: "demo".into(),
            config: vec![("D", "3".into())],
            table,
            notes: vec!["a note".into()],
            flags: vec![("mode", "derived".into())],
        }
    }

    #[test]
    fn csv_layout() {
        assert_eq!(
            sample().to_csv(),
            "N[n],m[s/N],ok[flag]\n2,-0.5+0.5i,true\n6,undefined,false\n# a note\n"
        );
    }

    #[test]
    fn json_layout() {
        let v: Value = serde_json::from_str(&sample().to_json()).unwrap();
        assert_eq!(v["config"]["D"], "3");
        assert_eq!(v["rows"][0]["m"]["re"], -0.5);
        assert_eq!(v["rows"][1]["m"], Value::Null);
        assert_eq!(v["provenance"]["columns"]["m"], "s/N");
        assert_eq!(v["provenance"]["flags"]["mode"], "derived");
    }

    #[test]
    fn text_cells_are_quoted() {
        assert_eq!(csv_cell(&Cell::Text("a,b".into())), "\"a,b\"");
    }
}
