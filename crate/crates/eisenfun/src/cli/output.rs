//! Tabular output. Cells are optional numbers: a missing value (pole or
//! any per-point evaluation failure) becomes an empty CSV cell or a JSON
//! null, never a NaN literal.

use std::io::{self, Write};

use serde_json::{Map, Number, Value};

/// Output encoding for tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

/// Column-labelled numeric table with optional cells.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    columns: Vec<String>,
    rows: Vec<Vec<Option<f64>>>,
}

impl Table {
    pub fn new(columns: Vec<String>) -> Self {
        Self {
            columns,
            rows: Vec::new(),
        }
    }

    /// Appends a row; panics if the width disagrees with the header.
    pub fn push_row(&mut self, row: Vec<Option<f64>>) {
        assert_eq!(row.len(), self.columns.len(), "row width mismatch");
        self.rows.push(row);
    }

    pub fn columns(&self) -> &[String] {
        &self.columns
    }

    pub fn rows(&self) -> &[Vec<Option<f64>>] {
        &self.rows
    }

    /// Cell by row index and column name.
    pub fn cell(&self, row: usize, column: &str) -> Option<f64> {
        let idx = self.columns.iter().position(|c| c == column)?;
        self.rows.get(row)?.get(idx).copied().flatten()
    }

    /// Comma-separated output: header row, '.' decimal point, LF endings,
    /// empty cells for missing values. Numbers use the shortest
    /// representation that parses back to the same bits.
    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "{}", self.columns.join(","))?;
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(|cell| render_cell(*cell)).collect();
            writeln!(w, "{}", line.join(","))?;
        }
        Ok(())
    }

    /// The same table as a JSON array of records, one object per row with
    /// the column names as keys and null for missing cells.
    pub fn write_json<W: Write>(&self, mut w: W) -> io::Result<()> {
        let records: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let mut record = Map::new();
                for (name, cell) in self.columns.iter().zip(row) {
                    let value = cell
                        .filter(|v| v.is_finite())
                        .and_then(Number::from_f64)
                        .map_or(Value::Null, Value::Number);
                    record.insert(name.clone(), value);
                }
                Value::Object(record)
            })
            .collect();
        serde_json::to_writer_pretty(&mut w, &Value::Array(records))?;
        writeln!(w)
    }

    pub fn write<W: Write>(&self, w: W, format: Format) -> io::Result<()> {
        match format {
            Format::Csv => self.write_csv(w),
            Format::Json => self.write_json(w),
        }
    }
}

fn render_cell(cell: Option<f64>) -> String {
    match cell {
        Some(v) if v.is_finite() => format!("{v}"),
        _ => String::new(),
    }
}
