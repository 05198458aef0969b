//! CSV tables with a `#` comment preamble.

use std::io::Write;

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: &'static [&'static str],
    pub comments: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(columns: &'static [&'static str]) -> Self {
        Self {
            columns,
            comments: Vec::new(),
            rows: Vec::new(),
        }
    }

    pub fn row(&self) -> Row {
        Row {
            columns: self.columns,
            cells: vec![String::new(); self.columns.len()],
        }
    }

    pub fn write<W: Write>(&self, mut out: W) -> Result<(), CliError> {
        for c in &self.comments {
            writeln!(out, "# {c}")?;
        }
        let mut w = csv::Writer::from_writer(out);
        w.write_record(self.columns)?;
        for r in &self.rows {
            w.write_record(r)?;
        }
        w.flush()?;
        Ok(())
    }
}

/// One output row; columns that are never set stay empty.
#[derive(Debug, Clone)]
pub struct Row {
    columns: &'static [&'static str],
    cells: Vec<String>,
}

impl Row {
    pub fn set(&mut self, column: &str, value: impl ToString) -> &mut Self {
        let i = self
            .columns
            .iter()
            .position(|c| *c == column)
            .unwrap_or_else(|| panic!("unknown column {column}"));
        self.cells[i] = value.to_string();
        self
    }

    pub fn finish(self) -> Vec<String> {
        self.cells
    }
}
