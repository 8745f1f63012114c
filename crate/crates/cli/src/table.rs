use std::fmt::Write as _;

use clap::ValueEnum;
use harmonic_like::Rational;
use serde_json::{Map, Value};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

pub enum Cell {
    Int(u64),
    Rat(Rational),
    Text(String),
    Bool(bool),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Rat(v) => v.to_string(),
            Cell::Text(v) => v.clone(),
            Cell::Bool(v) => v.to_string(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(v) => Value::from(*v),
            Cell::Rat(v) => Value::from(v.to_string()),
            Cell::Text(v) => Value::from(v.clone()),
            Cell::Bool(v) => Value::from(*v),
        }
    }
}

/// Rows sharing one header, rendered as CSV or as a JSON array of objects.
pub struct Table {
    header: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(header: Vec<&'static str>) -> Self {
        Table {
            header,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => {
                let mut out = self.header.join(",");
                out.push('\n');
                for row in &self.rows {
                    let cells: Vec<String> = row.iter().map(Cell::csv).collect();
                    let _ = writeln!(out, "{}", cells.join(","));
                }
                out
            }
            Format::Json => {
                let rows: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|row| {
                        let obj: Map<String, Value> = self
                            .header
                            .iter()
                            .zip(row)
                            .map(|(k, c)| (k.to_string(), c.json()))
                            .collect();
                        Value::Object(obj)
                    })
                    .collect();
                let mut out = serde_json::to_string_pretty(&rows).expect("plain JSON values");
                out.push('\n');
                out
            }
        }
    }
}

/// `n,value[,decimal]` table for a list of terms starting at index 0.
pub fn value_table(values: &[Rational], decimal: Option<usize>) -> Table {
    let mut header = vec!["n", "value"];
    if decimal.is_some() {
        header.push("decimal");
    }
    let mut table = Table::new(header);
    for (n, v) in values.iter().enumerate() {
        let mut row = vec![Cell::Int(n as u64), Cell::Rat(v.clone())];
        if let Some(digits) = decimal {
            row.push(Cell::Text(v.to_decimal(digits)));
        }
        table.push(row);
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_and_json_carry_the_same_strings() {
        let t = value_table(&[Rational::zero(), Rational::frac(-35, 12)], Some(3));
        assert_eq!(
            t.render(Format::Csv),
            "n,value,decimal\n0,0,0.000\n1,-35/12,-2.917\n"
        );
        let json: Value = serde_json::from_str(&t.render(Format::Json)).unwrap();
        assert_eq!(json[1]["value"], "-35/12");
        assert_eq!(json[1]["n"], 1);
        assert_eq!(json[1]["decimal"], "-2.917");
    }
}
