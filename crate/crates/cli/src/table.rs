//! Column-ordered numeric tables with CSV and JSON encodings that round-trip
//! every f64 bit-for-bit (shortest scientific notation in CSV, native numbers
//! in JSON, NaN spelled out as the string "NaN" in both).

use crate::CliError;
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Text(String),
}

impl Cell {
    pub fn num(x: f64) -> Self {
        Cell::Num(x)
    }

    pub fn text(s: impl Into<String>) -> Self {
        Cell::Text(s.into())
    }

    fn to_csv(&self) -> String {
        match self {
            // {:e} is the shortest representation that parses back exactly.
            Cell::Num(x) => format!("{x:e}"),
            Cell::Text(s) => s.clone(),
        }
    }

    fn from_csv(s: &str) -> Cell {
        match s.parse::<f64>() {
            Ok(x) => Cell::Num(x),
            Err(_) => Cell::Text(s.to_string()),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Num(x) if x.is_nan() => json!("NaN"),
            Cell::Num(x) => json!(x),
            Cell::Text(s) => json!(s),
        }
    }

    fn from_json(v: &Value) -> Result<Cell, CliError> {
        match v {
            Value::Number(n) => Ok(Cell::Num(n.as_f64().unwrap())),
            Value::String(s) if s == "NaN" => Ok(Cell::Num(f64::NAN)),
            Value::String(s) => Ok(Cell::Text(s.clone())),
            other => Err(CliError::Config(format!("unexpected JSON cell {other}"))),
        }
    }

    /// Equality with NaN == NaN, for round-trip checks.
    pub fn same_bits(&self, other: &Cell) -> bool {
        match (self, other) {
            (Cell::Num(a), Cell::Num(b)) => a.to_bits() == b.to_bits(),
            (Cell::Text(a), Cell::Text(b)) => a == b,
            _ => false,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table { columns: columns.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row width mismatch");
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.iter().map(Cell::to_csv).collect::<Vec<_>>().join(","));
            out.push('\n');
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Table, CliError> {
        let mut lines = text.lines();
        let header =
            lines.next().ok_or_else(|| CliError::Config("empty CSV".into()))?;
        let columns: Vec<String> = header.split(',').map(str::to_string).collect();
        let mut rows = Vec::new();
        for line in lines.filter(|l| !l.is_empty()) {
            let row: Vec<Cell> = line.split(',').map(Cell::from_csv).collect();
            if row.len() != columns.len() {
                return Err(CliError::Config(format!("ragged CSV row: {line}")));
            }
            rows.push(row);
        }
        Ok(Table { columns, rows })
    }

    /// JSON object mapping each column name to its array of values, in column
    /// order.
    pub fn to_json(&self) -> String {
        let mut obj = Map::new();
        for (j, name) in self.columns.iter().enumerate() {
            let vals: Vec<Value> = self.rows.iter().map(|r| r[j].to_json()).collect();
            obj.insert(name.clone(), Value::Array(vals));
        }
        let mut s = serde_json::to_string_pretty(&Value::Object(obj)).unwrap();
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Table, CliError> {
        let v: Value = serde_json::from_str(text)
            .map_err(|e| CliError::Config(format!("bad JSON table: {e}")))?;
        let Value::Object(obj) = v else {
            return Err(CliError::Config("JSON table must be an object".into()));
        };
        let columns: Vec<String> = obj.keys().cloned().collect();
        let n = obj.values().next().map_or(0, |v| v.as_array().map_or(0, Vec::len));
        let mut rows = vec![Vec::with_capacity(columns.len()); n];
        for name in &columns {
            let arr = obj[name]
                .as_array()
                .ok_or_else(|| CliError::Config(format!("column {name} is not an array")))?;
            if arr.len() != n {
                return Err(CliError::Config(format!("column {name} has mismatched length")));
            }
            for (i, v) in arr.iter().enumerate() {
                rows[i].push(Cell::from_json(v)?);
            }
        }
        Ok(Table { columns, rows })
    }

    pub fn render(&self, format: &str) -> String {
        match format {
            "json" => self.to_json(),
            _ => self.to_csv(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Table {
        let mut t = Table::new(&["kind", "x", "y"]);
        t.push(vec![Cell::text("point"), Cell::num(0.1), Cell::num(1e-41)]);
        t.push(vec![Cell::text("point"), Cell::num(-3.0), Cell::num(f64::NAN)]);
        t.push(vec![
            Cell::text("minimum"),
            Cell::num(35.175297245229046),
            Cell::num(f64::MIN_POSITIVE),
        ]);
        t
    }

    fn assert_same(a: &Table, b: &Table) {
        assert_eq!(a.columns, b.columns);
        assert_eq!(a.rows.len(), b.rows.len());
        for (ra, rb) in a.rows.iter().zip(&b.rows) {
            for (ca, cb) in ra.iter().zip(rb) {
                assert!(ca.same_bits(cb), "{ca:?} != {cb:?}");
            }
        }
    }

    #[test]
    fn csv_round_trip_is_bit_exact() {
        let t = sample();
        assert_same(&t, &Table::from_csv(&t.to_csv()).unwrap());
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        let t = sample();
        assert_same(&t, &Table::from_json(&t.to_json()).unwrap());
    }

    #[test]
    fn csv_and_json_agree_bit_for_bit() {
        let t = sample();
        let via_csv = Table::from_csv(&t.to_csv()).unwrap();
        let via_json = Table::from_json(&t.to_json()).unwrap();
        assert_same(&via_csv, &via_json);
    }
}
