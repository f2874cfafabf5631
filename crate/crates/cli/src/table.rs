use serde_json::{json, Map, Value};

use crate::args::Format;

/// One output field.
#[derive(Debug, Clone)]
pub enum Cell {
    F(f64),
    U(u64),
    S(String),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            // 9 significant digits; -0 prints as 0
            Cell::F(v) => format!("{:.8e}", if *v == 0.0 { 0.0 } else { *v }),
            Cell::U(v) => v.to_string(),
            Cell::S(s) => s.clone(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::F(v) if v.is_finite() => json!(v),
            Cell::F(v) => Value::String(v.to_string()),
            Cell::U(v) => json!(v),
            Cell::S(s) => json!(s),
        }
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::F(v)
    }
}

impl From<u32> for Cell {
    fn from(v: u32) -> Self {
        Cell::U(v as u64)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::S(v.to_string())
    }
}

/// A fixed-header table with metadata.
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
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

    pub fn render(&self, format: Format, command: &str, args: &[String]) -> String {
        let version = env!("CARGO_PKG_VERSION");
        match format {
            Format::Csv => {
                let mut out = format!(
                    "# wedge {version}\n# command: {command}\n# args: {}\n",
                    args.join(" ")
                );
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.header).expect("in-memory write");
                for row in &self.rows {
                    w.write_record(row.iter().map(Cell::csv))
                        .expect("in-memory write");
                }
                let body = w.into_inner().expect("in-memory flush");
                out.push_str(&String::from_utf8(body).expect("cells are UTF-8"));
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
                            .map(|(h, c)| (h.to_string(), c.json()))
                            .collect();
                        Value::Object(obj)
                    })
                    .collect();
                let doc = json!({
                    "version": version,
                    "command": command,
                    "args": args,
                    "columns": self.header,
                    "rows": rows,
                });
                let mut s = serde_json::to_string_pretty(&doc).expect("serialisable");
                s.push('\n');
                s
            }
        }
    }
}
