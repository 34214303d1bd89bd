//! Minimal CSV emission: a `#` preamble, one header, numeric rows.
//!
//! Floats use Rust's shortest round-trip formatting in exponent form, so
//! identical inputs give byte-identical files.

use std::io::Write;
use std::path::Path;

use crate::error::{Error, Result};

#[derive(Debug, Default)]
pub struct CsvTable {
    preamble: Vec<String>,
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

/// A numeric cell; `None` leaves the column empty.
pub fn num(v: Option<f64>) -> String {
    v.map_or_else(String::new, |x| format!("{x:e}"))
}

impl CsvTable {
    pub fn new(header: &[&str]) -> Self {
        Self {
            header: header.iter().map(|s| s.to_string()).collect(),
            ..Default::default()
        }
    }

    pub fn comment(&mut self, line: impl Into<String>) {
        self.preamble.push(line.into());
    }

    pub fn row(&mut self, cells: Vec<String>) {
        debug_assert_eq!(cells.len(), self.header.len());
        self.rows.push(cells);
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for line in &self.preamble {
            s.push_str("# ");
            s.push_str(line);
            s.push('\n');
        }
        s.push_str(&self.header.join(","));
        s.push('\n');
        for r in &self.rows {
            s.push_str(&r.join(","));
            s.push('\n');
        }
        s
    }

    /// Writes to `path`, or to stdout when `path` is `None`.
    pub fn write(&self, path: Option<&Path>) -> Result<()> {
        let text = self.render();
        match path {
            Some(p) => std::fs::write(p, text).map_err(|source| Error::Io {
                path: p.display().to_string(),
                source,
            }),
            None => {
                let mut out = std::io::stdout().lock();
                out.write_all(text.as_bytes()).map_err(|source| Error::Io {
                    path: "<stdout>".into(),
                    source,
                })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_preamble_header_rows() {
        let mut t = CsvTable::new(&["a", "b"]);
        t.comment("k = v");
        t.row(vec![num(Some(0.1)), num(None)]);
        t.row(vec![num(Some(1e-30)), num(Some(2.0))]);
        assert_eq!(t.render(), "# k = v\na,b\n1e-1,\n1e-30,2e0\n");
    }

    #[test]
    fn shortest_round_trip() {
        for x in [0.1 + 0.2, 1.0 / 3.0, 6.02214076e23, 5e-324] {
            assert_eq!(num(Some(x)).parse::<f64>().unwrap(), x);
        }
    }
}
