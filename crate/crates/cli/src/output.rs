//! Rendering of command results as pretty JSON or TSV.

use std::io::{self, Write};

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Tsv,
}

/// A command result: a JSON document plus its tabular projection.
#[derive(Debug, Clone)]
pub struct Output {
    pub json: Value,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    /// Exit with status 1 after printing when false.
    pub ok: bool,
}

impl Output {
    pub fn new(json: impl Serialize) -> Self {
        let json = serde_json::to_value(json).expect("command output serializes");
        Output { json, header: Vec::new(), rows: Vec::new(), ok: true }
    }

    pub fn table(mut self, header: &[&'static str], rows: Vec<Vec<String>>) -> Self {
        self.header = header.to_vec();
        self.rows = rows;
        self
    }

    pub fn ok(mut self, ok: bool) -> Self {
        self.ok = ok;
        self
    }

    pub fn write(&self, format: Format, out: &mut impl Write) -> io::Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, &self.json)?;
                writeln!(out)
            }
            Format::Tsv => {
                let mut w = csv::WriterBuilder::new()
                    .delimiter(b'\t')
                    .quote_style(csv::QuoteStyle::Never)
                    .from_writer(out);
                w.write_record(&self.header)?;
                for row in &self.rows {
                    w.write_record(row)?;
                }
                w.flush()
            }
        }
    }
}

pub fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

/// `x` rounded to 12 significant digits, with `-0` folded into `0`.
pub fn round12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return if x.is_finite() { 0.0 } else { x };
    }
    let r: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding_keeps_twelve_digits() {
        assert_eq!(round12(0.1 + 0.2), 0.3);
        assert_eq!(round12(-1.0000000000004), -1.0);
        assert_eq!(round12(123456.789012345), 123456.789012);
        assert_eq!(round12(-0.0).to_bits(), 0.0f64.to_bits());
    }

    #[test]
    fn tsv_has_header_and_tabs() {
        let out = Output::new(serde_json::json!({})).table(&["a", "b"], vec![vec!["1,2".into(), "x".into()]]);
        let mut buf = Vec::new();
        out.write(Format::Tsv, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "a\tb\n1,2\tx\n");
    }
}
