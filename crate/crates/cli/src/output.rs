use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

use crate::args::Format;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    Verified,
    Refuted,
    UsageError,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Ok | Status::Verified => 0,
            Status::Refuted => 1,
            Status::UsageError => 2,
        }
    }
}

/// One command's result, in the shape written by `--format json`.
#[derive(Debug, Clone, Serialize)]
pub struct OutputRecord {
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub status: Status,
    pub payload: Value,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

/// A record plus its text and CSV renderings.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub record: OutputRecord,
    pub text: String,
    pub csv: String,
}

impl Outcome {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Csv => self.csv.clone(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.record).expect("records serialize");
                s.push('\n');
                s
            }
        }
    }

    pub fn status(&self) -> Status {
        self.record.status
    }
}

/// RFC 4180 CSV from a header and rows.
pub fn csv_rows<I, R>(header: &[&str], rows: I) -> String
where
    I: IntoIterator<Item = R>,
    R: IntoIterator,
    R::Item: AsRef<[u8]>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("writing to memory");
    for row in rows {
        w.write_record(row).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("writing to memory")).expect("csv output is UTF-8")
}

/// Right-aligned grid; `cells[i][j]` is row `i`, column `j`.
pub fn aligned(header: &[String], rows: &[Vec<String>]) -> String {
    let cols = header.len();
    let mut widths: Vec<usize> = header.iter().map(String::len).collect();
    for row in rows {
        for (j, c) in row.iter().enumerate().take(cols) {
            widths[j] = widths[j].max(c.len());
        }
    }
    let line = |cells: &[String]| {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect::<Vec<_>>()
            .join(" ")
            .trim_end()
            .to_string()
    };
    let mut out = line(header);
    out.push('\n');
    for row in rows {
        out.push_str(&line(row));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_quotes_when_needed() {
        let s = csv_rows(&["a", "b"], [vec!["x y", "p,q"]]);
        assert_eq!(s, "a,b\nx y,\"p,q\"\n");
    }

    #[test]
    fn alignment() {
        let s = aligned(&["m".into(), "0".into()], &[vec!["10".into(), "1".into()]]);
        assert_eq!(s, " m 0\n10 1\n");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(Status::Verified.exit_code(), 0);
        assert_eq!(Status::Refuted.exit_code(), 1);
        assert_eq!(Status::UsageError.exit_code(), 2);
    }
}
