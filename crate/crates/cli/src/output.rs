//! Summary rendering. Sequences always use `index value` lines; summaries
//! are lists of records rendered either for reading or for diffing.

use std::fmt::{Display, Write as _};

use clap::ValueEnum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    /// `key: value`, one field per line, blank line between records
    #[default]
    Plain,
    /// One record per line as `key=value` fields
    Records,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Record(Vec<(&'static str, String)>);

impl Record {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn field(mut self, key: &'static str, value: impl Display) -> Self {
        self.0.push((key, value.to_string()));
        self
    }
}

pub fn render(records: &[Record], format: Format) -> String {
    let mut out = String::new();
    for (i, r) in records.iter().enumerate() {
        match format {
            Format::Plain => {
                if i > 0 {
                    out.push('\n');
                }
                for (k, v) in &r.0 {
                    let _ = writeln!(out, "{k}: {v}");
                }
            }
            Format::Records => {
                let fields: Vec<String> = r.0.iter().map(|(k, v)| format!("{k}={}", quote(v))).collect();
                let _ = writeln!(out, "{}", fields.join(" "));
            }
        }
    }
    out
}

fn quote(v: &str) -> String {
    if v.is_empty() || v.contains(char::is_whitespace) || v.contains('"') {
        format!("\"{}\"", v.replace('\\', "\\\\").replace('"', "\\\""))
    } else {
        v.to_string()
    }
}
