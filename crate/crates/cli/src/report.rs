//! Report rendering.
//!
//! Structured reports are line-oriented and versioned:
//!
//! ```text
//! polygap-report 1
//! verb: gap
//! field: Q
//! gap: 1
//! ```
//!
//! Keys appear in a fixed order per verb and carry no timing, so identical
//! commands give byte-identical reports. Human reports align the same entries
//! and add the wall time.

use std::fmt::Write;
use std::time::Duration;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Human,
    Structured,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub verb: String,
    pub entries: Vec<(String, String)>,
}

impl Report {
    pub fn new(verb: &str) -> Self {
        Report {
            verb: verb.to_string(),
            entries: Vec::new(),
        }
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl ToString) {
        self.entries.push((key.into(), value.to_string()));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn render(&self, format: Format, elapsed: Duration) -> String {
        let mut out = String::new();
        match format {
            Format::Structured => {
                writeln!(out, "polygap-report {FORMAT_VERSION}").unwrap();
                writeln!(out, "verb: {}", self.verb).unwrap();
                for (k, v) in &self.entries {
                    writeln!(out, "{k}: {}", v.replace('\n', " ")).unwrap();
                }
            }
            Format::Human => {
                writeln!(out, "{}", self.verb).unwrap();
                let width = self.entries.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                for (k, v) in &self.entries {
                    writeln!(out, "  {k:<width$}  {v}").unwrap();
                }
                writeln!(
                    out,
                    "  {:<width$}  {:.3} s",
                    "wall time",
                    elapsed.as_secs_f64()
                )
                .unwrap();
            }
        }
        out
    }
}
