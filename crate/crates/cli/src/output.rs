//! The serialized result of one invocation and its three renderings.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use spgauge_core::{ChMode, VerifyReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Tsv,
}

/// Machine-readable result. Large integers are decimal strings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CommandResult {
    pub command: String,
    pub params: BTreeMap<String, String>,
    pub mode: ChMode,
    pub result: Value,
    pub warnings: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub checks: Option<VerifyReport>,
}

impl CommandResult {
    pub fn new(command: &str, mode: ChMode, result: Value) -> Self {
        CommandResult {
            command: command.to_string(),
            params: BTreeMap::new(),
            mode,
            result,
            warnings: Vec::new(),
            checks: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("CommandResult serializes");
        s.push('\n');
        s
    }
}

/// Header plus rows; rendered with tabs and LF, no padding.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Tsv {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Tsv {
    pub fn new(header: &[&str]) -> Self {
        Tsv {
            header: header.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn row(mut self, cells: Vec<String>) -> Self {
        self.push(cells);
        self
    }

    pub fn push(&mut self, cells: Vec<String>) {
        debug_assert_eq!(cells.len(), self.header.len());
        self.rows.push(cells);
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for line in std::iter::once(&self.header).chain(&self.rows) {
            out.push_str(&line.join("\t"));
            out.push('\n');
        }
        out
    }
}

/// Everything a command produces before a format is chosen.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub result: CommandResult,
    pub text: String,
    pub tsv: Tsv,
    pub exit_code: i32,
}

impl Outcome {
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Text => {
                let mut s = self.text.clone();
                if !s.ends_with('\n') {
                    s.push('\n');
                }
                for w in &self.result.warnings {
                    s.push_str(&format!("warning: {w}\n"));
                }
                s
            }
            OutputFormat::Json => self.result.to_json(),
            OutputFormat::Tsv => self.tsv.render(),
        }
    }
}
