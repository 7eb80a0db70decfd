//! Run manifest embedded in every output.

use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};

/// Prefix of the manifest line at the top of CSV outputs.
pub const CSV_PREFIX: &str = "#manifest ";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub command: String,
    /// Flags after the subcommand that reproduce the output.
    pub args: Vec<String>,
    /// Parsed parameters, defaults included.
    pub params: serde_json::Value,
    pub version: String,
    /// Seconds since the Unix epoch.
    pub timestamp: u64,
}

impl Manifest {
    pub fn new(command: &str, args: Vec<String>, params: &impl Serialize) -> Self {
        Manifest {
            command: command.to_string(),
            args,
            params: serde_json::to_value(params).expect("parameters serialize"),
            version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp: SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0),
        }
    }

    /// Full argument vector, subcommand first.
    pub fn argv(&self) -> Vec<String> {
        std::iter::once(self.command.clone()).chain(self.args.iter().cloned()).collect()
    }

    pub fn csv_line(&self) -> String {
        format!("{CSV_PREFIX}{}\n", serde_json::to_string(self).expect("manifest serializes"))
    }

    /// Reads the manifest from the first line of a CSV output.
    pub fn from_csv(text: &str) -> Option<Manifest> {
        let first = text.lines().next()?;
        serde_json::from_str(first.strip_prefix(CSV_PREFIX)?).ok()
    }
}

/// Everything after the manifest line.
pub fn csv_body(text: &str) -> &str {
    match text.strip_prefix(CSV_PREFIX) {
        Some(rest) => rest.split_once('\n').map_or("", |(_, body)| body),
        None => text,
    }
}
