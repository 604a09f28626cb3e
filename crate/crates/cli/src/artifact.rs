//! Artifact envelope shared by every command: schema version, the command
//! name, the fully resolved configuration (seeds and budgets included),
//! the result payload, and a trailing timestamp.  With the timestamp
//! stripped, identical runs serialize to identical bytes.

use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

use num_bigint::BigUint;
use serde::Serialize;
use serde_json::Value;

use rfano_core::real::Verdict;

use crate::error::CliResult;
use crate::formats::write_text;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Envelope {
    pub schema_version: u32,
    pub command: String,
    pub config: Value,
    pub result: Value,
    pub timestamp_ms: u64,
}

impl Envelope {
    pub fn new(command: &str, config: Value, result: Value) -> Self {
        let timestamp_ms = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_millis() as u64)
            .unwrap_or(0);
        Envelope {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            config,
            result,
            timestamp_ms,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    /// print to stdout and, when requested, write the same bytes to a file
    pub fn emit(&self, output: Option<&Path>) -> CliResult<()> {
        let text = self.to_json();
        print!("{text}");
        if let Some(path) = output {
            write_text(path, &text)?;
        }
        Ok(())
    }
}

pub fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::True => "true",
        Verdict::False => "false",
        Verdict::Undecided => "undecided",
    }
}

pub fn big_string(v: &BigUint) -> String {
    v.to_string()
}
