//! Machine-readable command output.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// One command invocation's result: the command name, the parameters as
/// they were understood (normalized), and the results.
///
/// Fields are declared in alphabetical order and all maps are sorted, so
/// the compact JSON encoding is a fixpoint of parse → re-serialize and is
/// byte-identical across runs. Counts are always decimal strings, never
/// JSON numbers, so arbitrary precision survives the trip. Timing is
/// reported on stderr, not here, to keep stdout deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub results: Value,
}

impl OutputRecord {
    pub fn new(command: &str) -> Self {
        OutputRecord {
            command: command.to_owned(),
            parameters: BTreeMap::new(),
            results: Value::Null,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<String>) -> Self {
        self.parameters.insert(key.to_owned(), value.into());
        self
    }

    pub fn results(mut self, results: Value) -> Self {
        self.results = results;
        self
    }

    /// The single-line JSON form.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("record serialization cannot fail")
    }
}
