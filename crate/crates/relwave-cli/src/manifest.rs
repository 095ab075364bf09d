//! Run manifests: one `manifest.json` next to every set of output files,
//! recording the subcommand, the parsed flag values, and the seed, so the
//! same run can be reproduced byte-identically.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Serialize;

use crate::commands::{write_file, CliError};

#[derive(Serialize)]
pub struct RunManifest {
    pub subcommand: String,
    pub parameters: BTreeMap<String, String>,
    pub seed: u64,
    pub output_path: String,
}

impl RunManifest {
    pub fn new(subcommand: &str, seed: u64, output_path: &Path) -> Self {
        RunManifest {
            subcommand: subcommand.to_owned(),
            parameters: BTreeMap::new(),
            seed,
            output_path: output_path.display().to_string(),
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<String>) -> Self {
        self.parameters.insert(key.to_owned(), value.into());
        self
    }

    /// Serializes to `manifest.json` in `dir` with stable key order.
    pub fn write(&self, dir: &Path) -> Result<(), CliError> {
        let mut body = serde_json::to_string_pretty(self).expect("manifest serialization");
        body.push('\n');
        write_file(dir, "manifest.json", &body)
    }
}
