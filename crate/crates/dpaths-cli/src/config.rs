//! Optional TOML configuration; every command-line flag has a key of the same name.

use std::path::Path;

use serde::Deserialize;

use crate::CliError;

#[derive(Clone, Debug, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub threads: Option<usize>,
    pub engine: Option<String>,
    pub max_work: Option<f64>,
    pub dump_poly: Option<bool>,
    pub index: Option<String>,
    pub seed: Option<u64>,
    pub output: Option<String>,
    pub emit_reduced: Option<String>,
    pub n: Option<usize>,
    pub max_length: Option<u64>,
    pub a: Option<usize>,
    pub b: Option<usize>,
    pub removed_edges: Option<usize>,
    pub cap: Option<usize>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        toml::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
    }
}
