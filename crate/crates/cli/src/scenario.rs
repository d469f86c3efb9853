//! Scenario files, schema version 1.

use serde::{Deserialize, Serialize};

use crate::catalog;
use crate::CliError;

pub const SCHEMA_VERSION: u32 = 1;

fn default_window() -> usize {
    2
}

#[derive(Debug, Clone, Deserialize, Serialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub schema_version: u32,
    pub name: String,
    #[serde(default)]
    pub description: String,
    /// Seed for every sampled check.
    #[serde(default)]
    pub seed: u64,
    /// Window radius for infinite groups; finite groups are always used whole.
    #[serde(default = "default_window")]
    pub window: usize,
    #[serde(rename = "check", default)]
    pub checks: Vec<CheckSpec>,
}

/// One check. Which fields are required depends on `kind`; see [`catalog::explain`].
#[derive(Debug, Clone, Default, Deserialize, Serialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct CheckSpec {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub instance: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coaction: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pga: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mutate: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub candidate: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_size: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<usize>,
}

impl CheckSpec {
    pub fn field<'a>(&'a self, name: &str, value: &'a Option<String>) -> Result<&'a str, CliError> {
        value
            .as_deref()
            .ok_or_else(|| CliError::Reference(format!("check '{}' needs field '{name}'", self.kind)))
    }
}

impl Scenario {
    /// Parses and validates: schema version, positive window, known kinds and
    /// resolvable references.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let s: Scenario = toml::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
        s.validate()?;
        Ok(s)
    }

    pub fn load(path: &std::path::Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        Self::parse(&text).map_err(|e| match e {
            CliError::Parse(m) => CliError::Parse(format!("{}: {m}", path.display())),
            other => other,
        })
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(CliError::Parse(format!(
                "schema_version {} is not supported (expected {SCHEMA_VERSION})",
                self.schema_version
            )));
        }
        if self.window == 0 {
            return Err(CliError::Parse("window must be positive".into()));
        }
        if self.checks.is_empty() {
            return Err(CliError::Parse(format!("scenario '{}' has no checks", self.name)));
        }
        for c in &self.checks {
            catalog::resolve_check(c)?;
        }
        Ok(())
    }
}
