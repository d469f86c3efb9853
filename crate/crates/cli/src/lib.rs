//! Scenario runner for the pmha-core checks: TOML scenarios in, deterministic JSON
//! or text reports out.

pub mod catalog;
pub mod runner;
pub mod scenario;

use std::fmt;

pub use catalog::{explain, list_builtin, BUNDLED};
pub use runner::{exit_code, render_human, render_machine, run_scenario, RunOptions, ScenarioReport};
pub use scenario::{CheckSpec, Scenario, SCHEMA_VERSION};

/// Everything that stops a scenario from producing a report. Maps to exit code 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Io(String),
    Parse(String),
    Reference(String),
    Check(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(m) => write!(f, "io error: {m}"),
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::Reference(m) => write!(f, "unresolved reference: {m}"),
            CliError::Check(m) => write!(f, "check error: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

/// Exit code for errors that prevent a report.
pub const EXIT_ERROR: i32 = 3;
