//! Scenario runner for the `frse` binary: config parsing, pipelines and
//! artifact encodings.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod config;
pub mod output;
mod raw;
pub mod run;

pub use config::{parse_config, to_text, Kind, ScenarioConfig};
pub use output::CliError;
pub use raw::ConfigError;
pub use run::{execute, run_scenario, Artifacts};
