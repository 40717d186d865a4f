//! Command-line front end for survivable lightpath mapping: file formats,
//! report schemas and the subcommand pipeline behind the `smartmap` binary.

pub mod config;
pub mod execute;
pub mod format;
pub mod report;

pub use config::{Cli, RunConfig};
pub use execute::{execute, run_command, Outputs};
