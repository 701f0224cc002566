//! Library side of the `susypt` command: argument types, curve sampling and
//! CSV, figure presets, the verify suites and the subcommands.

pub mod args;
pub mod commands;
pub mod curve;
pub mod error;
pub mod presets;
pub mod verify;

pub use error::{CliError, CliResult};
